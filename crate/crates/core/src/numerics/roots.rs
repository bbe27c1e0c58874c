//! Bracketed scalar root finding (Brent's method).

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootError {
    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NotBracketed {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("function not finite at x = {0}")]
    NonFinite(f64),
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
}

const MAX_ITER: usize = 200;

/// Finds a root of `f` in `[lo, hi]`.
///
/// The returned point lies inside a bracket no wider than `tol` (or is an
/// exact zero of `f`). Interpolation steps are taken when they shrink the
/// bracket fast enough, otherwise the step falls back to bisection.
pub fn find_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64, RootError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(RootError::InvalidTolerance(tol));
    }
    let eval = |x: f64| {
        let y = f(x);
        if y.is_nan() {
            Err(RootError::NonFinite(x))
        } else {
            Ok(y)
        }
    };

    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (eval(a)?, eval(b)?);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(RootError::NotBracketed {
            lo,
            hi,
            f_lo: fa,
            f_hi: fb,
        });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for _ in 0..MAX_ITER {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        // b is the best estimate; the root lies between b and c.
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.25 * tol;
        let xm = 0.5 * (c - b);
        if (c - b).abs() <= tol || fb == 0.0 {
            return Ok(b);
        }

        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = eval(b)?;
    }
    Err(RootError::NoConvergence(MAX_ITER))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_root_of_two() {
        let r = find_root(|x| x * x - 2.0, 1.0, 2.0, 1e-10).unwrap();
        assert!((r - 2f64.sqrt()).abs() <= 1e-10);
    }

    #[test]
    fn linear_function() {
        let r = find_root(|x| 3.0 * x - 1.0, -5.0, 5.0, 1e-12).unwrap();
        assert!((r - 1.0 / 3.0).abs() <= 1e-12);
    }

    #[test]
    fn endpoint_root() {
        assert_eq!(find_root(|x| x - 1.0, 1.0, 2.0, 1e-9).unwrap(), 1.0);
    }

    #[test]
    fn reversed_bracket() {
        let r = find_root(|x| x.cos(), 3.0, 0.0, 1e-12).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() <= 1e-12);
    }

    #[test]
    fn step_function_converges_to_jump() {
        let r = find_root(|x| if x < 0.7 { 1.0 } else { -1.0 }, 0.0, 1.0, 1e-9).unwrap();
        assert!((r - 0.7).abs() <= 1e-9);
    }

    #[test]
    fn no_sign_change() {
        assert!(matches!(
            find_root(|x| x * x + 1.0, -1.0, 1.0, 1e-8),
            Err(RootError::NotBracketed { .. })
        ));
        assert!(matches!(
            find_root(|x| x, -1.0, 1.0, 0.0),
            Err(RootError::InvalidTolerance(_))
        ));
    }
}
