use dyncharge::constants::ConstantsTable;
use dyncharge::dimens::{check_angular_momentum, StandardEquation, Verdict};
use dyncharge::gravity::{
    freq_ratio_bounds, gravity_band, gravity_flux, solar_field, GravityScenario,
};
use dyncharge::hydrogen::{HydrogenModel, FEMTOMETRE, PROTON_RADIUS_WINDOW_FM};
use dyncharge::oscillator::{ProtonOscillation, WoodsSaxonProfile};
use dyncharge::verify::{convergence_study, exterior_check, reference_time};

use crate::report::{human, Field, Report};
use crate::CliError;

/// Grids for the convergence study.
pub const CONVERGENCE_GRIDS: [usize; 3] = [256, 512, 1024];
pub const MIN_GRID_POINTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProtonRadius {
    Fm(f64),
    WoodsSaxon,
}

impl std::str::FromStr for ProtonRadius {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "from-woods-saxon" {
            return Ok(ProtonRadius::WoodsSaxon);
        }
        s.parse::<f64>()
            .map(ProtonRadius::Fm)
            .map_err(|_| format!("expected a radius in fm or `from-woods-saxon`, got `{s}`"))
    }
}

fn resolve_radius(r: ProtonRadius) -> Result<f64, CliError> {
    let fm = match r {
        ProtonRadius::Fm(v) => v,
        ProtonRadius::WoodsSaxon => WoodsSaxonProfile::default()
            .efold_radius()
            .map_err(|e| CliError::Compute(e.to_string()))?,
    };
    let (lo, hi) = PROTON_RADIUS_WINDOW_FM;
    if !(fm > lo && fm < hi) {
        return Err(CliError::Usage(format!(
            "proton radius must lie in ({lo}, {hi}) fm, got {fm}"
        )));
    }
    Ok(fm)
}

pub fn hydrogen(table: &ConstantsTable, n: u32, radius: ProtonRadius) -> Result<Report, CliError> {
    if n < 1 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let r_p_fm = resolve_radius(radius)?;
    let model = HydrogenModel::from_constants(table, n, r_p_fm * FEMTOMETRE)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let ledger = model.electron_energy().in_ev(table);
    let coupling = model.derive_eta_coupling();
    let hbar = model.hbar_from_radius(r_p_fm * FEMTOMETRE, table.hbar_natural);
    let quadrature = model
        .electron_energy_quadrature()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let ratio = quadrature / model.electron_energy().w_el;

    let entries = vec![
        ("n".into(), n.into()),
        ("u_n".into(), model.state_velocity().into()),
        ("rho0".into(), model.density_amplitude().into()),
        ("x".into(), model.oscillation_amplitude().into()),
        ("W_el_eV".into(), ledger.w_el.into()),
        ("W_free_eV".into(), ledger.w_free.into()),
        ("Delta_W_eV".into(), ledger.delta_w.into()),
        ("W_Rad_eV".into(), ledger.w_rad.into()),
        ("eta_coupling".into(), coupling.eta.into()),
        ("eta_times_Rp".into(), coupling.eta_times_rp.into()),
        ("four_pi_over_eta".into(), hbar.value.into()),
        ("hbar_reference".into(), hbar.reference.into()),
        ("rel_dev".into(), hbar.rel_dev.into()),
    ];
    Ok(Report::record("hydrogen", entries).with_diagnostics(vec![
        ("R_p_fm".into(), r_p_fm.into()),
        ("W_el_quadrature_ratio".into(), ratio.into()),
    ]))
}

pub fn gravity(
    table: &ConstantsTable,
    k_u: f64,
    mass: Option<f64>,
    nu_e: Option<f64>,
) -> Result<Report, CliError> {
    let scenario =
        GravityScenario::from_constants(table, k_u).map_err(|e| CliError::Usage(e.to_string()))?;
    let mass = mass.unwrap_or(table.M_p);
    let nu_e = nu_e.unwrap_or(table.nu_H);
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(CliError::Usage(format!(
            "--mass must be positive, got {mass}"
        )));
    }
    let bounds = freq_ratio_bounds(table, mass, k_u);
    let band = gravity_band(nu_e, bounds).map_err(|e| CliError::Usage(e.to_string()))?;
    let flux = gravity_flux(&scenario);

    let entries = vec![
        ("eta_lo".into(), bounds.eta_lo.into()),
        ("eta_hi".into(), bounds.eta_hi.into()),
        ("band_lo_Hz".into(), band.lo.into()),
        ("band_hi_Hz".into(), band.hi.into()),
        ("rho_E".into(), scenario.earth_density().into()),
        ("a_C".into(), scenario.centripetal_acceleration().into()),
        ("G_S".into(), solar_field(&scenario).into()),
        ("phi_G".into(), flux.phi_g.into()),
        ("J_G_mW_per_m2".into(), (flux.j_g * 1e3).into()),
    ];
    Ok(Report::record("gravity", entries).with_diagnostics(vec![(
        "band_overlaps_10Hz_10kHz".into(),
        band.overlaps(10.0, 1e4).into(),
    )]))
}

/// The report and whether its verdict matches the expected one.
pub fn units_check(id: &str) -> Result<(Report, bool), CliError> {
    let eq = StandardEquation::from_id(id).ok_or_else(|| {
        let known: Vec<&str> = StandardEquation::ALL.iter().map(|e| e.id()).collect();
        CliError::Usage(format!(
            "unknown equation `{id}`; expected one of {}",
            known.join(", ")
        ))
    })?;
    let report = eq.check().map_err(|e| CliError::Compute(e.to_string()))?;
    let (_, terms) = eq.terms();
    let verdict = |v: Verdict| match v {
        Verdict::Consistent => "consistent",
        Verdict::Inconsistent => "inconsistent",
    };
    let rows = terms
        .iter()
        .zip(&report.terms)
        .map(|((name, _), t)| {
            vec![
                Field::from(*name),
                Field::from(t.dimension.to_string()),
                Field::from(t.mismatch.to_string()),
            ]
        })
        .collect();
    let matches = report.verdict == eq.expected();
    let mut diagnostics = vec![
        ("equation".into(), eq.id().into()),
        ("target".into(), report.target.to_string().into()),
        ("verdict".into(), verdict(report.verdict).into()),
        ("expected".into(), verdict(eq.expected()).into()),
        ("matches_expectation".into(), matches.into()),
    ];
    if eq == StandardEquation::ForceNatural {
        let l = check_angular_momentum().map_err(|e| CliError::Compute(e.to_string()))?;
        diagnostics.push(("angular_momentum".into(), verdict(l.verdict).into()));
    }
    let out = Report::table("units-check", &["term", "dimension", "mismatch"], rows)
        .with_diagnostics(diagnostics);
    Ok((out, matches))
}

pub struct OscillatorArgs {
    pub rp_fm: f64,
    pub d_over_rp: Option<f64>,
    pub nu_hz: Option<f64>,
    pub samples: usize,
    pub r_probe: f64,
}

/// Default relative displacement: a third of the ground-state amplitude.
pub fn default_d_over_rp(table: &ConstantsTable) -> f64 {
    table.M_e / ((2.0 * std::f64::consts::PI).powi(2) * table.M_p) / 3.0
}

pub fn oscillator(table: &ConstantsTable, a: &OscillatorArgs) -> Result<Report, CliError> {
    let d = a.d_over_rp.unwrap_or_else(|| default_d_over_rp(table));
    if !(d > 0.0 && d < 1.0 / 3.0) {
        return Err(CliError::Usage(format!(
            "--d-over-rp must lie in (0, 1/3), got {d}"
        )));
    }
    if a.samples < 2 {
        return Err(CliError::Usage(format!(
            "--samples must be at least 2, got {}",
            a.samples
        )));
    }
    if !(a.rp_fm > 0.0 && a.rp_fm.is_finite()) {
        return Err(CliError::Usage(format!(
            "--rp-fm must be positive, got {}",
            a.rp_fm
        )));
    }
    if !(a.r_probe >= 1.0 && a.r_probe.is_finite()) {
        return Err(CliError::Usage(format!(
            "--r-probe is in proton radii and must be at least 1, got {}",
            a.r_probe
        )));
    }
    let nu = a.nu_hz.unwrap_or(table.nu_H);
    let p = ProtonOscillation::from_relative(a.rp_fm * FEMTOMETRE, d, nu, table.M_p)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows = p
        .time_series(a.r_probe * p.radius, a.samples)
        .map_err(|e| CliError::Compute(e.to_string()))?
        .into_iter()
        .map(|s| vec![s.t.into(), s.charge.into(), s.field.into()])
        .collect();
    let mut text = Vec::new();
    if p.exceeds_first_order_validity() {
        text.push(format!(
            "warning: x = {} is outside the first-order regime",
            human(p.x())
        ));
    }
    Ok(Report::table("oscillator", &["t_s", "q_D", "E_at_r"], rows).with_text(text))
}

pub fn poisson_verify(
    table: &ConstantsTable,
    grid_points: usize,
    rp_fm: f64,
) -> Result<Report, CliError> {
    if grid_points < MIN_GRID_POINTS {
        return Err(CliError::Usage(format!(
            "--grid-points must be at least {MIN_GRID_POINTS}, got {grid_points}"
        )));
    }
    let p = ProtonOscillation::from_relative(
        rp_fm * FEMTOMETRE,
        default_d_over_rp(table),
        table.nu_H,
        table.M_p,
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let t = reference_time(&p);
    let ctx = |e: dyncharge::numerics::PoissonError| {
        CliError::Compute(format!("radial Poisson solve failed: {e}"))
    };
    let check = exterior_check(&p, t, grid_points).map_err(ctx)?;
    let study = convergence_study(&p, t, &CONVERGENCE_GRIDS).map_err(ctx)?;

    let mut entries = vec![
        ("grid_points".into(), grid_points.into()),
        ("slope".into(), check.slope.into()),
        ("calibration".into(), check.calibration.into()),
        ("spread".into(), check.spread.into()),
        ("rms_error".into(), check.rms_error.into()),
    ];
    for c in &study.checks {
        entries.push((format!("rms_error_{}", c.grid_points), c.rms_error.into()));
    }
    for (w, r) in CONVERGENCE_GRIDS.windows(2).zip(&study.ratios) {
        entries.push((format!("ratio_{}_{}", w[0], w[1]), (*r).into()));
    }
    Ok(
        Report::record("poisson-verify", entries).with_diagnostics(vec![(
            "calibration_times_4pi".into(),
            (check.calibration * 4.0 * std::f64::consts::PI).into(),
        )]),
    )
}

pub fn constants(table: &ConstantsTable) -> Report {
    let rows = table
        .entries()
        .into_iter()
        .map(|(k, v, prov)| {
            let p = match prov {
                dyncharge::constants::Provenance::Default => "default",
                dyncharge::constants::Provenance::Overridden => "overridden",
            };
            vec![k.into(), v.into(), p.into()]
        })
        .collect();
    Report::table("constants", &["key", "value", "provenance"], rows)
}
