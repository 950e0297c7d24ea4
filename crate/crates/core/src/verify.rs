//! One-shot verification of every identity the crate knows about.

use serde_json::json;

use crate::closure::{
    closure_with, ladder_seed, structure_constants_with, verify_su_n_with, CLOSURE_TOL, GROUP_TOL,
};
use crate::error::Result;
use crate::exec::Exec;
use crate::gellmann::{basis_match, oscillator_lambda_su3, standard_gellmann, MATCH_TOL};
use crate::mass::{full_spectrum, precision_rows, ExperimentalMasses, SpectrumInputs};
use crate::matrix::{ComplexMatrix, C64};
use crate::operators::{
    bosonic_limit_check, derived_generators, fermionic_check, pauli_reduction_check,
    verify_commutator_table, Cutoff, TABLE_TOL,
};
use crate::report::{num, Check, CheckReport, Report};
use crate::susy::{build_jc_realization, full_report, SusyConfig, SUSY_TOL};

/// Largest cutoff for which the full su(s+1) closure is asserted.
pub const MAX_SU_N_CUTOFF: usize = 6;

/// Deliberate faults for exercising the failure path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Replace the reconstructed `λ_8` with the zero matrix.
    ZeroLambda8,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_s: usize,
    /// `(k, n_max)` pairs.
    pub susy: Vec<(usize, usize)>,
    pub su_n_samples: usize,
    /// Overrides every per-check default tolerance when set.
    pub tol: Option<f64>,
    pub fault: Option<Fault>,
    pub exec: Exec,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_s: 5,
            susy: vec![(1, 24), (2, 24), (3, 24)],
            su_n_samples: 50,
            tol: None,
            fault: None,
            exec: Exec::default(),
        }
    }
}

enum Task {
    Table(Cutoff),
    SuN(Cutoff),
    Bosonic(Cutoff),
    Fermionic,
    GellMann,
    Susy(usize, usize),
    Masses,
}

fn run_task(task: &Task, cfg: &VerifyConfig) -> Result<Vec<Check>> {
    let tol = |default: f64| cfg.tol.unwrap_or(default);
    let prefixed = |prefix: String, r: CheckReport| -> Vec<Check> {
        r.checks
            .into_iter()
            .map(|mut c| {
                c.name = format!("{prefix} {}", c.name);
                c
            })
            .collect()
    };
    Ok(match *task {
        Task::Table(s) => prefixed(format!("table[s={}]", s.s()), verify_commutator_table(s, tol(TABLE_TOL))),
        Task::Fermionic => {
            let mut r = pauli_reduction_check();
            let a = derived_generators(Cutoff::new(1)?).a;
            r.extend(fermionic_check(&a, tol(TABLE_TOL))?);
            prefixed("s1".into(), r)
        }
        Task::Bosonic(s) => {
            let b = bosonic_limit_check(s)?;
            vec![Check::residual(
                format!("bosonic[s={}] edge support", s.s()),
                b.deficit_residual.max(b.generator_residual),
                0.0,
            )]
        }
        Task::SuN(s) => {
            let basis = closure_with(&ladder_seed(s), CLOSURE_TOL, cfg.exec)?;
            let sc = structure_constants_with(&basis, cfg.exec);
            let g = tol(GROUP_TOL);
            let r = verify_su_n_with(s, &basis, cfg.su_n_samples, g, cfg.exec);
            let p = format!("su_n[s={}]", s.s());
            let gens = derived_generators(s);
            let span = gens
                .named()
                .iter()
                .map(|(_, m)| basis.projection_residual(m).unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            vec![
                Check::flag(format!("{p} algebra_dim = {}", r.expected_dim), r.found_dim == r.expected_dim)
                    .with_note(format!("found {}", r.found_dim)),
                Check::flag(format!("{p} compact form dim"), r.hermitian_dim == r.expected_dim),
                Check::residual(format!("{p} traceless"), r.max_trace, tol(1e-10)),
                Check::residual(format!("{p} generators in span"), span, tol(1e-10)),
                Check::residual(format!("{p} structure constants"), sc.residual, g),
                Check::residual(format!("{p} antisymmetry"), sc.antisymmetry_residual(), tol(1e-10)),
                Check::residual(format!("{p} jacobi"), r.jacobi_residual, tol(1e-10)),
                Check::residual(format!("{p} unitarity"), r.unitarity_residual, g)
                    .with_note(format!("{} samples", r.samples)),
                Check::residual(format!("{p} det U = 1"), r.det_residual, g),
            ]
        }
        Task::GellMann => {
            let mut built = oscillator_lambda_su3(&derived_generators(Cutoff::new(2)?))?;
            if cfg.fault == Some(Fault::ZeroLambda8) {
                built.matrices[7] = ComplexMatrix::zeros(3);
            }
            let m = basis_match(&built, &standard_gellmann(3)?, tol(MATCH_TOL))?;
            let worst = m.per_index.iter().cloned().fold(0.0, f64::max);
            let mut c = Check::residual("gellmann[s=2] oscillator vs standard", worst, m.tolerance);
            c = if m.pass {
                c.with_note("lambda8 = A/sqrt(3) reconstructed")
            } else {
                c.with_note(format!("mismatch at lambda {:?}", m.failed))
            };
            vec![c]
        }
        Task::Susy(k, n_max) => {
            let alg = build_jc_realization(SusyConfig::new(k, n_max)?);
            let r = full_report(&alg, C64::new(1.0, 0.0), tol(SUSY_TOL))?;
            prefixed(format!("susy[k={k},n_max={n_max}]"), r)
        }
        Task::Masses => {
            let t = full_spectrum(&SpectrumInputs::reference());
            let p = precision_rows(&t, &ExperimentalMasses::default())?;
            let m = |n| t.mass(n).expect("four rows");
            vec![
                Check::residual("mass m_mu = 105.55", (m(1) - 105.55).abs(), 0.01),
                Check::residual("mass m_tau = 1786.2", (m(2) - 1786.2).abs(), 0.1),
                Check::residual("mass m_3 = 4622.2", (m(3) - 4622.2).abs(), 0.1),
                Check::residual("precision mu = -1.04e-3", (p[0].rel_precision / -1.04e-3 - 1.0).abs(), 0.02),
                Check::residual("precision tau = +1.12e-3", (p[1].rel_precision / 1.12e-3 - 1.0).abs(), 0.02),
                Check::flag(
                    "mass chain strictly increasing",
                    t.rows.windows(2).all(|w| w[0].mass_mev < w[1].mass_mev),
                ),
            ]
        }
    })
}

/// Runs every check family and assembles one report in a fixed order.
/// Independent families may run concurrently.
pub fn verify_all(cfg: &VerifyConfig) -> Result<Report> {
    let max_s = Cutoff::new(cfg.max_s)?;
    for &(k, n) in &cfg.susy {
        SusyConfig::new(k, n)?;
    }
    let mut tasks = Vec::new();
    tasks.push(Task::Fermionic);
    for s in 1..=max_s.s() {
        tasks.push(Task::Table(Cutoff::new(s)?));
    }
    for s in 2..=max_s.s() {
        tasks.push(Task::Bosonic(Cutoff::new(s)?));
    }
    for s in 1..=max_s.s().min(MAX_SU_N_CUTOFF) {
        tasks.push(Task::SuN(Cutoff::new(s)?));
    }
    if max_s.s() >= 2 {
        tasks.push(Task::GellMann);
    }
    for &(k, n) in &cfg.susy {
        tasks.push(Task::Susy(k, n));
    }
    tasks.push(Task::Masses);

    let results = cfg.exec.map(&tasks, |t| run_task(t, cfg));
    let mut report = Report::new("verify-all", cfg.tol.unwrap_or(crate::DEFAULT_TOL))
        .input("max_s", cfg.max_s)
        .input(
            "susy",
            json!(cfg.susy.iter().map(|(k, n)| json!({"k": k, "n_max": n})).collect::<Vec<_>>()),
        )
        .input("su_n_samples", cfg.su_n_samples);
    if let Some(f) = cfg.fault {
        report = report.input("fault", format!("{f:?}"));
    }
    if let Some(t) = cfg.tol {
        report = report.input("tol_override", num(t));
    }
    for r in results {
        report.push_all(r?);
    }
    let failed = report.checks.iter().filter(|c| !c.passed()).count();
    report.set("checks_total", report.checks.len());
    report.set("checks_failed", failed);
    Ok(report)
}
