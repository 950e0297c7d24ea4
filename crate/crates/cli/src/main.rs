use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pbosc::closure::{
    closure_with, ladder_seed, structure_constants_with, verify_su_n_with, CLOSURE_TOL, GROUP_TOL,
};
use pbosc::gellmann::{basis_match, oscillator_lambda_su3, standard_gellmann, MATCH_TOL};
use pbosc::io::{serialize_gellmann, serialize_lie_basis, serialize_operator_set, serialize_susy_algebra};
use pbosc::mass::{
    alpha_sensitivity, format_mev, full_spectrum, precision_csv, precision_rows, sweep_csv,
    ExperimentalMasses, SpectrumInputs, DEFAULT_ALPHA_INV, DEFAULT_ELECTRON_MEV,
};
use pbosc::operators::{
    bosonic_limit_check, derived_generators, fermionic_check, max_trace, pauli_reduction_check,
    verify_commutator_table, Cutoff, TABLE_TOL,
};
use pbosc::report::{num, Check, Format, Report};
use pbosc::susy::{build_jc_realization, full_report, nprime_eigenvalue, SusyConfig, SUSY_TOL};
use pbosc::verify::{verify_all, Fault, VerifyConfig};
use pbosc::{Exec, PbError, C64};

/// Finite oscillator algebra verifier.
#[derive(Parser)]
#[command(name = "pb", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Override the default tolerance of every check.
    #[arg(long, global = true, env = "PB_TOL", value_parser = positive)]
    tol: Option<f64>,
    /// Write the report to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Csv,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Csv => Format::Csv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MassTableKind {
    Masses,
    Precision,
    Sweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    Lambda8Zero,
}

#[derive(Subcommand)]
enum Command {
    /// Build the truncated ladder operators and check their commutator table.
    Ops {
        #[arg(long)]
        s: usize,
        /// Print the operator matrices instead of the report.
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Commutator closure of {a, a_dag, A} and the su(s+1) checks.
    Closure {
        #[arg(long)]
        s: usize,
        /// Random group elements to sample.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Print the orthonormal basis instead of the report.
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Generalized Gell-Mann basis, or the su(3) basis built from the s=2 operators.
    Gellmann {
        #[arg(long, default_value_t = 3, conflicts_with = "paper_su3")]
        n: usize,
        #[arg(long)]
        paper_su3: bool,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Supersymmetric multiphoton Jaynes-Cummings realization.
    Susy {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nmax: usize,
        /// Coupling as RE,IM.
        #[arg(long, value_parser = complex, default_value = "1,0", allow_hyphen_values = true)]
        g: C64,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Lepton mass spectrum.
    Masses {
        #[arg(long, default_value_t = DEFAULT_ALPHA_INV, value_parser = positive)]
        alpha_inv: f64,
        #[arg(long, default_value_t = DEFAULT_ELECTRON_MEV, value_parser = positive)]
        me: f64,
        #[arg(long, value_parser = positive)]
        exp_mu: Option<f64>,
        #[arg(long, value_parser = positive)]
        exp_tau: Option<f64>,
        /// Comma-separated inverse fine-structure values.
        #[arg(long, value_delimiter = ',', value_parser = positive)]
        alpha_sweep: Vec<f64>,
        /// Generation used by the sweep.
        #[arg(long, default_value_t = 2)]
        sweep_n: u32,
        /// Which table the CSV format prints.
        #[arg(long, value_enum, default_value_t = MassTableKind::Masses)]
        table: MassTableKind,
    },
    /// Every check family in one report.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        max_s: usize,
        /// Photon cutoff of the SUSY configurations.
        #[arg(long, default_value_t = 24)]
        nmax: usize,
        /// Largest photon number k of the SUSY configurations.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    let x: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("expected a positive finite number, got {s}"))
    }
}

fn complex(s: &str) -> Result<C64, String> {
    let (re, im) = s.split_once(',').ok_or("expected RE,IM")?;
    let parse = |t: &str| -> Result<f64, String> {
        let v: f64 = t.trim().parse().map_err(|e| format!("{e} in '{t}'"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite component '{t}'"))
        }
    };
    Ok(C64::new(parse(re)?, parse(im)?))
}

/// What a command produced: a report, plus an optional body that replaces
/// the rendered report on output.
struct Outcome {
    report: Report,
    body: Option<String>,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, body: None }
    }
}

fn ops(s: usize, emit: Option<Emit>, g: &Global) -> pbosc::Result<Outcome> {
    let cut = Cutoff::new(s)?;
    let tol = g.tol.unwrap_or(TABLE_TOL);
    let set = derived_generators(cut);
    let mut r = Report::new("ops", tol).input("s", s);
    r.absorb("", verify_commutator_table(cut, tol));
    if s == 1 {
        r.absorb("s1 ", pauli_reduction_check());
        r.absorb("s1 ", fermionic_check(&set.a, tol)?);
    } else {
        let b = bosonic_limit_check(cut)?;
        r.push(Check::residual("bosonic edge support", b.deficit_residual.max(b.generator_residual), 0.0));
    }
    r.set("dim", cut.dim());
    r.set("max_trace", num(max_trace(&set)));
    Ok(Outcome {
        report: r,
        body: emit.map(|_| serialize_operator_set(&set) + "\n"),
    })
}

fn closure_cmd(s: usize, samples: usize, emit: Option<Emit>, g: &Global, exec: Exec) -> pbosc::Result<Outcome> {
    let cut = Cutoff::new(s)?;
    let tol = g.tol.unwrap_or(GROUP_TOL);
    let basis = closure_with(&ladder_seed(cut), CLOSURE_TOL, exec)?;
    let sc = structure_constants_with(&basis, exec);
    let su = verify_su_n_with(cut, &basis, samples, tol, exec);
    let mut r = Report::new("closure", tol).input("s", s).input("samples", samples);
    r.push(
        Check::flag(format!("algebra_dim = {}", su.expected_dim), su.found_dim == su.expected_dim)
            .with_note(format!("found {}", su.found_dim)),
    );
    r.push(Check::flag("compact form dim", su.hermitian_dim == su.expected_dim));
    r.push(Check::residual("traceless", su.max_trace, tol));
    r.push(Check::residual("structure constants", sc.residual, tol));
    r.push(Check::residual("antisymmetry", sc.antisymmetry_residual(), tol));
    r.push(Check::residual("jacobi", su.jacobi_residual, tol));
    r.push(Check::residual("unitarity", su.unitarity_residual, tol).with_note(format!("{samples} samples")));
    r.push(Check::residual("det U = 1", su.det_residual, tol));
    r.set("algebra_dim", basis.algebra_dim());
    r.set("expected_dim", su.expected_dim);
    r.set("hermitian_dim", su.hermitian_dim);
    r.set("dim_space", basis.dim_space);
    r.set("rounds", basis.rounds);
    r.set("structure_constant_count", sc.triples.len());
    Ok(Outcome {
        report: r,
        body: emit.map(|_| serialize_lie_basis(&basis) + "\n"),
    })
}

fn gellmann_cmd(n: usize, oscillator: bool, emit: Option<Emit>, g: &Global) -> pbosc::Result<Outcome> {
    let tol = g.tol.unwrap_or(MATCH_TOL);
    if oscillator {
        let ours = oscillator_lambda_su3(&derived_generators(Cutoff::new(2)?))?;
        let m = basis_match(&ours, &standard_gellmann(3)?, tol)?;
        let mut r = Report::new("gellmann", tol).input("paper_su3", true);
        for (i, d) in m.per_index.iter().enumerate() {
            let mut c = Check::residual(format!("lambda{} entrywise", i + 1), *d, tol);
            if i == 7 && ours.lambda8_reconstructed {
                c = c.with_note("reconstructed as A/sqrt(3)");
            }
            r.push(c);
        }
        r.set("lambda8_reconstructed", ours.lambda8_reconstructed);
        return Ok(Outcome {
            report: r,
            body: emit.map(|_| serialize_gellmann(&ours) + "\n"),
        });
    }
    let basis = standard_gellmann(n)?;
    let (herm, tr, ortho) = basis.defects();
    let mut r = Report::new("gellmann", tol).input("n", n);
    r.push(Check::flag(format!("count = {}", n * n - 1), basis.matrices.len() == n * n - 1));
    r.push(Check::residual("hermitian", herm, tol));
    r.push(Check::residual("traceless", tr, tol));
    r.push(Check::residual("tr(l_i l_j) = 2 delta_ij", ortho, tol));
    r.set("normalization", pbosc::gellmann::GellMannBasis::NORMALIZATION);
    Ok(Outcome {
        report: r,
        body: emit.map(|_| serialize_gellmann(&basis) + "\n"),
    })
}

fn susy_cmd(k: usize, nmax: usize, coupling: C64, emit: Option<Emit>, g: &Global) -> pbosc::Result<Outcome> {
    let cfg = SusyConfig::new(k, nmax)?;
    if coupling.norm() == 0.0 {
        return Err(PbError::InvalidArgument("coupling g must be nonzero".into()));
    }
    let tol = g.tol.unwrap_or(SUSY_TOL);
    let alg = build_jc_realization(cfg);
    let mut r = Report::new("susy", tol)
        .input("k", k)
        .input("n_max", nmax)
        .input("g", json!([num(coupling.re), num(coupling.im)]));
    r.absorb("", full_report(&alg, coupling, tol)?);
    let coeffs = (0..alg.safe_dim() as u64)
        .map(|m| nprime_eigenvalue(m, k as u64))
        .collect::<pbosc::Result<Vec<_>>>()?;
    r.set("safe_dim", alg.safe_dim());
    r.set("total_dim", alg.config.total_dim());
    r.set("doublet_coefficients", coeffs);
    Ok(Outcome {
        report: r,
        body: emit.map(|_| serialize_susy_algebra(&alg) + "\n"),
    })
}

#[allow(clippy::too_many_arguments)]
fn masses_cmd(
    alpha_inv: f64,
    me: f64,
    exp_mu: Option<f64>,
    exp_tau: Option<f64>,
    sweep: &[f64],
    sweep_n: u32,
    table: MassTableKind,
    g: &Global,
) -> pbosc::Result<Outcome> {
    let inputs = SpectrumInputs::new(alpha_inv, me)?;
    let mut exp = ExperimentalMasses::default();
    exp.muon = exp_mu.unwrap_or(exp.muon);
    exp.tau = exp_tau.unwrap_or(exp.tau);
    let t = full_spectrum(&inputs);
    let prec = precision_rows(&t, &exp)?;
    let sweep_rows = alpha_sensitivity(sweep_n, sweep, me)?;
    let tol = g.tol.unwrap_or(pbosc::DEFAULT_TOL);

    let mut r = Report::new("masses", tol)
        .input("alpha_inv", num(alpha_inv))
        .input("m_e", num(me))
        .input("exp_mu", num(exp.muon))
        .input("exp_tau", num(exp.tau))
        .input("exp_tau_1992", num(exp.tau_1992));
    if !sweep.is_empty() {
        r = r
            .input("alpha_sweep", sweep.iter().map(|&a| num(a)).collect::<Vec<_>>())
            .input("sweep_n", sweep_n);
    }
    let m0 = t.mass(0).expect("full table");
    r.push(Check::residual("m_0 = m_e", ((m0 - me) / me).abs(), tol));
    r.push(Check::flag(
        "mass chain strictly increasing",
        t.rows.windows(2).all(|w| w[0].mass_mev < w[1].mass_mev),
    ));
    r.set(
        "masses",
        t.rows
            .iter()
            .map(|row| {
                json!({"n": row.n, "label": row.label, "mass_mev": num(row.mass_mev),
                       "cumulative_sum": row.cumulative_sum})
            })
            .collect::<Vec<Value>>(),
    );
    r.set(
        "precision",
        prec.iter()
            .map(|p| {
                json!({"particle": p.particle, "predicted": num(p.predicted),
                       "experimental": num(p.experimental), "rel_precision": num(p.rel_precision)})
            })
            .collect::<Vec<Value>>(),
    );
    if !sweep_rows.is_empty() {
        r.set(
            "sweep",
            sweep_rows
                .iter()
                .map(|s| json!({"alpha_inv": num(s.alpha_inv), "mass_mev": num(s.mass_mev)}))
                .collect::<Vec<Value>>(),
        );
    }

    let body = match Format::from(g.format) {
        Format::Csv => Some(match table {
            MassTableKind::Masses => t.to_csv(),
            MassTableKind::Precision => precision_csv(&prec),
            MassTableKind::Sweep => sweep_csv(sweep_n, &sweep_rows),
        }),
        Format::Text => {
            let mut out = String::new();
            for row in &t.rows {
                out.push_str(&format!(
                    "  n={} {:<7} {:>10} MeV  (sum {})\n",
                    row.n,
                    row.label,
                    format_mev(row.mass_mev),
                    row.cumulative_sum
                ));
            }
            for p in &prec {
                out.push_str(&format!(
                    "  {:<9} predicted {:>10} vs {:>10}  rel {:+.3e}\n",
                    p.particle,
                    format_mev(p.predicted),
                    format_mev(p.experimental),
                    p.rel_precision
                ));
            }
            for s in &sweep_rows {
                out.push_str(&format!(
                    "  alpha_inv {:<10} m_{sweep_n} = {} MeV\n",
                    s.alpha_inv,
                    format_mev(s.mass_mev)
                ));
            }
            Some(r.to_text() + "\n" + &out)
        }
        Format::Json => None,
    };
    Ok(Outcome { report: r, body })
}

fn run(cli: Cli) -> pbosc::Result<Outcome> {
    let g = &cli.global;
    let exec = if g.sequential { Exec::Sequential } else { Exec::default() };
    match cli.command {
        Command::Ops { s, emit } => ops(s, emit, g),
        Command::Closure { s, samples, emit } => closure_cmd(s, samples, emit, g, exec),
        Command::Gellmann { n, paper_su3, emit } => gellmann_cmd(n, paper_su3, emit, g),
        Command::Susy { k, nmax, g: coupling, emit } => susy_cmd(k, nmax, coupling, emit, g),
        Command::Masses {
            alpha_inv,
            me,
            exp_mu,
            exp_tau,
            alpha_sweep,
            sweep_n,
            table,
        } => masses_cmd(alpha_inv, me, exp_mu, exp_tau, &alpha_sweep, sweep_n, table, g),
        Command::VerifyAll {
            max_s,
            nmax,
            max_k,
            samples,
            inject_fault,
        } => {
            let cfg = VerifyConfig {
                max_s,
                susy: (1..=max_k).map(|k| (k, nmax)).collect(),
                su_n_samples: samples,
                tol: g.tol,
                fault: inject_fault.map(|FaultArg::Lambda8Zero| Fault::ZeroLambda8),
                exec,
            };
            verify_all(&cfg).map(Outcome::from)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = Format::from(cli.global.format);
    let out = cli.global.out.clone();
    let outcome = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("pb: {e}");
            return ExitCode::from(2);
        }
    };
    let text = outcome.body.unwrap_or_else(|| outcome.report.render(format));
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("pb: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if outcome.report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
