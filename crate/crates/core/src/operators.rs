//! Truncated oscillator operators on the number states `|0⟩ … |s⟩`.
//!
//! `a` and `a†` are the usual ladder matrices cut off at level `s`. Their
//! commutator is not the identity but `A = diag(1, …, 1, -s)`, and repeated
//! brackets with `A` produce the single-entry generators `M`, `K`, `F` that
//! live at the top of the ladder.

use serde::{Deserialize, Serialize};

use crate::error::{PbError, Result};
use crate::matrix::{anticommutator, commutator, dagger, trace, ComplexMatrix, ComplexVector, C64, ONE};
use crate::report::{Check, CheckReport};

/// Tolerance for the commutator table; every entry is an integer or the
/// square root of one, so rounding stays far below this.
pub const TABLE_TOL: f64 = 1e-12;

/// Maximum occupation number `s >= 1`; the state space has dimension `s + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Cutoff(usize);

impl Cutoff {
    pub fn new(s: usize) -> Result<Self> {
        if s >= 1 {
            Ok(Cutoff(s))
        } else {
            Err(PbError::InvalidCutoff(s))
        }
    }

    pub fn s(self) -> usize {
        self.0
    }

    pub fn dim(self) -> usize {
        self.0 + 1
    }
}

impl TryFrom<usize> for Cutoff {
    type Error = PbError;
    fn try_from(s: usize) -> Result<Self> {
        Cutoff::new(s)
    }
}

impl From<Cutoff> for usize {
    fn from(c: Cutoff) -> usize {
        c.0
    }
}

fn real(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `a`: entry `√n` at `(n-1, n)` for `n = 1..=s`.
pub fn annihilation(s: Cutoff) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(s.dim());
    for n in 1..=s.s() {
        m[(n - 1, n)] = real((n as f64).sqrt());
    }
    m
}

/// `a†`: entry `√(n+1)` at `(n+1, n)`.
pub fn creation(s: Cutoff) -> ComplexMatrix {
    dagger(&annihilation(s))
}

/// `A = [a, a†] = diag(1, …, 1, -s)`.
pub fn number_deficit(s: Cutoff) -> ComplexMatrix {
    let mut d = vec![1.0; s.dim()];
    d[s.s()] = -(s.s() as f64);
    ComplexMatrix::real_diag(&d)
}

/// The generator family `{a, a†, A, M, M†, K, F, F†}` at one cutoff.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSet {
    pub s: Cutoff,
    pub a: ComplexMatrix,
    pub a_dag: ComplexMatrix,
    pub deficit: ComplexMatrix,
    pub m: ComplexMatrix,
    pub m_dag: ComplexMatrix,
    pub k: ComplexMatrix,
    /// Zero matrix when `s = 1`.
    pub f: ComplexMatrix,
    pub f_dag: ComplexMatrix,
}

impl OperatorSet {
    /// Serialization names paired with the matrices, in fixed order.
    pub fn named(&self) -> [(&'static str, &ComplexMatrix); 8] {
        [
            ("a", &self.a),
            ("a_dag", &self.a_dag),
            ("A", &self.deficit),
            ("M", &self.m),
            ("M_dag", &self.m_dag),
            ("K", &self.k),
            ("F", &self.f),
            ("F_dag", &self.f_dag),
        ]
    }
}

/// Builds every generator at cutoff `s`.
///
/// `M = -E_{s-1,s}`, `K = E_{s,s} - E_{s-1,s-1}` and `F = E_{s-2,s}` are the
/// matrices produced by `[a, A]`, `[M, M†]` and `[a, M]` up to the scalar
/// prefactors of the commutator table.
pub fn derived_generators(s: Cutoff) -> OperatorSet {
    let n = s.dim();
    let top = s.s();
    let a = annihilation(s);
    let m = ComplexMatrix::unit(n, top - 1, top, real(-1.0));
    let mut k = ComplexMatrix::zeros(n);
    k[(top, top)] = ONE;
    k[(top - 1, top - 1)] = real(-1.0);
    let f = if top >= 2 {
        ComplexMatrix::unit(n, top - 2, top, ONE)
    } else {
        ComplexMatrix::zeros(n)
    };
    OperatorSet {
        s,
        a_dag: dagger(&a),
        a,
        deficit: number_deficit(s),
        m_dag: dagger(&m),
        m,
        k,
        f_dag: dagger(&f),
        f,
    }
}

fn identity_check(name: &str, lhs: ComplexMatrix, rhs: ComplexMatrix, tol: f64) -> Check {
    Check::residual(name, (&lhs - &rhs).max_abs(), tol)
}

type Deferred<'a> = Box<dyn Fn() -> (ComplexMatrix, ComplexMatrix) + 'a>;

/// Evaluates the eleven bracket identities among the generators.
///
/// The four identities involving `F` are skipped at `s = 1`, where `F = 0`.
pub fn verify_commutator_table(s: Cutoff, tol: f64) -> CheckReport {
    let g = derived_generators(s);
    let sf = s.s() as f64;
    let c = |x: &ComplexMatrix, y: &ComplexMatrix| commutator(x, y).expect("same cutoff");
    let top = (sf + 1.0) * sf.sqrt();
    let low = (sf - 1.0).sqrt();

    let mut checks = vec![
        identity_check("[a,A] = (s+1)sqrt(s) M", c(&g.a, &g.deficit), g.m.scale_real(top), tol),
        identity_check(
            "[a_dag,A] = -(s+1)sqrt(s) M_dag",
            c(&g.a_dag, &g.deficit),
            g.m_dag.scale_real(-top),
            tol,
        ),
        identity_check("[M,M_dag] = -K", c(&g.m, &g.m_dag), -&g.k, tol),
        identity_check("[A,M] = (s+1) M", c(&g.deficit, &g.m), g.m.scale_real(sf + 1.0), tol),
        identity_check(
            "[A,M_dag] = -(s+1) M_dag",
            c(&g.deficit, &g.m_dag),
            g.m_dag.scale_real(-(sf + 1.0)),
            tol,
        ),
    ];
    let f_checks: [(&str, Deferred); 4] = [
        (
            "[a,M] = -sqrt(s-1) F",
            Box::new(|| (c(&g.a, &g.m), g.f.scale_real(-low))),
        ),
        (
            "[a_dag,M_dag] = sqrt(s-1) F_dag",
            Box::new(|| (c(&g.a_dag, &g.m_dag), g.f_dag.scale_real(low))),
        ),
        ("[K,F] = -F", Box::new(|| (c(&g.k, &g.f), -&g.f))),
        ("[K,F_dag] = F_dag", Box::new(|| (c(&g.k, &g.f_dag), g.f_dag.clone()))),
    ];
    for (name, eval) in f_checks.iter() {
        if s.s() >= 2 {
            let (lhs, rhs) = eval();
            checks.push(identity_check(name, lhs, rhs, tol));
        } else {
            checks.push(Check::skipped(*name, "F = 0 at s = 1"));
        }
    }
    checks.push(identity_check("[M,K] = 2M", c(&g.m, &g.k), g.m.scale_real(2.0), tol));
    checks.push(identity_check(
        "[M_dag,K] = -2M_dag",
        c(&g.m_dag, &g.k),
        g.m_dag.scale_real(-2.0),
        tol,
    ));
    CheckReport::new(checks)
}

/// Checks `a a† + a† a = I` for a two-level annihilator.
///
/// Takes the matrix rather than the cutoff so a perturbed `a` can be fed in.
pub fn fermionic_check(a: &ComplexMatrix, tol: f64) -> Result<CheckReport> {
    if a.dim() != 2 {
        return Err(PbError::invalid(format!(
            "fermionic check needs s = 1 (dim 2), got dim {}",
            a.dim()
        )));
    }
    let ac = anticommutator(a, &dagger(a))?;
    let res = (&ac - &ComplexMatrix::identity(2)).max_abs();
    Ok(CheckReport::new(vec![Check::residual("{a,a_dag} = I", res, tol)]))
}

/// The exact `s = 1` reductions to Pauli matrices.
pub fn pauli_reduction_check() -> CheckReport {
    let g = derived_generators(Cutoff(1));
    let i = C64::new(0.0, 1.0);
    let s1 = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).expect("literal");
    let s2 = ComplexMatrix::unit(2, 0, 1, -i) + ComplexMatrix::unit(2, 1, 0, i);
    let s3 = ComplexMatrix::real_diag(&[1.0, -1.0]);
    let exact = |name: &str, x: &ComplexMatrix, y: ComplexMatrix| {
        Check::residual(name, (x - &y).max_abs(), 0.0)
    };
    CheckReport::new(vec![
        exact("a = (s1 + i s2)/2", &g.a, (&s1 + &s2.scale(i)).scale_real(0.5)),
        exact("a_dag = (s1 - i s2)/2", &g.a_dag, (&s1 - &s2.scale(i)).scale_real(0.5)),
        exact("A = s3", &g.deficit, s3),
        exact("M = -a", &g.m, -&g.a),
        exact("M_dag = -a_dag", &g.m_dag, -&g.a_dag),
        exact("K = -A", &g.k, -&g.deficit),
        exact("F = 0", &g.f, ComplexMatrix::zeros(2)),
        exact("F_dag = 0", &g.f_dag, ComplexMatrix::zeros(2)),
        exact(
            "a a_dag + a_dag a = I",
            &anticommutator(&g.a, &g.a_dag).expect("dim 2"),
            ComplexMatrix::identity(2),
        ),
    ])
}

/// Deviations from the bosonic limit on levels below the truncation edge.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BosonicLimit {
    pub s: usize,
    /// `‖P(A - I)P‖_F` with `P` onto levels `0..s-1`.
    pub deficit_residual: f64,
    /// `max ‖P' X P'‖_F` over `X ∈ {M, M†, K, F, F†}`, `P'` onto levels `0..s-2`.
    pub generator_residual: f64,
}

/// Confirms that `A` equals the identity away from level `s` and that the
/// edge generators vanish below their support.
///
/// `K` carries a `-1` at level `s-1`, so the generator window stops one level
/// lower than the one used for `A`.
pub fn bosonic_limit_check(s: Cutoff) -> Result<BosonicLimit> {
    if s.s() < 2 {
        return Err(PbError::invalid("bosonic limit check needs s >= 2"));
    }
    let g = derived_generators(s);
    let below: Vec<usize> = (0..s.s()).collect();
    let deficit_residual = (&g.deficit - &ComplexMatrix::identity(s.dim()))
        .project(&below)
        .frobenius_norm();
    let window = &below[..s.s() - 1];
    let generator_residual = [&g.m, &g.m_dag, &g.k, &g.f, &g.f_dag]
        .iter()
        .map(|x| x.project(window).frobenius_norm())
        .fold(0.0, f64::max);
    Ok(BosonicLimit {
        s: s.s(),
        deficit_residual,
        generator_residual,
    })
}

/// Truncated phase state `(s+1)^{-1/2} Σ_n e^{inθ} |n⟩`.
pub fn phase_state(s: Cutoff, theta: f64) -> ComplexVector {
    let norm = (s.dim() as f64).sqrt().recip();
    ComplexVector::new(
        (0..s.dim())
            .map(|n| C64::from_polar(norm, n as f64 * theta))
            .collect(),
    )
}

/// Max trace magnitude across the generator family.
pub fn max_trace(ops: &OperatorSet) -> f64 {
    ops.named()
        .iter()
        .map(|(_, m)| trace(m).norm())
        .fold(0.0, f64::max)
}
