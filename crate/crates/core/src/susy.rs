//! Supersymmetric oscillator realized by multiphoton Jaynes-Cummings
//! supercharges on spin-1/2 ⊗ Fock space truncated at `n_max` photons.
//!
//! Index layout is `spin * (n_max + 1) + photons`, spin 0 = upper. The
//! supercharge `Q = a^k σ₊ / √k!` lowers the photon number by `k` while
//! flipping lower → upper, so the doublet `{(upper, m), (lower, m + k)}`
//! is invariant and `N′ = {Q, Q†}` acts on it as `C(m + k, m)`.

use serde::Serialize;

use crate::combin::binomial;
use crate::error::{PbError, Result};
use crate::matrix::{
    anticommutator, commutator, dagger, eigenvalues_hermitian, kron, ComplexMatrix, C64, ONE,
};
use crate::operators::{annihilation, Cutoff};
use crate::report::{Check, CheckReport};

/// Tolerance for the relation suite.
pub const SUSY_TOL: f64 = 1e-10;
/// Tolerance for doublet amplitudes and projected quasialgebra relations.
pub const DOUBLET_TOL: f64 = 1e-12;
/// Tolerance for matching `ε²/|g|²` against the spectrum of `N′`.
pub const SPECTRUM_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SusyConfig {
    k: usize,
    n_max: usize,
}

impl SusyConfig {
    pub fn new(k: usize, n_max: usize) -> Result<Self> {
        if k < 1 {
            return Err(PbError::invalid("photon number k must be >= 1"));
        }
        if n_max < k {
            return Err(PbError::invalid(format!("n_max ({n_max}) must be >= k ({k})")));
        }
        Ok(SusyConfig { k, n_max })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Number of photon levels `0..=n_max - k` free of truncation effects.
    pub fn safe_dim(&self) -> usize {
        self.n_max - self.k + 1
    }

    pub fn total_dim(&self) -> usize {
        2 * (self.n_max + 1)
    }

    pub fn upper(&self, photons: usize) -> usize {
        photons
    }

    pub fn lower(&self, photons: usize) -> usize {
        self.n_max + 1 + photons
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SusyAlgebra {
    pub config: SusyConfig,
    pub q: ComplexMatrix,
    pub q_dag: ComplexMatrix,
    pub n: ComplexMatrix,
    pub n_prime: ComplexMatrix,
    pub sigma3: ComplexMatrix,
}

impl SusyAlgebra {
    pub fn safe_dim(&self) -> usize {
        self.config.safe_dim()
    }

    /// Both spin components with photon number `<= n_max - k`.
    pub fn safe_indices(&self) -> Vec<usize> {
        let c = &self.config;
        (0..c.safe_dim())
            .map(|p| c.upper(p))
            .chain((0..c.safe_dim()).map(|p| c.lower(p)))
            .collect()
    }

    /// `[(upper, m), (lower, m + k)]`.
    pub fn doublet(&self, m: usize) -> Result<[usize; 2]> {
        let c = &self.config;
        if m + c.k > c.n_max {
            return Err(PbError::invalid(format!(
                "doublet m = {m} needs m + k <= n_max ({} + {} > {})",
                m, c.k, c.n_max
            )));
        }
        Ok([c.upper(m), c.lower(m + c.k)])
    }

    pub fn named(&self) -> [(&'static str, &ComplexMatrix); 5] {
        [
            ("Q", &self.q),
            ("Q_dag", &self.q_dag),
            ("N", &self.n),
            ("N_prime", &self.n_prime),
            ("Sigma3", &self.sigma3),
        ]
    }
}

/// `Q = kron(σ₊, a^k)/√k!`, `Σ₃ = kron(σ₃, I)`, `N = kron(I, a†a)/k`,
/// `N′ = {Q, Q†}`.
pub fn build_jc_realization(config: SusyConfig) -> SusyAlgebra {
    let fock = Cutoff::new(config.n_max).expect("n_max >= k >= 1");
    let a = annihilation(fock);
    let kf: f64 = (1..=config.k).map(|i| i as f64).product();
    let sigma_plus = ComplexMatrix::unit(2, 0, 1, ONE);
    let ak = a.pow(config.k as u32);
    let q = kron(&sigma_plus, &ak).scale_real(kf.sqrt().recip());
    let q_dag = dagger(&q);
    let number = ComplexMatrix::real_diag(
        &(0..=config.n_max).map(|p| p as f64 / config.k as f64).collect::<Vec<_>>(),
    );
    let n = kron(&ComplexMatrix::identity(2), &number);
    let sigma3 = kron(
        &ComplexMatrix::real_diag(&[1.0, -1.0]),
        &ComplexMatrix::identity(config.n_max + 1),
    );
    let n_prime = anticommutator(&q, &q_dag).expect("same dims");
    SusyAlgebra {
        config,
        q,
        q_dag,
        n,
        n_prime,
        sigma3,
    }
}

/// `C(m + k, m) = (m + k)! / (m! k!)`.
pub fn nprime_eigenvalue(m: u64, k: u64) -> Result<u64> {
    if k < 1 {
        return Err(PbError::invalid("k must be >= 1"));
    }
    let top = m.checked_add(k).ok_or(PbError::Overflow("m + k"))?;
    binomial(top, m)
}

#[derive(Clone, Copy)]
enum Scope {
    Full,
    Safe,
}

/// The thirteen relations of the supersymmetric algebra as matrix identities.
///
/// Relations whose untruncated form needs `a^k a†^k` are compared after
/// projecting onto the safe subspace; the spin-structural ones are compared
/// on the full truncated space.
pub fn verify_susy_relations(alg: &SusyAlgebra, tol: f64) -> CheckReport {
    let (q, qd, n, np, s3) = (&alg.q, &alg.q_dag, &alg.n, &alg.n_prime, &alg.sigma3);
    let dim = alg.config.total_dim();
    let zero = ComplexMatrix::zeros(dim);
    let safe = alg.safe_indices();
    let c = |x: &ComplexMatrix, y: &ComplexMatrix| commutator(x, y).expect("same dims");
    let ac = |x: &ComplexMatrix, y: &ComplexMatrix| anticommutator(x, y).expect("same dims");
    let res = |lhs: ComplexMatrix, rhs: &ComplexMatrix, scope: Scope| -> f64 {
        let d = &lhs - rhs;
        match scope {
            Scope::Full => d.max_abs(),
            Scope::Safe => d.project(&safe).max_abs(),
        }
    };
    let qd_minus_q = qd - q;

    let rows: Vec<(&str, f64, Scope)> = vec![
        (
            "Q^2 = Q_dag^2 = 0",
            res(q * q, &zero, Scope::Full).max(res(qd * qd, &zero, Scope::Full)),
            Scope::Full,
        ),
        ("[Q,Q_dag] = N' sigma3", res(c(q, qd), &(np * s3), Scope::Safe), Scope::Safe),
        ("[N,N'] = 0", res(c(n, np), &zero, Scope::Safe), Scope::Safe),
        ("[N,Q] = -Q", res(c(n, q), &-q, Scope::Full), Scope::Full),
        ("[N,Q_dag] = Q_dag", res(c(n, qd), qd, Scope::Full), Scope::Full),
        ("{Q,Q_dag} = N'", res(ac(q, qd), np, Scope::Full), Scope::Full),
        (
            "{Q,sigma3} = {Q_dag,sigma3} = 0",
            res(ac(q, s3), &zero, Scope::Full).max(res(ac(qd, s3), &zero, Scope::Full)),
            Scope::Full,
        ),
        ("[N',Q] = 0", res(c(np, q), &zero, Scope::Safe), Scope::Safe),
        ("[N',Q_dag] = 0", res(c(np, qd), &zero, Scope::Safe), Scope::Safe),
        ("[Q,sigma3] = -2Q", res(c(q, s3), &q.scale_real(-2.0), Scope::Full), Scope::Full),
        ("[Q_dag,sigma3] = 2Q_dag", res(c(qd, s3), &qd.scale_real(2.0), Scope::Full), Scope::Full),
        ("(Q_dag - Q)^2 = -N'", res(&qd_minus_q * &qd_minus_q, &-np, Scope::Safe), Scope::Safe),
        ("[N',sigma3] = 0", res(c(np, s3), &zero, Scope::Safe), Scope::Safe),
    ];
    CheckReport::new(
        rows.into_iter()
            .map(|(name, r, scope)| {
                let chk = Check::residual(name, r, tol);
                match scope {
                    Scope::Full => chk.with_note("full space"),
                    Scope::Safe => chk.with_note(format!(
                        "safe subspace, photons <= {}",
                        alg.config.n_max - alg.config.k
                    )),
                }
            })
            .collect(),
    )
}

/// Exact nilpotency: every entry of `Q²` and `Q†²` is literally zero.
pub fn nilpotent_exactly(alg: &SusyAlgebra) -> bool {
    (&alg.q * &alg.q).nonzero_count() == 0 && (&alg.q_dag * &alg.q_dag).nonzero_count() == 0
}

/// Ladder action of `Q†` and `Q` on the doublet at `m`.
pub fn doublet_action_check(alg: &SusyAlgebra, m: usize, tol: f64) -> Result<CheckReport> {
    let [u, l] = alg.doublet(m)?;
    let coeff = nprime_eigenvalue(m as u64, alg.config.k as u64)? as f64;
    let amp = coeff.sqrt();
    let dim = alg.config.total_dim();

    let column_defect = |op: &ComplexMatrix, from: usize, to: usize| -> f64 {
        (0..dim)
            .map(|r| {
                let want = if r == to { C64::new(amp, 0.0) } else { C64::new(0.0, 0.0) };
                (op[(r, from)] - want).norm()
            })
            .fold(0.0, f64::max)
    };
    let eig_defect = |state: usize| -> f64 {
        (0..dim)
            .map(|r| {
                let want = if r == state { coeff } else { 0.0 };
                (alg.n_prime[(r, state)] - C64::new(want, 0.0)).norm()
            })
            .fold(0.0, f64::max)
    };
    Ok(CheckReport::new(vec![
        Check::residual(format!("Q_dag (m={m},up) -> sqrt(C) (m+k,down)"), column_defect(&alg.q_dag, u, l), tol),
        Check::residual(format!("Q (m+k,down) -> sqrt(C) (m={m},up)"), column_defect(&alg.q, l, u), tol),
        Check::residual(format!("N' (m={m},up) = C"), eig_defect(u), tol),
        Check::residual("N' (m+k,down) = C", eig_defect(l), tol)
            .with_note(format!("C = {coeff}")),
    ]))
}

/// Relations with `N′` replaced by its doublet eigenvalue, evaluated on the
/// two-dimensional doublet block of the full-space operators.
pub fn quasialgebra_check(alg: &SusyAlgebra, m: usize, tol: f64) -> Result<CheckReport> {
    let idx = alg.doublet(m)?;
    let coeff = nprime_eigenvalue(m as u64, alg.config.k as u64)? as f64;
    let (q, qd) = (&alg.q, &alg.q_dag);
    let comm = commutator(q, qd)?.compress(&idx);
    let anti = anticommutator(q, qd)?.compress(&idx);
    let diff = qd - q;
    let sq = (&diff * &diff).compress(&idx);
    let s3 = ComplexMatrix::real_diag(&[coeff, -coeff]);
    let id = ComplexMatrix::identity(2).scale_real(coeff);
    Ok(CheckReport::new(vec![
        Check::residual(format!("[Q,Q_dag] = C sigma3 (m={m})"), (&comm - &s3).max_abs(), tol),
        Check::residual(format!("{{Q,Q_dag}} = C (m={m})"), (&anti - &id).max_abs(), tol),
        Check::residual(format!("(Q_dag - Q)^2 = -C (m={m})"), (&sq + &id).max_abs(), tol)
            .with_note(format!("C = {coeff}")),
    ]))
}

/// `H = (ω/2) {Q, Q†}`.
pub fn susy_hamiltonian(alg: &SusyAlgebra, omega: f64) -> Result<ComplexMatrix> {
    if !omega.is_finite() {
        return Err(PbError::NonFinite("omega"));
    }
    Ok(alg.n_prime.scale_real(omega / 2.0))
}

/// `H = g Q + g* Q†`.
pub fn jc_hamiltonian(alg: &SusyAlgebra, g: C64) -> Result<ComplexMatrix> {
    if !(g.re.is_finite() && g.im.is_finite()) {
        return Err(PbError::NonFinite("coupling g"));
    }
    Ok(&alg.q.scale(g) + &alg.q_dag.scale(g.conj()))
}

/// Indices of every safe doublet, in `m` order.
fn doublet_indices(alg: &SusyAlgebra) -> Vec<usize> {
    (0..alg.safe_dim())
        .flat_map(|m| alg.doublet(m).expect("m <= n_max - k"))
        .collect()
}

/// Spectrum of `H = gQ + g*Q†` restricted to the safe doublets, ascending.
pub fn safe_doublet_spectrum(alg: &SusyAlgebra, g: C64) -> Result<Vec<f64>> {
    let h = jc_hamiltonian(alg, g)?;
    eigenvalues_hermitian(&h.compress(&doublet_indices(alg)))
}

/// Spectrum of `N′` restricted to the safe doublets, ascending.
pub fn safe_nprime_spectrum(alg: &SusyAlgebra) -> Result<Vec<f64>> {
    eigenvalues_hermitian(&alg.n_prime.compress(&doublet_indices(alg)))
}

/// `H² = |g|² N′` on the safe subspace, and `ε²/|g|² ∈ spec(N′)` for every
/// eigenvalue `ε` of `H` on the safe doublets.
pub fn spectrum_squared_check(alg: &SusyAlgebra, g: C64, tol: f64, spec_tol: f64) -> Result<CheckReport> {
    if g.norm() == 0.0 {
        return Err(PbError::invalid("coupling g must be nonzero"));
    }
    let g2 = g.norm_sqr();
    let h = jc_hamiltonian(alg, g)?;
    let safe = alg.safe_indices();
    let lhs = (&h * &h).project(&safe);
    let rhs = alg.n_prime.scale_real(g2).project(&safe);
    let rel = (&lhs - &rhs).frobenius_norm() / (g2 * alg.n_prime.project(&safe).frobenius_norm()).max(f64::MIN_POSITIVE);

    let eps = safe_doublet_spectrum(alg, g)?;
    let nprime = safe_nprime_spectrum(alg)?;
    let worst = eps
        .iter()
        .map(|e| {
            let x = e * e / g2;
            nprime
                .iter()
                .map(|c| (x - c).abs() / c.max(1.0))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max);
    Ok(CheckReport::new(vec![
        Check::residual("H^2 = |g|^2 N' (safe subspace)", rel, tol).with_note("relative Frobenius"),
        Check::residual("eps^2/|g|^2 in spec(N')", worst, spec_tol)
            .with_note(format!("{} safe eigenvalues", eps.len())),
    ]))
}

/// Every check of the module for one configuration.
pub fn full_report(alg: &SusyAlgebra, g: C64, tol: f64) -> Result<CheckReport> {
    let mut r = verify_susy_relations(alg, tol);
    r.checks.push(Check::flag("Q^2 = 0 exactly", nilpotent_exactly(alg)));
    let dt = tol.min(DOUBLET_TOL);
    let mut doublet = 0.0f64;
    let mut quasi = 0.0f64;
    for m in 0..alg.safe_dim() {
        doublet = doublet.max(doublet_action_check(alg, m, dt)?.max_residual());
        quasi = quasi.max(quasialgebra_check(alg, m, dt)?.max_residual());
    }
    let span = format!("m = 0..={}", alg.safe_dim() - 1);
    r.checks.push(Check::residual("doublet amplitudes sqrt(C)", doublet, dt).with_note(span.clone()));
    r.checks.push(Check::residual("quasialgebra (C coefficients)", quasi, dt).with_note(span));
    r.extend(spectrum_squared_check(alg, g, tol, SPECTRUM_TOL.max(tol))?);
    Ok(CheckReport::new(r.checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::trace;

    fn alg(k: usize, n_max: usize) -> SusyAlgebra {
        build_jc_realization(SusyConfig::new(k, n_max).unwrap())
    }

    #[test]
    fn config_validation() {
        assert!(SusyConfig::new(0, 3).is_err());
        assert!(SusyConfig::new(3, 2).is_err());
        let c = SusyConfig::new(2, 5).unwrap();
        assert_eq!((c.safe_dim(), c.total_dim()), (4, 12));
    }

    #[test]
    fn k1_nmax1_single_entry() {
        let a = alg(1, 1);
        assert_eq!(a.q.nonzero_count(), 1);
        // (lower, |1⟩) = index 3  →  (upper, |0⟩) = index 0
        assert_eq!(a.q[(0, 3)], ONE);
    }

    #[test]
    fn q_traceless_and_kills_low_photons() {
        for (k, n) in [(1, 4), (2, 6), (3, 7)] {
            let a = alg(k, n);
            assert_eq!(trace(&a.q), C64::new(0.0, 0.0));
        }
        let a = alg(2, 6);
        for p in 0..2 {
            for col in [a.config.upper(p), a.config.lower(p)] {
                assert!((0..a.config.total_dim()).all(|r| a.q[(r, col)] == C64::new(0.0, 0.0)));
            }
        }
    }

    #[test]
    fn invariants_of_construction() {
        let a = alg(2, 8);
        assert_eq!(a.q_dag, dagger(&a.q));
        assert!(a.sigma3.is_hermitian(0.0));
        assert_eq!(eigenvalues_hermitian(&a.sigma3).unwrap().first(), Some(&-1.0));
        assert!(nilpotent_exactly(&a));
    }

    #[test]
    fn relations_pass() {
        for (k, n) in [(1, 20), (3, 24), (2, 24)] {
            let r = verify_susy_relations(&alg(k, n), 1e-12);
            assert_eq!(r.checks.len(), 13);
            assert!(r.pass, "k={k}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn degenerate_cutoff_structural_relations() {
        for k in 1..=4 {
            let a = alg(k, k);
            assert_eq!(a.safe_dim(), 1);
            assert!(nilpotent_exactly(&a));
            let r = verify_susy_relations(&a, 1e-12);
            for name in ["Q^2 = Q_dag^2 = 0", "{Q,sigma3} = {Q_dag,sigma3} = 0", "[Q,sigma3] = -2Q", "[N,Q] = -Q"] {
                assert_eq!(r.get(name).unwrap().residual, 0.0, "{name}");
            }
        }
    }

    #[test]
    fn truncation_zeroes_top_upper_levels() {
        // upper states above n_max - k have no partner, so N' vanishes there
        let a = alg(2, 6);
        for p in 5..=6 {
            let i = a.config.upper(p);
            assert_eq!(a.n_prime[(i, i)], C64::new(0.0, 0.0));
        }
        let i = a.config.upper(4);
        assert!((a.n_prime[(i, i)].re - 15.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(nprime_eigenvalue(1, 1).unwrap(), 2);
        for k in 1..6 {
            assert_eq!(nprime_eigenvalue(0, k).unwrap(), 1);
        }
        assert_eq!(nprime_eigenvalue(3, 2).unwrap(), 10);
        assert!(nprime_eigenvalue(3, 0).is_err());
    }

    #[test]
    fn doublet_examples() {
        let a = alg(1, 5);
        let r = doublet_action_check(&a, 0, DOUBLET_TOL).unwrap();
        assert!(r.pass);
        assert_eq!(a.q_dag[(a.config.lower(1), a.config.upper(0))], ONE);
        let a = alg(2, 8);
        assert!(doublet_action_check(&a, 3, DOUBLET_TOL).unwrap().pass);
        let amp = a.q_dag[(a.config.lower(5), a.config.upper(3))].re;
        assert!((amp - 10f64.sqrt()).abs() < 1e-12);
        let a = alg(1, 3);
        let amp = a.q_dag[(a.config.lower(2), a.config.upper(1))].re;
        assert!((amp - 2f64.sqrt()).abs() < 1e-12);
        assert!(doublet_action_check(&a, 3, DOUBLET_TOL).is_err());
    }

    #[test]
    fn quasialgebra_examples() {
        let a = alg(1, 4);
        let r = quasialgebra_check(&a, 0, DOUBLET_TOL).unwrap();
        assert!(r.pass);
        let a = alg(2, 9);
        let r = quasialgebra_check(&a, 3, DOUBLET_TOL).unwrap();
        assert!(r.pass && r.checks[2].note.as_deref() == Some("C = 10"));
        let a = alg(1, 4);
        assert!(quasialgebra_check(&a, 1, DOUBLET_TOL).unwrap().pass);
        // wrong coefficient is detected: doublet m=1 compared against C=1
        let comm = commutator(&a.q, &a.q_dag).unwrap().compress(&a.doublet(1).unwrap());
        assert!((&comm - &ComplexMatrix::real_diag(&[1.0, -1.0])).max_abs() > 0.5);
    }

    #[test]
    fn hamiltonians() {
        let a = alg(1, 6);
        assert_eq!(susy_hamiltonian(&a, 2.0).unwrap(), a.n_prime);
        assert_eq!(susy_hamiltonian(&a, 0.0).unwrap(), ComplexMatrix::zeros(14));
        assert!(susy_hamiltonian(&a, f64::NAN).is_err());
        let h = susy_hamiltonian(&a, 3.0).unwrap();
        let [u, _] = a.doublet(2).unwrap();
        assert!((h[(u, u)].re - 1.5 * 3.0).abs() < 1e-12);

        assert_eq!(jc_hamiltonian(&a, C64::new(0.0, 0.0)).unwrap(), ComplexMatrix::zeros(14));
        let h = jc_hamiltonian(&a, C64::new(0.0, 1.0)).unwrap();
        assert_eq!(h.hermiticity_defect(), 0.0);
        let block = jc_hamiltonian(&a, C64::new(0.7, 0.0))
            .unwrap()
            .compress(&a.doublet(0).unwrap());
        let ev = eigenvalues_hermitian(&block).unwrap();
        assert!((ev[0] + 0.7).abs() < 1e-15 && (ev[1] - 0.7).abs() < 1e-15);
    }

    #[test]
    fn spectrum_examples() {
        let a = alg(1, 20);
        let g = C64::new(1.0, 0.0);
        let ev = safe_doublet_spectrum(&a, g).unwrap();
        for m in 0..=18 {
            let want = ((m + 1) as f64).sqrt();
            assert!(ev.iter().any(|e| (e - want).abs() < 1e-9), "+sqrt({})", m + 1);
            assert!(ev.iter().any(|e| (e + want).abs() < 1e-9), "-sqrt({})", m + 1);
        }
        let r = spectrum_squared_check(&a, g, SUSY_TOL, SPECTRUM_TOL).unwrap();
        assert!(r.pass, "{r:?}");

        let a = alg(1, 3);
        let g = C64::new(0.3, -1.1);
        let block = jc_hamiltonian(&a, g).unwrap().compress(&a.doublet(1).unwrap());
        let ev = eigenvalues_hermitian(&block).unwrap();
        assert!((ev[1] * ev[1] - 2.0 * g.norm_sqr()).abs() < 1e-12);

        let a = alg(2, 10);
        let e1 = safe_doublet_spectrum(&a, C64::new(1.0, 0.0)).unwrap();
        let e2 = safe_doublet_spectrum(&a, C64::new(2.0, 0.0)).unwrap();
        for (x, y) in e1.iter().zip(&e2) {
            assert!((2.0 * x - y).abs() < 1e-12);
        }
        assert!(spectrum_squared_check(&a, C64::new(0.0, 0.0), SUSY_TOL, SPECTRUM_TOL).is_err());
    }

    #[test]
    fn nprime_safe_spectrum_multiplicity_two() {
        for k in 1..=3 {
            let a = alg(k, 12);
            let spec = safe_nprime_spectrum(&a).unwrap();
            let mut want: Vec<f64> = (0..a.safe_dim())
                .flat_map(|m| {
                    let c = nprime_eigenvalue(m as u64, k as u64).unwrap() as f64;
                    [c, c]
                })
                .collect();
            want.sort_by(f64::total_cmp);
            for (x, y) in spec.iter().zip(&want) {
                assert!((x - y).abs() <= 1e-10 * y.max(1.0));
            }
        }
    }

    #[test]
    fn full_report_passes() {
        let r = full_report(&alg(2, 24), C64::new(1.0, 0.5), SUSY_TOL).unwrap();
        assert!(r.pass, "{:?}", r.failures().collect::<Vec<_>>());
    }
}
