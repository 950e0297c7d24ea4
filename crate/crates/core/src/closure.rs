//! Lie closure of a set of matrices under the commutator bracket.
//!
//! The closure is built over the complex span: every round brackets each
//! newly found basis element with everything found before it, removes the
//! component already in the span by Gram-Schmidt against the Hilbert-Schmidt
//! inner product, and keeps what survives above the independence threshold.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{PbError, Result};
use crate::exec::Exec;
use crate::matrix::{commutator, dagger, determinant, hs_inner, matrix_exp, trace, ComplexMatrix, C64, I, ONE};
use crate::operators::{annihilation, creation, number_deficit, Cutoff};

/// Relative independence threshold for accepting a new basis element.
pub const CLOSURE_TOL: f64 = 1e-8;
/// Tolerance for Jacobi, unitarity and determinant checks.
pub const GROUP_TOL: f64 = 1e-9;
/// Seed for the Hermitian-combination and Jacobi-triple samplers.
pub const SAMPLE_SEED: u64 = 0x0005_eed0_fa19_eb2a;

/// Structure constants below this magnitude are not stored.
const SPARSE_EPS: f64 = 1e-12;

/// An orthonormal (Hilbert-Schmidt) basis of a matrix Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct LieBasis {
    pub dim_space: usize,
    pub basis: Vec<ComplexMatrix>,
    pub rounds: usize,
    /// Absolute threshold actually used: `tol × largest seed norm`.
    pub threshold: f64,
}

impl LieBasis {
    pub fn algebra_dim(&self) -> usize {
        self.basis.len()
    }

    /// Wraps an already orthonormal list, checking orthonormality within `tol`.
    pub fn from_orthonormal(basis: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        let dim_space = check_same_dims(&basis)?;
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let want = if i == j { ONE } else { C64::new(0.0, 0.0) };
                let got = hs_inner(x, y)?;
                if (got - want).norm() > tol {
                    return Err(PbError::invalid(format!(
                        "basis not orthonormal at ({i}, {j}): {got}"
                    )));
                }
            }
        }
        Ok(LieBasis {
            dim_space,
            basis,
            rounds: 0,
            threshold: tol,
        })
    }

    /// `‖x − Σ_k ⟨B_k, x⟩ B_k‖_F`.
    pub fn projection_residual(&self, x: &ComplexMatrix) -> Result<f64> {
        Ok(project_out(&self.basis, x)?.frobenius_norm())
    }

    pub fn max_trace(&self) -> f64 {
        self.basis.iter().map(|b| trace(b).norm()).fold(0.0, f64::max)
    }
}

fn check_same_dims(ms: &[ComplexMatrix]) -> Result<usize> {
    let first = ms
        .first()
        .ok_or_else(|| PbError::invalid("empty matrix list"))?
        .dim();
    for m in ms {
        if m.dim() != first {
            return Err(PbError::DimensionMismatch {
                left: first,
                right: m.dim(),
            });
        }
    }
    Ok(first)
}

/// Two passes of classical Gram-Schmidt against an orthonormal list.
fn project_out(basis: &[ComplexMatrix], x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let mut r = x.clone();
    for _ in 0..2 {
        for b in basis {
            let c = hs_inner(b, &r)?;
            if c != C64::new(0.0, 0.0) {
                r = &r - &b.scale(c);
            }
        }
    }
    Ok(r)
}

/// Unit HS norm, first significant entry rotated onto the positive real axis.
fn canonicalize(r: &ComplexMatrix) -> ComplexMatrix {
    let n = r.scale_real(r.frobenius_norm().recip());
    let cutoff = 1e-8 * n.max_abs();
    match n.as_slice().iter().find(|z| z.norm() > cutoff) {
        Some(z) => n.scale(z.conj() / z.norm()),
        None => n,
    }
}

/// Closes `seed` under commutation with the default execution mode.
pub fn closure(seed: &[ComplexMatrix], tol: f64) -> Result<LieBasis> {
    closure_with(seed, tol, Exec::default())
}

/// Closes `seed` under commutation.
///
/// Output order: surviving seeds in input order, then discovered elements in
/// the order their generating pair `(i, j)`, `i < j`, appears
/// lexicographically. Brackets within a round may be evaluated concurrently;
/// acceptance is always sequential, so both modes produce identical bits.
pub fn closure_with(seed: &[ComplexMatrix], tol: f64, exec: Exec) -> Result<LieBasis> {
    let dim_space = check_same_dims(seed)?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(PbError::invalid(format!("closure tolerance must be positive, got {tol}")));
    }
    for m in seed {
        m.ensure_finite("closure seed")?;
    }
    let scale = seed.iter().map(ComplexMatrix::frobenius_norm).fold(0.0, f64::max);
    let threshold = tol * scale.max(f64::MIN_POSITIVE);
    for (i, m) in seed.iter().enumerate() {
        let t = trace(m).norm();
        if t > tol * scale.max(1.0) {
            return Err(PbError::invalid(format!("seed {i} is not traceless (|tr| = {t:e})")));
        }
    }

    let mut basis: Vec<ComplexMatrix> = Vec::new();
    let accept = |basis: &mut Vec<ComplexMatrix>, x: &ComplexMatrix| -> Result<()> {
        let r = project_out(basis, x)?;
        if r.frobenius_norm() > threshold {
            basis.push(canonicalize(&r));
        }
        Ok(())
    };
    for m in seed {
        accept(&mut basis, m)?;
    }

    let max_rounds = dim_space * dim_space;
    let mut start = 0;
    let mut rounds = 0;
    while start < basis.len() {
        if rounds >= max_rounds {
            return Err(PbError::ClosureDiverged { rounds });
        }
        rounds += 1;
        let end = basis.len();
        let pairs: Vec<(usize, usize)> = (0..end)
            .flat_map(|i| (start.max(i + 1)..end).map(move |j| (i, j)))
            .collect();
        let snapshot = &basis;
        let brackets = exec.map(&pairs, |&(i, j)| {
            commutator(&snapshot[i], &snapshot[j]).expect("equal dims")
        });
        for b in &brackets {
            accept(&mut basis, b)?;
        }
        start = end;
    }

    Ok(LieBasis {
        dim_space,
        basis,
        rounds,
        threshold,
    })
}

/// Seed `{a, a†, A}` at cutoff `s`.
pub fn ladder_seed(s: Cutoff) -> Vec<ComplexMatrix> {
    vec![annihilation(s), creation(s), number_deficit(s)]
}

/// `[B_i, B_j] = Σ_k c_ijk B_k`, stored sparsely.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureConstants {
    pub dim: usize,
    pub triples: Vec<(usize, usize, usize, C64)>,
    /// Max over pairs of `‖[B_i,B_j] − Σ_k c_ijk B_k‖_F`.
    pub residual: f64,
}

impl StructureConstants {
    /// Dense tensor, index `(i * dim + j) * dim + k`.
    pub fn dense(&self) -> Vec<C64> {
        let n = self.dim;
        let mut t = vec![C64::new(0.0, 0.0); n * n * n];
        for &(i, j, k, c) in &self.triples {
            t[(i * n + j) * n + k] = c;
        }
        t
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> C64 {
        self.triples
            .iter()
            .find(|t| (t.0, t.1, t.2) == (i, j, k))
            .map(|t| t.3)
            .unwrap_or_default()
    }

    /// `max |c_ijk + c_jik|`.
    pub fn antisymmetry_residual(&self) -> f64 {
        let n = self.dim;
        let t = self.dense();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    worst = worst.max((t[(i * n + j) * n + k] + t[(j * n + i) * n + k]).norm());
                }
            }
        }
        worst
    }
}

pub fn structure_constants(basis: &LieBasis) -> StructureConstants {
    structure_constants_with(basis, Exec::default())
}

/// Computes `c_ijk = ⟨B_k, [B_i, B_j]⟩` for every ordered pair.
pub fn structure_constants_with(basis: &LieBasis, exec: Exec) -> StructureConstants {
    let n = basis.algebra_dim();
    let b = &basis.basis;
    let rows = exec.map_range(n * n, |p| {
        let (i, j) = (p / n, p % n);
        let br = commutator(&b[i], &b[j]).expect("equal dims");
        let mut recon = ComplexMatrix::zeros(basis.dim_space);
        let mut triples = Vec::new();
        for (k, bk) in b.iter().enumerate() {
            let c = hs_inner(bk, &br).expect("equal dims");
            if c.norm() > SPARSE_EPS {
                triples.push((i, j, k, c));
                recon = &recon + &bk.scale(c);
            }
        }
        ((&br - &recon).frobenius_norm(), triples)
    });
    let residual = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    StructureConstants {
        dim: n,
        triples: rows.into_iter().flat_map(|r| r.1).collect(),
        residual,
    }
}

pub fn jacobi_residual(basis: &LieBasis, trials: usize) -> f64 {
    jacobi_residual_with(basis, trials, Exec::default())
}

/// Max Jacobi defect `‖[X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]]‖_F` over randomly
/// drawn basis triples (fixed seed).
pub fn jacobi_residual_with(basis: &LieBasis, trials: usize, exec: Exec) -> f64 {
    let n = basis.algebra_dim();
    if n == 0 {
        return 0.0;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 0x1ac0b1);
    let triples: Vec<[usize; 3]> = (0..trials)
        .map(|_| [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)])
        .collect();
    let b = &basis.basis;
    exec.map(&triples, |&[x, y, z]| jacobi_defect(&b[x], &b[y], &b[z]))
        .into_iter()
        .fold(0.0, f64::max)
}

pub(crate) fn jacobi_defect(x: &ComplexMatrix, y: &ComplexMatrix, z: &ComplexMatrix) -> f64 {
    let c = |p: &ComplexMatrix, q: &ComplexMatrix| commutator(p, q).expect("equal dims");
    let sum = &(&c(x, &c(y, z)) + &c(y, &c(z, x))) + &c(z, &c(x, y));
    sum.frobenius_norm()
}

/// Real-orthonormal Hermitian basis of the compact form, built from
/// `{B + B†, i(B − B†)}` over the complex basis.
pub fn hermitian_basis(basis: &LieBasis) -> Vec<ComplexMatrix> {
    let mut out: Vec<ComplexMatrix> = Vec::new();
    let thr = 1e-8;
    for b in &basis.basis {
        let bd = dagger(b);
        for cand in [b + &bd, (b - &bd).scale(I)] {
            let mut r = cand;
            for _ in 0..2 {
                for h in &out {
                    let c = hs_inner(h, &r).expect("equal dims").re;
                    r = &r - &h.scale_real(c);
                }
            }
            let norm = r.frobenius_norm();
            if norm > thr {
                out.push(r.scale_real(norm.recip()));
            }
        }
    }
    out
}

/// Outcome of the su(s+1) verification at one cutoff.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuNReport {
    pub s: usize,
    pub expected_dim: usize,
    pub found_dim: usize,
    /// Real dimension of the Hermitian (compact) form of the span.
    pub hermitian_dim: usize,
    pub traceless_ok: bool,
    pub max_trace: f64,
    pub jacobi_residual: f64,
    pub unitarity_residual: f64,
    pub det_residual: f64,
    pub samples: usize,
    pub tolerance: f64,
    pub pass: bool,
}

pub fn verify_su_n(s: Cutoff, basis: &LieBasis, samples: usize) -> SuNReport {
    verify_su_n_with(s, basis, samples, GROUP_TOL, Exec::default())
}

/// Checks dimension, tracelessness, Jacobi, and that `U = exp(iG)` is
/// special unitary for `samples` random Hermitian `G` from the compact form.
pub fn verify_su_n_with(
    s: Cutoff,
    basis: &LieBasis,
    samples: usize,
    tol: f64,
    exec: Exec,
) -> SuNReport {
    let expected_dim = s.dim() * s.dim() - 1;
    let max_trace = basis.max_trace();
    let traceless_ok = max_trace <= 1e-10;
    let jacobi = jacobi_residual_with(basis, 100, exec);
    let herm = hermitian_basis(basis);
    let (unitarity, det) = sample_group_elements(&herm, samples, exec);
    let pass = basis.algebra_dim() == expected_dim
        && herm.len() == expected_dim
        && traceless_ok
        && jacobi <= tol
        && unitarity <= tol
        && det <= tol;
    SuNReport {
        s: s.s(),
        expected_dim,
        found_dim: basis.algebra_dim(),
        hermitian_dim: herm.len(),
        traceless_ok,
        max_trace,
        jacobi_residual: jacobi,
        unitarity_residual: unitarity,
        det_residual: det,
        samples,
        tolerance: tol,
        pass,
    }
}

/// Random real combinations `G = Σ c_i H_i`, `c_i ~ U[-1, 1]`, of a
/// Hermitian basis. Returns the worst `‖U†U − I‖_F` and `|det U − 1|`.
pub fn sample_group_elements(herm: &[ComplexMatrix], samples: usize, exec: Exec) -> (f64, f64) {
    if herm.is_empty() || samples == 0 {
        return (0.0, 0.0);
    }
    let n = herm[0].dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let coeffs: Vec<Vec<f64>> = (0..samples)
        .map(|_| herm.iter().map(|_| rng.gen_range(-1.0..=1.0)).collect())
        .collect();
    let results = exec.map(&coeffs, |cs| {
        let mut g = ComplexMatrix::zeros(n);
        for (c, h) in cs.iter().zip(herm) {
            g = &g + &h.scale_real(*c);
        }
        let u = matrix_exp(&g.scale(I)).expect("finite generator");
        let unitarity = (&(&dagger(&u) * &u) - &ComplexMatrix::identity(n)).frobenius_norm();
        let det = (determinant(&u) - ONE).norm();
        (unitarity, det)
    });
    results
        .into_iter()
        .fold((0.0, 0.0), |(a, b), (u, d)| (f64::max(a, u), f64::max(b, d)))
}
