//! Generalized Gell-Mann matrices and the su(3) basis assembled from the
//! `s = 2` oscillator generators.

use serde::Serialize;

use crate::error::{PbError, Result};
use crate::matrix::{commutator, dagger, hs_inner, trace, ComplexMatrix, C64, I, ONE};
use crate::operators::OperatorSet;

/// Hermitian, traceless basis of su(n) normalized to `tr(λ_i λ_j) = 2δ_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct GellMannBasis {
    pub n: usize,
    pub matrices: Vec<ComplexMatrix>,
    /// Set when `λ_8` was completed as `A/√3` rather than read off a formula.
    pub lambda8_reconstructed: bool,
}

impl GellMannBasis {
    pub const NORMALIZATION: &'static str = "tr=2delta";
    pub const ORDERING: &'static str =
        "for k in 1..n: (sym(j,k), antisym(j,k)) for j < k, then diag(l=k)";

    /// Worst violation of Hermiticity, tracelessness and `tr(λ_i λ_j) = 2δ_ij`.
    pub fn defects(&self) -> (f64, f64, f64) {
        let herm = self
            .matrices
            .iter()
            .map(|m| (m - &dagger(m)).max_abs())
            .fold(0.0, f64::max);
        let tr = self.matrices.iter().map(|m| trace(m).norm()).fold(0.0, f64::max);
        let mut ortho: f64 = 0.0;
        for (i, x) in self.matrices.iter().enumerate() {
            for (j, y) in self.matrices.iter().enumerate() {
                let want = if i == j { 2.0 } else { 0.0 };
                let got = hs_inner(x, y).expect("same n");
                ortho = ortho.max((got - C64::new(want, 0.0)).norm());
            }
        }
        (herm, tr, ortho)
    }

    /// `f_ijk` from `[λ_i, λ_j] = 2i Σ_k f_ijk λ_k`, zero-based indices.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> f64 {
        let br = commutator(&self.matrices[i], &self.matrices[j]).expect("same n");
        let c = hs_inner(&self.matrices[k], &br).expect("same n");
        (c / C64::new(0.0, 4.0)).re
    }
}

/// Standard generalized Gell-Mann set for su(n), `n >= 2`.
///
/// For `n = 3` the order is the conventional `λ_1 … λ_8`.
pub fn standard_gellmann(n: usize) -> Result<GellMannBasis> {
    if n < 2 {
        return Err(PbError::invalid(format!("Gell-Mann basis needs n >= 2, got {n}")));
    }
    let mut matrices = Vec::with_capacity(n * n - 1);
    for k in 1..n {
        for j in 0..k {
            matrices.push(
                ComplexMatrix::unit(n, j, k, ONE) + ComplexMatrix::unit(n, k, j, ONE),
            );
            matrices.push(
                ComplexMatrix::unit(n, j, k, -I) + ComplexMatrix::unit(n, k, j, I),
            );
        }
        let l = k as f64;
        let norm = (2.0 / (l * (l + 1.0))).sqrt();
        let mut d = vec![0.0; n];
        d[..k].iter_mut().for_each(|x| *x = norm);
        d[k] = -l * norm;
        matrices.push(ComplexMatrix::real_diag(&d));
    }
    Ok(GellMannBasis {
        n,
        matrices,
        lambda8_reconstructed: false,
    })
}

/// `λ_1 … λ_8` written as combinations of the `s = 2` generators.
///
/// `λ_8` has no usable defining formula and is taken as `A/√3`, the only
/// traceless diagonal completion consistent with the other seven.
pub fn oscillator_lambda_su3(ops: &OperatorSet) -> Result<GellMannBasis> {
    if ops.s.s() != 2 {
        return Err(PbError::invalid(format!(
            "su(3) construction needs s = 2, got s = {}",
            ops.s.s()
        )));
    }
    let r2 = 2f64.sqrt();
    let (a, ad, m, md) = (&ops.a, &ops.a_dag, &ops.m, &ops.m_dag);
    let l1 = &(a + ad) + &(m + md).scale_real(r2);
    let l2 = (&(ad - a) + &(md - m).scale_real(r2)).scale(I);
    let l3 = &ops.deficit + &ops.k.scale_real(2.0);
    let l4 = &ops.f + &ops.f_dag;
    let l5 = (&ops.f_dag - &ops.f).scale(I);
    let l6 = -(m + md);
    let l7 = (md - m).scale(-I);
    let l8 = ops.deficit.scale_real(3f64.sqrt().recip());
    Ok(GellMannBasis {
        n: 3,
        matrices: vec![l1, l2, l3, l4, l5, l6, l7, l8],
        lambda8_reconstructed: true,
    })
}

/// Entrywise comparison of two bases of the same size.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BasisMatch {
    /// Max absolute entry difference, one per matrix (index 0 is λ_1).
    pub per_index: Vec<f64>,
    /// One-based indices that exceed the tolerance.
    pub failed: Vec<usize>,
    pub tolerance: f64,
    pub pass: bool,
}

pub const MATCH_TOL: f64 = 1e-12;

pub fn basis_match(a: &GellMannBasis, b: &GellMannBasis, tol: f64) -> Result<BasisMatch> {
    if a.n != b.n || a.matrices.len() != b.matrices.len() {
        return Err(PbError::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    let per_index: Vec<f64> = a
        .matrices
        .iter()
        .zip(&b.matrices)
        .map(|(x, y)| (x - y).max_abs())
        .collect();
    let failed: Vec<usize> = per_index
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_nan() || **d > tol)
        .map(|(i, _)| i + 1)
        .collect();
    Ok(BasisMatch {
        pass: failed.is_empty(),
        per_index,
        failed,
        tolerance: tol,
    })
}
