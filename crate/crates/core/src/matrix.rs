//! Dense complex square matrices and the handful of primitives the rest of
//! the crate is built from: brackets, adjoint, trace, Hilbert-Schmidt inner
//! product, Kronecker product, exponential, determinant and the Hermitian
//! eigenvalue problem.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

use crate::error::{PbError, Result};

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);
pub(crate) const I: C64 = C64::new(0.0, 1.0);

/// Square matrix of `f64` complex scalars stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be >= 1");
        ComplexMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged, empty or non-finite input.
    pub fn from_rows(rows: Vec<Vec<C64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(PbError::NotSquare {
                rows: 0,
                row: 0,
                cols: 0,
            });
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(PbError::NotSquare {
                    rows: n,
                    row: i,
                    cols: row.len(),
                });
            }
            data.extend(row);
        }
        let m = ComplexMatrix { dim: n, data };
        m.ensure_finite("matrix")?;
        Ok(m)
    }

    /// Real-valued rows; convenient for tests and fixed tables.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn diag(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = *v;
        }
        m
    }

    pub fn real_diag(values: &[f64]) -> Self {
        let v: Vec<C64> = values.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    /// Matrix unit `E_{r,c}` scaled by `value`.
    pub fn unit(dim: usize, r: usize, c: usize, value: C64) -> Self {
        let mut m = Self::zeros(dim);
        m[(r, c)] = value;
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.dim).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub(crate) fn ensure_finite(&self, what: &'static str) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(PbError::NonFinite(what))
        }
    }

    pub fn scale(&self, k: C64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * k).collect(),
        }
    }

    pub fn scale_real(&self, k: f64) -> Self {
        self.scale(C64::new(k, 0.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|z| **z != ZERO).count()
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        same_dim(self, other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                let orow = &mut out.data[i * n..(i + 1) * n];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub fn apply(&self, v: &ComplexVector) -> Result<ComplexVector> {
        if v.dim() != self.dim {
            return Err(PbError::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let n = self.dim;
        let out = (0..n)
            .map(|r| self.row(r).iter().zip(v.as_slice()).map(|(a, b)| a * b).sum())
            .collect();
        Ok(ComplexVector::new(out))
    }

    /// Principal submatrix on the given ordered index set.
    pub fn compress(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |r, c| self[(indices[r], indices[c])])
    }

    /// `P X P` for the coordinate projector `P` onto `indices`, kept at full size.
    pub fn project(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(self.dim);
        for &r in indices {
            for &c in indices {
                out[(r, c)] = self[(r, c)];
            }
        }
        out
    }

    pub fn hermiticity_defect(&self) -> f64 {
        (self - &dagger(self)).frobenius_norm()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

macro_rules! entrywise {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                ComplexMatrix {
                    dim: self.dim,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| a $op b).collect(),
                }
            }
        }
        impl $tr<ComplexMatrix> for ComplexMatrix {
            type Output = ComplexMatrix;
            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                (&self).$method(&rhs)
            }
        }
    };
}

entrywise!(Add, add, +);
entrywise!(Sub, sub, -);

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;
    /// Panics on dimension mismatch; use [`ComplexMatrix::matmul`] for a checked product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

impl Mul<ComplexMatrix> for ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        self.scale_real(-1.0)
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;
    fn neg(self) -> ComplexMatrix {
        -&self
    }
}

/// Column vector of complex amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexVector {
    data: Vec<C64>,
}

impl ComplexVector {
    pub fn new(data: Vec<C64>) -> Self {
        assert!(!data.is_empty(), "vector dimension must be >= 1");
        ComplexVector { data }
    }

    /// Standard basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut data = vec![ZERO; dim];
        data[i] = ONE;
        Self::new(data)
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &Self) -> C64 {
        self.data.iter().zip(&other.data).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Index<usize> for ComplexVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.data[i]
    }
}

fn same_dim(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<()> {
    if x.dim != y.dim {
        Err(PbError::DimensionMismatch {
            left: x.dim,
            right: y.dim,
        })
    } else {
        Ok(())
    }
}

/// `XY - YX`.
pub fn commutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    same_dim(x, y)?;
    Ok(&x.mul_unchecked(y) - &y.mul_unchecked(x))
}

/// `XY + YX`.
pub fn anticommutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    same_dim(x, y)?;
    Ok(&x.mul_unchecked(y) + &y.mul_unchecked(x))
}

/// Conjugate transpose.
pub fn dagger(x: &ComplexMatrix) -> ComplexMatrix {
    ComplexMatrix::from_fn(x.dim, |r, c| x[(c, r)].conj())
}

pub fn trace(x: &ComplexMatrix) -> C64 {
    (0..x.dim).map(|i| x[(i, i)]).sum()
}

/// Hilbert-Schmidt inner product `tr(X† Y)`.
pub fn hs_inner(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<C64> {
    same_dim(x, y)?;
    Ok(x.data.iter().zip(&y.data).map(|(a, b)| a.conj() * b).sum())
}

/// Kronecker product; `X` indexes the outer (slow) factor.
pub fn kron(x: &ComplexMatrix, y: &ComplexMatrix) -> ComplexMatrix {
    let (p, q) = (x.dim, y.dim);
    ComplexMatrix::from_fn(p * q, |r, c| x[(r / q, c / q)] * y[(r % q, c % q)])
}

const EXP_TAYLOR_NORM: f64 = 0.25;
const EXP_MAX_TERMS: usize = 40;

/// Matrix exponential by scaling and squaring around a truncated Taylor
/// series. The argument is scaled so its Frobenius norm is at most 1/4,
/// where the series converges to machine precision in under 20 terms.
pub fn matrix_exp(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.ensure_finite("matrix_exp input")?;
    let n = x.dim;
    let norm = x.frobenius_norm();
    let squarings = if norm > EXP_TAYLOR_NORM {
        (norm / EXP_TAYLOR_NORM).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x.scale_real(2f64.powi(-squarings));

    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for j in 1..=EXP_MAX_TERMS {
        term = term.mul_unchecked(&scaled).scale_real(1.0 / j as f64);
        sum = &sum + &term;
        if term.frobenius_norm() <= f64::EPSILON * 1e-3 * sum.frobenius_norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.mul_unchecked(&sum);
    }
    sum.ensure_finite("matrix_exp result")?;
    Ok(sum)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(x: &ComplexMatrix) -> C64 {
    let n = x.dim;
    let mut a = x.data.clone();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].norm().total_cmp(&a[j * n + col].norm()))
            .expect("non-empty range");
        let p = a[pivot * n + col];
        if p == ZERO {
            return ZERO;
        }
        if pivot != col {
            for c in 0..n {
                a.swap(pivot * n + c, col * n + c);
            }
            det = -det;
        }
        det *= p;
        for r in col + 1..n {
            let f = a[r * n + col] / p;
            if f == ZERO {
                continue;
            }
            for c in col..n {
                let v = a[col * n + c];
                a[r * n + c] -= f * v;
            }
        }
    }
    det
}

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Ascending, with multiplicity.
    pub values: Vec<f64>,
    /// Column `j` is the eigenvector for `values[j]`.
    pub vectors: ComplexMatrix,
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Each pivot `(p, q)` is first made real by a diagonal phase on column `q`,
/// then annihilated by a real plane rotation.
pub fn eigh(x: &ComplexMatrix) -> Result<HermitianEigen> {
    x.ensure_finite("eigh input")?;
    let n = x.dim;
    let defect = x.hermiticity_defect();
    if defect > 1e-10 * x.frobenius_norm().max(1.0) {
        return Err(PbError::NotHermitian { deviation: defect });
    }
    // symmetrize so rounding in the input does not leak into the rotations
    let mut a = (x + &dagger(x)).scale_real(0.5);
    let mut v = ComplexMatrix::identity(n);
    let scale = a.frobenius_norm();

    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|r| (0..n).filter(move |&c| c != r).map(move |c| (r, c)))
            .map(|(r, c)| a[(r, c)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= f64::EPSILON * 1e-2 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // phase: column q *= e^{-iφ}, row q *= e^{iφ}
                let phase = apq / mag;
                let pc = phase.conj();
                for r in 0..n {
                    a[(r, q)] *= pc;
                    v[(r, q)] *= pc;
                }
                for c in 0..n {
                    a[(q, c)] *= phase;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..n {
                    let (xp, xq) = (a[(r, p)], a[(r, q)]);
                    a[(r, p)] = xp * c - xq * s;
                    a[(r, q)] = xp * s + xq * c;
                    let (vp, vq) = (v[(r, p)], v[(r, q)]);
                    v[(r, p)] = vp * c - vq * s;
                    v[(r, q)] = vp * s + vq * c;
                }
                for col in 0..n {
                    let (xp, xq) = (a[(p, col)], a[(q, col)]);
                    a[(p, col)] = xp * c - xq * s;
                    a[(q, col)] = xp * s + xq * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Real spectrum of a Hermitian matrix in ascending order.
pub fn eigenvalues_hermitian(x: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(eigh(x)?.values)
}
