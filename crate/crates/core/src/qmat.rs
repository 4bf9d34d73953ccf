//! Dense complex matrices, validated density matrices and the entropy
//! functionals built on them.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default absolute tolerance for validation and eigenvalue clipping.
pub const DEFAULT_TOL: f64 = 1e-10;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// A dense `dim × dim` complex matrix with `dim >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix(DMatrix<Complex64>);

impl SquareMatrix {
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() || m.nrows() == 0 {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        Ok(Self(m))
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Self::new(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        let c: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_rows(dim, &c)
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(DMatrix::zeros(dim, dim))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let v = DVector::from_iterator(diag.len(), diag.iter().map(|&x| Complex64::new(x, 0.0)));
        Self(DMatrix::from_diagonal(&v))
    }

    /// The projector `|ψ⟩⟨ψ|` (not normalized).
    pub fn outer(psi: &[Complex64]) -> Self {
        let v = DVector::from_column_slice(psi);
        Self(&v * v.adjoint())
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self(self.0.scale(factor))
    }

    /// Kronecker product `self ⊗ rhs`; `self` is the left (slow) factor.
    pub fn kron(&self, rhs: &SquareMatrix) -> Self {
        Self(self.0.kronecker(&rhs.0))
    }

    /// Largest entry of `|M − M†|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn frobenius_distance(&self, other: &SquareMatrix) -> f64 {
        (&self.0 - &other.0).norm()
    }

    /// Largest modulus of an off-diagonal entry.
    pub fn max_off_diagonal(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.0[(i, j)].norm());
                }
            }
        }
        worst
    }

    fn hermitian_part(&self) -> DMatrix<Complex64> {
        (&self.0 + self.0.adjoint()).scale(0.5)
    }
}

impl std::ops::Mul for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        SquareMatrix(&self.0 * &rhs.0)
    }
}

/// Ascending eigenvalues of a Hermitian matrix.
///
/// Fails if `m` deviates from Hermiticity by more than `tol`. The returned
/// values are not clipped; entropy routines clip `[-tol, 0)` to zero.
pub fn hermitian_eigenvalues(m: &SquareMatrix, tol: f64) -> Result<Vec<f64>> {
    let deviation = m.hermitian_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation, tol });
    }
    Ok(eigen_sorted(m.hermitian_part()).0)
}

/// Ascending eigenpairs of a (pre-symmetrized) Hermitian matrix. Column `k`
/// of the returned matrix is the eigenvector for the `k`-th eigenvalue.
pub(crate) fn eigen_sorted(h: DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let eig = h.symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

/// Shannon entropy in bits of a spectrum, with `0 log 0 = 0`. Negative
/// entries (round-off below zero) contribute nothing.
pub fn spectrum_entropy(values: &[f64]) -> f64 {
    values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum()
}

/// A validated quantum state: Hermitian, positive semidefinite and of unit
/// trace, each within its own absolute tolerance.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    matrix: SquareMatrix,
    tol: f64,
    spectrum: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(matrix: SquareMatrix) -> Result<Self> {
        Self::with_tolerance(matrix, DEFAULT_TOL)
    }

    pub fn with_tolerance(matrix: SquareMatrix, tol: f64) -> Result<Self> {
        let deviation = matrix.hermitian_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation, tol });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > tol {
            return Err(Error::TraceNotOne { trace, tol });
        }
        let hermitian = matrix.hermitian_part();
        let (mut spectrum, _) = eigen_sorted(hermitian.clone());
        if let Some(&lowest) = spectrum.first() {
            if lowest < -tol {
                return Err(Error::NotPositive {
                    eigenvalue: lowest,
                    tol,
                });
            }
        }
        for v in spectrum.iter_mut() {
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        Ok(Self {
            matrix: SquareMatrix(hermitian),
            tol,
            spectrum,
        })
    }

    /// Normalized pure state `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        Self::new(SquareMatrix::outer(psi).scale(1.0 / norm2))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::new(SquareMatrix::identity(dim).scale(1.0 / dim as f64))
            .expect("I/d is a valid state")
    }

    pub fn diagonal(probabilities: &[f64]) -> Result<Self> {
        Self::new(SquareMatrix::from_real_diagonal(probabilities))
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    /// Ascending eigenvalues, negatives clipped to zero.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.matrix.get(row, col)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.matrix.max_off_diagonal() <= tol
    }

    /// Revalidates `m` with this state's tolerance.
    fn derive(&self, m: DMatrix<Complex64>) -> Result<Self> {
        Self::with_tolerance(SquareMatrix(m), self.tol)
    }
}

/// Labels a matrix as living on `A ⊗ S`, `A` being the left factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteLabel {
    pub dim_a: usize,
    pub dim_s: usize,
}

impl BipartiteLabel {
    pub fn new(dim_a: usize, dim_s: usize) -> Self {
        Self { dim_a, dim_s }
    }

    /// Label for a Choi state of a `d`-dimensional channel.
    pub fn symmetric(d: usize) -> Self {
        Self::new(d, d)
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_s
    }

    pub fn index(&self, a: usize, s: usize) -> usize {
        a * self.dim_s + s
    }

    pub(crate) fn check(&self, dim: usize) -> Result<()> {
        if self.total() != dim || self.dim_a == 0 || self.dim_s == 0 {
            return Err(Error::DimensionMismatch {
                expected: self.total(),
                found: dim,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    S,
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    spectrum_entropy(rho.eigenvalues())
}

/// `tr[ρ(log₂ρ − log₂σ)]`, or `+∞` if `ρ` has weight above `σ`'s tolerance
/// on the kernel of `σ`.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let tol = sigma.tolerance();
    let (mu, w) = eigen_sorted(sigma.matrix().0.clone());
    let r = rho.matrix().matrix();
    let mut cross = 0.0;
    for (k, &m) in mu.iter().enumerate() {
        let wk = w.column(k);
        let weight = (wk.adjoint() * r * wk)[(0, 0)].re;
        if m < tol {
            if weight > tol {
                return Ok(f64::INFINITY);
            }
            continue;
        }
        cross += weight * m.log2();
    }
    Ok(-von_neumann_entropy(rho) - cross)
}

/// Dephasing in the computational basis: `ρ^d = Σ_i |i⟩⟨i|ρ|i⟩⟨i|`.
pub fn dephase(rho: &DensityMatrix) -> DensityMatrix {
    let m = rho.matrix().matrix();
    let n = rho.dim();
    let d = DMatrix::from_fn(n, n, |i, j| if i == j { m[(i, i)] } else { ZERO });
    rho.derive(d).expect("dephasing preserves validity")
}

/// `Δ^S(Ω) = Σ_i (I ⊗ |i⟩⟨i|) Ω (I ⊗ |i⟩⟨i|)`: zeroes every entry whose two
/// `S` indices differ.
pub fn dephase_s(omega: &DensityMatrix, label: BipartiteLabel) -> Result<DensityMatrix> {
    label.check(omega.dim())?;
    let m = omega.matrix().matrix();
    let ds = label.dim_s;
    let n = omega.dim();
    let d = DMatrix::from_fn(n, n, |r, c| if r % ds == c % ds { m[(r, c)] } else { ZERO });
    Ok(omega.derive(d).expect("S-dephasing preserves validity"))
}

/// Reduced state on the `keep` factor.
pub fn partial_trace(
    rho: &DensityMatrix,
    label: BipartiteLabel,
    keep: Subsystem,
) -> Result<DensityMatrix> {
    label.check(rho.dim())?;
    let m = rho.matrix().matrix();
    let (da, ds) = (label.dim_a, label.dim_s);
    let reduced = match keep {
        Subsystem::A => DMatrix::from_fn(da, da, |a, b| {
            (0..ds)
                .map(|s| m[(label.index(a, s), label.index(b, s))])
                .sum()
        }),
        Subsystem::S => DMatrix::from_fn(ds, ds, |s, t| {
            (0..da)
                .map(|a| m[(label.index(a, s), label.index(a, t))])
                .sum()
        }),
    };
    rho.derive(reduced)
}

/// `S(ρ_A) + S(ρ_S) − S(ρ_AS)` in bits.
pub fn mutual_information(rho: &DensityMatrix, label: BipartiteLabel) -> Result<f64> {
    let a = partial_trace(rho, label, Subsystem::A)?;
    let s = partial_trace(rho, label, Subsystem::S)?;
    Ok(von_neumann_entropy(&a) + von_neumann_entropy(&s) - von_neumann_entropy(rho))
}
