//! Channel representations and the classification predicates built on them.

use nalgebra::{DMatrix, Matrix3, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmat::{
    dephase_s, eigen_sorted, partial_trace, BipartiteLabel, DensityMatrix, SquareMatrix, Subsystem,
    DEFAULT_TOL,
};

/// A CPTP map given by Kraus operators `Λ(ρ) = Σ_i K_i ρ K_i†`.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim: usize,
    operators: Vec<SquareMatrix>,
    tol: f64,
}

impl KrausChannel {
    pub fn new(operators: Vec<SquareMatrix>) -> Result<Self> {
        Self::with_tolerance(operators, DEFAULT_TOL)
    }

    /// Accepts the set if `‖Σ K†K − I‖_F ≤ tol · d`.
    pub fn with_tolerance(operators: Vec<SquareMatrix>, tol: f64) -> Result<Self> {
        let dim = operators.first().ok_or(Error::EmptyKraus)?.dim();
        if let Some(bad) = operators.iter().find(|k| k.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        let mut sum = DMatrix::<Complex64>::zeros(dim, dim);
        for k in &operators {
            sum += k.matrix().adjoint() * k.matrix();
        }
        let residual = (sum - DMatrix::identity(dim, dim)).norm();
        let bound = tol * dim as f64;
        if residual > bound {
            return Err(Error::IncompleteKraus { residual, bound });
        }
        Ok(Self {
            dim,
            operators,
            tol,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(vec![SquareMatrix::identity(dim)]).expect("identity is complete")
    }

    pub fn unitary(u: SquareMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    /// Completely dephasing channel with Kraus set `{|i⟩⟨i|}`.
    pub fn completely_dephasing(dim: usize) -> Self {
        let ops = (0..dim)
            .map(|i| {
                let mut diag = vec![0.0; dim];
                diag[i] = 1.0;
                SquareMatrix::from_real_diagonal(&diag)
            })
            .collect();
        Self::new(ops).expect("projectors are complete")
    }

    /// `ρ ↦ I/d` with Kraus set `{|i⟩⟨j| / √d}`.
    pub fn completely_depolarizing(dim: usize) -> Self {
        let scale = 1.0 / (dim as f64).sqrt();
        let mut ops = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut m = DMatrix::zeros(dim, dim);
                m[(i, j)] = Complex64::new(scale, 0.0);
                ops.push(SquareMatrix::new(m).unwrap());
            }
        }
        Self::new(ops).expect("depolarizing set is complete")
    }

    /// Measure in the computational basis and prepare `prepared[i]` on
    /// outcome `i`. Each prepared state is given by its diagonal.
    pub fn measure_and_prepare(prepared: &[Vec<f64>]) -> Result<Self> {
        let dim = prepared.len();
        let mut ops = Vec::new();
        for (i, probs) in prepared.iter().enumerate() {
            if probs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: probs.len(),
                });
            }
            for (k, &p) in probs.iter().enumerate() {
                if p > 0.0 {
                    let mut m = DMatrix::zeros(dim, dim);
                    m[(k, i)] = Complex64::new(p.sqrt(), 0.0);
                    ops.push(SquareMatrix::new(m)?);
                }
            }
        }
        Self::new(ops)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[SquareMatrix] {
        &self.operators
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// Action on an arbitrary (not necessarily Hermitian) operator.
    pub fn apply_matrix(&self, x: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.dim, self.dim);
        for k in &self.operators {
            out += k.matrix() * x * k.matrix().adjoint();
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rho.dim(),
            });
        }
        let out = self.apply_matrix(rho.matrix().matrix());
        DensityMatrix::with_tolerance(SquareMatrix::new(out)?, rho.tolerance().max(self.tol))
    }

    /// `after ∘ self`: first `self`, then `after`.
    pub fn then(&self, after: &KrausChannel) -> Result<KrausChannel> {
        if after.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: after.dim,
            });
        }
        let mut ops = Vec::with_capacity(self.operators.len() * after.operators.len());
        for b in &after.operators {
            for a in &self.operators {
                ops.push(b * a);
            }
        }
        Self::with_tolerance(ops, self.tol.max(after.tol))
    }

    /// Trace-one Choi state `(I ⊗ Λ)(|Ψ⟩⟨Ψ|)`, `|Ψ⟩ = Σ_i |ii⟩/√d`.
    pub fn choi(&self) -> ChoiState {
        let d = self.dim;
        let label = BipartiteLabel::symmetric(d);
        let mut omega = DMatrix::<Complex64>::zeros(d * d, d * d);
        // block (i, j) is Λ(|i⟩⟨j|)/d
        for i in 0..d {
            for j in 0..d {
                let mut eij = DMatrix::zeros(d, d);
                eij[(i, j)] = Complex64::new(1.0, 0.0);
                let block = self.apply_matrix(&eij);
                for s in 0..d {
                    for t in 0..d {
                        omega[(label.index(i, s), label.index(j, t))] = block[(s, t)] / d as f64;
                    }
                }
            }
        }
        let state = DensityMatrix::with_tolerance(
            SquareMatrix::new(omega).expect("square"),
            self.tol.max(DEFAULT_TOL),
        )
        .expect("Choi state of a complete Kraus set is a state");
        ChoiState { state, label }
    }

    /// `ρ_S = Tr_A Ω = (1/d) Σ_i K_i K_i†`.
    pub fn output_marginal(&self) -> DensityMatrix {
        let d = self.dim;
        let mut sum = DMatrix::<Complex64>::zeros(d, d);
        for k in &self.operators {
            sum += k.matrix() * k.matrix().adjoint();
        }
        DensityMatrix::with_tolerance(
            SquareMatrix::new(sum.scale(1.0 / d as f64)).expect("square"),
            self.tol.max(DEFAULT_TOL),
        )
        .expect("output marginal of a complete Kraus set is a state")
    }

    /// `‖Σ K_i K_i† − I‖_F ≤ tol`.
    pub fn is_unital(&self, tol: f64) -> bool {
        let d = self.dim;
        let mut sum = DMatrix::<Complex64>::zeros(d, d);
        for k in &self.operators {
            sum += k.matrix() * k.matrix().adjoint();
        }
        (sum - DMatrix::identity(d, d)).norm() <= tol
    }

    /// Every supplied Kraus operator sends each `|j⟩` to a single basis ray:
    /// at most one entry of modulus `> tol` per column. This tests the given
    /// representation only.
    pub fn is_incoherent_kraus(&self, tol: f64) -> bool {
        let d = self.dim;
        self.operators.iter().all(|k| {
            (0..d).all(|col| (0..d).filter(|&row| k.get(row, col).norm() > tol).count() <= 1)
        })
    }

    /// The Choi state is a fixed point of S-dephasing, `‖Δ^S(Ω) − Ω‖_F ≤ tol`.
    pub fn is_coherence_breaking(&self, tol: f64) -> bool {
        self.choi().is_s_incoherent(tol)
    }
}

/// Choi state on `A ⊗ S` with `dim_a = dim_s = d`.
#[derive(Debug, Clone)]
pub struct ChoiState {
    state: DensityMatrix,
    label: BipartiteLabel,
}

impl ChoiState {
    /// Validates `state` as the Choi state of a CPTP map: a valid density
    /// matrix on `d²` dimensions whose ancilla marginal is `I/d`.
    pub fn new(state: DensityMatrix) -> Result<Self> {
        let n = state.dim();
        let d = (n as f64).sqrt().round() as usize;
        if d * d != n {
            return Err(Error::DimensionMismatch {
                expected: d * d,
                found: n,
            });
        }
        let label = BipartiteLabel::symmetric(d);
        let tol = state.tolerance();
        let marginal = partial_trace(&state, label, Subsystem::A)?;
        let deviation = marginal
            .matrix()
            .frobenius_distance(&SquareMatrix::identity(d).scale(1.0 / d as f64));
        if deviation > tol {
            return Err(Error::ChoiMarginal { deviation, tol });
        }
        Ok(Self { state, label })
    }

    pub fn from_matrix(m: SquareMatrix, tol: f64) -> Result<Self> {
        Self::new(DensityMatrix::with_tolerance(m, tol)?)
    }

    pub fn state(&self) -> &DensityMatrix {
        &self.state
    }

    pub fn label(&self) -> BipartiteLabel {
        self.label
    }

    /// Channel dimension `d`.
    pub fn dim(&self) -> usize {
        self.label.dim_s
    }

    pub fn dephase_s(&self) -> ChoiState {
        ChoiState {
            state: dephase_s(&self.state, self.label).expect("label matches"),
            label: self.label,
        }
    }

    pub fn is_s_incoherent(&self, tol: f64) -> bool {
        self.dephase_s()
            .state
            .matrix()
            .frobenius_distance(self.state.matrix())
            <= tol
    }

    pub fn marginal(&self, keep: Subsystem) -> DensityMatrix {
        partial_trace(&self.state, self.label, keep).expect("label matches")
    }

    /// Reconstructs a Kraus set from the eigendecomposition of `d·Ω`,
    /// keeping eigenpairs above the state tolerance.
    pub fn to_kraus(&self) -> Result<KrausChannel> {
        let d = self.dim();
        let tol = self.state.tolerance();
        let scaled = self.state.matrix().matrix().scale(d as f64);
        let (values, vectors) = eigen_sorted(scaled);
        let mut ops = Vec::new();
        for (k, &mu) in values.iter().enumerate() {
            if mu <= tol {
                continue;
            }
            let root = mu.sqrt();
            // v = Σ_a |a⟩ ⊗ K|a⟩, so K[s][a] = v[a d + s]
            let m = DMatrix::from_fn(d, d, |s, a| vectors[(self.label.index(a, s), k)] * root);
            ops.push(SquareMatrix::new(m)?);
        }
        // completeness inherits the looser of the two tolerances
        KrausChannel::with_tolerance(ops, tol.max(1e-9))
    }
}

/// Pauli matrices σ_x, σ_y, σ_z.
pub fn pauli() -> [DMatrix<Complex64>; 3] {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        DMatrix::from_row_slice(2, 2, &[o, l, l, o]),
        DMatrix::from_row_slice(2, 2, &[o, -i, i, o]),
        DMatrix::from_row_slice(2, 2, &[l, o, o, -l]),
    ]
}

/// Qubit channel in Bloch form `Λ(½(I + r·σ)) = ½(I + (T r + τ)·σ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitAffine {
    pub tau: Vector3<f64>,
    pub t: Matrix3<f64>,
}

impl QubitAffine {
    /// Accepts `(τ, T)` only if the induced map is CPTP.
    pub fn new(tau: Vector3<f64>, t: Matrix3<f64>) -> Result<Self> {
        let q = Self { tau, t };
        q.choi(DEFAULT_TOL)?;
        Ok(q)
    }

    /// `τ_k = tr[σ_k Λ(I/2)]`, `T_kl = tr[σ_k Λ(σ_l/2)]`.
    pub fn from_kraus(ch: &KrausChannel) -> Result<Self> {
        if ch.dim() != 2 {
            return Err(Error::NotQubit { dim: ch.dim() });
        }
        let sigma = pauli();
        let half_id = DMatrix::<Complex64>::identity(2, 2).scale(0.5);
        let center = ch.apply_matrix(&half_id);
        let tau = Vector3::from_fn(|k, _| (&sigma[k] * &center).trace().re);
        let images: Vec<_> = sigma
            .iter()
            .map(|s| ch.apply_matrix(&s.scale(0.5)))
            .collect();
        let t = Matrix3::from_fn(|k, l| (&sigma[k] * &images[l]).trace().re);
        Ok(Self { tau, t })
    }

    /// Bloch vector of the output for input Bloch vector `r`.
    pub fn apply_bloch(&self, r: &Vector3<f64>) -> Vector3<f64> {
        self.t * r + self.tau
    }

    /// Linear extension of the affine action to any 2×2 operator.
    pub fn apply_matrix(&self, x: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let sigma = pauli();
        let tr = x.trace();
        let r: Vec<Complex64> = sigma.iter().map(|s| (s * x).trace()).collect();
        let mut out = DMatrix::<Complex64>::identity(2, 2) * tr;
        for (k, s) in sigma.iter().enumerate() {
            let coeff = self.tau[k] * tr
                + r.iter()
                    .enumerate()
                    .map(|(l, rl)| rl * self.t[(k, l)])
                    .sum::<Complex64>();
            out += s * coeff;
        }
        out.scale(0.5)
    }

    pub fn choi(&self, tol: f64) -> Result<ChoiState> {
        let label = BipartiteLabel::symmetric(2);
        let mut omega = DMatrix::<Complex64>::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                let mut eij = DMatrix::zeros(2, 2);
                eij[(i, j)] = Complex64::new(1.0, 0.0);
                let block = self.apply_matrix(&eij);
                for s in 0..2 {
                    for t in 0..2 {
                        omega[(label.index(i, s), label.index(j, t))] = block[(s, t)] * 0.5;
                    }
                }
            }
        }
        ChoiState::from_matrix(SquareMatrix::new(omega)?, tol)
    }

    /// Singular values of `T`, descending.
    pub fn singular_values(&self) -> [f64; 3] {
        let mut sv: Vec<f64> = self.t.singular_values().iter().copied().collect();
        sv.sort_by(|a, b| b.total_cmp(a));
        [sv[0], sv[1], sv[2]]
    }
}

/// Choi state of the coherence-breaking qubit channel with
/// `τ = (0, 0, τ₃)`, `T = diag(0, 0, λ₃)`.
///
/// In `A ⊗ S` order this is `diag(1+τ₃+λ₃, 1−τ₃−λ₃, 1+τ₃−λ₃, 1−τ₃+λ₃)/4`.
/// Requires `|τ₃| + |λ₃| ≤ 1`.
pub fn cbc_qubit_choi(tau3: f64, lambda3: f64) -> Result<ChoiState> {
    if !(tau3.is_finite() && lambda3.is_finite()) || tau3.abs() + lambda3.abs() > 1.0 + DEFAULT_TOL
    {
        return Err(Error::CbcOutOfRange { tau3, lambda3 });
    }
    let diag = [
        1.0 + tau3 + lambda3,
        1.0 - tau3 - lambda3,
        1.0 + tau3 - lambda3,
        1.0 - tau3 + lambda3,
    ]
    .map(|x| x / 4.0);
    ChoiState::from_matrix(SquareMatrix::from_real_diagonal(&diag), DEFAULT_TOL)
}
