//! Coherence of quantum channels through the Choi–Jamiołkowski isomorphism.
//!
//! A channel is represented by its Kraus set, its trace-one Choi state
//! `Ω = (I ⊗ Λ)(|Ψ⟩⟨Ψ|)`, or (for qubits) by its affine Bloch-space action.
//! On top of those representations the crate computes
//!
//! - the relative entropy of coherence of a state,
//! - the quantum-incoherent relative entropy of coherence (QI REC) of a
//!   channel, `S(Δ^S(Ω)) − S(Ω)`,
//! - basis-dependent asymmetric and symmetric discords of the Choi state,
//! - a monotonicity witness for non-Markovian incoherent dynamics.
//!
//! Two channel families are provided in [`physics`]: amplitude damping and a
//! phase-covariant qubit model driven by a Lorentzian dissipator and an
//! Ohmic-class dephasing bath at zero temperature.
//!
//! Tensor ordering is fixed everywhere to `A ⊗ S`: the ancilla is the left
//! (slow) index, so basis state `|a⟩|s⟩` sits at row `a * dim_s + s`.
//! All entropies are in bits.

#[cfg(test)]
macro_rules! assert_close {
    ($a:expr, $b:expr, $tol:expr) => {{
        let (a, b): (f64, f64) = ($a, $b);
        assert!((a - b).abs() <= $tol, "{} vs {} (tol {:e})", a, b, $tol);
    }};
}

pub mod channels;
pub mod error;
pub mod measures;
pub mod physics;
pub mod qmat;
pub mod random;

pub use channels::{ChoiState, KrausChannel, QubitAffine};
pub use error::{Error, Result};
pub use measures::{CoherenceReport, RisingInterval};
pub use qmat::{BipartiteLabel, DensityMatrix, SquareMatrix, Subsystem, DEFAULT_TOL};

pub use num_complex::Complex64;
