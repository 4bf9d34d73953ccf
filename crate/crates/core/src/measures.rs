//! Coherence and discord functionals of states and channels.
//!
//! The channel coherence used throughout is the quantum-incoherent relative
//! entropy of coherence of the Choi state,
//! `C_QI(Λ) = S(Δ^S(Ω)) − S(Ω)`, which splits as
//! `C_QI = C_r(ρ_S) + D^{A|S}(Ω)`. For qubits the full-basis REC of the
//! Choi state splits as `C_r(Ω) = C_r(ρ_S) + C_r(ρ_A) + D(Ω)`.

use std::cmp::Ordering;

use crate::channels::{ChoiState, KrausChannel};
use crate::error::{Error, Result};
use crate::qmat::{dephase, mutual_information, von_neumann_entropy, DensityMatrix, Subsystem};

/// Analytic identities are checked at this level.
pub const IDENTITY_TOL: f64 = 1e-8;
/// Beyond this residual an identity failure is reported as an error.
pub const IDENTITY_FAILURE: f64 = 1e-6;
/// Default threshold for a step to count as a rise.
pub const RISE_TOL: f64 = 1e-9;

/// Relative entropy of coherence `S(ρ^d) − S(ρ)`.
pub fn rec(rho: &DensityMatrix) -> f64 {
    von_neumann_entropy(&dephase(rho)) - von_neumann_entropy(rho)
}

/// QI REC of a channel, evaluated on its Choi state.
pub fn qi_rec(ch: &KrausChannel) -> f64 {
    qi_rec_choi(&ch.choi())
}

pub fn qi_rec_choi(omega: &ChoiState) -> f64 {
    von_neumann_entropy(omega.dephase_s().state()) - von_neumann_entropy(omega.state())
}

/// Basis-dependent asymmetric discord `I(Ω) − I(Δ^S(Ω))`.
pub fn asym_discord(omega: &ChoiState) -> f64 {
    let label = omega.label();
    let before = mutual_information(omega.state(), label).expect("label matches");
    let after = mutual_information(omega.dephase_s().state(), label).expect("label matches");
    before - after
}

/// Basis-dependent symmetric discord `I(Ω) − I(Ω^d)`, `Ω^d` dephased on both
/// factors.
pub fn sym_discord(omega: &ChoiState) -> f64 {
    let label = omega.label();
    let before = mutual_information(omega.state(), label).expect("label matches");
    let after = mutual_information(&dephase(omega.state()), label).expect("label matches");
    before - after
}

/// REC of the Choi state as a plain `d²`-dimensional state.
pub fn rec_choi(omega: &ChoiState) -> f64 {
    rec(omega.state())
}

/// Every measure of a channel together with its classification.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceReport {
    pub dim: usize,
    /// `C_r(ρ_S)` of the output marginal.
    pub rec_output_marginal: f64,
    /// `C_r(ρ_A)`; zero for every trace-preserving channel.
    pub rec_ancilla_marginal: f64,
    pub qi_rec: f64,
    pub asym_discord: f64,
    pub sym_discord: f64,
    pub rec_choi: f64,
    pub unital: bool,
    pub incoherent_kraus: bool,
    pub coherence_breaking: bool,
    /// `|C_QI − C_r(ρ_S) − D^{A|S}|`.
    pub asym_residual: f64,
    /// `|C_r(Ω) − C_r(ρ_S) − C_r(ρ_A) − D|`; only checked for qubits.
    pub sym_residual: f64,
}

/// Computes a [`CoherenceReport`] and checks both decomposition identities.
///
/// A residual above [`IDENTITY_FAILURE`] means the numerics are broken and is
/// returned as [`Error::InternalConsistency`].
pub fn decomposition_check(ch: &KrausChannel) -> Result<CoherenceReport> {
    let omega = ch.choi();
    let rho_s = omega.marginal(Subsystem::S);
    let rho_a = omega.marginal(Subsystem::A);
    let report = CoherenceReport {
        dim: ch.dim(),
        rec_output_marginal: rec(&rho_s),
        rec_ancilla_marginal: rec(&rho_a),
        qi_rec: qi_rec_choi(&omega),
        asym_discord: asym_discord(&omega),
        sym_discord: sym_discord(&omega),
        rec_choi: rec_choi(&omega),
        unital: ch.is_unital(IDENTITY_TOL),
        incoherent_kraus: ch.is_incoherent_kraus(IDENTITY_TOL),
        coherence_breaking: omega.is_s_incoherent(IDENTITY_TOL),
        asym_residual: 0.0,
        sym_residual: 0.0,
    };
    let asym_residual = (report.qi_rec - report.rec_output_marginal - report.asym_discord).abs();
    let sym_residual = (report.rec_choi
        - report.rec_output_marginal
        - report.rec_ancilla_marginal
        - report.sym_discord)
        .abs();
    if asym_residual > IDENTITY_FAILURE {
        return Err(Error::InternalConsistency {
            what: "C_QI = C_r(rho_S) + D^{A|S}",
            residual: asym_residual,
        });
    }
    if ch.dim() == 2 && sym_residual > IDENTITY_FAILURE {
        return Err(Error::InternalConsistency {
            what: "C_r(Omega) = C_r(rho_S) + C_r(rho_A) + D",
            residual: sym_residual,
        });
    }
    Ok(CoherenceReport {
        asym_residual,
        sym_residual,
        ..report
    })
}

/// A maximal run of consecutive sample indices `start..=end` along which the
/// coherence rises at every step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RisingInterval {
    pub start: usize,
    pub end: usize,
}

/// Maximal runs where `values[k + 1] > values[k] + rise_tol`.
pub fn rising_intervals(values: &[f64], rise_tol: f64) -> Vec<RisingInterval> {
    let mut out: Vec<RisingInterval> = Vec::new();
    for k in 1..values.len() {
        if values[k] > values[k - 1] + rise_tol {
            match out.last_mut() {
                Some(last) if last.end == k - 1 => last.end = k,
                _ => out.push(RisingInterval {
                    start: k - 1,
                    end: k,
                }),
            }
        }
    }
    out
}

/// Non-Markovianity witness: QI REC is non-increasing under divisible
/// incoherent dynamics, so every rise along the sampled trajectory witnesses
/// non-divisibility. An empty result is inconclusive.
pub fn monotonicity_witness(
    trajectory: &[(f64, ChoiState)],
    rise_tol: f64,
) -> Result<Vec<RisingInterval>> {
    if let Some(index) = trajectory
        .windows(2)
        .position(|w| w[1].0.partial_cmp(&w[0].0) != Some(Ordering::Greater))
    {
        return Err(Error::UnorderedTimes { index: index + 1 });
    }
    let values: Vec<f64> = trajectory
        .iter()
        .map(|(_, omega)| qi_rec_choi(omega))
        .collect();
    Ok(rising_intervals(&values, rise_tol))
}
