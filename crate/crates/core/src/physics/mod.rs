//! The two worked channel families.

pub mod amplitude_damping;
pub mod phase_covariant;

pub use amplitude_damping::{ad_channel, ad_coherence_closed_form, AmplitudeDampingParams};
pub use phase_covariant::{
    gamma_z_closed_form, gamma_z_rate, lorentzian_c, phase_covariant_coherence_closed_form,
    phase_covariant_frame, phase_covariant_trajectory, PhaseCovariantFrame, PhaseCovariantParams,
    Trajectory,
};

/// `x log₂ x` with the continuous extension `0 log 0 = 0`.
pub(crate) fn xlog2x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}
