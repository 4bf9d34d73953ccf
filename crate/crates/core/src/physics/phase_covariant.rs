//! Phase-covariant qubit dynamics at zero temperature.
//!
//! Dissipation comes from a Lorentzian reservoir with coupling ratio
//! `R = γ₀/λ`; pure dephasing from a bath with spectral density
//! `J(ω) = α ω^s ω_c^{1−s} e^{−ω/ω_c}`. Time is the dimensionless `λt` and the
//! cutoff enters as `β = ω_c/λ`. The Lamb shift is ignored.
//!
//! With `u(t) = (c(t)/c(0))²` the map is parameterized by
//!
//! ```text
//! Γ = −ln|u|,   κ = |u| − 1,   η_∥ = |u|,   η_⊥ = e^{−Γ/2 − Γ_z}
//! ```
//!
//! and its Choi state in `A ⊗ S` order is
//!
//! ```text
//! | (1+κ+η_∥)/4      0            0         η_⊥/2      |
//! |     0        (1−κ−η_∥)/4      0           0        |
//! |     0            0        (1+κ−η_∥)/4     0        |
//! |   η_⊥/2          0            0      (1−κ+η_∥)/4   |
//! ```

use std::cmp::Ordering;

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::channels::ChoiState;
use crate::error::{Error, Result};
use crate::measures::{monotonicity_witness, qi_rec_choi, RisingInterval, RISE_TOL};
use crate::qmat::{hermitian_eigenvalues, SquareMatrix, DEFAULT_TOL};

use super::xlog2x;

const IMAG_RESIDUE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseCovariantParams {
    /// `R = γ₀/λ`.
    pub coupling_ratio: f64,
    /// Ohmicity `s`.
    pub ohmicity: f64,
    pub alpha: f64,
    /// `β = ω_c/λ`.
    pub beta: f64,
    /// Sample times `λt`.
    pub t_grid: Vec<f64>,
}

impl PhaseCovariantParams {
    pub fn new(
        coupling_ratio: f64,
        ohmicity: f64,
        alpha: f64,
        beta: f64,
        t_grid: Vec<f64>,
    ) -> Result<Self> {
        let params = Self {
            coupling_ratio,
            ohmicity,
            alpha,
            beta,
            t_grid,
        };
        params.validate()?;
        Ok(params)
    }

    /// `steps` evenly spaced times on `[0, t_max]`; a single point if
    /// `t_max == 0`.
    pub fn uniform_grid(t_max: f64, steps: usize) -> Vec<f64> {
        if t_max == 0.0 || steps <= 1 {
            return vec![0.0];
        }
        let last = (steps - 1) as f64;
        (0..steps).map(|k| t_max * k as f64 / last).collect()
    }

    pub fn validate(&self) -> Result<()> {
        positive("R", self.coupling_ratio)?;
        positive("s", self.ohmicity)?;
        positive("alpha", self.alpha)?;
        positive("beta", self.beta)?;
        if self.ohmicity == 1.0 {
            return Err(Error::Parameter {
                name: "s",
                value: 1.0,
                reason: "the dephasing closed form is singular at s = 1",
            });
        }
        match self.t_grid.first() {
            None => {
                return Err(Error::Parameter {
                    name: "t_grid",
                    value: f64::NAN,
                    reason: "time grid is empty",
                })
            }
            Some(&t0) if !t0.is_finite() || t0 < 0.0 => {
                return Err(Error::Parameter {
                    name: "t_grid[0]",
                    value: t0,
                    reason: "times must start at or after 0",
                })
            }
            _ => {}
        }
        if let Some(index) = self
            .t_grid
            .windows(2)
            .position(|w| w[1].partial_cmp(&w[0]) != Some(Ordering::Greater))
        {
            return Err(Error::UnorderedTimes { index: index + 1 });
        }
        Ok(())
    }
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::Parameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}

/// `c(t)/c(0) = e^{−t/2}[cosh(dt/2) + sinh(dt/2)/d]`, `d = √(1−2R)`.
///
/// For `R > 1/2` the principal root makes `d` imaginary and the hyperbolic
/// functions turn trigonometric; the result is real and the vanishing
/// imaginary part is dropped.
pub fn lorentzian_c(t: f64, coupling_ratio: f64) -> Result<f64> {
    let d = Complex64::new(1.0 - 2.0 * coupling_ratio, 0.0).sqrt();
    let z = d * (t / 2.0);
    let decay = Complex64::new(-t / 2.0, 0.0);
    // exponentials combined so that e^{-t/2} cosh(z) cannot overflow at large t
    let grow = (decay + z).exp();
    let shrink = (decay - z).exp();
    let sinh_over_d = if z.norm() < 1e-4 {
        let z2 = z * z;
        (-t / 2.0).exp() * (Complex64::new(1.0, 0.0) + z2 / 6.0 + z2 * z2 / 120.0) * (t / 2.0)
    } else {
        (grow - shrink) / (d * 2.0)
    };
    let value = (grow + shrink) / 2.0 + sinh_over_d;
    if value.im.abs() > IMAG_RESIDUE_TOL {
        return Err(Error::InternalConsistency {
            what: "imaginary residue of c(t)",
            residual: value.im.abs(),
        });
    }
    Ok(value.re)
}

fn check_ohmicity(s: f64) -> Result<()> {
    if s == 1.0 {
        return Err(Error::Parameter {
            name: "s",
            value: s,
            reason: "the dephasing closed form is singular at s = 1",
        });
    }
    positive("s", s)
}

/// Accumulated dephasing at zero temperature,
///
/// ```text
/// Γ_z = α Γ̃(s)/(s−1) · (1 − (1+x²)^{−s/2} [cos(s·atan x) + x sin(s·atan x)]),  x = β·λt,
/// ```
///
/// the time integral of the dephasing rate [`gamma_z_rate`].
pub fn gamma_z_closed_form(t: f64, s: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_ohmicity(s)?;
    let x = beta * t;
    let phi = x.atan();
    let damping = (1.0 + x * x).powf(-s / 2.0);
    let bracket = 1.0 - damping * ((s * phi).cos() + x * (s * phi).sin());
    Ok(alpha * gamma(s) / (s - 1.0) * bracket)
}

/// Dephasing rate `γ_z(t)` in units of `λ`:
/// `α β Γ̃(s) (1+x²)^{−s/2} sin(s·atan x)`, `x = β·λt`.
/// Negative on some intervals when `s > 2`.
pub fn gamma_z_rate(t: f64, s: f64, alpha: f64, beta: f64) -> Result<f64> {
    check_ohmicity(s)?;
    let x = beta * t;
    Ok(alpha * beta * gamma(s) * (1.0 + x * x).powf(-s / 2.0) * (s * x.atan()).sin())
}

/// Closed-form channel coherence from the four eigen-terms:
/// `Σ_± [ −a_± log₂ a_± + b_± log₂ b_± ]` with `a_± = (1 ± κ + η_∥)/4` and
/// `b_± = (1 + η_∥ ± √(κ² + 4η_⊥²))/4`.
pub fn phase_covariant_coherence_closed_form(kappa: f64, eta_par: f64, eta_perp: f64) -> f64 {
    let root = (kappa * kappa + 4.0 * eta_perp * eta_perp).sqrt();
    let mut total = 0.0;
    for sign in [1.0, -1.0] {
        let a = (1.0 + sign * kappa + eta_par) / 4.0;
        let b = (1.0 + eta_par + sign * root) / 4.0;
        total += -xlog2x(a.max(0.0)) + xlog2x(b.max(0.0));
    }
    total
}

#[derive(Debug, Clone)]
pub struct PhaseCovariantFrame {
    /// `λt`.
    pub t: f64,
    /// `Γ(t)`; `+∞` at zeros of `c(t)`.
    pub gamma: f64,
    pub gamma_z: f64,
    pub kappa: f64,
    pub eta_par: f64,
    pub eta_perp: f64,
    pub choi: ChoiState,
    /// QI REC of the channel, in bits.
    pub coherence: f64,
}

pub fn phase_covariant_frame(t: f64, params: &PhaseCovariantParams) -> Result<PhaseCovariantFrame> {
    let c = lorentzian_c(t, params.coupling_ratio)?;
    let u = c * c;
    // η's come straight from |u| so zeros of c(t) do not overflow Γ
    let eta_par = u;
    let kappa = u - 1.0;
    let gamma = 0.0 - u.ln();
    let gamma_z = gamma_z_closed_form(t, params.ohmicity, params.alpha, params.beta)?;
    let eta_perp = u.sqrt() * (-gamma_z).exp();

    let corner = eta_perp / 2.0;
    #[rustfmt::skip]
    let entries = [
        (1.0 + kappa + eta_par) / 4.0, 0.0, 0.0, corner,
        0.0, (1.0 - kappa - eta_par) / 4.0, 0.0, 0.0,
        0.0, 0.0, (1.0 + kappa - eta_par) / 4.0, 0.0,
        corner, 0.0, 0.0, (1.0 - kappa + eta_par) / 4.0,
    ];
    let matrix = SquareMatrix::from_real_rows(4, &entries)?;
    let choi = match ChoiState::from_matrix(matrix.clone(), DEFAULT_TOL) {
        Ok(choi) => choi,
        Err(_) => {
            let eigenvalue = hermitian_eigenvalues(&matrix, f64::INFINITY)?[0];
            return Err(Error::NonCptpFrame { t, eigenvalue });
        }
    };
    let coherence = qi_rec_choi(&choi);
    Ok(PhaseCovariantFrame {
        t,
        gamma,
        gamma_z,
        kappa,
        eta_par,
        eta_perp,
        choi,
        coherence,
    })
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub frames: Vec<PhaseCovariantFrame>,
    /// Rising intervals found by the monotonicity witness.
    pub rising: Vec<RisingInterval>,
}

pub fn phase_covariant_trajectory(params: &PhaseCovariantParams) -> Result<Trajectory> {
    params.validate()?;
    let frames = params
        .t_grid
        .iter()
        .map(|&t| phase_covariant_frame(t, params))
        .collect::<Result<Vec<_>>>()?;
    let samples: Vec<_> = frames.iter().map(|f| (f.t, f.choi.clone())).collect();
    let rising = monotonicity_witness(&samples, RISE_TOL)?;
    Ok(Trajectory { frames, rising })
}
