//! Independent numerical oracles used only by tests.
//!
//! None of these reuse the closed forms they check: coherence values come
//! from explicit minimization of a relative entropy, and dephasing integrals
//! from direct quadrature over the spectral density.

#![allow(dead_code)]

use chancoh::qmat::{relative_entropy, DensityMatrix, SquareMatrix};
use chancoh::ChoiState;
use rand::Rng;

/// `min_δ S(ρ‖δ)` over diagonal `δ`, by entropic mirror descent on the
/// simplex from a random interior start. The objective at the final point is
/// evaluated with the general relative-entropy routine.
pub fn min_rel_entropy_over_diagonal<R: Rng>(rho: &DensityMatrix, rng: &mut R) -> f64 {
    let d = rho.dim();
    let pop: Vec<f64> = (0..d).map(|i| rho.get(i, i).re).collect();
    let mut delta: Vec<f64> = (0..d).map(|_| 0.05 + rng.random::<f64>()).collect();
    normalize(&mut delta);
    // gradient of -Σ p_i ln δ_i is -p_i/δ_i
    let step = 0.5;
    for _ in 0..20_000 {
        for (x, &p) in delta.iter_mut().zip(&pop) {
            *x *= (step * p / *x).exp();
        }
        normalize(&mut delta);
    }
    let sigma = DensityMatrix::diagonal(&delta).unwrap();
    relative_entropy(rho, &sigma).unwrap()
}

fn normalize(v: &mut [f64]) {
    let total: f64 = v.iter().sum();
    v.iter_mut().for_each(|x| *x /= total);
}

/// Nelder–Mead minimization of `f` from `start`.
pub fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: &F,
    start: &[f64],
    scale: f64,
    max_iter: usize,
) -> (Vec<f64>, f64) {
    let n = start.len();
    let mut simplex: Vec<Vec<f64>> = vec![start.to_vec()];
    for i in 0..n {
        let mut p = start.to_vec();
        p[i] += scale;
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();
    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();
        if (values[n] - values[0]).abs() < 1e-15 {
            break;
        }
        let centroid: Vec<f64> = (0..n)
            .map(|j| simplex[..n].iter().map(|p| p[j]).sum::<f64>() / n as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            (0..n)
                .map(|j| centroid[j] + t * (simplex[n][j] - centroid[j]))
                .collect()
        };
        let reflected = along(-1.0);
        let fr = f(&reflected);
        if fr < values[0] {
            let expanded = along(-2.0);
            let fe = f(&expanded);
            if fe < fr {
                simplex[n] = expanded;
                values[n] = fe;
            } else {
                simplex[n] = reflected;
                values[n] = fr;
            }
        } else if fr < values[n - 1] {
            simplex[n] = reflected;
            values[n] = fr;
        } else {
            let contracted = if fr < values[n] {
                along(-0.5)
            } else {
                along(0.5)
            };
            let fc = f(&contracted);
            if fc < values[n].min(fr) {
                simplex[n] = contracted;
                values[n] = fc;
            } else {
                let best = simplex[0].clone();
                for i in 1..=n {
                    for (x, b) in simplex[i].iter_mut().zip(&best) {
                        *x = b + 0.5 * (*x - b);
                    }
                    values[i] = f(&simplex[i]);
                }
            }
        }
    }
    let best = (0..=n)
        .min_by(|&a, &b| values[a].total_cmp(&values[b]))
        .unwrap();
    (simplex[best].clone(), values[best])
}

/// Maps `R³` onto the open unit ball.
fn to_ball(q: &[f64]) -> [f64; 3] {
    let norm = (q[0] * q[0] + q[1] * q[1] + q[2] * q[2]).sqrt();
    let scale = if norm < 1e-300 {
        1.0
    } else {
        norm.tanh() / norm
    };
    [q[0] * scale, q[1] * scale, q[2] * scale]
}

fn bloch_state(r: [f64; 3]) -> [[chancoh::Complex64; 2]; 2] {
    use chancoh::Complex64 as C;
    [
        [
            C::new((1.0 + r[2]) / 2.0, 0.0),
            C::new(r[0] / 2.0, -r[1] / 2.0),
        ],
        [
            C::new(r[0] / 2.0, r[1] / 2.0),
            C::new((1.0 - r[2]) / 2.0, 0.0),
        ],
    ]
}

/// `σ = λ ρ₀ ⊗ |0⟩⟨0| + (1−λ) ρ₁ ⊗ |1⟩⟨1|` on `A ⊗ S` from 7 free parameters.
fn free_qubit_choi(params: &[f64]) -> DensityMatrix {
    use chancoh::Complex64 as C;
    let lambda = 1.0 / (1.0 + (-params[6]).exp());
    let blocks = [
        (lambda, bloch_state(to_ball(&params[0..3]))),
        (1.0 - lambda, bloch_state(to_ball(&params[3..6]))),
    ];
    let mut entries = vec![C::new(0.0, 0.0); 16];
    for (s, (weight, rho)) in blocks.iter().enumerate() {
        for a in 0..2 {
            for b in 0..2 {
                entries[(a * 2 + s) * 4 + (b * 2 + s)] = rho[a][b] * *weight;
            }
        }
    }
    DensityMatrix::with_tolerance(SquareMatrix::from_rows(4, &entries).unwrap(), 1e-9).unwrap()
}

/// `min S(Ω‖σ)` over `σ = Σ_i λ_i ρ_i ⊗ |i⟩⟨i|` for a qubit Choi state, by
/// Nelder–Mead from `starts` random points.
pub fn min_rel_entropy_over_free_choi<R: Rng>(
    omega: &ChoiState,
    starts: usize,
    rng: &mut R,
) -> f64 {
    let objective = |p: &[f64]| relative_entropy(omega.state(), &free_qubit_choi(p)).unwrap();
    let mut best = f64::INFINITY;
    for _ in 0..starts {
        let start: Vec<f64> = (0..7).map(|_| rng.random_range(-1.0..1.0)).collect();
        let (mut point, mut value) = nelder_mead(&objective, &start, 0.5, 3000);
        // restart from the incumbent to escape simplex collapse
        for _ in 0..3 {
            let (p, v) = nelder_mead(&objective, &point, 0.05, 3000);
            point = p;
            value = v;
        }
        best = best.min(value);
    }
    best
}

/// Composite Simpson on `[a, b]` with `n` (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for k in 1..n {
        let x = a + k as f64 * h;
        sum += if k % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
    }
    sum * h / 3.0
}

/// Simpson with panel doubling until successive estimates differ by less
/// than `abs_tol`.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64) -> f64 {
    let mut n = 64;
    let mut previous = simpson(f, a, b, n);
    loop {
        n *= 2;
        let current = simpson(f, a, b, n);
        if (current - previous).abs() < abs_tol || n > 1 << 24 {
            return current;
        }
        previous = current;
    }
}

/// Zero-temperature accumulated dephasing by quadrature,
/// `∫₀^{50 ω_c} J(ω) (1 − cos ωt)/ω² dω`, with `J(ω) = α ω^s ω_c^{1−s} e^{−ω/ω_c}`
/// and `ω_c = β` in units of `λ`. Substituting `ω = v²` removes the
/// endpoint singularity for `s < 1`.
pub fn gamma_z_quadrature(t: f64, s: f64, alpha: f64, beta: f64) -> f64 {
    let v_max = (50.0 * beta).sqrt();
    let integrand = |v: f64| {
        if v == 0.0 {
            return 0.0;
        }
        let w = v * v;
        let half = (w * t / 2.0).sin();
        // J(ω)/ω² · (1 − cos ωt) · dω/dv
        2.0 * v
            * alpha
            * w.powf(s - 2.0)
            * beta.powf(1.0 - s)
            * (-w / beta).exp()
            * 2.0
            * half
            * half
    };
    adaptive_simpson(&integrand, 0.0, v_max, 1e-9)
}

/// Zero-temperature dephasing rate by quadrature,
/// `∫₀^{50 ω_c} J(ω) sin(ωt)/ω dω`.
pub fn gamma_z_rate_quadrature(t: f64, s: f64, alpha: f64, beta: f64) -> f64 {
    let v_max = (50.0 * beta).sqrt();
    let integrand = |v: f64| {
        if v == 0.0 {
            return 0.0;
        }
        let w = v * v;
        2.0 * v * alpha * w.powf(s - 1.0) * beta.powf(1.0 - s) * (-w / beta).exp() * (w * t).sin()
    };
    adaptive_simpson(&integrand, 0.0, v_max, 1e-9)
}
