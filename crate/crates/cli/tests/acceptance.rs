//! Acceptance suite. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion does.

#[path = "../../core/tests/common/oracles.rs"]
mod oracles;

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use chancoh::channels::cbc_qubit_choi;
use chancoh::measures::{decomposition_check, qi_rec, qi_rec_choi, rec, rising_intervals};
use chancoh::physics::{
    ad_channel, ad_coherence_closed_form, gamma_z_closed_form,
    phase_covariant_coherence_closed_form, phase_covariant_trajectory, PhaseCovariantParams,
    Trajectory,
};
use chancoh::random::{
    random_channel, random_incoherent_channel, random_measure_and_prepare, random_state,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, limit {limit:?}"))
    }
}

fn amplitude_damping() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for k in 0..=100 {
        let p = k as f64 / 100.0;
        let numeric = qi_rec(&ad_channel(p).map_err(|e| e.to_string())?);
        worst = worst.max((numeric - ad_coherence_closed_form(p)).abs());
    }
    let at0 = qi_rec(&ad_channel(0.0).unwrap());
    let at1 = qi_rec(&ad_channel(1.0).unwrap());
    let elapsed = start.elapsed();
    if worst > 1e-9 || (at0 - 1.0).abs() > 1e-9 || at1.abs() > 1e-9 {
        return Err(format!("max deviation {worst:e}, endpoints {at0}, {at1}"));
    }
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!(
        "max deviation {worst:.2e} over 101 points in {elapsed:.2?}"
    ))
}

fn asymmetric_decomposition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..500 {
        let d = 2 + i % 2;
        let ch = random_channel(d, rng.random_range(1..=d * d), &mut rng);
        let r = decomposition_check(&ch).map_err(|e| e.to_string())?;
        worst = worst.max(r.asym_residual);
    }
    let elapsed = start.elapsed();
    if worst > 1e-8 {
        return Err(format!("max residual {worst:e}"));
    }
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "max residual {worst:.2e} over 500 channels in {elapsed:.2?}"
    ))
}

fn symmetric_decomposition() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..500 {
        let ch = random_channel(2, rng.random_range(1..=4), &mut rng);
        let r = decomposition_check(&ch).map_err(|e| e.to_string())?;
        worst = worst.max(r.sym_residual);
    }
    let elapsed = start.elapsed();
    if worst > 1e-8 {
        return Err(format!("max residual {worst:e}"));
    }
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!(
        "max residual {worst:.2e} over 500 qubit channels in {elapsed:.2?}"
    ))
}

fn faithfulness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut free = Vec::new();
    for _ in 0..50 {
        let tau3 = rng.random_range(-1.0..=1.0);
        let room = 1.0 - f64::abs(tau3);
        let lambda3 = rng.random_range(-room..=room);
        let omega = cbc_qubit_choi(tau3, lambda3).map_err(|e| e.to_string())?;
        free.push(omega.to_kraus().map_err(|e| e.to_string())?);
    }
    for _ in 0..50 {
        free.push(random_measure_and_prepare(
            rng.random_range(2..=3),
            &mut rng,
        ));
    }
    let mut worst_free = 0.0f64;
    for ch in &free {
        if !ch.is_coherence_breaking(1e-8) {
            return Err("constructed channel not detected as coherence breaking".into());
        }
        worst_free = worst_free.max(qi_rec(ch).abs());
    }
    let mut least = f64::INFINITY;
    let mut resourceful = 0;
    while resourceful < 100 {
        let d = rng.random_range(2..=3);
        let ch = random_channel(d, rng.random_range(1..=d * d), &mut rng);
        if ch.is_coherence_breaking(1e-8) {
            continue;
        }
        resourceful += 1;
        least = least.min(qi_rec(&ch));
    }
    if worst_free > 1e-8 || least <= 1e-6 {
        return Err(format!(
            "free max {worst_free:e}, resourceful min {least:e}"
        ));
    }
    Ok(format!(
        "100 free channels max {worst_free:.2e}; 100 others min {least:.3e}"
    ))
}

fn monotonicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..200 {
        let d = rng.random_range(2..=3);
        let ch = random_channel(d, rng.random_range(1..=d * d), &mut rng);
        let post = random_incoherent_channel(d, &mut rng);
        if !post.is_incoherent_kraus(1e-12) {
            return Err("post-processing channel is not incoherent".into());
        }
        let composed = ch.then(&post).map_err(|e| e.to_string())?;
        worst = worst.max(qi_rec(&composed) - qi_rec(&ch));
    }
    if worst > 1e-8 {
        return Err(format!("largest increase {worst:e}"));
    }
    Ok(format!("largest change {worst:.3e} over 200 pairs"))
}

fn optimization_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for i in 0..100 {
        let rho = random_state(2 + i % 3, &mut rng);
        let oracle = oracles::min_rel_entropy_over_diagonal(&rho, &mut rng);
        worst = worst.max((oracle - rec(&rho)).abs());
    }
    if worst > 1e-6 {
        return Err(format!("max deviation {worst:e}"));
    }
    Ok(format!("max deviation {worst:.2e} over 100 states"))
}

fn trajectory(r: f64, s: f64) -> Result<Trajectory, String> {
    let grid = PhaseCovariantParams::uniform_grid(20.0, 400);
    let params = PhaseCovariantParams::new(r, s, 1.0, 1.0, grid).map_err(|e| e.to_string())?;
    phase_covariant_trajectory(&params).map_err(|e| e.to_string())
}

fn phase_covariant_regimes() -> Outcome {
    let start = Instant::now();
    let weak = trajectory(0.01, 0.5)?;
    let weak_time = start.elapsed();
    let start = Instant::now();
    let strong = trajectory(10.0, 3.5)?;
    let strong_time = start.elapsed();

    for (name, tr) in [("weak", &weak), ("strong", &strong)] {
        if tr.frames.len() != 400 {
            return Err(format!("{name}: {} points", tr.frames.len()));
        }
        let first = &tr.frames[0];
        if first.t != 0.0 || (first.coherence - 1.0).abs() > 1e-9 {
            return Err(format!(
                "{name}: starts at t={} with {}",
                first.t, first.coherence
            ));
        }
    }
    let weak_values: Vec<f64> = weak.frames.iter().map(|f| f.coherence).collect();
    let weak_rises = rising_intervals(&weak_values, 1e-9).len();
    let strong_values: Vec<f64> = strong.frames.iter().map(|f| f.coherence).collect();
    let strong_rises = rising_intervals(&strong_values, 1e-9).len();
    if weak_rises != 0 || strong_rises == 0 {
        return Err(format!(
            "rising intervals: weak {weak_rises}, strong {strong_rises}"
        ));
    }
    within(weak_time, Duration::from_secs(5))?;
    within(strong_time, Duration::from_secs(5))?;
    Ok(format!(
        "weak regime 0 rises ({weak_time:.2?}), strong regime {strong_rises} rises ({strong_time:.2?})"
    ))
}

fn gamma_z_quadrature() -> Outcome {
    let mut worst = 0.0f64;
    for s in [0.5, 3.5] {
        for k in 1..=40 {
            let t = 0.5 * k as f64;
            let closed = gamma_z_closed_form(t, s, 1.0, 1.0).map_err(|e| e.to_string())?;
            let quad = oracles::gamma_z_quadrature(t, s, 1.0, 1.0);
            worst = worst.max(((closed - quad) / quad).abs());
        }
    }
    if worst > 1e-6 {
        return Err(format!("max relative error {worst:e}"));
    }
    Ok(format!("max relative error {worst:.2e} over 80 samples"))
}

fn phase_covariant_closed_form() -> Outcome {
    let mut worst = 0.0f64;
    for (r, s) in [(0.01, 0.5), (10.0, 3.5)] {
        for f in &trajectory(r, s)?.frames {
            let generic = qi_rec_choi(&f.choi);
            let closed = phase_covariant_coherence_closed_form(f.kappa, f.eta_par, f.eta_perp);
            worst = worst.max((generic - closed).abs());
        }
    }
    if worst > 1e-8 {
        return Err(format!("max deviation {worst:e}"));
    }
    Ok(format!("max deviation {worst:.2e} over 800 frames"))
}

fn run_cli(args: &[&str], out: &Path) -> Result<Vec<u8>, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_chancoh"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .map_err(|e| e.to_string())?;
    if !status.status.success() {
        return Err(String::from_utf8_lossy(&status.stderr).into_owned());
    }
    std::fs::read(out).map_err(|e| e.to_string())
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let runs: [&[&str]; 3] = [
        &["ad-sweep", "--steps", "101"],
        &[
            "phase-cov",
            "--R",
            "0.01",
            "--s",
            "0.5",
            "--tmax",
            "20",
            "--steps",
            "400",
        ],
        &[
            "phase-cov",
            "--R",
            "10",
            "--s",
            "3.5",
            "--tmax",
            "20",
            "--steps",
            "400",
        ],
    ];
    for (i, args) in runs.iter().enumerate() {
        let a = run_cli(args, &dir.path().join(format!("{i}a.csv")))?;
        let b = run_cli(args, &dir.path().join(format!("{i}b.csv")))?;
        if a != b || a.is_empty() {
            return Err(format!("`{}` produced differing output", args.join(" ")));
        }
    }
    Ok("ad-sweep and both phase-cov regimes byte-identical across runs".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("amplitude damping matches closed form", amplitude_damping),
        (
            "asymmetric decomposition identity",
            asymmetric_decomposition,
        ),
        (
            "qubit symmetric decomposition identity",
            symmetric_decomposition,
        ),
        (
            "faithfulness on free and resourceful channels",
            faithfulness,
        ),
        (
            "monotonicity under incoherent post-processing",
            monotonicity,
        ),
        (
            "coherence equals minimum over incoherent states",
            optimization_oracle,
        ),
        ("phase-covariant regimes", phase_covariant_regimes),
        ("dephasing integral matches quadrature", gamma_z_quadrature),
        (
            "phase-covariant closed form matches eigensolver",
            phase_covariant_closed_form,
        ),
        ("CLI output is deterministic", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                println!("[FAIL] criterion {}: {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
