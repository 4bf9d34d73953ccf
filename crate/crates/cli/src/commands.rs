use std::fmt::Write as _;
use std::path::Path;

use chancoh::measures::{decomposition_check, qi_rec, IDENTITY_TOL};
use chancoh::physics::{
    ad_channel, ad_coherence_closed_form, phase_covariant_trajectory, PhaseCovariantParams,
};
use chancoh::QubitAffine;
use serde::Serialize;

use crate::document::ChannelDocument;
use crate::error::{classify_error, CliError};

fn read_document(path: &Path) -> Result<ChannelDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    ChannelDocument::parse(&text)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Serialize)]
struct ReportOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    unital: bool,
    incoherent_kraus: bool,
    coherence_breaking: bool,
    qi_rec: f64,
    rec_output_marginal: f64,
    rec_ancilla_marginal: f64,
    asym_discord: f64,
    sym_discord: f64,
    rec_choi: f64,
    asym_residual: f64,
    sym_residual: f64,
}

/// `report <file>`: every measure plus the classification flags, as JSON.
pub fn report(path: &Path, tol: Option<f64>) -> Result<String, CliError> {
    let doc = read_document(path)?;
    let channel = doc.to_channel(tol)?;
    let r = decomposition_check(&channel).map_err(classify_error)?;
    let out = ReportOutput {
        name: doc.name,
        dim: r.dim,
        unital: r.unital,
        incoherent_kraus: r.incoherent_kraus,
        coherence_breaking: r.coherence_breaking,
        qi_rec: r.qi_rec,
        rec_output_marginal: r.rec_output_marginal,
        rec_ancilla_marginal: r.rec_ancilla_marginal,
        asym_discord: r.asym_discord,
        sym_discord: r.sym_discord,
        rec_choi: r.rec_choi,
        asym_residual: r.asym_residual,
        sym_residual: r.sym_residual,
    };
    Ok(serde_json::to_string_pretty(&out).expect("report serializes"))
}

#[derive(Serialize)]
struct AffineOutput {
    tau: [f64; 3],
    t: [[f64; 3]; 3],
    singular_values: [f64; 3],
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    cptp: bool,
    unital: bool,
    incoherent_kraus: bool,
    coherence_breaking: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    affine: Option<AffineOutput>,
}

/// `classify <file>`: structural predicates, and the affine form for qubits.
pub fn classify(path: &Path, tol: Option<f64>) -> Result<String, CliError> {
    let doc = read_document(path)?;
    let channel = doc.to_channel(tol)?;
    let affine = if channel.dim() == 2 {
        let q = QubitAffine::from_kraus(&channel)?;
        Some(AffineOutput {
            tau: [q.tau[0], q.tau[1], q.tau[2]],
            t: std::array::from_fn(|k| std::array::from_fn(|l| q.t[(k, l)])),
            singular_values: q.singular_values(),
        })
    } else {
        None
    };
    let out = ClassifyOutput {
        name: doc.name,
        dim: channel.dim(),
        // construction already enforced completeness
        cptp: true,
        unital: channel.is_unital(IDENTITY_TOL),
        incoherent_kraus: channel.is_incoherent_kraus(IDENTITY_TOL),
        coherence_breaking: channel.is_coherence_breaking(IDENTITY_TOL),
        affine,
    };
    Ok(serde_json::to_string_pretty(&out).expect("classification serializes"))
}

/// `ad-sweep`: amplitude-damping coherence on `steps` uniform points of
/// `p ∈ [0, 1]`, written as CSV. Returns the CSV text.
pub fn ad_sweep(steps: usize, out: &Path) -> Result<String, CliError> {
    if steps < 2 {
        return Err(CliError::Parse(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    let mut csv = String::from("p,qi_rec,closed_form,abs_diff\n");
    let last = (steps - 1) as f64;
    for k in 0..steps {
        let p = k as f64 / last;
        let numeric = qi_rec(&ad_channel(p)?);
        let closed = ad_coherence_closed_form(p);
        writeln!(
            csv,
            "{:?},{:?},{:?},{:?}",
            p,
            numeric,
            closed,
            (numeric - closed).abs()
        )
        .unwrap();
    }
    write_file(out, &csv)?;
    Ok(csv)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhaseCovArgs {
    pub coupling_ratio: f64,
    pub ohmicity: f64,
    pub alpha: f64,
    pub beta: f64,
    pub t_max: f64,
    pub steps: usize,
}

/// `phase-cov`: writes the trajectory CSV and returns the witness summary.
pub fn phase_cov(args: &PhaseCovArgs, out: &Path) -> Result<String, CliError> {
    if !(args.t_max >= 0.0 && args.t_max.is_finite()) {
        return Err(CliError::Validation(chancoh::Error::Parameter {
            name: "tmax",
            value: args.t_max,
            reason: "must be finite and non-negative",
        }));
    }
    if args.steps == 0 {
        return Err(CliError::Parse("--steps must be at least 1".into()));
    }
    let grid = PhaseCovariantParams::uniform_grid(args.t_max, args.steps);
    let params = PhaseCovariantParams::new(
        args.coupling_ratio,
        args.ohmicity,
        args.alpha,
        args.beta,
        grid,
    )?;
    let traj = phase_covariant_trajectory(&params).map_err(classify_error)?;

    let mut csv = String::from("lambda_t,Gamma,Gamma_z,kappa,eta_par,eta_perp,coherence\n");
    for f in &traj.frames {
        writeln!(
            csv,
            "{:?},{:?},{:?},{:?},{:?},{:?},{:?}",
            f.t, f.gamma, f.gamma_z, f.kappa, f.eta_par, f.eta_perp, f.coherence
        )
        .unwrap();
    }
    write_file(out, &csv)?;

    let mut summary = format!("rising intervals: {}\n", traj.rising.len());
    for iv in &traj.rising {
        let (a, b) = (&traj.frames[iv.start], &traj.frames[iv.end]);
        writeln!(
            summary,
            "  lambda_t {:?} -> {:?} (samples {}..={}), coherence {:?} -> {:?}",
            a.t, b.t, iv.start, iv.end, a.coherence, b.coherence
        )
        .unwrap();
    }
    Ok(summary)
}
