//! Random states and channels for property checks.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::channels::KrausChannel;
use crate::qmat::{DensityMatrix, SquareMatrix};

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Haar-random isometry `rows × cols` (`rows >= cols`) via QR of a Ginibre
/// matrix with the phases of `R`'s diagonal absorbed into `Q`.
pub fn haar_isometry<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    assert!(rows >= cols, "isometry needs rows >= cols");
    let qr = ginibre(rows, cols, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..cols {
        let rjj = r[(j, j)];
        let phase = if rjj.norm() > 0.0 {
            rjj / rjj.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for i in 0..rows {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub fn haar_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> SquareMatrix {
    SquareMatrix::new(haar_isometry(dim, dim, rng)).expect("square")
}

pub fn random_pure<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    let psi: Vec<Complex64> = (0..dim).map(|_| gaussian(rng)).collect();
    DensityMatrix::pure(&psi).expect("non-zero vector")
}

/// Random mixed state `G G† / tr(G G†)` from a `dim × rank` Ginibre matrix.
pub fn random_density<R: Rng + ?Sized>(dim: usize, rank: usize, rng: &mut R) -> DensityMatrix {
    let g = ginibre(dim, rank, rng);
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(SquareMatrix::new(m.scale(1.0 / tr)).expect("square")).expect("valid state")
}

/// Full-rank random state.
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    random_density(dim, dim, rng)
}

/// Random probability vector (uniform on the simplex).
pub fn random_simplex<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..dim)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    let total: f64 = e.iter().sum();
    e.into_iter().map(|x| x / total).collect()
}

/// Random diagonal state.
pub fn random_incoherent_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    DensityMatrix::diagonal(&random_simplex(dim, rng)).expect("valid state")
}

/// Channel with `kraus_rank` operators cut from a Haar-random isometry
/// `C^d → C^{d·k}`.
pub fn random_channel<R: Rng + ?Sized>(dim: usize, kraus_rank: usize, rng: &mut R) -> KrausChannel {
    let v = haar_isometry(dim * kraus_rank, dim, rng);
    let ops = (0..kraus_rank)
        .map(|i| SquareMatrix::new(v.rows(i * dim, dim).into_owned()).expect("square"))
        .collect();
    KrausChannel::new(ops).expect("isometry blocks are complete")
}

/// Random channel whose every Kraus operator maps each `|j⟩` to a single
/// basis ray. Each operator is a random partial permutation with random
/// complex weights; columns are then rescaled so that `Σ K†K = I`.
pub fn random_incoherent_channel<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> KrausChannel {
    let n_ops = rng.random_range(1..=dim + 2);
    loop {
        let mut ops: Vec<DMatrix<Complex64>> = Vec::with_capacity(n_ops);
        for _ in 0..n_ops {
            let mut targets: Vec<usize> = (0..dim).collect();
            for i in (1..dim).rev() {
                targets.swap(i, rng.random_range(0..=i));
            }
            let mut k = DMatrix::zeros(dim, dim);
            for (col, &row) in targets.iter().enumerate() {
                if rng.random::<f64>() < 0.7 {
                    k[(row, col)] = gaussian(rng);
                }
            }
            ops.push(k);
        }
        // injective supports make Σ K†K diagonal
        let weights: Vec<f64> = (0..dim)
            .map(|col| ops.iter().map(|k| k.column(col).norm_squared()).sum())
            .collect();
        if weights.iter().any(|&w| w < 1e-6) {
            continue;
        }
        let ops = ops
            .into_iter()
            .map(|mut k| {
                for (col, w) in weights.iter().enumerate() {
                    k.column_mut(col).scale_mut(1.0 / w.sqrt());
                }
                SquareMatrix::new(k).expect("square")
            })
            .collect();
        return KrausChannel::new(ops).expect("normalized incoherent set is complete");
    }
}

/// Random measure-and-prepare channel with diagonal prepared states; always
/// coherence-breaking.
pub fn random_measure_and_prepare<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> KrausChannel {
    let prepared: Vec<Vec<f64>> = (0..dim).map(|_| random_simplex(dim, rng)).collect();
    KrausChannel::measure_and_prepare(&prepared).expect("valid prepared states")
}
