//! Independent reference computations for the integration tests. Matrices
//! here are plain `f64` with `-inf` as bottom, so max-plus arithmetic is
//! ordinary `max` and `+`.
#![allow(dead_code)]

use rand::Rng;
use tropiloc::chebyshev::ChebyshevInstance;
use tropiloc::{MaxPlus, TropMatrix};

pub type Dense = Vec<Vec<f64>>;

pub const NEG: f64 = f64::NEG_INFINITY;

pub fn to_dense(a: &TropMatrix) -> Dense {
    (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a.get(i, j).value()).collect())
        .collect()
}

pub fn from_dense(a: &Dense) -> TropMatrix {
    let rows = a
        .iter()
        .map(|r| r.iter().map(|&v| MaxPlus::new(v).unwrap()).collect())
        .collect();
    TropMatrix::from_rows(rows).unwrap()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut c = vec![vec![NEG; m]; n];
    for i in 0..n {
        for l in 0..k {
            for j in 0..m {
                c[i][j] = c[i][j].max(a[i][l] + b[l][j]);
            }
        }
    }
    c
}

pub fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 0.0 } else { NEG }).collect())
        .collect()
}

/// `I ⊕ A ⊕ … ⊕ A^{n−1}` by explicit powers.
pub fn power_sum_closure(a: &Dense) -> Dense {
    let n = a.len();
    let mut acc = identity(n);
    let mut pow = identity(n);
    for _ in 1..n {
        pow = mul(&pow, a);
        for i in 0..n {
            for j in 0..n {
                acc[i][j] = acc[i][j].max(pow[i][j]);
            }
        }
    }
    acc
}

/// `⊕_{k=1..n} tr A^k`.
pub fn trace_by_powers(a: &Dense) -> f64 {
    let n = a.len();
    let mut pow = identity(n);
    let mut tr = NEG;
    for _ in 0..n {
        pow = mul(&pow, a);
        for i in 0..n {
            tr = tr.max(pow[i][i]);
        }
    }
    tr
}

/// Dyadic value `k/4` in `[-lim, lim]`, so sums of a few stay exact.
pub fn dyadic<R: Rng>(rng: &mut R, lim: f64) -> f64 {
    let k = (lim * 4.0) as i64;
    rng.random_range(-k..=k) as f64 / 4.0
}

/// Random matrix with bottom entries at rate `sparsity`.
pub fn random_dense<R: Rng>(rng: &mut R, rows: usize, cols: usize, sparsity: f64) -> Dense {
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.random_bool(sparsity) { NEG } else { dyadic(rng, 8.0) })
                .collect()
        })
        .collect()
}

/// Random matrix with no positive cycle: every finite entry satisfies
/// `a_ik ≤ x_i − x_k` for a hidden potential `x`, so all cycles are `≤ 0`.
pub fn random_nonpositive_cycles<R: Rng>(rng: &mut R, n: usize, sparsity: f64) -> Dense {
    let x: Vec<f64> = (0..n).map(|_| dyadic(rng, 8.0)).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    if rng.random_bool(sparsity) {
                        NEG
                    } else {
                        // slack 0 keeps zero-weight cycles in play
                        let slack = if rng.random_bool(0.3) { 0.0 } else { rng.random_range(0..8) as f64 / 4.0 };
                        x[i] - x[k] - slack
                    }
                })
                .collect()
        })
        .collect()
}

/// The optimum of the unit-weight, zero-addend problem from the three
/// classical terms: half the largest constrained spread between points,
/// and the distances to the lower and upper bound vectors.
pub fn unweighted_theta(inst: &ChebyshevInstance, star: &Dense) -> f64 {
    let n = inst.dim();
    let mut s = inst.lower.clone();
    let mut t = inst.upper.clone();
    for (p, d) in inst.points.iter().zip(&inst.caps) {
        if let Some(d) = d {
            for i in 0..n {
                s[i] = s[i].max(p[i] - d);
                t[i] = t[i].min(p[i] + d);
            }
        }
    }
    // x⁻ B* y
    let form = |x: &[f64], y: &[f64]| {
        let mut best = NEG;
        for i in 0..n {
            for k in 0..n {
                best = best.max(-x[i] + star[i][k] + y[k]);
            }
        }
        best
    };
    let mut theta = NEG;
    for pj in &inst.points {
        theta = theta.max(form(pj, &s)).max(form(&t, pj));
        for pl in &inst.points {
            theta = theta.max(form(pj, pl) / 2.0);
        }
    }
    theta
}
