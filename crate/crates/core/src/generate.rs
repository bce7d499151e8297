//! Random feasible instances. Every instance is built around a hidden
//! feasible point, and all data sit on a coarse lattice (halves for the
//! Chebyshev variants, integers for the rectilinear ones) so that grid
//! searches with a dividing step reach the optimum to within one cell.

use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chebyshev::{ChebyshevInstance, ScaledChebyshevInstance};
use crate::error::{Error, Result};
use crate::instance::{chebyshev_distance, Instance};
use crate::matrix::TropMatrix;
use crate::rectilinear::{rectilinear, StripInstance, TiltedStripInstance};
use crate::scalar::MaxPlus;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Chebyshev,
    ChebyshevScaled,
    Strip,
    Tilted,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chebyshev" => Ok(Variant::Chebyshev),
            "chebyshev_scaled" => Ok(Variant::ChebyshevScaled),
            "rectilinear_strip" => Ok(Variant::Strip),
            "rectilinear_tilted" => Ok(Variant::Tilted),
            other => Err(Error::validation("variant", format!("unknown variant {other:?}"))),
        }
    }
}

/// Uniform multiple of `unit` in `[lo, hi]` (both multiples of `unit`).
fn on_grid<R: Rng>(rng: &mut R, lo: f64, hi: f64, unit: f64) -> f64 {
    let k = rng.random_range((lo / unit).round() as i64..=(hi / unit).round() as i64);
    k as f64 * unit
}

const WEIGHTS: [f64; 4] = [0.5, 1.0, 1.5, 2.0];
const SCALES: [f64; 6] = [-3.0, -2.0, -0.5, 0.5, 2.0, 3.0];
const SLOPES: [f64; 5] = [-3.0, -2.0, 0.0, 2.0, 3.0];

/// Random feasible `n`-dimensional instance with `m` points; data are
/// multiples of `0.5` and coordinates stay within `[-4, 4]`.
pub fn random_chebyshev<R: Rng>(rng: &mut R, n: usize, m: usize) -> ChebyshevInstance {
    random_chebyshev_with_scale(rng, &vec![1.0; n], m)
}

fn random_chebyshev_with_scale<R: Rng>(rng: &mut R, c: &[f64], m: usize) -> ChebyshevInstance {
    let n = c.len();
    let h = 0.5;
    let x0: Vec<f64> = (0..n).map(|_| on_grid(rng, -2.0, 2.0, h)).collect();
    let points: Vec<Vec<f64>> = (0..m)
        .map(|_| (0..n).map(|_| on_grid(rng, -3.0, 3.0, h)).collect())
        .collect();
    let weights = (0..m).map(|_| WEIGHTS[rng.random_range(0..WEIGHTS.len())]).collect();
    let addends = (0..m).map(|_| on_grid(rng, 0.0, 2.0, h)).collect();
    let caps = points
        .iter()
        .map(|p| {
            rng.random_bool(0.5).then(|| {
                let d = chebyshev_distance(&x0, p) + on_grid(rng, 0.0, 1.5, h);
                d.max(h)
            })
        })
        .collect();
    let lower = x0.iter().map(|x| x - on_grid(rng, 0.0, 2.0, h)).collect();
    let upper = x0.iter().map(|x| x + on_grid(rng, 0.0, 2.0, h)).collect();
    let mut constraints = TropMatrix::bottom(n, n);
    for i in 0..n {
        for k in 0..n {
            if i != k && rng.random_bool(0.3) {
                // holds at x0 by construction
                let slack = on_grid(rng, 0.0, 1.0, h);
                constraints.set(i, k, MaxPlus::finite(c[i] * x0[i] - c[k] * x0[k] - slack));
            }
        }
    }
    ChebyshevInstance {
        points,
        weights,
        addends,
        caps,
        lower,
        upper,
        constraints,
    }
}

pub fn random_scaled<R: Rng>(rng: &mut R, n: usize, m: usize) -> ScaledChebyshevInstance {
    let scale: Vec<f64> = (0..n).map(|_| SCALES[rng.random_range(0..SCALES.len())]).collect();
    ScaledChebyshevInstance {
        base: random_chebyshev_with_scale(rng, &scale, m),
        scale,
    }
}

/// Random feasible strip instance with integer data.
pub fn random_strip<R: Rng>(rng: &mut R, m: usize) -> StripInstance {
    let x0 = [on_grid(rng, -2.0, 2.0, 1.0), on_grid(rng, -2.0, 2.0, 1.0)];
    let a = x0[0] - on_grid(rng, 0.0, 2.0, 1.0);
    let b = x0[0] + on_grid(rng, 0.0, 2.0, 1.0);
    random_planar(rng, x0, m, a, b)
}

/// Random feasible tilted-strip instance; `c` is an integer other than `±1`.
pub fn random_tilted<R: Rng>(rng: &mut R, m: usize) -> TiltedStripInstance {
    let x0 = [on_grid(rng, -2.0, 2.0, 1.0), on_grid(rng, -2.0, 2.0, 1.0)];
    let c = SLOPES[rng.random_range(0..SLOPES.len())];
    let mid = c * x0[0] - x0[1];
    let a = mid - on_grid(rng, 0.0, 2.0, 1.0);
    let b = mid + on_grid(rng, 0.0, 2.0, 1.0);
    TiltedStripInstance {
        base: random_planar(rng, x0, m, a, b),
        c,
    }
}

fn random_planar<R: Rng>(rng: &mut R, x0: [f64; 2], m: usize, a: f64, b: f64) -> StripInstance {
    let points: Vec<[f64; 2]> = (0..m)
        .map(|_| [on_grid(rng, -3.0, 3.0, 1.0), on_grid(rng, -3.0, 3.0, 1.0)])
        .collect();
    let weights = (0..m).map(|_| WEIGHTS[rng.random_range(0..WEIGHTS.len())]).collect();
    let addends = (0..m).map(|_| on_grid(rng, 0.0, 2.0, 1.0)).collect();
    let caps = points
        .iter()
        .map(|&p| {
            rng.random_bool(0.5)
                .then(|| (rectilinear(x0, p) + on_grid(rng, 0.0, 2.0, 1.0)).max(1.0))
        })
        .collect();
    let y0 = [x0[0] + x0[1], x0[1] - x0[0]];
    let lower = [y0[0] - on_grid(rng, 0.0, 3.0, 1.0), y0[1] - on_grid(rng, 0.0, 3.0, 1.0)];
    let upper = [y0[0] + on_grid(rng, 0.0, 3.0, 1.0), y0[1] + on_grid(rng, 0.0, 3.0, 1.0)];
    StripInstance {
        points,
        weights,
        addends,
        caps,
        lower,
        upper,
        a,
        b,
    }
}

pub fn random_instance_with<R: Rng>(rng: &mut R, variant: Variant, n: usize, m: usize) -> Result<Instance> {
    if m == 0 {
        return Err(Error::validation("m", "at least one point is required"));
    }
    if n == 0 {
        return Err(Error::validation("n", "dimension must be at least 1"));
    }
    let planar = matches!(variant, Variant::Strip | Variant::Tilted);
    if planar && n != 2 {
        return Err(Error::validation("n", "rectilinear instances are planar (n = 2)"));
    }
    Ok(match variant {
        Variant::Chebyshev => Instance::Chebyshev(random_chebyshev(rng, n, m)),
        Variant::ChebyshevScaled => Instance::ChebyshevScaled(random_scaled(rng, n, m)),
        Variant::Strip => Instance::Strip(random_strip(rng, m)),
        Variant::Tilted => Instance::Tilted(random_tilted(rng, m)),
    })
}

/// Seeded random feasible instance.
pub fn random_instance(variant: Variant, n: usize, m: usize, seed: u64) -> Result<Instance> {
    random_instance_with(&mut ChaCha8Rng::seed_from_u64(seed), variant, n, m)
}
