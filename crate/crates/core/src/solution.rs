//! The complete optimal set `{ T(B*u) : u_lo ≤ u ≤ u_hi }` and utilities to
//! evaluate, sample and replay its members.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matrix::{TropMatrix, TropVector};
use crate::rectilinear::{rotate, Direction};

/// Maps solver coordinates back to the original ones.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Transform {
    Identity,
    /// `x_i = z_i / c_i`.
    Scale { c: Vec<f64> },
    /// `x = ((y₁ − y₂)/2, (y₁ + y₂)/2)`.
    Rotate45,
    /// `y_i = z_i / c_i`, then the inverse rotation.
    RotateScaled { c1: f64, c2: f64 },
}

impl Transform {
    pub fn name(&self) -> &'static str {
        match self {
            Transform::Identity => "identity",
            Transform::Scale { .. } => "scale",
            Transform::Rotate45 => "rotate45",
            Transform::RotateScaled { .. } => "rotate_scaled",
        }
    }

    pub fn to_original(&self, z: &[f64]) -> Vec<f64> {
        match self {
            Transform::Identity => z.to_vec(),
            Transform::Scale { c } => z.iter().zip(c).map(|(z, c)| z / c).collect(),
            Transform::Rotate45 => rotate([z[0], z[1]], Direction::Inverse).to_vec(),
            Transform::RotateScaled { c1, c2 } => {
                let (y1, y2) = (z[0] / c1, z[1] / c2);
                vec![(y1 - y2) / 2.0, (y1 + y2) / 2.0]
            }
        }
    }

    pub fn to_internal(&self, x: &[f64]) -> Vec<f64> {
        match self {
            Transform::Identity => x.to_vec(),
            Transform::Scale { c } => x.iter().zip(c).map(|(x, c)| c * x).collect(),
            Transform::Rotate45 => rotate([x[0], x[1]], Direction::Forward).to_vec(),
            Transform::RotateScaled { c1, c2 } => {
                let y = rotate([x[0], x[1]], Direction::Forward);
                vec![c1 * y[0], c2 * y[1]]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolutionBox {
    pub theta: f64,
    /// `B*`.
    pub generator: TropMatrix,
    pub u_lo: TropVector,
    pub u_hi: TropVector,
    pub transform: Transform,
}

impl SolutionBox {
    pub fn dim(&self) -> usize {
        self.u_lo.len()
    }

    pub fn is_nonempty(&self) -> bool {
        self.u_lo.le(&self.u_hi).unwrap_or(false)
    }

    /// Original-coordinate member for parameter `u`. The parameter is not
    /// checked against the box.
    pub fn member(&self, u: &[f64]) -> Vec<f64> {
        let z = self
            .generator
            .mul_vec(&TropVector::from_finite(u))
            .expect("parameter length matches generator");
        self.transform.to_original(&z.to_f64())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checked_count: usize,
    pub max_objective_deviation: f64,
    pub max_constraint_violation: f64,
    pub pass: bool,
}

pub const OBJECTIVE_TOLERANCE: f64 = 1e-9;
pub const CONSTRAINT_SLACK: f64 = 1e-12;
const MEMBER_TOLERANCE: f64 = 1e-9;

/// `max_j (w_j · d(x, p_j) + h_j)` under the variant's metric.
pub fn objective_value(inst: &Instance, x: &[f64]) -> Result<f64> {
    inst.objective(x)
}

/// Whether `x` lies in the optimal set. `z = T⁻¹(x)` is a member iff
/// `B*z = z` and `u_lo ≤ z ≤ u_hi`, with `z` serving as its own parameter.
pub fn is_member(sol: &SolutionBox, inst: &Instance, x: &[f64]) -> bool {
    if x.len() != inst.dim() || x.iter().any(|v| !v.is_finite()) {
        return false;
    }
    let z = sol.transform.to_internal(x);
    let image = match sol.generator.mul_vec(&TropVector::from_finite(&z)) {
        Ok(v) => v.to_f64(),
        Err(_) => return false,
    };
    z.iter().enumerate().all(|(i, &zi)| {
        let tol = MEMBER_TOLERANCE * (1.0 + zi.abs());
        let lo = sol.u_lo.get(i).value();
        let hi = sol.u_hi.get(i).value();
        (image[i] - zi).abs() <= tol && zi >= lo - tol && zi <= hi + tol
    })
}

/// `k` members: the images of `u_lo` and `u_hi`, then `k − 2` parameters
/// drawn uniformly per coordinate.
pub fn sample(sol: &SolutionBox, k: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    if k == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    if !sol.is_nonempty() {
        return Err(Error::Domain("solution box is empty".into()));
    }
    let lo = sol.u_lo.to_f64();
    let hi = sol.u_hi.to_f64();
    let mut out = Vec::with_capacity(k);
    out.push(sol.member(&lo));
    if k >= 2 {
        out.push(sol.member(&hi));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 2..k {
        let u: Vec<f64> = lo
            .iter()
            .zip(&hi)
            .map(|(&a, &b)| rng.random_range(a..=b))
            .collect();
        out.push(sol.member(&u));
    }
    Ok(out)
}

/// Samples `k` members with seed 0 and replays the objective and every
/// original constraint on each.
pub fn verify(sol: &SolutionBox, inst: &Instance, k: usize) -> VerificationReport {
    verify_seeded(sol, inst, k, 0)
}

pub fn verify_seeded(sol: &SolutionBox, inst: &Instance, k: usize, seed: u64) -> VerificationReport {
    let failed = VerificationReport {
        checked_count: 0,
        max_objective_deviation: f64::INFINITY,
        max_constraint_violation: f64::INFINITY,
        pass: false,
    };
    let Ok(members) = sample(sol, k.max(1), seed) else {
        return failed;
    };
    let mut obj_dev: f64 = 0.0;
    let mut violation: f64 = 0.0;
    for x in &members {
        match (inst.objective(x), inst.constraint_violation(x)) {
            (Ok(value), Ok(v)) => {
                obj_dev = obj_dev.max((value - sol.theta).abs());
                violation = violation.max(v);
            }
            _ => return failed,
        }
    }
    VerificationReport {
        checked_count: members.len(),
        max_objective_deviation: obj_dev,
        max_constraint_violation: violation,
        pass: obj_dev <= OBJECTIVE_TOLERANCE && violation <= CONSTRAINT_SLACK,
    }
}
