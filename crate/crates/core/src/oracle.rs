//! Brute-force lattice search over `lo + step·ℤⁿ ∩ [lo, hi]`, independent of
//! the algebraic solvers.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::Instance;

/// Slack for replaying constraints at lattice points.
pub const SLACK: f64 = 1e-12;
/// Lattice points allowed in one search.
pub const LATTICE_CAP: u64 = 50_000_000;
/// Longest `best_points` list kept.
pub const BEST_POINTS_CAP: usize = 10_000;
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleResult {
    /// `None` when no lattice point is feasible.
    pub best_value: Option<f64>,
    /// Lattice points attaining `best_value`, in lexicographic order.
    pub best_points: Vec<Vec<f64>>,
    pub grid_step: f64,
    pub evaluated: u64,
}

struct Lattice {
    lo: Vec<f64>,
    step: f64,
    counts: Vec<u64>,
}

impl Lattice {
    fn new(inst: &Instance, lo: &[f64], hi: &[f64], step: f64) -> Result<Self> {
        let n = inst.dim();
        if n > 3 {
            return Err(Error::Resource(format!(
                "grid search limited to dimension 3, got {n}"
            )));
        }
        if lo.len() != n || hi.len() != n {
            return Err(Error::Dimension(format!(
                "lattice corners of lengths {} and {} for dimension {n}",
                lo.len(),
                hi.len()
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::Domain(format!("grid step {step} must be positive")));
        }
        let mut counts = Vec::with_capacity(n);
        for i in 0..n {
            if !(lo[i].is_finite() && hi[i].is_finite()) || lo[i] > hi[i] {
                return Err(Error::Domain(format!(
                    "lattice range [{}, {}] in coordinate {i}",
                    lo[i], hi[i]
                )));
            }
            // tolerate hi landing a rounding error short of a lattice point
            let count = ((hi[i] - lo[i]) / step + 1e-9).floor() + 1.0;
            if count > LATTICE_CAP as f64 {
                return Err(Error::Resource(format!("{count} lattice points on axis {i}")));
            }
            counts.push(count as u64);
        }
        let total = counts.iter().try_fold(1u64, |acc, &c| acc.checked_mul(c));
        match total {
            Some(t) if t <= LATTICE_CAP => {}
            _ => {
                return Err(Error::Resource(format!(
                    "lattice of {counts:?} points exceeds the cap of {LATTICE_CAP}"
                )))
            }
        }
        Ok(Lattice {
            lo: lo.to_vec(),
            step,
            counts,
        })
    }

    fn total(&self) -> u64 {
        self.counts.iter().product()
    }

    /// Calls `f` on each point whose first index is `i0`, in lexicographic
    /// order; stops early when `f` returns `false`.
    fn for_each_in_slab(&self, i0: u64, mut f: impl FnMut(&[f64]) -> bool) {
        let n = self.counts.len();
        let mut idx = vec![0u64; n];
        idx[0] = i0;
        let mut x = vec![0.0; n];
        loop {
            for i in 0..n {
                x[i] = self.lo[i] + idx[i] as f64 * self.step;
            }
            if !f(&x) {
                return;
            }
            // odometer over axes 1..n
            let mut axis = n;
            loop {
                if axis == 1 || n == 1 {
                    return;
                }
                axis -= 1;
                idx[axis] += 1;
                if idx[axis] < self.counts[axis] {
                    break;
                }
                idx[axis] = 0;
            }
        }
    }
}

fn feasible(inst: &Instance, x: &[f64]) -> bool {
    inst.constraint_violation(x).is_ok_and(|v| v <= SLACK)
}

#[derive(Default)]
struct Best {
    value: Option<f64>,
    points: Vec<Vec<f64>>,
}

impl Best {
    fn offer(&mut self, value: f64, x: &[f64]) {
        match self.value {
            Some(b) if value > b + TIE_TOLERANCE => {}
            Some(b) if value >= b - TIE_TOLERANCE => {
                if self.points.len() < BEST_POINTS_CAP {
                    self.points.push(x.to_vec());
                }
                self.value = Some(b.min(value));
            }
            _ => {
                self.value = Some(value);
                self.points.clear();
                self.points.push(x.to_vec());
            }
        }
    }

    /// `other` holds lexicographically later points.
    fn merge(mut self, other: Best) -> Best {
        match (self.value, other.value) {
            (_, None) => self,
            (None, _) => other,
            (Some(a), Some(b)) if b < a - TIE_TOLERANCE => other,
            (Some(a), Some(b)) if b > a + TIE_TOLERANCE => self,
            (Some(a), Some(b)) => {
                self.value = Some(a.min(b));
                let room = BEST_POINTS_CAP.saturating_sub(self.points.len());
                self.points.extend(other.points.into_iter().take(room));
                self
            }
        }
    }
}

/// Minimises the objective over the feasible lattice points of `[lo, hi]`.
pub fn grid_minimize(inst: &Instance, lo: &[f64], hi: &[f64], step: f64) -> Result<OracleResult> {
    inst.validate()?;
    let lattice = Lattice::new(inst, lo, hi, step)?;
    let slabs: Vec<Best> = (0..lattice.counts[0])
        .into_par_iter()
        .map(|i0| {
            let mut best = Best::default();
            lattice.for_each_in_slab(i0, |x| {
                if feasible(inst, x) {
                    let v = inst.objective(x).expect("dimension checked");
                    best.offer(v, x);
                }
                true
            });
            best
        })
        .collect();
    let best = slabs.into_iter().fold(Best::default(), Best::merge);
    Ok(OracleResult {
        best_value: best.value,
        best_points: best.points,
        grid_step: step,
        evaluated: lattice.total(),
    })
}

/// Whether any lattice point of `[lo, hi]` satisfies every constraint.
pub fn grid_feasible(inst: &Instance, lo: &[f64], hi: &[f64], step: f64) -> Result<bool> {
    inst.validate()?;
    let lattice = Lattice::new(inst, lo, hi, step)?;
    Ok((0..lattice.counts[0]).into_par_iter().any(|i0| {
        let mut found = false;
        lattice.for_each_in_slab(i0, |x| {
            found = feasible(inst, x);
            !found
        });
        found
    }))
}
