//! A single handle over the four problem variants, with the objective and
//! constraints evaluated directly in original coordinates.

use crate::chebyshev::{self, ChebyshevInstance, FeasibilityReport, ScaledChebyshevInstance};
use crate::error::{Error, Result};
use crate::rectilinear::{self, rectilinear, StripInstance, TiltedStripInstance};
use crate::solution::SolutionBox;

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Chebyshev(ChebyshevInstance),
    ChebyshevScaled(ScaledChebyshevInstance),
    Strip(StripInstance),
    Tilted(TiltedStripInstance),
}

/// `a·x ≤ rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace {
    pub a: Vec<f64>,
    pub rhs: f64,
}

impl Instance {
    pub fn variant(&self) -> &'static str {
        match self {
            Instance::Chebyshev(_) => "chebyshev",
            Instance::ChebyshevScaled(_) => "chebyshev_scaled",
            Instance::Strip(_) => "rectilinear_strip",
            Instance::Tilted(_) => "rectilinear_tilted",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Instance::Chebyshev(i) => i.dim(),
            Instance::ChebyshevScaled(i) => i.dim(),
            Instance::Strip(_) | Instance::Tilted(_) => 2,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Instance::Chebyshev(i) => i.validate(),
            Instance::ChebyshevScaled(i) => i.validate(),
            Instance::Strip(i) => i.validate(),
            Instance::Tilted(i) => i.validate(),
        }
    }

    fn cheb_base(&self) -> Option<&ChebyshevInstance> {
        match self {
            Instance::Chebyshev(i) => Some(i),
            Instance::ChebyshevScaled(i) => Some(&i.base),
            _ => None,
        }
    }

    fn strip_base(&self) -> Option<&StripInstance> {
        match self {
            Instance::Strip(i) => Some(i),
            Instance::Tilted(i) => Some(&i.base),
            _ => None,
        }
    }

    pub fn weights(&self) -> &[f64] {
        match (self.cheb_base(), self.strip_base()) {
            (Some(c), _) => &c.weights,
            (_, Some(s)) => &s.weights,
            _ => unreachable!(),
        }
    }

    pub fn num_points(&self) -> usize {
        self.weights().len()
    }

    /// `max_j w_j`, the Lipschitz constant of the objective.
    pub fn max_weight(&self) -> f64 {
        self.weights().iter().copied().fold(0.0, f64::max)
    }

    /// The given points as rows.
    pub fn points(&self) -> Vec<Vec<f64>> {
        match (self.cheb_base(), self.strip_base()) {
            (Some(c), _) => c.points.clone(),
            (_, Some(s)) => s.points.iter().map(|p| p.to_vec()).collect(),
            _ => unreachable!(),
        }
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "point of length {} for a {}-dimensional instance",
                x.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    /// `max_j (w_j · d(x, p_j) + h_j)`.
    pub fn objective(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        let value = match (self.cheb_base(), self.strip_base()) {
            (Some(c), _) => c
                .points
                .iter()
                .zip(&c.weights)
                .zip(&c.addends)
                .map(|((p, w), h)| w * chebyshev_distance(x, p) + h)
                .fold(f64::NEG_INFINITY, f64::max),
            (_, Some(s)) => s
                .points
                .iter()
                .zip(&s.weights)
                .zip(&s.addends)
                .map(|((p, w), h)| w * rectilinear([x[0], x[1]], *p) + h)
                .fold(f64::NEG_INFINITY, f64::max),
            _ => unreachable!(),
        };
        Ok(value)
    }

    /// Largest amount by which `x` violates any constraint, `0` if none.
    pub fn constraint_violation(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        let mut worst: f64 = 0.0;
        let mut see = |excess: f64| worst = worst.max(excess);
        match self {
            Instance::Chebyshev(c) | Instance::ChebyshevScaled(ScaledChebyshevInstance { base: c, .. }) => {
                let n = c.dim();
                let scale = |i: usize| match self {
                    Instance::ChebyshevScaled(s) => s.scale[i],
                    _ => 1.0,
                };
                for (p, d) in c.points.iter().zip(&c.caps) {
                    if let Some(d) = d {
                        see(chebyshev_distance(x, p) - d);
                    }
                }
                for i in 0..n {
                    see(c.lower[i] - x[i]);
                    see(x[i] - c.upper[i]);
                    for k in 0..n {
                        let b = c.constraints.get(i, k);
                        if b.is_finite() {
                            see(b.value() + scale(k) * x[k] - scale(i) * x[i]);
                        }
                    }
                }
            }
            Instance::Strip(s) | Instance::Tilted(TiltedStripInstance { base: s, .. }) => {
                let xp = [x[0], x[1]];
                for (p, d) in s.points.iter().zip(&s.caps) {
                    if let Some(d) = d {
                        see(rectilinear(xp, *p) - d);
                    }
                }
                let (sum, diff) = (x[0] + x[1], x[1] - x[0]);
                see(s.lower[0] - sum);
                see(sum - s.upper[0]);
                see(s.lower[1] - diff);
                see(diff - s.upper[1]);
                match self {
                    Instance::Tilted(t) => {
                        see(s.a + x[1] - t.c * x[0]);
                        see(t.c * x[0] - s.b - x[1]);
                    }
                    _ => {
                        see(s.a - x[0]);
                        see(x[0] - s.b);
                    }
                }
            }
        }
        Ok(worst)
    }

    pub fn check(&self) -> Result<FeasibilityReport> {
        match self {
            Instance::Chebyshev(i) => chebyshev::check_feasibility(i),
            Instance::ChebyshevScaled(i) => chebyshev::check_feasibility_scaled(i),
            Instance::Strip(i) => rectilinear::check_strip(i),
            Instance::Tilted(i) => rectilinear::check_tilted(i),
        }
    }

    pub fn solve(&self) -> Result<SolutionBox> {
        match self {
            Instance::Chebyshev(i) => chebyshev::solve_particular(i),
            Instance::ChebyshevScaled(i) => chebyshev::solve_scaled(i),
            Instance::Strip(i) => rectilinear::solve_strip(i),
            Instance::Tilted(i) => rectilinear::solve_tilted(i),
        }
    }

    /// An axis-aligned box in original coordinates containing the feasible
    /// set, from the bounds, the caps and (for the vertical strip) `a ≤ x₁ ≤ b`.
    pub fn bounding_box(&self) -> (Vec<f64>, Vec<f64>) {
        let (mut lo, mut hi, points, caps) = match (self.cheb_base(), self.strip_base()) {
            (Some(c), _) => (
                c.lower.clone(),
                c.upper.clone(),
                c.points.clone(),
                c.caps.clone(),
            ),
            (_, Some(s)) => {
                let (f, g) = (s.lower, s.upper);
                (
                    vec![(f[0] - g[1]) / 2.0, (f[0] + f[1]) / 2.0],
                    vec![(g[0] - f[1]) / 2.0, (g[0] + g[1]) / 2.0],
                    s.points.iter().map(|p| p.to_vec()).collect(),
                    s.caps.clone(),
                )
            }
            _ => unreachable!(),
        };
        // both metrics bound each coordinate by the cap
        for (p, d) in points.iter().zip(&caps) {
            if let Some(d) = d {
                for i in 0..lo.len() {
                    lo[i] = lo[i].max(p[i] - d);
                    hi[i] = hi[i].min(p[i] + d);
                }
            }
        }
        if let Instance::Strip(s) = self {
            lo[0] = lo[0].max(s.a);
            hi[0] = hi[0].min(s.b);
        }
        (lo, hi)
    }

    /// All constraints as half-spaces `a·x ≤ rhs` in original coordinates.
    pub fn half_spaces(&self) -> Vec<HalfSpace> {
        let n = self.dim();
        let mut out = Vec::new();
        let unit = |i: usize, sign: f64| {
            let mut a = vec![0.0; n];
            a[i] = sign;
            a
        };
        match self {
            Instance::Chebyshev(c) | Instance::ChebyshevScaled(ScaledChebyshevInstance { base: c, .. }) => {
                let scale = match self {
                    Instance::ChebyshevScaled(s) => s.scale.clone(),
                    _ => vec![1.0; n],
                };
                for i in 0..n {
                    out.push(HalfSpace { a: unit(i, -1.0), rhs: -c.lower[i] });
                    out.push(HalfSpace { a: unit(i, 1.0), rhs: c.upper[i] });
                }
                for (p, d) in c.points.iter().zip(&c.caps) {
                    if let Some(d) = d {
                        for i in 0..n {
                            out.push(HalfSpace { a: unit(i, 1.0), rhs: p[i] + d });
                            out.push(HalfSpace { a: unit(i, -1.0), rhs: d - p[i] });
                        }
                    }
                }
                for i in 0..n {
                    for k in 0..n {
                        let b = c.constraints.get(i, k);
                        if b.is_finite() {
                            let mut a = vec![0.0; n];
                            a[k] += scale[k];
                            a[i] -= scale[i];
                            out.push(HalfSpace { a, rhs: -b.value() });
                        }
                    }
                }
            }
            Instance::Strip(s) | Instance::Tilted(TiltedStripInstance { base: s, .. }) => {
                let (f, g) = (s.lower, s.upper);
                out.push(HalfSpace { a: vec![-1.0, -1.0], rhs: -f[0] });
                out.push(HalfSpace { a: vec![1.0, 1.0], rhs: g[0] });
                out.push(HalfSpace { a: vec![1.0, -1.0], rhs: -f[1] });
                out.push(HalfSpace { a: vec![-1.0, 1.0], rhs: g[1] });
                for (p, d) in s.points.iter().zip(&s.caps) {
                    if let Some(d) = d {
                        for (s1, s2) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                            out.push(HalfSpace {
                                a: vec![s1, s2],
                                rhs: d + s1 * p[0] + s2 * p[1],
                            });
                        }
                    }
                }
                match self {
                    Instance::Tilted(t) => {
                        out.push(HalfSpace { a: vec![-t.c, 1.0], rhs: -s.a });
                        out.push(HalfSpace { a: vec![t.c, -1.0], rhs: s.b });
                    }
                    _ => {
                        out.push(HalfSpace { a: vec![-1.0, 0.0], rhs: -s.a });
                        out.push(HalfSpace { a: vec![1.0, 0.0], rhs: s.b });
                    }
                }
            }
        }
        out
    }
}

pub fn chebyshev_distance(x: &[f64], p: &[f64]) -> f64 {
    x.iter()
        .zip(p)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}
