//! Planar minimax location with rectilinear distance.
//!
//! The substitution `y = (x₁ + x₂, x₂ − x₁)` turns `d₁` into `d∞`, the
//! tilted rectangle `f ≤ y ≤ g` into a box, and the strip `a ≤ x₁ ≤ b`
//! into the difference constraints `2a + y₂ ≤ y₁`, `−2b + y₁ ≤ y₂`. The
//! slanted band `a + x₂ ≤ c x₁ ≤ b + x₂` becomes
//! `2a + c₂y₂ ≤ c₁y₁`, `−2b + c₁y₁ ≤ c₂y₂` with `c₁ = c − 1`, `c₂ = c + 1`,
//! which the scaled Chebyshev solver handles.

use crate::chebyshev::{self, ChebyshevInstance, FeasibilityReport, ScaledChebyshevInstance};
use crate::error::{Error, Result};
use crate::matrix::TropMatrix;
use crate::scalar::MaxPlus;
use crate::solution::{SolutionBox, Transform};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Forward `(x₁ + x₂, x₂ − x₁)`, inverse `((y₁ − y₂)/2, (y₁ + y₂)/2)`.
pub fn rotate(p: [f64; 2], direction: Direction) -> [f64; 2] {
    match direction {
        Direction::Forward => [p[0] + p[1], p[1] - p[0]],
        Direction::Inverse => [(p[0] - p[1]) / 2.0, (p[0] + p[1]) / 2.0],
    }
}

pub fn rectilinear(x: [f64; 2], p: [f64; 2]) -> f64 {
    (x[0] - p[0]).abs() + (x[1] - p[1]).abs()
}

#[derive(Clone, Debug, PartialEq)]
pub struct StripInstance {
    pub points: Vec<[f64; 2]>,
    pub weights: Vec<f64>,
    pub addends: Vec<f64>,
    pub caps: Vec<Option<f64>>,
    /// `(f₁, f₂)`, lower bounds on `x₁ + x₂` and `x₂ − x₁`.
    pub lower: [f64; 2],
    /// `(g₁, g₂)`.
    pub upper: [f64; 2],
    pub a: f64,
    pub b: f64,
}

/// `a + x₂ ≤ c·x₁ ≤ b + x₂` in place of `a ≤ x₁ ≤ b`.
#[derive(Clone, Debug, PartialEq)]
pub struct TiltedStripInstance {
    pub base: StripInstance,
    pub c: f64,
}

impl StripInstance {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("strip.a", self.a), ("strip.b", self.b)] {
            if !v.is_finite() {
                return Err(Error::validation(name, format!("{v} is not a finite real")));
            }
        }
        if self.a > self.b {
            return Err(Error::validation(
                "strip.a",
                format!("exceeds strip.b ({} > {})", self.a, self.b),
            ));
        }
        // remaining fields share the Chebyshev checks
        self.to_chebyshev().validate()
    }

    /// The rotated Chebyshev instance solved internally.
    pub fn to_chebyshev(&self) -> ChebyshevInstance {
        ChebyshevInstance {
            points: self
                .points
                .iter()
                .map(|&p| rotate(p, Direction::Forward).to_vec())
                .collect(),
            weights: self.weights.clone(),
            addends: self.addends.clone(),
            caps: self.caps.clone(),
            lower: self.lower.to_vec(),
            upper: self.upper.to_vec(),
            constraints: strip_matrix(self.a, self.b),
        }
    }
}

impl TiltedStripInstance {
    pub fn validate(&self) -> Result<()> {
        if !self.c.is_finite() {
            return Err(Error::validation("strip.c", "must be a finite real"));
        }
        if self.c == 1.0 {
            return Err(Error::validation(
                "strip.c",
                "c = 1 is excluded: the band constraints would not involve x",
            ));
        }
        if self.c == -1.0 {
            return Err(Error::validation(
                "strip.c",
                "c = -1 is not supported: the x2 - x1 coefficient vanishes",
            ));
        }
        self.base.validate()
    }

    pub fn c1(&self) -> f64 {
        self.c - 1.0
    }

    pub fn c2(&self) -> f64 {
        self.c + 1.0
    }

    pub fn to_scaled(&self) -> ScaledChebyshevInstance {
        ScaledChebyshevInstance {
            base: self.base.to_chebyshev(),
            scale: vec![self.c1(), self.c2()],
        }
    }
}

fn strip_matrix(a: f64, b: f64) -> TropMatrix {
    TropMatrix::from_rows(vec![
        vec![MaxPlus::BOTTOM, MaxPlus::finite(2.0 * a)],
        vec![MaxPlus::finite(-2.0 * b), MaxPlus::BOTTOM],
    ])
    .expect("2x2")
}

pub fn check_strip(inst: &StripInstance) -> Result<FeasibilityReport> {
    inst.validate()?;
    chebyshev::check_feasibility(&inst.to_chebyshev())
}

pub fn check_tilted(inst: &TiltedStripInstance) -> Result<FeasibilityReport> {
    inst.validate()?;
    chebyshev::check_feasibility_scaled(&inst.to_scaled())
}

pub fn solve_strip(inst: &StripInstance) -> Result<SolutionBox> {
    inst.validate()?;
    let mut sol = chebyshev::solve_particular(&inst.to_chebyshev())?;
    sol.transform = Transform::Rotate45;
    Ok(sol)
}

pub fn solve_tilted(inst: &TiltedStripInstance) -> Result<SolutionBox> {
    inst.validate()?;
    let mut sol = chebyshev::solve_scaled(&inst.to_scaled())?;
    sol.transform = Transform::RotateScaled {
        c1: inst.c1(),
        c2: inst.c2(),
    };
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wide(points: Vec<[f64; 2]>, a: f64, b: f64) -> StripInstance {
        let m = points.len();
        StripInstance {
            points,
            weights: vec![1.0; m],
            addends: vec![0.0; m],
            caps: vec![None; m],
            lower: [-100.0, -100.0],
            upper: [100.0, 100.0],
            a,
            b,
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate([0.0, 0.0], Direction::Forward), [0.0, 0.0]);
        assert_eq!(rotate([4.0, 0.0], Direction::Forward), [4.0, -4.0]);
        assert_eq!(rotate([4.0, -4.0], Direction::Inverse), [4.0, 0.0]);
        let x = [1.25, -3.5];
        let p = [-0.5, 2.0];
        let (y, o) = (rotate(x, Direction::Forward), rotate(p, Direction::Forward));
        let cheb = (y[0] - o[0]).abs().max((y[1] - o[1]).abs());
        assert_eq!(rectilinear(x, p), cheb);
    }

    #[test]
    fn strip_matrix_closure() {
        let star = strip_matrix(-1.0, 3.0).closure().unwrap().unwrap();
        assert_eq!(
            star.to_options(),
            vec![vec![Some(0.0), Some(-2.0)], vec![Some(-6.0), Some(0.0)]]
        );
    }

    #[test]
    fn strip_examples() {
        let sol = solve_strip(&wide(vec![[0.0, 0.0], [2.0, 2.0]], -100.0, 100.0)).unwrap();
        assert_eq!(sol.theta, 2.0);

        let sol = solve_strip(&wide(vec![[0.0, 0.0], [4.0, 0.0]], 0.0, 0.0)).unwrap();
        assert_eq!(sol.theta, 4.0);
        assert_eq!(sol.member(&sol.u_lo.to_f64()), vec![0.0, 0.0]);
        assert_eq!(sol.member(&sol.u_hi.to_f64()), vec![0.0, 0.0]);

        let mut single = wide(vec![[1.0, 2.0]], -10.0, 10.0);
        single.addends = vec![7.0];
        assert_eq!(solve_strip(&single).unwrap().theta, 7.0);
    }

    #[test]
    fn tilted_example() {
        let inst = TiltedStripInstance {
            base: wide(vec![[0.0, 0.0], [0.0, 4.0]], 0.0, 0.0),
            c: 2.0,
        };
        let sol = solve_tilted(&inst).unwrap();
        assert_eq!(sol.theta, 3.0);
        assert_eq!(sol.member(&sol.u_lo.to_f64()), vec![1.0, 2.0]);
        assert_eq!(sol.member(&sol.u_hi.to_f64()), vec![1.0, 2.0]);
    }

    #[test]
    fn tilted_rejects_unit_slopes() {
        for c in [1.0, -1.0] {
            let inst = TiltedStripInstance {
                base: wide(vec![[0.0, 0.0]], 0.0, 0.0),
                c,
            };
            match solve_tilted(&inst) {
                Err(Error::Validation { field, .. }) => assert_eq!(field, "strip.c"),
                other => panic!("c = {c}: {other:?}"),
            }
        }
    }

    #[test]
    fn strip_rejects_reversed_bounds() {
        let inst = wide(vec![[0.0, 0.0]], 1.0, 0.0);
        assert!(matches!(inst.validate(), Err(Error::Validation { .. })));
    }
}
