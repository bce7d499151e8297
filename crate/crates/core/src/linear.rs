//! Solutions of the tropical linear inequalities `Ax ≤ d` and
//! `Ax ⊕ b ≤ x`, and of the double inequality `Ax ⊕ p ≤ x ≤ q`.

use crate::error::{Error, Result};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::MaxPlus;

/// Which certificate rules out a regular solution.
#[derive(Clone, Debug, PartialEq)]
pub enum Infeasible {
    /// `Tr(A) > 0`: the constraint graph has a positive cycle.
    Spectral { trace: MaxPlus },
    /// The lower bound exceeds the upper parameter bound in some coordinate.
    /// `excess` is `max_k (u_lo_k − u_hi_k) > 0`.
    BoundConflict { excess: f64 },
}

/// `{ generator ⊗ u : u_lo ≤ u ≤ u_hi }`, the upper side vacuous when absent.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricFamily {
    pub generator: TropMatrix,
    pub u_lo: TropVector,
    pub u_hi: Option<TropVector>,
}

impl ParametricFamily {
    pub fn is_nonempty(&self) -> bool {
        match &self.u_hi {
            Some(hi) => self.u_lo.le(hi).unwrap_or(false),
            None => true,
        }
    }

    /// The member for parameter `u`; `u` is not checked against the bounds.
    pub fn member(&self, u: &TropVector) -> Result<TropVector> {
        self.generator.mul_vec(u)
    }
}

/// Greatest solution `(d⁻A)⁻` of `Ax ≤ d`; `x` solves the inequality iff
/// `x` is below it componentwise.
pub fn solve_upper(a: &TropMatrix, d: &TropVector) -> Result<TropVector> {
    if a.rows() != d.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with right-hand side of length {}",
            a.rows(),
            a.cols(),
            d.len()
        )));
    }
    if a.has_zero_column() {
        return Err(Error::Domain("matrix has a zero column".into()));
    }
    if !d.is_regular() {
        return Err(Error::Domain("right-hand side is not regular".into()));
    }
    Ok(a.row_times(&d.conj_unchecked())?.conj_unchecked())
}

/// All regular solutions of `Ax ⊕ b ≤ x`: `x = A*u` with `u ≥ b`.
pub fn solve_fixed_point(
    a: &TropMatrix,
    b: &TropVector,
) -> Result<Result<ParametricFamily, Infeasible>> {
    if !a.is_square() || a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with vector of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let (trace, star) = a.trace_and_closure()?;
    Ok(match star {
        Some(generator) => Ok(ParametricFamily {
            generator,
            u_lo: b.clone(),
            u_hi: None,
        }),
        None => Err(Infeasible::Spectral { trace }),
    })
}

/// All regular solutions of `Ax ⊕ p ≤ x ≤ q` for regular `q`:
/// `x = A*u` with `p ≤ u ≤ (q⁻A*)⁻`.
pub fn solve_double(
    a: &TropMatrix,
    p: &TropVector,
    q: &TropVector,
) -> Result<Result<ParametricFamily, Infeasible>> {
    let (trace, star) = a.trace_and_closure()?;
    let Some(star) = star else {
        return Ok(Err(Infeasible::Spectral { trace }));
    };
    solve_double_with_closure(star, p, q)
}

/// As [`solve_double`], with `A*` already computed.
pub fn solve_double_with_closure(
    star: TropMatrix,
    p: &TropVector,
    q: &TropVector,
) -> Result<Result<ParametricFamily, Infeasible>> {
    if !star.is_square() || star.rows() != p.len() || p.len() != q.len() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix with bounds of lengths {} and {}",
            star.rows(),
            star.cols(),
            p.len(),
            q.len()
        )));
    }
    if !q.is_regular() {
        return Err(Error::Domain("upper bound is not regular".into()));
    }
    // A* ≥ I, so the closure has no zero column.
    let u_hi = solve_upper(&star, q)?;
    let excess = p
        .iter()
        .zip(u_hi.iter())
        .filter(|(lo, _)| lo.is_finite())
        .map(|(lo, hi)| lo.value() - hi.value())
        .fold(f64::NEG_INFINITY, f64::max);
    if excess > 0.0 {
        return Ok(Err(Infeasible::BoundConflict { excess }));
    }
    Ok(Ok(ParametricFamily {
        generator: star,
        u_lo: p.clone(),
        u_hi: Some(u_hi),
    }))
}
