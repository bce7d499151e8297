//! Constrained minimax location with Chebyshev distance in `n` dimensions.
//!
//! The problem is
//!
//! ```text
//! minimise   max_j ( w_j · d∞(x, p_j) + h_j )
//! subject to d∞(x, p_j) ≤ d_j          (caps, optional per point)
//!            b_ik + c_k x_k ≤ c_i x_i   (half-spaces, b_ik may be −∞)
//!            f ≤ x ≤ g
//! ```
//!
//! with `c ≡ 1` in the particular case. Writing the constraints as the
//! max-plus double inequality `Bz ⊕ (q ⊕ s) ≤ z ≤ (r⁻ ⊕ t⁻)⁻` over
//! `z_i = c_i x_i` gives two certificates of consistency, `Tr(B) ≤ 0` and
//! `t⁻B*s ≤ 0`, a closed form for the optimum `θ`, and the full optimal set
//! `z = B*u` with `q ⊕ s ≤ u ≤ ((r⁻ ⊕ t⁻)B*)⁻`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::{self, Infeasible};
use crate::matrix::{TropMatrix, TropVector};
use crate::scalar::MaxPlus;
use crate::solution::{SolutionBox, Transform};

#[derive(Clone, Debug, PartialEq)]
pub struct ChebyshevInstance {
    /// `m` points, each of length `n`.
    pub points: Vec<Vec<f64>>,
    pub weights: Vec<f64>,
    pub addends: Vec<f64>,
    /// Distance caps; `None` drops the constraint for that point.
    pub caps: Vec<Option<f64>>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// `B`, with `b_ik + x_k ≤ x_i` for every finite entry.
    pub constraints: TropMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScaledChebyshevInstance {
    pub base: ChebyshevInstance,
    /// Nonzero coefficients `c_i`; constraints read `b_ik + c_k x_k ≤ c_i x_i`.
    pub scale: Vec<f64>,
}

/// `q`, `r` (objective level bounds, present once `θ` is known) and
/// `s`, `t` (cap and box bounds).
#[derive(Clone, Debug, PartialEq)]
pub struct BoundVectors {
    pub q: Option<TropVector>,
    pub r: Option<TropVector>,
    pub s: TropVector,
    pub t: TropVector,
}

/// The two consistency certificates with their numeric witnesses.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeasibilityReport {
    /// `Tr(B)`.
    pub trace: MaxPlus,
    pub spectral_ok: bool,
    /// `t⁻B*s`; only evaluated when the closure exists.
    pub bounds_value: Option<MaxPlus>,
    pub bounds_ok: bool,
    pub feasible: bool,
}

impl FeasibilityReport {
    fn new(trace: MaxPlus, bounds_value: Option<MaxPlus>) -> Self {
        let spectral_ok = trace <= MaxPlus::ONE;
        let bounds_ok = spectral_ok && bounds_value.is_some_and(|v| v <= MaxPlus::ONE);
        FeasibilityReport {
            trace,
            spectral_ok,
            bounds_value,
            bounds_ok,
            feasible: spectral_ok && bounds_ok,
        }
    }
}

impl ChebyshevInstance {
    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let m = self.num_points();
        if n == 0 {
            return Err(Error::validation("lower", "dimension must be at least 1"));
        }
        if m == 0 {
            return Err(Error::validation("points", "at least one point is required"));
        }
        check_len("upper", self.upper.len(), n)?;
        check_len("weights", self.weights.len(), m)?;
        check_len("addends", self.addends.len(), m)?;
        check_len("caps", self.caps.len(), m)?;
        for (j, p) in self.points.iter().enumerate() {
            check_len(&format!("points[{j}]"), p.len(), n)?;
            for (i, v) in p.iter().enumerate() {
                check_finite(&format!("points[{j}][{i}]"), *v)?;
            }
        }
        for (j, &w) in self.weights.iter().enumerate() {
            check_finite(&format!("weights[{j}]"), w)?;
            if w <= 0.0 {
                return Err(Error::validation(format!("weights[{j}]"), "must be > 0"));
            }
        }
        for (j, &h) in self.addends.iter().enumerate() {
            check_finite(&format!("addends[{j}]"), h)?;
        }
        for (j, d) in self.caps.iter().enumerate() {
            if let Some(d) = *d {
                check_finite(&format!("caps[{j}]"), d)?;
                if d <= 0.0 {
                    return Err(Error::validation(format!("caps[{j}]"), "must be > 0"));
                }
            }
        }
        for i in 0..n {
            check_finite(&format!("lower[{i}]"), self.lower[i])?;
            check_finite(&format!("upper[{i}]"), self.upper[i])?;
            if self.lower[i] > self.upper[i] {
                return Err(Error::validation(
                    format!("lower[{i}]"),
                    format!("exceeds upper[{i}] ({} > {})", self.lower[i], self.upper[i]),
                ));
            }
        }
        if self.constraints.rows() != n || self.constraints.cols() != n {
            return Err(Error::validation(
                "B",
                format!(
                    "expected {n}x{n}, got {}x{}",
                    self.constraints.rows(),
                    self.constraints.cols()
                ),
            ));
        }
        Ok(())
    }

    pub(crate) fn point_vector(&self, j: usize) -> TropVector {
        TropVector::from_finite(&self.points[j])
    }
}

impl ScaledChebyshevInstance {
    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        check_len("c", self.scale.len(), self.dim())?;
        for (i, &c) in self.scale.iter().enumerate() {
            check_finite(&format!("c[{i}]"), c)?;
            if c == 0.0 {
                return Err(Error::validation(format!("c[{i}]"), "must be nonzero"));
            }
        }
        Ok(())
    }
}

fn check_len(field: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::validation(
            field,
            format!("expected length {want}, got {got}"),
        ));
    }
    Ok(())
}

fn check_finite(field: &str, v: f64) -> Result<()> {
    if !v.is_finite() {
        return Err(Error::validation(field, format!("{v} is not a finite real")));
    }
    Ok(())
}

/// Mixed-pair lower bound on `θ` from points `j`, `l`:
/// `(α h_j + β h_l)/(α + β) + w_j w_l/(α + β) · gap`.
#[inline]
fn pair_bound(alpha: f64, beta: f64, hj: f64, hl: f64, wj: f64, wl: f64, gap: f64) -> f64 {
    (alpha * hj + beta * hl) / (alpha + beta) + (wj * wl) / (alpha + beta) * gap
}

// ---------------------------------------------------------------------------
// Particular case, c ≡ 1
// ---------------------------------------------------------------------------

/// Builds `s`, `t`, and with `θ` also `q`, `r`.
pub fn assemble_bounds(inst: &ChebyshevInstance, theta: Option<f64>) -> BoundVectors {
    let n = inst.dim();
    let mut s = inst.lower.clone();
    let mut t = inst.upper.clone();
    for (p, cap) in inst.points.iter().zip(&inst.caps) {
        if let Some(d) = *cap {
            for i in 0..n {
                s[i] = s[i].max(p[i] - d);
                t[i] = t[i].min(p[i] + d);
            }
        }
    }
    let (q, r) = match theta {
        Some(theta) => {
            let mut q = vec![f64::NEG_INFINITY; n];
            let mut r = vec![f64::INFINITY; n];
            for ((p, &w), &h) in inst.points.iter().zip(&inst.weights).zip(&inst.addends) {
                for i in 0..n {
                    q[i] = q[i].max((h - theta) / w + p[i]);
                    r[i] = r[i].min((theta - h) / w + p[i]);
                }
            }
            (
                Some(TropVector::from_finite(&q)),
                Some(TropVector::from_finite(&r)),
            )
        }
        None => (None, None),
    };
    BoundVectors {
        q,
        r,
        s: TropVector::from_finite(&s),
        t: TropVector::from_finite(&t),
    }
}

/// Evaluates `Tr(B) ≤ 0` and `t⁻B*s ≤ 0`.
pub fn check_feasibility(inst: &ChebyshevInstance) -> Result<FeasibilityReport> {
    inst.validate()?;
    let bounds = assemble_bounds(inst, None);
    Ok(certificates(&inst.constraints, &bounds)?.0)
}

fn certificates(
    b: &TropMatrix,
    bounds: &BoundVectors,
) -> Result<(FeasibilityReport, Option<TropMatrix>)> {
    let (trace, star) = b.trace_and_closure()?;
    let bounds_value = match &star {
        Some(star) => Some(star.row_times(&bounds.t.conj_unchecked())?.dot(&bounds.s)?),
        None => None,
    };
    Ok((FeasibilityReport::new(trace, bounds_value), star))
}

/// Optimal value `θ` of a feasible instance.
pub fn compute_theta(inst: &ChebyshevInstance) -> Result<f64> {
    inst.validate()?;
    let bounds = assemble_bounds(inst, None);
    match certificates(&inst.constraints, &bounds)? {
        (report, Some(star)) if report.feasible => Ok(theta_particular(inst, &star, &bounds)),
        (report, _) => Err(Error::Contract(format!(
            "optimum requested for an infeasible instance ({report:?})"
        ))),
    }
}

/// `θ` given a precomputed closure `B*`; the instance must be feasible.
pub fn compute_theta_with_closure(inst: &ChebyshevInstance, star: &TropMatrix) -> f64 {
    theta_particular(inst, star, &assemble_bounds(inst, None))
}

fn theta_particular(inst: &ChebyshevInstance, star: &TropMatrix, bounds: &BoundVectors) -> f64 {
    let m = inst.num_points();
    let points: Vec<TropVector> = (0..m).map(|j| inst.point_vector(j)).collect();
    // p_j⁻ B* and t⁻ B*, shapes already validated
    let rows: Vec<TropVector> = points
        .iter()
        .map(|p| star.row_times(&p.conj_unchecked()).expect("shape"))
        .collect();
    let t_row = star.row_times(&bounds.t.conj_unchecked()).expect("shape");

    let w = &inst.weights;
    let h = &inst.addends;
    let mut theta = f64::NEG_INFINITY;
    for j in 0..m {
        // h_j (p_j⁻ B* s)^{w_j}
        let lower_gap = rows[j].dot_unchecked(&bounds.s).value();
        theta = theta.max(h[j] + w[j] * lower_gap);
        // h_j (t⁻ B* p_j)^{w_j}
        let upper_gap = t_row.dot_unchecked(&points[j]).value();
        theta = theta.max(h[j] + w[j] * upper_gap);
        for l in 0..m {
            let gap = rows[j].dot_unchecked(&points[l]).value();
            theta = theta.max(pair_bound(w[l], w[j], h[j], h[l], w[j], w[l], gap));
        }
    }
    theta
}

/// Complete optimal set of a particular-case instance.
pub fn solve_particular(inst: &ChebyshevInstance) -> Result<SolutionBox> {
    inst.validate()?;
    let bounds = assemble_bounds(inst, None);
    let (report, star) = certificates(&inst.constraints, &bounds)?;
    let star = match star {
        Some(star) if report.feasible => star,
        _ => return Err(Error::Infeasible(Box::new(report))),
    };
    let theta = theta_particular(inst, &star, &bounds);
    let bounds = assemble_bounds(inst, Some(theta));
    assemble_box(theta, star, &bounds, Transform::Identity, report)
}

/// Lower `q ⊕ s`, upper `(r⁻ ⊕ t⁻)⁻`, then the double inequality.
fn assemble_box(
    theta: f64,
    star: TropMatrix,
    bounds: &BoundVectors,
    transform: Transform,
    report: FeasibilityReport,
) -> Result<SolutionBox> {
    let q = bounds.q.as_ref().expect("level bounds present");
    let r = bounds.r.as_ref().expect("level bounds present");
    let lower = q.oplus(&bounds.s)?;
    let upper = r.conj_unchecked().oplus(&bounds.t.conj_unchecked())?.conj_unchecked();
    let family = match linear::solve_double_with_closure(star.clone(), &lower, &upper)? {
        Ok(family) => family,
        Err(Infeasible::BoundConflict { excess }) if excess <= rounding_slack(&lower, &upper) => {
            // θ sits exactly on the boundary of nonemptiness; a last-bit
            // disagreement between u_lo and u_hi is closed by lifting u_hi.
            let u_hi = linear::solve_upper(&star, &upper)?;
            let u_hi = u_hi.oplus(&lower)?;
            linear::ParametricFamily {
                generator: star,
                u_lo: lower,
                u_hi: Some(u_hi),
            }
        }
        Err(cause) => {
            return Err(Error::Contract(format!(
                "empty optimal set at θ = {theta}: {cause:?} ({report:?})"
            )))
        }
    };
    Ok(SolutionBox {
        theta,
        generator: family.generator,
        u_lo: family.u_lo,
        u_hi: family.u_hi.expect("bounded family"),
        transform,
    })
}

fn rounding_slack(lower: &TropVector, upper: &TropVector) -> f64 {
    let scale = lower
        .iter()
        .chain(upper.iter())
        .filter(|x| x.is_finite())
        .map(|x| x.value().abs())
        .fold(1.0, f64::max);
    1e-12 * scale
}

// ---------------------------------------------------------------------------
// General case, arbitrary nonzero c
// ---------------------------------------------------------------------------

/// Bounds in the coordinates `z_i = c_i x_i`.
pub fn assemble_bounds_scaled(inst: &ScaledChebyshevInstance, theta: Option<f64>) -> BoundVectors {
    let base = &inst.base;
    let n = base.dim();
    let c = &inst.scale;
    let mut s: Vec<f64> = (0..n)
        .map(|i| (c[i] * base.lower[i]).min(c[i] * base.upper[i]))
        .collect();
    let mut t: Vec<f64> = (0..n)
        .map(|i| (c[i] * base.lower[i]).max(c[i] * base.upper[i]))
        .collect();
    for (p, cap) in base.points.iter().zip(&base.caps) {
        if let Some(d) = *cap {
            for i in 0..n {
                s[i] = s[i].max(c[i] * p[i] - c[i].abs() * d);
                t[i] = t[i].min(c[i] * p[i] + c[i].abs() * d);
            }
        }
    }
    let (q, r) = match theta {
        Some(theta) => {
            let mut q = vec![f64::NEG_INFINITY; n];
            let mut r = vec![f64::INFINITY; n];
            for ((p, &w), &h) in base.points.iter().zip(&base.weights).zip(&base.addends) {
                for i in 0..n {
                    q[i] = q[i].max(c[i].abs() * (h - theta) / w + c[i] * p[i]);
                    r[i] = r[i].min(c[i].abs() * (theta - h) / w + c[i] * p[i]);
                }
            }
            (
                Some(TropVector::from_finite(&q)),
                Some(TropVector::from_finite(&r)),
            )
        }
        None => (None, None),
    };
    BoundVectors {
        q,
        r,
        s: TropVector::from_finite(&s),
        t: TropVector::from_finite(&t),
    }
}

pub fn check_feasibility_scaled(inst: &ScaledChebyshevInstance) -> Result<FeasibilityReport> {
    inst.validate()?;
    let bounds = assemble_bounds_scaled(inst, None);
    Ok(certificates(&inst.base.constraints, &bounds)?.0)
}

pub fn compute_theta_scaled(inst: &ScaledChebyshevInstance) -> Result<f64> {
    inst.validate()?;
    let bounds = assemble_bounds_scaled(inst, None);
    match certificates(&inst.base.constraints, &bounds)? {
        (report, Some(star)) if report.feasible => Ok(theta_scaled(inst, &star, &bounds)),
        (report, _) => Err(Error::Contract(format!(
            "optimum requested for an infeasible instance ({report:?})"
        ))),
    }
}

pub fn compute_theta_scaled_with_closure(inst: &ScaledChebyshevInstance, star: &TropMatrix) -> f64 {
    theta_scaled(inst, star, &assemble_bounds_scaled(inst, None))
}

/// Scalar form over all `i, k, j, l`, `O(m²n²)`.
fn theta_scaled(inst: &ScaledChebyshevInstance, star: &TropMatrix, bounds: &BoundVectors) -> f64 {
    let base = &inst.base;
    let n = base.dim();
    let m = base.num_points();
    let c = &inst.scale;
    let p = &base.points;
    let w = &base.weights;
    let h = &base.addends;
    let s = bounds.s.to_f64();
    let t = bounds.t.to_f64();

    let mut theta = f64::NEG_INFINITY;
    for i in 0..n {
        let ci = c[i].abs();
        for k in 0..n {
            let b = star.get(i, k);
            if b.is_bottom() {
                continue;
            }
            let b = b.value();
            let ck = c[k].abs();
            for j in 0..m {
                let left = b - c[i] * p[j][i];
                theta = theta.max(h[j] + (w[j] / ci) * (left + s[k]));
                for l in 0..m {
                    let gap = left + c[k] * p[l][k];
                    theta = theta.max(pair_bound(ci * w[l], ck * w[j], h[j], h[l], w[j], w[l], gap));
                }
            }
            let right = b - t[i];
            for l in 0..m {
                theta = theta.max(h[l] + (w[l] / ck) * (right + c[k] * p[l][k]));
            }
        }
    }
    theta
}

/// Complete optimal set; the box lives in `z = c ∘ x` and maps back by
/// `x_i = z_i / c_i`.
pub fn solve_scaled(inst: &ScaledChebyshevInstance) -> Result<SolutionBox> {
    inst.validate()?;
    let bounds = assemble_bounds_scaled(inst, None);
    let (report, star) = certificates(&inst.base.constraints, &bounds)?;
    let star = match star {
        Some(star) if report.feasible => star,
        _ => return Err(Error::Infeasible(Box::new(report))),
    };
    let theta = theta_scaled(inst, &star, &bounds);
    let bounds = assemble_bounds_scaled(inst, Some(theta));
    assemble_box(
        theta,
        star,
        &bounds,
        Transform::Scale { c: inst.scale.clone() },
        report,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_point(upper: [f64; 2]) -> ChebyshevInstance {
        ChebyshevInstance {
            points: vec![vec![0.0, 0.0], vec![4.0, 0.0]],
            weights: vec![1.0, 1.0],
            addends: vec![0.0, 0.0],
            caps: vec![Some(10.0), Some(10.0)],
            lower: vec![-10.0, -10.0],
            upper: upper.to_vec(),
            constraints: TropMatrix::bottom(2, 2),
        }
    }

    fn one_dim(points: &[f64], caps: Option<f64>, lo: f64, hi: f64) -> ChebyshevInstance {
        let m = points.len();
        ChebyshevInstance {
            points: points.iter().map(|&p| vec![p]).collect(),
            weights: vec![1.0; m],
            addends: vec![0.0; m],
            caps: vec![caps; m],
            lower: vec![lo],
            upper: vec![hi],
            constraints: TropMatrix::bottom(1, 1),
        }
    }

    #[test]
    fn bounds_examples() {
        let b = assemble_bounds(&two_point([10.0, 10.0]), None);
        assert_eq!(b.s, TropVector::from_finite(&[-6.0, -10.0]));
        assert_eq!(b.t, TropVector::from_finite(&[10.0, 10.0]));
        assert!(b.q.is_none() && b.r.is_none());

        let mut inst = two_point([10.0, 10.0]);
        inst.caps = vec![None, None];
        inst.lower = vec![0.0, 0.0];
        inst.upper = vec![0.0, 0.0];
        let b = assemble_bounds(&inst, None);
        assert_eq!(b.s, b.t);
        assert_eq!(b.s, TropVector::from_finite(&[0.0, 0.0]));

        let single = ChebyshevInstance {
            points: vec![vec![1.5, -2.0]],
            weights: vec![1.0],
            addends: vec![3.0],
            caps: vec![None],
            lower: vec![-5.0, -5.0],
            upper: vec![5.0, 5.0],
            constraints: TropMatrix::bottom(2, 2),
        };
        let b = assemble_bounds(&single, Some(3.0));
        assert_eq!(b.q.unwrap(), TropVector::from_finite(&[1.5, -2.0]));
        assert_eq!(b.r.unwrap(), TropVector::from_finite(&[1.5, -2.0]));
    }

    #[test]
    fn feasibility_examples() {
        let mut inst = one_dim(&[0.0], None, -1.0, 1.0);
        inst.constraints = TropMatrix::from_options(&[vec![Some(1.0)]]).unwrap();
        let rep = check_feasibility(&inst).unwrap();
        assert!(!rep.spectral_ok && !rep.feasible);
        assert_eq!(rep.trace, MaxPlus::finite(1.0));
        assert!(rep.bounds_value.is_none());

        let rep = check_feasibility(&one_dim(&[0.0, 10.0], Some(1.0), -100.0, 100.0)).unwrap();
        assert!(rep.spectral_ok && !rep.bounds_ok && !rep.feasible);
        assert_eq!(rep.bounds_value, Some(MaxPlus::finite(8.0)));

        let rep = check_feasibility(&one_dim(&[0.0, 10.0], Some(1e6), -1e6, 1e6)).unwrap();
        assert!(rep.feasible);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(compute_theta(&two_point([10.0, 10.0])).unwrap(), 2.0);
        assert_eq!(compute_theta(&two_point([1.0, 10.0])).unwrap(), 3.0);
        let mut single = one_dim(&[0.5], Some(100.0), -10.0, 10.0);
        single.addends = vec![5.0];
        assert_eq!(compute_theta(&single).unwrap(), 5.0);
    }

    #[test]
    fn theta_on_infeasible_is_contract_error() {
        let inst = one_dim(&[0.0, 10.0], Some(1.0), -100.0, 100.0);
        assert!(matches!(compute_theta(&inst), Err(Error::Contract(_))));
        assert!(matches!(solve_particular(&inst), Err(Error::Infeasible(_))));
    }

    #[test]
    fn solve_two_point() {
        let sol = solve_particular(&two_point([10.0, 10.0])).unwrap();
        assert_eq!(sol.theta, 2.0);
        assert_eq!(sol.u_lo, TropVector::from_finite(&[2.0, -2.0]));
        assert_eq!(sol.u_hi, TropVector::from_finite(&[2.0, 2.0]));

        let sol = solve_particular(&two_point([1.0, 10.0])).unwrap();
        assert_eq!(sol.theta, 3.0);
        assert_eq!(sol.u_hi.get(0), MaxPlus::finite(1.0));
    }

    #[test]
    fn solve_single_point_contains_it() {
        let mut single = one_dim(&[0.5], Some(100.0), -10.0, 10.0);
        single.addends = vec![5.0];
        let sol = solve_particular(&single).unwrap();
        assert_eq!(sol.u_lo, TropVector::from_finite(&[0.5]));
        assert_eq!(sol.u_hi, TropVector::from_finite(&[0.5]));
    }

    #[test]
    fn scaled_examples() {
        let base = one_dim(&[0.0, 4.0], Some(100.0), -100.0, 100.0);
        for c in [2.0, -3.0] {
            let inst = ScaledChebyshevInstance {
                base: base.clone(),
                scale: vec![c],
            };
            assert_eq!(compute_theta_scaled(&inst).unwrap(), 2.0, "c = {c}");
            let sol = solve_scaled(&inst).unwrap();
            let x = sol.member(&sol.u_lo.to_f64());
            assert_eq!(x, vec![2.0]);
        }
    }

    #[test]
    fn scaled_with_unit_scale_matches_particular() {
        let inst = two_point([1.0, 10.0]);
        let scaled = ScaledChebyshevInstance {
            base: inst.clone(),
            scale: vec![1.0, 1.0],
        };
        let a = solve_particular(&inst).unwrap();
        let b = solve_scaled(&scaled).unwrap();
        assert_eq!(a.theta.to_bits(), b.theta.to_bits());
        assert_eq!(a.u_lo, b.u_lo);
        assert_eq!(a.u_hi, b.u_hi);
        assert_eq!(a.generator, b.generator);
    }

    #[test]
    fn validation_names_fields() {
        let mut inst = two_point([10.0, 10.0]);
        inst.weights[1] = 0.0;
        match inst.validate() {
            Err(Error::Validation { field, .. }) => assert_eq!(field, "weights[1]"),
            other => panic!("unexpected {other:?}"),
        }
        let mut inst = two_point([10.0, 10.0]);
        inst.lower[0] = 11.0;
        assert!(matches!(inst.validate(), Err(Error::Validation { .. })));
        let scaled = ScaledChebyshevInstance {
            base: two_point([10.0, 10.0]),
            scale: vec![1.0, 0.0],
        };
        match scaled.validate() {
            Err(Error::Validation { field, .. }) => assert_eq!(field, "c[1]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_box_is_a_point() {
        let inst = ChebyshevInstance {
            points: vec![vec![0.0, 0.0], vec![3.0, 1.0]],
            weights: vec![1.0, 2.0],
            addends: vec![0.0, 0.0],
            caps: vec![None, None],
            lower: vec![1.0, 1.0],
            upper: vec![1.0, 1.0],
            constraints: TropMatrix::bottom(2, 2),
        };
        let sol = solve_particular(&inst).unwrap();
        // objective at (1,1): max(1, 2*2) = 4
        assert_eq!(sol.theta, 4.0);
        assert_eq!(sol.member(&sol.u_lo.to_f64()), vec![1.0, 1.0]);
        assert_eq!(sol.member(&sol.u_hi.to_f64()), vec![1.0, 1.0]);
    }
}
