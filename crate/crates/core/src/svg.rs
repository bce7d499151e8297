//! Plot of a planar instance: the given points, the outline of the feasible
//! region and the sampled optimal members.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::instance::{HalfSpace, Instance};
use crate::solution::SolutionBox;

type P = [f64; 2];

/// Sutherland-Hodgman clip of a convex polygon by `a·x ≤ rhs`.
fn clip(poly: &[P], h: &HalfSpace) -> Vec<P> {
    let side = |p: &P| h.a[0] * p[0] + h.a[1] * p[1] - h.rhs;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for (i, cur) in poly.iter().enumerate() {
        let prev = &poly[(i + poly.len() - 1) % poly.len()];
        let (sc, sp) = (side(cur), side(prev));
        if (sc <= 0.0) != (sp <= 0.0) {
            let t = sp / (sp - sc);
            out.push([prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1])]);
        }
        if sc <= 0.0 {
            out.push(*cur);
        }
    }
    out
}

/// Vertices of the feasible region, empty when it is empty.
pub fn feasible_polygon(inst: &Instance) -> Vec<P> {
    let (lo, hi) = inst.bounding_box();
    let mut poly = vec![[lo[0], lo[1]], [hi[0], lo[1]], [hi[0], hi[1]], [lo[0], hi[1]]];
    for h in inst.half_spaces() {
        if poly.is_empty() {
            break;
        }
        poly = clip(&poly, &h);
    }
    poly
}

fn coords(ps: &[P]) -> String {
    ps.iter()
        .map(|p| format!("{},{}", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(inst: &Instance, sol: &SolutionBox, members: &[Vec<f64>]) -> Result<String> {
    if inst.dim() != 2 {
        return Err(Error::Unsupported(format!(
            "svg output needs a planar instance, got dimension {}",
            inst.dim()
        )));
    }
    let points: Vec<P> = inst.points().iter().map(|p| [p[0], p[1]]).collect();
    let region = feasible_polygon(inst);
    let samples: Vec<P> = members.iter().map(|x| [x[0], x[1]]).collect();

    let all = points.iter().chain(&region).chain(&samples);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in all {
        x0 = x0.min(p[0]);
        y0 = y0.min(p[1]);
        x1 = x1.max(p[0]);
        y1 = y1.max(p[1]);
    }
    let span = (x1 - x0).max(y1 - y0).max(1.0);
    let pad = 0.05 * span;
    let r = 0.008 * span;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="640" height="640">"#,
        x0 - pad,
        -(y1 + pad),
        x1 - x0 + 2.0 * pad,
        y1 - y0 + 2.0 * pad
    )
    .unwrap();
    writeln!(s, "<title>theta = {}</title>", sol.theta).unwrap();
    // flip so that x2 grows upwards
    s.push_str("<g transform=\"scale(1,-1)\">\n");
    if !region.is_empty() {
        writeln!(
            s,
            r##"<polygon class="feasible" points="{}" fill="#dde8f6" stroke="#3b6db3" stroke-width="1" vector-effect="non-scaling-stroke"/>"##,
            coords(&region)
        )
        .unwrap();
    }
    if samples.len() >= 2 {
        writeln!(
            s,
            r##"<line class="solution" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c0392b" stroke-width="2" vector-effect="non-scaling-stroke"/>"##,
            samples[0][0], samples[0][1], samples[1][0], samples[1][1]
        )
        .unwrap();
    }
    for p in &samples {
        writeln!(
            s,
            r##"<rect class="sample" x="{}" y="{}" width="{}" height="{}" fill="#c0392b"/>"##,
            p[0] - r / 2.0,
            p[1] - r / 2.0,
            r,
            r
        )
        .unwrap();
    }
    for p in &points {
        writeln!(
            s,
            r##"<circle class="point" cx="{}" cy="{}" r="{r}" fill="#222"/>"##,
            p[0], p[1]
        )
        .unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::ChebyshevInstance;
    use crate::matrix::TropMatrix;
    use crate::rectilinear::StripInstance;
    use crate::solution::sample;

    #[test]
    fn strip_plot_has_one_marker_per_point() {
        let inst = Instance::Strip(StripInstance {
            points: vec![[0.0, 0.0], [4.0, 0.0], [1.0, 3.0]],
            weights: vec![1.0; 3],
            addends: vec![0.0; 3],
            caps: vec![None; 3],
            lower: [-100.0, -100.0],
            upper: [100.0, 100.0],
            a: 0.0,
            b: 2.0,
        });
        let sol = inst.solve().unwrap();
        let svg = render(&inst, &sol, &sample(&sol, 5, 0).unwrap()).unwrap();
        assert_eq!(svg.matches("<circle class=\"point\"").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 3);
        assert!(svg.contains("class=\"feasible\""));
        assert!(svg.contains("class=\"solution\""));
    }

    #[test]
    fn strip_region_is_clipped_to_strip() {
        let inst = Instance::Strip(StripInstance {
            points: vec![[0.0, 0.0]],
            weights: vec![1.0],
            addends: vec![0.0],
            caps: vec![None],
            lower: [-10.0, -10.0],
            upper: [10.0, 10.0],
            a: -1.0,
            b: 2.0,
        });
        let poly = feasible_polygon(&inst);
        assert!(poly.len() >= 4);
        assert!(poly.iter().all(|p| (-1.0..=2.0).contains(&p[0])));
        assert!(poly
            .iter()
            .all(|p| inst.constraint_violation(&[p[0], p[1]]).unwrap() <= 1e-9));
    }

    #[test]
    fn three_dimensions_unsupported() {
        let inst = Instance::Chebyshev(ChebyshevInstance {
            points: vec![vec![0.0; 3]],
            weights: vec![1.0],
            addends: vec![0.0],
            caps: vec![None],
            lower: vec![-1.0; 3],
            upper: vec![1.0; 3],
            constraints: TropMatrix::bottom(3, 3),
        });
        let sol = inst.solve().unwrap();
        assert!(matches!(render(&inst, &sol, &[]), Err(Error::Unsupported(_))));
    }
}
