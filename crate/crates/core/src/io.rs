//! JSON instance documents and solution output.
//!
//! ```json
//! { "variant": "chebyshev", "n": 2, "m": 1,
//!   "points": [[0, 0]], "weights": [1], "addends": [0], "caps": [null],
//!   "lower": [-1, -1], "upper": [1, 1], "B": [[null, null], [null, null]] }
//! ```
//!
//! `null` in `B` is `−∞`; a `null` cap or an absent `caps` array drops the
//! constraint. `chebyshev_scaled` adds `"c": [..]`. The rectilinear variants
//! replace `B` by `"strip": {"a": .., "b": ..}` (plus `"c"` when tilted) and
//! read `lower`/`upper` as bounds on `x₁ + x₂` and `x₂ − x₁`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chebyshev::{ChebyshevInstance, ScaledChebyshevInstance};
use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matrix::TropMatrix;
use crate::rectilinear::{StripInstance, TiltedStripInstance};
use crate::solution::{self, SolutionBox, Transform};
use crate::svg;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub variant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub addends: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<Vec<Option<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<f64>>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<Option<f64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strip: Option<StripDocument>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StripDocument {
    pub a: f64,
    pub b: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
}

fn required<T>(field: &str, v: Option<T>) -> Result<T> {
    v.ok_or_else(|| Error::validation(field, "missing"))
}

fn pair(field: &str, v: Vec<f64>) -> Result<[f64; 2]> {
    <[f64; 2]>::try_from(v.as_slice())
        .map_err(|_| Error::validation(field, format!("expected length 2, got {}", v.len())))
}

fn forbid<T>(field: &str, v: &Option<T>, variant: &str) -> Result<()> {
    if v.is_some() {
        return Err(Error::validation(field, format!("not allowed for variant {variant}")));
    }
    Ok(())
}

impl InstanceDocument {
    /// Converts to a typed instance and checks every invariant.
    pub fn into_instance(self) -> Result<Instance> {
        const VARIANTS: [&str; 4] = [
            "chebyshev",
            "chebyshev_scaled",
            "rectilinear_strip",
            "rectilinear_tilted",
        ];
        if !VARIANTS.contains(&self.variant.as_str()) {
            return Err(Error::validation(
                "variant",
                format!("unknown variant {:?}; expected one of {VARIANTS:?}", self.variant),
            ));
        }
        let points = required("points", self.points)?;
        let m = points.len();
        if let Some(dm) = self.m {
            if dm != m {
                return Err(Error::validation("m", format!("is {dm} but {m} points given")));
            }
        }
        let weights = required("weights", self.weights)?;
        let addends = required("addends", self.addends)?;
        let caps = self.caps.unwrap_or_else(|| vec![None; m]);
        let lower = required("lower", self.lower)?;
        let upper = required("upper", self.upper)?;
        let variant = self.variant.as_str();

        let instance = match variant {
            "chebyshev" | "chebyshev_scaled" => {
                forbid("strip", &self.strip, variant)?;
                let n = lower.len();
                if let Some(dn) = self.n {
                    if dn != n {
                        return Err(Error::validation("n", format!("is {dn} but lower has length {n}")));
                    }
                }
                let rows = required("B", self.b)?;
                if rows.len() != n {
                    return Err(Error::validation("B", format!("expected {n} rows, got {}", rows.len())));
                }
                for (i, row) in rows.iter().enumerate() {
                    if row.len() != n {
                        return Err(Error::validation(
                            format!("B[{i}]"),
                            format!("expected length {n}, got {}", row.len()),
                        ));
                    }
                }
                let constraints = TropMatrix::from_options(&rows)?;
                let base = ChebyshevInstance {
                    points,
                    weights,
                    addends,
                    caps,
                    lower,
                    upper,
                    constraints,
                };
                if variant == "chebyshev" {
                    forbid("c", &self.c, variant)?;
                    Instance::Chebyshev(base)
                } else {
                    Instance::ChebyshevScaled(ScaledChebyshevInstance {
                        base,
                        scale: required("c", self.c)?,
                    })
                }
            }
            "rectilinear_strip" | "rectilinear_tilted" => {
                forbid("B", &self.b, variant)?;
                forbid("c", &self.c, variant)?;
                if let Some(dn) = self.n {
                    if dn != 2 {
                        return Err(Error::validation("n", "rectilinear instances are planar (n = 2)"));
                    }
                }
                let strip = required("strip", self.strip)?;
                let points = points
                    .into_iter()
                    .enumerate()
                    .map(|(j, p)| pair(&format!("points[{j}]"), p))
                    .collect::<Result<Vec<_>>>()?;
                let base = StripInstance {
                    points,
                    weights,
                    addends,
                    caps,
                    lower: pair("lower", lower)?,
                    upper: pair("upper", upper)?,
                    a: strip.a,
                    b: strip.b,
                };
                if variant == "rectilinear_strip" {
                    forbid("strip.c", &strip.c, variant)?;
                    Instance::Strip(base)
                } else {
                    Instance::Tilted(TiltedStripInstance {
                        base,
                        c: required("strip.c", strip.c)?,
                    })
                }
            }
            _ => unreachable!("variant checked above"),
        };
        instance.validate()?;
        Ok(instance)
    }
}

impl From<&Instance> for InstanceDocument {
    fn from(inst: &Instance) -> Self {
        let mut doc = InstanceDocument {
            variant: inst.variant().to_string(),
            n: Some(inst.dim()),
            m: Some(inst.num_points()),
            points: Some(inst.points()),
            ..Default::default()
        };
        let (weights, addends, caps) = match inst {
            Instance::Chebyshev(c) | Instance::ChebyshevScaled(ScaledChebyshevInstance { base: c, .. }) => {
                doc.lower = Some(c.lower.clone());
                doc.upper = Some(c.upper.clone());
                doc.b = Some(c.constraints.to_options());
                (&c.weights, &c.addends, &c.caps)
            }
            Instance::Strip(s) | Instance::Tilted(TiltedStripInstance { base: s, .. }) => {
                doc.lower = Some(s.lower.to_vec());
                doc.upper = Some(s.upper.to_vec());
                doc.strip = Some(StripDocument {
                    a: s.a,
                    b: s.b,
                    c: None,
                });
                (&s.weights, &s.addends, &s.caps)
            }
        };
        doc.weights = Some(weights.clone());
        doc.addends = Some(addends.clone());
        if caps.iter().any(Option::is_some) {
            doc.caps = Some(caps.clone());
        }
        match inst {
            Instance::ChebyshevScaled(s) => doc.c = Some(s.scale.clone()),
            Instance::Tilted(t) => doc.strip.as_mut().expect("strip").c = Some(t.c),
            _ => {}
        }
        doc
    }
}

pub fn parse_instance(text: &[u8]) -> Result<Instance> {
    let text = std::str::from_utf8(text).map_err(|e| Error::Parse(format!("not UTF-8: {e}")))?;
    let doc: InstanceDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_instance()
}

pub fn emit_instance(inst: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceDocument::from(inst)).expect("instance serialises")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::Unsupported(format!("output format {other:?}"))),
        }
    }
}

/// The solution as written by `emit_solution` in JSON form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub variant: String,
    pub theta: f64,
    pub generator: Vec<Vec<Option<f64>>>,
    pub u_lo: Vec<f64>,
    pub u_hi: Vec<f64>,
    pub transform: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<Vec<f64>>,
    pub members: Vec<Vec<f64>>,
    pub objective: Vec<f64>,
}

fn members_with_objective(
    sol: &SolutionBox,
    inst: &Instance,
    samples: usize,
    seed: u64,
) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    let members = solution::sample(sol, samples, seed)?;
    let objective = members
        .iter()
        .map(|x| inst.objective(x))
        .collect::<Result<Vec<_>>>()?;
    Ok((members, objective))
}

/// Renders the optimal set with `samples` members drawn from `seed`.
pub fn emit_solution(
    sol: &SolutionBox,
    inst: &Instance,
    format: OutputFormat,
    samples: usize,
    seed: u64,
) -> Result<String> {
    if format == OutputFormat::Svg {
        return svg::render(inst, sol, &solution::sample(sol, samples.max(2), seed)?);
    }
    let (members, objective) = members_with_objective(sol, inst, samples, seed)?;
    match format {
        OutputFormat::Json => {
            let scale = match &sol.transform {
                Transform::Scale { c } => Some(c.clone()),
                Transform::RotateScaled { c1, c2 } => Some(vec![*c1, *c2]),
                _ => None,
            };
            let doc = SolutionDocument {
                variant: inst.variant().to_string(),
                theta: sol.theta,
                generator: sol.generator.to_options(),
                u_lo: sol.u_lo.to_f64(),
                u_hi: sol.u_hi.to_f64(),
                transform: sol.transform.name().to_string(),
                scale,
                members,
                objective,
            };
            Ok(serde_json::to_string_pretty(&doc).expect("solution serialises"))
        }
        OutputFormat::Csv => {
            let n = inst.dim();
            let mut out = String::new();
            for i in 1..=n {
                write!(out, "x{i},").unwrap();
            }
            out.push_str("objective\n");
            for (x, f) in members.iter().zip(&objective) {
                for v in x {
                    write!(out, "{v},").unwrap();
                }
                writeln!(out, "{f}").unwrap();
            }
            Ok(out)
        }
        OutputFormat::Svg => unreachable!(),
    }
}
