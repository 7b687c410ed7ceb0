use std::fmt;

use super::curve::{structural_problem, LandscapeCurve};
use super::sequence::{critical_points_of, degree_of};
use crate::scalar::Scalar;

/// A failed landscape-sequence property. Depth indices start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Curve `k` is not a landscape curve.
    CurveStructure { k: usize, reason: String },
    /// `λ_k(t) < λ_{k+1}(t)`.
    Monotonicity {
        k: usize,
        t: Scalar,
        upper: Scalar,
        lower: Scalar,
    },
    NegativeDegree { t: Scalar, h: Scalar, degree: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CurveStructure { k, reason } => write!(f, "curve {k}: {reason}"),
            Violation::Monotonicity { k, t, upper, lower } => write!(
                f,
                "monotonicity: curve {k} is {upper} but curve {} is {lower} at t = {t}",
                k + 1
            ),
            Violation::NegativeDegree { t, h, degree } => {
                write!(f, "negative degree {degree} at ({t}, {h})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a candidate stack of curves (raw breakpoint lists, depth 1 first)
/// against every landscape-sequence property.
pub fn validate(raw: &[Vec<(Scalar, Scalar)>]) -> ValidationReport {
    ValidationReport {
        violations: validate_curves(raw),
    }
}

pub(crate) fn validate_curves(raw: &[Vec<(Scalar, Scalar)>]) -> Vec<Violation> {
    let mut violations: Vec<Violation> = raw
        .iter()
        .enumerate()
        .filter_map(|(i, pts)| {
            structural_problem(pts).map(|reason| Violation::CurveStructure { k: i + 1, reason })
        })
        .collect();
    // the remaining checks need well-formed curves to evaluate
    if !violations.is_empty() {
        return violations;
    }
    let curves: Vec<LandscapeCurve> = raw
        .iter()
        .map(|pts| LandscapeCurve::canonical(pts.clone()))
        .collect();
    for (k, pair) in curves.windows(2).enumerate() {
        let (upper, lower) = (&pair[0], &pair[1]);
        let bad = upper
            .breakpoints()
            .iter()
            .chain(lower.breakpoints())
            .map(|(t, _)| (t, upper.evaluate(t), lower.evaluate(t)))
            .filter(|(_, u, l)| u < l)
            .min_by(|a, b| a.0.cmp(b.0));
        if let Some((t, u, l)) = bad {
            violations.push(Violation::Monotonicity {
                k: k + 1,
                t: t.clone(),
                upper: u,
                lower: l,
            });
        }
    }
    for (t, h) in critical_points_of(&curves) {
        let degree = degree_of(&curves, &t, &h);
        if degree < 0 {
            violations.push(Violation::NegativeDegree { t, h, degree });
        }
    }
    violations
}
