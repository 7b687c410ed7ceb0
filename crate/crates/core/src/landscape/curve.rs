use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A compactly supported, continuous, piecewise-linear function with slope
/// `±1` wherever it is positive, stored as its breakpoints.
///
/// The value is linear between consecutive breakpoints and zero outside the
/// first/last breakpoint. Stretches of height zero between two supported
/// pieces appear as a flat segment joining two zero breakpoints. The stored
/// form is canonical: no interior breakpoint is collinear with its neighbours,
/// so structural equality is functional equality. The zero curve has no
/// breakpoints.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LandscapeCurve {
    points: Vec<(Scalar, Scalar)>,
}

fn slope(a: &(Scalar, Scalar), b: &(Scalar, Scalar)) -> Scalar {
    (&b.1 - &a.1) / (&b.0 - &a.0)
}

/// Reasons a breakpoint list fails to describe a landscape curve.
pub(crate) fn structural_problem(points: &[(Scalar, Scalar)]) -> Option<String> {
    if points.is_empty() {
        return None;
    }
    for w in points.windows(2) {
        if w[0].0 >= w[1].0 {
            return Some(format!("abscissas not strictly increasing at t = {}", w[1].0));
        }
    }
    if let Some((t, h)) = points.iter().find(|(_, h)| h.is_negative()) {
        return Some(format!("negative height {h} at t = {t}"));
    }
    let first = &points[0];
    let last = &points[points.len() - 1];
    if !first.1.is_zero() || !last.1.is_zero() {
        return Some("support does not start and end at height 0".to_string());
    }
    let one = Scalar::one();
    for w in points.windows(2) {
        if w[0].1.is_zero() && w[1].1.is_zero() {
            continue;
        }
        let s = slope(&w[0], &w[1]);
        if s.abs() != one {
            return Some(format!(
                "slope {s} on [{}, {}] where the curve is positive",
                w[0].0, w[1].0
            ));
        }
    }
    None
}

impl LandscapeCurve {
    pub fn zero() -> Self {
        LandscapeCurve::default()
    }

    /// Validates and canonicalizes a breakpoint list.
    pub fn from_breakpoints(points: Vec<(Scalar, Scalar)>) -> Result<Self> {
        if let Some(problem) = structural_problem(&points) {
            return Err(Error::InvalidCurve(problem));
        }
        Ok(Self::canonical(points))
    }

    /// Canonicalizes an already valid breakpoint list.
    pub(crate) fn canonical(points: Vec<(Scalar, Scalar)>) -> Self {
        debug_assert!(structural_problem(&points).is_none(), "{points:?}");
        let mut out: Vec<(Scalar, Scalar)> = Vec::with_capacity(points.len());
        for p in points {
            if let Some(last) = out.last() {
                if last.0 == p.0 {
                    continue;
                }
            }
            while out.len() >= 2 {
                let n = out.len();
                if slope(&out[n - 2], &out[n - 1]) == slope(&out[n - 1], &p) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        // leading/trailing zero stretches carry no information
        while out.len() >= 2 && out[0].1.is_zero() && out[1].1.is_zero() {
            out.remove(0);
        }
        while out.len() >= 2 && out[out.len() - 1].1.is_zero() && out[out.len() - 2].1.is_zero() {
            out.pop();
        }
        if out.iter().all(|(_, h)| h.is_zero()) {
            out.clear();
        }
        LandscapeCurve { points: out }
    }

    /// The tent `t ↦ max(0, min(t - b, d - t))`.
    pub fn tent(birth: &Scalar, death: &Scalar) -> Result<Self> {
        if birth >= death {
            return Err(Error::NotAboveDiagonal {
                birth: birth.clone(),
                death: death.clone(),
            });
        }
        let mid = birth.midpoint(death);
        let height = (death - birth).half();
        Ok(LandscapeCurve {
            points: vec![
                (birth.clone(), Scalar::zero()),
                (mid, height),
                (death.clone(), Scalar::zero()),
            ],
        })
    }

    pub fn breakpoints(&self) -> &[(Scalar, Scalar)] {
        &self.points
    }

    pub fn is_zero(&self) -> bool {
        self.points.is_empty()
    }

    /// `[first, last]` breakpoint abscissas, `None` for the zero curve.
    pub fn span(&self) -> Option<(&Scalar, &Scalar)> {
        Some((&self.points.first()?.0, &self.points.last()?.0))
    }

    pub fn max_height(&self) -> Scalar {
        self.points
            .iter()
            .map(|(_, h)| h.clone())
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn evaluate(&self, t: &Scalar) -> Scalar {
        let pts = &self.points;
        let (Some(first), Some(last)) = (pts.first(), pts.last()) else {
            return Scalar::zero();
        };
        if *t <= first.0 || *t >= last.0 {
            return Scalar::zero();
        }
        // first index whose abscissa is >= t; 1 <= i < len
        let i = pts.partition_point(|(x, _)| x < t);
        let (a, b) = (&pts[i - 1], &pts[i]);
        if b.0 == *t {
            return b.1.clone();
        }
        &a.1 + slope(a, b) * (t - &a.0)
    }

    /// One-sided derivatives `(D⁻, D⁺)` at `t`.
    pub fn one_sided_slopes(&self, t: &Scalar) -> (Scalar, Scalar) {
        let pts = &self.points;
        let (Some(first), Some(last)) = (pts.first(), pts.last()) else {
            return (Scalar::zero(), Scalar::zero());
        };
        if *t < first.0 || *t > last.0 {
            return (Scalar::zero(), Scalar::zero());
        }
        let i = pts.partition_point(|(x, _)| x < t);
        if pts[i].0 == *t {
            let left = if i == 0 { Scalar::zero() } else { slope(&pts[i - 1], &pts[i]) };
            let right = if i + 1 == pts.len() {
                Scalar::zero()
            } else {
                slope(&pts[i], &pts[i + 1])
            };
            (left, right)
        } else {
            let s = slope(&pts[i - 1], &pts[i]);
            (s.clone(), s)
        }
    }

    pub fn is_local_max(&self, t: &Scalar) -> bool {
        let (l, r) = self.one_sided_slopes(t);
        l.is_positive() && r.is_negative()
    }

    pub fn is_local_min(&self, t: &Scalar) -> bool {
        let (l, r) = self.one_sided_slopes(t);
        l.is_negative() && r.is_positive()
    }

    /// `max(self - eps, 0)`, re-canonicalized.
    pub fn lowered(&self, eps: &Scalar) -> LandscapeCurve {
        if eps.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.points.len() + 4);
        for (idx, p) in self.points.iter().enumerate() {
            if idx > 0 {
                let a = &self.points[idx - 1];
                let (ha, hb) = (&a.1 - eps, &p.1 - eps);
                if ha.signum() * hb.signum() < 0 {
                    // crossing of level eps strictly inside the segment
                    let t = &a.0 + (&p.0 - &a.0) * (&ha / (&ha - &hb));
                    out.push((t, Scalar::zero()));
                }
            }
            let h = &p.1 - eps;
            out.push((p.0.clone(), if h.is_negative() { Scalar::zero() } else { h }));
        }
        LandscapeCurve::canonical(out)
    }
}

impl fmt::Display for LandscapeCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (t, h) in &self.points {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{t}:{h}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn pts(raw: &[(i64, i64)]) -> Vec<(Scalar, Scalar)> {
        raw.iter().map(|&(t, h)| (t.into(), h.into())).collect()
    }

    #[test]
    fn tent_breakpoints() {
        let t = LandscapeCurve::tent(&0.into(), &2.into()).unwrap();
        assert_eq!(t.breakpoints(), pts(&[(0, 0), (1, 1), (2, 0)]).as_slice());
        let t = LandscapeCurve::tent(&1.into(), &7.into()).unwrap();
        assert_eq!(t.breakpoints(), pts(&[(1, 0), (4, 3), (7, 0)]).as_slice());
        assert!(LandscapeCurve::tent(&2.into(), &2.into()).is_err());
    }

    #[test]
    fn tent_peak_is_half_persistence() {
        let (b, d) = (q(1, 3), q(9, 4));
        let t = LandscapeCurve::tent(&b, &d).unwrap();
        assert_eq!(t.evaluate(&b.midpoint(&d)), (&d - &b).half());
        assert_eq!(t.evaluate(&b), Scalar::zero());
        assert_eq!(t.evaluate(&q(-5, 1)), Scalar::zero());
    }

    #[test]
    fn canonical_drops_collinear_points() {
        let c = LandscapeCurve::from_breakpoints(pts(&[(0, 0), (1, 1), (2, 2), (4, 0)])).unwrap();
        assert_eq!(c.breakpoints(), pts(&[(0, 0), (2, 2), (4, 0)]).as_slice());
        let c = LandscapeCurve::from_breakpoints(pts(&[(-3, 0), (0, 0), (1, 1), (2, 0), (5, 0)]))
            .unwrap();
        assert_eq!(c.breakpoints(), pts(&[(0, 0), (1, 1), (2, 0)]).as_slice());
        let gap = LandscapeCurve::from_breakpoints(pts(&[
            (0, 0),
            (1, 1),
            (2, 0),
            (3, 0),
            (4, 0),
            (5, 1),
            (6, 0),
        ]))
        .unwrap();
        assert_eq!(gap.breakpoints().len(), 6);
        assert!(LandscapeCurve::from_breakpoints(pts(&[(0, 0), (3, 0)])).unwrap().is_zero());
    }

    #[test]
    fn rejects_invalid_curves() {
        assert!(LandscapeCurve::from_breakpoints(pts(&[(0, 0), (1, 2), (2, 0)])).is_err());
        assert!(LandscapeCurve::from_breakpoints(pts(&[(0, 0), (1, 1)])).is_err());
        assert!(LandscapeCurve::from_breakpoints(pts(&[(0, 0), (0, 0)])).is_err());
        assert!(LandscapeCurve::from_breakpoints(pts(&[(0, 0), (1, -1), (2, 0)])).is_err());
    }

    #[test]
    fn slopes_and_extrema() {
        let c = LandscapeCurve::from_breakpoints(pts(&[(0, 0), (2, 2), (3, 1), (5, 3), (8, 0)]))
            .unwrap();
        assert!(c.is_local_max(&2.into()));
        assert!(c.is_local_min(&3.into()));
        assert!(!c.is_local_max(&q(5, 2)));
        assert_eq!(c.one_sided_slopes(&q(1, 2)), (Scalar::one(), Scalar::one()));
        assert_eq!(c.evaluate(&4.into()), 2.into());
        assert_eq!(c.evaluate(&q(13, 2)), q(3, 2));
    }

    #[test]
    fn lowering_a_tent() {
        let t = LandscapeCurve::tent(&0.into(), &4.into()).unwrap();
        assert_eq!(t.lowered(&1.into()), LandscapeCurve::tent(&1.into(), &3.into()).unwrap());
        assert!(t.lowered(&2.into()).is_zero());
        assert_eq!(t.lowered(&Scalar::zero()), t);
    }
}
