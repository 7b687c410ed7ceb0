//! Recovering the unique diagram whose landscape is a given sequence.

use super::curve::LandscapeCurve;
use super::sequence::LandscapeSequence;
use crate::diagram::{BirthDeathPair, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn pair_from_peak(t: &Scalar, h: &Scalar) -> BirthDeathPair {
    BirthDeathPair::new(t - h, t + h).expect("positive height")
}

/// Every positive-height critical point `(t, h)` of positive degree `m`
/// contributes the pair `(t - h, t + h)` with multiplicity `m`.
pub fn invert_by_degree(landscape: &LandscapeSequence) -> PersistenceDiagram {
    PersistenceDiagram::from_entries(landscape.critical_points().into_iter().filter_map(
        |(t, h)| {
            let m = landscape.degree_at(&t, &h).expect("positive height");
            (m > 0).then(|| (pair_from_peak(&t, &h), m as usize))
        },
    ))
}

/// Smallest `t` in `[from, end]` where `curve(t) >= end - t`. On this range
/// `curve - (end - t)` is non-decreasing, so the set is an interval.
fn first_meeting(curve: &LandscapeCurve, from: &Scalar, end: &Scalar) -> Scalar {
    let mut ts: Vec<&Scalar> = vec![from];
    ts.extend(
        curve
            .breakpoints()
            .iter()
            .map(|(t, _)| t)
            .filter(|t| *t > from && *t < end),
    );
    ts.push(end);
    let gap = |t: &Scalar| curve.evaluate(t) - (end - t);
    let mut prev: Option<(&Scalar, Scalar)> = None;
    for t in ts {
        let g = gap(t);
        if !g.is_negative() {
            return match prev {
                None => t.clone(),
                Some((t0, g0)) => t0 + (t - t0) * (&g0 / &(&g0 - &g)),
            };
        }
        prev = Some((t, g));
    }
    end.clone()
}

/// `left` strictly before `cut`, `right` from `cut` on.
fn splice(left: &LandscapeCurve, right: &LandscapeCurve, cut: &Scalar) -> Result<LandscapeCurve> {
    let at_cut = right.evaluate(cut);
    if left.evaluate(cut) != at_cut {
        return Err(Error::Other(format!("peeling produced a jump at t = {cut}")));
    }
    let mut pts: Vec<(Scalar, Scalar)> = left
        .breakpoints()
        .iter()
        .filter(|(t, _)| t < cut)
        .cloned()
        .collect();
    pts.push((cut.clone(), at_cut));
    pts.extend(right.breakpoints().iter().filter(|(t, _)| t > cut).cloned());
    let has_support = pts.iter().any(|(_, h)| h.is_positive());
    if !has_support {
        return Ok(LandscapeCurve::zero());
    }
    LandscapeCurve::from_breakpoints(pts)
}

/// Repeatedly removes the tent under the leftmost local maximum of `λ_1`:
/// with `(x_1, y_1)` that maximum and `x_1 <= x_2 <= ... <= x_n` the points
/// where `λ_i` first meets the descending leg of the tent (arriving with
/// slope +1), the remainder is `η_k = λ_{k+1}` left of `x_{k+1}` and `λ_k`
/// from `x_{k+1}` on, where `x_j = x_1 + y_1` for `j > n`. Each step strictly
/// reduces the number of local maxima.
pub fn invert_by_peeling(landscape: &LandscapeSequence) -> Result<PersistenceDiagram> {
    let mut curves: Vec<LandscapeCurve> = landscape.curves().to_vec();
    let mut pairs = Vec::new();
    let mut budget = landscape.local_maxima_count();
    while !curves.is_empty() {
        if budget == 0 {
            return Err(Error::Other("peeling did not terminate".to_string()));
        }
        budget -= 1;
        let top = &curves[0];
        let (x1, y1) = top
            .breakpoints()
            .iter()
            .find(|(t, h)| h.is_positive() && top.is_local_max(t))
            .cloned()
            .ok_or_else(|| Error::Other("first curve has no local maximum".to_string()))?;
        let end = &x1 + &y1;
        let mut cuts = vec![x1.clone()];
        for curve in &curves[1..] {
            let x = first_meeting(curve, cuts.last().expect("non-empty"), &end);
            let (rise, _) = curve.one_sided_slopes(&x);
            if x >= end || rise != Scalar::one() {
                break;
            }
            cuts.push(x);
        }
        let zero = LandscapeCurve::zero();
        let mut next = Vec::with_capacity(curves.len());
        for k in 0..curves.len() {
            let cut = cuts.get(k + 1).unwrap_or(&end);
            let left = curves.get(k + 1).unwrap_or(&zero);
            next.push(splice(left, &curves[k], cut)?);
        }
        pairs.push(pair_from_peak(&x1, &y1));
        curves = LandscapeSequence::trimmed(next).curves().to_vec();
    }
    Ok(PersistenceDiagram::from_points(pairs))
}
