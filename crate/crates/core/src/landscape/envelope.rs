//! k-th upper envelopes of a finite family of landscape curves.

use std::collections::BTreeSet;

use super::curve::LandscapeCurve;
use crate::scalar::Scalar;

/// Abscissas where the order of the family can change: every breakpoint, plus
/// every strict crossing of two curves. Between consecutive candidates each
/// curve is linear and no two curves cross, so the k-th largest value is
/// linear there too.
fn candidate_abscissas(curves: &[&LandscapeCurve]) -> Vec<Scalar> {
    let mut out: BTreeSet<Scalar> = curves
        .iter()
        .flat_map(|c| c.breakpoints().iter().map(|(t, _)| t.clone()))
        .collect();
    for (i, a) in curves.iter().enumerate() {
        let Some((a_lo, a_hi)) = a.span() else { continue };
        for b in &curves[i + 1..] {
            let Some((b_lo, b_hi)) = b.span() else { continue };
            let lo = a_lo.max(b_lo);
            let hi = a_hi.min(b_hi);
            if lo >= hi {
                continue;
            }
            let merged: BTreeSet<&Scalar> = a
                .breakpoints()
                .iter()
                .chain(b.breakpoints())
                .map(|(t, _)| t)
                .filter(|t| *t >= lo && *t <= hi)
                .collect();
            let mut prev: Option<(&Scalar, Scalar)> = None;
            for t in merged {
                let diff = a.evaluate(t) - b.evaluate(t);
                if let Some((t0, d0)) = &prev {
                    if d0.signum() * diff.signum() < 0 {
                        let cross = *t0 + (t - *t0) * (d0 / &(d0 - &diff));
                        out.insert(cross);
                    }
                }
                prev = Some((t, diff));
            }
        }
    }
    out.into_iter().collect()
}

/// `result[k-1](t)` is the k-th largest of `{c(t) : c in curves}`, counted
/// with repetition, for `k = 1..=n` where `n` is the number of non-zero
/// curves. Trailing zero curves are dropped.
pub(crate) fn kth_envelopes(curves: &[&LandscapeCurve]) -> Vec<LandscapeCurve> {
    let live: Vec<&LandscapeCurve> = curves.iter().copied().filter(|c| !c.is_zero()).collect();
    let depth = live.len();
    if depth == 0 {
        return Vec::new();
    }
    let candidates = candidate_abscissas(&live);
    let mut levels: Vec<Vec<(Scalar, Scalar)>> = vec![Vec::with_capacity(candidates.len()); depth];
    let mut values: Vec<Scalar> = Vec::with_capacity(depth);
    for t in &candidates {
        values.clear();
        values.extend(live.iter().map(|c| c.evaluate(t)));
        values.sort_unstable_by(|a, b| b.cmp(a));
        for (level, v) in levels.iter_mut().zip(values.iter()) {
            level.push((t.clone(), v.clone()));
        }
    }
    let mut out: Vec<LandscapeCurve> = levels.into_iter().map(LandscapeCurve::canonical).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}
