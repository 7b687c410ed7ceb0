use std::collections::BTreeSet;
use std::fmt;

use super::curve::LandscapeCurve;
use super::envelope::kth_envelopes;
use super::validate::{validate_curves, Violation};
use crate::diagram::PersistenceDiagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite, non-increasing stack of landscape curves with non-negative degree
/// everywhere above the axis. Curves past the stored depth are zero; trailing
/// zero curves are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LandscapeSequence {
    curves: Vec<LandscapeCurve>,
}

impl LandscapeSequence {
    pub fn empty() -> Self {
        LandscapeSequence::default()
    }

    /// Validates raw breakpoint lists (one per depth, starting at `k = 1`) and
    /// returns the canonical sequence.
    pub fn from_curves(raw: Vec<Vec<(Scalar, Scalar)>>) -> Result<Self> {
        let violations = validate_curves(&raw);
        if !violations.is_empty() {
            return Err(Error::InvalidLandscape(violations));
        }
        Ok(Self::trimmed(
            raw.into_iter().map(LandscapeCurve::canonical).collect(),
        ))
    }

    pub(crate) fn trimmed(mut curves: Vec<LandscapeCurve>) -> Self {
        while curves.last().is_some_and(|c| c.is_zero()) {
            curves.pop();
        }
        LandscapeSequence { curves }
    }

    /// The one-curve sequence `(tent(b, d), 0, 0, ...)`.
    pub fn tent(birth: &Scalar, death: &Scalar) -> Result<Self> {
        Ok(LandscapeSequence {
            curves: vec![LandscapeCurve::tent(birth, death)?],
        })
    }

    /// The persistence landscape of `diagram`: `λ_k(t)` is the k-th largest
    /// tent value at `t`, counting multiplicity.
    pub fn from_diagram(diagram: &PersistenceDiagram) -> Self {
        let tents: Vec<LandscapeCurve> = diagram
            .points()
            .iter()
            .map(|p| LandscapeCurve::tent(p.birth(), p.death()).expect("pair above diagonal"))
            .collect();
        let refs: Vec<&LandscapeCurve> = tents.iter().collect();
        LandscapeSequence {
            curves: kth_envelopes(&refs),
        }
    }

    pub fn curves(&self) -> &[LandscapeCurve] {
        &self.curves
    }

    /// Number of non-zero curves.
    pub fn depth(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// `λ_k(t)` for `k >= 1`; zero past the stored depth.
    pub fn evaluate(&self, k: usize, t: &Scalar) -> Scalar {
        assert!(k >= 1, "landscape depth index starts at 1");
        self.curves
            .get(k - 1)
            .map_or_else(Scalar::zero, |c| c.evaluate(t))
    }

    /// Exact `sup_{k,t} |λ_k(t) - μ_k(t)|`. The difference of two
    /// piecewise-linear functions is extremal at a breakpoint of one of them.
    pub fn sup_norm_dist(&self, other: &LandscapeSequence) -> Scalar {
        let zero = LandscapeCurve::zero();
        let depth = self.depth().max(other.depth());
        (0..depth)
            .map(|k| {
                let a = self.curves.get(k).unwrap_or(&zero);
                let b = other.curves.get(k).unwrap_or(&zero);
                a.breakpoints()
                    .iter()
                    .chain(b.breakpoints())
                    .map(|(t, _)| (a.evaluate(t) - b.evaluate(t)).abs())
                    .max()
                    .unwrap_or_else(Scalar::zero)
            })
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    /// Direct sum: `(η ⊕ μ)_k` is the k-th largest of `η_1..η_k, μ_1..μ_k`.
    /// Since both inputs are non-increasing in `k` this is the k-th upper
    /// envelope of all curves of both summands.
    pub fn direct_sum(&self, other: &LandscapeSequence) -> LandscapeSequence {
        let refs: Vec<&LandscapeCurve> = self.curves.iter().chain(other.curves.iter()).collect();
        LandscapeSequence {
            curves: kth_envelopes(&refs),
        }
    }

    /// The flow `T_ε`: every curve lowered by `eps` and clipped at zero.
    pub fn flow(&self, eps: &Scalar) -> Result<LandscapeSequence> {
        if eps.is_negative() {
            return Err(Error::Negative(eps.clone()));
        }
        Ok(Self::trimmed(
            self.curves.iter().map(|c| c.lowered(eps)).collect(),
        ))
    }

    /// Number of curves with a strict local maximum at `(t, h)` minus the
    /// number with a strict local minimum there.
    pub fn degree_at(&self, t: &Scalar, h: &Scalar) -> Result<i64> {
        if !h.is_positive() {
            return Err(Error::NotPositive(h.clone()));
        }
        Ok(degree_of(&self.curves, t, h))
    }

    /// Distinct positive-height breakpoints `(t, h)` over all curves.
    pub fn critical_points(&self) -> Vec<(Scalar, Scalar)> {
        critical_points_of(&self.curves)
    }

    /// Local maxima counted once per curve attaining them.
    pub fn local_maxima_count(&self) -> usize {
        self.curves
            .iter()
            .map(|c| {
                c.breakpoints()
                    .iter()
                    .filter(|(t, h)| h.is_positive() && c.is_local_max(t))
                    .count()
            })
            .sum()
    }

    /// `λ_k <= μ_k` pointwise for every `k`, checked at merged breakpoints.
    pub fn leq(&self, other: &LandscapeSequence) -> bool {
        let zero = LandscapeCurve::zero();
        (0..self.depth()).all(|k| {
            let a = &self.curves[k];
            let b = other.curves.get(k).unwrap_or(&zero);
            a.breakpoints()
                .iter()
                .chain(b.breakpoints())
                .all(|(t, _)| a.evaluate(t) <= b.evaluate(t))
        })
    }

    /// Maximum of the first curve (the largest value in the sequence).
    pub fn max_height(&self) -> Scalar {
        self.curves
            .first()
            .map_or_else(Scalar::zero, |c| c.max_height())
    }

    /// Re-checks every landscape-sequence property; canonical sequences built
    /// by this crate always pass.
    pub fn violations(&self) -> Vec<Violation> {
        let raw: Vec<Vec<(Scalar, Scalar)>> = self
            .curves
            .iter()
            .map(|c| c.breakpoints().to_vec())
            .collect();
        validate_curves(&raw)
    }
}

pub(crate) fn degree_of(curves: &[LandscapeCurve], t: &Scalar, h: &Scalar) -> i64 {
    curves
        .iter()
        .filter(|c| c.evaluate(t) == *h)
        .map(|c| {
            if c.is_local_max(t) {
                1
            } else if c.is_local_min(t) {
                -1
            } else {
                0
            }
        })
        .sum()
}

pub(crate) fn critical_points_of(curves: &[LandscapeCurve]) -> Vec<(Scalar, Scalar)> {
    let set: BTreeSet<(Scalar, Scalar)> = curves
        .iter()
        .flat_map(|c| c.breakpoints().iter().cloned())
        .filter(|(_, h)| h.is_positive())
        .collect();
    set.into_iter().collect()
}

impl fmt::Display for LandscapeSequence {
    /// One line per curve: the depth index then its `t:h` breakpoints.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.curves.iter().enumerate() {
            writeln!(f, "{} {}", k + 1, c)?;
        }
        Ok(())
    }
}
