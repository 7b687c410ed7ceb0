//! Persistence diagrams as exact multisets, their rank functions, the
//! shrink coflow and the diagram order.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matching::PartialMatching;
use crate::scalar::Scalar;

/// A point strictly above the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BirthDeathPair {
    birth: Scalar,
    death: Scalar,
}

impl BirthDeathPair {
    pub fn new(birth: Scalar, death: Scalar) -> Result<Self> {
        if birth >= death {
            return Err(Error::NotAboveDiagonal { birth, death });
        }
        Ok(BirthDeathPair { birth, death })
    }

    pub fn birth(&self) -> &Scalar {
        &self.birth
    }

    pub fn death(&self) -> &Scalar {
        &self.death
    }

    pub fn persistence(&self) -> Scalar {
        &self.death - &self.birth
    }

    /// Half the persistence: the cost of matching this point to the diagonal.
    pub fn diagonal_cost(&self) -> Scalar {
        self.persistence().half()
    }

    /// Peak of the associated tent, `((b+d)/2, (d-b)/2)`.
    pub fn peak(&self) -> (Scalar, Scalar) {
        (self.birth.midpoint(&self.death), self.diagonal_cost())
    }

    pub fn linf(&self, other: &BirthDeathPair) -> Scalar {
        let db = (&self.birth - &other.birth).abs();
        let dd = (&self.death - &other.death).abs();
        db.max(dd)
    }

    /// Proper containment of a rank query: `b_i <= b` and `d < d_i`.
    pub fn properly_contains(&self, query: &RankQuery) -> bool {
        self.birth <= query.b && query.d < self.death
    }
}

/// A query interval `(b, d)` with `b <= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankQuery {
    b: Scalar,
    d: Scalar,
}

impl RankQuery {
    pub fn new(b: Scalar, d: Scalar) -> Result<Self> {
        if b > d {
            return Err(Error::InvalidQuery { b, d });
        }
        Ok(RankQuery { b, d })
    }

    pub fn b(&self) -> &Scalar {
        &self.b
    }

    pub fn d(&self) -> &Scalar {
        &self.d
    }

    /// `(b - eps, d + eps)`.
    pub fn grow(&self, eps: &Scalar) -> RankQuery {
        RankQuery {
            b: &self.b - eps,
            d: &self.d + eps,
        }
    }
}

/// Finite multiset of birth-death pairs, stored sorted by `(birth, death)`
/// with merged multiplicities so that structural equality is multiset
/// equality.
/// `(numerator, denominator)`.
pub type Ratio = (i64, i64);

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PersistenceDiagram {
    entries: Vec<(BirthDeathPair, usize)>,
}

impl PersistenceDiagram {
    pub fn empty() -> Self {
        PersistenceDiagram::default()
    }

    pub fn from_points<I>(points: I) -> Self
    where
        I: IntoIterator<Item = BirthDeathPair>,
    {
        Self::from_entries(points.into_iter().map(|p| (p, 1)))
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (BirthDeathPair, usize)>,
    {
        let mut raw: Vec<(BirthDeathPair, usize)> =
            entries.into_iter().filter(|(_, m)| *m > 0).collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(BirthDeathPair, usize)> = Vec::with_capacity(raw.len());
        for (p, m) in raw {
            match merged.last_mut() {
                Some((last, count)) if *last == p => *count += m,
                _ => merged.push((p, m)),
            }
        }
        PersistenceDiagram { entries: merged }
    }

    /// Builds a diagram from raw `(birth, death)` pairs, rejecting any pair on
    /// or below the diagonal.
    pub fn new<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Scalar, Scalar)>,
    {
        let points = pairs
            .into_iter()
            .map(|(b, d)| BirthDeathPair::new(b, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_points(points))
    }

    /// Convenience constructor from integer-ratio pairs `((bn, bd), (dn, dd))`.
    pub fn from_ratios(pairs: &[(Ratio, Ratio)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&((bn, bd), (dn, dd))| (Scalar::new(bn, bd), Scalar::new(dn, dd))),
        )
    }

    /// Convenience constructor from integer pairs.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(b, d)| (Scalar::from_int(b), Scalar::from_int(d))),
        )
    }

    /// Distinct pairs with their multiplicities, in canonical order.
    pub fn entries(&self) -> &[(BirthDeathPair, usize)] {
        &self.entries
    }

    /// All pairs with multiplicity expanded, in canonical order. Matchings
    /// index into this list.
    pub fn points(&self) -> Vec<BirthDeathPair> {
        self.entries
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(p.clone(), *m))
            .collect()
    }

    /// Number of pairs counted with multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, pair: &BirthDeathPair) -> usize {
        self.entries
            .binary_search_by(|(p, _)| p.cmp(pair))
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn max_persistence(&self) -> Scalar {
        self.entries
            .iter()
            .map(|(p, _)| p.persistence())
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_birth_zero(&self) -> bool {
        self.entries.iter().all(|(p, _)| p.birth.is_zero())
    }

    /// Number of pairs (with multiplicity) properly containing `query`.
    pub fn rank_at(&self, query: &RankQuery) -> usize {
        self.entries
            .iter()
            .filter(|(p, _)| p.properly_contains(query))
            .map(|(_, m)| m)
            .sum()
    }

    /// The coflow step: every pair moves to `(b + eps, d - eps)`; pairs that
    /// reach the diagonal disappear.
    pub fn shrink(&self, eps: &Scalar) -> Result<PersistenceDiagram> {
        if eps.is_negative() {
            return Err(Error::Negative(eps.clone()));
        }
        Ok(PersistenceDiagram::from_entries(self.entries.iter().filter_map(|(p, m)| {
            let b = &p.birth + eps;
            let d = &p.death - eps;
            (b < d).then_some((BirthDeathPair { birth: b, death: d }, *m))
        })))
    }

    /// `self <= other` in the diagram order: `rank[self] <= rank[other]`
    /// everywhere on `{b <= d}`.
    ///
    /// Both rank functions are constant on the half-open cells
    /// `[β_k, β_{k+1}) x [δ_l, δ_{l+1})` cut out by the births `β` and deaths
    /// `δ` of the two diagrams. A cell meeting `{b <= d}` contains either its
    /// lower-left corner `(β_k, δ_l)` or the diagonal point `(β_k, β_k)`, so
    /// testing every `(β, δ)` with `β` a birth, `δ` a birth or death and
    /// `β <= δ` is exact. Queries left of every birth have rank zero in both.
    pub fn leq(&self, other: &PersistenceDiagram) -> bool {
        let mut births = BTreeSet::new();
        let mut thresholds = BTreeSet::new();
        for (p, _) in self.entries.iter().chain(other.entries.iter()) {
            births.insert(p.birth.clone());
            thresholds.insert(p.birth.clone());
            thresholds.insert(p.death.clone());
        }
        for beta in &births {
            for delta in thresholds.range(beta.clone()..) {
                let query = RankQuery {
                    b: beta.clone(),
                    d: delta.clone(),
                };
                if self.rank_at(&query) > other.rank_at(&query) {
                    return false;
                }
            }
        }
        true
    }

    /// Half the minimum over distinct-birth gaps, distinct-death gaps and
    /// half-persistences. Bottleneck and erosion distance agree when pairs
    /// are only moved by less than this; extra pairs near the diagonal can
    /// still be masked by a tent and make erosion smaller.
    pub fn local_radius(&self) -> Result<Scalar> {
        if self.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        let mut best: Option<Scalar> = None;
        let mut consider = |x: Scalar| {
            if best.as_ref().is_none_or(|b| x < *b) {
                best = Some(x);
            }
        };
        let births: BTreeSet<&Scalar> = self.entries.iter().map(|(p, _)| &p.birth).collect();
        let deaths: BTreeSet<&Scalar> = self.entries.iter().map(|(p, _)| &p.death).collect();
        // sorted distinct values: the minimum gap is between neighbours
        for set in [&births, &deaths] {
            let v: Vec<&&Scalar> = set.iter().collect();
            for w in v.windows(2) {
                consider(*w[1] - *w[0]);
            }
        }
        for (p, _) in &self.entries {
            consider(p.persistence().half());
        }
        Ok(best.expect("non-empty").half())
    }

    /// Membership in the explicit neighbourhood `U(self, r)`: each pair of
    /// multiplicity `m` has exactly `m` pairs of `other` in its open
    /// `r`-box, and every pair of `other` lies in some box or in the open band
    /// `(d - b) / 2 < r`.
    pub fn open_ball_contains(&self, other: &PersistenceDiagram, r: &Scalar) -> bool {
        let in_box = |center: &BirthDeathPair, q: &BirthDeathPair| center.linf(q) < *r;
        for (center, m) in &self.entries {
            let count: usize = other
                .entries
                .iter()
                .filter(|(q, _)| in_box(center, q))
                .map(|(_, k)| k)
                .sum();
            if count != *m {
                return false;
            }
        }
        other.entries.iter().all(|(q, _)| {
            q.diagonal_cost() < *r || self.entries.iter().any(|(c, _)| in_box(c, q))
        })
    }
}

/// Whether `eps` satisfies both erosion rank conditions:
/// `shrink(y, eps) <= other` and `shrink(other, eps) <= y`.
pub fn erosion_feasible(
    y: &PersistenceDiagram,
    other: &PersistenceDiagram,
    eps: &Scalar,
) -> Result<bool> {
    Ok(y.shrink(eps)?.leq(other) && other.shrink(eps)?.leq(y))
}

/// Point of the straight-line path from `y` to `other` along `matching` at
/// time `t`. Matched pairs move linearly; unmatched pairs slide to (or from)
/// their diagonal projection and vanish on the diagonal.
pub fn interpolate_matched(
    y: &PersistenceDiagram,
    other: &PersistenceDiagram,
    matching: &PartialMatching,
    t: &Scalar,
) -> Result<PersistenceDiagram> {
    if t.is_negative() || *t > Scalar::one() {
        return Err(Error::OutOfUnitInterval(t.clone()));
    }
    let from = y.points();
    let to = other.points();
    matching.validate(from.len(), to.len())?;
    let s = Scalar::one() - t;
    let lerp = |a: &Scalar, b: &Scalar| &s * a + t * b;
    let mut out = Vec::with_capacity(from.len() + to.len());
    let mut push = |b: Scalar, d: Scalar| {
        if b < d {
            out.push(BirthDeathPair { birth: b, death: d });
        }
    };
    for &(i, j) in matching.matched() {
        let (p, q) = (&from[i], &to[j]);
        push(lerp(&p.birth, &q.birth), lerp(&p.death, &q.death));
    }
    for &i in matching.unmatched_left() {
        let p = &from[i];
        let mid = p.birth.midpoint(&p.death);
        push(lerp(&p.birth, &mid), lerp(&p.death, &mid));
    }
    for &j in matching.unmatched_right() {
        let q = &to[j];
        let mid = q.birth.midpoint(&q.death);
        push(lerp(&mid, &q.birth), lerp(&mid, &q.death));
    }
    Ok(PersistenceDiagram::from_points(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn sample() -> PersistenceDiagram {
        PersistenceDiagram::from_ints(&[(1, 7), (3, 8), (2, 5), (2, 5), (9, 10)]).unwrap()
    }

    fn query(b: Scalar, d: Scalar) -> RankQuery {
        RankQuery::new(b, d).unwrap()
    }

    #[test]
    fn canonical_multiset() {
        let y = sample();
        assert_eq!(y.len(), 5);
        assert_eq!(y.entries().len(), 4);
        let pair = BirthDeathPair::new(2.into(), 5.into()).unwrap();
        assert_eq!(y.multiplicity(&pair), 2);
        let shuffled =
            PersistenceDiagram::from_ints(&[(9, 10), (2, 5), (3, 8), (2, 5), (1, 7)]).unwrap();
        assert_eq!(y, shuffled);
    }

    #[test]
    fn rejects_diagonal_pairs() {
        assert!(PersistenceDiagram::from_ints(&[(1, 1)]).is_err());
        assert!(PersistenceDiagram::from_ints(&[(2, 1)]).is_err());
        assert!(RankQuery::new(2.into(), 1.into()).is_err());
    }

    #[test]
    fn rank_examples() {
        let empty = PersistenceDiagram::empty();
        assert_eq!(empty.rank_at(&query(0.into(), 0.into())), 0);
        let y = sample();
        assert_eq!(y.rank_at(&query(3.into(), 4.into())), 4);
        assert_eq!(y.rank_at(&query(1.into(), 7.into())), 0);
        // left end is inclusive, right end strict
        assert_eq!(y.rank_at(&query(2.into(), 4.into())), 3);
        assert_eq!(y.rank_at(&query(2.into(), 5.into())), 1);
    }

    #[test]
    fn shrink_examples() {
        let y = sample();
        assert_eq!(y.shrink(&Scalar::zero()).unwrap(), y);
        let y2 = PersistenceDiagram::from_ints(&[(0, 4), (1, 2)]).unwrap();
        let expected = PersistenceDiagram::from_ratios(&[((1, 2), (7, 2))]).unwrap();
        assert_eq!(y2.shrink(&q(1, 2)).unwrap(), expected);
        assert!(y.shrink(&3.into()).unwrap().is_empty());
        assert!(y.shrink(&q(-1, 2)).is_err());
    }

    #[test]
    fn leq_examples() {
        let y = sample();
        assert!(y.leq(&y));
        assert!(PersistenceDiagram::empty().leq(&y));
        assert!(!y.leq(&PersistenceDiagram::empty()));
        assert!(y.shrink(&q(1, 2)).unwrap().leq(&y));
        let a = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        let b = PersistenceDiagram::from_ints(&[(0, 3)]).unwrap();
        assert!(b.leq(&a));
        assert!(!a.leq(&b));
    }

    #[test]
    fn erosion_feasibility_on_crossing_pair() {
        let y = PersistenceDiagram::from_ints(&[(0, 10), (1, 11)]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(0, 11), (1, 10)]).unwrap();
        assert!(erosion_feasible(&y, &y, &Scalar::zero()).unwrap());
        assert!(!erosion_feasible(&y, &z, &q(1, 4)).unwrap());
        // (1/2, 10) is properly contained by (1/2, 21/2) in the shrunken z but
        // by nothing in y
        assert!(!erosion_feasible(&y, &z, &q(1, 2)).unwrap());
        assert!(!erosion_feasible(&y, &z, &q(99, 100)).unwrap());
        assert!(erosion_feasible(&y, &z, &Scalar::one()).unwrap());
    }

    #[test]
    fn local_radius_examples() {
        let single = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        assert_eq!(single.local_radius().unwrap(), Scalar::one());
        assert_eq!(sample().local_radius().unwrap(), q(1, 4));
        let doubled = PersistenceDiagram::from_ints(&[(0, 2), (0, 2)]).unwrap();
        assert_eq!(doubled.local_radius().unwrap(), q(1, 2));
        assert_eq!(
            PersistenceDiagram::empty().local_radius(),
            Err(Error::EmptyDiagram)
        );
    }

    #[test]
    fn interpolation_endpoints_and_midpoint() {
        let y = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(2, 6)]).unwrap();
        let m = PartialMatching::new(vec![(0, 0)], vec![], vec![]);
        assert_eq!(interpolate_matched(&y, &z, &m, &Scalar::zero()).unwrap(), y);
        assert_eq!(interpolate_matched(&y, &z, &m, &Scalar::one()).unwrap(), z);
        let mid = PersistenceDiagram::from_ints(&[(1, 5)]).unwrap();
        assert_eq!(interpolate_matched(&y, &z, &m, &q(1, 2)).unwrap(), mid);
    }

    #[test]
    fn interpolation_diagonal_points() {
        let y = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(10, 12)]).unwrap();
        let m = PartialMatching::new(vec![], vec![0], vec![0]);
        assert_eq!(interpolate_matched(&y, &z, &m, &Scalar::zero()).unwrap(), y);
        assert_eq!(interpolate_matched(&y, &z, &m, &Scalar::one()).unwrap(), z);
        let half = interpolate_matched(&y, &z, &m, &q(1, 2)).unwrap();
        let expected = PersistenceDiagram::from_ratios(&[((1, 1), (3, 1)), ((21, 2), (23, 2))])
            .unwrap();
        assert_eq!(half, expected);
    }

    #[test]
    fn interpolation_rejects_bad_matching() {
        let y = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(2, 6)]).unwrap();
        let twice = PartialMatching::new(vec![(0, 0)], vec![0], vec![]);
        assert!(interpolate_matched(&y, &z, &twice, &q(1, 2)).is_err());
        let missing = PartialMatching::new(vec![], vec![0], vec![]);
        assert!(interpolate_matched(&y, &z, &missing, &q(1, 2)).is_err());
        let m = PartialMatching::new(vec![(0, 0)], vec![], vec![]);
        assert!(interpolate_matched(&y, &z, &m, &q(3, 2)).is_err());
    }

    #[test]
    fn open_ball_region() {
        let y = PersistenceDiagram::from_ints(&[(0, 4)]).unwrap();
        let r = y.local_radius().unwrap();
        let near = PersistenceDiagram::from_ratios(&[((1, 2), (4, 1)), ((5, 1), (11, 2))]).unwrap();
        assert!(y.open_ball_contains(&near, &r));
        let far = PersistenceDiagram::from_ints(&[(1, 4)]).unwrap();
        assert!(!y.open_ball_contains(&far, &r));
        let extra = PersistenceDiagram::from_ratios(&[((0, 1), (4, 1)), ((5, 1), (8, 1))]).unwrap();
        assert!(!y.open_ball_contains(&extra, &r));
    }
}
