use crate::diagram::{erosion_feasible, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::landscape::LandscapeSequence;
use crate::scalar::Scalar;

/// Sup-norm distance between the two persistence landscapes.
pub fn landscape_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Scalar {
    LandscapeSequence::from_diagram(a).sup_norm_dist(&LandscapeSequence::from_diagram(b))
}

/// Exact erosion distance, computed as the landscape sup-norm distance (the
/// two coincide). [`erosion_direct`] approaches the same number from the
/// rank-function definition.
pub fn erosion(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Scalar {
    landscape_distance(a, b)
}

/// Bisection on the erosion rank conditions. Returns `(lo, hi)` with
/// `hi - lo <= tol`, `hi` feasible and `lo` infeasible (or zero), so the
/// infimum of feasible `ε` lies in `[lo, hi]`.
pub fn erosion_direct(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    tol: &Scalar,
) -> Result<(Scalar, Scalar)> {
    if !tol.is_positive() {
        return Err(Error::NotPositive(tol.clone()));
    }
    let mut lo = Scalar::zero();
    if erosion_feasible(a, b, &lo)? {
        return Ok((lo.clone(), lo));
    }
    // both shrunken diagrams are empty once eps reaches half the largest
    // persistence; the coordinate spread only widens the start
    let coords = a
        .entries()
        .iter()
        .chain(b.entries())
        .flat_map(|(p, _)| [p.birth().clone(), p.death().clone()]);
    let (min, max) = coords.fold((None::<Scalar>, None::<Scalar>), |(lo, hi), x| {
        (
            Some(lo.map_or(x.clone(), |l| l.min(x.clone()))),
            Some(hi.map_or(x.clone(), |h| h.max(x))),
        )
    });
    let spread = match (min, max) {
        (Some(lo), Some(hi)) => hi - lo,
        _ => Scalar::zero(),
    };
    let mut hi = a.max_persistence().max(b.max_persistence()).half() + spread;
    while &hi - &lo > *tol {
        let mid = lo.midpoint(&hi);
        if erosion_feasible(a, b, &mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn crossing() -> (PersistenceDiagram, PersistenceDiagram) {
        (
            PersistenceDiagram::from_ints(&[(0, 10), (1, 11)]).unwrap(),
            PersistenceDiagram::from_ints(&[(0, 11), (1, 10)]).unwrap(),
        )
    }

    #[test]
    fn erosion_of_identical_and_empty() {
        let y = PersistenceDiagram::from_ints(&[(1, 7), (3, 8), (2, 5), (2, 5), (9, 10)]).unwrap();
        assert_eq!(erosion(&y, &y), Scalar::zero());
        assert_eq!(erosion(&y, &PersistenceDiagram::empty()), 3.into());
    }

    #[test]
    fn crossing_pair_erosion_is_one() {
        let (y, z) = crossing();
        assert_eq!(erosion(&y, &z), Scalar::one());
        let tol = Scalar::dyadic(1, 20);
        let (lo, hi) = erosion_direct(&y, &z, &tol).unwrap();
        assert!(lo <= Scalar::one() && Scalar::one() <= hi);
        assert!(&hi - &lo <= tol);
    }

    #[test]
    fn bracket_for_equal_diagrams() {
        let (y, _) = crossing();
        let (lo, hi) = erosion_direct(&y, &y, &q(1, 8)).unwrap();
        assert_eq!(lo, Scalar::zero());
        assert!(hi <= q(1, 8));
        assert!(erosion_direct(&y, &y, &Scalar::zero()).is_err());
    }

    #[test]
    fn gap_witness_values() {
        let y = PersistenceDiagram::from_ratios(&[((0, 1), (5, 2))]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(erosion(&y, &z), q(1, 2));
        let (lo, hi) = erosion_direct(&y, &z, &Scalar::dyadic(1, 20)).unwrap();
        assert!(lo <= q(1, 2) && q(1, 2) <= hi);
    }

    #[test]
    fn band_pair_can_be_masked_inside_local_radius() {
        // the added pair (945/128, 1185/128) sets d_B but pokes only partly
        // above the moved tent, so erosion comes out smaller
        let y = PersistenceDiagram::from_ratios(&[((29, 4), (45, 4))]).unwrap();
        let z = PersistenceDiagram::from_ratios(&[
            ((45, 8), (51, 8)),
            ((945, 128), (1185, 128)),
            ((15, 2), (11, 1)),
            ((2025, 256), (2121, 256)),
        ])
        .unwrap();
        let r = y.local_radius().unwrap();
        assert_eq!(r, Scalar::one());
        assert_eq!(crate::metrics::bottleneck_distance(&y, &z), q(15, 16));
        assert_eq!(erosion(&y, &z), q(225, 256));
        assert!(y.open_ball_contains(&z, &r));
    }
}
