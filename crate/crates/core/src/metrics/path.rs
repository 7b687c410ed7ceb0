use super::bottleneck::bottleneck;
use super::erosion::erosion;
use crate::diagram::{interpolate_matched, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Erosion length of the straight-line bottleneck geodesic from `a` to `b`
/// sampled at `t = j / segments`. Refining the partition can only increase
/// the sum (triangle inequality); the supremum over partitions is the
/// bottleneck distance.
///
/// Paths along which two points of the interpolated diagrams collide are not
/// treated specially.
pub fn erosion_path_length(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    segments: usize,
) -> Result<Scalar> {
    if segments == 0 {
        return Err(Error::Other("segments must be at least 1".to_string()));
    }
    let (_, matching) = bottleneck(a, b);
    let n = segments as i64;
    let samples = (0..=n)
        .map(|j| interpolate_matched(a, b, &matching, &Scalar::new(j, n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(samples.windows(2).map(|w| erosion(&w[0], &w[1])).sum())
}

/// A pair of diagrams on which erosion distance is strictly smaller than
/// bottleneck distance, with both values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapExample {
    pub left: PersistenceDiagram,
    pub right: PersistenceDiagram,
    pub bottleneck: Scalar,
    pub erosion: Scalar,
}

/// `{(0, 5/2)}` against `{(0, 2), (1, 3)}`: the two tents of the right
/// diagram jointly shadow the single tent within `1/2`, but any matching
/// leaves a point displaced or diagonal-matched at cost `1`.
pub fn gap_example() -> GapExample {
    let left = PersistenceDiagram::from_ratios(&[((0, 1), (5, 2))]).expect("valid");
    let right = PersistenceDiagram::from_ints(&[(0, 2), (1, 3)]).expect("valid");
    let (d_b, _) = bottleneck(&left, &right);
    let d_e = erosion(&left, &right);
    GapExample {
        left,
        right,
        bottleneck: d_b,
        erosion: d_e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn gap_values() {
        let g = gap_example();
        assert_eq!(g.bottleneck, Scalar::one());
        assert_eq!(g.erosion, q(1, 2));
    }

    #[test]
    fn single_segment_is_erosion() {
        let g = gap_example();
        assert_eq!(erosion_path_length(&g.left, &g.right, 1).unwrap(), q(1, 2));
        assert!(erosion_path_length(&g.left, &g.right, 0).is_err());
    }

    #[test]
    fn crossing_pair_path() {
        let y = PersistenceDiagram::from_ints(&[(0, 10), (1, 11)]).unwrap();
        let z = PersistenceDiagram::from_ints(&[(0, 11), (1, 10)]).unwrap();
        assert_eq!(erosion_path_length(&y, &z, 64).unwrap(), Scalar::one());
    }
}
