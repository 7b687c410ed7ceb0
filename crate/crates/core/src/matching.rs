use crate::diagram::PersistenceDiagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A bijection between a subset of the left diagram's points and a subset of
/// the right diagram's points; everything else goes to the diagonal.
///
/// Indices refer to [`PersistenceDiagram::points`], i.e. the canonical order
/// with multiplicities expanded.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PartialMatching {
    matched: Vec<(usize, usize)>,
    unmatched_left: Vec<usize>,
    unmatched_right: Vec<usize>,
}

impl PartialMatching {
    pub fn new(
        matched: Vec<(usize, usize)>,
        unmatched_left: Vec<usize>,
        unmatched_right: Vec<usize>,
    ) -> Self {
        PartialMatching {
            matched,
            unmatched_left,
            unmatched_right,
        }
    }

    /// Matches point `i` to point `i`; only meaningful for equal diagrams.
    pub fn identity(n: usize) -> Self {
        PartialMatching::new((0..n).map(|i| (i, i)).collect(), vec![], vec![])
    }

    pub fn matched(&self) -> &[(usize, usize)] {
        &self.matched
    }

    pub fn unmatched_left(&self) -> &[usize] {
        &self.unmatched_left
    }

    pub fn unmatched_right(&self) -> &[usize] {
        &self.unmatched_right
    }

    /// Checks that the index lists partition `0..left` and `0..right`.
    pub fn validate(&self, left: usize, right: usize) -> Result<()> {
        let mut seen_left = vec![false; left];
        let mut seen_right = vec![false; right];
        let mark = |seen: &mut [bool], i: usize, side: &str| -> Result<()> {
            match seen.get_mut(i) {
                None => Err(Error::InvalidMatching(format!("{side} index {i} out of range"))),
                Some(true) => Err(Error::InvalidMatching(format!("{side} index {i} used twice"))),
                Some(s) => {
                    *s = true;
                    Ok(())
                }
            }
        };
        for &(i, j) in &self.matched {
            mark(&mut seen_left, i, "left")?;
            mark(&mut seen_right, j, "right")?;
        }
        for &i in &self.unmatched_left {
            mark(&mut seen_left, i, "left")?;
        }
        for &j in &self.unmatched_right {
            mark(&mut seen_right, j, "right")?;
        }
        if let Some(i) = seen_left.iter().position(|s| !s) {
            return Err(Error::InvalidMatching(format!("left index {i} not covered")));
        }
        if let Some(j) = seen_right.iter().position(|s| !s) {
            return Err(Error::InvalidMatching(format!("right index {j} not covered")));
        }
        Ok(())
    }

    /// Largest of the matched `l∞` displacements and the half-persistences of
    /// unmatched points.
    pub fn cost(&self, left: &PersistenceDiagram, right: &PersistenceDiagram) -> Result<Scalar> {
        let from = left.points();
        let to = right.points();
        self.validate(from.len(), to.len())?;
        let matched = self.matched.iter().map(|&(i, j)| from[i].linf(&to[j]));
        let left_diag = self.unmatched_left.iter().map(|&i| from[i].diagonal_cost());
        let right_diag = self.unmatched_right.iter().map(|&j| to[j].diagonal_cost());
        Ok(matched
            .chain(left_diag)
            .chain(right_diag)
            .max()
            .unwrap_or_else(Scalar::zero))
    }
}
