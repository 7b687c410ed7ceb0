//! Isometric embedding of finite metric spaces into birth-zero diagrams.

use std::fmt;

use super::birthzero::DeathVector;
use crate::diagram::PersistenceDiagram;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite metric space given by its distance matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMetric {
    dist: Vec<Vec<Scalar>>,
}

impl FiniteMetric {
    /// Checks squareness, zero diagonal, positivity off the diagonal, symmetry
    /// and the triangle inequality; the error names the first failed axiom.
    pub fn new(dist: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = dist.len();
        if n == 0 {
            return Err(Error::InvalidMetric("empty space".to_string()));
        }
        if let Some(i) = dist.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidMetric(format!("row {i} does not have {n} entries")));
        }
        for i in 0..n {
            if !dist[i][i].is_zero() {
                return Err(Error::InvalidMetric(format!("zero diagonal fails at ({i}, {i})")));
            }
            for j in 0..n {
                if i != j && !dist[i][j].is_positive() {
                    return Err(Error::InvalidMetric(format!("positivity fails at ({i}, {j})")));
                }
                if dist[i][j] != dist[j][i] {
                    return Err(Error::InvalidMetric(format!("symmetry fails at ({i}, {j})")));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if dist[i][k] > &dist[i][j] + &dist[j][k] {
                        return Err(Error::InvalidMetric(format!(
                            "triangle inequality fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteMetric { dist })
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn dist(&self, i: usize, j: usize) -> &Scalar {
        &self.dist[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.dist
    }
}

impl fmt::Display for FiniteMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.len())?;
        for row in &self.dist {
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The Kuratowski image `x_i ↦ (d(x_i, x_1), ..., d(x_i, x_n))` in
/// `(R^n, l∞)` pushed into non-increasing positive sequences by
/// `a ↦ (2c(n + 2 - k) + a_k)_k` with `c` exceeding every `|a_k|` and every
/// `|a^i_k - a^j_l|`, then read back as birth-zero diagrams.
///
/// The map preserves `l∞` distances between death vectors, and because every
/// entry is at least `4c` while differences stay below `c`, the birth-zero
/// closed form reduces to the same `l∞` distance. So the output is isometric
/// for the bottleneck, erosion and landscape distances as well.
pub fn embed_finite_metric(metric: &FiniteMetric) -> Vec<PersistenceDiagram> {
    let n = metric.len();
    let rows = metric.rows();
    let entries = || rows.iter().flat_map(|r| r.iter());
    let mut bound = entries().map(|x| x.abs()).max().unwrap_or_else(Scalar::zero);
    // all entries are non-negative, so the largest |a^i_k - a^j_l| is the
    // spread of the entries
    let min = entries().min().cloned().unwrap_or_else(Scalar::zero);
    let max = entries().max().cloned().unwrap_or_else(Scalar::zero);
    bound = bound.max(max - min);
    let c = bound + Scalar::one();
    let two_c = &c + &c;
    rows.iter()
        .map(|row| {
            let shifted: Vec<Scalar> = row
                .iter()
                .enumerate()
                .map(|(idx, a)| {
                    let k = idx as i64 + 1;
                    &two_c * Scalar::from_int(n as i64 + 2 - k) + a
                })
                .collect();
            DeathVector::new(shifted)
                .expect("shifted rows are positive and non-increasing")
                .to_diagram()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{birthzero_distance, dv_distance};
    use crate::scalar::q;

    fn metric(raw: &[&[i64]]) -> Result<FiniteMetric> {
        FiniteMetric::new(
            raw.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn single_point() {
        let m = metric(&[&[0]]).unwrap();
        let out = embed_finite_metric(&m);
        assert_eq!(out.len(), 1);
        assert!(out[0].is_birth_zero());
    }

    #[test]
    fn two_points() {
        let m = metric(&[&[0, 3], &[3, 0]]).unwrap();
        let out = embed_finite_metric(&m);
        assert_eq!(birthzero_distance(&out[0], &out[1]).unwrap(), 3.into());
        let u = DeathVector::from_diagram(&out[0]).unwrap();
        let v = DeathVector::from_diagram(&out[1]).unwrap();
        assert_eq!(dv_distance(&u, &v), 3.into());
    }

    #[test]
    fn rational_triangle() {
        let m = FiniteMetric::new(vec![
            vec![Scalar::zero(), q(1, 2), q(2, 3)],
            vec![q(1, 2), Scalar::zero(), q(1, 3)],
            vec![q(2, 3), q(1, 3), Scalar::zero()],
        ])
        .unwrap();
        let out = embed_finite_metric(&m);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(&birthzero_distance(&out[i], &out[j]).unwrap(), m.dist(i, j));
            }
        }
    }

    #[test]
    fn names_the_failed_axiom() {
        let err = |raw: &[&[i64]]| match metric(raw) {
            Err(Error::InvalidMetric(msg)) => msg,
            other => panic!("expected an invalid metric, got {other:?}"),
        };
        assert!(err(&[&[1]]).contains("zero diagonal"));
        assert!(err(&[&[0, 1], &[2, 0]]).contains("symmetry"));
        assert!(err(&[&[0, 0], &[0, 0]]).contains("positivity"));
        assert!(err(&[&[0, 1, 5], &[1, 0, 1], &[5, 1, 0]]).contains("triangle"));
        assert!(err(&[&[0, 1], &[1]]).contains("row"));
    }
}
