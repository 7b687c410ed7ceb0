//! Closed forms on birth-zero diagrams and the death vectorization.

use std::fmt;

use crate::diagram::{BirthDeathPair, PersistenceDiagram};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

fn require_birth_zero(y: &PersistenceDiagram) -> Result<()> {
    match y.entries().iter().find(|(p, _)| !p.birth().is_zero()) {
        Some((p, _)) => Err(Error::NotBirthZero {
            birth: p.birth().clone(),
            death: p.death().clone(),
        }),
        None => Ok(()),
    }
}

/// A finitely supported non-increasing sequence of positive values; entries
/// past the end are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeathVector {
    entries: Vec<Scalar>,
}

impl DeathVector {
    pub fn new(entries: Vec<Scalar>) -> Result<Self> {
        let sorted = entries.windows(2).all(|w| w[0] >= w[1]);
        if !sorted || entries.iter().any(|x| !x.is_positive()) {
            return Err(Error::InvalidDeathVector);
        }
        Ok(DeathVector { entries })
    }

    /// Deaths of a birth-zero diagram, largest first.
    pub fn from_diagram(y: &PersistenceDiagram) -> Result<Self> {
        require_birth_zero(y)?;
        let mut deaths: Vec<Scalar> = y.points().into_iter().map(|p| p.death().clone()).collect();
        deaths.sort_by(|a, b| b.cmp(a));
        Ok(DeathVector { entries: deaths })
    }

    /// The birth-zero diagram with these deaths.
    pub fn to_diagram(&self) -> PersistenceDiagram {
        PersistenceDiagram::from_points(self.entries.iter().map(|d| {
            BirthDeathPair::new(Scalar::zero(), d.clone()).expect("positive entries")
        }))
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> Scalar {
        self.entries.get(i).cloned().unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for DeathVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `l∞` distance between zero-padded death vectors.
pub fn dv_distance(u: &DeathVector, v: &DeathVector) -> Scalar {
    (0..u.len().max(v.len()))
        .map(|i| (u.get(i) - v.get(i)).abs())
        .max()
        .unwrap_or_else(Scalar::zero)
}

/// Closed-form common value of the bottleneck, erosion and landscape
/// distances on birth-zero diagrams: with deaths sorted in decreasing order
/// and zero-padded, `max_i min(|d_i - d'_i|, max(d_i, d'_i) / 2)`.
pub fn birthzero_distance(a: &PersistenceDiagram, b: &PersistenceDiagram) -> Result<Scalar> {
    let u = DeathVector::from_diagram(a)?;
    let v = DeathVector::from_diagram(b)?;
    Ok((0..u.len().max(v.len()))
        .map(|i| {
            let (x, y) = (u.get(i), v.get(i));
            let direct = (&x - &y).abs();
            let diagonal = x.max(y).half();
            direct.min(diagonal)
        })
        .max()
        .unwrap_or_else(Scalar::zero))
}
