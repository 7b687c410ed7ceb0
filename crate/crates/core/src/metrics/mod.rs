//! Distances between persistence diagrams.

mod birthzero;
mod bottleneck;
mod embed;
mod erosion;
mod path;

use std::fmt;
use std::str::FromStr;

pub use birthzero::{birthzero_distance, dv_distance, DeathVector};
pub use bottleneck::{bottleneck, bottleneck_distance};
pub use embed::{embed_finite_metric, FiniteMetric};
pub use erosion::{erosion, erosion_direct, landscape_distance};
pub use path::{erosion_path_length, gap_example, GapExample};

use crate::diagram::PersistenceDiagram;
use crate::error::Result;
use crate::exec::{map_indices, Execution};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Bottleneck,
    Erosion,
    Landscape,
    BirthZero,
    DeathVector,
}

impl Metric {
    pub fn distance(self, a: &PersistenceDiagram, b: &PersistenceDiagram) -> Result<Scalar> {
        match self {
            Metric::Bottleneck => Ok(bottleneck_distance(a, b)),
            Metric::Erosion => Ok(erosion(a, b)),
            Metric::Landscape => Ok(landscape_distance(a, b)),
            Metric::BirthZero => birthzero_distance(a, b),
            Metric::DeathVector => Ok(dv_distance(
                &DeathVector::from_diagram(a)?,
                &DeathVector::from_diagram(b)?,
            )),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Metric::Bottleneck => "bottleneck",
            Metric::Erosion => "erosion",
            Metric::Landscape => "landscape",
            Metric::BirthZero => "birthzero",
            Metric::DeathVector => "dv",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bottleneck" => Ok(Metric::Bottleneck),
            "erosion" => Ok(Metric::Erosion),
            "landscape" => Ok(Metric::Landscape),
            "birthzero" => Ok(Metric::BirthZero),
            "dv" => Ok(Metric::DeathVector),
            other => Err(format!("unknown metric `{other}`")),
        }
    }
}

/// Symmetric matrix of pairwise distances. Each unordered pair is an
/// independent task under [`Execution::Parallel`].
pub fn distance_matrix(
    diagrams: &[PersistenceDiagram],
    metric: Metric,
    exec: Execution,
) -> Result<Vec<Vec<Scalar>>> {
    let n = diagrams.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let values = map_indices(pairs.len(), exec, |k| {
        let (i, j) = pairs[k];
        metric.distance(&diagrams[i], &diagrams[j])
    });
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for ((i, j), d) in pairs.into_iter().zip(values) {
        let d = d?;
        out[j][i] = d.clone();
        out[i][j] = d;
    }
    Ok(out)
}
