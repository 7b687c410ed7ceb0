//! Exact bottleneck, erosion and landscape distances on finite persistence
//! diagrams.
//!
//! All arithmetic is over arbitrary-precision rationals ([`Scalar`]), so every
//! identity between the distances holds with `==`, not up to a tolerance.
//!
//! * [`diagram`]: diagrams as multisets, rank functions, the shrink coflow and
//!   the diagram order.
//! * [`landscape`]: persistence landscapes as exact piecewise-linear curves,
//!   direct sums, the flow, degrees and the two inverse maps.
//! * [`metrics`]: bottleneck (with an optimal matching), erosion, landscape
//!   and birth-zero distances, death vectors, and the embedding of finite
//!   metric spaces.
//! * [`verify`]: seeded property suites, optionally data-parallel.
//!
//! ```
//! use erodist::{metrics, PersistenceDiagram, Scalar};
//!
//! let y = PersistenceDiagram::from_ints(&[(1, 7), (3, 8), (2, 5), (2, 5), (9, 10)]).unwrap();
//! let empty = PersistenceDiagram::empty();
//! assert_eq!(metrics::erosion(&y, &empty), Scalar::from_int(3));
//! ```

#![allow(clippy::result_large_err, clippy::needless_range_loop)]

pub mod diagram;
pub mod error;
pub mod exec;
pub mod gen;
pub mod landscape;
pub mod matching;
pub mod metrics;
pub mod scalar;
pub mod text;
pub mod verify;

pub use diagram::{erosion_feasible, interpolate_matched, BirthDeathPair, PersistenceDiagram, RankQuery};
pub use error::{Error, Result};
pub use exec::Execution;
pub use landscape::{LandscapeCurve, LandscapeSequence};
pub use matching::PartialMatching;
pub use scalar::Scalar;
