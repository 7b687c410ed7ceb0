//! Exact persistence landscapes: construction as k-th upper envelopes of
//! tents, the landscape-sequence axioms, the flow `T_ε`, direct sums, and the
//! two inverse maps back to diagrams.

mod curve;
mod envelope;
mod invert;
mod sequence;
mod validate;

pub use curve::LandscapeCurve;
pub use invert::{invert_by_degree, invert_by_peeling};
pub use sequence::LandscapeSequence;
pub use validate::{validate, ValidationReport, Violation};
