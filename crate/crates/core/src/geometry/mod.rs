//! Projective line arrangements over a real coordinate field, their affine
//! normalization and chamber structure.

pub mod chambers;
pub mod format;
pub mod line;
pub mod normalize;
pub mod points;
pub mod transform;

pub use chambers::{distance, enumerate_chambers, separating_set, Chamber};
pub use format::{parse_arrangement, write_arrangement, ArrFile};
pub use line::{ProjArrangement, ProjLine};
pub use normalize::{decone, AffineLine, NormalizedArrangement};
pub use points::{multiple_points, profile, MultiplePoint};
pub use transform::Mat3;

use crate::arith::RealAlgebraic;

/// Homogeneous point `(x : y : z)`.
pub type Point = [RealAlgebraic; 3];
