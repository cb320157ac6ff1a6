//! Certificates bounding the eigenspace dimensions from both sides.

mod multinet;
mod sharp;
mod vanishing;

pub use multinet::{default_budget, search_multinets, verify_multinet, Axiom, Multinet, MultinetSearch};
pub use sharp::{sharp_pairs, upper_bound, upper_bound_from, Bound, SharpPair, UpperBound};
pub use vanishing::{a3_characterization_holds, line_table, required_points, vanishing_report, Criterion, LineEntry, VanishingReport};
