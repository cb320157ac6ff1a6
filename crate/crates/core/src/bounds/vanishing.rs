use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bands::{analyze, check_order};
use crate::error::Result;
use crate::geometry::{multiple_points, MultiplePoint, ProjArrangement};

/// A sufficient condition for `H¹(F)_λ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Criterion {
    /// No k-resonant band for the chosen line at infinity.
    NoResonantBands,
    /// All k-resonant bands are parallel.
    ParallelResonantBands,
    /// Some line carries fewer k-divisible points than any line must when
    /// the eigenspace is nonzero.
    SparseLine { line: usize, count: usize, required: usize },
}

impl core::fmt::Display for Criterion {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Criterion::NoResonantBands => write!(f, "no resonant bands"),
            Criterion::ParallelResonantBands => write!(f, "all resonant bands parallel"),
            Criterion::SparseLine { line, count, required } => {
                write!(f, "line {line} has {count} points of multiplicity divisible by k, fewer than {required}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineEntry {
    pub line: usize,
    /// Points on the line with multiplicity at least 3.
    pub multiple_points: usize,
    /// Points on the line with multiplicity divisible by `k`.
    pub resonant_points: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VanishingReport {
    pub k: u64,
    pub infinity: usize,
    pub resonant_bands: usize,
    /// Number of distinct directions among the resonant bands.
    pub resonant_directions: usize,
    /// Criterion read off the chosen line at infinity.
    pub at_infinity: Option<Criterion>,
    pub per_line: Vec<LineEntry>,
    /// Criterion read off the per-line table.
    pub per_line_criterion: Option<Criterion>,
}

impl VanishingReport {
    pub fn fires(&self) -> bool {
        self.at_infinity.is_some() || self.per_line_criterion.is_some()
    }
}

/// Lines needed through k-divisible points when the eigenspace is nonzero.
pub fn required_points(lines: usize) -> usize {
    if lines >= 7 {
        3
    } else {
        2
    }
}

pub fn line_table(points: &[MultiplePoint], lines: usize, k: u64) -> Vec<LineEntry> {
    (0..lines)
        .map(|h| {
            let on: Vec<&MultiplePoint> = points.iter().filter(|p| p.contains(h)).collect();
            LineEntry {
                line: h,
                multiple_points: on.iter().filter(|p| p.multiplicity() >= 3).count(),
                resonant_points: on.iter().filter(|p| p.multiplicity() as u64 % k == 0).count(),
            }
        })
        .collect()
}

pub fn vanishing_report(arr: &ProjArrangement, infinity: usize, k: u64) -> Result<VanishingReport> {
    check_order(k, arr.len())?;
    let analysis = analyze(arr, infinity)?;
    let resonant: Vec<_> = analysis.bands.iter().filter(|b| b.is_resonant(k)).collect();
    let mut directions: BTreeMap<usize, ()> = BTreeMap::new();
    for b in &resonant {
        // The lowest line index of a parallel class identifies its direction.
        let rep = (0..analysis.n())
            .find(|&i| analysis.normalized.line(i).is_parallel(analysis.normalized.line(b.lower)))
            .unwrap_or(b.lower);
        directions.insert(rep, ());
    }
    let at_infinity = if resonant.is_empty() {
        Some(Criterion::NoResonantBands)
    } else if directions.len() == 1 {
        Some(Criterion::ParallelResonantBands)
    } else {
        None
    };

    let points = multiple_points(arr);
    let per_line = line_table(&points, arr.len(), k);
    let required = required_points(arr.len());
    let per_line_criterion = per_line
        .iter()
        .find(|e| e.resonant_points < required)
        .map(|e| Criterion::SparseLine { line: e.line, count: e.resonant_points, required });

    Ok(VanishingReport {
        k,
        infinity,
        resonant_bands: resonant.len(),
        resonant_directions: directions.len(),
        at_infinity,
        per_line,
        per_line_criterion,
    })
}

/// Nonzero eigenspaces with resonant bands in at most two directions occur
/// only for the `A3` combinatorics. Returns false on a counterexample.
pub fn a3_characterization_holds(arr: &ProjArrangement, dim: usize, resonant_directions: usize) -> bool {
    if dim == 0 || resonant_directions > 2 {
        return true;
    }
    let profile = crate::geometry::profile(&multiple_points(arr));
    arr.len() == 6 && profile.get(&3) == Some(&4) && profile.get(&2) == Some(&3) && profile.len() == 2
}
