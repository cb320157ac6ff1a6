use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::line::ProjArrangement;
use super::Point;
use crate::arith::RealAlgebraic;

/// An intersection point of `cA` with the indices of the lines through it.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplePoint {
    /// Homogeneous coordinates scaled so the first nonzero entry is 1.
    pub point: Point,
    /// Sorted line indices.
    pub incident: Vec<usize>,
}

impl MultiplePoint {
    pub fn multiplicity(&self) -> usize {
        self.incident.len()
    }

    pub fn contains(&self, line: usize) -> bool {
        self.incident.binary_search(&line).is_ok()
    }

    /// Whether the point lies on line `i` and on no line outside `set`.
    pub fn incident_subset_of(&self, set: &[usize]) -> bool {
        self.incident.iter().all(|i| set.contains(i))
    }
}

pub(crate) fn normalize_point(p: Point) -> Point {
    let lead = p.iter().find(|c| !c.is_zero()).expect("nonzero point").clone();
    let inv = lead.inv().expect("nonzero");
    p.map(|c: RealAlgebraic| &c * &inv)
}

/// All intersection points of `cA`, grouped exactly, in order of their
/// lexicographically smallest line pair.
pub fn multiple_points(arr: &ProjArrangement) -> Vec<MultiplePoint> {
    let n = arr.len();
    let mut seen = vec![vec![false; n]; n];
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if seen[i][j] {
                continue;
            }
            let p = arr.line(i).meet(arr.line(j));
            let incident: Vec<usize> =
                (0..n).filter(|&k| k == i || k == j || arr.line(k).eval(&p).is_zero()).collect();
            for &a in &incident {
                for &b in &incident {
                    seen[a][b] = true;
                }
            }
            out.push(MultiplePoint { point: normalize_point(p), incident });
        }
    }
    out
}

/// Multiplicity histogram: multiplicity -> number of points.
pub fn profile(points: &[MultiplePoint]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for p in points {
        *h.entry(p.multiplicity()).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RealField;
    use crate::geometry::ProjLine;

    fn arr(rows: &[[i64; 3]]) -> ProjArrangement {
        let f = RealField::rational();
        ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()).unwrap()
    }

    fn binom2(n: usize) -> usize {
        n * (n - 1) / 2
    }

    #[test]
    fn a3_profile() {
        let a = arr(&[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, -1, 0], [0, 0, 1]]);
        let pts = multiple_points(&a);
        let prof = profile(&pts);
        assert_eq!(prof.get(&3), Some(&4));
        assert_eq!(prof.get(&2), Some(&3));
        assert_eq!(pts.iter().map(|p| binom2(p.multiplicity())).sum::<usize>(), binom2(6));
        // The vertical direction at infinity carries x=0, x=1 and H∞.
        assert!(pts.iter().any(|p| p.incident == [0, 1, 5]));
    }

    #[test]
    fn generic_quadrilateral() {
        let a = arr(&[[1, 0, 0], [0, 1, 0], [1, 1, -1], [1, -2, 3]]);
        let pts = multiple_points(&a);
        assert_eq!(pts.len(), 6);
        assert!(pts.iter().all(|p| p.multiplicity() == 2));
    }
}
