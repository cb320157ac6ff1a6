use alloc::vec::Vec;

use crate::bands::check_order;
use crate::error::Result;
use crate::geometry::{multiple_points, MultiplePoint, ProjArrangement};

/// Two lines with one of their two complementary regions free of
/// intersection points of the remaining lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpPair {
    pub i: usize,
    pub j: usize,
    /// Sign of `α_i α_j` on the empty region.
    pub empty_region_sign: i8,
    /// Multiplicity of `cA` at `H_i ∩ H_j`.
    pub apex_multiplicity: usize,
}

/// Sign of `α_i α_j` at each intersection point of the other lines; `0`
/// when the point lies on `H_i ∪ H_j`.
fn region_signs(arr: &ProjArrangement, points: &[MultiplePoint], i: usize, j: usize) -> (bool, bool) {
    let (li, lj) = (arr.line(i), arr.line(j));
    let (mut pos, mut neg) = (false, false);
    for p in points {
        let others = p.incident.iter().filter(|&&h| h != i && h != j).count();
        if others < 2 {
            continue;
        }
        match li.eval(&p.point).sign() * lj.eval(&p.point).sign() {
            1 => pos = true,
            -1 => neg = true,
            _ => {}
        }
    }
    (pos, neg)
}

pub fn sharp_pairs(arr: &ProjArrangement) -> Vec<SharpPair> {
    let points = multiple_points(arr);
    let n = arr.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (pos, neg) = region_signs(arr, &points, i, j);
            if pos && neg {
                continue;
            }
            let apex = points.iter().find(|p| p.contains(i) && p.contains(j)).map_or(2, |p| p.multiplicity());
            out.push(SharpPair { i, j, empty_region_sign: if pos { -1 } else { 1 }, apex_multiplicity: apex });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    AtMostOne,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub bound: Bound,
    pub certificate: Option<SharpPair>,
}

/// Upper bound on `dim H¹(F)_λ`, `λ = e^{2πi/k}`, from sharp pairs.
pub fn upper_bound(arr: &ProjArrangement, k: u64) -> Result<UpperBound> {
    check_order(k, arr.len())?;
    Ok(upper_bound_from(&sharp_pairs(arr), k))
}

pub fn upper_bound_from(pairs: &[SharpPair], k: u64) -> UpperBound {
    if let Some(p) = pairs.iter().find(|p| p.apex_multiplicity as u64 % k != 0) {
        return UpperBound { bound: Bound::Zero, certificate: Some(p.clone()) };
    }
    match pairs.first() {
        Some(p) => UpperBound { bound: Bound::AtMostOne, certificate: Some(p.clone()) },
        None => UpperBound { bound: Bound::Unbounded, certificate: None },
    }
}
