use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::normalize::NormalizedArrangement;
use crate::arith::RealAlgebraic;

/// A connected component of the complement of the affine lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Chamber {
    /// `signs[i]` is true where `α_i > 0`.
    pub signs: Vec<bool>,
    pub bounded: bool,
    /// An interior point in chart coordinates.
    pub witness: (RealAlgebraic, RealAlgebraic),
    /// Meets the strip above every vertex.
    pub top: bool,
    /// Meets the strip below every vertex.
    pub bottom: bool,
}

impl Chamber {
    pub fn positive(&self, i: usize) -> bool {
        self.signs[i]
    }

    /// Sign vector as a `+`/`-` string.
    pub fn sign_string(&self) -> alloc::string::String {
        self.signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
    }
}

/// Lines where the sign vectors of the two chambers differ.
pub fn separating_set(c1: &Chamber, c2: &Chamber) -> Vec<usize> {
    (0..c1.signs.len()).filter(|&i| c1.signs[i] != c2.signs[i]).collect()
}

pub fn distance(c1: &Chamber, c2: &Chamber) -> usize {
    c1.signs.iter().zip(&c2.signs).filter(|(a, b)| a != b).count()
}

/// All chambers, found by sweeping horizontal strips between consecutive
/// vertex heights. Normalized lines are never horizontal, so each strip
/// orders the lines by abscissa. Chambers are listed in order of first
/// appearance, bottom to top and left to right.
pub fn enumerate_chambers(arr: &NormalizedArrangement) -> Vec<Chamber> {
    let f = arr.field();
    let one = f.one();
    let n = arr.n();

    let mut events: Vec<RealAlgebraic> = arr.vertices().into_iter().map(|(_, y)| y).collect();
    events.sort();
    events.dedup();

    let far = &events.iter().map(RealAlgebraic::abs).max().unwrap() + &one;
    let mut samples = Vec::with_capacity(events.len() + 1);
    samples.push(-&far);
    for w in events.windows(2) {
        samples.push((&w[0] + &w[1]).half());
    }
    samples.push(far);

    let rightward: Vec<bool> = arr.lines().iter().map(|l| l.a.sign() > 0).collect();
    let mut index: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
    let mut chambers: Vec<Chamber> = Vec::new();
    let last = samples.len() - 1;

    for (si, y) in samples.iter().enumerate() {
        let infinite = si == 0 || si == last;
        let xs: Vec<RealAlgebraic> = arr.lines().iter().map(|l| l.x_at(y)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| xs[i].cmp(&xs[j]));

        // Left of every line: α_i has the sign opposite to a_i.
        let mut signs: Vec<bool> = rightward.iter().map(|&r| !r).collect();
        for gap in 0..=n {
            if gap > 0 {
                let crossed = order[gap - 1];
                signs[crossed] = rightward[crossed];
            }
            let ray = gap == 0 || gap == n;
            let wx = if gap == 0 {
                &xs[order[0]] - &one
            } else if gap == n {
                &xs[order[n - 1]] + &one
            } else {
                (&xs[order[gap - 1]] + &xs[order[gap]]).half()
            };
            let unbounded = infinite || ray;
            match index.get(&signs) {
                Some(&ci) => {
                    let c = &mut chambers[ci];
                    c.bounded &= !unbounded;
                    c.top |= si == last;
                    c.bottom |= si == 0;
                }
                None => {
                    index.insert(signs.clone(), chambers.len());
                    chambers.push(Chamber {
                        signs: signs.clone(),
                        bounded: !unbounded,
                        witness: (wx, y.clone()),
                        top: si == last,
                        bottom: si == 0,
                    });
                }
            }
        }
    }
    chambers
}

/// Index of the chamber with the given sign vector.
pub fn find_chamber(chambers: &[Chamber], signs: &[bool]) -> Option<usize> {
    chambers.iter().position(|c| c.signs == signs)
}
