//! The twisted minimal cochain complex of a rank-one local system over the
//! chambers of a normalized arrangement.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith::{CycMatrix, Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::geometry::chambers::find_chamber;
use crate::geometry::{decone, enumerate_chambers, separating_set, Chamber, NormalizedArrangement, ProjArrangement};

/// Monodromies `q_i = ζ_M^{2 e_i}` with the chosen square roots
/// `q_i^{1/2} = ζ_M^{e_i}`, indexed by normalized line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSystem {
    order: u64,
    half_exponents: Vec<i64>,
}

impl LocalSystem {
    pub fn new(order: u64, half_exponents: Vec<i64>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidLocalSystem("order must be positive".into()));
        }
        let m = order as i64;
        Ok(LocalSystem { order, half_exponents: half_exponents.into_iter().map(|e| e.rem_euclid(m)).collect() })
    }

    /// `q_i = 1` for all lines.
    pub fn trivial(n: usize) -> Self {
        LocalSystem { order: 1, half_exponents: alloc::vec![0; n] }
    }

    /// `q_i = e^{2πi j/k}` for all lines, with `q_i^{1/2} = ζ_{2k}^j`.
    pub fn eigenvalue(k: u64, j: i64, n: usize) -> Self {
        LocalSystem::new(2 * k, alloc::vec![j; n]).unwrap()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn half_exponents(&self) -> &[i64] {
        &self.half_exponents
    }

    /// Same monodromies with every square root negated (`e_i + M/2`).
    pub fn other_roots(&self) -> Option<Self> {
        if self.order % 2 != 0 {
            return None;
        }
        let h = (self.order / 2) as i64;
        LocalSystem::new(self.order, self.half_exponents.iter().map(|e| e + h).collect()).ok()
    }
}

/// `Δ(C, C') = Π ζ^{e_i} - Π ζ^{-e_i}` over the lines separating the chambers.
pub fn delta(c1: &Chamber, c2: &Chamber, l: &LocalSystem, field: &Arc<CyclotomicField>) -> Cyclotomic {
    let e: i64 = separating_set(c1, c2).iter().map(|&i| l.half_exponents[i]).sum();
    &field.root(e) - &field.root(-e)
}

/// Chambers split by the flag: `U_0`, then `U_1..U_{n-1}, U_0^∨`, then the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberPartition {
    pub ch0: usize,
    pub ch1: Vec<usize>,
    pub ch2: Vec<usize>,
}

pub fn partition_chambers(arr: &NormalizedArrangement, chambers: &[Chamber]) -> Result<ChamberPartition> {
    let n = arr.n();
    let lookup = |p: usize| {
        let signs: Vec<bool> = (0..n).map(|i| i < p).collect();
        find_chamber(chambers, &signs)
            .ok_or_else(|| Error::Internal(format!("no chamber positive exactly on the first {p} lines")))
    };
    let ch0 = lookup(0)?;
    let ch1: Vec<usize> = (1..=n).map(lookup).collect::<Result<_>>()?;
    let ch2 = (0..chambers.len()).filter(|c| *c != ch0 && !ch1.contains(c)).collect();
    Ok(ChamberPartition { ch0, ch1, ch2 })
}

/// `d0: C[ch0] -> C[ch1]` and `d1: C[ch1] -> C[ch2]` as matrices.
#[derive(Debug, Clone)]
pub struct TwistedComplex {
    pub d0: CycMatrix,
    pub d1: CycMatrix,
    pub partition: ChamberPartition,
}

pub fn build_complex(arr: &NormalizedArrangement, chambers: &[Chamber], l: &LocalSystem) -> Result<TwistedComplex> {
    let n = arr.n();
    if l.half_exponents.len() != n {
        return Err(Error::InvalidLocalSystem(format!("{} weights for {n} lines", l.half_exponents.len())));
    }
    let field = CyclotomicField::new(l.order);
    let part = partition_chambers(arr, chambers)?;
    let u0 = &chambers[part.ch0];

    let mut d0 = CycMatrix::zeros(&field, n, 1);
    for (r, &u) in part.ch1.iter().enumerate() {
        d0.set(r, 0, delta(u0, &chambers[u], l, &field));
    }

    let mut d1 = CycMatrix::zeros(&field, part.ch2.len(), n);
    for (row, &ci) in part.ch2.iter().enumerate() {
        let c = &chambers[ci];
        // Columns 0..n-1 are U_1..U_{n-1}; U_p is + on lines 0..p.
        for p in 1..n {
            let up = &chambers[part.ch1[p - 1]];
            let (ap, ap1) = (c.positive(p - 1), c.positive(p));
            if ap && !ap1 {
                d1.set(row, p - 1, -delta(up, c, l, &field));
            } else if !ap && ap1 {
                d1.set(row, p - 1, delta(up, c, l, &field));
            }
        }
        if c.positive(n - 1) {
            let uv = &chambers[part.ch1[n - 1]];
            d1.set(row, n - 1, -delta(uv, c, l, &field));
        }
    }
    Ok(TwistedComplex { d0, d1, partition: part })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
}

pub fn cohomology_dims(c: &TwistedComplex) -> Result<Cohomology> {
    if !c.d1.mul(&c.d0).is_zero() {
        return Err(Error::Internal("d1 * d0 is not zero".into()));
    }
    let n = c.d0.rows();
    let r0 = c.d0.rank();
    let r1 = c.d1.rank();
    Ok(Cohomology { h0: 1 - r0, h1: n - r1 - r0, h2: c.d1.rows() - r1 })
}

/// Cohomology of `l` on `arr` deconed at `infinity`.
pub fn local_system_cohomology(arr: &ProjArrangement, infinity: usize, l: &LocalSystem) -> Result<Cohomology> {
    let na = decone(arr, infinity)?;
    let ch = enumerate_chambers(&na);
    cohomology_dims(&build_complex(&na, &ch, l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, RealField};
    use crate::geometry::ProjLine;
    use alloc::vec;

    fn a3() -> ProjArrangement {
        let f = RealField::rational();
        let rows = [[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, -1, 0], [0, 0, 1]];
        ProjArrangement::new(rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()).unwrap()
    }

    fn chambers_of(arr: &ProjArrangement, inf: usize) -> (NormalizedArrangement, Vec<Chamber>) {
        let na = decone(arr, inf).unwrap();
        let ch = enumerate_chambers(&na);
        (na, ch)
    }

    #[test]
    fn delta_examples() {
        let (_, ch) = chambers_of(&a3(), 5);
        let f = CyclotomicField::new(6);
        let l = LocalSystem::eigenvalue(3, 1, 5);
        assert!(delta(&ch[0], &ch[0], &l, &f).is_zero());
        let by_distance = |d: usize| ch.iter().find(|c| crate::geometry::distance(&ch[0], c) == d).unwrap();
        assert!(delta(&ch[0], by_distance(3), &l, &f).is_zero());
        assert_eq!(delta(&ch[0], by_distance(1), &l, &f), &f.root(1) - &f.root(-1));
    }

    #[test]
    fn a3_partition_and_cohomology() {
        let arr = a3();
        let (na, ch) = chambers_of(&arr, 5);
        let p = partition_chambers(&na, &ch).unwrap();
        assert_eq!((p.ch1.len(), p.ch2.len()), (5, 6));

        let trivial = local_system_cohomology(&arr, 5, &LocalSystem::trivial(5)).unwrap();
        assert_eq!(trivial, Cohomology { h0: 1, h1: 5, h2: 6 });
        let c = build_complex(&na, &ch, &LocalSystem::trivial(5)).unwrap();
        assert!(c.d0.is_zero() && c.d1.is_zero());

        let cube = local_system_cohomology(&arr, 5, &LocalSystem::eigenvalue(3, 1, 5)).unwrap();
        assert_eq!(cube.h1, 1);
        let minus = local_system_cohomology(&arr, 5, &LocalSystem::eigenvalue(2, 1, 5)).unwrap();
        assert_eq!(minus.h1, 0);
    }

    #[test]
    fn two_lines() {
        let f = RealField::rational();
        let arr =
            ProjArrangement::new(vec![ProjLine::from_ints(&f, 1, 0, 0), ProjLine::from_ints(&f, 0, 1, 0), ProjLine::from_ints(&f, 0, 0, 1)])
                .unwrap();
        let (na, ch) = chambers_of(&arr, 2);
        assert_eq!(partition_chambers(&na, &ch).unwrap().ch2.len(), 1);
    }

    /// The arrangement of the generic-flag illustration: two slanted lines
    /// and three verticals, with the generic flag line below every vertex.
    fn five_lines() -> ProjArrangement {
        let f = RealField::rational();
        let r = |n: i64| f.from_rational(Rational::from_integer(n.into()));
        let lines = vec![
            // through (60, 0) and (260, 100)
            ProjLine::new(r(1), r(-2), r(-60)),
            ProjLine::new(r(1), r(0), r(-140)),
            ProjLine::new(r(1), r(0), r(-170)),
            ProjLine::new(r(1), r(0), r(-200)),
            // through (280, 0) and (80, 100)
            ProjLine::new(r(1), r(2), r(-280)),
            ProjLine::new(r(0), r(0), r(1)),
        ];
        ProjArrangement::new(lines).unwrap()
    }

    #[test]
    fn five_line_matrix_pattern() {
        let arr = five_lines();
        let (na, ch) = chambers_of(&arr, 5);
        // Lines keep their left-to-right order on the flag line.
        assert_eq!(na.original_indices(), &[0, 1, 2, 3, 4]);
        let part = partition_chambers(&na, &ch).unwrap();
        assert_eq!(part.ch2.len(), 6);

        // Generic weights: e_i = 2^i mod a large order keeps every
        // separating set distinguishable.
        let l = LocalSystem::new(1 << 6, vec![1, 2, 4, 8, 16]).unwrap();
        let c = build_complex(&na, &ch, &l).unwrap();
        let field = c.d1.field().clone();
        let q = |sep: &[usize]| {
            let e: i64 = sep.iter().map(|&i| 1i64 << (i - 1)).sum();
            &field.root(e) - &field.root(-e)
        };
        let locate = |x: i64, y: i64| {
            let p = [arr.field().from_int(x), arr.field().from_int(y), arr.field().from_int(1)];
            let (cx, cy) = na.chart_point(&p).unwrap();
            let s: Vec<bool> = na.signs_at(&cx, &cy).iter().map(|&v| v > 0).collect();
            let ci = find_chamber(&ch, &s).unwrap();
            part.ch2.iter().position(|&c| c == ci).unwrap()
        };
        let zero = field.zero();
        // Rows U1∨..U4∨, C1, C2, located by points next to their labels.
        let rows = [
            (locate(214, 94), [q(&[1, 2, 3, 4, 5]), zero.clone(), zero.clone(), zero.clone(), -q(&[1])]),
            (locate(155, 94), [q(&[1, 2, 5]), -q(&[1, 5]), zero.clone(), q(&[1, 3, 4, 5]), -q(&[1, 3, 4])]),
            (locate(184, 94), [q(&[1, 2, 3, 5]), zero.clone(), -q(&[1, 5]), q(&[1, 4, 5]), -q(&[1, 4])]),
            (locate(122, 94), [zero.clone(), zero.clone(), zero.clone(), q(&[1, 2, 3, 4, 5]), -q(&[1, 2, 3, 4])]),
            (locate(147, 56), [q(&[1, 2]), -q(&[1]), zero.clone(), zero.clone(), zero.clone()]),
            (locate(187, 56), [zero.clone(), zero.clone(), -q(&[5]), q(&[4, 5]), -q(&[4])]),
        ];
        for (r, expect) in rows {
            for (col, e) in expect.iter().enumerate() {
                assert_eq!(c.d1.get(r, col), e, "row {r} col {col}");
            }
        }
        assert!(c.d1.mul(&c.d0).is_zero());
    }
}
