//! Dense matrices over `Q(ζ_M)` with exact Gauss-Jordan elimination.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::cyclotomic::{Cyclotomic, CyclotomicField};

#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    field: Arc<CyclotomicField>,
    entries: Vec<Cyclotomic>,
}

/// Kernel of a matrix: basis vectors in reduced echelon form, each with
/// leading coordinate 1 and pivots ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub dimension: usize,
    pub basis: Vec<Vec<Cyclotomic>>,
}

pub fn kernel(m: &CycMatrix) -> Kernel {
    m.kernel()
}

impl CycMatrix {
    pub fn zeros(field: &Arc<CyclotomicField>, rows: usize, cols: usize) -> Self {
        CycMatrix { rows, cols, field: field.clone(), entries: alloc::vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Arc<CyclotomicField>, n: usize) -> Self {
        let mut m = CycMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows; all entries are lifted into `field`.
    pub fn from_rows(field: &Arc<CyclotomicField>, rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|e| e.lift_to(field)));
        }
        CycMatrix { rows: r, cols: c, field: field.clone(), entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.entries[r * self.cols + c] = v.lift_to(&self.field);
    }

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = CycMatrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = CycMatrix::zeros(&self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyclotomic::is_zero)
    }

    /// Reduced row echelon form, visiting columns in `order`. Returns the
    /// reduced rows and the pivot columns in the order found.
    fn rref_in_order(&self, order: &[usize]) -> (Vec<Vec<Cyclotomic>>, Vec<usize>) {
        let mut rows: Vec<Vec<Cyclotomic>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in order {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
            rows.swap(next, p);
            let inv = rows[next][c].inv().expect("nonzero pivot is invertible");
            for e in rows[next].iter_mut() {
                if !e.is_zero() {
                    *e = &*e * &inv;
                }
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (e, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *e = &*e - &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            next += 1;
        }
        rows.truncate(next);
        (rows, pivots)
    }

    /// Reduced row echelon form of the nonzero rows and the pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Cyclotomic>>, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_in_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank computed with columns eliminated in reverse order; an
    /// independent route for cross-checking [`CycMatrix::rank`].
    pub fn rank_reversed(&self) -> usize {
        let order: Vec<usize> = (0..self.cols).rev().collect();
        self.rref_in_order(&order).1.len()
    }

    pub fn kernel(&self) -> Kernel {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let raw: Vec<Vec<Cyclotomic>> = free
            .iter()
            .map(|&f| {
                let mut v = alloc::vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (row, &p) in rref.iter().zip(&pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect();
        let basis = if raw.is_empty() {
            raw
        } else {
            CycMatrix::from_rows(&self.field, raw).rref().0
        };
        Kernel { dimension: basis.len(), basis }
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn a3_relation_kernel() {
        let f = CyclotomicField::new(6);
        let s = &f.root(1) - &f.root(-1);
        let m = CycMatrix::from_rows(&f, vec![vec![s.clone(), s.clone()], vec![s.clone(), s]]);
        let k = m.kernel();
        assert_eq!(k.dimension, 1);
        assert_eq!(k.basis, vec![vec![f.one(), f.from_int(-1)]]);
    }

    #[test]
    fn trivial_kernels() {
        let f = CyclotomicField::new(6);
        assert_eq!(CycMatrix::identity(&f, 3).kernel().dimension, 0);
        let z = CycMatrix::zeros(&f, 4, 2).kernel();
        assert_eq!(z.dimension, 2);
        assert_eq!(z.basis, vec![vec![f.one(), f.zero()], vec![f.zero(), f.one()]]);
    }

    #[test]
    fn basis_is_echelon_normalized() {
        let f = CyclotomicField::new(5);
        let z = f.root(1);
        // Row (z, 1, 0, z): the raw free-column basis has leading entries
        // other than 1 in positions before the free column.
        let m = CycMatrix::from_rows(&f, vec![vec![f.zero(), z.clone(), f.one(), z.clone()]]);
        let k = m.kernel();
        assert_eq!(k.dimension, 3);
        for v in &k.basis {
            assert!(m.mul_vec(v).iter().all(Cyclotomic::is_zero));
            let lead = v.iter().find(|e| !e.is_zero()).unwrap();
            assert!(lead.is_one());
        }
    }

    fn arb_matrix() -> impl Strategy<Value = CycMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-2i64..=2, 0i64..6), r * c).prop_map(move |es| {
                let f = CyclotomicField::new(6);
                let rows = es
                    .chunks(c)
                    .map(|ch| ch.iter().map(|&(a, j)| f.root(j).scale(&crate::arith::Rational::from_integer(a.into()))).collect())
                    .collect();
                CycMatrix::from_rows(&f, rows)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel();
            let rank = m.rank();
            prop_assert_eq!(k.dimension + rank, m.cols());
            prop_assert_eq!(rank, m.rank_reversed());
            prop_assert_eq!(rank, m.transpose().rank());
            for v in &k.basis {
                prop_assert!(m.mul_vec(v).iter().all(Cyclotomic::is_zero));
            }
        }
    }
}
