use alloc::sync::Arc;
use alloc::vec::Vec;

use super::transform::{cross, dot, Mat3};
use super::Point;
use crate::arith::{Rational, RealAlgebraic, RealField};
use crate::error::{Error, Result};

/// The oriented line `a x + b y + c z = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjLine {
    pub a: RealAlgebraic,
    pub b: RealAlgebraic,
    pub c: RealAlgebraic,
}

impl ProjLine {
    pub fn new(a: RealAlgebraic, b: RealAlgebraic, c: RealAlgebraic) -> Self {
        ProjLine { a, b, c }
    }

    pub fn from_rationals(field: &Arc<RealField>, a: Rational, b: Rational, c: Rational) -> Self {
        ProjLine { a: field.from_rational(a), b: field.from_rational(b), c: field.from_rational(c) }
    }

    pub fn from_ints(field: &Arc<RealField>, a: i64, b: i64, c: i64) -> Self {
        ProjLine { a: field.from_int(a), b: field.from_int(b), c: field.from_int(c) }
    }

    pub fn triple(&self) -> [RealAlgebraic; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn from_triple([a, b, c]: [RealAlgebraic; 3]) -> Self {
        ProjLine { a, b, c }
    }

    /// `α(p)` for a homogeneous point.
    pub fn eval(&self, p: &Point) -> RealAlgebraic {
        dot(&self.triple(), p)
    }

    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_proportional(&self, other: &ProjLine) -> bool {
        cross(&self.triple(), &other.triple()).iter().all(RealAlgebraic::is_zero)
    }

    /// Intersection point of two distinct lines.
    pub fn meet(&self, other: &ProjLine) -> Point {
        cross(&self.triple(), &other.triple())
    }

    pub fn negated(&self) -> ProjLine {
        ProjLine { a: -&self.a, b: -&self.b, c: -&self.c }
    }

    fn coerce(&self, field: &Arc<RealField>) -> Result<ProjLine> {
        Ok(ProjLine { a: self.a.coerce(field)?, b: self.b.coerce(field)?, c: self.c.coerce(field)? })
    }
}

/// A projective arrangement `cA`: at least three pairwise distinct lines,
/// not all through one point.
#[derive(Debug, Clone)]
pub struct ProjArrangement {
    field: Arc<RealField>,
    lines: Vec<ProjLine>,
}

impl ProjArrangement {
    /// Validates and brings all coefficients into one coordinate field.
    pub fn new(lines: Vec<ProjLine>) -> Result<Self> {
        let field = lines
            .iter()
            .flat_map(|l| [l.a.field(), l.b.field(), l.c.field()])
            .find(|f| !f.is_rational())
            .cloned()
            .unwrap_or_else(RealField::rational);
        ProjArrangement::with_field(field, lines)
    }

    pub fn with_field(field: Arc<RealField>, lines: Vec<ProjLine>) -> Result<Self> {
        let lines = lines.iter().map(|l| l.coerce(&field)).collect::<Result<Vec<_>>>()?;
        for (i, l) in lines.iter().enumerate() {
            if l.is_degenerate() {
                return Err(Error::DegenerateLine { index: i });
            }
            for (j, m) in lines[..i].iter().enumerate() {
                if l.is_proportional(m) {
                    return Err(Error::DuplicateLine { first: j, second: i });
                }
            }
        }
        if lines.len() < 3 {
            return Err(Error::TooFewLines { count: lines.len() });
        }
        let p = lines[0].meet(&lines[1]);
        if lines[2..].iter().all(|l| l.eval(&p).is_zero()) {
            return Err(Error::AllConcurrent);
        }
        Ok(ProjArrangement { field, lines })
    }

    pub fn field(&self) -> &Arc<RealField> {
        &self.field
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &ProjLine {
        &self.lines[i]
    }

    /// Number of lines of `cA`, i.e. `n + 1`.
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.lines.len() {
            Ok(())
        } else {
            Err(Error::LineIndex { index, count: self.lines.len() })
        }
    }

    /// Image under the point map `p ↦ T p`; lines become `ℓ T⁻¹`.
    pub fn transformed(&self, t: &Mat3) -> Result<ProjArrangement> {
        let inv = t.inverse()?;
        let lines = self.lines.iter().map(|l| ProjLine::from_triple(inv.apply_line(&l.triple()))).collect();
        ProjArrangement::with_field(self.field.clone(), lines)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat_lines(rows: &[[i64; 3]]) -> Vec<ProjLine> {
        let f = RealField::rational();
        rows.iter().map(|r| ProjLine::from_ints(&f, r[0], r[1], r[2])).collect()
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            ProjArrangement::new(rat_lines(&[[1, 0, 0], [2, 0, 0], [0, 1, 0]])).unwrap_err(),
            Error::DuplicateLine { first: 0, second: 1 }
        );
        assert_eq!(
            ProjArrangement::new(rat_lines(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]])).unwrap_err(),
            Error::DegenerateLine { index: 0 }
        );
        assert_eq!(
            ProjArrangement::new(rat_lines(&[[1, 0, 0], [0, 1, 0]])).unwrap_err(),
            Error::TooFewLines { count: 2 }
        );
        // Pencil through the point at infinity of the vertical direction.
        assert_eq!(
            ProjArrangement::new(rat_lines(&[[1, 0, 0], [1, 0, -1], [1, 0, -2], [1, 0, -3], [0, 0, 1]]))
                .unwrap_err(),
            Error::AllConcurrent
        );
        assert!(ProjArrangement::new(rat_lines(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])).is_ok());
    }

    #[test]
    fn mixed_fields_unify() {
        let q = RealField::rational();
        let k = RealField::cos_field(12);
        let lines = vec![
            ProjLine::from_ints(&q, 1, 0, 0),
            ProjLine::new(k.generator(), k.from_int(1), k.from_int(0)),
            ProjLine::from_ints(&q, 0, 0, 1),
        ];
        let arr = ProjArrangement::new(lines).unwrap();
        assert_eq!(**arr.field(), *k);
    }
}
