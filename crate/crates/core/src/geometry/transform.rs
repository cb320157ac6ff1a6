use alloc::sync::Arc;

use super::Point;
use crate::arith::{RealAlgebraic, RealField};
use crate::error::{Error, Result};

/// A 3x3 matrix over the coordinate field acting on column points.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3(pub [[RealAlgebraic; 3]; 3]);

impl Mat3 {
    pub fn identity(field: &Arc<RealField>) -> Self {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| field.from_int((i == j) as i64))))
    }

    pub fn det(&self) -> RealAlgebraic {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1]);
        &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2))) + &(&m[0][2] * &minor(1, 2, 0, 1))
    }

    pub fn inverse(&self) -> Result<Mat3> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv_det = det.inv()?;
        let m = &self.0;
        let cof = |r: usize, c: usize| {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (c1, c2) = ((c + 1) % 3, (c + 2) % 3);
            &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
        };
        // inverse = adj / det with adj[i][j] = cof(j, i)
        Ok(Mat3(core::array::from_fn(|i| core::array::from_fn(|j| &cof(j, i) * &inv_det))))
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let mut acc = &self.0[i][0] * &other.0[0][j];
                for k in 1..3 {
                    acc = &acc + &(&self.0[i][k] * &other.0[k][j]);
                }
                acc
            })
        }))
    }

    /// `M p` for a column point.
    pub fn apply_point(&self, p: &Point) -> Point {
        core::array::from_fn(|i| dot(&self.0[i], p))
    }

    /// `ℓ M` for a row line, so that `(ℓ M)(M⁻¹ p) = ℓ(p)`.
    pub fn apply_line(&self, l: &[RealAlgebraic; 3]) -> [RealAlgebraic; 3] {
        core::array::from_fn(|j| {
            let col = [self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()];
            dot(l, &col)
        })
    }
}

pub(crate) fn dot(a: &[RealAlgebraic; 3], b: &[RealAlgebraic; 3]) -> RealAlgebraic {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub(crate) fn cross(a: &[RealAlgebraic; 3], b: &[RealAlgebraic; 3]) -> [RealAlgebraic; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let f = RealField::cos_field(12);
        let t = f.generator();
        let m = Mat3([
            [f.from_int(2), t.clone(), f.from_int(0)],
            [f.from_int(1), f.from_int(1), t.clone()],
            [f.from_int(0), f.from_int(3), f.from_int(1)],
        ]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat3::identity(&f));
        let p = [f.from_int(1), t.clone(), f.from_int(-2)];
        let l = [t.clone(), f.from_int(5), f.from_int(1)];
        let inv = m.inverse().unwrap();
        assert_eq!(dot(&m.apply_line(&l), &inv.apply_point(&p)), dot(&l, &p));
    }
}
