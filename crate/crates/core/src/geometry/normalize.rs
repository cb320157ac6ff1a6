use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::line::{ProjArrangement, ProjLine};
use super::transform::Mat3;
use super::Point;
use crate::arith::{Rational, RealAlgebraic, RealField};
use crate::error::{Error, Result};

/// The affine line `α(x, y) = a x + b y + c = 0`, oriented by `α`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineLine {
    pub a: RealAlgebraic,
    pub b: RealAlgebraic,
    pub c: RealAlgebraic,
}

impl AffineLine {
    pub fn eval(&self, x: &RealAlgebraic, y: &RealAlgebraic) -> RealAlgebraic {
        &(&(&self.a * x) + &(&self.b * y)) + &self.c
    }

    /// Abscissa of the point at height `y`; the line must not be horizontal.
    pub fn x_at(&self, y: &RealAlgebraic) -> RealAlgebraic {
        let num = -&(&self.c + &(&self.b * y));
        num.checked_div(&self.a).expect("line is not horizontal")
    }

    pub fn is_parallel(&self, other: &AffineLine) -> bool {
        (&(&self.a * &other.b) - &(&other.a * &self.b)).is_zero()
    }

    /// Intersection of two non-parallel lines.
    pub fn meet(&self, other: &AffineLine) -> (RealAlgebraic, RealAlgebraic) {
        let d = &(&self.a * &other.b) - &(&other.a * &self.b);
        let inv = d.inv().expect("lines are not parallel");
        let x = &(&(&other.c * &self.b) - &(&self.c * &other.b)) * &inv;
        let y = &(&(&other.a * &self.c) - &(&self.a * &other.c)) * &inv;
        (x, y)
    }

    fn to_triple(&self) -> [RealAlgebraic; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

/// An affine chart of `cA` with one line sent to infinity, normalized so
/// that no line is horizontal, every vertex has `y > 0`, the lines cross
/// the x-axis at `0 < a_1 < ... < a_n` and the origin is on the negative
/// side of every line.
#[derive(Debug, Clone)]
pub struct NormalizedArrangement {
    field: Arc<RealField>,
    lines: Vec<AffineLine>,
    crossings: Vec<RealAlgebraic>,
    original: Vec<usize>,
    flipped: Vec<bool>,
    infinity: usize,
    to_chart: Mat3,
    from_chart: Mat3,
    shear: Rational,
}

fn shear_candidates() -> impl Iterator<Item = Rational> {
    let zero = core::iter::once(Rational::from_integer(BigInt::from(0)));
    zero.chain((1i64..).flat_map(|k| {
        let k = Rational::from_integer(k.into());
        let r = k.recip();
        let mut v = alloc::vec![k.clone(), -k.clone()];
        if r != k {
            v.push(r.clone());
            v.push(-r);
        }
        v
    }))
}

/// Sends line `infinity_index` of `arr` to infinity and normalizes.
pub fn decone(arr: &ProjArrangement, infinity_index: usize) -> Result<NormalizedArrangement> {
    arr.check_index(infinity_index)?;
    let f = arr.field().clone();
    let (zero, one) = (f.zero(), f.one());
    let inf = arr.line(infinity_index);

    // Columns k1, k2 span the kernel of ℓ∞; e completes a basis. New points
    // map to old ones by p_old = M p_new.
    let m = if !inf.c.is_zero() {
        if inf.a.is_zero() && inf.b.is_zero() {
            Mat3::identity(&f)
        } else {
            Mat3([
                [inf.c.clone(), zero.clone(), zero.clone()],
                [zero.clone(), inf.c.clone(), zero.clone()],
                [-&inf.a, -&inf.b, one.clone()],
            ])
        }
    } else if !inf.a.is_zero() {
        Mat3([
            [-&inf.b, zero.clone(), one.clone()],
            [inf.a.clone(), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
        ])
    } else {
        Mat3([
            [one.clone(), zero.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
            [zero.clone(), one.clone(), zero.clone()],
        ])
    };

    let original: Vec<usize> = (0..arr.len()).filter(|&i| i != infinity_index).collect();
    let affine: Vec<AffineLine> = original
        .iter()
        .map(|&i| {
            let [a, b, c] = m.apply_line(&arr.line(i).triple());
            AffineLine { a, b, c }
        })
        .collect();
    if affine.iter().any(|l| l.a.is_zero() && l.b.is_zero()) {
        return Err(Error::Internal("affine line coincides with the line at infinity".into()));
    }
    let n = affine.len();
    if !(0..n).any(|i| (i + 1..n).any(|j| !affine[i].is_parallel(&affine[j]))) {
        return Err(Error::AllConcurrent);
    }

    // Shear x = X, y = Y + sX so that no line is horizontal.
    let shear = shear_candidates()
        .find(|s| {
            let s = f.from_rational(s.clone());
            affine.iter().all(|l| !(&l.a + &(&l.b * &s)).is_zero())
        })
        .unwrap();
    let s = f.from_rational(shear.clone());
    let sheared: Vec<AffineLine> = affine
        .iter()
        .map(|l| AffineLine { a: &l.a + &(&l.b * &s), b: l.b.clone(), c: l.c.clone() })
        .collect();

    // Translate so every vertex has y >= 1, then so every crossing has x >= 1.
    let mut min_y: Option<RealAlgebraic> = None;
    for i in 0..n {
        for j in i + 1..n {
            if !sheared[i].is_parallel(&sheared[j]) {
                let (_, y) = sheared[i].meet(&sheared[j]);
                if min_y.as_ref().is_none_or(|m| y < *m) {
                    min_y = Some(y);
                }
            }
        }
    }
    let ty = &one - &min_y.unwrap();
    let lifted: Vec<AffineLine> = sheared
        .iter()
        .map(|l| AffineLine { a: l.a.clone(), b: l.b.clone(), c: &l.c - &(&l.b * &ty) })
        .collect();
    let tx = {
        let min_cross = lifted.iter().map(|l| l.x_at(&zero)).min().unwrap();
        &one - &min_cross
    };

    // Point maps: S (shear) then T (translation), after M⁻¹.
    let s_mat = Mat3([
        [one.clone(), zero.clone(), zero.clone()],
        [-&s, one.clone(), zero.clone()],
        [zero.clone(), zero.clone(), one.clone()],
    ]);
    let t_mat = Mat3([
        [one.clone(), zero.clone(), tx],
        [zero.clone(), one.clone(), ty],
        [zero.clone(), zero.clone(), one.clone()],
    ]);
    let to_chart = t_mat.mul(&s_mat).mul(&m.inverse()?);
    let from_chart = to_chart.inverse()?;

    let mut oriented: Vec<(RealAlgebraic, AffineLine, usize, bool)> = original
        .iter()
        .map(|&i| {
            let [a, b, c] = from_chart.apply_line(&arr.line(i).triple());
            let flip = c.sign() > 0;
            let line = if flip { AffineLine { a: -a, b: -b, c: -c } } else { AffineLine { a, b, c } };
            (line.x_at(&zero), line, i, flip)
        })
        .collect();
    oriented.sort_by(|p, q| p.0.cmp(&q.0));

    let out = NormalizedArrangement {
        field: f,
        crossings: oriented.iter().map(|o| o.0.clone()).collect(),
        lines: oriented.iter().map(|o| o.1.clone()).collect(),
        original: oriented.iter().map(|o| o.2).collect(),
        flipped: oriented.iter().map(|o| o.3).collect(),
        infinity: infinity_index,
        to_chart,
        from_chart,
        shear,
    };
    out.check_invariants()?;
    Ok(out)
}

impl NormalizedArrangement {
    fn check_invariants(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::Internal(alloc::format!("normalization: {what}")));
        let zero = self.field.zero();
        for (l, a) in self.lines.iter().zip(&self.crossings) {
            if l.a.is_zero() {
                return bad("horizontal line");
            }
            if l.c.sign() >= 0 {
                return bad("origin not on the negative side");
            }
            if a.sign() <= 0 || !l.eval(a, &zero).is_zero() {
                return bad("bad crossing");
            }
        }
        if self.crossings.windows(2).any(|w| w[0] >= w[1]) {
            return bad("crossings not increasing");
        }
        for (_, y) in self.vertices() {
            if y.sign() <= 0 {
                return bad("vertex below the x-axis");
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<RealField> {
        &self.field
    }

    /// Number of affine lines `n`.
    pub fn n(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[AffineLine] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &AffineLine {
        &self.lines[i]
    }

    pub fn crossings(&self) -> &[RealAlgebraic] {
        &self.crossings
    }

    /// Index in `cA` of normalized line `i`.
    pub fn original_index(&self, i: usize) -> usize {
        self.original[i]
    }

    pub fn original_indices(&self) -> &[usize] {
        &self.original
    }

    /// Whether normalized line `i` is the negation of the transported
    /// original triple.
    pub fn is_flipped(&self, i: usize) -> bool {
        self.flipped[i]
    }

    /// Normalized index of `cA` line `orig`, `None` for the line at infinity.
    pub fn normalized_index(&self, orig: usize) -> Option<usize> {
        self.original.iter().position(|&o| o == orig)
    }

    pub fn infinity_index(&self) -> usize {
        self.infinity
    }

    pub fn shear(&self) -> &Rational {
        &self.shear
    }

    /// Point map from the original projective coordinates to the chart.
    pub fn to_chart(&self) -> &Mat3 {
        &self.to_chart
    }

    pub fn from_chart(&self) -> &Mat3 {
        &self.from_chart
    }

    /// Chart coordinates of an original point, `None` if it is at infinity.
    pub fn chart_point(&self, p: &Point) -> Option<(RealAlgebraic, RealAlgebraic)> {
        let [x, y, z] = self.to_chart.apply_point(p);
        if z.is_zero() {
            return None;
        }
        let inv = z.inv().ok()?;
        Some((&x * &inv, &y * &inv))
    }

    /// Original triple of normalized line `i` recovered via the recorded
    /// transformation: a nonzero multiple of `arr.line(original_index(i))`.
    pub fn pull_back(&self, i: usize) -> ProjLine {
        ProjLine::from_triple(self.to_chart.apply_line(&self.lines[i].to_triple()))
    }

    /// All affine vertices (pairwise intersections, with repetition).
    pub fn vertices(&self) -> Vec<(RealAlgebraic, RealAlgebraic)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.lines[i].is_parallel(&self.lines[j]) {
                    out.push(self.lines[i].meet(&self.lines[j]));
                }
            }
        }
        out
    }

    /// Sign vector at a chart point, entries in {-1, 0, 1}.
    pub fn signs_at(&self, x: &RealAlgebraic, y: &RealAlgebraic) -> Vec<i8> {
        self.lines.iter().map(|l| l.eval(x, y).sign()).collect()
    }
}
