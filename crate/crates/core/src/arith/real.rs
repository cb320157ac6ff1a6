//! Real number fields `Q(t)` given by a monic minimal polynomial and an
//! isolating interval for the chosen root `t`.
//!
//! Elements are polynomials in `t` reduced modulo the minimal polynomial.
//! Signs are decided by fixed-point interval evaluation; an exact gcd test
//! settles the zero case so refinement always terminates.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
use super::poly::QPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Width of the stored bracket around `t`, in bits.
const STORED_BITS: u32 = 160;
/// Starting precision of sign evaluation, in bits.
const INITIAL_BITS: u32 = 64;

pub struct RealField {
    minpoly: QPoly,
    /// Isolating interval as declared.
    lo: Rational,
    hi: Rational,
    /// Refined bracket, width below `2^-STORED_BITS`.
    bracket: (Rational, Rational),
    /// `Some(m)` when `t = 2cos(2π/m)`.
    cos_order: Option<u64>,
}

impl fmt::Debug for RealField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[t]/({}) t in [{}, {}]", self.minpoly, self.lo, self.hi)
    }
}

impl PartialEq for RealField {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.lo == other.lo && self.hi == other.hi
    }
}

fn bisect(p: &QPoly, lo: &mut Rational, hi: &mut Rational) {
    let two = Rational::from_integer(2.into());
    let s_lo = p.eval(lo).signum();
    let mid = (&*lo + &*hi) / &two;
    let s_mid = p.eval(&mid).signum();
    if s_mid.is_zero() {
        *lo = mid.clone();
        *hi = mid;
    } else if s_mid == s_lo {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

fn refine(p: &QPoly, mut lo: Rational, mut hi: Rational, bits: u32) -> (Rational, Rational) {
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    while &hi - &lo >= eps {
        bisect(p, &mut lo, &mut hi);
    }
    (lo, hi)
}

impl RealField {
    /// The field Q, written as `t` with `t = 0`.
    pub fn rational() -> Arc<Self> {
        Arc::new(RealField {
            minpoly: QPoly::from_i64(&[0, 1]),
            lo: Rational::zero(),
            hi: Rational::zero(),
            bracket: (Rational::zero(), Rational::zero()),
            cos_order: None,
        })
    }

    /// Field generated by the unique root of `minpoly` in `(lo, hi)`.
    ///
    /// The polynomial must be monic and squarefree with a sign change over
    /// the interval and exactly one root inside it. Irreducibility is assumed
    /// but not required for correct signs.
    pub fn new(minpoly: QPoly, lo: Rational, hi: Rational) -> Result<Arc<Self>> {
        let deg = minpoly.degree().filter(|&d| d >= 1).ok_or_else(|| {
            Error::InvalidField("polynomial must have positive degree".into())
        })?;
        if !minpoly.is_monic() {
            return Err(Error::InvalidField("polynomial must be monic".into()));
        }
        if deg == 1 {
            let root = -minpoly.coeff(0);
            if root < lo || root > hi {
                return Err(Error::InvalidField("root lies outside the interval".into()));
            }
            return Ok(Arc::new(RealField {
                minpoly,
                lo,
                hi,
                bracket: (root.clone(), root),
                cos_order: None,
            }));
        }
        if lo >= hi {
            return Err(Error::InvalidField("empty isolating interval".into()));
        }
        if minpoly.gcd(&minpoly.derivative()) != QPoly::one() {
            return Err(Error::InvalidField("polynomial is not squarefree".into()));
        }
        let (plo, phi) = (minpoly.eval(&lo), minpoly.eval(&hi));
        if (&plo * &phi).signum() != -Rational::one() {
            return Err(Error::InvalidField("no sign change over the interval".into()));
        }
        let chain = minpoly.sturm_chain();
        if QPoly::count_roots(&chain, &lo, &hi) != 1 {
            return Err(Error::InvalidField("interval does not isolate a single root".into()));
        }
        let bracket = refine(&minpoly, lo.clone(), hi.clone(), STORED_BITS);
        Ok(Arc::new(RealField { minpoly, lo, hi, bracket, cos_order: None }))
    }

    /// `Q(t)` with `t = 2cos(2π/m)`, the real subfield of `Q(ζ_m)`.
    pub fn cos_field(m: u64) -> Arc<Self> {
        assert!(m >= 1);
        let psi = cos_minpoly(m);
        let (lo, hi) = if psi.degree() == Some(1) {
            let r = -psi.coeff(0);
            (r.clone() - Rational::one(), r + Rational::one())
        } else {
            isolate_largest_root(&psi)
        };
        let mut field = Arc::try_unwrap(RealField::new(psi, lo, hi).expect("cosine field"))
            .unwrap_or_else(|_| unreachable!());
        field.cos_order = Some(m);
        Arc::new(field)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn minpoly(&self) -> &QPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn is_rational(&self) -> bool {
        self.degree() == 1
    }

    pub fn cos_order(&self) -> Option<u64> {
        self.cos_order
    }

    pub fn element(self: &Arc<Self>, poly: &QPoly) -> RealAlgebraic {
        let mut coeffs = poly.rem(&self.minpoly).into_coeffs();
        coeffs.resize(self.degree(), Rational::zero());
        RealAlgebraic { field: self.clone(), coeffs }
    }

    pub fn from_rational(self: &Arc<Self>, c: Rational) -> RealAlgebraic {
        self.element(&QPoly::constant(c))
    }

    pub fn from_int(self: &Arc<Self>, c: i64) -> RealAlgebraic {
        self.from_rational(Rational::from_integer(c.into()))
    }

    pub fn zero(self: &Arc<Self>) -> RealAlgebraic {
        self.from_int(0)
    }

    pub fn one(self: &Arc<Self>) -> RealAlgebraic {
        self.from_int(1)
    }

    pub fn generator(self: &Arc<Self>) -> RealAlgebraic {
        self.element(&QPoly::from_i64(&[0, 1]))
    }

    /// `D_j(t) = ζ^j + ζ^{-j}` as an element, where `t = ζ + ζ^{-1}`.
    pub fn dickson(self: &Arc<Self>, j: i64) -> RealAlgebraic {
        self.element(&dickson_poly(j.unsigned_abs() as usize))
    }

    /// Converts a real element of `Q(ζ_d)`, `d | m`, into `Q(2cos(2π/m))`.
    pub fn embed_cyclotomic(self: &Arc<Self>, c: &Cyclotomic) -> Result<RealAlgebraic> {
        let m = self.cos_order.ok_or_else(|| Error::InvalidField("not a cyclotomic real field".into()))?;
        if m % c.order() != 0 {
            return Err(Error::InvalidField("cyclotomic order does not divide the field order".into()));
        }
        let c = c.lift_to(&CyclotomicField::new(m));
        if !c.is_real() {
            return Err(Error::InvalidField("element is not real".into()));
        }
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut acc = QPoly::constant(c.coeffs()[0].clone());
        for (j, a) in c.coeffs().iter().enumerate().skip(1) {
            if !a.is_zero() {
                acc = acc.add(&dickson_poly(j).scale(&(a * &half)));
            }
        }
        Ok(self.element(&acc))
    }

    fn compatible(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    /// Integer enclosure `[l, h]` with `t ∈ [l/2^bits, h/2^bits]`.
    fn enclosure(&self, bits: u32) -> (BigInt, BigInt) {
        let (lo, hi) = if bits + 2 > STORED_BITS {
            refine(&self.minpoly, self.bracket.0.clone(), self.bracket.1.clone(), bits + 2)
        } else {
            self.bracket.clone()
        };
        (scaled_floor(&lo, bits), scaled_ceil(&hi, bits))
    }
}

/// Minimal polynomial of `2cos(2π/m)`.
pub fn cos_minpoly(m: u64) -> QPoly {
    match m {
        1 => return QPoly::from_i64(&[-2, 1]),
        2 => return QPoly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic_polynomial(m);
    let d = phi.degree().unwrap() / 2;
    let mut acc = QPoly::constant(phi.coeff(d));
    for j in 1..=d {
        acc = acc.add(&dickson_poly(j).scale(&phi.coeff(d + j)));
    }
    acc
}

/// `D_0 = 2, D_1 = t, D_{j+1} = t D_j - D_{j-1}`.
fn dickson_poly(j: usize) -> QPoly {
    let t = QPoly::from_i64(&[0, 1]);
    let (mut a, mut b) = (QPoly::from_i64(&[2]), t.clone());
    if j == 0 {
        return a;
    }
    for _ in 1..j {
        let next = t.mul(&b).sub(&a);
        a = b;
        b = next;
    }
    b
}

/// Isolating interval of the largest real root of a squarefree polynomial
/// without rational roots.
fn isolate_largest_root(p: &QPoly) -> (Rational, Rational) {
    let chain = p.sturm_chain();
    let two = Rational::from_integer(2.into());
    let mut hi = p.root_bound();
    let mut lo = -hi.clone();
    loop {
        if QPoly::count_roots(&chain, &lo, &hi) == 1 && !p.eval(&lo).is_zero() {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        if QPoly::count_roots(&chain, &mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

fn scaled_floor(x: &Rational, bits: u32) -> BigInt {
    (x.numer() << bits).div_floor(x.denom())
}

fn scaled_ceil(x: &Rational, bits: u32) -> BigInt {
    -((-x.numer() << bits).div_floor(x.denom()))
}

/// An element of a [`RealField`].
#[derive(Clone)]
pub struct RealAlgebraic {
    field: Arc<RealField>,
    coeffs: Vec<Rational>,
}

/// Exact sign of `x` as -1, 0 or +1.
pub fn real_sign(x: &RealAlgebraic) -> i8 {
    x.sign()
}

impl RealAlgebraic {
    pub fn field(&self) -> &Arc<RealField> {
        &self.field
    }

    /// Coefficients of the canonical polynomial in `t`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn is_canonical_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.sign() == 0
    }

    pub fn sign(&self) -> i8 {
        self.sign_with_precision(INITIAL_BITS)
    }

    /// Sign, starting interval evaluation at `bits` of precision. The result
    /// does not depend on `bits`.
    pub fn sign_with_precision(&self, bits: u32) -> i8 {
        if let Some(c) = self.as_rational() {
            return rational_sign(c);
        }
        let mut bits = bits.max(8);
        let mut checked_zero = false;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            if !checked_zero {
                if self.vanishes_at_generator() {
                    return 0;
                }
                checked_zero = true;
            }
            bits *= 2;
        }
    }

    /// Whether the value is zero even though the canonical form is not;
    /// only possible when the declared polynomial is reducible.
    fn vanishes_at_generator(&self) -> bool {
        let g = self.poly().gcd(&self.field.minpoly);
        if g.degree().unwrap_or(0) == 0 {
            return false;
        }
        let chain = g.sturm_chain();
        QPoly::count_roots(&chain, &self.field.bracket.0, &self.field.bracket.1) > 0
            || g.eval(&self.field.bracket.0).is_zero()
    }

    /// Integer enclosure `[l, h]` of `value * 2^bits`.
    fn enclose(&self, bits: u32) -> (BigInt, BigInt) {
        let (tl, th) = self.field.enclosure(bits);
        let pow = BigInt::one() << bits;
        let mut acc: Option<(BigInt, BigInt)> = None;
        for c in self.coeffs.iter().rev() {
            let cl = scaled_floor(c, bits);
            let ch = scaled_ceil(c, bits);
            acc = Some(match acc {
                None => (cl, ch),
                Some((al, ah)) => {
                    let prods = [&al * &tl, &al * &th, &ah * &tl, &ah * &th];
                    let mn = prods.iter().min().unwrap();
                    let mx = prods.iter().max().unwrap();
                    (mn.div_floor(&pow) + cl, -((-mx).div_floor(&pow)) + ch)
                }
            });
        }
        acc.unwrap()
    }

    /// Rational enclosure of width about `2^-bits`.
    pub fn approx(&self, bits: u32) -> (Rational, Rational) {
        if let Some(c) = self.as_rational() {
            return (c.clone(), c.clone());
        }
        let (lo, hi) = self.enclose(bits);
        let den = BigInt::one() << bits;
        (Rational::new(lo, den.clone()), Rational::new(hi, den))
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = self.approx(64);
        ((lo + hi) / Rational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    fn unify(&self, other: &RealAlgebraic) -> Arc<RealField> {
        if self.field.compatible(&other.field) {
            self.field.clone()
        } else if self.field.is_rational() {
            other.field.clone()
        } else if other.field.is_rational() {
            self.field.clone()
        } else {
            panic!("{}", Error::MixedFields)
        }
    }

    /// Coefficients in `field`, which is either this element's field or a
    /// field this rational element coerces into.
    fn coeffs_in(&self, field: &Arc<RealField>) -> Vec<Rational> {
        if self.field.compatible(field) {
            self.coeffs.clone()
        } else {
            let mut c = vec![Rational::zero(); field.degree()];
            c[0] = self.coeffs[0].clone();
            c
        }
    }

    /// Re-express in `field`; fails unless the fields agree or this value is rational.
    pub fn coerce(&self, field: &Arc<RealField>) -> Result<RealAlgebraic> {
        if self.field.compatible(field) || self.as_rational().is_some() {
            Ok(RealAlgebraic { field: field.clone(), coeffs: self.coeffs_in(field) })
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn inv(&self) -> Result<RealAlgebraic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.poly().ext_gcd(&self.field.minpoly);
        if g != QPoly::one() {
            return Err(Error::InvalidField("field polynomial is reducible".into()));
        }
        Ok(self.field.element(&s))
    }

    pub fn checked_div(&self, other: &RealAlgebraic) -> Result<RealAlgebraic> {
        Ok(self * &other.inv()?)
    }

    pub fn abs(&self) -> RealAlgebraic {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn scale(&self, c: &Rational) -> RealAlgebraic {
        RealAlgebraic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn half(&self) -> RealAlgebraic {
        self.scale(&Rational::new(BigInt::one(), BigInt::from(2)))
    }
}

fn rational_sign(c: &Rational) -> i8 {
    if c.is_positive() {
        1
    } else if c.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialEq for RealAlgebraic {
    fn eq(&self, other: &Self) -> bool {
        let f = self.unify(other);
        let (a, b) = (self.coeffs_in(&f), other.coeffs_in(&f));
        a == b || (!f.is_rational() && (self - other).sign() == 0)
    }
}

impl Eq for RealAlgebraic {}

impl PartialOrd for RealAlgebraic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealAlgebraic {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Debug for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (~{})", self.to_f64())
    }
}

/// Prints the canonical polynomial in `t`, e.g. `1/2*t-3`.
impl fmt::Display for RealAlgebraic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_poly(f, &self.coeffs, "t")
    }
}

impl Add for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn add(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        let f = self.unify(rhs);
        let (a, b) = (self.coeffs_in(&f), rhs.coeffs_in(&f));
        RealAlgebraic { coeffs: a.iter().zip(&b).map(|(x, y)| x + y).collect(), field: f }
    }
}

impl Sub for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn sub(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        let f = self.unify(rhs);
        let (a, b) = (self.coeffs_in(&f), rhs.coeffs_in(&f));
        RealAlgebraic { coeffs: a.iter().zip(&b).map(|(x, y)| x - y).collect(), field: f }
    }
}

impl Mul for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn mul(self, rhs: &RealAlgebraic) -> RealAlgebraic {
        let f = self.unify(rhs);
        if let Some(c) = rhs.as_rational() {
            return RealAlgebraic { coeffs: self.coeffs_in(&f).iter().map(|x| x * c).collect(), field: f };
        }
        if let Some(c) = self.as_rational() {
            return RealAlgebraic { coeffs: rhs.coeffs_in(&f).iter().map(|x| x * c).collect(), field: f };
        }
        let p = QPoly::new(self.coeffs_in(&f)).mul(&QPoly::new(rhs.coeffs_in(&f)));
        f.element(&p)
    }
}

impl Neg for &RealAlgebraic {
    type Output = RealAlgebraic;
    fn neg(self) -> RealAlgebraic {
        RealAlgebraic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for RealAlgebraic {
    type Output = RealAlgebraic;
    fn neg(self) -> RealAlgebraic {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RealAlgebraic {
            type Output = RealAlgebraic;
            fn $m(self, rhs: RealAlgebraic) -> RealAlgebraic { (&self).$m(&rhs) }
        }
        impl $tr<&RealAlgebraic> for RealAlgebraic {
            type Output = RealAlgebraic;
            fn $m(self, rhs: &RealAlgebraic) -> RealAlgebraic { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use crate::arith::cyclotomic::cyc_root;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn cos_minpolys() {
        // 2cos(2π/5) = (√5 - 1)/2 has minimal polynomial t^2 + t - 1.
        assert_eq!(cos_minpoly(5), QPoly::from_i64(&[-1, 1, 1]));
        // 2cos(π/6) = √3.
        assert_eq!(cos_minpoly(12), QPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(cos_minpoly(6), QPoly::from_i64(&[-1, 1]));
        assert_eq!(cos_minpoly(24).degree(), Some(4));
    }

    #[test]
    fn cos_field_generator_value() {
        for m in [5u64, 7, 12, 24, 36, 40, 48] {
            let f = RealField::cos_field(m);
            let t = f.generator().to_f64();
            let expect = 2.0 * (2.0 * std::f64::consts::PI / m as f64).cos();
            assert!((t - expect).abs() < 1e-12, "m = {m}: {t} vs {expect}");
        }
    }

    #[test]
    fn sign_examples() {
        let f = RealField::cos_field(12);
        assert_eq!(real_sign(&f.zero()), 0);
        // cos(π/6) = (ζ₁₂ + ζ₁₂⁻¹)/2
        let c = &cyc_root(12, 1) + &cyc_root(12, -1);
        let cos = f.embed_cyclotomic(&c).unwrap().half();
        assert_eq!(real_sign(&cos), 1);
        assert!((cos.to_f64() - 0.8660254037844386).abs() < 1e-12);
        // ζ₃ + ζ₃² + 1 = 0
        let z = &(&cyc_root(3, 1) + &cyc_root(3, 2)) + &cyc_root(3, 0);
        let zero = RealField::cos_field(3).embed_cyclotomic(&z).unwrap();
        assert_eq!(real_sign(&zero), 0);
    }

    #[test]
    fn tiny_values_resolved() {
        let f = RealField::new(QPoly::from_i64(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap();
        let s = f.generator();
        // 665857/470832 is a convergent of √2 from above; the gap is ~1.6e-12.
        let diff = &f.from_rational(q(665857, 470832)) - &s;
        assert_eq!(diff.sign(), 1);
        assert_eq!(diff.sign_with_precision(8), 1);
        assert_eq!((&s * &s).as_rational(), Some(&q(2, 1)));
    }

    #[test]
    fn reducible_polynomial_zero_detected() {
        // (t^2 - 2)(t - 3), root √2 isolated in (1, 2).
        let p = QPoly::from_i64(&[-2, 0, 1]).mul(&QPoly::from_i64(&[-3, 1]));
        let f = RealField::new(p, q(1, 1), q(2, 1)).unwrap();
        let t = f.generator();
        let e = &(&t * &t) - &f.from_int(2);
        assert!(!e.is_canonical_zero());
        assert_eq!(e.sign(), 0);
        assert_eq!((&t - &f.from_int(3)).sign(), -1);
    }

    #[test]
    fn field_validation() {
        let p = QPoly::from_i64(&[-2, 0, 1]);
        assert!(RealField::new(p.clone(), q(-2, 1), q(2, 1)).is_err());
        assert!(RealField::new(p.clone(), q(2, 1), q(3, 1)).is_err());
        assert!(RealField::new(p.scale(&q(2, 1)), q(1, 1), q(2, 1)).is_err());
        assert!(RealField::new(QPoly::from_i64(&[1, -2, 1]), q(0, 1), q(2, 1)).is_err());
    }

    #[test]
    fn rational_coerces_into_extension() {
        let f = RealField::cos_field(12);
        let a = RealField::rational().from_int(3);
        let b = &a + &f.generator();
        assert!((b.to_f64() - (3.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!(a < b);
    }

    #[test]
    fn inverse() {
        let f = RealField::cos_field(40);
        let x = &f.generator() + &f.from_int(1);
        assert!((&x * &x.inv().unwrap()) == f.one());
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sign_independent_of_precision(cs in proptest::collection::vec(-20i64..20, 4), bits in 8u32..200) {
            let f = RealField::cos_field(24);
            let x = f.element(&QPoly::from_i64(&cs));
            prop_assert_eq!(x.sign(), x.sign_with_precision(bits));
            let approx: f64 = x.to_f64();
            if approx.abs() > 1e-9 {
                prop_assert_eq!(x.sign() as f64, approx.signum());
            }
        }
    }
}
