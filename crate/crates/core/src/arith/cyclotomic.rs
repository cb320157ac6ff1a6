//! Cyclotomic fields `Q(ζ_M) = Q[x]/Φ_M(x)` in the power basis.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::Rational;
use crate::error::{Error, Result};

/// The M-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u64) -> QPoly {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut num = QPoly::x_pow(m as usize).sub(&QPoly::one());
    for d in 1..m {
        if m % d == 0 {
            num = num.div_rem(&cyclotomic_polynomial(d)).0;
        }
    }
    num
}

/// Euler's totient.
pub fn totient(mut m: u64) -> u64 {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

#[derive(PartialEq, Eq)]
pub struct CyclotomicField {
    order: u64,
    phi: QPoly,
    degree: usize,
    /// `powers[m]` is `x^m mod Φ_M` for `0 <= m < M`.
    powers: Vec<Vec<Rational>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.order)
    }
}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        let phi = cyclotomic_polynomial(order);
        let degree = phi.degree().unwrap();
        let powers = (0..order as usize)
            .map(|m| {
                let mut c = QPoly::x_pow(m).rem(&phi).into_coeffs();
                c.resize(degree, Rational::zero());
                c
            })
            .collect();
        Arc::new(CyclotomicField { order, phi, degree, powers })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &QPoly {
        &self.phi
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic { field: self.clone(), coeffs: vec![Rational::zero(); self.degree] }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.root(0)
    }

    pub fn from_rational(self: &Arc<Self>, c: Rational) -> Cyclotomic {
        let mut z = self.zero();
        if self.degree > 0 {
            z.coeffs[0] = c;
        }
        z
    }

    pub fn from_int(self: &Arc<Self>, c: i64) -> Cyclotomic {
        self.from_rational(Rational::from_integer(c.into()))
    }

    /// `ζ_M^j`, any integer `j`.
    pub fn root(self: &Arc<Self>, j: i64) -> Cyclotomic {
        let m = j.rem_euclid(self.order as i64) as usize;
        Cyclotomic { field: self.clone(), coeffs: self.powers[m].clone() }
    }

    /// Reduce a polynomial in `ζ` of any degree.
    pub fn reduce(self: &Arc<Self>, poly: &[Rational]) -> Cyclotomic {
        let mut coeffs = vec![Rational::zero(); self.degree];
        let m = self.order as usize;
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < self.degree {
                coeffs[i] += c;
            } else {
                for (acc, p) in coeffs.iter_mut().zip(&self.powers[i % m]) {
                    if !p.is_zero() {
                        *acc += c * p;
                    }
                }
            }
        }
        Cyclotomic { field: self.clone(), coeffs }
    }
}

/// An element of `Q(ζ_M)`.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

/// `ζ_M^j` in canonical form.
pub fn cyc_root(m: u64, j: i64) -> Cyclotomic {
    CyclotomicField::new(m).root(j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic on operands of possibly different orders.
pub fn cyc_arith(a: &Cyclotomic, b: &Cyclotomic, op: CycOp) -> Result<Cyclotomic> {
    Ok(match op {
        CycOp::Add => a + b,
        CycOp::Sub => a - b,
        CycOp::Mul => a * b,
        CycOp::Div => a.checked_div(b)?,
    })
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    /// Power-basis coefficients, length `φ(M)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(One::is_one) && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn as_poly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Embed into `Q(ζ_L)` for a multiple `L` of the order.
    pub fn lift_to(&self, target: &Arc<CyclotomicField>) -> Cyclotomic {
        assert!(target.order % self.order() == 0, "lift target order must be a multiple");
        if target.order == self.order() {
            return Cyclotomic { field: target.clone(), coeffs: self.coeffs.clone() };
        }
        let step = (target.order / self.order()) as usize;
        target.reduce(self.as_poly().inflate(step).coeffs())
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let l = a.order().lcm(&b.order());
        let f = CyclotomicField::new(l);
        (a.lift_to(&f), b.lift_to(&f))
    }

    fn same_field(&self, other: &Cyclotomic) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.order() == other.order()
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        let m = self.order() as usize;
        let mut poly = vec![Rational::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[(m - i) % m] += c;
        }
        self.field.reduce(&poly)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.as_poly().ext_gcd(&self.field.phi);
        if g != QPoly::one() {
            return Err(Error::Internal("cyclotomic element shares a factor with its modulus".into()));
        }
        Ok(self.field.reduce(s.coeffs()))
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.same_field(other) {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Cyclotomic::common(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints as a polynomial in `z` where `z = ζ_M`, e.g. `2*z-1 (M=6)`.
/// The alternate form `{:#}` omits the order.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::poly::write_poly(f, &self.coeffs, "z")?;
        if !f.alternate() {
            write!(f, " (M={})", self.order())?;
        }
        Ok(())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a + &b;
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a - &b;
        }
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if !self.same_field(rhs) {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        let d = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.field.reduce(&prod)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

#[cfg(test)]
mod tests {
    extern crate std;
    use super::*;
    use proptest::prelude::*;

    /// Numeric value via `ζ_M = exp(2πi/M)`.
    fn approx(c: &Cyclotomic) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let m = c.order() as f64;
        let (mut re, mut im) = (0.0, 0.0);
        for (j, a) in c.coeffs().iter().enumerate() {
            let a = a.to_f64().unwrap();
            let th = 2.0 * std::f64::consts::PI * j as f64 / m;
            re += a * th.cos();
            im += a * th.sin();
        }
        (re, im)
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), QPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), QPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(6), QPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), QPoly::from_i64(&[1, 0, -1, 0, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).degree().unwrap() as u64, totient(m));
        }
    }

    #[test]
    fn roots_trivial_cases() {
        assert!(cyc_root(1, 0).is_one());
        assert_eq!(cyc_root(2, 1).as_rational(), Some(q(-1)));
        assert!(cyc_root(7, 0).is_one());
    }

    #[test]
    fn i_sqrt3_in_power_basis() {
        let f = CyclotomicField::new(6);
        let s = &f.root(1) - &f.root(-1);
        assert_eq!(s.coeffs(), &[q(-1), q(2)]);
        let (re, im) = approx(&s);
        assert!(re.abs() < 1e-10 && (im - 1.7320508075688772).abs() < 1e-10);
    }

    #[test]
    fn identities_and_inverse() {
        let z3 = cyc_root(3, 1);
        assert_eq!(cyc_arith(&z3, &CyclotomicField::new(3).zero(), CycOp::Add).unwrap(), z3);
        let p = cyc_arith(&cyc_root(6, 1), &cyc_root(6, 5), CycOp::Mul).unwrap();
        assert!(p.is_one());

        let f5 = CyclotomicField::new(5);
        let a = &f5.one() + &f5.root(1);
        let inv = cyc_arith(&f5.one(), &a, CycOp::Div).unwrap();
        assert!((&inv * &a).is_one());

        assert_eq!(f5.one().checked_div(&f5.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_orders_lift() {
        // ζ₄ · ζ₆ = ζ₁₂^5
        let p = &cyc_root(4, 1) * &cyc_root(6, 1);
        assert_eq!(p.order(), 12);
        assert_eq!(p, cyc_root(12, 5));
        assert_eq!(cyc_root(3, 1), cyc_root(6, 2));
        assert_ne!(cyc_root(3, 1), cyc_root(6, 1));
    }

    #[test]
    fn conjugation() {
        let f = CyclotomicField::new(12);
        let c = &f.root(1) + &f.root(-1);
        assert!(c.is_real());
        assert!(!f.root(1).is_real());
        assert_eq!(f.root(5).conj(), f.root(7));
    }

    fn arb_elem(m: u64) -> impl Strategy<Value = Cyclotomic> {
        let d = totient(m) as usize;
        proptest::collection::vec((-5i64..=5, 1i64..=4), d).prop_map(move |cs| {
            let f = CyclotomicField::new(m);
            let poly: Vec<Rational> = cs.iter().map(|&(n, dd)| Rational::new(n.into(), dd.into())).collect();
            f.reduce(&poly)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn field_axioms(a in arb_elem(10), b in arb_elem(10), c in arb_elem(10)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn root_powers(m in 1u64..30, j in -40i64..40) {
            let z = cyc_root(m, j);
            prop_assert!(z.pow(m).is_one());
            let w = cyc_root(2 * m, j);
            prop_assert_eq!(&w * &w, z);
        }
    }
}
