use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::ring::{Coefficient, Rational};
use crate::error::{Error, Result};

/// An element `a + b*sqrt(5)` of the quadratic field `Q(sqrt 5)`.
///
/// Both components are reduced rationals, so equality is structural and
/// exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quad5 {
    a: Rational,
    b: Rational,
}

impl Quad5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Quad5 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        Quad5 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `(an + bn*sqrt 5) / den`, handy for literals such as `(3 - sqrt 5)/2`.
    pub fn from_ratio(an: i64, bn: i64, den: i64) -> Self {
        let den = BigInt::from(den);
        Quad5 {
            a: Rational::new(BigInt::from(an), den.clone()),
            b: Rational::new(BigInt::from(bn), den),
        }
    }

    pub fn sqrt5() -> Self {
        Self::from_ratio(0, 1, 1)
    }

    /// The golden ratio `(1 + sqrt 5)/2`.
    pub fn phi() -> Self {
        Self::from_ratio(1, 1, 2)
    }

    /// `(sqrt 5 - 1)/2 = 1/phi`.
    pub fn phi_inverse() -> Self {
        Self::from_ratio(-1, 1, 2)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as an integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.b.is_zero() && self.a.is_integer() {
            Some(self.a.to_integer())
        } else {
            None
        }
    }

    /// Galois conjugate `a - b*sqrt 5`.
    pub fn conjugate(&self) -> Self {
        Quad5 {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - 5 b^2`; zero only at zero because sqrt 5 is irrational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(5)) * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Quad5 {
            a: &self.a / &norm,
            b: -(&self.b / &norm),
        })
    }

    pub fn checked_div(&self, other: &Quad5) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * 5f64.sqrt()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quad5Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic in one call; only `Div` can fail.
pub fn quad5_arith(x: &Quad5, y: &Quad5, op: Quad5Op) -> Result<Quad5> {
    match op {
        Quad5Op::Add => Ok(x + y),
        Quad5Op::Sub => Ok(x - y),
        Quad5Op::Mul => Ok(x * y),
        Quad5Op::Div => x.checked_div(y),
    }
}

impl fmt::Debug for Quad5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Quad5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt5", self.b)
        } else {
            write!(f, "{} + {}*sqrt5", self.a, self.b)
        }
    }
}

impl<'a> Add<&'a Quad5> for &'a Quad5 {
    type Output = Quad5;
    fn add(self, rhs: &'a Quad5) -> Quad5 {
        Quad5 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl<'a> Sub<&'a Quad5> for &'a Quad5 {
    type Output = Quad5;
    fn sub(self, rhs: &'a Quad5) -> Quad5 {
        Quad5 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl<'a> Mul<&'a Quad5> for &'a Quad5 {
    type Output = Quad5;
    fn mul(self, rhs: &'a Quad5) -> Quad5 {
        // Skip the cross terms when either side is rational; most series
        // coefficients are.
        if rhs.b.is_zero() {
            return Quad5 {
                a: &self.a * &rhs.a,
                b: &self.b * &rhs.a,
            };
        }
        if self.b.is_zero() {
            return Quad5 {
                a: &self.a * &rhs.a,
                b: &self.a * &rhs.b,
            };
        }
        let five = Rational::from_integer(BigInt::from(5));
        Quad5 {
            a: &self.a * &rhs.a + five * (&self.b * &rhs.b),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &Quad5 {
    type Output = Quad5;
    fn neg(self) -> Quad5 {
        Quad5 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Add for Quad5 {
    type Output = Quad5;
    fn add(self, rhs: Quad5) -> Quad5 {
        &self + &rhs
    }
}

impl Sub for Quad5 {
    type Output = Quad5;
    fn sub(self, rhs: Quad5) -> Quad5 {
        &self - &rhs
    }
}

impl Mul for Quad5 {
    type Output = Quad5;
    fn mul(self, rhs: Quad5) -> Quad5 {
        &self * &rhs
    }
}

impl Neg for Quad5 {
    type Output = Quad5;
    fn neg(self) -> Quad5 {
        -&self
    }
}

impl Zero for Quad5 {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quad5 {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<i64> for Quad5 {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigInt> for Quad5 {
    fn from(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }
}

impl Coefficient for Quad5 {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        self.a += &other.a;
        if !other.b.is_zero() {
            self.b += &other.b;
        }
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        self.a -= &other.a;
        if !other.b.is_zero() {
            self.b -= &other.b;
        }
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(an: i64, bn: i64, den: i64) -> Quad5 {
        Quad5::from_ratio(an, bn, den)
    }

    #[test]
    fn heine_scalar_identity() {
        // (1 - r)(1 + phi) = 1
        let one = Quad5::one();
        let lhs = &(&one - &Quad5::phi_inverse()) * &(&one + &Quad5::phi());
        assert_eq!(lhs, one);
    }

    #[test]
    fn golden_ratio_relations() {
        let phi = Quad5::phi();
        let one = Quad5::one();
        assert_eq!(&phi * &(&phi - &one), one);
        assert_eq!(&phi * &Quad5::phi_inverse(), one);
        assert_eq!(&q(3, -1, 2) * &q(3, 1, 2), one);
        assert_eq!(
            quad5_arith(&phi, &phi, Quad5Op::Sub).unwrap(),
            Quad5::zero()
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            quad5_arith(&Quad5::phi(), &Quad5::zero(), Quad5Op::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            quad5_arith(&Quad5::one(), &Quad5::phi(), Quad5Op::Div).unwrap(),
            Quad5::phi_inverse()
        );
    }

    #[test]
    fn integer_projection() {
        assert_eq!(Quad5::from_int(-7).to_integer(), Some(BigInt::from(-7)));
        assert_eq!(q(1, 0, 2).to_integer(), None);
        assert_eq!(Quad5::sqrt5().to_integer(), None);
        assert!((Quad5::phi().to_f64() - 1.618_033_988_749_895).abs() < 1e-15);
    }

    fn arb_quad5() -> impl Strategy<Value = Quad5> {
        (-50i64..50, -50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(an, ad, _, bn, bd)| {
            let ad = if ad == 0 { 1 } else { ad.abs() };
            Quad5::new(
                Rational::new(BigInt::from(an), BigInt::from(ad)),
                Rational::new(BigInt::from(bn), BigInt::from(bd)),
            )
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_quad5(), y in arb_quad5(), z in arb_quad5()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x - &y) + &y, x.clone());
        }

        #[test]
        fn inverse_roundtrip(x in arb_quad5()) {
            prop_assume!(!x.is_zero());
            let inv = x.inverse().unwrap();
            prop_assert_eq!(&x * &inv, Quad5::one());
            prop_assert!(!x.norm().is_zero());
        }
    }
}
