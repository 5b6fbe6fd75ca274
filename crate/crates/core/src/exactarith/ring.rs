use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Coefficient ring for [`Series`](super::Series).
///
/// The by-reference methods exist so the series kernels can avoid cloning
/// big numbers in their inner loops.
pub trait Coefficient: Clone + PartialEq + Debug + Zero + One + Send + Sync {
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn neg_ref(&self) -> Self;
    /// Multiplicative inverse, if it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for BigInt {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        // Only the units of Z.
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Coefficient for BigRational {
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `x^e` by square-and-multiply.
pub fn pow<R: Coefficient>(x: &R, mut e: u32) -> R {
    let mut base = x.clone();
    let mut acc = R::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul_ref(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul_ref(&base);
        }
    }
    acc
}
