use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::ring::{pow, Coefficient};
use crate::error::{Error, Result};

/// A power series in `q` known exactly modulo `q^(order+1)`.
///
/// The truncation order travels with the value. Binary operations on series
/// of different orders produce a result at the smaller order.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Coefficient> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * q^exponent`, which is zero when `exponent > order`.
    pub fn monomial(c: R, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = c;
        }
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms beyond `order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [R] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.mul_ref(c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for j in k..=order {
            out.coeffs[j] = self.coeffs[j - k].clone();
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.coeffs.len());
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            x.add_assign_ref(y);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        self.coeffs.truncate(other.coeffs.len());
        for (x, y) in self.coeffs.iter_mut().zip(&other.coeffs) {
            x.sub_assign_ref(y);
        }
    }

    /// Adds `other * q^k` in place.
    pub fn add_shifted(&mut self, other: &Self, k: usize) {
        let order = self.order().min(other.order());
        self.coeffs.truncate(order + 1);
        for j in k..=order {
            self.coeffs[j].add_assign_ref(&other.coeffs[j - k]);
        }
    }

    /// Schoolbook Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        out
    }

    /// Multiplies in place by `1 - c q^m`.
    pub fn mul_binomial(&mut self, c: &R, m: usize) {
        if m == 0 {
            let mut factor = R::one();
            factor.sub_assign_ref(c);
            for x in &mut self.coeffs {
                *x = x.mul_ref(&factor);
            }
            return;
        }
        for j in (m..self.coeffs.len()).rev() {
            let t = self.coeffs[j - m].mul_ref(c);
            self.coeffs[j].sub_assign_ref(&t);
        }
    }

    /// Divides in place by `1 - c q^m`.
    ///
    /// For `m >= 1` this is the recurrence `g_j = f_j + c g_(j-m)`; for
    /// `m = 0` it needs `1 - c` to be a unit.
    pub fn div_binomial(&mut self, c: &R, m: usize) -> Result<()> {
        if m == 0 {
            let mut factor = R::one();
            factor.sub_assign_ref(c);
            let inv = factor.try_inverse().ok_or(Error::NotInvertible {
                what: "constant factor 1 - c",
            })?;
            for x in &mut self.coeffs {
                *x = x.mul_ref(&inv);
            }
            return Ok(());
        }
        if c.is_zero() {
            return Ok(());
        }
        for j in m..self.coeffs.len() {
            let t = self.coeffs[j - m].mul_ref(c);
            self.coeffs[j].add_assign_ref(&t);
        }
        Ok(())
    }

    /// Multiplicative inverse to the same order; needs a unit constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].try_inverse().ok_or(Error::NotInvertible {
            what: "constant term",
        })?;
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..=order {
            let mut acc = R::zero();
            for i in 1..=k {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc.add_assign_ref(&self.coeffs[i].mul_ref(&out.coeffs[k - i]));
            }
            out.coeffs[k] = acc.neg_ref().mul_ref(&c0_inv);
        }
        Ok(out)
    }
}

impl<'a, R: Coefficient> Add<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: &'a Series<R>) -> Series<R> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<'a, R: Coefficient> Sub<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: &'a Series<R>) -> Series<R> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<'a, R: Coefficient> Mul<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: &'a Series<R>) -> Series<R> {
        Series::mul(self, rhs)
    }
}

impl<R: Coefficient> Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        self.map(|x| x.neg_ref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeomMode {
    /// `1/(1 - c q^m) = sum_j c^j q^(jm)`
    InverseOneMinus,
    /// The factor `1 - c q^m` itself.
    PochhammerFactor,
}

/// The two building blocks of every product here: `1/(1 - c q^m)` and
/// `1 - c q^m`, with `m >= 1`.
pub fn geom_factor<R: Coefficient>(c: &R, m: usize, order: usize, mode: GeomMode) -> Series<R> {
    assert!(m >= 1, "geom_factor needs m >= 1");
    let mut s = Series::zero(order);
    match mode {
        GeomMode::InverseOneMinus => {
            let mut power = R::one();
            for j in (0..=order).step_by(m) {
                s.coeffs[j] = power.clone();
                power = power.mul_ref(c);
            }
        }
        GeomMode::PochhammerFactor => {
            s.coeffs[0] = R::one();
            if m <= order {
                s.coeffs[m] = c.neg_ref();
            }
        }
    }
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochhammerLength {
    Finite(usize),
    /// All factors that are not `1` modulo `q^(order+1)`.
    Infinite,
}

/// `(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k)`.
pub fn pochhammer<R: Coefficient>(a: &R, len: PochhammerLength, order: usize) -> Series<R> {
    pochhammer_shifted(a, 0, len, order)
}

/// `(a q^shift; q)_n = prod_{k=0}^{n-1} (1 - a q^(k+shift))`.
pub fn pochhammer_shifted<R: Coefficient>(
    a: &R,
    shift: usize,
    len: PochhammerLength,
    order: usize,
) -> Series<R> {
    let mut s = Series::one(order);
    let factors = match len {
        PochhammerLength::Finite(n) => n,
        // factors with k + shift > order are 1 to this order
        PochhammerLength::Infinite => (order + 1).saturating_sub(shift),
    };
    for k in 0..factors {
        let e = k + shift;
        if e > order {
            break;
        }
        s.mul_binomial(a, e);
    }
    s
}

/// `sum_{n >= first} ratio^n = ratio^first / (1 - ratio)`, as a formal
/// closure of the geometric sum.
pub fn geometric_tail<R: Coefficient>(ratio: &R, first_exponent: u32) -> Result<R> {
    let mut denom = R::one();
    denom.sub_assign_ref(ratio);
    if denom.is_zero() {
        return Err(Error::DivergentTail);
    }
    let inv = denom
        .try_inverse()
        .ok_or(Error::NotInvertible { what: "1 - ratio" })?;
    Ok(pow(ratio, first_exponent).mul_ref(&inv))
}
