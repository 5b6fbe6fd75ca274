//! Just enough arbitrary-precision real arithmetic for the constant `A`:
//! binary fixed point on top of `BigInt`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `mantissa / 2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    mantissa: BigInt,
    bits: u32,
}

impl Fixed {
    pub fn from_int(n: i64, bits: u32) -> Self {
        Fixed {
            mantissa: BigInt::from(n) << bits,
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed {
            mantissa: &self.mantissa + &other.mantissa,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed {
            mantissa: (&self.mantissa * &other.mantissa) >> self.bits,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, d: i64) -> Fixed {
        Fixed {
            mantissa: &self.mantissa / BigInt::from(d),
            bits: self.bits,
        }
    }

    pub fn sqrt(&self) -> Fixed {
        assert!(!self.mantissa.is_negative(), "sqrt of a negative value");
        let scaled: BigInt = &self.mantissa << self.bits;
        Fixed {
            mantissa: scaled.sqrt(),
            bits: self.bits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.mantissa.bits().saturating_sub(64);
        let top = (&self.mantissa >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Rounded to `places` decimal places, e.g. `"1.2856"` for 4 places.
    pub fn to_decimal_string(&self, places: usize) -> String {
        let ten_pow = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.mantissa * ten_pow;
        let half = BigInt::one() << self.bits.saturating_sub(1);
        let neg = scaled.is_negative();
        let q: BigUint = ((scaled.abs() + half) >> self.bits).magnitude().clone();
        let mut digits = q.to_string();
        if digits.len() <= places {
            digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
        }
        let split = digits.len() - places;
        let sign = if neg && !q.is_zero() { "-" } else { "" };
        if places == 0 {
            format!("{sign}{digits}")
        } else {
            format!("{sign}{}.{}", &digits[..split], &digits[split..])
        }
    }
}

/// `atan(1/x)` for an integer `x >= 2`.
fn atan_inv(x: i64, bits: u32) -> Fixed {
    let x2 = BigInt::from(x * x);
    let mut term = (BigInt::one() << bits) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: i64 = 0;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    Fixed {
        mantissa: sum,
        bits,
    }
}

/// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(bits: u32) -> Fixed {
    let a = atan_inv(5, bits);
    let b = atan_inv(239, bits);
    Fixed {
        mantissa: a.mantissa * 16 - b.mantissa * 4,
        bits,
    }
}

/// `ln((1 + sqrt 5)/2) = atanh(1/sqrt 5)`.
pub fn ln_golden_ratio(bits: u32) -> Fixed {
    let x = Fixed::from_int(1, bits).div_int(5).sqrt();
    let x2 = x.mul(&x);
    let mut power = x.clone();
    let mut sum = BigInt::zero();
    let mut k: i64 = 0;
    while !power.mantissa.is_zero() {
        sum += &power.mantissa / BigInt::from(2 * k + 1);
        power = power.mul(&x2);
        k += 1;
    }
    Fixed {
        mantissa: sum,
        bits,
    }
}

/// Working bits for `digits` decimal digits plus guard bits.
pub fn bits_for_digits(digits: usize) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 40
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let p = pi(bits_for_digits(40));
        assert_eq!(
            p.to_decimal_string(40),
            "3.1415926535897932384626433832795028841972"
        );
    }

    #[test]
    fn ln_phi_digits() {
        // mpmath: log((1+sqrt(5))/2)
        let l = ln_golden_ratio(bits_for_digits(35));
        assert_eq!(
            l.to_decimal_string(35),
            "0.48121182505960344749775891342436842"
        );
    }

    #[test]
    fn decimal_rounding() {
        let x = Fixed::from_int(1, 64).div_int(3);
        assert_eq!(x.to_decimal_string(4), "0.3333");
        let y = Fixed::from_int(2, 64).div_int(3);
        assert_eq!(y.to_decimal_string(4), "0.6667");
        assert_eq!(Fixed::from_int(-5, 32).to_decimal_string(2), "-5.00");
        assert_eq!(Fixed::from_int(7, 32).to_decimal_string(0), "7");
        assert!((Fixed::from_int(2, 80).sqrt().to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }
}
