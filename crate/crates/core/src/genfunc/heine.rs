//! Heine's second transformation with `z = q`, checked as an identity of
//! truncated series:
//!
//! ```text
//! sum_n (a,b;q)_n/(q,c;q)_n q^n
//!   = (c/b, bq;q)_inf/(c, q;q)_inf * sum_n (abq/c, b;q)_n/(q, bq;q)_n (c/b)^n
//! ```
//!
//! The analytic side conditions `|z| < 1`, `|c| < |b|` play no role for the
//! formal identity and are not enforced.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactarith::{
    geometric_tail, pochhammer, pochhammer_shifted, Coefficient, PochhammerLength, Quad5, Series,
};

#[derive(Clone, Debug, PartialEq)]
pub struct HeineSides {
    pub lhs: Series<Quad5>,
    pub rhs: Series<Quad5>,
}

fn validate(b: &Quad5, c: &Quad5) -> Result<Quad5> {
    if b.is_zero() {
        return Err(Error::Domain("Heine check needs b != 0".into()));
    }
    if c.is_zero() {
        return Err(Error::Domain("Heine check needs c != 0".into()));
    }
    if c.is_one() {
        return Err(Error::Domain("Heine check needs c != 1".into()));
    }
    let ratio = c.checked_div(b)?;
    if ratio.is_one() {
        return Err(Error::Domain("Heine check needs c/b != 1".into()));
    }
    Ok(ratio)
}

/// Both sides of the transformation modulo `q^(order+1)`.
pub fn heine_sides(a: &Quad5, b: &Quad5, c: &Quad5, order: usize) -> Result<HeineSides> {
    let ratio = validate(b, c)?;
    let one = Quad5::one();

    // Term n carries q^n, so terms beyond `order` vanish.
    let mut lhs = Series::one(order);
    let mut term = Series::one(order);
    for n in 1..=order {
        term.mul_binomial(a, n - 1);
        term.mul_binomial(b, n - 1);
        term.div_binomial(&one, n)?;
        term.div_binomial(c, n - 1)?;
        term = term.shift(1);
        lhs.add_assign(&term);
    }

    let mut prefactor = pochhammer(&ratio, PochhammerLength::Infinite, order)
        .mul(&pochhammer_shifted(b, 1, PochhammerLength::Infinite, order));
    for k in 0..=order {
        prefactor.div_binomial(c, k)?;
        if k >= 1 {
            prefactor.div_binomial(&one, k)?;
        }
    }

    // Summands have valuation 0. From n = order + 1 on, the q-dependent part
    // no longer changes, so the rest is that fixed series times a geometric
    // tail in c/b.
    let s = a.mul_ref(b).checked_div(c)?;
    let mut sum = Series::one(order);
    let mut part = Series::one(order);
    let mut ratio_pow = Quad5::one();
    for n in 1..=order + 1 {
        part.mul_binomial(&s, n);
        part.mul_binomial(b, n - 1);
        part.div_binomial(&one, n)?;
        part.div_binomial(b, n)?;
        if n <= order {
            ratio_pow = &ratio_pow * &ratio;
            sum.add_assign(&part.scale(&ratio_pow));
        }
    }
    let tail = geometric_tail(&ratio, order as u32 + 1)?;
    sum.add_assign(&part.scale(&tail));

    Ok(HeineSides {
        lhs,
        rhs: prefactor.mul(&sum),
    })
}

/// `true` iff both sides agree coefficientwise up to `q^order`.
pub fn heine_check(a: &Quad5, b: &Quad5, c: &Quad5, order: usize) -> Result<bool> {
    let sides = heine_sides(a, b, c, order)?;
    Ok(sides.lhs == sides.rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_phi() -> Quad5 {
        -Quad5::phi()
    }

    #[test]
    fn specialisation_used_for_the_closed_form() {
        let r = Quad5::phi_inverse();
        assert!(heine_check(&r, &minus_phi(), &Quad5::from_int(-1), 50).unwrap());
    }

    #[test]
    fn a_zero() {
        assert!(heine_check(&Quad5::zero(), &minus_phi(), &Quad5::from_int(-1), 30).unwrap());
    }

    #[test]
    fn order_zero() {
        let a = Quad5::from_ratio(2, 1, 3);
        let b = Quad5::from_ratio(-1, 1, 5);
        let c = Quad5::from_int(7);
        let sides = heine_sides(&a, &b, &c, 0).unwrap();
        assert_eq!(sides.lhs, Series::one(0));
        assert_eq!(sides.rhs, Series::one(0));
    }

    #[test]
    fn generic_rational_and_irrational_parameters() {
        let cases = [
            (
                Quad5::from_ratio(1, 0, 3),
                Quad5::from_ratio(2, 0, 1),
                Quad5::from_ratio(-1, 0, 2),
            ),
            (
                Quad5::from_ratio(1, 1, 2),
                Quad5::from_ratio(3, -1, 4),
                Quad5::from_ratio(5, 0, 1),
            ),
            (
                Quad5::from_ratio(-7, 0, 1),
                Quad5::from_ratio(0, 1, 1),
                Quad5::from_ratio(1, 1, 7),
            ),
        ];
        for (a, b, c) in &cases {
            assert!(heine_check(a, b, c, 12).unwrap(), "a={a} b={b} c={c}");
        }
    }

    #[test]
    fn perturbed_side_is_detected() {
        let r = Quad5::phi_inverse();
        let mut sides = heine_sides(&r, &minus_phi(), &Quad5::from_int(-1), 10).unwrap();
        assert_eq!(sides.lhs, sides.rhs);
        sides.rhs.coeffs_mut()[7].add_assign_ref(&Quad5::from_ratio(0, 1, 1000));
        assert_ne!(sides.lhs, sides.rhs);
    }

    #[test]
    fn domain_errors() {
        let a = Quad5::one();
        assert!(heine_check(&a, &Quad5::zero(), &Quad5::from_int(2), 5).is_err());
        assert!(heine_check(&a, &Quad5::from_int(2), &Quad5::one(), 5).is_err());
        assert!(matches!(
            heine_check(&a, &Quad5::from_int(2), &Quad5::zero(), 5),
            Err(Error::Domain(_))
        ));
        assert!(heine_check(&a, &Quad5::from_int(2), &Quad5::from_int(2), 5).is_err());
    }
}
