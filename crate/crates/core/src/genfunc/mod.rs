//! Generating functions for `pa(n)` and `pa_o(n)`.
//!
//! Three pipelines compute the same numbers by unrelated routes:
//!
//! - [`series_g1`]: the sum-product form
//!   `sum_{n>=1} q^n/(1-q^n) prod_{k<n} (1 + q^k/(1-q^{2k}))`, over `Z`.
//! - [`series_g2`]: the closed form obtained from Heine's second
//!   transformation, evaluated over `Q(sqrt 5)` and projected back to `Z`.
//! - [`series_pa_o`]: `prod_{k>=1} (1+q^k-q^{2k})/(1-q^{2k})`, which counts
//!   the PA partitions whose smallest part is odd.
//!
//! [`heine_check`] and [`pa_series_identity_chain`] verify the
//! transformation itself as exact series identities.

mod chain;
mod heine;

pub use chain::{pa_series_identity_chain, ChainLink, ChainReport};
pub use heine::{heine_check, heine_sides, HeineSides};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactarith::{geom_factor, geometric_tail, Coefficient, GeomMode, Quad5, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PipelineId {
    G1SumProduct,
    G2HeineClosedForm,
    G3PaOProduct,
}

impl PipelineId {
    pub fn name(self) -> &'static str {
        match self {
            PipelineId::G1SumProduct => "G1_sum_product",
            PipelineId::G2HeineClosedForm => "G2_heine_closed_form",
            PipelineId::G3PaOProduct => "G3_pa_o_product",
        }
    }
}

/// Integer coefficients `c_1..c_N` of one pipeline.
#[derive(Clone, Debug, PartialEq)]
pub struct PipelineResult {
    pub pipeline: PipelineId,
    pub order: usize,
    /// `c_0`: 0 for the `pa` pipelines, 1 for the `pa_o` product.
    pub constant_term: BigUint,
    /// `coefficients[i]` is `c_(i+1)`.
    pub coefficients: Vec<BigUint>,
    /// Every sqrt 5 component seen during projection was exactly zero.
    /// Trivially true for the integral pipelines.
    pub irrational_parts_zero: bool,
}

impl PipelineResult {
    /// `c_n` for `1 <= n <= order`.
    pub fn coefficient(&self, n: usize) -> Option<&BigUint> {
        if n == 0 {
            return None;
        }
        self.coefficients.get(n - 1)
    }
}

fn to_natural(pipeline: &'static str, index: usize, c: BigInt) -> Result<BigUint> {
    match c.sign() {
        Sign::Minus => Err(Error::Coefficient {
            pipeline,
            index,
            value: c.to_string(),
            reason: "is negative",
        }),
        _ => Ok(c.magnitude().clone()),
    }
}

/// Multiplies in place by `1 + q^k - q^(2k)`.
fn mul_one_plus_minus<R: Coefficient>(s: &mut Series<R>, k: usize) {
    let c = s.coeffs_mut();
    for j in (k..c.len()).rev() {
        let mut t = c[j - k].clone();
        if j >= 2 * k {
            t.sub_assign_ref(&c[j - 2 * k]);
        }
        c[j].add_assign_ref(&t);
    }
}

/// Sum-product pipeline.
///
/// Keeps `P = prod_{k<n} (1 + q^k/(1-q^{2k}))` as a running product and adds
/// `q^n/(1-q^n) * P` for each `n`. Every factor has integer coefficients, so
/// the whole computation stays in `Z` and each step is a linear pass.
pub fn series_g1(order: usize) -> Result<PipelineResult> {
    if order == 0 {
        return Err(Error::Domain("series order must be >= 1".into()));
    }
    let one = BigInt::one();
    let mut acc: Series<BigInt> = Series::zero(order);
    let mut prod: Series<BigInt> = Series::one(order);
    for n in 1..=order {
        let mut term = prod.clone();
        term.div_binomial(&one, n)?;
        acc.add_shifted(&term, n);
        // prod *= 1 + q^n/(1 - q^(2n))
        let mut t = prod.clone();
        t.div_binomial(&one, 2 * n)?;
        prod.add_shifted(&t, n);
    }
    let name = PipelineId::G1SumProduct.name();
    let mut coeffs = acc.into_coeffs().into_iter();
    let c0 = coeffs.next().unwrap();
    if !c0.is_zero() {
        return Err(Error::Coefficient {
            pipeline: name,
            index: 0,
            value: c0.to_string(),
            reason: "should be zero",
        });
    }
    let coefficients = coeffs
        .enumerate()
        .map(|(i, c)| to_natural(name, i + 1, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(PipelineResult {
        pipeline: PipelineId::G1SumProduct,
        order,
        constant_term: BigUint::zero(),
        coefficients,
        irrational_parts_zero: true,
    })
}

/// The closed form
/// `(3-sqrt5)/2 * prod_{k>=1} (1+q^k-q^{2k})/(1-q^{2k})
///   * (1 + (3+sqrt5)/2 * sum_{n>=1} r^n/(1+phi q^n)) - 2`
/// with `r = 1/phi`, exactly over `Q(sqrt 5)` to the given order.
///
/// For `n > order` the summand is `r^n` modulo `q^(order+1)`, so the sum is
/// split at `order` and the scalar tail closed as a geometric series.
pub fn g2_closed_form(order: usize) -> Result<Series<Quad5>> {
    let one = Quad5::one();
    let mut prod: Series<Quad5> = Series::one(order);
    for k in 1..=order {
        mul_one_plus_minus(&mut prod, k);
        prod.div_binomial(&one, 2 * k)?;
    }

    let r = Quad5::phi_inverse();
    let minus_phi = -Quad5::phi();
    let mut sum: Series<Quad5> = Series::zero(order);
    let mut r_pow = Quad5::one();
    for n in 1..=order {
        r_pow = &r_pow * &r;
        // 1/(1 + phi q^n)
        let g = geom_factor(&minus_phi, n, order, GeomMode::InverseOneMinus);
        sum.add_assign(&g.scale(&r_pow));
    }
    let tail = geometric_tail(&r, order as u32 + 1)?;
    sum.coeffs_mut()[0].add_assign_ref(&tail);

    let mut frame = sum.scale(&Quad5::from_ratio(3, 1, 2));
    frame.coeffs_mut()[0].add_assign_ref(&one);
    let mut out = prod.mul(&frame).scale(&Quad5::from_ratio(3, -1, 2));
    out.coeffs_mut()[0].add_assign_ref(&Quad5::from_int(-2));
    Ok(out)
}

/// Closed-form pipeline, projected to integers.
///
/// Fails if any coefficient keeps a sqrt 5 component or a fractional part,
/// or if the constant term is not exactly zero.
pub fn series_g2(order: usize) -> Result<PipelineResult> {
    if order == 0 {
        return Err(Error::Domain("series order must be >= 1".into()));
    }
    let name = PipelineId::G2HeineClosedForm.name();
    let series = g2_closed_form(order)?;
    let mut ints = Vec::with_capacity(order + 1);
    for (i, c) in series.coeffs().iter().enumerate() {
        if !c.is_rational() {
            return Err(Error::Coefficient {
                pipeline: name,
                index: i,
                value: c.to_string(),
                reason: "has a nonzero sqrt5 component",
            });
        }
        let z = c.to_integer().ok_or_else(|| Error::Coefficient {
            pipeline: name,
            index: i,
            value: c.to_string(),
            reason: "is not an integer",
        })?;
        ints.push(z);
    }
    let mut ints = ints.into_iter();
    let c0 = ints.next().unwrap();
    if !c0.is_zero() {
        return Err(Error::Coefficient {
            pipeline: name,
            index: 0,
            value: c0.to_string(),
            reason: "should be zero",
        });
    }
    let coefficients = ints
        .enumerate()
        .map(|(i, c)| to_natural(name, i + 1, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(PipelineResult {
        pipeline: PipelineId::G2HeineClosedForm,
        order,
        constant_term: BigUint::zero(),
        coefficients,
        irrational_parts_zero: true,
    })
}

/// `prod_{k>=1} (1+q^k-q^{2k})/(1-q^{2k}) = 1 + sum pa_o(n) q^n`, over `Z`.
pub fn series_pa_o(order: usize) -> Result<PipelineResult> {
    if order == 0 {
        return Err(Error::Domain("series order must be >= 1".into()));
    }
    let one = BigInt::one();
    let mut prod: Series<BigInt> = Series::one(order);
    for k in 1..=order {
        mul_one_plus_minus(&mut prod, k);
        prod.div_binomial(&one, 2 * k)?;
    }
    let name = PipelineId::G3PaOProduct.name();
    let mut coeffs = prod.into_coeffs().into_iter();
    let c0 = coeffs.next().unwrap();
    if !c0.is_one() {
        return Err(Error::Coefficient {
            pipeline: name,
            index: 0,
            value: c0.to_string(),
            reason: "should be one",
        });
    }
    let coefficients = coeffs
        .enumerate()
        .map(|(i, c)| to_natural(name, i + 1, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(PipelineResult {
        pipeline: PipelineId::G3PaOProduct,
        order,
        constant_term: BigUint::one(),
        coefficients,
        irrational_parts_zero: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count_pa_dp, enumerate_pa, is_pa_smallest_odd};

    fn nat(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    const TABLE: [u32; 15] = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88];

    #[test]
    fn g1_reproduces_table() {
        let g1 = series_g1(15).unwrap();
        assert_eq!(g1.coefficients, nat(&TABLE));
        assert_eq!(g1.constant_term, BigUint::zero());
        assert_eq!(series_g1(6).unwrap().coefficients, nat(&TABLE[..6]));
    }

    #[test]
    fn g2_constant_term_and_table() {
        let raw = g2_closed_form(6).unwrap();
        assert!(raw.coeff(0).is_zero());
        let g2 = series_g2(15).unwrap();
        assert_eq!(g2.coefficient(6), Some(&BigUint::from(8u32)));
        assert_eq!(g2.coefficients, series_g1(15).unwrap().coefficients);
        assert!(g2.irrational_parts_zero);
    }

    #[test]
    fn pa_o_small_values() {
        let g3 = series_pa_o(5).unwrap();
        assert_eq!(g3.coefficients, nat(&[1, 1, 3, 2, 5]));
        assert_eq!(g3.constant_term, BigUint::one());
        assert_eq!(g3.coefficient(4), Some(&BigUint::from(2u32)));
    }

    #[test]
    fn pa_o_small_values_by_enumeration() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                enumerate_pa(n)
                    .unwrap()
                    .iter()
                    .filter(|p| is_pa_smallest_odd(p))
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 2, 5]);
    }

    #[test]
    fn order_zero_rejected() {
        assert!(series_g1(0).is_err());
        assert!(series_g2(0).is_err());
        assert!(series_pa_o(0).is_err());
    }

    #[test]
    fn pipelines_agree_with_dp() {
        let n = 60;
        let dp = count_pa_dp(n);
        assert_eq!(series_g1(n).unwrap().coefficients, dp);
        assert_eq!(series_g2(n).unwrap().coefficients, dp);
    }
}
