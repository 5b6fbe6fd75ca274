//! Each displayed step of the rewrite from the sum-product generating
//! function to the closed form, checked as an exact series identity.

use num_traits::One;
use serde::Serialize;

use super::heine::heine_sides;
use super::{g2_closed_form, series_g1};
use crate::error::Result;
use crate::exactarith::{
    geometric_tail, pochhammer, pochhammer_shifted, PochhammerLength, Quad5, Series,
};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainLink {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub order: usize,
    pub links: Vec<ChainLink>,
}

impl ChainReport {
    pub fn all_passed(&self) -> bool {
        self.links.iter().all(|l| l.passed)
    }
}

fn first_mismatch(a: &Series<Quad5>, b: &Series<Quad5>) -> Option<usize> {
    a.coeffs().iter().zip(b.coeffs()).position(|(x, y)| x != y)
}

fn link(id: &'static str, a: &Series<Quad5>, b: &Series<Quad5>) -> ChainLink {
    match first_mismatch(a, b) {
        None => ChainLink {
            id,
            passed: true,
            detail: format!("equal through q^{}", a.order().min(b.order())),
        },
        Some(k) => ChainLink {
            id,
            passed: false,
            detail: format!(
                "first difference at q^{k}: {} vs {}",
                a.coeff(k),
                b.coeff(k)
            ),
        },
    }
}

/// `1 + q^k/(1-q^{2k}) = (1 - r q^k)(1 + phi q^k) / ((1-q^k)(1+q^k))` for
/// every `k <= order`.
fn factorization_link(order: usize) -> Result<ChainLink> {
    let one = Quad5::one();
    let r = Quad5::phi_inverse();
    let minus_phi = -Quad5::phi();
    let minus_one = Quad5::from_int(-1);
    for k in 1..=order {
        let mut frac = Series::monomial(one.clone(), k, order);
        frac.div_binomial(&one, 2 * k)?;
        let lhs = &Series::one(order) + &frac;

        let mut rhs = Series::one(order);
        rhs.mul_binomial(&r, k);
        rhs.mul_binomial(&minus_phi, k);
        rhs.div_binomial(&one, k)?;
        rhs.div_binomial(&minus_one, k)?;
        if let Some(j) = first_mismatch(&lhs, &rhs) {
            return Ok(ChainLink {
                id: "factorization",
                passed: false,
                detail: format!("k = {k}: first difference at q^{j}"),
            });
        }
    }
    Ok(ChainLink {
        id: "factorization",
        passed: true,
        detail: format!("all k <= {order}"),
    })
}

/// `2 (r, -phi q; q)_inf / (-1, q; q)_inf * sum_{n>=0} (-phi;q)_n/(-phi q;q)_n r^n - 2`,
/// written out directly rather than through the general transformation.
fn post_heine_line(order: usize) -> Result<Series<Quad5>> {
    let one = Quad5::one();
    let r = Quad5::phi_inverse();
    let minus_phi = -Quad5::phi();
    let minus_one = Quad5::from_int(-1);

    let mut pre = pochhammer(&r, PochhammerLength::Infinite, order).mul(&pochhammer_shifted(
        &minus_phi,
        1,
        PochhammerLength::Infinite,
        order,
    ));
    for k in 0..=order {
        pre.div_binomial(&minus_one, k)?;
        if k >= 1 {
            pre.div_binomial(&one, k)?;
        }
    }

    let mut sum = Series::one(order);
    let mut part = Series::one(order);
    let mut r_pow = Quad5::one();
    for n in 1..=order + 1 {
        part.mul_binomial(&minus_phi, n - 1);
        part.div_binomial(&minus_phi, n)?;
        if n <= order {
            r_pow = &r_pow * &r;
            sum.add_assign(&part.scale(&r_pow));
        }
    }
    sum.add_assign(&part.scale(&geometric_tail(&r, order as u32 + 1)?));

    let mut out = pre.mul(&sum).scale(&Quad5::from_int(2));
    out.coeffs_mut()[0] = &out.coeffs()[0] - &Quad5::from_int(2);
    Ok(out)
}

/// Verifies, to order `order`:
///
/// 1. `factorization`: the per-factor rewrite over `Q(sqrt 5)`;
/// 2. `hypergeometric_form`: the sum-product series equals
///    `2 sum_{n>=1} (r, -phi; q)_n / (q, -1; q)_n q^n`;
/// 3. `heine_transformation`: twice the left side of Heine's transformation,
///    minus 2, equals the transformed line;
/// 4. `closed_form`: the transformed line equals the closed form.
pub fn pa_series_identity_chain(order: usize) -> Result<ChainReport> {
    let mut links = vec![factorization_link(order)?];

    let r = Quad5::phi_inverse();
    let minus_phi = -Quad5::phi();
    let minus_one = Quad5::from_int(-1);
    let g1 = series_g1(order)?;
    let mut g1_series = Series::zero(order);
    for (i, c) in g1.coefficients.iter().enumerate() {
        g1_series.coeffs_mut()[i + 1] = Quad5::from(num_bigint::BigInt::from(c.clone()));
    }

    let sides = heine_sides(&r, &minus_phi, &minus_one, order)?;
    // 2 * (sum_{n>=0} - 1)
    let mut hyper = sides.lhs.scale(&Quad5::from_int(2));
    hyper.coeffs_mut()[0] = &hyper.coeffs()[0] - &Quad5::from_int(2);
    links.push(link("hypergeometric_form", &g1_series, &hyper));

    let line = post_heine_line(order)?;
    let mut transformed = sides.rhs.scale(&Quad5::from_int(2));
    transformed.coeffs_mut()[0] = &transformed.coeffs()[0] - &Quad5::from_int(2);
    let mut heine = link("heine_transformation", &hyper, &line);
    if heine.passed && transformed != line {
        heine.passed = false;
        heine.detail = "general transformation disagrees with the specialised line".into();
    }
    links.push(heine);

    let closed = g2_closed_form(order)?;
    links.push(link("closed_form", &line, &closed));

    Ok(ChainReport { order, links })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_passes() {
        for order in [1, 2, 10, 50] {
            let report = pa_series_identity_chain(order).unwrap();
            assert_eq!(report.links.len(), 4);
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn first_factor_expands_to_trinomial() {
        // (1 - r q)(1 + phi q) = 1 + q - q^2
        let mut s = Series::one(4);
        s.mul_binomial(&Quad5::phi_inverse(), 1);
        s.mul_binomial(&(-Quad5::phi()), 1);
        let want = Series::from_coeffs(vec![Quad5::one(), Quad5::one(), Quad5::from_int(-1)], 4);
        assert_eq!(s, want);
        assert!(factorization_link(4).unwrap().passed);
    }
}
