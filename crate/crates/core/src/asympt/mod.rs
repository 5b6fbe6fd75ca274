//! Numerical evidence for `pa(n) ~ sqrt(A)/(2 pi n) exp(2 sqrt(A n))`.
//!
//! `A = pi^2/12 + 2 log^2(phi)`. The checks here are convergence trends on
//! fixed grids, never claims of closeness to the limit: the asymptotic
//! statements carry no error terms. Everything is compared in the log
//! domain because `e^(A/eps)` and `e^(2 sqrt(A n))` overflow doubles early.

pub mod precise;
pub mod quadrature;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use precise::{bits_for_digits, ln_golden_ratio, pi, Fixed};

const PI: f64 = std::f64::consts::PI;

/// Stop adding to a log-sum once a term is this small relative to it.
pub const TRUNCATION_TOLERANCE: f64 = 1e-15;

/// Default grids.
pub const DEFAULT_N_GRID: [u64; 3] = [500, 1000, 2000];
pub const DEFAULT_EPS_GRID: [f64; 4] = [0.5, 0.2, 0.1, 0.05];
pub const DEFAULT_DOMINANCE_GRID: [u64; 3] = [200, 500, 1000];

pub fn ln_phi() -> f64 {
    ((1.0 + 5f64.sqrt()) / 2.0).ln()
}

/// `A` in double precision.
pub fn constant_a_f64() -> f64 {
    PI * PI / 12.0 + 2.0 * ln_phi().powi(2)
}

/// `A` with `precision` correct decimal places (plus guard bits).
pub fn constant_a(precision: usize) -> Fixed {
    let bits = bits_for_digits(precision);
    let p = pi(bits);
    let l = ln_golden_ratio(bits);
    let sq = l.mul(&l);
    p.mul(&p).div_int(12).add(&sq).add(&sq)
}

/// `2 log^2(phi)` with `precision` decimal places.
pub fn auluck_exponent(precision: usize) -> Fixed {
    let l = ln_golden_ratio(bits_for_digits(precision));
    let sq = l.mul(&l);
    sq.add(&sq)
}

/// Ingham's triple `(lambda, alpha, A)` for `PA(e^-eps) ~ lambda eps^alpha e^(A/eps)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticParams {
    pub lambda: f64,
    pub alpha: f64,
    pub a: f64,
}

impl AsymptoticParams {
    /// `lambda = 1/sqrt(pi)`, `alpha = 1/2`.
    pub fn pa() -> Self {
        AsymptoticParams {
            lambda: 1.0 / PI.sqrt(),
            alpha: 0.5,
            a: constant_a_f64(),
        }
    }

    /// Log of Ingham's estimate
    /// `lambda/(2 sqrt pi) A^(alpha/2+1/4) n^-(alpha/2+3/4) e^(2 sqrt(A n))`.
    pub fn log_coefficient_estimate(&self, n: f64) -> f64 {
        (self.lambda / (2.0 * PI.sqrt())).ln() + (self.alpha / 2.0 + 0.25) * self.a.ln()
            - (self.alpha / 2.0 + 0.75) * n.ln()
            + 2.0 * (self.a * n).sqrt()
    }
}

/// `log(sqrt(A)/(2 pi n)) + 2 sqrt(A n)`.
pub fn ingham_estimate(n: u64) -> f64 {
    let a = constant_a_f64();
    let n = n as f64;
    (a.sqrt() / (2.0 * PI * n)).ln() + 2.0 * (a * n).sqrt()
}

/// Natural log of a big integer from its bit length and leading 64 bits.
pub fn log_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// One line of a convergence table: `log_ratio = lhs - rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiagnosticRow {
    pub parameter: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub log_ratio: f64,
}

impl DiagnosticRow {
    pub fn new(parameter: f64, lhs: f64, rhs: f64) -> Self {
        DiagnosticRow {
            parameter,
            lhs,
            rhs,
            log_ratio: lhs - rhs,
        }
    }

    pub fn relative(&self) -> f64 {
        self.log_ratio / self.rhs
    }

    pub fn is_finite(&self) -> bool {
        self.lhs.is_finite() && self.rhs.is_finite() && self.log_ratio.is_finite()
    }
}

/// `|log_ratio|` strictly decreases along the rows.
pub fn strictly_improving(rows: &[DiagnosticRow]) -> bool {
    rows.windows(2)
        .all(|w| w[1].log_ratio.abs() < w[0].log_ratio.abs())
}

/// `|log_ratio / rhs|` strictly decreases along the rows.
pub fn strictly_improving_relative(rows: &[DiagnosticRow]) -> bool {
    rows.windows(2)
        .all(|w| w[1].relative().abs() < w[0].relative().abs())
}

fn check_increasing(ns: &[u64]) -> Result<()> {
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::GridNotIncreasing);
    }
    Ok(())
}

fn coefficient(coeffs: &[BigUint], n: u64) -> Result<&BigUint> {
    if n == 0 {
        return Err(Error::MissingCoefficient(0));
    }
    coeffs
        .get(n as usize - 1)
        .ok_or(Error::MissingCoefficient(n))
}

/// Rows `(n, log pa(n), log estimate(n))`. `pa` holds `pa(1), pa(2), ...`.
pub fn tauberian_ratio_table(ns: &[u64], pa: &[BigUint]) -> Result<Vec<DiagnosticRow>> {
    check_increasing(ns)?;
    ns.iter()
        .map(|&n| {
            let c = coefficient(pa, n)?;
            Ok(DiagnosticRow::new(
                n as f64,
                log_biguint(c),
                ingham_estimate(n),
            ))
        })
        .collect()
}

/// Rows `(n, log pa_o(n), log pa(n))`; `exp(log_ratio)` is `pa_o(n)/pa(n)`.
pub fn pa_o_dominance_table(
    ns: &[u64],
    pa: &[BigUint],
    pa_o: &[BigUint],
) -> Result<Vec<DiagnosticRow>> {
    check_increasing(ns)?;
    ns.iter()
        .map(|&n| {
            let num = coefficient(pa_o, n)?;
            let den = coefficient(pa, n)?;
            Ok(DiagnosticRow::new(
                n as f64,
                log_biguint(num),
                log_biguint(den),
            ))
        })
        .collect()
}

fn check_eps(eps: f64) -> Result<()> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(Error::Domain(format!(
            "epsilon must be positive, got {eps}"
        )));
    }
    Ok(())
}

/// `sum_{k>=1} term(e^(-k eps))`, stopping once a term no longer moves the
/// sum at the truncation tolerance.
fn log_product<F: Fn(f64) -> f64>(eps: f64, term: F) -> f64 {
    let mut sum = 0.0;
    let mut k = 1u64;
    loop {
        let x = (-(k as f64) * eps).exp();
        let t = term(x);
        sum += t;
        if t.abs() <= TRUNCATION_TOLERANCE * sum.abs() || x == 0.0 {
            return sum;
        }
        k += 1;
    }
}

/// `log prod_{k>=1} (1 - e^(-k eps))`.
pub fn log_euler_product(eps: f64) -> f64 {
    log_product(eps, |x| (-x).ln_1p())
}

/// `log prod_{k>=1} (1 + e^(-k eps) - e^(-2k eps))`.
pub fn log_auluck_product(eps: f64) -> f64 {
    log_product(eps, |x| (x - x * x).ln_1p())
}

/// `log PA(e^-eps)` from the closed form
/// `(3-sqrt5)/2 prod (1+q^k-q^{2k})/(1-q^{2k}) (1 + (3+sqrt5)/2 sum r^n/(1+phi q^n)) - 2`.
pub fn eval_pa_numeric(eps: f64) -> Result<f64> {
    check_eps(eps)?;
    let s5 = 5f64.sqrt();
    let phi = (1.0 + s5) / 2.0;
    let r = (s5 - 1.0) / 2.0;
    let log_prod = log_product(eps, |x| (x - x * x).ln_1p() - (-x * x).ln_1p());
    let mut sum = 0.0;
    let mut r_pow = 1.0;
    let mut n = 1u64;
    loop {
        r_pow *= r;
        let t = r_pow / (1.0 + phi * (-(n as f64) * eps).exp());
        sum += t;
        if t <= TRUNCATION_TOLERANCE * sum {
            break;
        }
        n += 1;
    }
    let log_main = ((3.0 - s5) / 2.0).ln() + log_prod + (1.0 + (3.0 + s5) / 2.0 * sum).ln();
    // log(e^L - 2)
    Ok(log_main + (-2.0 * (-log_main).exp()).ln_1p())
}

/// `log sum_{n>=1} pa(n) e^(-n eps)` straight from the coefficients, summed
/// until the terms (past their peak) drop below the truncation tolerance.
pub fn eval_pa_from_coefficients(eps: f64, pa: &[BigUint]) -> Result<f64> {
    check_eps(eps)?;
    let logs: Vec<f64> = pa
        .iter()
        .enumerate()
        .map(|(i, c)| log_biguint(c) - (i as f64 + 1.0) * eps)
        .collect();
    let peak = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    let mut prev = f64::NEG_INFINITY;
    for (i, &l) in logs.iter().enumerate() {
        let t = (l - peak).exp();
        sum += t;
        if l < prev && t <= TRUNCATION_TOLERANCE * sum {
            return Ok(peak + sum.ln());
        }
        prev = l;
        let _ = i;
    }
    Err(Error::MissingCoefficient(pa.len() as u64 + 1))
}

/// `log PA(e^-eps)` against `log(sqrt(eps/pi)) + A/eps`.
pub fn pa_limit_check(eps: f64) -> Result<DiagnosticRow> {
    let lhs = eval_pa_numeric(eps)?;
    let rhs = 0.5 * (eps / PI).ln() + constant_a_f64() / eps;
    Ok(DiagnosticRow::new(eps, lhs, rhs))
}

/// `log (e^-eps; e^-eps)_inf` against `log sqrt(2 pi/eps) - pi^2/(6 eps)`.
pub fn eta_inversion_check(eps: f64) -> Result<DiagnosticRow> {
    check_eps(eps)?;
    let lhs = log_euler_product(eps);
    let rhs = 0.5 * (2.0 * PI / eps).ln() - PI * PI / (6.0 * eps);
    Ok(DiagnosticRow::new(eps, lhs, rhs))
}

/// `log prod (1 + e^(-k eps) - e^(-2k eps))` against `2 log^2(phi)/eps`.
pub fn auluck_product_check(eps: f64) -> Result<DiagnosticRow> {
    check_eps(eps)?;
    let lhs = log_auluck_product(eps);
    let rhs = 2.0 * ln_phi().powi(2) / eps;
    Ok(DiagnosticRow::new(eps, lhs, rhs))
}

/// `log(1 + x - x^2)/x`, with its Taylor polynomial near the removable
/// singularity at 0.
pub fn auluck_integrand(x: f64) -> f64 {
    if x < 1e-4 {
        1.0 - 1.5 * x + (4.0 / 3.0) * x * x - 1.75 * x * x * x
    } else {
        (x - x * x).ln_1p() / x
    }
}

pub const QUADRATURE_MAX_DEPTH: u32 = 40;

/// `int_0^1 log(1 + x - x^2)/x dx`, which equals `2 log^2(phi)`.
pub fn auluck_integral_quadrature(tolerance: f64) -> Result<f64> {
    if tolerance.is_nan() || tolerance < 1e-12 {
        return Err(Error::Domain(format!(
            "quadrature tolerance must be >= 1e-12, got {tolerance}"
        )));
    }
    quadrature::integrate(auluck_integrand, 0.0, 1.0, tolerance, QUADRATURE_MAX_DEPTH)
}
