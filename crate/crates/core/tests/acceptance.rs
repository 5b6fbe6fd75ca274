//! The eight acceptance criteria, one PASS/FAIL line each. Exits nonzero if
//! any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use pa_core::asympt::{
    auluck_exponent, auluck_integral_quadrature, auluck_product_check, constant_a,
    eta_inversion_check, ln_phi, pa_limit_check, pa_o_dominance_table, strictly_improving,
    strictly_improving_relative, tauberian_ratio_table, DiagnosticRow,
};
use pa_core::exactarith::Quad5;
use pa_core::genfunc::{
    g2_closed_form, heine_check, pa_series_identity_chain, series_g1, series_g2, series_pa_o,
};
use pa_core::monotone::{classify_case, verify_injection};
use pa_core::partitions::{
    conjugate, count_pa_dp, enumerate_pa, enumerate_partitions, is_pa_smallest_odd, is_postar,
    Partition,
};
use pa_core::Result;

const FIRST_VALUES: [u32; 15] = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88];
const EPS_GRID: [f64; 4] = [0.5, 0.2, 0.1, 0.05];

type Outcome = Result<(bool, String)>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn nat(v: usize) -> BigUint {
    BigUint::from(v)
}

fn first_values() -> Outcome {
    let n = FIRST_VALUES.len();
    let want: Vec<BigUint> = FIRST_VALUES.iter().map(|&v| BigUint::from(v)).collect();
    let enumerated: Vec<BigUint> = (1..=n as u64)
        .map(|m| enumerate_pa(m).map(|v| nat(v.len())))
        .collect::<Result<_>>()?;
    let routes = [
        ("enumeration", enumerated),
        ("dp", count_pa_dp(n)),
        ("G1", series_g1(n)?.coefficients),
        ("G2", series_g2(n)?.coefficients),
    ];
    let bad: Vec<&str> = routes
        .iter()
        .filter(|(_, v)| *v != want)
        .map(|(name, _)| *name)
        .collect();
    if bad.is_empty() {
        Ok((true, "enumeration, dp, G1 and G2 all give 1..88".into()))
    } else {
        Ok((false, format!("disagreeing routes {bad:?}")))
    }
}

fn oracle_equivalence() -> Outcome {
    let n = 40;
    let dp = count_pa_dp(n);
    let g1 = series_g1(n)?.coefficients;
    let g2 = series_g2(n)?.coefficients;
    for m in 1..=n as u64 {
        let i = m as usize - 1;
        let pa = enumerate_pa(m)?;
        let c = nat(pa.len());
        if c != dp[i] || c != g1[i] || c != g2[i] {
            return Ok((false, format!("counts differ at n = {m}")));
        }
        let images: BTreeSet<Partition> = pa.iter().map(conjugate).collect();
        let postar: BTreeSet<Partition> = enumerate_partitions(m)
            .into_iter()
            .filter(is_postar)
            .collect();
        if images != postar {
            return Ok((
                false,
                format!("conjugate image differs from p_o* set at n = {m}"),
            ));
        }
    }
    Ok((
        true,
        format!("n <= {n}: enumeration = dp = G1 = G2, conjugation onto p_o*"),
    ))
}

fn g2_integrality() -> Outcome {
    let order = 300;
    let raw = g2_closed_form(order)?;
    if !raw.coeff(0).is_zero() {
        return Ok((false, format!("constant term {}", raw.coeff(0))));
    }
    for (i, c) in raw.coeffs().iter().enumerate() {
        if !c.is_rational() || c.to_integer().is_none() {
            return Ok((false, format!("coefficient {i} = {c}")));
        }
    }
    let projected = series_g2(order)?;
    Ok((
        projected.irrational_parts_zero && projected.coefficients.len() == order,
        format!("c_0 = 0, c_1..c_{order} integral with zero sqrt5 part"),
    ))
}

fn heine() -> Outcome {
    let order = 200;
    let ok = heine_check(
        &Quad5::phi_inverse(),
        &(-Quad5::phi()),
        &Quad5::from_int(-1),
        order,
    )?;
    let chain = pa_series_identity_chain(order)?;
    let failed: Vec<&str> = chain
        .links
        .iter()
        .filter(|l| !l.passed)
        .map(|l| l.id)
        .collect();
    Ok((
        ok && chain.all_passed(),
        format!(
            "heine_check {ok}, {} links, failing {failed:?}",
            chain.links.len()
        ),
    ))
}

fn injection() -> Outcome {
    let dp = count_pa_dp(40);
    for n in 13..=40u64 {
        for p in enumerate_pa(n)? {
            classify_case(&p)?;
        }
        let r = verify_injection(n)?;
        if !r.passed() || nat(r.image_size) != dp[n as usize - 1] {
            return Ok((false, format!("n = {n}: {r:?}")));
        }
    }
    let g1 = series_g1(1000)?.coefficients;
    if let Some(i) = g1.windows(2).position(|w| w[1] <= w[0]) {
        return Ok((false, format!("pa({}) >= pa({})", i + 1, i + 2)));
    }
    Ok((
        true,
        "13 <= n <= 40 injective with unique cases; G1(1000) strictly increasing".into(),
    ))
}

fn pa_o() -> Outcome {
    let n = 40;
    let g3 = series_pa_o(n)?;
    let first: Vec<BigUint> = [1u32, 1, 3, 2, 5]
        .iter()
        .map(|&v| BigUint::from(v))
        .collect();
    if g3.coefficients[..5] != first[..] {
        return Ok((false, format!("first five {:?}", &g3.coefficients[..5])));
    }
    for m in 1..=n as u64 {
        let count = enumerate_pa(m)?
            .iter()
            .filter(|p| is_pa_smallest_odd(p))
            .count();
        if nat(count) != g3.coefficients[m as usize - 1] {
            return Ok((false, format!("n = {m}: enumeration {count}")));
        }
    }
    Ok((true, format!("product matches enumeration for n <= {n}")))
}

fn constants() -> Outcome {
    let a30 = constant_a(30).to_decimal_string(28);
    let a60 = constant_a(60).to_decimal_string(28);
    let exact = 2.0 * ln_phi().powi(2);
    let q = auluck_integral_quadrature(1e-10)?;
    let decimal = auluck_exponent(5).to_decimal_string(5);
    Ok((
        a30 == a60 && (q - exact).abs() <= 1e-8 && decimal == "0.46313",
        format!("A = {a30}, integral {q:.12} vs {exact:.12}, 2log^2(phi) = {decimal}"),
    ))
}

fn eps_rows(f: fn(f64) -> Result<DiagnosticRow>) -> Result<Vec<DiagnosticRow>> {
    EPS_GRID.iter().map(|&e| f(e)).collect()
}

fn trends() -> Outcome {
    let g1 = series_g1(2000)?.coefficients;
    let ingham = tauberian_ratio_table(&[500, 1000, 2000], &g1)?;
    let eta = eps_rows(eta_inversion_check)?;
    let auluck = eps_rows(auluck_product_check)?;
    let limit = eps_rows(pa_limit_check)?;
    let pa_o = series_pa_o(1000)?.coefficients;
    let dom = pa_o_dominance_table(&[200, 500, 1000], &g1, &pa_o)?;
    let parts = [
        ("ingham", strictly_improving(&ingham)),
        ("eta", strictly_improving(&eta)),
        ("auluck", strictly_improving_relative(&auluck)),
        (
            "pa",
            strictly_improving_relative(&limit) && strictly_improving(&limit[1..]),
        ),
        (
            "dominance",
            dom.windows(2).all(|w| w[0].log_ratio < w[1].log_ratio),
        ),
    ];
    let failed: Vec<&str> = parts
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(k, _)| *k)
        .collect();
    Ok((failed.is_empty(), format!("failing trends {failed:?}")))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 first fifteen values",
            first_values,
            Some(Duration::from_secs(5)),
        ),
        (
            "2 oracle equivalence",
            oracle_equivalence,
            Some(Duration::from_secs(120)),
        ),
        ("3 G2 integrality", g2_integrality, None),
        (
            "4 Heine verification",
            heine,
            Some(Duration::from_secs(120)),
        ),
        ("5 injection and monotonicity", injection, None),
        ("6 pa_o", pa_o, None),
        ("7 asymptotic constants", constants, None),
        (
            "8 asymptotic trends",
            trends,
            Some(Duration::from_secs(600)),
        ),
    ];
    let mut failures = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok((ok, d)) => (ok, d),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let pass = ok && in_time;
        if !pass {
            failures += 1;
        }
        let budget = limit
            .map(|l| format!(" (limit {} s)", l.as_secs()))
            .unwrap_or_default();
        println!(
            "{} criterion {name}: {detail}; {:.2} s{budget}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        eprintln!("{failures} criteria failed");
        std::process::exit(1);
    }
}
