use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{json, Value};

use super::report::{Check, VerificationReport};
use crate::asympt::{
    auluck_exponent, auluck_integral_quadrature, auluck_product_check, constant_a,
    eta_inversion_check, eval_pa_from_coefficients, eval_pa_numeric, ln_phi, pa_limit_check,
    pa_o_dominance_table, strictly_improving, strictly_improving_relative, tauberian_ratio_table,
    DiagnosticRow, DEFAULT_DOMINANCE_GRID, DEFAULT_EPS_GRID, DEFAULT_N_GRID,
};
use crate::exactarith::Quad5;
use crate::genfunc::{heine_check, pa_series_identity_chain, series_g1, series_g2, series_pa_o};
use crate::monotone::{verify_injection, INJECTION_MIN_N};
use crate::partitions::{
    conjugate, count_pa_dp, enumerate_pa, enumerate_partitions, is_pa_smallest_odd, is_postar,
    Partition,
};
use crate::Result;

pub const FIRST_VALUES: [u32; 15] = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88];

pub const DEFAULT_ORACLE_MAX_N: u64 = 40;
pub const DEFAULT_GENFUNC_ORDER: usize = 300;
pub const DEFAULT_HEINE_ORDER: usize = 200;
pub const DEFAULT_INJECTION_MAX_N: u64 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Table,
    Oracles,
    Genfunc,
    Heine,
    Injection,
    Asympt,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Table,
        Suite::Oracles,
        Suite::Genfunc,
        Suite::Heine,
        Suite::Injection,
        Suite::Asympt,
    ];

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|s| s.name() == name)
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Oracles => "oracles",
            Suite::Genfunc => "genfunc",
            Suite::Heine => "heine",
            Suite::Injection => "injection",
            Suite::Asympt => "asympt",
            Suite::All => "all",
        }
    }
}

/// `--max-n` and `--order` overrides. Suites ignore the one they do not use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_n: Option<u64>,
    pub order: Option<usize>,
}

type Params = BTreeMap<String, Value>;

fn params<const K: usize>(pairs: [(&str, Value); K]) -> Params {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn nat(v: u32) -> BigUint {
    BigUint::from(v)
}

fn attempt(id: &str, checks: &mut Vec<Check>, f: impl FnOnce() -> Result<Vec<Check>>) {
    match f() {
        Ok(c) => checks.extend(c),
        Err(e) => checks.push(Check::error(id, &e)),
    }
}

fn table_checks() -> Result<Vec<Check>> {
    let n = FIRST_VALUES.len();
    let dp = count_pa_dp(n);
    let g1 = series_g1(n)?.coefficients;
    let g2 = series_g2(n)?.coefficients;
    let mut checks = Vec::with_capacity(n);
    for (i, &want) in FIRST_VALUES.iter().enumerate() {
        let m = i as u64 + 1;
        let enumerated = enumerate_pa(m)?.len() as u32;
        let values = [nat(enumerated), dp[i].clone(), g1[i].clone(), g2[i].clone()];
        let passed = values.iter().all(|v| *v == nat(want));
        checks.push(Check::new(
            format!("pa_{m}"),
            passed,
            format!(
                "expected {want}; enumeration {}, dp {}, G1 {}, G2 {}",
                values[0], values[1], values[2], values[3]
            ),
        ));
    }
    Ok(checks)
}

fn oracle_checks(max_n: u64) -> Result<Vec<Check>> {
    let n = max_n as usize;
    let dp = count_pa_dp(n);
    let g1 = series_g1(n)?.coefficients;
    let g2 = series_g2(n)?.coefficients;
    let pa_o = series_pa_o(n)?.coefficients;
    let mut checks = Vec::with_capacity(3 * n);
    for m in 1..=max_n {
        let i = m as usize - 1;
        let pa = enumerate_pa(m)?;
        let count = nat(pa.len() as u32);
        checks.push(Check::new(
            format!("count_{m}"),
            count == dp[i] && count == g1[i] && count == g2[i],
            format!(
                "enumeration {count}, dp {}, G1 {}, G2 {}",
                dp[i], g1[i], g2[i]
            ),
        ));

        let images: BTreeSet<Partition> = pa.iter().map(conjugate).collect();
        let postar: BTreeSet<Partition> = enumerate_partitions(m)
            .into_iter()
            .filter(is_postar)
            .collect();
        checks.push(Check::new(
            format!("conjugation_{m}"),
            images == postar,
            format!(
                "{} conjugates, {} p_o* partitions",
                images.len(),
                postar.len()
            ),
        ));

        let odd = nat(pa.iter().filter(|p| is_pa_smallest_odd(p)).count() as u32);
        checks.push(Check::new(
            format!("pa_o_{m}"),
            odd == pa_o[i],
            format!("enumeration {odd}, product {}", pa_o[i]),
        ));
    }
    Ok(checks)
}

fn genfunc_checks(order: usize) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let g1 = series_g1(order)?.coefficients;
    match series_g2(order) {
        Ok(g2) => {
            checks.push(Check::new(
                "g2_integral",
                g2.irrational_parts_zero,
                format!("c_0 = 0 and c_1..c_{order} are integers with zero sqrt5 part"),
            ));
            let mismatch = g1.iter().zip(&g2.coefficients).position(|(a, b)| a != b);
            checks.push(Check::new(
                "g1_equals_g2",
                mismatch.is_none(),
                match mismatch {
                    None => format!("agree through n = {order}"),
                    Some(i) => format!("first difference at n = {}", i + 1),
                },
            ));
        }
        Err(e) => checks.push(Check::error("g2_integral", &e)),
    }
    let dp = count_pa_dp(order);
    checks.push(Check::new(
        "g1_equals_dp",
        dp == g1,
        format!("through n = {order}"),
    ));
    let drop = g1.windows(2).position(|w| w[1] <= w[0]);
    checks.push(Check::new(
        "g1_strictly_increasing",
        drop.is_none(),
        match drop {
            None => format!("pa(n) < pa(n+1) for 1 <= n < {order}"),
            Some(i) => format!("pa({}) >= pa({})", i + 1, i + 2),
        },
    ));
    match series_pa_o(order) {
        Ok(pa_o) => {
            let over = pa_o.coefficients.iter().zip(&g1).position(|(a, b)| a > b);
            checks.push(Check::new(
                "pa_o_bounded_by_pa",
                over.is_none(),
                match over {
                    None => format!("pa_o(n) <= pa(n) through n = {order}"),
                    Some(i) => format!("pa_o({}) > pa({})", i + 1, i + 1),
                },
            ));
        }
        Err(e) => checks.push(Check::error("pa_o_product", &e)),
    }
    Ok(checks)
}

fn heine_checks(order: usize) -> Result<Vec<Check>> {
    let ok = heine_check(
        &Quad5::phi_inverse(),
        &(-Quad5::phi()),
        &Quad5::from_int(-1),
        order,
    )?;
    let mut checks = vec![Check::new(
        "heine_r_minus_phi_minus_one",
        ok,
        format!("both sides equal through q^{order}"),
    )];
    let chain = pa_series_identity_chain(order)?;
    checks.extend(
        chain
            .links
            .into_iter()
            .map(|l| Check::new(format!("chain_{}", l.id), l.passed, l.detail)),
    );
    Ok(checks)
}

fn injection_checks(max_n: u64) -> Result<Vec<Check>> {
    let dp = count_pa_dp(max_n as usize);
    let mut checks = Vec::new();
    for n in INJECTION_MIN_N..=max_n {
        let r = verify_injection(n)?;
        let size_ok = nat(r.image_size as u32) == dp[n as usize - 1];
        let cases = r.case_counts.len();
        checks.push(Check::new(
            format!("injection_{n}"),
            r.passed() && size_ok,
            format!(
                "|PA(n)| = {}, |image| = {}, {cases} cases used, unique cases {}, image in PA(n+1) {}, witness absent {}, tail shapes {}",
                r.domain_size,
                r.image_size,
                r.classification_unique,
                r.image_valid,
                r.witness_absent,
                r.tail_shapes_hold
            ),
        ));
    }
    Ok(checks)
}

fn trend_detail(rows: &[DiagnosticRow]) -> String {
    rows.iter()
        .map(|r| format!("{}: {:.3e}", r.parameter, r.log_ratio))
        .collect::<Vec<_>>()
        .join(", ")
}

fn eps_rows(f: fn(f64) -> Result<DiagnosticRow>) -> Result<Vec<DiagnosticRow>> {
    DEFAULT_EPS_GRID.iter().map(|&e| f(e)).collect()
}

/// Largest `n` any asymptotic table needs.
pub fn asympt_order() -> usize {
    let n = DEFAULT_N_GRID[DEFAULT_N_GRID.len() - 1];
    let d = DEFAULT_DOMINANCE_GRID[DEFAULT_DOMINANCE_GRID.len() - 1];
    n.max(d) as usize
}

fn asympt_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let a30 = constant_a(30).to_decimal_string(28);
    let a60 = constant_a(60).to_decimal_string(28);
    checks.push(Check::new(
        "constant_a_stable",
        a30 == a60,
        format!("30 digits {a30}, 60 digits {a60}"),
    ));
    let two_log_sq = auluck_exponent(5).to_decimal_string(5);
    checks.push(Check::new(
        "auluck_exponent_decimal",
        two_log_sq == "0.46313",
        format!("2 log^2(phi) = {two_log_sq}"),
    ));
    let exact = 2.0 * ln_phi().powi(2);
    let q = auluck_integral_quadrature(1e-10)?;
    checks.push(Check::new(
        "auluck_integral",
        (q - exact).abs() <= 1e-8,
        format!("quadrature {q:.12}, closed form {exact:.12}"),
    ));

    let order = asympt_order();
    let pa = series_g1(order)?.coefficients;
    let pa_o = series_pa_o(order)?.coefficients;

    let ingham = tauberian_ratio_table(&DEFAULT_N_GRID, &pa)?;
    checks.push(Check::new(
        "ingham_trend",
        strictly_improving(&ingham),
        trend_detail(&ingham),
    ));

    let eta = eps_rows(eta_inversion_check)?;
    checks.push(Check::new(
        "eta_trend",
        strictly_improving(&eta),
        trend_detail(&eta),
    ));
    let small = eta_inversion_check(0.1)?;
    let rel = small.log_ratio / (0.1 / 24.0);
    checks.push(Check::new(
        "eta_correction",
        (rel - 1.0).abs() < 0.2,
        format!("log_ratio at 0.1 is {rel:.6} times eps/24"),
    ));

    let auluck = eps_rows(auluck_product_check)?;
    checks.push(Check::new(
        "auluck_trend",
        strictly_improving_relative(&auluck),
        trend_detail(&auluck),
    ));

    let limit = eps_rows(pa_limit_check)?;
    checks.push(Check::new(
        "pa_limit_trend",
        strictly_improving_relative(&limit) && strictly_improving(&limit[1..]),
        trend_detail(&limit),
    ));

    let mut worst: f64 = 0.0;
    for eps in [0.3, 0.5] {
        let closed = eval_pa_numeric(eps)?;
        let summed = eval_pa_from_coefficients(eps, &pa)?;
        worst = worst.max(((closed - summed) / summed).abs());
    }
    checks.push(Check::new(
        "pa_two_routes",
        worst < 1e-10,
        format!("largest relative difference of log PA at eps 0.3, 0.5: {worst:.2e}"),
    ));

    let dom = pa_o_dominance_table(&DEFAULT_DOMINANCE_GRID, &pa, &pa_o)?;
    let ratios: Vec<f64> = dom.iter().map(|r| r.log_ratio.exp()).collect();
    let increasing = ratios.windows(2).all(|w| w[0] < w[1]) && ratios.iter().all(|&r| r < 1.0);
    checks.push(Check::new(
        "pa_o_dominance",
        increasing,
        dom.iter()
            .zip(&ratios)
            .map(|(r, q)| format!("{}: {q:.6}", r.parameter))
            .collect::<Vec<_>>()
            .join(", "),
    ));
    Ok(checks)
}

fn single(suite: Suite, opts: SuiteOptions) -> VerificationReport {
    let start = Instant::now();
    let mut checks = Vec::new();
    let name = suite.name();
    let parameters = match suite {
        Suite::Table => {
            attempt(name, &mut checks, table_checks);
            params([("n_max", json!(FIRST_VALUES.len()))])
        }
        Suite::Oracles => {
            let n = opts.max_n.unwrap_or(DEFAULT_ORACLE_MAX_N);
            attempt(name, &mut checks, || oracle_checks(n));
            params([("n_max", json!(n))])
        }
        Suite::Genfunc => {
            let order = opts.order.unwrap_or(DEFAULT_GENFUNC_ORDER);
            attempt(name, &mut checks, || genfunc_checks(order));
            params([("order", json!(order))])
        }
        Suite::Heine => {
            let order = opts.order.unwrap_or(DEFAULT_HEINE_ORDER);
            attempt(name, &mut checks, || heine_checks(order));
            params([("order", json!(order))])
        }
        Suite::Injection => {
            let n = opts.max_n.unwrap_or(DEFAULT_INJECTION_MAX_N);
            attempt(name, &mut checks, || injection_checks(n));
            params([("n_min", json!(INJECTION_MIN_N)), ("n_max", json!(n))])
        }
        Suite::Asympt => {
            attempt(name, &mut checks, asympt_checks);
            params([
                ("n_grid", json!(DEFAULT_N_GRID)),
                ("eps_grid", json!(DEFAULT_EPS_GRID)),
                ("dominance_grid", json!(DEFAULT_DOMINANCE_GRID)),
                ("series_order", json!(asympt_order())),
            ])
        }
        Suite::All => unreachable!("expanded by run_suite"),
    };
    let mut report = VerificationReport::new(name, checks, parameters);
    report.timing_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs `suite`. `All` runs every suite on its own thread and merges the
/// results in the fixed order of [`Suite::EACH`], prefixing check ids with
/// the suite name.
pub fn run_suite(suite: Suite, opts: SuiteOptions) -> VerificationReport {
    if suite != Suite::All {
        return single(suite, opts);
    }
    let start = Instant::now();
    let reports: Vec<VerificationReport> = std::thread::scope(|s| {
        let handles: Vec<_> = Suite::EACH
            .iter()
            .map(|&x| s.spawn(move || single(x, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    });
    let mut checks = Vec::new();
    let mut parameters = Params::new();
    for r in reports {
        checks.extend(r.checks.into_iter().map(|mut c| {
            c.id = format!("{}/{}", r.suite, c.id);
            c
        }));
        parameters.insert(r.suite, Value::Object(r.parameters.into_iter().collect()));
    }
    let mut report = VerificationReport::new("all", checks, parameters);
    report.timing_ms = start.elapsed().as_millis() as u64;
    report
}
