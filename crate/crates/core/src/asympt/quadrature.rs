//! Adaptive Gauss-Kronrod (7, 15) quadrature on a finite interval.

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod estimate with the embedded 7-point Gauss rule used
/// for the error estimate.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let x = half * XGK[j];
        let s = f(center - x) + f(center + x);
        kronrod += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` by recursive
/// bisection, giving up past `max_depth` levels.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, max_depth: u32) -> Result<f64> {
    let (whole, err) = gk15(&f, a, b);
    refine(&f, a, b, whole, err, tol, 0, max_depth)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    estimate: f64,
    err: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Result<f64> {
    if err <= tol {
        return Ok(estimate);
    }
    if depth >= max_depth {
        return Err(Error::NoConvergence(max_depth));
    }
    let mid = 0.5 * (a + b);
    let (left, left_err) = gk15(f, a, mid);
    let (right, right_err) = gk15(f, mid, b);
    Ok(
        refine(f, a, mid, left, left_err, tol / 2.0, depth + 1, max_depth)?
            + refine(f, mid, b, right, right_err, tol / 2.0, depth + 1, max_depth)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_polynomials() {
        let v = integrate(|x| x.powi(13) - 3.0 * x.powi(7) + 1.0, 0.0, 1.0, 1e-14, 0).unwrap();
        assert!((v - (1.0 / 14.0 - 3.0 / 8.0 + 1.0)).abs() < 1e-14);
    }

    #[test]
    fn smooth_transcendental() {
        let v = integrate(f64::sin, 0.0, std::f64::consts::PI, 1e-12, 30).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let w = integrate(|x| 1.0 / (1.0 + x * x), 0.0, 1.0, 1e-12, 30).unwrap();
        assert!((w - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn depth_limit_reported() {
        // a jump the error estimate can never resolve at depth 2
        let r = integrate(|x| if x < 0.3 { 0.0 } else { 1.0 }, 0.0, 1.0, 1e-14, 2);
        assert_eq!(r, Err(Error::NoConvergence(2)));
    }
}
