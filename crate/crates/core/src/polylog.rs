//! Formulas with `b = 0`: partial and full polylogarithm, generalized
//! harmonic numbers and the Riemann zeta function.
//!
//! `E(m, k, n) = Σ_{j=1}^{n} e^{mj} / j^k` and `Li_k(e^m) = E(m, k, ∞)`.
//!
//! `(k−1)!` and `k!` always mean `Γ(k)` and `Γ(k+1)`.

use std::f64::consts::PI;

use crate::complex::{
    cot_pi_pair, is_finite, ln_c, pi_cot_pi_minus_inv, pow_c, real, sin_pi_c, ComplexValue, ONE,
    ZERO,
};
use crate::domain::{PolylogRequest, PolylogVariant, Request};
use crate::error::{Error, Result};
use crate::eval::{admit, EvalResult, Method, Tally};
use crate::gamma::{rgamma, scaled_lower};
use crate::kernels::{
    binom_remainder, coth_direct, coth_direct_reduced, coth_endpoint, coth_geometric,
    coth_geometric_reduced, coth_regular, exp_tail, hp_kernel, log_breakpoints,
    log_comp_breakpoints, log_comp_excess, neg_log, neg_log_comp, pow_ratio, pow_ratio_m1,
    real_pow,
};
use crate::quadrature::{integrate_split, QuadConfig};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

fn is_zero(z: ComplexValue) -> bool {
    z.re == 0.0 && z.im == 0.0
}

fn polylog_request(
    m: ComplexValue,
    k: ComplexValue,
    n: Option<u64>,
    variant: PolylogVariant,
) -> Request {
    PolylogRequest { m, k, n, variant }.into()
}

/// `Σ_{j=1}^{k} m^{k−j}/(k−j)! · H_j(n)` for integer `k`, by direct sums.
pub(crate) fn harmonic_combination(
    m: ComplexValue,
    k: u32,
    n: u64,
    b: ComplexValue,
) -> ComplexValue {
    let mut h = vec![ZERO; k as usize + 1];
    for q in (1..=n).rev() {
        let r = (b + q as f64).inv();
        let mut p = r;
        for hj in h.iter_mut().skip(1) {
            *hj += p;
            p *= r;
        }
    }
    // Σ_j m^{k−j} / (k−j)! H_j, with the factorial weights built upward from j = k
    let mut acc = ZERO;
    let mut w = ONE;
    for j in (1..=k).rev() {
        acc += w * h[j as usize];
        w *= m / (k - j + 1) as f64;
    }
    acc
}

/// `E(m, k, n)` for integer `k ≥ 1`, valid for all complex `m`.
pub fn partial_polylog_integer(
    m: ComplexValue,
    k: u32,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let kc = real(k as f64);
    let st = admit(&polylog_request(m, kc, Some(n), PolylogVariant::IntegerK))?;
    if is_zero(m) {
        return harmonic_partial(kc, n, cfg).map(|r| r.with_warnings(st.warnings));
    }
    let nf = n as f64;
    let mut t = Tally::new();
    t.term(exp_tail(m * nf, k) / (2.0 * nf.powi(k as i32)));
    t.term(harmonic_combination(m, k, n, ZERO));
    let integral = integrate_split(
        |u, v| real(v.powi(k as i32 - 1)) * coth_geometric(m, n, u, v),
        &[],
        cfg,
    )?;
    t.integral(m.powi(k as i32) * rgamma(kc) * 0.5, &integral)?;
    Ok(t.finish(Method::IntegerK).with_warnings(st.warnings))
}

/// `E(m, k, n)` for `Re(k) > 0`, `m ≠ 0`; `m = 0` routes to [`harmonic_partial`].
pub fn partial_polylog_ac(
    m: ComplexValue,
    k: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let st = admit(&polylog_request(
        m,
        k,
        Some(n),
        PolylogVariant::AnalyticContinuation,
    ))?;
    if is_zero(m) {
        return harmonic_partial(k, n, cfg).map(|r| r.with_warnings(st.warnings));
    }
    let nf = n as f64;
    let rk1 = rgamma(k + 1.0);
    let mk = pow_c(m, k);
    let mut t = Tally::new();
    // e^{mn}/(2n^k) (1 − Γ(k+1, mn)/k!)
    t.term(pow_c(m, k + 1.0) * nf * scaled_lower(k + 1.0, m * nf)? * rk1 * 0.5);
    let kernel = integrate_split(
        |u, v| hp_kernel(ZERO, n, u, v) * pow_ratio_m1(m, k, neg_log(u, v)),
        &log_breakpoints(m),
        cfg,
    )?;
    t.integral(mk * rk1, &kernel)?;
    let end = coth_endpoint(m, k, ZERO, Some(n));
    let coth = integrate_split(
        |u, v| coth_geometric_reduced(m, k, ZERO, n, end, u, v),
        &[],
        cfg,
    )?;
    let coef = mk * rgamma(k) * 0.5;
    t.integral(coef, &coth)?;
    t.term(coef * end / k);
    Ok(t.finish(Method::AnalyticContinuation)
        .with_warnings(st.warnings))
}

/// Generalized harmonic number `H_k(n) = Σ_{j=1}^{n} j^{−k}` for `Re(k) > −1`.
pub fn harmonic_partial(k: ComplexValue, n: u64, cfg: &QuadConfig) -> Result<EvalResult> {
    let st = admit(&Request::Harmonic { k, n })?;
    let r = crate::lerch::hp_integral(k, ZERO, n, cfg)?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::HarmonicIntegral)
        .with_warnings(st.warnings))
}

/// `(1/k!) ∫ ((n+1)u^n − n u^{n+1}) / (1−u)² (−log u)^k du`, so that
/// `H_k(n) = ζ(k) − tail` for `Re(k) > 1`.
pub fn harmonic_remainder(k: ComplexValue, n: u64, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(k.re > 1.0) || n < 1 {
        return Err(Error::domain(
            "harmonic remainder needs Re(k) > 1 and n >= 1",
        ));
    }
    let r = crate::lerch::hp_tail_integral(k, ZERO, n, cfg)?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::HarmonicIntegral))
}

/// `(−log u)^k / (1−u)²` as `(t/v)^k v^{k−2}`.
pub(crate) fn zeta_kernel(k: ComplexValue, u: f64, v: f64) -> ComplexValue {
    let t = neg_log(u, v);
    real_pow(t / v, k) * real_pow(v, k - 2.0)
}

/// `ζ(k) = (1/k!) ∫ (−log u)^k / (1−u)² du` for `Re(k) > 1`.
pub fn zeta_int_rep(k: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(k.re > 1.0) {
        return Err(Error::domain(format!(
            "zeta integral needs Re(k) > 1, got {}; use zeta_reflected for Re(k) < 0",
            k.re
        )));
    }
    let st = admit(&Request::Zeta { k })?;
    let r = integrate_split(|u, v| zeta_kernel(k, u, v), &[], cfg)?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::ZetaIntegral).with_warnings(st.warnings))
}

/// `ζ(k)` for `Re(k) < 0` through the functional equation.
pub fn zeta_reflected(k: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    if !(k.re < 0.0) {
        return Err(Error::domain(format!(
            "reflected zeta needs Re(k) < 0, got {}",
            k.re
        )));
    }
    let st = admit(&Request::Zeta { k })?;
    let s = sin_pi_c(k * 0.5);
    let coef = -2.0 * pow_c(real(2.0 * PI), k - 1.0) / (k - 1.0) * s;
    if is_zero(s) {
        let mut t = Tally::new();
        t.term(ZERO);
        return Ok(t.finish(Method::ZetaReflected).with_warnings(st.warnings));
    }
    let r = integrate_split(|u, v| zeta_kernel(ONE - k, u, v), &[], cfg)?;
    let mut t = Tally::new();
    t.integral(coef, &r)?;
    Ok(t.finish(Method::ZetaReflected).with_warnings(st.warnings))
}

/// Integrand of the integer-`b` full series, `b = 0` giving the polylog:
/// `v^{k−1} e^{mbu} coth(mu/2) − (2π/m) v cot(πu)`.
pub(crate) fn int_b_integrand(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    if u < 0.5 {
        coth_regular(m, k, b, u) - 2.0 / m * (v * pi_cot_pi_minus_inv(u) - 1.0)
    } else {
        coth_direct(m, k, b, u, v) - 2.0 * PI / m * (v * cot_pi_pair(u, v))
    }
}

/// `log(−m)` on the principal branch.
pub(crate) fn log_neg(m: ComplexValue) -> ComplexValue {
    ln_c(-m)
}

/// `Li_k(e^m)` for integer `k ≥ 1`.
pub fn full_polylog_integer(m: ComplexValue, k: u32, cfg: &QuadConfig) -> Result<EvalResult> {
    let kc = real(k as f64);
    let st = admit(&polylog_request(m, kc, None, PolylogVariant::IntegerK))?;
    let ki = k as i32;
    let rk = rgamma(kc);
    let mut t = Tally::new();
    t.term(-m.powi(ki) * rgamma(kc + 1.0) * 0.5);
    t.term(-m.powi(ki - 1) * rk * (log_neg(m) - LN_2PI));
    // Σ_{j=2}^{k} m^{k−j}/(k−j)! ζ(j)
    let mut w = ONE;
    for j in (2..=k).rev() {
        let z = zeta_int_rep(real(j as f64), cfg)?;
        t.result(w, &z);
        w *= m / (k - j + 1) as f64;
    }
    let r = integrate_split(|u, v| int_b_integrand(m, kc, ZERO, u, v), &[], cfg)?;
    t.integral(-m.powi(ki) * rk * 0.5, &r)?;
    Ok(t.finish(Method::IntegerK).with_warnings(st.warnings))
}

/// Integrand of the continued full polylog,
/// `v^{k−1} coth(mu/2) + 2 (1 − (1 + L/m)^k) / (k u²)` with `L = −log(1−u)`.
/// `end` is [`coth_endpoint`], subtracted as `end · v^{k−1}`.
pub(crate) fn full_ac_integrand(
    m: ComplexValue,
    k: ComplexValue,
    end: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    let l = neg_log_comp(u, v);
    if u < 0.5 {
        let lu = l / u;
        let g = binom_remainder(m, k, l);
        coth_regular(m, k, ZERO, u)
            - end * real_pow(v, k - 1.0)
            - 2.0 / m * log_comp_excess(u, v)
            - 2.0 / k * lu * lu * g / (m * m)
    } else {
        coth_direct_reduced(m, k, ZERO, end, u, v)
            + 2.0 * (ONE - pow_ratio(m, k, l)) / (k * (u * u))
    }
}

/// `Li_k(e^m)` for `Re(k) > 0`.
///
/// Valid for all `m ≠ 0` except `Re(m) ≥ 0` with `|Im(m)| > 2π`; on
/// `|Im(m)| = 2π` it needs `Re(k) > 1`.
pub fn full_polylog_ac(m: ComplexValue, k: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    let st = admit(&polylog_request(
        m,
        k,
        None,
        PolylogVariant::AnalyticContinuation,
    ))?;
    let rk = rgamma(k);
    let mk1 = pow_c(m, k - 1.0);
    let mut t = Tally::new();
    t.term(-mk1 * m * rgamma(k + 1.0) * 0.5);
    t.term(-mk1 * rk * (1.0 + log_neg(m)));
    let end = coth_endpoint(m, k, ZERO, None);
    let r = integrate_split(
        |u, v| full_ac_integrand(m, k, end, u, v),
        &log_comp_breakpoints(m),
        cfg,
    )?;
    let coef = -mk1 * m * rk * 0.5;
    t.integral(coef, &r)?;
    t.term(coef * end / k);
    let out = t
        .finish(Method::AnalyticContinuation)
        .with_warnings(st.warnings);
    if !is_finite(out.value) {
        return Err(Error::NoConvergence {
            what: "full polylog",
            iterations: 0,
        });
    }
    Ok(out)
}

/// Convenience: `Li_k(x)` for complex `x ≠ 0` via `m = log x`.
pub fn polylog(x: ComplexValue, k: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    let m = crate::complex::principal_log(x)?;
    full_polylog_ac(m, k, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;
    use crate::oracle::{full_series_direct, partial_sum_direct, SeriesSpec};

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm()
    }

    fn li2_half() -> f64 {
        PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0
    }

    #[test]
    fn partial_integer_examples() {
        let m = c(0.4, -1.3);
        for k in 1..=4 {
            let v = partial_polylog_integer(m, k, 1, &cfg()).unwrap();
            assert!(rel(v.value, m.exp()) < 1e-11, "k={k}");
        }
        let v = partial_polylog_integer(ZERO, 2, 10, &cfg()).unwrap();
        assert!((v.value.re - 1.549_767_731_166_540_6).abs() < 1e-10);
        let v = partial_polylog_integer(real(1.0), 2, 10, &cfg()).unwrap();
        let d = partial_sum_direct(&SeriesSpec::partial(real(1.0), real(2.0), ZERO, 10)).unwrap();
        assert!(rel(v.value, d) < 1e-10);
    }

    #[test]
    fn partial_ac_examples() {
        let m = c(0.7, 0.9);
        let a = partial_polylog_ac(m, real(3.0), 7, &cfg()).unwrap();
        let i = partial_polylog_integer(m, 3, 7, &cfg()).unwrap();
        assert!(rel(a.value, i.value) < 1e-9);
        for (m, k, n) in [(real(-1.0), real(1.5), 5u64), (c(2.0, 1.0), c(0.5, 0.5), 8)] {
            let v = partial_polylog_ac(m, k, n, &cfg()).unwrap();
            let d = partial_sum_direct(&SeriesSpec::partial(m, k, ZERO, n)).unwrap();
            assert!(rel(v.value, d) < 1e-8, "m={m} k={k}: {} vs {d}", v.value);
        }
    }

    #[test]
    fn harmonic_examples() {
        let v = harmonic_partial(real(1.0), 4, &cfg()).unwrap();
        assert!((v.value.re - 25.0 / 12.0).abs() < 1e-11);
        let v = harmonic_partial(ZERO, 7, &cfg()).unwrap();
        assert!((v.value.re - 7.0).abs() < 1e-11);
        let v = harmonic_partial(real(-0.5), 3, &cfg()).unwrap();
        assert!((v.value.re - (1.0 + 2f64.sqrt() + 3f64.sqrt())).abs() < 1e-10);
        assert!(harmonic_partial(real(-1.0), 3, &cfg()).is_err());
    }

    #[test]
    fn zeta_examples() {
        let v = zeta_int_rep(real(2.0), &cfg()).unwrap();
        assert!((v.value.re - PI * PI / 6.0).abs() < 1e-11);
        let v = zeta_int_rep(real(4.0), &cfg()).unwrap();
        assert!((v.value.re - PI.powi(4) / 90.0).abs() < 1e-11);
        assert!(zeta_int_rep(real(1.0), &cfg()).is_err());
        let v = zeta_reflected(real(-1.0), &cfg()).unwrap();
        assert!((v.value.re + 1.0 / 12.0).abs() < 1e-11);
        let v = zeta_reflected(real(-2.0), &cfg()).unwrap();
        assert!(v.value.norm() < 1e-14);
        let v = zeta_reflected(real(-0.5), &cfg()).unwrap();
        assert!((v.value.re + 0.207_886_224_977_354_57).abs() < 1e-10);
        assert!(zeta_reflected(real(0.5), &cfg()).is_err());
    }

    #[test]
    fn zeta_complex_matches_oracle() {
        let k = c(2.5, 1.0);
        let v = zeta_int_rep(k, &cfg()).unwrap();
        let d = crate::oracle::zeta_direct(k, 1e-11).unwrap();
        assert!(rel(v.value, d.value) < 1e-9);
    }

    #[test]
    fn full_integer_examples() {
        let m = real(0.5f64.ln());
        let v = full_polylog_integer(m, 1, &cfg()).unwrap();
        assert!((v.value.re - 2f64.ln()).abs() < 1e-11);
        let v = full_polylog_integer(m, 2, &cfg()).unwrap();
        assert!((v.value.re - li2_half()).abs() < 1e-11);
        let m = c(-1.0, 2.0);
        let v = full_polylog_integer(m, 3, &cfg()).unwrap();
        let d = full_series_direct(&SeriesSpec::full(m, real(3.0), ZERO, 1), 1e-14).unwrap();
        assert!(rel(v.value, d.value) < 1e-9);
        assert!(full_polylog_integer(c(1.0, 7.0), 2, &cfg()).is_err());
    }

    #[test]
    fn full_ac_examples() {
        let m = real(0.5f64.ln());
        let v = full_polylog_ac(m, real(2.0), &cfg()).unwrap();
        assert!((v.value.re - li2_half()).abs() < 1e-11);
        let v = full_polylog_ac(m, real(1.5), &cfg()).unwrap();
        let d = full_series_direct(&SeriesSpec::full(m, real(1.5), ZERO, 1), 1e-14).unwrap();
        assert!(rel(v.value, d.value) < 1e-8);
        for k in 1..=5 {
            let m = c(-0.8, 1.7);
            let a = full_polylog_ac(m, real(k as f64), &cfg()).unwrap();
            let i = full_polylog_integer(m, k, &cfg()).unwrap();
            assert!(rel(a.value, i.value) < 1e-8, "k={k}");
        }
    }

    #[test]
    fn full_ac_on_negative_real_axis_and_positive_half() {
        for m in [real(-1.0), c(-1.0, 1e-12), c(-1.0, -1e-12), c(-2.0, -1.0)] {
            for k in [real(1.5), c(0.7, 0.4)] {
                let v = full_polylog_ac(m, k, &cfg()).unwrap();
                let d = full_series_direct(&SeriesSpec::full(m, k, ZERO, 1), 1e-14).unwrap();
                assert!(
                    rel(v.value, d.value) < 1e-8,
                    "m={m} k={k}: {} vs {}",
                    v.value,
                    d.value
                );
            }
        }
        // Re(m) > 0: compare with the integer formula, which is elementary in k
        let m = c(1.0, 2.0);
        let a = full_polylog_ac(m, real(2.0), &cfg()).unwrap();
        let i = full_polylog_integer(m, 2, &cfg()).unwrap();
        assert!(rel(a.value, i.value) < 1e-9);
    }
}
