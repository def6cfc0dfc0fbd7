//! Formulas with a shift `b`: partial and full Lerch series, harmonic
//! progressions `HP_k(n)` and the Hurwitz zeta function.
//!
//! Full-series results come in two flavours. [`full_lerch_ac`] returns
//! `Σ_{j≥0} e^{m(j+b)}/(j+b)^k`, the `e^{mb}`-weighted Lerch transcendent,
//! while the integer-order [`full_lerch_integer`] returns the same series
//! from `j = 1`. [`lerch_phi`] divides out `e^{mb}`.

use std::f64::consts::PI;

use crate::complex::{
    cos_pi_c, cot_minus_inv, cot_pi_c, cot_pi_pair, expm1_c, log1p_c, pi_cot_pi_minus_inv, pow_c,
    real, sin_pi_c, ComplexValue, ONE, ZERO,
};
pub use crate::domain::{classify_b, BClass};
use crate::domain::{LerchRequest, LerchVariant, Request, B_CLASS_TOL};
use crate::error::{Error, Result};
use crate::eval::{admit, EvalResult, Method, Tally};
use crate::gamma::{harmonic_number, rgamma, scaled_lower};
use crate::kernels::{
    binom_remainder, coth_direct, coth_direct_reduced, coth_endpoint, coth_geometric_reduced,
    coth_regular, exp_tail, hp_kernel, log_breakpoints, log_comp_breakpoints, log_comp_excess,
    neg_log, neg_log_comp, pow_ratio, pow_ratio_m1, real_pow, weighted_coth_geometric,
};
use crate::polylog::{self, harmonic_combination, int_b_integrand, log_neg};
use crate::quadrature::{integrate_split, QuadConfig, QuadResult};

const LN_2PI: f64 = 1.837_877_066_409_345_5;
const LN_PI: f64 = 1.144_729_885_849_400_2;

fn is_zero(z: ComplexValue) -> bool {
    z.re == 0.0 && z.im == 0.0
}

fn lerch_request(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    n: Option<u64>,
    variant: LerchVariant,
) -> Request {
    LerchRequest {
        m,
        k,
        b,
        n,
        variant,
    }
    .into()
}

/// `u^b` as `e^{−b·(−log u)}`, exact near `u = 1`.
fn u_pow(b: ComplexValue, u: f64, v: f64) -> ComplexValue {
    if is_zero(b) {
        return ONE;
    }
    (-b * neg_log(u, v)).exp()
}

/// `log(v^{k−1} e^{mbu})`.
fn coth_log_weight(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    (k - 1.0) * v.ln() + m * b * u
}

/// `∫ u^b Σ_{q=1}^{n} (q+b) u^{q−1} (−log u)^k du`; divide by `k!` for `HP_k(n)`.
pub(crate) fn hp_integral(
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    integrate_split(
        |u, v| u_pow(b, u, v) * hp_kernel(b, n, u, v) * real_pow(neg_log(u, v), k),
        &[],
        cfg,
    )
}

/// `∫ u^{b+n} (1 + (n+b)(1−u)) / (1−u)² (−log u)^k du`, the part of `ζ(k, b+1)` beyond `n`.
pub(crate) fn hp_tail_integral(
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    let shift = b + n as f64;
    integrate_split(
        |u, v| {
            let t = neg_log(u, v);
            u_pow(shift, u, v) * (1.0 + shift * v) * real_pow(t / v, k) * real_pow(v, k - 2.0)
        },
        &[],
        cfg,
    )
}

/// `HP_k(n) = Σ_{q=1}^{n} (q+b)^{−k}` for `Re(k) > −1`, `Re(b) > −1`.
pub fn hp_partial(
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let st = admit(&Request::HarmonicProgression { k, b, n })?;
    let r = hp_integral(k, b, n, cfg)?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::HarmonicProgressionIntegral)
        .with_warnings(st.warnings))
}

/// `ζ(k, b+1) − HP_k(n)`, the integral in the remainder form of `HP_k(n)`.
pub fn hp_remainder(
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if !(k.re > 1.0) || !(b.re > 0.0 || is_zero(b)) {
        return Err(Error::domain(
            "remainder form needs Re(k) > 1 and Re(b) > 0",
        ));
    }
    let r = hp_tail_integral(k, b, n, cfg)?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::HarmonicProgressionIntegral))
}

/// `ζ(k, b+1) = Σ_{q≥1} (q+b)^{−k}` for `Re(k) > 1` and `Re(b) > 0` or `b = 0`.
pub fn hurwitz_zeta(k: ComplexValue, b: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    let st = admit(&Request::Hurwitz { k, b })?;
    let r = integrate_split(
        |u, v| u_pow(b, u, v) * (1.0 + b * v) * polylog::zeta_kernel(k, u, v),
        &[],
        cfg,
    )?;
    let mut t = Tally::new();
    t.integral(rgamma(k + 1.0), &r)?;
    Ok(t.finish(Method::HurwitzIntegral).with_warnings(st.warnings))
}

/// Unshifted `ζ(j, b) = Σ_{q≥0} (q+b)^{−j}`, moving `b` right by whole steps first.
fn hurwitz_unshifted(j: u32, b: ComplexValue, cfg: &QuadConfig) -> Result<EvalResult> {
    let steps = if b.re > 0.0 {
        1
    } else {
        (1.0 - b.re).floor() as u64 + 1
    };
    let mut t = Tally::new();
    for q in 0..steps {
        t.term(pow_c(b + q as f64, real(-(j as f64))));
    }
    let rest = hurwitz_zeta(real(j as f64), b + (steps - 1) as f64, cfg)?;
    t.result(ONE, &rest);
    Ok(t.finish(Method::HurwitzIntegral))
}

/// Closed terms shared by the integer-order full Lerch variants:
/// `−(e^{mb} + Σ_{j≤k−2} (mb)^j/j!)/(2b^k) + Σ_{j=2}^{k} m^{k−j}/(k−j)! ζ(j,b)`.
fn full_integer_head(
    t: &mut Tally,
    m: ComplexValue,
    k: u32,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<()> {
    let mb = m * b;
    let mut poly = ZERO;
    let mut p = ONE;
    for j in 0..k.saturating_sub(1) {
        if j > 0 {
            p *= mb / j as f64;
        }
        poly += p;
    }
    t.term(-(mb.exp() + poly) / (2.0 * b.powi(k as i32)));
    let mut w = ONE;
    for j in (2..=k).rev() {
        let z = hurwitz_unshifted(j, b, cfg)?;
        t.result(w, &z);
        w *= m / (k - j + 1) as f64;
    }
    Ok(())
}

fn generic_integrand(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    sb: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    let cot = cot_pi_pair(u, v);
    if u < 0.5 {
        coth_regular(m, k, b, u) - 2.0 / m * pi_cot_pi_minus_inv(u)
            + 2.0 * PI / m * (sin_pi_c(2.0 * b * u) / sb) * cot
    } else {
        // sin(2πbu)/sin(2πb) − 1, without the cancellation at u = 1
        let d = -2.0 * cos_pi_c(b * (1.0 + u)) * sin_pi_c(b * v) / sb;
        coth_direct(m, k, b, u, v) + 2.0 * PI / m * d * cot
    }
}

fn half_b_integrand(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    if u < 0.5 {
        let q = 0.5 * PI * cot_minus_inv(0.5 * PI * u);
        let s = sin_pi_c(b * (0.5 * u));
        coth_regular(m, k, b, u) - 2.0 / m * q * cos_pi_c(b * u) + 2.0 * s * s / u * (2.0 / m)
    } else {
        let cot_half = (0.5 * PI * v).tan();
        coth_direct(m, k, b, u, v) - PI / m * cos_pi_c(b * u) * cot_half
    }
}

/// `Σ_{j≥1} e^{m(j+b)}/(j+b)^k` for integer `k ≥ 1`, variant chosen by [`classify_b`].
pub fn full_lerch_integer(
    m: ComplexValue,
    k: u32,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    full_lerch_integer_variant(m, k, b, LerchVariant::Auto, cfg)
}

/// [`full_lerch_integer`] with an explicit variant.
pub fn full_lerch_integer_variant(
    m: ComplexValue,
    k: u32,
    b: ComplexValue,
    variant: LerchVariant,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if is_zero(b) {
        return polylog::full_polylog_integer(m, k, cfg);
    }
    let kc = real(k as f64);
    let variant = match variant {
        LerchVariant::Auto => match classify_b(b, B_CLASS_TOL) {
            BClass::Integer => LerchVariant::IntegerKIntB,
            BClass::HalfInteger => LerchVariant::IntegerKHalfB,
            BClass::Generic => LerchVariant::IntegerKGeneral,
        },
        LerchVariant::AnalyticContinuation => {
            return Err(Error::domain(
                "analytic continuation is not an integer-k variant",
            ));
        }
        v => v,
    };
    let st = admit(&lerch_request(m, kc, b, None, variant))?;
    let ki = k as i32;
    let scale = m.powi(ki - 1) * rgamma(kc);
    let mut t = Tally::new();
    full_integer_head(&mut t, m, k, b, cfg)?;
    let (r, method) = match variant {
        LerchVariant::IntegerKGeneral => {
            t.term(0.5 * PI * scale * cot_pi_c(b)?);
            t.term(-scale * (log_neg(m) - LN_2PI));
            let sb = sin_pi_c(2.0 * b);
            (
                integrate_split(|u, v| generic_integrand(m, kc, b, sb, u, v), &[], cfg)?,
                Method::IntegerK,
            )
        }
        LerchVariant::IntegerKHalfB => {
            t.term(-scale * (log_neg(m) - LN_PI));
            (
                integrate_split(|u, v| half_b_integrand(m, kc, b, u, v), &[], cfg)?,
                Method::IntegerKHalfB,
            )
        }
        _ => {
            let bi = b.re.round();
            let h = harmonic_number(bi as i64)?;
            t.term(-scale * (log_neg(m) - LN_2PI));
            t.term(-scale * (h - 0.5 / bi));
            (
                integrate_split(|u, v| int_b_integrand(m, kc, b, u, v), &[], cfg)?,
                Method::IntegerKIntB,
            )
        }
    };
    t.integral(-m.powi(ki) * rgamma(kc) * 0.5, &r)?;
    Ok(t.finish(method).with_warnings(st.warnings))
}

/// `Σ_{j=1}^{n} e^{m(j+b)}/(j+b)^k` for integer `k ≥ 1` and any complex `m`, `b`
/// without zero bases. `b = 0` and `m = 0` route to the polylog and `HP` forms.
pub fn partial_lerch_integer(
    m: ComplexValue,
    k: u32,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if is_zero(b) {
        return polylog::partial_polylog_integer(m, k, n, cfg);
    }
    let kc = real(k as f64);
    let st = admit(&lerch_request(
        m,
        kc,
        b,
        Some(n),
        LerchVariant::IntegerKGeneral,
    ))?;
    if is_zero(m) {
        return hp_partial(kc, b, n, cfg).map(|r| r.with_warnings(st.warnings));
    }
    let ki = k as i32;
    let nb = b + n as f64;
    let mut t = Tally::new();
    t.term(-exp_tail(m * b, k) / (2.0 * b.powi(ki)));
    t.term(exp_tail(m * nb, k) / (2.0 * nb.powi(ki)));
    t.term(harmonic_combination(m, k, n, b));
    let r = integrate_split(
        |u, v| weighted_coth_geometric(coth_log_weight(m, kc, b, u, v), m, n, u, v),
        &[],
        cfg,
    )?;
    t.integral(m.powi(ki) * rgamma(kc) * 0.5, &r)?;
    Ok(t.finish(Method::IntegerK).with_warnings(st.warnings))
}

/// `Σ_{j=1}^{n} e^{m(j+b)}/(j+b)^k` for `Re(k) > 0` and `Re(b) > 0`
/// (`Re(b) > −1` for integer `k`).
pub fn partial_lerch_ac(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    if is_zero(b) {
        return polylog::partial_polylog_ac(m, k, n, cfg);
    }
    let st = admit(&lerch_request(
        m,
        k,
        b,
        Some(n),
        LerchVariant::AnalyticContinuation,
    ))?;
    if is_zero(m) {
        return hp_partial(k, b, n, cfg).map(|r| r.with_warnings(st.warnings));
    }
    let nb = b + n as f64;
    let rk1 = rgamma(k + 1.0);
    let mk = pow_c(m, k);
    let mk1 = mk * m;
    let mut t = Tally::new();
    t.term(-mk1 * b * scaled_lower(k + 1.0, m * b)? * rk1 * 0.5);
    t.term(mk1 * nb * scaled_lower(k + 1.0, m * nb)? * rk1 * 0.5);
    let kernel = integrate_split(
        |u, v| u_pow(b, u, v) * hp_kernel(b, n, u, v) * pow_ratio_m1(m, k, neg_log(u, v)),
        &log_breakpoints(m),
        cfg,
    )?;
    t.integral(mk * rk1, &kernel)?;
    let end = coth_endpoint(m, k, b, Some(n));
    let coth = integrate_split(
        |u, v| coth_geometric_reduced(m, k, b, n, end, u, v),
        &[],
        cfg,
    )?;
    let coef = mk * rgamma(k) * 0.5;
    t.integral(coef, &coth)?;
    t.term(coef * end / k);
    Ok(t.finish(Method::AnalyticContinuation)
        .with_warnings(st.warnings))
}

fn full_ac_integrand(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    end: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    let l = neg_log_comp(u, v);
    if u < 0.5 {
        let h = log_comp_excess(u, v);
        let lu = l / u;
        // (1−u)^b (1+bu)(1 + uh) − 1 in exponent form
        let excess = expm1_c(-b * l + log1p_c(b * u) + (u * h).ln_1p());
        let weight = (-b * l).exp() * (1.0 + b * u);
        coth_regular(m, k, b, u)
            - end * real_pow(v, k - 1.0)
            - excess / u * (2.0 / m)
            - 2.0 / k * weight * lu * lu * binom_remainder(m, k, l) / (m * m)
    } else {
        let weight = (-b * l).exp() * (1.0 + b * u);
        coth_direct_reduced(m, k, b, end, u, v)
            + 2.0 * weight * (ONE - pow_ratio(m, k, l)) / (k * (u * u))
    }
}

/// `Σ_{j≥0} e^{m(j+b)}/(j+b)^k` for `Re(k) > 0`, `Re(b) > 0` and the same
/// `m` region as the full polylogarithm.
pub fn full_lerch_ac(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let st = admit(&lerch_request(
        m,
        k,
        b,
        None,
        LerchVariant::AnalyticContinuation,
    ))?;
    let rk = rgamma(k);
    let rk1 = rgamma(k + 1.0);
    let mk1 = pow_c(m, k - 1.0);
    let mk = mk1 * m;
    let mut t = Tally::new();
    t.term((m * b).exp() / pow_c(b, k));
    t.term(-mk * m * b * scaled_lower(k + 1.0, m * b)? * rk1 * 0.5);
    t.term(-mk * rk1 * 0.5);
    t.term(-mk1 * rk * (1.0 + log_neg(m)));
    let end = coth_endpoint(m, k, b, None);
    let r = integrate_split(
        |u, v| full_ac_integrand(m, k, b, end, u, v),
        &log_comp_breakpoints(m),
        cfg,
    )?;
    let coef = -mk * rk * 0.5;
    t.integral(coef, &r)?;
    t.term(coef * end / k);
    Ok(t.finish(Method::AnalyticContinuation)
        .with_warnings(st.warnings))
}

/// [`full_lerch_ac`] without the `j = 0` term, comparable with [`full_lerch_integer`].
pub fn full_lerch_ac_from_one(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let full = full_lerch_ac(m, k, b, cfg)?;
    let mut t = Tally::new();
    t.result(ONE, &full).term(-(m * b).exp() / pow_c(b, k));
    Ok(t.finish(full.method).with_warnings(full.warnings))
}

/// The Lerch transcendent `Φ(e^m, k, b) = Σ_{j≥0} e^{mj}/(j+b)^k`.
pub fn lerch_phi(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let mut r = full_lerch_ac(m, k, b, cfg)?;
    let scale = (-m * b).exp();
    r.value *= scale;
    r.abs_err_estimate *= scale.norm();
    Ok(r)
}

fn hurwitz_sum_integrand(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    let l = neg_log_comp(u, v);
    let vb = (-b * l).exp();
    if u < 0.5 {
        let lu = l / u;
        vb * (-k * log_comp_excess(u, v)
            - k * b * lu
            - (1.0 + b * u) * lu * lu * binom_remainder(m, k, l) / m)
    } else {
        vb / (u * u) * (k * u + m * (1.0 + b * u) * (ONE - pow_ratio(m, k, l)))
    }
}

/// `Σ_{j=2}^{k} m^{k−j}/(k−j)! ζ(j, b)` for integer `k ≥ 1`, `m ≠ 0`,
/// `Re(b) > −1`, `b ≠ 0`; zero when `k = 1`.
pub fn hurwitz_sum_closed(
    m: ComplexValue,
    k: u32,
    b: ComplexValue,
    cfg: &QuadConfig,
) -> Result<EvalResult> {
    let kc = real(k as f64);
    let st = admit(&Request::HurwitzSum { m, k: kc, b })?;
    let mut t = Tally::new();
    if k < 2 {
        t.term(ZERO);
        return Ok(t
            .finish(Method::HurwitzSumClosed)
            .with_warnings(st.warnings));
    }
    let ki = k as i32;
    let rk1 = rgamma(kc + 1.0);
    let mk1 = m.powi(ki - 1);
    t.term(-mk1 * m * rk1);
    t.term(-mk1 * rgamma(kc) * (1.0 + b.inv()));
    t.term((m * b).exp() / b.powi(ki));
    t.term(-mk1 * m * m * b * scaled_lower(kc + 1.0, m * b)? * rk1);
    let r = integrate_split(
        |u, v| hurwitz_sum_integrand(m, kc, b, u, v),
        &log_comp_breakpoints(m),
        cfg,
    )?;
    t.integral(-mk1 * rk1, &r)?;
    Ok(t.finish(Method::HurwitzSumClosed)
        .with_warnings(st.warnings))
}
