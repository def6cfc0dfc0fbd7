//! Integrand pieces shared by the polylogarithm and Lerch formulas.
//!
//! Every function takes the quadrature node as the pair `(u, v = 1 − u)`.
//! Near `u = 0` the formulas combine a `1/u`-type pole from `coth(mu/2)` or
//! `cot(πu)` with an opposite pole from elsewhere in the integrand; the
//! helpers here return the already-cancelled pieces.

use std::f64::consts::PI;

use crate::complex::{
    c, coth_c, coth_minus_inv_c, expm1_c, is_finite, ln_c, log1p_c, real, ComplexValue, ONE, ZERO,
};

/// `−ln u`, accurate near both ends.
#[inline]
pub fn neg_log(u: f64, v: f64) -> f64 {
    if u < 0.5 {
        -u.ln()
    } else {
        -(-v).ln_1p()
    }
}

/// `−ln(1 − u)`, accurate near both ends.
#[inline]
pub fn neg_log_comp(u: f64, v: f64) -> f64 {
    if u < 0.5 {
        -(-u).ln_1p()
    } else {
        -v.ln()
    }
}

/// `(−ln(1 − u) − u) / u²`, finite at `u = 0`.
pub fn log_comp_excess(u: f64, v: f64) -> f64 {
    if u < 0.25 {
        // Σ u^j / (j + 2)
        let mut acc = 0.0;
        for j in (0..40).rev() {
            acc = acc * u + 1.0 / (j as f64 + 2.0);
        }
        acc
    } else {
        (neg_log_comp(u, v) - u) / (u * u)
    }
}

/// `log(m + t) − log(m)` for real `t ≥ 0`.
///
/// This is how `(1 + t/m)^k` is raised to a complex power throughout: it
/// agrees with the principal power of `1 + t/m` off the real axis and picks
/// the side of the cut that matches the series when `m` is negative real.
#[inline]
pub fn shifted_log(m: ComplexValue, t: f64) -> ComplexValue {
    let w = t / m;
    if w.norm_sqr() < 0.25 {
        log1p_c(w)
    } else {
        ln_c(m + t) - ln_c(m)
    }
}

fn base_vanishes(m: ComplexValue, t: f64) -> bool {
    m.im == 0.0 && m.re + t == 0.0
}

/// `(1 + t/m)^k`.
#[inline]
pub fn pow_ratio(m: ComplexValue, k: ComplexValue, t: f64) -> ComplexValue {
    if base_vanishes(m, t) {
        return ZERO;
    }
    (k * shifted_log(m, t)).exp()
}

/// `(1 + t/m)^k − 1`.
#[inline]
pub fn pow_ratio_m1(m: ComplexValue, k: ComplexValue, t: f64) -> ComplexValue {
    if base_vanishes(m, t) {
        return -ONE;
    }
    expm1_c(k * shifted_log(m, t))
}

/// `((1 + w)^k − 1 − k w) / w²` with `w = t/m`.
pub fn binom_remainder(m: ComplexValue, k: ComplexValue, t: f64) -> ComplexValue {
    let w = t / m;
    if w.norm_sqr() < 0.25 {
        // Σ_{j≥2} C(k, j) w^{j−2}
        let mut coef = k * (k - 1.0) * 0.5;
        let mut p = ONE;
        let mut acc = coef;
        for j in 2..200 {
            coef *= (k - j as f64) / (j as f64 + 1.0);
            p *= w;
            let term = coef * p;
            acc += term;
            if term.norm() <= 1e-17 * acc.norm() {
                break;
            }
        }
        acc
    } else {
        (pow_ratio_m1(m, k, t) - k * w) / (w * w)
    }
}

/// `coth(mu/2)`, reduced by the period `iπ` so the node `u ≈ 1` keeps its precision.
pub fn coth_mu_half(m: ComplexValue, u: f64, v: f64) -> ComplexValue {
    if u < 0.5 {
        return coth_c(m * (0.5 * u));
    }
    let turns = (m.im / (2.0 * PI)).round();
    let base = c(0.5 * m.re, 0.5 * m.im - PI * turns);
    coth_c(base - m * (0.5 * v))
}

/// `(e^{mnu} − 1) coth(mu/2)`, which is `(e^{mu} + 1) Σ_{q<n} e^{qmu}`.
pub fn coth_geometric(m: ComplexValue, n: u64, u: f64, v: f64) -> ComplexValue {
    let mu = m * u;
    let em1 = expm1_c(mu);
    if n <= 64 || em1.norm() < 0.25 {
        let e = em1 + 1.0;
        let mut p = ONE;
        let mut acc = ZERO;
        for _ in 0..n {
            acc += p;
            p *= e;
        }
        return (e + 1.0) * acc;
    }
    expm1_c(mu * n as f64) * coth_mu_half(m, u, v)
}

/// `e^{log_w} (e^{mnu} − 1) coth(mu/2)`; near `u = 1` a large weight times a
/// large sum can overflow even though the product is integrable, so the
/// product then goes through logarithms.
pub fn weighted_coth_geometric(
    log_w: ComplexValue,
    m: ComplexValue,
    n: u64,
    u: f64,
    v: f64,
) -> ComplexValue {
    let g = coth_geometric(m, n, u, v);
    let direct = log_w.exp() * g;
    let size = g.norm();
    if is_finite(direct) || size == 0.0 {
        return direct;
    }
    (log_w + size.ln()).exp() * (g / size)
}

/// Value at `u = 1` of `e^{mbu} (e^{mnu} − 1) coth(mu/2)`, or of `e^{mbu} coth(mu/2)`
/// for `n = None`. For `Re(k) < 1` this times `v^{k−1}` is taken out of the
/// integrand and added back as `end/k`; tanh-sinh cannot resolve `v^{k−1}`
/// once `Re(k)` is small. Zero when nothing is taken out.
pub fn coth_endpoint(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    n: Option<u64>,
) -> ComplexValue {
    if !(k.re < 1.0) {
        return ZERO;
    }
    let g = match n {
        Some(n) => coth_geometric(m, n, 1.0, 0.0),
        None => coth_mu_half(m, 1.0, 0.0),
    };
    let end = (m * b).exp() * g;
    if is_finite(end) {
        end
    } else {
        ZERO
    }
}

/// `v^{k−1} (e^{mbu} (e^{mnu} − 1) coth(mu/2) − end)`.
pub fn coth_geometric_reduced(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
    end: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    if end == ZERO {
        return weighted_coth_geometric((k - 1.0) * v.ln() + m * b * u, m, n, u, v);
    }
    real_pow(v, k - 1.0) * ((m * b * u).exp() * coth_geometric(m, n, u, v) - end)
}

/// `Σ_{q=1}^{n} (q + b) u^{q−1}`.
pub fn hp_kernel(b: ComplexValue, n: u64, u: f64, v: f64) -> ComplexValue {
    let nf = n as f64;
    if n <= 64 || v * nf < 0.5 {
        let mut acc = b + nf;
        for q in (1..n).rev() {
            acc = acc * u + (b + q as f64);
        }
        return acc;
    }
    let ln_u = -neg_log(u, v);
    let un = (nf * ln_u).exp();
    let one_minus_un = -(nf * ln_u).exp_m1();
    let plain = (one_minus_un - nf * v * un) / (v * v);
    b * (one_minus_un / v) + plain
}

/// `e^z − Σ_{j≤k} z^j / j!`.
pub fn exp_tail(z: ComplexValue, k: u32) -> ComplexValue {
    if z.norm() <= k as f64 + 2.0 {
        let mut term = ONE;
        for j in 1..=k + 1 {
            term *= z / j as f64;
        }
        let mut acc = term;
        for j in k + 2..k + 400 {
            term *= z / j as f64;
            acc += term;
            if term.norm() <= 1e-17 * acc.norm() {
                break;
            }
        }
        return acc;
    }
    let mut term = ONE;
    let mut poly = ONE;
    for j in 1..=k {
        term *= z / j as f64;
        poly += term;
    }
    z.exp() - poly
}

/// `v^{k−1} e^{mbu} (coth(mu/2) − 2/(mu))` plus `(v^{k−1} e^{mbu} − 1) / (mu/2)`, for `u < 1/2`.
///
/// Equals `v^{k−1} e^{mbu} coth(mu/2) − 2/(mu)`.
pub fn coth_regular(m: ComplexValue, k: ComplexValue, b: ComplexValue, u: f64) -> ComplexValue {
    let x = m * (0.5 * u);
    let expo = (k - 1.0) * (-u).ln_1p() + m * b * u;
    expo.exp() * coth_minus_inv_c(x) + expm1_c(expo) / u * (2.0 / m)
}

/// `v^{k−1} e^{mbu} coth(mu/2)` for `u ≥ 1/2`.
pub fn coth_direct(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    let weight = ((k - 1.0) * v.ln() + m * b * u).exp();
    weight * coth_mu_half(m, u, v)
}

/// [`coth_direct`] less `end · v^{k−1}`.
pub fn coth_direct_reduced(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    end: ComplexValue,
    u: f64,
    v: f64,
) -> ComplexValue {
    if end == ZERO {
        return coth_direct(m, k, b, u, v);
    }
    real_pow(v, k - 1.0) * ((m * b * u).exp() * coth_mu_half(m, u, v) - end)
}

/// Split point of integrals in `log u` whose factor `m − log u` vanishes on `(0,1)`.
pub fn log_breakpoints(m: ComplexValue) -> Vec<f64> {
    if m.re < 0.0 {
        vec![m.re.exp()]
    } else {
        Vec::new()
    }
}

/// Same for integrals in `log(1 − u)`.
pub fn log_comp_breakpoints(m: ComplexValue) -> Vec<f64> {
    if m.re < 0.0 {
        vec![-m.re.exp_m1()]
    } else {
        Vec::new()
    }
}

/// `u^b e^{k log t}` style powers with `t > 0` real.
#[inline]
pub fn real_pow(t: f64, k: ComplexValue) -> ComplexValue {
    if k.im == 0.0 {
        return real(t.powf(k.re));
    }
    (k * t.ln()).exp()
}
