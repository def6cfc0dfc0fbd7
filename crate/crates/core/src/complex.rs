//! Branch-consistent complex scalar operations.
//!
//! All logarithms and powers use the principal branch, `arg ∈ (−π, π]`. A
//! negative real number with a signed-zero imaginary part is always treated
//! as lying on the upper side of the cut, so `principal_log(-1 - 0i) = iπ`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Double-precision complex scalar used by every evaluation.
pub type ComplexValue = Complex64;

pub(crate) const ZERO: ComplexValue = Complex64::new(0.0, 0.0);
pub(crate) const ONE: ComplexValue = Complex64::new(1.0, 0.0);

/// Laurent coefficients of `coth x − 1/x = Σ c_n x^{2n−1}`, `c_n = 2^{2n} B_{2n} / (2n)!`.
const COTH_SERIES: [f64; 13] = [
    0.3333333333333333,
    -0.022222222222222223,
    0.0021164021164021165,
    -0.00021164021164021165,
    2.1377799155576935e-05,
    -2.1644042808063972e-06,
    2.1925947851873778e-07,
    -2.2214608789979678e-08,
    2.2507846516808994e-09,
    -2.2805151204592183e-10,
    2.3106432599002624e-11,
    -2.3411706819824882e-12,
    2.3721017400233653e-13,
];

#[inline]
pub(crate) fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

#[inline]
pub(crate) fn real(re: f64) -> ComplexValue {
    Complex64::new(re, 0.0)
}

#[inline]
pub(crate) fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Principal argument with the signed-zero convention described above.
#[inline]
pub(crate) fn arg(z: ComplexValue) -> f64 {
    let a = if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    };
    #[cfg(feature = "broken-branch")]
    let a = if a < 0.0 { a + 2.0 * PI } else { a };
    a
}

/// Logarithm without the zero check. `ln_c(0)` is `-inf`.
#[inline]
pub(crate) fn ln_c(z: ComplexValue) -> ComplexValue {
    c(z.re.hypot(z.im).ln(), arg(z))
}

/// Principal logarithm: `log|z| + i·arg(z)` with `arg(z) ∈ (−π, π]`.
pub fn principal_log(z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::domain("log of zero"));
    }
    Ok(ln_c(z))
}

/// `z^w = exp(w · log z)` on the principal branch; `0^w = 0` for `Re(w) > 0`.
pub fn complex_pow(z: ComplexValue, w: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        return if w.re > 0.0 {
            Ok(ZERO)
        } else {
            Err(Error::domain(
                "zero raised to a power with non-positive real part",
            ))
        };
    }
    Ok(pow_c(z, w))
}

/// `complex_pow` for a nonzero base.
#[inline]
pub(crate) fn pow_c(z: ComplexValue, w: ComplexValue) -> ComplexValue {
    if w.im == 0.0 {
        if w.re == 0.0 {
            return ONE;
        }
        if z.im == 0.0 && z.re > 0.0 {
            return real(z.re.powf(w.re));
        }
        if w.re.fract() == 0.0 && w.re.abs() <= 64.0 {
            return z.powi(w.re as i32);
        }
    }
    (w * ln_c(z)).exp()
}

/// `e^z − 1` without cancellation for small `|z|`.
#[inline]
pub(crate) fn expm1_c(z: ComplexValue) -> ComplexValue {
    let s = (0.5 * z.im).sin();
    c(
        z.re.exp_m1() * z.im.cos() - 2.0 * s * s,
        z.re.exp() * z.im.sin(),
    )
}

/// `log(1 + z)` on the principal branch, accurate for small `|z|`.
#[inline]
pub(crate) fn log1p_c(z: ComplexValue) -> ComplexValue {
    if z.norm_sqr() < 0.25 {
        let (x, y) = (z.re, z.im);
        c(0.5 * (x * (2.0 + x) + y * y).ln_1p(), y.atan2(1.0 + x))
    } else {
        ln_c(ONE + z)
    }
}

/// `sin(πx)` with exact zeros at the integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = (2.0 * x).round();
    let f = x - 0.5 * n;
    match (n as i64).rem_euclid(4) {
        0 => (PI * f).sin(),
        1 => (PI * f).cos(),
        2 => -(PI * f).sin(),
        _ => -(PI * f).cos(),
    }
}

/// `cos(πx)` with exact zeros at the half-integers.
pub(crate) fn cos_pi(x: f64) -> f64 {
    let n = (2.0 * x).round();
    let f = x - 0.5 * n;
    match (n as i64).rem_euclid(4) {
        0 => (PI * f).cos(),
        1 => -(PI * f).sin(),
        2 => -(PI * f).cos(),
        _ => (PI * f).sin(),
    }
}

pub(crate) fn sin_pi_c(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    c(sin_pi(z.re) * y.cosh(), cos_pi(z.re) * y.sinh())
}

pub(crate) fn cos_pi_c(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    c(cos_pi(z.re) * y.cosh(), -sin_pi(z.re) * y.sinh())
}

/// `cot(πb)` for complex `b`; pole at the integers.
pub(crate) fn cot_pi_c(b: ComplexValue) -> Result<ComplexValue> {
    let s = sin_pi_c(b);
    if s.re == 0.0 && s.im == 0.0 {
        return Err(Error::Pole(format!("cot(πb) at b = {b}")));
    }
    Ok(cos_pi_c(b) / s)
}

/// `cot x − 1/x` for real `|x| < π`.
pub(crate) fn cot_minus_inv(x: f64) -> f64 {
    if x.abs() < 0.5 {
        let x2 = x * x;
        let mut acc = 0.0;
        let mut p = x;
        for (n, cn) in COTH_SERIES.iter().enumerate() {
            // cot x − 1/x = Σ (−1)^n c_n x^{2n−1}
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            acc += sign * cn * p;
            p *= x2;
        }
        acc
    } else {
        x.cos() / x.sin() - 1.0 / x
    }
}

/// `cot(πu)` for `u ∈ (0, 1/2]`.
fn cot_pi_half(u: f64) -> f64 {
    if u < 1e-4 {
        let x = PI * u;
        let x2 = x * x;
        1.0 / x - x * (1.0 / 3.0 + x2 * (1.0 / 45.0 + x2 * 2.0 / 945.0))
    } else if u <= 0.25 {
        let x = PI * u;
        x.cos() / x.sin()
    } else {
        (PI * (0.5 - u)).tan()
    }
}

/// `cot(πu)` given both `u` and `v = 1 − u`, accurate near either endpoint.
#[inline]
pub(crate) fn cot_pi_pair(u: f64, v: f64) -> f64 {
    if u <= 0.5 {
        cot_pi_half(u)
    } else {
        -cot_pi_half(v)
    }
}

/// `π cot(πu) − 1/u` for `u ∈ (0, 1/2]`.
#[inline]
pub(crate) fn pi_cot_pi_minus_inv(u: f64) -> f64 {
    PI * cot_minus_inv(PI * u)
}

/// `cot(πu)` for `u ∈ (0, 1)`.
///
/// Uses the Laurent expansion within `1e-4` of either pole and the
/// reflection `cot(πu) = −cot(π(1−u))` on the upper half of the interval.
pub fn cot_pi(u: f64) -> Result<f64> {
    if !(u > 0.0 && u < 1.0) {
        return Err(Error::Pole(format!(
            "cot(πu) requires u in (0, 1), got {u}"
        )));
    }
    Ok(cot_pi_pair(u, 1.0 - u))
}

/// `coth x` without overflow; huge (not an error) next to a pole.
pub(crate) fn coth_c(x: ComplexValue) -> ComplexValue {
    if x.re < 0.0 {
        return -coth_c(-x);
    }
    if x.norm_sqr() < 0.25 {
        return scaled_inv(x) + coth_minus_inv_c(x);
    }
    // 1 − e^{−2x} and 1 + e^{−2x}
    let d = -expm1_c(-2.0 * x);
    (2.0 - d) / d
}

/// `1/x` without the underflow of `|x|²` below `1e-154`.
fn scaled_inv(x: ComplexValue) -> ComplexValue {
    let s = x.re.abs().max(x.im.abs());
    (x / s).inv() / s
}

/// `coth x − 1/x`, finite at the origin.
pub(crate) fn coth_minus_inv_c(x: ComplexValue) -> ComplexValue {
    if x.norm_sqr() < 0.25 {
        let x2 = x * x;
        let mut acc = ZERO;
        let mut p = x;
        for cn in COTH_SERIES {
            acc += cn * p;
            p *= x2;
        }
        acc
    } else {
        coth_c(x) - scaled_inv(x)
    }
}

/// `coth(m·u/2)`.
///
/// Returns ±1 asymptotically for large `|Re(mu)|` and uses the Laurent
/// series near the origin.
pub fn coth_half(m: ComplexValue, u: f64) -> Result<ComplexValue> {
    let x = m * (0.5 * u);
    if x.re == 0.0 {
        let q = x.im / PI;
        if (q - q.round()).abs() < 1e-14 * q.abs().max(1.0) {
            return Err(Error::Pole(format!("coth(mu/2) at mu = {}", 2.0 * x)));
        }
    }
    Ok(coth_c(x))
}
