//! Complex gamma, incomplete gamma and harmonic numbers.

use std::f64::consts::PI;

use crate::complex::{c, ln_c, pow_c, real, sin_pi_c, ComplexValue, ONE, ZERO};
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

const SERIES_MAX: usize = 10_000;
const CF_MAX: usize = 5_000;
const EPS: f64 = 1e-17;
const NEGATIVE_SERIES_MAX_LOSS: f64 = 64.0;

/// A gamma value with an optional scale exponent, `value · e^{log_scale}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPair {
    pub value: ComplexValue,
    pub log_scale: f64,
}

impl GammaPair {
    /// The product as a plain complex number; may overflow.
    pub fn to_complex(self) -> ComplexValue {
        self.value * self.log_scale.exp()
    }
}

fn is_pole(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Lanczos sum and log-gamma for `Re z >= 0.5`.
fn log_gamma_right(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut x = real(LANCZOS[0]);
    for (i, coef) in LANCZOS.iter().enumerate().skip(1) {
        x += coef / (z + i as f64);
    }
    let t = z + (LANCZOS_G + 0.5);
    HALF_LN_2PI + (z + 0.5) * ln_c(t) - t + ln_c(x)
}

/// `log Γ(z)`; the imaginary part is not continued across branch cuts.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_pole(z) {
        return Err(Error::Pole(format!(
            "gamma at non-positive integer {}",
            z.re
        )));
    }
    if z.re < 0.5 {
        let s = sin_pi_c(z);
        Ok(PI.ln() - ln_c(s) - log_gamma_right(ONE - z))
    } else {
        Ok(log_gamma_right(z))
    }
}

/// Γ(z) with the overflow deferred into `log_scale`.
pub fn gamma_pair(z: ComplexValue) -> Result<GammaPair> {
    let lg = log_gamma(z)?;
    if lg.re.abs() <= 690.0 {
        Ok(GammaPair {
            value: lg.exp(),
            log_scale: 0.0,
        })
    } else {
        Ok(GammaPair {
            value: c(0.0, lg.im).exp(),
            log_scale: lg.re,
        })
    }
}

/// Γ(z) by the Lanczos approximation, reflected for `Re z < 1/2`.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    if is_pole(z) {
        return Err(Error::Pole(format!(
            "gamma at non-positive integer {}",
            z.re
        )));
    }
    if z.re < 0.5 {
        let s = sin_pi_c(z);
        return Ok(PI / (s * log_gamma_right(ONE - z).exp()));
    }
    Ok(log_gamma_right(z).exp())
}

/// `1/Γ(z)`, zero at the poles.
pub(crate) fn rgamma(z: ComplexValue) -> ComplexValue {
    if is_pole(z) {
        return ZERO;
    }
    if z.re < 0.5 {
        return sin_pi_c(z) * log_gamma_right(ONE - z).exp() / PI;
    }
    (-log_gamma_right(z)).exp()
}

/// `Σ_{q=1}^{b} 1/q`.
pub fn harmonic_number(b: i64) -> Result<f64> {
    if b < 1 {
        return Err(Error::domain(format!(
            "harmonic number needs b >= 1, got {b}"
        )));
    }
    Ok((1..=b).rev().map(|q| 1.0 / q as f64).sum())
}

/// `Σ z^n / (s)_{n+1}`, converges everywhere but cancels for `Re z ≪ |z|`.
fn lower_series(s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if is_pole(s) {
        return Err(Error::Pole(format!(
            "incomplete gamma series at s = {}",
            s.re
        )));
    }
    let mut term = s.inv();
    let mut sum = term;
    let az = z.norm();
    for n in 1..SERIES_MAX {
        let d = s + n as f64;
        if d.re == 0.0 && d.im == 0.0 {
            return Err(Error::Pole(format!(
                "incomplete gamma series at s = {}",
                s.re
            )));
        }
        term *= z / d;
        sum += term;
        if term.norm() <= EPS * sum.norm() && az < d.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        what: "incomplete gamma series",
        iterations: SERIES_MAX,
    })
}

/// `e^z Σ (−z)^n / (n! (s+n))` with its cancellation factor `max |term| / |sum|`,
/// which is about `e^{|z| + Re z}`.
fn negative_axis_series(s: ComplexValue, z: ComplexValue) -> Result<(ComplexValue, f64)> {
    if is_pole(s) {
        return Err(Error::Pole(format!(
            "incomplete gamma series at s = {}",
            s.re
        )));
    }
    let w = -z;
    let aw = w.norm();
    let mut p = ONE;
    let mut sum = s.inv();
    let mut largest = sum.norm();
    for n in 1..SERIES_MAX {
        p *= w / n as f64;
        let d = s + n as f64;
        if d.re == 0.0 && d.im == 0.0 {
            return Err(Error::Pole(format!(
                "incomplete gamma series at s = {}",
                s.re
            )));
        }
        let term = p / d;
        sum += term;
        largest = largest.max(term.norm());
        if term.norm() <= EPS * sum.norm() && (n as f64) > aw {
            return Ok((z.exp() * sum, largest / sum.norm()));
        }
    }
    Err(Error::NoConvergence {
        what: "incomplete gamma series",
        iterations: SERIES_MAX,
    })
}

/// The `(−z)` series where it loses at most a few digits; the continued
/// fraction is unreliable for `|z| ≈ |s|` in the left half-plane, and this
/// series covers that ground.
fn stable_negative_series(s: ComplexValue, z: ComplexValue) -> Result<Option<ComplexValue>> {
    if z.re >= 0.0 || asymptotic_region(s, z) {
        return Ok(None);
    }
    let (value, loss) = negative_axis_series(s, z)?;
    Ok((loss <= NEGATIVE_SERIES_MAX_LOSS).then_some(value))
}

/// `e^z Γ(s,z) / z^s` by the Legendre continued fraction (modified Lentz).
fn upper_continued_fraction(s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let tiny = 1e-300;
    let mut b = z + 1.0 - s;
    let mut cc = real(1.0 / tiny);
    let mut d = if b.norm() < tiny {
        real(1.0 / tiny)
    } else {
        b.inv()
    };
    let mut h = d;
    for i in 1..CF_MAX {
        let fi = i as f64;
        let an = -fi * (fi - s);
        b += 2.0;
        d = an * d + b;
        if d.norm() < tiny {
            d = real(tiny);
        }
        cc = b + an / cc;
        if cc.norm() < tiny {
            cc = real(tiny);
        }
        d = d.inv();
        let del = d * cc;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence {
        what: "incomplete gamma continued fraction",
        iterations: CF_MAX,
    })
}

/// `e^z Γ(s,z)` by the asymptotic series `z^{s−1} Σ (s−1)…(s−j) / z^j`.
fn upper_asymptotic(s: ComplexValue, z: ComplexValue) -> ComplexValue {
    let mut term = ONE;
    let mut sum = ONE;
    let mut last = f64::INFINITY;
    for j in 1..200 {
        term *= (s - j as f64) / z;
        let t = term.norm();
        if t > last {
            break;
        }
        sum += term;
        if t <= EPS * sum.norm() {
            break;
        }
        last = t;
    }
    pow_c(z, s - 1.0) * sum
}

fn asymptotic_region(s: ComplexValue, z: ComplexValue) -> bool {
    z.norm() > 36.0 + 2.0 * s.norm()
}

fn positive_series_region(s: ComplexValue, z: ComplexValue) -> bool {
    let az = z.norm();
    az <= 3.0
        || az < 0.5 * s.norm()
        || (s.re > 0.0 && az < s.norm())
        || (z.re > 0.0 && z.im.abs() <= 2.0 && az <= 60.0)
}

/// `F(s,z) = Σ_{n≥0} z^n / (s)_{n+1} = e^z z^{−s} γ(s,z)`, entire in `z`.
///
/// Working with `F` instead of `Γ(s,z)` keeps every closed term free of the
/// branch of `z^s`: callers multiply by powers they split themselves.
pub(crate) fn scaled_lower(s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        if is_pole(s) {
            return Err(Error::Pole(format!(
                "incomplete gamma series at s = {}",
                s.re
            )));
        }
        return Ok(s.inv());
    }
    if positive_series_region(s, z) {
        return lower_series(s, z);
    }
    if let Some(f) = stable_negative_series(s, z)? {
        return Ok(f);
    }
    let g = gamma(s)?;
    let upper = if asymptotic_region(s, z) {
        upper_asymptotic(s, z)
    } else {
        pow_c(z, s) * upper_continued_fraction(s, z)?
    };
    Ok(pow_c(z, -s) * (z.exp() * g) - pow_c(z, -s) * upper)
}

/// Upper incomplete gamma `Γ(s,z) = ∫_z^∞ t^{s−1} e^{−t} dt`, principal branch in `z`.
pub fn upper_incomplete_gamma(s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if z.re == 0.0 && z.im == 0.0 {
        if s.re > 0.0 {
            return gamma(s);
        }
        return Err(Error::domain("Γ(s, 0) diverges for Re(s) <= 0"));
    }
    // for Re(s) < 0 the difference Γ(s) − γ(s,z) cancels badly, so the
    // continued fraction takes over there
    if z.norm() <= 3.0 || (z.norm() < s.norm() && s.re > 0.0) {
        return Ok(gamma(s)? - pow_c(z, s) * (-z).exp() * scaled_lower(s, z)?);
    }
    if let Some(f) = stable_negative_series(s, z)? {
        let (g, lower) = (gamma(s)?, pow_c(z, s) * (-z).exp() * f);
        let upper = g - lower;
        // Γ(s) − γ(s,z) may still cancel; the continued fraction does not
        if upper.norm() * NEGATIVE_SERIES_MAX_LOSS >= g.norm().max(lower.norm()) {
            return Ok(upper);
        }
    }
    let scaled = if asymptotic_region(s, z) {
        upper_asymptotic(s, z)
    } else {
        pow_c(z, s) * upper_continued_fraction(s, z)?
    };
    Ok((-z).exp() * scaled)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm()
    }

    /// Stirling series after shifting the argument up by 30.
    fn stirling_gamma(z: ComplexValue) -> ComplexValue {
        let shift = 30;
        let w = z + shift as f64;
        let b = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360360.0,
        ];
        let mut lg = (w - 0.5) * w.ln() - w + HALF_LN_2PI;
        let mut p = w.inv();
        for coef in b {
            lg += coef * p;
            p /= w * w;
        }
        let mut prod = ONE;
        for j in 0..shift {
            prod *= z + j as f64;
        }
        lg.exp() / prod
    }

    #[test]
    fn gamma_examples() {
        assert!(rel(gamma(real(5.0)).unwrap(), real(24.0)) < 1e-14);
        assert!(rel(gamma(real(0.5)).unwrap(), real(PI.sqrt())) < 1e-14);
        let g = gamma(c(1.0, 1.0)).unwrap();
        assert!(rel(g, c(0.498015668118356, -0.154949828301810685)) < 1e-13);
        assert!(rel(g, stirling_gamma(c(1.0, 1.0))) < 1e-13);
        assert!(gamma(real(0.0)).is_err());
        assert!(gamma(real(-3.0)).is_err());
    }

    #[test]
    fn gamma_matches_stirling_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let z = c(rng.gen_range(-20.0..40.0), rng.gen_range(-30.0..30.0));
            if z.norm() > 50.0 || (z.re < 0.0 && z.im.abs() < 0.1) {
                continue;
            }
            assert!(rel(gamma(z).unwrap(), stirling_gamma(z)) < 1e-12, "z={z}");
        }
    }

    #[test]
    fn gamma_recurrence() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut n = 0;
        while n < 10_000 {
            let z = c(rng.gen_range(-30.0..30.0), rng.gen_range(-30.0..30.0));
            if z.norm() > 30.0 {
                continue;
            }
            n += 1;
            let lhs = gamma(z + 1.0).unwrap();
            let rhs = z * gamma(z).unwrap();
            assert!(rel(lhs, rhs) <= 1e-11, "z={z}");
        }
    }

    #[test]
    fn gamma_pair_scaling() {
        let p = gamma_pair(real(5.0)).unwrap();
        assert_eq!(p.log_scale, 0.0);
        assert!(rel(p.value, real(24.0)) < 1e-14);
        let p = gamma_pair(real(300.0)).unwrap();
        assert!(p.log_scale > 690.0);
        assert!((p.value.norm() - 1.0).abs() < 1e-12);
        assert!(rel(rgamma(c(2.5, 0.5)), gamma(c(2.5, 0.5)).unwrap().inv()) < 1e-14);
        assert_eq!(rgamma(real(-2.0)), ZERO);
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_number(1).unwrap(), 1.0);
        assert!((harmonic_number(5).unwrap() - 137.0 / 60.0).abs() < 1e-15);
        assert!((harmonic_number(10).unwrap() - 2.928968253968254).abs() < 1e-15);
        assert!(harmonic_number(0).is_err());
    }

    #[test]
    fn incomplete_gamma_examples() {
        for z in [c(0.3, 0.1), c(-2.0, 5.0), c(10.0, -3.0), c(60.0, 1.0)] {
            assert!(
                rel(upper_incomplete_gamma(ONE, z).unwrap(), (-z).exp()) < 1e-13,
                "z={z}"
            );
        }
        assert!(rel(upper_incomplete_gamma(real(2.0), ZERO).unwrap(), ONE) < 1e-14);
        // brute-force quadrature of t^{1/2} e^{-t} on (1, ∞)
        let v = upper_incomplete_gamma(real(1.5), ONE).unwrap();
        assert!(rel(v, real(0.5072822338117733)) < 1e-12);
        let v = upper_incomplete_gamma(c(2.5, 1.0), c(-3.0, 4.0)).unwrap();
        assert!(rel(v, c(20.901826771511272, 11.481771823539123)) < 1e-11);
    }

    #[test]
    fn incomplete_gamma_at_zero_is_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let s = c(rng.gen_range(0.01..20.0), rng.gen_range(-20.0..20.0));
            let lhs = upper_incomplete_gamma(s, ZERO).unwrap();
            assert!(rel(lhs, gamma(s).unwrap()) <= 1e-11);
        }
    }

    #[test]
    fn incomplete_gamma_recurrence() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut n = 0;
        while n < 2_000 {
            let s = c(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
            let z = c(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0));
            if s.norm() > 20.0 || z.norm() > 20.0 || z.norm() < 1e-3 {
                continue;
            }
            if (s.re - s.re.round()).abs() < 1e-3 && s.im.abs() < 1e-3 && s.re <= 0.5 {
                continue;
            }
            n += 1;
            let lhs = upper_incomplete_gamma(s + 1.0, z).unwrap();
            let rhs = s * upper_incomplete_gamma(s, z).unwrap() + pow_c(z, s) * (-z).exp();
            assert!(rel(lhs, rhs) <= 1e-10, "s={s} z={z} lhs={lhs} rhs={rhs}");
        }
    }

    #[test]
    fn scaled_lower_regions_agree() {
        // every region against the plain series where the series is still accurate
        for (s, z) in [
            (c(2.5, 0.3), c(4.0, 1.0)),
            (c(1.7, -0.4), c(-5.0, 0.5)),
            (c(3.0, 0.0), c(2.0, 4.5)),
            (c(2.2, 0.1), c(-3.5, -4.0)),
        ] {
            let series = lower_series(s, z).unwrap();
            let routed = scaled_lower(s, z).unwrap();
            assert!(rel(routed, series) < 1e-12, "s={s} z={z}");
        }
    }
}
