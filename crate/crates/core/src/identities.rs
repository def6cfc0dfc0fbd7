//! Closed-form integrals used to simplify the full-series formulas, exposed
//! so they can be checked on their own.

use std::f64::consts::PI;

use crate::complex::{
    cos_pi_c, cot_pi_c, cot_pi_pair, expm1_c, pi_cot_pi_minus_inv, real, sin_pi_c, ComplexValue,
};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_split, QuadConfig};

const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// An integral next to the value it should equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityValue {
    pub integral: ComplexValue,
    pub closed_form: ComplexValue,
    pub abs_err_estimate: f64,
}

impl IdentityValue {
    pub fn rel_err(&self) -> f64 {
        (self.integral - self.closed_form).norm() / self.closed_form.norm()
    }
}

/// `∫_0^1 −(2π/m)(1−u) cot(πu) + 2/(mu) du = 2 log(2π)/m`.
pub fn cot_log_identity(m: ComplexValue, cfg: &QuadConfig) -> Result<IdentityValue> {
    if m.re == 0.0 && m.im == 0.0 {
        return Err(Error::domain("m must be nonzero"));
    }
    let r = integrate_split(
        |u, v| {
            if u < 0.5 {
                real(-2.0 * (v * pi_cot_pi_minus_inv(u) - 1.0)) / m
            } else {
                real(-2.0 * PI * v * cot_pi_pair(u, v) + 2.0 / u) / m
            }
        },
        &[],
        cfg,
    )?;
    if !r.converged {
        return Err(Error::Quadrature {
            estimate: r.abs_err_estimate,
            levels: r.levels_used,
        });
    }
    Ok(IdentityValue {
        integral: r.value,
        closed_form: 2.0 * LN_2PI / m,
        abs_err_estimate: r.abs_err_estimate,
    })
}

/// `∫_0^1 π(sin(2πbu)/sin(2πb) − 1) cot(πu) + (1−u)^b/u du = log 2π − 1/(2b) + π cot(πb)/2`
/// for `Re(b) > −1` with `2b` not an integer.
pub fn cot_shift_identity(b: ComplexValue, cfg: &QuadConfig) -> Result<IdentityValue> {
    if !(b.re > -1.0) {
        return Err(Error::domain("the identity needs Re(b) > -1"));
    }
    let sb = sin_pi_c(2.0 * b);
    if sb.norm() == 0.0 {
        return Err(Error::Pole(format!("sin(2πb) vanishes at b = {b}")));
    }
    let r = integrate_split(
        |u, v| {
            let cot = cot_pi_pair(u, v);
            if u < 0.5 {
                -pi_cot_pi_minus_inv(u)
                    + expm1_c(b * v.ln()) / u
                    + PI * sin_pi_c(2.0 * b * u) / sb * cot
            } else {
                let d = -2.0 * cos_pi_c(b * (1.0 + u)) * sin_pi_c(b * v) / sb;
                PI * d * cot + (b * v.ln()).exp() / u
            }
        },
        &[],
        cfg,
    )?;
    if !r.converged {
        return Err(Error::Quadrature {
            estimate: r.abs_err_estimate,
            levels: r.levels_used,
        });
    }
    let closed_form = LN_2PI - 0.5 / b + 0.5 * PI * cot_pi_c(b)?;
    Ok(IdentityValue {
        integral: r.value,
        closed_form,
        abs_err_estimate: r.abs_err_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::c;

    #[test]
    fn identities_hold() {
        let cfg = QuadConfig::default();
        for m in [real(2.0), c(-1.0, 1.0)] {
            let r = cot_log_identity(m, &cfg).unwrap();
            assert!(r.rel_err() < 1e-12, "m={m}: {r:?}");
        }
        for b in [real(0.3), c(0.7, 0.1), real(-0.6)] {
            let r = cot_shift_identity(b, &cfg).unwrap();
            assert!(r.rel_err() < 1e-11, "b={b}: {r:?}");
        }
        assert!(cot_shift_identity(real(0.5), &cfg).is_err());
    }
}
