//! Evaluation results and the request dispatcher.

use serde::Serialize;

use crate::complex::{ComplexValue, ZERO};
use crate::domain::{check_domain, DomainStatus, LerchVariant, PolylogVariant, Request, Warning};
use crate::error::{Error, Result};
use crate::quadrature::{QuadConfig, QuadResult};
use crate::{lerch, polylog};

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    IntegerK,
    IntegerKHalfB,
    IntegerKIntB,
    AnalyticContinuation,
    HarmonicIntegral,
    HarmonicProgressionIntegral,
    ZetaIntegral,
    ZetaReflected,
    HurwitzIntegral,
    HurwitzSumClosed,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::IntegerK => "integer-k",
            Method::IntegerKHalfB => "integer-k-half-b",
            Method::IntegerKIntB => "integer-k-int-b",
            Method::AnalyticContinuation => "analytic-continuation",
            Method::HarmonicIntegral => "harmonic-integral",
            Method::HarmonicProgressionIntegral => "hp-integral",
            Method::ZetaIntegral => "zeta-integral",
            Method::ZetaReflected => "zeta-reflected",
            Method::HurwitzIntegral => "hurwitz-integral",
            Method::HurwitzSumClosed => "hurwitz-sum-closed",
            Method::Oracle => "oracle",
        }
    }
}

/// A value with its error estimate and provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub value: ComplexValue,
    /// Sum of the scaled quadrature error estimates plus a rounding term.
    pub abs_err_estimate: f64,
    pub method: Method,
    pub warnings: Vec<Warning>,
    /// Deepest quadrature level used by any integral (0 if none).
    pub quad_levels: u32,
    pub quad_nodes: usize,
}

impl EvalResult {
    pub(crate) fn with_warnings(mut self, warnings: Vec<Warning>) -> Self {
        let mut all = warnings;
        all.append(&mut self.warnings);
        self.warnings = all;
        self
    }
}

/// Accumulates closed terms and scaled integrals into one [`EvalResult`].
pub(crate) struct Tally {
    value: ComplexValue,
    err: f64,
    levels: u32,
    nodes: usize,
}

const ROUNDING: f64 = 4.0 * f64::EPSILON;

impl Tally {
    pub fn new() -> Self {
        Tally {
            value: ZERO,
            err: 0.0,
            levels: 0,
            nodes: 0,
        }
    }

    pub fn term(&mut self, x: ComplexValue) -> &mut Self {
        self.value += x;
        self.err += ROUNDING * x.norm();
        self
    }

    /// Add `coef · ∫`, failing if the integral did not converge.
    pub fn integral(&mut self, coef: ComplexValue, r: &QuadResult) -> Result<&mut Self> {
        if !r.converged {
            return Err(Error::Quadrature {
                estimate: r.abs_err_estimate,
                levels: r.levels_used,
            });
        }
        let x = coef * r.value;
        self.value += x;
        self.err += coef.norm() * r.abs_err_estimate + ROUNDING * x.norm();
        self.levels = self.levels.max(r.levels_used);
        self.nodes += r.nodes_evaluated;
        Ok(self)
    }

    /// Fold in a sub-result scaled by `coef`.
    pub fn result(&mut self, coef: ComplexValue, r: &EvalResult) -> &mut Self {
        self.value += coef * r.value;
        self.err += coef.norm() * r.abs_err_estimate;
        self.levels = self.levels.max(r.quad_levels);
        self.nodes += r.quad_nodes;
        self
    }

    pub fn finish(&self, method: Method) -> EvalResult {
        EvalResult {
            value: self.value,
            abs_err_estimate: self.err,
            method,
            warnings: Vec::new(),
            quad_levels: self.levels,
            quad_nodes: self.nodes,
        }
    }
}

/// Domain check shared by every public operation.
pub(crate) fn admit(request: &Request) -> Result<DomainStatus> {
    let st = check_domain(request);
    if st.valid {
        Ok(st)
    } else {
        Err(Error::Rejected(st))
    }
}

/// Largest integer order the integer-`k` formulas accept; `k!` overflows beyond it.
pub const INTEGER_K_MAX: u32 = 170;

fn integer_k(k: ComplexValue) -> Result<u32> {
    if k.im == 0.0 && k.re >= 1.0 && k.re.fract() == 0.0 && k.re <= INTEGER_K_MAX as f64 {
        Ok(k.re as u32)
    } else {
        Err(Error::Rejected(check_domain_integer(k)))
    }
}

fn check_domain_integer(k: ComplexValue) -> DomainStatus {
    DomainStatus {
        valid: false,
        violations: vec![crate::domain::Violation {
            tag: "k-integer",
            detail: format!("k = {k} is not a positive integer <= {INTEGER_K_MAX}"),
        }],
        warnings: Vec::new(),
    }
}

/// Evaluate any request with its resolved variant.
///
/// Full Lerch requests return `Σ_{j≥0}`, so the integer-`k` formulas get the
/// `j = 0` term added here.
pub fn evaluate(request: &Request, cfg: &QuadConfig) -> Result<EvalResult> {
    match *request {
        Request::Polylog(r) => {
            let variant = r.resolved_variant();
            match (r.n, variant) {
                (Some(n), PolylogVariant::IntegerK) => {
                    polylog::partial_polylog_integer(r.m, integer_k(r.k)?, n, cfg)
                }
                (Some(n), _) => polylog::partial_polylog_ac(r.m, r.k, n, cfg),
                (None, PolylogVariant::IntegerK) => {
                    polylog::full_polylog_integer(r.m, integer_k(r.k)?, cfg)
                }
                (None, _) => polylog::full_polylog_ac(r.m, r.k, cfg),
            }
        }
        Request::Lerch(r) => {
            let variant = r.resolved_variant();
            match (r.n, variant) {
                (Some(n), LerchVariant::AnalyticContinuation) => {
                    lerch::partial_lerch_ac(r.m, r.k, r.b, n, cfg)
                }
                (Some(n), _) => lerch::partial_lerch_integer(r.m, integer_k(r.k)?, r.b, n, cfg),
                (None, LerchVariant::AnalyticContinuation) => {
                    lerch::full_lerch_ac(r.m, r.k, r.b, cfg)
                }
                (None, v) => {
                    let rest =
                        lerch::full_lerch_integer_variant(r.m, integer_k(r.k)?, r.b, v, cfg)?;
                    let head = (r.m * r.b).exp() / crate::complex::complex_pow(r.b, r.k)?;
                    let mut t = Tally::new();
                    t.term(head).result(crate::complex::ONE, &rest);
                    Ok(t.finish(rest.method).with_warnings(rest.warnings))
                }
            }
        }
        Request::Harmonic { k, n } => polylog::harmonic_partial(k, n, cfg),
        Request::HarmonicProgression { k, b, n } => lerch::hp_partial(k, b, n, cfg),
        Request::Zeta { k } => {
            if k.re < 0.0 {
                polylog::zeta_reflected(k, cfg)
            } else {
                polylog::zeta_int_rep(k, cfg)
            }
        }
        Request::Hurwitz { k, b } => lerch::hurwitz_zeta(k, b, cfg),
        Request::HurwitzSum { m, k, b } => lerch::hurwitz_sum_closed(m, integer_k(k)?, b, cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::real;

    #[test]
    fn tally_rejects_unconverged() {
        let r = QuadResult {
            value: real(1.0),
            abs_err_estimate: 0.1,
            levels_used: 12,
            nodes_evaluated: 10,
            converged: false,
        };
        assert!(matches!(
            Tally::new().integral(real(1.0), &r),
            Err(Error::Quadrature { .. })
        ));
    }

    #[test]
    fn tally_scales_errors() {
        let r = QuadResult {
            value: real(2.0),
            abs_err_estimate: 1e-12,
            levels_used: 5,
            nodes_evaluated: 100,
            converged: true,
        };
        let mut t = Tally::new();
        t.term(real(1.0));
        t.integral(real(-3.0), &r).unwrap();
        let e = t.finish(Method::IntegerK);
        assert_eq!(e.value, real(-5.0));
        assert!(e.abs_err_estimate >= 3e-12);
        assert_eq!(e.quad_levels, 5);
        assert_eq!(e.quad_nodes, 100);
    }
}
