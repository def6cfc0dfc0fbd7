//! Turning command-line parameters into library requests and oracle sums.

use clap::ValueEnum;
use lerch_core::{
    check_domain, evaluate, full_series_direct, partial_sum_direct, ComplexValue, DomainStatus,
    Error, EvalResult, LerchRequest, LerchVariant, Method, PolylogRequest, PolylogVariant,
    QuadConfig, Request, SeriesSpec,
};

const ZERO: ComplexValue = ComplexValue::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FnId {
    LerchPartial,
    LerchFull,
    PolylogPartial,
    PolylogFull,
    Harmonic,
    Hp,
    Zeta,
    Hurwitz,
}

impl FnId {
    pub fn name(self) -> &'static str {
        match self {
            FnId::LerchPartial => "lerch-partial",
            FnId::LerchFull => "lerch-full",
            FnId::PolylogPartial => "polylog-partial",
            FnId::PolylogFull => "polylog-full",
            FnId::Harmonic => "harmonic",
            FnId::Hp => "hp",
            FnId::Zeta => "zeta",
            FnId::Hurwitz => "hurwitz",
        }
    }

    fn uses_m(self) -> bool {
        matches!(
            self,
            FnId::LerchPartial | FnId::LerchFull | FnId::PolylogPartial | FnId::PolylogFull
        )
    }

    fn uses_b(self) -> bool {
        matches!(
            self,
            FnId::LerchPartial | FnId::LerchFull | FnId::Hp | FnId::Hurwitz
        )
    }

    fn uses_n(self) -> bool {
        matches!(
            self,
            FnId::LerchPartial | FnId::PolylogPartial | FnId::Harmonic | FnId::Hp
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Integer,
    Ac,
    Oracle,
}

/// Parameters as given; those the function does not use are dropped.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub m: Option<ComplexValue>,
    pub k: Option<ComplexValue>,
    pub b: Option<ComplexValue>,
    pub n: Option<u64>,
}

impl Params {
    /// Keep the parameters `f` uses and check that none is missing.
    pub fn for_fn(self, f: FnId) -> Result<Params, String> {
        let need = |present: bool, name: &str| {
            if present {
                Ok(())
            } else {
                Err(format!("--fn {} needs --{name}", f.name()))
            }
        };
        need(self.k.is_some(), "k")?;
        if f.uses_m() {
            need(self.m.is_some(), "m")?;
        }
        if f.uses_b() {
            need(self.b.is_some(), "b")?;
        }
        if f.uses_n() {
            need(self.n.is_some(), "n")?;
        }
        Ok(Params {
            m: self.m.filter(|_| f.uses_m()),
            k: self.k,
            b: self.b.filter(|_| f.uses_b()),
            n: self.n.filter(|_| f.uses_n()),
        })
    }

    fn m(&self) -> ComplexValue {
        self.m.unwrap_or(ZERO)
    }

    fn k(&self) -> ComplexValue {
        self.k.unwrap_or(ZERO)
    }

    fn b(&self) -> ComplexValue {
        self.b.unwrap_or(ZERO)
    }

    fn n(&self) -> u64 {
        self.n.unwrap_or(0)
    }
}

/// The library request for `f`; `method` picks the formula where there is a choice.
pub fn build_request(f: FnId, p: &Params, method: MethodArg) -> Request {
    let polylog_variant = match method {
        MethodArg::Integer => PolylogVariant::IntegerK,
        MethodArg::Ac => PolylogVariant::AnalyticContinuation,
        MethodArg::Auto | MethodArg::Oracle => PolylogVariant::Auto,
    };
    let lerch = |n: Option<u64>| {
        let mut r = LerchRequest {
            m: p.m(),
            k: p.k(),
            b: p.b(),
            n,
            variant: LerchVariant::Auto,
        };
        r.variant = match method {
            MethodArg::Ac => LerchVariant::AnalyticContinuation,
            MethodArg::Integer => match r.resolved_variant() {
                // non-integer k: let the integer formula reject it
                LerchVariant::AnalyticContinuation => LerchVariant::IntegerKGeneral,
                v => v,
            },
            MethodArg::Auto | MethodArg::Oracle => LerchVariant::Auto,
        };
        Request::from(r)
    };
    let polylog = |n: Option<u64>| {
        Request::from(PolylogRequest {
            m: p.m(),
            k: p.k(),
            n,
            variant: polylog_variant,
        })
    };
    match f {
        FnId::LerchPartial => lerch(Some(p.n())),
        FnId::LerchFull => lerch(None),
        FnId::PolylogPartial => polylog(Some(p.n())),
        FnId::PolylogFull => polylog(None),
        FnId::Harmonic => Request::Harmonic { k: p.k(), n: p.n() },
        FnId::Hp => Request::HarmonicProgression {
            k: p.k(),
            b: p.b(),
            n: p.n(),
        },
        FnId::Zeta => Request::Zeta { k: p.k() },
        FnId::Hurwitz => Request::Hurwitz { k: p.k(), b: p.b() },
    }
}

/// The defining series of `f` at `p`; `n = None` for the infinite ones.
pub fn series_of(f: FnId, p: &Params) -> SeriesSpec {
    let (m, k, b, n) = (p.m(), p.k(), p.b(), p.n());
    match f {
        FnId::LerchPartial => SeriesSpec::partial(m, k, b, n),
        FnId::LerchFull => SeriesSpec::full(m, k, b, 0),
        FnId::PolylogPartial => SeriesSpec::partial(m, k, ZERO, n),
        FnId::PolylogFull => SeriesSpec::full(m, k, ZERO, 1),
        FnId::Harmonic => SeriesSpec::partial(ZERO, k, ZERO, n),
        FnId::Hp => SeriesSpec::partial(ZERO, k, b, n),
        FnId::Zeta => SeriesSpec::full(ZERO, k, ZERO, 1),
        FnId::Hurwitz => SeriesSpec::full(ZERO, k, b, 1),
    }
}

/// Direct summation of the series, as an [`EvalResult`] with the tail bound as error.
pub fn oracle(f: FnId, p: &Params, tol: f64) -> Result<EvalResult, Error> {
    let spec = series_of(f, p);
    let (value, bound) = if spec.n.is_some() {
        (partial_sum_direct(&spec)?, 0.0)
    } else {
        let v = full_series_direct(&spec, tol)?;
        (v.value, v.tail_bound)
    };
    Ok(EvalResult {
        value,
        abs_err_estimate: bound,
        method: Method::Oracle,
        warnings: Vec::new(),
        quad_levels: 0,
        quad_nodes: 0,
    })
}

/// What one evaluation produced, domain status included.
pub struct Evaluation {
    pub domain: DomainStatus,
    pub outcome: Result<EvalResult, Error>,
}

pub fn run(
    f: FnId,
    p: &Params,
    method: MethodArg,
    cfg: &QuadConfig,
    oracle_tol: f64,
) -> Evaluation {
    let request = build_request(f, p, method);
    if method == MethodArg::Oracle {
        let domain = DomainStatus {
            valid: true,
            violations: Vec::new(),
            warnings: Vec::new(),
        };
        return Evaluation {
            domain,
            outcome: oracle(f, p, oracle_tol),
        };
    }
    let outcome = evaluate(&request, cfg);
    let domain = match &outcome {
        Err(Error::Rejected(st)) => st.clone(),
        Ok(r) => {
            let mut st = check_domain(&request);
            st.warnings = r.warnings.clone();
            st
        }
        Err(_) => check_domain(&request),
    };
    Evaluation { domain, outcome }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn missing_and_unused_params() {
        let p = Params {
            m: Some(c(1.0, 0.0)),
            k: Some(c(2.0, 0.0)),
            b: None,
            n: Some(3),
        };
        assert!(p.for_fn(FnId::LerchPartial).is_err());
        let z = p.for_fn(FnId::Zeta).unwrap();
        assert_eq!((z.m, z.b, z.n), (None, None, None));
        assert_eq!(p.for_fn(FnId::PolylogPartial).unwrap().n, Some(3));
    }

    #[test]
    fn integer_method_rejects_fractional_k() {
        let p = Params {
            m: Some(c(-1.0, 0.0)),
            k: Some(c(1.5, 0.0)),
            b: Some(c(0.3, 0.0)),
            n: None,
        };
        let e = run(
            FnId::LerchFull,
            &p,
            MethodArg::Integer,
            &QuadConfig::default(),
            1e-14,
        );
        assert!(matches!(e.outcome, Err(Error::Rejected(_))));
        assert!(e.domain.has_violation("k-integer"));
    }

    #[test]
    fn oracle_matches_formula() {
        let p = Params {
            m: Some(c(-0.7, 0.4)),
            k: Some(c(2.0, 0.0)),
            b: Some(c(0.5, 0.0)),
            n: None,
        };
        let cfg = QuadConfig::default();
        let f = run(FnId::LerchFull, &p, MethodArg::Auto, &cfg, 1e-14)
            .outcome
            .unwrap();
        let o = run(FnId::LerchFull, &p, MethodArg::Oracle, &cfg, 1e-14)
            .outcome
            .unwrap();
        assert_eq!(o.method, Method::Oracle);
        assert!((f.value - o.value).norm() < 1e-10 * o.value.norm());
    }
}
