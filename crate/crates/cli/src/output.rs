//! Result records in plain text and JSON.

use lerch_core::{ComplexValue, DomainStatus, Violation, Warning};
use serde::Serialize;

use crate::request::{Evaluation, FnId, Params};

#[derive(Serialize)]
struct ParamsRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
}

#[derive(Serialize)]
struct DomainRecord<'a> {
    valid: bool,
    violations: &'a [Violation],
    warnings: &'a [Warning],
}

#[derive(Serialize)]
struct QuadRecord {
    levels: u32,
    nodes: usize,
}

/// Field order is the output order.
#[derive(Serialize)]
struct Record<'a> {
    function: &'static str,
    params: ParamsRecord,
    value: Option<[f64; 2]>,
    abs_err_estimate: Option<f64>,
    method: Option<&'static str>,
    domain: DomainRecord<'a>,
    quadrature: Option<QuadRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn pair(z: ComplexValue) -> [f64; 2] {
    [z.re, z.im]
}

fn record<'a>(f: FnId, p: &Params, e: &'a Evaluation) -> Record<'a> {
    let ok = e.outcome.as_ref().ok();
    Record {
        function: f.name(),
        params: ParamsRecord {
            m: p.m.map(pair),
            k: p.k.map(pair),
            b: p.b.map(pair),
            n: p.n,
        },
        value: ok.map(|r| pair(r.value)),
        abs_err_estimate: ok.map(|r| r.abs_err_estimate),
        method: ok.map(|r| r.method.as_str()),
        domain: DomainRecord {
            valid: e.domain.valid,
            violations: &e.domain.violations,
            warnings: &e.domain.warnings,
        },
        quadrature: ok.map(|r| QuadRecord {
            levels: r.quad_levels,
            nodes: r.quad_nodes,
        }),
        error: match &e.outcome {
            Err(err) if e.domain.valid => Some(err.to_string()),
            _ => None,
        },
    }
}

/// One JSON object and a newline; serde_json prints shortest round-trip floats.
pub fn json(f: FnId, p: &Params, e: &Evaluation) -> String {
    let mut s = serde_json::to_string(&record(f, p, e)).expect("record serializes");
    s.push('\n');
    s
}

/// `re` and `im` with 17 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn complex_text(z: ComplexValue) -> String {
    format!("{} {}", sci(z.re), sci(z.im))
}

fn tags<T>(items: &[T], tag: impl Fn(&T) -> (&'static str, &str)) -> String {
    items
        .iter()
        .map(|x| {
            let (t, d) = tag(x);
            format!("{t} ({d})")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

fn domain_text(st: &DomainStatus) -> String {
    if st.valid {
        "valid".into()
    } else {
        format!("rejected: {}", tags(&st.violations, |v| (v.tag, &v.detail)))
    }
}

pub fn plain(f: FnId, p: &Params, e: &Evaluation) -> String {
    let mut lines = vec![format!("function          {}", f.name())];
    for (name, v) in [("m", p.m), ("k", p.k), ("b", p.b)] {
        if let Some(z) = v {
            lines.push(format!("{name:<18}{}", complex_text(z)));
        }
    }
    if let Some(n) = p.n {
        lines.push(format!("n                 {n}"));
    }
    match &e.outcome {
        Ok(r) => {
            lines.push(format!("value             {}", complex_text(r.value)));
            lines.push(format!("abs_err_estimate  {}", sci(r.abs_err_estimate)));
            lines.push(format!("method            {}", r.method.as_str()));
            lines.push(format!(
                "quadrature        {} levels, {} nodes",
                r.quad_levels, r.quad_nodes
            ));
        }
        Err(err) if e.domain.valid => lines.push(format!("error             {err}")),
        Err(_) => {}
    }
    lines.push(format!("domain            {}", domain_text(&e.domain)));
    if !e.domain.warnings.is_empty() {
        lines.push(format!(
            "warnings          {}",
            tags(&e.domain.warnings, |w| (w.tag, &w.detail))
        ));
    }
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use lerch_core::{Error, EvalResult, Method};

    fn sample(outcome: Result<EvalResult, Error>, domain: DomainStatus) -> Evaluation {
        Evaluation { domain, outcome }
    }

    fn valid() -> DomainStatus {
        DomainStatus {
            valid: true,
            violations: Vec::new(),
            warnings: Vec::new(),
        }
    }

    #[test]
    fn json_field_order_and_omitted_params() {
        let p = Params {
            m: None,
            k: Some(ComplexValue::new(2.0, 0.0)),
            b: None,
            n: None,
        };
        let r = EvalResult {
            value: ComplexValue::new(1.5, -0.25),
            abs_err_estimate: 1e-15,
            method: Method::ZetaIntegral,
            warnings: Vec::new(),
            quad_levels: 6,
            quad_nodes: 400,
        };
        let text = json(FnId::Zeta, &p, &sample(Ok(r), valid()));
        assert_eq!(
            text,
            "{\"function\":\"zeta\",\"params\":{\"k\":[2.0,0.0]},\"value\":[1.5,-0.25],\
             \"abs_err_estimate\":1e-15,\"method\":\"zeta-integral\",\
             \"domain\":{\"valid\":true,\"violations\":[],\"warnings\":[]},\
             \"quadrature\":{\"levels\":6,\"nodes\":400}}\n"
        );
    }

    #[test]
    fn rejection_has_null_value() {
        let p = Params {
            m: None,
            k: Some(ComplexValue::new(-2.0, 0.0)),
            b: None,
            n: None,
        };
        let st = DomainStatus {
            valid: false,
            violations: vec![Violation {
                tag: "k-halfplane",
                detail: "Re(k) <= 0".into(),
            }],
            warnings: Vec::new(),
        };
        let text = json(
            FnId::Zeta,
            &p,
            &sample(Err(Error::Rejected(st.clone())), st),
        );
        assert!(text.contains("\"value\":null"));
        assert!(text.contains("\"tag\":\"k-halfplane\""));
        assert!(!text.contains("\"error\""));
    }

    #[test]
    fn seventeen_digits() {
        assert_eq!(sci(0.1), "1.0000000000000001e-1");
        assert_eq!(sci(-3.0), "-3.0000000000000000e0");
    }
}
