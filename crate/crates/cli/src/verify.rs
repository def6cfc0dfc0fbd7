//! Built-in verification suites. Every check prints one report line.

use std::f64::consts::{LN_2, PI};

use clap::ValueEnum;
use lerch_core::identities::{cot_log_identity, cot_shift_identity};
use lerch_core::{
    complex_pow, evaluate, full_series_direct, gamma, partial_sum_direct, upper_incomplete_gamma,
    ComplexValue, LerchRequest, LerchVariant, PolylogRequest, PolylogVariant, QuadConfig, Request,
    SeriesSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Quadrature,
    Identities,
    Gamma,
}

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn rel(got: ComplexValue, want: ComplexValue) -> f64 {
    let d = (got - want).norm();
    if want.norm() > 0.0 {
        d / want.norm()
    } else {
        d
    }
}

/// Report lines and the overall verdict.
#[derive(Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub failed: usize,
}

impl Report {
    fn check(&mut self, suite: &str, name: &str, err: Result<f64, String>, tol: f64) {
        let (pass, detail) = match err {
            Ok(e) => (e <= tol, format!("rel err {e:.2e} (tol {tol:.0e})")),
            Err(msg) => (false, msg),
        };
        if !pass {
            self.failed += 1;
        }
        let mark = if pass { "PASS" } else { "FAIL" };
        self.lines.push(format!("{mark} {suite} {name}: {detail}"));
    }

    /// Worst relative error of a batch, as one check.
    fn batch(&mut self, suite: &str, name: &str, errs: Vec<Result<f64, String>>, tol: f64) {
        let count = errs.len();
        let mut worst = 0.0f64;
        for e in errs {
            match e {
                Ok(x) if x.is_nan() => {
                    return self.check(suite, name, Err("NaN error".into()), tol)
                }
                Ok(x) => worst = worst.max(x),
                Err(msg) => return self.check(suite, name, Err(msg), tol),
            }
        }
        self.check(suite, &format!("{name} ({count} points)"), Ok(worst), tol);
    }
}

fn quadrature(r: &mut Report, cfg: &QuadConfig) {
    for m in [c(2.0, 0.0), c(-1.0, 1.0), c(0.5, -3.0)] {
        let e = cot_log_identity(m, cfg)
            .map(|v| v.rel_err())
            .map_err(|e| e.to_string());
        r.check("quadrature", &format!("cot-log m={m}"), e, 1e-9);
    }
    for b in [c(0.3, 0.0), c(0.7, 0.1), c(-0.4, 0.2), c(1.3, 0.0)] {
        let e = cot_shift_identity(b, cfg)
            .map(|v| v.rel_err())
            .map_err(|e| e.to_string());
        r.check("quadrature", &format!("cot-shift b={b}"), e, 1e-8);
    }
}

fn against(
    request: Request,
    want: lerch_core::Result<ComplexValue>,
    cfg: &QuadConfig,
) -> Result<f64, String> {
    let want = want.map_err(|e| format!("oracle: {e}"))?;
    let got = evaluate(&request, cfg).map_err(|e| format!("{request:?}: {e}"))?;
    Ok(rel(got.value, want))
}

fn partial(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    n: u64,
) -> lerch_core::Result<ComplexValue> {
    partial_sum_direct(&SeriesSpec::partial(m, k, b, n))
}

fn full(
    m: ComplexValue,
    k: ComplexValue,
    b: ComplexValue,
    start: u64,
) -> lerch_core::Result<ComplexValue> {
    full_series_direct(&SeriesSpec::full(m, k, b, start), 1e-14).map(|v| v.value)
}

fn polar(rng: &mut ChaCha8Rng, r_max: f64) -> ComplexValue {
    ComplexValue::from_polar(rng.gen_range(0.05..=r_max), rng.gen_range(-PI..PI))
}

fn identities(r: &mut Report, cfg: &QuadConfig) {
    const S: &str = "identities";
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e4c);
    let zero = c(0.0, 0.0);
    let lerch = |m, k, b, n, variant| {
        Request::from(LerchRequest {
            m,
            k,
            b,
            n,
            variant,
        })
    };
    let polylog = |m, k, n, variant| Request::from(PolylogRequest { m, k, n, variant });

    let errs = (0..20)
        .map(|_| {
            let (m, k) = (polar(&mut rng, 2.0), c(rng.gen_range(1..=5) as f64, 0.0));
            let (b, n) = (
                c(rng.gen_range(0.1..2.0), rng.gen_range(-1.0..1.0)),
                rng.gen_range(1..=30),
            );
            against(
                lerch(m, k, b, Some(n), LerchVariant::IntegerKGeneral),
                partial(m, k, b, n),
                cfg,
            )
        })
        .collect();
    r.batch(S, "integer-k partial Lerch vs direct sum", errs, 1e-9);

    let errs = (0..20)
        .map(|_| {
            let (m, k) = (
                polar(&mut rng, 2.0),
                c(rng.gen_range(0.2..3.0), rng.gen_range(-1.0..1.0)),
            );
            let n = rng.gen_range(1..=30);
            against(
                polylog(m, k, Some(n), PolylogVariant::AnalyticContinuation),
                partial(m, k, zero, n),
                cfg,
            )
        })
        .collect();
    r.batch(S, "AC partial polylog vs direct sum", errs, 1e-8);

    let errs = (0..20)
        .map(|_| {
            let (m, k) = (
                polar(&mut rng, 2.0),
                c(rng.gen_range(0.2..3.0), rng.gen_range(-1.0..1.0)),
            );
            let (b, n) = (
                c(rng.gen_range(0.2..1.5), rng.gen_range(-1.0..1.0)),
                rng.gen_range(1..=30),
            );
            against(
                lerch(m, k, b, Some(n), LerchVariant::AnalyticContinuation),
                partial(m, k, b, n),
                cfg,
            )
        })
        .collect();
    r.batch(S, "AC partial Lerch vs direct sum", errs, 1e-8);

    let errs = (0..10)
        .map(|_| {
            let m = c(rng.gen_range(-1.5..-0.1), rng.gen_range(-PI..PI));
            let k = c(rng.gen_range(0.2..3.0), rng.gen_range(-1.0..1.0));
            against(
                polylog(m, k, None, PolylogVariant::AnalyticContinuation),
                full(m, k, zero, 1),
                cfg,
            )
        })
        .collect();
    r.batch(S, "AC full polylog vs direct sum", errs, 1e-8);

    let errs = (0..10)
        .map(|_| {
            let m = c(rng.gen_range(-1.5..-0.1), rng.gen_range(-PI..PI));
            let k = c(rng.gen_range(0.2..3.0), rng.gen_range(-1.0..1.0));
            let b = c(rng.gen_range(0.2..1.5), rng.gen_range(-1.0..1.0));
            against(
                lerch(m, k, b, None, LerchVariant::AnalyticContinuation),
                full(m, k, b, 0),
                cfg,
            )
        })
        .collect();
    r.batch(S, "AC full Lerch vs direct sum", errs, 1e-8);

    let errs = (0..12)
        .map(|i| {
            let m = c(rng.gen_range(-1.5..-0.1), rng.gen_range(-PI..PI));
            let k = c(rng.gen_range(1..=4) as f64, 0.0);
            // generic, half-integer and integer b in turn
            let b = match i % 3 {
                0 => c(rng.gen_range(0.1..0.4), rng.gen_range(-0.5..0.5)),
                1 => c(0.5 + rng.gen_range(0..2) as f64, 0.0),
                _ => c(rng.gen_range(1..=2) as f64, 0.0),
            };
            against(
                lerch(m, k, b, None, LerchVariant::Auto),
                full(m, k, b, 0),
                cfg,
            )
        })
        .collect();
    r.batch(S, "integer-k full Lerch variants vs direct sum", errs, 1e-8);

    let errs = (0..10)
        .map(|_| {
            let k = c(rng.gen_range(-0.9..3.0), rng.gen_range(-1.0..1.0));
            let (b, n) = (c(rng.gen_range(0.0..1.5), 0.0), rng.gen_range(1..=40));
            let h = against(Request::Harmonic { k, n }, partial(zero, k, zero, n), cfg)?;
            let hp = against(
                Request::HarmonicProgression { k, b, n },
                partial(zero, k, b, n),
                cfg,
            )?;
            Ok(h.max(hp))
        })
        .collect();
    r.batch(S, "harmonic and HP sums vs direct sum", errs, 1e-9);

    let constant = |req: Request, want: f64| against(req, Ok(c(want, 0.0)), cfg);
    let half = c(0.5f64.ln(), 0.0);
    r.check(
        S,
        "zeta(2)",
        constant(Request::Zeta { k: c(2.0, 0.0) }, PI * PI / 6.0),
        1e-10,
    );
    r.check(
        S,
        "zeta(-1)",
        constant(Request::Zeta { k: c(-1.0, 0.0) }, -1.0 / 12.0),
        1e-10,
    );
    let li1 = polylog(
        half,
        c(1.0, 0.0),
        None,
        PolylogVariant::AnalyticContinuation,
    );
    r.check(S, "Li1(1/2)", constant(li1, LN_2), 1e-9);
    let li2 = polylog(half, c(2.0, 0.0), None, PolylogVariant::Auto);
    r.check(
        S,
        "Li2(1/2)",
        constant(li2, PI * PI / 12.0 - LN_2 * LN_2 / 2.0),
        1e-9,
    );
    let hurwitz = Request::Hurwitz {
        k: c(2.0, 0.0),
        b: c(0.5, 0.0),
    };
    r.check(
        S,
        "zeta(2, 3/2)",
        constant(hurwitz, PI * PI / 2.0 - 4.0),
        1e-9,
    );
}

fn gamma_suite(r: &mut Report) {
    const S: &str = "gamma";
    // 20-digit references
    let known = [
        (c(0.5, 0.0), c(1.0, 0.0), c(0.278_805_585_280_661_98, 0.0)),
        (
            c(2.5, 1.0),
            c(3.0, -2.0),
            c(-0.681_844_436_690_727_3, 0.224_929_498_228_333_5),
        ),
        (
            c(-1.5, 0.5),
            c(2.0, 4.0),
            c(0.001_156_890_641_276_254_9, 0.000_874_591_836_899_325_6),
        ),
        (
            c(0.5, 3.0),
            c(0.0, 10.0),
            c(-0.003_190_686_825_724_882_2, 0.002_287_809_607_298_003),
        ),
        (
            c(4.0, -2.0),
            c(-6.0, 3.0),
            c(5_081_697.399_955_083, 15_450_849.299_371_23),
        ),
    ];
    for (s, z, want) in known {
        let e = upper_incomplete_gamma(s, z)
            .map(|g| rel(g, want))
            .map_err(|e| e.to_string());
        r.check(S, &format!("Gamma({s}, {z})"), e, 1e-12);
    }
    let e = gamma(c(0.3, 2.2))
        .map(|g| rel(g, c(0.048_604_518_408_609_137, -0.047_093_861_956_136_239)));
    r.check(S, "Gamma(0.3+2.2i)", e.map_err(|e| e.to_string()), 1e-13);

    // Γ(s+1, z) = s Γ(s, z) + z^s e^{−z}
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a33);
    let errs = (0..40)
        .map(|_| {
            let s = c(rng.gen_range(0.1..8.0), rng.gen_range(-8.0..8.0));
            let z = polar(&mut rng, 30.0);
            let next = upper_incomplete_gamma(s + 1.0, z).map_err(|e| e.to_string())?;
            let this = upper_incomplete_gamma(s, z).map_err(|e| e.to_string())?;
            let zs = complex_pow(z, s).map_err(|e| e.to_string())?;
            let rhs = s * this + zs * (-z).exp();
            Ok((next - rhs).norm() / next.norm().max(rhs.norm()))
        })
        .collect();
    r.batch(
        S,
        "recurrence Gamma(s+1,z) = s Gamma(s,z) + z^s e^-z",
        errs,
        1e-9,
    );

    // Γ(s) Γ(1−s) = π / sin(πs)
    let errs = (0..20)
        .map(|_| {
            let s = c(rng.gen_range(-3.0..3.0), rng.gen_range(-5.0..5.0));
            let lhs =
                gamma(s).map_err(|e| e.to_string())? * gamma(1.0 - s).map_err(|e| e.to_string())?;
            Ok(rel(lhs, PI / (s * PI).sin()))
        })
        .collect();
    r.batch(
        S,
        "reflection Gamma(s) Gamma(1-s) = pi / sin(pi s)",
        errs,
        1e-12,
    );
}

pub fn run(suite: Suite, cfg: &QuadConfig) -> Report {
    let mut r = Report::default();
    if matches!(suite, Suite::All | Suite::Quadrature) {
        quadrature(&mut r, cfg);
    }
    if matches!(suite, Suite::All | Suite::Identities) {
        identities(&mut r, cfg);
    }
    if matches!(suite, Suite::All | Suite::Gamma) {
        gamma_suite(&mut r);
    }
    r
}
