mod common;

use common::{c, cfg, direct_partial, rel};
use lerch_core::oracle::full_series_direct;
use lerch_core::quadrature::integrate_split;
use lerch_core::{complex_pow, upper_incomplete_gamma, ComplexValue, SeriesSpec};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        failure_persistence: None,
        rng_seed: RngSeed::Fixed(0x5eed_0001),
        ..Config::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn quadrature_is_linear(
        a in -3.0..3.0f64, f1 in 0.5..6.0f64, f2 in 0.1..2.0f64,
        alpha in (-2.0..2.0f64, -2.0..2.0f64), beta in (-2.0..2.0f64, -2.0..2.0f64),
    ) {
        let (alpha, beta) = (c(alpha.0, alpha.1), c(beta.0, beta.1));
        let f = |u: f64, _: f64| c((f1 * u).sin() + a * u * u, (-u.ln()).powf(0.3));
        let g = |u: f64, v: f64| c((f2 * u).exp(), u.sqrt() * v.ln());
        let q = cfg();
        let rf = integrate_split(f, &[], &q).unwrap();
        let rg = integrate_split(g, &[], &q).unwrap();
        let both = integrate_split(|u, v| alpha * f(u, v) + beta * g(u, v), &[], &q).unwrap();
        prop_assert!(rf.converged && rg.converged && both.converged);
        let want = alpha * rf.value + beta * rg.value;
        let budget = alpha.norm() * rf.abs_err_estimate + beta.norm() * rg.abs_err_estimate
            + both.abs_err_estimate + 1e-13 * want.norm().max(1.0);
        prop_assert!((both.value - want).norm() <= budget, "{} vs {}", both.value, want);
    }

    #[test]
    fn incomplete_gamma_recurrence(
        s in (0.2..12.0f64, -15.0..15.0f64), z in (0.3..12.0f64, -3.1..3.1f64),
    ) {
        let s = c(s.0, s.1);
        let z = ComplexValue::from_polar(z.0, z.1);
        let lhs = upper_incomplete_gamma(s + 1.0, z).unwrap();
        let rhs = s * upper_incomplete_gamma(s, z).unwrap() + complex_pow(z, s).unwrap() * (-z).exp();
        prop_assert!(rel(lhs, rhs) < 1e-9, "s={} z={}: {} vs {}", s, z, lhs, rhs);
    }

    #[test]
    fn oracle_partial_recurrence(
        m in (-3.0..3.0f64, -3.0..3.0f64), k in (-2.0..4.0f64, -3.0..3.0f64),
        b in (0.05..3.0f64, -2.0..2.0f64), n in 2u64..200,
    ) {
        let (m, k, b) = (c(m.0, m.1), c(k.0, k.1), c(b.0, b.1));
        let step = direct_partial(m, k, b, n) - direct_partial(m, k, b, n - 1);
        let base = b + n as f64;
        let term = (m * base).exp() / complex_pow(base, k).unwrap();
        let scale = direct_partial(m, k, b, n).norm().max(term.norm());
        prop_assert!((step - term).norm() <= 64.0 * f64::EPSILON * scale);
    }

    #[test]
    fn oracle_halving_tol_stays_within_tail_bound(
        m in (-2.0..-0.05f64, -3.0..3.0f64), k in (0.2..4.0f64, -2.0..2.0f64), b in (0.1..3.0f64, -1.0..1.0f64),
    ) {
        let spec = SeriesSpec::full(c(m.0, m.1), c(k.0, k.1), c(b.0, b.1), 0);
        let coarse = full_series_direct(&spec, 1e-8).unwrap();
        let fine = full_series_direct(&spec, 5e-9).unwrap();
        prop_assert!((fine.value - coarse.value).norm() <= coarse.tail_bound);
    }
}
