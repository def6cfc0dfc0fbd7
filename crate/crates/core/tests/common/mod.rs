#![allow(dead_code)]

use lerch_core::oracle::hurwitz_direct;
use lerch_core::{full_series_direct, partial_sum_direct, ComplexValue, QuadConfig, SeriesSpec};

pub fn cfg() -> QuadConfig {
    QuadConfig::default()
}

pub fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

pub fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

pub fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm()
}

pub fn direct_partial(m: ComplexValue, k: ComplexValue, b: ComplexValue, n: u64) -> ComplexValue {
    partial_sum_direct(&SeriesSpec::partial(m, k, b, n)).expect("finite sum")
}

/// Infinite series from `start`, summed until the tail bound is below `1e-14` relative.
pub fn direct_full(m: ComplexValue, k: ComplexValue, b: ComplexValue, start: u64) -> ComplexValue {
    full_series_direct(&SeriesSpec::full(m, k, b, start), 1e-14)
        .expect("oracle region")
        .value
}

pub fn direct_hurwitz(k: ComplexValue, b: ComplexValue, tol: f64) -> ComplexValue {
    hurwitz_direct(k, b, tol).expect("oracle region").value
}

/// `m` with `lo <= |m| <= hi` and uniform argument.
pub fn polar(r: f64, theta: f64) -> ComplexValue {
    ComplexValue::from_polar(r, theta)
}
