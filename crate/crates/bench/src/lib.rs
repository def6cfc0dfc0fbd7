//! Parameter sets shared by the benchmarks.

use num_complex::Complex64;

/// `(m, k, b, n)` points inside every formula's domain.
pub const POINTS: [(f64, f64, f64, f64, f64, u64); 3] = [
    // m.re, m.im, k, b.re, b.im, n
    (-0.7, 0.4, 2.0, 0.6, 0.0, 10),
    (0.5, -1.5, 3.0, 1.3, 0.2, 40),
    (-2.0, 2.5, 1.0, 0.25, -0.1, 5),
];

pub fn point(i: usize) -> (Complex64, f64, Complex64, u64) {
    let (mr, mi, k, br, bi, n) = POINTS[i];
    (Complex64::new(mr, mi), k, Complex64::new(br, bi), n)
}
