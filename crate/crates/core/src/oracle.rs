//! Direct summation of `Σ e^{m(j+b)} / (j+b)^k`.
//!
//! No acceleration of any kind: terms are added one by one with Neumaier
//! compensation, and the infinite series stops once a rigorous tail bound
//! drops below the requested relative tolerance.

use crate::complex::{pow_c, real, ComplexValue, ZERO};
use crate::error::{Error, Result};

/// Largest number of terms the infinite-series oracle will add.
pub const TERM_BUDGET: u64 = 50_000_000;

/// Parameters of one series; `n = None` means the infinite series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSpec {
    pub m: ComplexValue,
    pub k: ComplexValue,
    pub b: ComplexValue,
    pub n: Option<u64>,
    pub start_index: u64,
}

impl SeriesSpec {
    pub fn partial(m: ComplexValue, k: ComplexValue, b: ComplexValue, n: u64) -> Self {
        SeriesSpec {
            m,
            k,
            b,
            n: Some(n),
            start_index: 1,
        }
    }

    pub fn full(m: ComplexValue, k: ComplexValue, b: ComplexValue, start_index: u64) -> Self {
        SeriesSpec {
            m,
            k,
            b,
            n: None,
            start_index,
        }
    }

    fn term(&self, j: u64) -> Result<ComplexValue> {
        let base = self.b + j as f64;
        if base.re == 0.0 && base.im == 0.0 {
            return Err(Error::domain(format!("zero base at j = {j}")));
        }
        Ok((self.m * base).exp() / pow_c(base, self.k))
    }
}

/// Result of an infinite direct sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleValue {
    pub value: ComplexValue,
    /// Upper bound on the modulus of the omitted tail.
    pub tail_bound: f64,
    pub terms: u64,
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: [f64; 2],
    comp: [f64; 2],
}

fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if sum.abs() >= x.abs() {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: ComplexValue) {
        neumaier(&mut self.sum[0], &mut self.comp[0], x.re);
        neumaier(&mut self.sum[1], &mut self.comp[1], x.im);
    }

    pub fn value(&self) -> ComplexValue {
        ComplexValue::new(self.sum[0] + self.comp[0], self.sum[1] + self.comp[1])
    }
}

impl std::iter::FromIterator<ComplexValue> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = ComplexValue>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// `Σ_{j=start}^{n} e^{m(j+b)} / (j+b)^k`, compensated.
pub fn partial_sum_direct(spec: &SeriesSpec) -> Result<ComplexValue> {
    let n = spec
        .n
        .ok_or_else(|| Error::domain("partial sum needs a finite n"))?;
    let mut acc = CompensatedSum::new();
    for j in spec.start_index..=n {
        acc.add(spec.term(j)?);
    }
    Ok(acc.value())
}

/// Infinite sum with a tail bound below `tol · |value|`.
///
/// Available for `Re(m) < 0` (geometric bound) and for `Re(m) = 0` with
/// `Re(k) > 1` (integral bound); anything else is `OracleUnavailable`.
pub fn full_series_direct(spec: &SeriesSpec, tol: f64) -> Result<OracleValue> {
    if spec.n.is_some() {
        return Err(Error::domain("full series needs n = ∞"));
    }
    if !(tol > 0.0) {
        return Err(Error::Config("oracle tolerance must be positive".into()));
    }
    let (m, k, b) = (spec.m, spec.k, spec.b);
    let geometric = m.re < 0.0;
    if !geometric && !(m.re == 0.0 && k.re > 1.0) {
        return Err(Error::OracleUnavailable(format!("m = {m}, k = {k}")));
    }
    let ratio = m.re.exp();
    // |e^{m(j+b)}| when Re(m) = 0
    let head = (-m.im * b.im).exp();
    let mut acc = CompensatedSum::new();
    let mut j = spec.start_index;
    let mut next = spec.term(j)?;
    while j < spec.start_index + TERM_BUDGET {
        acc.add(next);
        j += 1;
        next = spec.term(j)?;
        let x = j as f64 + b.re;
        if x <= 1.0 || j < spec.start_index + 8 {
            continue;
        }
        let bound = if geometric {
            // sup over the tail of |t_{i+1} / t_i|
            let modulus = (1.0 + 1.0 / x).powf((-k.re).max(0.0));
            let phase = (k.im.abs() * b.im.abs() / (x * x)).exp();
            let rho = ratio * modulus * phase;
            if rho >= 1.0 {
                continue;
            }
            next.norm() / (1.0 - rho)
        } else {
            if j % 64 != 0 {
                continue;
            }
            // Σ_{i≥j} (i + Re b)^{-Re k} ≤ ∫_{x-1}^∞ t^{-Re k} dt, times the phase bound
            let phase = (k.im.abs() * (b.im.abs() / (x - 1.0)).atan()).exp();
            head * phase * (x - 1.0).powf(1.0 - k.re) / (k.re - 1.0)
        };
        if bound <= tol * acc.value().norm() {
            return Ok(OracleValue {
                value: acc.value(),
                tail_bound: bound,
                terms: j - spec.start_index,
            });
        }
    }
    Err(Error::OracleUnavailable(format!(
        "term budget of {TERM_BUDGET} exhausted"
    )))
}

/// Hurwitz zeta `ζ(k, b) = Σ_{q≥0} (q+b)^{-k}` by direct summation, `Re(k) > 1`.
pub fn hurwitz_direct(k: ComplexValue, b: ComplexValue, tol: f64) -> Result<OracleValue> {
    full_series_direct(&SeriesSpec::full(ZERO, k, b, 0), tol)
}

/// Riemann zeta by direct summation, `Re(k) > 1`.
pub fn zeta_direct(k: ComplexValue, tol: f64) -> Result<OracleValue> {
    hurwitz_direct(k, real(1.0), tol)
}
