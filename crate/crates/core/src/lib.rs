//! Closed-form-plus-integral evaluation of the Lerch transcendent, the
//! polylogarithm, the Hurwitz zeta function and generalized harmonic sums.
//!
//! Every formula is written as a handful of elementary closed terms plus one
//! or two integrals over `(0, 1)`, evaluated with double-exponential
//! quadrature. The integer-order formulas are valid for positive integer `k`;
//! the analytically continued ones are valid on the half-plane `Re(k) > 0`.
//!
//! The series being represented are
//!
//! ```text
//! partial Lerch    Σ_{j=1}^{n} e^{m(j+b)} / (j+b)^k
//! full Lerch       Σ_{j≥0 or j≥1} e^{m(j+b)} / (j+b)^k      (e^{mb} Φ(e^m, k, b))
//! polylog          Σ_{j=1}^{n or ∞} e^{mj} / j^k            (Li_k(e^m))
//! harmonic         Σ_{j=1}^{n} j^{-k},   HP_k(n) = Σ_{q=1}^{n} (q+b)^{-k}
//! ```
//!
//! The [`oracle`] module sums these series directly and is the ground truth
//! used by the tests and by the CLI sweep tool.
//!
//! ```
//! use lerch_core::{polylog, ComplexValue, QuadConfig};
//!
//! let cfg = QuadConfig::default();
//! let m = ComplexValue::new(0.5f64.ln(), 0.0);
//! let li2 = polylog::full_polylog_ac(m, ComplexValue::new(2.0, 0.0), &cfg).unwrap();
//! let exact = std::f64::consts::PI.powi(2) / 12.0 - 2f64.ln().powi(2) / 2.0;
//! assert!((li2.value.re - exact).abs() < 1e-12);
//! ```

pub mod complex;
pub mod domain;
pub mod error;
pub mod eval;
pub mod gamma;
pub mod identities;
mod kernels;
pub mod lerch;
pub mod oracle;
pub mod polylog;
pub mod quadrature;

pub use complex::{complex_pow, cot_pi, coth_half, principal_log, ComplexValue};
pub use domain::{
    check_domain, classify_b, BClass, DomainStatus, Formula, LerchRequest, LerchVariant,
    PolylogRequest, PolylogVariant, Request, Violation, Warning,
};
pub use error::{Error, Result};
pub use eval::{evaluate, EvalResult, Method};
pub use gamma::{gamma, harmonic_number, upper_incomplete_gamma, GammaPair};
pub use oracle::{full_series_direct, partial_sum_direct, OracleValue, SeriesSpec};
pub use quadrature::{integrate_01, QuadConfig, QuadResult};
