//! Convergence regions of every formula, checked before any computation.

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::complex::ComplexValue;

const TWO_PI: f64 = 2.0 * PI;
/// `|Im m|` within this of `2π` counts as on the boundary.
pub const BOUNDARY_TOL: f64 = 1e-12;
/// `|Im m|` within this of `2π` earns a warning.
pub const NEAR_BOUNDARY_TOL: f64 = 1e-6;
/// Half-plane parameters within this of their edge earn a warning.
pub const HALFPLANE_WARN_TOL: f64 = 1e-9;
/// Default tolerance of [`classify_b`].
pub const B_CLASS_TOL: f64 = 1e-9;
/// The "auto" variant uses integer formulas for integer `k` up to this.
pub const AUTO_INTEGER_MAX: f64 = 20.0;

/// Which series a request evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Formula {
    PartialLerch,
    FullLerch,
    PartialPolylog,
    FullPolylog,
    Harmonic,
    HarmonicProgression,
    Zeta,
    Hurwitz,
    HurwitzSum,
}

impl Formula {
    pub fn as_str(self) -> &'static str {
        match self {
            Formula::PartialLerch => "lerch-partial",
            Formula::FullLerch => "lerch-full",
            Formula::PartialPolylog => "polylog-partial",
            Formula::FullPolylog => "polylog-full",
            Formula::Harmonic => "harmonic",
            Formula::HarmonicProgression => "hp",
            Formula::Zeta => "zeta",
            Formula::Hurwitz => "hurwitz",
            Formula::HurwitzSum => "hurwitz-sum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PolylogVariant {
    IntegerK,
    AnalyticContinuation,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LerchVariant {
    /// Integer `k`, `2b` not an integer (or the partial sum, which has one formula).
    IntegerKGeneral,
    IntegerKHalfB,
    IntegerKIntB,
    AnalyticContinuation,
    Auto,
}

/// `b`-dependent choice among the integer-`k` full Lerch formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BClass {
    Integer,
    HalfInteger,
    Generic,
}

/// Integer, half-integer or neither, within `tol`; complex `b` is always generic.
pub fn classify_b(b: ComplexValue, tol: f64) -> BClass {
    if b.im != 0.0 {
        return BClass::Generic;
    }
    if (b.re - b.re.round()).abs() <= tol {
        BClass::Integer
    } else if (2.0 * b.re - (2.0 * b.re).round()).abs() <= 2.0 * tol {
        BClass::HalfInteger
    } else {
        BClass::Generic
    }
}

/// Polylogarithm request; `n = None` is the full series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolylogRequest {
    pub m: ComplexValue,
    pub k: ComplexValue,
    pub n: Option<u64>,
    pub variant: PolylogVariant,
}

impl PolylogRequest {
    /// The concrete variant "auto" stands for.
    pub fn resolved_variant(&self) -> PolylogVariant {
        match self.variant {
            PolylogVariant::Auto
                if is_positive_integer(self.k) && self.k.re <= AUTO_INTEGER_MAX =>
            {
                PolylogVariant::IntegerK
            }
            PolylogVariant::Auto => PolylogVariant::AnalyticContinuation,
            v => v,
        }
    }
}

/// Lerch request; `n = None` is the full series `Σ_{j≥0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchRequest {
    pub m: ComplexValue,
    pub k: ComplexValue,
    pub b: ComplexValue,
    pub n: Option<u64>,
    pub variant: LerchVariant,
}

impl LerchRequest {
    /// The concrete variant "auto" stands for.
    pub fn resolved_variant(&self) -> LerchVariant {
        if self.variant != LerchVariant::Auto {
            return self.variant;
        }
        let integer = is_positive_integer(self.k) && self.k.re <= AUTO_INTEGER_MAX;
        if !integer {
            return LerchVariant::AnalyticContinuation;
        }
        if self.n.is_some() {
            return LerchVariant::IntegerKGeneral;
        }
        match classify_b(self.b, B_CLASS_TOL) {
            BClass::Integer => LerchVariant::IntegerKIntB,
            BClass::HalfInteger => LerchVariant::IntegerKHalfB,
            BClass::Generic => LerchVariant::IntegerKGeneral,
        }
    }
}

/// Anything [`check_domain`] can judge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Request {
    Polylog(PolylogRequest),
    Lerch(LerchRequest),
    Harmonic {
        k: ComplexValue,
        n: u64,
    },
    HarmonicProgression {
        k: ComplexValue,
        b: ComplexValue,
        n: u64,
    },
    Zeta {
        k: ComplexValue,
    },
    /// `ζ(k, b+1)`.
    Hurwitz {
        k: ComplexValue,
        b: ComplexValue,
    },
    /// `Σ_{j=2}^{k} m^{k−j}/(k−j)! ζ(j, b)`.
    HurwitzSum {
        m: ComplexValue,
        k: ComplexValue,
        b: ComplexValue,
    },
}

impl Request {
    pub fn formula(&self) -> Formula {
        match self {
            Request::Polylog(r) if r.n.is_some() => Formula::PartialPolylog,
            Request::Polylog(_) => Formula::FullPolylog,
            Request::Lerch(r) if r.n.is_some() => Formula::PartialLerch,
            Request::Lerch(_) => Formula::FullLerch,
            Request::Harmonic { .. } => Formula::Harmonic,
            Request::HarmonicProgression { .. } => Formula::HarmonicProgression,
            Request::Zeta { .. } => Formula::Zeta,
            Request::Hurwitz { .. } => Formula::Hurwitz,
            Request::HurwitzSum { .. } => Formula::HurwitzSum,
        }
    }
}

impl From<PolylogRequest> for Request {
    fn from(r: PolylogRequest) -> Self {
        Request::Polylog(r)
    }
}

impl From<LerchRequest> for Request {
    fn from(r: LerchRequest) -> Self {
        Request::Lerch(r)
    }
}

/// A failed constraint. `tag` is one of the fixed identifiers listed on [`DomainStatus`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub tag: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Warning {
    pub tag: &'static str,
    pub detail: String,
}

/// Outcome of [`check_domain`].
///
/// Violation tags: `m-region`, `boundary-2pi`, `m-zero`, `k-halfplane`,
/// `k-integer`, `b-halfplane`, `zero-base`, `b-variant`, `n-range`.
/// Warning tags: `near-2pi-boundary`, `near-boundary`, `branch-cut`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct DomainStatus {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<Warning>,
}

impl DomainStatus {
    fn violate(&mut self, tag: &'static str, detail: impl Into<String>) {
        self.violations.push(Violation {
            tag,
            detail: detail.into(),
        });
    }

    fn warn(&mut self, tag: &'static str, detail: impl Into<String>) {
        self.warnings.push(Warning {
            tag,
            detail: detail.into(),
        });
    }

    pub fn has_violation(&self, tag: &str) -> bool {
        self.violations.iter().any(|v| v.tag == tag)
    }

    pub fn has_warning(&self, tag: &str) -> bool {
        self.warnings.iter().any(|w| w.tag == tag)
    }
}

impl fmt::Display for DomainStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}: {}", v.tag, v.detail)?;
        }
        Ok(())
    }
}

pub(crate) fn is_positive_integer(k: ComplexValue) -> bool {
    k.im == 0.0 && k.re >= 1.0 && k.re.fract() == 0.0
}

pub(crate) fn is_nonpositive_integer(b: ComplexValue) -> bool {
    b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0
}

fn is_zero(z: ComplexValue) -> bool {
    z.re == 0.0 && z.im == 0.0
}

fn full_series_m(st: &mut DomainStatus, m: ComplexValue, k: ComplexValue) {
    let gap = m.im.abs() - TWO_PI;
    if is_zero(m) {
        st.violate(
            "m-zero",
            "m = 0 has no full-series formula; use the zeta functions",
        );
        return;
    }
    if m.re >= 0.0 && gap > BOUNDARY_TOL {
        st.violate(
            "m-region",
            format!("Re(m) = {} >= 0 and |Im(m)| = {} > 2π", m.re, m.im.abs()),
        );
    }
    if gap.abs() <= BOUNDARY_TOL && k.re <= 1.0 {
        st.violate(
            "boundary-2pi",
            format!("|Im(m)| = 2π requires Re(k) > 1, got {}", k.re),
        );
    }
    if gap.abs() <= NEAR_BOUNDARY_TOL {
        st.warn("near-2pi-boundary", format!("|Im(m)| - 2π = {gap:e}"));
    }
    if m.re < 0.0 && m.re > -HALFPLANE_WARN_TOL && gap > BOUNDARY_TOL {
        st.warn(
            "near-boundary",
            format!("Re(m) = {:e} is next to the excluded region", m.re),
        );
    }
    if m.im == 0.0 && m.re > 0.0 {
        st.warn(
            "branch-cut",
            "e^m lies on the branch cut (1, ∞) of the series' continuation",
        );
    }
}

fn k_above(st: &mut DomainStatus, k: ComplexValue, edge: f64) {
    if !(k.re > edge) {
        st.violate(
            "k-halfplane",
            format!("Re(k) = {} must exceed {edge}", k.re),
        );
    } else if k.re - edge <= HALFPLANE_WARN_TOL {
        st.warn(
            "near-boundary",
            format!("Re(k) = {} is next to {edge}", k.re),
        );
    }
}

fn b_above(st: &mut DomainStatus, b: ComplexValue, edge: f64) {
    if !(b.re > edge) {
        st.violate(
            "b-halfplane",
            format!("Re(b) = {} must exceed {edge}", b.re),
        );
    } else if b.re - edge <= HALFPLANE_WARN_TOL {
        st.warn(
            "near-boundary",
            format!("Re(b) = {} is next to {edge}", b.re),
        );
    }
}

fn k_integer(st: &mut DomainStatus, k: ComplexValue) {
    if !is_positive_integer(k) {
        st.violate("k-integer", format!("k = {k} is not a positive integer"));
    }
}

fn n_positive(st: &mut DomainStatus, n: u64) {
    if n < 1 {
        st.violate("n-range", "n must be at least 1");
    }
}

fn check_polylog(st: &mut DomainStatus, r: &PolylogRequest) {
    let variant = r.resolved_variant();
    match r.n {
        Some(n) => {
            n_positive(st, n);
            if is_zero(r.m) {
                // routed to the harmonic-number integral
                k_above(st, r.k, -1.0);
                return;
            }
        }
        None => full_series_m(st, r.m, r.k),
    }
    match variant {
        PolylogVariant::IntegerK => k_integer(st, r.k),
        _ => k_above(st, r.k, 0.0),
    }
}

fn check_lerch(st: &mut DomainStatus, r: &LerchRequest) {
    let variant = r.resolved_variant();
    let (k, b) = (r.k, r.b);
    if let Some(n) = r.n {
        n_positive(st, n);
        if b.im == 0.0 && b.re.fract() == 0.0 && b.re <= -1.0 && b.re >= -(n as f64) {
            st.violate("zero-base", format!("j + b = 0 at j = {}", -b.re));
        }
        if is_zero(r.m) {
            // routed to the harmonic-progression integral
            k_above(st, k, -1.0);
            b_above(st, b, -1.0);
            return;
        }
        match variant {
            LerchVariant::AnalyticContinuation => {
                k_above(st, k, 0.0);
                let edge = if is_positive_integer(k) { -1.0 } else { 0.0 };
                if !is_zero(b) {
                    b_above(st, b, edge);
                }
            }
            LerchVariant::IntegerKGeneral => k_integer(st, k),
            _ => st.violate(
                "b-variant",
                "the b-specific variants apply to the full series only",
            ),
        }
        return;
    }
    full_series_m(st, r.m, k);
    if is_nonpositive_integer(b) && !is_zero(b) {
        st.violate("zero-base", format!("j + b = 0 at j = {}", -b.re));
    }
    match variant {
        LerchVariant::AnalyticContinuation => {
            k_above(st, k, 0.0);
            b_above(st, b, 0.0);
        }
        LerchVariant::IntegerKGeneral
        | LerchVariant::IntegerKHalfB
        | LerchVariant::IntegerKIntB => {
            k_integer(st, k);
            if is_zero(b) {
                st.violate("zero-base", "b = 0 makes the j = 0 term infinite");
                return;
            }
            let class = classify_b(b, B_CLASS_TOL);
            match (variant, class) {
                (LerchVariant::IntegerKGeneral, BClass::Generic) => {}
                (LerchVariant::IntegerKHalfB, BClass::HalfInteger) => {}
                (LerchVariant::IntegerKIntB, BClass::Integer) => {
                    if b.re < 1.0 {
                        st.violate(
                            "b-variant",
                            "the integer-b variant needs a positive integer b",
                        );
                    }
                }
                _ => st.violate(
                    "b-variant",
                    format!("b = {b} is {class:?}, incompatible with {variant:?}"),
                ),
            }
        }
        LerchVariant::Auto => unreachable!("auto is resolved"),
    }
}

/// Evaluate every constraint of the requested formula without computing it.
pub fn check_domain(request: &Request) -> DomainStatus {
    let mut st = DomainStatus::default();
    match request {
        Request::Polylog(r) => check_polylog(&mut st, r),
        Request::Lerch(r) => check_lerch(&mut st, r),
        Request::Harmonic { k, n } => {
            n_positive(&mut st, *n);
            k_above(&mut st, *k, -1.0);
        }
        Request::HarmonicProgression { k, b, n } => {
            n_positive(&mut st, *n);
            k_above(&mut st, *k, -1.0);
            b_above(&mut st, *b, -1.0);
        }
        Request::Zeta { k } => {
            if !(k.re > 1.0 || k.re < 0.0) {
                st.violate(
                    "k-halfplane",
                    format!("Re(k) = {} is in the critical strip [0, 1]", k.re),
                );
            } else if (k.re - 1.0).abs() <= HALFPLANE_WARN_TOL || k.re.abs() <= HALFPLANE_WARN_TOL {
                st.warn(
                    "near-boundary",
                    format!("Re(k) = {} is next to the critical strip", k.re),
                );
            }
        }
        Request::Hurwitz { k, b } => {
            k_above(&mut st, *k, 1.0);
            if !is_zero(*b) {
                b_above(&mut st, *b, 0.0);
            }
        }
        Request::HurwitzSum { m, k, b } => {
            k_integer(&mut st, *k);
            if is_zero(*m) {
                st.violate("m-zero", "m must be nonzero");
            }
            if is_zero(*b) {
                st.violate("zero-base", "b = 0");
            } else {
                b_above(&mut st, *b, -1.0);
            }
        }
    }
    st.valid = st.violations.is_empty();
    st
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, real};

    fn full_polylog(m: ComplexValue, k: f64) -> Request {
        PolylogRequest {
            m,
            k: real(k),
            n: None,
            variant: PolylogVariant::Auto,
        }
        .into()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_b(real(3.0), B_CLASS_TOL), BClass::Integer);
        assert_eq!(classify_b(real(-0.5), B_CLASS_TOL), BClass::HalfInteger);
        assert_eq!(classify_b(real(0.75), B_CLASS_TOL), BClass::Generic);
        assert_eq!(classify_b(c(3.0, 1e-20), B_CLASS_TOL), BClass::Generic);
        assert_eq!(
            classify_b(real(2.5 + 1e-12), B_CLASS_TOL),
            BClass::HalfInteger
        );
    }

    #[test]
    fn m_region() {
        let st = check_domain(&full_polylog(c(1.0, 7.0), 2.0));
        assert!(!st.valid);
        assert!(st.has_violation("m-region"));
        assert!(check_domain(&full_polylog(c(-1.0, 7.0), 2.0)).valid);
        assert!(check_domain(&full_polylog(c(0.5, 6.0), 2.0)).valid);
    }

    #[test]
    fn boundary_needs_re_k_above_one() {
        let m = c(0.0, TWO_PI);
        let r = LerchRequest {
            m,
            k: real(0.5),
            b: real(0.3),
            n: None,
            variant: LerchVariant::AnalyticContinuation,
        };
        let st = check_domain(&r.into());
        assert!(st.has_violation("boundary-2pi"));
        let st = check_domain(&full_polylog(c(-0.3, -TWO_PI), 1.5));
        assert!(st.valid);
        assert!(st.has_warning("near-2pi-boundary"));
    }

    #[test]
    fn partial_ac_valid() {
        let r = LerchRequest {
            m: c(1.0, 1.0),
            k: real(0.5),
            b: real(0.2),
            n: Some(5),
            variant: LerchVariant::AnalyticContinuation,
        };
        assert!(check_domain(&r.into()).valid);
        let r = LerchRequest { b: real(-0.5), ..r };
        assert!(check_domain(&r.into()).has_violation("b-halfplane"));
        let r = LerchRequest { k: real(2.0), ..r };
        assert!(check_domain(&r.into()).valid);
    }

    #[test]
    fn variants_and_bases() {
        let base = LerchRequest {
            m: real(-1.0),
            k: real(2.0),
            b: real(2.0),
            n: None,
            variant: LerchVariant::Auto,
        };
        assert_eq!(base.resolved_variant(), LerchVariant::IntegerKIntB);
        let r = LerchRequest {
            variant: LerchVariant::IntegerKGeneral,
            ..base
        };
        assert!(check_domain(&r.into()).has_violation("b-variant"));
        let r = LerchRequest {
            b: real(-2.0),
            ..base
        };
        assert!(check_domain(&r.into()).has_violation("zero-base"));
        let r = LerchRequest {
            b: real(-3.0),
            n: Some(5),
            ..base
        };
        assert!(check_domain(&r.into()).has_violation("zero-base"));
        let r = LerchRequest {
            b: real(-3.0),
            n: Some(2),
            ..base
        };
        assert!(check_domain(&r.into()).valid);
        let r = LerchRequest {
            k: c(1.5, 0.2),
            ..base
        };
        assert_eq!(r.resolved_variant(), LerchVariant::AnalyticContinuation);
    }

    #[test]
    fn zeta_and_harmonic() {
        assert!(check_domain(&Request::Zeta { k: real(0.5) }).has_violation("k-halfplane"));
        assert!(check_domain(&Request::Zeta { k: real(-0.5) }).valid);
        assert!(
            check_domain(&Request::Harmonic {
                k: real(-0.9),
                n: 3
            })
            .valid
        );
        assert!(
            !check_domain(&Request::Harmonic {
                k: real(-1.0),
                n: 3
            })
            .valid
        );
        assert!(
            check_domain(&Request::Hurwitz {
                k: real(2.0),
                b: real(0.0)
            })
            .valid
        );
    }

    #[test]
    fn display_lists_violations() {
        let st = check_domain(&full_polylog(c(1.0, 7.0), 2.0));
        assert!(st.to_string().starts_with("m-region"));
    }
}
