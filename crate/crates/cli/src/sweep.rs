//! Grid sweeps of a formula against its direct-summation oracle.

use std::fmt::Write as _;

use lerch_core::{Error, QuadConfig};
use rayon::prelude::*;

use crate::output::sci;
use crate::request::{self, FnId, MethodArg, Params};

/// Grid points per sweep, both axes together.
pub const MAX_POINTS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    MRe,
    MIm,
    KRe,
    KIm,
    BRe,
    BIm,
    N,
}

/// One axis: `param.component:start:stop:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub target: Target,
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Axis {
    pub fn parse(text: &str) -> Result<Axis, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let [param, start, stop, step] = parts[..] else {
            return Err(format!("axis {text:?} is not param:start:stop:step"));
        };
        let target = match param {
            "m" | "m.re" => Target::MRe,
            "m.im" => Target::MIm,
            "k" | "k.re" => Target::KRe,
            "k.im" => Target::KIm,
            "b" | "b.re" => Target::BRe,
            "b.im" => Target::BIm,
            "n" => Target::N,
            _ => return Err(format!("unknown axis parameter {param:?}")),
        };
        let num = |s: &str| s.parse::<f64>().ok().filter(|x| x.is_finite());
        let (Some(start), Some(stop), Some(step)) = (num(start), num(stop), num(step)) else {
            return Err(format!("axis {text:?} has a malformed number"));
        };
        if !(step > 0.0) || stop < start {
            return Err(format!("axis {text:?} needs step > 0 and stop >= start"));
        }
        if (stop - start) / step >= MAX_POINTS as f64 {
            return Err(format!("axis {text:?} has more than {MAX_POINTS} points"));
        }
        if target == Target::N && (start < 0.0 || start.fract() != 0.0 || step.fract() != 0.0) {
            return Err("the n axis needs whole-number start and step".into());
        }
        Ok(Axis {
            target,
            start,
            stop,
            step,
        })
    }

    pub fn values(&self) -> Vec<f64> {
        // tolerate the rounding of (stop − start)/step just below a whole number
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| self.start + i as f64 * self.step)
            .collect()
    }

    fn apply(&self, p: &mut Params, x: f64) {
        let set = |z: &mut Option<lerch_core::ComplexValue>, re: bool| {
            let mut v = z.unwrap_or_default();
            if re {
                v.re = x;
            } else {
                v.im = x;
            }
            *z = Some(v);
        };
        match self.target {
            Target::MRe => set(&mut p.m, true),
            Target::MIm => set(&mut p.m, false),
            Target::KRe => set(&mut p.k, true),
            Target::KIm => set(&mut p.k, false),
            Target::BRe => set(&mut p.b, true),
            Target::BIm => set(&mut p.b, false),
            Target::N => p.n = Some(x as u64),
        }
    }
}

pub struct SweepSpec {
    pub function: FnId,
    pub fixed: Params,
    pub method: MethodArg,
    pub axis1: Axis,
    pub axis2: Option<Axis>,
    /// Relative error above which a point is flagged `fail`.
    pub tol: f64,
    pub oracle_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    Ok,
    Fail,
    Domain,
    NoOracle,
    Error,
}

impl Flag {
    fn as_str(self) -> &'static str {
        match self {
            Flag::Ok => "ok",
            Flag::Fail => "fail",
            Flag::Domain => "domain",
            Flag::NoOracle => "no-oracle",
            Flag::Error => "error",
        }
    }
}

pub struct Row {
    pub x1: f64,
    pub x2: Option<f64>,
    pub formula: Option<lerch_core::ComplexValue>,
    pub oracle: Option<lerch_core::ComplexValue>,
    pub rel_err: Option<f64>,
    pub flag: Flag,
}

fn point(spec: &SweepSpec, cfg: &QuadConfig, x1: f64, x2: Option<f64>) -> Row {
    let mut p = spec.fixed;
    spec.axis1.apply(&mut p, x1);
    if let (Some(a), Some(x)) = (spec.axis2, x2) {
        a.apply(&mut p, x);
    }
    let mut row = Row {
        x1,
        x2,
        formula: None,
        oracle: None,
        rel_err: None,
        flag: Flag::Error,
    };
    let p = match p.for_fn(spec.function) {
        Ok(p) => p,
        Err(_) => return row,
    };
    let formula = match request::run(spec.function, &p, spec.method, cfg, spec.oracle_tol).outcome {
        Ok(r) => r.value,
        Err(e) => {
            row.flag = if e.is_domain() {
                Flag::Domain
            } else {
                Flag::Error
            };
            return row;
        }
    };
    row.formula = Some(formula);
    let oracle = match request::oracle(spec.function, &p, spec.oracle_tol) {
        Ok(r) => r.value,
        Err(Error::OracleUnavailable(_)) | Err(Error::Domain(_)) => {
            row.flag = Flag::NoOracle;
            return row;
        }
        Err(_) => return row,
    };
    row.oracle = Some(oracle);
    let diff = (formula - oracle).norm();
    let rel = if oracle.norm() > 0.0 {
        diff / oracle.norm()
    } else {
        diff
    };
    row.rel_err = Some(rel);
    row.flag = if rel <= spec.tol {
        Flag::Ok
    } else {
        Flag::Fail
    };
    row
}

/// Evaluate every grid point, in parallel, in grid order.
pub fn run(spec: &SweepSpec, cfg: &QuadConfig) -> Result<Vec<Row>, String> {
    let xs = spec.axis1.values();
    let ys: Vec<Option<f64>> = match spec.axis2 {
        Some(a) => a.values().into_iter().map(Some).collect(),
        None => vec![None],
    };
    if xs.len().saturating_mul(ys.len()) > MAX_POINTS {
        return Err(format!("sweep has more than {MAX_POINTS} grid points"));
    }
    let grid: Vec<(f64, Option<f64>)> = xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .collect();
    Ok(grid
        .par_iter()
        .map(|&(x, y)| point(spec, cfg, x, y))
        .collect())
}

pub const HEADER: &str =
    "axis1,axis2,formula_re,formula_im,oracle_re,oracle_im,rel_err,domain_flag";

pub fn csv(rows: &[Row]) -> String {
    let opt = |x: Option<f64>| x.map(sci).unwrap_or_default();
    let mut s = String::with_capacity(rows.len() * 160);
    s.push_str(HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            sci(r.x1),
            opt(r.x2),
            opt(r.formula.map(|z| z.re)),
            opt(r.formula.map(|z| z.im)),
            opt(r.oracle.map(|z| z.re)),
            opt(r.oracle.map(|z| z.im)),
            opt(r.rel_err),
            r.flag.as_str()
        );
    }
    s
}

/// Counts per flag and the max and median relative error over compared points.
pub fn summary(rows: &[Row]) -> String {
    let count = |f: Flag| rows.iter().filter(|r| r.flag == f).count();
    let mut errs: Vec<f64> = rows.iter().filter_map(|r| r.rel_err).collect();
    errs.sort_by(f64::total_cmp);
    let (max, median) = match errs.len() {
        0 => ("n/a".to_string(), "n/a".to_string()),
        len => {
            let mid = if len % 2 == 1 {
                errs[len / 2]
            } else {
                0.5 * (errs[len / 2 - 1] + errs[len / 2])
            };
            (format!("{:.3e}", errs[len - 1]), format!("{mid:.3e}"))
        }
    };
    format!(
        "summary: {} points, ok {}, fail {}, domain {}, no-oracle {}, error {}, max rel_err {max}, median rel_err {median}",
        rows.len(),
        count(Flag::Ok),
        count(Flag::Fail),
        count(Flag::Domain),
        count(Flag::NoOracle),
        count(Flag::Error)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use lerch_core::ComplexValue;

    #[test]
    fn axis_grammar() {
        let a = Axis::parse("m.re:-3:-0.5:0.5").unwrap();
        assert_eq!(a.target, Target::MRe);
        assert_eq!(a.values().len(), 6);
        assert_eq!(Axis::parse("m.im:-3:3:1").unwrap().values().len(), 7);
        // 0.1 steps do not land exactly on stop
        assert_eq!(Axis::parse("k:0.1:2:0.1").unwrap().values().len(), 20);
        assert_eq!(
            Axis::parse("n:1:10:3").unwrap().values(),
            vec![1.0, 4.0, 7.0, 10.0]
        );
        for bad in [
            "m.re:0:1",
            "q:0:1:1",
            "m:0:1:0",
            "m:1:0:0.1",
            "m:0:1e7:1e-3",
            "n:0.5:3:1",
            "m:a:1:1",
        ] {
            assert!(Axis::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn domain_points_carry_no_values() {
        let spec = SweepSpec {
            function: FnId::PolylogFull,
            fixed: Params {
                m: None,
                k: Some(ComplexValue::new(2.0, 0.0)),
                b: None,
                n: None,
            },
            method: MethodArg::Auto,
            axis1: Axis::parse("m.re:-0.5:0.5:0.5").unwrap(),
            axis2: Some(Axis::parse("m.im:7:7:1").unwrap()),
            tol: 1e-8,
            oracle_tol: 1e-14,
        };
        let rows = run(&spec, &QuadConfig::default()).unwrap();
        let flags: Vec<Flag> = rows.iter().map(|r| r.flag).collect();
        assert_eq!(flags, vec![Flag::Ok, Flag::Domain, Flag::Domain]);
        let text = csv(&rows);
        let last = text.lines().last().unwrap();
        assert_eq!(
            last,
            "5.0000000000000000e-1,7.0000000000000000e0,,,,,,domain"
        );
        assert!(summary(&rows).contains("ok 1, fail 0, domain 2"));
    }
}
