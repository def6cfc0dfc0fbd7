//! Complex literals: `a`, `bi`, `a+bi`, `a-bi`, with optional exponents.

use lerch_core::ComplexValue;

/// Parse a complex literal; `i` alone (or `-i`) means unit imaginary.
pub fn parse_complex(text: &str) -> Result<ComplexValue, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("malformed complex literal {text:?}");
    let Some(body) = s.strip_suffix('i') else {
        return match s.parse::<f64>() {
            Ok(re) if re.is_finite() => Ok(ComplexValue::new(re, 0.0)),
            _ => Err(bad()),
        };
    };
    // the last sign that is not the sign of an exponent splits re from im
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = if re.is_empty() {
        0.0
    } else {
        re.parse::<f64>().map_err(|_| bad())?
    };
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(ComplexValue::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(s: &str, re: f64, im: f64) {
        assert_eq!(parse_complex(s).unwrap(), ComplexValue::new(re, im), "{s}");
    }

    #[test]
    fn accepted_forms() {
        ok("2", 2.0, 0.0);
        ok("-0.25", -0.25, 0.0);
        ok("3i", 0.0, 3.0);
        ok("-i", 0.0, -1.0);
        ok("i", 0.0, 1.0);
        ok("1+7i", 1.0, 7.0);
        ok("1-7i", 1.0, -7.0);
        ok("-0.5-2.5i", -0.5, -2.5);
        ok("1e-3+2.5E+2i", 1e-3, 250.0);
        ok("-1e-3-2e-2i", -1e-3, -2e-2);
        ok("2e3i", 0.0, 2000.0);
        ok(" 1 + 2i ", 1.0, 2.0);
    }

    #[test]
    fn rejected_forms() {
        for s in [
            "", "abc", "1+", "1+2j", "1++2i", "1e+i", "nan", "inf", "1+2ii",
        ] {
            assert!(parse_complex(s).is_err(), "{s}");
        }
    }
}
