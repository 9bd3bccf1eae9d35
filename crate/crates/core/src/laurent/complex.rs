use num_complex::Complex64;

use crate::{Error, Result};

pub type ComplexScalar = Complex64;

/// Parses `"a+bi"`, `"a-bi"`, `"a"`, `"bi"` and `"i"` forms. Exponent
/// notation is accepted in either part; whitespace is ignored.
pub fn parse_complex(text: &str) -> Result<ComplexScalar> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::ComplexLiteral(text.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    let parse_f = |x: &str| -> Result<f64> {
        let v: f64 = x.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let Some(body) = s.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(parse_f(&s)?, 0.0));
    };
    // split at the last sign that is not at the start and not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => parse_f(x)?,
    };
    Ok(Complex64::new(parse_f(re)?, im))
}

/// Formats as `a+bi` / `a-bi`, inverse to [`parse_complex`].
pub fn format_complex(z: ComplexScalar) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
