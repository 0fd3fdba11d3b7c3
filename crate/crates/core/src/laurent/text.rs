//! Text interchange format: `coeff*t^exp` terms joined by `+`, highest
//! exponent first, e.g. `4*t^2 + -9*t^1 + 4*t^0`. The zero polynomial is `0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LaurentPoly, Rational};
use crate::error::Error;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*t^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        if s.is_empty() {
            return Err(parse_err(s, "empty input"));
        }
        let mut terms = Vec::new();
        for raw in s.split('+') {
            terms.push(parse_term(raw.trim())?);
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn parse_err(input: &str, reason: &str) -> Error {
    let mut shown: String = input.chars().take(40).collect();
    if input.chars().count() > 40 {
        shown.push('…');
    }
    Error::Parse(format!("polynomial `{shown}`: {reason}"))
}

fn parse_term(term: &str) -> Result<(i64, Rational), Error> {
    let Some((coeff, rest)) = term.split_once('*') else {
        return Err(parse_err(term, "expected `coeff*t^exp`"));
    };
    let rest = rest.trim_start();
    let Some(rest) = rest.strip_prefix('t') else {
        return Err(parse_err(term, "expected `t` after `*`"));
    };
    let Some(exp) = rest.trim_start().strip_prefix('^') else {
        return Err(parse_err(term, "expected `^` after `t`"));
    };
    let coeff = parse_rational(coeff.trim()).ok_or_else(|| parse_err(term, "bad coefficient"))?;
    let exp = parse_exponent(exp.trim()).ok_or_else(|| parse_err(term, "bad exponent"))?;
    Ok((exp, coeff))
}

fn is_signed_digits(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn parse_exponent(s: &str) -> Option<i64> {
    if !is_signed_digits(s) {
        return None;
    }
    s.parse().ok()
}

/// `[-]digits[/digits]` with a nonzero denominator.
pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    if !is_signed_digits(num) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        None => BigInt::from(1),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            d.parse().ok()?
        }
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}
