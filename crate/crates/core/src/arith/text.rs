//! Text syntax shared by the quadratic scalar kinds:
//! `a+b*sqrt(D)`, `c*sqrt(D1)*sqrt(D2)`, with rational coefficients `p/q`.

use super::rational::parse_rational;
use super::{ArithError, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// A parsed term: coefficient times the product of square roots of the
/// listed (not necessarily square-free) positive integers.
pub(crate) type RawTerm = (Rational, Vec<BigInt>);

pub(crate) fn parse_radical_sum(text: &str) -> Result<Vec<RawTerm>, ArithError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ArithError::parse(text, "empty"));
    }
    let mut pieces = Vec::new();
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in compact.chars() {
        let splits = match c {
            '+' => true,
            '-' => !matches!(prev, None | Some('+') | Some('*') | Some('/') | Some('(')),
            _ => false,
        };
        if splits {
            pieces.push(std::mem::take(&mut current));
            if c == '-' {
                current.push('-');
            }
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    pieces.push(current);

    pieces
        .iter()
        .map(|p| parse_term(text, p))
        .collect::<Result<Vec<_>, _>>()
}

fn parse_term(whole: &str, term: &str) -> Result<RawTerm, ArithError> {
    if term.is_empty() {
        return Err(ArithError::parse(whole, "empty term"));
    }
    let mut coef = Rational::one();
    let mut roots = Vec::new();
    for factor in term.split('*') {
        let (neg, body) = match factor.strip_prefix('-') {
            Some(rest) if rest.starts_with("sqrt(") => (true, rest),
            _ => (false, factor),
        };
        if let Some(inner) = body.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            let n: BigInt = inner
                .parse()
                .map_err(|_| ArithError::parse(whole, "bad radicand"))?;
            if !n.is_positive() {
                return Err(ArithError::parse(whole, "radicand must be positive"));
            }
            roots.push(n);
            if neg {
                coef = -coef;
            }
        } else {
            coef *=
                parse_rational(body).map_err(|_| ArithError::parse(whole, "bad coefficient"))?;
        }
    }
    Ok((coef, roots))
}

/// Formats `coef * sqrt(d1) * ... ` with the coefficient always written.
pub(crate) fn format_term(coef: &Rational, radicands: &[u64]) -> String {
    let mut s = coef.to_string();
    for d in radicands {
        s.push_str(&format!("*sqrt({d})"));
    }
    s
}
