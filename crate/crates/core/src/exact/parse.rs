use num_bigint::BigInt;
use num_traits::Zero;

use super::int_poly::IntPolynomial;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("cannot parse polynomial: {0}")]
    Malformed(String),
}

/// Accepts either a human string like "x^4-x^3-x^2-x+1" (any single variable
/// letter, case-insensitive, optional '*' between coefficient and variable)
/// or a JSON array of decimal integer strings / numbers, constant term first.
pub fn parse_poly(input: &str) -> Result<IntPolynomial, ParseError> {
    let s = input.trim();
    if s.starts_with('[') {
        return parse_json_array(s);
    }
    parse_human(s)
}

fn parse_json_array(s: &str) -> Result<IntPolynomial, ParseError> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ParseError::Malformed("unbalanced brackets".into()))?;
    let mut coeffs = vec![];
    for item in inner.split(',') {
        let item = item.trim().trim_matches('"');
        if item.is_empty() {
            continue;
        }
        let v: BigInt = item
            .parse()
            .map_err(|_| ParseError::Malformed(format!("bad integer {item:?}")))?;
        coeffs.push(v);
    }
    Ok(IntPolynomial::new(coeffs))
}

fn parse_human(s: &str) -> Result<IntPolynomial, ParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError::Malformed("empty input".into()));
    }
    let bytes = compact.as_bytes();
    let mut terms: Vec<(BigInt, usize)> = vec![];
    let mut var: Option<u8> = None;
    let mut i = 0usize;
    while i < bytes.len() {
        let mut sign = 1i64;
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(ParseError::Malformed("dangling sign".into()));
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff: BigInt = if i > start {
            compact[start..i]
                .parse()
                .map_err(|_| ParseError::Malformed("bad coefficient".into()))?
        } else {
            BigInt::from(1)
        };
        if sign < 0 {
            coeff = -coeff;
        }
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut exp = 0usize;
        if i < bytes.len() && bytes[i].is_ascii_alphabetic() {
            let letter = bytes[i].to_ascii_lowercase();
            match var {
                Some(v) if v != letter => {
                    return Err(ParseError::Malformed(format!(
                        "mixed variable letters {:?} and {:?}",
                        v as char, letter as char
                    )));
                }
                _ => var = Some(letter),
            }
            i += 1;
            exp = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let e_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == e_start {
                    return Err(ParseError::Malformed("missing exponent".into()));
                }
                exp = compact[e_start..i]
                    .parse()
                    .map_err(|_| ParseError::Malformed("bad exponent".into()))?;
            }
        } else if i == start {
            return Err(ParseError::Malformed(format!(
                "unexpected character at {i}: {:?}",
                &compact[i..]
            )));
        }
        terms.push((coeff, exp));
    }
    let deg = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (c, e) in terms {
        coeffs[e] += c;
    }
    Ok(IntPolynomial::new(coeffs))
}
