use super::{Rational, TauPolynomial};
use crate::coeff::Coefficient;
use crate::error::{parse_err, Result};

/// Parses the rendered polynomial form: `t^3 + t^2 - 2*t`, `-1/2*t + 3`, `0`.
pub(super) fn parse_polynomial(s: &str) -> Result<TauPolynomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut current = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !current.ends_with(['^', '/', '*']) {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);

    let mut acc = TauPolynomial::zero();
    for term in terms {
        acc.add_assign_ref(&parse_term(&term, s)?);
    }
    Ok(acc)
}

fn parse_term(term: &str, whole: &str) -> Result<TauPolynomial> {
    let bad = || parse_err(format!("malformed term {term:?} in {whole:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'+') => (1, &term[1..]),
        Some(b'-') => (-1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coef, var) = match body.find('t') {
        None => (body, None),
        Some(0) => ("1", Some(&body[0..])),
        Some(pos) => {
            let c = body[..pos].strip_suffix('*').ok_or_else(bad)?;
            (c, Some(&body[pos..]))
        }
    };
    let coef: Rational = coef.parse().map_err(|_| bad())?;
    let degree = match var {
        None => 0,
        Some("t") => 1,
        Some(v) => v
            .strip_prefix("t^")
            .and_then(|k| k.parse::<usize>().ok())
            .ok_or_else(bad)?,
    };
    Ok(TauPolynomial::monomial(coef.mul_ref(&Rational::from_int(sign)), degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rendered_forms() {
        assert_eq!(parse_polynomial("t^3 + t^2 - 2*t").unwrap(), TauPolynomial::from_ints(&[0, -2, 1, 1]));
        assert_eq!(parse_polynomial("-t").unwrap(), TauPolynomial::from_ints(&[0, -1]));
        assert_eq!(parse_polynomial("0").unwrap(), TauPolynomial::zero());
        assert_eq!(parse_polynomial("-1/2").unwrap(), TauPolynomial::constant(Rational::new(-1, 2)));
        assert!(parse_polynomial("").is_err());
        assert!(parse_polynomial("2t").is_err());
        assert!(parse_polynomial("t^").is_err());
        assert!(parse_polynomial("x").is_err());
    }
}
