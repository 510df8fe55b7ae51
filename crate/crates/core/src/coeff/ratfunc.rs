use std::fmt;

use super::{Coefficient, Field, Rational, TauPolynomial};
use crate::error::{parse_err, Result, WgError};

/// A reduced rational function `num/den` in `t`: `gcd(num, den) = 1` and `den` monic.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TauRational {
    num: TauPolynomial,
    den: TauPolynomial,
}

impl TauRational {
    pub fn new(num: TauPolynomial, den: TauPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(WgError::Arithmetic("rational function with zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: TauPolynomial, den: TauPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = TauPolynomial::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading().expect("nonzero").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            Self {
                num: num.scale_by(&inv),
                den: den.scale_by(&inv),
            }
        }
    }

    /// The indeterminate `t`.
    pub fn tau() -> Self {
        Self::from_poly(TauPolynomial::tau())
    }

    pub fn from_poly(p: TauPolynomial) -> Self {
        Self {
            num: p,
            den: TauPolynomial::one(),
        }
    }

    pub fn numer(&self) -> &TauPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &TauPolynomial {
        &self.den
    }

    /// Exact value at `t`; a vanishing denominator is a pole error.
    pub fn evaluate(&self, t: &Rational) -> Result<Rational> {
        let d = self.den.evaluate(t);
        if d.is_zero() {
            return Err(WgError::Pole {
                at: t.to_string(),
                what: self.to_string(),
            });
        }
        Ok(self.num.evaluate(t).mul_ref(&d.inv()?))
    }
}

impl Coefficient for TauRational {
    fn zero() -> Self {
        Self {
            num: TauPolynomial::zero(),
            den: TauPolynomial::one(),
        }
    }

    fn one() -> Self {
        Self::from_poly(TauPolynomial::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(TauPolynomial::constant(r.clone()))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::reduce(self.num.add_ref(&other.num), self.den.clone());
        }
        let g = TauPolynomial::gcd(&self.den, &other.den);
        let a_cof = other.den.div_exact(&g).expect("gcd divides");
        let b_cof = self.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul_ref(&a_cof).add_ref(&other.num.mul_ref(&b_cof));
        Self::reduce(num, self.den.mul_ref(&a_cof))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // cross-cancel before multiplying so the final gcd stays small
        let g1 = TauPolynomial::gcd(&self.num, &other.den);
        let g2 = TauPolynomial::gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("divides");
        let d2 = other.den.div_exact(&g1).expect("divides");
        let n2 = other.num.div_exact(&g2).expect("divides");
        let d1 = self.den.div_exact(&g2).expect("divides");
        Self::reduce(n1.mul_ref(&n2), d1.mul_ref(&d2))
    }

    fn neg_ref(&self) -> Self {
        Self {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale_by(r),
            den: self.den.clone(),
        }
    }

    fn parse_coeff(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| parse_err(format!("expected (num)/(den), got {s:?}")))?;
            let den = den
                .strip_suffix(')')
                .ok_or_else(|| parse_err(format!("unclosed denominator in {s:?}")))?;
            let num = TauPolynomial::parse_coeff(num)?;
            let den = TauPolynomial::parse_coeff(den)?;
            return Self::new(num, den).map_err(|_| parse_err(format!("zero denominator in {s:?}")));
        }
        // a bare polynomial, or a rational constant such as "1/2"
        Ok(Self::from_poly(TauPolynomial::parse_coeff(t)?))
    }
}

impl Field for TauRational {
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(WgError::Arithmetic("inverse of the zero rational function".into()));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }
}

impl From<TauPolynomial> for TauRational {
    fn from(p: TauPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for TauRational {
    /// `(num)/(den)`, or the bare numerator when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for TauRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
