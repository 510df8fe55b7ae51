use std::fmt;

use super::{Coefficient, Rational};
use crate::error::{Result, WgError};

/// A univariate polynomial in `t` with rational coefficients, ascending degree,
/// no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TauPolynomial {
    coeffs: Vec<Rational>,
}

impl TauPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// The indeterminate `t`.
    pub fn tau() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    /// `t + a`.
    pub fn linear(a: i64) -> Self {
        Self::from_ints(&[a, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(t).add_ref(c);
        }
        acc
    }

    pub fn scale_by(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::default();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c.mul_ref(r)).collect(),
        }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = super::Field::inv(lc).expect("nonzero leading coefficient");
                self.scale_by(&inv)
            }
        }
    }

    /// Euclidean division `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d
            .degree()
            .ok_or_else(|| WgError::Arithmetic("polynomial division by zero".into()))?;
        let lc_inv = super::Field::inv(d.leading().expect("nonzero"))?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return Ok((Self::default(), Self::default()));
        };
        if sd < dd {
            return Ok((Self::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let c = rem[k + dd].mul_ref(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let p = c.mul_ref(dc);
                rem[k + i] = rem[k + i].sub_ref(&p);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact division; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(WgError::Arithmetic(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.monic();
        let mut y = b.monic();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic();
        }
        x
    }
}

impl Coefficient for TauPolynomial {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::from_ints(&[1])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(r.clone())
    }

    fn add_ref(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            c.add_assign_ref(s);
        }
        Self::from_coeffs(coeffs)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (c, s) in self.coeffs.iter_mut().zip(&other.coeffs) {
            c.add_assign_ref(s);
        }
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::default();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_product(a, b);
            }
        }
        Self::from_coeffs(coeffs)
    }

    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(Rational::neg_ref).collect(),
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        self.scale_by(r)
    }

    fn parse_coeff(s: &str) -> Result<Self> {
        super::parse::parse_polynomial(s)
    }
}

impl fmt::Display for TauPolynomial {
    /// Descending degree, `t` as the variable: `t^3 + t^2 - 2*t`, `1/2*t - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TauPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn products_and_rendering() {
        let p = TauPolynomial::linear(1).mul_ref(&TauPolynomial::linear(-1));
        assert_eq!(p, TauPolynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(p.to_string(), "t^2 - 1");
        let q = TauPolynomial::from_ints(&[0, -2, 1, 1]);
        assert_eq!(q.to_string(), "t^3 + t^2 - 2*t");
        assert_eq!(TauPolynomial::zero().to_string(), "0");
        let r = TauPolynomial::from_coeffs(vec![Rational::new(-3, 1), Rational::new(1, 2)]);
        assert_eq!(r.to_string(), "1/2*t - 3");
        assert_eq!(TauPolynomial::from_ints(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn division_and_gcd() {
        let a = TauPolynomial::from_ints(&[-1, 0, 1]); // t^2 - 1
        let b = TauPolynomial::from_ints(&[0, -1, 0, 1]); // t^3 - t
        assert_eq!(TauPolynomial::gcd(&a, &b), a);
        let (q, r) = b.div_rem(&a).unwrap();
        assert_eq!(q, TauPolynomial::tau());
        assert!(r.is_zero());
        assert!(a.div_rem(&TauPolynomial::zero()).is_err());
        assert!(TauPolynomial::tau().div_exact(&a).is_err());
        let one = TauPolynomial::one();
        assert_eq!(TauPolynomial::gcd(&TauPolynomial::linear(2), &TauPolynomial::linear(3)), one);
    }

    #[test]
    fn evaluation() {
        let p = TauPolynomial::from_ints(&[0, -2, 1, 1]);
        assert_eq!(p.evaluate(&Rational::from_int(2)), Rational::from_int(8));
    }

    fn arb_poly() -> impl Strategy<Value = TauPolynomial> {
        prop::collection::vec((-20i64..20, 1i64..5), 0..31).prop_map(|v| {
            TauPolynomial::from_coeffs(v.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
            prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
            prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
            prop_assert!(a.add_ref(&a.neg_ref()).is_zero());
        }

        #[test]
        fn render_parse_round_trip(a in arb_poly()) {
            let back = TauPolynomial::parse_coeff(&a.to_string()).unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn division_identity(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(q.mul_ref(&b).add_ref(&r), a);
            prop_assert!(r.degree() < b.degree());
        }
    }
}
