use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Coefficient, Rational};
use crate::error::{domain, parse_err, Result};
use crate::matrix::Matrix;
use crate::symcore::Permutation;

/// Products with more than this many term pairs are split across threads.
const PARALLEL_THRESHOLD: usize = 1 << 14;

/// A sparse element of the group algebra `C[S_n]`.
///
/// Terms are kept in canonical permutation order with no stored zeros, so two
/// elements are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement<C> {
    degree: usize,
    terms: BTreeMap<Permutation, C>,
}

/// Which side the algebra element multiplies the basis vector from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// Column `σ'` holds `a · δ_σ'`.
    Left,
    /// Column `σ'` holds `δ_σ' · a`.
    Right,
}

impl<C: Coefficient> AlgebraElement<C> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(degree: usize) -> Self {
        Self::basis(Permutation::identity(degree))
    }

    /// `δ_σ`.
    pub fn basis(sigma: Permutation) -> Self {
        Self::monomial(sigma, C::one())
    }

    pub fn monomial(sigma: Permutation, c: C) -> Self {
        let degree = sigma.degree();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(sigma, c);
        }
        Self { degree, terms }
    }

    /// Sums the given terms; repeated permutations are merged.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Permutation, C)>) -> Result<Self> {
        let mut out = Self::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(domain(format!("{p} is not in S_{degree}")));
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: Permutation, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(v) => {
                v.add_assign_ref(c);
                if v.is_zero() {
                    self.terms.remove(&p);
                }
            }
            None => {
                self.terms.insert(p, c.clone());
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> C {
        self.terms.get(sigma).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(C::neg_ref)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&C::from_rational(r))
    }

    /// Applies `f` to each coefficient, dropping results that vanish.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> AlgebraElement<D> {
        AlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter_map(|(p, c)| {
                    let d = f(c);
                    (!d.is_zero()).then(|| (p.clone(), d))
                })
                .collect(),
        }
    }

    pub fn try_map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> Result<D>) -> Result<AlgebraElement<D>> {
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(p.clone(), d);
            }
        }
        Ok(AlgebraElement {
            degree: self.degree,
            terms,
        })
    }

    fn check_degree(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(domain(format!(
                "group algebra size mismatch: S_{} vs S_{}",
                self.degree, other.degree
            )));
        }
        Ok(())
    }

    /// Convolution product `Σ a_σ b_ρ δ_{σρ}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_degree(other)?;
        let left: Vec<_> = self.terms.iter().collect();
        let accumulate = |chunk: &[(&Permutation, &C)]| {
            let mut acc: HashMap<Permutation, C> = HashMap::with_capacity(chunk.len() * other.len());
            for (s, a) in chunk {
                for (r, b) in &other.terms {
                    acc.entry(s.then_after(r))
                        .and_modify(|v| v.add_product(a, b))
                        .or_insert_with(|| a.mul_ref(b));
                }
            }
            acc
        };
        let merged = if left.len() * other.len() > PARALLEL_THRESHOLD && left.len() > 1 {
            let chunk = left.len().div_ceil(rayon::current_num_threads() * 4).max(1);
            left.par_chunks(chunk)
                .map(accumulate)
                .reduce(HashMap::new, |mut a, b| {
                    if a.len() < b.len() {
                        return merge_into(b, a);
                    }
                    for (p, c) in b {
                        a.entry(p).and_modify(|v| v.add_assign_ref(&c)).or_insert(c);
                    }
                    a
                })
        } else {
            accumulate(&left)
        };
        Ok(Self {
            degree: self.degree,
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// `δ_σ · self`.
    pub fn left_translate(&self, sigma: &Permutation) -> Self {
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (sigma.then_after(p), c.clone())).collect(),
        }
    }

    /// `self · δ_σ`.
    pub fn right_translate(&self, sigma: &Permutation) -> Self {
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.then_after(sigma), c.clone())).collect(),
        }
    }

    /// The anti-automorphism `δ_σ ↦ δ_{σ⁻¹}`.
    pub fn antipode(&self) -> Self {
        Self {
            degree: self.degree,
            terms: self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    /// The image under `C[S_n] ⊂ C[S_m]`, new points fixed.
    pub fn embed(&self, m: usize) -> Result<Self> {
        if m < self.degree {
            return Err(domain(format!("cannot embed S_{} into S_{m}", self.degree)));
        }
        Ok(Self {
            degree: m,
            terms: self.terms.iter().map(|(p, c)| (p.extend(m), c.clone())).collect(),
        })
    }

    /// Sum of the coefficients over the given permutations.
    pub fn coefficient_sum<'a>(&self, perms: impl IntoIterator<Item = &'a Permutation>) -> C {
        let mut acc = C::zero();
        for p in perms {
            if let Some(c) = self.terms.get(p) {
                acc.add_assign_ref(c);
            }
        }
        acc
    }

    /// True when `self` commutes with `other`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.multiply(other)? == other.multiply(self)?)
    }

    /// Matrix of multiplication by `self` in the basis `basis`.
    ///
    /// Entry `[σ'', σ']` is the coefficient of `δ_σ''` in `self · δ_σ'` (left) or
    /// `δ_σ' · self` (right).
    pub fn regular_matrix(&self, basis: &[Permutation], side: Side) -> Result<Matrix<C>> {
        if basis.iter().any(|p| p.degree() != self.degree) {
            return Err(domain("basis permutations must match the algebra size"));
        }
        let index: HashMap<&Permutation, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut m = Matrix::zeros(basis.len(), basis.len());
        for (col, b) in basis.iter().enumerate() {
            let image = match side {
                Side::Left => self.right_translate(b),
                Side::Right => self.left_translate(b),
            };
            for (p, c) in image.terms() {
                let row = *index
                    .get(p)
                    .ok_or_else(|| domain(format!("{p} missing from the basis")))?;
                m.set(row, col, c.clone());
            }
        }
        Ok(m)
    }

    /// `{"[σ]": "coefficient", ...}` in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(p, c)| (p.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(degree: usize, value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| parse_err("algebra element must be a JSON object"))?;
        let mut terms = Vec::with_capacity(obj.len());
        for (k, v) in obj {
            let p: Permutation = k.parse()?;
            let s = v
                .as_str()
                .ok_or_else(|| parse_err(format!("coefficient of {k} must be a string")))?;
            terms.push((p, C::parse_coeff(s)?));
        }
        Self::from_terms(degree, terms)
    }
}

fn merge_into<C: Coefficient>(
    mut big: HashMap<Permutation, C>,
    small: HashMap<Permutation, C>,
) -> HashMap<Permutation, C> {
    for (p, c) in small {
        big.entry(p).and_modify(|v| v.add_assign_ref(&c)).or_insert(c);
    }
    big
}

impl<C: Coefficient> Serialize for AlgebraElement<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
