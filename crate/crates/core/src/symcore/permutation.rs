use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use super::{parse_int_list, Partition};
use crate::error::{domain, parse_err, Result, WgError};

pub(crate) type Images = SmallVec<[u8; 16]>;

/// A permutation of `{1, ..., n}` in one-line form.
///
/// Ordering is lexicographic on the one-line form, which is the canonical
/// basis order for every `S_n`-indexed matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Images,
}

impl Permutation {
    /// Builds from 1-based images, validating bijectivity.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(domain("permutation too large"));
        }
        let mut seen = vec![false; n];
        let mut out = Images::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(domain(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Self { images: out })
    }

    /// Builds from 0-based images without validation.
    pub(crate) fn from_zero_based(images: Images) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    /// The transposition swapping the 1-based labels `i` and `j` inside `S_n`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(domain(format!("transposition ({i} {j}) invalid in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Builds a permutation from disjoint cycles given with 1-based labels.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(domain(format!("cycle label out of range in S_{n}")));
                }
                images[a - 1] = b;
            }
        }
        Self::from_one_line(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for a 1-based label.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self ∘ other)(i) = self(other(i))`. Panics on size mismatch.
    pub fn then_after(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "permutation size mismatch");
        Self {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images: Images = smallvec::smallvec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Self { images }
    }

    /// `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Self) -> Self {
        self.then_after(other).then_after(&self.inverse())
    }

    /// Extends to `S_m` (`m ≥ n`) fixing the new points.
    pub fn extend(&self, m: usize) -> Self {
        debug_assert!(m >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..m as u8);
        Self { images }
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = [false; 256];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths())
    }

    pub fn num_cycles(&self) -> usize {
        self.cycle_lengths().len()
    }

    pub fn sign(&self) -> i64 {
        if (self.degree() - self.num_cycles()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `σ ∘ σ'`, checked.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(domain(format!(
            "cannot compose permutations of sizes {} and {}",
            a.degree(),
            b.degree()
        )));
    }
    Ok(a.then_after(b))
}

pub fn inverse(a: &Permutation) -> Permutation {
    a.inverse()
}

/// All of `S_n` in lexicographic order of one-line form.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..n as u8)
        .permutations(n)
        .map(|v| Permutation::from_zero_based(v.into_iter().collect()))
        .collect()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_int_list(self.one_line()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s)?;
        if v.is_empty() {
            return Err(parse_err("empty permutation"));
        }
        Self::from_one_line(&v)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
