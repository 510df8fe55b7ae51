use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_int_list, render_int_list};
use crate::error::{domain, Result, WgError};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(domain("partition must have at least one part"));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(domain(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(domain(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary positive parts into a partition (used for cycle types).
    pub(crate) fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(domain("partition of 0"));
        }
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Boxes `(i, j)` of the Young diagram, 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Self {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// `2λ = (2λ_1, 2λ_2, ...)`: every row doubled in length.
    pub fn double(&self) -> Self {
        Self {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    pub fn has_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Number of standard Young tableaux of this shape, by the hook length formula.
    pub fn hook_dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut num: u128 = 1;
        for k in 2..=self.weight() as u128 {
            num *= k;
        }
        let mut hooks: u128 = 1;
        for (i, j) in self.boxes() {
            let arm = self.parts[i - 1] - j;
            let leg = conj.parts[j - 1] - i;
            hooks *= (arm + leg + 1) as u128;
        }
        (num / hooks) as u64
    }

    /// Size of the centralizer of a permutation with this cycle type:
    /// `∏_k k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut out: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mut m = 0u128;
            while i < self.parts.len() && self.parts[i] == k {
                m += 1;
                i += 1;
                out *= k as u128 * m;
            }
        }
        out
    }

    /// Corners where a box can be added, as 1-based `(row, col)`.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.parts.iter().enumerate() {
            if i == 0 || self.parts[i - 1] > p {
                out.push((i + 1, p + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        let even = self.parts.iter().filter(|&&p| p % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(domain("partitions_of requires n >= 1"));
    }
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_int_list(self.parts.iter().copied()))
    }
}

impl FromStr for Partition {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Counts partitions by the textbook recursion on the largest part.
    fn count_brute(n: usize, max: usize) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| count_brute(n - k, k)).sum()
    }

    #[test]
    fn small_listings() {
        assert_eq!(partitions_of(3).unwrap(), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(1).unwrap(), vec![p(&[1])]);
        assert_eq!(partitions_of(8).unwrap().len(), count_brute(8, 8));
        assert_eq!(count_brute(8, 8), 22);
    }

    #[test]
    fn zero_and_malformed_rejected() {
        assert!(partitions_of(0).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[3,x]".parse::<Partition>().is_err());
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[5]).hook_dimension(), 1);
        assert_eq!(p(&[2, 1]).hook_dimension(), 2);
        assert_eq!(p(&[2, 2]).hook_dimension(), 2);
        assert_eq!(p(&[3, 2, 1]).hook_dimension(), 16);
    }

    #[test]
    fn centralizers_sum_to_one() {
        // Σ_μ 1/z_μ = 1 (class sizes add up to n!)
        for n in 1..=8 {
            let fact: u128 = (1..=n as u128).product();
            let total: u128 = partitions_of(n)
                .unwrap()
                .iter()
                .map(|mu| fact / mu.centralizer_order())
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn doubling_and_rendering() {
        assert_eq!(p(&[1]).double(), p(&[2]));
        assert_eq!(p(&[2, 1]).double(), p(&[4, 2]));
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!("[ 3, 1 ]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
