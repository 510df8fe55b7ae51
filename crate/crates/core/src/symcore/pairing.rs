use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::permutation::{Images, Permutation};
use crate::error::{domain, parse_err, Result, WgError};

/// A fixed-point-free involution of `{1, ..., 2n}`.
///
/// Stored as the partner array; ordering is lexicographic on the canonical
/// pair list `(a, b)`, `a < b`, sorted by `a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    partner: Images,
}

impl Pairing {
    /// Builds from 1-based pairs, in any order and orientation.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let m = 2 * pairs.len();
        let mut partner: Images = smallvec::smallvec![u8::MAX; m];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > m || b > m || a == b {
                return Err(domain(format!("bad pair ({a},{b}) on {m} points")));
            }
            if partner[a - 1] != u8::MAX || partner[b - 1] != u8::MAX {
                return Err(domain(format!("point reused in pairing {pairs:?}")));
            }
            partner[a - 1] = (b - 1) as u8;
            partner[b - 1] = (a - 1) as u8;
        }
        Ok(Self { partner })
    }

    /// Reads a permutation as a pairing; it must be a fixed-point-free involution.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        let raw = p.raw();
        let ok = raw.len() % 2 == 0
            && raw
                .iter()
                .enumerate()
                .all(|(i, &x)| x as usize != i && raw[x as usize] as usize == i);
        if !ok {
            return Err(domain(format!("{p} is not a fixed-point-free involution")));
        }
        Ok(Self {
            partner: raw.iter().copied().collect(),
        })
    }

    /// `β_n = (1 2)(3 4)⋯(2n−1 2n)`.
    pub fn beta(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(domain("beta requires n >= 1"));
        }
        let pairs: Vec<_> = (1..=n).map(|k| (2 * k - 1, 2 * k)).collect();
        Self::from_pairs(&pairs)
    }

    /// Number of pairs `n`.
    pub fn order(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points `2n`.
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    /// Partner of the 1-based point `i`.
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1] as usize + 1
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.points())
            .filter_map(|a| {
                let b = self.partner(a);
                (a < b).then_some((a, b))
            })
            .collect()
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_zero_based(self.partner.clone())
    }

    /// Conjugation by `σ`: the pairing `σ π σ⁻¹`, which pairs `σ(a)` with `σ(b)`.
    pub fn conjugated_by(&self, sigma: &Permutation) -> Self {
        let s = sigma.raw();
        let mut partner: Images = smallvec::smallvec![0; self.points()];
        for (a, &b) in self.partner.iter().enumerate() {
            partner[s[a] as usize] = s[b as usize];
        }
        Self { partner }
    }

    /// Restriction to the first `2n − 2` points; `None` unless `2n−1` and `2n` are paired.
    pub fn truncate_last_pair(&self) -> Option<Self> {
        let m = self.points();
        if m < 4 || self.partner(m) != m - 1 {
            return None;
        }
        Some(Self {
            partner: self.partner[..m - 2].iter().copied().collect(),
        })
    }

    /// Appends the pair `(2n+1, 2n+2)`.
    pub fn extend_with_pair(&self) -> Self {
        let m = self.points() as u8;
        let mut partner = self.partner.clone();
        partner.push(m + 1);
        partner.push(m);
        Self { partner }
    }

    /// Half the lengths of the cycles of `π π'`: the lengths (in pairs) of the loops
    /// formed by pasting the two pairings. Sorted decreasing.
    pub fn loop_type(&self, other: &Self) -> Vec<usize> {
        assert_eq!(self.points(), other.points(), "pairing size mismatch");
        let m = self.points();
        let mut seen = [false; 256];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut i = start;
            let mut len = 0;
            loop {
                seen[i] = true;
                let j = self.partner[i] as usize;
                seen[j] = true;
                i = other.partner[j] as usize;
                len += 1;
                if i == start {
                    break;
                }
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Number of loops when `π` and `π'` are pasted together, i.e. half the number of
/// cycles of the permutation `π π'`.
pub fn loop_count(a: &Pairing, b: &Pairing) -> Result<usize> {
    if a.points() != b.points() {
        return Err(domain(format!(
            "pairings on {} and {} points",
            a.points(),
            b.points()
        )));
    }
    Ok(a.loop_type(b).len())
}

/// All `(2n−1)!!` pairings of `{1, ..., 2n}` in lexicographic order.
pub fn enumerate_pairings(n: usize) -> Result<Vec<Pairing>> {
    if n == 0 {
        return Err(domain("enumerate_pairings requires n >= 1"));
    }
    fn rec(partner: &mut Images, out: &mut Vec<Pairing>) {
        let Some(a) = partner.iter().position(|&x| x == u8::MAX) else {
            out.push(Pairing {
                partner: partner.clone(),
            });
            return;
        };
        for b in a + 1..partner.len() {
            if partner[b] != u8::MAX {
                continue;
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
            rec(partner, out);
            partner[a] = u8::MAX;
            partner[b] = u8::MAX;
        }
    }
    let mut out = Vec::new();
    rec(&mut smallvec::smallvec![u8::MAX; 2 * n], &mut out);
    Ok(out)
}

impl Ord for Pairing {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pairs().cmp(&other.pairs())
    }
}

impl PartialOrd for Pairing {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Pairing {
    type Err = WgError;

    /// Parses `"(1,2)(3,5)(4,6)"`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(format!("expected (a,b)(c,d).., got {s:?}")))?;
        let pairs = body
            .split(")(")
            .map(|chunk| {
                let (a, b) = chunk
                    .split_once(',')
                    .ok_or_else(|| parse_err(format!("bad pair {chunk:?}")))?;
                let a = a.parse().map_err(|_| parse_err(format!("bad label {a:?}")))?;
                let b = b.parse().map_err(|_| parse_err(format!("bad label {b:?}")))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(&pairs)
    }
}

impl Serialize for Pairing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Pairing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::all_permutations;

    fn pr(s: &str) -> Pairing {
        s.parse().unwrap()
    }

    fn double_factorial(n: usize) -> usize {
        (1..=n).map(|k| 2 * k - 1).product()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_pairings(1).unwrap(), vec![pr("(1,2)")]);
        assert_eq!(
            enumerate_pairings(2).unwrap(),
            vec![pr("(1,2)(3,4)"), pr("(1,3)(2,4)"), pr("(1,4)(2,3)")]
        );
        // brute force: fixed-point-free involutions among all of S_6
        let brute = all_permutations(6)
            .iter()
            .filter(|p| Pairing::from_permutation(p).is_ok())
            .count();
        assert_eq!(brute, 15);
        assert_eq!(enumerate_pairings(3).unwrap().len(), 15);
        for n in 1..=6 {
            let all = enumerate_pairings(n).unwrap();
            assert_eq!(all.len(), double_factorial(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(enumerate_pairings(0).is_err());
    }

    #[test]
    fn loop_counts() {
        let a = pr("(1,2)(3,5)(4,6)");
        let b = pr("(1,2)(3,6)(4,5)");
        assert_eq!(loop_count(&a, &b).unwrap(), 2);
        assert_eq!(loop_count(&a, &a).unwrap(), 3);
        assert_eq!(loop_count(&pr("(1,2)(3,4)"), &pr("(1,3)(2,4)")).unwrap(), 1);
        assert!(loop_count(&a, &pr("(1,2)")).is_err());
    }

    #[test]
    fn loop_count_is_half_the_cycles() {
        for n in 1..=4 {
            let all = enumerate_pairings(n).unwrap();
            for a in &all {
                for b in &all {
                    let cycles = a.to_permutation().then_after(&b.to_permutation()).num_cycles();
                    let l = loop_count(a, b).unwrap();
                    assert_eq!(2 * l, cycles);
                    assert_eq!(l, loop_count(b, a).unwrap());
                }
            }
        }
    }

    #[test]
    fn conjugation_matches_permutation_conjugation() {
        let pi = pr("(1,3)(2,4)");
        for s in all_permutations(4) {
            let direct = Pairing::from_permutation(&s.conjugate(&pi.to_permutation())).unwrap();
            assert_eq!(pi.conjugated_by(&s), direct);
        }
    }

    #[test]
    fn parse_and_render() {
        let p = pr("(3,5)(1,2)(6,4)");
        assert_eq!(p.to_string(), "(1,2)(3,5)(4,6)");
        assert!("(1,2)(2,3)".parse::<Pairing>().is_err());
        assert!("(1,1)".parse::<Pairing>().is_err());
        assert!("1,2".parse::<Pairing>().is_err());
        assert_eq!(Pairing::beta(2).unwrap(), pr("(1,2)(3,4)"));
    }
}
