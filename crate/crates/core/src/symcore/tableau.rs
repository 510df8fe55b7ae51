use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Partition;
use crate::error::{domain, parse_err, Result, WgError};

/// A standard Young tableau, stored as rows of 1-based entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    /// `cells[k-1]` is the 1-based `(row, col)` holding `k`.
    cells: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.weight();
        let mut cells = vec![(0, 0); n];
        for (i, row) in rows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if k == 0 || k > n || cells[k - 1] != (0, 0) {
                    return Err(domain(format!("entries must be exactly 1..={n}")));
                }
                cells[k - 1] = (i + 1, j + 1);
                if j > 0 && row[j - 1] >= k {
                    return Err(domain("rows must increase"));
                }
                if i > 0 && rows[i - 1][j] >= k {
                    return Err(domain("columns must increase"));
                }
            }
        }
        Ok(Self { shape, rows, cells })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// 1-based `(row, col)` of the box labelled `k`.
    pub fn cell_of(&self, k: usize) -> Option<(usize, usize)> {
        k.checked_sub(1).and_then(|i| self.cells.get(i)).copied()
    }

    /// Content `j − i` of the box holding `k`.
    pub fn content(&self, k: usize) -> Result<i64> {
        let (i, j) = self
            .cell_of(k)
            .ok_or_else(|| domain(format!("label {k} not in a tableau of size {}", self.size())))?;
        Ok(j as i64 - i as i64)
    }

    /// Row-major concatenation of the entries.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The tableau with its largest entry removed, or `None` for a single box.
    pub fn parent(&self) -> Option<Self> {
        let n = self.size();
        if n <= 1 {
            return None;
        }
        let (i, _) = self.cells[n - 1];
        let mut rows = self.rows.clone();
        rows[i - 1].pop();
        if rows[i - 1].is_empty() {
            rows.pop();
        }
        Some(Self {
            shape: Partition::new(rows.iter().map(Vec::len).collect()).expect("parent shape"),
            rows,
            cells: self.cells[..n - 1].to_vec(),
        })
    }

    /// All standard extensions by a new box `n+1`, one per addable cell.
    pub fn children(&self) -> Vec<Self> {
        let next = self.size() + 1;
        self.shape
            .addable_cells()
            .into_iter()
            .map(|(i, j)| {
                let mut rows = self.rows.clone();
                if i > rows.len() {
                    rows.push(Vec::new());
                }
                rows[i - 1].push(next);
                let mut cells = self.cells.clone();
                cells.push((i, j));
                Self {
                    shape: Partition::new(rows.iter().map(Vec::len).collect()).expect("child shape"),
                    rows,
                    cells,
                }
            })
            .collect()
    }

    /// The tableau `[[1]]`.
    pub fn single_box() -> Self {
        Self {
            shape: Partition::new(vec![1]).expect("(1)"),
            rows: vec![vec![1]],
            cells: vec![(1, 1)],
        }
    }

    /// Replaces each box `k` with the adjacent pair `2k−1, 2k` in the same row.
    pub fn double(&self) -> Self {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|row| row.iter().flat_map(|&k| [2 * k - 1, 2 * k]).collect())
            .collect();
        Self::from_rows(rows).expect("doubling preserves standardness")
    }

    /// True when `2k−1` and `2k` sit side by side in one row for every `k`.
    pub fn is_doubled(&self) -> bool {
        let n = self.size();
        n % 2 == 0
            && (1..=n / 2).all(|k| {
                let (r1, c1) = self.cells[2 * k - 2];
                let (r2, c2) = self.cells[2 * k - 1];
                r1 == r2 && c2 == c1 + 1
            })
    }
}

/// Content of box `k` of `t`.
pub fn content(t: &StandardTableau, k: usize) -> Result<i64> {
    t.content(k)
}

/// Every SYT of `shape`, sorted lexicographically by row-major reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    let n = shape.weight();
    let mut frontier = vec![StandardTableau::single_box()];
    for _ in 1..n {
        frontier = frontier
            .into_iter()
            .flat_map(|t| t.children())
            .filter(|t| {
                t.rows
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i < shape.len() && r.len() <= shape.parts()[i])
            })
            .collect();
    }
    frontier.sort();
    frontier
}

impl Ord for StandardTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.reading_word()
            .cmp(&other.reading_word())
            .then_with(|| self.rows.cmp(&other.rows))
    }
}

impl PartialOrd for StandardTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| super::render_int_list(r.iter().copied()))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StandardTableau {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err(format!("expected [[..],..], got {s:?}")))?;
        let mut rows = Vec::new();
        for chunk in inner.split("],") {
            let chunk = if chunk.ends_with(']') {
                chunk.to_string()
            } else {
                format!("{chunk}]")
            };
            rows.push(super::parse_int_list(&chunk)?);
        }
        Self::from_rows(rows)
    }
}

impl Serialize for StandardTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for StandardTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::partitions_of;
    use itertools::Itertools;

    fn tab(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    /// Tries every filling of the diagram by 1..=n and keeps the standard ones.
    fn brute_force_count(shape: &Partition) -> usize {
        let n = shape.weight();
        (1..=n)
            .permutations(n)
            .filter(|fill| {
                let mut it = fill.iter().copied();
                let rows: Vec<Vec<usize>> = shape
                    .parts()
                    .iter()
                    .map(|&len| it.by_ref().take(len).collect())
                    .collect();
                StandardTableau::from_rows(rows).is_ok()
            })
            .count()
    }

    #[test]
    fn two_tableaux_of_shape_21() {
        let ts = standard_tableaux(&"[2,1]".parse().unwrap());
        assert_eq!(ts, vec![tab("[[1,2],[3]]"), tab("[[1,3],[2]]")]);
        assert_eq!(standard_tableaux(&"[4]".parse().unwrap()).len(), 1);
        assert_eq!(standard_tableaux(&"[2,2]".parse().unwrap()).len(), 2);
        assert_eq!(brute_force_count(&"[2,2]".parse().unwrap()), 2);
    }

    #[test]
    fn contents() {
        let t = tab("[[1,2],[3]]");
        assert_eq!(content(&t, 1).unwrap(), 0);
        assert_eq!(content(&t, 2).unwrap(), 1);
        assert_eq!(content(&t, 3).unwrap(), -1);
        assert_eq!(content(&tab("[[1,3],[2]]"), 3).unwrap(), 1);
        assert!(content(&t, 4).is_err());
        assert!(content(&t, 0).is_err());
    }

    #[test]
    fn counts_match_hook_formula_and_sum_to_factorial() {
        for n in 1..=8 {
            let mut sq = 0u64;
            for lambda in partitions_of(n).unwrap() {
                let f = lambda.hook_dimension();
                assert_eq!(standard_tableaux(&lambda).len() as u64, f, "{lambda}");
                sq += f * f;
            }
            assert_eq!(sq as u128, crate::symcore::factorial(n));
        }
        for lambda in partitions_of(5).unwrap() {
            assert_eq!(brute_force_count(&lambda), standard_tableaux(&lambda).len());
        }
    }

    #[test]
    fn doubling() {
        assert_eq!(tab("[[1,3],[2]]").double(), tab("[[1,2,5,6],[3,4]]"));
        assert_eq!(tab("[[1]]").double().shape().parts(), &[2]);
        for t in standard_tableaux(&"[2,1]".parse().unwrap()) {
            let d = t.double();
            assert_eq!(d.shape().parts(), &[4, 2]);
            assert!(d.is_doubled());
        }
        let mut seen = std::collections::HashSet::new();
        for n in 1..=5 {
            for lambda in partitions_of(n).unwrap() {
                for t in standard_tableaux(&lambda) {
                    let d = t.double();
                    assert_eq!(d.shape(), &lambda.double());
                    assert!(seen.insert(d));
                }
            }
        }
    }

    #[test]
    fn rejects_bad_fillings_and_round_trips() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![4]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![2]]).is_err());
        let t = tab("[[1,2,5],[3,4]]");
        assert_eq!(t.to_string().parse::<StandardTableau>().unwrap(), t);
        assert_eq!(t.parent().unwrap(), tab("[[1,2],[3,4]]"));
    }

    #[test]
    fn stable_order() {
        let lambda: Partition = "[3,2,1]".parse().unwrap();
        assert_eq!(standard_tableaux(&lambda), standard_tableaux(&lambda));
    }
}
