use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{domain, parse_err, Result};
use crate::symcore::{partitions_of, Partition};

type MemoKey = (Vec<usize>, Vec<usize>);

fn memo() -> &'static RwLock<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Murnaghan–Nakayama on beta-sets: strip a rim hook of length `mu[0]` in every
/// possible way and recurse on the rest of `mu`.
fn mn(lambda: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return i64::from(lambda.is_empty());
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().read().get(&key) {
        return v;
    }
    let r = mu[0];
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let crossed = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&shape, &mu[1..]);
    }
    // same key always yields the same value, so a racing insert is harmless
    memo().write().insert(key, total);
    total
}

/// `χ_λ(μ)`: the irreducible character `λ` on the class of cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(domain(format!(
            "character of {lambda} (weight {}) on class {mu} (weight {})",
            lambda.weight(),
            mu.weight()
        )));
    }
    Ok(mn(lambda.parts(), mu.parts()))
}

pub const CHARACTER_SCHEMA: &str = "wg-characters/v1";

/// The full character table of `S_n`, rows `λ` and columns `μ` in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

#[derive(Serialize, Deserialize)]
struct CharacterTableFile {
    schema: String,
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Result<Self> {
        let partitions = partitions_of(n)?;
        let values = partitions
            .iter()
            .map(|l| partitions.iter().map(|m| mn(l.parts(), m.parts())).collect())
            .collect();
        Ok(Self::assemble(n, partitions, values))
    }

    fn assemble(n: usize, partitions: Vec<Partition>, values: Vec<Vec<i64>>) -> Self {
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self {
            n,
            partitions,
            values,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        let i = self.index.get(lambda);
        let j = self.index.get(mu);
        match (i, j) {
            (Some(&i), Some(&j)) => Ok(self.values[i][j]),
            _ => Err(domain(format!("({lambda}, {mu}) not in the table of S_{}", self.n))),
        }
    }

    /// `Σ_λ χ_λ(μ) χ_λ(μ') = δ_{μμ'} z_μ`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let k = self.partitions.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i128 = (0..k)
                    .map(|l| self.values[l][a] as i128 * self.values[l][b] as i128)
                    .sum();
                let expected = if a == b {
                    self.partitions[a].centralizer_order() as i128
                } else {
                    0
                };
                s == expected
            })
        })
    }

    /// `Σ_μ χ_λ(μ) χ_λ'(μ) / z_μ = δ_{λλ'}`, checked as `Σ_μ (n!/z_μ) χ χ' = δ n!`.
    pub fn row_orthogonality_holds(&self) -> bool {
        let fact = crate::symcore::factorial(self.n) as i128;
        let k = self.partitions.len();
        let class_sizes: Vec<i128> = self
            .partitions
            .iter()
            .map(|m| fact / m.centralizer_order() as i128)
            .collect();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let s: i128 = (0..k)
                    .map(|m| class_sizes[m] * self.values[a][m] as i128 * self.values[b][m] as i128)
                    .sum();
                s == if a == b { fact } else { 0 }
            })
        })
    }

    pub fn to_json(&self) -> String {
        let file = CharacterTableFile {
            schema: CHARACTER_SCHEMA.to_string(),
            n: self.n,
            partitions: self.partitions.clone(),
            values: self.values.clone(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    /// Parses a cache file, rejecting other schema versions and non-canonical layouts.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: CharacterTableFile =
            serde_json::from_str(text).map_err(|e| parse_err(format!("character table: {e}")))?;
        if file.schema != CHARACTER_SCHEMA {
            return Err(parse_err(format!(
                "character table schema {:?}, expected {CHARACTER_SCHEMA:?}",
                file.schema
            )));
        }
        if file.partitions != partitions_of(file.n)? {
            return Err(parse_err("character table partitions are not in canonical order"));
        }
        let k = file.partitions.len();
        if file.values.len() != k || file.values.iter().any(|r| r.len() != k) {
            return Err(parse_err("character table has the wrong dimensions"));
        }
        Ok(Self::assemble(file.n, file.partitions, file.values))
    }
}

fn registry() -> &'static RwLock<HashMap<usize, Arc<CharacterTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Shared character table of `S_n`, computed on first use.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    if let Some(t) = registry().read().get(&n) {
        return Ok(t.clone());
    }
    let table = Arc::new(CharacterTable::compute(n)?);
    Ok(registry().write().entry(n).or_insert(table).clone())
}

/// Seeds the shared registry with a table loaded elsewhere (e.g. from disk).
/// An existing entry for the same `n` is kept.
pub fn install_character_table(table: CharacterTable) -> Arc<CharacterTable> {
    registry()
        .write()
        .entry(table.n)
        .or_insert_with(|| Arc::new(table))
        .clone()
}
