use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use wg_core::coeff::Rational;
use wg_core::orthogonal::weingarten_orthogonal;
use wg_core::symcore::{all_permutations, enumerate_pairings, Pairing, Partition, Permutation};
use wg_core::table::{Group, TauSpec};
use wg_core::unitary::wg_class_values;
use wg_core::{Result, WgError};

/// 1-based row/column indices of a monomial in the matrix entries.
///
/// Unitary: `∏_k U[i_k, j_k] · ∏_k conj(U[i'_k, j'_k])`.
/// Orthogonal: `∏_k O[i_k, j_k]`, with the conjugate lists empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Indices {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub i_conj: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub j_conj: Vec<usize>,
}

impl Indices {
    pub fn unitary(i: &[usize], j: &[usize], i_conj: &[usize], j_conj: &[usize]) -> Self {
        Self {
            i: i.to_vec(),
            j: j.to_vec(),
            i_conj: i_conj.to_vec(),
            j_conj: j_conj.to_vec(),
        }
    }

    pub fn orthogonal(i: &[usize], j: &[usize]) -> Self {
        Self::unitary(i, j, &[], &[])
    }

    pub fn validate(&self, group: Group, tau: usize) -> Result<()> {
        let bad = |msg: String| Err(WgError::Domain(msg));
        if self.i.len() != self.j.len() || self.i_conj.len() != self.j_conj.len() {
            return bad(format!("row and column index lists differ in length: {self:?}"));
        }
        if group == Group::Orthogonal && !self.i_conj.is_empty() {
            return bad("orthogonal moments take no conjugate indices".into());
        }
        let all = self.i.iter().chain(&self.j).chain(&self.i_conj).chain(&self.j_conj);
        if let Some(x) = all.into_iter().find(|&&x| x == 0 || x > tau) {
            return bad(format!("index {x} outside 1..={tau}"));
        }
        Ok(())
    }
}

/// A moment together with the sampling parameters used to estimate it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentSpec {
    pub group: Group,
    pub tau: usize,
    #[serde(flatten)]
    pub indices: Indices,
    pub samples: usize,
    pub seed: u64,
}

/// Exact moments, caching the Weingarten data per degree.
pub struct Predictor {
    group: Group,
    tau: usize,
    unitary: HashMap<usize, HashMap<Partition, Rational>>,
    orthogonal: HashMap<usize, (Vec<Pairing>, wg_core::matrix::Matrix<Rational>)>,
}

impl Predictor {
    pub fn new(group: Group, tau: usize) -> Result<Self> {
        if tau == 0 {
            return Err(WgError::Domain("tau must be >= 1".into()));
        }
        Ok(Self {
            group,
            tau,
            unitary: HashMap::new(),
            orthogonal: HashMap::new(),
        })
    }

    pub fn predict(&mut self, idx: &Indices) -> Result<Rational> {
        idx.validate(self.group, self.tau)?;
        match self.group {
            Group::Unitary => self.predict_unitary(idx),
            Group::Orthogonal => self.predict_orthogonal(idx),
        }
    }

    /// `Σ_{σ,ρ} δ(i_k = i'_{σ(k)}) δ(j_k = j'_{ρ(k)}) Wg(σρ⁻¹)`.
    fn predict_unitary(&mut self, idx: &Indices) -> Result<Rational> {
        let n = idx.i.len();
        if n != idx.i_conj.len() {
            return Ok(Rational::from_int(0));
        }
        if n == 0 {
            return Ok(Rational::from_int(1));
        }
        if !self.unitary.contains_key(&n) {
            let values = wg_class_values(n, &Rational::from_int(self.tau as i64))?;
            self.unitary.insert(n, values);
        }
        let values = &self.unitary[&n];
        let perms = all_permutations(n);
        let matching = |a: &[usize], b: &[usize]| -> Vec<&Permutation> {
            perms
                .iter()
                .filter(|s| (1..=n).all(|k| a[k - 1] == b[s.apply(k) - 1]))
                .collect()
        };
        let rows = matching(&idx.i, &idx.i_conj);
        let cols = matching(&idx.j, &idx.j_conj);
        let mut acc = Rational::from_int(0);
        for s in &rows {
            for r in &cols {
                acc = &acc + &values[&s.then_after(&r.inverse()).cycle_type()];
            }
        }
        Ok(acc)
    }

    /// `Σ_{π,π'} δ_π(i) δ_{π'}(j) W[π, π']`.
    fn predict_orthogonal(&mut self, idx: &Indices) -> Result<Rational> {
        let degree = idx.i.len();
        if degree % 2 == 1 {
            return Ok(Rational::from_int(0));
        }
        if degree == 0 {
            return Ok(Rational::from_int(1));
        }
        let n = degree / 2;
        if !self.orthogonal.contains_key(&n) {
            let t = Rational::from_int(self.tau as i64);
            let table = weingarten_orthogonal(n, &t, TauSpec::Value(t.clone()))?;
            self.orthogonal.insert(n, (enumerate_pairings(n)?, table.weingarten));
        }
        let (basis, w) = &self.orthogonal[&n];
        let fits = |v: &[usize]| -> Vec<usize> {
            basis
                .iter()
                .enumerate()
                .filter(|(_, p)| p.pairs().iter().all(|&(a, b)| v[a - 1] == v[b - 1]))
                .map(|(k, _)| k)
                .collect()
        };
        let rows = fits(&idx.i);
        let cols = fits(&idx.j);
        let mut acc = Rational::from_int(0);
        for &a in &rows {
            for &b in &cols {
                acc = &acc + w.get(a, b);
            }
        }
        Ok(acc)
    }
}

/// The exact value of a single moment.
pub fn predict_moment(spec: &MomentSpec) -> Result<Rational> {
    Predictor::new(spec.group, spec.tau)?.predict(&spec.indices)
}

/// Every monomial of the given degree up to reordering of its factors.
///
/// Unitary: `n` factors `U[i,j]` and `n` factors `conj(U[i',j'])`.
/// Orthogonal: `2n` factors `O[i,j]`.
pub fn degree_grid(group: Group, tau: usize, n: usize) -> Vec<Indices> {
    let cells: Vec<(usize, usize)> = (1..=tau).flat_map(|a| (1..=tau).map(move |b| (a, b))).collect();
    let multisets = |k: usize| -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            cells: &[(usize, usize)],
            start: usize,
            k: usize,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<Vec<(usize, usize)>>,
        ) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for c in start..cells.len() {
                cur.push(cells[c]);
                rec(cells, c, k, cur, out);
                cur.pop();
            }
        }
        rec(&cells, 0, k, &mut cur, &mut out);
        out
    };
    let split = |m: &[(usize, usize)]| -> (Vec<usize>, Vec<usize>) { m.iter().copied().unzip() };
    match group {
        Group::Unitary => {
            let halves = multisets(n);
            let mut out = Vec::with_capacity(halves.len() * halves.len());
            for a in &halves {
                for b in &halves {
                    let (i, j) = split(a);
                    let (ic, jc) = split(b);
                    out.push(Indices::unitary(&i, &j, &ic, &jc));
                }
            }
            out
        }
        Group::Orthogonal => multisets(2 * n)
            .iter()
            .map(|m| {
                let (i, j) = split(m);
                Indices::orthogonal(&i, &j)
            })
            .collect(),
    }
}
