use std::collections::{BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::AlgebraElement;
use crate::coeff::{Coefficient, Rational};
use crate::error::{domain, Result};
use crate::symcore::{all_permutations, Pairing, Permutation};

/// Generators of `H_n ⊂ S_{2n}`: the transpositions `(2i−1 2i)` and the double
/// transpositions `(2i−1 2i+1)(2i 2i+2)`.
pub fn hyperoctahedral_generators(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(domain("hyperoctahedral group requires n >= 1"));
    }
    let m = 2 * n;
    let mut gens: Vec<Permutation> = (1..=n)
        .map(|i| Permutation::transposition(m, 2 * i - 1, 2 * i).expect("valid"))
        .collect();
    for i in 1..n {
        gens.push(
            Permutation::from_cycles(m, &[&[2 * i - 1, 2 * i + 1], &[2 * i, 2 * i + 2]]).expect("valid"),
        );
    }
    Ok(gens)
}

type GroupCache = RwLock<HashMap<usize, Arc<Vec<Permutation>>>>;

fn cache() -> &'static GroupCache {
    static CACHE: OnceLock<GroupCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `H_n` materialized as the closure of its generators, in canonical order.
pub fn hyperoctahedral_elements(n: usize) -> Result<Arc<Vec<Permutation>>> {
    if let Some(h) = cache().read().get(&n) {
        return Ok(h.clone());
    }
    let gens = hyperoctahedral_generators(n)?;
    let id = Permutation::identity(2 * n);
    let mut seen: BTreeSet<Permutation> = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let next = s.then_after(&g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let group = Arc::new(seen.into_iter().collect::<Vec<_>>());
    cache().write().entry(n).or_insert_with(|| group.clone());
    Ok(group)
}

/// The conjugation stabilizer of `β_n` inside `S_{2n}`, by exhaustive search.
pub fn stabilizer_of_beta(n: usize) -> Result<Vec<Permutation>> {
    let beta = Pairing::beta(n)?;
    Ok(all_permutations(2 * n)
        .into_iter()
        .filter(|s| beta.conjugated_by(s) == beta)
        .collect())
}

/// `P_{H_n} = (1/|H_n|) Σ_{h ∈ H_n} δ_h`.
pub fn average_projector<C: Coefficient>(n: usize) -> Result<AlgebraElement<C>> {
    let group = hyperoctahedral_elements(n)?;
    let weight = C::from_rational(&Rational::new(1, group.len() as i64));
    AlgebraElement::from_terms(2 * n, group.iter().map(|h| (h.clone(), weight.clone())))
}
