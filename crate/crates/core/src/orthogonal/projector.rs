use std::collections::{BTreeMap, HashMap};

use super::coset::{coset_representative, matching_conjugator};
use crate::coeff::Rational;
use crate::error::{domain, Result};
use crate::groupalg::hyperoctahedral_elements;
use crate::matrix::Matrix;
use crate::symcore::{enumerate_pairings, factorial, Pairing, Partition, Permutation};
use crate::young::character_table;

/// Cycle-type histogram of `{σ : σ π' σ⁻¹ = π}`, enumerated as the coset
/// `σ₀ · σ_{π'} H σ_{π'}⁻¹`.
pub fn coset_class_histogram_with(sigma0: &Permutation, pi_prime: &Pairing) -> Result<Vec<(Partition, u64)>> {
    let rep = coset_representative(pi_prime)?;
    let left = sigma0.then_after(&rep.sigma);
    let right = rep.sigma.inverse();
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for h in hyperoctahedral_elements(pi_prime.order())?.iter() {
        let g = left.then_after(h).then_after(&right);
        *counts.entry(g.cycle_type()).or_default() += 1;
    }
    Ok(counts.into_iter().collect())
}

/// [`coset_class_histogram_with`] using the pair-matching conjugator.
pub fn coset_class_histogram(pi: &Pairing, pi_prime: &Pairing) -> Result<Vec<(Partition, u64)>> {
    if pi.points() != pi_prime.points() {
        return Err(domain("pairings of different sizes"));
    }
    coset_class_histogram_with(&matching_conjugator(pi, pi_prime, false)?, pi_prime)
}

fn entry_from_histogram(lambda: &Partition, histogram: &[(Partition, u64)]) -> Result<Rational> {
    let doubled = lambda.double();
    let table = character_table(doubled.weight())?;
    let mut sum = 0i128;
    for (mu, count) in histogram {
        sum += table.get(&doubled, mu)? as i128 * *count as i128;
    }
    let dim = doubled.hook_dimension() as i128;
    let total = factorial(doubled.weight()) as i128;
    Rational::from_bigs((sum * dim).into(), total.into())
}

/// `(P_{2λ})_{π,π'} = (χ_{2λ}(1) / (2n)!) Σ_{σ π' σ⁻¹ = π} χ_{2λ}(σ)`.
pub fn projector_entry(lambda: &Partition, pi: &Pairing, pi_prime: &Pairing) -> Result<Rational> {
    if lambda.weight() != pi.order() {
        return Err(domain(format!("{lambda} does not match pairings on {} points", pi.points())));
    }
    entry_from_histogram(lambda, &coset_class_histogram(pi, pi_prime)?)
}

/// Same entry, summing over the coset of an explicitly supplied `σ₀`.
pub fn projector_entry_with(lambda: &Partition, sigma0: &Permutation, pi: &Pairing, pi_prime: &Pairing) -> Result<Rational> {
    if pi_prime.conjugated_by(sigma0) != *pi {
        return Err(domain(format!("{sigma0} does not conjugate {pi_prime} onto {pi}")));
    }
    entry_from_histogram(lambda, &coset_class_histogram_with(sigma0, pi_prime)?)
}

/// The full matrix of `P_{2λ}` on `B_n`, one coset enumeration per loop type.
pub fn projector_matrix(lambda: &Partition) -> Result<Matrix<Rational>> {
    let n = lambda.weight();
    let basis = enumerate_pairings(n)?;
    let beta = Pairing::beta(n)?;
    let mut by_type: HashMap<Vec<usize>, Rational> = HashMap::new();
    for pi in &basis {
        let key = beta.loop_type(pi);
        if !by_type.contains_key(&key) {
            by_type.insert(key, projector_entry(lambda, &beta, pi)?);
        }
    }
    Ok(Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        by_type[&basis[i].loop_type(&basis[j])].clone()
    }))
}

