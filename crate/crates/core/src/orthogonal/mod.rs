//! Orthogonal-group machinery on the pairing basis `B_n`.
//!
//! Pairings `π` of `{1, ..., 2n}` are identified with the vectors `σ_π P_H` of
//! `C[S_{2n}]`, where `H = H_n` is the hyperoctahedral stabilizer of `β_n` and
//! `σ_π β_n σ_π⁻¹ = π`. The Gram matrix is `τ^{loops(π, π')}` and the
//! Weingarten matrix is `Σ_{c_λ ≠ 0} c_λ⁻¹ P_{2λ}` restricted to `C[B_n]`.

mod coset;
mod projector;
pub mod verify;

pub use coset::{coset_representative, matching_conjugator, CosetRepresentative};
pub use projector::{
    coset_class_histogram, coset_class_histogram_with, projector_entry, projector_entry_with, projector_matrix,
};

use std::collections::HashMap;

use crate::coeff::{Coefficient, Field, Rational};
use crate::error::{domain, Result};
use crate::matrix::Matrix;
use crate::symcore::{enumerate_pairings, factorial, partitions_of, Pairing, Partition};
use crate::table::{Group, TauSpec, WeingartenTable};
use crate::young::character_table;

/// `β_n = (1 2)(3 4)⋯(2n−1 2n)`.
pub fn beta(n: usize) -> Result<Pairing> {
    Pairing::beta(n)
}

/// `G[π, π'] = τ^{loops(π, π')}` on `B_n` in canonical order.
pub fn gram_orthogonal<C: Coefficient>(n: usize, tau: &C) -> Result<Matrix<C>> {
    let basis = enumerate_pairings(n)?;
    let powers: Vec<C> = (0..=n as u32).map(|k| tau.pow(k)).collect();
    Ok(Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        powers[basis[i].loop_type(&basis[j]).len()].clone()
    }))
}

/// `c_λ = ∏_{(i,j) ∈ λ} (τ + 2j − 1 − i)`.
pub fn c_orthogonal<C: Coefficient>(lambda: &Partition, tau: &C) -> C {
    lambda.boxes().fold(C::one(), |acc, (i, j)| {
        acc.mul_ref(&tau.add_ref(&C::from_int(2 * j as i64 - 1 - i as i64)))
    })
}

/// Partitions of `n` whose `c_λ` vanishes at `τ`.
pub fn excluded_orthogonal<C: Coefficient>(n: usize, tau: &C) -> Result<Vec<Partition>> {
    Ok(partitions_of(n)?
        .into_iter()
        .filter(|l| c_orthogonal(l, tau).is_zero())
        .collect())
}

/// `Σ_λ c_λ⁻¹ (P_{2λ})_{π,π'}` from the class histogram of the coset, for
/// every `λ` with `c_λ ≠ 0`.
fn weingarten_value<F: Field>(
    n: usize,
    histogram: &[(Partition, u64)],
    weights: &[(Partition, F)],
) -> Result<F> {
    let table = character_table(2 * n)?;
    let mut acc = F::zero();
    for (lambda, w) in weights {
        let doubled = lambda.double();
        let mut sum = 0i128;
        for (mu, count) in histogram {
            sum += table.get(&doubled, mu)? as i128 * *count as i128;
        }
        if sum != 0 {
            let s = F::from_rational(&Rational::from_bigs(sum.into(), 1.into())?);
            acc.add_assign_ref(&w.mul_ref(&s));
        }
    }
    Ok(acc)
}

/// Gram and Weingarten matrices of `O(τ)` on `B_n`.
///
/// Entries depend only on the loop type of `(π, π')`, so one coset
/// enumeration per loop type suffices.
pub fn weingarten_orthogonal<F: Field>(n: usize, tau: &F, spec: TauSpec) -> Result<WeingartenTable<F>> {
    let basis = enumerate_pairings(n)?;
    let norm = Rational::new(1, factorial(2 * n) as i64);
    let mut weights = Vec::new();
    for lambda in partitions_of(n)? {
        let c = c_orthogonal(&lambda, tau);
        if c.is_zero() {
            continue;
        }
        let dim = lambda.double().hook_dimension() as i64;
        let w = c.inv()?.mul_ref(&F::from_rational(&Rational::from_int(dim).mul_ref(&norm)));
        weights.push((lambda, w));
    }
    let beta = Pairing::beta(n)?;
    let mut by_type: HashMap<Vec<usize>, F> = HashMap::new();
    for pi in &basis {
        let key = beta.loop_type(pi);
        if by_type.contains_key(&key) {
            continue;
        }
        let histogram = coset_class_histogram(&beta, pi)?;
        by_type.insert(key, weingarten_value(n, &histogram, &weights)?);
    }
    let weingarten = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        by_type[&basis[i].loop_type(&basis[j])].clone()
    });
    Ok(WeingartenTable {
        group: Group::Orthogonal,
        n,
        tau: spec,
        basis: basis.iter().map(Pairing::to_string).collect(),
        gram: gram_orthogonal(n, tau)?,
        weingarten,
        excluded: excluded_orthogonal(n, tau)?,
    })
}

/// A pairing whose loops against `β_n` have the lengths `μ`.
///
/// Each loop of length `L` occupies `2L` consecutive points `p..p+2L−1` and
/// pairs `(p+1, p+2), (p+3, p+4), ..., (p+2L−1, p)`.
pub fn pairing_with_loop_type(mu: &Partition) -> Result<Pairing> {
    let mut pairs = Vec::with_capacity(mu.weight());
    let mut start = 1;
    for &len in mu.parts() {
        if len == 1 {
            pairs.push((start, start + 1));
        } else {
            for k in 0..len - 1 {
                pairs.push((start + 2 * k + 1, start + 2 * k + 2));
            }
            pairs.push((start + 2 * len - 1, start));
        }
        start += 2 * len;
    }
    Pairing::from_pairs(&pairs)
}

/// `W[π, π']` for a single pair, without building the table.
pub fn weingarten_entry_orthogonal<F: Field>(pi: &Pairing, pi_prime: &Pairing, tau: &F) -> Result<F> {
    if pi.points() != pi_prime.points() {
        return Err(domain("pairings of different sizes"));
    }
    let n = pi.order();
    let norm = Rational::new(1, factorial(2 * n) as i64);
    let mut weights = Vec::new();
    for lambda in partitions_of(n)? {
        let c = c_orthogonal(&lambda, tau);
        if !c.is_zero() {
            let dim = lambda.double().hook_dimension() as i64;
            weights.push((
                lambda,
                c.inv()?.mul_ref(&F::from_rational(&Rational::from_int(dim).mul_ref(&norm))),
            ));
        }
    }
    weingarten_value(n, &coset_class_histogram(pi, pi_prime)?, &weights)
}
