//! Unitary-group Gram and Weingarten matrices on the basis `S_n`.
//!
//! The Gram matrix is `G[σ, σ'] = τ^{#cycles(σ⁻¹σ')}`. Its algebra element
//! `Σ_σ τ^{#cycles(σ)} δ_σ` equals `∏_k (τ + m_k) = Σ_λ c_λ P_λ` with
//! `c_λ = ∏_{(i,j) ∈ λ} (τ + j − i)`, so the Weingarten matrix is assembled
//! from the class function `w(μ) = (1/n!) Σ_{c_λ ≠ 0} c_λ⁻¹ χ_λ(1) χ_λ(μ)`.

use std::collections::HashMap;

use crate::coeff::{Coefficient, Field, Rational};
use crate::error::{domain, Result};
use crate::groupalg::AlgebraElement;
use crate::matrix::Matrix;
use crate::symcore::{all_permutations, factorial, partitions_of, Partition, Permutation};
use crate::table::{Group, TauSpec, WeingartenTable};
use crate::young::{central_idempotent, character_table, CentralRoute};

/// `c_λ = ∏_{(i,j) ∈ λ} (τ + j − i)`.
pub fn c_unitary<C: Coefficient>(lambda: &Partition, tau: &C) -> C {
    lambda.boxes().fold(C::one(), |acc, (i, j)| {
        acc.mul_ref(&tau.add_ref(&C::from_int(j as i64 - i as i64)))
    })
}

/// `Σ_σ τ^{#cycles(σ)} δ_σ`.
pub fn gram_element<C: Coefficient>(n: usize, tau: &C) -> Result<AlgebraElement<C>> {
    if n == 0 {
        return Err(domain("n must be >= 1"));
    }
    let powers: Vec<C> = (0..=n as u32).map(|k| tau.pow(k)).collect();
    AlgebraElement::from_terms(
        n,
        all_permutations(n).into_iter().map(|s| {
            let c = powers[s.num_cycles()].clone();
            (s, c)
        }),
    )
}

/// `G[σ, σ'] = τ^{#cycles(σ⁻¹σ')}` on `S_n` in canonical order.
pub fn gram_unitary<C: Coefficient>(n: usize, tau: &C) -> Result<Matrix<C>> {
    if n == 0 {
        return Err(domain("n must be >= 1"));
    }
    let basis = all_permutations(n);
    let powers: Vec<C> = (0..=n as u32).map(|k| tau.pow(k)).collect();
    Ok(Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        powers[basis[i].inverse().then_after(&basis[j]).num_cycles()].clone()
    }))
}

/// Partitions of `n` whose `c_λ` vanishes at `τ`.
pub fn excluded_unitary<C: Coefficient>(n: usize, tau: &C) -> Result<Vec<Partition>> {
    Ok(partitions_of(n)?
        .into_iter()
        .filter(|l| c_unitary(l, tau).is_zero())
        .collect())
}

/// Values of the Weingarten class function on every cycle type of `S_n`.
pub fn wg_class_values<F: Field>(n: usize, tau: &F) -> Result<HashMap<Partition, F>> {
    let table = character_table(n)?;
    let inv_fact = F::from_rational(&Rational::new(1, factorial(n) as i64));
    let weights: Vec<(usize, F)> = table
        .partitions()
        .iter()
        .enumerate()
        .filter_map(|(i, l)| {
            let c = c_unitary(l, tau);
            if c.is_zero() {
                return None;
            }
            let dim = F::from_int(l.hook_dimension() as i64);
            Some(c.inv().map(|ci| (i, ci.mul_ref(&dim).mul_ref(&inv_fact))))
        })
        .collect::<Result<_>>()?;
    Ok(table
        .partitions()
        .iter()
        .enumerate()
        .map(|(j, mu)| {
            let mut acc = F::zero();
            for (i, w) in &weights {
                let chi = table.values()[*i][j];
                if chi != 0 {
                    acc.add_assign_ref(&w.mul_ref(&F::from_int(chi)));
                }
            }
            (mu.clone(), acc)
        })
        .collect())
}

/// `w(μ) = (1/n!) Σ_{λ: c_λ ≠ 0} c_λ⁻¹ χ_λ(1) χ_λ(μ)`.
pub fn wg_function_unitary<F: Field>(mu: &Partition, tau: &F) -> Result<F> {
    let values = wg_class_values(mu.weight(), tau)?;
    Ok(values[mu].clone())
}

/// `W = Σ_{c_λ ≠ 0} c_λ⁻¹ P_λ` as an element of `C[S_n]`.
pub fn weingarten_element_unitary<F: Field>(n: usize, tau: &F) -> Result<AlgebraElement<F>> {
    let mut acc = AlgebraElement::zero(n);
    for lambda in partitions_of(n)? {
        let c = c_unitary(&lambda, tau);
        if c.is_zero() {
            continue;
        }
        let p = central_idempotent(&lambda, CentralRoute::Character)?;
        let ci = c.inv()?;
        acc = acc.add(&p.map_coeffs(|r| ci.mul_ref(&F::from_rational(r))))?;
    }
    Ok(acc)
}

/// Gram and Weingarten matrices of `U(τ)` on `S_n`.
pub fn weingarten_unitary<F: Field>(n: usize, tau: &F, spec: TauSpec) -> Result<WeingartenTable<F>> {
    let basis = all_permutations(n);
    let values = wg_class_values(n, tau)?;
    let weingarten = Matrix::from_fn(basis.len(), basis.len(), |i, j| {
        values[&basis[i].then_after(&basis[j].inverse()).cycle_type()].clone()
    });
    Ok(WeingartenTable {
        group: Group::Unitary,
        n,
        tau: spec,
        basis: basis.iter().map(Permutation::to_string).collect(),
        gram: gram_unitary(n, tau)?,
        weingarten,
        excluded: excluded_unitary(n, tau)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{TauPolynomial, TauRational};
    use crate::groupalg::{jm_product_unitary, Side};
    use crate::table::{is_left_inverse, pseudo_inverse_check};

    type Q = Rational;
    type P = TauPolynomial;
    type R = TauRational;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> R {
        R::new(P::from_ints(num), P::from_ints(den)).unwrap()
    }

    /// Inverse of a symbolic matrix by fraction-field Gauss–Jordan elimination;
    /// independent of the class-function construction.
    fn gauss_jordan_inverse(g: &Matrix<R>) -> Matrix<R> {
        let n = g.rows();
        let mut a: Vec<Vec<R>> = g.row_vecs();
        let mut inv: Vec<Vec<R>> = Matrix::<R>::identity(n).row_vecs();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).unwrap();
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pi = a[col][col].inv().unwrap();
            for k in 0..n {
                a[col][k] = a[col][k].mul_ref(&pi);
                inv[col][k] = inv[col][k].mul_ref(&pi);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in 0..n {
                        a[r][k] = a[r][k].sub_ref(&f.mul_ref(&a[col][k]));
                        inv[r][k] = inv[r][k].sub_ref(&f.mul_ref(&inv[col][k]));
                    }
                }
            }
        }
        Matrix::from_rows(inv).unwrap()
    }

    #[test]
    fn content_products() {
        let t = P::tau();
        assert_eq!(c_unitary(&p("[2]"), &t), P::from_ints(&[0, 1, 1]));
        assert_eq!(c_unitary(&p("[1,1]"), &t), P::from_ints(&[0, -1, 1]));
        assert!(c_unitary(&p("[1,1,1]"), &Q::from_int(2)).is_zero());
    }

    #[test]
    fn gram_small_cases() {
        let t = P::tau();
        assert_eq!(gram_unitary(1, &t).unwrap(), Matrix::from_rows(vec![vec![t.clone()]]).unwrap());
        let g2 = gram_unitary(2, &t).unwrap();
        let expected = Matrix::from_rows(vec![vec![t.pow(2), t.clone()], vec![t.clone(), t.pow(2)]]).unwrap();
        assert_eq!(g2, expected);
        let g4 = gram_unitary(4, &t).unwrap();
        assert!(g4.is_symmetric());
        assert!((0..24).all(|i| *g4.get(i, i) == t.pow(4)));
    }

    #[test]
    fn class_function_spot_values() {
        let t = R::tau();
        assert_eq!(wg_function_unitary(&p("[1]"), &t).unwrap(), rf(&[1], &[0, 1]));
        assert_eq!(wg_function_unitary(&p("[1,1]"), &t).unwrap(), rf(&[1], &[-1, 0, 1]));
        assert_eq!(wg_function_unitary(&p("[2]"), &t).unwrap(), rf(&[-1], &[0, -1, 0, 1]));
        assert_eq!(wg_function_unitary(&p("[1]"), &Q::from_int(5)).unwrap(), Q::new(1, 5));
    }

    #[test]
    fn small_tables_match_direct_inversion() {
        let t = R::tau();
        for n in 1..=3 {
            let table = weingarten_unitary(n, &t, TauSpec::Symbolic).unwrap();
            let g = gram_unitary(n, &t).unwrap();
            assert_eq!(table.weingarten, gauss_jordan_inverse(&g), "n = {n}");
        }
        let w1 = weingarten_unitary(1, &Q::from_int(7), TauSpec::Value(Q::from_int(7))).unwrap();
        assert_eq!(w1.weingarten, Matrix::from_rows(vec![vec![Q::new(1, 7)]]).unwrap());
    }

    #[test]
    fn gram_is_the_regular_matrix_of_the_jm_product() {
        let t = P::tau();
        for n in 1..=4 {
            let basis = all_permutations(n);
            let jm = jm_product_unitary(n, &t).unwrap();
            let g = gram_unitary(n, &t).unwrap();
            assert_eq!(jm.regular_matrix(&basis, Side::Left).unwrap(), g);
            assert_eq!(jm.regular_matrix(&basis, Side::Right).unwrap(), g);
        }
    }

    #[test]
    fn gram_element_decomposes_over_central_idempotents() {
        let t = P::tau();
        for n in 1..=4 {
            let mut acc = AlgebraElement::zero(n);
            for lambda in partitions_of(n).unwrap() {
                let c = c_unitary(&lambda, &t);
                let pl = central_idempotent(&lambda, CentralRoute::TableauSum).unwrap();
                acc = acc.add(&pl.map_coeffs(|r| c.scale(r))).unwrap();
            }
            assert_eq!(acc, gram_element(n, &t).unwrap());
        }
    }

    #[test]
    fn degenerate_tau_keeps_pseudo_inverse() {
        let one = Q::one();
        let table = weingarten_unitary(3, &one, TauSpec::Value(one.clone())).unwrap();
        assert_eq!(table.excluded, vec![p("[2,1]"), p("[1,1,1]")]);
        let report = pseudo_inverse_check(&table.gram, &table.weingarten);
        assert!(report.passed(), "{report:?}");
        assert!(!is_left_inverse(&table.weingarten, &table.gram));
    }

    #[test]
    fn invertible_regime_and_matrix_of_the_element() {
        let five = Q::from_int(5);
        let table = weingarten_unitary(3, &five, TauSpec::Value(five.clone())).unwrap();
        assert!(table.excluded.is_empty());
        assert!(is_left_inverse(&table.weingarten, &table.gram));
        let basis = all_permutations(3);
        let w = weingarten_element_unitary(3, &five).unwrap();
        assert_eq!(w.regular_matrix(&basis, Side::Left).unwrap(), table.weingarten);
    }

    #[test]
    fn class_function_is_conjugation_invariant() {
        use rand::seq::IndexedRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let t = Q::from_int(7);
        for n in 1..=5 {
            let values = wg_class_values(n, &t).unwrap();
            let table = weingarten_unitary(n, &t, TauSpec::Value(t.clone())).unwrap();
            let basis = all_permutations(n);
            for _ in 0..20 {
                let i = (0..basis.len()).collect::<Vec<_>>().choose(&mut rng).copied().unwrap();
                let j = (0..basis.len()).collect::<Vec<_>>().choose(&mut rng).copied().unwrap();
                let g = basis.choose(&mut rng).unwrap();
                // conjugating both basis elements leaves the entry unchanged
                let gi = basis.iter().position(|x| *x == g.conjugate(&basis[i])).unwrap();
                let gj = basis.iter().position(|x| *x == g.conjugate(&basis[j])).unwrap();
                assert_eq!(table.weingarten.get(i, j), table.weingarten.get(gi, gj));
                let ct = basis[i].then_after(&basis[j].inverse()).cycle_type();
                assert_eq!(table.weingarten.get(i, j), &values[&ct]);
            }
        }
    }
}
