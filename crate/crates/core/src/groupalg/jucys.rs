use super::AlgebraElement;
use crate::coeff::Coefficient;
use crate::error::{domain, Result};
use crate::symcore::Permutation;

/// The Jucys–Murphy element `m_k = Σ_{i<k} (i k)` in `C[S_n]`, with `m_1 = 0`.
pub fn jm_element<C: Coefficient>(k: usize, n: usize) -> Result<AlgebraElement<C>> {
    if k == 0 || k > n {
        return Err(domain(format!("Jucys–Murphy index {k} outside 1..={n}")));
    }
    AlgebraElement::from_terms(
        n,
        (1..k).map(|i| (Permutation::transposition(n, i, k).expect("valid"), C::one())),
    )
}

/// `τ + m_k` in `C[S_n]`.
fn shifted_jm<C: Coefficient>(k: usize, n: usize, tau: &C) -> Result<AlgebraElement<C>> {
    jm_element(k, n)?.add(&AlgebraElement::monomial(Permutation::identity(n), tau.clone()))
}

/// `(τ + m_1)(τ + m_2)⋯(τ + m_n)` expanded in `C[S_n]`.
pub fn jm_product_unitary<C: Coefficient>(n: usize, tau: &C) -> Result<AlgebraElement<C>> {
    if n == 0 {
        return Err(domain("jm_product_unitary requires n >= 1"));
    }
    let mut acc = AlgebraElement::unit(n);
    for k in 1..=n {
        acc = acc.multiply(&shifted_jm(k, n, tau)?)?;
    }
    Ok(acc)
}

/// `(τ + m_{2n−1})⋯(τ + m_3)(τ + m_1)` expanded in `C[S_{2n}]`.
pub fn jm_product_orthogonal<C: Coefficient>(n: usize, tau: &C) -> Result<AlgebraElement<C>> {
    if n == 0 {
        return Err(domain("jm_product_orthogonal requires n >= 1"));
    }
    let m = 2 * n;
    let mut acc = AlgebraElement::unit(m);
    for k in (1..=n).rev() {
        acc = acc.multiply(&shifted_jm(2 * k - 1, m, tau)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Rational, TauPolynomial};
    use crate::symcore::{all_permutations, enumerate_pairings};
    use rand::seq::IndexedRandom;
    use rand::{Rng, SeedableRng};

    type Q = Rational;
    type P = TauPolynomial;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    fn tp(n: usize, i: usize, j: usize) -> Permutation {
        Permutation::transposition(n, i, j).unwrap()
    }

    #[test]
    fn jm_elements() {
        assert!(jm_element::<Q>(1, 3).unwrap().is_zero());
        assert_eq!(
            jm_element::<Q>(3, 3).unwrap(),
            AlgebraElement::from_terms(3, [(tp(3, 1, 3), Q::one()), (tp(3, 2, 3), Q::one())]).unwrap()
        );
        assert_eq!(jm_element::<Q>(2, 2).unwrap(), AlgebraElement::basis(tp(2, 1, 2)));
        assert!(jm_element::<Q>(0, 3).is_err());
        assert!(jm_element::<Q>(4, 3).is_err());
    }

    #[test]
    fn hand_expanded_square() {
        // (δ_(12) + δ_(13))² = 2 δ_id + δ_(123) + δ_(132)
        let a = AlgebraElement::<Q>::from_terms(3, [(tp(3, 1, 2), Q::one()), (tp(3, 1, 3), Q::one())]).unwrap();
        let expected = AlgebraElement::from_terms(
            3,
            [
                (Permutation::identity(3), Q::from_int(2)),
                (perm(&[2, 3, 1]), Q::one()),
                (perm(&[3, 1, 2]), Q::one()),
            ],
        )
        .unwrap();
        assert_eq!(a.multiply(&a).unwrap(), expected);
        let s = perm(&[2, 3, 1]);
        let prod = AlgebraElement::<Q>::basis(s.clone())
            .multiply(&AlgebraElement::basis(s.inverse()))
            .unwrap();
        assert_eq!(prod, AlgebraElement::unit(3));
        assert_eq!(a.multiply(&AlgebraElement::unit(3)).unwrap(), a);
        assert!(a.multiply(&AlgebraElement::unit(2)).is_err());
    }

    #[test]
    fn unitary_product_small_cases() {
        let t = P::tau();
        let one = jm_product_unitary(1, &t).unwrap();
        assert_eq!(one, AlgebraElement::monomial(Permutation::identity(1), t.clone()));
        let two = jm_product_unitary(2, &t).unwrap();
        let expected = AlgebraElement::from_terms(
            2,
            [(Permutation::identity(2), t.pow(2)), (tp(2, 1, 2), t.clone())],
        )
        .unwrap();
        assert_eq!(two, expected);
        let three = jm_product_unitary(3, &t).unwrap();
        assert_eq!(three.coefficient(&perm(&[2, 3, 1])), t);
        assert_eq!(three.coefficient(&perm(&[3, 1, 2])), t);
    }

    #[test]
    fn orthogonal_product_small_cases() {
        let t = P::tau();
        assert_eq!(
            jm_product_orthogonal(1, &t).unwrap(),
            AlgebraElement::monomial(Permutation::identity(2), t.clone())
        );
        let two = jm_product_orthogonal(2, &t).unwrap();
        let expected = AlgebraElement::from_terms(
            4,
            [
                (Permutation::identity(4), t.pow(2)),
                (tp(4, 1, 3), t.clone()),
                (tp(4, 2, 3), t.clone()),
            ],
        )
        .unwrap();
        assert_eq!(two, expected);
        assert_eq!(jm_product_orthogonal(3, &t).unwrap().len(), 15);
        assert_eq!(
            jm_product_orthogonal(4, &t).unwrap().len(),
            enumerate_pairings(4).unwrap().len()
        );
    }

    #[test]
    fn jm_elements_commute() {
        for n in 1..=6 {
            let ms: Vec<AlgebraElement<Q>> = (1..=n).map(|k| jm_element(k, n).unwrap()).collect();
            for a in &ms {
                for b in &ms {
                    assert!(a.commutes_with(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn jm_commutes_with_smaller_group_algebra() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=6 {
            for k in 2..=n {
                let small = all_permutations(k - 1);
                let mk = jm_element::<Q>(k, n).unwrap();
                for _ in 0..5 {
                    let terms = (0..4).map(|_| {
                        let p = small.choose(&mut rng).unwrap().extend(n);
                        (p, Q::from_int(rng.random_range(-5..=5)))
                    });
                    let x = AlgebraElement::from_terms(n, terms).unwrap();
                    assert!(mk.commutes_with(&x).unwrap(), "m_{k} in S_{n}");
                }
            }
        }
    }

    #[test]
    fn unitary_product_over_rationals_matches_symbolic_evaluation() {
        let sym = jm_product_unitary(4, &P::tau()).unwrap();
        let at5 = jm_product_unitary(4, &Q::from_int(5)).unwrap();
        assert_eq!(sym.map_coeffs(|c| c.evaluate(&Q::from_int(5))), at5);
    }
}
