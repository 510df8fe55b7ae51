use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;

use super::character_table;
use crate::coeff::{Coefficient, Field, Rational};
use crate::error::Result;
use crate::groupalg::{jm_element, AlgebraElement};
use crate::symcore::{all_permutations, factorial, standard_tableaux, Partition, Permutation, StandardTableau};

/// Idempotents with more boxes than this are recomputed rather than memoized
/// (8 boxes means up to 40320 terms per element).
const MEMO_MAX_BOXES: usize = 7;

type IdempotentMemo = RwLock<HashMap<StandardTableau, Arc<AlgebraElement<Rational>>>>;

fn memo() -> &'static IdempotentMemo {
    static MEMO: OnceLock<IdempotentMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Young's orthogonal idempotent `e_T`, by Lagrange interpolation in the last
/// Jucys–Murphy element:
///
/// `e_T = e_{T̄} ∏_{T' ≠ T, T̄' = T̄} (m_n − c(T'_n)) / (c(T_n) − c(T'_n))`.
pub fn young_idempotent(t: &StandardTableau) -> Arc<AlgebraElement<Rational>> {
    if let Some(e) = memo().read().get(t) {
        return e.clone();
    }
    let n = t.size();
    let e = match t.parent() {
        None => AlgebraElement::unit(1),
        Some(parent) => {
            let mut acc = young_idempotent(&parent).embed(n).expect("n > n-1");
            let c = t.content(n).expect("n in T");
            let m_n = jm_element::<Rational>(n, n).expect("1 <= n");
            for sibling in parent.children().into_iter().filter(|s| s != t) {
                let c_other = sibling.content(n).expect("n in sibling");
                let inv = Rational::from_int(c - c_other).inv().expect("distinct corner contents");
                let shift = AlgebraElement::monomial(Permutation::identity(n), Rational::from_int(-c_other));
                let factor = m_n.add(&shift).expect("same size").scale(&inv);
                acc = acc.multiply(&factor).expect("same size");
            }
            acc
        }
    };
    let e = Arc::new(e);
    if n <= MEMO_MAX_BOXES {
        memo().write().entry(t.clone()).or_insert_with(|| e.clone());
    }
    e
}

/// Which formula builds the central idempotent `P_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CentralRoute {
    /// `Σ_{T ∈ SYT(λ)} e_T`.
    TableauSum,
    /// `(χ_λ(1)/n!) Σ_σ χ_λ(σ⁻¹) δ_σ`.
    Character,
}

/// The central idempotent of `λ` in `C[S_n]`.
pub fn central_idempotent(lambda: &Partition, route: CentralRoute) -> Result<AlgebraElement<Rational>> {
    let n = lambda.weight();
    match route {
        CentralRoute::TableauSum => {
            let mut acc = AlgebraElement::zero(n);
            for t in standard_tableaux(lambda) {
                acc = acc.add(&young_idempotent(&t))?;
            }
            Ok(acc)
        }
        CentralRoute::Character => {
            let table = character_table(n)?;
            let weight = Rational::new(lambda.hook_dimension() as i64, factorial(n) as i64);
            let mut by_class: HashMap<Partition, Rational> = HashMap::new();
            let terms = all_permutations(n)
                .into_iter()
                .map(|s| {
                    // σ and σ⁻¹ are conjugate, so χ(σ⁻¹) = χ(cycle type of σ)
                    let ct = s.cycle_type();
                    let c = match by_class.get(&ct) {
                        Some(c) => c.clone(),
                        None => {
                            let c = weight.mul_ref(&Rational::from_int(table.get(lambda, &ct)?));
                            by_class.insert(ct, c.clone());
                            c
                        }
                    };
                    Ok((s, c))
                })
                .collect::<Result<Vec<_>>>()?;
            AlgebraElement::from_terms(n, terms)
        }
    }
}
