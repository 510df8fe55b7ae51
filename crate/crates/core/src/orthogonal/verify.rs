//! Exact checks of the orthogonal-case identities in `C[S_{2n}]`.

use std::collections::BTreeSet;

use super::{coset_representative, gram_orthogonal, projector_matrix};
use crate::coeff::{Coefficient, Rational};
use crate::error::{domain, Result};
use crate::groupalg::{average_projector, hyperoctahedral_elements, jm_element, jm_product_orthogonal, AlgebraElement};
use crate::matrix::Matrix;
use crate::report::VerificationReport;
use crate::symcore::{enumerate_pairings, partitions_of, standard_tableaux, Pairing, Permutation, StandardTableau};
use crate::young::{central_idempotent, young_idempotent, CentralRoute};

fn double_factorial_odd(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

/// `(τ + m_{2n−1})⋯(τ + m_1) = Σ_π σ_π τ^{loops(β_n, π)}`, term by term.
pub fn verify_oid<C: Coefficient>(n: usize, tau: &C) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("oid", n, tau.to_string());
    let lhs = jm_product_orthogonal(n, tau)?;
    let beta = Pairing::beta(n)?;
    let pairings = enumerate_pairings(n)?;
    let reps = pairings.iter().map(coset_representative).collect::<Result<Vec<_>>>()?;
    let expected = double_factorial_odd(n);
    report.check(
        "term count",
        lhs.len() == expected && pairings.len() == expected,
        format!("{} terms, (2n-1)!! = {expected}", lhs.len()),
    );
    let distinct: BTreeSet<&Permutation> = reps.iter().map(|r| &r.sigma).collect();
    report.check("representatives distinct", distinct.len() == reps.len(), "");
    let bad = reps.iter().filter(|r| !r.holds()).count();
    report.check("representatives conjugate beta", bad == 0, format!("{bad} failures"));
    let rhs = AlgebraElement::from_terms(
        2 * n,
        reps.iter()
            .map(|r| (r.sigma.clone(), tau.pow(beta.loop_type(&r.pairing).len() as u32))),
    )?;
    report.check("expansion matches", lhs == rhs, "");
    Ok(report)
}

/// `G P_H = P_H G`, and `σ_π P_H G = Σ_{π'} G[π', π] σ_{π'} P_H` for every `π`.
pub fn verify_stability_lemma<C: Coefficient>(n: usize, tau: &C) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("stability", n, tau.to_string());
    let g = jm_product_orthogonal(n, tau)?;
    let ph: AlgebraElement<C> = average_projector(n)?;
    let phg = ph.multiply(&g)?;
    report.check("G P_H = P_H G", g.multiply(&ph)? == phg, "");

    let pairings = enumerate_pairings(n)?;
    let reps = pairings.iter().map(coset_representative).collect::<Result<Vec<_>>>()?;
    let h = hyperoctahedral_elements(n)?;
    let order = C::from_int(h.len() as i64);
    let inv_order = C::from_rational(&Rational::new(1, h.len() as i64));
    let gram = gram_orthogonal(n, tau)?;
    let mut extracted = Matrix::zeros(pairings.len(), pairings.len());
    let mut expansion_ok = true;
    for (j, rep) in reps.iter().enumerate() {
        let lhs = phg.left_translate(&rep.sigma);
        let mut terms = Vec::with_capacity(pairings.len() * h.len());
        for (i, other) in reps.iter().enumerate() {
            extracted.set(i, j, lhs.coefficient(&other.sigma).mul_ref(&order));
            let c = gram.get(i, j).mul_ref(&inv_order);
            terms.extend(h.iter().map(|x| (other.sigma.then_after(x), c.clone())));
        }
        expansion_ok &= lhs == AlgebraElement::from_terms(2 * n, terms)?;
    }
    report.check("basis expansion exact", expansion_ok, "");
    report.check("extracted matrix equals Gram", extracted == gram, "");
    Ok(report)
}

/// `P_H (m_{2k} − m_{2k−1} − 1) = 0`.
pub fn verify_key_identity(n: usize, k: usize) -> Result<VerificationReport> {
    if k == 0 || k > n {
        return Err(domain(format!("k = {k} outside 1..={n}")));
    }
    let mut report = VerificationReport::new("keyid", n, "-");
    let m = 2 * n;
    let ph: AlgebraElement<Rational> = average_projector(n)?;
    let inner = jm_element(2 * k, m)?
        .sub(&jm_element(2 * k - 1, m)?)?
        .sub(&AlgebraElement::unit(m))?;
    let product = ph.multiply(&inner)?;
    report.check(format!("k = {k}"), product.is_zero(), format!("{} surviving terms", product.len()));
    Ok(report)
}

/// Whether `P_H e_T` vanishes, via `‖P_H e_T‖² = (1/|H|) Σ_{h ∈ H} e_T(h)`.
fn survives_by_norm(e: &AlgebraElement<Rational>, h: &[Permutation]) -> bool {
    !e.coefficient_sum(h.iter()).is_zero()
}

/// `P_H e_T ≠ 0` exactly for doubled tableaux `T` with `2n` boxes.
///
/// Up to six boxes the product is expanded and the norm shortcut is checked
/// against it; with `deep` the eight-box case is run by the norm alone.
pub fn verify_doubling(n: usize, deep: bool) -> Result<VerificationReport> {
    if n > 4 || (n == 4 && !deep) {
        return Err(domain(format!("doubling at 2n = {} needs the deep flag and 2n <= 8", 2 * n)));
    }
    let mut report = VerificationReport::new("doubling", n, "-");
    let ph: AlgebraElement<Rational> = average_projector(n)?;
    let h = hyperoctahedral_elements(n)?;
    let direct = 2 * n <= 6;
    let mut survivors: BTreeSet<StandardTableau> = BTreeSet::new();
    let mut norm_agrees = true;
    for shape in partitions_of(2 * n)? {
        for t in standard_tableaux(&shape) {
            let e = young_idempotent(&t);
            let by_norm = survives_by_norm(&e, &h);
            let alive = if direct {
                let alive = !ph.multiply(&e)?.is_zero();
                norm_agrees &= alive == by_norm;
                alive
            } else {
                by_norm
            };
            if alive {
                survivors.insert(t);
            }
        }
    }
    if direct {
        report.check("norm shortcut agrees with product", norm_agrees, "");
    }
    let doubles: BTreeSet<StandardTableau> = partitions_of(n)?
        .iter()
        .flat_map(standard_tableaux)
        .map(|t| t.double())
        .collect();
    report.check(
        "survivors are the doubled tableaux",
        survivors == doubles,
        format!("{} survivors, {} doubles", survivors.len(), doubles.len()),
    );
    report.check(
        "survivor rows have even length",
        survivors.iter().all(|t| t.shape().has_even_rows() && t.is_doubled()),
        "",
    );
    Ok(report)
}

/// `G(τ₁) G(τ₂) = G(τ₂) G(τ₁)` for the Gram matrices on `B_n`.
pub fn verify_gram_commutation(n: usize, tau1: &Rational, tau2: &Rational) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("commute", n, format!("{tau1},{tau2}"));
    let a = gram_orthogonal(n, tau1)?;
    let b = gram_orthogonal(n, tau2)?;
    report.check("G(t1) G(t2) = G(t2) G(t1)", a.mul(&b)? == b.mul(&a)?, "");
    Ok(report)
}

/// Matrix of left multiplication by `x` on `C[B_n]` in the basis `σ_π P_H`,
/// read off as `|H|` times the coefficient of `σ_π` in `x σ_{π'} P_H`.
pub fn matrix_on_pairings<C: Coefficient>(x: &AlgebraElement<C>, n: usize) -> Result<Matrix<C>> {
    let ph: AlgebraElement<C> = average_projector(n)?;
    let xph = x.multiply(&ph)?;
    let reps = enumerate_pairings(n)?
        .iter()
        .map(coset_representative)
        .collect::<Result<Vec<_>>>()?;
    let order = C::from_int(hyperoctahedral_elements(n)?.len() as i64);
    let mut out = Matrix::zeros(reps.len(), reps.len());
    for (j, col) in reps.iter().enumerate() {
        // x is central here, so x σ P_H = σ x P_H
        let v = xph.left_translate(&col.sigma);
        for (i, row) in reps.iter().enumerate() {
            out.set(i, j, v.coefficient(&row.sigma).mul_ref(&order));
        }
    }
    Ok(out)
}

/// The coset-sum projector entries agree with the restriction of the central
/// idempotents `P_{2λ}` built by the character route.
pub fn verify_projector_routes(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("projector-routes", n, "-");
    let size = double_factorial_odd(n);
    let mut sum = Matrix::<Rational>::zeros(size, size);
    for lambda in partitions_of(n)? {
        let coset = projector_matrix(&lambda)?;
        let central = central_idempotent(&lambda.double(), CentralRoute::Character)?;
        let restricted = matrix_on_pairings(&central, n)?;
        report.check(format!("{lambda}: routes agree"), coset == restricted, "");
        report.check(format!("{lambda}: symmetric"), coset.is_symmetric(), "");
        report.check(format!("{lambda}: idempotent"), coset.mul(&coset)? == coset, "");
        sum = sum.add(&coset)?;
    }
    report.check("projectors resolve the identity", sum == Matrix::identity(size), "");
    Ok(report)
}

/// `P_H G = P_H Σ_λ c_λ P_{2λ}` in `C[S_{2n}]`.
pub fn verify_projected_decomposition<C: Coefficient>(n: usize, tau: &C) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("projected-decomposition", n, tau.to_string());
    let ph: AlgebraElement<C> = average_projector(n)?;
    let lhs = ph.multiply(&jm_product_orthogonal(n, tau)?)?;
    let mut sum = AlgebraElement::zero(2 * n);
    for lambda in partitions_of(n)? {
        let c = super::c_orthogonal(&lambda, tau);
        let p = central_idempotent(&lambda.double(), CentralRoute::TableauSum)?;
        sum = sum.add(&p.map_coeffs(|r| c.scale(r)))?;
    }
    report.check("P_H G = P_H sum c P_2lambda", lhs == ph.multiply(&sum)?, "");
    Ok(report)
}

