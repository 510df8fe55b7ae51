//! Named verification suites with their default size caps.

use std::fmt;
use std::str::FromStr;

use crate::coeff::{Coefficient, Field, Rational, TauPolynomial, TauRational};
use crate::error::{domain, parse_err, Result, WgError};
use crate::groupalg::{jm_element, jm_product_unitary, AlgebraElement, Side};
use crate::orthogonal::{self, verify as ov};
use crate::report::VerificationReport;
use crate::symcore::{all_permutations, partitions_of, standard_tableaux, Permutation};
use crate::table::{pseudo_inverse_check, TauSpec, WeingartenTable};
use crate::unitary;
use crate::young::{central_idempotent, character_table, young_idempotent, CentralRoute};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Jucys,
    Oid,
    Idempotents,
    Central,
    PseudoInverse,
    Doubling,
    KeyId,
    Stability,
    Commute,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Jucys,
        Suite::Oid,
        Suite::Idempotents,
        Suite::Central,
        Suite::PseudoInverse,
        Suite::Doubling,
        Suite::KeyId,
        Suite::Stability,
        Suite::Commute,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jucys => "jucys",
            Suite::Oid => "oid",
            Suite::Idempotents => "idempotents",
            Suite::Central => "central",
            Suite::PseudoInverse => "pseudoinverse",
            Suite::Doubling => "doubling",
            Suite::KeyId => "keyid",
            Suite::Stability => "stability",
            Suite::Commute => "commute",
            Suite::All => "all",
        }
    }

    /// Largest `n` run by default; `numeric` means a concrete `τ` was given.
    pub fn cap(self, numeric: bool, deep: bool) -> usize {
        match self {
            Suite::Jucys => 6,
            Suite::Oid => {
                if numeric {
                    5
                } else {
                    4
                }
            }
            Suite::Idempotents | Suite::Central => 5,
            Suite::PseudoInverse => {
                if numeric {
                    5
                } else {
                    4
                }
            }
            Suite::Doubling => {
                if deep {
                    4
                } else {
                    3
                }
            }
            Suite::KeyId | Suite::Stability | Suite::Commute => 4,
            Suite::All => usize::MAX,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = WgError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| parse_err(format!("unknown suite {s:?}")))
    }
}

/// Options shared by every suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub tau: Option<Rational>,
    pub deep: bool,
    pub force: bool,
}

/// Runs one suite (or all of them) at size `n`.
///
/// Over-cap sizes are a domain error for a single suite unless `force` is set;
/// under `all` they are listed as skipped instead.
pub fn run_suite(suite: Suite, n: usize, opts: &SuiteOptions) -> Result<VerificationReport> {
    if n == 0 {
        return Err(domain("n must be >= 1"));
    }
    let tau_label = opts.tau.as_ref().map_or("symbolic".to_string(), |t| t.to_string());
    if suite == Suite::All {
        let mut report = VerificationReport::new("all", n, tau_label);
        for s in Suite::EACH {
            if n > s.cap(opts.tau.is_some(), opts.deep) && !opts.force {
                report.skip(format!("{s}: n = {n} above cap {}", s.cap(opts.tau.is_some(), opts.deep)));
                continue;
            }
            report.extend(run_one(s, n, opts)?);
        }
        return Ok(report);
    }
    let cap = suite.cap(opts.tau.is_some(), opts.deep);
    if n > cap && !opts.force {
        return Err(domain(format!("suite {suite} caps n at {cap}; pass --force to override")));
    }
    run_one(suite, n, opts)
}

fn run_one(suite: Suite, n: usize, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut report = match suite {
        Suite::Jucys => match &opts.tau {
            Some(t) => verify_jucys(n, t)?,
            None => verify_jucys(n, &TauPolynomial::tau())?,
        },
        Suite::Oid => match &opts.tau {
            Some(t) => ov::verify_oid(n, t)?,
            None => ov::verify_oid(n, &TauPolynomial::tau())?,
        },
        Suite::Idempotents => verify_idempotents(n)?,
        Suite::Central => verify_central(n)?,
        Suite::PseudoInverse => match &opts.tau {
            Some(t) => verify_pseudo_inverse(n, t, TauSpec::Value(t.clone()))?,
            None => verify_pseudo_inverse(n, &TauRational::tau(), TauSpec::Symbolic)?,
        },
        Suite::Doubling => {
            let mut r = ov::verify_doubling(n, opts.deep)?;
            if n <= 3 {
                r.extend(ov::verify_projector_routes(n)?);
            }
            r
        }
        Suite::KeyId => {
            let mut r = VerificationReport::new("keyid", n, "-");
            for k in 1..=n {
                r.extend(ov::verify_key_identity(n, k)?);
            }
            r
        }
        Suite::Stability => {
            let mut r = match &opts.tau {
                Some(t) => ov::verify_stability_lemma(n, t)?,
                None if n <= 3 => ov::verify_stability_lemma(n, &TauPolynomial::tau())?,
                None => ov::verify_stability_lemma(n, &Rational::from_int(7))?,
            };
            if n <= 3 {
                r.extend(match &opts.tau {
                    Some(t) => ov::verify_projected_decomposition(n, t)?,
                    None => ov::verify_projected_decomposition(n, &TauPolynomial::tau())?,
                });
            }
            r
        }
        Suite::Commute => {
            let t1 = opts.tau.clone().unwrap_or_else(|| Rational::from_int(3));
            let t2 = t1.add_ref(&Rational::from_int(4));
            ov::verify_gram_commutation(n, &t1, &t2)?
        }
        Suite::All => unreachable!("handled by run_suite"),
    };
    report.suite = suite.name().to_string();
    Ok(report)
}

/// Unitary Jucys–Murphy identities: the product expansion, pairwise
/// commutation, and (up to `n = 5`) the matrix and central decompositions.
pub fn verify_jucys<C: Coefficient>(n: usize, tau: &C) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("jucys", n, tau.to_string());
    let product = jm_product_unitary(n, tau)?;
    let expected = unitary::gram_element(n, tau)?;
    report.check(
        "product expansion",
        product == expected,
        format!("{} terms", product.len()),
    );
    let mut commute = true;
    for a in 2..=n {
        for b in a + 1..=n {
            commute &= jm_element::<Rational>(a, n)?.commutes_with(&jm_element(b, n)?)?;
        }
    }
    report.check("elements commute pairwise", commute, "");
    if n <= 5 {
        let basis = all_permutations(n);
        let g = unitary::gram_unitary(n, tau)?;
        report.check(
            "regular matrix equals Gram",
            product.regular_matrix(&basis, Side::Left)? == g && product.regular_matrix(&basis, Side::Right)? == g,
            "",
        );
        let mut sum = AlgebraElement::zero(n);
        for lambda in partitions_of(n)? {
            let c = unitary::c_unitary(&lambda, tau);
            let p = central_idempotent(&lambda, CentralRoute::Character)?;
            sum = sum.add(&p.map_coeffs(|r| c.scale(r)))?;
        }
        report.check("central decomposition", sum == product, "");
    }
    Ok(report)
}

/// Orthogonality, completeness and Jucys–Murphy eigenvalues of the `e_T`.
pub fn verify_idempotents(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("idempotents", n, "-");
    let tableaux: Vec<_> = partitions_of(n)?.iter().flat_map(standard_tableaux).collect();
    let es: Vec<_> = tableaux.iter().map(young_idempotent).collect();
    let mut products_ok = true;
    for (i, a) in es.iter().enumerate() {
        for (j, b) in es.iter().enumerate() {
            let ab = a.multiply(b)?;
            products_ok &= if i == j { ab == **a } else { ab.is_zero() };
        }
    }
    report.check(
        "e_T e_T' = delta e_T",
        products_ok,
        format!("{} tableaux", tableaux.len()),
    );
    let mut sum = AlgebraElement::zero(n);
    for e in &es {
        sum = sum.add(e)?;
    }
    report.check("sum of e_T is the unit", sum == AlgebraElement::unit(n), "");
    let mut eigen_ok = true;
    for (t, e) in tableaux.iter().zip(&es) {
        for k in 1..=n {
            let m = jm_element::<Rational>(k, n)?;
            let expected = e.scale(&Rational::from_int(t.content(k)?));
            eigen_ok &= m.multiply(e)? == expected && e.multiply(&m)? == expected;
        }
    }
    report.check("m_k e_T = e_T m_k = c(T_k) e_T", eigen_ok, "");
    Ok(report)
}

/// Central idempotents: both constructions agree, they are orthogonal,
/// complete and central; plus the character-table relations.
pub fn verify_central(n: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("central", n, "-");
    let shapes = partitions_of(n)?;
    let mut by_sum = Vec::new();
    let mut routes_ok = true;
    for lambda in &shapes {
        let a = central_idempotent(lambda, CentralRoute::TableauSum)?;
        let b = central_idempotent(lambda, CentralRoute::Character)?;
        routes_ok &= a == b;
        by_sum.push(a);
    }
    report.check("tableau-sum route equals character route", routes_ok, "");
    let mut orth = true;
    for (i, a) in by_sum.iter().enumerate() {
        for (j, b) in by_sum.iter().enumerate() {
            let ab = a.multiply(b)?;
            orth &= if i == j { ab == *a } else { ab.is_zero() };
        }
    }
    report.check("P_l P_m = delta P_l", orth, "");
    let mut sum = AlgebraElement::zero(n);
    for p in &by_sum {
        sum = sum.add(p)?;
    }
    report.check("sum of P_l is the unit", sum == AlgebraElement::unit(n), "");
    let mut central = true;
    for i in 1..n {
        let s = AlgebraElement::basis(Permutation::transposition(n, i, i + 1)?);
        for p in &by_sum {
            central &= p.commutes_with(&s)?;
        }
    }
    report.check("central", central, "");
    if n <= 4 {
        let basis = all_permutations(n);
        let mut sym = true;
        for p in &by_sum {
            let left = p.regular_matrix(&basis, Side::Left)?;
            sym &= left.is_symmetric() && left == p.regular_matrix(&basis, Side::Right)?;
        }
        report.check("regular matrices symmetric", sym, "");
    }
    let table = character_table(n)?;
    report.check("column orthogonality", table.column_orthogonality_holds(), "");
    report.check("row orthogonality", table.row_orthogonality_holds(), "");
    let ones = crate::symcore::Partition::new(vec![1; n])?;
    let dims_ok = shapes
        .iter()
        .map(|l| Ok(table.get(l, &ones)? == l.hook_dimension() as i64))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    report.check("chi(1^n) = hook dimension", dims_ok, "");
    Ok(report)
}

fn pseudo_inverse_into<F: Field>(report: &mut VerificationReport, label: &str, table: &WeingartenTable<F>) {
    let r = pseudo_inverse_check(&table.gram, &table.weingarten);
    let excluded = if table.excluded.is_empty() {
        String::new()
    } else {
        let names: Vec<String> = table.excluded.iter().map(ToString::to_string).collect();
        format!("excluded {}", names.join(" "))
    };
    report.check(format!("{label}: GWG = G"), r.gwg_equals_g, excluded);
    report.check(format!("{label}: WGW = W"), r.wgw_equals_w, "");
    report.check(format!("{label}: W symmetric"), r.w_symmetric, "");
}

/// `GWG = G`, `WGW = W` and `W = Wᵀ` for both groups.
///
/// The orthogonal side runs at one size less than its unitary counterpart
/// cap: `n ≤ 3` symbolically and `n ≤ 4` at a concrete `τ`.
pub fn verify_pseudo_inverse<F: Field>(n: usize, tau: &F, spec: TauSpec) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("pseudoinverse", n, spec.to_string());
    pseudo_inverse_into(&mut report, "unitary", &unitary::weingarten_unitary(n, tau, spec.clone())?);
    let orth_cap = match spec {
        TauSpec::Symbolic => 3,
        TauSpec::Value(_) => 4,
    };
    if n <= orth_cap {
        pseudo_inverse_into(
            &mut report,
            "orthogonal",
            &orthogonal::weingarten_orthogonal(n, tau, spec)?,
        );
    } else {
        report.skip(format!("orthogonal: n = {n} above cap {orth_cap}"));
    }
    Ok(report)
}
