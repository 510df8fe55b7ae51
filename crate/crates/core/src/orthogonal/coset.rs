use crate::error::Result;
use crate::symcore::{Pairing, Permutation};

/// A pairing with a permutation conjugating `β_n` onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetRepresentative {
    pub pairing: Pairing,
    pub sigma: Permutation,
}

impl CosetRepresentative {
    /// `σ β_n σ⁻¹ == π`.
    pub fn holds(&self) -> bool {
        Pairing::beta(self.pairing.order())
            .map(|b| b.conjugated_by(&self.sigma) == self.pairing)
            .unwrap_or(false)
    }
}

/// The representative `σ_π` built pair by pair from the top.
///
/// If `2n−1` and `2n` are paired, `σ_π` extends the representative of the
/// truncation. Otherwise, with `s = (π(2n) 2n−1)`, `sπs` has that property and
/// `σ_π = s ∘ σ_{sπs}`.
pub fn coset_representative(pi: &Pairing) -> Result<CosetRepresentative> {
    let sigma = sigma_of(pi)?;
    Ok(CosetRepresentative {
        pairing: pi.clone(),
        sigma,
    })
}

fn sigma_of(pi: &Pairing) -> Result<Permutation> {
    let m = pi.points();
    if m == 2 {
        return Ok(Permutation::identity(2));
    }
    let top = pi.partner(m);
    if top == m - 1 {
        let inner = pi.truncate_last_pair().expect("last pair present");
        return Ok(sigma_of(&inner)?.extend(m));
    }
    let s = Permutation::transposition(m, top, m - 1)?;
    let moved = pi.conjugated_by(&s);
    Ok(s.then_after(&sigma_of(&moved)?))
}

/// A permutation `σ₀` with `σ₀ π' σ₀⁻¹ = π`, sending the `k`-th canonical pair of
/// `π'` onto the `k`-th canonical pair of `π`. With `flip`, each pair is matched
/// in reverse orientation.
pub fn matching_conjugator(pi: &Pairing, pi_prime: &Pairing, flip: bool) -> Result<Permutation> {
    let mut images = vec![0usize; pi.points()];
    for ((a, b), (a2, b2)) in pi.pairs().into_iter().zip(pi_prime.pairs()) {
        let (x, y) = if flip { (b, a) } else { (a, b) };
        images[a2 - 1] = x;
        images[b2 - 1] = y;
    }
    Permutation::from_one_line(&images)
}
