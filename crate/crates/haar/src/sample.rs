use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use wg_core::table::Group;

/// One Haar-distributed matrix in `U(τ)` or `O(τ)`, drawn from `rng`.
///
/// Ginibre matrix, QR factorization, then each column of `Q` is rotated by the
/// phase (or sign) of the matching diagonal entry of `R`. Without that last
/// step the result is not Haar distributed.
pub fn sample_with<R: Rng + ?Sized>(group: Group, tau: usize, rng: &mut R) -> DMatrix<Complex64> {
    let ginibre = DMatrix::from_fn(tau, tau, |_, _| match group {
        Group::Unitary => Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)),
        Group::Orthogonal => Complex64::new(rng.sample(StandardNormal), 0.0),
    });
    let (mut q, r) = ginibre.qr().unpack();
    for k in 0..tau {
        let d = r[(k, k)];
        let norm = d.norm();
        let phase = if norm > 0.0 { d / norm } else { Complex64::new(1.0, 0.0) };
        for row in 0..tau {
            q[(row, k)] *= phase;
        }
    }
    if group == Group::Orthogonal {
        // the imaginary parts are exact zeros already; clear any signed zeros
        q.iter_mut().for_each(|z| z.im = 0.0);
    }
    q
}

/// A single sample from a fresh ChaCha8 generator seeded with `seed`.
pub fn sample_haar(group: Group, tau: usize, seed: u64) -> DMatrix<Complex64> {
    sample_with(group, tau, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `max |(M* M − I)_{ab}|`.
pub fn unitarity_defect(m: &DMatrix<Complex64>) -> f64 {
    let prod = m.adjoint() * m;
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((prod[(a, b)] - Complex64::new(target, 0.0)).norm());
        }
    }
    worst
}
