use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use wg_core::coeff::Rational;
use wg_core::table::Group;
use wg_core::{Result, WgError};

use crate::moment::{Indices, MomentSpec, Predictor};
use crate::sample::sample_with;

/// Two-sided normal tail `P(|Z| > threshold)`: the expected fraction of
/// moments flagged by a `|z| ≤ threshold` test when every prediction is right.
pub fn false_alarm_rate(threshold: f64) -> f64 {
    use statrs::distribution::{ContinuousCDF, Normal};
    2.0 * Normal::standard().sf(threshold)
}

/// Samples per substream.
pub const CHUNK: usize = 4096;

/// Estimate, standard error and exact value of one moment.
///
/// Only the real part is estimated: every prediction is real.
#[derive(Clone, Debug, Serialize)]
pub struct MomentReport {
    pub spec: MomentSpec,
    pub estimate: f64,
    pub stderr: f64,
    pub exact: Rational,
    pub z: f64,
    pub samples: usize,
    pub seed: u64,
}

impl MomentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn within(&self, threshold: f64) -> bool {
        self.z.abs() <= threshold
    }
}

fn monomial(m: &DMatrix<Complex64>, idx: &Indices) -> Complex64 {
    let mut v = Complex64::new(1.0, 0.0);
    for (&a, &b) in idx.i.iter().zip(&idx.j) {
        v *= m[(a - 1, b - 1)];
    }
    for (&a, &b) in idx.i_conj.iter().zip(&idx.j_conj) {
        v *= m[(a - 1, b - 1)].conj();
    }
    v
}

/// Pairwise (tree) sum in index order.
fn pairwise(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        n => pairwise(&xs[..n / 2]) + pairwise(&xs[n / 2..]),
    }
}

/// Per-chunk `(Σ x, Σ x²)` for every monomial, summed in sample order.
fn chunk_sums(group: Group, tau: usize, moments: &[Indices], seed: u64, chunk: usize, count: usize) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    let mut sums = vec![(0.0, 0.0); moments.len()];
    for _ in 0..count {
        let m = sample_with(group, tau, &mut rng);
        for (slot, idx) in sums.iter_mut().zip(moments) {
            let x = monomial(&m, idx).re;
            slot.0 += x;
            slot.1 += x * x;
        }
    }
    sums
}

/// Estimates many moments from one shared stream of samples.
pub fn estimate_batch(
    group: Group,
    tau: usize,
    moments: &[Indices],
    samples: usize,
    seed: u64,
) -> Result<Vec<MomentReport>> {
    if samples < 2 {
        return Err(WgError::Domain("at least two samples are needed for a standard error".into()));
    }
    let mut predictor = Predictor::new(group, tau)?;
    let exact = moments
        .iter()
        .map(|m| predictor.predict(m))
        .collect::<Result<Vec<_>>>()?;
    let chunks = samples.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<(f64, f64)>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let count = CHUNK.min(samples - c * CHUNK);
            chunk_sums(group, tau, moments, seed, c, count)
        })
        .collect();
    let n = samples as f64;
    Ok(moments
        .iter()
        .enumerate()
        .map(|(k, idx)| {
            let sums: Vec<f64> = per_chunk.iter().map(|c| c[k].0).collect();
            let squares: Vec<f64> = per_chunk.iter().map(|c| c[k].1).collect();
            let mean = pairwise(&sums) / n;
            let var = ((pairwise(&squares) - n * mean * mean) / (n - 1.0)).max(0.0);
            let stderr = (var / n).sqrt();
            let diff = mean - exact[k].to_f64();
            let z = if stderr > 1e-14 {
                diff / stderr
            } else if diff.abs() < 1e-12 {
                0.0
            } else {
                f64::INFINITY.copysign(diff)
            };
            MomentReport {
                spec: MomentSpec {
                    group,
                    tau,
                    indices: idx.clone(),
                    samples,
                    seed,
                },
                estimate: mean,
                stderr,
                exact: exact[k].clone(),
                z,
                samples,
                seed,
            }
        })
        .collect())
}

/// Estimates a single moment.
pub fn estimate_moment(spec: &MomentSpec) -> Result<MomentReport> {
    if spec.samples < 100 {
        return Err(WgError::Domain(format!("{} samples; at least 100 required", spec.samples)));
    }
    spec.indices.validate(spec.group, spec.tau)?;
    let mut out = estimate_batch(spec.group, spec.tau, std::slice::from_ref(&spec.indices), spec.samples, spec.seed)?;
    Ok(out.remove(0))
}
