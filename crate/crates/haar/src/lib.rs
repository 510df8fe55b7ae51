//! Monte-Carlo Haar integration on `U(τ)` and `O(τ)`, compared against exact
//! Weingarten predictions.
//!
//! Everything here is floating point; the exact side comes from `wg-core`.
//! Sampling is seeded and chunked so that results are bit-reproducible for a
//! given seed regardless of thread count: chunk `c` draws from the ChaCha8
//! stream `(seed, c)` and chunk accumulators are merged by pairwise summation
//! in chunk order.

mod estimate;
mod moment;
mod sample;

pub use estimate::{estimate_batch, estimate_moment, false_alarm_rate, MomentReport, CHUNK};
pub use moment::{degree_grid, predict_moment, Indices, MomentSpec, Predictor};
pub use sample::{sample_haar, sample_with, unitarity_defect};
