//! Enumerative combinatorics: partitions, permutations, standard Young
//! tableaux and pair partitions, each with the canonical ordering that every
//! matrix basis downstream inherits.
//!
//! Labels are 1-based in every rendered or parsed form. Internally
//! permutations and pairings store 0-based images.

mod pairing;
mod partition;
mod permutation;
mod tableau;

pub use pairing::{enumerate_pairings, loop_count, Pairing};
pub use partition::{partitions_of, Partition};
pub use permutation::{all_permutations, compose, factorial, inverse, Permutation};
pub use tableau::{content, standard_tableaux, StandardTableau};

use crate::error::{parse_err, Result};

/// Parses `"[a,b,c]"` into its integers. Whitespace is ignored.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_err(format!("expected [..] list, got {s:?}")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.parse::<usize>()
                .map_err(|_| parse_err(format!("bad integer {x:?} in {s:?}")))
        })
        .collect()
}

pub(crate) fn render_int_list<I: IntoIterator<Item = usize>>(items: I) -> String {
    let body: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", body.join(","))
}
