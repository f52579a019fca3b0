//! Random missing/extra note tagging.
//!
//! Simulates the mismatch between a score and a performance: a random
//! fraction of the notes, drawn uniformly from (0.1 L, 0.5 L), is tagged in
//! disjoint contiguous runs, and each run is labeled "missing" or "extra".

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::note::NoteList;

/// Per-note missing/extra flags. A note is never both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MissingExtraLabels {
    pub missing: Vec<bool>,
    pub extra: Vec<bool>,
}

impl MissingExtraLabels {
    pub fn tagged_count(&self) -> usize {
        self.missing.iter().chain(self.extra.iter()).filter(|&&b| b).count()
    }
}

/// Tags random contiguous runs of notes as missing or extra.
///
/// The total tagged count is drawn uniformly from (0.1 L, 0.5 L) and rounded
/// to an integer strictly inside that interval whenever one exists. Runs are
/// disjoint; run lengths are uniform in `[1, remaining]`. One probability
/// `p1 ~ U(0.25, 0.75)` is drawn per call and each run is labeled missing
/// with probability `p1`, extra otherwise.
pub fn generate_missing_extra<R: Rng + ?Sized>(notes: &NoteList, rng: &mut R) -> Result<MissingExtraLabels> {
    let len = notes.len();
    if len < 2 {
        return Err(Error::InvalidParameter(format!("need at least 2 notes, got {len}")));
    }
    let lo = 0.1 * len as f64;
    let hi = 0.5 * len as f64;
    let drawn = rng.gen_range(lo..hi);
    // Smallest/largest integer strictly inside (lo, hi); for tiny lists the
    // open interval may contain no integer, in which case at least one note
    // is tagged.
    let min_valid = (lo.floor() as usize) + 1;
    let max_valid = (hi.ceil() as usize).saturating_sub(1);
    let target = if min_valid <= max_valid {
        (drawn.round() as usize).clamp(min_valid, max_valid)
    } else {
        1
    };

    let mut tagged = vec![false; len];
    let mut missing = vec![false; len];
    let mut extra = vec![false; len];
    let p_missing = rng.gen_range(0.25..0.75);
    let mut total = 0usize;
    while total < target {
        let remaining = target - total;
        let run_len = rng.gen_range(1..=remaining);
        let start = rng.gen_range(0..len);
        // Walk forward from `start`, skipping already-tagged notes, so runs
        // stay disjoint and contiguous over untagged indices.
        let mut run = Vec::with_capacity(run_len);
        let mut i = start;
        while i < len && run.len() < run_len {
            if tagged[i] {
                break;
            }
            run.push(i);
            i += 1;
        }
        if run.is_empty() {
            continue;
        }
        let is_missing = rng.gen::<f64>() < p_missing;
        for &idx in &run {
            tagged[idx] = true;
            if is_missing {
                missing[idx] = true;
            } else {
                extra[idx] = true;
            }
        }
        total += run.len();
    }
    Ok(MissingExtraLabels { missing, extra })
}
