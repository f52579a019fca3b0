//! Statistical model of score/performance misalignment.
//!
//! For every matched note the model observes the onset misalignment
//! (score onset minus performance onset) and the duration ratio
//! (score duration over performance duration). Each piece's observations are
//! standardized with the piece mean and standard deviation; the standardized
//! values feed two histograms (`x_ons`, `x_dur`) while the per-piece means
//! and standard deviations feed four more. Sampling reverses the process:
//! draw one (mean, std) pair per piece and one standardized value per note,
//! then de-standardize.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::misalign::Histogram;
use crate::note::{NoteEvent, NoteList};

/// Six-histogram misalignment model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MisalignmentModel {
    pub x_ons: Histogram,
    pub x_dur: Histogram,
    pub y_ons_mean: Histogram,
    pub y_ons_std: Histogram,
    pub y_dur_mean: Histogram,
    pub y_dur_std: Histogram,
}

/// One training pair: a score, the matching performance, and matched note
/// index pairs `(score_index, perf_index)`. Scores are expected to be
/// pre-stretched to the performance span.
#[derive(Debug, Clone)]
pub struct MatchedPair<'a> {
    pub score: &'a NoteList,
    pub performance: &'a NoteList,
    pub matching: &'a [(usize, usize)],
}

#[derive(Default)]
struct Accumulator {
    x_ons: Vec<f64>,
    x_dur: Vec<f64>,
    y_ons_mean: Vec<f64>,
    y_ons_std: Vec<f64>,
    y_dur_mean: Vec<f64>,
    y_dur_std: Vec<f64>,
    /// Pieces whose onset or duration std was zero (mean recorded, std not).
    pub degenerate_pieces: Vec<usize>,
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

/// Fits the six histograms from matched score/performance pairs.
///
/// Pieces with fewer than 2 matched notes are skipped. A piece whose std is
/// zero for a statistic contributes its mean but no std, and its standardized
/// values are computed with std treated as 1 (they are all zero).
pub fn fit_misalignment_model(pairs: &[MatchedPair<'_>], bins: usize) -> Result<MisalignmentModel> {
    if pairs.is_empty() {
        return Err(Error::EmptyInput("fit_misalignment_model needs at least one pair".into()));
    }
    if bins == 0 {
        return Err(Error::InvalidParameter("bin count must be >= 1".into()));
    }
    let mut acc = Accumulator::default();
    let mut used_pieces = 0usize;
    for (piece_idx, pair) in pairs.iter().enumerate() {
        if pair.matching.len() < 2 {
            continue;
        }
        let mut ons_mis = Vec::with_capacity(pair.matching.len());
        let mut dur_ratio = Vec::with_capacity(pair.matching.len());
        for &(si, pi) in pair.matching {
            let s = pair
                .score
                .notes()
                .get(si)
                .ok_or_else(|| Error::NotFound(format!("score index {si} in pair {piece_idx}")))?;
            let p = pair
                .performance
                .notes()
                .get(pi)
                .ok_or_else(|| Error::NotFound(format!("performance index {pi} in pair {piece_idx}")))?;
            ons_mis.push(s.onset - p.onset);
            dur_ratio.push(s.duration() / p.duration());
        }
        let mut degenerate = false;
        for (values, x, y_mean, y_std) in [
            (&ons_mis, &mut acc.x_ons, &mut acc.y_ons_mean, &mut acc.y_ons_std),
            (&dur_ratio, &mut acc.x_dur, &mut acc.y_dur_mean, &mut acc.y_dur_std),
        ] {
            let (mean, std) = mean_std(values);
            y_mean.push(mean);
            if std > 0.0 {
                y_std.push(std);
                x.extend(values.iter().map(|v| (v - mean) / std));
            } else {
                degenerate = true;
                x.extend(values.iter().map(|v| v - mean));
            }
        }
        if degenerate {
            acc.degenerate_pieces.push(piece_idx);
        }
        used_pieces += 1;
    }
    if used_pieces == 0 {
        return Err(Error::EmptyInput("no pair had at least 2 matched notes".into()));
    }
    let hist = |values: &[f64]| -> Result<Histogram> {
        if values.is_empty() {
            // All contributing pieces were degenerate for this statistic.
            Ok(Histogram::point_mass(0.0))
        } else {
            Histogram::from_values(values, bins)
        }
    };
    Ok(MisalignmentModel {
        x_ons: hist(&acc.x_ons)?,
        x_dur: hist(&acc.x_dur)?,
        y_ons_mean: hist(&acc.y_ons_mean)?,
        y_ons_std: hist(&acc.y_ons_std)?,
        y_dur_mean: hist(&acc.y_dur_mean)?,
        y_dur_std: hist(&acc.y_dur_std)?,
    })
}

impl MisalignmentModel {
    fn check_fitted(&self) -> Result<()> {
        for (name, h) in [
            ("x_ons", &self.x_ons),
            ("x_dur", &self.x_dur),
            ("y_ons_mean", &self.y_ons_mean),
            ("y_ons_std", &self.y_ons_std),
            ("y_dur_mean", &self.y_dur_mean),
            ("y_dur_std", &self.y_dur_std),
        ] {
            if !(h.total_count() > 0.0) {
                return Err(Error::NotFitted(format!("histogram {name} has zero total count")));
            }
        }
        Ok(())
    }
}

/// Generates a misaligned variant of `reference`.
///
/// One (mean, std) pair is drawn per statistic for the whole piece; every
/// note then draws a standardized value, is de-standardized, and has its
/// onset shifted by the resulting misalignment and its duration multiplied
/// by the resulting ratio. Ratios that come out non-positive are re-drawn up
/// to 100 times, then clamped to 0.01. Output is re-sorted; pitches and
/// velocities are untouched.
pub fn sample_misaligned<R: Rng + ?Sized>(
    reference: &NoteList,
    model: &MisalignmentModel,
    rng: &mut R,
) -> Result<NoteList> {
    if reference.is_empty() {
        return Err(Error::EmptyInput("sample_misaligned needs a non-empty reference".into()));
    }
    model.check_fitted()?;
    let ons_mean = model.y_ons_mean.sample(rng)?;
    let ons_std = model.y_ons_std.sample(rng)?;
    let dur_mean = model.y_dur_mean.sample(rng)?;
    let dur_std = model.y_dur_std.sample(rng)?;
    let mut out = Vec::with_capacity(reference.len());
    for n in reference {
        let misalignment = model.x_ons.sample(rng)? * ons_std + ons_mean;
        let mut ratio = model.x_dur.sample(rng)? * dur_std + dur_mean;
        let mut tries = 0;
        while ratio <= 0.0 && tries < 100 {
            ratio = model.x_dur.sample(rng)? * dur_std + dur_mean;
            tries += 1;
        }
        if ratio <= 0.0 {
            ratio = 0.01;
        }
        let onset = (n.onset + misalignment).max(0.0);
        out.push(NoteEvent {
            pitch: n.pitch,
            onset,
            offset: onset + n.duration() * ratio,
            velocity: n.velocity,
        });
    }
    NoteList::from_events(out)
}
