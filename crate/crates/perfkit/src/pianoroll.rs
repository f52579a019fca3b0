//! Piano-roll matrices.
//!
//! A piano roll is a 128-row matrix whose columns are fixed-duration time
//! cells. Three cell conventions are supported:
//!
//! - [`RollKind::Boolean`]: 1 where a note sounds, 0 elsewhere;
//! - [`RollKind::ThreeValued`]: 2 on the first cell of each note (the onset
//!   anchor), 1 on sustain cells, 0 elsewhere — this keeps repeated notes
//!   distinguishable and gives DTW an onset anchor to lock onto;
//! - [`RollKind::Probability`]: real values in `[0, 1]`.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::note::NoteList;

/// Number of pitch rows in every roll, matching the MIDI pitch range.
pub const PITCHES: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RollKind {
    Boolean,
    ThreeValued,
    Probability,
}

/// A 128 x T time-pitch grid with a fixed cell duration in seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct PianoRoll {
    values: Array2<f64>,
    cell_duration: f64,
    kind: RollKind,
}

impl PianoRoll {
    /// Wraps an existing matrix, validating shape and per-kind cell ranges.
    pub fn new(values: Array2<f64>, cell_duration: f64, kind: RollKind) -> Result<Self> {
        if values.nrows() != PITCHES {
            return Err(Error::DimensionMismatch(format!(
                "piano roll must have {PITCHES} rows, got {}",
                values.nrows()
            )));
        }
        if !(cell_duration > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "cell_duration must be > 0, got {cell_duration}"
            )));
        }
        let ok = match kind {
            RollKind::Boolean => values.iter().all(|&v| v == 0.0 || v == 1.0),
            RollKind::ThreeValued => values.iter().all(|&v| v == 0.0 || v == 1.0 || v == 2.0),
            RollKind::Probability => values.iter().all(|&v| (0.0..=1.0).contains(&v)),
        };
        if !ok {
            return Err(Error::InvalidParameter(format!("cell values outside range for {kind:?}")));
        }
        Ok(PianoRoll { values, cell_duration, kind })
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn cell_duration(&self) -> f64 {
        self.cell_duration
    }

    pub fn kind(&self) -> RollKind {
        self.kind
    }

    /// Number of time cells (columns).
    pub fn num_cells(&self) -> usize {
        self.values.ncols()
    }

    /// True when every cell is zero.
    pub fn is_silent(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Column indices covered by the time interval `[onset, offset)`: a cell
    /// `c` is covered iff `c * d < offset` and `(c + 1) * d > onset`, so a
    /// note always covers at least one cell.
    pub fn covered_cells(&self, onset: f64, offset: f64) -> std::ops::Range<usize> {
        covered_cells(onset, offset, self.cell_duration, self.num_cells())
    }
}

/// Half-open cell coverage for `[onset, offset)` with cell duration `d`,
/// clipped to `max_cells` columns.
pub fn covered_cells(onset: f64, offset: f64, d: f64, max_cells: usize) -> std::ops::Range<usize> {
    debug_assert!(d > 0.0);
    // First cell c with (c + 1) * d > onset, i.e. c > onset/d - 1.
    let first = (onset / d).floor();
    let first = if (first + 1.0) * d > onset { first } else { first + 1.0 };
    // Last covered cell is the largest c with c * d < offset.
    let mut last = (offset / d).ceil() - 1.0;
    if last * d >= offset {
        last -= 1.0;
    }
    let first = first.max(0.0) as usize;
    if last < first as f64 {
        return first..first;
    }
    let end = ((last as usize) + 1).min(max_cells);
    first.min(max_cells)..end
}

/// Rasterizes a note list into a piano roll with the given cell duration.
///
/// Cells covered by a note's `[onset, offset)` interval are set according to
/// `kind`: boolean rolls write 1, three-valued rolls write 2 on the first
/// covered cell and 1 on the rest, probability rolls write `velocity / 127`.
/// Later notes on the same pitch overwrite overlapping cells, so a repeated
/// note's onset anchor survives the previous note's sustain.
pub fn notes_to_pianoroll(notes: &NoteList, cell_duration: f64, kind: RollKind) -> Result<PianoRoll> {
    if !(cell_duration > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "cell_duration must be > 0, got {cell_duration}"
        )));
    }
    let num_cells = match notes.max_offset() {
        Some(max_off) => (max_off / cell_duration).ceil() as usize,
        None => 0,
    };
    let mut values = Array2::<f64>::zeros((PITCHES, num_cells));
    for note in notes {
        let cells = covered_cells(note.onset, note.offset, cell_duration, num_cells);
        let row = note.pitch as usize;
        for (k, c) in cells.enumerate() {
            values[(row, c)] = match kind {
                RollKind::Boolean => 1.0,
                RollKind::ThreeValued => {
                    if k == 0 {
                        2.0
                    } else {
                        1.0
                    }
                }
                RollKind::Probability => f64::from(note.velocity) / 127.0,
            };
        }
    }
    PianoRoll::new(values, cell_duration, kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::note::{NoteEvent, NoteList};

    fn nl(notes: &[(u8, f64, f64, u8)]) -> NoteList {
        NoteList::from_events(
            notes.iter().map(|&(p, on, off, v)| NoteEvent { pitch: p, onset: on, offset: off, velocity: v }).collect(),
        )
        .unwrap()
    }

    #[test]
    fn empty_list_gives_zero_width_roll() {
        let roll = notes_to_pianoroll(&NoteList::default(), 0.05, RollKind::Boolean).unwrap();
        assert_eq!(roll.num_cells(), 0);
    }

    #[test]
    fn single_note_three_valued_row() {
        let roll = notes_to_pianoroll(&nl(&[(60, 0.0, 0.1, 80)]), 0.05, RollKind::ThreeValued).unwrap();
        assert_eq!(roll.num_cells(), 2);
        assert_eq!(roll.values()[(60, 0)], 2.0);
        assert_eq!(roll.values()[(60, 1)], 1.0);
        assert_eq!(roll.values().row(59).sum(), 0.0);
    }

    #[test]
    fn one_beat_note_at_eight_cells_per_beat_spans_eight_columns() {
        // 60 BPM, 8 cells/beat -> cell duration 0.125 s; a 1-beat note fills 8 cells.
        let roll = notes_to_pianoroll(&nl(&[(72, 0.0, 1.0, 80)]), 0.125, RollKind::Boolean).unwrap();
        let row = roll.values().row(72);
        assert_eq!(row.iter().filter(|&&v| v == 1.0).count(), 8);
        assert_eq!(roll.num_cells(), 8);
    }

    #[test]
    fn repeated_note_keeps_second_onset_anchor() {
        // First note sustains through the second note's onset cell.
        let roll =
            notes_to_pianoroll(&nl(&[(60, 0.0, 0.3, 80), (60, 0.15, 0.3, 80)]), 0.05, RollKind::ThreeValued).unwrap();
        let row = roll.values().row(60);
        assert_eq!(row[0], 2.0);
        assert_eq!(row[3], 2.0);
        assert_eq!(row[1], 1.0);
        assert_eq!(row[4], 1.0);
    }

    #[test]
    fn coverage_matches_per_cell_loop() {
        // Oracle: a cell is covered iff its half-open interval overlaps the note's.
        let cases = [(0.0, 0.1), (0.02, 0.11), (0.05, 0.1), (0.049, 0.051), (0.3, 0.62)];
        let d = 0.05;
        for &(on, off) in &cases {
            let max_cells = 100;
            let got = covered_cells(on, off, d, max_cells);
            let expected: Vec<usize> =
                (0..max_cells).filter(|&c| (c as f64) * d < off && ((c + 1) as f64) * d > on).collect();
            assert_eq!(got.collect::<Vec<_>>(), expected, "interval [{on}, {off})");
        }
    }

    #[test]
    fn probability_roll_stores_velocity_fraction() {
        let roll = notes_to_pianoroll(&nl(&[(60, 0.0, 0.1, 127)]), 0.1, RollKind::Probability).unwrap();
        assert_eq!(roll.values()[(60, 0)], 1.0);
    }

    #[test]
    fn new_rejects_out_of_range_cells() {
        let mut m = Array2::zeros((PITCHES, 3));
        m[(0, 0)] = 3.0;
        assert!(PianoRoll::new(m.clone(), 0.05, RollKind::ThreeValued).is_err());
        m[(0, 0)] = 1.5;
        assert!(PianoRoll::new(m, 0.05, RollKind::Probability).is_err());
    }
}
