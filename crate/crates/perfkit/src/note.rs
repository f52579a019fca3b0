//! Note events and sorted note lists.
//!
//! A [`NoteEvent`] is one played or notated note with MIDI pitch, onset and
//! offset in seconds, and MIDI velocity. A [`NoteList`] keeps its events
//! sorted by `(onset, pitch)` so that downstream algorithms can rely on
//! temporal order. Score times follow the 60 BPM convention: one beat equals
//! one second.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One note: pitch and velocity are MIDI integers in `[0, 127]`, onset and
/// offset are seconds with `0 <= onset < offset`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoteEvent {
    pub pitch: u8,
    pub onset: f64,
    pub offset: f64,
    pub velocity: u8,
}

impl NoteEvent {
    pub fn new(pitch: u8, onset: f64, offset: f64, velocity: u8) -> Result<Self> {
        let note = NoteEvent { pitch, onset, offset, velocity };
        note.validate()?;
        Ok(note)
    }

    pub fn validate(&self) -> Result<()> {
        if self.pitch > 127 {
            return Err(Error::InvalidNote(format!("pitch {} out of [0,127]", self.pitch)));
        }
        if self.velocity > 127 {
            return Err(Error::InvalidNote(format!("velocity {} out of [0,127]", self.velocity)));
        }
        if !self.onset.is_finite() || self.onset < 0.0 {
            return Err(Error::InvalidNote(format!("onset {} must be finite and >= 0", self.onset)));
        }
        if !self.offset.is_finite() || self.offset <= self.onset {
            return Err(Error::InvalidNote(format!(
                "offset {} must be finite and > onset {}",
                self.offset, self.onset
            )));
        }
        Ok(())
    }

    /// Note duration in seconds.
    pub fn duration(&self) -> f64 {
        self.offset - self.onset
    }
}

/// A sequence of notes sorted by `(onset, pitch)`. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct NoteList {
    notes: Vec<NoteEvent>,
}

impl NoteList {
    /// Builds a list from events, validating each note and sorting.
    pub fn from_events(mut notes: Vec<NoteEvent>) -> Result<Self> {
        for n in &notes {
            n.validate()?;
        }
        sort_notes(&mut notes);
        Ok(NoteList { notes })
    }

    pub fn is_empty(&self) -> bool {
        self.notes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.notes.len()
    }

    pub fn notes(&self) -> &[NoteEvent] {
        &self.notes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, NoteEvent> {
        self.notes.iter()
    }

    /// Earliest onset, if any note exists.
    pub fn min_onset(&self) -> Option<f64> {
        self.notes.first().map(|n| n.onset)
    }

    /// Latest offset, if any note exists.
    pub fn max_offset(&self) -> Option<f64> {
        self.notes.iter().map(|n| n.offset).fold(None, |acc, x| match acc {
            None => Some(x),
            Some(a) => Some(a.max(x)),
        })
    }

    /// Time span covered by the list: `max_offset - min_onset`.
    pub fn span(&self) -> Option<f64> {
        match (self.min_onset(), self.max_offset()) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        }
    }

    /// Maps every note through `f`, revalidating and re-sorting the result.
    pub fn map_notes(&self, mut f: impl FnMut(&NoteEvent) -> NoteEvent) -> Result<NoteList> {
        NoteList::from_events(self.notes.iter().map(|n| f(n)).collect())
    }
}

impl std::ops::Index<usize> for NoteList {
    type Output = NoteEvent;
    fn index(&self, i: usize) -> &NoteEvent {
        &self.notes[i]
    }
}

impl<'a> IntoIterator for &'a NoteList {
    type Item = &'a NoteEvent;
    type IntoIter = std::slice::Iter<'a, NoteEvent>;
    fn into_iter(self) -> Self::IntoIter {
        self.notes.iter()
    }
}

fn sort_notes(notes: &mut [NoteEvent]) {
    notes.sort_by(|a, b| {
        a.onset
            .partial_cmp(&b.onset)
            .expect("onsets are finite")
            .then(a.pitch.cmp(&b.pitch))
    });
}

/// Linearly rescales note times so the list spans exactly `target_duration`
/// seconds starting at 0: the earliest onset is translated to 0 and all times
/// are scaled by `target_duration / span`.
///
/// Used to enforce a performance's average tempo on a score before comparing
/// the two.
pub fn stretch_to_duration(notes: &NoteList, target_duration: f64) -> Result<NoteList> {
    if notes.is_empty() {
        return Err(Error::EmptyInput("stretch_to_duration needs at least one note".into()));
    }
    if !(target_duration > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "target_duration must be > 0, got {target_duration}"
        )));
    }
    let start = notes.min_onset().unwrap();
    let span = notes.span().unwrap();
    if span <= 0.0 {
        return Err(Error::InvalidParameter("note list has zero time span".into()));
    }
    let scale = target_duration / span;
    notes.map_notes(|n| NoteEvent {
        pitch: n.pitch,
        onset: (n.onset - start) * scale,
        offset: (n.offset - start) * scale,
        velocity: n.velocity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nl(notes: &[(u8, f64, f64, u8)]) -> NoteList {
        NoteList::from_events(
            notes.iter().map(|&(p, on, off, v)| NoteEvent { pitch: p, onset: on, offset: off, velocity: v }).collect(),
        )
        .unwrap()
    }

    #[test]
    fn note_validation_rejects_bad_fields() {
        assert!(NoteEvent::new(128, 0.0, 1.0, 64).is_err());
        assert!(NoteEvent::new(60, -0.1, 1.0, 64).is_err());
        assert!(NoteEvent::new(60, 1.0, 1.0, 64).is_err());
        assert!(NoteEvent::new(60, 1.0, 0.5, 64).is_err());
        assert!(NoteEvent::new(60, 0.0, 1.0, 200).is_err());
        assert!(NoteEvent::new(60, 0.0, 1.0, 64).is_ok());
    }

    #[test]
    fn note_list_sorts_by_onset_then_pitch() {
        let list = nl(&[(64, 1.0, 2.0, 80), (60, 0.5, 1.0, 80), (62, 1.0, 2.0, 80)]);
        let pitches: Vec<u8> = list.iter().map(|n| n.pitch).collect();
        assert_eq!(pitches, vec![60, 62, 64]);
    }

    #[test]
    fn stretch_doubles_times() {
        let list = nl(&[(60, 0.0, 1.0, 80), (62, 1.0, 2.0, 80)]);
        let out = stretch_to_duration(&list, 4.0).unwrap();
        assert_eq!(out[0].onset, 0.0);
        assert_eq!(out[0].offset, 2.0);
        assert_eq!(out[1].onset, 2.0);
        assert_eq!(out[1].offset, 4.0);
    }

    #[test]
    fn stretch_to_current_span_is_identity() {
        let list = nl(&[(60, 0.0, 1.5, 80), (62, 0.5, 2.0, 80)]);
        let out = stretch_to_duration(&list, 2.0).unwrap();
        assert_eq!(out, list);
    }

    #[test]
    fn stretch_translates_then_scales() {
        // Notes spanning [0.5, 1.5], target 2: translated to start at 0, then x2.
        let list = nl(&[(60, 0.5, 1.5, 80)]);
        let out = stretch_to_duration(&list, 2.0).unwrap();
        assert_eq!(out[0].onset, 0.0);
        assert_eq!(out[0].offset, 2.0);
    }

    #[test]
    fn stretch_rejects_zero_span_and_empty() {
        let list = nl(&[(60, 1.0, 1.0 + f64::EPSILON, 80)]);
        // Span is epsilon, not exactly zero: allowed.
        assert!(stretch_to_duration(&list, 1.0).is_ok());
        assert!(stretch_to_duration(&NoteList::default(), 1.0).is_err());
    }

    #[test]
    fn stretch_composition_matches_single_stretch() {
        let list = nl(&[(60, 0.25, 1.0, 80), (64, 0.75, 3.0, 70)]);
        let twice = stretch_to_duration(&stretch_to_duration(&list, 5.0).unwrap(), 2.5).unwrap();
        let once = stretch_to_duration(&list, 2.5).unwrap();
        for (a, b) in twice.iter().zip(once.iter()) {
            assert!((a.onset - b.onset).abs() < 1e-12);
            assert!((a.offset - b.offset).abs() < 1e-12);
        }
    }
}
