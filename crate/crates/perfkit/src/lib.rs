//! Symbolic music-performance analysis toolkit.
//!
//! `perfkit` bundles the algorithmic machinery needed to study the gap
//! between a written score and a recorded performance:
//!
//! - **Note model** ([`note`], [`pianoroll`], [`warping`]): note events,
//!   boolean / 3-valued / probability piano rolls, warping paths.
//! - **Artificial misalignment** ([`misalign`]): histogram-based statistical
//!   models that turn an aligned performance into a score-like note list,
//!   missing/extra note tagging, chord-onset clustering.
//! - **Alignment** ([`align`]): exact DTW, FastDTW, frame-level alignment of
//!   3-valued piano rolls, note-level alignment via matched-note anchors with
//!   linear interpolation, and matched-ratio evaluation curves.
//! - **Melody identification** ([`melody`]): skyline baseline, note
//!   probabilities, graph construction over melody candidates, shortest-path
//!   extraction and perturbation-based saliency maps.
//! - **Dispersed selection** ([`dispersion`]): Ward clustering, four
//!   max-min selection heuristics, exact brute force, medoid, "Robin Hood"
//!   redistribution and k-means.
//! - **Note separation** ([`notesep`]): STFT, structured attack/sustain/release
//!   NMF templates with a two-step multiplicative-update schedule, per-note
//!   spectrogram extraction and MFCCs.
//! - **Transcription measures** ([`evalmeasure`]): tolerance-based note F1,
//!   symbolic feature vectors and an elastic-net linear perceptual measure.
//!
//! Everything is deterministic under an explicit RNG seed, and the
//! brute-force reference implementations used to validate the fast paths are
//! available in [`oracle`].
//!
//! The `perfkit` binary exposes the batch subcommands `misalign`, `align`,
//! `eval`, `melody`, `disperse`, `separate`, `measure` and `selftest`; see
//! each module's documentation and the `examples/` directory for library
//! usage.

pub mod align;
pub mod cli;
pub mod dispersion;
pub mod error;
pub mod evalmeasure;
pub mod io;
pub mod melody;
pub mod misalign;
pub mod note;
pub mod notesep;
pub mod oracle;
pub mod pianoroll;
pub mod warping;

pub use error::{Error, Result};
pub use note::{NoteEvent, NoteList};
pub use pianoroll::{PianoRoll, RollKind};
pub use warping::WarpingPath;
