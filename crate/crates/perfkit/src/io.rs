//! File formats shared by the CLI and the examples.
//!
//! - Note lists travel as JSON: `{"notes":[{"pitch":..,"onset":..,"offset":..,"velocity":..},..]}`
//!   with times in seconds.
//! - Matrices (piano rolls, saliency maps, spectrogram frames) travel as
//!   headerless CSV, one matrix row per line.
//! - Point sets are CSV with one row per point; a non-numeric first row is
//!   treated as a header and skipped.
//! - Audio is either a mono sample CSV (one value per line or comma
//!   separated) or raw 16-bit little-endian PCM with a declared sample rate.

use std::fs;
use std::path::Path;

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::note::{NoteEvent, NoteList};

#[derive(Debug, Serialize, Deserialize)]
struct NoteFile {
    notes: Vec<NoteEvent>,
}

/// Reads a JSON note list from `path`.
pub fn read_notes(path: impl AsRef<Path>) -> Result<NoteList> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let file: NoteFile = serde_json::from_str(&text)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    NoteList::from_events(file.notes)
}

/// Serializes a note list to the interchange JSON format.
pub fn notes_to_json(notes: &NoteList) -> String {
    let file = NoteFile { notes: notes.notes().to_vec() };
    serde_json::to_string_pretty(&file).expect("note list serializes")
}

/// Writes a JSON note list to `path`.
pub fn write_notes(path: impl AsRef<Path>, notes: &NoteList) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, notes_to_json(notes)).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Writes any serializable value as pretty JSON.
pub fn write_json<T: Serialize>(path: impl AsRef<Path>, value: &T) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::parse(path.display().to_string(), e.to_string()))?;
    fs::write(path, text).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Reads a JSON value of type `T`.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: impl AsRef<Path>) -> Result<T> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), e.to_string()))
}

/// Writes a matrix as headerless CSV, one row per line.
pub fn write_matrix_csv(path: impl AsRef<Path>, matrix: &Array2<f64>) -> Result<()> {
    let path = path.as_ref();
    let mut out = String::new();
    for row in matrix.rows() {
        let line: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| Error::io(path.display().to_string(), e))
}

/// Reads a headerless CSV matrix; all rows must have equal length.
pub fn read_matrix_csv(path: impl AsRef<Path>) -> Result<Array2<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    parse_matrix(&text, &path.display().to_string())
}

fn parse_matrix(text: &str, path: &str) -> Result<Array2<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: std::result::Result<Vec<f64>, _> =
            line.split(',').map(|f| f.trim().parse::<f64>()).collect();
        let row = row.map_err(|e| Error::parse(path, format!("line {}: {e}", lineno + 1)))?;
        rows.push(row);
    }
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::parse(path, "rows have unequal lengths"));
    }
    let nrows = rows.len();
    let flat: Vec<f64> = rows.into_iter().flatten().collect();
    Array2::from_shape_vec((nrows, ncols), flat)
        .map_err(|e| Error::parse(path, e.to_string()))
}

/// Reads a point-set CSV (one row per point). A first row that fails to
/// parse as numbers is treated as a header and skipped.
pub fn read_points_csv(path: impl AsRef<Path>) -> Result<Array2<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if let Some(first) = lines.first() {
        let parses = first.split(',').all(|f| f.trim().parse::<f64>().is_ok());
        if !parses {
            lines.remove(0);
        }
    }
    parse_matrix(&lines.join("\n"), &path.display().to_string())
}

/// Reads mono audio samples from a CSV of floats (newline or comma separated).
pub fn read_samples_csv(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut samples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        for field in line.split(',') {
            let field = field.trim();
            if field.is_empty() {
                continue;
            }
            let v: f64 = field
                .parse()
                .map_err(|e| Error::parse(path.display().to_string(), format!("line {}: {e}", lineno + 1)))?;
            samples.push(v);
        }
    }
    Ok(samples)
}

/// Reads raw 16-bit little-endian PCM, normalized to `[-1, 1]`.
pub fn read_samples_pcm16(path: impl AsRef<Path>) -> Result<Vec<f64>> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    if bytes.len() % 2 != 0 {
        return Err(Error::parse(path.display().to_string(), "odd byte count for 16-bit PCM"));
    }
    Ok(bytes
        .chunks_exact(2)
        .map(|c| f64::from(i16::from_le_bytes([c[0], c[1]])) / 32768.0)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn notes_json_round_trip() {
        let dir = std::env::temp_dir().join("perfkit_io_test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("notes.json");
        let notes = NoteList::from_events(vec![
            NoteEvent { pitch: 60, onset: 0.0, offset: 0.5, velocity: 64 },
            NoteEvent { pitch: 64, onset: 0.25, offset: 1.0, velocity: 80 },
        ])
        .unwrap();
        write_notes(&path, &notes).unwrap();
        let back = read_notes(&path).unwrap();
        assert_eq!(back, notes);
    }

    #[test]
    fn matrix_csv_round_trip() {
        let dir = std::env::temp_dir().join("perfkit_io_test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("m.csv");
        let m = Array2::from_shape_vec((2, 3), vec![1.0, 2.5, -3.0, 0.0, 1e-9, 4.0]).unwrap();
        write_matrix_csv(&path, &m).unwrap();
        assert_eq!(read_matrix_csv(&path).unwrap(), m);
    }

    #[test]
    fn points_csv_skips_header() {
        let dir = std::env::temp_dir().join("perfkit_io_test");
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("pts.csv");
        fs::write(&path, "x,y\n1.0,2.0\n3.0,4.0\n").unwrap();
        let pts = read_points_csv(&path).unwrap();
        assert_eq!(pts.shape(), &[2, 2]);
        assert_eq!(pts[(1, 0)], 3.0);
    }

    #[test]
    fn missing_file_error_names_path() {
        let err = read_notes("/nonexistent/perfkit.json").unwrap_err();
        assert!(err.to_string().contains("/nonexistent/perfkit.json"));
    }
}
