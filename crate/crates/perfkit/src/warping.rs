//! Warping paths between two sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monotone correspondence between positions of two sequences, as produced
/// by dynamic time warping: starts at `(0, 0)`, ends at `(n-1, m-1)`, and
/// each step advances one or both indices by at most 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarpingPath {
    pairs: Vec<(usize, usize)>,
}

impl WarpingPath {
    /// Wraps index pairs after a one-pass validity check against the two
    /// sequence lengths.
    pub fn new(pairs: Vec<(usize, usize)>, len_a: usize, len_b: usize) -> Result<Self> {
        if len_a == 0 || len_b == 0 {
            return Err(Error::EmptyInput("warping path needs non-empty sequences".into()));
        }
        if pairs.first() != Some(&(0, 0)) {
            return Err(Error::InvalidParameter("warping path must start at (0, 0)".into()));
        }
        if pairs.last() != Some(&(len_a - 1, len_b - 1)) {
            return Err(Error::InvalidParameter(format!(
                "warping path must end at ({}, {})",
                len_a - 1,
                len_b - 1
            )));
        }
        for w in pairs.windows(2) {
            let (i0, j0) = w[0];
            let (i1, j1) = w[1];
            let di = i1.wrapping_sub(i0);
            let dj = j1.wrapping_sub(j0);
            if di > 1 || dj > 1 || (di == 0 && dj == 0) {
                return Err(Error::InvalidParameter(format!(
                    "invalid warping step ({i0}, {j0}) -> ({i1}, {j1})"
                )));
            }
        }
        Ok(WarpingPath { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, usize)> {
        self.pairs.iter()
    }
}

impl<'a> IntoIterator for &'a WarpingPath {
    type Item = &'a (usize, usize);
    type IntoIter = std::slice::Iter<'a, (usize, usize)>;
    fn into_iter(self) -> Self::IntoIter {
        self.pairs.iter()
    }
}
