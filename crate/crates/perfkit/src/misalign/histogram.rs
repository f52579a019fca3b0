//! Binned empirical distributions with seeded sampling.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A histogram over `B` bins delimited by `B + 1` non-decreasing edges.
///
/// Sampling picks a bin with probability proportional to its count, then a
/// value uniform within the bin. A zero-width bin (equal adjacent edges) acts
/// as a point mass, which is how degenerate distributions such as "always
/// exactly zero" are represented.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    bin_edges: Vec<f64>,
    counts: Vec<f64>,
}

impl Histogram {
    pub fn new(bin_edges: Vec<f64>, counts: Vec<f64>) -> Result<Self> {
        if bin_edges.len() != counts.len() + 1 || counts.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "need B counts and B+1 edges, got {} and {}",
                counts.len(),
                bin_edges.len()
            )));
        }
        if bin_edges.windows(2).any(|w| !(w[0] <= w[1])) || bin_edges.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidParameter("bin edges must be finite and non-decreasing".into()));
        }
        if counts.iter().any(|&c| !(c >= 0.0)) {
            return Err(Error::InvalidParameter("bin counts must be non-negative".into()));
        }
        Ok(Histogram { bin_edges, counts })
    }

    /// All mass on a single value.
    pub fn point_mass(value: f64) -> Self {
        Histogram { bin_edges: vec![value, value], counts: vec![1.0] }
    }

    /// Equal-width binning of raw values. Constant inputs collapse to a
    /// point mass.
    pub fn from_values(values: &[f64], bins: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("cannot build a histogram from no values".into()));
        }
        if bins == 0 {
            return Err(Error::InvalidParameter("bin count must be >= 1".into()));
        }
        let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidParameter("histogram values must be finite".into()));
        }
        if lo == hi {
            return Ok(Histogram::point_mass(lo));
        }
        let width = (hi - lo) / bins as f64;
        let mut counts = vec![0.0; bins];
        for &v in values {
            let mut b = ((v - lo) / width) as usize;
            if b >= bins {
                b = bins - 1; // v == hi lands in the last bin
            }
            counts[b] += 1.0;
        }
        let bin_edges = (0..=bins).map(|i| lo + width * i as f64).collect();
        Ok(Histogram { bin_edges, counts })
    }

    pub fn bin_edges(&self) -> &[f64] {
        &self.bin_edges
    }

    pub fn counts(&self) -> &[f64] {
        &self.counts
    }

    pub fn num_bins(&self) -> usize {
        self.counts.len()
    }

    pub fn total_count(&self) -> f64 {
        self.counts.iter().sum()
    }

    /// Normalized bin probabilities.
    pub fn probabilities(&self) -> Vec<f64> {
        let total = self.total_count();
        self.counts.iter().map(|&c| c / total).collect()
    }

    /// Index of the bin containing `v` (last bin is closed on the right).
    pub fn bin_of(&self, v: f64) -> Option<usize> {
        if v < self.bin_edges[0] || v > *self.bin_edges.last().unwrap() {
            return None;
        }
        // Linear scan is fine at the bin counts used here.
        for b in 0..self.num_bins() {
            let hi = self.bin_edges[b + 1];
            if v < hi || (b == self.num_bins() - 1 && v <= hi) {
                if v >= self.bin_edges[b] {
                    return Some(b);
                }
            }
        }
        None
    }

    /// Draws one value: bin proportional to count, uniform within the bin.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<f64> {
        let total = self.total_count();
        if !(total > 0.0) {
            return Err(Error::InvalidParameter("cannot sample a histogram with zero total count".into()));
        }
        let mut target = rng.gen::<f64>() * total;
        let mut bin = self.counts.len() - 1;
        for (i, &c) in self.counts.iter().enumerate() {
            if target < c {
                bin = i;
                break;
            }
            target -= c;
        }
        let lo = self.bin_edges[bin];
        let hi = self.bin_edges[bin + 1];
        if lo == hi {
            return Ok(lo);
        }
        Ok(lo + rng.gen::<f64>() * (hi - lo))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_bin_samples_stay_inside() {
        let h = Histogram::new(vec![0.0, 1.0], vec![7.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let v = h.sample(&mut rng).unwrap();
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn bin_frequencies_follow_counts() {
        // Counts (1, 3) -> empirical frequencies (0.25, 0.75) within 0.01.
        let h = Histogram::new(vec![0.0, 1.0, 2.0], vec![1.0, 3.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let n = 100_000;
        let mut low = 0usize;
        for _ in 0..n {
            if h.sample(&mut rng).unwrap() < 1.0 {
                low += 1;
            }
        }
        let f = low as f64 / n as f64;
        assert!((f - 0.25).abs() < 0.01, "empirical low-bin frequency {f}");
    }

    #[test]
    fn same_seed_same_sequence() {
        let h = Histogram::from_values(&[0.0, 0.5, 0.5, 2.0, 3.0], 4).unwrap();
        let draw = |seed: u64| -> Vec<f64> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..32).map(|_| h.sample(&mut rng).unwrap()).collect()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn point_mass_always_returns_value() {
        let h = Histogram::point_mass(0.25);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..16 {
            assert_eq!(h.sample(&mut rng).unwrap(), 0.25);
        }
    }

    #[test]
    fn zero_total_count_is_an_error() {
        let h = Histogram::new(vec![0.0, 1.0], vec![0.0]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(h.sample(&mut rng).is_err());
    }

    #[test]
    fn from_values_covers_extremes() {
        let h = Histogram::from_values(&[1.0, 2.0, 3.0, 4.0], 3).unwrap();
        assert_eq!(h.total_count(), 4.0);
        assert_eq!(h.bin_of(1.0), Some(0));
        assert_eq!(h.bin_of(4.0), Some(2));
    }
}
