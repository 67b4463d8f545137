use ndarray::Array1;

use crate::error::{Error, Result};
use crate::sum;

/// Relative smoothing mass given to zero entries by [`Histogram::with_smoothing`]
/// when callers do not pick their own value.
pub const DEFAULT_SMOOTHING: f64 = 1e-6;

/// A point on the probability simplex: nonnegative weights summing to one.
///
/// Construction normalizes, so any vector of nonnegative finite weights with
/// positive total mass is accepted. Zero entries are legal but make the
/// marginal-scaling problem ill-posed as a solve target; see
/// [`Histogram::with_smoothing`].
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    weights: Array1<f64>,
}

impl Histogram {
    /// Normalize `weights` onto the simplex.
    ///
    /// Errors with [`Error::Domain`] on an empty vector, a negative or
    /// non-finite entry, or zero total mass.
    pub fn new(weights: impl Into<Array1<f64>>) -> Result<Self> {
        let weights = weights.into();
        Self::normalize(weights)
    }

    /// Like [`Histogram::new`], but first replaces every zero entry with
    /// `delta_rel` times the total input mass. This keeps all entries
    /// strictly positive, which the scaling updates (division by marginals)
    /// require of solve targets.
    pub fn with_smoothing(weights: impl Into<Array1<f64>>, delta_rel: f64) -> Result<Self> {
        let mut weights = weights.into();
        if !(delta_rel > 0.0) || !delta_rel.is_finite() {
            return Err(Error::Domain {
                what: "smoothing delta must be positive and finite".into(),
                value: delta_rel,
            });
        }
        Self::check_entries(&weights)?;
        let total = sum::sum(weights.iter().copied());
        if !(total > 0.0) {
            return Err(Error::Domain {
                what: "histogram total mass must be positive".into(),
                value: total,
            });
        }
        let delta = delta_rel * total;
        weights.mapv_inplace(|w| if w == 0.0 { delta } else { w });
        Self::normalize(weights)
    }

    /// The uniform histogram on `n` bins.
    pub fn uniform(n: usize) -> Self {
        assert!(n > 0, "uniform histogram needs at least one bin");
        Self {
            weights: Array1::from_elem(n, 1.0 / n as f64),
        }
    }

    fn check_entries(weights: &Array1<f64>) -> Result<()> {
        if weights.is_empty() {
            return Err(Error::Domain {
                what: "histogram must have at least one bin".into(),
                value: 0.0,
            });
        }
        for &w in weights {
            if !(w >= 0.0) || !w.is_finite() {
                return Err(Error::Domain {
                    what: "histogram entries must be nonnegative and finite".into(),
                    value: w,
                });
            }
        }
        Ok(())
    }

    fn normalize(mut weights: Array1<f64>) -> Result<Self> {
        Self::check_entries(&weights)?;
        let total = sum::sum(weights.iter().copied());
        if !(total > 0.0) {
            return Err(Error::Domain {
                what: "histogram total mass must be positive".into(),
                value: total,
            });
        }
        weights.mapv_inplace(|w| w / total);
        Ok(Self { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &Array1<f64> {
        &self.weights
    }

    /// True when every entry is strictly positive (well-posed solve target).
    pub fn is_strictly_positive(&self) -> bool {
        self.weights.iter().all(|&w| w > 0.0)
    }
}

impl std::ops::Index<usize> for Histogram {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.weights[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_simplex() {
        let h = Histogram::new(vec![2.0, 1.0, 1.0]).unwrap();
        let total: f64 = h.weights().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(h[0], 0.5);
    }

    #[test]
    fn large_histogram_sums_to_one_within_1e12() {
        let w: Vec<f64> = (0..784).map(|i| (i as f64).sin().abs() + 0.1).collect();
        let h = Histogram::new(w).unwrap();
        let total = crate::sum::sum(h.weights().iter().copied());
        assert!((total - 1.0).abs() < 1e-12, "total {total}");
    }

    #[test]
    fn rejects_negative_and_nan() {
        assert!(Histogram::new(vec![0.5, -0.1]).is_err());
        assert!(Histogram::new(vec![0.5, f64::NAN]).is_err());
        assert!(Histogram::new(vec![0.0, 0.0]).is_err());
        assert!(Histogram::new(Vec::<f64>::new()).is_err());
    }

    #[test]
    fn smoothing_fills_zeros() {
        let h = Histogram::with_smoothing(vec![0.0, 1.0, 0.0, 3.0], 1e-6).unwrap();
        assert!(h.is_strictly_positive());
        let total = crate::sum::sum(h.weights().iter().copied());
        assert!((total - 1.0).abs() < 1e-12);
        // Smoothed entries carry delta_rel * total relative mass.
        assert!((h[0] - 4e-6 / (4.0 + 8e-6)).abs() < 1e-18);
    }

    #[test]
    fn smoothing_rejects_all_zero() {
        assert!(Histogram::with_smoothing(vec![0.0, 0.0], 1e-6).is_err());
    }
}
