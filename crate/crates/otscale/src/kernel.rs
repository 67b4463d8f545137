use ndarray::Array2;

use crate::cost::CostMatrix;
use crate::error::{Error, Result};
use crate::sum;

/// The fixed positive matrix `A = exp(-lambda * C)` that diagonal scaling
/// acts on, with its total mass `s = |A|_1` and smallest entry `l` cached.
///
/// `log(s / l)` controls the worst-case update count of every solver in this
/// crate, so both quantities are computed once at construction.
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    entries: Array2<f64>,
    lambda: f64,
    total_mass: f64,
    min_entry: f64,
}

impl KernelMatrix {
    /// Build the kernel `A_ij = exp(-lambda * C_ij)`.
    ///
    /// Errors with [`Error::Underflow`] if any entry rounds to zero in f64,
    /// which signals that `lambda` is too large for this cost scale (this
    /// crate scales in the primal domain and never stabilizes through logs).
    pub fn new(cost: &CostMatrix, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::Domain {
                what: "lambda must be positive and finite".into(),
                value: lambda,
            });
        }
        let entries = cost.entries().mapv(|c| (-lambda * c).exp());
        let mut min_entry = f64::INFINITY;
        for &a in &entries {
            if a < min_entry {
                min_entry = a;
            }
        }
        if min_entry == 0.0 {
            return Err(Error::Underflow {
                lambda,
                max_cost: cost.max_entry(),
            });
        }
        let total_mass = sum::sum(entries.iter().copied());
        Ok(Self {
            entries,
            lambda,
            total_mass,
            min_entry,
        })
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<f64> {
        &self.entries
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Total mass `s = sum of all entries`.
    pub fn total_mass(&self) -> f64 {
        self.total_mass
    }

    /// Smallest entry `l`.
    pub fn min_entry(&self) -> f64 {
        self.min_entry
    }

    /// `log(s / l)`, the condition-like quantity in the convergence bound.
    pub fn log_mass_ratio(&self) -> f64 {
        (self.total_mass / self.min_entry).ln()
    }
}
