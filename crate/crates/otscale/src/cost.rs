use ndarray::Array2;

use crate::error::{Error, Result};

/// Square matrix of nonnegative per-unit transport costs.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    entries: Array2<f64>,
}

impl CostMatrix {
    /// Wrap an explicit cost matrix. Errors unless it is square with
    /// nonnegative finite entries.
    pub fn new(entries: Array2<f64>) -> Result<Self> {
        let (rows, cols) = entries.dim();
        if rows != cols || rows == 0 {
            return Err(Error::Dimension {
                what: "cost matrix must be square and nonempty",
                expected: rows.max(1),
                got: cols,
            });
        }
        for &e in &entries {
            if !(e >= 0.0) || !e.is_finite() {
                return Err(Error::Domain {
                    what: "cost entries must be nonnegative and finite".into(),
                    value: e,
                });
            }
        }
        Ok(Self { entries })
    }

    /// The l1 (Manhattan) distance between pixels of a `side` x `side` image
    /// grid, pixels indexed row-major. This is the cost geometry used for
    /// image histograms: `n = side^2` bins.
    pub fn grid(side: usize) -> Self {
        assert!(side >= 1, "grid needs at least one pixel");
        let n = side * side;
        let mut entries = Array2::zeros((n, n));
        for i in 0..n {
            let (ri, ci) = (i / side, i % side);
            for j in 0..n {
                let (rj, cj) = (j / side, j % side);
                entries[[i, j]] = (ri.abs_diff(rj) + ci.abs_diff(cj)) as f64;
            }
        }
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<f64> {
        &self.entries
    }

    pub fn max_entry(&self) -> f64 {
        self.entries.iter().copied().fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_pixel_grid() {
        let c = CostMatrix::grid(1);
        assert_eq!(c.dim(), 1);
        assert_eq!(c.entries()[[0, 0]], 0.0);
    }

    #[test]
    fn two_by_two_grid_distances() {
        let c = CostMatrix::grid(2);
        // Pixels 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1).
        assert_eq!(c.entries()[[0, 3]], 2.0);
        assert_eq!(c.entries()[[0, 1]], 1.0);
        assert_eq!(c.entries()[[1, 2]], 2.0);
        assert_eq!(c.entries()[[2, 2]], 0.0);
    }

    #[test]
    fn mnist_grid_shape_and_diameter() {
        let c = CostMatrix::grid(28);
        assert_eq!(c.dim(), 784);
        assert_eq!(c.max_entry(), 54.0);
        // Symmetry and zero diagonal, spot-checked exhaustively.
        for i in 0..784 {
            assert_eq!(c.entries()[[i, i]], 0.0);
        }
        assert_eq!(c.entries()[[0, 783]], 54.0);
    }

    #[test]
    fn rejects_non_square_and_negative() {
        assert!(CostMatrix::new(Array2::zeros((2, 3))).is_err());
        let mut m = Array2::zeros((2, 2));
        m[[0, 1]] = -1.0;
        assert!(CostMatrix::new(m).is_err());
    }
}
