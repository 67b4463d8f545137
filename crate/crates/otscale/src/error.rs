use thiserror::Error;

/// Errors produced by constructors, divergences and solver steps.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside an operation's domain (negative mass,
    /// nonpositive parameter, bad argument syntax, ...).
    #[error("domain error: {what} (value {value})")]
    Domain { what: String, value: f64 },

    /// Two inputs that must agree in dimension do not.
    #[error("dimension mismatch in {what}: expected {expected}, got {got}")]
    Dimension {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    /// A kernel entry exp(-lambda * c) rounded to zero in f64, i.e. lambda is
    /// too large for this cost scale.
    #[error("kernel underflow: exp(-{lambda} * {max_cost}) rounds to zero in f64")]
    Underflow { lambda: f64, max_cost: f64 },

    /// A nonpositive or non-finite value appeared where a strictly positive
    /// one is required. `update` is the solver update count when the failure
    /// surfaced from a solve loop, 0 otherwise.
    #[error("numerical failure in {what} at index {index} (update {update}): value {value}")]
    Numerical {
        what: &'static str,
        index: usize,
        value: f64,
        update: u64,
    },

    /// An operation was invoked on a converged (all-zero violation) state
    /// that its contract forbids.
    #[error("degenerate input: {what}")]
    Degenerate { what: &'static str },
}

impl Error {
    /// Attach the solve-loop update count to a numerical failure.
    pub(crate) fn at_update(mut self, k: u64) -> Self {
        if let Error::Numerical { update, .. } = &mut self {
            *update = k;
        }
        self
    }
}

pub type Result<T> = std::result::Result<T, Error>;
