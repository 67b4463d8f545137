//! Neumaier-compensated accumulation.
//!
//! Marginal sums, divergences and the dual objective are all reductions over
//! n or n^2 terms; plain sequential summation at n = 784 loses enough digits
//! to blow the 1e-10 .. 1e-12 tolerances this crate guarantees.

/// Running compensated sum (Neumaier's variant of Kahan summation).
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Accum {
    sum: f64,
    comp: f64,
}

impl Accum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of an iterator of terms.
pub(crate) fn sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = Accum::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

/// Compensated dot product of two equal-length slices of views.
pub(crate) fn dot<'a, A, B>(a: A, b: B) -> f64
where
    A: IntoIterator<Item = &'a f64>,
    B: IntoIterator<Item = &'a f64>,
{
    let mut acc = Accum::new();
    for (x, y) in a.into_iter().zip(b) {
        acc.add(x * y);
    }
    acc.value()
}
