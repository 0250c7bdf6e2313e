/// Tally of complex additions and complex multiplications performed by an
/// instrumented run.
///
/// Counts only grow while a counter is attached to a computation, and the
/// same counter may be threaded through several stages to accumulate a
/// whole-pipeline total. Complex subtractions are tallied as additions.
/// Scaling by a real normalization factor is not tallied.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounter {
    additions: u64,
    multiplications: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn additions(&self) -> u64 {
        self.additions
    }

    pub fn multiplications(&self) -> u64 {
        self.multiplications
    }

    pub fn total(&self) -> u64 {
        self.additions + self.multiplications
    }
}

/// Sink for operation tallies, so kernels can be written once and run either
/// instrumented or at full speed.
pub(crate) trait Tally {
    fn add(&mut self, n: u64);
    fn mul(&mut self, n: u64);
}

impl Tally for OpCounter {
    #[inline]
    fn add(&mut self, n: u64) {
        self.additions += n;
    }

    #[inline]
    fn mul(&mut self, n: u64) {
        self.multiplications += n;
    }
}

/// No-op sink; the optimizer erases it from uninstrumented runs.
pub(crate) struct NoTally;

impl Tally for NoTally {
    #[inline]
    fn add(&mut self, _n: u64) {}

    #[inline]
    fn mul(&mut self, _n: u64) {}
}
