//! Folding of an `N`-point signal onto `sqrt(N)` points by strided column
//! sums. This is the multiplierless step that lets a `sqrt(N)`-point DFT
//! reproduce the square-index coefficients of the full transform.

use crate::counter::{NoTally, OpCounter, Tally};
use crate::error::Error;
use crate::signal::{CompactedSignal, ComplexSignal};

/// Folds `x` onto `sqrt(N)` points: output sample `n` is the sum of
/// `x[n + r*sqrt(N)]` over `r = 0..sqrt(N)`, accumulated in ascending `r`
/// order starting from the `r = 0` term.
///
/// Costs exactly `N - sqrt(N)` complex additions and no multiplications.
/// Fails with [`Error::NotASquare`] when the length has no integer root.
pub fn compact_sic(x: &ComplexSignal) -> Result<CompactedSignal, Error> {
    fold(x, &mut NoTally)
}

/// Same as [`compact_sic`], tallying every complex addition into `counter`.
pub fn compact_sic_counted(
    x: &ComplexSignal,
    counter: &mut OpCounter,
) -> Result<CompactedSignal, Error> {
    fold(x, counter)
}

fn fold<T: Tally>(x: &ComplexSignal, tally: &mut T) -> Result<CompactedSignal, Error> {
    let square = x.square_length()?;
    let root = square.root();
    let samples = x.samples();

    // The root column sums are independent; each one accumulates its own
    // column in ascending r order so the result is deterministic.
    let mut folded = Vec::with_capacity(root);
    for n in 0..root {
        let mut acc = samples[n];
        for r in 1..root {
            acc += samples[n + r * root];
            tally.add(1);
        }
        folded.push(acc);
    }

    Ok(CompactedSignal::from_raw(folded, square.n()))
}
