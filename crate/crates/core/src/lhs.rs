use alloc::vec;

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::sample_set::{stratum_point, SampleSet};

/// Classic Latin hypercube of `n` points in `p` dimensions.
///
/// Dimension by dimension, draws a Fisher-Yates permutation of `0..n` and
/// then `n` jitters; row `i` gets `(perm[i] + u_i) / n`. Every column thus
/// has exactly one point per bin of the `n`-bin grid.
pub fn sample_lhs(p: usize, n: usize, rng: &mut RngStream) -> Result<SampleSet> {
    if n == 0 || p == 0 {
        return Err(Error::Empty);
    }
    let mut data = vec![0.0; n * p];
    for j in 0..p {
        let perm = rng.permutation(n);
        for (i, &bin) in perm.iter().enumerate() {
            data[i * p + j] = stratum_point(bin, rng.next_f64(), n);
        }
    }
    Ok(SampleSet::from_parts_unchecked(n, p, data))
}
