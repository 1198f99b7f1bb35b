//! Uniformity metrics used to rank candidate expansions.
//!
//! `centered_l2` is Hickernell's centered L2 discrepancy; lower is more
//! uniform. `centered_l2_squared` is the same quantity before the square root,
//! which is the scale most statistics packages report. `geometric` is the
//! maximin criterion, the smallest pairwise Euclidean distance; higher is
//! better spread. Both are `O(N^2 P)`.

use crate::error::{Error, Result};
use crate::sample_set::SampleSet;

/// Squared centered L2 discrepancy:
///
/// ```text
/// (13/12)^P
///   - 2/N   sum_i     prod_j [1 + |x_ij - 1/2|/2 - |x_ij - 1/2|^2/2]
///   + 1/N^2 sum_i,k   prod_j [1 + |x_ij - 1/2|/2 + |x_kj - 1/2|/2 - |x_ij - x_kj|/2]
/// ```
pub fn centered_l2_squared(set: &SampleSet) -> f64 {
    let n = set.n();
    let p = set.p();
    let mut single = 0.0;
    for row in set.rows() {
        let mut prod = 1.0;
        for &x in row {
            let d = libm::fabs(x - 0.5);
            prod *= 1.0 + 0.5 * d - 0.5 * d * d;
        }
        single += prod;
    }
    // Kernel is symmetric in (i, k): off-diagonal pairs once, doubled.
    let mut diag = 0.0;
    let mut off = 0.0;
    for i in 0..n {
        let a = set.row(i);
        let mut prod = 1.0;
        for &x in a {
            prod *= 1.0 + libm::fabs(x - 0.5);
        }
        diag += prod;
        for k in (i + 1)..n {
            let b = set.row(k);
            let mut prod = 1.0;
            for j in 0..p {
                prod *= 1.0 + 0.5 * libm::fabs(a[j] - 0.5) + 0.5 * libm::fabs(b[j] - 0.5)
                    - 0.5 * libm::fabs(a[j] - b[j]);
            }
            off += prod;
        }
    }
    let nf = n as f64;
    libm::pow(13.0 / 12.0, p as f64) - 2.0 / nf * single + (diag + 2.0 * off) / (nf * nf)
}

/// Centered L2 discrepancy (the square root of [`centered_l2_squared`]).
pub fn centered_l2(set: &SampleSet) -> f64 {
    // Rounding can push a near-zero square slightly negative.
    libm::sqrt(centered_l2_squared(set).max(0.0))
}

/// Smallest Euclidean distance between two rows.
pub fn geometric(set: &SampleSet) -> Result<f64> {
    let n = set.n();
    if n < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            found: n,
        });
    }
    let mut best = f64::INFINITY;
    for i in 0..n {
        let a = set.row(i);
        for k in (i + 1)..n {
            let d2: f64 = a
                .iter()
                .zip(set.row(k))
                .map(|(x, y)| (x - y) * (x - y))
                .sum();
            if d2 < best {
                best = d2;
            }
        }
    }
    Ok(libm::sqrt(best))
}
