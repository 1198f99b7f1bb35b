//! LHS degree: the fraction of `(dimension, bin)` cells of the `N`-bin grid
//! that hold at least one sample.
//!
//! The definition sums `min(count, 1)` over every bin of every dimension and
//! divides by `N * P`. Here that is one histogram pass per dimension; the
//! occupied-bin totals are integers and only the final ratio is a float, so
//! a true Latin hypercube scores exactly `1.0`.
//!
//! # Predicted degree of an expansion
//!
//! Expanding `N` points by `M` regrids every dimension into `N + M` bins.
//! Say `c_j` of those bins are occupied in dimension `j`. The expansion puts
//! each of the `M` new points into a distinct bin that was empty, so the
//! expanded set occupies exactly `c_j + M` bins of its own `(N + M)`-bin
//! grid. The degree after expansion is therefore
//! `sum_j (c_j + M) / ((N + M) * P)`, which depends on the initial set and
//! `M` only, never on which voids or jitters were drawn.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::expansion::MAX_EXPANSION;
use crate::sample_set::{bin_of, SampleSet};

/// Least-squares constants of the `1 + a * (b + M/N)^c` fit to the mean
/// degree curves.
pub const FIT_A: f64 = -0.167;
pub const FIT_B: f64 = 1.01;
pub const FIT_C: f64 = -2.99;

/// Per-dimension histogram of a set on a `k`-bin grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyProfile {
    k: usize,
    n: usize,
    p: usize,
    counts: Vec<usize>,
    occupied: Vec<usize>,
}

impl OccupancyProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of samples binned.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Counts of dimension `j`, one entry per bin.
    pub fn counts(&self, j: usize) -> &[usize] {
        &self.counts[j * self.k..(j + 1) * self.k]
    }

    pub fn occupied(&self, j: usize) -> usize {
        self.occupied[j]
    }

    pub fn empty(&self, j: usize) -> usize {
        self.k - self.occupied[j]
    }

    /// Indices of the empty bins of dimension `j`, ascending.
    pub fn empty_bins(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.counts(j)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == 0)
            .map(|(l, _)| l)
    }

    pub fn total_occupied(&self) -> usize {
        self.occupied.iter().sum()
    }
}

pub fn occupancy(set: &SampleSet, k: usize) -> Result<OccupancyProfile> {
    if k == 0 {
        return Err(Error::InvalidBinCount);
    }
    let p = set.p();
    let mut counts = vec![0usize; p * k];
    for row in set.rows() {
        for (j, &x) in row.iter().enumerate() {
            counts[j * k + bin_of(x, k)] += 1;
        }
    }
    let occupied = counts
        .chunks_exact(k)
        .map(|c| c.iter().filter(|&&v| v > 0).count())
        .collect();
    Ok(OccupancyProfile {
        k,
        n: set.n(),
        p,
        counts,
        occupied,
    })
}

/// Number of distinct `k`-grid bins hit in dimension `j`. Memory is `O(n)`
/// whatever `k` is.
fn distinct_bins(set: &SampleSet, j: usize, k: usize, scratch: &mut Vec<usize>) -> usize {
    scratch.clear();
    scratch.extend(set.column(j).map(|x| bin_of(x, k)));
    scratch.sort_unstable();
    scratch.dedup();
    scratch.len()
}

/// Exact `(numerator, denominator)` of the degree after expanding by `m`.
pub(crate) fn predicted_ratio(set: &SampleSet, m: usize) -> Result<(u128, u128)> {
    if m > MAX_EXPANSION {
        return Err(Error::ExpansionTooLarge {
            m,
            max: MAX_EXPANSION,
        });
    }
    let k = set.n() + m;
    let mut scratch = Vec::with_capacity(set.n());
    let occupied: usize = (0..set.p())
        .map(|j| distinct_bins(set, j, k, &mut scratch))
        .sum();
    let num = occupied as u128 + (m as u128) * set.p() as u128;
    let den = k as u128 * set.p() as u128;
    Ok((num, den))
}

/// LHS degree of `set`, in `(0, 1]`; `1.0` exactly iff `set` is a Latin
/// hypercube.
pub fn degree(set: &SampleSet) -> f64 {
    let (num, den) = predicted_ratio(set, 0).expect("m = 0 is always in range");
    num as f64 / den as f64
}

/// Degree that expanding `set` by `m` samples will produce.
pub fn predicted_degree(set: &SampleSet, m: usize) -> Result<f64> {
    let (num, den) = predicted_ratio(set, m)?;
    Ok(num as f64 / den as f64)
}

/// Smooth approximation of the mean degree as a function of `M / N`:
/// `1 - 1 / (6 (1 + ratio)^3)`. Does not reproduce the exact-multiple spikes.
pub fn fitted_degree(ratio: f64) -> Result<f64> {
    if ratio.is_nan() || ratio < 0.0 {
        return Err(Error::NegativeRatio(ratio));
    }
    let s = 1.0 + ratio;
    Ok(1.0 - 1.0 / (6.0 * s * s * s))
}

/// The general fit form `1 + FIT_A * (FIT_B + ratio)^FIT_C`.
pub fn fitted_degree_general(ratio: f64) -> Result<f64> {
    if ratio.is_nan() || ratio < 0.0 {
        return Err(Error::NegativeRatio(ratio));
    }
    Ok(1.0 + FIT_A * libm::pow(FIT_B + ratio, FIT_C))
}
