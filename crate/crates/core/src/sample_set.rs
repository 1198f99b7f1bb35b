use alloc::vec::Vec;

use crate::error::{Error, Result};

/// `N x P` design in `[0, 1)^P`, stored row-major.
///
/// Rows keep their order: expansion only ever appends.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    n: usize,
    p: usize,
    data: Vec<f64>,
}

/// Checks a candidate design given as rows.
///
/// Fails on an empty set, a row of the wrong width, or any coordinate
/// outside `[0, 1)`. The first offending row/column is reported.
pub fn validate<R: AsRef<[f64]>>(rows: &[R]) -> Result<()> {
    let first = rows.first().ok_or(Error::Empty)?;
    let p = first.as_ref().len();
    if p == 0 {
        return Err(Error::Empty);
    }
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != p {
            return Err(Error::Ragged {
                row: i,
                expected: p,
                found: row.len(),
            });
        }
        check_row(i, row)?;
    }
    Ok(())
}

fn check_row(i: usize, row: &[f64]) -> Result<()> {
    for (j, &x) in row.iter().enumerate() {
        if !(0.0..1.0).contains(&x) {
            return Err(Error::OutOfRange {
                row: i,
                col: j,
                value: x,
            });
        }
    }
    Ok(())
}

impl SampleSet {
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        validate(rows)?;
        let p = rows[0].as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * p);
        for row in rows {
            data.extend_from_slice(row.as_ref());
        }
        Ok(SampleSet {
            n: rows.len(),
            p,
            data,
        })
    }

    /// Builds a set from a row-major buffer of `n * p` coordinates.
    pub fn from_flat(n: usize, p: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 || p == 0 {
            return Err(Error::Empty);
        }
        if data.len() != n * p {
            return Err(Error::ShapeMismatch {
                n,
                p,
                len: data.len(),
            });
        }
        for (i, row) in data.chunks_exact(p).enumerate() {
            check_row(i, row)?;
        }
        Ok(SampleSet { n, p, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.p + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.p..(i + 1) * self.p]
    }

    pub fn rows(&self) -> core::slice::ChunksExact<'_, f64> {
        self.data.chunks_exact(self.p)
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.data.iter().skip(j).step_by(self.p).copied()
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    /// New set holding `self`'s rows followed by `other`'s.
    pub(crate) fn concat(&self, other: &SampleSet) -> SampleSet {
        debug_assert_eq!(self.p, other.p);
        let mut data = Vec::with_capacity(self.data.len() + other.data.len());
        data.extend_from_slice(&self.data);
        data.extend_from_slice(&other.data);
        SampleSet {
            n: self.n + other.n,
            p: self.p,
            data,
        }
    }

    /// Same set with one extra row; the row must already be valid.
    pub fn with_row(&self, row: &[f64]) -> Result<SampleSet> {
        if row.len() != self.p {
            return Err(Error::Ragged {
                row: self.n,
                expected: self.p,
                found: row.len(),
            });
        }
        check_row(self.n, row)?;
        let mut data = self.data.clone();
        data.extend_from_slice(row);
        Ok(SampleSet {
            n: self.n + 1,
            p: self.p,
            data,
        })
    }

    pub(crate) fn from_parts_unchecked(n: usize, p: usize, data: Vec<f64>) -> SampleSet {
        debug_assert_eq!(data.len(), n * p);
        SampleSet { n, p, data }
    }
}

/// Bin of `x` in a `k`-bin uniform grid: `floor(x * k)`, clamped to `k - 1`.
pub fn bin_index(x: f64, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::InvalidBinCount);
    }
    if !(0.0..1.0).contains(&x) {
        return Err(Error::OutOfRange {
            row: 0,
            col: 0,
            value: x,
        });
    }
    Ok(bin_of(x, k))
}

#[inline]
pub(crate) fn bin_of(x: f64, k: usize) -> usize {
    // truncation == floor for non-negative x
    let b = (x * k as f64) as usize;
    b.min(k - 1)
}

/// Point `(bin + u) / k`, nudged by ulps if rounding moved it out of `bin`
/// (or onto 1.0). The result always satisfies `bin_of(x, k) == bin`.
pub(crate) fn stratum_point(bin: usize, u: f64, k: usize) -> f64 {
    let mut x = (bin as f64 + u) / k as f64;
    if x >= 1.0 {
        x = prev_float(1.0);
    }
    while bin_of(x, k) > bin {
        x = prev_float(x);
    }
    while bin_of(x, k) < bin {
        x = next_float(x);
    }
    x
}

fn next_float(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    f64::from_bits(x.to_bits() + 1)
}

fn prev_float(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    f64::from_bits(x.to_bits() - 1)
}
