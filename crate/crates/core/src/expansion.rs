//! The "LHS in LHS" expansion.
//!
//! Expanding `N` points by `M`:
//!
//! 1. regrid every dimension into `N + M` bins ([`regrid`]); at least `M` of
//!    them are empty since `N` points cannot fill `N + M` bins,
//! 2. pick `M` empty bins per dimension, uniformly and independently across
//!    dimensions ([`select_voids`]),
//! 3. lay a Latin hypercube over the picked bins: a random permutation per
//!    dimension pairs new sample `i` with one void, then a uniform jitter
//!    places it inside ([`inner_lhs`]).
//!
//! The new rows are appended; the original rows are never touched. With an
//! optimization target, [`expand`] draws several independent candidates and
//! keeps the one whose full expanded set scores best.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::RangeInclusive;

use crate::degree::{degree, occupancy, predicted_ratio, OccupancyProfile};
use crate::discrepancy::{centered_l2, geometric};
use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::sample_set::{stratum_point, SampleSet};

pub const DEFAULT_CANDIDATES: usize = 100;

/// Largest expansion size accepted by [`expand`], [`predicted_degree`](crate::predicted_degree)
/// and [`optimal_expansion`].
pub const MAX_EXPANSION: usize = 1 << 30;

/// What the candidate search optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Optimize {
    /// Single draw, no scoring.
    #[default]
    None,
    /// Minimize [`centered_l2`] of the expanded set.
    CenteredDiscrepancy,
    /// Maximize [`geometric`] (minimum pairwise distance) of the expanded set.
    GeometricDiscrepancy,
}

impl Optimize {
    /// `true` if `a` is strictly better than `b` under this target.
    fn better(self, a: f64, b: f64) -> bool {
        match self {
            Optimize::GeometricDiscrepancy => a > b,
            _ => a < b,
        }
    }

    fn meets(self, value: f64, tolerance: f64) -> bool {
        match self {
            Optimize::GeometricDiscrepancy => value >= tolerance,
            _ => value <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionConfig {
    pub m: usize,
    pub optimize: Optimize,
    /// Number of independent expansions drawn when optimizing.
    pub candidates: usize,
    /// Stop as soon as a candidate reaches this metric value (at or below for
    /// discrepancy, at or above for the minimum distance).
    pub tolerance: Option<f64>,
    pub seed: u64,
}

impl ExpansionConfig {
    pub fn new(m: usize, seed: u64) -> Self {
        ExpansionConfig {
            m,
            optimize: Optimize::None,
            candidates: DEFAULT_CANDIDATES,
            tolerance: None,
            seed,
        }
    }

    pub fn with_optimize(mut self, optimize: Optimize) -> Self {
        self.optimize = optimize;
        self
    }

    pub fn with_candidates(mut self, candidates: usize) -> Self {
        self.candidates = candidates;
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = Some(tolerance);
        self
    }

    /// `m = 0` passes: [`expand`] treats it as a no-op.
    pub fn validate(&self) -> Result<()> {
        if self.candidates == 0 {
            return Err(Error::InvalidConfig("candidates must be at least 1"));
        }
        if let Some(t) = self.tolerance {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::InvalidConfig("tolerance must be positive"));
            }
        }
        if self.m > MAX_EXPANSION {
            return Err(Error::ExpansionTooLarge {
                m: self.m,
                max: MAX_EXPANSION,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult {
    /// Input rows followed by the new ones.
    pub expanded: SampleSet,
    pub measured_degree: f64,
    /// Score of the returned set under the requested target, if any.
    pub metric_value: Option<f64>,
    pub candidates_evaluated: usize,
}

/// Histogram of `set` on the `n + m` grid.
pub fn regrid(set: &SampleSet, m: usize) -> Result<OccupancyProfile> {
    if m > MAX_EXPANSION {
        return Err(Error::ExpansionTooLarge {
            m,
            max: MAX_EXPANSION,
        });
    }
    occupancy(set, set.n() + m)
}

/// Picks `m` empty bins per dimension, uniformly without replacement.
/// Each dimension's picks come back sorted ascending.
pub fn select_voids(
    profile: &OccupancyProfile,
    m: usize,
    rng: &mut RngStream,
) -> Result<Vec<Vec<usize>>> {
    let mut voids = Vec::with_capacity(profile.p());
    for j in 0..profile.p() {
        let mut empty: Vec<usize> = profile.empty_bins(j).collect();
        if empty.len() < m {
            return Err(Error::VoidShortage {
                dim: j,
                empty: empty.len(),
                m,
            });
        }
        // partial Fisher-Yates
        for i in 0..m {
            let r = i + rng.below((empty.len() - i) as u64) as usize;
            empty.swap(i, r);
        }
        empty.truncate(m);
        empty.sort_unstable();
        voids.push(empty);
    }
    Ok(voids)
}

/// Latin hypercube of `m` points over the selected voids of a `grid_k` grid.
pub fn inner_lhs(
    voids: &[Vec<usize>],
    m: usize,
    grid_k: usize,
    rng: &mut RngStream,
) -> Result<SampleSet> {
    if m == 0 || voids.is_empty() {
        return Err(Error::Empty);
    }
    for (j, bins) in voids.iter().enumerate() {
        if bins.len() != m || bins.iter().any(|&b| b >= grid_k) {
            return Err(Error::BadVoids { dim: j });
        }
        let mut sorted = bins.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVoid { dim: j, bin: w[0] });
        }
    }
    let p = voids.len();
    let mut data = alloc::vec![0.0; m * p];
    for (j, bins) in voids.iter().enumerate() {
        let perm = rng.permutation(m);
        for (i, &slot) in perm.iter().enumerate() {
            data[i * p + j] = stratum_point(bins[slot], rng.next_f64(), grid_k);
        }
    }
    Ok(SampleSet::from_parts_unchecked(m, p, data))
}

fn expand_once(set: &SampleSet, m: usize, rng: &mut RngStream) -> Result<SampleSet> {
    let profile = regrid(set, m)?;
    let voids = select_voids(&profile, m, rng)?;
    let fresh = inner_lhs(&voids, m, profile.k(), rng)?;
    Ok(set.concat(&fresh))
}

/// Candidate `index` of an expansion seeded with `seed`: one full expansion
/// drawn from child stream `index`. Unoptimized [`expand`] returns candidate 0.
pub fn draw_candidate(set: &SampleSet, m: usize, seed: u64, index: usize) -> Result<SampleSet> {
    let mut rng = RngStream::new(seed).child(index as u64);
    expand_once(set, m, &mut rng)
}

/// Metric of `set` under `target`; `None` for [`Optimize::None`].
pub fn score(set: &SampleSet, target: Optimize) -> Result<Option<f64>> {
    match target {
        Optimize::None => Ok(None),
        Optimize::CenteredDiscrepancy => Ok(Some(centered_l2(set))),
        Optimize::GeometricDiscrepancy => geometric(set).map(Some),
    }
}

/// Running best-candidate reduction.
///
/// Scores must be offered in candidate-index order. Ties keep the lower
/// index, so a parallel search that offers its batch results in order
/// reaches the same winner as a serial one.
#[derive(Debug, Clone)]
pub struct Selection {
    target: Optimize,
    tolerance: Option<f64>,
    best: Option<(usize, f64)>,
    evaluated: usize,
    stopped: bool,
}

impl Selection {
    pub fn new(target: Optimize, tolerance: Option<f64>) -> Self {
        Selection {
            target,
            tolerance,
            best: None,
            evaluated: 0,
            stopped: false,
        }
    }

    /// Records candidate `index`. Returns `true` once the tolerance is met;
    /// later offers are then ignored.
    pub fn offer(&mut self, index: usize, value: f64) -> bool {
        if self.stopped {
            return true;
        }
        debug_assert_eq!(index, self.evaluated, "offers must arrive in index order");
        self.evaluated += 1;
        match self.best {
            Some((_, b)) if !self.target.better(value, b) => {}
            _ => self.best = Some((index, value)),
        }
        if let Some(t) = self.tolerance {
            if self.target.meets(value, t) {
                self.stopped = true;
            }
        }
        self.stopped
    }

    pub fn best(&self) -> Option<(usize, f64)> {
        self.best
    }

    pub fn evaluated(&self) -> usize {
        self.evaluated
    }

    pub fn stopped(&self) -> bool {
        self.stopped
    }
}

/// Expands `set` by `config.m` samples.
///
/// `m = 0` returns the input unchanged, scored under the requested target.
pub fn expand(set: &SampleSet, config: &ExpansionConfig) -> Result<ExpansionResult> {
    config.validate()?;
    if config.m == 0 {
        return Ok(ExpansionResult {
            expanded: set.clone(),
            measured_degree: degree(set),
            metric_value: score(set, config.optimize)?,
            candidates_evaluated: 0,
        });
    }
    if config.optimize == Optimize::None {
        let expanded = draw_candidate(set, config.m, config.seed, 0)?;
        return Ok(ExpansionResult {
            measured_degree: degree(&expanded),
            expanded,
            metric_value: None,
            candidates_evaluated: 1,
        });
    }
    let mut selection = Selection::new(config.optimize, config.tolerance);
    let mut best_set = None;
    for index in 0..config.candidates {
        let candidate = draw_candidate(set, config.m, config.seed, index)?;
        let value = score(&candidate, config.optimize)?.expect("target is not None");
        let stop = selection.offer(index, value);
        if selection.best().map(|(i, _)| i) == Some(index) {
            best_set = Some(candidate);
        }
        if stop {
            break;
        }
    }
    finish(selection, best_set.expect("at least one candidate"))
}

/// Builds the result for a finished candidate search whose winner is `winner`.
pub(crate) fn finish(selection: Selection, winner: SampleSet) -> Result<ExpansionResult> {
    let (_, value) = selection.best().ok_or(Error::InvalidConfig("no candidates"))?;
    Ok(ExpansionResult {
        measured_degree: degree(&winner),
        expanded: winner,
        metric_value: Some(value),
        candidates_evaluated: selection.evaluated(),
    })
}

/// Baseline: `m` successive one-sample expansions, all drawn from `rng`.
/// `candidates_evaluated` counts the `m` single-sample steps.
pub fn expand_unitary(set: &SampleSet, m: usize, rng: &mut RngStream) -> Result<ExpansionResult> {
    if m > MAX_EXPANSION {
        return Err(Error::ExpansionTooLarge {
            m,
            max: MAX_EXPANSION,
        });
    }
    let mut current = set.clone();
    for _ in 0..m {
        current = expand_once(&current, 1, rng)?;
    }
    Ok(ExpansionResult {
        measured_degree: degree(&current),
        expanded: current,
        metric_value: None,
        candidates_evaluated: m,
    })
}

/// Ranks expansion sizes by the degree they would produce.
///
/// Every `m` in `range`, plus `m = 0`, is evaluated with
/// [`predicted_degree`](crate::predicted_degree); nothing is sampled.
/// Entries sort by degree descending, then by smaller `m`. Without
/// `verbose` only the top entry is returned.
pub fn optimal_expansion(
    set: &SampleSet,
    range: RangeInclusive<usize>,
    verbose: bool,
) -> Result<Vec<(usize, f64)>> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    if hi > MAX_EXPANSION {
        return Err(Error::ExpansionTooLarge {
            m: hi,
            max: MAX_EXPANSION,
        });
    }
    let mut ranked = Vec::with_capacity(hi - lo + 2);
    if lo > 0 {
        ranked.push((0, predicted_ratio(set, 0)?));
    }
    for m in range {
        ranked.push((m, predicted_ratio(set, m)?));
    }
    // Exact rational comparison so ties are real ties.
    ranked.sort_by(|(ma, (na, da)), (mb, (nb, db))| {
        match (nb * da).cmp(&(na * db)) {
            Ordering::Equal => ma.cmp(mb),
            o => o,
        }
    });
    if !verbose {
        ranked.truncate(1);
    }
    Ok(ranked
        .into_iter()
        .map(|(m, (num, den))| (m, num as f64 / den as f64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::predicted_degree;
    use crate::lhs::sample_lhs;
    use crate::sample_set::bin_of;
    use alloc::vec;
    use proptest::prelude::*;

    fn set1d(xs: &[f64]) -> SampleSet {
        let rows: Vec<Vec<f64>> = xs.iter().map(|&x| vec![x]).collect();
        SampleSet::from_rows(&rows).unwrap()
    }

    #[test]
    fn regrid_hand_example() {
        let prof = regrid(&set1d(&[0.05, 0.30]), 2).unwrap();
        assert_eq!(prof.k(), 4);
        assert_eq!(prof.counts(0), &[1, 1, 0, 0]);
        assert_eq!(prof.empty_bins(0).collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn regrid_at_m_equals_n_halves_every_bin() {
        for seed in 0..50 {
            let s = sample_lhs(3, 17, &mut RngStream::new(seed)).unwrap();
            let prof = regrid(&s, 17).unwrap();
            for j in 0..3 {
                assert_eq!(prof.occupied(j), 17);
                assert_eq!(prof.empty(j), 17);
                // exactly one of each pair (2l, 2l+1) is occupied
                for l in 0..17 {
                    let c = prof.counts(j);
                    assert_eq!(c[2 * l] + c[2 * l + 1], 1);
                }
            }
        }
    }

    #[test]
    fn forced_void_selection() {
        let prof = regrid(&set1d(&[0.05, 0.30]), 2).unwrap();
        for seed in 0..20 {
            let v = select_voids(&prof, 2, &mut RngStream::new(seed)).unwrap();
            assert_eq!(v, vec![vec![2, 3]]);
        }
    }

    #[test]
    fn void_shortage_is_reported() {
        let prof = regrid(&set1d(&[0.05, 0.30]), 2).unwrap();
        assert_eq!(
            select_voids(&prof, 3, &mut RngStream::new(0)),
            Err(Error::VoidShortage {
                dim: 0,
                empty: 2,
                m: 3
            })
        );
    }

    #[test]
    fn void_selection_is_uniform() {
        // 1-D, k = 8 grid, bins {0, 1, 2, 3} occupied (bin 3 twice): four empty bins, pick 3.
        let s = set1d(&[0.01, 0.13, 0.26, 0.38, 0.40]);
        let prof = regrid(&s, 3).unwrap();
        let empty: Vec<usize> = prof.empty_bins(0).collect();
        assert_eq!(empty, vec![4, 5, 6, 7]);
        let draws = 40_000;
        let mut freq = [0usize; 8];
        let mut subsets = alloc::collections::BTreeMap::new();
        let mut rng = RngStream::new(123);
        for _ in 0..draws {
            let v = select_voids(&prof, 3, &mut rng).unwrap();
            for &b in &v[0] {
                freq[b] += 1;
            }
            *subsets.entry(v[0].clone()).or_insert(0usize) += 1;
        }
        // each bin picked with probability 3/4
        for b in 4..8 {
            let p = freq[b] as f64 / draws as f64;
            let sd = (0.75 * 0.25 / draws as f64).sqrt();
            assert!((p - 0.75).abs() < 4.0 * sd, "bin {b}: {p}");
        }
        // chi-square over the 4 equally likely subsets, 3 dof; 16.27 is the 0.999 quantile
        assert_eq!(subsets.len(), 4);
        let e = draws as f64 / 4.0;
        let chi2: f64 = subsets.values().map(|&o| (o as f64 - e).powi(2) / e).sum();
        assert!(chi2 < 16.27, "chi2 {chi2}");
    }

    #[test]
    fn inner_lhs_lands_in_voids() {
        let voids = vec![vec![1, 4, 8], vec![0, 5, 9]];
        let s = inner_lhs(&voids, 3, 10, &mut RngStream::new(4)).unwrap();
        for j in 0..2 {
            let mut bins: Vec<usize> = s.column(j).map(|x| bin_of(x, 10)).collect();
            bins.sort_unstable();
            assert_eq!(bins, voids[j]);
        }
        let one = inner_lhs(&[vec![3], vec![7]], 1, 10, &mut RngStream::new(4)).unwrap();
        assert_eq!(bin_of(one.get(0, 0), 10), 3);
        assert_eq!(bin_of(one.get(0, 1), 10), 7);
    }

    #[test]
    fn inner_lhs_rejects_bad_voids() {
        let mut rng = RngStream::new(0);
        assert_eq!(
            inner_lhs(&[vec![2, 2]], 2, 10, &mut rng),
            Err(Error::DuplicateVoid { dim: 0, bin: 2 })
        );
        assert_eq!(
            inner_lhs(&[vec![2, 3], vec![1]], 2, 10, &mut rng),
            Err(Error::BadVoids { dim: 1 })
        );
        assert_eq!(
            inner_lhs(&[vec![2, 10]], 2, 10, &mut rng),
            Err(Error::BadVoids { dim: 0 })
        );
    }

    #[test]
    fn m_zero_is_a_noop() {
        let s = sample_lhs(2, 9, &mut RngStream::new(2)).unwrap();
        let r = expand(&s, &ExpansionConfig::new(0, 1).with_optimize(Optimize::CenteredDiscrepancy))
            .unwrap();
        assert_eq!(r.expanded, s);
        assert_eq!(r.measured_degree, 1.0);
        assert_eq!(r.metric_value, Some(centered_l2(&s)));
        assert_eq!(r.candidates_evaluated, 0);
    }

    #[test]
    fn config_validation() {
        let s = sample_lhs(2, 5, &mut RngStream::new(2)).unwrap();
        assert!(expand(&s, &ExpansionConfig::new(3, 0).with_candidates(0)).is_err());
        assert!(expand(&s, &ExpansionConfig::new(3, 0).with_tolerance(0.0)).is_err());
        assert!(expand(&s, &ExpansionConfig::new(3, 0).with_tolerance(f64::NAN)).is_err());
        assert!(expand(&s, &ExpansionConfig::new(MAX_EXPANSION + 1, 0)).is_err());
    }

    #[test]
    fn tolerance_stops_early() {
        let s = sample_lhs(2, 20, &mut RngStream::new(8)).unwrap();
        let cfg = ExpansionConfig::new(18, 5)
            .with_optimize(Optimize::CenteredDiscrepancy)
            .with_tolerance(10.0);
        let r = expand(&s, &cfg).unwrap();
        assert_eq!(r.candidates_evaluated, 1);

        let cfg = ExpansionConfig::new(18, 5)
            .with_optimize(Optimize::GeometricDiscrepancy)
            .with_tolerance(10.0);
        let r = expand(&s, &cfg).unwrap();
        assert_eq!(r.candidates_evaluated, DEFAULT_CANDIDATES);
    }

    #[test]
    fn optimized_is_best_of_its_pool() {
        let s = sample_lhs(3, 12, &mut RngStream::new(31)).unwrap();
        for target in [Optimize::CenteredDiscrepancy, Optimize::GeometricDiscrepancy] {
            let cfg = ExpansionConfig::new(7, 99).with_optimize(target).with_candidates(25);
            let r = expand(&s, &cfg).unwrap();
            let pool: Vec<f64> = (0..25)
                .map(|i| score(&draw_candidate(&s, 7, 99, i).unwrap(), target).unwrap().unwrap())
                .collect();
            let v = r.metric_value.unwrap();
            assert_eq!(score(&r.expanded, target).unwrap(), Some(v));
            for &c in &pool {
                assert!(!target.better(c, v));
            }
            // unoptimized draw is candidate 0, so it never beats the optimized one
            let plain = expand(&s, &ExpansionConfig::new(7, 99)).unwrap();
            assert_eq!(plain.expanded, draw_candidate(&s, 7, 99, 0).unwrap());
            assert!(!target.better(score(&plain.expanded, target).unwrap().unwrap(), v));
        }
    }

    #[test]
    fn selection_keeps_lowest_index_on_ties() {
        let mut sel = Selection::new(Optimize::CenteredDiscrepancy, None);
        for (i, v) in [0.3, 0.1, 0.1, 0.2].into_iter().enumerate() {
            assert!(!sel.offer(i, v));
        }
        assert_eq!(sel.best(), Some((1, 0.1)));
        let mut sel = Selection::new(Optimize::GeometricDiscrepancy, Some(0.5));
        assert!(!sel.offer(0, 0.2));
        assert!(sel.offer(1, 0.6));
        assert!(sel.offer(2, 0.9));
        assert_eq!((sel.best(), sel.evaluated()), (Some((1, 0.6)), 2));
    }

    #[test]
    fn unitary_single_step_matches_plain_expansion() {
        let s = sample_lhs(2, 6, &mut RngStream::new(1)).unwrap();
        let mut rng = RngStream::new(77).child(0);
        let u = expand_unitary(&s, 1, &mut rng).unwrap();
        let e = expand(&s, &ExpansionConfig::new(1, 77)).unwrap();
        assert_eq!(u.expanded, e.expanded);
        assert_eq!(u.candidates_evaluated, 1);
    }

    #[test]
    fn optimal_expansion_ranking() {
        let s = sample_lhs(2, 10, &mut RngStream::new(3)).unwrap();
        let all = optimal_expansion(&s, 4..=12, true).unwrap();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], (0, 1.0));
        assert_eq!(all[1], (10, 1.0));
        for w in all.windows(2) {
            assert!(w[0].1 > w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0));
        }
        for &(m, d) in &all {
            assert_eq!(d, predicted_degree(&s, m).unwrap());
        }
        assert_eq!(optimal_expansion(&s, 4..=12, false).unwrap(), vec![(0, 1.0)]);
        assert_eq!(optimal_expansion(&s, 0..=3, true).unwrap().len(), 4);
        #[allow(clippy::reversed_empty_ranges)]
        let bad = optimal_expansion(&s, 5..=4, true);
        assert_eq!(bad, Err(Error::EmptyRange { lo: 5, hi: 4 }));
    }

    #[test]
    fn optimal_matches_performed_expansions() {
        let s = sample_lhs(3, 15, &mut RngStream::new(12)).unwrap();
        let ranked = optimal_expansion(&s, 1..=40, true).unwrap();
        for &(m, d) in &ranked {
            let measured = expand(&s, &ExpansionConfig::new(m, m as u64)).unwrap().measured_degree;
            assert_eq!(measured, d, "m = {m}");
        }
    }

    fn arb_input() -> impl Strategy<Value = (SampleSet, usize, u64)> {
        (1usize..5, 1usize..40, 1usize..60, any::<u64>(), any::<bool>()).prop_flat_map(
            |(p, n, m, seed, lhs)| {
                proptest::collection::vec(0.0f64..1.0, n * p).prop_map(move |d| {
                    let s = if lhs {
                        sample_lhs(p, n, &mut RngStream::new(seed)).unwrap()
                    } else {
                        SampleSet::from_flat(n, p, d).unwrap()
                    };
                    (s, m, seed)
                })
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn expansion_invariants((s, m, seed) in arb_input(), mode in 0u8..3) {
            let target = [Optimize::None, Optimize::CenteredDiscrepancy, Optimize::GeometricDiscrepancy][mode as usize];
            let cfg = ExpansionConfig::new(m, seed).with_optimize(target).with_candidates(4);
            let before = regrid(&s, m).unwrap();
            for j in 0..s.p() {
                prop_assert!(before.empty(j) >= m);
            }
            let r = expand(&s, &cfg).unwrap();
            let n = s.n();
            prop_assert_eq!(r.expanded.n(), n + m);
            // originals untouched, bit for bit
            for (a, b) in r.expanded.as_flat()[..n * s.p()].iter().zip(s.as_flat()) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
            prop_assert_eq!(r.measured_degree, predicted_degree(&s, m).unwrap());
            prop_assert_eq!(r.measured_degree, degree(&r.expanded));
            // new rows: distinct bins per dimension, each previously empty
            let k = n + m;
            for j in 0..s.p() {
                let mut bins: Vec<usize> = (n..n + m).map(|i| bin_of(r.expanded.get(i, j), k)).collect();
                for &b in &bins {
                    prop_assert_eq!(before.counts(j)[b], 0);
                }
                bins.sort_unstable();
                bins.dedup();
                prop_assert_eq!(bins.len(), m);
            }
            // determinism
            prop_assert_eq!(expand(&s, &cfg).unwrap(), r);
        }

        #[test]
        fn perfect_multiples(p in 1usize..6, n in 1usize..50, k in 1usize..4, seed: u64) {
            let s = sample_lhs(p, n, &mut RngStream::new(seed)).unwrap();
            let r = expand(&s, &ExpansionConfig::new(k * n, seed ^ 1)).unwrap();
            prop_assert_eq!(r.measured_degree, 1.0);
        }
    }
}
