//! Latin hypercube sampling and the "LHS in LHS" expansion algorithm.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! - [`SampleSet`], a validated `N x P` design in the half-open unit cube,
//! - [`RngStream`], the seedable generator every random draw goes through,
//! - [`sample_lhs`] for classic Latin hypercube designs,
//! - the LHS degree and its occupancy bookkeeping ([`degree`], [`predicted_degree`]),
//! - uniformity metrics ([`centered_l2`], [`geometric`]),
//! - the expansion engine ([`expand`], [`expand_unitary`], [`optimal_expansion`]).
//!
//! File formats, threading and the command-line tool live in the `elhs` crate.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod degree;
mod discrepancy;
mod error;
mod expansion;
mod lhs;
mod rng;
mod sample_set;

pub use degree::{
    degree, fitted_degree, fitted_degree_general, occupancy, predicted_degree, OccupancyProfile,
    FIT_A, FIT_B, FIT_C,
};
pub use discrepancy::{centered_l2, centered_l2_squared, geometric};
pub use error::{Error, Result};
pub use expansion::{
    draw_candidate, expand, expand_unitary, inner_lhs, optimal_expansion, regrid, score,
    select_voids, ExpansionConfig, ExpansionResult, Optimize, Selection, DEFAULT_CANDIDATES,
    MAX_EXPANSION,
};
pub use lhs::sample_lhs;
pub use rng::{derive_seed, RngStream};
pub use sample_set::{bin_index, validate, SampleSet};
