//! Std companion to `elhs-core`: design files, multi-threaded drivers and
//! the pieces behind the `elhs` command-line tool.

pub mod design;
pub mod format;
pub mod parallel;
pub mod report;

pub use design::{read_design, DesignError, DesignFormat};
pub use parallel::{curve, expand_parallel, threads_from_env, CurveRow};
pub use report::ExpansionReport;
