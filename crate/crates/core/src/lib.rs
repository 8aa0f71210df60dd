//! Deciding the `D_π` property for finite groups from their composition
//! factors, with a brute-force permutation-group engine to cross-check the
//! arithmetic criterion on small groups.

pub mod arith;
pub mod catalog;
pub mod composition;
pub mod criterion;
pub mod crosscheck;
pub mod permbrute;
pub mod tables;

pub use arith::{ArithError, PrimeSet};
pub use catalog::{CatalogError, GroupFacts, LieGroup, LieType, SimpleGroupId, Sporadic};
pub use criterion::{decide_dpi_simple, dpi23_shortcut, Condition, ConditionReport, Verdict};
pub use composition::{
    corollary_partition, decide_dpi_composite, wielandt_split, CompositeVerdict, CompositionSpec, Factor, HallSplit,
    SplitHypothesis, SplitVerdict,
};
