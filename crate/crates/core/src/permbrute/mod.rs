//! Brute-force ground truth: small groups as permutation groups, their
//! subgroup lattices, and `E_π`/`D_π` decided by definition.

mod field;
mod group;
mod hall;
mod lattice;
mod names;
mod perm;
mod realize;
mod table1;

use thiserror::Error;

use crate::arith::PrimeSet;

pub use group::{PermGroup, Quotient};
pub use hall::{
    check_final_corollary, hall_class_indices, hall_splits, is_dpi_brute, maximal_pi_class_indices,
    maximal_pi_subgroups, verify_hall_inheritance, verify_hall_split, ClassSummary, HallReport, HallSplitWitness,
    Structural,
};
pub use lattice::{all_subgroups_up_to_conjugacy, ClassDump, Lattice, LatticeDump, SubgroupClass};
pub use perm::Permutation;
pub use realize::{realize, realize_with_table, Builtin, RealizationSpec};
pub use table1::{reproduce_table1, sym6_has_no_order_144_subgroup, Table1Reproduction};

/// Largest group order materialised.
pub const ORDER_BOUND: usize = 10080;
/// Default largest order for subgroup-lattice operations.
pub const LATTICE_BOUND: usize = 1000;
/// Largest degree of a realization.
pub const MAX_DEGREE: usize = 32;
/// Largest degree of a coset action.
pub const MAX_DEGREE_QUOTIENT: usize = u16::MAX as usize;

#[derive(Debug, Error)]
pub enum BruteError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u16>),
    #[error("permutation of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} exceeds the bound {MAX_DEGREE}")]
    DegreeBound(usize),
    #[error("group order exceeds the bound {bound}")]
    OrderBound { bound: usize },
    #[error("order {order} exceeds the subgroup-lattice bound {bound}")]
    LatticeBound { order: usize, bound: usize },
    #[error("no built-in realization for {0}")]
    Unsupported(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("no {0}-Hall subgroup")]
    NoHall(PrimeSet),
    #[error("prime sets overlap in {0}")]
    Overlap(PrimeSet),
    #[error("{0}")]
    Parse(String),
}

fn is_prime_power(n: u64) -> bool {
    n > 1 && crate::arith::prime_power(n).is_some()
}
