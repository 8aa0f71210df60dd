use serde::{Deserialize, Serialize};

use crate::arith::{self, PrimeSet};

use super::group::PermGroup;
use super::lattice::Lattice;
use super::perm::Permutation;
use super::realize::realize_with_table;
use super::{BruteError, ORDER_BOUND};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Reproduction {
    pub n: u32,
    pub structure: String,
    pub order: u64,
    /// `{2,3}`-part of `n!`.
    pub hall_order: u64,
    pub index: u64,
    pub is_pi_group: bool,
    pub passed: bool,
}

/// Builds the `{2,3}`-Hall subgroup of `Sym_n` for `n = 7` (stabiliser of the
/// partition `{0,1,2} | {3,…,6}`) or `n = 8` (wreath product on the blocks
/// `{0,…,3}`, `{4,…,7}`) and checks its order and index.
pub fn reproduce_table1(n: u32) -> Result<Table1Reproduction, BruteError> {
    let d = n as usize;
    let c = |cycles: &[&[u16]]| Permutation::from_cycles(d, cycles).expect("points in range");
    let (structure, gens) = match n {
        7 => ("Sym_3×Sym_4", vec![c(&[&[0, 1]]), c(&[&[0, 1, 2]]), c(&[&[3, 4]]), c(&[&[3, 4, 5, 6]])]),
        8 => (
            "Sym_4 wr Sym_2",
            vec![c(&[&[0, 1]]), c(&[&[0, 1, 2, 3]]), c(&[&[0, 4], &[1, 5], &[2, 6], &[3, 7]])],
        ),
        _ => return Err(BruteError::Unsupported(format!("Table 1 reproduction for n = {n}"))),
    };
    let h = PermGroup::generate(d, gens, ORDER_BOUND)?;
    let pi = PrimeSet::from_list(&[2, 3]).expect("primes");
    let factorial = arith::factorial(n as u64);
    let hall_order: u64 = pi.part_of(&factorial).try_into().expect("fits in u64");
    let total: u64 = factorial.try_into().expect("fits in u64");
    let order = h.order() as u64;
    let index = total / order;
    let is_pi_group = pi.is_pi_number(order);
    let passed = order == hall_order && is_pi_group && total.is_multiple_of(order) && pi.part_of_u64(index) == 1;
    Ok(Table1Reproduction { n, structure: structure.to_string(), order, hall_order, index, is_pi_group, passed })
}

/// Whether `Sym_6` has no subgroup of order 144, by its full subgroup lattice.
pub fn sym6_has_no_order_144_subgroup() -> Result<bool, BruteError> {
    let g = realize_with_table(&"Sym:6".parse()?, super::LATTICE_BOUND)?;
    let l = Lattice::build(&g)?;
    Ok(l.classes().iter().all(|c| c.order != 144))
}
