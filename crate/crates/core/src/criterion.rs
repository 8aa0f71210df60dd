//! The arithmetic `D_π` criterion for finite simple groups.
//!
//! A simple group `G` satisfies `D_π` exactly when `(G, π)` satisfies one of
//! Conditions I–VII below. Every condition depends on `π` only through
//! `π ∩ π(G)`, so all evaluation happens on that effective set.
//!
//! Labels are taken literally: `Alt:5` is decided as an alternating group
//! even though it is isomorphic to `A_1(4)`, and `B_n(q)`, `C_n(q)` are kept
//! apart for even `q`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::{self, PrimeSet};
use crate::catalog::{self, CatalogError, GroupFacts, LieGroup, LieType, SimpleGroupId, Sporadic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Condition {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl Condition {
    pub const ALL: [Condition; 7] =
        [Condition::I, Condition::II, Condition::III, Condition::IV, Condition::V, Condition::VI, Condition::VII];
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::I => "I",
            Condition::II => "II",
            Condition::III => "III",
            Condition::IV => "IV",
            Condition::V => "V",
            Condition::VI => "VI",
            Condition::VII => "VII",
        };
        f.write_str(s)
    }
}

/// Value of a symbol evaluated while checking a condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Binding {
    Int(i64),
    Primes(PrimeSet),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub holds: bool,
    pub subcase: Option<u8>,
    pub bindings: BTreeMap<String, Binding>,
    /// Why the condition failed, when it did.
    pub reason: Option<String>,
}

impl ConditionReport {
    fn new(condition: Condition) -> Self {
        ConditionReport { condition, holds: false, subcase: None, bindings: BTreeMap::new(), reason: None }
    }

    fn bind_int(&mut self, name: &str, v: u64) {
        self.bindings.insert(name.to_string(), Binding::Int(v as i64));
    }

    fn bind_sign(&mut self, name: &str, v: i8) {
        self.bindings.insert(name.to_string(), Binding::Int(v as i64));
    }

    fn bind_primes(&mut self, name: &str, v: &PrimeSet) {
        self.bindings.insert(name.to_string(), Binding::Primes(v.clone()));
    }

    fn fail(mut self, reason: impl Into<String>) -> Self {
        self.holds = false;
        self.reason = Some(reason.into());
        self
    }

    fn hold(mut self, subcase: Option<u8>) -> Self {
        self.holds = true;
        self.subcase = subcase;
        self.reason = None;
        self
    }

    /// `"Condition II(1)"`, `"Condition I"`.
    pub fn label(&self) -> String {
        match self.subcase {
            Some(k) => format!("Condition {}({k})", self.condition),
            None => format!("Condition {}", self.condition),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub group: SimpleGroupId,
    pub pi_effective: PrimeSet,
    pub dpi: bool,
    /// First holding condition in the order I..VII; `None` when no condition holds.
    pub witness: Option<ConditionReport>,
    pub reports: Vec<ConditionReport>,
}

impl Verdict {
    pub fn witness_label(&self) -> String {
        self.witness.as_ref().map(ConditionReport::label).unwrap_or_else(|| "no condition holds".to_string())
    }
}

/// A validated group together with `π ∩ π(G)`.
struct Instance<'a> {
    id: &'a SimpleGroupId,
    facts: GroupFacts,
    eff: PrimeSet,
}

impl<'a> Instance<'a> {
    fn new(id: &'a SimpleGroupId, pi: &PrimeSet) -> Result<Self, CatalogError> {
        let facts = catalog::facts(id)?;
        let eff = pi.intersection(&facts.spectrum);
        Ok(Instance { id, facts, eff })
    }

    fn lie(&self) -> Option<&LieGroup> {
        self.id.as_lie()
    }
}

const CONDITION_II: [(u8, Sporadic, &[[u64; 2]]); 17] = [
    (1, Sporadic::M11, &[[5, 11]]),
    (2, Sporadic::M12, &[[5, 11]]),
    (3, Sporadic::M22, &[[5, 11]]),
    (4, Sporadic::M23, &[[5, 11], [11, 23]]),
    (5, Sporadic::M24, &[[5, 11], [11, 23]]),
    (6, Sporadic::J1, &[[3, 5], [3, 7], [3, 19], [5, 11]]),
    (7, Sporadic::J4, &[[5, 7], [5, 11], [5, 31], [7, 29], [7, 43]]),
    (8, Sporadic::ON, &[[5, 11], [5, 31]]),
    (9, Sporadic::Ly, &[[11, 67]]),
    (10, Sporadic::Ru, &[[7, 29]]),
    (11, Sporadic::Co1, &[[11, 23]]),
    (12, Sporadic::Co2, &[[11, 23]]),
    (13, Sporadic::Co3, &[[11, 23]]),
    (14, Sporadic::Fi23, &[[11, 23]]),
    (15, Sporadic::Fi24Prime, &[[11, 23]]),
    (16, Sporadic::B, &[[11, 23], [23, 47]]),
    (17, Sporadic::M, &[[23, 47], [29, 59]]),
];

/// Every `(item, G, π ∩ π(G))` pair listed under Condition II.
pub fn condition_ii_pairs() -> Vec<(u8, Sporadic, PrimeSet)> {
    CONDITION_II
        .iter()
        .flat_map(|&(item, g, sets)| sets.iter().map(move |s| (item, g, s.iter().copied().collect())))
        .collect()
}

fn cond_i(inst: &Instance) -> ConditionReport {
    let r = ConditionReport::new(Condition::I);
    if inst.facts.spectrum.is_subset(&inst.eff) || inst.eff.len() <= 1 {
        r.hold(None)
    } else {
        r.fail("π(G) ⊄ π and |π ∩ π(G)| > 1")
    }
}

fn cond_ii(inst: &Instance) -> ConditionReport {
    let r = ConditionReport::new(Condition::II);
    let Some(name) = inst.id.as_sporadic() else {
        return r.fail("not a sporadic group");
    };
    condition_ii_pairs()
        .into_iter()
        .find(|(_, g, pi)| *g == name && *pi == inst.eff)
        .map(|(item, _, _)| r.clone().hold(Some(item)))
        .unwrap_or_else(|| r.fail("pair not listed"))
}

fn prime_divisors_of(n: u64) -> PrimeSet {
    arith::prime_divisors(n).expect("argument is positive")
}

fn e(q: u64, r: u64) -> u64 {
    arith::mult_order(q, r).expect("odd prime coprime to q")
}

fn cond_iii(inst: &Instance) -> ConditionReport {
    let mut r = ConditionReport::new(Condition::III);
    let Some(g) = inst.lie() else {
        return r.fail("not of Lie type");
    };
    let p = g.characteristic();
    if !inst.eff.contains(p) {
        return r.fail("characteristic p ∉ π");
    }
    let tau = inst.eff.without(p);
    r.bind_primes("tau", &tau);
    if !tau.is_subset(&prime_divisors_of(g.q - 1)) {
        return r.fail("τ ⊄ π(q-1)");
    }
    // Every prime dividing |W| divides |G|, so checking π ∩ π(G) suffices.
    let weyl = catalog::ambient_weyl_order(g.ty, g.n);
    if let Some(bad) = inst.eff.iter().find(|&s| (&weyl % s) == BigUint::from(0u32)) {
        return r.fail(format!("{bad} divides the Weyl group order {weyl}"));
    }
    r.hold(None)
}

/// Shared gate of Conditions IV and V: Lie type other than Suzuki/Ree,
/// `2, p ∉ π`, and `r = min(π ∩ π(G))` exists.
fn odd_gate<'g>(inst: &'g Instance, r: &mut ConditionReport) -> Result<(&'g LieGroup, u64, PrimeSet), String> {
    let g = inst.lie().ok_or("not of Lie type")?;
    if g.ty.is_suzuki_or_ree() {
        return Err(format!("{} is excluded", g.ty));
    }
    if inst.eff.contains(2) {
        return Err("2 ∈ π".to_string());
    }
    if inst.eff.contains(g.characteristic()) {
        return Err("p ∈ π".to_string());
    }
    let rmin = inst.eff.smallest().ok_or("π ∩ π(G) is empty")?;
    let tau = inst.eff.without(rmin);
    r.bind_int("r", rmin);
    r.bind_primes("tau", &tau);
    Ok((g, rmin, tau))
}

fn cond_iv(inst: &Instance) -> ConditionReport {
    let mut rep = ConditionReport::new(Condition::IV);
    let (g, r, tau) = match odd_gate(inst, &mut rep) {
        Ok(v) => v,
        Err(why) => return rep.fail(why),
    };
    let q = g.q;
    let n = g.n as u64;
    let a = e(q, r);
    rep.bind_int("a", a);
    let orders: Vec<u64> = tau.iter().map(|s| e(q, s)).collect();
    let mut other: Vec<u64> = orders.iter().copied().filter(|&x| x != a).collect();
    other.sort_unstable();
    other.dedup();
    let b = match other.as_slice() {
        [] => return rep.fail("no t ∈ τ with e(q,t) ≠ a"),
        [b] => *b,
        _ => return rep.fail("e(q,s) takes more than one value other than a on τ"),
    };
    rep.bind_int("b", b);
    let all_b = orders.iter().all(|&x| x == b);
    let r_part_ok = arith::r_part_of_fermat_quotient_is_r(q, r);
    let floors_equal = n / (r - 1) == n / r;
    let floors_step = n / (r - 1) == n / r + 1;
    let n_minus_one = n % r == r - 1;

    let item = match g.ty {
        LieType::A => {
            let common = a == r - 1 && b == r && r_part_ok && all_b;
            if common && floors_equal {
                Some(1)
            } else if common && floors_step && n_minus_one {
                Some(2)
            } else {
                None
            }
        }
        LieType::TwistedA => {
            let shape_1mod4 = r % 4 == 1 && a == r - 1;
            let shape_3mod4 = r % 4 == 3 && a == (r - 1) / 2;
            let common = b == 2 * r && r_part_ok && all_b;
            if common && shape_1mod4 && floors_equal {
                Some(3)
            } else if common && shape_3mod4 && floors_equal {
                Some(4)
            } else if common && shape_1mod4 && floors_step && n_minus_one {
                Some(5)
            } else if common && shape_3mod4 && floors_step && n_minus_one {
                Some(6)
            } else {
                None
            }
        }
        // every s ∈ τ has e(q,s) ∈ {a, b} by construction of b
        LieType::TwistedD if a % 2 == 1 && n == b && b == 2 * a => Some(7),
        LieType::TwistedD if b % 2 == 1 && n == a && a == 2 * b => Some(8),
        _ => None,
    };
    match item {
        Some(k) => rep.hold(Some(k)),
        None => rep.fail(format!("no item matches {} with n={n}", g.ty)),
    }
}

fn cond_v(inst: &Instance) -> ConditionReport {
    let mut rep = ConditionReport::new(Condition::V);
    let (g, r, tau) = match odd_gate(inst, &mut rep) {
        Ok(v) => v,
        Err(why) => return rep.fail(why),
    };
    let q = g.q;
    let n = g.n as u64;
    let c = e(q, r);
    rep.bind_int("c", c);
    if let Some(t) = tau.iter().find(|&t| e(q, t) != c) {
        return rep.fail(format!("e(q,{t}) ≠ c"));
    }
    let every = |pred: &dyn Fn(u64) -> bool| tau.iter().all(pred);
    let absent = |list: &[u64]| list.iter().all(|&x| !tau.contains(x));
    let c_odd = c % 2 == 1;
    let candidates: &[(u8, bool)] = &[
        (1, g.ty == LieType::A && every(&|s| n < c * s)),
        (2, g.ty == LieType::TwistedA && c.is_multiple_of(4) && every(&|s| n < c * s)),
        (3, g.ty == LieType::TwistedA && c % 4 == 2 && every(&|s| 2 * n < c * s)),
        (4, g.ty == LieType::TwistedA && c_odd && every(&|s| n < 2 * c * s)),
        (
            5,
            matches!(g.ty, LieType::B | LieType::C | LieType::TwistedD) && c_odd && every(&|s| 2 * n < c * s),
        ),
        (6, matches!(g.ty, LieType::B | LieType::C | LieType::D) && !c_odd && every(&|s| n < c * s)),
        (7, g.ty == LieType::D && !c_odd && every(&|s| 2 * n <= c * s)),
        (8, g.ty == LieType::TwistedD && c_odd && every(&|s| n <= c * s)),
        (9, g.ty == LieType::TrialityD4),
        (10, g.ty == LieType::E6 && (!(r == 3 && c == 1) || absent(&[5, 13]))),
        (11, g.ty == LieType::TwistedE6 && (!(r == 3 && c == 2) || absent(&[5, 13]))),
        (
            12,
            g.ty == LieType::E7
                && (!(r == 3 && c <= 2) || absent(&[5, 7, 13]))
                && (!(r == 5 && c <= 2) || absent(&[7])),
        ),
        (
            13,
            g.ty == LieType::E8
                && (!(r == 3 && c <= 2) || absent(&[5, 7, 13]))
                && (!(r == 5 && c <= 2) || absent(&[7, 31])),
        ),
        (14, g.ty == LieType::G2),
        (15, g.ty == LieType::F4 && (!(r == 3 && c == 1) || absent(&[13]))),
    ];
    match candidates.iter().find(|(_, ok)| *ok) {
        Some(&(k, _)) => rep.hold(Some(k)),
        None => rep.fail(format!("no item matches {} with n={n}, c={c}", g.ty)),
    }
}

/// The prime sets of Condition VI for a Suzuki or Ree group, one per
/// alternative; `π ∩ π(G)` must lie inside a single one of them.
pub fn suzuki_ree_sets(g: &LieGroup) -> Option<Vec<PrimeSet>> {
    let (_, f) = g.field();
    if !g.ty.is_suzuki_or_ree() || f % 2 == 0 {
        return None;
    }
    let m = (f - 1) / 2;
    let q = BigUint::from(g.q);
    let pw = |base: u64, k: u32| BigUint::from(base).pow(k);
    let divs = |n: BigUint| arith::prime_divisors_big(&n).expect("every listed value is positive");
    let sets = match g.ty {
        LieType::Suzuki => {
            let s = pw(2, m + 1);
            vec![divs(&q - 1u32), divs(&q + &s + 1u32), divs(&q + 1u32 - &s)]
        }
        LieType::ReeG2 => {
            let s = pw(3, m + 1);
            vec![
                divs(&q - 1u32).without(2),
                divs(&q + &s + 1u32).without(2),
                divs(&q + 1u32 - &s).without(2),
            ]
        }
        LieType::ReeF4 => {
            let q2 = &q * &q;
            let s1 = pw(2, m + 1);
            let s3 = pw(2, 3 * m + 2);
            // The last pair are the torus orders q² ± √2q^{3/2} + q ± √2q^{1/2} + 1,
            // the two factors of q⁴ - q² + 1.
            vec![
                divs(&q2 + 1u32),
                divs(&q2 - 1u32),
                divs(&q + &s1 + 1u32),
                divs(&q + 1u32 - &s1),
                divs(&q2 + &s3 - &s1 - 1u32),
                divs(&q2 + &s1 - &s3 - 1u32),
                divs(&q2 + &s3 + &q + &s1 + 1u32),
                divs(&q2 + &q + 1u32 - &s3 - &s1),
            ]
        }
        _ => unreachable!(),
    };
    Some(sets)
}

fn cond_vi(inst: &Instance) -> ConditionReport {
    let mut rep = ConditionReport::new(Condition::VI);
    let Some(g) = inst.lie().filter(|g| g.ty.is_suzuki_or_ree()) else {
        return rep.fail("not a Suzuki or Ree group");
    };
    let (_, f) = g.field();
    rep.bind_int("m", (f as u64 - 1) / 2);
    let sets = suzuki_ree_sets(g).expect("validated Suzuki/Ree parameters");
    if sets.iter().any(|s| inst.eff.is_subset(s)) {
        let item = match g.ty {
            LieType::Suzuki => 1,
            LieType::ReeG2 => 2,
            _ => 3,
        };
        rep.hold(Some(item))
    } else {
        rep.fail("π ∩ π(G) lies in none of the listed sets")
    }
}

fn cond_vii(inst: &Instance) -> ConditionReport {
    let mut rep = ConditionReport::new(Condition::VII);
    let Some(g) = inst.lie() else {
        return rep.fail("not of Lie type");
    };
    if !inst.eff.contains(2) {
        return rep.fail("2 ∉ π");
    }
    if inst.eff.contains(3) {
        return rep.fail("3 ∈ π");
    }
    if inst.eff.contains(g.characteristic()) {
        return rep.fail("p ∈ π");
    }
    // p ≠ 2 here, so q is odd.
    let q = g.q;
    let eps = arith::eps_mod4(q).expect("odd q");
    rep.bind_sign("epsilon", eps);
    let tau = inst.eff.without(2);
    let phi = PrimeSet::new(tau.iter().filter(|&t| arith::is_fermat_prime(t))).expect("subset of primes");
    rep.bind_primes("tau", &tau);
    rep.bind_primes("phi", &phi);
    let q_minus_eps = if eps == 1 { BigUint::from(q) - 1u32 } else { BigUint::from(q) + 1u32 };
    let allowed = arith::prime_divisors_big(&q_minus_eps).expect("positive");
    if !tau.is_subset(&allowed) {
        return rep.fail("τ ⊄ π(q-ε)");
    }
    let n = g.n as u64;
    let all_tau = |pred: &dyn Fn(u64) -> bool| tau.iter().all(pred);
    let all_phi = |pred: &dyn Fn(u64) -> bool| phi.iter().all(pred);
    let absent = |list: &[u64]| list.iter().all(|&x| !tau.contains(x));
    let item = match g.ty {
        LieType::A | LieType::TwistedA if all_tau(&|s| s > n) && all_phi(&|t| t > n + 1) => Some(1),
        LieType::B if all_tau(&|s| s > 2 * n + 1) => Some(2),
        LieType::C if all_tau(&|s| s > n) && all_phi(&|t| t > 2 * n + 1) => Some(3),
        LieType::D | LieType::TwistedD if all_tau(&|s| s > 2 * n) => Some(4),
        LieType::G2 | LieType::ReeG2 if absent(&[7]) => Some(5),
        LieType::F4 if absent(&[5, 7]) => Some(6),
        LieType::E6 | LieType::TwistedE6 if absent(&[5, 7]) => Some(7),
        LieType::E7 if absent(&[5, 7, 11]) => Some(8),
        LieType::E8 if absent(&[5, 7, 11, 13]) => Some(9),
        LieType::TrialityD4 if absent(&[7]) => Some(10),
        _ => None,
    };
    match item {
        Some(k) => rep.hold(Some(k)),
        None => rep.fail(format!("thresholds fail for {} with n={n}", g.ty)),
    }
}

fn evaluate(inst: &Instance, c: Condition) -> ConditionReport {
    match c {
        Condition::I => cond_i(inst),
        Condition::II => cond_ii(inst),
        Condition::III => cond_iii(inst),
        Condition::IV => cond_iv(inst),
        Condition::V => cond_v(inst),
        Condition::VI => cond_vi(inst),
        Condition::VII => cond_vii(inst),
    }
}

/// Evaluates a single condition for `(id, π)`.
pub fn check_condition(id: &SimpleGroupId, pi: &PrimeSet, c: Condition) -> Result<ConditionReport, CatalogError> {
    Ok(evaluate(&Instance::new(id, pi)?, c))
}

pub fn condition_i(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::I)
}

pub fn condition_ii(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::II)
}

pub fn condition_iii(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::III)
}

pub fn condition_iv(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::IV)
}

pub fn condition_v(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::V)
}

pub fn condition_vi(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::VI)
}

pub fn condition_vii(id: &SimpleGroupId, pi: &PrimeSet) -> Result<ConditionReport, CatalogError> {
    check_condition(id, pi, Condition::VII)
}

/// `G ∈ D_π` for a simple group `G`.
pub fn decide_dpi_simple(id: &SimpleGroupId, pi: &PrimeSet) -> Result<Verdict, CatalogError> {
    let inst = Instance::new(id, pi)?;
    let reports: Vec<ConditionReport> = Condition::ALL.iter().map(|&c| evaluate(&inst, c)).collect();
    let witness = reports.iter().find(|r| r.holds).cloned();
    Ok(Verdict { group: *id, pi_effective: inst.eff, dpi: witness.is_some(), witness, reports })
}

/// When `2, 3 ∈ π ∩ π(G)`, `G ∈ D_π` iff `π(G) ⊆ π`. `None` when `2` or `3`
/// is missing.
pub fn dpi23_shortcut(id: &SimpleGroupId, pi: &PrimeSet) -> Result<Option<bool>, CatalogError> {
    let facts = catalog::facts(id)?;
    let eff = pi.intersection(&facts.spectrum);
    Ok((eff.contains(2) && eff.contains(3)).then(|| facts.spectrum.is_subset(pi)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> SimpleGroupId {
        s.parse().unwrap()
    }

    fn ps(list: &[u64]) -> PrimeSet {
        list.iter().copied().collect()
    }

    fn cond(s: &str, pi: &[u64], c: Condition) -> ConditionReport {
        check_condition(&id(s), &ps(pi), c).unwrap()
    }

    #[test]
    fn condition_i_examples() {
        assert!(cond("Alt:5", &[2, 3, 5, 7], Condition::I).holds);
        assert!(cond("Alt:5", &[5, 7], Condition::I).holds);
        assert!(!cond("Alt:5", &[2, 3], Condition::I).holds);
        assert!(cond("Alt:5", &[], Condition::I).holds);
    }

    #[test]
    fn condition_ii_examples() {
        let r = cond("Spor:J1", &[3, 19], Condition::II);
        assert!(r.holds);
        assert_eq!(r.subcase, Some(6));
        let r = cond("Spor:M", &[29, 59], Condition::II);
        assert_eq!((r.holds, r.subcase), (true, Some(17)));
        assert!(!cond("Spor:M11", &[2, 3], Condition::II).holds);
        assert!(!cond("Alt:7", &[5, 7], Condition::II).holds);
        // only the intersection with π(G) matters
        let r = cond("Spor:M11", &[5, 11, 13], Condition::II);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
        // aliases resolve to the same group
        assert!(cond("Spor:M(23)", &[11, 23], Condition::II).holds);
        assert_eq!(cond("Spor:M(24)'", &[11, 23], Condition::II).subcase, Some(15));
    }

    #[test]
    fn condition_ii_pair_count() {
        // Items (1)-(17) list 29 pairs between them.
        assert_eq!(condition_ii_pairs().len(), 29);
    }

    #[test]
    fn condition_iii_examples() {
        // τ = {7} ⊆ π(7) but 2 divides |W(A1)| = 2.
        let r = cond("Lie:A:2:8", &[2, 7], Condition::III);
        assert!(!r.holds);
        assert_eq!(r.bindings["tau"], Binding::Primes(ps(&[7])));
        assert!(!cond("Lie:A:2:4", &[2, 3], Condition::III).holds);
        // PSL(2,7): τ = {3} ⊆ π(6), |W(A1)| = 2.
        assert!(cond("Lie:A:2:7", &[3, 7], Condition::III).holds);
        assert!(!cond("Lie:A:2:7", &[3], Condition::III).holds);
    }

    #[test]
    fn condition_iii_e8_constructed_instance() {
        // |W(E8)| = 2^14·3^5·5^2·7; pick p > 7 and τ of primes > 7 dividing q - 1.
        let weyl = catalog::weyl_order(LieType::E8, 8).unwrap();
        let mut found = false;
        for q in (11..200u64).filter(|&q| arith::is_prime(q)) {
            let big: Vec<u64> = arith::prime_divisors(q - 1).unwrap().iter().filter(|&s| s > 7).collect();
            if big.is_empty() {
                continue;
            }
            let g = SimpleGroupId::lie(LieType::E8, 8, q);
            let spectrum = catalog::facts(&g).unwrap().spectrum;
            let mut pi = vec![q];
            pi.extend(&big);
            let pi = ps(&pi);
            assert!(pi.is_subset(&spectrum));
            // oracle: direct divisor check against |W(E8)|
            let coprime = pi.iter().all(|s| &weyl % s != BigUint::from(0u32));
            assert!(coprime);
            let r = check_condition(&g, &pi, Condition::III).unwrap();
            assert!(r.holds, "E8({q}) with {pi}");
            found = true;
            break;
        }
        assert!(found);
        // the same prime set with 7 added fails: 7 divides |W(E8)|
        let g = SimpleGroupId::lie(LieType::E8, 8, 23);
        assert!(!check_condition(&g, &ps(&[7, 11, 23]), Condition::III).unwrap().holds);
    }

    #[test]
    fn condition_iv_gates() {
        let r = cond("Lie:2D:6:4", &[2, 7, 13], Condition::IV);
        assert!(!r.holds);
        let r = cond("Lie:2D:6:4", &[7], Condition::IV);
        assert!(!r.holds);
        assert!(!cond("Lie:2B2:8", &[5, 13], Condition::IV).holds);
    }

    /// Searches (q, r, t) satisfying item (7) of Condition IV with arith alone:
    /// `a = e(q,r)` odd, `b = e(q,t) = 2a`, `r < t`, `r, t ∤ 2q`, and `n = 2a`.
    #[test]
    fn condition_iv_item7_by_search() {
        let mut found = None;
        'search: for q in (2..40u64).filter(|&q| arith::prime_power(q).is_some()) {
            for r in (3..200u64).filter(|&r| arith::is_prime(r) && q % r != 0) {
                let a = arith::mult_order(q, r).unwrap();
                if a.is_multiple_of(2) || a < 2 {
                    continue;
                }
                for t in (r + 1..400).filter(|&t| arith::is_prime(t) && q % t != 0) {
                    if arith::mult_order(q, t).unwrap() == 2 * a {
                        found = Some((q, r, t, 2 * a));
                        break 'search;
                    }
                }
            }
        }
        let (q, r, t, n) = found.expect("search finds an instance");
        let g = SimpleGroupId::lie(LieType::TwistedD, n as u32, q);
        let spectrum = catalog::facts(&g).unwrap().spectrum;
        let pi = ps(&[r, t]);
        assert!(pi.is_subset(&spectrum));
        let rep = check_condition(&g, &pi, Condition::IV).unwrap();
        assert!(rep.holds, "2D{n}({q}) with {pi}: {rep:?}");
        assert_eq!(rep.subcase, Some(7));
        assert_eq!(rep.bindings["a"], Binding::Int((n / 2) as i64));
        assert_eq!(rep.bindings["b"], Binding::Int(n as i64));
    }

    #[test]
    fn condition_iv_item8_and_type_a() {
        // 2D6(3): e(3,7) = 6, e(3,13) = 3, so a = 6 = 2b with b odd.
        let r = cond("Lie:2D:6:3", &[7, 13], Condition::IV);
        assert_eq!((r.holds, r.subcase), (true, Some(8)));
        // A_{n-1}(2) with r = 3, t = 7: a = 2 = r-1, b = 3 = r, (2^2-1)_3 = 3.
        // n = 4: [4/2] = 2, [4/3] = 1, 4 ≢ -1 (mod 3) -> fails; n = 5: 2 = 1 + 1, 5 ≡ -1 -> item 2.
        assert!(!cond("Lie:A:4:2", &[3, 7], Condition::IV).holds);
        let r = cond("Lie:A:5:2", &[3, 7], Condition::IV);
        assert_eq!((r.holds, r.subcase), (true, Some(2)));
        // n = 3: [3/2] = 1 = [3/3] -> item 1.
        let r = cond("Lie:A:3:2", &[3, 7], Condition::IV);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
    }

    #[test]
    fn condition_v_examples() {
        // 3D4(q) with both primes of the same order: search the spectrum.
        let mut found = false;
        for q in [2u64, 3, 4, 5, 7] {
            let g = SimpleGroupId::lie(LieType::TrialityD4, 4, q);
            let spectrum = catalog::facts(&g).unwrap().spectrum;
            let p = g.as_lie().unwrap().characteristic();
            let odd: Vec<u64> = spectrum.iter().filter(|&s| s != 2 && s != p).collect();
            for (i, &r) in odd.iter().enumerate() {
                for &s in &odd[i + 1..] {
                    if arith::mult_order(q, r).unwrap() == arith::mult_order(q, s).unwrap() {
                        let rep = check_condition(&g, &ps(&[r, s]), Condition::V).unwrap();
                        assert_eq!((rep.holds, rep.subcase), (true, Some(9)));
                        found = true;
                    }
                }
            }
        }
        assert!(found);
        let g = id("Lie:G2:4");
        let rep = check_condition(&g, &ps(&[7]), Condition::V).unwrap();
        assert_eq!((rep.holds, rep.subcase), (true, Some(14)));
    }

    #[test]
    fn condition_v_type_a_inequality() {
        // q = 16 ≡ 1 (mod 15), so e(16,3) = e(16,5) = 1 = c; n = 5 ≥ c·5.
        let r = cond("Lie:A:5:16", &[3, 5], Condition::V);
        assert!(!r.holds);
        assert_eq!(r.bindings["c"], Binding::Int(1));
        // n = 4 < 5 holds item 1.
        let r = cond("Lie:A:4:16", &[3, 5], Condition::V);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
    }

    #[test]
    fn condition_v_exceptional_exclusions() {
        // 1171 ≡ 1 (mod 3·5·13), so c = 1 for each of 3, 5, 13.
        assert!(arith::is_prime(1171));
        let r = cond("Lie:E6:1171", &[3, 5], Condition::V);
        assert!(!r.holds);
        let r = cond("Lie:E6:1171", &[5, 13], Condition::V);
        assert_eq!((r.holds, r.subcase), (true, Some(10)));
    }

    #[test]
    fn condition_vi_examples() {
        let r = cond("Lie:2B2:8", &[7], Condition::VI);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
        // 8 + 4 + 1 = 13 and 8 - 4 + 1 = 5 are separate sets.
        assert!(!cond("Lie:2B2:8", &[5, 13], Condition::VI).holds);
        assert!(cond("Lie:2B2:8", &[13], Condition::VI).holds);
        let r = cond("Lie:2G2:27", &[13], Condition::VI);
        assert_eq!((r.holds, r.subcase), (true, Some(2)));
        // 27 + 9 + 1 = 37 and 27 - 9 + 1 = 19; 7 divides only q + 1 = 28.
        assert!(!cond("Lie:2G2:27", &[7, 37], Condition::VI).holds);
        assert!(!cond("Lie:2G2:27", &[13, 37], Condition::VI).holds);
        // 243 - 27 + 1 = 217 = 7·31
        assert!(cond("Lie:2G2:243", &[7, 31], Condition::VI).holds);
        assert!(!cond("Lie:A:2:8", &[7], Condition::VI).holds);
    }

    #[test]
    fn suzuki_ree_sets_divide_group_order() {
        for spec in ["Lie:2B2:8", "Lie:2B2:32", "Lie:2G2:27", "Lie:2G2:243", "Lie:2F4:8", "Lie:2F4:32"] {
            let g = id(spec);
            let spectrum = catalog::facts(&g).unwrap().spectrum;
            let sets = suzuki_ree_sets(g.as_lie().unwrap()).unwrap();
            for s in &sets {
                assert!(s.is_subset(&spectrum), "{spec}: {s} ⊄ {spectrum}");
            }
        }
        let sets = suzuki_ree_sets(id("Lie:2F4:8").as_lie().unwrap()).unwrap();
        assert_eq!(sets.len(), 8);
        // q⁴ - q² + 1 = 4033 = 37 · 109 at q = 8
        assert_eq!(sets[6], ps(&[109]));
        assert_eq!(sets[7], ps(&[37]));
    }

    #[test]
    fn condition_vii_examples() {
        // A_{n-1}(q), π = {2}: τ = φ = ∅.
        let r = cond("Lie:A:3:5", &[2], Condition::VII);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
        assert_eq!(r.bindings["epsilon"], Binding::Int(1));
        // 3D4(29): 7 | 28 = q - ε, and item (10) excludes 7.
        let r = cond("Lie:3D4:29", &[2, 7], Condition::VII);
        assert!(!r.holds);
        assert!(r.reason.unwrap().contains("thresholds"));
        assert!(!cond("Lie:A:2:7", &[2, 3], Condition::VII).holds);
        assert!(!cond("Lie:A:2:8", &[2, 7], Condition::VII).holds);
    }

    #[test]
    fn condition_vii_b3_by_search() {
        // find q (odd prime power, 3 ∤ q, 11 ∤ q) with 11 | q - ε
        let q = (5..500u64)
            .filter(|&q| q % 2 == 1 && q % 3 != 0 && q % 11 != 0 && arith::prime_power(q).is_some())
            .find(|&q| {
                let eps = arith::eps_mod4(q).unwrap();
                let v = if eps == 1 { q - 1 } else { q + 1 };
                v % 11 == 0
            })
            .unwrap();
        let g = SimpleGroupId::lie(LieType::B, 3, q);
        let r = check_condition(&g, &ps(&[2, 11]), Condition::VII).unwrap();
        assert_eq!((r.holds, r.subcase), (true, Some(2)), "B3({q})");
        // 7 = 2n+1 is not > 2n+1
        let q7 = (5..500u64)
            .filter(|&q| q % 2 == 1 && q % 3 != 0 && q % 7 != 0 && arith::prime_power(q).is_some())
            .find(|&q| (if q % 4 == 1 { q - 1 } else { q + 1 }) % 7 == 0)
            .unwrap();
        let g = SimpleGroupId::lie(LieType::B, 3, q7);
        assert!(!check_condition(&g, &ps(&[2, 7]), Condition::VII).unwrap().holds);
    }

    #[test]
    fn condition_vii_fermat_threshold() {
        // q = 19: ε = -1 and q + 1 = 20, so τ = φ = {5}.
        let r = cond("Lie:C:2:19", &[2, 5], Condition::VII);
        assert!(!r.holds);
        assert_eq!(r.bindings["phi"], Binding::Primes(ps(&[5])));
        let r = cond("Lie:A:2:19", &[2, 5], Condition::VII);
        assert_eq!((r.holds, r.subcase), (true, Some(1)));
        let r = cond("Lie:A:4:19", &[2, 5], Condition::VII);
        assert!(!r.holds);
    }

    #[test]
    fn decide_examples() {
        let v = decide_dpi_simple(&id("Spor:M11"), &ps(&[5, 11])).unwrap();
        assert!(v.dpi);
        assert_eq!(v.witness_label(), "Condition II(1)");
        let v = decide_dpi_simple(&id("Alt:5"), &ps(&[2, 3])).unwrap();
        assert!(!v.dpi);
        assert!(v.witness.is_none());
        assert_eq!(v.reports.len(), 7);
        for n in 5..12 {
            for p in PrimeSet::primes_up_to(n as u64).iter() {
                let v = decide_dpi_simple(&SimpleGroupId::alt(n), &ps(&[p])).unwrap();
                assert!(v.dpi);
                assert_eq!(v.witness.unwrap().condition, Condition::I);
            }
        }
    }

    #[test]
    fn dpi23_examples() {
        assert_eq!(dpi23_shortcut(&id("Alt:7"), &ps(&[2, 3, 5, 7])).unwrap(), Some(true));
        assert_eq!(dpi23_shortcut(&id("Alt:7"), &ps(&[2, 3, 5])).unwrap(), Some(false));
        assert_eq!(dpi23_shortcut(&id("Alt:7"), &ps(&[2, 5])).unwrap(), None);
    }

    fn corpus() -> Vec<SimpleGroupId> {
        let mut ids: Vec<SimpleGroupId> = (5..=9).map(SimpleGroupId::alt).collect();
        ids.extend(Sporadic::ALL.iter().map(|&s| SimpleGroupId::sporadic(s)));
        for s in [
            "Lie:A:2:4",
            "Lie:A:2:5",
            "Lie:A:2:7",
            "Lie:A:2:8",
            "Lie:A:2:9",
            "Lie:A:2:11",
            "Lie:A:2:13",
            "Lie:A:3:2",
            "Lie:A:3:3",
            "Lie:A:4:3",
            "Lie:2A:3:3",
            "Lie:2A:4:2",
            "Lie:B:2:3",
            "Lie:C:3:2",
            "Lie:B:3:5",
            "Lie:D:4:2",
            "Lie:2D:4:3",
            "Lie:3D4:2",
            "Lie:G2:3",
            "Lie:G2:5",
            "Lie:F4:2",
            "Lie:E6:2",
            "Lie:2E6:2",
            "Lie:E7:2",
            "Lie:E8:2",
            "Lie:2B2:8",
            "Lie:2B2:32",
            "Lie:2G2:27",
            "Lie:2F4:8",
        ] {
            ids.push(id(s));
        }
        ids
    }

    fn spectrum_subsets(g: &SimpleGroupId) -> Vec<PrimeSet> {
        let spectrum = catalog::facts(g).unwrap().spectrum;
        if spectrum.len() <= 10 {
            spectrum.subsets().collect()
        } else {
            // Monster-sized spectra: all subsets of size <= 3 plus the full set.
            let v: Vec<u64> = spectrum.iter().collect();
            let mut out = vec![spectrum.clone()];
            for i in 0..v.len() {
                out.push(ps(&[v[i]]));
                for j in i + 1..v.len() {
                    out.push(ps(&[v[i], v[j]]));
                    for k in j + 1..v.len() {
                        out.push(ps(&[v[i], v[j], v[k]]));
                    }
                }
            }
            out
        }
    }

    #[test]
    fn shortcut_coherence_and_gate_disjointness() {
        for g in corpus() {
            for pi in spectrum_subsets(&g) {
                let v = decide_dpi_simple(&g, &pi).unwrap();
                if let Some(short) = dpi23_shortcut(&g, &pi).unwrap() {
                    assert_eq!(short, v.dpi, "{g} {pi}");
                }
                if pi.contains(2) && pi.contains(3) {
                    for rep in &v.reports[1..] {
                        assert!(!rep.holds, "{g} {pi}: {}", rep.label());
                    }
                }
                if pi.len() <= 1 {
                    assert!(v.dpi, "{g} {pi}");
                }
            }
        }
    }

    #[test]
    fn multi_item_conditions_carry_subcase() {
        for g in corpus() {
            for pi in spectrum_subsets(&g) {
                for rep in decide_dpi_simple(&g, &pi).unwrap().reports {
                    let multi = !matches!(rep.condition, Condition::I | Condition::III);
                    if rep.holds && multi {
                        assert!(rep.subcase.is_some(), "{g} {pi} {:?}", rep.condition);
                    }
                }
            }
        }
    }

    #[test]
    fn verdict_serialises() {
        let v = decide_dpi_simple(&id("Lie:2D:6:4"), &ps(&[7, 13])).unwrap();
        let json = serde_json::to_string(&v).unwrap();
        let back: Verdict = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }
}
