use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use crate::arith::{self, PrimeSet};

use super::perm::Permutation;
use super::{BruteError, MAX_DEGREE_QUOTIENT, ORDER_BOUND};

/// A permutation group with its elements materialised in sorted order.
///
/// Element `0` is the identity. Index-based operations (`mul`, `inv`) use a
/// Cayley table, built only for orders within the table bound.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    table: Option<Vec<u16>>,
    inverse: Vec<u16>,
    element_order: Vec<u32>,
}

impl PermGroup {
    /// Closes `generators` under multiplication. Fails once more than `bound`
    /// elements appear.
    pub fn generate(degree: usize, generators: Vec<Permutation>, bound: usize) -> Result<Self, BruteError> {
        if degree > MAX_DEGREE_QUOTIENT {
            return Err(BruteError::DegreeBound(degree));
        }
        let bound = bound.min(ORDER_BOUND);
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(BruteError::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let id = Permutation::identity(degree);
        let mut seen = std::collections::HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        let mut elements = Vec::new();
        while let Some(x) = queue.pop_front() {
            for s in &gens {
                let y = x.then(s);
                if seen.insert(y.clone()) {
                    if seen.len() > bound {
                        return Err(BruteError::OrderBound { bound });
                    }
                    queue.push_back(y);
                }
            }
            elements.push(x);
        }
        elements.sort_unstable();
        let inverse = elements.iter().map(|x| index_in(&elements, &x.inverse()) as u16).collect();
        let element_order = elements.iter().map(|x| x.order() as u32).collect();
        Ok(PermGroup { degree, generators, elements, table: None, inverse, element_order })
    }

    /// Builds the Cayley table; required by every index-based operation.
    pub fn with_table(mut self, bound: usize) -> Result<Self, BruteError> {
        if self.order() > bound {
            return Err(BruteError::LatticeBound { order: self.order(), bound });
        }
        if self.table.is_none() {
            let n = self.order();
            let mut table = vec![0u16; n * n];
            for (a, x) in self.elements.iter().enumerate() {
                for (b, y) in self.elements.iter().enumerate() {
                    table[a * n + b] = index_in(&self.elements, &x.then(y)) as u16;
                }
            }
            self.table = Some(table);
        }
        Ok(self)
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.order())
    }

    pub fn spectrum(&self) -> PrimeSet {
        arith::prime_divisors(self.order() as u64).expect("groups are non-empty")
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.element_order[i] as u64
    }

    /// `a` then `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let t = self.table.as_ref().expect("Cayley table built");
        t[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        s.insert_range(..);
        s
    }

    /// Subgroup generated by the given elements, as a bitset and element list.
    pub fn closure(&self, gens: &[usize]) -> (FixedBitSet, Vec<usize>) {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut list = vec![0usize];
        let mut i = 0;
        while i < list.len() {
            let x = list[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !set.put(y) {
                    list.push(y);
                }
            }
            i += 1;
        }
        (set, list)
    }

    /// `{g⁻¹ h g : h ∈ set}`.
    pub fn conjugate_set(&self, set: &FixedBitSet, g: usize) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for h in set.ones() {
            out.insert(self.conj(h, g));
        }
        out
    }

    pub fn is_normal(&self, set: &FixedBitSet) -> bool {
        self.generators
            .iter()
            .map(|g| self.index_of(g).expect("generators are elements"))
            .all(|g| set.ones().all(|h| set.contains(self.conj(h, g))))
    }

    /// Elements of `set` whose order is a `π`-number.
    pub fn pi_elements(&self, set: &FixedBitSet, pi: &PrimeSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for x in set.ones().filter(|&x| pi.is_pi_number(self.element_order(x))) {
            out.insert(x);
        }
        out
    }

    /// Whether the bitset is closed under multiplication (hence a subgroup,
    /// being finite and non-empty).
    pub fn is_subgroup(&self, set: &FixedBitSet) -> bool {
        set.contains(0) && set.ones().all(|a| set.ones().all(|b| set.contains(self.mul(a, b))))
    }

    /// Whether every Sylow subgroup of `set` is normal: for each prime `p`,
    /// the `p`-elements number exactly `|K|_p`.
    pub fn is_nilpotent(&self, set: &FixedBitSet) -> bool {
        let order = set.count_ones(..) as u64;
        let primes = arith::prime_divisors(order).expect("non-empty");
        let all_sylow_normal = primes.iter().all(|p| {
            let p_part = PrimeSet::from_list(&[p]).expect("prime").part_of_u64(order);
            let count = set.ones().filter(|&x| is_power_of(self.element_order(x), p)).count() as u64;
            count == p_part
        });
        all_sylow_normal
    }

    /// Commutator subgroup of a subgroup.
    pub fn derived(&self, set: &FixedBitSet) -> FixedBitSet {
        let elems: Vec<usize> = set.ones().collect();
        let mut gens = Vec::new();
        let mut seen = FixedBitSet::with_capacity(self.order());
        for &a in &elems {
            for &b in &elems {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !seen.put(c) {
                    gens.push(c);
                }
            }
        }
        self.closure(&gens).0
    }

    pub fn is_solvable(&self, set: &FixedBitSet) -> bool {
        let mut cur = set.clone();
        loop {
            if cur.count_ones(..) == 1 {
                return true;
            }
            let next = self.derived(&cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// Right cosets of a normal subgroup, and the action of the generators on them.
    pub fn quotient(&self, normal: &FixedBitSet) -> Result<Quotient, BruteError> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(BruteError::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for a in normal.ones() {
                coset_of[self.mul(a, g)] = c;
            }
        }
        let degree = reps.len();
        let act = |g: usize| -> Permutation {
            let images = reps.iter().map(|&r| coset_of[self.mul(r, g)] as u16).collect();
            Permutation::from_images(images).expect("right multiplication permutes cosets")
        };
        let gens: Vec<Permutation> = (0..n).filter(|&g| !normal.contains(g)).map(act).collect();
        let image = PermGroup::generate(degree, dedup(gens), ORDER_BOUND)?;
        let image_of: Vec<usize> =
            (0..n).map(|g| image.index_of(&act(g)).expect("coset action lands in the image")).collect();
        Ok(Quotient { group: image, image_of })
    }
}

/// `G/A` realised on the cosets of `A`, with the projection on indices.
pub struct Quotient {
    pub group: PermGroup,
    pub image_of: Vec<usize>,
}

fn dedup(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort_unstable();
    v.dedup();
    v
}

fn index_in(elements: &[Permutation], p: &Permutation) -> usize {
    elements.binary_search(p).expect("closed under products and inverses")
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PermGroup {
        let gens = vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&(0..n as u16).collect::<Vec<_>>()]).unwrap(),
        ];
        PermGroup::generate(n, gens, ORDER_BOUND).unwrap().with_table(1000).unwrap()
    }

    /// Nilpotency by the upper central series, independent of the Sylow count.
    fn nilpotent_by_central_series(g: &PermGroup, set: &FixedBitSet) -> bool {
        let elems: Vec<usize> = set.ones().collect();
        let mut z = FixedBitSet::with_capacity(g.order());
        z.insert(0);
        loop {
            // x ∈ Z_{i+1} iff [x, y] ∈ Z_i for all y
            let mut next = z.clone();
            for &x in &elems {
                let central = elems.iter().all(|&y| {
                    let c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
                    z.contains(c)
                });
                if central {
                    next.insert(x);
                }
            }
            if next == *set {
                return true;
            }
            if next == z {
                return false;
            }
            z = next;
        }
    }

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(sym(4).order(), 24);
        assert_eq!(sym(5).order(), 120);
        assert!(sym(5).element(0).is_identity());
    }

    #[test]
    fn order_bound_is_enforced() {
        let gens = vec![
            Permutation::from_cycles(8, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]).unwrap(),
        ];
        assert!(matches!(PermGroup::generate(8, gens, ORDER_BOUND), Err(BruteError::OrderBound { .. })));
    }

    #[test]
    fn nilpotency_agrees_with_central_series() {
        let g = sym(4);
        // every subgroup generated by at most two elements
        let mut seen = std::collections::HashSet::new();
        for a in 0..g.order() {
            for b in a..g.order() {
                let (set, _) = g.closure(&[a, b]);
                if seen.insert(set.clone()) {
                    assert_eq!(g.is_nilpotent(&set), nilpotent_by_central_series(&g, &set));
                }
            }
        }
        // S4 has 30 subgroups, all 2-generated
        assert_eq!(seen.len(), 30);
    }

    #[test]
    fn solvability() {
        let g = sym(4);
        assert!(g.is_solvable(&g.full_set()));
        let g = sym(5);
        assert!(!g.is_solvable(&g.full_set()));
        assert_eq!(g.derived(&g.full_set()).count_ones(..), 60);
    }

    #[test]
    fn quotient_by_alternating_group() {
        let g = sym(5);
        let a5 = g.derived(&g.full_set());
        let q = g.quotient(&a5).unwrap();
        assert_eq!(q.group.order(), 2);
        let s4 = sym(4);
        let v4 = s4.derived(&s4.derived(&s4.full_set()));
        assert_eq!(v4.count_ones(..), 4);
        let q = s4.quotient(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        // the projection is a homomorphism
        let qg = q.group.with_table(1000).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(q.image_of[s4.mul(a, b)], qg.mul(q.image_of[a], q.image_of[b]));
            }
        }
        let (c3, _) = s4.closure(&[s4.index_of(&Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap()).unwrap()]);
        assert!(matches!(s4.quotient(&c3), Err(BruteError::NotNormal)));
    }
}
