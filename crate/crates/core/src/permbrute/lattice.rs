use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::group::PermGroup;
use super::perm::Permutation;
use super::{names, BruteError, LATTICE_BOUND};

/// One conjugacy class of subgroups.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub rep: FixedBitSet,
    pub order: usize,
    /// Element indices generating `rep`.
    pub generators: Vec<usize>,
    /// Every conjugate of `rep`, `rep` included.
    pub conjugates: Vec<FixedBitSet>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.conjugates.len()
    }
}

/// All subgroups of a group up to conjugacy, ordered by subgroup order.
///
/// Built by extending class representatives with cyclic subgroups of
/// prime-power order until no new class appears; every subgroup is generated
/// by its cyclic subgroups of prime-power order.
pub struct Lattice<'g> {
    group: &'g PermGroup,
    classes: Vec<SubgroupClass>,
    class_of: HashMap<FixedBitSet, usize>,
}

impl<'g> Lattice<'g> {
    pub fn build(group: &'g PermGroup) -> Result<Self, BruteError> {
        Lattice::build_with_bound(group, LATTICE_BOUND)
    }

    pub fn build_with_bound(group: &'g PermGroup, bound: usize) -> Result<Self, BruteError> {
        if group.order() > bound || !group.has_table() {
            return Err(BruteError::LatticeBound { order: group.order(), bound });
        }
        let n = group.order();
        let mut cyclic: Vec<(FixedBitSet, usize)> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for x in 1..n {
            if super::is_prime_power(group.element_order(x)) {
                let (set, _) = group.closure(&[x]);
                if seen_cyclic.insert(set.clone()) {
                    cyclic.push((set, x));
                }
            }
        }

        let mut lattice = Lattice { group, classes: Vec::new(), class_of: HashMap::new() };
        lattice.add_class(group.closure(&[]).0, Vec::new());
        let mut i = 0;
        while i < lattice.classes.len() {
            let rep = lattice.classes[i].rep.clone();
            let gens = lattice.classes[i].generators.clone();
            for (c_set, c) in &cyclic {
                if c_set.is_subset(&rep) {
                    continue;
                }
                let mut ext = gens.clone();
                ext.push(*c);
                let (k, _) = group.closure(&ext);
                if !lattice.class_of.contains_key(&k) {
                    lattice.add_class(k, ext);
                }
            }
            i += 1;
        }
        lattice.sort();
        Ok(lattice)
    }

    fn add_class(&mut self, rep: FixedBitSet, generators: Vec<usize>) {
        let idx = self.classes.len();
        let mut conjugates = Vec::new();
        for g in 0..self.group.order() {
            let c = self.group.conjugate_set(&rep, g);
            if let std::collections::hash_map::Entry::Vacant(e) = self.class_of.entry(c.clone()) {
                e.insert(idx);
                conjugates.push(c);
            }
        }
        let order = rep.count_ones(..);
        self.classes.push(SubgroupClass { rep, order, generators, conjugates });
    }

    fn sort(&mut self) {
        self.classes.sort_by(|a, b| a.order.cmp(&b.order).then(a.size().cmp(&b.size())).then(a.rep.cmp(&b.rep)));
        self.class_of.clear();
        for (i, c) in self.classes.iter().enumerate() {
            for s in &c.conjugates {
                self.class_of.insert(s.clone(), i);
            }
        }
    }

    pub fn group(&self) -> &'g PermGroup {
        self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class_of(&self, subgroup: &FixedBitSet) -> Option<usize> {
        self.class_of.get(subgroup).copied()
    }

    /// Number of subgroups, counting every conjugate.
    pub fn subgroup_count(&self) -> usize {
        self.class_of.len()
    }

    /// Whether some conjugate of class `small` lies in the representative of class `big`.
    pub fn contains_conjugate(&self, small: usize, big: usize) -> bool {
        let (s, b) = (&self.classes[small], &self.classes[big]);
        b.order % s.order == 0 && s.conjugates.iter().any(|c| c.is_subset(&b.rep))
    }

    /// Subgroups of order `order` contained in `set`.
    pub fn subgroups_within(&self, set: &FixedBitSet, order: usize) -> Vec<&FixedBitSet> {
        self.classes
            .iter()
            .filter(|c| c.order == order)
            .flat_map(|c| c.conjugates.iter())
            .filter(|s| s.is_subset(set))
            .collect()
    }

    pub fn name(&self, class: usize) -> String {
        names::name_of(self.group, &self.classes[class].rep)
    }

    pub fn generators_of(&self, class: usize) -> Vec<Permutation> {
        self.classes[class].generators.iter().map(|&x| self.group.element(x).clone()).collect()
    }

    pub fn dump(&self, label: &str) -> LatticeDump {
        LatticeDump {
            schema: 1,
            group: label.to_string(),
            order: self.group.order(),
            classes: (0..self.classes.len())
                .map(|i| ClassDump {
                    name: self.name(i),
                    order: self.classes[i].order,
                    size: self.classes[i].size(),
                    generators: self.generators_of(i),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDump {
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub generators: Vec<Permutation>,
}

/// Subgroup classes with generators given as image lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDump {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    pub classes: Vec<ClassDump>,
}

/// One representative per conjugacy class of subgroups.
pub fn all_subgroups_up_to_conjugacy(group: &PermGroup) -> Result<Vec<SubgroupClass>, BruteError> {
    Ok(Lattice::build(group)?.classes)
}
