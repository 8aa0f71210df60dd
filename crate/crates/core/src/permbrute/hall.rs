use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::arith::PrimeSet;

use super::lattice::Lattice;
use super::perm::Permutation;
use super::BruteError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub name: String,
    pub order: usize,
    pub size: usize,
    pub generators: Vec<Permutation>,
}

/// Structure of the `π`-Hall subgroups, when any exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structural {
    /// Every `π`-Hall subgroup is solvable.
    pub hall_solvable: bool,
    /// For every `π`-Hall subgroup `H` and every split `π ∩ π(G) = σ ∪ τ` into
    /// non-empty parts, a `σ`-Hall or a `τ`-Hall subgroup of `H` is nilpotent.
    pub nilpotent_factor_per_partition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HallReport {
    pub pi: PrimeSet,
    pub pi_effective: PrimeSet,
    pub group_order: usize,
    /// `π`-part of `|G|`.
    pub hall_order: usize,
    pub epi: bool,
    pub dpi: bool,
    pub maximal_pi_classes: Vec<ClassSummary>,
    pub structural: Option<Structural>,
}

impl HallReport {
    pub fn class_names(&self) -> Vec<&str> {
        self.maximal_pi_classes.iter().map(|c| c.name.as_str()).collect()
    }
}

fn pi_part(pi: &PrimeSet, n: usize) -> usize {
    pi.part_of_u64(n as u64) as usize
}

/// Indices of the classes of maximal `π`-subgroups.
pub fn maximal_pi_class_indices(lattice: &Lattice, pi: &PrimeSet) -> Vec<usize> {
    let classes = lattice.classes();
    let is_pi = |i: usize| pi.is_pi_number(classes[i].order as u64);
    let pi_classes: Vec<usize> = (0..classes.len()).filter(|&i| is_pi(i)).collect();
    pi_classes
        .iter()
        .copied()
        .filter(|&a| {
            !pi_classes.iter().any(|&b| classes[b].order > classes[a].order && lattice.contains_conjugate(a, b))
        })
        .collect()
}

/// Classes of `π`-Hall subgroups.
pub fn hall_class_indices(lattice: &Lattice, pi: &PrimeSet) -> Vec<usize> {
    let target = pi_part(pi, lattice.group().order());
    (0..lattice.classes().len()).filter(|&i| lattice.classes()[i].order == target).collect()
}

fn nilpotent_hall_of(lattice: &Lattice, h: &FixedBitSet, part: &PrimeSet) -> bool {
    let g = lattice.group();
    let order = pi_part(part, h.count_ones(..));
    let halls = lattice.subgroups_within(h, order);
    !halls.is_empty() && halls.iter().all(|s| g.is_nilpotent(s))
}

fn structural(lattice: &Lattice, halls: &[usize], eff: &PrimeSet) -> Structural {
    let g = lattice.group();
    let reps = || halls.iter().map(|&i| &lattice.classes()[i].rep);
    Structural {
        hall_solvable: reps().all(|h| g.is_solvable(h)),
        nilpotent_factor_per_partition: reps().all(|h| {
            eff.bipartitions()
                .iter()
                .all(|(s, t)| nilpotent_hall_of(lattice, h, s) || nilpotent_hall_of(lattice, h, t))
        }),
    }
}

/// Maximal `π`-subgroups up to conjugacy, largest first, with `E_π` and
/// `D_π` read off by definition.
pub fn maximal_pi_subgroups(lattice: &Lattice, pi: &PrimeSet) -> HallReport {
    let g = lattice.group();
    let eff = pi.intersection(&g.spectrum());
    let hall_order = pi_part(pi, g.order());
    let mut maximal = maximal_pi_class_indices(lattice, pi);
    maximal.reverse();
    let epi = maximal.iter().any(|&i| lattice.classes()[i].order == hall_order);
    let halls = hall_class_indices(lattice, pi);
    HallReport {
        pi: pi.clone(),
        pi_effective: eff.clone(),
        group_order: g.order(),
        hall_order,
        epi,
        dpi: maximal.len() == 1,
        maximal_pi_classes: maximal
            .iter()
            .map(|&i| ClassSummary {
                name: lattice.name(i),
                order: lattice.classes()[i].order,
                size: lattice.classes()[i].size(),
                generators: lattice.generators_of(i),
            })
            .collect(),
        structural: epi.then(|| structural(lattice, &halls, &eff)),
    }
}

/// All maximal `π`-subgroups are conjugate.
pub fn is_dpi_brute(lattice: &Lattice, pi: &PrimeSet) -> bool {
    maximal_pi_class_indices(lattice, pi).len() == 1
}

/// A `π`-Hall subgroup `H` with `H = H_σ × H_τ`.
#[derive(Debug, Clone)]
pub struct HallSplitWitness {
    pub hall_class: usize,
    pub sigma_part: FixedBitSet,
    pub tau_part: FixedBitSet,
}

/// Decomposes the representative of a Hall class into its `σ`- and `τ`-elements.
fn split_of(lattice: &Lattice, class: usize, sigma: &PrimeSet, tau: &PrimeSet) -> Option<HallSplitWitness> {
    let g = lattice.group();
    let h = &lattice.classes()[class].rep;
    let s = g.pi_elements(h, sigma);
    let t = g.pi_elements(h, tau);
    let (ns, nt) = (s.count_ones(..), t.count_ones(..));
    let commute = s.ones().all(|a| t.ones().all(|b| g.mul(a, b) == g.mul(b, a)));
    (ns * nt == h.count_ones(..) && g.is_subgroup(&s) && g.is_subgroup(&t) && commute).then(|| HallSplitWitness {
        hall_class: class,
        sigma_part: s,
        tau_part: t,
    })
}

/// Every `σ ∪ τ`-Hall subgroup of the form `H_σ × H_τ`, one per conjugacy class.
pub fn hall_splits(lattice: &Lattice, sigma: &PrimeSet, tau: &PrimeSet) -> Result<Vec<HallSplitWitness>, BruteError> {
    let overlap = sigma.intersection(tau);
    if !overlap.is_empty() {
        return Err(BruteError::Overlap(overlap));
    }
    let pi = sigma.union(tau);
    Ok(hall_class_indices(lattice, &pi).into_iter().filter_map(|c| split_of(lattice, c, sigma, tau)).collect())
}

/// Whether the group has a `σ ∪ τ`-Hall subgroup `H = H_σ × H_τ`.
pub fn verify_hall_split(lattice: &Lattice, sigma: &PrimeSet, tau: &PrimeSet) -> Result<bool, BruteError> {
    Ok(!hall_splits(lattice, sigma, tau)?.is_empty())
}

/// For a split Hall subgroup `H = H_σ × H_τ` of a group in `D_σ ∩ D_τ`,
/// whether `H_σ` or `H_τ` is nilpotent. `None` when no split Hall subgroup
/// exists or `D_σ`, `D_τ` fail. Meaningful for simple groups.
pub fn check_final_corollary(lattice: &Lattice, sigma: &PrimeSet, tau: &PrimeSet) -> Result<Option<bool>, BruteError> {
    let splits = hall_splits(lattice, sigma, tau)?;
    if splits.is_empty() || !is_dpi_brute(lattice, sigma) || !is_dpi_brute(lattice, tau) {
        return Ok(None);
    }
    let g = lattice.group();
    Ok(Some(splits.iter().all(|w| g.is_nilpotent(&w.sigma_part) || g.is_nilpotent(&w.tau_part))))
}

/// For each `π`-Hall subgroup `H` and normal `A`: `H ∩ A` is a `π`-Hall
/// subgroup of `A` and `HA/A` is a `π`-Hall subgroup of `G/A`.
pub fn verify_hall_inheritance(lattice: &Lattice, normal: &FixedBitSet, pi: &PrimeSet) -> Result<bool, BruteError> {
    let g = lattice.group();
    let quotient = g.quotient(normal)?;
    let halls = hall_class_indices(lattice, pi);
    if halls.is_empty() {
        return Err(BruteError::NoHall(pi.clone()));
    }
    let a_order = normal.count_ones(..);
    let q_order = quotient.group.order();
    let is_hall = |sub: usize, whole: usize| {
        whole.is_multiple_of(sub) && pi.is_pi_number(sub as u64) && pi_part(pi, whole / sub) == 1
    };
    Ok(halls.iter().flat_map(|&c| lattice.classes()[c].conjugates.iter()).all(|h| {
        let mut meet = h.clone();
        meet.intersect_with(normal);
        let image: std::collections::HashSet<usize> = h.ones().map(|x| quotient.image_of[x]).collect();
        is_hall(meet.count_ones(..), a_order) && is_hall(image.len(), q_order)
    }))
}

#[cfg(test)]
mod tests {
    use super::super::realize::realize_with_table;
    use super::super::LATTICE_BOUND;
    use super::*;

    fn ps(list: &[u64]) -> PrimeSet {
        list.iter().copied().collect()
    }

    macro_rules! with_lattice {
        ($spec:expr, |$l:ident| $body:block) => {{
            let g = realize_with_table(&$spec.parse().unwrap(), LATTICE_BOUND).unwrap();
            let $l = Lattice::build(&g).unwrap();
            $body
        }};
    }

    #[test]
    fn alternating_five_two_three() {
        with_lattice!("Alt:5", |l| {
            let r = maximal_pi_subgroups(&l, &ps(&[2, 3]));
            assert_eq!((r.epi, r.dpi, r.hall_order), (true, false, 12));
            assert_eq!(r.class_names(), vec!["A4", "S3"]);
            let r = maximal_pi_subgroups(&l, &ps(&[2, 5]));
            assert_eq!((r.epi, r.dpi, r.hall_order), (false, false, 20));
            assert!(r.structural.is_none());
            let r = maximal_pi_subgroups(&l, &ps(&[5, 7]));
            assert!(r.epi && r.dpi);
            assert_eq!(r.pi_effective, ps(&[5]));
        });
    }

    #[test]
    fn alternating_six_two_three() {
        with_lattice!("Alt:6", |l| {
            assert!(!is_dpi_brute(&l, &ps(&[2, 3])));
            assert!(is_dpi_brute(&l, &ps(&[2, 3, 5])));
        });
    }

    #[test]
    fn abelian_groups_are_dpi() {
        with_lattice!("Cyclic:7*Cyclic:3", |l| {
            for pi in ps(&[2, 3, 5, 7]).subsets() {
                assert!(is_dpi_brute(&l, &pi));
            }
        });
    }

    #[test]
    fn psl27_three_seven() {
        with_lattice!("Lie:A:2:7", |l| {
            let r = maximal_pi_subgroups(&l, &ps(&[3, 7]));
            assert!(r.dpi && r.epi);
            assert_eq!(r.hall_order, 21);
            let s = r.structural.unwrap();
            assert!(s.hall_solvable && s.nilpotent_factor_per_partition);
            assert_eq!(check_final_corollary(&l, &ps(&[3]), &ps(&[7])).unwrap(), None);
            // 7:3 is not 3 × 7
            assert!(!verify_hall_split(&l, &ps(&[3]), &ps(&[7])).unwrap());
        });
    }

    #[test]
    fn split_in_direct_product() {
        with_lattice!("Alt:5*Cyclic:7", |l| {
            assert_eq!(l.group().order(), 420);
            assert!(verify_hall_split(&l, &ps(&[5]), &ps(&[7])).unwrap());
            assert!(is_dpi_brute(&l, &ps(&[5, 7])));
            assert!(verify_hall_split(&l, &ps(&[2, 3]), &ps(&[7])).unwrap());
            assert!(!is_dpi_brute(&l, &ps(&[2, 3, 7])));
            assert!(!is_dpi_brute(&l, &ps(&[2, 3])));
            assert!(verify_hall_split(&l, &ps(&[2, 3]), &ps(&[5])).is_ok());
            assert!(hall_splits(&l, &ps(&[2]), &ps(&[2, 3])).is_err());
        });
    }

    #[test]
    fn inheritance_in_direct_product() {
        let g = realize_with_table(&"Alt:5*Cyclic:7".parse().unwrap(), LATTICE_BOUND).unwrap();
        let l = Lattice::build(&g).unwrap();
        // the C7 factor: points 5..12
        let c7 = g.pi_elements(&g.full_set(), &ps(&[7]));
        assert_eq!(c7.count_ones(..), 7);
        assert!(verify_hall_inheritance(&l, &c7, &ps(&[2, 3, 7])).unwrap());
        assert!(verify_hall_inheritance(&l, &g.full_set(), &ps(&[2, 3, 7])).unwrap());
        let trivial = g.closure(&[]).0;
        assert!(verify_hall_inheritance(&l, &trivial, &ps(&[2, 3, 7])).unwrap());
        assert!(matches!(verify_hall_inheritance(&l, &c7, &ps(&[2, 5])), Err(BruteError::NoHall(_))));
        let c5 = g.closure(&[g.index_of(&super::super::perm::Permutation::from_cycles(12, &[&[0, 1, 2, 3, 4]]).unwrap()).unwrap()]).0;
        assert!(matches!(verify_hall_inheritance(&l, &c5, &ps(&[5])), Err(BruteError::NotNormal)));
    }
}
