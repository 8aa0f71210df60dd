//! Invariants of the simple-group criterion over randomly drawn groups and prime sets.

use proptest::prelude::*;
use sylowpi::arith::PrimeSet;
use sylowpi::catalog::{self, LieType, SimpleGroupId, Sporadic};
use sylowpi::criterion::{decide_dpi_simple, dpi23_shortcut, Condition};

const FIELDS: [u64; 16] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 32];

fn arb_group() -> impl Strategy<Value = SimpleGroupId> {
    let lie = (prop::sample::select(LieType::ALL.to_vec()), 1u32..7, prop::sample::select(FIELDS.to_vec()))
        .prop_map(|(ty, n, q)| SimpleGroupId::lie(ty, n, q));
    prop_oneof![
        (5u32..40).prop_map(SimpleGroupId::alt),
        prop::sample::select(Sporadic::ALL.to_vec()).prop_map(SimpleGroupId::sporadic),
        lie.clone(),
        lie,
    ]
    .prop_filter("valid simple group", |id| catalog::validate(id).is_ok())
}

/// A group with a subset of its spectrum, plus one prime outside it.
fn arb_instance() -> impl Strategy<Value = (SimpleGroupId, PrimeSet)> {
    (arb_group(), any::<u64>(), prop::bool::ANY).prop_map(|(id, mask, extra)| {
        let spectrum = catalog::facts(&id).unwrap().spectrum;
        let mut pi: Vec<u64> =
            spectrum.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, p)| p).collect();
        if extra {
            pi.push(PrimeSet::primes_up_to(200).iter().find(|p| !spectrum.contains(*p)).unwrap());
        }
        (id, pi.into_iter().collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn shortcut_agrees_with_criterion((id, pi) in arb_instance()) {
        let v = decide_dpi_simple(&id, &pi).unwrap();
        if let Some(short) = dpi23_shortcut(&id, &pi).unwrap() {
            prop_assert_eq!(short, v.dpi);
        }
    }

    #[test]
    fn only_condition_i_survives_two_and_three((id, pi) in arb_instance()) {
        let v = decide_dpi_simple(&id, &pi).unwrap();
        if v.pi_effective.contains(2) && v.pi_effective.contains(3) {
            prop_assert!(v.reports.iter().filter(|r| r.holds).all(|r| r.condition == Condition::I));
        }
    }

    #[test]
    fn singletons_always_hold((id, pi) in arb_instance()) {
        let v = decide_dpi_simple(&id, &pi).unwrap();
        if v.pi_effective.len() <= 1 {
            prop_assert!(v.dpi);
        }
    }

    #[test]
    fn verdict_is_consistent((id, pi) in arb_instance()) {
        let v = decide_dpi_simple(&id, &pi).unwrap();
        prop_assert_eq!(v.dpi, v.witness.is_some());
        prop_assert_eq!(v.dpi, v.reports.iter().any(|r| r.holds));
        prop_assert!(v.pi_effective.is_subset(&pi));
        for r in v.reports.iter().filter(|r| r.holds) {
            let multi = !matches!(r.condition, Condition::I | Condition::III);
            prop_assert!(!multi || r.subcase.is_some());
        }
        // only π ∩ π(G) matters
        let again = decide_dpi_simple(&id, &v.pi_effective).unwrap();
        prop_assert_eq!(again.dpi, v.dpi);
    }
}
