//! Seed-driven property tests over the generators: serialization
//! roundtrips and structural invariants that must hold for every seed,
//! not just the ones baked into the verification suites.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubical_sets::gen::{component_mono, random_map_into, random_subobject, random_tcset, GenConfig};
use cubical_sets::presheaf::{
    double_neg_sub, neg_map, neg_sub, tcset_from_json, tcset_to_json, tcsetmor_from_json,
    tcsetmor_to_json,
};

fn cfg() -> GenConfig {
    GenConfig { trunc: 2, max_level: 6 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tcset_json_roundtrip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_tcset(&mut rng, cfg());
        let back = tcset_from_json(&tcset_to_json(&x)).expect("roundtrip validates");
        prop_assert_eq!(back, x);
    }

    #[test]
    fn tcsetmor_json_roundtrip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_tcset(&mut rng, cfg());
        let f = random_map_into(&mut rng, &y);
        let back = tcsetmor_from_json(&tcsetmor_to_json(&f)).expect("roundtrip validates");
        prop_assert_eq!(back, f);
    }

    #[test]
    fn negation_of_any_map_is_mono(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_tcset(&mut rng, cfg());
        let f = random_map_into(&mut rng, &y);
        let n = neg_map(&f).expect("negation is defined for every map");
        prop_assert!(n.is_mono());
    }

    #[test]
    fn triple_negation_equals_single(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_tcset(&mut rng, cfg());
        let a = random_subobject(&mut rng, &y);
        let na = neg_sub(&a).expect("negation computes");
        // negations are always stable, so a third negation changes nothing
        let nnna = neg_sub(&double_neg_sub(&a).expect("double negation computes"))
            .expect("triple negation computes");
        prop_assert!(na.eq_as_subobject(&nnna));
    }

    #[test]
    fn component_inclusions_are_stable_subobjects(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let y = random_tcset(&mut rng, cfg());
        let m = component_mono(&mut rng, &y);
        prop_assert!(m.is_mono());
        let image = cubical_sets::presheaf::image(&m);
        let nn = double_neg_sub(&image).expect("double negation computes");
        prop_assert!(nn.eq_as_subobject(&image));
    }
}
