use matlis::field::Fp;
use matlis::io::AnyModule;
use matlis::suite::random_module;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn documents_round_trip_exactly(seed in any::<u64>()) {
        let f = Fp::new(32003).unwrap();
        let m = AnyModule::Fp(random_module(&mut ChaCha8Rng::seed_from_u64(seed), &f, 10));
        let text = m.to_json();
        let back = AnyModule::from_json(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(back.to_json(), text);
    }
}
