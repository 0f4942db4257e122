use matlis::classify::*;
use matlis::dvr::*;
use matlis::field::Fp;
use matlis::strings::{parse_word, words_with_tails, StringWord};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mixed_words(max_core: usize) -> Vec<StringWord> {
    words_with_tails(max_core)
        .into_iter()
        .filter(|w| classify_word(w) == Classification::MixedReflexive)
        .collect()
}

#[test]
fn finite_length_iff_no_tails() {
    for w in words_with_tails(5) {
        assert_eq!(classify_word(&w) == Classification::FiniteLength, w.is_finite(), "{w}");
    }
}

#[test]
fn splits_of_all_mixed_words() {
    for w in mixed_words(6) {
        let s = arno_split(&w);
        assert!(classify_word(&s.sub).is_noetherian(), "{w}");
        assert!(classify_word(&s.quot).is_artinian(), "{w}");
        assert!(s.reassemble(&w).unwrap().same_string(&w), "{w}");
        let j = s.split_index.unwrap();
        assert!(admissible_indices(&w, w.core().len() + 1).iter().all(|k| (j.abs(), j < 0) <= (k.abs(), *k < 0)));
    }
}

#[test]
fn trivial_splits() {
    for w in words_with_tails(4) {
        let s = arno_split(&w);
        match classify_word(&w) {
            Classification::Artinian => assert_eq!((s.sub, s.quot), (StringWord::trivial(), w)),
            Classification::Noetherian | Classification::FiniteLength => {
                assert_eq!((s.sub, s.quot), (w, StringWord::trivial()))
            }
            Classification::MixedReflexive => assert!(s.split_index.is_some()),
        }
    }
}

#[test]
fn truncated_windows_agree_with_the_split() {
    let f = Fp::new(32003).unwrap();
    for w in mixed_words(4) {
        let s = arno_split(&w);
        for depth in 2..=6 {
            let r = window_consistency(&w, &s, depth, &f).unwrap();
            assert!(r.holds(), "{w} at depth {depth}: {r:?}");
        }
    }
}

#[test]
fn dual_compat_is_exhaustive() {
    for w in words_with_tails(6) {
        assert!(classify_dual_compat(&w).holds(), "{w}");
    }
    let r = classify_dual_compat(&parse_word("X^inf y X^inf").unwrap());
    assert_eq!(r.word, Classification::MixedReflexive);
}

#[test]
fn dvr_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let zero = DvrCatalogObject::default();
    for _ in 0..500 {
        let (a, b, c) = (
            DvrCatalogObject::random(&mut rng),
            DvrCatalogObject::random(&mut rng),
            DvrCatalogObject::random(&mut rng),
        );
        assert_eq!(dvr_dual(&dvr_dual(&a)), a);
        assert_eq!(dvr_classify(&dvr_dual(&a)), dvr_classify(&a).swap());
        assert_eq!(dvr_add(&a, &b), dvr_add(&b, &a));
        assert_eq!(dvr_add(&dvr_add(&a, &b), &c), dvr_add(&a, &dvr_add(&b, &c)));
        assert_eq!(dvr_add(&a, &zero), a);
        assert_eq!(a.to_string().parse::<DvrCatalogObject>().unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn stabilising_words_swap_under_duality(idx in 0usize..100_000) {
        let words = words_with_tails(5);
        let w = &words[idx % words.len()];
        let r = classify_dual_compat(w);
        prop_assert_eq!(r.inverse, r.word.swap());
    }
}
