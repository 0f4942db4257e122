use matlis::strings::{parse_band, parse_word, words_with_tails, band_words, StringWord};
use proptest::prelude::*;

fn valid(w: &StringWord) -> bool {
    StringWord::new(w.left_tail(), w.core().to_vec(), w.right_tail()).is_ok()
}

#[test]
fn operations_preserve_validity() {
    for w in words_with_tails(6) {
        assert!(valid(&w.inverse()), "{w}");
        assert!(valid(&w.reverse_inverse()), "{w}");
        for d in 0..4 {
            assert!(valid(&w.truncate(d)), "{w}");
        }
        for j in 0..w.core().len() {
            let s = w.concat_split(j).unwrap();
            assert!(valid(&s.sub) && valid(&s.quot), "{w} at {j}");
        }
    }
}

#[test]
fn display_round_trips() {
    for w in words_with_tails(6) {
        let text = w.to_string();
        assert_eq!(parse_word(&text).unwrap(), w, "{text}");
    }
    for b in band_words(6) {
        assert_eq!(parse_band(&b.to_string()).unwrap(), b);
    }
}

#[test]
fn concat_split_reassembles() {
    for w in words_with_tails(5) {
        for j in 0..w.core().len() {
            let s = w.concat_split(j).unwrap();
            let (l, r) = if s.connector.is_direct() { (&s.quot, &s.sub) } else { (&s.sub, &s.quot) };
            assert_eq!(StringWord::concat(l, s.connector, r).unwrap(), w);
        }
    }
}

#[test]
fn hull_truncations() {
    let hull = parse_word("x^inf Y^inf").unwrap();
    assert_eq!(hull.truncate(2).to_string(), "xxYY");
    let ring = parse_word("X^inf y^inf").unwrap();
    assert_eq!(ring.truncate(3), hull.truncate(3).inverse());
    assert_eq!(parse_word("xY").unwrap().truncate(7).to_string(), "xY");
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn canonical_is_idempotent(idx in 0usize..2285) {
        let words = words_with_tails(6);
        let w = &words[idx % words.len()];
        let c = w.canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        prop_assert_eq!(w.reverse_inverse().canonical(), c);
        prop_assert_eq!(w.inverse().inverse(), w.clone());
    }

    #[test]
    fn parser_never_panics(text in "[xyXY^inf1() band]{0,20}") {
        let _ = parse_word(&text);
        let _ = parse_band(&text);
    }
}
