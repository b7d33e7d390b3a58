mod common;

use braidmon::vankampen::TietzePolicy;
use braidmon::ArtinWord;
use braidmon_cli::fixtures::NAMES;
use braidmon_cli::pipeline;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn garside_agrees_with_artin_on_rewrites(w in common::braid_word(4..=6, 30), moves in common::rewrite_moves()) {
        let mut v = w.letters().to_vec();
        for &(p, k, g) in &moves {
            v = common::rewrite_once(w.strands(), &v, p, k, g);
        }
        common::garside_matches_artin(&w, &ArtinWord::new(w.strands(), &v).unwrap())?;
    }

    #[test]
    fn garside_agrees_with_artin_on_pairs(
        (a, b) in (4..=6usize).prop_flat_map(|n| (common::braid_word(n..=n, 30), common::braid_word(n..=n, 30)))
    ) {
        common::garside_matches_artin(&a, &b)?;
    }

    #[test]
    fn relation_rewrites_keep_invariants(w in common::braid_word(3..=6, 30), moves in common::rewrite_moves()) {
        common::rewrites_preserve(&w, &moves)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn random_factorizations_round_trip(b in common::bmf()) {
        common::round_trip(&b)?;
    }

    #[test]
    fn tietze_steps_keep_abelianization(p in common::presentation()) {
        common::tietze_keeps_abelianization(&p, common::QUICK)?;
    }
}

#[test]
fn fixtures_round_trip() {
    for name in NAMES {
        common::round_trip(&pipeline::fixture(name).unwrap().bmf).unwrap();
    }
}

#[test]
fn cayley_tietze_steps_keep_abelianization() {
    let src = pipeline::fixture("cayley").unwrap();
    for p in [pipeline::affine(&src).unwrap(), pipeline::projective(&src).unwrap()] {
        common::tietze_keeps_abelianization(&p, TietzePolicy::default()).unwrap();
    }
}
