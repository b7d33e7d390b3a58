//! Small factorizations assembled in code and pushed through the pipeline.

use braidmon::covers::{boundary_loop_quotient, rs_presentation, MonodromyMap, SubtreePolicy};
use braidmon::halftwist::{factor_word, Conventions, Label, LabelMap, Side};
use braidmon::vankampen::{presentation_affine, presentation_projective, tietze_simplify, TietzePolicy};
use braidmon::{AbelianGroup, ArtinWord, Bmf, Factor};
use proptest::prelude::*;

const C: Conventions = Conventions::CALIBRATED;

fn l(i: u32) -> Label {
    Label::plain(i)
}

/// The standard factorization of `n` generic lines: every pair once, in
/// lexicographic order of the right end.
fn lines(n: u32) -> Bmf {
    let mut fs = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            fs.push(Factor::atom(l(i), l(j), Side::Below, 2));
        }
    }
    Bmf::new(LabelMap::standard(n as usize), fs)
}

#[test]
fn generic_lines_multiply_to_the_full_twist() {
    for n in 2..=5 {
        assert!(lines(n).is_delta_squared(C).unwrap(), "{n} lines");
    }
}

#[test]
fn generic_lines_have_abelian_complement() {
    let b = lines(3);
    let p = presentation_affine(&b, C).unwrap();
    assert_eq!(p.abelianization().unwrap(), AbelianGroup { torsion: vec![], free_rank: 3 });
    let order = p.generators().to_vec();
    let q = presentation_projective(&p, &order).unwrap();
    assert_eq!(q.abelianization().unwrap(), AbelianGroup { torsion: vec![], free_rank: 2 });
}

#[test]
fn census_of_generic_lines() {
    let c = lines(4).census().unwrap();
    assert_eq!((c.node, c.total), (6, 12));
}

#[test]
fn smooth_conic_gives_cyclic_groups() {
    // Two branch points: Z_{12} and its mirror.
    let b = Bmf::new(
        LabelMap::standard(2),
        vec![Factor::atom(l(1), l(2), Side::Below, 1), Factor::atom(l(1), l(2), Side::Above, 1)],
    );
    assert!(b.is_delta_squared(C).unwrap());
    let p = presentation_affine(&b, C).unwrap();
    let (s, _) = tietze_simplify(&p, TietzePolicy::default());
    assert_eq!(s.rank(), 1);
    assert_eq!(s.abelianization().unwrap(), AbelianGroup::cyclic(0));
    let order = p.generators().to_vec();
    let q = presentation_projective(&p, &order).unwrap();
    assert_eq!(q.abelianization().unwrap(), AbelianGroup::cyclic(2));
}

#[test]
fn cuspidal_cubic_complement_is_the_trefoil_group() {
    let b = Bmf::new(LabelMap::standard(2), vec![Factor::atom(l(1), l(2), Side::Below, 3)]);
    let p = presentation_affine(&b, C).unwrap();
    let (s, _) = tietze_simplify(&p, TietzePolicy::default());
    assert_eq!(s.relators().len(), 1);
    assert_eq!(s.relators()[0].len(), 6);
    assert_eq!(s.abelianization().unwrap(), AbelianGroup::cyclic(0));
}

#[test]
fn double_cover_of_a_free_group() {
    // Both generators swap the two sheets; the index-2 subgroup of F_2 is free of rank 3.
    let b = Bmf::new(LabelMap::standard(2), vec![]);
    let p = presentation_affine(&b, C).unwrap();
    let m = MonodromyMap::new(2, vec![(1, 2), (1, 2)]).unwrap();
    let rs = rs_presentation(&p, &m, SubtreePolicy::default(), 1).unwrap();
    assert_eq!(rs.presentation.rank(), 3);
    assert_eq!(rs.etas.len(), 4);
    let q = boundary_loop_quotient(&rs).unwrap();
    assert!(q.simplified.rank() <= rs.presentation.rank());
}

fn band() -> impl Strategy<Value = (u32, u32, bool)> {
    (1..=5u32, 1..=5u32, any::<bool>())
        .prop_filter("distinct", |(a, b, _)| a != b)
        .prop_map(|(a, b, up)| (a.min(b), a.max(b), up))
}

proptest! {
    #[test]
    fn bands_are_conjugates_of_generators((a, b, up) in band()) {
        let map = LabelMap::standard(5);
        let side = if up { Side::Above } else { Side::Below };
        let w = factor_word(&Factor::atom(l(a), l(b), side, 1), &map, C).unwrap();
        prop_assert_eq!(w.exponent_sum(), 1);
        prop_assert_eq!(w.permutation().as_transposition(), Some((a as usize, b as usize)));
    }

    #[test]
    fn full_twist_is_central(x in prop::collection::vec((1..=4i32, any::<bool>()), 0..20)) {
        let letters: Vec<i32> = x.into_iter().map(|(g, p)| if p { g } else { -g }).collect();
        let w = ArtinWord::new(5, &letters).unwrap();
        let d = ArtinWord::full_twist(5);
        prop_assert!(w.compose(&d).unwrap().equals(&d.compose(&w).unwrap()).unwrap());
    }

    #[test]
    fn conjugated_factors_keep_their_degree((a, b, up) in band(), (c, d, up2) in band(), e in prop::sample::select(vec![1, 2, 3])) {
        let map = LabelMap::standard(5);
        let side = |u| if u { Side::Above } else { Side::Below };
        let base = Factor::atom(l(a), l(b), side(up), e);
        let f = base.conjugate(&[Factor::atom(l(c), l(d), side(up2), 2)]);
        prop_assert_eq!(factor_word(&f, &map, C).unwrap().exponent_sum(), e as i64);
        prop_assert_eq!(f.degree().unwrap(), base.degree().unwrap());
    }
}
