//! Strategies and property bodies shared by the property suite and the
//! acceptance report.

#![allow(dead_code)]

use braidmon::halftwist::{Endpoint, Label, LabelMap, Side};
use braidmon::vankampen::{tietze_simplify, TietzePolicy};
use braidmon::{ArtinWord, Bmf, Factor, FreeWord, Presentation};
use braidmon_cli::{parse_bmf, print_bmf};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// A word in `B_n` as `(n, letters)`.
pub fn braid_word(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = ArtinWord> {
    strands.prop_flat_map(move |n| {
        let k = (n - 1) as i32;
        prop::collection::vec((1..=k, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters: Vec<i32> = ls.into_iter().map(|(g, pos)| if pos { g } else { -g }).collect();
            ArtinWord::new(n, &letters).expect("letters in range")
        })
    })
}

/// One random braid-relation move at a chosen spot; returns the new letters.
pub fn rewrite_once(n: usize, w: &[i32], pick: usize, kind: u8, gen: usize) -> Vec<i32> {
    let mut v = w.to_vec();
    let len = v.len();
    let g = (gen % (n - 1)) as i32 + 1;
    let sign = if pick.is_multiple_of(2) { 1 } else { -1 };
    match kind % 4 {
        // Insert a cancelling pair.
        0 => {
            let at = if len == 0 { 0 } else { pick % (len + 1) };
            v.splice(at..at, [g * sign, -g * sign]);
        }
        // Swap two far-apart neighbours.
        1 => {
            if len >= 2 {
                let i = pick % (len - 1);
                if (v[i].abs() - v[i + 1].abs()).abs() >= 2 {
                    v.swap(i, i + 1);
                }
            }
        }
        // a b a -> b a b with a, b adjacent and of one sign.
        2 => {
            if len >= 3 {
                let i = pick % (len - 2);
                let (a, b, c) = (v[i], v[i + 1], v[i + 2]);
                if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                    v[i] = b;
                    v[i + 1] = a;
                    v[i + 2] = b;
                }
            }
        }
        // Delete a cancelling pair.
        _ => {
            if let Some(i) = (0..len.saturating_sub(1)).map(|j| (j + pick) % (len - 1)).find(|&j| v[j] == -v[j + 1]) {
                v.drain(i..i + 2);
            }
        }
    }
    v
}

/// Garside comparison agrees with comparison of Artin images.
pub fn garside_matches_artin(a: &ArtinWord, b: &ArtinWord) -> Result<(), TestCaseError> {
    let garside = a.equals(b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let artin = a.artin_images() == b.artin_images();
    prop_assert_eq!(garside, artin, "{:?} vs {:?}", a.letters(), b.letters());
    prop_assert!(a.equals(a).unwrap());
    prop_assert!(a.compose(&a.inverse()).unwrap().equals(&ArtinWord::identity(a.strands())).unwrap());
    Ok(())
}

/// Exponent sum, permutation and the element itself survive rewriting.
pub fn rewrites_preserve(w: &ArtinWord, moves: &[(usize, u8, usize)]) -> Result<(), TestCaseError> {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    for &(pick, kind, gen) in moves {
        letters = rewrite_once(n, &letters, pick, kind, gen);
    }
    let v = ArtinWord::new(n, &letters).unwrap();
    prop_assert_eq!(v.exponent_sum(), w.exponent_sum());
    prop_assert_eq!(v.permutation(), w.permutation());
    prop_assert!(v.equals(w).unwrap());
    Ok(())
}

pub fn rewrite_moves() -> impl Strategy<Value = Vec<(usize, u8, usize)>> {
    prop::collection::vec((any::<usize>(), any::<u8>(), any::<usize>()), 0..12)
}

fn six_labels() -> Vec<Label> {
    (1..=3).flat_map(|i| [Label::plain(i), Label::primed(i)]).collect()
}

fn atom() -> impl Strategy<Value = Factor> {
    (0..6usize, 0..6usize, any::<bool>(), prop::sample::select(vec![-3, -2, -1, 1, 2, 3]))
        .prop_filter("distinct ends", |(a, b, _, _)| a != b)
        .prop_map(|(a, b, above, e)| {
            let ls = six_labels();
            Factor::atom(ls[a.min(b)], ls[a.max(b)], if above { Side::Above } else { Side::Below }, e)
        })
}

fn composite() -> impl Strategy<Value = Factor> {
    (1..=3u32, 1..=3u32, prop::sample::select(vec![-2, 2, 3]))
        .prop_filter("distinct pairs", |(i, j, _)| i != j)
        .prop_map(|(i, j, e)| {
            let (i, j) = (i.min(j), i.max(j));
            Factor::band(
                Endpoint::Single(Label::plain(i)),
                Endpoint::Pair(Label::plain(j), Label::primed(j)),
                Side::Below,
                e,
            )
        })
}

/// A random factor: an atom or a doubled band, with up to two conjugators.
pub fn factor() -> impl Strategy<Value = Factor> {
    (prop_oneof![3 => atom(), 1 => composite()], prop::collection::vec(atom(), 0..=2))
        .prop_map(|(f, cs)| f.conjugate(&cs))
}

/// A random factorization on the labels `1,1',2,2',3,3'`.
pub fn bmf() -> impl Strategy<Value = Bmf> {
    prop::collection::vec(factor(), 0..8).prop_map(|fs| Bmf::new(LabelMap::new(six_labels()).unwrap(), fs))
}

pub fn round_trip(b: &Bmf) -> Result<(), TestCaseError> {
    let text = print_bmf(b);
    let back = parse_bmf(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
    prop_assert_eq!(&back, b);
    prop_assert_eq!(print_bmf(&back), text);
    Ok(())
}

/// A presentation on three generators with a few short relators.
pub fn presentation() -> impl Strategy<Value = Presentation> {
    let letter = prop::sample::select(vec![-3, -2, -1, 1, 2, 3]);
    prop::collection::vec(prop::collection::vec(letter, 1..8), 0..5).prop_map(|rs| {
        let rels = rs.iter().map(|r| FreeWord::new(3, r).unwrap()).collect();
        Presentation::new(vec!["a".into(), "b".into(), "c".into()], rels).unwrap()
    })
}

/// Every logged step has the abelianization of the input.
pub fn tietze_keeps_abelianization(p: &Presentation, policy: TietzePolicy) -> Result<(), TestCaseError> {
    let want = p.abelianization().unwrap();
    let (out, log) = tietze_simplify(p, policy);
    for m in &log {
        prop_assert_eq!(&m.after.abelianization().unwrap(), &want, "after {}", m.step);
    }
    prop_assert_eq!(out.abelianization().unwrap(), want);
    Ok(())
}

/// A cheap policy for random presentations.
pub const QUICK: TietzePolicy = TietzePolicy { eliminate: true, rewrite: true, search_limit: 2_000 };
