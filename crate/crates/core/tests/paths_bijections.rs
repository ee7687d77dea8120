mod common;

use ics_core::bijections::{
    classify_elements, ics_to_motzkin, ics_to_nested_pair, ics_to_walk, is_full_ics, lower_path,
    motzkin_to_ics, motzkin_to_nested_pair, nested_pair_to_ics, nested_pair_to_motzkin, upper_path, walk_to_ics,
    walk_to_ics_in, BijectionError,
};
use ics_core::paths::{
    enumerate_motzkin, enumerate_walks, motzkin_stats, path_heights, validate_motzkin, walk_stats, MotzkinStats,
    MotzkinWord, NestedPairBT, QuarterWalk, WalkStats,
};
use ics_core::poset::{build_poset, count_ics, enumerate_ics, subset_stats, EnumerationConfig, FinitePoset, PosetSpec};
use proptest::prelude::*;

const LARGE_WORD: &str = "2 U 1 U 2 D D 1 1 2 U 1 U 2 2 D 1 D 1 2 U 2 2 D 1 1 2";

fn poset(text: &str) -> FinitePoset {
    build_poset(&text.parse::<PosetSpec>().unwrap()).unwrap()
}

fn all_ics(p: &FinitePoset) -> Vec<ics_core::poset::ElementSubset> {
    enumerate_ics(p, &EnumerationConfig::default(), None).unwrap().collect()
}

#[test]
fn large_word_statistics() {
    let w: MotzkinWord = LARGE_WORD.parse().unwrap();
    let v = validate_motzkin(&w);
    assert!(v.valid);
    assert_eq!((v.m, v.n), (13, 14));
    assert_eq!(motzkin_stats(&w).unwrap(), MotzkinStats { area: 20, returns: 3, axis_run_product_sum: 5 });
}

#[test]
fn walk_statistics_of_examples() {
    let a5 = QuarterWalk::parse(0, "e e nw w se e e w nw se w w").unwrap();
    assert_eq!(
        walk_stats(&a5).unwrap(),
        WalkStats { height_sum: 3, x_axis_returns: 2, y_axis_returns_excl_last: 1 }
    );
    let p45 = QuarterWalk::parse(4, "nw w nw w se e nw se se").unwrap();
    assert_eq!(
        walk_stats(&p45).unwrap(),
        WalkStats { height_sum: 11, x_axis_returns: 1, y_axis_returns_excl_last: 1 }
    );
}

#[test]
fn motzkin_enumeration_counts_rectangles() {
    for m in 0..=5 {
        for n in 0..=(10 - m).min(5) {
            let words = enumerate_motzkin(m, n).unwrap();
            assert!(words.windows(2).all(|w| w[0] < w[1]));
            let expected: u64 = if m * n <= 16 {
                common::rect(m, n).count()
            } else {
                count_ics(&poset(&format!("rect:{m}x{n}")), &EnumerationConfig::default())
                    .unwrap()
                    .try_into()
                    .unwrap()
            };
            assert_eq!(words.len() as u64, expected, "({m},{n})");
            assert_eq!(words.len(), enumerate_motzkin(n, m).unwrap().len());
        }
    }
}

#[test]
fn walk_enumeration_counts_truncated_rectangles() {
    for len in 0..=10usize {
        for h in 0..=4usize {
            for s in 0..=4usize {
                if (len + h + s) % 2 != 0 || len < h + s {
                    continue;
                }
                let (m, n, r) = ((len + s - h) / 2, (len + h - s) / 2, (len - s - h) / 2);
                let walks = enumerate_walks(h, s, len).unwrap();
                assert_eq!(walks.len() as u64, common::trunc(m, n, r).count(), "h={h} s={s} len={len}");
            }
        }
    }
    assert_eq!(enumerate_walks(1, 2, 5).unwrap().len(), 24);
    assert_eq!(enumerate_walks(0, 0, 4).unwrap().len(), 2);
}

#[test]
fn motzkin_image_is_exactly_the_word_set() {
    for (m, n) in [(2, 2), (3, 2), (3, 3), (1, 4)] {
        let p = poset(&format!("rect:{m}x{n}"));
        let mut images: Vec<_> = all_ics(&p).iter().map(|s| ics_to_motzkin(&p, s).unwrap()).collect();
        images.sort();
        assert_eq!(images, enumerate_motzkin(m, n).unwrap());
    }
}

#[test]
fn walk_image_is_exactly_the_walk_set() {
    for (m, n, r) in [(3, 2, 1), (3, 3, 3), (4, 3, 2)] {
        let p = poset(&format!("trunc:{m}x{n}:{r}"));
        let mut images: Vec<_> = all_ics(&p).iter().map(|s| ics_to_walk(&p, s).unwrap()).collect();
        images.sort();
        assert_eq!(images, enumerate_walks(n - r, m - r, m + n).unwrap());
    }
}

#[test]
fn pair_round_trips_and_canonical_form() {
    let p = poset("rect:3x3");
    for s in all_ics(&p) {
        let pair = ics_to_nested_pair(&p, &s).unwrap();
        assert!(pair.is_canonical());
        assert_eq!(nested_pair_to_ics(&p, &pair).unwrap(), s);
        let word = nested_pair_to_motzkin(&pair).unwrap();
        assert_eq!(motzkin_to_nested_pair(&word).unwrap(), pair);
        let text = pair.to_string();
        assert_eq!(text.parse::<NestedPairBT>().unwrap(), pair);
    }
}

#[test]
fn non_canonical_pairs_are_flagged() {
    let pair: NestedPairBT = "1 1 0\nDU\nDU".parse().unwrap();
    assert_eq!(nested_pair_to_motzkin(&pair), Err(BijectionError::NotCanonical));
    let p = poset("rect:1x1");
    assert!(nested_pair_to_ics(&p, &pair).unwrap().is_empty());
}

#[test]
fn classification_matches_path_geometry() {
    for text in ["rect:3x4", "trunc:4x4:2"] {
        let p = poset(text);
        let frame = p.frame().unwrap();
        for s in all_ics(&p) {
            let c = classify_elements(&p, &s).unwrap();
            let lower = path_heights(frame.n as i64, &lower_path(&p, &s).unwrap());
            let upper = path_heights(frame.n as i64, &upper_path(&p, &s).unwrap());
            for x in 0..p.len() {
                let l = p.label(x);
                let (i, j) = (l[0] + frame.n - l[1], (l[0] + l[1] - 1) as i64);
                let (below_u, below_l) = (j < upper[i], j < lower[i]);
                assert_eq!(c.in_i.contains(x), below_u && !below_l);
                assert_eq!(c.below_only.contains(x), below_u && below_l);
                assert_eq!(c.above_only.contains(x), !below_u && !below_l);
                assert_eq!(c.incomparable.contains(x), !below_u && below_l);
            }
        }
    }
}

#[test]
fn classification_extremes() {
    let p = poset("rect:2x3");
    let empty = classify_elements(&p, &ics_core::poset::ElementSubset::empty(6)).unwrap();
    assert_eq!(empty.incomparable.len(), 6);
    let full = classify_elements(&p, &ics_core::poset::ElementSubset::full(6)).unwrap();
    assert_eq!(full.in_i.len(), 6);
    assert!(full.below_only.is_empty() && full.above_only.is_empty() && full.incomparable.is_empty());
}

#[test]
fn full_sets_of_two_by_two() {
    let p = poset("rect:2x2");
    let full = all_ics(&p).iter().filter(|s| is_full_ics(&p, s).unwrap()).count();
    assert_eq!(full as u64, common::narayana(3, 2));
}

#[test]
fn statistics_transport_on_rectangles() {
    for (m, n) in [(3, 3), (2, 4), (4, 2)] {
        let p = poset(&format!("rect:{m}x{n}"));
        for s in all_ics(&p) {
            let st = subset_stats(&p, &s);
            let ms = motzkin_stats(&ics_to_motzkin(&p, &s).unwrap()).unwrap();
            assert_eq!(st.cardinality as u64, ms.area);
            assert_eq!(st.component_count as u64, ms.returns);
            assert_eq!(st.incomparable_count as u64, ms.axis_run_product_sum);
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(motzkin_to_ics(&"2 1".parse().unwrap()).is_err());
    assert!(walk_to_ics(&QuarterWalk::parse(0, "w").unwrap()).is_err());
    assert!(walk_to_ics(&QuarterWalk::parse(0, "nw").unwrap()).is_err());
    let p = poset("rect:2x2");
    let bad = p.subset_from_labels([&[1, 1][..], &[2, 2][..]]).unwrap();
    assert_eq!(ics_to_walk(&p, &bad), Err(BijectionError::NotIntervalClosed));
}

proptest! {
    #[test]
    fn random_words_round_trip(m in 0usize..6, n in 0usize..6, pick in any::<prop::sample::Index>()) {
        let words = enumerate_motzkin(m, n).unwrap();
        let w = &words[pick.index(words.len())];
        let (mm, nn, s) = motzkin_to_ics(w).unwrap();
        prop_assert_eq!((mm, nn), (m, n));
        let p = poset(&format!("rect:{m}x{n}"));
        prop_assert_eq!(&ics_to_motzkin(&p, &s).unwrap(), w);
    }

    #[test]
    fn random_walks_round_trip(h in 0usize..4, s in 0usize..4, half in 0usize..5, pick in any::<prop::sample::Index>()) {
        let len = h + s + 2 * half;
        let walks = enumerate_walks(h, s, len).unwrap();
        prop_assume!(!walks.is_empty());
        let w = &walks[pick.index(walks.len())];
        let (spec, set) = walk_to_ics(w).unwrap();
        let p = build_poset(&spec).unwrap();
        prop_assert_eq!(&ics_to_walk(&p, &set).unwrap(), w);
        prop_assert_eq!(walk_to_ics_in(&p, w).unwrap(), set);
    }
}
