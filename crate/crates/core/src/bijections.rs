//! Maps between interval-closed sets of rectangle-embedded posets and lattice
//! paths.
//!
//! Geometry: the element `(a, b)` of `[m] x [n]` sits at column
//! `i = a - b + n` and height `j = a + b - 1`. An order ideal `J` (always
//! taken together with the truncated bottom ranks) is drawn by its boundary
//! path, whose height at column `i` is `|i - n| + 2 * |J ∩ column i|`. The
//! elements strictly between two boundary paths form the difference of the
//! two ideals.

use thiserror::Error;

use crate::paths::{
    steps_from_heights, validate_motzkin, validate_walk, MotzkinStep, MotzkinWord,
    NestedPairBT, PathError, PathStep, QuarterWalk, WalkStep,
};
use crate::poset::{
    build_poset, filter_closure, ideal_closure, is_interval_closed, subset_stats, ElementSubset,
    FinitePoset, PosetError, PosetSpec, RectFrame,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("subset is not interval-closed")]
    NotIntervalClosed,
    #[error("{0} has no rectangle embedding")]
    NoFrame(String),
    #[error("path pair is not canonical")]
    NotCanonical,
    #[error("dimensions do not match: {0}")]
    Mismatch(String),
    #[error("input outside the domain of the map: {0}")]
    NotEligible(String),
}

type Result<T> = std::result::Result<T, BijectionError>;

fn frame_of(poset: &FinitePoset) -> Result<RectFrame> {
    poset.frame().ok_or_else(|| BijectionError::NoFrame(poset.spec().to_string()))
}

fn require_ics(poset: &FinitePoset, s: &ElementSubset) -> Result<()> {
    poset.check_subset(s)?;
    if !is_interval_closed(poset, s) {
        return Err(BijectionError::NotIntervalClosed);
    }
    Ok(())
}

/// Boundary heights of the ideal `ideal ∪ (truncated ranks)`.
fn ideal_heights(poset: &FinitePoset, frame: RectFrame, ideal: &ElementSubset) -> Vec<i64> {
    let (m, n) = (frame.m, frame.n);
    let mut counts = vec![0i64; m + n + 1];
    for a in 1..=m {
        for b in 1..=n {
            if a + b - 2 < frame.r {
                counts[a + n - b] += 1;
            }
        }
    }
    for x in ideal.iter() {
        let l = poset.label(x);
        counts[l[0] + n - l[1]] += 1;
    }
    (0..=m + n).map(|i| (i as i64 - n as i64).abs() + 2 * counts[i]).collect()
}

/// Labels of the rectangle elements strictly between two boundary paths.
fn labels_between(frame: RectFrame, lower: &[i64], upper: &[i64]) -> Result<Vec<Vec<usize>>> {
    let (m, n) = (frame.m as i64, frame.n as i64);
    let mut out = Vec::new();
    for i in 1..(m + n) {
        let iu = i as usize;
        let mut j = lower[iu] + 1;
        if (j - i - n - 1).rem_euclid(2) != 0 {
            j += 1;
        }
        while j < upper[iu] {
            let (a, b) = ((i - n + j + 1) / 2, (j + 1 - i + n) / 2);
            if a < 1 || b < 1 || a > m || b > n || !frame.contains(a as usize, b as usize) {
                return Err(BijectionError::Mismatch(format!("paths enclose ({a},{b}), which is not in the poset")));
            }
            out.push(vec![a as usize, b as usize]);
            j += 2;
        }
    }
    Ok(out)
}

/// Boundary heights of `P \ ∇(I)` (the lower path) and of `Δ(I)` (the upper path).
fn lower_upper_heights(poset: &FinitePoset, frame: RectFrame, s: &ElementSubset) -> (Vec<i64>, Vec<i64>) {
    let outside = filter_closure(poset, s).complement();
    (ideal_heights(poset, frame, &outside), ideal_heights(poset, frame, &ideal_closure(poset, s)))
}

/// The lower path `L`: boundary of the largest order ideal disjoint from `I`.
pub fn lower_path(poset: &FinitePoset, s: &ElementSubset) -> Result<Vec<PathStep>> {
    let frame = frame_of(poset)?;
    require_ics(poset, s)?;
    Ok(steps_from_heights(&lower_upper_heights(poset, frame, s).0))
}

/// The upper path `U`: boundary of the smallest order ideal containing `I`.
pub fn upper_path(poset: &FinitePoset, s: &ElementSubset) -> Result<Vec<PathStep>> {
    let frame = frame_of(poset)?;
    require_ics(poset, s)?;
    Ok(steps_from_heights(&lower_upper_heights(poset, frame, s).1))
}

/// Canonical `(B, T)` pair of an interval-closed set of a rectangle-embedded poset.
pub fn ics_to_nested_pair(poset: &FinitePoset, s: &ElementSubset) -> Result<NestedPairBT> {
    let frame = frame_of(poset)?;
    require_ics(poset, s)?;
    let (lower, upper) = lower_upper_heights(poset, frame, s);
    let top: Vec<i64> = lower.iter().zip(&upper).map(|(&l, &u)| l.max(u)).collect();
    Ok(NestedPairBT {
        m: frame.m,
        n: frame.n,
        r: frame.r,
        bottom: steps_from_heights(&lower),
        top: steps_from_heights(&top),
    })
}

/// The interval-closed set enclosed by a nested pair; works for non-canonical pairs too.
pub fn nested_pair_to_ics(poset: &FinitePoset, pair: &NestedPairBT) -> Result<ElementSubset> {
    let frame = frame_of(poset)?;
    if (frame.m, frame.n, frame.r) != (pair.m, pair.n, pair.r) {
        return Err(BijectionError::Mismatch(format!(
            "pair is for ({}, {}, {}), poset is {}",
            pair.m,
            pair.n,
            pair.r,
            poset.spec()
        )));
    }
    pair.validate()?;
    let labels = labels_between(frame, &pair.bottom_heights(), &pair.top_heights())?;
    Ok(poset.subset_from_labels(labels.iter().map(|l| l.as_slice()))?)
}

pub fn nested_pair_to_motzkin(pair: &NestedPairBT) -> Result<MotzkinWord> {
    if pair.r != 0 {
        return Err(BijectionError::NotEligible("Motzkin words encode untruncated rectangles only".into()));
    }
    pair.validate()?;
    if !pair.is_canonical() {
        return Err(BijectionError::NotCanonical);
    }
    let steps = pair
        .bottom
        .iter()
        .zip(&pair.top)
        .map(|(b, t)| match (b, t) {
            (PathStep::D, PathStep::U) => MotzkinStep::U,
            (PathStep::U, PathStep::D) => MotzkinStep::D,
            (PathStep::U, PathStep::U) => MotzkinStep::H1,
            (PathStep::D, PathStep::D) => MotzkinStep::H2,
        })
        .collect();
    Ok(MotzkinWord::new(steps))
}

pub fn motzkin_to_nested_pair(word: &MotzkinWord) -> Result<NestedPairBT> {
    if let Some(v) = validate_motzkin(word).violation {
        return Err(PathError::Invalid(v).into());
    }
    let (bottom, top) = word
        .steps
        .iter()
        .map(|s| match s {
            MotzkinStep::U => (PathStep::D, PathStep::U),
            MotzkinStep::D => (PathStep::U, PathStep::D),
            MotzkinStep::H1 => (PathStep::U, PathStep::U),
            MotzkinStep::H2 => (PathStep::D, PathStep::D),
        })
        .unzip();
    Ok(NestedPairBT { m: word.m(), n: word.n(), r: 0, bottom, top })
}

/// Motzkin word of an interval-closed set of an untruncated rectangle.
pub fn ics_to_motzkin(poset: &FinitePoset, s: &ElementSubset) -> Result<MotzkinWord> {
    nested_pair_to_motzkin(&ics_to_nested_pair(poset, s)?)
}

/// Interval-closed set of `[m] x [n]` encoded by a valid word, as `(m, n, I)`.
pub fn motzkin_to_ics(word: &MotzkinWord) -> Result<(usize, usize, ElementSubset)> {
    let (m, n) = (word.m(), word.n());
    let poset = build_poset(&PosetSpec::ChainProduct { m, n })?;
    Ok((m, n, motzkin_to_ics_in(&poset, word)?))
}

/// Like [`motzkin_to_ics`] but indexed by an already built poset with matching frame.
pub fn motzkin_to_ics_in(poset: &FinitePoset, word: &MotzkinWord) -> Result<ElementSubset> {
    nested_pair_to_ics(poset, &motzkin_to_nested_pair(word)?)
}

/// Quarter-plane walk of an interval-closed set of a truncated rectangle or type-A root poset.
pub fn ics_to_walk(poset: &FinitePoset, s: &ElementSubset) -> Result<QuarterWalk> {
    let pair = ics_to_nested_pair(poset, s)?;
    let steps = pair
        .bottom
        .iter()
        .zip(&pair.top)
        .map(|(b, t)| match (b, t) {
            (PathStep::D, PathStep::U) => WalkStep::NW,
            (PathStep::U, PathStep::D) => WalkStep::SE,
            (PathStep::U, PathStep::U) => WalkStep::E,
            (PathStep::D, PathStep::D) => WalkStep::W,
        })
        .collect();
    Ok(QuarterWalk::new(pair.n - pair.r, steps))
}

/// Rectangle dimensions `(m, n, r)` read off a walk's start, end and length.
/// `r` may come out negative, in which case the walk never nears the y-axis
/// and describes an untruncated rectangle.
pub fn walk_dimensions(walk: &QuarterWalk) -> Result<(usize, usize, i64)> {
    let verdict = validate_walk(walk);
    if let Some(v) = verdict.violation {
        return Err(PathError::Invalid(v).into());
    }
    let (s, y_end) = verdict.endpoint;
    if y_end != 0 {
        return Err(PathError::Invalid(format!("walk ends at height {y_end}, not on the x-axis")).into());
    }
    let (h, len) = (walk.start_x as i64, walk.len() as i64);
    if (len + s - h) % 2 != 0 {
        return Err(PathError::Invalid("start, end and length have inconsistent parity".into()).into());
    }
    Ok((((len + s - h) / 2) as usize, ((len - s + h) / 2) as usize, (len - s - h) / 2))
}

fn walk_pair(walk: &QuarterWalk) -> Result<NestedPairBT> {
    let (m, n, r) = walk_dimensions(walk)?;
    let pos = walk.positions();
    let bottom: Vec<i64> = pos.iter().map(|p| p.0 + r).collect();
    let top: Vec<i64> = pos.iter().map(|p| p.0 + r + 2 * p.1).collect();
    Ok(NestedPairBT {
        m,
        n,
        r: r.max(0) as usize,
        bottom: steps_from_heights(&bottom),
        top: steps_from_heights(&top),
    })
}

/// Interval-closed set encoded by a valid walk, on the truncated rectangle it determines.
pub fn walk_to_ics(walk: &QuarterWalk) -> Result<(PosetSpec, ElementSubset)> {
    let (m, n, r) = walk_dimensions(walk)?;
    let spec = PosetSpec::truncated(m, n, r)?;
    let poset = build_poset(&spec)?;
    let s = nested_pair_to_ics(&poset, &walk_pair(walk)?)?;
    Ok((spec, s))
}

/// Like [`walk_to_ics`] but indexed by an already built poset, e.g. a type-A root poset.
pub fn walk_to_ics_in(poset: &FinitePoset, walk: &QuarterWalk) -> Result<ElementSubset> {
    nested_pair_to_ics(poset, &walk_pair(walk)?)
}

/// Partition of a poset relative to an interval-closed set `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClassification {
    pub in_i: ElementSubset,
    /// `Δ(I) \ I`
    pub below_only: ElementSubset,
    /// `∇(I) \ I`
    pub above_only: ElementSubset,
    pub incomparable: ElementSubset,
}

pub fn classify_elements(poset: &FinitePoset, s: &ElementSubset) -> Result<ElementClassification> {
    require_ics(poset, s)?;
    let down = ideal_closure(poset, s);
    let up = filter_closure(poset, s);
    Ok(ElementClassification {
        in_i: s.clone(),
        below_only: down.difference(s),
        above_only: up.difference(s),
        incomparable: down.union(&up).complement(),
    })
}

/// Whether the Motzkin word of `I` touches height 0 only at its two endpoints.
pub fn is_full_ics(poset: &FinitePoset, s: &ElementSubset) -> Result<bool> {
    let word = ics_to_motzkin(poset, s)?;
    let heights = word.heights();
    Ok(!word.is_empty() && heights[1..heights.len() - 1].iter().all(|&h| h > 0))
}

/// The map from interval-closed sets of `[m] x [n]` meeting every first
/// coordinate to full interval-closed sets of `[m+1] x [n]`: prepend an
/// up-step to `U` and append one to `L`.
#[derive(Clone, Debug)]
pub struct ShiftMap {
    source: FinitePoset,
    target: FinitePoset,
}

impl ShiftMap {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        Ok(Self {
            source: build_poset(&PosetSpec::ChainProduct { m, n })?,
            target: build_poset(&PosetSpec::ChainProduct { m: m + 1, n })?,
        })
    }

    /// `[m] x [n]`.
    pub fn source(&self) -> &FinitePoset {
        &self.source
    }

    /// `[m+1] x [n]`.
    pub fn target(&self) -> &FinitePoset {
        &self.target
    }

    pub fn forward(&self, s: &ElementSubset) -> Result<ElementSubset> {
        require_ics(&self.source, s)?;
        if subset_stats(&self.source, s).hits_all_files != Some(true) {
            return Err(BijectionError::NotEligible("set misses some first coordinate".into()));
        }
        let frame = frame_of(&self.source)?;
        let (mut lower, upper) = lower_upper_heights(&self.source, frame, s);
        let mut shifted_upper = vec![frame.n as i64];
        shifted_upper.extend(upper.iter().map(|h| h + 1));
        lower.push(lower[lower.len() - 1] + 1);
        let labels = labels_between(frame_of(&self.target)?, &lower, &shifted_upper)?;
        Ok(self.target.subset_from_labels(labels.iter().map(|l| l.as_slice()))?)
    }

    pub fn inverse(&self, s: &ElementSubset) -> Result<ElementSubset> {
        if !is_full_ics(&self.target, s)? {
            return Err(BijectionError::NotEligible("set is not full".into()));
        }
        let (mut lower, upper) = lower_upper_heights(&self.target, frame_of(&self.target)?, s);
        lower.pop();
        let upper: Vec<i64> = upper[1..].iter().map(|h| h - 1).collect();
        let labels = labels_between(frame_of(&self.source)?, &lower, &upper)?;
        Ok(self.source.subset_from_labels(labels.iter().map(|l| l.as_slice()))?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{count_ics, enumerate_ics, EnumerationConfig};

    fn poset(text: &str) -> FinitePoset {
        build_poset(&text.parse::<PosetSpec>().unwrap()).unwrap()
    }

    fn subset(p: &FinitePoset, labels: &[[usize; 2]]) -> ElementSubset {
        p.subset_from_labels(labels.iter().map(|l| &l[..])).unwrap()
    }

    fn ud(text: &str) -> Vec<PathStep> {
        text.split_whitespace()
            .map(|t| if t == "u" { PathStep::U } else { PathStep::D })
            .collect()
    }

    #[test]
    fn empty_set_gives_coinciding_canonical_paths() {
        let p = poset("rect:3x2");
        let pair = ics_to_nested_pair(&p, &ElementSubset::empty(6)).unwrap();
        assert_eq!(pair.bottom, ud("u u u d d"));
        assert_eq!(pair.top, pair.bottom);
        assert_eq!(ics_to_motzkin(&p, &ElementSubset::empty(6)).unwrap().to_string(), "1 1 1 2 2");
    }

    #[test]
    fn singleton_rectangle() {
        let p = poset("rect:1x1");
        let s = ElementSubset::full(1);
        let pair = ics_to_nested_pair(&p, &s).unwrap();
        assert_eq!((pair.bottom.clone(), pair.top.clone()), (ud("d u"), ud("u d")));
        assert_eq!(nested_pair_to_motzkin(&pair).unwrap().to_string(), "U D");
        assert!(is_full_ics(&p, &s).unwrap());
        assert!(!is_full_ics(&p, &ElementSubset::empty(1)).unwrap());
    }

    #[test]
    fn large_rectangle_example() {
        let p = poset("rect:13x14");
        let s = subset(
            &p,
            &[
                [1, 13], [2, 13], [3, 13], [2, 12], [3, 12], [2, 11], [3, 11], [6, 9], [7, 9], [8, 9],
                [7, 8], [8, 8], [7, 7], [8, 7], [7, 6], [8, 6], [9, 6], [11, 4], [11, 3], [11, 2],
            ],
        );
        let pair = ics_to_nested_pair(&p, &s).unwrap();
        assert_eq!(pair.top, ud("d u u u d d d u u d u u u d d d u d u d u d d d u u d"));
        assert_eq!(pair.bottom, ud("d d u d d u u u u d d u d d d u u u u d d d d u u u d"));
        let word = nested_pair_to_motzkin(&pair).unwrap();
        assert_eq!(word.to_string(), "2 U 1 U 2 D D 1 1 2 U 1 U 2 2 D 1 D 1 2 U 2 2 D 1 1 2");
        let (m, n, back) = motzkin_to_ics(&word).unwrap();
        assert_eq!((m, n), (13, 14));
        assert_eq!(back, s);
    }

    #[test]
    fn root_poset_walk_example() {
        let p = poset("rootA:5");
        let s = subset(&p, &[[3, 5], [3, 6], [6, 3]]);
        let pair = ics_to_nested_pair(&p, &s).unwrap();
        assert_eq!(pair.top, ud("u u u d d u u d u d d d"));
        assert_eq!(pair.bottom, ud("u u d d u u u d d u d d"));
        let walk = ics_to_walk(&p, &s).unwrap();
        assert_eq!(walk.to_string(), "e e nw w se e e w nw se w w");
        assert_eq!(walk_to_ics_in(&p, &walk).unwrap(), s);
    }

    #[test]
    fn truncated_walk_example() {
        let p = poset("trunc:4x5:1");
        let s = subset(
            &p,
            &[[1, 2], [1, 3], [2, 2], [3, 1], [1, 4], [2, 3], [3, 2], [4, 1], [1, 5], [2, 4], [4, 2]],
        );
        let pair = ics_to_nested_pair(&p, &s).unwrap();
        assert_eq!(pair.top, ud("u d u d d u u d d"));
        assert_eq!(pair.bottom, ud("d d d d u u d u u"));
        let walk = ics_to_walk(&p, &s).unwrap();
        assert_eq!(walk.start_x, 4);
        assert_eq!(walk.to_string(), "nw w nw w se e nw se se");
        let (spec, back) = walk_to_ics(&walk).unwrap();
        assert_eq!(spec, PosetSpec::TruncatedRectangle { m: 4, n: 5, r: 1 });
        assert_eq!(back, s);
    }

    #[test]
    fn empty_set_in_root_poset_walk() {
        let p = poset("rootA:3");
        let walk = ics_to_walk(&p, &ElementSubset::empty(p.len())).unwrap();
        assert_eq!(walk.to_string(), "e e e e w w w w");
    }

    #[test]
    fn negative_depth_walk_is_a_plain_rectangle() {
        let walk = QuarterWalk::parse(2, "nw se").unwrap();
        let (spec, s) = walk_to_ics(&walk).unwrap();
        assert_eq!(spec, PosetSpec::TruncatedRectangle { m: 1, n: 1, r: 0 });
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn classification_single_incomparable() {
        let p = poset("rect:6x7");
        let s = subset(&p, &[[6, 1], [5, 2], [4, 2], [4, 3], [1, 6], [2, 6], [2, 5]]);
        let c = classify_elements(&p, &s).unwrap();
        assert_eq!(p.subset_labels(&c.incomparable), vec![vec![3, 4]]);
        let total = c.in_i.len() + c.below_only.len() + c.above_only.len() + c.incomparable.len();
        assert_eq!(total, p.len());
    }

    #[test]
    fn rejects_non_interval_closed() {
        let p = poset("rect:2x2");
        let s = subset(&p, &[[1, 1], [2, 2]]);
        assert_eq!(ics_to_nested_pair(&p, &s), Err(BijectionError::NotIntervalClosed));
        assert!(matches!(ics_to_walk(&poset("minB:2"), &ElementSubset::empty(3)), Err(BijectionError::NoFrame(_))));
    }

    #[test]
    fn shift_map_small_cases() {
        let map = ShiftMap::new(1, 1).unwrap();
        let image = map.forward(&ElementSubset::full(1)).unwrap();
        assert!(is_full_ics(map.target(), &image).unwrap());
        assert_eq!(map.inverse(&image).unwrap(), ElementSubset::full(1));

        let map = ShiftMap::new(2, 2).unwrap();
        let cfg = EnumerationConfig::default();
        let eligible: Vec<_> = enumerate_ics(map.source(), &cfg, None)
            .unwrap()
            .filter(|s| subset_stats(map.source(), s).hits_all_files == Some(true))
            .collect();
        assert_eq!(eligible.len(), 6);
        let mut images: Vec<_> = eligible.iter().map(|s| map.forward(s).unwrap()).collect();
        images.sort();
        images.dedup();
        let full: Vec<_> = enumerate_ics(map.target(), &cfg, None)
            .unwrap()
            .filter(|s| is_full_ics(map.target(), s).unwrap())
            .collect();
        assert_eq!(images, full);
        assert!(map.forward(&ElementSubset::empty(4)).is_err());
    }

    #[test]
    fn shift_map_figure_example() {
        let map = ShiftMap::new(3, 7).unwrap();
        let s = subset(map.source(), &[[1, 6], [1, 5], [2, 4], [3, 2], [3, 1]]);
        let image = map.forward(&s).unwrap();
        let expected = subset(
            map.target(),
            &[
                [1, 6], [1, 5], [2, 4], [3, 2], [3, 1], [1, 7], [2, 6], [2, 5], [3, 4], [3, 3], [4, 2], [4, 1],
            ],
        );
        assert_eq!(image, expected);
    }

    #[test]
    fn two_by_two_images_are_all_words() {
        let p = poset("rect:2x2");
        let cfg = EnumerationConfig::default();
        let mut words: Vec<_> = enumerate_ics(&p, &cfg, None)
            .unwrap()
            .map(|s| ics_to_motzkin(&p, &s).unwrap())
            .collect();
        words.sort();
        assert_eq!(words, crate::paths::enumerate_motzkin(2, 2).unwrap());
        assert_eq!(count_ics(&p, &cfg).unwrap(), 13u32.into());
    }
}
