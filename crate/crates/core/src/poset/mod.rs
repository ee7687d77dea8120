//! Finite posets from the supported families, the interval-closed predicate,
//! order closures, subset statistics and the brute-force enumerator.

mod enumerate;
mod spec;
mod subset;

use std::collections::HashMap;

use thiserror::Error;

pub use enumerate::{
    count_ics, count_symmetric_ics, enumerate_ics, EnumerationConfig, IcsIter, HARD_ELEMENT_LIMIT,
};
pub use spec::PosetSpec;
pub use subset::ElementSubset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid poset parameters: {0}")]
    InvalidSpec(String),
    #[error("oracle scale exceeded: poset has {size} elements, bound is {bound}")]
    ScaleExceeded { size: usize, bound: usize },
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("operation not supported for {0}")]
    Unsupported(String),
    #[error("subset is not valid for this poset: {0}")]
    InvalidSubset(String),
}

/// Coordinates of a rectangle-embedded poset: `[m] x [n]` with ranks below `r` removed.
///
/// Chain products, truncated rectangles and type-A root posets all carry one;
/// the lattice-path bijections are phrased in terms of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RectFrame {
    pub m: usize,
    pub n: usize,
    pub r: usize,
}

impl RectFrame {
    pub fn contains(&self, a: usize, b: usize) -> bool {
        (1..=self.m).contains(&a) && (1..=self.n).contains(&b) && a + b - 2 >= self.r
    }
}

/// A finite poset with its order relation precomputed as up-sets and down-sets.
///
/// Element indices follow the builder's numbering (row-major by label), which
/// is always a linear extension: `x <= y` implies `x <= y` as indices.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    spec: PosetSpec,
    labels: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    up: Vec<ElementSubset>,
    down: Vec<ElementSubset>,
    covers: Vec<(usize, usize)>,
    frame: Option<RectFrame>,
}

/// Builds the poset described by `spec`.
pub fn build_poset(spec: &PosetSpec) -> Result<FinitePoset, PosetError> {
    spec.validate()?;
    let componentwise = |x: &[usize], y: &[usize]| x.iter().zip(y).all(|(a, b)| a <= b);
    let grid = |m: usize, n: usize| -> Vec<Vec<usize>> {
        (1..=m).flat_map(|a| (1..=n).map(move |b| vec![a, b])).collect()
    };
    let poset = match *spec {
        PosetSpec::ChainProduct { m, n } => FinitePoset::from_order(
            spec.clone(),
            grid(m, n),
            componentwise,
            Some(RectFrame { m, n, r: 0 }),
        ),
        PosetSpec::TruncatedRectangle { m, n, r } => {
            let frame = RectFrame { m, n, r };
            let labels = grid(m, n)
                .into_iter()
                .filter(|l| frame.contains(l[0], l[1]))
                .collect();
            FinitePoset::from_order(spec.clone(), labels, componentwise, Some(frame))
        }
        PosetSpec::TypeARoot { k } => {
            let frame = RectFrame { m: k + 1, n: k + 1, r: k + 1 };
            let labels = grid(k + 1, k + 1)
                .into_iter()
                .filter(|l| frame.contains(l[0], l[1]))
                .collect();
            FinitePoset::from_order(spec.clone(), labels, componentwise, Some(frame))
        }
        PosetSpec::TypeBMinuscule { n } => {
            let labels = grid(n, n).into_iter().filter(|l| l[0] <= l[1]).collect();
            FinitePoset::from_order(spec.clone(), labels, componentwise, None)
        }
        PosetSpec::TypeBRoot { n } => {
            let labels = grid(2 * n, 2 * n)
                .into_iter()
                .filter(|l| l[0] <= l[1] && l[0] + l[1] >= 2 * n + 2)
                .collect();
            FinitePoset::from_order(spec.clone(), labels, componentwise, None)
        }
        PosetSpec::OrdinalSumAntichains { ref parts } => {
            let labels = parts
                .iter()
                .enumerate()
                .flat_map(|(level, &size)| (1..=size).map(move |j| vec![level + 1, j]))
                .collect();
            FinitePoset::from_order(
                spec.clone(),
                labels,
                |x, y| x == y || x[0] < y[0],
                None,
            )
        }
        PosetSpec::ChainProduct3 { l, m, n } => {
            let labels = (1..=l)
                .flat_map(|a| (1..=m).flat_map(move |b| (1..=n).map(move |c| vec![a, b, c])))
                .collect();
            FinitePoset::from_order(spec.clone(), labels, componentwise, None)
        }
    };
    Ok(poset)
}

impl FinitePoset {
    fn from_order(
        spec: PosetSpec,
        labels: Vec<Vec<usize>>,
        leq: impl Fn(&[usize], &[usize]) -> bool,
        frame: Option<RectFrame>,
    ) -> Self {
        let n = labels.len();
        let mut up = vec![ElementSubset::empty(n); n];
        let mut down = vec![ElementSubset::empty(n); n];
        for x in 0..n {
            for y in 0..n {
                if leq(&labels[x], &labels[y]) {
                    debug_assert!(x <= y, "element numbering is not a linear extension");
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            for y in up[x].iter() {
                if y != x && up[x].intersection(&down[y]).len() == 2 {
                    covers.push((x, y));
                }
            }
        }
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self { spec, labels, index, up, down, covers, frame }
    }

    pub fn spec(&self) -> &PosetSpec {
        &self.spec
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// 1-based coordinate label of an element.
    pub fn label(&self, x: usize) -> &[usize] {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn index_of(&self, label: &[usize]) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn frame(&self) -> Option<RectFrame> {
        self.frame
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{z : x <= z}`.
    pub fn up_set(&self, x: usize) -> &ElementSubset {
        &self.up[x]
    }

    /// `{z : z <= x}`.
    pub fn down_set(&self, x: usize) -> &ElementSubset {
        &self.down[x]
    }

    /// `{z : x <= z <= y}`; empty when `x` is not below `y`.
    pub fn interval(&self, x: usize, y: usize) -> ElementSubset {
        self.up[x].intersection(&self.down[y])
    }

    /// Cover relations `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn minimal_elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&x| self.down[x].len() == 1)
    }

    pub fn subset_from_labels<'a, I>(&self, labels: I) -> Result<ElementSubset, PosetError>
    where
        I: IntoIterator<Item = &'a [usize]>,
    {
        let mut s = ElementSubset::empty(self.len());
        for l in labels {
            let i = self.index_of(l).ok_or_else(|| {
                PosetError::InvalidSubset(format!("{l:?} is not an element of {}", self.spec))
            })?;
            s.insert(i);
        }
        Ok(s)
    }

    pub fn subset_labels(&self, s: &ElementSubset) -> Vec<Vec<usize>> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    pub(crate) fn check_subset(&self, s: &ElementSubset) -> Result<(), PosetError> {
        if s.universe() != self.len() {
            return Err(PosetError::InvalidSubset(format!(
                "subset over {} elements used with a poset of {} elements",
                s.universe(),
                self.len()
            )));
        }
        Ok(())
    }

    /// Checks reflexivity, antisymmetry and transitivity of the stored relation directly.
    pub fn check_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| self.leq(x, x))
            && (0..n).all(|x| (0..n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))))
            && (0..n).all(|x| {
                self.up[x]
                    .iter()
                    .all(|y| self.up[y].is_subset(&self.up[x]))
            })
    }
}

/// True iff `s` contains every `z` with `x < z < y` for `x, y` in `s`.
pub fn is_interval_closed(poset: &FinitePoset, s: &ElementSubset) -> bool {
    find_violation(poset, s).is_none()
}

/// A triple `(x, z, y)` with `x, y` in `s`, `x < z < y` and `z` outside `s`, if one exists.
pub fn find_violation(poset: &FinitePoset, s: &ElementSubset) -> Option<(usize, usize, usize)> {
    for x in s.iter() {
        for y in poset.up[x].intersection(s).iter() {
            if let Some(z) = poset.interval(x, y).difference(s).iter().next() {
                return Some((x, z, y));
            }
        }
    }
    None
}

/// Smallest order ideal containing `s`.
pub fn ideal_closure(poset: &FinitePoset, s: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::empty(poset.len());
    for x in s.iter() {
        out.union_with(&poset.down[x]);
    }
    out
}

/// Smallest order filter containing `s`.
pub fn filter_closure(poset: &FinitePoset, s: &ElementSubset) -> ElementSubset {
    let mut out = ElementSubset::empty(poset.len());
    for x in s.iter() {
        out.union_with(&poset.up[x]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SubsetStats {
    pub cardinality: usize,
    /// Connected components of the cover graph restricted to the subset.
    pub component_count: usize,
    /// Elements comparable with no member.
    pub incomparable_count: usize,
    /// Poset-minimal elements that are members.
    pub minimal_in_subset: usize,
    /// Chain products only: whether every first coordinate `a` occurs among the members.
    pub hits_all_files: Option<bool>,
}

pub fn subset_stats(poset: &FinitePoset, s: &ElementSubset) -> SubsetStats {
    let n = poset.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = s.len();
    for &(x, y) in poset.covers() {
        if s.contains(x) && s.contains(y) {
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            if rx != ry {
                parent[rx] = ry;
                components -= 1;
            }
        }
    }
    let comparable = ideal_closure(poset, s).union(&filter_closure(poset, s));
    let hits_all_files = match poset.spec() {
        PosetSpec::ChainProduct { m, .. } => {
            let mut seen = vec![false; *m];
            for x in s.iter() {
                seen[poset.label(x)[0] - 1] = true;
            }
            Some(seen.into_iter().all(|b| b))
        }
        _ => None,
    };
    SubsetStats {
        cardinality: s.len(),
        component_count: components,
        incomparable_count: n - comparable.len(),
        minimal_in_subset: poset.minimal_elements().filter(|&x| s.contains(x)).count(),
        hits_all_files,
    }
}

/// An order-preserving involution of a poset's elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    images: Vec<usize>,
}

impl Involution {
    /// Validates that `images` is an automorphism of `poset` squaring to the identity.
    pub fn new(poset: &FinitePoset, images: Vec<usize>) -> Result<Self, PosetError> {
        let n = poset.len();
        if images.len() != n || images.iter().any(|&i| i >= n) {
            return Err(PosetError::NotAutomorphism("not a map on the element set".into()));
        }
        if let Some(x) = (0..n).find(|&x| images[images[x]] != x) {
            return Err(PosetError::NotAutomorphism(format!("σ(σ({x})) != {x}")));
        }
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) != poset.leq(images[x], images[y]) {
                    return Err(PosetError::NotAutomorphism(format!(
                        "order between {:?} and {:?} is not preserved",
                        poset.label(x),
                        poset.label(y)
                    )));
                }
            }
        }
        Ok(Self { images })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply_to_subset(&self, s: &ElementSubset) -> ElementSubset {
        ElementSubset::from_indices(s.universe(), s.iter().map(|x| self.images[x]))
    }
}

/// The left-right mirror of the Hasse diagram of `[n] x [n]` or of a type-A root poset:
/// `(a, b) -> (b, a)`.
pub fn vertical_involution(poset: &FinitePoset) -> Result<Involution, PosetError> {
    match poset.spec() {
        PosetSpec::ChainProduct { m, n } if m == n => {}
        PosetSpec::TypeARoot { .. } => {}
        other => return Err(PosetError::Unsupported(format!("vertical involution of {other}"))),
    }
    let images = (0..poset.len())
        .map(|x| {
            let l = poset.label(x);
            poset.index_of(&[l[1], l[0]]).expect("mirror image is an element")
        })
        .collect();
    Involution::new(poset, images)
}
