//! Depth-first enumeration of interval-closed sets.
//!
//! Elements are decided from the highest index down. Because the element
//! numbering is a linear extension, every element strictly between a newly
//! included element `e` and an already included `y > e` has already been
//! decided, so a branch is cut exactly when `up(e) ∩ Δ(included) ∩ excluded`
//! is non-empty. Excluding every remaining element always completes a valid
//! set, so the search never reaches a dead leaf.

use num_bigint::BigUint;

use super::{ElementSubset, FinitePoset, Involution, PosetError};

/// Enumeration never goes past this many elements (bit masks are `u64`).
pub const HARD_ELEMENT_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Largest poset the oracle accepts.
    pub max_elements: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self { max_elements: 30 }
    }
}

impl EnumerationConfig {
    pub fn with_max_elements(max_elements: usize) -> Self {
        Self { max_elements }
    }

    fn check(&self, poset: &FinitePoset) -> Result<(), PosetError> {
        let bound = self.max_elements.min(HARD_ELEMENT_LIMIT);
        if poset.len() > bound {
            return Err(PosetError::ScaleExceeded { size: poset.len(), bound });
        }
        Ok(())
    }
}

struct Masks {
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Masks {
    fn new(poset: &FinitePoset) -> Self {
        Self {
            up: (0..poset.len()).map(|x| poset.up_set(x).to_mask()).collect(),
            down: (0..poset.len()).map(|x| poset.down_set(x).to_mask()).collect(),
        }
    }
}

#[derive(Clone, Copy)]
struct Frame {
    undecided: usize,
    included: u64,
    excluded: u64,
    below: u64,
}

/// Lazy stream of interval-closed sets in ascending encoding order.
pub struct IcsIter {
    universe: usize,
    masks: Masks,
    stack: Vec<Frame>,
    remaining: Option<usize>,
}

impl Iterator for IcsIter {
    type Item = ElementSubset;

    fn next(&mut self) -> Option<ElementSubset> {
        if self.remaining == Some(0) {
            return None;
        }
        while let Some(f) = self.stack.pop() {
            if f.undecided == 0 {
                if let Some(r) = self.remaining.as_mut() {
                    *r -= 1;
                }
                return Some(ElementSubset::from_mask(self.universe, f.included));
            }
            let e = f.undecided - 1;
            let bit = 1u64 << e;
            if self.masks.up[e] & f.below & f.excluded == 0 {
                self.stack.push(Frame {
                    undecided: e,
                    included: f.included | bit,
                    excluded: f.excluded,
                    below: f.below | self.masks.down[e],
                });
            }
            self.stack.push(Frame { undecided: e, excluded: f.excluded | bit, ..f });
        }
        None
    }
}

/// Streams every interval-closed set of `poset`, optionally stopping after `limit` sets.
pub fn enumerate_ics(
    poset: &FinitePoset,
    config: &EnumerationConfig,
    limit: Option<usize>,
) -> Result<IcsIter, PosetError> {
    config.check(poset)?;
    Ok(IcsIter {
        universe: poset.len(),
        masks: Masks::new(poset),
        stack: vec![Frame { undecided: poset.len(), included: 0, excluded: 0, below: 0 }],
        remaining: limit,
    })
}

/// Number of interval-closed sets of `poset`.
pub fn count_ics(poset: &FinitePoset, config: &EnumerationConfig) -> Result<BigUint, PosetError> {
    config.check(poset)?;
    let masks = Masks::new(poset);
    fn go(masks: &Masks, e: usize, excluded: u64, below: u64) -> u128 {
        if e == 0 {
            return 1;
        }
        let e = e - 1;
        let mut total = go(masks, e, excluded | 1 << e, below);
        if masks.up[e] & below & excluded == 0 {
            total += go(masks, e, excluded, below | masks.down[e]);
        }
        total
    }
    Ok(BigUint::from(go(&masks, poset.len(), 0, 0)))
}

/// Number of interval-closed sets fixed by the involution `sigma`.
pub fn count_symmetric_ics(
    poset: &FinitePoset,
    sigma: &Involution,
    config: &EnumerationConfig,
) -> Result<BigUint, PosetError> {
    config.check(poset)?;
    if sigma.images().len() != poset.len() {
        return Err(PosetError::NotAutomorphism("involution of a different poset".into()));
    }
    let masks = Masks::new(poset);
    fn go(masks: &Masks, sigma: &[usize], e: usize, included: u64, excluded: u64, below: u64) -> u128 {
        if e == 0 {
            return 1;
        }
        let e = e - 1;
        let bit = 1u64 << e;
        let partner = sigma[e];
        // a partner above e was decided already and forces the same choice
        let (may_exclude, may_include) = if partner > e {
            let inc = included >> partner & 1 == 1;
            (!inc, inc)
        } else {
            (true, true)
        };
        let mut total = 0;
        if may_exclude {
            total += go(masks, sigma, e, included, excluded | bit, below);
        }
        if may_include && masks.up[e] & below & excluded == 0 {
            total += go(masks, sigma, e, included | bit, excluded, below | masks.down[e]);
        }
        total
    }
    Ok(BigUint::from(go(&masks, sigma.images(), poset.len(), 0, 0, 0)))
}
