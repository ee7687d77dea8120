use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// A Laurent polynomial with integer coefficients in a fixed number of variables.
///
/// Used for the per-`z` coefficients of the walk generating functions, where
/// multiplication by `1/x` or `x/y` temporarily produces negative exponents.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoeffPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl CoeffPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(exp: Vec<i64>, c: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, exp: Vec<i64>, c: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent of the wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplication by the monomial with exponent `shift`.
    pub fn shifted(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    /// Substitution of 0 for variable `var`.
    pub fn at_zero(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] == 0)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    /// Terms whose exponent in `var` is at most `max`.
    pub fn truncated(&self, var: usize, max: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[var] <= max)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self { nvars: self.nvars, terms }
    }

    /// Sum of all coefficients, i.e. the value with every variable set to 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn first_negative_exponent(&self) -> Option<&Vec<i64>> {
        self.terms.keys().find(|e| e.iter().any(|&k| k < 0))
    }

    pub fn first_negative_coefficient(&self) -> Option<&Vec<i64>> {
        self.terms.iter().find(|(_, c)| c.is_negative()).map(|(e, _)| e)
    }
}

impl Add for &CoeffPolynomial {
    type Output = CoeffPolynomial;

    fn add(self, rhs: &CoeffPolynomial) -> CoeffPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CoeffPolynomial {
    type Output = CoeffPolynomial;

    fn sub(self, rhs: &CoeffPolynomial) -> CoeffPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}
