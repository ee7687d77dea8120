use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SeriesJson {
    pub vars: Vec<Var>,
    pub terms: Vec<TermJson>,
}

/// One coefficient, with numerator and denominator as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TermJson {
    pub exp: Vec<usize>,
    pub num: String,
    pub den: String,
}

/// Multivariate power series over the rationals, truncated to a box:
/// the exponent of each variable is kept up to its own order.
///
/// Coefficients are stored densely in row-major order of the exponent tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: Vec<Var>,
    orders: Vec<usize>,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(vars: &[Var], orders: &[usize]) -> Self {
        assert_eq!(vars.len(), orders.len(), "one truncation order per variable");
        let len = orders.iter().map(|o| o + 1).product();
        Self { vars: vars.to_vec(), orders: orders.to_vec(), coeffs: vec![BigRational::zero(); len] }
    }

    pub fn constant(vars: &[Var], orders: &[usize], c: BigRational) -> Self {
        let mut s = Self::zero(vars, orders);
        s.coeffs[0] = c;
        s
    }

    pub fn one(vars: &[Var], orders: &[usize]) -> Self {
        Self::constant(vars, orders, BigRational::one())
    }

    /// `c * prod(vars^exp)`, or zero if the monomial lies outside the box.
    pub fn monomial(vars: &[Var], orders: &[usize], exp: &[usize], c: BigRational) -> Self {
        let mut s = Self::zero(vars, orders);
        if let Some(i) = s.index(exp) {
            s.coeffs[i] = c;
        }
        s
    }

    /// The series consisting of the single variable `v`; panics if `v` is not a variable.
    pub fn var(vars: &[Var], orders: &[usize], v: Var) -> Self {
        let k = vars.iter().position(|&w| w == v).expect("variable not in series");
        let mut exp = vec![0; vars.len()];
        exp[k] = 1;
        Self::monomial(vars, orders, &exp, BigRational::one())
    }

    /// Same shape as `self` with another value, convenient for building formulas.
    pub fn like(&self, c: i64) -> Self {
        Self::constant(&self.vars, &self.orders, BigRational::from_integer(c.into()))
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    fn index(&self, exp: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for (e, o) in exp.iter().zip(&self.orders) {
            if e > o {
                return None;
            }
            idx = idx * (o + 1) + e;
        }
        Some(idx)
    }

    fn exponent(&self, mut idx: usize) -> Vec<usize> {
        let mut exp = vec![0; self.orders.len()];
        for k in (0..self.orders.len()).rev() {
            exp[k] = idx % (self.orders[k] + 1);
            idx /= self.orders[k] + 1;
        }
        exp
    }

    /// Coefficient of `prod(vars^exp)`; errors if the exponent exceeds the truncation.
    pub fn coeff(&self, exp: &[usize]) -> Result<&BigRational, SeriesError> {
        if exp.len() != self.vars.len() {
            return Err(SeriesError::Shape(format!("expected {} exponents", self.vars.len())));
        }
        self.index(exp)
            .map(|i| &self.coeffs[i])
            .ok_or_else(|| SeriesError::OrderExceeded { requested: exp.to_vec(), orders: self.orders.clone() })
    }

    /// Coefficient as an integer; errors if it is not one.
    pub fn integer_coeff(&self, exp: &[usize]) -> Result<BigInt, SeriesError> {
        let c = self.coeff(exp)?;
        if !c.is_integer() {
            return Err(SeriesError::NonIntegral(format!("coefficient {c} at {exp:?}")));
        }
        Ok(c.to_integer())
    }

    pub fn set_coeff(&mut self, exp: &[usize], c: BigRational) -> Result<(), SeriesError> {
        let i = self
            .index(exp)
            .ok_or_else(|| SeriesError::OrderExceeded { requested: exp.to_vec(), orders: self.orders.clone() })?;
        self.coeffs[i] = c;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Non-zero terms in row-major exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponent(i), c))
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.vars == other.vars && self.orders == other.orders,
            "series with different variables or truncation orders"
        );
    }

    fn nonzero(&self) -> Vec<(usize, Vec<usize>)> {
        (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .map(|i| (i, self.exponent(i)))
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect(), ..self.clone() }
    }

    /// Multiplicative inverse by solving `self * q = 1` coefficient by coefficient.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        self.like(1).div(self)
    }

    /// `self / divisor`; the divisor needs a non-zero constant term.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        self.assert_compatible(divisor);
        let b0 = divisor.coeffs[0].clone();
        if b0.is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let b_terms: Vec<_> = divisor.nonzero().into_iter().filter(|(i, _)| *i != 0).collect();
        let mut q = Self::zero(&self.vars, &self.orders);
        let mut diff = vec![0; self.orders.len()];
        for k in 0..self.coeffs.len() {
            let ek = self.exponent(k);
            let mut acc = self.coeffs[k].clone();
            for (i, ei) in &b_terms {
                if ei.iter().zip(&ek).any(|(a, b)| a > b) {
                    continue;
                }
                for ((d, a), b) in diff.iter_mut().zip(&ek).zip(ei) {
                    *d = a - b;
                }
                let j = q.index(&diff).expect("difference stays in the box");
                if !q.coeffs[j].is_zero() {
                    acc -= &divisor.coeffs[*i] * &q.coeffs[j];
                }
            }
            q.coeffs[k] = acc / &b0;
        }
        Ok(q)
    }

    /// Square root with constant term 1, by Newton iteration `S <- (S + A/S) / 2` from `S = 1`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantTerm(self.coeffs[0].to_string()));
        }
        let half = BigRational::new(1.into(), 2.into());
        let mut s = self.like(1);
        // each step doubles the total degree that is correct
        let max_degree: usize = self.orders.iter().sum();
        for _ in 0..(usize::BITS - max_degree.leading_zeros() + 3) {
            let next = (&s + &self.div(&s)?).scale(&half);
            if next == s {
                return Ok(s);
            }
            s = next;
        }
        Err(SeriesError::NoConvergence)
    }

    /// Serializable form `{"vars": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}`.
    pub fn to_json(&self) -> SeriesJson {
        let terms = self
            .terms()
            .map(|(exp, c)| TermJson { exp, num: c.numer().to_string(), den: c.denom().to_string() })
            .collect();
        SeriesJson { vars: self.vars.clone(), terms }
    }

    /// True when every coefficient is a non-negative integer.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries { coeffs, ..self.clone() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries { coeffs, ..self.clone() }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.assert_compatible(rhs);
        let mut out = TruncatedSeries::zero(&self.vars, &self.orders);
        let b_terms = rhs.nonzero();
        let mut sum = vec![0; self.orders.len()];
        for (i, ei) in self.nonzero() {
            for (j, ej) in &b_terms {
                for ((s, a), b) in sum.iter_mut().zip(&ei).zip(ej) {
                    *s = a + b;
                }
                if let Some(k) = out.index(&sum) {
                    out.coeffs[k] += &self.coeffs[i] * &rhs.coeffs[*j];
                }
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (exp, c) in self.terms() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(&exp)
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            parts.push(match (mono.is_empty(), c.is_one()) {
                (true, _) => c.to_string(),
                (false, true) => mono.join("*"),
                (false, false) => format!("{c}*{}", mono.join("*")),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}
