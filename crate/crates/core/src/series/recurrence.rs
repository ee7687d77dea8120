//! Per-`z` coefficient recurrences for the walk generating functions.
//!
//! With `K = x + 1/x + x/y + y/x`, the coefficient `p_l` of `z^l` satisfies
//!
//! ```text
//! p_l = K p_{l-1} - (1/x + y/x) p_{l-1}(0, y) - (x/y) p_{l-1}(x, 0)
//!       - (p_{l-2}(x, 0) - p_{l-2}(0, 0))
//! ```
//!
//! The four correction terms remove the `w`/`nw` steps taken from the
//! y-axis, the `se` steps taken from the x-axis, and the `e` steps following
//! a `w` step that landed on the x-axis. The negative powers produced by `K`
//! must cancel exactly; any survivor is reported as an error.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::laurent::CoeffPolynomial;
use super::{SeriesConfig, SeriesError};

/// Indices of the walk coordinates inside the exponent vectors.
#[derive(Clone, Copy)]
struct Coords {
    x: usize,
    y: usize,
    nvars: usize,
}

impl Coords {
    fn shift(&self, dx: i64, dy: i64) -> Vec<i64> {
        let mut e = vec![0; self.nvars];
        e[self.x] = dx;
        e[self.y] = dy;
        e
    }
}

fn step(
    c: Coords,
    l: usize,
    prev: &CoeffPolynomial,
    prev2: Option<&CoeffPolynomial>,
) -> Result<CoeffPolynomial, SeriesError> {
    let moves = [(1, 0), (-1, 0), (1, -1), (-1, 1)];
    let mut next = CoeffPolynomial::zero(c.nvars);
    for (dx, dy) in moves {
        next = &next + &prev.shifted(&c.shift(dx, dy));
    }
    let on_y_axis = prev.at_zero(c.x);
    next = &next - &on_y_axis.shifted(&c.shift(-1, 0));
    next = &next - &on_y_axis.shifted(&c.shift(-1, 1));
    next = &next - &prev.at_zero(c.y).shifted(&c.shift(1, -1));
    if let Some(p2) = prev2 {
        let on_x_axis = p2.at_zero(c.y);
        next = &next - &on_x_axis;
        next = &next + &on_x_axis.at_zero(c.x);
    }
    if let Some(term) = next.first_negative_exponent() {
        return Err(SeriesError::NegativeExponentResidue { step: l, term: term.clone() });
    }
    if let Some(term) = next.first_negative_coefficient() {
        return Err(SeriesError::NegativeCoefficient { step: l, term: term.clone() });
    }
    Ok(next)
}

fn run(c: Coords, start: CoeffPolynomial, order: usize) -> Result<Vec<CoeffPolynomial>, SeriesError> {
    let mut out = vec![start];
    for l in 1..=order {
        let prev2 = if l >= 2 { Some(&out[l - 2]) } else { None };
        let next = step(c, l, &out[l - 1], prev2)?;
        out.push(next);
    }
    Ok(out)
}

fn to_count(c: BigInt) -> BigUint {
    c.to_biguint().expect("walk counts are non-negative")
}

/// Coefficients `f_0, ..., f_order` in the variables `(x, y)`; `f_l` counts
/// walks of length `l` from the origin by endpoint.
pub fn type_a_coefficients(order: usize, config: &SeriesConfig) -> Result<Vec<CoeffPolynomial>, SeriesError> {
    config.check(order)?;
    let c = Coords { x: 0, y: 1, nvars: 2 };
    run(c, CoeffPolynomial::monomial(vec![0, 0], BigInt::one()), order)
}

/// Number of interval-closed sets of the type-A root poset with `n - 1`
/// minimal elements, for `n = 1..=n_max`.
pub fn type_a_counts(n_max: usize, config: &SeriesConfig) -> Result<Vec<BigUint>, SeriesError> {
    let fs = type_a_coefficients(2 * n_max, config)?;
    Ok((1..=n_max).map(|n| to_count(fs[2 * n].coeff(&[0, 0]))).collect())
}

/// Number of interval-closed sets of the type-A root poset with `n - 1`
/// minimal elements that are fixed by the left-right mirror, for `n = 0..=n_max`.
pub fn symmetric_type_a_counts(n_max: usize, config: &SeriesConfig) -> Result<Vec<BigUint>, SeriesError> {
    let fs = type_a_coefficients(n_max, config)?;
    let counts = (0..=n_max)
        .map(|n| {
            let mut c = fs[n].coefficient_sum();
            if n >= 1 {
                c -= fs[n - 1].at_zero(1).coefficient_sum();
                c += fs[n - 1].coeff(&[0, 0]);
            }
            to_count(c)
        })
        .collect();
    Ok(counts)
}

/// Number of interval-closed sets of the type-B positive root poset of rank `n`, for `n = 1..=n_max`.
pub fn b_root_counts(n_max: usize, config: &SeriesConfig) -> Result<Vec<BigUint>, SeriesError> {
    let sym = symmetric_type_a_counts(2 * n_max, config)?;
    Ok((1..=n_max).map(|n| sym[2 * n].clone()).collect())
}

/// `F - RHS` of the type-A functional equation, computed on the whole
/// truncated series in `(x, y, z)` at once, with terms beyond `z^N` dropped.
/// Zero when the coefficients solve the equation.
pub fn functional_equation_residual(fs: &[CoeffPolynomial]) -> CoeffPolynomial {
    let order = fs.len() as i64 - 1;
    let mut f = CoeffPolynomial::zero(3);
    for (l, p) in fs.iter().enumerate() {
        for (e, c) in p.terms() {
            f.add_term(vec![e[0], e[1], l as i64], c.clone());
        }
    }
    let f_x0 = f.at_zero(0);
    let f_y0 = f.at_zero(1);
    let f_00 = f_y0.at_zero(0);
    let mut rhs = CoeffPolynomial::monomial(vec![0, 0, 0], BigInt::one());
    for shift in [[1, 0, 1], [-1, 0, 1], [1, -1, 1], [-1, 1, 1]] {
        rhs = &rhs + &f.shifted(&shift);
    }
    rhs = &rhs - &f_x0.shifted(&[-1, 0, 1]);
    rhs = &rhs - &f_x0.shifted(&[-1, 1, 1]);
    rhs = &rhs - &f_y0.shifted(&[1, -1, 1]);
    rhs = &rhs - &f_y0.shifted(&[0, 0, 2]);
    rhs = &rhs + &f_00.shifted(&[0, 0, 2]);
    (&f - &rhs).truncated(2, order)
}

/// Coefficients `g_0, ..., g_order` in the variables `(t, x, y)`, where the
/// power of `t` records the starting abscissa, kept up to `t^start_max`.
pub fn truncated_coefficients(
    order: usize,
    start_max: usize,
    config: &SeriesConfig,
) -> Result<Vec<CoeffPolynomial>, SeriesError> {
    config.check(order)?;
    config.check(start_max)?;
    let c = Coords { x: 1, y: 2, nvars: 3 };
    let mut g0 = CoeffPolynomial::zero(3);
    for h in 0..=start_max as i64 {
        g0.add_term(vec![h, h, 0], BigInt::one());
    }
    run(c, g0, order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCount {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub count: BigUint,
}

/// Counts for every truncated rectangle with `m <= m_max`, `n <= n_max`, `r <= min(m, n)`.
pub fn truncated_counts(m_max: usize, n_max: usize, config: &SeriesConfig) -> Result<Vec<TruncatedCount>, SeriesError> {
    let gs = truncated_coefficients(m_max + n_max, n_max, config)?;
    let mut out = Vec::new();
    for m in 0..=m_max {
        for n in 0..=n_max {
            for r in 0..=m.min(n) {
                let exp = [(n - r) as i64, (m - r) as i64, 0];
                out.push(TruncatedCount { m, n, r, count: to_count(gs[m + n].coeff(&exp)) });
            }
        }
    }
    Ok(out)
}

/// Count for a single truncated rectangle.
pub fn truncated_count(m: usize, n: usize, r: usize, config: &SeriesConfig) -> Result<BigUint, SeriesError> {
    if r > m.min(n) {
        return Err(SeriesError::InvalidArgument(format!("truncation {r} exceeds min({m}, {n})")));
    }
    let gs = truncated_coefficients(m + n, n - r, config)?;
    Ok(to_count(gs[m + n].coeff(&[(n - r) as i64, (m - r) as i64, 0])))
}

/// `(1 - t x) G(t, x, 0, z)` coefficient by coefficient for `z^0..=z^order`, as
/// polynomials in `(t, x)`, keeping powers of `t` up to `order`.
pub fn truncated_head(order: usize, config: &SeriesConfig) -> Result<Vec<CoeffPolynomial>, SeriesError> {
    let start_max = order + 1;
    let gs = truncated_coefficients(order, start_max, config)?;
    let head = gs
        .iter()
        .map(|g| {
            let g = g.at_zero(2);
            let prod = (&g - &g.shifted(&[1, 1, 0])).truncated(0, order as i64);
            let mut out = CoeffPolynomial::zero(2);
            for (e, c) in prod.terms() {
                out.add_term(vec![e[0], e[1]], c.clone());
            }
            out
        })
        .collect();
    Ok(head)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SeriesConfig {
        SeriesConfig::default()
    }

    #[test]
    fn first_coefficients() {
        let fs = type_a_coefficients(2, &cfg()).unwrap();
        assert_eq!(fs[1], CoeffPolynomial::monomial(vec![1, 0], BigInt::one()));
        let mut f2 = CoeffPolynomial::zero(2);
        for e in [[2, 0], [0, 0], [0, 1]] {
            f2.add_term(e.to_vec(), BigInt::one());
        }
        assert_eq!(fs[2], f2);
    }

    #[test]
    fn small_counts() {
        let a: Vec<u64> = type_a_counts(4, &cfg()).unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(a, vec![1, 2, 8, 45]);
        let b: Vec<u64> = b_root_counts(2, &cfg()).unwrap().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(b, vec![2, 13]);
        assert_eq!(truncated_count(3, 2, 1, &cfg()).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn residual_vanishes() {
        let fs = type_a_coefficients(10, &cfg()).unwrap();
        assert!(functional_equation_residual(&fs).is_zero());
        let mut broken = fs.clone();
        broken[5].add_term(vec![1, 0], BigInt::one());
        assert!(!functional_equation_residual(&broken).is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let small = SeriesConfig::with_order(6);
        assert!(matches!(type_a_counts(4, &small), Err(SeriesError::BudgetExceeded { .. })));
    }
}
