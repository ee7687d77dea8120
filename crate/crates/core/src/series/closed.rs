use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::truncated::{TruncatedSeries, Var};
use super::{SeriesConfig, SeriesError};

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn count_at(s: &TruncatedSeries, exp: &[usize]) -> Result<BigUint, SeriesError> {
    s.integer_coeff(exp)?
        .to_biguint()
        .ok_or_else(|| SeriesError::NonIntegral(format!("negative count at {exp:?}")))
}

/// `2 / (1 - x - y + 2xy + sqrt((1 - x - y)^2 - 4xy))`, truncated at `x^m_order y^n_order`.
pub fn rectangle_series(m_order: usize, n_order: usize, config: &SeriesConfig) -> Result<TruncatedSeries, SeriesError> {
    config.check(m_order.max(n_order))?;
    let (vars, orders) = ([Var::X, Var::Y], [m_order, n_order]);
    let x = TruncatedSeries::var(&vars, &orders, Var::X);
    let y = TruncatedSeries::var(&vars, &orders, Var::Y);
    let one = x.like(1);
    let xy = &x * &y;
    let base = &(&one - &x) - &y;
    let disc = &(&base * &base) - &xy.scale(&rational(4));
    let denom = &(&base + &xy.scale(&rational(2))) + &disc.sqrt()?;
    one.scale(&rational(2)).div(&denom)
}

/// `table[m][n]` = number of interval-closed sets of `[m] x [n]`.
pub fn rectangle_counts(m_max: usize, n_max: usize, config: &SeriesConfig) -> Result<Vec<Vec<BigUint>>, SeriesError> {
    let a = rectangle_series(m_max, n_max, config)?;
    (0..=m_max)
        .map(|m| (0..=n_max).map(|n| count_at(&a, &[m, n])).collect())
        .collect()
}

/// Solution of `C = 1 + (x + y) C + x y C^2`, by fixed-point iteration from 0.
pub fn bicolored_series(m_order: usize, n_order: usize, config: &SeriesConfig) -> Result<TruncatedSeries, SeriesError> {
    config.check(m_order.max(n_order))?;
    let (vars, orders) = ([Var::X, Var::Y], [m_order, n_order]);
    let x = TruncatedSeries::var(&vars, &orders, Var::X);
    let y = TruncatedSeries::var(&vars, &orders, Var::Y);
    let (one, sum, xy) = (x.like(1), &x + &y, &x * &y);
    let mut c = x.like(0);
    // every pass fixes at least one more total degree
    for _ in 0..=m_order + n_order + 1 {
        let next = &(&one + &(&sum * &c)) + &(&xy * &(&c * &c));
        if next == c {
            return Ok(c);
        }
        c = next;
    }
    Err(SeriesError::NoConvergence)
}

/// `table[m][n]` = number of bicolored Motzkin paths with `m` up-or-H1 steps
/// and `n` down-or-H2 steps (no axis restriction).
pub fn bicolored_counts(m_max: usize, n_max: usize, config: &SeriesConfig) -> Result<Vec<Vec<BigUint>>, SeriesError> {
    let c = bicolored_series(m_max, n_max, config)?;
    (0..=m_max)
        .map(|m| (0..=n_max).map(|n| count_at(&c, &[m, n])).collect())
        .collect()
}

/// `N(a, b) = C(a, b) C(a, b - 1) / a`, and 0 outside `1 <= b <= a`.
pub fn narayana(a: usize, b: usize) -> BigUint {
    if a == 0 || b == 0 || b > a {
        return BigUint::zero();
    }
    let a_big = BigUint::from(a);
    binomial(a_big.clone(), BigUint::from(b)) * binomial(a_big.clone(), BigUint::from(b - 1)) / a_big
}

/// Number of full interval-closed sets of `[m] x [n]`: `[x^m y^n] x y C(x, y)`.
pub fn full_count(m: usize, n: usize, config: &SeriesConfig) -> Result<BigUint, SeriesError> {
    if m == 0 || n == 0 {
        return Ok(BigUint::zero());
    }
    let c = bicolored_series(m - 1, n - 1, config)?;
    count_at(&c, &[m - 1, n - 1])
}

/// Families with a closed-form count of interval-closed sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// The chain `[n]`.
    Chain(usize),
    /// Ordinal sum of antichains of the given sizes.
    OrdinalSum(Vec<usize>),
    /// `[2] x [n]`.
    TwoByN(usize),
    /// `[3] x [n]`.
    ThreeByN(usize),
}

fn exact_quotient(num: BigInt, den: u32) -> Result<BigUint, SeriesError> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(SeriesError::NonIntegral(format!("{num} is not divisible by {den}")));
    }
    q.to_biguint().ok_or_else(|| SeriesError::NonIntegral(format!("negative value {q}")))
}

fn poly(coeffs: &[i64], n: usize) -> BigInt {
    let n = BigInt::from(n);
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * &n + c)
}

pub fn closed_form_count(form: &ClosedForm) -> Result<BigUint, SeriesError> {
    match form {
        ClosedForm::Chain(n) => Ok(binomial(BigUint::from(n + 1), BigUint::from(2u32)) + 1u32),
        ClosedForm::OrdinalSum(parts) => {
            if parts.contains(&0) {
                return Err(SeriesError::InvalidArgument("antichain sizes must be positive".into()));
            }
            let blocks: Vec<BigUint> = parts.iter().map(|&a| (BigUint::one() << a) - 1u32).collect();
            let mut total = BigUint::one();
            for (i, bi) in blocks.iter().enumerate() {
                total += bi;
                for bj in &blocks[i + 1..] {
                    total += bi * bj;
                }
            }
            Ok(total)
        }
        ClosedForm::TwoByN(n) => exact_quotient(poly(&[1, 4, 17, 14, 12], *n), 12),
        ClosedForm::ThreeByN(n) => exact_quotient(poly(&[1, 9, 61, 159, 370, 264, 144], *n), 144),
    }
}

/// `(4 - 10x + 8x^2) / (2 - 11x + 14x^2 - 8x^3 + (2 - 3x) sqrt(1 - 4x))`.
pub fn b_minuscule_series(order: usize, config: &SeriesConfig) -> Result<TruncatedSeries, SeriesError> {
    config.check(order)?;
    let x = TruncatedSeries::var(&[Var::X], &[order], Var::X);
    let p = |cs: &[i64]| {
        cs.iter().enumerate().fold(x.like(0), |acc, (k, &c)| {
            &acc + &TruncatedSeries::monomial(&[Var::X], &[order], &[k], rational(c))
        })
    };
    let root = p(&[1, -4]).sqrt()?;
    let denom = &p(&[2, -11, 14, -8]) + &(&p(&[2, -3]) * &root);
    p(&[4, -10, 8]).div(&denom)
}

/// Number of interval-closed sets of the type-B minuscule poset, for `n = 0..=n_max`.
pub fn b_minuscule_counts(n_max: usize, config: &SeriesConfig) -> Result<Vec<BigUint>, SeriesError> {
    let s = b_minuscule_series(n_max, config)?;
    (0..=n_max).map(|n| count_at(&s, &[n])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[BigUint]) -> Vec<u64> {
        v.iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn rectangle_small_table() {
        let t = rectangle_counts(3, 3, &SeriesConfig::default()).unwrap();
        assert_eq!(u(&t[0]), vec![1, 1, 1, 1]);
        assert_eq!(u(&t[1]), vec![1, 2, 4, 7]);
        assert_eq!(t[2][2], BigUint::from(13u32));
        assert_eq!(t[3][3], BigUint::from(114u32));
    }

    #[test]
    fn closed_forms() {
        let c = |f: ClosedForm| u64::try_from(closed_form_count(&f).unwrap()).unwrap();
        assert_eq!(c(ClosedForm::Chain(4)), 11);
        assert_eq!(c(ClosedForm::OrdinalSum(vec![2, 1])), 8);
        assert_eq!(c(ClosedForm::TwoByN(2)), 13);
        assert_eq!(c(ClosedForm::ThreeByN(3)), 114);
        // 1 + n + n^2 + (n + 1)/2 * C(n + 2, 3)
        for n in 0..20u64 {
            let binom = (n + 2) * (n + 1) * n / 6;
            assert_eq!(c(ClosedForm::TwoByN(n as usize)) * 2, 2 * (1 + n + n * n) + (n + 1) * binom);
        }
    }

    #[test]
    fn narayana_and_full() {
        let cfg = SeriesConfig::default();
        assert_eq!(narayana(4, 2), BigUint::from(6u32));
        assert_eq!(full_count(1, 1, &cfg).unwrap(), BigUint::one());
        assert_eq!(full_count(2, 2, &cfg).unwrap(), BigUint::from(3u32));
        for m in 1..6 {
            for n in 1..6 {
                assert_eq!(full_count(m, n, &cfg).unwrap(), narayana(m + n - 1, n), "({m},{n})");
            }
        }
    }

    #[test]
    fn b_minuscule_head() {
        let s = b_minuscule_counts(5, &SeriesConfig::default()).unwrap();
        assert_eq!(u(&s), vec![1, 2, 7, 26, 96, 356]);
    }
}
