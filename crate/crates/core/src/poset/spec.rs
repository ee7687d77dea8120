use std::fmt;
use std::str::FromStr;

use super::PosetError;

/// A member of one of the supported poset families.
///
/// Text form: `rect:MxN`, `trunc:MxN:R`, `rootA:K`, `minB:N`, `rootB:N`,
/// `ordsum:a1+a2+...`, `cube:LxMxN`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PosetSpec {
    /// `[m] x [n]`.
    ChainProduct { m: usize, n: usize },
    /// `[m] x [n]` with its bottom `r` ranks removed, `r <= min(m, n)`.
    TruncatedRectangle { m: usize, n: usize, r: usize },
    /// Positive root poset of type `A_k` (`k` minimal elements).
    TypeARoot { k: usize },
    /// Minuscule poset of type `B_n`, the triangular half of `[n] x [n]`.
    TypeBMinuscule { n: usize },
    /// Positive root poset of type `B_n`, half of `A_{2n-1}`.
    TypeBRoot { n: usize },
    /// Ordinal sum of antichains of the given (positive) sizes, bottom first.
    OrdinalSumAntichains { parts: Vec<usize> },
    /// `[l] x [m] x [n]`.
    ChainProduct3 { l: usize, m: usize, n: usize },
}

impl PosetSpec {
    /// Truncated rectangle with a signed truncation depth; negative depths mean no truncation.
    pub fn truncated(m: usize, n: usize, r: i64) -> Result<Self, PosetError> {
        let r = r.max(0) as usize;
        let spec = PosetSpec::TruncatedRectangle { m, n, r };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), PosetError> {
        match self {
            PosetSpec::TruncatedRectangle { m, n, r } if *r > (*m).min(*n) => {
                Err(PosetError::InvalidSpec(format!(
                    "truncation depth {r} exceeds min({m}, {n})"
                )))
            }
            PosetSpec::OrdinalSumAntichains { parts } if parts.contains(&0) => Err(
                PosetError::InvalidSpec("ordinal-sum parts must be positive".into()),
            ),
            _ => Ok(()),
        }
    }

    /// Number of elements the builder produces.
    pub fn element_count(&self) -> usize {
        match *self {
            PosetSpec::ChainProduct { m, n } => m * n,
            PosetSpec::TruncatedRectangle { m, n, r } => {
                let below = (1..=m)
                    .flat_map(|a| (1..=n).map(move |b| a + b - 2))
                    .filter(|&rank| rank < r)
                    .count();
                m * n - below
            }
            PosetSpec::TypeARoot { k } => k * (k + 1) / 2,
            PosetSpec::TypeBMinuscule { n } => n * (n + 1) / 2,
            PosetSpec::TypeBRoot { n } => n * n,
            PosetSpec::OrdinalSumAntichains { ref parts } => parts.iter().sum(),
            PosetSpec::ChainProduct3 { l, m, n } => l * m * n,
        }
    }
}

impl fmt::Display for PosetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetSpec::ChainProduct { m, n } => write!(f, "rect:{m}x{n}"),
            PosetSpec::TruncatedRectangle { m, n, r } => write!(f, "trunc:{m}x{n}:{r}"),
            PosetSpec::TypeARoot { k } => write!(f, "rootA:{k}"),
            PosetSpec::TypeBMinuscule { n } => write!(f, "minB:{n}"),
            PosetSpec::TypeBRoot { n } => write!(f, "rootB:{n}"),
            PosetSpec::OrdinalSumAntichains { parts } => {
                let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "ordsum:{}", body.join("+"))
            }
            PosetSpec::ChainProduct3 { l, m, n } => write!(f, "cube:{l}x{m}x{n}"),
        }
    }
}

fn parse_dims(text: &str, expected: usize, whole: &str) -> Result<Vec<usize>, PosetError> {
    let dims = text
        .split('x')
        .map(|d| parse_count(d, whole))
        .collect::<Result<Vec<_>, _>>()?;
    if dims.len() != expected {
        return Err(PosetError::Parse(format!(
            "`{whole}`: expected {expected} dimensions separated by 'x'"
        )));
    }
    Ok(dims)
}

fn parse_count(text: &str, whole: &str) -> Result<usize, PosetError> {
    let t = text.trim();
    if t.starts_with('-') {
        return Err(PosetError::InvalidSpec(format!("`{whole}`: negative parameter {t}")));
    }
    t.parse::<usize>()
        .map_err(|_| PosetError::Parse(format!("`{whole}`: `{t}` is not a non-negative integer")))
}

impl FromStr for PosetSpec {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| PosetError::Parse(format!("`{s}`: expected `family:parameters`")))?;
        let spec = match kind {
            "rect" => {
                let d = parse_dims(rest, 2, s)?;
                PosetSpec::ChainProduct { m: d[0], n: d[1] }
            }
            "trunc" => {
                let (dims, r) = rest
                    .split_once(':')
                    .ok_or_else(|| PosetError::Parse(format!("`{s}`: expected trunc:MxN:R")))?;
                let d = parse_dims(dims, 2, s)?;
                let r: i64 = r
                    .trim()
                    .parse()
                    .map_err(|_| PosetError::Parse(format!("`{s}`: bad truncation depth")))?;
                return PosetSpec::truncated(d[0], d[1], r);
            }
            "rootA" => PosetSpec::TypeARoot { k: parse_count(rest, s)? },
            "minB" => PosetSpec::TypeBMinuscule { n: parse_count(rest, s)? },
            "rootB" => PosetSpec::TypeBRoot { n: parse_count(rest, s)? },
            "ordsum" => PosetSpec::OrdinalSumAntichains {
                parts: rest
                    .split('+')
                    .map(|p| parse_count(p, s))
                    .collect::<Result<_, _>>()?,
            },
            "cube" => {
                let d = parse_dims(rest, 3, s)?;
                PosetSpec::ChainProduct3 { l: d[0], m: d[1], n: d[2] }
            }
            other => return Err(PosetError::Parse(format!("unknown poset family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_round_trips() {
        for text in ["rect:2x3", "trunc:4x5:1", "rootA:5", "minB:3", "rootB:2", "ordsum:2+1+3", "cube:2x2x2"] {
            let spec: PosetSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn negative_truncation_normalizes_to_zero() {
        assert_eq!(
            "trunc:3x4:-2".parse::<PosetSpec>().unwrap(),
            PosetSpec::TruncatedRectangle { m: 3, n: 4, r: 0 }
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!("trunc:2x3:3".parse::<PosetSpec>(), Err(PosetError::InvalidSpec(_))));
        assert!(matches!("rect:-1x2".parse::<PosetSpec>(), Err(PosetError::InvalidSpec(_))));
        assert!(matches!("ordsum:1+0".parse::<PosetSpec>(), Err(PosetError::InvalidSpec(_))));
        assert!(matches!("rect:2".parse::<PosetSpec>(), Err(PosetError::Parse(_))));
        assert!(matches!("hex:2".parse::<PosetSpec>(), Err(PosetError::Parse(_))));
    }

    #[test]
    fn truncated_count_drops_low_ranks() {
        assert_eq!(PosetSpec::TruncatedRectangle { m: 4, n: 5, r: 1 }.element_count(), 19);
        assert_eq!(PosetSpec::TruncatedRectangle { m: 4, n: 4, r: 4 }.element_count(), 6);
    }
}
