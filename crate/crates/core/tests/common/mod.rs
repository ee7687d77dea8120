//! Brute-force reference implementations used only by the tests. They share
//! no code with the library: orders are rebuilt from labels and every subset
//! is tested against the definition.

#![allow(dead_code)]

use ics_core::poset::{ElementSubset, FinitePoset};

/// A poset on at most 64 elements with its order stored as bit masks.
pub struct Oracle {
    pub labels: Vec<Vec<usize>>,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl Oracle {
    pub fn new(labels: Vec<Vec<usize>>, leq: impl Fn(&[usize], &[usize]) -> bool) -> Self {
        let n = labels.len();
        assert!(n <= 64);
        let mut up = vec![0u64; n];
        let mut down = vec![0u64; n];
        for x in 0..n {
            for y in 0..n {
                if leq(&labels[x], &labels[y]) {
                    up[x] |= 1 << y;
                    down[y] |= 1 << x;
                }
            }
        }
        Self { labels, up, down }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_convex(&self, s: u64) -> bool {
        let (mut below, mut above) = (0u64, 0u64);
        let mut bits = s;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            below |= self.down[x];
            above |= self.up[x];
        }
        below & above == s
    }

    /// Every interval-closed set, as masks over `labels`.
    pub fn all_ics(&self) -> Vec<u64> {
        assert!(self.len() <= 24, "brute force over 2^{} subsets", self.len());
        (0..1u64 << self.len()).filter(|&s| self.is_convex(s)).collect()
    }

    pub fn count(&self) -> u64 {
        self.all_ics().len() as u64
    }

    pub fn mask_labels(&self, s: u64) -> Vec<Vec<usize>> {
        (0..self.len()).filter(|i| s >> i & 1 == 1).map(|i| self.labels[i].clone()).collect()
    }

    /// Re-express a mask as a library subset, matching elements by label.
    pub fn to_subset(&self, poset: &FinitePoset, s: u64) -> ElementSubset {
        let labels = self.mask_labels(s);
        poset.subset_from_labels(labels.iter().map(|l| l.as_slice())).unwrap()
    }

    /// Image of a mask under a relabelling of the elements.
    pub fn map_mask(&self, s: u64, f: impl Fn(&[usize]) -> Vec<usize>) -> u64 {
        let mut out = 0;
        for l in self.mask_labels(s) {
            let image = f(&l);
            let j = self.labels.iter().position(|x| *x == image).expect("image is an element");
            out |= 1 << j;
        }
        out
    }
}

fn componentwise(x: &[usize], y: &[usize]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

fn grid(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=m {
        for b in 1..=n {
            out.push(vec![a, b]);
        }
    }
    out
}

pub fn rect(m: usize, n: usize) -> Oracle {
    Oracle::new(grid(m, n), componentwise)
}

pub fn trunc(m: usize, n: usize, r: usize) -> Oracle {
    let labels = grid(m, n).into_iter().filter(|l| l[0] + l[1] >= r + 2).collect();
    Oracle::new(labels, componentwise)
}

/// Positive roots of type A_k as intervals `[i, j]` of `1..=k`, ordered by inclusion.
pub fn root_a_intervals(k: usize) -> Oracle {
    let mut labels = Vec::new();
    for i in 1..=k {
        for j in i..=k {
            labels.push(vec![i, j]);
        }
    }
    Oracle::new(labels, |x, y| y[0] <= x[0] && x[1] <= y[1])
}

pub fn min_b(n: usize) -> Oracle {
    let labels = grid(n, n).into_iter().filter(|l| l[0] <= l[1]).collect();
    Oracle::new(labels, componentwise)
}

/// Positive roots of type B_n: `e_i - e_j`, `e_i + e_j` (i < j) and `e_i`,
/// ordered by the root order (difference is a non-negative combination of
/// simple roots). Coordinates are vectors in `Z^n`, shifted by 2 to stay unsigned.
pub fn root_b(n: usize) -> Oracle {
    let mut roots: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        roots.push(e);
        for j in i + 1..n {
            let mut minus = vec![0; n];
            minus[i] = 1;
            minus[j] = -1;
            roots.push(minus);
            let mut plus = vec![0; n];
            plus[i] = 1;
            plus[j] = 1;
            roots.push(plus);
        }
    }
    // simple roots e_1 - e_2, ..., e_{n-1} - e_n, e_n; coordinates of v in that basis
    let simple_coords = |v: &[i64]| -> Vec<i64> {
        let mut c = vec![0; n];
        let mut acc = 0;
        for k in 0..n {
            acc += v[k];
            c[k] = acc;
        }
        c
    };
    let labels: Vec<Vec<usize>> = roots.iter().map(|r| r.iter().map(|&c| (c + 2) as usize).collect()).collect();
    Oracle::new(labels, |x, y| {
        let d: Vec<i64> = x.iter().zip(y).map(|(&a, &b)| b as i64 - a as i64).collect();
        simple_coords(&d).iter().all(|&c| c >= 0)
    })
}

pub fn cube(l: usize, m: usize, n: usize) -> Oracle {
    let mut labels = Vec::new();
    for a in 1..=l {
        for b in 1..=m {
            for c in 1..=n {
                labels.push(vec![a, b, c]);
            }
        }
    }
    Oracle::new(labels, componentwise)
}

/// Ordinal sum of antichains: levels compare strictly, equal levels are incomparable.
pub fn ordinal_sum(parts: &[usize]) -> Oracle {
    let mut labels = Vec::new();
    for (level, &size) in parts.iter().enumerate() {
        for j in 1..=size {
            labels.push(vec![level + 1, j]);
        }
    }
    Oracle::new(labels, |x, y| x == y || x[0] < y[0])
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Narayana number from its binomial definition.
pub fn narayana(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 || b > a {
        return 0;
    }
    binomial(a, b) * binomial(a, b - 1) / a
}
