//! Lattice-path value types: nested `u`/`d` path pairs, bicolored Motzkin
//! words and quarter-plane walks, with validators, statistics and
//! brute-force enumerators.
//!
//! All heights and positions are intrinsic: Motzkin words start at height 0
//! and walks start at `(h, 0)`. Only [`NestedPairBT`] carries the rectangle
//! framing, with both paths starting at height `n`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest word the brute-force enumerators will build.
pub const MAX_ENUMERATION_LENGTH: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid path: {0}")]
    Invalid(String),
    #[error("enumeration scale exceeded: length {length} is above {bound}")]
    ScaleExceeded { length: usize, bound: usize },
}

/// A step `u = (1, 1)` or `d = (1, -1)` of a rectangle boundary path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathStep {
    U,
    D,
}

impl PathStep {
    pub fn delta(self) -> i64 {
        match self {
            PathStep::U => 1,
            PathStep::D => -1,
        }
    }
}

/// Heights of a `u`/`d` path after each of its steps, including the start.
pub fn path_heights(start: i64, steps: &[PathStep]) -> Vec<i64> {
    let mut out = Vec::with_capacity(steps.len() + 1);
    let mut h = start;
    out.push(h);
    for s in steps {
        h += s.delta();
        out.push(h);
    }
    out
}

/// Inverse of [`path_heights`]; heights must change by exactly one per step.
pub fn steps_from_heights(heights: &[i64]) -> Vec<PathStep> {
    heights
        .windows(2)
        .map(|w| {
            debug_assert_eq!((w[1] - w[0]).abs(), 1);
            if w[1] > w[0] {
                PathStep::U
            } else {
                PathStep::D
            }
        })
        .collect()
}

fn parse_ud(text: &str) -> Result<Vec<PathStep>, PathError> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'U' | 'u' => Ok(PathStep::U),
            'D' | 'd' => Ok(PathStep::D),
            other => Err(PathError::Parse(format!("unexpected path letter `{other}`"))),
        })
        .collect()
}

fn format_ud(steps: &[PathStep]) -> String {
    steps
        .iter()
        .map(|s| match s {
            PathStep::U => 'U',
            PathStep::D => 'D',
        })
        .collect()
}

/// A pair of boundary paths `(B, T)` from `(0, n)` to `(m + n, m)`.
///
/// Text form: a header line `m n r`, then `B` and `T` as `U`/`D` strings on
/// their own lines.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NestedPairBT {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub bottom: Vec<PathStep>,
    pub top: Vec<PathStep>,
}

impl NestedPairBT {
    pub fn bottom_heights(&self) -> Vec<i64> {
        path_heights(self.n as i64, &self.bottom)
    }

    pub fn top_heights(&self) -> Vec<i64> {
        path_heights(self.n as i64, &self.top)
    }

    /// Checks step counts, the floor `y >= r` for `B`, and `B <= T` pointwise.
    pub fn validate(&self) -> Result<(), PathError> {
        let len = self.m + self.n;
        for (name, path) in [("B", &self.bottom), ("T", &self.top)] {
            let ups = path.iter().filter(|&&s| s == PathStep::U).count();
            if path.len() != len || ups != self.m {
                return Err(PathError::Invalid(format!(
                    "{name} must have {} up-steps and {} down-steps",
                    self.m, self.n
                )));
            }
        }
        let (b, t) = (self.bottom_heights(), self.top_heights());
        if let Some(i) = b.iter().position(|&h| h < self.r as i64) {
            return Err(PathError::Invalid(format!("B drops below y = {} after {i} steps", self.r)));
        }
        if let Some(i) = (0..=len).find(|&i| b[i] > t[i]) {
            return Err(PathError::Invalid(format!("B is above T after {i} steps")));
        }
        Ok(())
    }

    /// In every maximal block where `B` and `T` coincide, up-steps precede down-steps.
    pub fn is_canonical(&self) -> bool {
        let (b, t) = (self.bottom_heights(), self.top_heights());
        let shared = |i: usize| b[i] == t[i] && b[i + 1] == t[i + 1];
        (1..self.bottom.len()).all(|i| {
            !(shared(i - 1) && shared(i) && self.bottom[i - 1] == PathStep::D && self.bottom[i] == PathStep::U)
        })
    }
}

impl fmt::Display for NestedPairBT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.m, self.n, self.r)?;
        writeln!(f, "{}", format_ud(&self.bottom))?;
        write!(f, "{}", format_ud(&self.top))
    }
}

impl FromStr for NestedPairBT {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| PathError::Parse("missing `m n r` header".into()))?;
        let nums = header
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| PathError::Parse(format!("bad header value `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let [m, n, r] = nums[..] else {
            return Err(PathError::Parse("header must be `m n r`".into()));
        };
        let bottom = parse_ud(lines.next().ok_or_else(|| PathError::Parse("missing B".into()))?)?;
        let top = parse_ud(lines.next().ok_or_else(|| PathError::Parse("missing T".into()))?)?;
        Ok(Self { m, n, r, bottom, top })
    }
}

/// A letter of a bicolored Motzkin word. Declaration order is the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    U,
    D,
    H1,
    H2,
}

impl MotzkinStep {
    pub const ALL: [MotzkinStep; 4] = [MotzkinStep::U, MotzkinStep::D, MotzkinStep::H1, MotzkinStep::H2];

    fn delta(self) -> i64 {
        match self {
            MotzkinStep::U => 1,
            MotzkinStep::D => -1,
            _ => 0,
        }
    }

    fn token(self) -> &'static str {
        match self {
            MotzkinStep::U => "U",
            MotzkinStep::D => "D",
            MotzkinStep::H1 => "1",
            MotzkinStep::H2 => "2",
        }
    }
}

/// A word over `{U, D, H1, H2}`; text form uses the tokens `U D 1 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinWord {
    pub steps: Vec<MotzkinStep>,
}

impl MotzkinWord {
    pub fn new(steps: Vec<MotzkinStep>) -> Self {
        Self { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `#U + #H1`.
    pub fn m(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, MotzkinStep::U | MotzkinStep::H1)).count()
    }

    /// `#D + #H2`.
    pub fn n(&self) -> usize {
        self.len() - self.m()
    }

    /// Heights after each step, starting with the initial height 0.
    pub fn heights(&self) -> Vec<i64> {
        let mut out = vec![0];
        let mut h = 0;
        for s in &self.steps {
            h += s.delta();
            out.push(h);
        }
        out
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.steps.iter().map(|s| s.token()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl FromStr for MotzkinWord {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .map(|t| match t {
                "U" | "u" => Ok(MotzkinStep::U),
                "D" | "d" => Ok(MotzkinStep::D),
                "1" | "H1" | "h1" => Ok(MotzkinStep::H1),
                "2" | "H2" | "h2" => Ok(MotzkinStep::H2),
                other => Err(PathError::Parse(format!("unknown Motzkin letter `{other}`"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(MotzkinWord::new)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotzkinVerdict {
    pub valid: bool,
    pub m: usize,
    pub n: usize,
    pub violation: Option<String>,
}

/// Checks non-negativity, return to height 0, and that no `H2` at height 0
/// is immediately followed by `H1`.
pub fn validate_motzkin(word: &MotzkinWord) -> MotzkinVerdict {
    let violation = motzkin_violation(word);
    MotzkinVerdict { valid: violation.is_none(), m: word.m(), n: word.n(), violation }
}

fn motzkin_violation(word: &MotzkinWord) -> Option<String> {
    let mut h = 0i64;
    for (i, &s) in word.steps.iter().enumerate() {
        if s == MotzkinStep::H1 && h == 0 && i > 0 && word.steps[i - 1] == MotzkinStep::H2 {
            return Some(format!("H2 on the axis followed by H1 at step {}", i + 1));
        }
        h += s.delta();
        if h < 0 {
            return Some(format!("goes below the axis at step {}", i + 1));
        }
    }
    (h != 0).then(|| format!("ends at height {h}"))
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct MotzkinStats {
    /// Sum of the heights after each step.
    pub area: u64,
    /// `D` steps ending at height 0.
    pub returns: u64,
    /// `Σ #H1 · #H2` over maximal runs of horizontal steps at height 0.
    pub axis_run_product_sum: u64,
}

pub fn motzkin_stats(word: &MotzkinWord) -> Result<MotzkinStats, PathError> {
    if let Some(v) = motzkin_violation(word) {
        return Err(PathError::Invalid(v));
    }
    let heights = word.heights();
    let area = heights[1..].iter().sum::<i64>() as u64;
    let returns = word
        .steps
        .iter()
        .zip(&heights[1..])
        .filter(|&(&s, &h)| s == MotzkinStep::D && h == 0)
        .count() as u64;
    let mut product_sum = 0;
    let (mut h1, mut h2) = (0u64, 0u64);
    for (i, &s) in word.steps.iter().enumerate() {
        let on_axis_horizontal = heights[i] == 0 && matches!(s, MotzkinStep::H1 | MotzkinStep::H2);
        if on_axis_horizontal {
            if s == MotzkinStep::H1 {
                h1 += 1;
            } else {
                h2 += 1;
            }
        } else {
            product_sum += h1 * h2;
            h1 = 0;
            h2 = 0;
        }
    }
    product_sum += h1 * h2;
    Ok(MotzkinStats { area, returns, axis_run_product_sum: product_sum })
}

/// Every valid word with parameters `(m, n)`, in lexicographic order `U < D < H1 < H2`.
pub fn enumerate_motzkin(m: usize, n: usize) -> Result<Vec<MotzkinWord>, PathError> {
    if m + n > MAX_ENUMERATION_LENGTH {
        return Err(PathError::ScaleExceeded { length: m + n, bound: MAX_ENUMERATION_LENGTH });
    }
    fn go(
        x_left: usize,
        y_left: usize,
        height: usize,
        prev_axis_h2: bool,
        word: &mut Vec<MotzkinStep>,
        out: &mut Vec<MotzkinWord>,
    ) {
        if x_left == 0 && y_left == 0 {
            if height == 0 {
                out.push(MotzkinWord::new(word.clone()));
            }
            return;
        }
        for step in MotzkinStep::ALL {
            let (x, y, h) = match step {
                MotzkinStep::U if x_left > 0 => (x_left - 1, y_left, height + 1),
                MotzkinStep::D if y_left > 0 && height > 0 => (x_left, y_left - 1, height - 1),
                MotzkinStep::H1 if x_left > 0 && !(prev_axis_h2 && height == 0) => (x_left - 1, y_left, height),
                MotzkinStep::H2 if y_left > 0 => (x_left, y_left - 1, height),
                _ => continue,
            };
            // every remaining unit of height must be paid for by a D
            if h > y {
                continue;
            }
            word.push(step);
            go(x, y, h, step == MotzkinStep::H2 && h == 0, word, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, 0, false, &mut Vec::with_capacity(m + n), &mut out);
    Ok(out)
}

/// A quarter-plane walk step. Declaration order is the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WalkStep {
    E,
    W,
    SE,
    NW,
}

impl WalkStep {
    pub const ALL: [WalkStep; 4] = [WalkStep::E, WalkStep::W, WalkStep::SE, WalkStep::NW];

    pub fn delta(self) -> (i64, i64) {
        match self {
            WalkStep::E => (1, 0),
            WalkStep::W => (-1, 0),
            WalkStep::SE => (1, -1),
            WalkStep::NW => (-1, 1),
        }
    }

    fn token(self) -> &'static str {
        match self {
            WalkStep::E => "e",
            WalkStep::W => "w",
            WalkStep::SE => "se",
            WalkStep::NW => "nw",
        }
    }
}

/// A walk on steps `e, w, se, nw` starting at `(start_x, 0)`; text form `e w se nw`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuarterWalk {
    pub start_x: usize,
    pub steps: Vec<WalkStep>,
}

impl QuarterWalk {
    pub fn new(start_x: usize, steps: Vec<WalkStep>) -> Self {
        Self { start_x, steps }
    }

    pub fn parse(start_x: usize, text: &str) -> Result<Self, PathError> {
        let steps = text
            .split_whitespace()
            .map(|t| match t.to_ascii_lowercase().as_str() {
                "e" => Ok(WalkStep::E),
                "w" => Ok(WalkStep::W),
                "se" => Ok(WalkStep::SE),
                "nw" => Ok(WalkStep::NW),
                _ => Err(PathError::Parse(format!("unknown walk step `{t}`"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(start_x, steps))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Positions after each step, starting with `(start_x, 0)`.
    pub fn positions(&self) -> Vec<(i64, i64)> {
        let mut p = (self.start_x as i64, 0);
        let mut out = vec![p];
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn endpoint(&self) -> (i64, i64) {
        *self.positions().last().expect("positions include the start")
    }
}

impl fmt::Display for QuarterWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<&str> = self.steps.iter().map(|s| s.token()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkVerdict {
    pub valid: bool,
    pub endpoint: (i64, i64),
    pub violation: Option<String>,
}

/// Checks the quadrant constraint and that no `w` step landing on the x-axis
/// is immediately followed by an `e` step.
pub fn validate_walk(walk: &QuarterWalk) -> WalkVerdict {
    let violation = walk_violation(walk);
    WalkVerdict { valid: violation.is_none(), endpoint: walk.endpoint(), violation }
}

fn walk_violation(walk: &QuarterWalk) -> Option<String> {
    let pos = walk.positions();
    for (i, &s) in walk.steps.iter().enumerate() {
        let (x, y) = pos[i + 1];
        if x < 0 || y < 0 {
            return Some(format!("leaves the quadrant at step {}", i + 1));
        }
        if s == WalkStep::E && i > 0 && walk.steps[i - 1] == WalkStep::W && pos[i].1 == 0 {
            return Some(format!("w on the x-axis followed by e at step {}", i + 1));
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WalkStats {
    /// Sum of the y-coordinates after each step.
    pub height_sum: u64,
    /// `se` steps ending on the x-axis.
    pub x_axis_returns: u64,
    /// `w`/`nw` steps ending on the y-axis, not counting the final step.
    pub y_axis_returns_excl_last: u64,
}

pub fn walk_stats(walk: &QuarterWalk) -> Result<WalkStats, PathError> {
    if let Some(v) = walk_violation(walk) {
        return Err(PathError::Invalid(v));
    }
    let pos = &walk.positions()[1..];
    let height_sum = pos.iter().map(|p| p.1).sum::<i64>() as u64;
    let x_axis_returns = walk
        .steps
        .iter()
        .zip(pos)
        .filter(|&(&s, p)| s == WalkStep::SE && p.1 == 0)
        .count() as u64;
    let last = walk.len().saturating_sub(1);
    let y_axis_returns_excl_last = walk
        .steps
        .iter()
        .zip(pos)
        .enumerate()
        .filter(|&(i, (&s, p))| i != last && matches!(s, WalkStep::W | WalkStep::NW) && p.0 == 0)
        .count() as u64;
    Ok(WalkStats { height_sum, x_axis_returns, y_axis_returns_excl_last })
}

/// Every valid walk of length `len` from `(h, 0)` to `(s, 0)`, in lexicographic
/// order `e < w < se < nw`.
pub fn enumerate_walks(h: usize, s: usize, len: usize) -> Result<Vec<QuarterWalk>, PathError> {
    if len > MAX_ENUMERATION_LENGTH {
        return Err(PathError::ScaleExceeded { length: len, bound: MAX_ENUMERATION_LENGTH });
    }
    struct Search {
        target: i64,
        start: usize,
        out: Vec<QuarterWalk>,
        word: Vec<WalkStep>,
    }
    impl Search {
        fn go(&mut self, x: i64, y: i64, left: usize) {
            if left == 0 {
                if x == self.target && y == 0 {
                    self.out.push(QuarterWalk::new(self.start, self.word.clone()));
                }
                return;
            }
            let prev_axis_w = self.word.last() == Some(&WalkStep::W) && y == 0;
            for step in WalkStep::ALL {
                if step == WalkStep::E && prev_axis_w {
                    continue;
                }
                let (dx, dy) = step.delta();
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || ny.max((nx - self.target).abs()) > left as i64 - 1 {
                    continue;
                }
                self.word.push(step);
                self.go(nx, ny, left - 1);
                self.word.pop();
            }
        }
    }
    let mut search = Search { target: s as i64, start: h, out: Vec::new(), word: Vec::with_capacity(len) };
    search.go(h as i64, 0, len);
    Ok(search.out)
}
