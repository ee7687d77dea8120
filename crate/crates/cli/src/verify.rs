//! The built-in verification suite behind `ics verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use ics_core::bijections::{
    ics_to_motzkin, ics_to_walk, is_full_ics, motzkin_to_ics_in, walk_to_ics_in, ShiftMap,
};
use ics_core::paths::{motzkin_stats, walk_stats};
use ics_core::poset::{
    build_poset, count_ics, enumerate_ics, subset_stats, vertical_involution, ElementSubset, EnumerationConfig,
    FinitePoset, PosetSpec,
};
use ics_core::series::{
    b_minuscule_counts, b_root_counts, closed_form_count, full_count, narayana, rectangle_counts, truncated_count,
    truncated_counts, type_a_counts, walk_dp_table, ClosedForm, SeriesConfig,
};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::Level;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ReferenceSequence,
    ReferenceTable,
    ClosedForm,
    Oracle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::ReferenceSequence => "reference-sequence",
            Source::ReferenceTable => "reference-table",
            Source::ClosedForm => "closed-form",
            Source::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub source: Source,
    pub pass: bool,
    /// Wall time in milliseconds.
    pub elapsed: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub level: &'static str,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict}  {} [{}] {:.1} ms", c.name, c.source, c.elapsed)?;
            if !c.pass {
                writeln!(f, "      expected {}", c.expected)?;
                writeln!(f, "      actual   {}", c.actual)?;
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        writeln!(f, "{passed}/{} checks passed ({} level)", self.checks.len(), self.level)
    }
}

type Outcome = Result<(Value, Value), String>;

struct Suite {
    checks: Vec<CheckRecord>,
}

impl Suite {
    fn check(&mut self, name: &str, source: Source, body: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let (expected, actual, pass) = match body() {
            Ok((e, a)) => {
                let pass = e == a;
                (e, a, pass)
            }
            Err(msg) => (Value::Null, Value::String(format!("error: {msg}")), false),
        };
        self.checks.push(CheckRecord {
            name: name.to_string(),
            expected,
            actual,
            source,
            pass,
            elapsed: start.elapsed().as_secs_f64() * 1e3,
        });
    }
}

fn strings(values: &[BigUint]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn ints(values: &[u64]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn poset(text: &str) -> Result<FinitePoset, String> {
    let spec: PosetSpec = text.parse().map_err(|e| format!("{e}"))?;
    build_poset(&spec).map_err(|e| e.to_string())
}

fn oracle_config() -> EnumerationConfig {
    EnumerationConfig::with_max_elements(40)
}

fn brute(text: &str) -> Result<BigUint, String> {
    count_ics(&poset(text)?, &oracle_config()).map_err(|e| e.to_string())
}

fn all_ics(p: &FinitePoset) -> Result<Vec<ElementSubset>, String> {
    Ok(enumerate_ics(p, &oracle_config(), None).map_err(|e| e.to_string())?.collect())
}

const TYPE_A: [u64; 10] = [1, 2, 8, 45, 307, 2385, 20362, 186812, 1814156, 18448851];
const B_MINUSCULE: [u64; 10] = [2, 7, 26, 96, 356, 1331, 5014, 19006, 72412, 277058];
const B_ROOT: [u64; 9] = [2, 13, 115, 1166, 12883, 150912, 1844322, 23276741, 301289155];

pub fn run_suite(level: Level, cfg: &SeriesConfig) -> VerifyReport {
    let mut suite = Suite { checks: Vec::new() };
    let e = |e: ics_core::series::SeriesError| e.to_string();

    suite.check("type-A root posets, n = 1..10", Source::ReferenceSequence, || {
        Ok((ints(&TYPE_A), strings(&type_a_counts(10, cfg).map_err(e)?)))
    });
    suite.check("type-B minuscule posets, n = 1..10", Source::ReferenceSequence, || {
        Ok((ints(&B_MINUSCULE), strings(&b_minuscule_counts(10, cfg).map_err(e)?[1..])))
    });
    suite.check("type-B root posets, n = 1..9", Source::ReferenceSequence, || {
        Ok((ints(&B_ROOT), strings(&b_root_counts(9, cfg).map_err(e)?)))
    });
    suite.check("truncated rectangle P(3x2;1)", Source::ReferenceSequence, || {
        Ok((json!("24"), json!(truncated_count(3, 2, 1, cfg).map_err(e)?.to_string())))
    });
    suite.check("[2]x[n] and [3]x[n] formulas, n <= 6", Source::ClosedForm, || {
        let table = rectangle_counts(3, 6, cfg).map_err(e)?;
        let mut formula = Vec::new();
        for n in 0..=6 {
            formula.push(closed_form_count(&ClosedForm::TwoByN(n)).map_err(e)?);
            formula.push(closed_form_count(&ClosedForm::ThreeByN(n)).map_err(e)?);
        }
        let series: Vec<BigUint> = (0..=6).flat_map(|n| [table[2][n].clone(), table[3][n].clone()]).collect();
        Ok((strings(&formula), strings(&series)))
    });
    suite.check("rectangles against enumeration, m + n <= 8", Source::Oracle, || {
        let table = rectangle_counts(8, 8, cfg).map_err(e)?;
        let (mut brute_counts, mut series) = (Vec::new(), Vec::new());
        for m in 0..=8usize {
            for n in 0..=8 - m {
                brute_counts.push(brute(&format!("rect:{m}x{n}"))?);
                series.push(table[m][n].clone());
            }
        }
        Ok((strings(&brute_counts), strings(&series)))
    });
    let table_quick: &[((usize, usize, usize), u64)] =
        &[((2, 2, 2), 101), ((2, 2, 3), 526), ((2, 2, 4), 2085), ((2, 2, 5), 6793), ((2, 3, 3), 5030)];
    let table_full: &[((usize, usize, usize), u64)] = &[((2, 3, 4), 33792)];
    let table = if level == Level::Full { [table_quick, table_full].concat() } else { table_quick.to_vec() };
    for ((l, m, n), printed) in table {
        suite.check(&format!("three-chain product [{l}]x[{m}]x[{n}]"), Source::ReferenceTable, || {
            Ok((json!(printed.to_string()), json!(brute(&format!("cube:{l}x{m}x{n}"))?.to_string())))
        });
    }
    worked_examples(&mut suite);
    if level == Level::Full {
        full_checks(&mut suite, cfg);
    }
    let pass = suite.checks.iter().all(|c| c.pass);
    VerifyReport { level: if level == Level::Full { "full" } else { "quick" }, pass, checks: suite.checks }
}

fn worked_examples(suite: &mut Suite) {
    suite.check("[13]x[14] example to Motzkin word", Source::ReferenceSequence, || {
        let p = poset("rect:13x14")?;
        let s = p
            .subset_from_labels(
                [
                    [1, 13], [2, 13], [3, 13], [2, 12], [3, 12], [2, 11], [3, 11], [6, 9], [7, 9], [8, 9], [7, 8],
                    [8, 8], [7, 7], [8, 7], [7, 6], [8, 6], [9, 6], [11, 4], [11, 3], [11, 2],
                ]
                .iter()
                .map(|l| &l[..]),
            )
            .map_err(|e| e.to_string())?;
        let word = ics_to_motzkin(&p, &s).map_err(|e| e.to_string())?;
        let st = motzkin_stats(&word).map_err(|e| e.to_string())?;
        Ok((
            json!("2 U 1 U 2 D D 1 1 2 U 1 U 2 2 D 1 D 1 2 U 2 2 D 1 1 2 (20, 3, 5)"),
            json!(format!("{word} ({}, {}, {})", st.area, st.returns, st.axis_run_product_sum)),
        ))
    });
    let walk_examples: [(&str, &[[usize; 2]], &str); 2] = [
        ("rootA:5", &[[3, 5], [3, 6], [6, 3]], "e e nw w se e e w nw se w w (3, 2, 1)"),
        (
            "trunc:4x5:1",
            &[[1, 2], [1, 3], [2, 2], [3, 1], [1, 4], [2, 3], [3, 2], [4, 1], [1, 5], [2, 4], [4, 2]],
            "nw w nw w se e nw se se (11, 1, 1)",
        ),
    ];
    for (text, labels, expected) in walk_examples {
        suite.check(&format!("{text} example to walk"), Source::ReferenceSequence, || {
            let p = poset(text)?;
            let s = p.subset_from_labels(labels.iter().map(|l| &l[..])).map_err(|e| e.to_string())?;
            let walk = ics_to_walk(&p, &s).map_err(|e| e.to_string())?;
            let st = walk_stats(&walk).map_err(|e| e.to_string())?;
            let actual =
                format!("{walk} ({}, {}, {})", st.height_sum, st.x_axis_returns, st.y_axis_returns_excl_last);
            Ok((json!(expected), json!(actual)))
        });
    }
}

fn full_checks(suite: &mut Suite, cfg: &SeriesConfig) {
    let e = |e: ics_core::series::SeriesError| e.to_string();
    suite.check("type-A against enumeration, n <= 6", Source::Oracle, || {
        let brute_counts = (0..6).map(|k| brute(&format!("rootA:{k}"))).collect::<Result<Vec<_>, _>>()?;
        Ok((strings(&brute_counts), strings(&type_a_counts(6, cfg).map_err(e)?)))
    });
    suite.check("type-B minuscule against symmetric sets of [n]x[n], n <= 6", Source::Oracle, || {
        let mut direct = Vec::new();
        let mut symmetric = Vec::new();
        for n in 1..=6 {
            direct.push(brute(&format!("minB:{n}"))?);
            let square = poset(&format!("rect:{n}x{n}"))?;
            let sigma = vertical_involution(&square).map_err(|e| e.to_string())?;
            let fixed = all_ics(&square)?.into_iter().filter(|s| sigma.apply_to_subset(s) == *s).count();
            symmetric.push(BigUint::from(fixed));
        }
        let series = b_minuscule_counts(6, cfg).map_err(e)?;
        Ok((json!([strings(&series[1..]), strings(&series[1..])]), json!([strings(&direct), strings(&symmetric)])))
    });
    suite.check("type-B roots against enumeration, n <= 4", Source::Oracle, || {
        let brute_counts = (1..=4).map(|n| brute(&format!("rootB:{n}"))).collect::<Result<Vec<_>, _>>()?;
        Ok((strings(&b_root_counts(4, cfg).map_err(e)?), strings(&brute_counts)))
    });
    suite.check("truncated rectangles: recurrence, walk DP and enumeration, m + n <= 8", Source::Oracle, || {
        let dp = walk_dp_table(8, 8, 8);
        let (mut rec, mut walks, mut brute_counts) = (Vec::new(), Vec::new(), Vec::new());
        for c in truncated_counts(8, 8, cfg).map_err(e)?.into_iter().filter(|c| c.m + c.n <= 8) {
            walks.push(dp[c.n - c.r][c.m - c.r][c.m + c.n].clone());
            brute_counts.push(brute(&format!("trunc:{}x{}:{}", c.m, c.n, c.r))?);
            rec.push(c.count);
        }
        Ok((json!([strings(&brute_counts), strings(&brute_counts)]), json!([strings(&rec), strings(&walks)])))
    });
    suite.check("full sets counted by Narayana numbers, m + n <= 8", Source::ClosedForm, || {
        let (mut nar, mut counted, mut series) = (Vec::new(), Vec::new(), Vec::new());
        for m in 1..=7usize {
            for n in 1..=8 - m {
                let p = poset(&format!("rect:{m}x{n}"))?;
                let mut full = 0u64;
                for s in all_ics(&p)? {
                    full += u64::from(is_full_ics(&p, &s).map_err(|e| e.to_string())?);
                }
                nar.push(narayana(m + n - 1, n));
                counted.push(BigUint::from(full));
                series.push(full_count(m, n, cfg).map_err(e)?);
            }
        }
        Ok((json!([strings(&nar), strings(&nar)]), json!([strings(&counted), strings(&series)])))
    });
    suite.check("shift map is a bijection onto full sets, m + n <= 7", Source::Oracle, || {
        let (mut expected, mut actual) = (Vec::new(), Vec::new());
        for m in 1..=6usize {
            for n in 1..=7 - m {
                let map = ShiftMap::new(m, n).map_err(|e| e.to_string())?;
                let eligible: Vec<_> = all_ics(map.source())?
                    .into_iter()
                    .filter(|s| subset_stats(map.source(), s).hits_all_files == Some(true))
                    .collect();
                let mut images = BTreeSet::new();
                let mut round_trips = 0u64;
                for s in &eligible {
                    let image = map.forward(s).map_err(|e| e.to_string())?;
                    round_trips += u64::from(map.inverse(&image).map_err(|e| e.to_string())? == *s);
                    images.insert(image);
                }
                let full: BTreeSet<_> = all_ics(map.target())?
                    .into_iter()
                    .filter(|s| is_full_ics(map.target(), s).unwrap_or(false))
                    .collect();
                expected.push(json!([narayana(m + n, n).to_string(), eligible.len(), true]));
                actual.push(json!([full.len().to_string(), round_trips, images == full]));
            }
        }
        Ok((Value::Array(expected), Value::Array(actual)))
    });
    suite.check("Motzkin round trips and statistics, m, n <= 4", Source::Oracle, || {
        let (mut total, mut good) = (0u64, 0u64);
        for m in 0..=4 {
            for n in 0..=4 {
                let p = poset(&format!("rect:{m}x{n}"))?;
                for s in all_ics(&p)? {
                    total += 1;
                    let word = ics_to_motzkin(&p, &s).map_err(|e| e.to_string())?;
                    let back = motzkin_to_ics_in(&p, &word).map_err(|e| e.to_string())?;
                    let ms = motzkin_stats(&word).map_err(|e| e.to_string())?;
                    let st = subset_stats(&p, &s);
                    let same = (st.cardinality as u64, st.component_count as u64, st.incomparable_count as u64)
                        == (ms.area, ms.returns, ms.axis_run_product_sum);
                    good += u64::from(back == s && same);
                }
            }
        }
        Ok((json!(total), json!(good)))
    });
    suite.check("walk round trips and statistics, rootA k <= 5 and m + n <= 8", Source::Oracle, || {
        let mut texts: Vec<String> = (0..=5).map(|k| format!("rootA:{k}")).collect();
        for m in 0..=8usize {
            for n in 0..=8 - m {
                texts.extend((0..=m.min(n)).map(|r| format!("trunc:{m}x{n}:{r}")));
            }
        }
        let (mut total, mut good) = (0u64, 0u64);
        for text in texts {
            let p = poset(&text)?;
            for s in all_ics(&p)? {
                total += 1;
                let walk = ics_to_walk(&p, &s).map_err(|e| e.to_string())?;
                let back = walk_to_ics_in(&p, &walk).map_err(|e| e.to_string())?;
                let ws = walk_stats(&walk).map_err(|e| e.to_string())?;
                let st = subset_stats(&p, &s);
                let same = (st.cardinality as u64, st.component_count as u64, st.minimal_in_subset as u64)
                    == (ws.height_sum, ws.x_axis_returns, ws.y_axis_returns_excl_last);
                good += u64::from(back == s && same);
            }
        }
        Ok((json!(total), json!(good)))
    });
}
