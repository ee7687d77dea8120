use std::io::Write;

use ics_core::bijections::{
    classify_elements, ics_to_motzkin, ics_to_nested_pair, ics_to_walk, motzkin_to_ics_in, nested_pair_to_ics,
    walk_to_ics_in,
};
use ics_core::paths::{motzkin_stats, walk_stats, MotzkinWord, NestedPairBT, QuarterWalk};
use ics_core::poset::{count_ics, enumerate_ics, subset_stats, EnumerationConfig, FinitePoset, PosetSpec};
use ics_core::series::{
    b_minuscule_counts, b_root_counts, closed_form_count, rectangle_counts, truncated_count, truncated_counts,
    type_a_counts, ClosedForm, SeriesConfig,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::input::{self, subset_json};
use crate::{CliError, EnumerateAs, Format, MapTarget, Method, SeriesKind};

fn closed_form(spec: &PosetSpec) -> Option<ClosedForm> {
    let (m, n) = match *spec {
        PosetSpec::ChainProduct { m, n } | PosetSpec::TruncatedRectangle { m, n, r: 0 } => (m.min(n), m.max(n)),
        PosetSpec::OrdinalSumAntichains { ref parts } => return Some(ClosedForm::OrdinalSum(parts.clone())),
        _ => return None,
    };
    match m {
        0 => Some(ClosedForm::Chain(0)),
        1 => Some(ClosedForm::Chain(n)),
        2 => Some(ClosedForm::TwoByN(n)),
        3 => Some(ClosedForm::ThreeByN(n)),
        _ => None,
    }
}

fn series_count(spec: &PosetSpec, cfg: &SeriesConfig) -> Result<Option<BigUint>, CliError> {
    let count = match *spec {
        PosetSpec::ChainProduct { m, n } => rectangle_counts(m, n, cfg)?.swap_remove(m).swap_remove(n),
        PosetSpec::TruncatedRectangle { m, n, r } => truncated_count(m, n, r, cfg)?,
        PosetSpec::TypeARoot { k } => type_a_counts(k + 1, cfg)?.swap_remove(k),
        PosetSpec::TypeBMinuscule { n } => b_minuscule_counts(n, cfg)?.swap_remove(n),
        PosetSpec::TypeBRoot { n: 0 } => BigUint::from(1u32),
        PosetSpec::TypeBRoot { n } => b_root_counts(n, cfg)?.swap_remove(n - 1),
        _ => return Ok(None),
    };
    Ok(Some(count))
}

fn engine(
    method: Method,
    spec: &PosetSpec,
    max_elements: usize,
    cfg: &SeriesConfig,
) -> Result<Option<BigUint>, CliError> {
    match method {
        Method::Oracle => {
            let poset = ics_core::poset::build_poset(spec)?;
            Ok(Some(count_ics(&poset, &EnumerationConfig::with_max_elements(max_elements))?))
        }
        Method::Formula => closed_form(spec).map(|f| closed_form_count(&f)).transpose().map_err(Into::into),
        Method::Series => series_count(spec, cfg),
        Method::Auto | Method::All => unreachable!("composite methods are resolved by the caller"),
    }
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Auto => "auto",
        Method::Oracle => "oracle",
        Method::Formula => "formula",
        Method::Series => "series",
        Method::All => "all",
    }
}

pub fn count(
    out: &mut dyn Write,
    json: bool,
    text: &str,
    method: Method,
    max_elements: usize,
    cfg: &SeriesConfig,
) -> Result<(), CliError> {
    let spec: PosetSpec = text.parse()?;
    spec.validate()?;
    let mut results = Vec::new();
    match method {
        Method::Auto => {
            for m in [Method::Series, Method::Formula, Method::Oracle] {
                if let Some(c) = engine(m, &spec, max_elements, cfg)? {
                    results.push((m, c));
                    break;
                }
            }
        }
        Method::All => {
            for m in [Method::Oracle, Method::Formula, Method::Series] {
                if let Some(c) = engine(m, &spec, max_elements, cfg)? {
                    results.push((m, c));
                }
            }
        }
        m => match engine(m, &spec, max_elements, cfg)? {
            Some(c) => results.push((m, c)),
            None => return Err(CliError::Invalid(format!("no {} engine for {spec}", method_name(m)))),
        },
    }
    if json {
        let counts: Vec<Value> = results
            .iter()
            .map(|(m, c)| json!({ "method": method_name(*m), "count": c.to_string() }))
            .collect();
        writeln!(out, "{}", json!({ "poset": spec.to_string(), "counts": counts }))?;
    } else {
        let line: Vec<String> = results.iter().map(|(_, c)| c.to_string()).collect();
        writeln!(out, "{}", line.join(", "))?;
    }
    if results.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err(CliError::Verification(format!("engines disagree on {spec}")));
    }
    Ok(())
}

pub fn enumerate(
    out: &mut dyn Write,
    json: bool,
    text: &str,
    to: EnumerateAs,
    max_elements: usize,
    limit: Option<usize>,
) -> Result<(), CliError> {
    let poset = input::poset(text)?;
    let sets = enumerate_ics(&poset, &EnumerationConfig::with_max_elements(max_elements), limit)?;
    let mut items = Vec::new();
    for s in sets {
        let item = match to {
            EnumerateAs::Set => subset_json(&poset, &s),
            EnumerateAs::Motzkin => Value::String(ics_to_motzkin(&poset, &s)?.to_string()),
            EnumerateAs::Walk => Value::String(ics_to_walk(&poset, &s)?.to_string()),
        };
        if json {
            items.push(item);
        } else {
            match item {
                Value::String(s) => writeln!(out, "{s}")?,
                other => writeln!(out, "{other}")?,
            }
        }
    }
    if json {
        writeln!(out, "{}", json!({ "poset": poset.spec().to_string(), "items": items }))?;
    }
    Ok(())
}

fn walk_start(poset: &FinitePoset) -> Result<usize, CliError> {
    let frame = poset
        .frame()
        .ok_or_else(|| CliError::Invalid(format!("{} has no quarter-plane walk encoding", poset.spec())))?;
    Ok(frame.n - frame.r)
}

fn pair_json(pair: &NestedPairBT) -> Value {
    let text = pair.to_string();
    let lines: Vec<&str> = text.lines().collect();
    json!({ "m": pair.m, "n": pair.n, "r": pair.r, "bottom": lines[1], "top": lines[2] })
}

pub fn map(
    out: &mut dyn Write,
    json: bool,
    text: &str,
    input: &str,
    to: MapTarget,
    inverse: bool,
) -> Result<(), CliError> {
    let poset = input::poset(text)?;
    if inverse {
        let s = match to {
            MapTarget::Motzkin => motzkin_to_ics_in(&poset, &input.parse::<MotzkinWord>()?)?,
            MapTarget::Walk => walk_to_ics_in(&poset, &QuarterWalk::parse(walk_start(&poset)?, input)?)?,
            MapTarget::Pair => nested_pair_to_ics(&poset, &input.parse::<NestedPairBT>()?)?,
            MapTarget::Classify => return Err(CliError::Invalid("classification has no inverse".into())),
        };
        let set = subset_json(&poset, &s);
        if json {
            writeln!(out, "{}", json!({ "poset": poset.spec().to_string(), "set": set }))?;
        } else {
            writeln!(out, "{set}")?;
        }
        return Ok(());
    }
    let s = input::ics(&poset, input)?;
    match to {
        MapTarget::Motzkin => {
            let word = ics_to_motzkin(&poset, &s)?;
            if json {
                writeln!(out, "{}", json!({ "motzkin": word.to_string() }))?;
            } else {
                writeln!(out, "{word}")?;
            }
        }
        MapTarget::Walk => {
            let walk = ics_to_walk(&poset, &s)?;
            if json {
                writeln!(out, "{}", json!({ "start": [walk.start_x, 0], "walk": walk.to_string() }))?;
            } else {
                writeln!(out, "{walk}")?;
            }
        }
        MapTarget::Pair => {
            let pair = ics_to_nested_pair(&poset, &s)?;
            if json {
                writeln!(out, "{}", pair_json(&pair))?;
            } else {
                writeln!(out, "{pair}")?;
            }
        }
        MapTarget::Classify => {
            let c = classify_elements(&poset, &s)?;
            let parts = [
                ("in", subset_json(&poset, &c.in_i)),
                ("below", subset_json(&poset, &c.below_only)),
                ("above", subset_json(&poset, &c.above_only)),
                ("incomparable", subset_json(&poset, &c.incomparable)),
            ];
            if json {
                let obj: serde_json::Map<String, Value> = parts.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
                writeln!(out, "{}", Value::Object(obj))?;
            } else {
                for (k, v) in parts {
                    writeln!(out, "{k}: {v}")?;
                }
            }
        }
    }
    Ok(())
}

pub fn stats(out: &mut dyn Write, json: bool, text: &str, input: &str) -> Result<(), CliError> {
    let poset = input::poset(text)?;
    let s = input::ics(&poset, input)?;
    let st = subset_stats(&poset, &s);
    let motzkin = match ics_to_motzkin(&poset, &s) {
        Ok(word) => Some((motzkin_stats(&word)?, word)),
        Err(_) => None,
    };
    let walk = match ics_to_walk(&poset, &s) {
        Ok(walk) => Some((walk_stats(&walk)?, walk)),
        Err(_) => None,
    };
    if json {
        let doc = json!({
            "set": st,
            "motzkin": motzkin.as_ref().map(|(ms, w)| json!({ "word": w.to_string(), "stats": ms })),
            "walk": walk.as_ref().map(|(ws, w)| json!({ "walk": w.to_string(), "stats": ws })),
        });
        writeln!(out, "{doc}")?;
        return Ok(());
    }
    writeln!(out, "cardinality: {}", st.cardinality)?;
    writeln!(out, "components: {}", st.component_count)?;
    writeln!(out, "incomparable: {}", st.incomparable_count)?;
    writeln!(out, "minimal: {}", st.minimal_in_subset)?;
    if let Some(h) = st.hits_all_files {
        writeln!(out, "hits all files: {h}")?;
    }
    if let Some((ms, word)) = motzkin {
        writeln!(out, "motzkin: {word}")?;
        writeln!(out, "  area {} returns {} axis runs {}", ms.area, ms.returns, ms.axis_run_product_sum)?;
    }
    if let Some((ws, walk)) = walk {
        writeln!(out, "walk: {walk}")?;
        writeln!(
            out,
            "  height sum {} x-axis returns {} y-axis returns {}",
            ws.height_sum, ws.x_axis_returns, ws.y_axis_returns_excl_last
        )?;
    }
    Ok(())
}

fn write_sequence(
    out: &mut dyn Write,
    name: &str,
    offset: usize,
    values: &[BigUint],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            let line: Vec<String> = values.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(", "))?;
        }
        Format::Csv => {
            writeln!(out, "n,count")?;
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", i + offset)?;
            }
        }
        Format::Json => {
            let values: Vec<String> = values.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", json!({ "series": name, "offset": offset, "values": values }))?;
        }
    }
    Ok(())
}

pub fn series(
    out: &mut dyn Write,
    which: SeriesKind,
    order: usize,
    format: Format,
    cfg: &SeriesConfig,
) -> Result<(), CliError> {
    match which {
        SeriesKind::Bminuscule => write_sequence(out, "bminuscule", 0, &b_minuscule_counts(order, cfg)?, format),
        SeriesKind::TypeA => write_sequence(out, "typeA", 1, &type_a_counts(order, cfg)?, format),
        SeriesKind::Broot => write_sequence(out, "broot", 1, &b_root_counts(order, cfg)?, format),
        SeriesKind::Rectangle => {
            let table = rectangle_counts(order, order, cfg)?;
            match format {
                Format::Text => {
                    for row in &table {
                        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
                        writeln!(out, "{}", line.join(", "))?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "m,n,count")?;
                    for (m, row) in table.iter().enumerate() {
                        for (n, c) in row.iter().enumerate() {
                            writeln!(out, "{m},{n},{c}")?;
                        }
                    }
                }
                Format::Json => {
                    let rows: Vec<Vec<String>> =
                        table.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
                    writeln!(out, "{}", json!({ "series": "rectangle", "rows": rows }))?;
                }
            }
            Ok(())
        }
        SeriesKind::Truncated => {
            let counts: Vec<_> =
                truncated_counts(order, order, cfg)?.into_iter().filter(|c| c.m + c.n <= order).collect();
            match format {
                Format::Text => {
                    for c in &counts {
                        writeln!(out, "{} {} {}: {}", c.m, c.n, c.r, c.count)?;
                    }
                }
                Format::Csv => {
                    writeln!(out, "m,n,r,count")?;
                    for c in &counts {
                        writeln!(out, "{},{},{},{}", c.m, c.n, c.r, c.count)?;
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> = counts
                        .iter()
                        .map(|c| json!({ "m": c.m, "n": c.n, "r": c.r, "count": c.count.to_string() }))
                        .collect();
                    writeln!(out, "{}", json!({ "series": "truncated", "entries": rows }))?;
                }
            }
            Ok(())
        }
    }
}
