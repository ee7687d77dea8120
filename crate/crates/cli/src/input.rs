use ics_core::poset::{find_violation, ElementSubset, FinitePoset, PosetSpec};
use serde_json::Value;

use crate::CliError;

pub fn poset(text: &str) -> Result<FinitePoset, CliError> {
    let spec: PosetSpec = text.parse()?;
    Ok(ics_core::poset::build_poset(&spec)?)
}

fn label(v: &Value) -> Result<Vec<usize>, CliError> {
    let items = v.as_array().ok_or_else(|| CliError::Invalid(format!("element {v} is not an array")))?;
    items
        .iter()
        .map(|c| {
            c.as_u64()
                .map(|c| c as usize)
                .ok_or_else(|| CliError::Invalid(format!("coordinate {c} is not a non-negative integer")))
        })
        .collect()
}

/// Parses a set given as a JSON array of elements, one bare element, or the empty string.
pub fn subset(poset: &FinitePoset, text: &str) -> Result<ElementSubset, CliError> {
    let text = text.trim();
    let labels = if text.is_empty() {
        Vec::new()
    } else {
        let v: Value = serde_json::from_str(text)?;
        match v.as_array() {
            Some(items) if !items.is_empty() && items.iter().all(Value::is_number) => vec![label(&v)?],
            Some(items) => items.iter().map(label).collect::<Result<_, _>>()?,
            None => return Err(CliError::Invalid(format!("expected a JSON array, got {v}"))),
        }
    };
    Ok(poset.subset_from_labels(labels.iter().map(Vec::as_slice))?)
}

/// Like [`subset`], but also rejects sets that are not interval-closed.
pub fn ics(poset: &FinitePoset, text: &str) -> Result<ElementSubset, CliError> {
    let s = subset(poset, text)?;
    if let Some((x, z, y)) = find_violation(poset, &s) {
        return Err(CliError::Invalid(format!(
            "not interval-closed: {x} < {z} < {y} with {z} missing",
            x = label_json(poset.label(x)),
            z = label_json(poset.label(z)),
            y = label_json(poset.label(y)),
        )));
    }
    Ok(s)
}

pub fn label_json(label: &[usize]) -> String {
    serde_json::to_string(label).expect("labels serialize")
}

pub fn subset_json(poset: &FinitePoset, s: &ElementSubset) -> Value {
    serde_json::to_value(poset.subset_labels(s)).expect("labels serialize")
}
