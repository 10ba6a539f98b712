//! JSON interchange formats.
//!
//! Matrix entries are JSON integers when they fit in `i64` and strings
//! (`"p"` or `"p/q"`) otherwise. Frieze and solution entries are always
//! strings. Reading accepts either form everywhere.

use std::collections::BTreeMap;

use jfrieze_core::rational::{self, int, Rational};
use jfrieze_core::recurrence::SolutionWindow;
use jfrieze_core::{JugglingFunction, PeriodicFrieze, RationalMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

/// One exact number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    /// Fits in `i64`.
    Int(i64),
    /// `"p"` or `"p/q"`.
    Text(String),
}

impl Entry {
    /// Integer form when possible.
    pub fn number(r: &Rational) -> Self {
        match small_integer(r) {
            Some(v) => Entry::Int(v),
            None => Entry::Text(rational::format(r)),
        }
    }

    /// Always the string form.
    pub fn text(r: &Rational) -> Self {
        Entry::Text(rational::format(r))
    }

    /// Parse back to an exact rational.
    pub fn value(&self) -> Result<Rational, CliError> {
        match self {
            Entry::Int(v) => Ok(int(*v)),
            Entry::Text(s) => {
                rational::parse(s).ok_or_else(|| CliError::Input(format!("not an exact number: {s:?}")))
            }
        }
    }
}

fn small_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.numer()).ok()
    } else {
        None
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
}

/// Siteswap given as throws, or as the usual text.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SiteswapField {
    Throws(Vec<i64>),
    Text(String),
}

#[derive(Serialize, Deserialize)]
struct FriezeJson {
    siteswap: SiteswapField,
    columns: BTreeMap<usize, Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
struct JugglingJson {
    period: usize,
    throws: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct SolutionJson {
    period: usize,
    sign_exponent: i64,
    columns: BTreeMap<usize, Vec<Entry>>,
}

// Two-space indentation, with arrays of scalars kept on one line.
fn pretty<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(indent + 2), Value::String(key.clone())));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn values(entries: &[Entry]) -> Result<Vec<Rational>, CliError> {
    entries.iter().map(Entry::value).collect()
}

fn columns_in_order(
    columns: BTreeMap<usize, Vec<Entry>>,
    n: usize,
    len: usize,
) -> Result<Vec<Vec<Rational>>, CliError> {
    if columns.keys().copied().ne(1..=n) {
        return Err(CliError::Input(format!("columns must be keyed \"1\" to \"{n}\"")));
    }
    columns
        .into_iter()
        .map(|(b, col)| {
            if col.len() != len {
                return Err(CliError::Input(format!("column {b} has {} entries, expected {len}", col.len())));
            }
            values(&col)
        })
        .collect()
}

/// `{"rows": k, "cols": n, "entries": [[...], ...]}`.
pub fn matrix_to_json(m: &RationalMatrix) -> String {
    pretty(&MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.to_rows().iter().map(|row| row.iter().map(Entry::number).collect()).collect(),
    })
}

/// Inverse of [`matrix_to_json`].
pub fn matrix_from_json(text: &str) -> Result<RationalMatrix, CliError> {
    let raw: MatrixJson = serde_json::from_str(text)?;
    if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
        return Err(CliError::Input(format!("entries do not form a {} x {} array", raw.rows, raw.cols)));
    }
    let rows = raw.entries.iter().map(|r| values(r)).collect::<Result<Vec<_>, _>>()?;
    Ok(RationalMatrix::from_rows(raw.cols, rows)?)
}

/// `{"siteswap": [t_1, ...], "columns": {"1": [C_{1,1}, ..., C_{1+n,1}], ...}}`.
pub fn frieze_to_json(c: &PeriodicFrieze) -> String {
    let n = c.period();
    pretty(&FriezeJson {
        siteswap: SiteswapField::Throws(c.shape().throws()),
        columns: (1..=n).map(|b| (b, c.column(b).iter().map(Entry::text).collect())).collect(),
    })
}

/// Inverse of [`frieze_to_json`]. The siteswap may also be a string.
pub fn frieze_from_json(text: &str) -> Result<PeriodicFrieze, CliError> {
    let raw: FriezeJson = serde_json::from_str(text)?;
    let shape = match raw.siteswap {
        SiteswapField::Throws(t) => JugglingFunction::from_throws(&t)?,
        SiteswapField::Text(s) => jfrieze_core::juggling::parse_siteswap(&s)?,
    };
    let n = shape.period();
    let columns = columns_in_order(raw.columns, n, n + 1)?;
    Ok(PeriodicFrieze::new(shape, columns)?)
}

/// `{"period": n, "throws": [...]}`.
pub fn juggling_to_json(p: &JugglingFunction) -> String {
    pretty(&JugglingJson { period: p.period(), throws: p.throws() })
}

/// Inverse of [`juggling_to_json`].
pub fn juggling_from_json(text: &str) -> Result<JugglingFunction, CliError> {
    let raw: JugglingJson = serde_json::from_str(text)?;
    if raw.throws.len() != raw.period {
        return Err(CliError::Input(format!("period {} but {} throws", raw.period, raw.throws.len())));
    }
    Ok(JugglingFunction::from_throws(&raw.throws)?)
}

/// `{"period": n, "sign_exponent": s, "columns": {"1": [x_1, ..., x_n], ...}}`,
/// column `b` listing rows `b` to `b + n - 1`.
pub fn solution_to_json(s: &SolutionWindow) -> String {
    let n = s.period();
    pretty(&SolutionJson {
        period: n,
        sign_exponent: s.sign_exponent(),
        columns: (1..=n).map(|b| (b, s.column(b).iter().map(Entry::text).collect())).collect(),
    })
}

/// Inverse of [`solution_to_json`].
pub fn solution_from_json(text: &str) -> Result<SolutionWindow, CliError> {
    let raw: SolutionJson = serde_json::from_str(text)?;
    let columns = columns_in_order(raw.columns, raw.period, raw.period)?;
    Ok(SolutionWindow::new(raw.period, raw.sign_exponent, columns)?)
}

/// Serialize any report value.
pub fn report<T: Serialize>(value: &T) -> String {
    pretty(value)
}
