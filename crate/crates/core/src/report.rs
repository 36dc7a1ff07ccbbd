//! Report rendering. Every command builds one `Report` and prints it as
//! key-value text, JSON, or CSV; all three are deterministic byte-for-byte
//! given the same inputs.

use crate::Rational;
use serde_json::{json, Map};

/// Rationals are printed reduced with an explicit denominator, so "1/1"
/// rather than "1"; this keeps the JSON encoding uniform.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[derive(Debug, Clone)]
pub enum Value {
    Nat(u64),
    Bool(bool),
    Text(String),
    Rat(Rational),
    OptRat(Option<Rational>),
    Nats(Vec<u64>),
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<Value>>,
    },
}

impl Value {
    fn human(&self) -> String {
        match self {
            Value::Nat(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Rat(r) => format_rational(r),
            Value::OptRat(Some(r)) => format_rational(r),
            Value::OptRat(None) => "-".into(),
            Value::Nats(ns) => {
                let body: Vec<String> = ns.iter().map(u64::to_string).collect();
                format!("{{{}}}", body.join(", "))
            }
            Value::Table { .. } => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Value::Nat(n) => json!(n),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
            Value::Rat(r) => json!(format_rational(r)),
            Value::OptRat(Some(r)) => json!(format_rational(r)),
            Value::OptRat(None) => serde_json::Value::Null,
            Value::Nats(ns) => json!(ns),
            Value::Table { columns, rows } => {
                let mut out = Vec::with_capacity(rows.len());
                for row in rows {
                    let mut obj = Map::new();
                    for (c, v) in columns.iter().zip(row) {
                        obj.insert(c.clone(), v.json());
                    }
                    out.push(serde_json::Value::Object(obj));
                }
                serde_json::Value::Array(out)
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: Value) {
        self.fields.push((key.to_string(), value));
    }

    pub fn push_text(&mut self, key: &str, value: impl Into<String>) {
        self.push(key, Value::Text(value.into()));
    }

    /// "key: value" lines; tables are rendered as aligned columns indented
    /// under their key.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            match value {
                Value::Table { columns, rows } => {
                    out.push_str(key);
                    out.push_str(":\n");
                    let mut grid: Vec<Vec<String>> = vec![columns.clone()];
                    for row in rows {
                        grid.push(row.iter().map(Value::human).collect());
                    }
                    let ncols = columns.len();
                    let mut widths = vec![0usize; ncols];
                    for row in &grid {
                        for (i, cell) in row.iter().enumerate() {
                            widths[i] = widths[i].max(cell.len());
                        }
                    }
                    for row in &grid {
                        out.push(' ');
                        for (i, cell) in row.iter().enumerate() {
                            if i > 0 {
                                out.push_str("  ");
                            }
                            out.push_str(cell);
                            if i + 1 < ncols {
                                for _ in cell.len()..widths[i] {
                                    out.push(' ');
                                }
                            }
                        }
                        out.push('\n');
                    }
                }
                v => {
                    out.push_str(key);
                    out.push_str(": ");
                    out.push_str(&v.human());
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Pretty JSON object; keys come out sorted because the underlying map
    /// is ordered.
    pub fn render_json(&self) -> String {
        let mut obj = Map::new();
        for (key, value) in &self.fields {
            obj.insert(key.clone(), value.json());
        }
        let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(obj))
            .expect("report serialization cannot fail");
        s.push('\n');
        s
    }

    /// CSV of the first table field, if any.
    pub fn render_csv(&self) -> Option<String> {
        self.fields.iter().find_map(|(_, v)| match v {
            Value::Table { columns, rows } => {
                let mut out = String::new();
                out.push_str(&csv_row(columns.iter().map(String::as_str)));
                for row in rows {
                    let cells: Vec<String> = row.iter().map(Value::human).collect();
                    out.push_str(&csv_row(cells.iter().map(String::as_str)));
                }
                Some(out)
            }
            _ => None,
        })
    }
}

/// Plot-ready series: one row per exponent, the density split into exact
/// numerator and denominator columns. Absent densities leave both blank.
pub fn series_csv(rows: &[(u64, Option<Rational>)]) -> String {
    let mut out = String::from("n,ld_num,ld_den\n");
    for (n, ld) in rows {
        match ld {
            Some(r) => out.push_str(&format!("{n},{},{}\n", r.numer(), r.denom())),
            None => out.push_str(&format!("{n},,\n")),
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row<'a>(cells: impl Iterator<Item = &'a str>) -> String {
    let mut row = cells.map(csv_field).collect::<Vec<_>>().join(",");
    row.push('\n');
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn sample() -> Report {
        let mut r = Report::new();
        r.push_text("kind", "numerical semigroup");
        r.push("element", Value::Nat(60));
        r.push("lengths", Value::Nats(vec![3, 7, 8, 9, 10]));
        r.push("elasticity", Value::Rat(ratio(10, 3)));
        r.push("length_density", Value::OptRat(Some(ratio(4, 7))));
        r.push("accepted", Value::Bool(false));
        r.push(
            "series",
            Value::Table {
                columns: vec!["n".into(), "ld".into()],
                rows: vec![
                    vec![Value::Nat(1), Value::OptRat(Some(ratio(1, 1)))],
                    vec![Value::Nat(2), Value::OptRat(None)],
                ],
            },
        );
        r
    }

    #[test]
    fn human_output_is_stable() {
        let expected = "kind: numerical semigroup\n\
                        element: 60\n\
                        lengths: {3, 7, 8, 9, 10}\n\
                        elasticity: 10/3\n\
                        length_density: 4/7\n\
                        accepted: false\n\
                        series:\n n  ld\n 1  1/1\n 2  -\n";
        assert_eq!(sample().render_human(), expected);
    }

    #[test]
    fn json_output_parses_with_sorted_keys() {
        let text = sample().render_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(obj["elasticity"], json!("10/3"));
        assert_eq!(obj["length_density"], json!("4/7"));
        assert_eq!(obj["series"][1]["ld"], serde_json::Value::Null);
        assert_eq!(obj["lengths"], json!([3, 7, 8, 9, 10]));
    }

    #[test]
    fn csv_quotes_embedded_commas() {
        let mut r = Report::new();
        r.push(
            "rows",
            Value::Table {
                columns: vec!["element".into(), "ld".into()],
                rows: vec![vec![
                    Value::Text("(4,0,0)".into()),
                    Value::OptRat(Some(ratio(1, 2))),
                ]],
            },
        );
        assert_eq!(
            r.render_csv().unwrap(),
            "element,ld\n\"(4,0,0)\",1/2\n"
        );
        assert!(Report::new().render_csv().is_none());
    }

    #[test]
    fn series_csv_splits_exact_fractions() {
        let rows = vec![(99, Some(ratio(1, 1))), (100, Some(ratio(350, 701))), (7, None)];
        assert_eq!(
            series_csv(&rows),
            "n,ld_num,ld_den\n99,1,1\n100,350,701\n7,,\n"
        );
    }

    #[test]
    fn integral_rationals_keep_denominator() {
        assert_eq!(format_rational(&ratio(3, 1)), "3/1");
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
    }
}
