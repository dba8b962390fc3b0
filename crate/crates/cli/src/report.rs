//! Rendering of command results as csv, json or plain text.
//!
//! csv numbers are fixed 17-significant-digit scientific; json numbers are
//! the shortest decimal that round-trips. No output depends on locale,
//! time or environment.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Plain,
}

/// Named values in a fixed order.
pub type Record = Vec<(&'static str, f64)>;

/// A uniform table of numbers.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Output of one command: either a single record, or a data table with an
/// optional trailing annotation table.
#[derive(Debug, Clone)]
pub enum Report {
    Record(Record),
    Table {
        params: Record,
        data: (&'static str, Table),
        annotation: Option<(&'static str, Table)>,
    },
}

fn csv_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn plain_number(v: f64) -> String {
    let mag = v.abs();
    if v == 0.0 || (1e-5..1e16).contains(&mag) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn json_number(v: f64) -> Value {
    serde_json::Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

fn csv_row(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| csv_number(v))
        .collect::<Vec<_>>()
        .join(",")
}

fn json_record(record: &[(&'static str, f64)]) -> Value {
    let map: Map<String, Value> = record
        .iter()
        .map(|&(k, v)| (k.to_string(), json_number(v)))
        .collect();
    Value::Object(map)
}

fn json_table(table: &Table) -> Value {
    Value::Array(
        table
            .rows
            .iter()
            .map(|row| {
                let pairs: Vec<_> = table
                    .columns
                    .iter()
                    .copied()
                    .zip(row.iter().copied())
                    .collect();
                json_record(&pairs)
            })
            .collect(),
    )
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => self.render_json(),
            OutputFormat::Plain => self.render_plain(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Record(record) => {
                let keys: Vec<_> = record.iter().map(|(k, _)| *k).collect();
                let values: Vec<_> = record.iter().map(|(_, v)| *v).collect();
                writeln!(out, "{}", keys.join(",")).unwrap();
                writeln!(out, "{}", csv_row(&values)).unwrap();
            }
            Report::Table {
                data, annotation, ..
            } => {
                let table = &data.1;
                writeln!(out, "{}", table.columns.join(",")).unwrap();
                for row in &table.rows {
                    writeln!(out, "{}", csv_row(row)).unwrap();
                }
                if let Some((name, notes)) = annotation {
                    writeln!(out, "# {name}").unwrap();
                    writeln!(out, "# {}", notes.columns.join(",")).unwrap();
                    for row in &notes.rows {
                        writeln!(out, "# {}", csv_row(row)).unwrap();
                    }
                }
            }
        }
        out
    }

    fn render_json(&self) -> String {
        let value = match self {
            Report::Record(record) => json_record(record),
            Report::Table {
                params,
                data,
                annotation,
            } => {
                let mut map = Map::new();
                for &(k, v) in params {
                    map.insert(k.to_string(), json_number(v));
                }
                map.insert(data.0.to_string(), json_table(&data.1));
                if let Some((name, notes)) = annotation {
                    map.insert(name.to_string(), json_table(notes));
                }
                Value::Object(map)
            }
        };
        let mut out = serde_json::to_string_pretty(&value).expect("json values serialize");
        out.push('\n');
        out
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        let row = |values: &[f64]| {
            values
                .iter()
                .map(|&v| plain_number(v))
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Report::Record(record) => {
                for &(_, v) in record {
                    writeln!(out, "{}", plain_number(v)).unwrap();
                }
            }
            Report::Table {
                data, annotation, ..
            } => {
                for values in &data.1.rows {
                    writeln!(out, "{}", row(values)).unwrap();
                }
                if let Some((_, notes)) = annotation {
                    for values in &notes.rows {
                        writeln!(out, "# {}", row(values)).unwrap();
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_numbers_carry_17_significant_digits() {
        assert_eq!(csv_number(2.446_386_037_030_126), "2.4463860370301260e0");
        assert_eq!(csv_number(0.0), "0.0000000000000000e0");
        assert_eq!(csv_number(-1.5e-300), "-1.5000000000000001e-300");
        let parsed: f64 = csv_number(0.1 + 0.2).parse().unwrap();
        assert_eq!(parsed, 0.1 + 0.2);
    }

    #[test]
    fn record_layouts() {
        let r = Report::Record(vec![("width", 0.5), ("mode", 2.0)]);
        assert_eq!(
            r.render(OutputFormat::Csv),
            "width,mode\n5.0000000000000000e-1,2.0000000000000000e0\n"
        );
        assert_eq!(r.render(OutputFormat::Plain), "0.5\n2\n");
        assert_eq!(
            r.render(OutputFormat::Json),
            "{\n  \"width\": 0.5,\n  \"mode\": 2.0\n}\n"
        );
    }
}
