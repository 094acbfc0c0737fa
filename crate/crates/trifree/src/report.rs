//! Record output in three formats.
//!
//! Every record is an ordered JSON object whose first field, `record`, names
//! its kind. JSON-lines prints it as is; CSV flattens it onto a fixed,
//! per-command column list; the human format prints a prepared line.

use std::io::{self, Write};

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Human,
    Jsonl,
    Csv,
}

pub type Record = Map<String, Value>;

/// Builds a record from `(field, value)` pairs, keeping their order.
#[macro_export]
macro_rules! record {
    ($($key:literal : $value:expr),* $(,)?) => {{
        let mut r = $crate::report::Record::new();
        $( r.insert($key.to_string(), serde_json::json!($value)); )*
        r
    }};
}

pub const CLASSIFY_COLUMNS: &[&str] =
    &["record", "line", "graph6", "verdict", "hypothesis", "detail", "family", "error", "offset"];

pub const CHECK_COLUMNS: &[&str] = &[
    "record",
    "line",
    "graph6",
    "n",
    "m",
    "min_degree",
    "max_degree",
    "diameter",
    "regular_degree",
    "triangle",
    "bipartite",
    "parts",
    "odd_cycle",
    "matching_size",
    "matching",
    "ham_path",
    "family",
    "theorem",
    "hypothesis_met",
    "finding",
    "error",
    "offset",
];

pub const ENUMERATE_COLUMNS: &[&str] = &["record", "n", "m", "graph6"];

pub const VERIFY_COLUMNS: &[&str] = &[
    "record",
    "theorem",
    "n",
    "min_n",
    "max_n",
    "graphs_scanned",
    "hypothesis_satisfied",
    "violations",
    "extremal_unique",
    "status",
    "graph6",
    "kind",
    "family",
    "quantities",
];

pub struct Reporter<W: Write> {
    format: Format,
    out: W,
    columns: &'static [&'static str],
    header_done: bool,
}

impl<W: Write> Reporter<W> {
    pub fn new(format: Format, out: W, columns: &'static [&'static str]) -> Self {
        Reporter { format, out, columns, header_done: false }
    }

    /// Writes one record; `human` renders it for the human format.
    pub fn emit(&mut self, record: &Record, human: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Human => writeln!(self.out, "{}", human()),
            Format::Jsonl => {
                serde_json::to_writer(&mut self.out, record)?;
                writeln!(self.out)
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().from_writer(&mut self.out);
                if !self.header_done {
                    w.write_record(self.columns)?;
                    self.header_done = true;
                }
                w.write_record(self.columns.iter().map(|c| csv_cell(record.get(*c))))?;
                w.flush()
            }
        }
    }

    /// Ensures a CSV header is present even when no rows were written.
    pub fn finish(mut self) -> io::Result<W> {
        if self.format == Format::Csv && !self.header_done {
            csv::Writer::from_writer(&mut self.out).write_record(self.columns)?;
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

/// Scalars print plainly; objects of numbers print as `k=v;k=v`; anything
/// else prints as compact JSON.
fn csv_cell(value: Option<&Value>) -> String {
    match value {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Object(map)) if map.values().all(Value::is_number) => {
            map.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
        }
        Some(v) => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format, records: &[Record]) -> String {
        let mut r = Reporter::new(format, Vec::new(), &["record", "a", "q"]);
        for rec in records {
            r.emit(rec, || "line".into()).unwrap();
        }
        String::from_utf8(r.finish().unwrap()).unwrap()
    }

    #[test]
    fn formats() {
        let rec = record! { "record": "x", "a": 3, "q": serde_json::json!({"n": 5, "bound": 1}) };
        assert_eq!(render(Format::Jsonl, std::slice::from_ref(&rec)), "{\"record\":\"x\",\"a\":3,\"q\":{\"n\":5,\"bound\":1}}\n");
        assert_eq!(render(Format::Csv, std::slice::from_ref(&rec)), "record,a,q\nx,3,n=5;bound=1\n");
        assert_eq!(render(Format::Csv, &[]), "record,a,q\n");
        assert_eq!(render(Format::Human, &[rec]), "line\n");
    }

    #[test]
    fn nested_cells() {
        let rec = record! { "record": "x", "a": [1, 2], "q": Value::Null };
        assert_eq!(render(Format::Csv, &[rec]), "record,a,q\nx,\"[1,2]\",\n");
    }
}
