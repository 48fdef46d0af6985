//! Machine-readable records shared by the CLI subcommands.
//!
//! A record is a `kind`, a few metadata fields and a list of rows with a
//! fixed column order. JSON puts the metadata at the top level and the rows
//! under `"rows"`; CSV and TSV repeat the metadata as leading columns so that
//! every line stands alone.

use std::io::{self, Write};

use serde_json::{json, Map, Value as Json};

use crate::partition::IntegerPartition;
use crate::rational::{format_rational, to_f64, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordKind {
    Coeffs,
    Expectation,
    Series,
    Table,
    Verify,
    Characters,
}

impl RecordKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordKind::Coeffs => "coeffs",
            RecordKind::Expectation => "expectation",
            RecordKind::Series => "series",
            RecordKind::Table => "table",
            RecordKind::Verify => "verify",
            RecordKind::Characters => "characters",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Bool(bool),
    Float(f64),
    Rational(ExactRational),
    Partition(IntegerPartition),
    /// Sparse character expansion, written `λ=a;λ'=b` in delimited output.
    Expansion(Vec<(IntegerPartition, ExactRational)>),
    Empty,
}

impl Cell {
    fn to_json(&self) -> Json {
        match self {
            Cell::Text(s) => Json::String(s.clone()),
            Cell::Int(i) => json!(i),
            Cell::Bool(b) => json!(b),
            Cell::Float(x) => json!(x),
            Cell::Rational(r) => Json::String(format_rational(r)),
            Cell::Partition(p) => Json::String(p.to_string()),
            Cell::Expansion(terms) => {
                let mut m = Map::new();
                for (l, a) in terms {
                    m.insert(l.to_string(), Json::String(format_rational(a)));
                }
                Json::Object(m)
            }
            Cell::Empty => Json::Null,
        }
    }

    fn to_field(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Float(x) => x.to_string(),
            Cell::Rational(r) => format_rational(r),
            Cell::Partition(p) => p.to_string(),
            Cell::Expansion(terms) => terms
                .iter()
                .map(|(l, a)| format!("{l}={}", format_rational(a)))
                .collect::<Vec<_>>()
                .join(";"),
            Cell::Empty => String::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Tsv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format {s:?} (expected json, csv or tsv)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub kind: RecordKind,
    pub meta: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl OutputRecord {
    pub fn new(kind: RecordKind, columns: &[&str]) -> Self {
        Self { kind, meta: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn meta(mut self, key: &str, value: Cell) -> Self {
        self.meta.push((key.to_string(), value));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Adds a `<name>_approx` column after every rational column.
    pub fn with_approx(self) -> Self {
        let rational_cols: Vec<bool> = (0..self.columns.len())
            .map(|i| self.rows.iter().any(|r| matches!(r[i], Cell::Rational(_))))
            .collect();
        let mut columns = Vec::new();
        for (c, &is_rat) in self.columns.iter().zip(&rational_cols) {
            columns.push(c.clone());
            if is_rat {
                columns.push(format!("{c}_approx"));
            }
        }
        let rows = self
            .rows
            .into_iter()
            .map(|row| {
                let mut out = Vec::new();
                for (cell, &is_rat) in row.into_iter().zip(&rational_cols) {
                    let approx = match &cell {
                        Cell::Rational(r) => Cell::Float(to_f64(r)),
                        _ => Cell::Empty,
                    };
                    out.push(cell);
                    if is_rat {
                        out.push(approx);
                    }
                }
                out
            })
            .collect();
        Self { columns, rows, ..self }
    }

    pub fn to_json(&self) -> Json {
        let mut top = Map::new();
        top.insert("kind".into(), Json::String(self.kind.as_str().into()));
        for (k, v) in &self.meta {
            top.insert(k.clone(), v.to_json());
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (c, cell) in self.columns.iter().zip(row) {
                    m.insert(c.clone(), cell.to_json());
                }
                Json::Object(m)
            })
            .collect();
        top.insert("rows".into(), Json::Array(rows));
        Json::Object(top)
    }

    fn write_delimited<W: Write>(&self, out: W, delimiter: u8) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().delimiter(delimiter).from_writer(out);
        let header: Vec<&str> =
            std::iter::once("kind").chain(self.meta.iter().map(|(k, _)| k.as_str())).chain(self.columns.iter().map(String::as_str)).collect();
        w.write_record(&header)?;
        let prefix: Vec<String> =
            std::iter::once(self.kind.as_str().to_string()).chain(self.meta.iter().map(|(_, v)| v.to_field())).collect();
        for row in &self.rows {
            let fields = prefix.iter().cloned().chain(row.iter().map(Cell::to_field));
            w.write_record(fields)?;
        }
        w.flush()
    }

    pub fn write<W: Write>(&self, mut out: W, format: Format) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.to_json())?;
                writeln!(out)
            }
            Format::Csv => self.write_delimited(out, b','),
            Format::Tsv => self.write_delimited(out, b'\t'),
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf, format).expect("writing to memory");
        String::from_utf8(buf).expect("records are UTF-8")
    }
}
