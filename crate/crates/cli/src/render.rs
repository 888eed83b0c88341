use std::fmt::Display;
use std::io::{self, IsTerminal, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Rows for CSV output.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// One command result in all three output formats. `ok` is false when a
/// check inside the command failed.
pub struct Rendered {
    pub json: Value,
    pub table: Table,
    pub pretty: String,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct Style {
    color: bool,
}

impl Style {
    /// Color only for pretty output on a terminal, and never when
    /// `NO_COLOR` is set to a nonempty value.
    pub fn detect(format: Format) -> Self {
        let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
        Self {
            color: format == Format::Pretty && !no_color && io::stdout().is_terminal(),
        }
    }

    pub fn verdict(&self, ok: bool, text: &str) -> String {
        if self.color {
            let code = if ok { 32 } else { 31 };
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_owned()
        }
    }

    pub fn pass_fail(&self, ok: bool) -> String {
        self.verdict(ok, if ok { "PASS" } else { "FAIL" })
    }

    pub fn flag(&self, ok: bool) -> String {
        self.verdict(ok, if ok { "true" } else { "false" })
    }
}

/// `(a,b,c)`
pub fn tuple<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn emit(out: &mut impl Write, format: Format, r: &Rendered) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &r.json)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&r.table.header)?;
            for row in &r.table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
        Format::Pretty => out.write_all(r.pretty.as_bytes()),
    }
}

/// Left-aligned columns separated by two spaces.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if j + 1 == row.len() {
                    c.clone()
                } else {
                    format!("{c:<w$}", w = widths[j])
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
