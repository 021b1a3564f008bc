//! Output formats: JSON, aligned tables, CSV.

use clap::ValueEnum;

#[derive(Clone, Copy, ValueEnum, PartialEq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// A small column-aligned table; numeric-ish columns can be
/// right-aligned per row.
pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    right_align: Vec<bool>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Table {
        let cols = headers.len();
        Table {
            headers,
            rows: Vec::new(),
            right_align: vec![false; cols],
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    /// Add a row and right-align every column after the first.
    pub fn row_right(&mut self, cells: Vec<String>) {
        for flag in self.right_align.iter_mut().skip(1) {
            *flag = true;
        }
        self.row(cells);
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = String::new();
        for (i, h) in self.headers.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&pad(h, widths[i], false));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for row in &self.rows {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&pad(cell, widths[i], self.right_align[i]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| csv_escape(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn pad(s: &str, width: usize, right: bool) -> String {
    let len = s.chars().count();
    let fill = " ".repeat(width.saturating_sub(len));
    if right {
        format!("{fill}{s}")
    } else {
        format!("{s}{fill}")
    }
}

pub fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Format {
    /// Print a value that has both a JSON form and a tabular form.
    pub fn emit(self, json: &serde_json::Value, table: &Table) {
        match self {
            Format::Json => println!("{}", serde_json::to_string_pretty(json).unwrap()),
            Format::Table => print!("{}", table.render()),
            Format::Csv => print!("{}", table.render_csv()),
        }
    }
}
