//! Plain-text and TSV rendering for command output.
//!
//! Text mode prints aligned key/value or tabular rows; TSV mode prints the
//! same values tab-separated so every reported number can be parsed back.

/// A sequence of (key, value) pairs rendered as an aligned block or TSV.
#[derive(Debug, Default)]
pub struct Report {
    rows: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report { rows: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.rows.push((key.into(), value.to_string()));
    }

    pub fn render(&self, tsv: bool) -> String {
        if tsv {
            self.rows.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
        } else {
            let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            self.rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
        }
    }
}

/// A fixed-header table rendered aligned or as TSV.
#[derive(Debug)]
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn render(&self, tsv: bool) -> String {
        if tsv {
            let mut out = String::new();
            out.push_str(&self.headers.join("\t"));
            out.push('\n');
            for row in &self.rows {
                out.push_str(&row.join("\t"));
                out.push('\n');
            }
            return out;
        }
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut out = String::new();
        let render_row = |cells: &[String], widths: &[usize]| -> String {
            let mut line = String::new();
            for (i, cell) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
            line.trim_end().to_string()
        };
        out.push_str(&render_row(&self.headers, &widths));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&render_row(row, &widths));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_alignment() {
        let mut r = Report::new();
        r.push("n", 4);
        r.push("distance", 3);
        let text = r.render(false);
        assert!(text.contains("n         4"));
        let tsv = r.render(true);
        assert_eq!(tsv, "n\t4\ndistance\t3\n");
    }

    #[test]
    fn table_rendering() {
        let mut t = Table::new(&["s", "count"]);
        t.push(vec!["0".into(), "1".into()]);
        t.push(vec!["3".into(), "225".into()]);
        let text = t.render(false);
        assert!(text.starts_with("s  count"));
        let tsv = t.render(true);
        assert!(tsv.contains("3\t225"));
    }
}
