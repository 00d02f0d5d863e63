//! Output envelope shared by every subcommand: a command header, the
//! parameters it ran with, the precision, and one table. Rendered as an
//! aligned human table (default), JSON, or CSV. All three are deterministic
//! for fixed inputs: parameters are sorted, numbers are serialized once.

use std::collections::BTreeMap;
use std::io::Write;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub struct Envelope {
    pub command: &'static str,
    pub params: BTreeMap<&'static str, String>,
    pub precision_bits: usize,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Envelope {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => self.render_human(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.params {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("precision_bits: {}\n\n", self.precision_bits));
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                widths[i] = widths[i].max(cell.len());
            }
        }
        let mut line = String::new();
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&format!("{c:<width$}", width = widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
        for row in &self.rows {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut root = serde_json::Map::new();
        root.insert("command".into(), self.command.into());
        let params: serde_json::Map<String, serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.to_string(), serde_json::Value::from(v.clone())))
            .collect();
        root.insert("params".into(), params.into());
        root.insert("precision_bits".into(), self.precision_bits.into());
        root.insert(
            "columns".into(),
            self.columns
                .iter()
                .map(|c| serde_json::Value::from(*c))
                .collect::<Vec<_>>()
                .into(),
        );
        root.insert(
            "rows".into(),
            self.rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|c| serde_json::Value::from(c.clone()))
                        .collect::<Vec<_>>()
                        .into()
                })
                .collect::<Vec<serde_json::Value>>()
                .into(),
        );
        let mut s = serde_json::to_string_pretty(&serde_json::Value::from(root))
            .expect("string tables always serialize");
        s.push('\n');
        s
    }
}

/// Row-by-row writer for enumerations too large to buffer (the `zeros`
/// subcommand can emit up to 2^20 rows). Human mode pads to widths taken
/// from the first row, which is representative for these homogeneous tables.
pub struct StreamWriter<W: Write> {
    out: W,
    format: Format,
    columns: Vec<&'static str>,
    widths: Option<Vec<usize>>,
    wrote_row: bool,
}

impl<W: Write> StreamWriter<W> {
    pub fn new(mut out: W, envelope_head: &Envelope, format: Format) -> std::io::Result<Self> {
        match format {
            Format::Human => {
                writeln!(out, "command: {}", envelope_head.command)?;
                for (k, v) in &envelope_head.params {
                    writeln!(out, "{k}: {v}")?;
                }
                writeln!(out, "precision_bits: {}\n", envelope_head.precision_bits)?;
            }
            Format::Csv => {
                writeln!(out, "{}", envelope_head.columns.join(","))?;
            }
            Format::Json => {
                writeln!(out, "{{")?;
                writeln!(
                    out,
                    "  \"command\": {},",
                    serde_json::to_string(envelope_head.command).unwrap()
                )?;
                let params: serde_json::Map<String, serde_json::Value> = envelope_head
                    .params
                    .iter()
                    .map(|(k, v)| (k.to_string(), serde_json::Value::from(v.clone())))
                    .collect();
                writeln!(
                    out,
                    "  \"params\": {},",
                    serde_json::to_string(&params).unwrap()
                )?;
                writeln!(
                    out,
                    "  \"precision_bits\": {},",
                    envelope_head.precision_bits
                )?;
                writeln!(
                    out,
                    "  \"columns\": {},",
                    serde_json::to_string(&envelope_head.columns).unwrap()
                )?;
                write!(out, "  \"rows\": [")?;
            }
        }
        Ok(StreamWriter {
            out,
            format,
            columns: envelope_head.columns.clone(),
            widths: None,
            wrote_row: false,
        })
    }

    pub fn row(&mut self, cells: &[String]) -> std::io::Result<()> {
        match self.format {
            Format::Human => {
                if self.widths.is_none() {
                    let widths: Vec<usize> = self
                        .columns
                        .iter()
                        .zip(cells)
                        .map(|(c, cell)| c.len().max(cell.len()))
                        .collect();
                    let mut line = String::new();
                    for (i, c) in self.columns.iter().enumerate() {
                        if i > 0 {
                            line.push_str("  ");
                        }
                        line.push_str(&format!("{c:<width$}", width = widths[i]));
                    }
                    writeln!(self.out, "{}", line.trim_end())?;
                    self.widths = Some(widths);
                }
                let widths = self.widths.as_ref().unwrap();
                let mut line = String::new();
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(&format!("{cell:<width$}", width = widths[i]));
                }
                writeln!(self.out, "{}", line.trim_end())?;
            }
            Format::Csv => {
                writeln!(self.out, "{}", cells.join(","))?;
            }
            Format::Json => {
                if self.wrote_row {
                    write!(self.out, ",")?;
                }
                write!(self.out, "\n    {}", serde_json::to_string(cells).unwrap())?;
            }
        }
        self.wrote_row = true;
        Ok(())
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        if self.format == Format::Json {
            if self.wrote_row {
                write!(self.out, "\n  ]\n}}\n")?;
            } else {
                write!(self.out, "]\n}}\n")?;
            }
        }
        self.out.flush()
    }
}
