//! The output record shared by all subcommands and its three renderings.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    /// Exponent vector (root or Chern basis) or partition (Schur basis).
    pub key: Vec<u32>,
    /// Exact coefficient as `"numerator/denominator"`.
    pub coeff: String,
}

impl Term {
    pub fn new(key: Vec<u32>, coeff: &Rational) -> Term {
        Term {
            key,
            coeff: coeff.to_fraction_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub label: String,
    pub values: Vec<String>,
}

/// One emitted document. Optional parts are omitted from the JSON form when
/// a command does not produce them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<String>,
    pub trunc: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub columns: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Row>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

/// A record together with its human-readable renderings.
#[derive(Clone, Debug)]
pub struct Document {
    pub record: OutputRecord,
    pub text: String,
    pub latex: String,
}

impl Document {
    /// A document whose text and LaTeX forms are built from the rows.
    pub fn table(record: OutputRecord) -> Document {
        let text = table_text(&record);
        let latex = table_latex(&record);
        Document { record, text, latex }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.record).expect("record serializes"),
            Format::Text => self.text.clone(),
            Format::Latex => self.latex.clone(),
        }
    }
}

fn table_text(record: &OutputRecord) -> String {
    let rows = record.rows.as_deref().unwrap_or_default();
    let mut header = vec![String::new()];
    header.extend(record.columns.clone().unwrap_or_default());
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            std::iter::once(row.label.clone())
                .chain(row.values.iter().cloned())
                .collect()
        })
        .collect();
    let ncols = body.iter().map(Vec::len).chain([header.len()]).max().unwrap_or(0);
    let width: Vec<usize> = (0..ncols)
        .map(|c| {
            body.iter()
                .chain([&header])
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if c == 0 {
                    format!("{s:<w$}", w = width[c])
                } else {
                    format!("{s:>w$}", w = width[c])
                }
            })
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = Vec::new();
    if record.columns.is_some() {
        out.push(line(&header));
    }
    out.extend(body.iter().map(|r| line(r)));
    out.join("\n")
}

fn table_latex(record: &OutputRecord) -> String {
    let rows = record.rows.as_deref().unwrap_or_default();
    let ncols = rows.iter().map(|r| r.values.len()).max().unwrap_or(0);
    let mut out = vec![
        format!("\\begin{{tabular}}{{|{}|}}", vec!["c"; ncols + 1].join("|")),
        "\\hline".into(),
    ];
    if let Some(cols) = &record.columns {
        out.push(format!(" & {} \\\\", cols.iter().map(|c| latex_escape(c)).join(" & ")));
        out.push("\\hline".into());
    }
    for row in rows {
        out.push(format!(
            "{} & {} \\\\",
            latex_escape(&row.label),
            row.values.join(" & ")
        ));
        out.push("\\hline".into());
    }
    out.push("\\end{tabular}".into());
    out.join("\n")
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let rec = OutputRecord {
            family: Some("wedge".into()),
            n: Some(3),
            r: Some(1),
            kind: "csm".into(),
            basis: Some("chern".into()),
            trunc: None,
            terms: Some(vec![Term::new(vec![0, 0, 0], &Rational::ONE)]),
            warnings: vec!["w".into()],
            ..Default::default()
        };
        let text = serde_json::to_string(&rec).unwrap();
        assert_eq!(serde_json::from_str::<OutputRecord>(&text).unwrap(), rec);
        assert!(text.contains("\"coeff\":\"1/1\""));
    }

    #[test]
    fn text_table_alignment() {
        let rec = OutputRecord {
            kind: "table".into(),
            columns: Some(vec!["a".into(), "bb".into()]),
            rows: Some(vec![Row {
                label: "x".into(),
                values: vec!["10".into(), "-1".into()],
            }]),
            ..Default::default()
        };
        assert_eq!(table_text(&rec), "    a  bb\nx  10  -1");
    }
}
