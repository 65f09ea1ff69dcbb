//! Reading and writing datasets and weight files.
//!
//! Two on-disk representations are supported and auto-detected on load:
//!
//! **Structured text** (conventionally `.bss`) lists the universe, the
//! parameter space, an optional domain, and the positive/negative
//! membership lists per parameter. `#` starts a comment anywhere on a
//! line; sections may appear in any order; omitted `pos`/`neg` lines
//! default to the empty set; an omitted `domain:` line means the whole
//! parameter space. Negation labels ride along in the `parameters:` line
//! as `positive/negation` tokens and both membership sections are keyed by
//! the positive label:
//!
//! ```text
//! universe: h1 h2 h3 h4 h5
//! parameters: e1 e2 e3 e4 e5 e6
//! domain: e1 e2 e3 e6
//! pos e1: h2 h3
//! neg e1: h4 h5
//! pos e2: h1 h2 h5
//! neg e2: h3 h4
//! ```
//!
//! **CSV tri-valued table** (conventionally `.csv`) is the tabular
//! encoding: one row per object, one column per domain parameter, cells in
//! `{-1, 0, 1}`. When the domain does not exhaust the parameter space the
//! ambient space is recorded in a `# space:` directive, since the header
//! alone cannot name parameters that have no column:
//!
//! ```text
//! # space: e1 e2 e3 e4 e5 e6
//! object,e1,e2,e3,e6
//! h1,0,1,1,0
//! h2,1,1,-1,1
//! ```
//!
//! Weight files pair parameters with values in `[0, 1]`, one `label:
//! value` line each.

use std::fmt;
use std::fs;
use std::path::Path;

use crate::bss::BipolarSoftSet;
use crate::error::{Error, Result};
use crate::params::{Parameter, ParameterSpace};
use crate::tabular::{Entry, TriTable};
use crate::universe::{Subset, Universe};

/// Which on-disk representation to write.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum DatasetFormat {
    /// Structured text: `universe:` / `parameters:` / `pos` / `neg` lines.
    Text,
    /// CSV tri-valued table.
    Table,
}

impl DatasetFormat {
    /// Picks the format a path's extension suggests: `.csv` (in any case)
    /// means [`Table`](DatasetFormat::Table), anything else the structured
    /// text format.
    pub fn from_path(path: &Path) -> DatasetFormat {
        match path.extension() {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => DatasetFormat::Table,
            _ => DatasetFormat::Text,
        }
    }
}

// Everything from the first '#' on is commentary; '#' cannot occur in a
// label, so this never truncates data.
fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

// The line number used for "something is missing" errors: the end of the
// file (1-based, and at least 1 so empty input still points somewhere).
fn eof_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

// Re-attaches a line number to an identifier-level error produced while
// parsing file content, so the caller sees where the offending token sits.
fn at_line(line: usize, err: Error) -> Error {
    parse_error(line, err.to_string())
}

/// Parses a dataset in either representation, sniffing which one: a file
/// whose first significant line is a `universe:` section is structured
/// text, anything else is treated as a CSV table.
pub fn parse_dataset(text: &str) -> Result<BipolarSoftSet> {
    for raw in text.lines() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let is_text = matches!(line.split_once(':'), Some((head, _)) if head.trim() == "universe");
        return if is_text {
            parse_dataset_text(text)
        } else {
            parse_dataset_table(text)
        };
    }
    Err(parse_error(eof_line(text), "empty dataset"))
}

/// Reads and parses a dataset file (format sniffed from the content).
pub fn load_dataset(path: &Path) -> Result<BipolarSoftSet> {
    parse_dataset(&fs::read_to_string(path)?)
}

/// Writes a dataset file in the chosen representation.
pub fn save_dataset(set: &BipolarSoftSet, path: &Path, format: DatasetFormat) -> Result<()> {
    let text = match format {
        DatasetFormat::Text => dataset_to_text(set),
        DatasetFormat::Table => dataset_to_table(set),
    };
    fs::write(path, text)?;
    Ok(())
}

/// Parses the structured text representation.
pub fn parse_dataset_text(text: &str) -> Result<BipolarSoftSet> {
    let mut universe_line: Option<(usize, Vec<String>)> = None;
    let mut parameters_line: Option<(usize, Vec<String>)> = None;
    let mut domain_line: Option<(usize, Vec<String>)> = None;
    let mut pos_lines: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut neg_lines: Vec<(usize, String, Vec<String>)> = Vec::new();

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((head, tail)) = line.split_once(':') else {
            return Err(parse_error(line_no, format!("expected 'section: ...', got '{line}'")));
        };
        let head = head.trim();
        let tokens: Vec<String> = tail.split_whitespace().map(str::to_owned).collect();
        match head {
            "universe" => {
                if universe_line.is_some() {
                    return Err(parse_error(line_no, "duplicate 'universe' section"));
                }
                universe_line = Some((line_no, tokens));
            }
            "parameters" => {
                if parameters_line.is_some() {
                    return Err(parse_error(line_no, "duplicate 'parameters' section"));
                }
                parameters_line = Some((line_no, tokens));
            }
            "domain" => {
                if domain_line.is_some() {
                    return Err(parse_error(line_no, "duplicate 'domain' section"));
                }
                domain_line = Some((line_no, tokens));
            }
            _ => {
                let (kind, label) = head
                    .split_once(char::is_whitespace)
                    .map(|(kind, label)| (kind, label.trim()))
                    .unwrap_or((head, ""));
                let store = match kind {
                    "pos" => &mut pos_lines,
                    "neg" => &mut neg_lines,
                    _ => {
                        return Err(parse_error(
                            line_no,
                            format!("unrecognized section '{head}'"),
                        ))
                    }
                };
                if label.is_empty() {
                    return Err(parse_error(line_no, format!("'{kind}' needs a parameter label")));
                }
                if store.iter().any(|(_, l, _)| l == label) {
                    return Err(parse_error(
                        line_no,
                        format!("duplicate '{kind} {label}' section"),
                    ));
                }
                store.push((line_no, label.to_owned(), tokens));
            }
        }
    }

    let (line, tokens) =
        universe_line.ok_or_else(|| parse_error(eof_line(text), "missing 'universe' section"))?;
    let universe = Universe::new(tokens).map_err(|e| at_line(line, e))?;
    let (line, tokens) = parameters_line
        .ok_or_else(|| parse_error(eof_line(text), "missing 'parameters' section"))?;
    let space = ParameterSpace::from_tokens(tokens).map_err(|e| at_line(line, e))?;

    let domain: Vec<String> = match domain_line {
        Some((_, tokens)) => tokens,
        None => space.iter().map(|p| p.positive().to_owned()).collect(),
    };

    // Membership sections must name domain parameters; omitted ones
    // default to the empty set.
    let mut pos = vec![Subset::empty(universe.len()); domain.len()];
    let mut neg = vec![Subset::empty(universe.len()); domain.len()];
    for (sections, target) in [(&pos_lines, &mut pos), (&neg_lines, &mut neg)] {
        for (_, label, objects) in sections {
            if space.index_of(label).is_none() {
                return Err(Error::UnknownParameter(label.clone()));
            }
            let Some(slot) = domain.iter().position(|d| d == label) else {
                return Err(Error::DomainMismatch {
                    parameter: label.clone(),
                });
            };
            target[slot] = universe.subset(objects)?;
        }
    }

    let domain_refs: Vec<&str> = domain.iter().map(String::as_str).collect();
    BipolarSoftSet::from_subsets(universe, space, &domain_refs, pos, neg)
}

/// Renders the structured text representation (what
/// [`Display`](fmt::Display) on [`BipolarSoftSet`] prints).
pub fn dataset_to_text(set: &BipolarSoftSet) -> String {
    let mut out = String::new();
    let join = |labels: Vec<&str>| labels.join(" ");
    out.push_str("universe: ");
    out.push_str(&join(set.universe().iter().collect()));
    out.push('\n');
    out.push_str("parameters: ");
    let tokens: Vec<String> = set.space().iter().map(Parameter::token).collect();
    out.push_str(&tokens.join(" "));
    out.push('\n');
    if set.domain_len() != set.space().len() {
        out.push_str("domain: ");
        out.push_str(&join(set.domain_labels().collect()));
        out.push('\n');
    }
    for label in set.domain_labels() {
        let f = set.positive(label).expect("domain label");
        let g = set.negative(label).expect("domain label");
        out.push_str(&format!("pos {label}: {}\n", join(set.universe().labels_of(f))));
        out.push_str(&format!("neg {label}: {}\n", join(set.universe().labels_of(g))));
    }
    out
}

// Lines that are blank or pure commentary, normalized so the CSV reader's
// line accounting still matches the original file.
fn clean_for_csv(text: &str) -> String {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| {
            let t = l.trim_start();
            if t.is_empty() || t.starts_with('#') {
                ""
            } else {
                l
            }
        })
        .collect();
    lines.join("\n")
}

fn csv_error(text: &str, err: csv::Error) -> Error {
    let line = err
        .position()
        .map(|p| p.line() as usize)
        .unwrap_or_else(|| eof_line(text));
    parse_error(line, err.to_string())
}

/// Parses the CSV tri-valued table representation.
pub fn parse_dataset_table(text: &str) -> Result<BipolarSoftSet> {
    // The `# space:` directive names the ambient parameter space when the
    // table's columns do not exhaust it.
    let mut space_tokens: Option<(usize, Vec<String>)> = None;
    for (k, raw) in text.lines().enumerate() {
        let t = raw.trim_start();
        let Some(rest) = t.strip_prefix('#') else { continue };
        if let Some(tokens) = rest.trim_start().strip_prefix("space:") {
            if space_tokens.is_some() {
                return Err(parse_error(k + 1, "duplicate '# space:' directive"));
            }
            space_tokens = Some((k + 1, tokens.split_whitespace().map(str::to_owned).collect()));
        }
    }

    let cleaned = clean_for_csv(text);
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(cleaned.as_bytes());
    let mut records = reader.records();

    let header = records
        .next()
        .ok_or_else(|| parse_error(eof_line(text), "missing table header"))?
        .map_err(|e| csv_error(text, e))?;
    let header_line = header.position().map(|p| p.line() as usize).unwrap_or(1);
    // The corner cell is decorative ("object" by convention); the rest are
    // parameter tokens.
    let columns: Vec<Parameter> = header
        .iter()
        .skip(1)
        .map(|token| Parameter::parse_token(token).map_err(|e| at_line(header_line, e)))
        .collect::<Result<_>>()?;

    let mut row_labels = Vec::new();
    let mut entries = Vec::new();
    for record in records {
        let record = record.map_err(|e| csv_error(text, e))?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(1);
        let mut cells = record.iter();
        let label = cells.next().unwrap_or("");
        if label.is_empty() {
            return Err(parse_error(line, "missing object label"));
        }
        let row: Vec<Entry> = cells
            .zip(&columns)
            .map(|(cell, column)| {
                cell.parse::<i64>()
                    .ok()
                    .and_then(|v| Entry::from_value(v).ok())
                    .ok_or_else(|| {
                        parse_error(
                            line,
                            format!(
                                "bad entry '{cell}' for parameter '{}': expected -1, 0, or 1",
                                column.positive()
                            ),
                        )
                    })
            })
            .collect::<Result<_>>()?;
        if row.len() != columns.len() {
            return Err(parse_error(
                line,
                format!("expected {} entries, found {}", columns.len(), row.len()),
            ));
        }
        row_labels.push(label.to_owned());
        entries.push(row);
    }

    let space = match space_tokens {
        Some((line, tokens)) => {
            ParameterSpace::from_tokens(tokens).map_err(|e| at_line(line, e))?
        }
        None => ParameterSpace::new(columns.clone()).map_err(|e| at_line(header_line, e))?,
    };
    TriTable::new(row_labels, columns, entries)?.to_set(&space)
}

/// Renders the CSV tri-valued table representation, prefixing a `# space:`
/// directive when the domain does not exhaust the parameter space.
pub fn dataset_to_table(set: &BipolarSoftSet) -> String {
    let mut out = String::new();
    if set.domain_len() != set.space().len() {
        let tokens: Vec<String> = set.space().iter().map(Parameter::token).collect();
        out.push_str("# space: ");
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    let tri = TriTable::from_set(set);
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["object".to_owned()];
    header.extend(tri.columns().iter().map(Parameter::token));
    writer
        .write_record(&header)
        .expect("writing CSV to memory cannot fail");
    for (i, label) in tri.row_labels().iter().enumerate() {
        let mut record = vec![label.clone()];
        record.extend(tri.row(i).iter().map(|e| e.value().to_string()));
        writer
            .write_record(&record)
            .expect("writing CSV to memory cannot fail");
    }
    let body = writer
        .into_inner()
        .expect("writing CSV to memory cannot fail");
    out.push_str(&String::from_utf8(body).expect("CSV output is UTF-8"));
    out
}

/// Parses a weights file: one `label: value` line per parameter, comments
/// and blank lines as in the structured text format. Values must lie in
/// `[0, 1]`.
pub fn parse_weights(text: &str) -> Result<Vec<(String, f64)>> {
    let mut pairs: Vec<(String, f64)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((label, value)) = line.split_once(':') else {
            return Err(parse_error(line_no, format!("expected 'label: value', got '{line}'")));
        };
        let label = label.trim();
        crate::universe::validate_label(label).map_err(|e| at_line(line_no, e))?;
        if pairs.iter().any(|(l, _)| l == label) {
            return Err(parse_error(line_no, format!("duplicate weight for '{label}'")));
        }
        let value: f64 = value.trim().parse().map_err(|_| {
            parse_error(line_no, format!("bad weight value '{}'", value.trim()))
        })?;
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::WeightOutOfRange {
                parameter: label.to_owned(),
                value,
            });
        }
        pairs.push((label.to_owned(), value));
    }
    Ok(pairs)
}

/// Reads and parses a weights file.
pub fn load_weights(path: &Path) -> Result<Vec<(String, f64)>> {
    parse_weights(&fs::read_to_string(path)?)
}

/// Lines up file weights with the chosen parameters: every weight label
/// must name a domain parameter of `set`, every chosen parameter must have
/// a weight, and weights for unchosen parameters are ignored.
pub fn resolve_weights(
    pairs: &[(String, f64)],
    set: &BipolarSoftSet,
    chosen: &[&str],
) -> Result<Vec<f64>> {
    for (label, _) in pairs {
        if !set.contains_parameter(label) {
            return Err(Error::UnknownWeightParameter(label.clone()));
        }
    }
    chosen
        .iter()
        .map(|param| {
            pairs
                .iter()
                .find(|(label, _)| label == param)
                .map(|&(_, w)| w)
                .ok_or_else(|| Error::MissingWeight((*param).to_owned()))
        })
        .collect()
}

impl fmt::Display for BipolarSoftSet {
    /// Formats as the structured text representation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dataset_to_text(self))
    }
}
