//! The `bss` command-line tool: validation, algebra, tables, and decision
//! analysis over dataset files.
//!
//! Every subcommand reads the dataset formats described in [`crate::io`].
//! Exit codes are part of the interface:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 2 | malformed file or command line |
//! | 3 | consistency violation (an object on both sides of a parameter, or an inconsistent decision table) |
//! | 4 | unknown/mismatched identifiers, universes, or domains |
//! | 5 | weight errors (out of range, missing, or unknown parameters) |
//! | 1 | anything else (I/O failures and the like) |

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bss::BipolarSoftSet;
use crate::decision::{DecisionReport, ReductionReport, WeightedDecisionReport};
use crate::error::{Error, Result};
use crate::io::{
    dataset_to_table, load_dataset, load_weights, resolve_weights, save_dataset, DatasetFormat,
};

#[derive(Parser, Debug)]
#[command(
    name = "bss",
    version,
    about = "Bipolar soft sets: two-sided set algebra, tables, and decision analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a dataset and report its dimensions.
    Validate {
        /// Dataset file (structured text or CSV table).
        file: PathBuf,
    },
    /// Combine datasets (or complement one) and write the result.
    Op {
        /// The operation to apply.
        kind: OpKind,
        /// First operand.
        file: PathBuf,
        /// Second operand (not used by `complement`).
        file2: Option<PathBuf>,
        /// Where to write the result; `.csv` selects the table format.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print each domain parameter's hesitation gap.
    Hesitation {
        /// Dataset file.
        file: PathBuf,
    },
    /// Print a dataset as a CSV tri-valued table.
    Table {
        /// Dataset file.
        file: PathBuf,
    },
    /// Rank objects by their decision values over chosen parameters.
    Decide {
        /// Dataset file.
        file: PathBuf,
        /// Comma-separated condition parameters (default: the whole domain).
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        /// Weights file; switches to the weighted procedure.
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Drop dispensable parameters and report the core.
    Reduce {
        /// Dataset file.
        file: PathBuf,
        /// Comma-separated condition parameters (default: the whole domain).
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

/// The operations `bss op` can apply.
#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum OpKind {
    /// Extended union over the union of the domains.
    UnionExt,
    /// Restricted union over the intersection of the domains.
    UnionRes,
    /// Extended intersection over the union of the domains.
    IntExt,
    /// Restricted intersection over the intersection of the domains.
    IntRes,
    /// AND-product over the product of the domains.
    And,
    /// OR-product over the product of the domains.
    Or,
    /// Complement (swaps the positive and negative sides).
    Complement,
}

/// Parses the process arguments, runs the chosen subcommand, and returns
/// the exit code for `main` to pass to [`std::process::exit`].
pub fn run() -> i32 {
    match execute(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

/// The exit code each error maps to; see the module docs for the table.
fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => 2,
        Error::ConsistencyViolation { .. } | Error::InconsistentTable => 3,
        Error::WeightOutOfRange { .. }
        | Error::WeightCountMismatch { .. }
        | Error::MissingWeight(_)
        | Error::UnknownWeightParameter(_) => 5,
        Error::Io(_) => 1,
        _ => 4,
    }
}

fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Validate { file } => {
            let set = load_dataset(&file)?;
            println!(
                "ok: {} objects, {} parameters, {} in the domain",
                set.universe().len(),
                set.space().len(),
                set.domain_len()
            );
            Ok(0)
        }
        Command::Op {
            kind,
            file,
            file2,
            output,
        } => op(kind, &file, file2.as_deref(), &output),
        Command::Hesitation { file } => {
            let set = load_dataset(&file)?;
            for label in set.domain_labels() {
                let gap = set.hesitation(label)?;
                print_labelled(label, &set.universe().labels_of(&gap));
            }
            Ok(0)
        }
        Command::Table { file } => {
            let set = load_dataset(&file)?;
            print!("{}", dataset_to_table(&set));
            Ok(0)
        }
        Command::Decide {
            file,
            params,
            weights,
            json,
        } => {
            let set = load_dataset(&file)?;
            let chosen = chosen_params(&set, params);
            let refs: Vec<&str> = chosen.iter().map(String::as_str).collect();
            match weights {
                Some(wpath) => {
                    let pairs = load_weights(&wpath)?;
                    let w = resolve_weights(&pairs, &set, &refs)?;
                    let report = set.decide_weighted(&refs, &w)?;
                    if json {
                        println!("{:#}", weighted_report_json(&report));
                    } else {
                        print!("{}", render_weighted_report(&report));
                    }
                }
                None => {
                    let report = set.decide(&refs)?;
                    if json {
                        println!("{:#}", report_json(&report));
                    } else {
                        print!("{}", render_report(&report));
                    }
                }
            }
            Ok(0)
        }
        Command::Reduce { file, params, json } => {
            let set = load_dataset(&file)?;
            let chosen = chosen_params(&set, params);
            let refs: Vec<&str> = chosen.iter().map(String::as_str).collect();
            let report = set.decision_table(&refs)?.reduce()?;
            if json {
                println!("{:#}", reduction_json(&report));
            } else {
                print!("{}", render_reduction(&report));
            }
            Ok(0)
        }
    }
}

fn op(kind: OpKind, file: &Path, file2: Option<&Path>, output: &Path) -> Result<i32> {
    let set = load_dataset(file)?;
    let result = if kind == OpKind::Complement {
        if file2.is_some() {
            eprintln!("error: 'complement' takes a single dataset");
            return Ok(2);
        }
        set.complement()
    } else {
        let Some(file2) = file2 else {
            eprintln!("error: this operation needs two datasets");
            return Ok(2);
        };
        let other = load_dataset(file2)?;
        match kind {
            OpKind::UnionExt => set.union_extended(&other)?,
            OpKind::UnionRes => set.union_restricted(&other)?,
            OpKind::IntExt => set.intersection_extended(&other)?,
            OpKind::IntRes => set.intersection_restricted(&other)?,
            OpKind::And => set.and_product(&other)?,
            OpKind::Or => set.or_product(&other)?,
            OpKind::Complement => unreachable!("handled above"),
        }
    };
    save_dataset(&result, output, DatasetFormat::from_path(output))?;
    Ok(0)
}

// The condition parameters a decision subcommand works over: the --params
// list when given, the whole domain otherwise.
fn chosen_params(set: &BipolarSoftSet, params: Option<Vec<String>>) -> Vec<String> {
    params.unwrap_or_else(|| set.domain_labels().map(str::to_owned).collect())
}

fn print_labelled(label: &str, names: &[&str]) {
    if names.is_empty() {
        println!("{label}:");
    } else {
        println!("{label}: {}", names.join(" "));
    }
}

// Floats rendered for humans: enough digits to be faithful for the short
// decimal weights in play, no trailing-zero noise ("2.8", not "2.800000").
fn fmt_num(value: f64) -> String {
    let s = format!("{value:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

// Monospace alignment: first column left, numeric columns right.
fn render_grid(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for row in &rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j == 0 {
                line.push_str(&format!("{cell:<width$}", width = widths[0]));
            } else {
                line.push_str(&format!("  {cell:>width$}", width = widths[j]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_summary(
    out: &mut String,
    consistent: bool,
    reduction: &Option<ReductionReport>,
    ranking: &[(String, String)],
    maximizers: &[String],
) {
    out.push_str(&format!(
        "consistent: {}\n",
        if consistent { "yes" } else { "no" }
    ));
    if let Some(reduction) = reduction {
        let eliminated = if reduction.eliminated.is_empty() {
            "(none)".to_owned()
        } else {
            reduction.eliminated.join(" ")
        };
        out.push_str(&format!("eliminated: {eliminated}\n"));
        out.push_str(&format!("core: {}\n", reduction.core.join(" ")));
    }
    let ranked: Vec<String> = ranking
        .iter()
        .map(|(label, value)| format!("{label}={value}"))
        .collect();
    out.push_str(&format!("ranking: {}\n", ranked.join(" ")));
    out.push_str(&format!("optimal: {}\n", maximizers.join(" ")));
}

fn render_report(report: &DecisionReport) -> String {
    let tri = report.table.tri();
    let mut header: Vec<String> = vec!["object".to_owned()];
    header.extend(tri.column_labels().map(str::to_owned));
    header.push("d".to_owned());
    let rows: Vec<Vec<String>> = tri
        .row_labels()
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let mut row = vec![label.clone()];
            row.extend(tri.row(i).iter().map(|e| e.value().to_string()));
            row.push(report.table.decisions()[i].to_string());
            row
        })
        .collect();
    let mut out = render_grid(header, rows);
    let ranking: Vec<(String, String)> = report
        .ranking
        .iter()
        .map(|(label, d)| (label.clone(), d.to_string()))
        .collect();
    render_summary(
        &mut out,
        report.consistent,
        &report.reduction,
        &ranking,
        &report.maximizers,
    );
    out
}

fn render_weighted_report(report: &WeightedDecisionReport) -> String {
    let table = &report.table;
    let tri = table.tri();
    let weights: Vec<String> = tri
        .column_labels()
        .zip(table.weights())
        .map(|(label, w)| format!("{label}={}", fmt_num(*w)))
        .collect();
    let mut out = format!("weights: {}\n", weights.join(" "));
    let mut header: Vec<String> = vec!["object".to_owned()];
    header.extend(tri.column_labels().map(str::to_owned));
    header.push("d".to_owned());
    let rows: Vec<Vec<String>> = tri
        .row_labels()
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let mut row = vec![label.clone()];
            row.extend(table.entries()[i].iter().map(|&b| fmt_num(b)));
            row.push(fmt_num(table.decisions()[i]));
            row
        })
        .collect();
    out.push_str(&render_grid(header, rows));
    let ranking: Vec<(String, String)> = report
        .ranking
        .iter()
        .map(|(label, d)| (label.clone(), fmt_num(*d)))
        .collect();
    render_summary(
        &mut out,
        report.consistent,
        &report.reduction,
        &ranking,
        &report.maximizers,
    );
    out
}

fn render_reduction(report: &ReductionReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "consistent: {}\n",
        if report.consistent { "yes" } else { "no" }
    ));
    let eliminated = if report.eliminated.is_empty() {
        "(none)".to_owned()
    } else {
        report.eliminated.join(" ")
    };
    out.push_str(&format!("eliminated: {eliminated}\n"));
    out.push_str(&format!("core: {}\n", report.core.join(" ")));
    out
}

fn blocks_json(labels: &[String], partition: &crate::decision::Partition) -> serde_json::Value {
    serde_json::Value::from(
        partition
            .blocks()
            .iter()
            .map(|block| {
                block
                    .iter()
                    .map(|&i| labels[i].clone())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    )
}

fn reduction_json(report: &ReductionReport) -> serde_json::Value {
    serde_json::json!({
        "consistent": report.consistent,
        "eliminated": report.eliminated,
        "core": report.core,
        "equality_held": report.equality_held,
    })
}

fn report_json(report: &DecisionReport) -> serde_json::Value {
    let tri = report.table.tri();
    serde_json::json!({
        "objects": tri.row_labels(),
        "parameters": tri.column_labels().collect::<Vec<_>>(),
        "entries": (0..tri.n_rows())
            .map(|i| tri.row(i).iter().map(|e| e.value()).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "decisions": report.table.decisions(),
        "consistent": report.consistent,
        "condition_blocks": blocks_json(tri.row_labels(), &report.condition),
        "decision_blocks": blocks_json(tri.row_labels(), &report.decision),
        "reduction": report.reduction.as_ref().map(reduction_json),
        "ranking": report.ranking.iter()
            .map(|(label, d)| serde_json::json!({"object": label, "decision": d}))
            .collect::<Vec<_>>(),
        "maximizers": report.maximizers,
    })
}

fn weighted_report_json(report: &WeightedDecisionReport) -> serde_json::Value {
    let table = &report.table;
    let tri = table.tri();
    serde_json::json!({
        "objects": tri.row_labels(),
        "parameters": tri.column_labels().collect::<Vec<_>>(),
        "weights": table.weights(),
        "entries": table.entries(),
        "decisions": table.decisions(),
        "consistent": report.consistent,
        "condition_blocks": blocks_json(tri.row_labels(), &report.condition),
        "decision_blocks": blocks_json(tri.row_labels(), &report.decision),
        "reduction": report.reduction.as_ref().map(reduction_json),
        "ranking": report.ranking.iter()
            .map(|(label, d)| serde_json::json!({"object": label, "decision": d}))
            .collect::<Vec<_>>(),
        "maximizers": report.maximizers,
    })
}
