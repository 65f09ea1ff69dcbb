//! The same selection problem, with criteria that matter unequally.
//!
//! Weights in `[0, 1]` tilt the scoring: a positive mark earns the
//! criterion's weight `w`, a negative mark costs `1 - w`. A high-weight
//! criterion therefore rewards success more than it punishes failure,
//! and a low-weight one does the opposite. Ties are resolved within a
//! small tolerance so floating-point dust cannot split equal candidates.
//!
//! Run with `cargo run --example weighted_selection`.

use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Result, Universe, WeightedDecisionTable};

fn main() -> Result<()> {
    let universe = Universe::new(["ana", "bo", "cleo", "dmitri", "edith"])?;
    let space = ParameterSpace::from_tokens([
        "experienced/novice",
        "communicative/reserved",
        "methodical/chaotic",
        "curious/indifferent",
    ])?;

    let panel = BipolarSoftSet::builder(universe, space)
        .param("experienced", &["ana", "dmitri"], &["bo", "cleo"])
        .param("communicative", &["ana", "bo", "edith"], &["dmitri"])
        .param("methodical", &["ana", "dmitri", "edith"], &["bo"])
        .param("curious", &["bo", "edith"], &["cleo", "dmitri"])
        .build()?;

    let criteria: Vec<&str> = panel.domain_labels().collect();

    // The unweighted baseline for comparison.
    let flat = panel.decide(&criteria)?;
    println!("unweighted ranking:");
    for (candidate, score) in &flat.ranking {
        println!("  {candidate:>7}  {score:>3}");
    }

    // The role is client-facing: communication dominates, tidiness is
    // nearly a tie-breaker.
    let weights = [0.7, 0.95, 0.3, 0.6];
    let report = panel.decide_weighted(&criteria, &weights)?;
    println!("\nweighted ranking:");
    for (candidate, score) in &report.ranking {
        println!("  {candidate:>7}  {score:>6.2}");
    }
    println!("top pick(s): {:?}", report.maximizers);

    // The weighted table keeps each contribution inspectable: row by
    // row, `w` for a positive mark, `-(1 - w)` for a negative one.
    let table = &report.table;
    println!("\ncontributions per criterion:");
    print!("{:>8}", "");
    for label in table.tri().column_labels() {
        print!("{label:>15}");
    }
    println!();
    for (i, candidate) in table.tri().row_labels().iter().enumerate() {
        print!("{candidate:>8}");
        for value in &table.entries()[i] {
            print!("{value:>15.2}");
        }
        println!();
    }

    // Weighted scores compare within a fixed tolerance, so candidates
    // whose totals differ only by accumulated rounding share a rank.
    println!(
        "\nscores within {:e} of each other count as tied",
        WeightedDecisionTable::TOLERANCE
    );

    // Weights outside [0, 1] are rejected up front.
    let err = panel.decide_weighted(&criteria, &[0.7, 0.95, 0.3, 1.6]);
    println!("out-of-range weight: {}", err.unwrap_err());

    Ok(())
}
