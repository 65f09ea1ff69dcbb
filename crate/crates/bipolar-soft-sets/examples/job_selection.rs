//! Picking a hire from two-sided interview notes.
//!
//! Each interviewer judgement is two-sided: a candidate demonstrated a
//! skill, demonstrated its absence, or left the panel undecided. Scoring
//! +1 / -1 / 0 per judgement and summing rows ranks the candidates; the
//! indiscernibility analysis then shows which criteria were actually
//! load-bearing and which could be dropped without changing the outcome.
//!
//! Run with `cargo run --example job_selection`.

use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Result, Universe};

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
    let report = panel.decide(&criteria)?;

    println!("candidate scores, best first:");
    for (candidate, score) in &report.ranking {
        println!("  {candidate:>7}  {score:>3}");
    }
    println!("top pick(s): {:?}", report.maximizers);

    // A decision table is consistent when candidates the criteria cannot
    // tell apart also score identically; only then is dropping criteria
    // meaningful.
    println!("\nconsistent: {}", report.consistent);
    let reduction = report.reduction.as_ref().expect("table is consistent");
    if reduction.eliminated.is_empty() {
        println!("every criterion is load-bearing; the core is the whole set");
    } else {
        println!(
            "dispensable criteria: {:?} — the core {:?} ranks identically",
            reduction.eliminated, reduction.core
        );
        // Dropping the eliminated criteria really does preserve the
        // outcome.
        let core: Vec<&str> = reduction.core.iter().map(String::as_str).collect();
        let reduced = panel.decide(&core)?;
        assert_eq!(reduced.maximizers, report.maximizers);
    }

    // The indiscernibility partition behind the consistency check: blocks
    // of candidates the chosen criteria cannot distinguish.
    let partition = panel.ind(&criteria)?;
    println!(
        "indistinguishable groups under all criteria: {} block(s)",
        partition.block_count()
    );

    Ok(())
}
