//! Two families shortlist houses together.
//!
//! Each family records, per criterion, which houses clearly satisfy it,
//! which houses clearly satisfy its *opposite*, and implicitly which
//! they cannot place either way. The algebra then answers questions a
//! single-sided set model cannot: where do the families agree on both
//! fronts, what does the pooled evidence look like, and how much
//! hesitation is left?
//!
//! Run with `cargo run --example house_hunting`.

use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Result, Universe};

fn main() -> Result<()> {
    let universe = Universe::new(["alder", "beech", "cedar", "dogwood", "elm"])?;
    // Each token names a criterion and, after the slash, its opposite.
    let space = ParameterSpace::from_tokens([
        "cheap/expensive",
        "quiet/noisy",
        "spacious/cramped",
        "sunny/dark",
    ])?;

    let millers = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("cheap", &["beech", "cedar"], &["dogwood", "elm"])
        .param("quiet", &["alder", "beech", "elm"], &["cedar", "dogwood"])
        .param("spacious", &["alder", "cedar"], &["beech", "dogwood"])
        .build()?;

    let parks = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("quiet", &["beech", "elm"], &["dogwood"])
        .param("spacious", &["alder", "cedar", "elm"], &["beech", "dogwood"])
        .param("sunny", &["beech", "cedar"], &["alder", "dogwood"])
        .build()?;

    println!("The Millers' view:\n{millers}");
    println!("The Parks' view:\n{parks}");

    // Where the evidence is silent, the set hesitates: for every
    // criterion the positives, negatives, and the gap partition the
    // shortlist.
    for label in millers.domain_labels() {
        let gap = millers.hesitation(label)?;
        println!(
            "the Millers cannot place {:?} as {label} or its opposite",
            millers.universe().labels_of(&gap)
        );
    }
    println!();

    // Consensus on the criteria both families scored: positives must
    // convince both, negatives count if either family objects.
    let consensus = millers.intersection_restricted(&parks)?;
    println!("Consensus (shared criteria only):\n{consensus}");

    // Pooled evidence over all criteria: positives accumulate, negatives
    // survive only when shared.
    let pooled = millers.union_extended(&parks)?;
    println!("Pooled evidence:\n{pooled}");

    // The AND-product scores pairs of criteria: a house is a positive
    // example of ("cheap", "sunny") when it is cheap *and* sunny.
    let pairs = millers.and_product(&parks)?;
    let label = "(cheap,sunny)";
    println!(
        "cheap-and-sunny houses: {:?}",
        pairs.universe().labels_of(pairs.positive(label)?)
    );
    println!(
        "expensive-or-dark houses: {:?}",
        pairs.universe().labels_of(pairs.negative(label)?)
    );

    // Flipping perspective: the complement swaps every judgement for its
    // opposite, and doing it twice is a no-op.
    let flipped = millers.complement();
    assert!(flipped.complement().equals(&millers)?);
    println!("\nThe Millers' complement:\n{flipped}");

    Ok(())
}
