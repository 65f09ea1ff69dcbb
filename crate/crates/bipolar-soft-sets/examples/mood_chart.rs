//! A week of moods as tables.
//!
//! A diarist tracks five moods over seven days, writing `1` for a day a
//! mood clearly showed, `-1` for a day its opposite did, and `0` when
//! neither stood out. This is exactly the tri-valued table encoding of
//! a bipolar soft set, and the pair-table encoding splits the same data
//! into two 0/1 indicator tables.
//!
//! Run with `cargo run --example mood_chart`.

use bipolar_soft_sets::{
    BipolarSoftSet, Entry, PairTable, ParameterSpace, Result, TriTable, Universe,
};

fn main() -> Result<()> {
    let universe = Universe::new(["mon", "tue", "wed", "thu", "fri", "sat", "sun"])?;
    let space = ParameterSpace::from_tokens([
        "cheerful/gloomy",
        "rested/tired",
        "focused/scattered",
        "social/withdrawn",
        "calm/anxious",
    ])?;

    let week = BipolarSoftSet::builder(universe, space.clone())
        .param("cheerful", &["mon", "fri"], &["tue", "sat", "sun"])
        .param("rested", &["mon", "tue", "wed", "thu", "sun"], &["sat"])
        .param("focused", &["tue", "thu", "fri", "sat"], &["mon", "sun"])
        .param("social", &["mon", "tue", "thu", "fri", "sat", "sun"], &["wed"])
        .param("calm", &["tue", "wed", "fri", "sun"], &["mon", "thu", "sat"])
        .build()?;

    // One row per day, one column per mood, every cell -1, 0, or 1.
    let tri = TriTable::from_set(&week);
    print_tri(&tri);

    // The same data as two indicator tables: `f` marks the mood itself,
    // `g` its opposite, never both at once.
    let pair = PairTable::from_set(&week);
    println!(
        "\nwednesday was focused? {}   wednesday was scattered? {}",
        pair.f(2, 2),
        pair.g(2, 2)
    );

    // All three representations describe the same set.
    let from_tri = tri.to_set(&space)?;
    let from_pair = pair.to_set(&space)?;
    assert!(from_tri.equals(&week)?);
    assert!(from_pair.equals(&week)?);
    assert!(pair.to_tri().to_set(&space)?.equals(&week)?);
    println!("\ntri-table and pair-table round-trips hold");

    // Tables also answer quick questions: which days scored entirely
    // non-negative across all moods?
    let good_days: Vec<&str> = tri
        .row_labels()
        .iter()
        .enumerate()
        .filter(|&(i, _)| tri.row(i).iter().all(|&e| e != Entry::Negative))
        .map(|(_, label)| label.as_str())
        .collect();
    println!("days with no negative marks: {good_days:?}");

    Ok(())
}

fn print_tri(tri: &TriTable) {
    print!("{:>9}", "");
    for label in tri.column_labels() {
        print!("{label:>10}");
    }
    println!();
    for (i, day) in tri.row_labels().iter().enumerate() {
        print!("{day:>9}");
        for j in 0..tri.n_cols() {
            print!("{:>10}", tri.entry(i, j).value());
        }
        println!();
    }
}
