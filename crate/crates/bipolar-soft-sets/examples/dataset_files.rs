//! Reading and writing datasets.
//!
//! Two interchangeable file formats carry the same data: a structured
//! text format that mirrors how a set is written down (universe,
//! parameters, one membership line per side), and a CSV table of
//! -1/0/1 cells. The extension picks the format; loading sniffs the
//! content, so either parser accepts either file. A third tiny format
//! holds decision weights.
//!
//! Run with `cargo run --example dataset_files`.

use bipolar_soft_sets::io::{
    dataset_to_table, dataset_to_text, load_dataset, load_weights, parse_dataset, resolve_weights,
    save_dataset, DatasetFormat,
};
use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let universe = Universe::new(["k2", "denali", "elbrus", "kenya"])?;
    let space = ParameterSpace::from_tokens([
        "steep/gentle",
        "icy/dry",
        "remote/accessible",
        "crowded/lonely",
    ])?;
    let peaks = BipolarSoftSet::builder(universe, space)
        .param("steep", &["k2", "denali"], &["kenya"])
        .param("icy", &["denali", "elbrus"], &["kenya"])
        .param("remote", &["k2"], &["elbrus", "kenya"])
        .build()?;

    // The text format reads the way the set is defined.
    let text = dataset_to_text(&peaks);
    println!("--- peaks.bss ---------------------------------------------");
    print!("{text}");

    // The table format is the tri-valued matrix; parameters the set does
    // not score still travel in a `# space:` comment so nothing is lost.
    let table = dataset_to_table(&peaks);
    println!("--- peaks.csv ---------------------------------------------");
    print!("{table}");

    // Both decode back to the same set.
    assert!(parse_dataset(&text)?.equals(&peaks)?);
    assert!(parse_dataset(&table)?.equals(&peaks)?);

    // On disk the extension chooses the encoding.
    let dir = tempfile::tempdir()?;
    for name in ["peaks.bss", "peaks.csv"] {
        let path = dir.path().join(name);
        save_dataset(&peaks, &path, DatasetFormat::from_path(&path))?;
        let loaded = load_dataset(&path)?;
        assert!(loaded.equals(&peaks)?);
        println!("{name}: save/load round-trip holds");
    }

    // Weights live in `label: value` lines and are resolved against the
    // parameters a decision run actually uses; the unused `remote` weight
    // is simply ignored here.
    let weights_path = dir.path().join("weights.txt");
    std::fs::write(&weights_path, "steep: 0.9\nicy: 0.4\nremote: 0.8\n")?;
    let pairs = load_weights(&weights_path)?;
    let chosen = ["steep", "icy"];
    let weights = resolve_weights(&pairs, &peaks, &chosen)?;
    println!("weights for {chosen:?}: {weights:?}");

    let report = peaks.decide_weighted(&chosen, &weights)?;
    println!("hardest climb by weighted score: {:?}", report.maximizers);

    Ok(())
}
