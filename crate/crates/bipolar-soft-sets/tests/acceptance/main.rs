//! End-to-end acceptance suite.
//!
//! Each test covers one numbered criterion and finishes by printing a
//! `criterion N (...): PASS` line (visible with `--nocapture`); the
//! libtest result line carries the same name either way.

mod gen;
mod naive;

use std::process::Command;
use std::time::{Duration, Instant};

use bipolar_soft_sets::{io, Error, PairTable, Partition, TriTable};
use rand::Rng;

use fixtures::{
    candidates, check_sides, fixture_path, houses_x, houses_y, mood_chart, CANDIDATE_CHOICE,
    CANDIDATE_WEIGHTS,
};
use naive::Naive;

/// The six operations on the worked two-set example reproduce every
/// expected value, well under a second.
#[test]
fn criterion_1_worked_operation_suite() {
    let start = Instant::now();
    let x = houses_x();
    let y = houses_y();

    let union_ext = x.union_extended(&y).unwrap();
    let labels: Vec<&str> = union_ext.domain_labels().collect();
    assert_eq!(labels, ["e1", "e2", "e3", "e4", "e5", "e6"]);
    check_sides(&union_ext, "e1", &["h2", "h3"], &["h4", "h5"]);
    check_sides(&union_ext, "e2", &["h1", "h2", "h5"], &["h4"]);
    check_sides(&union_ext, "e3", &["h1", "h3", "h5"], &["h2", "h4"]);
    check_sides(&union_ext, "e4", &["h1", "h3", "h4"], &["h2"]);
    check_sides(&union_ext, "e5", &["h2", "h3"], &["h1", "h4"]);
    check_sides(&union_ext, "e6", &["h2", "h3", "h5"], &["h4"]);

    let int_ext = x.intersection_extended(&y).unwrap();
    let labels: Vec<&str> = int_ext.domain_labels().collect();
    assert_eq!(labels, ["e1", "e2", "e3", "e4", "e5", "e6"]);
    check_sides(&int_ext, "e1", &["h2", "h3"], &["h4", "h5"]);
    check_sides(&int_ext, "e2", &["h2", "h5"], &["h3", "h4"]);
    check_sides(&int_ext, "e3", &["h1", "h3"], &["h2", "h4"]);
    check_sides(&int_ext, "e4", &["h1", "h3", "h4"], &["h2"]);
    check_sides(&int_ext, "e5", &["h2", "h3"], &["h1", "h4"]);
    check_sides(&int_ext, "e6", &["h2", "h3", "h5"], &["h4"]);

    let union_res = x.union_restricted(&y).unwrap();
    let labels: Vec<&str> = union_res.domain_labels().collect();
    assert_eq!(labels, ["e2", "e3"]);
    check_sides(&union_res, "e2", &["h1", "h2", "h5"], &["h4"]);
    check_sides(&union_res, "e3", &["h1", "h3", "h5"], &["h2", "h4"]);

    let int_res = x.intersection_restricted(&y).unwrap();
    let labels: Vec<&str> = int_res.domain_labels().collect();
    assert_eq!(labels, ["e2", "e3"]);
    check_sides(&int_res, "e2", &["h2", "h5"], &["h3", "h4"]);
    check_sides(&int_res, "e3", &["h1", "h3"], &["h2", "h4"]);

    let or = x.or_product(&y).unwrap();
    assert_eq!(or.domain_len(), 16);
    check_sides(&or, "(e1,e2)", &["h2", "h3", "h5"], &["h4"]);
    check_sides(&or, "(e1,e3)", &["h1", "h2", "h3", "h5"], &["h4"]);
    check_sides(&or, "(e1,e4)", &["h1", "h2", "h3", "h4"], &[]);
    check_sides(&or, "(e1,e5)", &["h2", "h3"], &["h4"]);
    check_sides(&or, "(e2,e2)", &["h1", "h2", "h5"], &["h4"]);
    check_sides(&or, "(e2,e3)", &["h1", "h2", "h3", "h5"], &["h4"]);

    let and = x.and_product(&y).unwrap();
    assert_eq!(and.domain_len(), 16);
    check_sides(&and, "(e1,e2)", &["h2"], &["h4", "h5"]);
    check_sides(&and, "(e1,e3)", &["h3"], &["h2", "h4", "h5"]);
    check_sides(&and, "(e1,e4)", &["h3"], &["h2", "h4", "h5"]);
    check_sides(&and, "(e1,e5)", &["h2", "h3"], &["h1", "h4", "h5"]);
    check_sides(&and, "(e2,e2)", &["h2", "h5"], &["h3", "h4"]);
    check_sides(&and, "(e2,e3)", &["h1", "h5"], &["h2", "h3", "h4"]);

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "operation suite took {elapsed:?}"
    );
    println!("criterion 1 (worked operation suite): PASS");
}

fn assert_tri_matches(table: &TriTable, rows: &[&str], cols: &[&str], cells: &[&[i64]]) {
    assert_eq!(table.row_labels(), rows);
    let labels: Vec<&str> = table.column_labels().collect();
    assert_eq!(labels, cols);
    for (i, row) in cells.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            assert_eq!(
                table.entry(i, j).value(),
                value,
                "cell ({}, {})",
                rows[i],
                cols[j]
            );
        }
    }
}

/// The table encodings of the worked examples come out cell-for-cell
/// as expected.
#[test]
fn criterion_2_tabular_goldens() {
    let tri = TriTable::from_set(&houses_x());
    assert_tri_matches(
        &tri,
        &["h1", "h2", "h3", "h4", "h5"],
        &["e1", "e2", "e3", "e6"],
        &[
            &[0, 1, 1, 0],
            &[1, 1, -1, 1],
            &[1, -1, 1, 1],
            &[-1, -1, -1, -1],
            &[-1, 1, 0, 1],
        ],
    );

    let tri = TriTable::from_set(&mood_chart());
    assert_tri_matches(
        &tri,
        &["1", "2", "3", "4", "5", "6", "7"],
        &["e1", "e2", "e3", "e4", "e5"],
        &[
            &[1, 1, -1, 1, -1],
            &[-1, 1, 1, 1, 1],
            &[0, 1, 0, -1, 1],
            &[0, 1, 1, 1, -1],
            &[1, 0, 1, 1, 1],
            &[-1, -1, 1, 1, -1],
            &[-1, 1, -1, 1, 1],
        ],
    );

    let pair = PairTable::from_set(&houses_x());
    assert_eq!(pair.row_labels(), ["h1", "h2", "h3", "h4", "h5"]);
    assert_eq!(pair.n_cols(), 4);
    let f_cells: [[bool; 4]; 5] = [
        [false, true, true, false],
        [true, true, false, true],
        [true, false, true, true],
        [false, false, false, false],
        [false, true, false, true],
    ];
    let g_cells: [[bool; 4]; 5] = [
        [false, false, false, false],
        [false, false, true, false],
        [false, true, false, false],
        [true, true, true, true],
        [true, false, false, false],
    ];
    for i in 0..5 {
        for j in 0..4 {
            assert_eq!(pair.f(i, j), f_cells[i][j], "f cell ({i}, {j})");
            assert_eq!(pair.g(i, j), g_cells[i][j], "g cell ({i}, {j})");
        }
    }
    println!("criterion 2 (tabular goldens): PASS");
}

/// The unweighted candidate-selection walkthrough: scores, partitions,
/// core, and the full expected ranking.
#[test]
fn criterion_3_unweighted_selection() {
    let report = candidates().decide(&CANDIDATE_CHOICE).unwrap();
    assert_eq!(report.table.decisions(), [3, 1, -3, 0, 0, 2, 2, 4]);
    assert_eq!(report.condition, Partition::singletons(8));
    assert!(report.consistent);

    let reduction = report.reduction.as_ref().unwrap();
    assert!(reduction.eliminated.is_empty());
    assert_eq!(reduction.core, CANDIDATE_CHOICE);

    assert_eq!(report.maximizers, ["m8"]);
    let expected: Vec<(String, i64)> = [
        ("m8", 4),
        ("m1", 3),
        ("m6", 2),
        ("m7", 2),
        ("m2", 1),
        ("m4", 0),
        ("m5", 0),
        ("m3", -3),
    ]
    .into_iter()
    .map(|(l, d)| (l.to_owned(), d))
    .collect();
    assert_eq!(report.ranking, expected);
    println!("criterion 3 (unweighted selection): PASS");
}

/// The weighted variant of the same walkthrough, scores pinned to 1e-9.
#[test]
fn criterion_4_weighted_selection() {
    let report = candidates()
        .decide_weighted(&CANDIDATE_CHOICE, &CANDIDATE_WEIGHTS)
        .unwrap();
    // m5's row over the chosen columns is [1, 0, 0, -1, 1, -1], so its
    // score follows the same entry rule as every other row:
    // 0.9 + 0 + 0 - (1 - 0.6) + 0.9 - (1 - 0.9) = 1.3.
    let expected = [2.8, 1.3, -1.0, 1.2, 1.3, 2.6, 1.8, 3.6];
    let got = report.table.decisions();
    assert_eq!(got.len(), expected.len());
    for (i, (&g, &e)) in got.iter().zip(&expected).enumerate() {
        assert!(
            (g - e).abs() <= 1e-9,
            "decision {i}: got {g}, expected {e}"
        );
    }
    assert_eq!(report.maximizers, ["m8"]);
    let order: Vec<&str> = report.ranking.iter().map(|(l, _)| l.as_str()).collect();
    assert_eq!(order, ["m8", "m1", "m6", "m7", "m2", "m5", "m4", "m3"]);
    println!("criterion 4 (weighted selection): PASS");
}

/// The randomized law suite: every law sees at least 1000 generated
/// cases with zero failures, plus an exhaustive small-lattice sweep and
/// concrete witnesses for the one-directional laws.
#[test]
fn criterion_5_algebraic_laws() {
    let mut counts = laws::run_suite(0xB550_5EED, 1000);
    laws::run_lattice_sweep(&mut counts);
    laws::equality_fails_for_one_directional_distributivity();

    let expected = [
        "consistency-closure",
        "complement-involution",
        "complement-order-reversal",
        "de-morgan-extended-union",
        "de-morgan-extended-intersection",
        "de-morgan-restricted-union",
        "de-morgan-restricted-intersection",
        "de-morgan-or-product",
        "de-morgan-and-product",
        "idempotence",
        "commutativity",
        "associativity",
        "union-upper-bound",
        "intersection-lower-bound",
        "union-least",
        "intersection-greatest",
        "distributive-eq-1",
        "distributive-eq-2",
        "distributive-eq-3",
        "distributive-eq-4",
        "distributive-eq-5",
        "distributive-eq-6",
        "distributive-eq-9",
        "distributive-eq-11",
        "distributive-cont-7",
        "distributive-cont-8",
        "distributive-cont-10",
        "distributive-cont-12",
        "fixed-domain-collapse",
        "absorption",
        "bounds",
    ];
    for law in expected {
        let n = counts.get(law).copied().unwrap_or(0);
        assert!(n >= 1000, "law '{law}' only saw {n} cases");
    }
    assert_eq!(counts.len(), expected.len(), "unexpected law names counted");
    println!("criterion 5 (algebraic laws): PASS");
}

/// Library results agree with independent brute-force models: every
/// operation exhaustively on a small universe, the decision pipeline on
/// randomized tables.
#[test]
fn criterion_6_oracle_equivalence() {
    // Exhaustive sweep: all 100 consistent sets over two objects and two
    // parameters, all ordered pairs, every operation.
    let sets = gen::all_small_sets();
    let models: Vec<Naive> = sets.iter().map(Naive::from_set).collect();
    for (a, ma) in sets.iter().zip(&models) {
        assert_eq!(Naive::from_set(&a.complement()), ma.complement());
        for (b, mb) in sets.iter().zip(&models) {
            let union = ma.union_extended(mb);
            assert!(union.is_consistent());
            assert_eq!(Naive::from_set(&a.union_extended(b).unwrap()), union);
            assert_eq!(
                Naive::from_set(&a.intersection_extended(b).unwrap()),
                ma.intersection_extended(mb)
            );
            assert_eq!(Naive::from_set(&a.and_product(b).unwrap()), ma.and_product(mb));
            assert_eq!(Naive::from_set(&a.or_product(b).unwrap()), ma.or_product(mb));
            let overlap = !ma.domain().is_disjoint(&mb.domain());
            match (a.union_restricted(b), ma.union_restricted(mb)) {
                (Ok(r), Some(m)) => {
                    assert!(overlap);
                    assert_eq!(Naive::from_set(&r), m);
                }
                (Err(Error::EmptyCommonDomain), None) => assert!(!overlap),
                (r, m) => panic!("restricted union disagreement: {r:?} vs {m:?}"),
            }
            match (a.intersection_restricted(b), ma.intersection_restricted(mb)) {
                (Ok(r), Some(m)) => assert_eq!(Naive::from_set(&r), m),
                (Err(Error::EmptyCommonDomain), None) => {}
                (r, m) => panic!("restricted intersection disagreement: {r:?} vs {m:?}"),
            }
        }
    }

    // Randomized decision tables against the brute-force pipeline.
    let mut rng = gen::rng(0x0DD5_0FF5);
    for _ in 0..500 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(1..=5);
        let universe = gen::universe(n);
        let space = gen::space(k);
        let full: Vec<String> = space.iter().map(|p| p.positive().to_owned()).collect();
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let set = gen::set_over(&mut rng, &universe, &space, &full);

        let table = set.decision_table(&refs).unwrap();
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| table.tri().row(i).iter().map(|e| e.value()).collect())
            .collect();
        let all: Vec<usize> = (0..k).collect();

        assert_eq!(
            table.condition_partition().blocks(),
            naive::condition_relation(&rows, &all).blocks()
        );
        assert_eq!(
            table.decision_partition().blocks(),
            naive::decision_relation(&rows, &all).blocks()
        );
        assert_eq!(
            set.ind(&refs).unwrap().blocks(),
            table.condition_partition().blocks()
        );
        assert_eq!(
            table.is_consistent(),
            naive::condition_relation(&rows, &all)
                .refines(&naive::decision_relation(&rows, &all))
        );

        for (j, label) in refs.iter().enumerate() {
            assert_eq!(
                table.dispensable(label).unwrap(),
                naive::dispensable(&rows, &all, j),
                "dispensability of column {label}"
            );
        }

        let report = table.reduce().unwrap();
        let (elim, core) = naive::reduce(&rows);
        let elim: Vec<&str> = elim.into_iter().map(|j| refs[j]).collect();
        let core: Vec<&str> = core.into_iter().map(|j| refs[j]).collect();
        assert_eq!(report.eliminated, elim);
        assert_eq!(report.core, core);
    }
    println!("criterion 6 (oracle equivalence): PASS");
}

fn round_trip(set: &bipolar_soft_sets::BipolarSoftSet) {
    let text = io::dataset_to_text(set);
    let back = io::parse_dataset(&text).unwrap();
    assert!(back.equals(set).unwrap(), "text round trip changed:\n{text}");
    let table = io::dataset_to_table(set);
    let back = io::parse_dataset(&table).unwrap();
    assert!(
        back.equals(set).unwrap(),
        "table round trip changed:\n{table}"
    );
}

/// Saving and loading is the identity in both formats, for the worked
/// examples, the shipped fixture files, and 200 randomized sets.
#[test]
fn criterion_7_round_trips() {
    for set in [houses_x(), houses_y(), mood_chart(), candidates()] {
        round_trip(&set);
    }

    // The shipped fixture files decode to the in-memory builders.
    let dir = tempfile::tempdir().unwrap();
    for (file, set) in [
        ("houses_x.bss", houses_x()),
        ("houses_y.bss", houses_y()),
        ("houses_table.csv", houses_x()),
        ("mood_chart.bss", mood_chart()),
        ("candidates.bss", candidates()),
    ] {
        let loaded = io::load_dataset(&fixture_path(file)).unwrap();
        assert!(loaded.equals(&set).unwrap(), "fixture {file} diverges");
        // ... and survive a save/load cycle through both extensions.
        for name in ["copy.bss", "copy.csv"] {
            let path = dir.path().join(name);
            io::save_dataset(&loaded, &path, io::DatasetFormat::from_path(&path)).unwrap();
            assert!(io::load_dataset(&path).unwrap().equals(&set).unwrap());
        }
    }

    let mut rng = gen::rng(0x5EED_CAFE);
    for case in 0..200 {
        let n = rng.gen_range(1..=8);
        let k = rng.gen_range(1..=6);
        let universe = gen::universe(n);
        let space = gen::space(k);
        let domain = gen::domain(&mut rng, &space, false);
        let set = gen::set_over(&mut rng, &universe, &space, &domain);
        // Every fourth case exercises product labels, whose commas force
        // the table writer through its quoting path.
        let set = if case % 4 == 0 {
            let other = gen::overlapping_set(&mut rng, &universe, &space);
            if case % 8 == 0 {
                set.and_product(&other).unwrap()
            } else {
                set.or_product(&other).unwrap()
            }
        } else {
            set
        };
        round_trip(&set);
    }
    println!("criterion 7 (round trips): PASS");
}

/// The command-line binary end to end: a decision run on the candidate
/// fixture names the winner and exits cleanly; a contradictory dataset
/// is rejected with the dedicated exit code.
#[test]
fn criterion_8_cli() {
    let exe = env!("CARGO_BIN_EXE_bss");

    let output = Command::new(exe)
        .arg("decide")
        .arg(fixture_path("candidates.bss"))
        .args(["--params", "e1,e3,e4,e5,e7,e8"])
        .output()
        .unwrap();
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert_eq!(output.status.code(), Some(0), "stdout:\n{stdout}");
    assert!(
        stdout.contains("optimal: m8"),
        "missing winner in:\n{stdout}"
    );

    let output = Command::new(exe)
        .arg("validate")
        .arg(fixture_path("inconsistent.bss"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    println!("criterion 8 (command-line interface): PASS");
}
