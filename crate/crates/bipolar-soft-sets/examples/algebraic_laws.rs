//! The operation algebra, demonstrated.
//!
//! The two union/intersection flavours differ in how they treat
//! parameters only one operand scored: the *extended* forms keep them,
//! the *restricted* forms drop them. Both satisfy the classical
//! identities — De Morgan duality under complement, idempotence,
//! absorption — and the extended union / restricted intersection act as
//! least upper and greatest lower bounds of the containment order.
//!
//! Run with `cargo run --example algebraic_laws`.

use bipolar_soft_sets::{BipolarSoftSet, ParameterSpace, Result, Universe};

fn main() -> Result<()> {
    let universe = Universe::new(["p", "q", "r", "s"])?;
    let space = ParameterSpace::from_tokens(["a", "b", "c"])?;

    let x = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("a", &["p", "q"], &["r"])
        .param("b", &["q"], &["p", "s"])
        .build()?;
    let y = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("b", &["q", "r"], &["s"])
        .param("c", &["p"], &["q", "r"])
        .build()?;

    // De Morgan: complementing a union gives the intersection of the
    // complements — in both flavours, and for the pairwise products.
    let law = |name: &str, holds: bool| {
        assert!(holds, "{name} failed");
        println!("{name:<59} holds");
    };
    law(
        "c(x extended-union y) = c(x) extended-intersect c(y)",
        x.union_extended(&y)?
            .complement()
            .equals(&x.complement().intersection_extended(&y.complement())?)?,
    );
    law(
        "c(x restricted-intersect y) = c(x) restricted-union c(y)",
        x.intersection_restricted(&y)?
            .complement()
            .equals(&x.complement().union_restricted(&y.complement())?)?,
    );
    law(
        "c(x or-product y) = c(x) and-product c(y)",
        x.or_product(&y)?
            .complement()
            .equals(&x.complement().and_product(&y.complement())?)?,
    );

    // Lattice shape: the extended union is the least set containing
    // both operands, the restricted intersection the greatest contained
    // in both.
    let join = x.union_extended(&y)?;
    let meet = x.intersection_restricted(&y)?;
    law(
        "x and y are contained in (x extended-union y)",
        x.is_subset_of(&join)? && y.is_subset_of(&join)?,
    );
    law(
        "(x restricted-intersect y) is contained in x and y",
        meet.is_subset_of(&x)? && meet.is_subset_of(&y)?,
    );
    law(
        "idempotence",
        x.union_extended(&x)?.equals(&x)? && x.intersection_restricted(&x)?.equals(&x)?,
    );

    // On equal domains the two flavours coincide, absorption holds, and
    // the relative null and absolute sets bound everything. (Absorption
    // needs equal domains: joining `z` with a wider-domain set would
    // widen `z`'s domain too.)
    let z = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("a", &["r"], &["p"])
        .param("b", &[], &["q"])
        .build()?;
    let w = BipolarSoftSet::builder(universe.clone(), space.clone())
        .param("a", &["p", "r"], &[])
        .param("b", &["s"], &["q"])
        .build()?;
    law(
        "extended and restricted unions agree on equal domains",
        z.union_extended(&w)?.equals(&z.union_restricted(&w)?)?,
    );
    law(
        "join and meet re-absorb on equal domains",
        z.union_extended(&z.intersection_extended(&w)?)?.equals(&z)?
            && z.intersection_extended(&z.union_extended(&w)?)?.equals(&z)?,
    );
    let domain = ["a", "b"];
    let null = BipolarSoftSet::relative_null(universe.clone(), space.clone(), &domain)?;
    let all = BipolarSoftSet::relative_absolute(universe, space, &domain)?;
    law(
        "relative null below, relative absolute above",
        null.is_subset_of(&z)? && z.is_subset_of(&all)?,
    );

    // Where equality genuinely fails, containment still holds: mixing
    // extended unions with an extended intersection only distributes one
    // way.
    let lhs = x.union_extended(&y.intersection_extended(&z)?)?;
    let rhs = x
        .union_extended(&y)?
        .intersection_extended(&x.union_extended(&z)?)?;
    law(
        "one-directional distributivity (containment, not equality)",
        rhs.is_subset_of(&lhs)?,
    );
    println!(
        "  ... and on these operands the two sides really differ: {}",
        if lhs.equals(&rhs)? { "no" } else { "yes" }
    );

    Ok(())
}
