//! Finite groups from Cayley tables, subgroups, cosets and homomorphisms.

use std::collections::{BTreeMap, BTreeSet};

use finspace::group::{hom_from_presentation, FiniteGroup};
use finspace::groupoid::{pi1_presentation, SpanningTree};
use finspace::FiniteSpace;

fn main() -> finspace::Result<()> {
    let s3 = FiniteGroup::symmetric(3)?;
    println!(
        "S3 elements {:?}, abelian: {}",
        s3.labels(),
        s3.is_abelian()
    );
    let swap = s3.index_of("213")?;
    let h = s3.subgroup_generated(&BTreeSet::from([swap]))?;
    let reps: Vec<&str> = s3
        .left_coset_representatives(&h)?
        .iter()
        .map(|&g| s3.label(g))
        .collect();
    println!(
        "<213> has order {}, index {}, coset representatives {reps:?}",
        h.len(),
        s3.coset_count(&h)?
    );

    let bad = FiniteGroup::from_label_table(
        vec!["e".into(), "x".into()],
        &[vec!["e".into(), "x".into()], vec!["x".into(), "x".into()]],
    );
    println!("a table without inverses: {}", bad.unwrap_err());

    // Homomorphisms out of a presentation are checked on every relator.
    let x = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    let tree = SpanningTree::from_edges(
        &x,
        [x.arrow("a", "c")?, x.arrow("b", "c")?, x.arrow("b", "d")?],
    )?;
    let p = pi1_presentation(&x, 0, &tree)?;
    let alpha = hom_from_presentation(
        &p,
        &s3,
        BTreeMap::from([(x.arrow("a", "d")?, s3.index_of("231")?)]),
    )?;
    println!(
        "{}: image of order {}, [S3 : im] = {}",
        alpha.display(),
        alpha.image().len(),
        alpha.cokernel_size()
    );

    let chain = FiniteSpace::from_relations(["x", "y", "z"], [("x", "y"), ("y", "z")])?;
    let t = SpanningTree::from_edges(&chain, [chain.arrow("x", "y")?, chain.arrow("y", "z")?])?;
    let q = pi1_presentation(&chain, 0, &t)?;
    let z6 = FiniteGroup::cyclic(6)?;
    let err =
        hom_from_presentation(&q, &z6, BTreeMap::from([(chain.arrow("x", "z")?, 4)])).unwrap_err();
    println!("on the chain: {err}");
    Ok(())
}
