//! When is the covering a literal product over a subspace, and can a
//! different maximal tree make it one?

use std::collections::BTreeMap;

use finspace::covering::{
    comma_cover, find_trivializing_tree, functor_for_tree, functor_from_tree_hom, is_trivial_on,
    restriction_is_product, triviality_criterion,
};
use finspace::group::{hom_from_presentation, FiniteGroup};
use finspace::groupoid::{pi1_presentation, SpanningTree};
use finspace::FiniteSpace;

fn main() -> finspace::Result<()> {
    let x = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    let tree = SpanningTree::from_edges(
        &x,
        [x.arrow("a", "c")?, x.arrow("b", "c")?, x.arrow("b", "d")?],
    )?;
    let p = pi1_presentation(&x, 0, &tree)?;
    let z6 = FiniteGroup::cyclic(6)?;
    let alpha = hom_from_presentation(&p, &z6, BTreeMap::from([(x.arrow("a", "d")?, 2)]))?;
    let cover = comma_cover(&functor_from_tree_hom(&tree, &alpha)?);

    for labels in [["a", "b", "c"], ["a", "b", "d"]] {
        let a = x.subspace_by_labels(labels)?;
        let name = labels.join("");
        println!(
            "over {{{name}}}: product = {}",
            restriction_is_product(&cover, &a)?
        );
        match triviality_criterion(&tree, &alpha, &a) {
            Ok(b) => println!("  loop criterion says trivial = {b}"),
            Err(e) => println!("  loop criterion not applicable: {e}"),
        }
        if let Some(t) = find_trivializing_tree(&alpha, &tree, &a)? {
            let g = functor_for_tree(&alpha, &tree, &t)?;
            println!(
                "  tree {} trivializes it: {}",
                t.display(),
                is_trivial_on(&g, &a)
            );
        }
    }
    let whole = x.subspace(x.points())?;
    println!(
        "a tree trivializing all of X: {:?}",
        find_trivializing_tree(&alpha, &tree, &whole)?.map(|t| t.display())
    );
    Ok(())
}
