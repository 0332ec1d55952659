//! Graphviz output for a space and for a covering. Pipe into `dot -Tsvg`.

use std::collections::BTreeMap;

use finspace::covering::{comma_cover, functor_from_tree_hom};
use finspace::dot::{covering_to_dot, space_to_dot};
use finspace::group::{hom_from_presentation, FiniteGroup};
use finspace::groupoid::{pi1_presentation, SpanningTree};
use finspace::FiniteSpace;

fn main() -> finspace::Result<()> {
    let x = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    print!("{}", space_to_dot(&x));

    let tree = SpanningTree::from_edges(
        &x,
        [x.arrow("a", "c")?, x.arrow("b", "c")?, x.arrow("b", "d")?],
    )?;
    let p = pi1_presentation(&x, 0, &tree)?;
    let z3 = FiniteGroup::cyclic(3)?;
    let alpha = hom_from_presentation(&p, &z3, BTreeMap::from([(x.arrow("a", "d")?, 1)]))?;
    print!(
        "{}",
        covering_to_dot(&comma_cover(&functor_from_tree_hom(&tree, &alpha)?))
    );
    Ok(())
}
