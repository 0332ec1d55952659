//! Presentations of the fundamental group from a maximal tree.

use finspace::complex::homology_of_space;
use finspace::groupoid::{abelianization, extend_forest_to_tree, pi1_presentation, SpanningTree};
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
    let p = pi1_presentation(&x, x.index_of("a")?, &tree)?;
    println!("tree {}: {p}", tree.display());
    println!(
        "abelianization {} (H1 of the order complex: {})",
        abelianization(&p),
        homology_of_space(&x, 1)?
    );

    // A chain is contractible: the single generator is killed by a relator.
    let chain = FiniteSpace::from_relations(["x", "y", "z"], [("x", "y"), ("y", "z")])?;
    let t = extend_forest_to_tree(&chain, [])?;
    let q = pi1_presentation(&chain, 0, &t)?;
    println!("chain, tree {}: {q} ~ {}", t.display(), abelianization(&q));

    // The wedge of two circles has a free group on two generators.
    let wedge = FiniteSpace::from_relations(
        ["a", "b", "c", "d", "e"],
        [
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("b", "e"),
            ("a", "e"),
        ],
    )?;
    let t = extend_forest_to_tree(&wedge, [])?;
    let w = pi1_presentation(&wedge, 0, &t)?;
    println!("theta graph: {w} ~ {}", abelianization(&w));
    Ok(())
}
