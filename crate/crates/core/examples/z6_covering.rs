//! The six-sheeted covering of the four-point circle defined by
//! `g[a<d] -> 2` in Z6: 24 points in two components, with Z6 acting by deck
//! transformations.

use std::collections::BTreeMap;

use finspace::covering::{
    check_deck_action, comma_cover, deck_transformation, functor_from_tree_hom, opposite_comma_iso,
    pi0_cover, verify_covering,
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
    let f = functor_from_tree_hom(&tree, &alpha)?;
    for (a, v) in f.values() {
        if a.src != a.dst {
            println!("F({}) = {}", x.arrow_label(a), z6.label(v));
        }
    }

    let cover = comma_cover(&f);
    println!("points: {}", cover.total().len());
    println!("components: {}", pi0_cover(&cover, &alpha)?);
    for comp in cover.total().connected_components() {
        let names: Vec<&str> = comp.iter().map(|&q| cover.total().label(q)).collect();
        println!("  {}", names.join(" "));
    }
    println!("{}", verify_covering(&cover));

    let deck = check_deck_action(&cover);
    println!(
        "deck action free: {}, transitive on fibers: {}",
        deck.free, deck.transitive_on_fibers
    );
    let two = deck_transformation(&cover, 2)?;
    let a0 = cover.point(x.index_of("a")?, 0);
    println!(
        "2_* sends {} to {}",
        cover.total().label(a0),
        cover.total().label(two.apply(a0))
    );
    let iso = opposite_comma_iso(&cover);
    println!(
        "opposite comma identification is a homeomorphism: {}",
        iso.is_homeomorphism()
    );
    Ok(())
}
