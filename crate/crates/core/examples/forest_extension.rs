//! Extending a forest of comparabilities to a maximal tree.

use finspace::groupoid::{extend_forest_to_tree, spanning_trees, tree_path};
use finspace::FiniteSpace;

fn main() -> finspace::Result<()> {
    let x = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    println!(
        "from nothing:   {}",
        extend_forest_to_tree(&x, [])?.display()
    );
    let seeded = extend_forest_to_tree(&x, [x.arrow("b", "d")?])?;
    println!("seeded by b<d:  {}", seeded.display());
    let path = tree_path(&seeded, x.index_of("a")?, x.index_of("b")?)?;
    println!("tree path a..b: {}", path.display(&x));

    let all = spanning_trees(&x, 100).expect("few trees");
    println!("{} maximal trees in total:", all.len());
    for t in &all {
        println!("  {}", t.display());
    }

    // A cycle in the forest is rejected.
    let cyc = [
        x.arrow("a", "c")?,
        x.arrow("b", "c")?,
        x.arrow("b", "d")?,
        x.arrow("a", "d")?,
    ];
    println!(
        "four-edge forest: {}",
        extend_forest_to_tree(&x, cyc).unwrap_err()
    );
    Ok(())
}
