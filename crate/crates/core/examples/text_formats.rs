//! Reading and writing the poset, group table and homomorphism formats.

use finspace::group::hom_from_presentation;
use finspace::groupoid::{extend_forest_to_tree, pi1_presentation};
use finspace::parse::{parse_edges, parse_group_spec, parse_hom_spec, parse_poset, write_poset};

fn main() -> finspace::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let x =
        parse_poset(&std::fs::read_to_string(format!("{dir}/circle.poset")).expect("data file"))?;
    print!("{}", write_poset(&x));

    let tree = extend_forest_to_tree(&x, parse_edges(&x, "a<c, b<c, b<d")?)?;
    let p = pi1_presentation(&x, 0, &tree)?;
    let s3 = parse_group_spec(&format!("table:{dir}/s3.table"))?;
    let images = parse_hom_spec(&p, &s3, "g[a<d] -> t")?;
    println!("{}", hom_from_presentation(&p, &s3, images)?.display());

    match parse_poset("points: a b\na < c\n") {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
