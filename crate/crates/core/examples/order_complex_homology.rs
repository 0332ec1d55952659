//! Integral homology of order complexes, computed exactly.

use finspace::complex::{homology_up_to, order_complex, SimplicialComplex};
use finspace::FiniteSpace;

fn report(name: &str, k: &SimplicialComplex) -> finspace::Result<()> {
    let hs = homology_up_to(k, k.dimension())?;
    let lines: Vec<String> = hs
        .iter()
        .enumerate()
        .map(|(n, h)| format!("H{n} = {h}"))
        .collect();
    println!(
        "{name}: chi = {}, {}",
        k.euler_characteristic(),
        lines.join(", ")
    );
    Ok(())
}

fn main() -> finspace::Result<()> {
    let circle = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    report("circle", &order_complex(&circle)?)?;

    // Non-Hausdorff suspension of the circle: a 2-sphere.
    let sphere = FiniteSpace::from_relations(
        ["a", "b", "c", "d", "e", "f"],
        [
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "e"),
            ("d", "e"),
            ("c", "f"),
            ("d", "f"),
        ],
    )?;
    report("sphere", &order_complex(&sphere)?)?;

    // Six-vertex projective plane, built directly from its facets.
    let rp2 = SimplicialComplex::from_facets(
        (1..=6).map(|i| i.to_string()).collect(),
        &[
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![2, 4, 5],
            vec![1, 3, 5],
        ],
    )?;
    report("projective plane", &rp2)?;
    Ok(())
}
