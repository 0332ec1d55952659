//! Topology of a finite space read off its specialization order.

use finspace::FiniteSpace;

fn main() -> finspace::Result<()> {
    // Two minima below two maxima: a model of the circle.
    let x = FiniteSpace::from_relations(
        ["a", "b", "c", "d"],
        [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )?;
    for p in x.points() {
        let u: Vec<&str> = x.minimal_open_set(p)?.iter().map(|&q| x.label(q)).collect();
        let cl: Vec<&str> = x.closure_of_point(p)?.iter().map(|&q| x.label(q)).collect();
        println!(
            "U({}) = {{{}}}   closure = {{{}}}",
            x.label(p),
            u.join(", "),
            cl.join(", ")
        );
    }
    let ab = x.point_set(["a", "b"])?;
    println!(
        "{{a, b}} open: {}, closed: {}",
        x.is_open(&ab)?,
        x.is_closed(&ab)?
    );
    println!(
        "T0: {}, components: {}",
        x.is_t0(),
        x.connected_components().len()
    );

    // Gluing two points gives a non-T0 space; its Kolmogorov quotient
    // identifies them again.
    let y = FiniteSpace::from_relations(["p", "q", "r"], [("p", "q"), ("q", "p"), ("q", "r")])?;
    let k = y.kolmogorov_quotient();
    println!(
        "quotient of {:?}: {} points, classes {:?}",
        y.labels(),
        k.space.len(),
        k.classes
    );
    println!("quotient map continuous: {}", k.quotient.is_continuous());
    Ok(())
}
