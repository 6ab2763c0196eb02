//! Colors a small graph optimally, contracts the color classes and checks
//! whether the quotient is complete and planar.
//!
//! cargo run --example quotient -- petersen

use ect_core::{
    apply_ect, chromatic_number_exact, color_classes, is_planar, is_quotient_complete, named_graph,
};

fn main() -> Result<(), ect_core::Error> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "petersen".into());
    let g = named_graph(&name)?;
    let (chi, coloring) = chromatic_number_exact(&g);
    let classes = color_classes(&g, &coloring)?;
    let q = apply_ect(&g, &classes)?;
    println!("{name}: n = {}, m = {}, chi = {chi}", g.n(), g.edge_count());
    println!("classes: {:?}", classes.classes());
    println!(
        "quotient: {} vertices, complete = {}, planar = {}",
        q.graph.n(),
        is_quotient_complete(&q),
        is_planar(&q.graph).planar
    );
    Ok(())
}
