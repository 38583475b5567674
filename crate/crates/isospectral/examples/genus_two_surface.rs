//! The three-point isospectral surface: four hexagons glued into a closed
//! surface of Euler characteristic -2, its Petrie polygon covering every
//! edge, and an OFF export of the complex.
//!
//! Run with `cargo run --example genus_two_surface`.

use isospectral::complex::{
    face_boundary_cycle, first_flag, off_document, petrie_polygon, surface_report,
    IsospectralComplex,
};

fn main() -> isospectral::Result<()> {
    let complex = IsospectralComplex::build(3)?;
    println!("face vector: {:?}", complex.face_vector());

    for &f in complex.ids_of_dimension(2) {
        let face = complex.face(f);
        let cycle = face_boundary_cycle(&complex, f)?;
        println!(
            "hexagon {} over {} signs {:?}: boundary {:?}",
            f,
            face.partition,
            face.signs.signs(3),
            cycle
        );
    }

    let report = surface_report(&complex);
    println!("\nclosed-surface checks:");
    println!("  connected:            {}", report.connected);
    println!("  edges in two faces:   {}", report.edges_regular);
    println!(
        "  vertex links cycles:  {} (degree {:?})",
        report.vertex_links_are_cycles, report.vertex_degree
    );
    println!("  euler characteristic: {}", report.euler_characteristic);
    println!("  genus:                {:?}", report.genus);

    let walk = petrie_polygon(&complex, first_flag(&complex)?)?;
    println!(
        "\nPetrie walk: length {}, covers {} of {} edges",
        walk.len(),
        walk.covered_edges,
        complex.ids_of_dimension(1).len()
    );
    println!("edge sequence: {:?}", walk.edges);

    println!("\nOFF document:\n{}", off_document(&complex)?);
    Ok(())
}
