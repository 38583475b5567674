//! Euler characteristics of the glued complexes by three independent
//! routes: face enumeration, the alternating Stirling sum, and the exact
//! hyperbolic-tangent series. The values are the tangent numbers with
//! alternating signs.
//!
//! Run with `cargo run --example euler_table`.

use isospectral::combin::tangent_number;
use isospectral::complex::{
    complex_face_count, euler_characteristic_formula, euler_characteristic_tanh,
    IsospectralComplex, MAX_COMPLEX_D,
};
use isospectral::permutahedron::face_count;

fn main() -> isospectral::Result<()> {
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>12}",
        "d", "enumerated", "formula", "tanh", "tangent"
    );
    for d in 1..=10 {
        let enumerated = if d <= MAX_COMPLEX_D {
            IsospectralComplex::build(d)?
                .euler_characteristic()
                .to_string()
        } else {
            "-".to_string()
        };
        println!(
            "{:>3} {:>12} {:>12} {:>12} {:>12}",
            d,
            enumerated,
            euler_characteristic_formula(d),
            euler_characteristic_tanh(d),
            tangent_number(d)
        );
    }

    println!("\nface counts for d = 4 (permutahedron vs glued complex):");
    println!("{:>3} {:>14} {:>14}", "n", "permutahedron", "complex");
    for n in 0..4 {
        println!(
            "{:>3} {:>14} {:>14}",
            n,
            face_count(4, n)?,
            complex_face_count(4, n)?
        );
    }
    Ok(())
}
