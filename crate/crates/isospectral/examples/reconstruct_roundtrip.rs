//! Reconstruct a Jacobi matrix from a spectral distribution and invert it
//! back: the two directions of the correspondence.
//!
//! Run with `cargo run --example reconstruct_roundtrip`.

use isospectral::spectral::{orthogonal_polynomials, reconstruct, spectral_distribution};
use isospectral::{Distribution, SpectrumConfig};

fn main() -> isospectral::Result<()> {
    // A distribution with four atoms and uneven weights.
    let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.5, 4.0])?;
    let dist = Distribution::full_support(spectrum, vec![0.1, 0.2, 0.3, 0.4])?;
    println!("atoms at   {:?}", dist.support_points());
    println!("weights    {:?}", dist.normalized().weights());

    // Forward: the unique Jacobi matrix with this spectral distribution.
    let matrix = reconstruct(&dist)?;
    println!("\nJacobi matrix (entry vector): {:?}", matrix.entries());
    println!("diag    {:?}", matrix.diagonal());
    println!("offdiag {:?}", matrix.offdiagonal());

    // The attached monic orthogonal polynomials; the top one vanishes on
    // the support.
    let polys = orthogonal_polynomials(&dist)?;
    let top = polys.top_degree();
    println!(
        "\nmonic p_{top} coefficients: {:?}",
        polys.coefficients(top)
    );
    println!(
        "p_{top} at the support points: {:?}",
        (0..top).map(|k| polys.value(top, k)).collect::<Vec<_>>()
    );

    // Backward: eigenvalues and first-component weights recover the
    // distribution.
    let recovered = spectral_distribution(&matrix)?;
    println!("\nrecovered atoms   {:?}", recovered.support_points());
    println!("recovered weights {:?}", recovered.weights());
    println!(
        "round-trip weight error: {:.3e}",
        dist.weight_distance(&recovered)
    );
    Ok(())
}
