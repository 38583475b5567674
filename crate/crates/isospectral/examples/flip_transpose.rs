//! The flip transpose: reversing a Jacobi matrix across its anti-diagonal
//! corresponds to a closed-form inversion of the spectral weights.
//!
//! Run with `cargo run --example flip_transpose`.

use isospectral::spectral::{flip_weights, reconstruct, spectral_distribution};
use isospectral::{Distribution, SpectrumConfig};

fn main() -> isospectral::Result<()> {
    let spectrum = SpectrumConfig::new(vec![0.0, 0.8, 2.0, 3.3])?;
    let dist = Distribution::full_support(spectrum, vec![0.4, 0.1, 0.3, 0.2])?;

    let matrix = reconstruct(&dist)?;
    println!("entries of f(w):        {:?}", matrix.entries());
    println!("entries of f(w) flipped: {:?}", matrix.flipped().entries());

    // The closed form: flipped weights are 1 / ((p'(lambda))^2 w), no
    // matrix computation involved.
    let flipped = flip_weights(&dist)?;
    println!(
        "\nflipped weights (closed form): {:?}",
        flipped.normalized().weights()
    );
    let via_matrix = spectral_distribution(&matrix.flipped())?;
    println!("flipped weights (via matrix):  {:?}", via_matrix.weights());
    println!("agreement: {:.3e}", flipped.weight_distance(&via_matrix));

    // Entry identity: f_i(w) = f_{2d-i}(flip(w)).
    let rebuilt = reconstruct(&flipped)?;
    println!(
        "\nentry identity residual: {:.3e}",
        rebuilt.entrywise_distance(&matrix.flipped())
    );

    // Involution: flipping twice returns the original weights.
    let twice = flip_weights(&flipped)?;
    println!(
        "involution residual:     {:.3e}",
        dist.normalized_distance(&twice)
    );
    Ok(())
}
