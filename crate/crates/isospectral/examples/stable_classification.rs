//! Stable-sequence classification: grouping weight indices by decay
//! exponent into the limiting partition, reversing under flips, and
//! recovering exponents from sampled data by log-log regression.
//!
//! Run with `cargo run --example stable_classification`.

use isospectral::limits::{fit_exponents, ExponentWeights, MomentCurve};
use isospectral::{Distribution, DistributionSequence, SpectrumConfig, Subset};

fn main() -> isospectral::Result<()> {
    // Weights w_i(t) = c_i t^(e_i): equal exponents share a block, smaller
    // exponents dominate and come first.
    let data = ExponentWeights::new(vec![1.0, 2.0, 0.5, 3.0], vec![0.0, 2.0, 0.0, 5.0])?;
    println!("exponents {:?}", data.exponents());
    println!("limiting partition: {}", data.limiting_partition());

    // Flipping inverts every weight, so the partition reverses.
    println!(
        "flipped data classifies as: {}",
        data.flipped().limiting_partition()
    );

    // A moment curve realizes integer exponents given by part position.
    let spectrum = SpectrumConfig::new(vec![1.0, 2.0, 3.0, 4.0])?;
    let curve = MomentCurve::new(DistributionSequence::new(vec![
        Distribution::new(
            spectrum.clone(),
            Subset::from_indices(&[1, 3]),
            vec![0.7, 0.3],
        )?,
        Distribution::new(spectrum, Subset::from_indices(&[0, 2]), vec![0.5, 0.5])?,
    ])?);
    println!("\nmoment curve partition:   {}", curve.support_partition());
    println!(
        "implied exponents give:   {}",
        curve.implied_exponents().limiting_partition()
    );

    // Fit exponents back from sampled points of the curve.
    let ts: Vec<f64> = (2..=8).map(|k| 10f64.powi(-k)).collect();
    let samples: Vec<Vec<f64>> = ts
        .iter()
        .map(|&t| {
            let dist = curve.eval(t)?;
            Ok((0..4).map(|i| dist.weight_at(i)).collect())
        })
        .collect::<isospectral::Result<_>>()?;
    let fitted = fit_exponents(&ts, &samples)?;
    println!("fitted exponents:         {:?}", fitted.exponents());
    println!("fitted classification:    {}", fitted.limiting_partition());

    // Data that is not a power law is refused rather than misclassified.
    let bad: Vec<Vec<f64>> = ts.iter().map(|&t| vec![1.0, 1.0 / (-t.ln())]).collect();
    match fit_exponents(&ts, &bad) {
        Err(e) => println!("\nnon-power data rejected: {e}"),
        Ok(_) => println!("\nunexpected: non-power data accepted"),
    }
    Ok(())
}
