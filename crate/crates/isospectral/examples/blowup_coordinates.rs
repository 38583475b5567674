//! Blow-up coordinates: lifting sequences of distributions into the
//! subset-indexed coordinate blocks, membership checking, projection back,
//! and face classification via barycentres.
//!
//! Run with `cargo run --example blowup_coordinates`.

use isospectral::blowup::{barycentre, face_of, lift, membership, project};
use isospectral::subset::nonempty_subsets_in_order;
use isospectral::{Distribution, DistributionSequence, OrderedPartition, SpectrumConfig, Subset};

fn main() -> isospectral::Result<()> {
    let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.0])?;

    // A split sequence: point mass at the first atom, a weighted pair on
    // the rest.
    let seq = DistributionSequence::new(vec![
        Distribution::point_mass(spectrum.clone(), 0)?,
        Distribution::new(
            spectrum.clone(),
            Subset::from_indices(&[1, 2]),
            vec![1.0, 4.0],
        )?,
    ])?;

    let point = lift(&seq)?;
    println!("coordinate blocks of the lift (canonical subset order):");
    for (s, block) in nonempty_subsets_in_order(3).iter().zip(point.blocks()) {
        println!("  w^{s} = {block:?}");
    }

    let report = membership(&point, 1e-12);
    println!(
        "\nmembership: {} ({} cross-equation instances, max residual {:.3e})",
        report.is_member, report.instances_checked, report.max_relative_residual
    );

    let back = project(&point)?;
    println!("projection returns the sequence: {}", back == seq);
    println!("face partition: {}", face_of(&point)?);

    // Barycentres classify back to their defining partitions.
    println!("\nbarycentres of all thirteen faces:");
    for partition in isospectral::partition::ordered_partitions(3)? {
        let b = barycentre(&partition, &spectrum)?;
        let classified = face_of(&b)?;
        println!(
            "  {partition}  ->  classified {classified}, dimension {}",
            partition.face_dimension()
        );
        assert_eq!(classified, partition);
    }

    // The interior lives over the trivial partition.
    let interior = lift(&DistributionSequence::single(Distribution::full_support(
        spectrum,
        vec![0.2, 0.3, 0.5],
    )?)?)?;
    println!("\ninterior point classifies as {}", face_of(&interior)?);
    assert_eq!(face_of(&interior)?, OrderedPartition::trivial(3));
    Ok(())
}
