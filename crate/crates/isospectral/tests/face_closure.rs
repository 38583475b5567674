//! Face closures probed by moment curves: for partitions `fine` refining
//! `coarse`, the barycentre of the fine face is a limit of points interior
//! to the coarse face. The approach runs blockwise moment curves whose
//! weights are pre-divided by the squared gap products, so the closed-form
//! limit lands exactly on the constant-weight point of the fine partition.

use isospectral::blowup::{barycentre, face_of, lift, squared_gap_product};
use isospectral::partition::ordered_partitions_vec;
use isospectral::{Distribution, DistributionSequence, SpectrumConfig, Subset};

/// The sequence interior to `coarse` at curve parameter `t` that tends to
/// the constant-weight point of `fine`.
fn approaching_sequence(
    coarse: &isospectral::OrderedPartition,
    fine: &isospectral::OrderedPartition,
    spectrum: &SpectrumConfig,
    t: f64,
) -> DistributionSequence {
    let parts: Vec<Distribution> = coarse
        .blocks()
        .iter()
        .map(|&block| {
            // Sub-blocks of the fine partition inside this coarse block, in
            // fine order.
            let sub_blocks: Vec<Subset> = fine
                .blocks()
                .iter()
                .copied()
                .filter(|b| b.is_subset_of(block))
                .collect();
            let mut weights = vec![0.0; block.cardinality()];
            let mut prefix = Subset::EMPTY;
            let mut factor = 1.0;
            for sub in &sub_blocks {
                for i in sub.iter() {
                    let correction = squared_gap_product(spectrum, prefix, i).unwrap();
                    weights[block.rank_of(i).unwrap()] = factor / correction;
                }
                prefix = prefix.union(*sub);
                factor *= t;
            }
            Distribution::new(spectrum.clone(), block, weights).unwrap()
        })
        .collect();
    DistributionSequence::new(parts).unwrap()
}

#[test]
fn barycentres_of_refinements_are_limits_within_the_face() {
    let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.0]).unwrap();
    let all = ordered_partitions_vec(3).unwrap();
    let mut pairs = 0;
    for coarse in &all {
        for fine in &all {
            if fine == coarse || !fine.refines(coarse) {
                continue;
            }
            pairs += 1;
            // Interior to the coarse face for positive t.
            let nearby = approaching_sequence(coarse, fine, &spectrum, 1e-3);
            assert_eq!(nearby.support_partition(), *coarse);
            let classified = face_of(&lift(&nearby).unwrap()).unwrap();
            assert_eq!(&classified, coarse, "coarse {coarse} fine {fine}");

            // Close to the fine barycentre for small t.
            let tiny = approaching_sequence(coarse, fine, &spectrum, 1e-8);
            let lifted = lift(&tiny).unwrap().affine_normalized();
            let target = barycentre(fine, &spectrum).unwrap();
            let distance = lifted.coordinate_distance(&target);
            assert!(
                distance < 1e-6,
                "coarse {coarse} fine {fine}: distance {distance:.3e}"
            );
        }
    }
    // Strict refinement pairs at d = 3: twelve under the trivial partition
    // plus two under each of the six two-block partitions.
    assert_eq!(pairs, 24);
}
