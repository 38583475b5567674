//! Property-based invariants over randomized inputs.

use proptest::prelude::*;

use isospectral::blowup::{lift, membership, project};
use isospectral::serialize::{to_json_string, DistributionRecord};
use isospectral::spectral::{eigenvalues, flip_weights, reconstruct, spectral_distribution};
use isospectral::{Distribution, DistributionSequence, OrderedPartition, SpectrumConfig, Subset};

/// Strictly increasing spectra with unit-order gaps, plus positive weights.
fn spectrum_and_weights(max_d: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2..=max_d).prop_flat_map(|d| {
        (
            proptest::collection::vec(0.1f64..0.9, d),
            proptest::collection::vec(0.05f64..1.0, d),
        )
            .prop_map(|(gaps, weights)| {
                let mut points = Vec::with_capacity(gaps.len());
                let mut x = 0.0;
                for g in gaps {
                    x += 0.1 + g;
                    points.push(x);
                }
                (points, weights)
            })
    })
}

/// A random ordered partition of [d], encoded as block labels in first-seen
/// order.
fn partition_strategy(d: usize) -> impl Strategy<Value = OrderedPartition> {
    proptest::collection::vec(0..d, d).prop_map(move |labels| {
        let mut order: Vec<usize> = Vec::new();
        for &l in &labels {
            if !order.contains(&l) {
                order.push(l);
            }
        }
        let blocks: Vec<Vec<usize>> = order
            .iter()
            .map(|&l| (0..d).filter(|&i| labels[i] == l).collect())
            .collect();
        OrderedPartition::from_index_blocks(d, &blocks).unwrap()
    })
}

/// A random sequence of distributions: spectrum, weights, and a partition
/// of the support.
fn sequence_strategy(max_d: usize) -> impl Strategy<Value = DistributionSequence> {
    spectrum_and_weights(max_d).prop_flat_map(|(points, weights)| {
        let d = points.len();
        partition_strategy(d).prop_map(move |partition| {
            let spectrum = SpectrumConfig::new(points.clone()).unwrap();
            let parts: Vec<Distribution> = partition
                .blocks()
                .iter()
                .map(|&b| {
                    let w: Vec<f64> = b.iter().map(|i| weights[i]).collect();
                    Distribution::new(spectrum.clone(), b, w).unwrap()
                })
                .collect();
            DistributionSequence::new(parts).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reconstruction_round_trips((points, weights) in spectrum_and_weights(6)) {
        let spectrum = SpectrumConfig::new(points).unwrap();
        let dist = Distribution::full_support(spectrum, weights).unwrap();
        let matrix = reconstruct(&dist).unwrap();
        prop_assert!(matrix.is_jacobi());
        let back = spectral_distribution(&matrix).unwrap();
        prop_assert!(dist.weight_distance(&back) < 1e-8);
        for (a, b) in dist.support_points().iter().zip(back.support_points().iter()) {
            prop_assert!((a - b).abs() < 1e-8);
        }
        let again = reconstruct(&back).unwrap();
        prop_assert!(matrix.entrywise_distance(&again) < 1e-8);
    }

    #[test]
    fn flipping_weights_twice_returns((points, weights) in spectrum_and_weights(6)) {
        let spectrum = SpectrumConfig::new(points).unwrap();
        let dist = Distribution::full_support(spectrum, weights).unwrap();
        let twice = flip_weights(&flip_weights(&dist).unwrap()).unwrap();
        prop_assert!(dist.normalized_distance(&twice) < 1e-12);
    }

    #[test]
    fn sign_conjugation_is_isospectral(
        (points, weights) in spectrum_and_weights(6),
        sign_bits in 0u32..64,
    ) {
        let spectrum = SpectrumConfig::new(points).unwrap();
        let d = spectrum.dimension();
        let dist = Distribution::full_support(spectrum, weights).unwrap();
        let matrix = reconstruct(&dist).unwrap();
        let signs: Vec<i8> = (0..d)
            .map(|k| if sign_bits >> k & 1 == 1 { -1 } else { 1 })
            .collect();
        let conjugated = matrix.sign_conjugate(&signs).unwrap();
        let a = eigenvalues(&matrix);
        let b = eigenvalues(&conjugated);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn distribution_records_round_trip_bitwise((points, weights) in spectrum_and_weights(8)) {
        let spectrum = SpectrumConfig::new(points).unwrap();
        let dist = Distribution::full_support(spectrum, weights).unwrap();
        let text = to_json_string(&DistributionRecord::from_distribution(&dist)).unwrap();
        let parsed: DistributionRecord = serde_json::from_str(&text).unwrap();
        let back = parsed.to_distribution().unwrap();
        prop_assert_eq!(back.weights(), dist.weights());
        prop_assert_eq!(back.spectrum().lambdas(), dist.spectrum().lambdas());
    }

    #[test]
    fn lift_project_inverse_on_random_partitions(seq in sequence_strategy(6)) {
        let point = lift(&seq).unwrap();
        prop_assert!(membership(&point, 1e-12).is_member);
        let back = project(&point).unwrap();
        prop_assert_eq!(back, seq);
    }

    #[test]
    fn split_blocks_concatenation_identity(
        diag in proptest::collection::vec(-2.0f64..2.0, 1..8),
        cut_bits in 0u32..256,
    ) {
        let d = diag.len();
        let offdiag: Vec<f64> = (0..d.saturating_sub(1))
            .map(|k| if cut_bits >> k & 1 == 1 { 0.0 } else { 0.5 })
            .collect();
        let matrix = isospectral::TridiagonalMatrix::from_diagonals(diag, offdiag).unwrap();
        let blocks = matrix.split_blocks();
        let rejoined = isospectral::TridiagonalMatrix::direct_sum(&blocks).unwrap();
        prop_assert_eq!(rejoined, matrix);
    }
}

#[test]
fn restriction_respects_support_shape() {
    let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.0, 3.0]).unwrap();
    let dist = Distribution::full_support(spectrum, vec![0.1, 0.2, 0.3, 0.4]).unwrap();
    let sub = dist.restrict(Subset::from_indices(&[1, 3])).unwrap();
    assert_eq!(sub.spectrum().lambdas(), &[1.0, 3.0]);
    assert_eq!(sub.weights(), &[0.2, 0.4]);
}
