//! The property suite: every acceptance-grade check as a named, runnable
//! unit with pinned tolerances, exercised by both the `verify` command and
//! the integration tests. All randomness is seeded, so output is identical
//! across runs.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blowup::{
    ambient_projective_dimension, barycentre, face_of, lift, membership, project,
    squared_gap_product, total_coordinates,
};
use crate::combin::{factorial, ordered_bell};
use crate::complex::{
    complex_face_count, euler_characteristic_formula, euler_characteristic_tanh, first_flag,
    petrie_polygon, surface_report, IsospectralComplex,
};
use crate::distribution::{Distribution, DistributionSequence};
use crate::limits::{convergence_report, default_t_grid, fit_exponents, MomentCurve};
use crate::matrix::TridiagonalMatrix;
use crate::partition::{ordered_partitions_vec, OrderedPartition};
use crate::permutahedron::{face_count, faces, PermutahedronFace};
use crate::serialize::{to_json_string, BlowupRecord, DistributionRecord, MatrixRecord};
use crate::spectral::{
    eigenvalues, flip_weights, orthogonal_polynomials, reconstruct, spectral_distribution,
};
use crate::spectrum::SpectrumConfig;
use crate::subset::{nonempty_subsets_in_order, Subset};

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult {
            name,
            passed: false,
            detail,
        }
    }
}

/// Runs a closure that either returns a success detail or an error string.
fn run(name: &'static str, body: impl FnOnce() -> Result<String, String>) -> CheckResult {
    match body() {
        Ok(detail) => CheckResult::pass(name, detail),
        Err(detail) => CheckResult::fail(name, detail),
    }
}

fn random_spectrum(rng: &mut ChaCha8Rng, d: usize, jitter: f64) -> SpectrumConfig {
    let points: Vec<f64> = (0..d)
        .map(|i| (i + 1) as f64 + rng.random_range(-jitter..jitter))
        .collect();
    SpectrumConfig::new(points).expect("jitter below half the unit gap")
}

fn random_weights(rng: &mut ChaCha8Rng, n: usize, low: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(low..1.0)).collect()
}

fn random_full_distribution(rng: &mut ChaCha8Rng, d: usize) -> Distribution {
    let spectrum = random_spectrum(rng, d, 0.2);
    Distribution::full_support(spectrum, random_weights(rng, d, 0.05)).unwrap()
}

/// A random ordered partition of `[d]` with a block count in the given
/// range.
fn random_partition(
    rng: &mut ChaCha8Rng,
    d: usize,
    min_blocks: usize,
    max_blocks: usize,
) -> OrderedPartition {
    loop {
        let mut indices: Vec<usize> = (0..d).collect();
        for i in (1..d).rev() {
            let j = rng.random_range(0..=i);
            indices.swap(i, j);
        }
        let r = rng.random_range(min_blocks..=max_blocks.min(d));
        // r - 1 cut points among d - 1 gaps.
        let mut cuts: Vec<usize> = (1..d).collect();
        for i in (1..cuts.len()).rev() {
            let j = rng.random_range(0..=i);
            cuts.swap(i, j);
        }
        cuts.truncate(r - 1);
        cuts.sort_unstable();
        cuts.push(d);
        let mut blocks = Vec::new();
        let mut start = 0;
        for &cut in &cuts {
            blocks.push(indices[start..cut].to_vec());
            start = cut;
        }
        if let Ok(p) = OrderedPartition::from_index_blocks(d, &blocks) {
            if p.block_count() >= min_blocks {
                return p;
            }
        }
    }
}

fn sequence_with_weights(
    partition: &OrderedPartition,
    spectrum: &SpectrumConfig,
    rng: &mut ChaCha8Rng,
    low: f64,
) -> DistributionSequence {
    let parts = partition
        .blocks()
        .iter()
        .map(|&b| {
            Distribution::new(
                spectrum.clone(),
                b,
                random_weights(rng, b.cardinality(), low),
            )
            .unwrap()
        })
        .collect();
    DistributionSequence::new(parts).unwrap()
}

/// Criterion 1: the splitting example. The limit of
/// `point mass at 0 + t (uniform pair at 1, 2)` equals the split sequence
/// with tail weights `(1, 4)` exactly, and the numeric report decreases to
/// below 1e-3 against the hand-derived limit matrix.
pub fn check_splitting_example() -> CheckResult {
    run("splitting_example", || {
        let started = Instant::now();
        let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.0]).map_err(|e| e.to_string())?;
        let head = Distribution::point_mass(spectrum.clone(), 0).map_err(|e| e.to_string())?;
        let tail = Distribution::new(
            spectrum.clone(),
            Subset::from_indices(&[1, 2]),
            vec![1.0, 1.0],
        )
        .map_err(|e| e.to_string())?;
        let curve = MomentCurve::new(
            DistributionSequence::new(vec![head.clone(), tail]).map_err(|e| e.to_string())?,
        );

        let limit = curve.limit().map_err(|e| e.to_string())?;
        let expected_tail = Distribution::new(
            spectrum.clone(),
            Subset::from_indices(&[1, 2]),
            vec![1.0, 4.0],
        )
        .map_err(|e| e.to_string())?;
        let expected =
            DistributionSequence::new(vec![head, expected_tail]).map_err(|e| e.to_string())?;
        if limit != expected {
            return Err(format!(
                "limit sequence differs from the split form: {:?}",
                limit
            ));
        }

        let grid = [1e-2, 1e-4, 1e-6, 1e-8, 1e-10];
        let report = convergence_report(&curve, &grid).map_err(|e| e.to_string())?;
        let hand_matrix = TridiagonalMatrix::from_entries(vec![0.0, 0.0, 1.8, 0.4, 1.2])
            .map_err(|e| e.to_string())?;
        let matrix_gap = report.limit_matrix.entrywise_distance(&hand_matrix);
        if matrix_gap > 1e-12 {
            return Err(format!("limit matrix off by {matrix_gap:.3e}"));
        }
        for w in report.rows.windows(2) {
            if !(w[1].error < w[0].error) {
                return Err(format!(
                    "E(t) not strictly decreasing: E({:.0e}) = {:.3e}, E({:.0e}) = {:.3e}",
                    w[0].t, w[0].error, w[1].t, w[1].error
                ));
            }
        }
        let final_error = report.rows.last().unwrap().error;
        if !(final_error < 1e-3) {
            return Err(format!("E(1e-10) = {final_error:.3e} >= 1e-3"));
        }
        let elapsed = started.elapsed();
        if elapsed.as_secs_f64() >= 1.0 {
            return Err(format!("took {elapsed:?}, budget 1 s"));
        }
        Ok(format!(
            "limit exact; E strictly decreasing, E(1e-10) = {final_error:.3e}"
        ))
    })
}

/// Criterion 2: 100 random distributions per spectrum size 2..=8 round-trip
/// through reconstruction and back within 1e-8, in both directions.
pub fn check_round_trip() -> CheckResult {
    run("round_trip", || {
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
        let mut worst_inverse = 0.0f64;
        let mut worst_forward = 0.0f64;
        for d in 2..=8 {
            for _ in 0..100 {
                let dist = random_full_distribution(&mut rng, d);
                let matrix = reconstruct(&dist).map_err(|e| e.to_string())?;
                let back = spectral_distribution(&matrix).map_err(|e| e.to_string())?;
                let weight_gap: f64 = dist
                    .normalized()
                    .weights()
                    .iter()
                    .zip(back.weights())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                let point_gap: f64 = dist
                    .support_points()
                    .iter()
                    .zip(back.support_points().iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                worst_inverse = worst_inverse.max(weight_gap.max(point_gap));

                let again = reconstruct(&back).map_err(|e| e.to_string())?;
                worst_forward = worst_forward.max(matrix.entrywise_distance(&again));
            }
        }
        if worst_inverse >= 1e-8 {
            return Err(format!(
                "inverse round trip error {worst_inverse:.3e} >= 1e-8"
            ));
        }
        if worst_forward >= 1e-8 {
            return Err(format!(
                "forward round trip error {worst_forward:.3e} >= 1e-8"
            ));
        }
        let elapsed = started.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("took {elapsed:?}, budget 10 s"));
        }
        Ok(format!(
            "700 distributions: inverse {worst_inverse:.3e}, forward {worst_forward:.3e}"
        ))
    })
}

/// Criterion 3: the flip identity. Flipped weights match the spectral
/// distribution of the flipped reconstruction to 1e-8, and the entry
/// identity `f_i(w) = f_{2d-i}(flip(w))` holds to 1e-9.
pub fn check_flip_identity() -> CheckResult {
    run("flip_identity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        let mut worst_weights = 0.0f64;
        let mut worst_entries = 0.0f64;
        for d in 2..=8 {
            for _ in 0..100 {
                let dist = random_full_distribution(&mut rng, d);
                let flipped = flip_weights(&dist).map_err(|e| e.to_string())?;
                let via_matrix = spectral_distribution(
                    &reconstruct(&dist).map_err(|e| e.to_string())?.flipped(),
                )
                .map_err(|e| e.to_string())?;
                let gap: f64 = flipped
                    .normalized()
                    .weights()
                    .iter()
                    .zip(via_matrix.weights())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max);
                worst_weights = worst_weights.max(gap);

                let entry_gap = reconstruct(&dist)
                    .map_err(|e| e.to_string())?
                    .flipped()
                    .entrywise_distance(&reconstruct(&flipped).map_err(|e| e.to_string())?);
                worst_entries = worst_entries.max(entry_gap);
            }
        }
        if worst_weights >= 1e-8 {
            return Err(format!("weight agreement {worst_weights:.3e} >= 1e-8"));
        }
        if worst_entries >= 1e-9 {
            return Err(format!("entry identity {worst_entries:.3e} >= 1e-9"));
        }
        Ok(format!(
            "700 flips: weights {worst_weights:.3e}, entries {worst_entries:.3e}"
        ))
    })
}

/// Criterion 4: the lift/projection inverse pair, exhaustively over every
/// ordered partition through d = 4 with random weights. Projection after
/// lift is exact; lift after projection returns within 1e-12 after affine
/// normalization; every lift passes membership at 1e-12.
pub fn check_blowup_inverse_pair() -> CheckResult {
    run("blowup_inverse_pair", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
        let mut partitions_seen = 0usize;
        let mut worst_restore = 0.0f64;
        for d in 1..=4 {
            let spectrum = random_spectrum(&mut rng, d, 0.2);
            let all = ordered_partitions_vec(d).map_err(|e| e.to_string())?;
            partitions_seen += all.len();
            for partition in &all {
                for _ in 0..3 {
                    let seq = sequence_with_weights(partition, &spectrum, &mut rng, 0.05);
                    let point = lift(&seq).map_err(|e| e.to_string())?;
                    let back = project(&point).map_err(|e| e.to_string())?;
                    if back != seq {
                        return Err(format!("projection after lift is not exact on {partition}"));
                    }
                    let report = membership(&point, 1e-12);
                    if !report.is_member {
                        return Err(format!(
                            "lift of {partition} fails membership: {}",
                            report.violation.map(|v| v.to_string()).unwrap_or_default()
                        ));
                    }
                    let again = lift(&back).map_err(|e| e.to_string())?;
                    let gap = again
                        .affine_normalized()
                        .coordinate_distance(&point.affine_normalized());
                    worst_restore = worst_restore.max(gap);
                    if gap > 1e-12 {
                        return Err(format!(
                            "lift after projection off by {gap:.3e} on {partition}"
                        ));
                    }
                }
            }
        }
        if partitions_seen != 1 + 3 + 13 + 75 {
            return Err(format!("expected 92 partitions, saw {partitions_seen}"));
        }
        Ok(format!(
            "92 partitions x 3 weight draws: restore error {worst_restore:.3e}"
        ))
    })
}

/// Criterion 5: the lattice isomorphism. Vertex-set containment of
/// permutahedron faces agrees with partition refinement on every pair,
/// exhaustively through d = 4.
pub fn check_lattice_isomorphism() -> CheckResult {
    run("lattice_isomorphism", || {
        let mut pairs = 0usize;
        for d in 1..=4 {
            let all = ordered_partitions_vec(d).map_err(|e| e.to_string())?;
            let faces: Vec<PermutahedronFace> =
                all.iter().cloned().map(PermutahedronFace::new).collect();
            let vertex_sets: Vec<_> = faces.iter().map(PermutahedronFace::vertex_set).collect();
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    pairs += 1;
                    let contained = vertex_sets[i]
                        .iter()
                        .all(|v| vertex_sets[j].binary_search(v).is_ok());
                    if contained != p.refines(q) {
                        return Err(format!(
                            "d={d}: containment({p}, {q}) = {contained}, refinement = {}",
                            p.refines(q)
                        ));
                    }
                }
            }
        }
        Ok(format!("{pairs} partition pairs agree with the face order"))
    })
}

/// Criterion 6: enumerated face counts match the closed forms for both the
/// permutahedron and the glued complex, all dimensions, through d = 6.
pub fn check_face_counts() -> CheckResult {
    run("face_counts", || {
        for d in 1..=6 {
            let enumerated = faces(d).map_err(|e| e.to_string())?;
            for n in 0..d {
                let count = enumerated.iter().filter(|f| f.dimension() == n).count() as u128;
                let formula = face_count(d, n).map_err(|e| e.to_string())?;
                if count != formula {
                    return Err(format!(
                        "permutahedron d={d} n={n}: enumerated {count}, formula {formula}"
                    ));
                }
            }
            let complex = IsospectralComplex::build(d).map_err(|e| e.to_string())?;
            let vector = complex.face_vector();
            for (n, &count) in vector.iter().enumerate() {
                let formula = complex_face_count(d, n).map_err(|e| e.to_string())?;
                if count as u128 != formula {
                    return Err(format!(
                        "complex d={d} n={n}: enumerated {count}, formula {formula}"
                    ));
                }
            }
            let total: u128 = (0..d).map(|n| complex_face_count(d, n).unwrap()).sum();
            if vector.iter().map(|&c| c as u128).sum::<u128>() != total {
                return Err(format!("complex d={d}: total face count mismatch"));
            }
            if vector[0] as u128 != factorial(d) {
                return Err(format!("complex d={d}: vertex count is not d!"));
            }
            if d >= 2 && vector[d - 1] != 1 << (d - 1) {
                return Err(format!("complex d={d}: top face count is not 2^(d-1)"));
            }
            if enumerated.len() as u128 != ordered_bell(d) {
                return Err(format!("permutahedron d={d}: face total mismatch"));
            }
        }
        Ok("face counts match the closed forms through d = 6".to_string())
    })
}

/// Criterion 7: Euler characteristics three ways. Enumeration equals the
/// alternating-sum formula for d = 1..6, and the formula equals the exact
/// tanh series coefficient for d = 1..10, matching the frozen values.
pub fn check_euler_characteristics() -> CheckResult {
    run("euler_characteristics", || {
        let started = Instant::now();
        let frozen: [i128; 10] = [1, 0, -2, 0, 16, 0, -272, 0, 7936, 0];
        for d in 1..=10 {
            let formula = euler_characteristic_formula(d);
            let tanh = euler_characteristic_tanh(d);
            if formula != frozen[d - 1] || tanh != frozen[d - 1] {
                return Err(format!(
                    "d={d}: formula {formula}, tanh {tanh}, expected {}",
                    frozen[d - 1]
                ));
            }
        }
        for d in 1..=6 {
            let complex = IsospectralComplex::build(d).map_err(|e| e.to_string())?;
            let enumerated = complex.euler_characteristic();
            if enumerated != euler_characteristic_formula(d) {
                return Err(format!(
                    "d={d}: enumerated {enumerated} differs from the formula"
                ));
            }
        }
        let elapsed = started.elapsed();
        if elapsed.as_secs_f64() >= 30.0 {
            return Err(format!("took {elapsed:?}, budget 30 s"));
        }
        Ok("chi = (1, 0, -2, 0, 16, 0, -272, 0, 7936, 0) on all routes".to_string())
    })
}

/// Criterion 8: the d = 3 complex is a closed surface with face vector
/// (6, 12, 4), every edge in exactly two hexagons, single-cycle vertex
/// links, connectivity, and Euler characteristic -2.
pub fn check_surface_d3() -> CheckResult {
    run("surface_d3", || {
        let complex = IsospectralComplex::build(3).map_err(|e| e.to_string())?;
        let report = surface_report(&complex);
        if !report.all_passed() {
            return Err(report.failures.join("; "));
        }
        if report.face_vector != vec![6, 12, 4] {
            return Err(format!("face vector {:?}", report.face_vector));
        }
        if report.euler_characteristic != -2 {
            return Err(format!("chi = {}", report.euler_characteristic));
        }
        if report.vertex_degree != Some(4) {
            return Err(format!("vertex degree {:?}", report.vertex_degree));
        }
        Ok("closed surface, face vector (6, 12, 4), chi = -2, genus 2".to_string())
    })
}

/// Criterion 9: the Petrie walk on the d = 3 complex covers all 12 edges.
pub fn check_petrie_polygon() -> CheckResult {
    run("petrie_polygon", || {
        let complex = IsospectralComplex::build(3).map_err(|e| e.to_string())?;
        let start = first_flag(&complex).map_err(|e| e.to_string())?;
        let walk = petrie_polygon(&complex, start).map_err(|e| e.to_string())?;
        if !walk.covers_all_edges {
            return Err(format!("walk covered {} of 12 edges", walk.covered_edges));
        }
        Ok(format!("walk of length {} covers all 12 edges", walk.len()))
    })
}

/// Criterion 10: degeneration entries. For 20 random moment curves the two
/// tracked couplings decrease across the decade grid and fall below 1e-3 at
/// t = 1e-10. Curves are drawn with at most four parts: a fifth level
/// grades the inner products by t^4 = 1e-40 at the last grid point, which
/// sits below the square of the rounding noise, so no double-precision
/// evaluation can resolve it. The matrix-level error E(t) is additionally
/// required to decay for curves of at most three parts, where every graded
/// level stays clear of the noise floor.
pub fn check_degeneration_entries() -> CheckResult {
    run("degeneration_entries", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000a);
        let grid = default_t_grid();
        let mut deep_error_checks = 0usize;
        for trial in 0..20 {
            let d = rng.random_range(2..=5);
            let partition = random_partition(&mut rng, d, 2, 4);
            let spectrum = random_spectrum(&mut rng, d, 0.2);
            let curve =
                MomentCurve::new(sequence_with_weights(&partition, &spectrum, &mut rng, 0.2));
            let report = convergence_report(&curve, &grid).map_err(|e| e.to_string())?;
            let leads: Vec<f64> = report.rows.iter().map(|r| r.lead_entry.unwrap()).collect();
            let trails: Vec<f64> = report.rows.iter().map(|r| r.trail_entry.unwrap()).collect();
            for series in [&leads, &trails] {
                for w in series.windows(2) {
                    if !(w[1] < w[0]) {
                        return Err(format!(
                            "trial {trial} ({partition}): entry series not decreasing: {series:?}"
                        ));
                    }
                }
                let last = *series.last().unwrap();
                if !(last < 1e-3) {
                    return Err(format!(
                        "trial {trial} ({partition}): final entry {last:.3e} >= 1e-3"
                    ));
                }
            }
            if partition.block_count() <= 3 {
                deep_error_checks += 1;
                for w in report.rows.windows(2) {
                    if !(w[1].error < w[0].error) {
                        return Err(format!(
                            "trial {trial} ({partition}): E(t) not decreasing across the grid"
                        ));
                    }
                }
                let final_error = report.rows.last().unwrap().error;
                if !(final_error < 1e-3) {
                    return Err(format!(
                        "trial {trial} ({partition}): E(1e-10) = {final_error:.3e} >= 1e-3"
                    ));
                }
            }
        }
        Ok(format!(
            "20 random curves: tracked couplings decrease below 1e-3; E(t) decays on {deep_error_checks} shallow curves"
        ))
    })
}

/// Orthogonality of the polynomial sequence, the degenerate top norm, and
/// the vanishing of the top polynomial on the support.
pub fn check_orthogonality() -> CheckResult {
    run("mop_orthogonality", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000b);
        for d in 2..=8 {
            for _ in 0..20 {
                let dist = random_full_distribution(&mut rng, d);
                let normalized = dist.normalized();
                let seq = orthogonal_polynomials(&dist).map_err(|e| e.to_string())?;
                let ip = |m: usize, n: usize| -> f64 {
                    seq.values()[m]
                        .iter()
                        .zip(&seq.values()[n])
                        .zip(normalized.weights())
                        .map(|((a, b), w)| a * b * w)
                        .sum()
                };
                for m in 0..d {
                    for n in 0..m {
                        let scale = (ip(m, m) * ip(n, n)).sqrt();
                        if ip(m, n).abs() > 1e-10 * scale {
                            return Err(format!(
                                "d={d}: <p_{m}, p_{n}> = {:.3e} above 1e-10 relative",
                                ip(m, n)
                            ));
                        }
                    }
                }
                let table_scale = seq
                    .values()
                    .iter()
                    .flatten()
                    .fold(0.0f64, |m, v| m.max(v.abs()));
                if ip(d, d).abs() > 1e-10 * table_scale * table_scale {
                    return Err(format!("d={d}: top norm {:.3e} not degenerate", ip(d, d)));
                }
                for k in 0..d {
                    if seq.value(d, k).abs() > 1e-10 * table_scale {
                        return Err(format!(
                            "d={d}: p_d at support point {k} is {:.3e}",
                            seq.value(d, k)
                        ));
                    }
                }
            }
        }
        Ok("orthogonality, degenerate top norm, and root placement hold".to_string())
    })
}

/// The restriction identity: flipping, restricting, and flipping again
/// multiplies each weight by the squared gap product of the complement,
/// checked against the blow-up module's constants.
pub fn check_restriction_identity() -> CheckResult {
    run("restriction_identity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000c);
        for d in 2..=7 {
            for _ in 0..20 {
                let dist = random_full_distribution(&mut rng, d);
                let spectrum = dist.spectrum().clone();
                let keep_count = rng.random_range(1..d);
                let mut indices: Vec<usize> = (0..d).collect();
                for i in (1..d).rev() {
                    let j = rng.random_range(0..=i);
                    indices.swap(i, j);
                }
                indices.truncate(keep_count);
                indices.sort_unstable();
                let keep = Subset::from_indices(&indices);

                let flipped = flip_weights(&dist).map_err(|e| e.to_string())?;
                let restricted = flipped.restrict(keep).map_err(|e| e.to_string())?;
                let double = flip_weights(&restricted).map_err(|e| e.to_string())?;

                let complement = Subset::full(d).difference(keep);
                let normalized = dist.normalized();
                let expected_weights: Vec<f64> = keep
                    .iter()
                    .map(|i| {
                        squared_gap_product(&spectrum, complement, i)
                            .map(|c| c * normalized.weight_at(i))
                    })
                    .collect::<crate::error::Result<_>>()
                    .map_err(|e| e.to_string())?;
                let expected = Distribution::full_support(
                    spectrum.restrict(keep).map_err(|e| e.to_string())?,
                    expected_weights,
                )
                .map_err(|e| e.to_string())?;
                let gap = double.normalized_distance(&expected);
                if gap > 1e-9 {
                    return Err(format!("d={d}, restriction {keep}: mismatch {gap:.3e}"));
                }
            }
        }
        Ok("restriction identity matches the gap-product constants".to_string())
    })
}

/// Sign conjugation preserves eigenvalues.
pub fn check_sign_conjugation() -> CheckResult {
    run("sign_conjugation", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000d);
        for d in 2..=8 {
            for _ in 0..10 {
                let dist = random_full_distribution(&mut rng, d);
                let matrix = reconstruct(&dist).map_err(|e| e.to_string())?;
                let signs: Vec<i8> = (0..d)
                    .map(|_| if rng.random_range(0..2) == 0 { 1 } else { -1 })
                    .collect();
                let conjugated = matrix.sign_conjugate(&signs).map_err(|e| e.to_string())?;
                let a = eigenvalues(&matrix);
                let b = eigenvalues(&conjugated);
                let gap: f64 = a
                    .iter()
                    .zip(&b)
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max);
                if gap > 1e-9 {
                    return Err(format!("d={d}: eigenvalue drift {gap:.3e}"));
                }
            }
        }
        Ok("conjugated spectra agree to 1e-9".to_string())
    })
}

/// The two limit oracles agree: the closed-form limit of a moment curve
/// matches the blow-up coordinates of the curve near zero, compared after
/// affine normalization at t = 1e-8 within 1e-6.
pub fn check_limit_oracle_agreement() -> CheckResult {
    run("limit_oracle_agreement", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000e);
        let mut worst = 0.0f64;
        for d in 2..=5 {
            for _ in 0..8 {
                let partition = random_partition(&mut rng, d, 2, d);
                let spectrum = random_spectrum(&mut rng, d, 0.05);
                let curve =
                    MomentCurve::new(sequence_with_weights(&partition, &spectrum, &mut rng, 0.5));
                let near = curve.eval(1e-8).map_err(|e| e.to_string())?;
                let lifted = lift(&DistributionSequence::single(near).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                let limit_lifted =
                    lift(&curve.limit().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
                let gap = lifted
                    .affine_normalized()
                    .coordinate_distance(&limit_lifted.affine_normalized());
                worst = worst.max(gap);
                if gap > 1e-6 {
                    return Err(format!(
                        "{partition}: oracle disagreement {gap:.3e} at t = 1e-8"
                    ));
                }
            }
        }
        Ok(format!(
            "closed form and lifted curve agree; worst {worst:.3e}"
        ))
    })
}

/// Stable classification: implied exponents of a curve recover its support
/// partition, flipped exponent data reverses the partition, and the fitted
/// adapter recovers exponents from sampled curve data.
pub fn check_stable_classification() -> CheckResult {
    run("stable_classification", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_000f);
        for d in 2..=5 {
            for _ in 0..10 {
                let partition = random_partition(&mut rng, d, 2, d);
                let spectrum = random_spectrum(&mut rng, d, 0.2);
                let curve =
                    MomentCurve::new(sequence_with_weights(&partition, &spectrum, &mut rng, 0.2));
                let implied = curve.implied_exponents();
                if implied.limiting_partition() != partition {
                    return Err(format!(
                        "implied exponents classify {} instead of {partition}",
                        implied.limiting_partition()
                    ));
                }
                let reversed = implied.flipped().limiting_partition();
                let mut blocks = partition.blocks().to_vec();
                blocks.reverse();
                let expected = OrderedPartition::new(d, blocks).map_err(|e| e.to_string())?;
                if reversed != expected {
                    return Err(format!(
                        "flipped exponents classify {reversed} instead of {expected}"
                    ));
                }

                let ts: Vec<f64> = (2..=8).map(|k| 10f64.powi(-k)).collect();
                let samples: Vec<Vec<f64>> = ts
                    .iter()
                    .map(|&t| {
                        curve
                            .eval(t)
                            .map(|dist| (0..d).map(|i| dist.weight_at(i)).collect())
                    })
                    .collect::<crate::error::Result<_>>()
                    .map_err(|e| e.to_string())?;
                let fitted = fit_exponents(&ts, &samples).map_err(|e| e.to_string())?;
                if fitted.limiting_partition() != partition {
                    return Err(format!(
                        "fitted exponents classify {} instead of {partition}",
                        fitted.limiting_partition()
                    ));
                }
            }
        }
        Ok("exponent classification, flip reversal, and the fit adapter agree".to_string())
    })
}

/// The refinement order is a partial order with single-step rank jumps,
/// exhaustively through d = 4.
pub fn check_refinement_order() -> CheckResult {
    run("refinement_order", || {
        for d in 1..=4 {
            let all = ordered_partitions_vec(d).map_err(|e| e.to_string())?;
            for p in &all {
                if !p.refines(p) {
                    return Err(format!("{p} does not refine itself"));
                }
                if p.face_dimension() != d - p.block_count() {
                    return Err(format!("{p}: face dimension bookkeeping broken"));
                }
            }
            for p in &all {
                for q in &all {
                    if p.refines(q) && q.refines(p) && p != q {
                        return Err(format!("{p} and {q} refine each other"));
                    }
                    for s in &all {
                        if p.refines(q) && q.refines(s) && !p.refines(s) {
                            return Err(format!("transitivity fails on {p}, {q}, {s}"));
                        }
                    }
                    if p != q && p.refines(q) {
                        let between = all
                            .iter()
                            .any(|s| s != p && s != q && p.refines(s) && s.refines(q));
                        if !between && p.block_count() != q.block_count() + 1 {
                            return Err(format!("adjacent pair {p} vs {q} skips a rank"));
                        }
                    }
                }
            }
        }
        Ok("partial order and ranked adjacency hold through d = 4".to_string())
    })
}

/// Coordinate bookkeeping: total entries and the ambient projective
/// dimension match their closed forms through d = 12.
pub fn check_coordinate_counts() -> CheckResult {
    run("coordinate_counts", || {
        for d in 2..=12 {
            let order = nonempty_subsets_in_order(d);
            let total: usize = order.iter().map(|s| s.cardinality()).sum();
            if total != total_coordinates(d) {
                return Err(format!("d={d}: coordinate total {total}"));
            }
            let projective: i64 = order.iter().map(|s| s.cardinality() as i64 - 1).sum();
            if projective != ambient_projective_dimension(d) {
                return Err(format!("d={d}: projective dimension {projective}"));
            }
        }
        Ok("coordinate counts match through d = 12".to_string())
    })
}

/// Barycentres land in the faces that name them, and membership holds.
pub fn check_barycentres() -> CheckResult {
    run("barycentres", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
        for d in 1..=4 {
            let spectrum = random_spectrum(&mut rng, d, 0.2);
            for partition in ordered_partitions_vec(d).map_err(|e| e.to_string())? {
                let b = barycentre(&partition, &spectrum).map_err(|e| e.to_string())?;
                let classified = face_of(&b).map_err(|e| e.to_string())?;
                if classified != partition {
                    return Err(format!(
                        "barycentre of {partition} classifies as {classified}"
                    ));
                }
                if !membership(&b, 1e-12).is_member {
                    return Err(format!("barycentre of {partition} fails membership"));
                }
            }
        }
        Ok("barycentres classify back to their partitions through d = 4".to_string())
    })
}

/// Serialization round trips are bit-exact.
pub fn check_serialization() -> CheckResult {
    run("serialization_round_trip", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
        for d in 2..=6 {
            let dist = random_full_distribution(&mut rng, d);
            let record = DistributionRecord::from_distribution(&dist);
            let text = to_json_string(&record).map_err(|e| e.to_string())?;
            let parsed: DistributionRecord =
                serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let back = parsed.to_distribution().map_err(|e| e.to_string())?;
            if back.weights() != dist.weights()
                || back.spectrum().lambdas() != dist.spectrum().lambdas()
            {
                return Err(format!("d={d}: distribution record drifted"));
            }

            let matrix = reconstruct(&dist).map_err(|e| e.to_string())?;
            let mrec = MatrixRecord::from_matrix(&matrix);
            let mtext = to_json_string(&mrec).map_err(|e| e.to_string())?;
            let mparsed: MatrixRecord = serde_json::from_str(&mtext).map_err(|e| e.to_string())?;
            if mparsed.to_matrix().map_err(|e| e.to_string())?.entries() != matrix.entries() {
                return Err(format!("d={d}: matrix record drifted"));
            }
        }
        let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.5]).map_err(|e| e.to_string())?;
        let seq = DistributionSequence::single(
            Distribution::full_support(spectrum, vec![0.25, 0.5, 0.25])
                .map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let point = lift(&seq).map_err(|e| e.to_string())?;
        let brec = BlowupRecord::from_point(&point);
        let btext = to_json_string(&brec).map_err(|e| e.to_string())?;
        let bparsed: BlowupRecord = serde_json::from_str(&btext).map_err(|e| e.to_string())?;
        let bback = bparsed.to_point(1e-9).map_err(|e| e.to_string())?;
        if bback.coordinate_distance(&point) != 0.0 {
            return Err("blow-up record drifted".to_string());
        }
        Ok("records round-trip bit-exactly".to_string())
    })
}

/// Reconstruction homogeneity: power-of-two rescalings are bit-exact and
/// arbitrary rescalings agree to rounding.
pub fn check_homogeneity() -> CheckResult {
    run("homogeneity", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
        for d in 2..=8 {
            for _ in 0..10 {
                let dist = random_full_distribution(&mut rng, d);
                let base = reconstruct(&dist).map_err(|e| e.to_string())?;
                for scale in [2.0, 0.25, -8.0] {
                    let scaled = reconstruct(&dist.scaled(scale)).map_err(|e| e.to_string())?;
                    if scaled.entries() != base.entries() {
                        return Err(format!(
                            "d={d}: power-of-two scale {scale} changed the entries"
                        ));
                    }
                }
                let odd = reconstruct(&dist.scaled(3.7)).map_err(|e| e.to_string())?;
                if base.entrywise_distance(&odd) > 1e-12 {
                    return Err(format!("d={d}: general rescaling drifted"));
                }
            }
        }
        Ok("reconstruction is degree-zero homogeneous".to_string())
    })
}

/// Every check in a fixed order: the ten acceptance criteria first, then
/// the module-level invariants.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        check_splitting_example(),
        check_round_trip(),
        check_flip_identity(),
        check_blowup_inverse_pair(),
        check_lattice_isomorphism(),
        check_face_counts(),
        check_euler_characteristics(),
        check_surface_d3(),
        check_petrie_polygon(),
        check_degeneration_entries(),
        check_orthogonality(),
        check_homogeneity(),
        check_restriction_identity(),
        check_sign_conjugation(),
        check_limit_oracle_agreement(),
        check_stable_classification(),
        check_refinement_order(),
        check_coordinate_counts(),
        check_barycentres(),
        check_serialization(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        for result in run_all() {
            assert!(result.passed, "{}: {}", result.name, result.detail);
        }
    }
}
