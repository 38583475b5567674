//! The blow-up of the weight simplex: multi-block homogeneous coordinates
//! indexed by the nonempty subsets of `[d]`, the quadratic cross-equations
//! and sign conditions cutting out the semi-algebraic set, the lift and
//! projection maps between it and sequences of distributions, and the
//! classification of points into faces.

use crate::distribution::{Distribution, DistributionSequence};
use crate::error::{Error, Result};
use crate::partition::{Chain, OrderedPartition};
use crate::spectrum::SpectrumConfig;
use crate::subset::{nonempty_subsets_in_order, Subset};

/// Largest spectrum size for which blow-up coordinates stay tractable.
pub const MAX_BLOWUP_D: usize = 12;

/// Relative threshold below which a block entry counts as zero when
/// classifying a point; measured against the largest entry of its block.
pub const ZERO_ENTRY_RELATIVE_THRESHOLD: f64 = 1e-9;

/// Cross-equation instances above which the membership check subsamples.
const MEMBERSHIP_INSTANCE_BUDGET: usize = 2_000_000;

/// The squared gap product `C_i^S`: the product over `n` in `S` of
/// `(lambda_n - lambda_i)^2`, with the empty product equal to one. Requires
/// `i` outside `S`, where the product is strictly positive.
pub fn squared_gap_product(spectrum: &SpectrumConfig, subset: Subset, i: usize) -> Result<f64> {
    if subset.contains(i) {
        return Err(Error::IndexInsideSubset(i));
    }
    let x = spectrum.lambda(i);
    let mut product = 1.0;
    for n in subset.iter() {
        let gap = spectrum.lambda(n) - x;
        product *= gap * gap;
    }
    Ok(product)
}

/// Total coordinate entries of a blow-up point: `d * 2^(d-1)`.
pub fn total_coordinates(d: usize) -> usize {
    d * (1 << (d - 1))
}

/// Projective dimension of the ambient coordinate space,
/// `(d-2) 2^(d-1) + 1`, equal to the sum of `|S| - 1` over nonempty `S`.
pub fn ambient_projective_dimension(d: usize) -> i64 {
    (d as i64 - 2) * (1i64 << (d - 1)) + 1
}

/// Lookup table from subset masks to positions in the canonical block order.
struct SubsetTable {
    order: Vec<Subset>,
    position: Vec<usize>,
}

impl SubsetTable {
    fn new(d: usize) -> SubsetTable {
        let order = nonempty_subsets_in_order(d);
        let mut position = vec![usize::MAX; 1 << d];
        for (k, s) in order.iter().enumerate() {
            position[s.mask() as usize] = k;
        }
        SubsetTable { order, position }
    }

    fn index_of(&self, s: Subset) -> usize {
        self.position[s.mask() as usize]
    }
}

/// A point of the ambient coordinate space: one homogeneous block `w^S` per
/// nonempty subset `S` of `[d]`, stored in the canonical subset order
/// (cardinality, then lexicographic). Membership in the blow-up itself is a
/// separate check.
#[derive(Debug, Clone)]
pub struct BlowupPoint {
    spectrum: SpectrumConfig,
    blocks: Vec<Vec<f64>>,
}

impl BlowupPoint {
    pub fn new(spectrum: SpectrumConfig, blocks: Vec<Vec<f64>>) -> Result<Self> {
        let d = spectrum.dimension();
        if d > MAX_BLOWUP_D {
            return Err(Error::DimensionOutOfRange {
                what: "blow-up coordinates",
                min: 1,
                max: MAX_BLOWUP_D,
                got: d,
            });
        }
        let order = nonempty_subsets_in_order(d);
        if blocks.len() != order.len() {
            return Err(Error::LengthMismatch {
                what: "coordinate blocks",
                expected: order.len(),
                got: blocks.len(),
            });
        }
        for (s, block) in order.iter().zip(&blocks) {
            if block.len() != s.cardinality() {
                return Err(Error::LengthMismatch {
                    what: "block entries",
                    expected: s.cardinality(),
                    got: block.len(),
                });
            }
            if !block.iter().all(|v| v.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "block {s} has a non-finite entry"
                )));
            }
            if block.iter().all(|&v| v == 0.0) {
                return Err(Error::InconsistentPoint(format!(
                    "block {s} is identically zero"
                )));
            }
        }
        Ok(BlowupPoint { spectrum, blocks })
    }

    pub fn spectrum(&self) -> &SpectrumConfig {
        &self.spectrum
    }

    pub fn dimension(&self) -> usize {
        self.spectrum.dimension()
    }

    /// Blocks in the canonical subset order.
    pub fn blocks(&self) -> &[Vec<f64>] {
        &self.blocks
    }

    /// The block of coordinates indexed by `subset`.
    pub fn block(&self, subset: Subset) -> &[f64] {
        let table = SubsetTable::new(self.dimension());
        &self.blocks[table.index_of(subset)]
    }

    /// The entry `w_i^S`, zero when `i` is outside `S`.
    pub fn value(&self, subset: Subset, i: usize) -> f64 {
        match subset.rank_of(i) {
            Some(k) => self.block(subset)[k],
            None => 0.0,
        }
    }

    /// The affine representative: every block rescaled to nonnegative
    /// entries summing to one. Idempotent up to rounding.
    pub fn affine_normalized(&self) -> BlowupPoint {
        let blocks = self
            .blocks
            .iter()
            .map(|block| {
                let dominant = block
                    .iter()
                    .fold(0.0f64, |m, &v| if v.abs() > m.abs() { v } else { m });
                let sign = if dominant < 0.0 { -1.0 } else { 1.0 };
                let total: f64 = block.iter().map(|v| sign * v).sum();
                block.iter().map(|v| sign * v / total).collect()
            })
            .collect();
        BlowupPoint {
            spectrum: self.spectrum.clone(),
            blocks,
        }
    }

    /// Per-block sup-normalized copy: each block divided by its largest
    /// absolute entry, making residual comparisons scale-free.
    fn sup_normalized_blocks(&self) -> Vec<Vec<f64>> {
        self.blocks
            .iter()
            .map(|block| {
                let m = block.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                block.iter().map(|v| v / m).collect()
            })
            .collect()
    }

    /// Largest absolute coordinate difference, block-aligned.
    pub fn coordinate_distance(&self, other: &BlowupPoint) -> f64 {
        if self.blocks.len() != other.blocks.len() {
            return f64::INFINITY;
        }
        self.blocks
            .iter()
            .zip(&other.blocks)
            .flat_map(|(a, b)| a.iter().zip(b).map(|(x, y)| (x - y).abs()))
            .fold(0.0, f64::max)
    }
}

/// One violated membership condition, for diagnostics.
#[derive(Debug, Clone)]
pub enum MembershipViolation {
    /// Two entries of one block carry strictly opposite signs.
    MixedSigns { subset: Subset, i: usize, j: usize },
    /// A cross-equation instance failed at the reported relative residual.
    CrossEquation {
        superset: Subset,
        subset: Subset,
        i: usize,
        j: usize,
        lhs: f64,
        rhs: f64,
        relative_residual: f64,
    },
}

impl std::fmt::Display for MembershipViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MembershipViolation::MixedSigns { subset, i, j } => write!(
                f,
                "block {subset}: entries at {} and {} have opposite signs",
                i + 1,
                j + 1
            ),
            MembershipViolation::CrossEquation {
                superset,
                subset,
                i,
                j,
                lhs,
                rhs,
                relative_residual,
            } => write!(
                f,
                "cross-equation R={subset} S={superset} i={} j={}: {lhs} vs {rhs} (relative residual {relative_residual:.3e})",
                i + 1,
                j + 1
            ),
        }
    }
}

/// Outcome of the membership test, with the first violation when it fails.
#[derive(Debug, Clone)]
pub struct MembershipReport {
    pub is_member: bool,
    pub max_relative_residual: f64,
    pub instances_checked: usize,
    pub violation: Option<MembershipViolation>,
}

/// Tests whether a point satisfies the defining conditions of the blow-up:
/// the sign conditions exactly, and every cross-equation instance
/// `C_i^{S-R} w_j^R w_i^S = C_j^{S-R} w_i^R w_j^S` (over `R` contained in
/// `S`, `i, j` in `R`) within the given relative tolerance. Residuals are
/// measured against the larger of the two products after each block is
/// sup-normalized. Instances are enumerated exhaustively for `d <= 8` and
/// deterministically subsampled beyond.
pub fn membership(point: &BlowupPoint, tolerance: f64) -> MembershipReport {
    let d = point.dimension();
    let table = SubsetTable::new(d);

    // Sign conditions, checked exactly on the raw blocks.
    for (s, block) in table.order.iter().zip(point.blocks()) {
        let mut pos = None;
        let mut neg = None;
        for (k, &v) in block.iter().enumerate() {
            if v > 0.0 {
                pos = Some(k);
            } else if v < 0.0 {
                neg = Some(k);
            }
        }
        if let (Some(p), Some(n)) = (pos, neg) {
            let indices = s.indices();
            return MembershipReport {
                is_member: false,
                max_relative_residual: f64::INFINITY,
                instances_checked: 0,
                violation: Some(MembershipViolation::MixedSigns {
                    subset: *s,
                    i: indices[p],
                    j: indices[n],
                }),
            };
        }
    }

    let normalized = point.sup_normalized_blocks();
    let value = |s: Subset, i: usize| -> f64 {
        match s.rank_of(i) {
            Some(k) => normalized[table.index_of(s)][k],
            None => 0.0,
        }
    };

    // Pairs (i, j) appear in C(d, 2) * 3^(d-2) instances; thin out with a
    // fixed stride when that exceeds the budget.
    let estimated = if d >= 2 {
        d * (d - 1) / 2 * 3usize.pow(d as u32 - 2)
    } else {
        0
    };
    let stride = estimated / MEMBERSHIP_INSTANCE_BUDGET + 1;

    let mut max_residual = 0.0f64;
    let mut checked = 0usize;
    let mut counter = 0usize;
    let mut violation = None;

    'outer: for &superset in &table.order {
        if superset.cardinality() < 2 {
            continue;
        }
        // Proper nonempty subsets R of S with |R| >= 2; R = S is trivial.
        let elems = superset.indices();
        let n = elems.len();
        for bits in 1..((1u32 << n) - 1) {
            if bits.count_ones() < 2 {
                continue;
            }
            let mut r = Subset::EMPTY;
            for (pos, &e) in elems.iter().enumerate() {
                if bits >> pos & 1 == 1 {
                    r = r.union(Subset::singleton(e));
                }
            }
            let gap_set = superset.difference(r);
            let r_elems = r.indices();
            for a in 0..r_elems.len() {
                for b in a + 1..r_elems.len() {
                    counter += 1;
                    if !counter.is_multiple_of(stride) {
                        continue;
                    }
                    let (i, j) = (r_elems[a], r_elems[b]);
                    let ci = squared_gap_product(&point.spectrum, gap_set, i)
                        .expect("i lies in R, outside S - R");
                    let cj = squared_gap_product(&point.spectrum, gap_set, j)
                        .expect("j lies in R, outside S - R");
                    let lhs = ci * value(r, j) * value(superset, i);
                    let rhs = cj * value(r, i) * value(superset, j);
                    let scale = lhs.abs().max(rhs.abs());
                    let residual = if scale == 0.0 {
                        0.0
                    } else {
                        (lhs - rhs).abs() / scale
                    };
                    checked += 1;
                    if residual > max_residual {
                        max_residual = residual;
                    }
                    if residual > tolerance {
                        violation = Some(MembershipViolation::CrossEquation {
                            superset,
                            subset: r,
                            i,
                            j,
                            lhs,
                            rhs,
                            relative_residual: residual,
                        });
                        break 'outer;
                    }
                }
            }
        }
    }

    MembershipReport {
        is_member: violation.is_none(),
        max_relative_residual: max_residual,
        instances_checked: checked,
        violation,
    }
}

/// Lifts a sequence of distributions to its blow-up coordinates: for each
/// subset `S`, the block carries `C_n^{K_i - S} w_n` on the indices of the
/// part whose chain member `K_i` is the smallest one including `S`, and
/// zeros elsewhere. The lift inverts `project` and lands in the blow-up by
/// construction.
pub fn lift(seq: &DistributionSequence) -> Result<BlowupPoint> {
    let spectrum = seq.spectrum().clone();
    let d = spectrum.dimension();
    if d > MAX_BLOWUP_D {
        return Err(Error::DimensionOutOfRange {
            what: "blow-up coordinates",
            min: 1,
            max: MAX_BLOWUP_D,
            got: d,
        });
    }
    let partition = seq.support_partition();
    let chain = partition.to_chain();
    let order = nonempty_subsets_in_order(d);

    let mut blocks = Vec::with_capacity(order.len());
    for &s in &order {
        let k_i = chain
            .smallest_superset(s)
            .expect("the chain starts at the full set");
        // Chain position determines the contributing part.
        let part_index = chain.sets().iter().position(|&k| k == k_i).unwrap();
        let part = &seq.parts()[part_index];
        let mut block = Vec::with_capacity(s.cardinality());
        for n in s.iter() {
            if part.support().contains(n) {
                let c = squared_gap_product(&spectrum, k_i.difference(s), n)?;
                block.push(c * part.weight_at(n));
            } else {
                block.push(0.0);
            }
        }
        blocks.push(block);
    }
    BlowupPoint::new(spectrum, blocks)
}

/// The face classification of a point: the per-index map onto the largest
/// subset carrying a nonzero coordinate, its range as a chain, and the
/// ordered partition of chain differences.
#[derive(Debug, Clone)]
pub struct SupportChain {
    /// For each index, the unique maximal-cardinality subset with a nonzero
    /// entry at that index.
    pub assignments: Vec<Subset>,
    pub chain: Chain,
    pub partition: OrderedPartition,
}

/// Classifies a point by its nonzero pattern. Entries are read as zero when
/// they fall below [`ZERO_ENTRY_RELATIVE_THRESHOLD`] relative to their
/// block's largest entry. Fails with an inconsistency if two incomparable
/// maximal subsets are found (the point is off the blow-up, or noise has
/// blurred the zero pattern) or if the range is not a chain matching the
/// induced partition.
pub fn support_chain(point: &BlowupPoint) -> Result<SupportChain> {
    let d = point.dimension();
    let table = SubsetTable::new(d);
    let normalized = point.sup_normalized_blocks();

    let mut assignments = Vec::with_capacity(d);
    for n in 0..d {
        let mut best: Option<Subset> = None;
        let mut ambiguous: Option<(Subset, Subset)> = None;
        for (k, &s) in table.order.iter().enumerate() {
            let Some(rank) = s.rank_of(n) else {
                continue;
            };
            if normalized[k][rank].abs() < ZERO_ENTRY_RELATIVE_THRESHOLD {
                continue;
            }
            match best {
                None => best = Some(s),
                Some(b) => {
                    if s.cardinality() > b.cardinality() {
                        best = Some(s);
                        ambiguous = None;
                    } else if s.cardinality() == b.cardinality() {
                        ambiguous = Some((b, s));
                    }
                }
            }
        }
        let Some(best) = best else {
            return Err(Error::InconsistentPoint(format!(
                "index {} has no nonzero coordinate",
                n + 1
            )));
        };
        if let Some((a, b)) = ambiguous {
            if b.cardinality() == best.cardinality() {
                return Err(Error::InconsistentPoint(format!(
                    "index {} is carried by incomparable maximal subsets {a} and {b}",
                    n + 1
                )));
            }
        }
        assignments.push(best);
    }

    // The range must be totally ordered by inclusion.
    let mut range: Vec<Subset> = Vec::new();
    for &s in &assignments {
        if !range.contains(&s) {
            range.push(s);
        }
    }
    range.sort_by_key(|s| std::cmp::Reverse(s.cardinality()));
    for w in range.windows(2) {
        if !w[1].is_subset_of(w[0]) || w[1] == w[0] {
            return Err(Error::InconsistentPoint(format!(
                "maximal subsets {} and {} are incomparable",
                w[0], w[1]
            )));
        }
    }
    let chain = Chain::new(d, range)?;
    let partition = chain.to_partition();

    // Each index must be assigned the smallest chain member containing it.
    for (n, &assigned) in assignments.iter().enumerate() {
        let smallest = chain
            .smallest_superset(Subset::singleton(n))
            .expect("chain starts at the full set");
        if assigned != smallest {
            return Err(Error::InconsistentPoint(format!(
                "index {} is assigned {assigned}, expected {smallest}",
                n + 1
            )));
        }
    }

    Ok(SupportChain {
        assignments,
        chain,
        partition,
    })
}

/// Projects a point of the blow-up back to its sequence of distributions:
/// the parts read off the chain blocks, `(w_n^{K_1})` over the first block
/// through `(w_n^{K_r})` over the last.
pub fn project(point: &BlowupPoint) -> Result<DistributionSequence> {
    let classified = support_chain(point)?;
    let mut parts = Vec::with_capacity(classified.chain.sets().len());
    for (k, &chain_set) in classified.chain.sets().iter().enumerate() {
        let block = classified.partition.blocks()[k];
        let weights: Vec<f64> = block.iter().map(|n| point.value(chain_set, n)).collect();
        parts.push(Distribution::new(point.spectrum.clone(), block, weights)?);
    }
    DistributionSequence::new(parts)
}

/// The partition naming the face whose relative interior holds the point.
pub fn face_of(point: &BlowupPoint) -> Result<OrderedPartition> {
    Ok(support_chain(point)?.partition)
}

/// The barycentre of the face named by a partition: the lift of the
/// constant-weight sequence on that partition, affine-normalized.
pub fn barycentre(partition: &OrderedPartition, spectrum: &SpectrumConfig) -> Result<BlowupPoint> {
    if partition.ground_size() != spectrum.dimension() {
        return Err(Error::LengthMismatch {
            what: "partition ground set",
            expected: spectrum.dimension(),
            got: partition.ground_size(),
        });
    }
    let parts: Vec<Distribution> = partition
        .blocks()
        .iter()
        .map(|&b| Distribution::new(spectrum.clone(), b, vec![1.0; b.cardinality()]))
        .collect::<Result<_>>()?;
    let seq = DistributionSequence::new(parts)?;
    Ok(lift(&seq)?.affine_normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::ordered_partitions;

    fn spectrum(points: &[f64]) -> SpectrumConfig {
        SpectrumConfig::new(points.to_vec()).unwrap()
    }

    fn sequence_for(
        partition: &OrderedPartition,
        spectrum: &SpectrumConfig,
        weights: impl Fn(usize) -> f64,
    ) -> DistributionSequence {
        let parts = partition
            .blocks()
            .iter()
            .map(|&b| {
                Distribution::new(spectrum.clone(), b, b.iter().map(&weights).collect()).unwrap()
            })
            .collect();
        DistributionSequence::new(parts).unwrap()
    }

    #[test]
    fn gap_products() {
        let s = spectrum(&[0.0, 1.0, 3.0]);
        assert_eq!(squared_gap_product(&s, Subset::EMPTY, 0).unwrap(), 1.0);
        assert_eq!(
            squared_gap_product(&s, Subset::singleton(1), 0).unwrap(),
            1.0
        );
        assert_eq!(
            squared_gap_product(&s, Subset::from_indices(&[1, 2]), 0).unwrap(),
            9.0
        );
        assert!(squared_gap_product(&s, Subset::singleton(0), 0).is_err());
    }

    #[test]
    fn coordinate_count_formulas() {
        for d in 2..=12 {
            let by_sum: usize = nonempty_subsets_in_order(d)
                .iter()
                .map(|s| s.cardinality())
                .sum();
            assert_eq!(total_coordinates(d), by_sum);
            let projective: i64 = nonempty_subsets_in_order(d)
                .iter()
                .map(|s| s.cardinality() as i64 - 1)
                .sum();
            assert_eq!(ambient_projective_dimension(d), projective);
        }
    }

    #[test]
    fn lift_of_interior_point_d2() {
        // Full-support constant weights over {0, 1}: every block is (1) or
        // (1, 1) because the gap products are 1 here.
        let s = spectrum(&[0.0, 1.0]);
        let seq =
            DistributionSequence::single(Distribution::full_support(s, vec![1.0, 1.0]).unwrap())
                .unwrap();
        let point = lift(&seq).unwrap();
        assert_eq!(point.block(Subset::singleton(0)), &[1.0]);
        assert_eq!(point.block(Subset::singleton(1)), &[1.0]);
        assert_eq!(point.block(Subset::full(2)), &[1.0, 1.0]);
    }

    #[test]
    fn lift_of_split_point_d2() {
        let s = spectrum(&[0.0, 1.0]);
        let partition = OrderedPartition::discrete(2);
        let seq = sequence_for(&partition, &s, |_| 1.0);
        let point = lift(&seq).unwrap();
        assert_eq!(point.block(Subset::full(2)), &[1.0, 0.0]);
        assert_eq!(point.block(Subset::singleton(0)), &[1.0]);
        assert_eq!(point.block(Subset::singleton(1)), &[1.0]);
        let classified = support_chain(&point).unwrap();
        assert_eq!(classified.partition, partition);
        assert_eq!(classified.assignments[0], Subset::full(2));
        assert_eq!(classified.assignments[1], Subset::singleton(1));
    }

    #[test]
    fn projection_of_interior_point_is_top_block() {
        let s = spectrum(&[0.0, 1.0, 2.0]);
        let dist = Distribution::full_support(s, vec![0.2, 0.3, 0.5]).unwrap();
        let seq = DistributionSequence::single(dist.clone()).unwrap();
        let point = lift(&seq).unwrap();
        let back = project(&point).unwrap();
        assert_eq!(back.part_count(), 1);
        assert_eq!(back.parts()[0], dist);
        assert_eq!(face_of(&point).unwrap(), OrderedPartition::trivial(3));
    }

    #[test]
    fn inverse_pair_exhaustive_small() {
        for d in 1..=4 {
            let s = spectrum(
                &(0..d)
                    .map(|i| i as f64 + 0.25 * (i as f64).sin())
                    .collect::<Vec<_>>(),
            );
            for partition in ordered_partitions(d).unwrap() {
                let seq = sequence_for(&partition, &s, |n| 1.0 + 0.37 * n as f64);
                let point = lift(&seq).unwrap();
                // Exact: projection reads back the same weight values.
                let back = project(&point).unwrap();
                assert_eq!(back, seq);
                // Membership holds tightly by construction.
                let report = membership(&point, 1e-12);
                assert!(report.is_member, "partition {partition}");
                // Lift of the projection returns the same coordinates after
                // affine normalization.
                let again = lift(&back).unwrap();
                let dist = again
                    .affine_normalized()
                    .coordinate_distance(&point.affine_normalized());
                assert!(dist <= 1e-12, "partition {partition}: {dist}");
            }
        }
    }

    #[test]
    fn membership_rejects_mixed_signs() {
        let s = spectrum(&[0.0, 1.0]);
        let point = BlowupPoint::new(s, vec![vec![1.0], vec![1.0], vec![1.0, -1.0]]).unwrap();
        let report = membership(&point, 1e-9);
        assert!(!report.is_member);
        assert!(matches!(
            report.violation,
            Some(MembershipViolation::MixedSigns { .. })
        ));
    }

    #[test]
    fn membership_detects_perturbation() {
        // d = 3 interior point; nudge one entry of a two-element block and a
        // binding cross-equation must break at a millesimal residual.
        let s = spectrum(&[0.0, 1.0, 2.0]);
        let seq = DistributionSequence::single(
            Distribution::full_support(s.clone(), vec![1.0, 2.0, 3.0]).unwrap(),
        )
        .unwrap();
        let clean = lift(&seq).unwrap();
        assert!(membership(&clean, 1e-12).is_member);

        let table_pos = nonempty_subsets_in_order(3)
            .iter()
            .position(|&t| t == Subset::from_indices(&[0, 1]))
            .unwrap();
        let mut blocks = clean.blocks().to_vec();
        blocks[table_pos][0] *= 1.0 + 1e-3;
        let bumped = BlowupPoint::new(s, blocks).unwrap();
        let report = membership(&bumped, 1e-6);
        assert!(!report.is_member);
        assert!(report.max_relative_residual > 1e-4);
        assert!(matches!(
            report.violation,
            Some(MembershipViolation::CrossEquation { .. })
        ));
    }

    #[test]
    fn affine_normalization() {
        let s = spectrum(&[0.0, 1.0]);
        let point = BlowupPoint::new(s, vec![vec![2.0], vec![-3.0], vec![-1.0, -3.0]]).unwrap();
        let n = point.affine_normalized();
        assert_eq!(n.block(Subset::singleton(0)), &[1.0]);
        assert_eq!(n.block(Subset::singleton(1)), &[1.0]);
        assert_eq!(n.block(Subset::full(2)), &[0.25, 0.75]);
        let twice = n.affine_normalized();
        assert!(twice.coordinate_distance(&n) <= 1e-15);
    }

    #[test]
    fn barycentre_of_faces() {
        let s = spectrum(&[0.0, 1.0, 2.0]);
        // Top face: the full block is uniform.
        let top = barycentre(&OrderedPartition::trivial(3), &s).unwrap();
        for v in top.block(Subset::full(3)) {
            assert!((v - 1.0 / 3.0).abs() < 1e-15);
        }
        assert_eq!(face_of(&top).unwrap(), OrderedPartition::trivial(3));

        // Vertices: classification recovers the defining partition.
        for blocks in [
            vec![vec![0], vec![1], vec![2]],
            vec![vec![2], vec![0], vec![1]],
            vec![vec![1], vec![2], vec![0]],
        ] {
            let p = OrderedPartition::from_index_blocks(3, &blocks).unwrap();
            let b = barycentre(&p, &s).unwrap();
            assert_eq!(face_of(&b).unwrap(), p);
        }
    }

    #[test]
    fn barycentre_face_recovery_exhaustive() {
        for d in 1..=4 {
            let s = spectrum(&(0..d).map(|i| 1.5 * i as f64 + 0.5).collect::<Vec<_>>());
            for partition in ordered_partitions(d).unwrap() {
                let b = barycentre(&partition, &s).unwrap();
                assert_eq!(face_of(&b).unwrap(), partition);
                assert!(membership(&b, 1e-12).is_member);
            }
        }
    }

    #[test]
    fn comparable_maximal_subsets_required() {
        // Hand-built point whose indices 1 and 2 are carried by the two
        // incomparable blocks {1,2} and {2,3} at maximal cardinality.
        let s = spectrum(&[0.0, 1.0, 2.0]);
        let order = nonempty_subsets_in_order(3);
        let blocks: Vec<Vec<f64>> = order
            .iter()
            .map(|sub| match sub.indices().as_slice() {
                [0, 1] => vec![1.0, 1.0],
                [1, 2] => vec![1.0, 1.0],
                [0, 1, 2] => vec![0.0, 0.0, 1.0],
                other => vec![1.0; other.len()],
            })
            .collect();
        let point = BlowupPoint::new(s, blocks).unwrap();
        assert!(support_chain(&point).is_err());
    }
}
