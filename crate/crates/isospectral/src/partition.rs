//! Ordered partitions of `[d]`, their refinement order, and the
//! correspondence with strictly decreasing chains of subsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Largest `d` accepted by the exhaustive partition enumerator.
pub const MAX_ENUMERATION_D: usize = 10;

/// A sequence of disjoint nonempty index blocks covering `[d]`.
///
/// The number of blocks is written `r`; the face of the blow-up (equivalently
/// of the permutahedron) named by the partition has dimension `d - r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedPartition {
    d: usize,
    blocks: Vec<Subset>,
}

impl OrderedPartition {
    pub fn new(d: usize, blocks: Vec<Subset>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidPartition("no blocks".into()));
        }
        let mut seen = Subset::EMPTY;
        for (k, &b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {k} is empty")));
            }
            if !seen.is_disjoint_from(b) {
                return Err(Error::InvalidPartition(format!(
                    "block {k} overlaps an earlier block"
                )));
            }
            seen = seen.union(b);
        }
        if seen != Subset::full(d) {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {seen}, not all of [{d}]"
            )));
        }
        Ok(OrderedPartition { d, blocks })
    }

    /// The one-block partition `([d])`.
    pub fn trivial(d: usize) -> Self {
        OrderedPartition {
            d,
            blocks: vec![Subset::full(d)],
        }
    }

    /// The partition `({1}, .., {d})` of singletons in index order.
    pub fn discrete(d: usize) -> Self {
        OrderedPartition {
            d,
            blocks: (0..d).map(Subset::singleton).collect(),
        }
    }

    /// Builds from 0-based index lists, one per block.
    pub fn from_index_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        OrderedPartition::new(d, blocks.iter().map(|b| Subset::from_indices(b)).collect())
    }

    pub fn ground_size(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Dimension of the named face, `d - r`.
    pub fn face_dimension(&self) -> usize {
        self.d - self.blocks.len()
    }

    /// The block containing index `i`.
    pub fn block_of(&self, i: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(i))
            .expect("partition covers [d]")
    }

    /// True when `self` refines `other`: `self` is a concatenation of
    /// ordered partitions of `other`'s blocks, in block order.
    pub fn refines(&self, other: &OrderedPartition) -> bool {
        if self.d != other.d {
            return false;
        }
        let mut fine = self.blocks.iter();
        for &coarse in &other.blocks {
            let mut covered = Subset::EMPTY;
            while covered != coarse {
                match fine.next() {
                    Some(&b) if b.is_subset_of(coarse) && b.is_disjoint_from(covered) => {
                        covered = covered.union(b);
                    }
                    _ => return false,
                }
            }
        }
        fine.next().is_none()
    }

    /// The chain `K_n = S_n ∪ S_{n+1} ∪ .. ∪ S_r` of suffix unions.
    pub fn to_chain(&self) -> Chain {
        let mut sets = Vec::with_capacity(self.blocks.len());
        let mut suffix = Subset::EMPTY;
        for &b in self.blocks.iter().rev() {
            suffix = suffix.union(b);
            sets.push(suffix);
        }
        sets.reverse();
        Chain { d: self.d, sets }
    }

    /// All partitions covered by `self` in the refinement order: each is
    /// obtained by splitting exactly one block into an ordered pair.
    pub fn adjacent_refinements(&self) -> Vec<OrderedPartition> {
        let mut out = Vec::new();
        for (k, &b) in self.blocks.iter().enumerate() {
            let elems = b.indices();
            let n = elems.len();
            if n < 2 {
                continue;
            }
            // Proper nonempty sub-subsets of the block, as the first half.
            for bits in 1..((1u32 << n) - 1) {
                let mut first = Subset::EMPTY;
                for (pos, &e) in elems.iter().enumerate() {
                    if bits >> pos & 1 == 1 {
                        first = first.union(Subset::singleton(e));
                    }
                }
                let second = b.difference(first);
                let mut blocks = Vec::with_capacity(self.blocks.len() + 1);
                blocks.extend_from_slice(&self.blocks[..k]);
                blocks.push(first);
                blocks.push(second);
                blocks.extend_from_slice(&self.blocks[k + 1..]);
                out.push(OrderedPartition { d: self.d, blocks });
            }
        }
        out
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// A strictly decreasing chain `[d] = K_1 ⊃ .. ⊃ K_r ≠ ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    d: usize,
    sets: Vec<Subset>,
}

impl Chain {
    pub fn new(d: usize, sets: Vec<Subset>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::InvalidChain("no sets".into()));
        }
        if sets[0] != Subset::full(d) {
            return Err(Error::InvalidChain(format!(
                "chain must start at the full set, starts at {}",
                sets[0]
            )));
        }
        for w in sets.windows(2) {
            if !(w[1].is_subset_of(w[0]) && w[1] != w[0]) {
                return Err(Error::InvalidChain(format!(
                    "{} does not strictly include {}",
                    w[0], w[1]
                )));
            }
        }
        if sets[sets.len() - 1].is_empty() {
            return Err(Error::InvalidChain("last set is empty".into()));
        }
        Ok(Chain { d, sets })
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn ground_size(&self) -> usize {
        self.d
    }

    /// The partition `(K_1 - K_2, .., K_{r-1} - K_r, K_r)` of set differences.
    pub fn to_partition(&self) -> OrderedPartition {
        let mut blocks = Vec::with_capacity(self.sets.len());
        for k in 0..self.sets.len() {
            let next = self.sets.get(k + 1).copied().unwrap_or(Subset::EMPTY);
            blocks.push(self.sets[k].difference(next));
        }
        OrderedPartition { d: self.d, blocks }
    }

    /// Smallest chain member including `s`, if any.
    pub fn smallest_superset(&self, s: Subset) -> Option<Subset> {
        self.sets
            .iter()
            .rev()
            .find(|&&k| s.is_subset_of(k))
            .copied()
    }
}

/// Lazily enumerates every ordered partition of `[d]` exactly once, in a
/// deterministic order. The count is the ordered Bell number, which grows
/// fast; `d` is capped to keep full traversals tractable.
pub fn ordered_partitions(d: usize) -> Result<impl Iterator<Item = OrderedPartition>> {
    if d == 0 || d > MAX_ENUMERATION_D {
        return Err(Error::DimensionOutOfRange {
            what: "ordered partition enumeration",
            min: 1,
            max: MAX_ENUMERATION_D,
            got: d,
        });
    }
    Ok(PartitionIter {
        d,
        stack: vec![(Subset::full(d), 0)],
        blocks: Vec::new(),
        done: false,
    })
}

/// Collects `ordered_partitions(d)` into a vector.
pub fn ordered_partitions_vec(d: usize) -> Result<Vec<OrderedPartition>> {
    Ok(ordered_partitions(d)?.collect())
}

struct PartitionIter {
    d: usize,
    /// (remaining indices, last sub-mask tried for the next block).
    stack: Vec<(Subset, u32)>,
    blocks: Vec<Subset>,
    done: bool,
}

impl PartitionIter {
    /// Next nonempty sub-mask of `remaining` after `prev`, in increasing
    /// order of the mask restricted to remaining's bit positions.
    fn next_submask(remaining: Subset, prev: u32) -> Option<u32> {
        let elems = remaining.indices();
        let n = elems.len();
        // Compress prev to a rank-mask, increment, expand back.
        let mut compressed = 0u32;
        for (pos, &e) in elems.iter().enumerate() {
            if prev >> e & 1 == 1 {
                compressed |= 1 << pos;
            }
        }
        compressed += 1;
        if compressed >= 1u32 << n {
            return None;
        }
        let mut expanded = 0u32;
        for (pos, &e) in elems.iter().enumerate() {
            if compressed >> pos & 1 == 1 {
                expanded |= 1 << e;
            }
        }
        Some(expanded)
    }
}

impl Iterator for PartitionIter {
    type Item = OrderedPartition;

    fn next(&mut self) -> Option<OrderedPartition> {
        if self.done {
            return None;
        }
        loop {
            let Some(&(remaining, last)) = self.stack.last() else {
                self.done = true;
                return None;
            };
            match Self::next_submask(remaining, last) {
                Some(mask) => {
                    self.stack.last_mut().unwrap().1 = mask;
                    let block = Subset::from_mask(mask);
                    let rest = remaining.difference(block);
                    self.blocks.push(block);
                    if rest.is_empty() {
                        let item = OrderedPartition {
                            d: self.d,
                            blocks: self.blocks.clone(),
                        };
                        self.blocks.pop();
                        return Some(item);
                    }
                    self.stack.push((rest, 0));
                }
                None => {
                    self.stack.pop();
                    self.blocks.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::ordered_bell;

    #[test]
    fn counts_match_ordered_bell_numbers() {
        for d in 1..=6 {
            let n = ordered_partitions(d).unwrap().count() as u128;
            assert_eq!(n, ordered_bell(d), "d = {d}");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(ordered_partitions(1).unwrap().count(), 1);
        assert_eq!(ordered_partitions(2).unwrap().count(), 3);
        assert_eq!(ordered_partitions(3).unwrap().count(), 13);
        assert_eq!(ordered_partitions(4).unwrap().count(), 75);
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        for d in 1..=5 {
            let all = ordered_partitions_vec(d).unwrap();
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(ordered_partitions(0).is_err());
        assert!(ordered_partitions(MAX_ENUMERATION_D + 1).is_err());
    }

    #[test]
    fn refinement_examples() {
        let p12 = OrderedPartition::from_index_blocks(2, &[vec![0, 1]]).unwrap();
        let p1_2 = OrderedPartition::from_index_blocks(2, &[vec![0], vec![1]]).unwrap();
        let p2_1 = OrderedPartition::from_index_blocks(2, &[vec![1], vec![0]]).unwrap();
        assert!(p12.refines(&p12));
        assert!(p1_2.refines(&p12));
        assert!(p2_1.refines(&p12));
        assert!(!p1_2.refines(&p2_1));
        assert!(!p2_1.refines(&p1_2));
        assert!(!p12.refines(&p1_2));
    }

    #[test]
    fn refinement_is_a_partial_order_exhaustively() {
        for d in 1..=4 {
            let all = ordered_partitions_vec(d).unwrap();
            for p in &all {
                assert!(p.refines(p));
            }
            for p in &all {
                for q in &all {
                    if p.refines(q) && q.refines(p) {
                        assert_eq!(p, q);
                    }
                    for s in &all {
                        if p.refines(q) && q.refines(s) {
                            assert!(p.refines(s));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn chain_partition_round_trip() {
        let p = OrderedPartition::from_index_blocks(2, &[vec![0], vec![1]]).unwrap();
        let c = p.to_chain();
        assert_eq!(c.sets(), &[Subset::full(2), Subset::singleton(1)]);
        assert_eq!(c.to_partition(), p);

        for d in 1..=5 {
            for p in ordered_partitions(d).unwrap() {
                assert_eq!(p.to_chain().to_partition(), p);
            }
        }
    }

    #[test]
    fn adjacent_refinements_split_one_block() {
        for d in 2..=4 {
            for p in ordered_partitions(d).unwrap() {
                for q in p.adjacent_refinements() {
                    assert!(q.refines(&p));
                    assert_eq!(q.block_count(), p.block_count() + 1);
                }
            }
        }
    }

    #[test]
    fn adjacency_in_the_order_means_one_block_difference() {
        // If p strictly refines q with nothing in between, block counts
        // differ by exactly one.
        for d in 2..=4 {
            let all = ordered_partitions_vec(d).unwrap();
            for p in &all {
                for q in &all {
                    if p == q || !p.refines(q) {
                        continue;
                    }
                    let strictly_between = all
                        .iter()
                        .any(|s| s != p && s != q && p.refines(s) && s.refines(q));
                    if !strictly_between {
                        assert_eq!(p.block_count(), q.block_count() + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn chain_validation() {
        assert!(Chain::new(2, vec![Subset::full(2), Subset::singleton(0)]).is_ok());
        assert!(Chain::new(2, vec![Subset::singleton(0)]).is_err());
        assert!(Chain::new(2, vec![Subset::full(2), Subset::full(2)]).is_err());
    }
}
