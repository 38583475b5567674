//! Bitmask index sets over `[d] = {0, .., d-1}` (displayed 1-based).

use std::fmt;

/// Maximum ground-set size supported by the bitmask representation.
pub const MAX_GROUND_SIZE: usize = 24;

/// A subset of `[d]`, stored as a bitmask. Indices are 0-based internally;
/// display and serialization are 1-based to match the usual conventions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(d: usize) -> Subset {
        debug_assert!(d <= MAX_GROUND_SIZE);
        Subset(((1u64 << d) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_mask(mask: u32) -> Subset {
        Subset(mask)
    }

    pub fn from_indices(indices: &[usize]) -> Subset {
        let mut mask = 0u32;
        for &i in indices {
            mask |= 1 << i;
        }
        Subset(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint_from(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let i = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                Some(i)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Position of `i` within the increasing enumeration of the subset.
    pub fn rank_of(self, i: usize) -> Option<usize> {
        if !self.contains(i) {
            return None;
        }
        Some((self.0 & ((1u32 << i) - 1)).count_ones() as usize)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// All nonempty subsets of `[d]` in the canonical serialization order:
/// by cardinality, then lexicographically on the sorted index lists.
pub fn nonempty_subsets_in_order(d: usize) -> Vec<Subset> {
    assert!(d <= MAX_GROUND_SIZE);
    let mut all: Vec<Subset> = (1..(1u64 << d)).map(|m| Subset(m as u32)).collect();
    all.sort_by(|a, b| {
        a.cardinality()
            .cmp(&b.cardinality())
            .then_with(|| a.indices().cmp(&b.indices()))
    });
    all
}
