//! Finitely supported distributions with homogeneous weights, and ordered
//! direct sums of them.

use crate::error::{Error, Result};
use crate::partition::OrderedPartition;
use crate::spectrum::SpectrumConfig;
use crate::subset::Subset;

/// A distribution supported on a subset of the spectrum, with homogeneous
/// weights: all weights carry one strict sign, and scalar multiples denote
/// the same distribution. Equality normalizes first.
#[derive(Debug, Clone)]
pub struct Distribution {
    spectrum: SpectrumConfig,
    support: Subset,
    weights: Vec<f64>,
}

impl Distribution {
    pub fn new(spectrum: SpectrumConfig, support: Subset, weights: Vec<f64>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySupport);
        }
        if !support.is_subset_of(Subset::full(spectrum.dimension())) {
            return Err(Error::InvalidInput(format!(
                "support {support} reaches outside the {}-point spectrum",
                spectrum.dimension()
            )));
        }
        if weights.len() != support.cardinality() {
            return Err(Error::LengthMismatch {
                what: "weights",
                expected: support.cardinality(),
                got: weights.len(),
            });
        }
        let sign = weights[0].signum();
        for (k, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w == 0.0 || w.signum() != sign {
                return Err(Error::MixedSignWeights { index: k, value: w });
            }
        }
        Ok(Distribution {
            spectrum,
            support,
            weights,
        })
    }

    /// A distribution with support on every spectrum point.
    pub fn full_support(spectrum: SpectrumConfig, weights: Vec<f64>) -> Result<Self> {
        let support = Subset::full(spectrum.dimension());
        Distribution::new(spectrum, support, weights)
    }

    /// The point mass at spectrum index `i`.
    pub fn point_mass(spectrum: SpectrumConfig, i: usize) -> Result<Self> {
        Distribution::new(spectrum, Subset::singleton(i), vec![1.0])
    }

    pub fn spectrum(&self) -> &SpectrumConfig {
        &self.spectrum
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    /// Homogeneous weights, aligned with `support().iter()`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn support_size(&self) -> usize {
        self.support.cardinality()
    }

    /// The support points, in increasing order.
    pub fn support_points(&self) -> Vec<f64> {
        self.spectrum.points_of(self.support)
    }

    pub fn has_full_support(&self) -> bool {
        self.support == Subset::full(self.spectrum.dimension())
    }

    /// The positive representative with weights summing to one.
    pub fn normalized(&self) -> Distribution {
        let mut w = self.weights.clone();
        if w[0] < 0.0 {
            for x in &mut w {
                *x = -*x;
            }
        }
        let total: f64 = w.iter().sum();
        for x in &mut w {
            *x /= total;
        }
        Distribution {
            spectrum: self.spectrum.clone(),
            support: self.support,
            weights: w,
        }
    }

    /// The weight at spectrum index `i` (zero off the support).
    pub fn weight_at(&self, i: usize) -> f64 {
        match self.support.rank_of(i) {
            Some(k) => self.weights[k],
            None => 0.0,
        }
    }

    pub fn scaled(&self, c: f64) -> Distribution {
        Distribution {
            spectrum: self.spectrum.clone(),
            support: self.support,
            weights: self.weights.iter().map(|w| c * w).collect(),
        }
    }

    /// Restriction to `subset`, re-rooted on the sub-spectrum so that the
    /// result has full support there.
    pub fn restrict(&self, subset: Subset) -> Result<Distribution> {
        if !subset.is_subset_of(self.support) {
            return Err(Error::InvalidInput(format!(
                "{subset} is not contained in the support {}",
                self.support
            )));
        }
        let sub_spectrum = self.spectrum.restrict(subset)?;
        let weights = subset.iter().map(|i| self.weight_at(i)).collect();
        Distribution::full_support(sub_spectrum, weights)
    }

    /// Largest absolute difference of normalized weights, a metric for
    /// "equal as distributions" up to scale.
    pub fn normalized_distance(&self, other: &Distribution) -> f64 {
        if self.support != other.support || self.spectrum != other.spectrum {
            return f64::INFINITY;
        }
        self.weight_distance(other)
    }

    /// Largest absolute difference of normalized weights alone, for
    /// comparisons across spectra that agree only numerically (for example
    /// a computed eigenvalue list against its source configuration).
    pub fn weight_distance(&self, other: &Distribution) -> f64 {
        if self.support_size() != other.support_size() {
            return f64::INFINITY;
        }
        let a = self.normalized();
        let b = other.normalized();
        a.weights
            .iter()
            .zip(&b.weights)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

impl PartialEq for Distribution {
    fn eq(&self, other: &Self) -> bool {
        self.spectrum == other.spectrum
            && self.support == other.support
            && self.normalized().weights == other.normalized().weights
    }
}

/// An ordered direct sum of distributions over one spectrum whose supports
/// partition the full index set.
#[derive(Debug, Clone, PartialEq)]
pub struct DistributionSequence {
    parts: Vec<Distribution>,
}

impl DistributionSequence {
    pub fn new(parts: Vec<Distribution>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("sequence has no parts".into()));
        }
        let spectrum = parts[0].spectrum().clone();
        let mut covered = Subset::EMPTY;
        for (k, p) in parts.iter().enumerate() {
            if p.spectrum() != &spectrum {
                return Err(Error::InvalidInput(format!(
                    "part {k} uses a different spectrum"
                )));
            }
            if !covered.is_disjoint_from(p.support()) {
                return Err(Error::InvalidPartition(format!(
                    "support of part {k} overlaps an earlier part"
                )));
            }
            covered = covered.union(p.support());
        }
        if covered != Subset::full(spectrum.dimension()) {
            return Err(Error::InvalidPartition(format!(
                "supports cover {covered}, not the whole spectrum"
            )));
        }
        Ok(DistributionSequence { parts })
    }

    /// Wraps a single full-support distribution.
    pub fn single(dist: Distribution) -> Result<Self> {
        DistributionSequence::new(vec![dist])
    }

    pub fn parts(&self) -> &[Distribution] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn spectrum(&self) -> &SpectrumConfig {
        self.parts[0].spectrum()
    }

    /// The ordered partition formed by the supports.
    pub fn support_partition(&self) -> OrderedPartition {
        OrderedPartition::new(
            self.spectrum().dimension(),
            self.parts.iter().map(|p| p.support()).collect(),
        )
        .expect("validated at construction")
    }

    /// Part-wise normalized representative.
    pub fn normalized(&self) -> DistributionSequence {
        DistributionSequence {
            parts: self.parts.iter().map(|p| p.normalized()).collect(),
        }
    }

    /// Largest normalized weight difference across parts; infinite when the
    /// support partitions differ.
    pub fn normalized_distance(&self, other: &DistributionSequence) -> f64 {
        if self.parts.len() != other.parts.len() {
            return f64::INFINITY;
        }
        self.parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.normalized_distance(b))
            .fold(0.0, f64::max)
    }
}
