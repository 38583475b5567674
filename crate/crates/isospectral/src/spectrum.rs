//! The fixed spectrum: a strictly increasing list of real points.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A `d`-element set of spectrum points, held in strictly increasing order.
///
/// Every distribution, blow-up point, and isospectral matrix in this crate is
/// taken relative to one of these.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumConfig {
    lambdas: Vec<f64>,
}

impl SpectrumConfig {
    /// Builds the spectrum, rejecting non-finite or non-increasing points.
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::DimensionOutOfRange {
                what: "spectrum",
                min: 1,
                max: crate::subset::MAX_GROUND_SIZE,
                got: 0,
            });
        }
        if lambdas.len() > crate::subset::MAX_GROUND_SIZE {
            return Err(Error::DimensionOutOfRange {
                what: "spectrum",
                min: 1,
                max: crate::subset::MAX_GROUND_SIZE,
                got: lambdas.len(),
            });
        }
        for (i, &x) in lambdas.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::InvalidInput(format!("lambda[{i}] is not finite")));
            }
            if i > 0 && x <= lambdas[i - 1] {
                return Err(Error::SpectrumNotIncreasing { index: i, value: x });
            }
        }
        Ok(SpectrumConfig { lambdas })
    }

    pub fn dimension(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// The point at 0-based index `i`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.lambdas[i]
    }

    /// Points selected by `subset`, in increasing order.
    pub fn points_of(&self, subset: Subset) -> Vec<f64> {
        subset.iter().map(|i| self.lambdas[i]).collect()
    }

    /// Largest minus smallest point.
    pub fn diameter(&self) -> f64 {
        self.lambdas[self.lambdas.len() - 1] - self.lambdas[0]
    }

    /// The sub-spectrum on `subset`, re-rooted as its own configuration.
    pub fn restrict(&self, subset: Subset) -> Result<SpectrumConfig> {
        if subset.is_empty() {
            return Err(Error::EmptySupport);
        }
        SpectrumConfig::new(self.points_of(subset))
    }
}
