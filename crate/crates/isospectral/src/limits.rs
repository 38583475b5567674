//! Moment curves of degenerating distributions, the closed-form limit law,
//! stable-sequence classification from exponent data, and a numerical
//! convergence harness that cross-checks the limit against full
//! reconstruction.

use crate::blowup::squared_gap_product;
use crate::distribution::{Distribution, DistributionSequence};
use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::partition::OrderedPartition;
use crate::spectral::{direct_sum_reconstruct, reconstruct};
use crate::subset::Subset;

/// Acceptance threshold on the log-log regression when fitting exponents to
/// sampled weight data.
pub const EXPONENT_FIT_MIN_R_SQUARED: f64 = 0.999;

/// Gap above which two fitted exponents are considered distinct.
const EXPONENT_CLUSTER_GAP: f64 = 1e-6;

/// A one-parameter family `w(t) = part_1 + t part_2 + .. + t^(r-1) part_r`
/// of full-support distributions degenerating as `t` goes to zero. The part
/// supports form an ordered partition of the spectrum indices.
#[derive(Debug, Clone)]
pub struct MomentCurve {
    seq: DistributionSequence,
}

impl MomentCurve {
    pub fn new(seq: DistributionSequence) -> Self {
        MomentCurve { seq }
    }

    pub fn parts(&self) -> &[Distribution] {
        self.seq.parts()
    }

    pub fn sequence(&self) -> &DistributionSequence {
        &self.seq
    }

    pub fn support_partition(&self) -> OrderedPartition {
        self.seq.support_partition()
    }

    /// Evaluates the curve at `0 < t < 1`, producing a full-support
    /// distribution. The assembled weight vector is rescaled to sup-norm one
    /// before use, which is harmless by homogeneity and avoids underflow of
    /// the trailing powers.
    pub fn eval(&self, t: f64) -> Result<Distribution> {
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::ParameterOutOfRange(t));
        }
        let spectrum = self.seq.spectrum().clone();
        let d = spectrum.dimension();
        let mut weights = vec![0.0f64; d];
        let mut factor = 1.0;
        for part in self.seq.parts() {
            for n in part.support().iter() {
                weights[n] = factor * part.weight_at(n);
            }
            factor *= t;
        }
        let sup = weights.iter().fold(0.0f64, |m, w| m.max(w.abs()));
        for w in &mut weights {
            *w /= sup;
        }
        Distribution::full_support(spectrum, weights)
    }

    /// The limit of the curve as `t` tends to zero, in closed form: the
    /// first part unchanged, and each later part reweighted by the squared
    /// characteristic polynomial of the union of all earlier supports,
    /// evaluated at its own support points. Parts are normalized.
    pub fn limit(&self) -> Result<DistributionSequence> {
        let spectrum = self.seq.spectrum().clone();
        let mut prefix = Subset::EMPTY;
        let mut parts = Vec::with_capacity(self.seq.part_count());
        for part in self.seq.parts() {
            let mut weights = Vec::with_capacity(part.support_size());
            for n in part.support().iter() {
                let c = squared_gap_product(&spectrum, prefix, n)?;
                weights.push(c * part.weight_at(n));
            }
            let reweighted =
                Distribution::new(spectrum.clone(), part.support(), weights)?.normalized();
            parts.push(reweighted);
            prefix = prefix.union(part.support());
        }
        DistributionSequence::new(parts)
    }

    /// The exponent data the curve realizes: each index decays like
    /// `t^(part position)`, with the part weights as coefficients.
    pub fn implied_exponents(&self) -> ExponentWeights {
        let d = self.seq.spectrum().dimension();
        let mut coefficients = vec![0.0; d];
        let mut exponents = vec![0.0; d];
        for (j, part) in self.seq.parts().iter().enumerate() {
            let normalized = part.normalized();
            for n in part.support().iter() {
                coefficients[n] = normalized.weight_at(n);
                exponents[n] = j as f64;
            }
        }
        ExponentWeights::new(coefficients, exponents).expect("positive by construction")
    }
}

/// Weight data of the form `w_i(t) = c_i t^(e_i)`: positive coefficients
/// and finite exponents, enough to classify the limiting behaviour of every
/// pairwise ratio.
#[derive(Debug, Clone)]
pub struct ExponentWeights {
    coefficients: Vec<f64>,
    exponents: Vec<f64>,
}

impl ExponentWeights {
    pub fn new(coefficients: Vec<f64>, exponents: Vec<f64>) -> Result<Self> {
        if coefficients.len() != exponents.len() {
            return Err(Error::LengthMismatch {
                what: "exponents",
                expected: coefficients.len(),
                got: exponents.len(),
            });
        }
        if coefficients.is_empty() {
            return Err(Error::EmptySupport);
        }
        for (k, &c) in coefficients.iter().enumerate() {
            if !(c > 0.0) || !c.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "coefficient {k} must be positive and finite, got {c}"
                )));
            }
        }
        if exponents.iter().any(|e| !e.is_finite()) {
            return Err(Error::InvalidInput("exponents must be finite".into()));
        }
        Ok(ExponentWeights {
            coefficients,
            exponents,
        })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn exponents(&self) -> &[f64] {
        &self.exponents
    }

    /// The limiting partition as `t` tends to zero: indices with equal
    /// exponents share a block (their ratio tends to a finite positive
    /// limit), and blocks are ordered by increasing exponent, so dominant
    /// weights come first.
    pub fn limiting_partition(&self) -> OrderedPartition {
        let d = self.coefficients.len();
        let mut levels: Vec<f64> = self.exponents.clone();
        levels.sort_by(f64::total_cmp);
        levels.dedup();
        let blocks: Vec<Subset> = levels
            .iter()
            .map(|&e| {
                Subset::from_indices(
                    &(0..d)
                        .filter(|&i| self.exponents[i] == e)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        OrderedPartition::new(d, blocks).expect("exponent levels partition the indices")
    }

    /// The exponent data of the flipped weights. Flipping inverts each
    /// weight, so exponents negate; a constant shift keeps them nonnegative
    /// without affecting any ratio.
    pub fn flipped(&self) -> ExponentWeights {
        let top = self
            .exponents
            .iter()
            .fold(f64::NEG_INFINITY, |m, &e| m.max(e));
        ExponentWeights {
            coefficients: self.coefficients.iter().map(|c| 1.0 / c).collect(),
            exponents: self.exponents.iter().map(|&e| top - e).collect(),
        }
    }
}

/// Fits `w_i(t) = c_i t^(e_i)` to sampled weight vectors by per-index
/// regression of `log w` on `log t`, refusing to classify when any fit has
/// `R^2` below [`EXPONENT_FIT_MIN_R_SQUARED`]. Fitted exponents within a
/// tight cluster gap are snapped together so the classification sees exact
/// ties. Samples may be homogeneous (commonly rescaled); a common rescaling
/// shifts every exponent equally and leaves the classification unchanged.
pub fn fit_exponents(t_values: &[f64], samples: &[Vec<f64>]) -> Result<ExponentWeights> {
    if t_values.len() != samples.len() {
        return Err(Error::LengthMismatch {
            what: "samples",
            expected: t_values.len(),
            got: samples.len(),
        });
    }
    if t_values.len() < 3 {
        return Err(Error::InvalidInput(
            "need at least three samples to fit exponents".into(),
        ));
    }
    let d = samples[0].len();
    if samples.iter().any(|s| s.len() != d) {
        return Err(Error::InvalidInput("ragged sample rows".into()));
    }
    let xs: Vec<f64> = t_values.iter().map(|&t| t.ln()).collect();
    let x_mean = xs.iter().sum::<f64>() / xs.len() as f64;
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();

    let mut coefficients = Vec::with_capacity(d);
    let mut exponents = Vec::with_capacity(d);
    for i in 0..d {
        let ys: Vec<f64> = samples
            .iter()
            .map(|row| {
                let w = row[i].abs();
                if w > 0.0 {
                    Ok(w.ln())
                } else {
                    Err(Error::InvalidInput(format!(
                        "sample weight {i} vanished; cannot fit an exponent"
                    )))
                }
            })
            .collect::<Result<_>>()?;
        // A bitwise-constant row is a perfect power fit with exponent zero;
        // detected by spread, since rounding inside the mean would otherwise
        // leave a spurious zero-correlation variance.
        let y_min = ys.iter().copied().fold(f64::INFINITY, f64::min);
        let y_max = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if y_max == y_min {
            coefficients.push(y_max.exp());
            exponents.push(0.0);
            continue;
        }
        let y_mean = ys.iter().sum::<f64>() / ys.len() as f64;
        let sxy: f64 = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - x_mean) * (y - y_mean))
            .sum();
        let syy: f64 = ys.iter().map(|y| (y - y_mean).powi(2)).sum();
        let slope = sxy / sxx;
        let intercept = y_mean - slope * x_mean;
        let r_squared = sxy * sxy / (sxx * syy);
        if r_squared < EXPONENT_FIT_MIN_R_SQUARED {
            return Err(Error::Numeric(format!(
                "exponent fit for index {} rejected: R^2 = {r_squared:.6} < {EXPONENT_FIT_MIN_R_SQUARED}",
                i + 1
            )));
        }
        coefficients.push(intercept.exp());
        exponents.push(slope);
    }

    // Snap near-ties so the classifier sees exact equalities.
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| exponents[a].total_cmp(&exponents[b]));
    let mut cluster: Vec<usize> = Vec::new();
    let mut snapped = exponents.clone();
    let flush = |cluster: &[usize], snapped: &mut [f64], exponents: &[f64]| {
        if cluster.len() > 1 {
            let mean = cluster.iter().map(|&i| exponents[i]).sum::<f64>() / cluster.len() as f64;
            for &i in cluster {
                snapped[i] = mean;
            }
        }
    };
    for &i in &order {
        match cluster.last() {
            Some(&prev) if (exponents[i] - exponents[prev]).abs() <= EXPONENT_CLUSTER_GAP => {
                cluster.push(i);
            }
            _ => {
                flush(&cluster, &mut snapped, &exponents);
                cluster = vec![i];
            }
        }
    }
    flush(&cluster, &mut snapped, &exponents);

    ExponentWeights::new(coefficients, snapped)
}

/// One row of the convergence report.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub t: f64,
    /// Entrywise distance between the reconstruction at `t` and the limit
    /// matrix.
    pub error: f64,
    /// Absolute value of the coupling that must vanish after the first
    /// part, when the curve has at least two parts.
    pub lead_entry: Option<f64>,
    /// Absolute value of the coupling that must vanish before the last
    /// part.
    pub trail_entry: Option<f64>,
}

/// The full convergence report of a moment curve against its closed-form
/// limit.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub limit: DistributionSequence,
    pub limit_matrix: TridiagonalMatrix,
    /// 1-based entry index `2 |S_1|` tracked as the leading coupling.
    pub lead_entry_index: Option<usize>,
    /// 1-based entry index `2d - 2 |S_r|` tracked as the trailing coupling.
    pub trail_entry_index: Option<usize>,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    /// (log10 t, log10 error) pairs for external plotting.
    pub fn plot_data(&self) -> Vec<(f64, f64)> {
        self.rows
            .iter()
            .map(|r| (r.t.log10(), r.error.log10()))
            .collect()
    }
}

/// The default decade grid `1e-2, 1e-3, .., 1e-10`, spanning the range over
/// which square-root-rate couplings drop from percent scale to below 1e-5.
pub fn default_t_grid() -> Vec<f64> {
    (2..=10).map(|k| 10f64.powi(-k)).collect()
}

/// Evaluates the curve across a strictly decreasing grid, reconstructing at
/// every point and measuring the distance to the limit matrix, together
/// with the two tracked couplings that the degeneration drives to zero.
pub fn convergence_report(curve: &MomentCurve, t_grid: &[f64]) -> Result<ConvergenceReport> {
    if t_grid.is_empty() {
        return Err(Error::InvalidInput("empty t grid".into()));
    }
    for (k, &t) in t_grid.iter().enumerate() {
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::ParameterOutOfRange(t));
        }
        if k > 0 && t >= t_grid[k - 1] {
            return Err(Error::InvalidInput(
                "t grid must be strictly decreasing".into(),
            ));
        }
    }
    let limit = curve.limit()?;
    let limit_matrix = direct_sum_reconstruct(&limit)?;
    let d = curve.sequence().spectrum().dimension();
    let partition = curve.support_partition();
    let r = partition.block_count();
    let (lead_entry_index, trail_entry_index) = if r >= 2 {
        let first = partition.blocks()[0].cardinality();
        let last = partition.blocks()[r - 1].cardinality();
        (Some(2 * first), Some(2 * d - 2 * last))
    } else {
        (None, None)
    };

    let mut rows = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let dist = curve.eval(t)?;
        let matrix = reconstruct(&dist)?;
        rows.push(ConvergenceRow {
            t,
            error: matrix.entrywise_distance(&limit_matrix),
            lead_entry: lead_entry_index.map(|i| matrix.entry(i).abs()),
            trail_entry: trail_entry_index.map(|i| matrix.entry(i).abs()),
        });
    }
    Ok(ConvergenceReport {
        limit,
        limit_matrix,
        lead_entry_index,
        trail_entry_index,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::SpectrumConfig;

    fn spectrum(points: &[f64]) -> SpectrumConfig {
        SpectrumConfig::new(points.to_vec()).unwrap()
    }

    /// The splitting example: point mass at zero, plus `t` times the uniform
    /// pair at one and two.
    fn splitting_curve() -> MomentCurve {
        let s = spectrum(&[0.0, 1.0, 2.0]);
        let head = Distribution::point_mass(s.clone(), 0).unwrap();
        let tail = Distribution::new(s, Subset::from_indices(&[1, 2]), vec![1.0, 1.0]).unwrap();
        MomentCurve::new(DistributionSequence::new(vec![head, tail]).unwrap())
    }

    #[test]
    fn eval_substitutes_powers() {
        let curve = splitting_curve();
        let at = curve.eval(0.1).unwrap();
        let w = at.normalized();
        let expect = [1.0 / 1.2, 0.1 / 1.2, 0.1 / 1.2];
        for (a, b) in w.weights().iter().zip(expect) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(curve.eval(0.0).is_err());
        assert!(curve.eval(1.0).is_err());
    }

    #[test]
    fn single_part_curve_is_constant() {
        let s = spectrum(&[0.0, 2.0]);
        let dist = Distribution::full_support(s, vec![0.5, 0.5]).unwrap();
        let curve = MomentCurve::new(DistributionSequence::single(dist.clone()).unwrap());
        for &t in &[0.9, 0.5, 1e-6] {
            assert_eq!(curve.eval(t).unwrap(), dist);
        }
        let limit = curve.limit().unwrap();
        assert_eq!(limit.part_count(), 1);
        assert_eq!(limit.parts()[0], dist);
    }

    #[test]
    fn splitting_example_limit() {
        let curve = splitting_curve();
        let limit = curve.limit().unwrap();
        assert_eq!(limit.part_count(), 2);
        let s = spectrum(&[0.0, 1.0, 2.0]);
        let expected_tail =
            Distribution::new(s, Subset::from_indices(&[1, 2]), vec![1.0, 4.0]).unwrap();
        assert_eq!(limit.parts()[1], expected_tail);
    }

    #[test]
    fn two_singletons_limit_is_projectively_trivial() {
        let s = spectrum(&[0.0, 1.0]);
        let a = Distribution::point_mass(s.clone(), 0).unwrap();
        let b = Distribution::point_mass(s, 1).unwrap();
        let curve =
            MomentCurve::new(DistributionSequence::new(vec![a.clone(), b.clone()]).unwrap());
        let limit = curve.limit().unwrap();
        assert_eq!(limit.parts()[0], a);
        assert_eq!(limit.parts()[1], b);
    }

    #[test]
    fn limiting_partition_from_exponents() {
        let ew = ExponentWeights::new(vec![1.0, 1.0], vec![0.0, 1.0]).unwrap();
        assert_eq!(ew.limiting_partition(), OrderedPartition::discrete(2));
        let ew = ExponentWeights::new(vec![2.0, 3.0], vec![0.0, 0.0]).unwrap();
        assert_eq!(ew.limiting_partition(), OrderedPartition::trivial(2));
        let ew = ExponentWeights::new(vec![1.0, 1.0, 1.0], vec![0.0, 2.0, 2.0]).unwrap();
        assert_eq!(
            ew.limiting_partition(),
            OrderedPartition::from_index_blocks(3, &[vec![0], vec![1, 2]]).unwrap()
        );
    }

    #[test]
    fn flipping_exponents_reverses_the_partition() {
        let ew = ExponentWeights::new(vec![1.0, 2.0, 3.0, 4.0], vec![0.0, 2.0, 2.0, 5.0]).unwrap();
        let forward = ew.limiting_partition();
        let reversed = ew.flipped().limiting_partition();
        let mut blocks = forward.blocks().to_vec();
        blocks.reverse();
        assert_eq!(reversed, OrderedPartition::new(4, blocks).unwrap());
    }

    #[test]
    fn implied_exponents_classify_back_to_the_support_partition() {
        let curve = splitting_curve();
        assert_eq!(
            curve.implied_exponents().limiting_partition(),
            curve.support_partition()
        );
    }

    #[test]
    fn exponent_fit_recovers_clean_powers() {
        let ts: Vec<f64> = (1..=8).map(|k| 10f64.powi(-k)).collect();
        let samples: Vec<Vec<f64>> = ts
            .iter()
            .map(|&t| vec![2.0, 0.7 * t, 0.3 * t, 5.0 * t * t])
            .collect();
        let fit = fit_exponents(&ts, &samples).unwrap();
        assert_eq!(
            fit.limiting_partition(),
            OrderedPartition::from_index_blocks(4, &[vec![0], vec![1, 2], vec![3]]).unwrap()
        );
    }

    #[test]
    fn exponent_fit_refuses_non_power_data() {
        let ts: Vec<f64> = (1..=8).map(|k| 10f64.powi(-k)).collect();
        // Second column decays like 1/log, nothing like a power law.
        let samples: Vec<Vec<f64>> = ts.iter().map(|&t| vec![1.0, 1.0 / (-t.ln())]).collect();
        assert!(matches!(
            fit_exponents(&ts, &samples),
            Err(Error::Numeric(_))
        ));
    }

    #[test]
    fn report_on_splitting_example() {
        let curve = splitting_curve();
        let grid: Vec<f64> = vec![1e-2, 1e-4, 1e-6, 1e-8, 1e-10];
        let report = convergence_report(&curve, &grid).unwrap();
        let expected = TridiagonalMatrix::from_entries(vec![0.0, 0.0, 1.8, 0.4, 1.2]).unwrap();
        assert!(report.limit_matrix.entrywise_distance(&expected) < 1e-12);
        for w in report.rows.windows(2) {
            assert!(w[1].error < w[0].error, "{} !< {}", w[1].error, w[0].error);
        }
        assert!(report.rows.last().unwrap().error < 1e-3);
        assert_eq!(report.lead_entry_index, Some(2));
        assert_eq!(report.trail_entry_index, Some(2));
    }

    #[test]
    fn report_validates_grid() {
        let curve = splitting_curve();
        assert!(convergence_report(&curve, &[]).is_err());
        assert!(convergence_report(&curve, &[0.5, 0.5]).is_err());
        assert!(convergence_report(&curve, &[0.1, 0.2]).is_err());
        assert!(convergence_report(&curve, &[1.5]).is_err());
    }

    #[test]
    fn single_part_report_is_flat_noise() {
        let s = spectrum(&[0.0, 1.0, 3.0]);
        let dist = Distribution::full_support(s, vec![0.2, 0.5, 0.3]).unwrap();
        let curve = MomentCurve::new(DistributionSequence::single(dist).unwrap());
        let report = convergence_report(&curve, &default_t_grid()).unwrap();
        assert!(report.lead_entry_index.is_none());
        for row in &report.rows {
            assert!(row.error < 1e-12);
        }
    }

    #[test]
    fn rho_image_of_curve_converges_to_rho_of_limit() {
        // The two oracles for the limit agree: closed form on one side,
        // coordinate-wise convergence of lifted curve points on the other.
        use crate::blowup::lift;
        let curve = splitting_curve();
        let at = curve.eval(1e-8).unwrap();
        let lifted = lift(&DistributionSequence::single(at).unwrap()).unwrap();
        let limit_lifted = lift(&curve.limit().unwrap()).unwrap();
        let distance = lifted
            .affine_normalized()
            .coordinate_distance(&limit_lifted.affine_normalized());
        assert!(distance < 1e-6, "{distance}");
    }
}
