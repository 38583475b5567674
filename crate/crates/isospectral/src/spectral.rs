//! The correspondence between finitely supported distributions and Jacobi
//! matrices: reconstruction via the three-term recurrence, monic orthogonal
//! polynomials, the inverse spectral map, and the flip transpose on weights.
//!
//! All inner products are finite sums over the support points, so the
//! recursion works entirely on value tables; monic coefficient vectors are
//! materialized only on request.

use crate::distribution::{Distribution, DistributionSequence};
use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::spectrum::SpectrumConfig;
use crate::subset::Subset;

/// Eigenvalue convergence target, relative to the spectral diameter.
const EIGENVALUE_RELATIVE_TOLERANCE: f64 = 1e-13;

/// The monic polynomial sequence `(p_0, .., p_d)` attached to a distribution
/// with `d` support points, carried as a table of values at those points.
///
/// `p_n` is the characteristic polynomial of the leading `n x n` submatrix of
/// the reconstructed Jacobi matrix; `p_d` vanishes on the whole support.
#[derive(Debug, Clone)]
pub struct PolynomialSequence {
    points: Vec<f64>,
    values: Vec<Vec<f64>>,
    recurrence: Vec<f64>,
}

impl PolynomialSequence {
    /// Number of polynomials minus one (the top degree `d`).
    pub fn top_degree(&self) -> usize {
        self.values.len() - 1
    }

    /// The support points the table is evaluated at.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// `p_n` evaluated at the k-th support point.
    pub fn value(&self, n: usize, k: usize) -> f64 {
        self.values[n][k]
    }

    /// Value rows `p_0, .., p_d`.
    pub fn values(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Evaluates `p_n` at an arbitrary point through the recurrence.
    pub fn eval(&self, n: usize, x: f64) -> f64 {
        charpoly_values(&self.recurrence, n, x).0
    }

    /// Monic coefficient vector of `p_n`, constant term first.
    pub fn coefficients(&self, n: usize) -> Vec<f64> {
        let mut prev = vec![0.0; n + 1];
        prev[0] = 1.0; // p_0
        if n == 0 {
            return prev;
        }
        let mut cur = vec![0.0; n + 1];
        cur[0] = -self.recurrence[0];
        cur[1] = 1.0; // p_1 = x - a_1
        for m in 1..n {
            let a = self.recurrence[2 * m];
            let b2 = self.recurrence[2 * m - 1].powi(2);
            let mut next = vec![0.0; n + 1];
            for k in 0..=m {
                next[k + 1] += cur[k];
                next[k] -= a * cur[k];
                next[k] -= b2 * prev[k];
            }
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// Weighted inner product of two value rows: a finite sum over the support.
fn inner(values_a: &[f64], values_b: &[f64], weights: &[f64]) -> f64 {
    values_a
        .iter()
        .zip(values_b)
        .zip(weights)
        .map(|((a, b), w)| a * b * w)
        .sum()
}

/// Runs the recursive construction shared by `reconstruct` and
/// `orthogonal_polynomials`: from normalized weights at distinct points,
/// produce the matrix entries and the polynomial value table.
fn build_recurrence(points: &[f64], weights: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let m = points.len();
    let mut entries = Vec::with_capacity(2 * m - 1);
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(m + 1);

    values.push(vec![1.0; m]);
    let norm_zero = inner(&values[0], &values[0], weights);
    let a1 = inner(&values[0], points, weights) / norm_zero;
    entries.push(a1);
    values.push(points.iter().map(|&x| x - a1).collect());

    let mut norm_prev = norm_zero;
    for n in 1..m {
        let norm_cur = inner(&values[n], &values[n], weights);
        if !(norm_cur > 0.0) || !norm_cur.is_finite() {
            return Err(Error::Numeric(format!(
                "inner product of p_{n} degenerated to {norm_cur}"
            )));
        }
        let off = (norm_cur / norm_prev).sqrt();
        let lambda_moment = points
            .iter()
            .zip(&values[n])
            .zip(weights)
            .map(|((x, p), w)| x * p * p * w)
            .sum::<f64>();
        let diag = lambda_moment / norm_cur;
        entries.push(off);
        entries.push(diag);
        let next: Vec<f64> = (0..m)
            .map(|k| (points[k] - diag) * values[n][k] - off * off * values[n - 1][k])
            .collect();
        values.push(next);
        norm_prev = norm_cur;
    }
    Ok((entries, values))
}

/// The reconstruction map: the unique Jacobi matrix whose spectral
/// distribution is the given one. Invariant under rescaling of the weights;
/// the positive square root is always taken for off-diagonal entries.
pub fn reconstruct(dist: &Distribution) -> Result<TridiagonalMatrix> {
    let normalized = dist.normalized();
    let points = normalized.support_points();
    let (entries, _) = build_recurrence(&points, normalized.weights())?;
    TridiagonalMatrix::from_entries(entries)
}

/// The monic orthogonal polynomial sequence of a distribution, by the same
/// recursion as `reconstruct`.
pub fn orthogonal_polynomials(dist: &Distribution) -> Result<PolynomialSequence> {
    let normalized = dist.normalized();
    let points = normalized.support_points();
    let (entries, values) = build_recurrence(&points, normalized.weights())?;
    Ok(PolynomialSequence {
        points,
        values,
        recurrence: entries,
    })
}

/// Block-diagonal reconstruction of an ordered direct sum.
pub fn direct_sum_reconstruct(seq: &DistributionSequence) -> Result<TridiagonalMatrix> {
    let blocks: Vec<TridiagonalMatrix> =
        seq.parts().iter().map(reconstruct).collect::<Result<_>>()?;
    TridiagonalMatrix::direct_sum(&blocks)
}

/// Values `(p_n(x), p_n'(x))` of the characteristic polynomial of the leading
/// `n x n` submatrix, via the entry-driven three-term recurrence.
fn charpoly_values(entries: &[f64], n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut dp_prev = 0.0;
    if n == 0 {
        return (p_prev, dp_prev);
    }
    let mut p = x - entries[0];
    let mut dp = 1.0;
    for k in 1..n {
        let diag = entries[2 * k];
        let off2 = entries[2 * k - 1].powi(2);
        let p_next = (x - diag) * p - off2 * p_prev;
        let dp_next = p + (x - diag) * dp - off2 * dp_prev;
        p_prev = p;
        dp_prev = dp;
        p = p_next;
        dp = dp_next;
    }
    (p, dp)
}

/// Number of eigenvalues strictly below `x`, from the sign pattern of the
/// minor characteristic polynomial sequence (a Sturm sequence). The values
/// are rescaled on the fly to dodge overflow; rescaling by a positive factor
/// leaves the sign pattern intact.
fn eigenvalues_below(entries: &[f64], x: f64) -> usize {
    let d = entries.len().div_ceil(2);
    let mut p_prev = 1.0f64;
    let mut sign_prev = 1i8;
    let mut p = x - entries[0];
    let mut changes = 0usize;
    let mut sign = if p > 0.0 {
        1
    } else if p < 0.0 {
        -1
    } else {
        -sign_prev
    };
    if sign != sign_prev {
        changes += 1;
    }
    for k in 1..d {
        let diag = entries[2 * k];
        let off2 = entries[2 * k - 1].powi(2);
        let p_next = (x - diag) * p - off2 * p_prev;
        p_prev = p;
        p = p_next;
        let mag = p.abs().max(p_prev.abs());
        if mag > 1e200 {
            p *= 1e-200;
            p_prev *= 1e-200;
        } else if mag > 0.0 && mag < 1e-200 {
            p *= 1e200;
            p_prev *= 1e200;
        }
        sign_prev = sign;
        sign = if p > 0.0 {
            1
        } else if p < 0.0 {
            -1
        } else {
            -sign_prev
        };
        if sign != sign_prev {
            changes += 1;
        }
    }
    // Sign changes count eigenvalues above x.
    d - changes
}

/// All eigenvalues of a symmetric tridiagonal matrix in increasing order:
/// Sturm bisection inside Gershgorin bounds, then Newton polish on the full
/// characteristic polynomial.
pub fn eigenvalues(matrix: &TridiagonalMatrix) -> Vec<f64> {
    let entries = matrix.entries();
    let d = matrix.dimension();
    if d == 1 {
        return vec![entries[0]];
    }
    let diag = matrix.diagonal();
    let off = matrix.offdiagonal();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..d {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < d - 1 { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    let pad = 1e-8 * (hi - lo).max(1.0);
    lo -= pad;
    hi += pad;
    let diameter = hi - lo;
    let width_target = EIGENVALUE_RELATIVE_TOLERANCE * diameter;

    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let mut a = lo;
        let mut b = hi;
        for _ in 0..200 {
            if b - a <= width_target {
                break;
            }
            let mid = 0.5 * (a + b);
            if eigenvalues_below(entries, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        let mut x = 0.5 * (a + b);
        for _ in 0..4 {
            let (p, dp) = charpoly_values(entries, d, x);
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            let next = x - step;
            if next.is_finite() && next > a - width_target && next < b + width_target {
                x = next;
            } else {
                break;
            }
            if step.abs() <= f64::EPSILON * x.abs().max(1.0) {
                break;
            }
        }
        out.push(x);
    }
    out.sort_by(f64::total_cmp);
    out
}

/// The inverse of `reconstruct` on Jacobi matrices: the normalized spectral
/// distribution, with atoms at the eigenvalues. Weights come from the
/// determinant formula `w_n = det(lambda_n I - J11) / p_d'(lambda_n)`, both
/// factors evaluated by three-term recurrences; `J11` is the matrix with the
/// first row and column deleted.
pub fn spectral_distribution(matrix: &TridiagonalMatrix) -> Result<Distribution> {
    let d = matrix.dimension();
    for (k, &a) in matrix.offdiagonal().iter().enumerate() {
        if a <= 0.0 {
            return Err(Error::NotJacobi {
                index: k + 1,
                value: a,
            });
        }
    }
    if d == 1 {
        let spectrum = SpectrumConfig::new(vec![matrix.entries()[0]])?;
        return Distribution::full_support(spectrum, vec![1.0]);
    }

    let lambdas = eigenvalues(matrix);
    for w in lambdas.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::Numeric(format!(
                "eigenvalues {} and {} did not separate",
                w[0], w[1]
            )));
        }
    }

    let trailing = &matrix.entries()[2..];
    let mut weights = Vec::with_capacity(d);
    for &x in &lambdas {
        let (numerator, _) = charpoly_values(trailing, d - 1, x);
        let (_, derivative) = charpoly_values(matrix.entries(), d, x);
        if derivative == 0.0 {
            return Err(Error::Numeric(format!(
                "characteristic derivative vanished at {x}"
            )));
        }
        let w = numerator / derivative;
        if !(w > 0.0) {
            return Err(Error::Numeric(format!(
                "spectral weight {w} at eigenvalue {x} is not positive"
            )));
        }
        weights.push(w);
    }
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let spectrum = SpectrumConfig::new(lambdas)?;
    Distribution::full_support(spectrum, weights)
}

/// The inverse of `direct_sum_reconstruct` on the Jacobi closure: cuts at
/// zero couplings and inverts block by block. Fails if two blocks share an
/// eigenvalue, since the combined spectrum must consist of distinct points.
pub fn spectral_sequence(matrix: &TridiagonalMatrix) -> Result<DistributionSequence> {
    if !matrix.in_jacobi_closure() {
        let (index, value) = matrix
            .offdiagonal()
            .iter()
            .enumerate()
            .find(|(_, &a)| a < 0.0)
            .map(|(k, &a)| (k + 1, a))
            .expect("some entry is negative");
        return Err(Error::NotJacobi { index, value });
    }
    let blocks = matrix.split_blocks();
    let block_dists: Vec<Distribution> = blocks
        .iter()
        .map(spectral_distribution)
        .collect::<Result<_>>()?;

    // Merge the per-block spectra into one increasing list, remembering
    // which part each point belongs to.
    let mut tagged: Vec<(f64, usize, f64)> = Vec::new();
    for (part, dist) in block_dists.iter().enumerate() {
        for (k, &x) in dist.support_points().iter().enumerate() {
            tagged.push((x, part, dist.weights()[k]));
        }
    }
    tagged.sort_by(|a, b| a.0.total_cmp(&b.0));
    let lambdas: Vec<f64> = tagged.iter().map(|t| t.0).collect();
    let spectrum = SpectrumConfig::new(lambdas).map_err(|_| {
        Error::Numeric("blocks share an eigenvalue; the combined spectrum is degenerate".into())
    })?;

    let mut parts = Vec::with_capacity(block_dists.len());
    for part in 0..block_dists.len() {
        let indices: Vec<usize> = tagged
            .iter()
            .enumerate()
            .filter(|(_, t)| t.1 == part)
            .map(|(i, _)| i)
            .collect();
        let weights: Vec<f64> = tagged.iter().filter(|t| t.1 == part).map(|t| t.2).collect();
        parts.push(Distribution::new(
            spectrum.clone(),
            Subset::from_indices(&indices),
            weights,
        )?);
    }
    DistributionSequence::new(parts)
}

/// The flip transpose on spectral weights: for a distribution supported on
/// its whole spectrum, the weights of the flipped matrix are
/// `1 / ((p'(lambda_n))^2 w_n)` up to scale, where `p` is the characteristic
/// polynomial of the spectrum. Satisfies `f_i(w) = f_{2d-i}(flip(w))` and is
/// an involution up to scale.
pub fn flip_weights(dist: &Distribution) -> Result<Distribution> {
    if !dist.has_full_support() {
        return Err(Error::PartialSupport);
    }
    let points = dist.support_points();
    let normalized = dist.normalized();
    let mut flipped = Vec::with_capacity(points.len());
    for (n, &x) in points.iter().enumerate() {
        let gap_product: f64 = points
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != n)
            .map(|(_, &y)| x - y)
            .product();
        flipped.push(1.0 / (gap_product * gap_product * normalized.weights()[n]));
    }
    Distribution::full_support(dist.spectrum().clone(), flipped).map(|d| d.normalized())
}
