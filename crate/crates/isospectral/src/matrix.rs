//! Real symmetric tridiagonal matrices in entry-vector form.

use crate::error::{Error, Result};

/// Relative threshold below which an off-diagonal entry is treated as an
/// exact zero when cutting a matrix into irreducible blocks.
pub const BLOCK_CUT_RELATIVE_TOLERANCE: f64 = 1e-12;

/// A `d x d` real symmetric tridiagonal matrix, stored as the entry vector
/// `(a_1, .., a_{2d-1})`: odd positions hold the diagonal, even positions the
/// off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    entries: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn from_entries(entries: Vec<f64>) -> Result<Self> {
        if entries.len().is_multiple_of(2) {
            return Err(Error::EvenEntryCount(entries.len()));
        }
        for (k, &a) in entries.iter().enumerate() {
            if !a.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "entry {} is not finite",
                    k + 1
                )));
            }
        }
        Ok(TridiagonalMatrix { entries })
    }

    pub fn from_diagonals(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::InvalidInput("matrix has no diagonal".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::LengthMismatch {
                what: "off-diagonal",
                expected: diag.len() - 1,
                got: offdiag.len(),
            });
        }
        let mut entries = Vec::with_capacity(2 * diag.len() - 1);
        for k in 0..diag.len() {
            entries.push(diag[k]);
            if k + 1 < diag.len() {
                entries.push(offdiag[k]);
            }
        }
        TridiagonalMatrix::from_entries(entries)
    }

    pub fn dimension(&self) -> usize {
        self.entries.len().div_ceil(2)
    }

    /// The entry vector `(a_1, .., a_{2d-1})`.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `a_n` with the paper's 1-based entry index.
    pub fn entry(&self, n: usize) -> f64 {
        self.entries[n - 1]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        self.entries.iter().step_by(2).copied().collect()
    }

    pub fn offdiagonal(&self) -> Vec<f64> {
        self.entries.iter().skip(1).step_by(2).copied().collect()
    }

    /// Jacobi: every off-diagonal entry strictly positive.
    pub fn is_jacobi(&self) -> bool {
        self.offdiagonal().iter().all(|&a| a > 0.0)
    }

    /// Member of the closure of the Jacobi class: off-diagonals nonnegative.
    pub fn in_jacobi_closure(&self) -> bool {
        self.offdiagonal().iter().all(|&a| a >= 0.0)
    }

    /// Row-sum infinity norm.
    pub fn inf_norm(&self) -> f64 {
        let d = self.dimension();
        let diag = self.diagonal();
        let off = self.offdiagonal();
        (0..d)
            .map(|i| {
                let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < d { off[i].abs() } else { 0.0 };
                diag[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }

    /// Largest absolute entry difference; infinite when sizes differ.
    pub fn entrywise_distance(&self, other: &TridiagonalMatrix) -> f64 {
        if self.entries.len() != other.entries.len() {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Flip transpose: reflection across the anti-diagonal, which reverses
    /// the entry vector. An involution.
    pub fn flipped(&self) -> TridiagonalMatrix {
        let mut entries = self.entries.clone();
        entries.reverse();
        TridiagonalMatrix { entries }
    }

    /// Conjugation by `diag(signs)`: the diagonal is unchanged and the k-th
    /// off-diagonal entry is multiplied by `signs[k] * signs[k+1]`. The
    /// spectrum is preserved.
    pub fn sign_conjugate(&self, signs: &[i8]) -> Result<TridiagonalMatrix> {
        let d = self.dimension();
        if signs.len() != d {
            return Err(Error::LengthMismatch {
                what: "sign vector",
                expected: d,
                got: signs.len(),
            });
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput("signs must be +1 or -1".into()));
        }
        let mut entries = self.entries.clone();
        for k in 0..d - 1 {
            entries[2 * k + 1] *= f64::from(signs[k] * signs[k + 1]);
        }
        Ok(TridiagonalMatrix { entries })
    }

    /// Direct sum: blocks along the diagonal, zero couplings in between.
    pub fn direct_sum(blocks: &[TridiagonalMatrix]) -> Result<TridiagonalMatrix> {
        if blocks.is_empty() {
            return Err(Error::InvalidInput("direct sum of no blocks".into()));
        }
        let mut entries = Vec::new();
        for (k, b) in blocks.iter().enumerate() {
            if k > 0 {
                entries.push(0.0);
            }
            entries.extend_from_slice(&b.entries);
        }
        TridiagonalMatrix::from_entries(entries)
    }

    /// Cuts the matrix at (numerically) zero off-diagonal entries, returning
    /// the irreducible blocks in order. Each block of a member of the Jacobi
    /// closure is Jacobi or 1x1, and the direct sum of the blocks reproduces
    /// the matrix.
    pub fn split_blocks(&self) -> Vec<TridiagonalMatrix> {
        let threshold = BLOCK_CUT_RELATIVE_TOLERANCE * self.inf_norm();
        let d = self.dimension();
        let mut blocks = Vec::new();
        let mut start = 0;
        for k in 0..d {
            let cut = k + 1 == d || self.entries[2 * k + 1].abs() <= threshold;
            if cut {
                let lo = 2 * start;
                let hi = 2 * k;
                blocks.push(TridiagonalMatrix {
                    entries: self.entries[lo..=hi].to_vec(),
                });
                start = k + 1;
            }
        }
        blocks
    }

    /// Dense row-major form, mostly for displays and external checks.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let d = self.dimension();
        let mut m = vec![vec![0.0; d]; d];
        for i in 0..d {
            m[i][i] = self.entries[2 * i];
            if i + 1 < d {
                m[i][i + 1] = self.entries[2 * i + 1];
                m[i + 1][i] = self.entries[2 * i + 1];
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_layout() {
        let t = TridiagonalMatrix::from_entries(vec![1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert_eq!(t.dimension(), 3);
        assert_eq!(t.diagonal(), vec![1.0, 3.0, 5.0]);
        assert_eq!(t.offdiagonal(), vec![2.0, 4.0]);
        assert!(t.is_jacobi());
        assert!(TridiagonalMatrix::from_entries(vec![1.0, 2.0]).is_err());
    }

    #[test]
    fn flip_reverses_and_is_involutive() {
        let t = TridiagonalMatrix::from_entries(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(t.flipped().entries(), &[3.0, 2.0, 1.0]);
        assert_eq!(t.flipped().flipped(), t);
        let pal = TridiagonalMatrix::from_entries(vec![1.0, 2.0, 1.0]).unwrap();
        assert_eq!(pal.flipped(), pal);
    }

    #[test]
    fn sign_conjugation() {
        let t = TridiagonalMatrix::from_entries(vec![0.0, 1.0, 0.0]).unwrap();
        let s = t.sign_conjugate(&[1, -1]).unwrap();
        assert_eq!(s.entries(), &[0.0, -1.0, 0.0]);
        // Identity action and global flip.
        assert_eq!(t.sign_conjugate(&[1, 1]).unwrap(), t);
        assert_eq!(
            t.sign_conjugate(&[1, -1]).unwrap(),
            t.sign_conjugate(&[-1, 1]).unwrap()
        );
        assert!(t.sign_conjugate(&[1]).is_err());
        assert!(t.sign_conjugate(&[1, 0]).is_err());
    }

    #[test]
    fn split_and_rejoin() {
        let t = TridiagonalMatrix::from_entries(vec![0.0, 0.0, 1.8, 0.4, 1.2]).unwrap();
        let blocks = t.split_blocks();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].entries(), &[0.0]);
        assert_eq!(blocks[1].entries(), &[1.8, 0.4, 1.2]);
        assert_eq!(TridiagonalMatrix::direct_sum(&blocks).unwrap(), t);

        let diag = TridiagonalMatrix::from_diagonals(vec![0.0, 1.0], vec![0.0]).unwrap();
        let parts = diag.split_blocks();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].entries(), &[0.0]);
        assert_eq!(parts[1].entries(), &[1.0]);

        let jacobi = TridiagonalMatrix::from_entries(vec![1.0, 0.5, 2.0]).unwrap();
        assert_eq!(jacobi.split_blocks(), vec![jacobi]);
    }

    #[test]
    fn inf_norm_is_max_row_sum() {
        let t = TridiagonalMatrix::from_entries(vec![1.0, -2.0, 3.0, 4.0, -5.0]).unwrap();
        assert_eq!(t.inf_norm(), 9.0);
    }
}
