//! JSON-shaped records for the core objects, with a writer that renders
//! every float at 17 significant digits so round trips are lossless.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::blowup::{membership, BlowupPoint};
use crate::complex::IsospectralComplex;
use crate::distribution::{Distribution, DistributionSequence};
use crate::error::{Error, Result};
use crate::matrix::TridiagonalMatrix;
use crate::spectrum::SpectrumConfig;
use crate::subset::{nonempty_subsets_in_order, Subset};

/// A distribution as `{lambda, support, weights}`. The support is 1-based;
/// when omitted on input it defaults to the whole spectrum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistributionRecord {
    pub lambda: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<Vec<usize>>,
    pub weights: Vec<f64>,
}

/// One part of a sequence record: 1-based support indices into the shared
/// spectrum, with the matching weights.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartRecord {
    pub support: Vec<usize>,
    pub weights: Vec<f64>,
}

/// An ordered direct sum (also read as a moment curve) over one spectrum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub lambda: Vec<f64>,
    pub parts: Vec<PartRecord>,
}

/// A symmetric tridiagonal matrix as `{diag, offdiag}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

/// One coordinate block of a blow-up point: the 1-based subset and its
/// homogeneous values.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockRecord {
    pub subset: Vec<usize>,
    pub values: Vec<f64>,
}

/// A blow-up point: blocks in the canonical subset order (cardinality, then
/// lexicographic).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlowupRecord {
    pub lambda: Vec<f64>,
    pub blocks: Vec<BlockRecord>,
}

impl DistributionRecord {
    pub fn from_distribution(dist: &Distribution) -> Self {
        DistributionRecord {
            lambda: dist.spectrum().lambdas().to_vec(),
            support: Some(dist.support().iter().map(|i| i + 1).collect()),
            weights: dist.weights().to_vec(),
        }
    }

    pub fn to_distribution(&self) -> Result<Distribution> {
        let spectrum = SpectrumConfig::new(self.lambda.clone())?;
        let d = spectrum.dimension();
        let indices: Vec<usize> = match &self.support {
            Some(raw) => one_based_indices(raw, d)?,
            None => (0..d).collect(),
        };
        if indices.len() != self.weights.len() {
            return Err(Error::LengthMismatch {
                what: "weights",
                expected: indices.len(),
                got: self.weights.len(),
            });
        }
        // Pair indices with weights, then order by index.
        let mut pairs: Vec<(usize, f64)> = indices
            .into_iter()
            .zip(self.weights.iter().copied())
            .collect();
        pairs.sort_by_key(|p| p.0);
        let support = Subset::from_indices(&pairs.iter().map(|p| p.0).collect::<Vec<_>>());
        if support.cardinality() != pairs.len() {
            return Err(Error::InvalidInput("support indices repeat".into()));
        }
        Distribution::new(spectrum, support, pairs.into_iter().map(|p| p.1).collect())
    }
}

impl SequenceRecord {
    pub fn from_sequence(seq: &DistributionSequence) -> Self {
        SequenceRecord {
            lambda: seq.spectrum().lambdas().to_vec(),
            parts: seq
                .parts()
                .iter()
                .map(|p| PartRecord {
                    support: p.support().iter().map(|i| i + 1).collect(),
                    weights: p.weights().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_sequence(&self) -> Result<DistributionSequence> {
        let spectrum = SpectrumConfig::new(self.lambda.clone())?;
        let d = spectrum.dimension();
        let parts = self
            .parts
            .iter()
            .map(|part| {
                let indices = one_based_indices(&part.support, d)?;
                if indices.len() != part.weights.len() {
                    return Err(Error::LengthMismatch {
                        what: "part weights",
                        expected: indices.len(),
                        got: part.weights.len(),
                    });
                }
                let mut pairs: Vec<(usize, f64)> = indices
                    .into_iter()
                    .zip(part.weights.iter().copied())
                    .collect();
                pairs.sort_by_key(|p| p.0);
                let support = Subset::from_indices(&pairs.iter().map(|p| p.0).collect::<Vec<_>>());
                if support.cardinality() != pairs.len() {
                    return Err(Error::InvalidInput("support indices repeat".into()));
                }
                Distribution::new(
                    spectrum.clone(),
                    support,
                    pairs.into_iter().map(|p| p.1).collect(),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        DistributionSequence::new(parts)
    }
}

impl MatrixRecord {
    pub fn from_matrix(matrix: &TridiagonalMatrix) -> Self {
        MatrixRecord {
            diag: matrix.diagonal(),
            offdiag: matrix.offdiagonal(),
        }
    }

    pub fn to_matrix(&self) -> Result<TridiagonalMatrix> {
        TridiagonalMatrix::from_diagonals(self.diag.clone(), self.offdiag.clone())
    }
}

impl BlowupRecord {
    pub fn from_point(point: &BlowupPoint) -> Self {
        let d = point.dimension();
        let blocks = nonempty_subsets_in_order(d)
            .into_iter()
            .zip(point.blocks())
            .map(|(s, values)| BlockRecord {
                subset: s.iter().map(|i| i + 1).collect(),
                values: values.clone(),
            })
            .collect();
        BlowupRecord {
            lambda: point.spectrum().lambdas().to_vec(),
            blocks,
        }
    }

    /// Rebuilds the point and re-validates membership at the given
    /// tolerance: a loaded point must still lie on the blow-up.
    pub fn to_point(&self, tolerance: f64) -> Result<BlowupPoint> {
        let spectrum = SpectrumConfig::new(self.lambda.clone())?;
        let d = spectrum.dimension();
        let order = nonempty_subsets_in_order(d);
        if self.blocks.len() != order.len() {
            return Err(Error::LengthMismatch {
                what: "coordinate blocks",
                expected: order.len(),
                got: self.blocks.len(),
            });
        }
        let mut blocks = vec![Vec::new(); order.len()];
        let mut filled = vec![false; order.len()];
        for record in &self.blocks {
            let subset = Subset::from_indices(&one_based_indices(&record.subset, d)?);
            let position = order
                .iter()
                .position(|&s| s == subset)
                .ok_or_else(|| Error::InvalidInput(format!("unknown subset {subset}")))?;
            if filled[position] {
                return Err(Error::InvalidInput(format!("subset {subset} repeats")));
            }
            filled[position] = true;
            blocks[position] = record.values.clone();
        }
        if !filled.iter().all(|&f| f) {
            return Err(Error::InvalidInput(
                "some subsets are missing from the record".into(),
            ));
        }
        let point = BlowupPoint::new(spectrum, blocks)?;
        let report = membership(&point, tolerance);
        if !report.is_member {
            return Err(Error::InconsistentPoint(format!(
                "loaded point fails membership: {}",
                report
                    .violation
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "unknown violation".into())
            )));
        }
        Ok(point)
    }
}

/// One face of an exported complex: its id, dimension, the 1-based blocks
/// of its partition, and the signs of its canonical representative.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexFaceRecord {
    pub id: usize,
    pub dimension: usize,
    pub partition: Vec<Vec<usize>>,
    pub signs: Vec<i8>,
}

/// A whole complex as a face list plus covering incidences, in a shape
/// digestible by external homology tools.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexExportRecord {
    pub d: usize,
    pub faces: Vec<ComplexFaceRecord>,
    /// `[parent, child]` id pairs with the parent one dimension higher.
    pub incidence: Vec<[usize; 2]>,
}

impl ComplexExportRecord {
    pub fn from_complex(complex: &IsospectralComplex) -> Self {
        let d = complex.spectrum_size();
        let faces = complex
            .faces()
            .iter()
            .enumerate()
            .map(|(id, face)| ComplexFaceRecord {
                id,
                dimension: face.dimension(),
                partition: face
                    .partition
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|i| i + 1).collect())
                    .collect(),
                signs: face.signs.signs(d),
            })
            .collect();
        let incidence = complex
            .covers()
            .iter()
            .map(|&(parent, child)| [parent, child])
            .collect();
        ComplexExportRecord {
            d,
            faces,
            incidence,
        }
    }
}

fn one_based_indices(raw: &[usize], d: usize) -> Result<Vec<usize>> {
    raw.iter()
        .map(|&i| {
            if i == 0 || i > d {
                Err(Error::InvalidInput(format!("index {i} outside 1..={d}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Renders a JSON value with every float at 17 significant digits, which is
/// enough to reproduce any binary64 value exactly. Object keys come out
/// sorted, so identical data always yields identical bytes.
pub fn to_json_17(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

/// Serializes any record through `serde_json` and the 17-digit writer.
pub fn to_json_string<T: Serialize>(record: &T) -> Result<String> {
    let value = serde_json::to_value(record)?;
    Ok(to_json_17(&value))
}

fn write_value(value: &Value, indent: usize, out: &mut String) {
    match value {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                out.push_str(&i.to_string());
            } else if let Some(u) = n.as_u64() {
                out.push_str(&u.to_string());
            } else {
                let x = n.as_f64().expect("JSON numbers are i64, u64, or f64");
                out.push_str(&format_f64_17(x));
            }
        }
        Value::String(s) => {
            out.push_str(&serde_json::to_string(s).expect("strings always serialize"));
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push('[');
            for (k, item) in items.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push('{');
            for (k, (key, item)) in map.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push('\n');
                push_indent(indent + 1, out);
                out.push_str(&serde_json::to_string(key).expect("keys serialize"));
                out.push_str(": ");
                write_value(item, indent + 1, out);
            }
            out.push('\n');
            push_indent(indent, out);
            out.push('}');
        }
    }
}

fn push_indent(indent: usize, out: &mut String) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

/// One float at 17 significant digits in scientific notation.
pub fn format_f64_17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::lift;

    #[test]
    fn distribution_record_round_trip() {
        let spectrum = SpectrumConfig::new(vec![0.1, 0.7, 2.0]).unwrap();
        let dist = Distribution::new(
            spectrum,
            Subset::from_indices(&[0, 2]),
            vec![0.12345678901234568, 3.0_f64.sqrt()],
        )
        .unwrap();
        let record = DistributionRecord::from_distribution(&dist);
        let text = to_json_string(&record).unwrap();
        let parsed: DistributionRecord = serde_json::from_str(&text).unwrap();
        let back = parsed.to_distribution().unwrap();
        assert_eq!(back.weights(), dist.weights());
        assert_eq!(back.support(), dist.support());
        assert_eq!(back.spectrum(), dist.spectrum());
    }

    #[test]
    fn default_support_is_full() {
        let record: DistributionRecord =
            serde_json::from_str(r#"{"lambda":[-1.0,1.0],"weights":[0.5,0.5]}"#).unwrap();
        let dist = record.to_distribution().unwrap();
        assert!(dist.has_full_support());
    }

    #[test]
    fn support_indices_validated() {
        let bad: DistributionRecord =
            serde_json::from_str(r#"{"lambda":[0.0,1.0],"support":[0,1],"weights":[1.0,1.0]}"#)
                .unwrap();
        assert!(bad.to_distribution().is_err());
        let repeated: DistributionRecord =
            serde_json::from_str(r#"{"lambda":[0.0,1.0],"support":[1,1],"weights":[1.0,1.0]}"#)
                .unwrap();
        assert!(repeated.to_distribution().is_err());
    }

    #[test]
    fn seventeen_digit_floats_round_trip_exactly() {
        for &x in &[
            std::f64::consts::PI,
            1.0 / 3.0,
            0.1875f64.sqrt(),
            -2.2250738585072014e-308,
            6.02214076e23,
        ] {
            let text = format_f64_17(x);
            let back: f64 = text.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{text}");
        }
    }

    #[test]
    fn json_output_is_deterministic() {
        let record = MatrixRecord {
            diag: vec![0.0, 1.0],
            offdiag: vec![2.0_f64.sqrt()],
        };
        let a = to_json_string(&record).unwrap();
        let b = to_json_string(&record).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("1.4142135623730951e0"));
    }

    #[test]
    fn complex_export_shape() {
        let complex = IsospectralComplex::build(3).unwrap();
        let record = ComplexExportRecord::from_complex(&complex);
        assert_eq!(record.faces.len(), 22);
        // Four hexagons with six edges each, twelve edges with two vertices.
        assert_eq!(record.incidence.len(), 4 * 6 + 12 * 2);
        // Vertices carry the all-positive representative.
        for face in record.faces.iter().filter(|f| f.dimension == 0) {
            assert_eq!(face.signs, vec![1, 1, 1]);
            assert_eq!(face.partition.len(), 3);
        }
        let text = to_json_string(&record).unwrap();
        let parsed: ComplexExportRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.faces.len(), record.faces.len());
        assert_eq!(parsed.incidence, record.incidence);
    }

    #[test]
    fn blowup_record_round_trip_revalidates() {
        let spectrum = SpectrumConfig::new(vec![0.0, 1.0, 2.5]).unwrap();
        let dist = Distribution::full_support(spectrum, vec![0.2, 0.3, 0.5]).unwrap();
        let seq = DistributionSequence::single(dist).unwrap();
        let point = lift(&seq).unwrap();
        let record = BlowupRecord::from_point(&point);
        let text = to_json_string(&record).unwrap();
        let parsed: BlowupRecord = serde_json::from_str(&text).unwrap();
        let back = parsed.to_point(1e-9).unwrap();
        assert_eq!(back.coordinate_distance(&point), 0.0);

        // Corrupt one entry: the loader must notice.
        let mut broken = record.clone();
        broken.blocks[3].values[0] *= 1.01;
        assert!(broken.to_point(1e-9).is_err());
    }
}
