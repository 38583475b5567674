//! Command-line front end: JSON-shaped input and output for the library
//! operations, a face/Euler table printer, surface diagnostics with OFF
//! export, and the property suite runner.
//!
//! Exit codes: 0 success, 2 bad input, 3 numeric failure, 4 property-suite
//! failure.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::blowup::{face_of, lift, membership};
use crate::complex::{
    complex_face_count, euler_characteristic_formula, euler_characteristic_tanh, first_flag,
    off_document, petrie_polygon, surface_report, IsospectralComplex, MAX_COMPLEX_D,
};
use crate::error::Error;
use crate::limits::{convergence_report, default_t_grid, MomentCurve};
use crate::permutahedron::face_count;
use crate::serialize::{
    format_f64_17, to_json_string, BlowupRecord, ComplexExportRecord, DistributionRecord,
    MatrixRecord, SequenceRecord,
};
use crate::spectral::{reconstruct, spectral_sequence};
use crate::verify;

const EXIT_OK: i32 = 0;
const EXIT_BAD_INPUT: i32 = 2;
const EXIT_NUMERIC: i32 = 3;
const EXIT_SUITE_FAILURE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "isospectral",
    version,
    about = "Spectral distributions, Jacobi matrices, blow-up coordinates, and permutahedral complexes over isospectral sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output style: aligned tables or machine-readable JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Write the main output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Tolerance override for membership checking.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reconstruct the Jacobi matrix of a distribution file.
    Reconstruct {
        /// Input file, or `-` for standard input.
        input: Option<PathBuf>,
    },
    /// Invert a tridiagonal matrix file to its sequence of distributions.
    Spectrum { input: Option<PathBuf> },
    /// Compute the closed-form limit of a moment-curve file, with a numeric
    /// convergence report.
    Limit {
        input: Option<PathBuf>,
        /// Comma-separated strictly decreasing parameters in (0, 1).
        #[arg(long, value_name = "LIST")]
        t_grid: Option<String>,
        /// Write (log10 t, log10 E) pairs to a plot-data file.
        #[arg(long, value_name = "PATH")]
        plot_data: Option<PathBuf>,
    },
    /// Lift a sequence file to blow-up coordinates and check membership.
    Blowup { input: Option<PathBuf> },
    /// Face-count table of the permutahedron and the glued complex.
    Faces {
        d: usize,
        /// Write the full face list and incidence pairs of the glued
        /// complex (d <= 6) to a file, for external homology tools.
        #[arg(long, value_name = "PATH")]
        export: Option<PathBuf>,
    },
    /// Euler characteristic table with the exact tanh cross-check.
    Euler {
        /// A maximum (`6` means 1..=6) or an inclusive range like `2..8`.
        range: String,
    },
    /// Closed-surface diagnostics for the three-point complex, with the
    /// Petrie walk and optional OFF export.
    Surface {
        /// Write an OFF file of the genus-two surface.
        #[arg(long, value_name = "PATH")]
        off: Option<PathBuf>,
    },
    /// Run the full property suite; nonzero exit when any check fails.
    Verify,
}

/// Parses arguments from the process environment and runs the command,
/// returning the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes, anything else is a
            // bad invocation.
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_BAD_INPUT
            } else {
                EXIT_NUMERIC
            }
        }
    }
}

fn execute(cli: Cli) -> crate::Result<i32> {
    if let Some(tol) = cli.tol {
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(Error::InvalidInput(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
    }
    let membership_tol = cli.tol.unwrap_or(1e-12);

    match &cli.command {
        Command::Reconstruct { input } => {
            let record: DistributionRecord = read_record(input.as_deref())?;
            let dist = record.to_distribution()?;
            let matrix = reconstruct(&dist)?;
            let out = MatrixRecord::from_matrix(&matrix);
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = format!(
                        "{} x {} Jacobi matrix\n",
                        matrix.dimension(),
                        matrix.dimension()
                    );
                    text.push_str(&format!("diag:    {}\n", join_floats(&out.diag)));
                    text.push_str(&format!("offdiag: {}\n", join_floats(&out.offdiag)));
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Spectrum { input } => {
            let record: MatrixRecord = read_record(input.as_deref())?;
            let matrix = record.to_matrix()?;
            let seq = spectral_sequence(&matrix)?;
            let out = SequenceRecord::from_sequence(&seq);
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = format!(
                        "spectral sequence with {} part(s) over spectrum {}\n",
                        seq.part_count(),
                        join_floats(seq.spectrum().lambdas())
                    );
                    for (k, part) in seq.parts().iter().enumerate() {
                        text.push_str(&format!(
                            "part {}: points {} weights {}\n",
                            k + 1,
                            join_floats(&part.support_points()),
                            join_floats(part.normalized().weights())
                        ));
                    }
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Limit {
            input,
            t_grid,
            plot_data,
        } => {
            let record: SequenceRecord = read_record(input.as_deref())?;
            let curve = MomentCurve::new(record.to_sequence()?);
            let grid = match t_grid {
                Some(list) => parse_grid(list)?,
                None => default_t_grid(),
            };
            let report = convergence_report(&curve, &grid)?;
            if let Some(path) = plot_data {
                let mut text = String::new();
                for (x, y) in report.plot_data() {
                    text.push_str(&format!("{} {}\n", format_f64_17(x), format_f64_17(y)));
                }
                fs::write(path, text)?;
            }
            let out = LimitOutput {
                limit: SequenceRecord::from_sequence(&report.limit),
                limit_matrix: MatrixRecord::from_matrix(&report.limit_matrix),
                lead_entry_index: report.lead_entry_index,
                trail_entry_index: report.trail_entry_index,
                rows: report
                    .rows
                    .iter()
                    .map(|r| LimitRow {
                        t: r.t,
                        error: r.error,
                        lead_entry: r.lead_entry,
                        trail_entry: r.trail_entry,
                    })
                    .collect(),
            };
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = String::from("limit sequence:\n");
                    for (k, part) in report.limit.parts().iter().enumerate() {
                        text.push_str(&format!(
                            "  part {}: points {} weights {}\n",
                            k + 1,
                            join_floats(&part.support_points()),
                            join_floats(part.normalized().weights())
                        ));
                    }
                    text.push_str(&format!(
                        "limit matrix diag:    {}\n",
                        join_floats(&report.limit_matrix.diagonal())
                    ));
                    text.push_str(&format!(
                        "limit matrix offdiag: {}\n",
                        join_floats(&report.limit_matrix.offdiagonal())
                    ));
                    text.push_str(&format!(
                        "{:>12} {:>14} {:>14} {:>14}\n",
                        "t", "E(t)", "lead", "trail"
                    ));
                    for row in &report.rows {
                        text.push_str(&format!(
                            "{:>12.3e} {:>14.6e} {:>14} {:>14}\n",
                            row.t,
                            row.error,
                            row.lead_entry
                                .map(|v| format!("{v:.6e}"))
                                .unwrap_or_else(|| "-".into()),
                            row.trail_entry
                                .map(|v| format!("{v:.6e}"))
                                .unwrap_or_else(|| "-".into()),
                        ));
                    }
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Blowup { input } => {
            let record: SequenceRecord = read_record(input.as_deref())?;
            let seq = record.to_sequence()?;
            let point = lift(&seq)?;
            let report = membership(&point, membership_tol);
            let partition = face_of(&point)?;
            let out = BlowupOutput {
                point: BlowupRecord::from_point(&point),
                member: report.is_member,
                max_relative_residual: report.max_relative_residual,
                instances_checked: report.instances_checked,
                violation: report.violation.map(|v| v.to_string()),
                face: partition
                    .blocks()
                    .iter()
                    .map(|b| b.iter().map(|i| i + 1).collect())
                    .collect(),
            };
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = format!(
                        "blow-up point over spectrum {}\n",
                        join_floats(seq.spectrum().lambdas())
                    );
                    text.push_str(&format!("face partition: {partition}\n"));
                    text.push_str(&format!(
                        "membership at {membership_tol:.1e}: {} ({} instances, max residual {:.3e})\n",
                        if out.member { "yes" } else { "no" },
                        out.instances_checked,
                        out.max_relative_residual
                    ));
                    for (s, values) in
                        crate::subset::nonempty_subsets_in_order(seq.spectrum().dimension())
                            .iter()
                            .zip(point.blocks())
                    {
                        text.push_str(&format!("  {s}: {}\n", join_floats(values)));
                    }
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Faces { d, export } => {
            if let Some(path) = export {
                let complex = IsospectralComplex::build(*d)?;
                let record = ComplexExportRecord::from_complex(&complex);
                fs::write(path, to_json_string(&record)?)?;
            }
            let rows: Vec<FaceRow> = (0..*d)
                .map(|n| {
                    Ok(FaceRow {
                        n,
                        permutahedron: u64::try_from(face_count(*d, n)?)
                            .map_err(|_| Error::InvalidInput("face count exceeds u64".into()))?,
                        complex: u64::try_from(complex_face_count(*d, n)?)
                            .map_err(|_| Error::InvalidInput("face count exceeds u64".into()))?,
                    })
                })
                .collect::<crate::Result<_>>()?;
            let out = FacesTable { d: *d, rows };
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text =
                        format!("{:>4} {:>16} {:>16}\n", "n", "permutahedron", "complex");
                    for row in &out.rows {
                        text.push_str(&format!(
                            "{:>4} {:>16} {:>16}\n",
                            row.n, row.permutahedron, row.complex
                        ));
                    }
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Euler { range } => {
            let (lo, hi) = parse_range(range)?;
            let rows: Vec<EulerRow> = (lo..=hi)
                .map(|d| {
                    let enumerated = if d <= MAX_COMPLEX_D {
                        Some(IsospectralComplex::build(d)?.euler_characteristic() as i64)
                    } else {
                        None
                    };
                    Ok(EulerRow {
                        d,
                        chi: euler_characteristic_formula(d) as i64,
                        chi_tanh: euler_characteristic_tanh(d) as i64,
                        chi_enumerated: enumerated,
                    })
                })
                .collect::<crate::Result<_>>()?;
            let out = EulerTable { rows };
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = format!(
                        "{:>4} {:>12} {:>12} {:>12}\n",
                        "d", "chi", "tanh", "enumerated"
                    );
                    for row in &out.rows {
                        text.push_str(&format!(
                            "{:>4} {:>12} {:>12} {:>12}\n",
                            row.d,
                            row.chi,
                            row.chi_tanh,
                            row.chi_enumerated
                                .map(|v| v.to_string())
                                .unwrap_or_else(|| "-".into())
                        ));
                    }
                    emit(&cli, &text)?;
                }
            }
        }
        Command::Surface { off } => {
            let complex = IsospectralComplex::build(3)?;
            let report = surface_report(&complex);
            let walk = petrie_polygon(&complex, first_flag(&complex)?)?;
            if let Some(path) = off {
                fs::write(path, off_document(&complex)?)?;
            }
            let out = SurfaceOutput {
                d: 3,
                face_vector: report.face_vector.clone(),
                euler_characteristic: report.euler_characteristic as i64,
                connected: report.connected,
                edges_in_two_faces: report.edges_regular,
                vertex_links_single_cycle: report.vertex_links_are_cycles,
                vertex_degree: report.vertex_degree,
                genus: report.genus.map(|g| g as i64),
                petrie_length: walk.len(),
                petrie_covered_edges: walk.covered_edges,
                petrie_covers_all_edges: walk.covers_all_edges,
                failures: report.failures.clone(),
            };
            match cli.format {
                Format::Json => emit(&cli, &to_json_string(&out)?)?,
                Format::Human => {
                    let mut text = String::from("three-point isospectral surface\n");
                    text.push_str(&format!("face vector: {:?}\n", out.face_vector));
                    text.push_str(&format!(
                        "euler characteristic: {}\n",
                        out.euler_characteristic
                    ));
                    text.push_str(&format!("connected: {}\n", out.connected));
                    text.push_str(&format!(
                        "edges in two 2-faces: {}\n",
                        out.edges_in_two_faces
                    ));
                    text.push_str(&format!(
                        "vertex links single cycles: {} (degree {})\n",
                        out.vertex_links_single_cycle,
                        out.vertex_degree
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "-".into())
                    ));
                    text.push_str(&format!(
                        "genus: {}\n",
                        out.genus
                            .map(|v| v.to_string())
                            .unwrap_or_else(|| "-".into())
                    ));
                    text.push_str(&format!(
                        "petrie walk: length {}, covers {}/12 edges\n",
                        out.petrie_length, out.petrie_covered_edges
                    ));
                    if !out.failures.is_empty() {
                        text.push_str(&format!("failures: {}\n", out.failures.join("; ")));
                    }
                    emit(&cli, &text)?;
                }
            }
            if !report.all_passed() {
                return Ok(EXIT_SUITE_FAILURE);
            }
        }
        Command::Verify => {
            let results = verify::run_all();
            let all_passed = results.iter().all(|r| r.passed);
            match cli.format {
                Format::Json => {
                    let out = VerifyOutput {
                        passed: all_passed,
                        checks: results
                            .iter()
                            .map(|r| CheckRow {
                                name: r.name.to_string(),
                                passed: r.passed,
                                detail: r.detail.clone(),
                            })
                            .collect(),
                    };
                    emit(&cli, &to_json_string(&out)?)?;
                }
                Format::Human => {
                    let mut text = String::new();
                    for r in &results {
                        text.push_str(&format!(
                            "{} {:<26} {}\n",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.name,
                            r.detail
                        ));
                    }
                    text.push_str(&format!(
                        "{} of {} checks passed\n",
                        results.iter().filter(|r| r.passed).count(),
                        results.len()
                    ));
                    emit(&cli, &text)?;
                }
            }
            if !all_passed {
                return Ok(EXIT_SUITE_FAILURE);
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LimitRow {
    t: f64,
    error: f64,
    lead_entry: Option<f64>,
    trail_entry: Option<f64>,
}

#[derive(Serialize)]
struct LimitOutput {
    limit: SequenceRecord,
    limit_matrix: MatrixRecord,
    lead_entry_index: Option<usize>,
    trail_entry_index: Option<usize>,
    rows: Vec<LimitRow>,
}

#[derive(Serialize)]
struct BlowupOutput {
    point: BlowupRecord,
    member: bool,
    max_relative_residual: f64,
    instances_checked: usize,
    violation: Option<String>,
    face: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct FaceRow {
    n: usize,
    permutahedron: u64,
    complex: u64,
}

#[derive(Serialize)]
struct FacesTable {
    d: usize,
    rows: Vec<FaceRow>,
}

#[derive(Serialize)]
struct EulerRow {
    d: usize,
    chi: i64,
    chi_tanh: i64,
    chi_enumerated: Option<i64>,
}

#[derive(Serialize)]
struct EulerTable {
    rows: Vec<EulerRow>,
}

#[derive(Serialize)]
struct SurfaceOutput {
    d: usize,
    face_vector: Vec<usize>,
    euler_characteristic: i64,
    connected: bool,
    edges_in_two_faces: bool,
    vertex_links_single_cycle: bool,
    vertex_degree: Option<usize>,
    genus: Option<i64>,
    petrie_length: usize,
    petrie_covered_edges: usize,
    petrie_covers_all_edges: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct CheckRow {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    checks: Vec<CheckRow>,
}

fn read_record<T: serde::de::DeserializeOwned>(path: Option<&Path>) -> crate::Result<T> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut buffer = String::new();
            std::io::stdin().read_to_string(&mut buffer)?;
            buffer
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit(cli: &Cli, text: &str) -> crate::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| format!("{v:.9}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_grid(list: &str) -> crate::Result<Vec<f64>> {
    let grid: Vec<f64> = list
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidInput(format!("bad grid value {piece:?}: {e}")))
        })
        .collect::<crate::Result<_>>()?;
    if grid.is_empty() {
        return Err(Error::InvalidInput("empty t grid".into()));
    }
    Ok(grid)
}

fn parse_range(range: &str) -> crate::Result<(usize, usize)> {
    let parse = |s: &str| -> crate::Result<usize> {
        s.trim()
            .parse::<usize>()
            .map_err(|e| Error::InvalidInput(format!("bad dimension {s:?}: {e}")))
    };
    let (lo, hi) = match range.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => (1, parse(range)?),
    };
    if lo == 0 || hi < lo {
        return Err(Error::InvalidInput(format!("bad range {range:?}")));
    }
    if hi > 20 {
        return Err(Error::InvalidInput(format!(
            "dimension {hi} too large for the table"
        )));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("5").unwrap(), (1, 5));
        assert_eq!(parse_range("2..7").unwrap(), (2, 7));
        assert!(parse_range("0").is_err());
        assert!(parse_range("7..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("1e-2,1e-4").unwrap(), vec![1e-2, 1e-4]);
        assert!(parse_grid("abc").is_err());
    }
}
