//! Finite sequences of finitely supported distributions and real symmetric
//! tridiagonal matrices: the reconstruction map between them, the blow-up
//! of the weight simplex that resolves its boundary degeneration, moment
//! curve limits in closed form, and the permutahedral complexes whose
//! combinatorics encode the topology of isospectral sets.
//!
//! The crate is organized around five concerns:
//!
//! - [`spectral`]: the distribution/matrix correspondence (reconstruction
//!   through the three-term recurrence, monic orthogonal polynomials, the
//!   inverse spectral map, flips and sign conjugation).
//! - [`blowup`]: multi-block homogeneous coordinates indexed by subsets,
//!   the defining quadratic equations, the lift/projection inverse pair,
//!   barycentres, and face classification.
//! - [`limits`]: moment curves, the closed-form limit of a degenerating
//!   family, stable-sequence classification from exponent data, and a
//!   numeric convergence harness.
//! - [`permutahedron`] and [`complex`]: the face lattice of the
//!   permutahedron via ordered partitions, the sign-glued complex over an
//!   isospectral set, Euler characteristics three independent ways, surface
//!   diagnostics, and the Petrie walk.
//! - [`cli`]: a thin command-line front end over JSON-shaped records.
//!
//! Runnable walkthroughs for each capability live in the crate's
//! `examples/` directory.

// Guards written as `!(x > 0.0)` are deliberate: they reject NaN along with
// the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blowup;
pub mod cli;
pub mod combin;
pub mod complex;
pub mod distribution;
pub mod error;
pub mod limits;
pub mod matrix;
pub mod partition;
pub mod permutahedron;
pub mod serialize;
pub mod spectral;
pub mod spectrum;
pub mod subset;
pub mod verify;

pub use distribution::{Distribution, DistributionSequence};
pub use error::{Error, Result};
pub use matrix::TridiagonalMatrix;
pub use partition::{Chain, OrderedPartition};
pub use spectrum::SpectrumConfig;
pub use subset::Subset;
