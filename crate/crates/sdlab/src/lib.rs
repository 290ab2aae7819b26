//! Exact combinatorics of barycentric subdivision.
//!
//! This crate builds finite simplicial complexes from facet lists and studies
//! how their face data evolve under repeated barycentric subdivision, with
//! every quantity computed in exact big-integer or big-rational arithmetic:
//!
//! - [`complex`]: complexes, face enumeration, links, face vectors and
//!   polynomials, Euler characteristic, standard builders.
//! - [`subdivision`]: the chain construction, iterated and streaming deep
//!   subdivision, dual blocks, and exact rational embeddings.
//! - [`spectral`]: the transfer matrix of interior face counts, the limit
//!   coefficients as its normalized eigenvector (computed two independent
//!   ways), the limit polynomial and its root isolation.
//! - [`theorems`]: exact verifiers for the reflection symmetry of the shifted
//!   face polynomial, its value at -1/2, the alternating face-count
//!   relations, their limit form, and the sphere root analysis.
//! - [`measures`]: the unit-mass-per-cell volume measure, rescaled barycenter
//!   combs at depth `d`, exact polynomial integration, density harnesses for
//!   links and dual blocks, and the chart-word sampler.
//! - [`corpus`]: named complexes shipped with the tool.
//! - [`json`]: the on-disk schemas and the exact rational codec.
//!
//! Floating point appears in exactly two places: rendering decimals for
//! reports and the Monte Carlo standard error. Everything that a theorem
//! asserts exactly is checked exactly.
//!
//! The `sdlab` binary exposes the same operations as subcommands; the
//! `examples/` directory has one runnable program per capability.

pub mod complex;
pub mod corpus;
pub mod error;
pub mod json;
pub mod measures;
pub mod poly;
pub mod spectral;
pub mod subdivision;
pub mod theorems;

pub use complex::{FacePolynomial, FaceVector, Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use poly::{Rational, RationalPolynomial, RootIsolation};
pub use spectral::{LambdaMatrix, QVector};
pub use subdivision::{Chain, EmbeddedComplex, Point, SdComplex};

/// Default ceiling on the number of simplices any streaming or materializing
/// enumeration may visit. Override per call or through `SDLAB_MAX_CELLS`.
pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;
