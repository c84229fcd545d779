//! Quasitoric characteristic pairs for the permutohedral prism, restricted
//! subtorus checks, and integral homology of complexity-one orbit spaces.
//!
//! The pipeline starts from a simplicial complex `L` on `[n]`:
//! [`charpair::build_lambda_hat`] assigns characteristic vectors to the
//! facets of `Peⁿ⁻¹ × I`, the checks in [`charpair`] confirm the hypotheses
//! on the subtorus `Tⁿ⁻¹`, and [`orbit`] computes `H̃(Q)` two ways.

pub mod catalog;
pub mod charpair;
pub mod complex;
pub mod error;
pub mod homology;
pub mod lattice;
pub mod orbit;
pub mod permutohedron;
pub mod sample;

pub use complex::{ApexTag, FVector, SimplicialComplex, VertexLabel};
pub use error::{Error, Result};
pub use homology::{AbelianGroup, GradedAbelianGroup};
