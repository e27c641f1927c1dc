//! Exact-arithmetic toolkit for secant dimensions, tangential degeneracy,
//! and identifiability of parametrized projective varieties.
//!
//! Everything runs on exact scalars: word-size prime fields for fast
//! certified rank bounds, arbitrary-precision rationals for unconditional
//! witnesses. There is no floating point anywhere, so every verdict is a
//! statement about the variety, not about numerical tolerances.
//!
//! The catalog ([`variety`]) covers Veronese and Segre-Veronese embeddings,
//! rational normal curves, Grassmannians and flag varieties in Pluecker
//! coordinates, Lagrangian Grassmannians, moment surfaces, power maps,
//! arbitrary toric varieties from lattice polytope files, and secant powers
//! of all of these. Varieties are named by descriptor strings such as
//! `veronese:2:5` or `secant:rnc:11:2` ([`descriptor`]).
//!
//! Main entry points, one per capability:
//!
//! - [`secant::secant_dim`]: dimension of the h-th secant variety via
//!   stacked tangent blocks; nondefective verdicts are certified.
//! - [`tangency::gauss_rank`] and [`tangency::contact_locus_dim`]: rank of
//!   the tangent-plane family and the dimension of the tangential contact
//!   locus, both from exact second-order jets.
//! - [`bounds`]: closed-form identifiability bounds for named families,
//!   with known exceptional cases carved out of the certified range.
//! - [`witness`]: unconditional rational-arithmetic certificates, including
//!   multiple-decomposition witnesses and full counterexample dossiers.
//! - [`certify`]: the three-check identifiability pipeline combining all of
//!   the above into one auditable JSON certificate.
//!
//! Each capability has a runnable demonstration under `examples/`:
//! `secant_dimensions`, `gauss_and_contact`, `identifiability_bounds`,
//! `counterexample_dossier`, `toric_polytopes`, and `certify_pipeline`.
//! The same functionality is scriptable through the `terracini` binary
//! ([`cli`]), which emits versioned JSON reports.

pub mod bounds;
pub mod certify;
pub mod cli;
pub mod descriptor;
pub mod error;
pub mod facts;
pub mod field;
pub mod intmat;
pub mod jet;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod sample;
pub mod secant;
pub mod tangency;
mod unipoly;
pub mod variety;
pub mod witness;

pub use error::{Error, Result};

/// Version stamp carried by every serialized report.
pub const SCHEMA_VERSION: &str = "1";
