//! Verification engine for almost cosymplectic CR geometry.
//!
//! The crate builds almost contact metric structures from symbolic
//! coordinate expressions, derives connections and curvature from them,
//! and certifies structural identities numerically at seeded sample
//! points.  See the `book/` guide for a narrative tour.

pub mod accs;
pub mod cli;
pub mod cr;
pub mod error;
pub mod expr;
pub mod fields;
pub mod models;
pub(crate) mod numeric;
pub mod manifold;
pub mod report;
pub mod riemann;

pub use error::{Error, Result};

/// Compiles every code snippet in the book as a doctest, so the guide
/// cannot drift from the API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    mod expressions {}
    #[doc = include_str!("../../../book/src/charts-and-fields.md")]
    mod charts_and_fields {}
    #[doc = include_str!("../../../book/src/curvature.md")]
    mod curvature {}
    #[doc = include_str!("../../../book/src/structures.md")]
    mod structures {}
    #[doc = include_str!("../../../book/src/nullity.md")]
    mod nullity {}
    #[doc = include_str!("../../../book/src/cr.md")]
    mod cr {}
    #[doc = include_str!("../../../book/src/models.md")]
    mod models {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
