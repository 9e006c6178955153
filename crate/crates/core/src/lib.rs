//! Vertex-economical triangulations of spheres carrying simplicial maps of
//! prescribed degree onto the boundary of a simplex, with independent
//! certificates: signed facet counts, integer homology, link checks and exact
//! convex-polytope realizations.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod homology;
pub mod io;
pub mod map;
pub mod rational;
pub mod realization;

pub use error::{Error, Result};
