//! Facet ideals of simplicial forests.
//!
//! The crate analyzes simplicial complexes through the squarefree
//! monomial ideals generated by their facets. It recognizes trees,
//! forests and quasi-forests, computes multigraded Betti numbers both by
//! a brute-force Koszul-homology engine and by a fast leaf recursion for
//! forests, and checks the closed forms these ideals satisfy: the linear
//! strand of a pure tree, the regularity and projective dimension of
//! one-dimensional forests, the classification of linear trees by the
//! intersection property, and alternating strand sums.
//!
//! Start with the runnable programs under `examples/`; each exercises one
//! capability end to end. The `facet-ideals` binary exposes the same
//! operations on complexes stored as text files.

pub mod betti;
pub mod commands;
pub mod complex;
pub mod error;
pub mod forest;
pub mod generate;
pub mod ideal;
pub mod io;
pub mod koszul;
pub mod linalg;
pub mod report;
pub mod vset;

pub use betti::BettiTable;
pub use complex::{Distance, FacetChain, ForestCheck, SimplicialComplex};
pub use error::{Error, Result};
pub use ideal::SqfIdeal;
pub use koszul::KoszulChain;
pub use linalg::FieldSpec;
pub use vset::VertexSet;
