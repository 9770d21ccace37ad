//! Exact computations around the depth of (symbolic) powers of edge ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] – monomials and monomial ideals (sum, product, intersection,
//!   colon, radical, powers);
//! * [`graph`] – simple graphs, the standard families and edge ideals;
//! * [`symbolic`] – symbolic powers of edge ideals with independent shortcut formulas;
//! * [`simplicial`] – simplicial complexes, Stanley–Reisner theory and homology;
//! * [`betti`] – multigraded Betti numbers over the lcm lattice, depth and projective dimension;
//! * [`bipartite`] – maximal induced bipartite subgraphs and the invariants `bc`, `bc'`;
//! * [`verify`] – closed-form predictions and reproducible verification reports.

pub mod betti;
pub mod bipartite;
pub mod budget;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod monomial;
pub mod simplicial;
pub mod symbolic;
pub mod verify;

pub use betti::{BettiTable, LcmLattice, PowerKind, Stabilization};
pub use bipartite::BipartiteWitness;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, WhiskerSpec};
pub use linalg::Field;
pub use monomial::{Monomial, MonomialIdeal};
pub use simplicial::{ReducedHomology, SimplicialComplex};
pub use symbolic::{SymbolicMethod, SymbolicPowerRequest};
