//! Co-maximal ideal graphs of finite commutative rings.
//!
//! Two engines build the graph Γ(R) whose vertices are the proper ideals of
//! `R` not contained in the Jacobson radical, with an edge between `I` and
//! `J` whenever `I + J = R`:
//!
//! * [`ring`] works from explicit addition/multiplication tables and
//!   enumerates the ideal lattice by brute force.
//! * [`factor`] models an Artinian ring as a product of local factors, each
//!   described only by its number of proper ideals, and builds Γ(R)
//!   combinatorially.
//!
//! [`graph`] provides the exact invariants (planarity with embeddings and
//! Kuratowski witnesses, clique and independence numbers, universal vertices)
//! and [`theorems`] confronts the classification predicates with them.

pub mod cli;
pub mod error;
pub mod factor;
pub mod graph;
pub mod ring;
pub mod theorems;

pub use error::{Error, Result};
pub use factor::{Coord, LocalFactorSpec, ProductRingSpec, VertexCode};
pub use graph::{Graph, PlanarityResult, SubdivisionWitness, WitnessKind};
pub use ring::{FiniteRing, Ideal, IdealLattice};

/// Size limits shared by every engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order accepted by the table-based engine.
    pub max_order: usize,
    /// Largest graph built by the factor model.
    pub graph_vertex_cap: usize,
    /// Largest graph for which a Kuratowski witness is extracted.
    pub witness_cap: usize,
    /// Node limit for exact clique / independence search.
    pub search_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 4096,
            graph_vertex_cap: 20_000,
            witness_cap: 64,
            search_budget: 20_000_000,
        }
    }
}
