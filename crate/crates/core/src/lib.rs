//! Exact star-pattern structure and substructure connectivity.
//!
//! For a graph `G` and a star `K_{1,M}`, a *structure cut* is a family of
//! pairwise vertex-disjoint copies of `K_{1,M}` whose removal leaves `G`
//! disconnected or trivial; a *substructure cut* allows any connected
//! subgraph of `K_{1,M}` (that is `K_1` or `K_{1,j}` with `j <= M`). The
//! smallest such families define `κ(G; K_{1,M})` and `κ^s(G; K_{1,M})`.
//!
//! The crate contains:
//!
//! * [`graph`]: a compact simple-graph type with the neighborhood and
//!   connectivity queries every other module builds on;
//! * [`cut`]: stars, cut families and the polynomial-time certificate checks;
//! * [`solver`]: iterative-deepening exact search plus a subset-enumeration
//!   oracle used to cross-check it;
//! * [`npo`]: brute-force 3-dimensional matching and vertex cover solvers;
//! * [`reductions`]: the 3DM and vertex-cover gadget graphs together with
//!   encoders (solution to cut) and validating decoders (cut to solution);
//! * [`io`], [`gen`] and [`roundtrip`]: text formats, seeded instance
//!   generators and the end-to-end checks driven by the `starcut` binary.

mod bitset;
pub mod cut;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod npo;
pub mod reductions;
pub mod roundtrip;
pub mod solver;

pub use cut::{CutFamily, CutKind, Star, Triviality};
pub use error::{Error, Result};
pub use graph::{Graph, Subgraph, VertexSet};
pub use npo::{ThreeDmInstance, Triple, VertexCoverInstance};
pub use reductions::{Decode, ReducedInstance, Source, VertexRole};
pub use solver::{SolveOptions, SolveResult};
