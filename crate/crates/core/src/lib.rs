//! Exact signed domination solvers and a bound-auditing harness for small
//! graphs.
//!
//! The crate computes the signed domination number `γs(G)` together with
//! the domination number, k-tuple domination numbers, k-limited packing
//! numbers and the packing number, each with a re-checkable certificate. On
//! top of that it evaluates a family of closed-form upper and lower bounds
//! on `γs`, runs the constructive steps that realize them, and audits whole
//! graph corpora for bound violations and sharp cases.
//!
//! ```
//! use sigdom::{generate, GraphKind, Mode, signed_domination};
//!
//! let p7 = generate(&GraphKind::Path { n: 7 }, 0).unwrap();
//! let (weight, f) = signed_domination(&p7, Mode::BranchAndBound).unwrap();
//! assert_eq!(weight, 5);
//! assert_eq!(f.to_string(), "++-++++");
//! ```

pub mod audit;
pub mod bitset;
pub mod bounds;
pub mod cli;
pub mod codec;
pub mod construct;
pub mod error;
pub mod generate;
pub mod graph;
pub mod profile;
pub mod solver;

pub use bounds::{Bound, BoundKind, BoundName, Rational};
pub use codec::{parse_graph, serialize_graph, Format};
pub use error::{Error, Result};
pub use generate::{enumerate_labeled_trees, generate, GraphKind};
pub use graph::Graph;
pub use profile::StructuralProfile;
pub use solver::{
    domination_number, limited_packing_number, packing_number, partition_stats,
    signed_domination, tuple_domination_number, verify_sdf, Mode, PartitionStats, SetRole,
    SignedFunction, Solver, SolverCaps, VertexSet,
};
