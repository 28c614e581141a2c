//! Gray codes on restricted object lists.
//!
//! Given a list of combinatorial objects and a flip operation, decide whether
//! the list can be ordered so that consecutive objects differ by one flip,
//! i.e. whether the induced flip graph has a Hamilton path. The crate also
//! carries the reductions between these problems, brute-force oracles that
//! check them, and the polynomial-time shift and rotation cases.
//!
//! ```
//! use graycode::{gen, solver};
//!
//! let inst = gen::named_instance("abstract-yes", None).unwrap();
//! let result = solver::solve_instance(&inst, false, &Default::default()).unwrap();
//! assert!(result.answer.is_yes());
//! ```

pub mod error;
pub mod flipgraph;
pub mod flips;
pub mod gen;
pub mod io;
pub mod objects;
pub mod reductions;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use flipgraph::{build_flip_graph, FlipGraph};
pub use flips::{adjacent, FlipFamily};
pub use objects::{
    BitString, Certificate, Combination, DiamondGraph, Edge, EdgeSubset, Instance, Kind, Object, Permutation,
    SetPartition, Side, Tuple2, Vertex,
};
pub use reductions::ReductionTag;
pub use solver::{Answer, SolveResult, SolverConfig};
