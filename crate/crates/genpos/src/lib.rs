//! General position sets of connected graphs.
//!
//! A set of vertices is in *general position* when no three of its members
//! lie on a common shortest path; the *general position number* gp(G) is the
//! size of a largest such set. This crate provides:
//!
//! - the geodesic substrate: BFS all-pairs distances, intervals, and
//!   collinear-triple detection ([`graph`]);
//! - tree structure: leaves, branching paths, the closed form
//!   gp(T) = l(T), and the membership characterization for non-leaf
//!   vertices ([`tree`]);
//! - Cartesian products: the additive metric, interval factorization,
//!   layers, and a maximal general position set construction for products
//!   of two trees ([`product`]);
//! - an exact branch-and-bound solver with forced-inclusion support
//!   ([`solver`]);
//! - free-tree enumeration and exhaustive sweeps checking that the general
//!   position number is additive on products of trees ([`enumerate`]);
//! - the canonical edge-list and product-spec text formats ([`io`]).
//!
//! ```
//! use genpos::{Graph, GpInstance, gp_number_exact};
//!
//! // K1,3: the three leaves form the unique maximum general position set.
//! let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)])?;
//! let dm = star.distances()?;
//! let result = gp_number_exact(&GpInstance::new(&star, &dm))?;
//! assert_eq!(result.gp_number, 3);
//! assert_eq!(result.witness.vertices(), &[1, 2, 3]);
//! # Ok::<(), genpos::Error>(())
//! ```

pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod product;
pub mod set;
pub mod solver;
pub mod tree;

pub use error::{Error, Result};
pub use graph::{collinear_triples, interval, is_collinear_triple, DistanceMatrix, Graph};
pub use product::{
    construct_maximal_gp, construct_maximal_gp_flat, product_distance, product_interval,
    theorem_prediction, Layer, LayerKind, ProductGraph,
};
pub use set::{Provenance, VertexSet};
pub use solver::{
    first_violating_triple, gp_number_exact, greedy_gp_lower_bound, is_maximal_gp,
    verify_general_position, GpInstance, GpResult,
};
pub use tree::{gp_number_tree, is_tree, nonleaf_in_some_gp_set, tree_gp_set, TreeProfile};
