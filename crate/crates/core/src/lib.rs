//! Standard and positive semidefinite zero forcing on small simple graphs.
//!
//! Graphs have at most 64 vertices, with each adjacency row stored as one
//! `u64`. The exhaustive routines in [`search`] and [`forts`] scan every
//! subset of the vertex set and are bounded by a [`Cap`] (20 vertices by
//! default).
//!
//! ```
//! use forcing_lab::{generators, search, Cap, Rule};
//!
//! let g = generators::sgap(0).unwrap();
//! let (pt, ept) = search::pt_sets(&g, Rule::Psd, Cap::default()).unwrap();
//! assert_eq!(ept.to_vec(), vec![1, 2, 4, 5, 6, 7]);
//! assert_eq!(pt.gaps, vec![3]);
//! ```

pub mod classify;
pub mod cli;
pub mod construction;
pub mod error;
pub mod forcing;
pub mod forts;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod limits;
pub mod search;
pub mod vertex_set;

pub use construction::{from_construction_tree, ConstructionTree};
pub use error::{ForcingError, GraphError, SearchError};
pub use forcing::{is_forcing_set, propagate, propagation_time, step, PropagationRecord, Rule};
pub use graph::Graph;
pub use graph6::{from_graph6, to_graph6};
pub use limits::Cap;
pub use vertex_set::{VertexSet, MAX_ORDER};
