//! Open packings of simple graphs.
//!
//! An open packing is a vertex set in which no two members share a neighbor.
//! This crate computes the open packing number ρ°, the lower open packing
//! number ρ°ₗ and the full size spectrum of maximal open packings, decides
//! whether all maximal open packings have one size, and recognizes the
//! structural family that characterizes such graphs at girth 15 and above.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod ong;
pub mod oracle;
pub mod packing;
pub mod verify;

pub use classifier::{decide_u, diagnose, recognize_f, Diagnosis, FPartition, Mode, Verdict};
pub use error::{Error, Result};
pub use graph::{Distance, Graph, Vertex, VertexSet};
pub use packing::{packing_report, PackingReport};
