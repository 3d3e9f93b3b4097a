//! Exact solvers and reduction compilers for repairing corrupted graph
//! colorings by recoloring (`fix`) or by swapping colors between vertices
//! (`swap`), including the promise variants.

pub mod chromatic;
pub mod classes;
pub mod error;
pub mod graph;
pub mod instance;
pub mod io;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use chromatic::{chromatic_number, Limits};
pub use error::{Error, Result};
pub use graph::{Color, ColoredGraph, Graph, Vertex};
pub use instance::{apply, Certificate, Move, RepairInstance, Variant};
