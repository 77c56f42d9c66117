//! Sublinear expanders, length-adjusting gadgets, exact-length paths, cycle
//! spectra and balanced clique subdivisions, with brute-force oracles for
//! checking every construction at small scale.

pub mod connect;
pub mod error;
pub mod expander;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod outcome;
pub mod regime;
pub mod spectrum;
pub mod subdivision;

pub use error::{Error, Result};
pub use graph::{build_graph, degrees, DegreeStats, Graph, Path};
pub use outcome::Outcome;
