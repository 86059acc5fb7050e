//! Edge-coloring tooling for subcubic graphs: exact chromatic index and
//! criticality, Kempe chains, a board-game prover for reducible
//! configurations, structural scanners, discharging, and graph generators.

pub mod audit;
pub mod color;
pub mod coloring;
pub mod discharge;
pub mod error;
pub mod fixability;
pub mod generators;
pub mod graph;
pub mod kempe;
pub mod library;

pub use color::{missing_colors, Color, ColorPair, ColorSet, PartialEdgeColoring};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, Vertex};
