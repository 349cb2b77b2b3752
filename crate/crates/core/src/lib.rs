//! Decision procedures for the Matching Cut problem on connected graphs.
//!
//! A matching cut is a set of pairwise disjoint edges whose removal
//! disconnects the graph. Every procedure here answers with a certificate
//! that can be checked independently: a valid red-blue colouring and the
//! bichromatic edges it induces.

pub mod error;
pub mod finisher;
pub mod graph;
pub mod oracle;
pub mod propagation;
pub mod redblue;
pub mod strategies;
pub mod transforms;
pub mod twosat;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, LabelledGraph, PatternGraph, Vertex};
pub use redblue::{Colour, MatchingCut, RedBlueColouring};
