//! Regular polyhedral graphs: plane embeddings, isomorph-free generation,
//! medial/radial/dual transforms and classification by common-neighbour type.

pub mod analysis;
pub mod classify;
mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{
    build_plane, canonical_code, dual, embed, AbstractGraph, CanonicalCode, Face, PlaneGraph,
};
