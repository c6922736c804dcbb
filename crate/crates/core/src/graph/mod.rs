//! Graph representations, canonical codes, planarity embedding and file codecs.

mod abstract_graph;
mod canon;
pub mod codec;
mod embed;
mod plane;

pub use abstract_graph::{named, AbstractGraph};
pub use canon::{canonical_code, CanonicalCode};
pub use embed::{embed, embed_with_cap, DEFAULT_EMBED_CAP};
pub use plane::{build_plane, dual, Face, PlaneGraph};
