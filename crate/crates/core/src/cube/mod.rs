//! Hypercube primitives: star vectors, vertices, edges, edge layers,
//! subgraph storage and the automorphism action.
//!
//! Positions are 0-based from the left of the text form, and position `i`
//! is bit `i` of every mask (position 0 is the least significant bit).

mod automorphism;
mod star;
mod subgraph;

pub use automorphism::{apply_automorphism, Automorphism};
pub use star::{
    edge_layer, Cell, Edge, EdgeLayerIndex, StarVector, Vertex, MAX_MATERIALIZE_DIM, MAX_STAR_DIM,
};
pub use subgraph::{edge_count_of_cube, EdgeSet, FullCube, Subgraph};

pub(crate) use star::{bit_positions, check_materialize, deposit, low_mask, masks_with_popcount, subsets};

pub fn parse_star_vector(text: &str, n: usize) -> crate::Result<StarVector> {
    StarVector::parse(text, n)
}

pub fn expand_edges(sv: &StarVector) -> crate::Result<Vec<Edge>> {
    sv.expand_edges()
}

pub fn expand_vertices(sv: &StarVector) -> crate::Result<Vec<Vertex>> {
    sv.expand_vertices()
}

pub fn load_subgraph(path: impl AsRef<std::path::Path>) -> crate::Result<Subgraph> {
    Subgraph::load(path)
}

pub fn save_subgraph(g: &Subgraph, path: impl AsRef<std::path::Path>) -> crate::Result<()> {
    g.save(path)
}
