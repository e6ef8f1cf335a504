//! Antimagic edge labelings of connected `(2k+2)`-regular graphs.
//!
//! Vertices are split into BFS layers around a root. Each bipartite layer
//! graph gets a covering pair of links and matching edges, the rest of it is
//! cut into trails, and labels are handed out layer by layer from the
//! outside in so that every vertex sum in a layer stays below every sum in
//! the next layer inward.

pub mod covering;
pub mod error;
pub mod families;
pub mod graph;
pub mod labeling;
pub mod layering;
pub mod trails;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{parse_graph, validate_even_regular, EdgeId, Graph, VertexId};
pub use labeling::{label_graph, Construction};
pub use layering::{bfs_layering, layer_bipartite_view, Bipartite, BipartiteLayerView, Layering};
pub use verify::{verify_antimagic, verify_construction, VerificationReport};
