//! Breadth-first distance classes and the bipartite graphs between consecutive classes.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Distance classes `L_0 = {root}, L_1, ..., L_p` of a connected graph.
///
/// An edge has class `i` when it joins two vertices of `L_i` or a vertex of
/// `L_i` to one of `L_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub root: VertexId,
    pub layers: Vec<Vec<VertexId>>,
    pub layer_of: Vec<usize>,
    pub edge_class: Vec<usize>,
}

impl Layering {
    /// Index `p` of the outermost layer.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// Edges with both ends in `L_i`, ascending by id.
    pub fn inner_edges(&self, g: &Graph, i: usize) -> Vec<EdgeId> {
        (0..g.edge_count())
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                self.layer_of[u] == i && self.layer_of[v] == i
            })
            .collect()
    }
}

pub fn bfs_layering(g: &Graph, root: VertexId) -> Result<Layering> {
    let n = g.vertex_count();
    if root >= n {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            count: n,
        });
    }
    let mut dist = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if let Some(vertex) = dist.iter().position(|&d| d == usize::MAX) {
        return Err(Error::Disconnected { root, vertex });
    }
    let depth = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); depth + 1];
    for (v, &d) in dist.iter().enumerate() {
        layers[d].push(v);
    }
    let edge_class = g
        .edges()
        .iter()
        .map(|&(u, v)| dist[u].max(dist[v]))
        .collect();
    Ok(Layering {
        root,
        layers,
        layer_of: dist,
        edge_class,
    })
}

/// A bipartite graph on local indices `x in 0..x_count`, `y in 0..y_count`.
///
/// Edge `j` is `edges[j] = (x, y)`; adjacency lists are sorted by the
/// opposite endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Bipartite {
    x_count: usize,
    y_count: usize,
    edges: Vec<(usize, usize)>,
    x_adj: Vec<Vec<(usize, usize)>>,
    y_adj: Vec<Vec<(usize, usize)>>,
}

impl Bipartite {
    pub fn new(x_count: usize, y_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut x_adj = vec![Vec::new(); x_count];
        let mut y_adj = vec![Vec::new(); y_count];
        for (j, &(x, y)) in edges.iter().enumerate() {
            if x >= x_count || y >= y_count {
                return Err(Error::InvalidParameters(format!(
                    "bipartite edge ({x}, {y}) out of range"
                )));
            }
            x_adj[x].push((y, j));
            y_adj[y].push((x, j));
        }
        for list in x_adj.iter_mut().chain(y_adj.iter_mut()) {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidParameters(
                    "bipartite graph has a parallel edge".into(),
                ));
            }
        }
        Ok(Bipartite {
            x_count,
            y_count,
            edges,
            x_adj,
            y_adj,
        })
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> (usize, usize) {
        self.edges[j]
    }

    /// `(y, edge)` pairs at `x`, ascending by `y`.
    pub fn x_neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.x_adj[x]
    }

    /// `(x, edge)` pairs at `y`, ascending by `x`.
    pub fn y_neighbors(&self, y: usize) -> &[(usize, usize)] {
        &self.y_adj[y]
    }

    pub fn x_degree(&self, x: usize) -> usize {
        self.x_adj[x].len()
    }

    pub fn y_degree(&self, y: usize) -> usize {
        self.y_adj[y].len()
    }

    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        let list = &self.x_adj[x];
        list.binary_search_by_key(&y, |&(w, _)| w)
            .ok()
            .map(|p| list[p].1)
    }
}

/// The bipartite graph `G[L_{i-1}, L_i]` with `X = L_{i-1}` and `Y = L_i`.
///
/// Local indices follow ascending vertex id on each side; local edge `j`
/// is global edge `edge_ids[j]`, which are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteLayerView {
    pub index: usize,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
    pub graph: Bipartite,
}

impl BipartiteLayerView {
    pub fn local_x(&self, v: VertexId) -> Option<usize> {
        self.x.binary_search(&v).ok()
    }

    pub fn local_y(&self, v: VertexId) -> Option<usize> {
        self.y.binary_search(&v).ok()
    }

    pub fn local_edge(&self, e: EdgeId) -> Option<usize> {
        self.edge_ids.binary_search(&e).ok()
    }

    pub fn global_edge(&self, j: usize) -> EdgeId {
        self.edge_ids[j]
    }
}

pub fn layer_bipartite_view(g: &Graph, lay: &Layering, i: usize) -> Result<BipartiteLayerView> {
    let p = lay.depth();
    if i == 0 || i > p {
        return Err(Error::LayerOutOfRange { index: i, max: p });
    }
    let x = lay.layers[i - 1].clone();
    let y = lay.layers[i].clone();
    let mut edge_ids = Vec::new();
    let mut local = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (lu, lv) = (lay.layer_of[u], lay.layer_of[v]);
        let (a, b) = if lu == i - 1 && lv == i {
            (u, v)
        } else if lv == i - 1 && lu == i {
            (v, u)
        } else {
            continue;
        };
        let xa = x.binary_search(&a).expect("vertex in layer");
        let yb = y.binary_search(&b).expect("vertex in layer");
        edge_ids.push(e);
        local.push((xa, yb));
    }
    let graph = Bipartite::new(x.len(), y.len(), local)?;
    Ok(BipartiteLayerView {
        index: i,
        x,
        y,
        edge_ids,
        graph,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circulant, complete};
    use crate::graph::parse_graph;

    #[test]
    fn complete_graph_has_one_layer() {
        let g = complete(5);
        let lay = bfs_layering(&g, 0).unwrap();
        assert_eq!(lay.layers, vec![vec![0], vec![1, 2, 3, 4]]);
        assert_eq!(lay.depth(), 1);
        assert_eq!(lay.inner_edges(&g, 1).len(), 6);
    }

    #[test]
    fn circulant_layers() {
        let g = circulant(7, &[1, 2]);
        let lay = bfs_layering(&g, 0).unwrap();
        assert_eq!(lay.layers, vec![vec![0], vec![1, 2, 5, 6], vec![3, 4]]);
        let view = layer_bipartite_view(&g, &lay, 2).unwrap();
        assert_eq!(view.x, vec![1, 2, 5, 6]);
        assert_eq!(view.y, vec![3, 4]);
        // 1-3, 2-3, 2-4, 5-3, 5-4, 6-4
        assert_eq!(view.graph.edge_count(), 6);
    }

    #[test]
    fn edge_class_of_triangle() {
        let g = parse_graph("0 1\n1 2\n2 0").unwrap();
        let lay = bfs_layering(&g, 0).unwrap();
        let e = g.edge_between(1, 2).unwrap();
        assert_eq!(lay.edge_class[e], 1);
    }

    #[test]
    fn view_index_bounds() {
        let g = complete(5);
        let lay = bfs_layering(&g, 0).unwrap();
        let view = layer_bipartite_view(&g, &lay, 1).unwrap();
        assert_eq!(view.x, vec![0]);
        assert_eq!(view.y, vec![1, 2, 3, 4]);
        assert_eq!(view.graph.edge_count(), 4);
        assert_eq!(
            layer_bipartite_view(&g, &lay, 2),
            Err(Error::LayerOutOfRange { index: 2, max: 1 })
        );
        assert!(layer_bipartite_view(&g, &lay, 0).is_err());
    }

    #[test]
    fn bad_root_and_disconnected() {
        let g = parse_graph("0 1\n2 3").unwrap();
        assert!(matches!(
            bfs_layering(&g, 0),
            Err(Error::Disconnected { vertex: 2, .. })
        ));
        assert!(bfs_layering(&g, 9).is_err());
    }
}
