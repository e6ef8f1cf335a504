//! Small named graph families used as fixtures and demo inputs.

use crate::graph::Graph;

/// The complete graph `K_n`, edges in lexicographic order.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).expect("complete graph is simple")
}

/// Circulant graph on `n` vertices joining `v` to `v ± j` for each offset `j`.
pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for &j in offsets {
            let w = (v + j) % n;
            let e = (v.min(w), v.max(w));
            if v != w && !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    edges.sort_unstable();
    Graph::from_edges(n, &edges).expect("circulant graph is simple")
}

/// Complete bipartite `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges).expect("complete bipartite graph is simple")
}

/// Octahedron `K_{2,2,2}`: `K_6` minus the perfect matching `{i, i+3}`.
pub fn octahedron() -> Graph {
    let edges: Vec<_> = (0..6)
        .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + 3)
        .collect();
    Graph::from_edges(6, &edges).expect("octahedron is simple")
}
