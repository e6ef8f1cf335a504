//! Simple undirected graphs with stable vertex and edge identities.

use std::collections::{HashSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// A simple undirected graph on vertices `0..vertex_count`.
///
/// Edge ids are the positions in the edge list and never change. Each edge
/// is stored with its smaller endpoint first, and adjacency lists are sorted
/// by neighbor id so every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
}

impl Graph {
    /// Builds a graph from an edge list. Loops, duplicates and out-of-range
    /// endpoints are rejected; the error's `line` is the 1-based edge index.
    pub fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut stored = Vec::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            let line = id + 1;
            if a == b {
                return Err(Error::Parse {
                    line,
                    reason: format!("loop at vertex {a}"),
                });
            }
            let (u, v) = (a.min(b), a.max(b));
            if v >= vertex_count {
                return Err(Error::Parse {
                    line,
                    reason: format!("vertex {v} out of range"),
                });
            }
            if !seen.insert((u, v)) {
                return Err(Error::Parse {
                    line,
                    reason: format!("duplicate edge {u} {v}"),
                });
            }
            stored.push((u, v));
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertex_count,
            edges: stored,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, smaller id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// `(neighbor, edge)` pairs of `v`, ascending by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let list = &self.adjacency[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|pos| list[pos].1)
    }

    /// First vertex not reachable from `root`, if any.
    pub fn unreachable_from(&self, root: VertexId) -> Option<VertexId> {
        if self.vertex_count == 0 {
            return None;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_from(0).is_none()
    }

    /// Serializes to the edge-list format accepted by [`parse_graph`], in edge-id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses an edge-list document: one edge per line as two whitespace
/// separated vertex ids, `#` starts a comment line, blank lines are skipped.
/// The vertex count is one more than the largest id mentioned.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    let mut max_id: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("expected two vertex ids, found {} fields", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("not a vertex id: {s:?}"),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        max_id = Some(max_id.map_or(a.max(b), |m| m.max(a).max(b)));
        edges.push((a, b));
        lines.push(line_no);
    }
    let n = max_id.map_or(0, |m| m + 1);
    Graph::from_edges(n, &edges).map_err(|err| match err {
        Error::Parse { line, reason } => Error::Parse {
            line: lines[line - 1],
            reason,
        },
        other => other,
    })
}

/// Checks that `g` is connected and `(2k+2)`-regular with `k >= 1`, returning `k`.
pub fn validate_even_regular(g: &Graph) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    let degree = g.degree(0);
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) != degree) {
        return Err(Error::NotRegular {
            vertex: v,
            degree: g.degree(v),
            expected: degree,
        });
    }
    if degree % 2 == 1 {
        return Err(Error::OddDegree(degree));
    }
    if degree < 4 {
        return Err(Error::DegreeOutOfScope(degree));
    }
    if let Some(vertex) = g.unreachable_from(0) {
        return Err(Error::Disconnected { root: 0, vertex });
    }
    Ok((degree - 2) / 2)
}
