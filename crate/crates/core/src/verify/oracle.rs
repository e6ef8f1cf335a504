use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    /// An antimagic labeling, if one exists.
    pub witness: Option<Vec<usize>>,
    /// Search nodes visited.
    pub nodes: u64,
}

const DEFAULT_EDGE_LIMIT: usize = 12;

/// Searches all labelings for an antimagic one.
///
/// Edges are assigned in an order that completes low vertices early; as soon
/// as a vertex has all its labels its sum is compared against the finished
/// sums and the branch is cut on a repeat. Graphs with more than 12 edges
/// need an explicit `max_nodes`.
pub fn brute_force_antimagic(g: &Graph, max_nodes: Option<u64>) -> Result<OracleOutcome> {
    let m = g.edge_count();
    if m > DEFAULT_EDGE_LIMIT && max_nodes.is_none() {
        return Err(Error::InvalidParameters(format!(
            "{m} edges exceed the default search size of {DEFAULT_EDGE_LIMIT}; pass a node limit"
        )));
    }
    let limit = max_nodes.unwrap_or(u64::MAX);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.endpoints(e);
        (v, u)
    });
    let mut search = Search {
        g,
        order,
        labels: vec![0; m],
        used: vec![false; m + 1],
        remaining: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        sums: vec![0; g.vertex_count()],
        finished: std::collections::HashSet::new(),
        nodes: 0,
        limit,
    };
    // Isolated vertices are finished from the start with sum 0.
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 && !search.finished.insert(0) {
            return Ok(OracleOutcome {
                witness: None,
                nodes: 0,
            });
        }
    }
    let found = search.run(0)?;
    Ok(OracleOutcome {
        witness: found.then(|| search.labels.clone()),
        nodes: search.nodes,
    })
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    labels: Vec<usize>,
    used: Vec<bool>,
    remaining: Vec<usize>,
    sums: Vec<u64>,
    finished: std::collections::HashSet<u64>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let (u, v) = self.g.endpoints(e);
        for label in 1..self.used.len() {
            if self.used[label] {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::SearchBudget { limit: self.limit });
            }
            self.used[label] = true;
            self.labels[e] = label;
            let mut closed = Vec::new();
            let mut clash = false;
            for w in [u, v] {
                self.sums[w] += label as u64;
                self.remaining[w] -= 1;
                if self.remaining[w] == 0 {
                    if self.finished.insert(self.sums[w]) {
                        closed.push(self.sums[w]);
                    } else {
                        clash = true;
                    }
                }
            }
            if !clash && self.run(depth + 1)? {
                return Ok(true);
            }
            for s in closed {
                self.finished.remove(&s);
            }
            for w in [u, v] {
                self.sums[w] -= label as u64;
                self.remaining[w] += 1;
            }
            self.used[label] = false;
            self.labels[e] = 0;
        }
        Ok(false)
    }
}
