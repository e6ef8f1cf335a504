//! Browser bindings: generate a graph, label it, and check edited labels.

use antimagic::verify::generate_regular;
use antimagic::{label_graph, parse_graph, verify_antimagic, verify_construction, Graph};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct Edge {
    u: usize,
    v: usize,
    label: usize,
    role: &'static str,
}

#[derive(Serialize)]
struct Labeled {
    root: usize,
    k: usize,
    /// BFS layer of each vertex.
    layer: Vec<usize>,
    edges: Vec<Edge>,
    sums: Vec<u64>,
    bounds: Vec<Bound>,
    passed: bool,
}

#[derive(Serialize)]
struct Bound {
    layer: usize,
    bound: u64,
    max_inner: u64,
    min_outer: u64,
}

#[derive(Serialize)]
struct Check {
    passed: bool,
    bijection: bool,
    distinct_sums: bool,
    sums: Vec<u64>,
    /// Pairs of vertices sharing a sum.
    clashes: Vec<(usize, usize)>,
    message: Option<String>,
}

fn to_js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(to_js)
}

fn graph(text: &str) -> Result<Graph, JsError> {
    parse_graph(text).map_err(to_js)
}

/// Edge list of a connected random `degree`-regular graph.
#[wasm_bindgen]
pub fn generate(n: usize, degree: usize, seed: u64) -> Result<String, JsError> {
    generate_regular(n, degree, seed)
        .map(|g| g.to_edge_list())
        .map_err(to_js)
}

/// Labels the graph from `root` and returns the labeling as JSON.
#[wasm_bindgen]
pub fn label(edge_list: &str, root: usize) -> Result<String, JsError> {
    let g = graph(edge_list)?;
    let c = label_graph(&g, root).map_err(to_js)?;
    let report = verify_construction(&g, &c);
    let roles = c.roles(&g);
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| Edge {
            u,
            v,
            label: c.labels[e],
            role: roles[e].name(),
        })
        .collect();
    json(&Labeled {
        root,
        k: c.k,
        layer: c.layering.layer_of.clone(),
        edges,
        sums: c.sums.clone(),
        bounds: report
            .bounds
            .iter()
            .map(|b| Bound {
                layer: b.index,
                bound: b.bound,
                max_inner: b.max_inner,
                min_outer: b.min_outer,
            })
            .collect(),
        passed: report.passed(),
    })
}

/// Checks arbitrary labels (one per edge, in edge-list order).
#[wasm_bindgen]
pub fn verify(edge_list: &str, labels: Vec<usize>) -> Result<String, JsError> {
    let g = graph(edge_list)?;
    if labels.len() != g.edge_count() {
        return Err(JsError::new(&format!(
            "{} labels for {} edges",
            labels.len(),
            g.edge_count()
        )));
    }
    let report = verify_antimagic(&g, &labels);
    let mut clashes = Vec::new();
    for u in 0..g.vertex_count() {
        for v in u + 1..g.vertex_count() {
            if report.sums[u] == report.sums[v] {
                clashes.push((u, v));
            }
        }
    }
    json(&Check {
        passed: report.passed(),
        bijection: report.bijection_ok,
        distinct_sums: report.distinct_sums_ok,
        sums: report.sums.clone(),
        clashes,
        message: report.first_failure().map(str::to_string),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // JsError only exists on wasm targets, so these exercise the success paths.
    #[test]
    fn label_and_verify_round_trip() {
        let text = generate(12, 4, 3).unwrap();
        let out: serde_json::Value = serde_json::from_str(&label(&text, 0).unwrap()).unwrap();
        assert_eq!(out["passed"], true);
        let labels: Vec<usize> = out["edges"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| e["label"].as_u64().unwrap() as usize)
            .collect();
        let check: serde_json::Value =
            serde_json::from_str(&verify(&text, labels.clone()).unwrap()).unwrap();
        assert_eq!(check["passed"], true);

        let mut swapped = labels;
        swapped.swap(0, 1);
        let check: serde_json::Value =
            serde_json::from_str(&verify(&text, swapped).unwrap()).unwrap();
        assert_eq!(check["bijection"], true);
    }
}
