//! The layer-by-layer labeling pipeline.
//!
//! Layers are labeled from the outermost inward. Layer `i` uses the pools of
//! its [`LayerPlan`]: edges inside `L_i` first, then the residual cross edges
//! along trails, then linking edges, and finally the σ edges in order of the
//! partial sums they complete.

mod assign;
mod document;
mod plan;
mod sigma;

use std::fmt::Write as _;

pub use assign::{
    assign_inner_labels, assign_link_labels, assign_sigma_labels, assign_trail_labels, Cursor,
    LinkRecord, TrailUnit, UnitKind,
};
pub use document::{parse_document, render_document, LabelingDocument};
pub use plan::{compute_interval_plan, IntervalPlan, LayerPlan};
pub use sigma::build_sigma;

use crate::covering::{build_covering_pair, maximize_free_links, CoveringPair};
use crate::error::{Error, Result};
use crate::graph::{validate_even_regular, EdgeId, Graph, VertexId};
use crate::layering::{bfs_layering, layer_bipartite_view, BipartiteLayerView, Layering};
use crate::trails::{
    build_residual, choose_closed_start, decompose_trails, detect_bad_components, LayerSigma,
    Residual, Trail, TrailFamily,
};
use crate::verify::verify_construction;

/// Which pool an edge is labeled from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    Inner,
    Trail,
    Link,
    Sigma,
}

impl EdgeRole {
    pub fn name(self) -> &'static str {
        match self {
            EdgeRole::Inner => "inner",
            EdgeRole::Trail => "trail",
            EdgeRole::Link => "link",
            EdgeRole::Sigma => "sigma",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "inner" => EdgeRole::Inner,
            "trail" => EdgeRole::Trail,
            "link" => EdgeRole::Link,
            "sigma" => EdgeRole::Sigma,
            _ => return None,
        })
    }
}

/// Everything decided for one layer `i`.
#[derive(Debug, Clone)]
pub struct LayerTrace {
    pub index: usize,
    pub view: BipartiteLayerView,
    pub pair: CoveringPair,
    /// σ edges of the view, one per `L_i` vertex (local indices).
    pub sigma: LayerSigma,
    /// Edges of the residual graph, labeled along trails.
    pub residual_edges: Vec<EdgeId>,
    /// Vertex sets of the bad components.
    pub bad_components: Vec<Vec<VertexId>>,
    pub free_links: usize,
    pub exchanges: usize,
    /// Links in labeling order.
    pub links: Vec<LinkRecord>,
    /// Trail units in labeling order.
    pub units: Vec<TrailUnit>,
    /// `L_i` in the order its σ edges were labeled.
    pub sigma_order: Vec<VertexId>,
}

/// A labeling together with the construction that produced it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub root: VertexId,
    pub k: usize,
    pub layering: Layering,
    pub plan: IntervalPlan,
    /// Indexed by `i - 1`.
    pub layers: Vec<LayerTrace>,
    /// Label of each edge, in `1..=|E|`.
    pub labels: Vec<usize>,
    pub sigma: Vec<Option<EdgeId>>,
    /// Vertex sums.
    pub sums: Vec<u64>,
    /// Vertex sums without the σ edge (the full sum at the root).
    pub partial: Vec<u64>,
}

impl Construction {
    pub fn roles(&self, g: &Graph) -> Vec<EdgeRole> {
        let mut roles = vec![EdgeRole::Trail; g.edge_count()];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if self.layering.layer_of[u] == self.layering.layer_of[v] {
                roles[e] = EdgeRole::Inner;
            }
        }
        for e in self.sigma.iter().flatten() {
            roles[*e] = EdgeRole::Sigma;
        }
        for r in self.layers.iter().flat_map(|t| &t.links) {
            roles[r.edge_u] = EdgeRole::Link;
            roles[r.edge_u2] = EdgeRole::Link;
        }
        roles
    }

    /// Human-readable account of every per-layer decision.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "root {} k {}", self.root, self.k);
        for t in self.layers.iter().rev() {
            let p = self.plan.layer(t.index);
            let _ = writeln!(
                out,
                "layer {}: n {} a {} b {} c {} d {} bound {}",
                t.index,
                p.n,
                p.a,
                p.b,
                p.c,
                p.d,
                p.bound(self.k)
            );
            out.push_str(&t.pair.dump(&t.view));
            for (y, &e) in t.sigma.iter().enumerate() {
                let _ = writeln!(out, "sigma {} edge {}", t.view.y[y], t.view.global_edge(e));
            }
            for unit in &t.units {
                let _ = write!(
                    out,
                    "unit {} s {} l {}:",
                    unit.kind.name(),
                    unit.cursor.s,
                    unit.cursor.l
                );
                for tr in &unit.trails {
                    let vs: Vec<String> = tr.vertices.iter().map(|v| v.to_string()).collect();
                    let _ = write!(out, " [{}]", vs.join("-"));
                }
                let ls: Vec<String> = unit.labels.iter().map(|l| l.to_string()).collect();
                let _ = writeln!(out, " labels {}", ls.join(","));
            }
            for r in &t.links {
                let _ = writeln!(
                    out,
                    "link {} {} {} free {} labels {} {}",
                    r.u, r.center, r.u2, r.free, self.labels[r.edge_u], self.labels[r.edge_u2]
                );
            }
            for c in &t.bad_components {
                let _ = writeln!(out, "bad component {c:?}");
            }
        }
        out
    }
}

struct Prepared {
    view: BipartiteLayerView,
    pair: CoveringPair,
    sigma: LayerSigma,
    residual: Residual,
    family: TrailFamily,
    bad: Vec<bool>,
    free_links: usize,
    exchanges: usize,
}

/// Covering pair, σ, residual graph and trails of layer `i`. None of this
/// depends on labels, so every layer can be prepared up front.
fn prepare_layer(g: &Graph, lay: &Layering, i: usize, k: usize) -> Result<Prepared> {
    let view = layer_bipartite_view(g, lay, i)?;
    let d = 2 * k + 1;
    if i >= 2 {
        if let Some(x) = (0..view.x.len()).find(|&x| view.graph.x_degree(x) > d) {
            return Err(Error::internal(format!(
                "vertex {} of layer {} has {} edges outward",
                view.x[x],
                i - 1,
                view.graph.x_degree(x)
            )));
        }
    }
    let pair = build_covering_pair(&view.graph, d)?;
    let sigma = build_sigma(&view, &pair)?;
    let outcome = maximize_free_links(&view, &pair, &sigma, d, k)?;
    let pair = outcome.pair;
    let residual = build_residual(&view, &pair, &sigma)?;
    let family = decompose_trails(&residual);
    let bad = detect_bad_components(&residual, &view, &pair, k);
    Ok(Prepared {
        view,
        pair,
        sigma,
        residual,
        family,
        bad,
        free_links: outcome.free_links,
        exchanges: outcome.exchanges,
    })
}

/// Orders and orients the trails of a layer into labeling units: closed
/// trails, outer trails, inner trails, then mixed trails in pairs.
fn plan_units(pr: &Prepared, k: usize) -> Result<Vec<(UnitKind, Vec<Trail>)>> {
    let mut units = Vec::new();
    for t in &pr.family.closed {
        let (t, case) =
            choose_closed_start(t, &pr.residual, &pr.view, &pr.pair, pr.bad[t.component], k)?;
        units.push((UnitKind::Closed(case), vec![t]));
    }
    units.extend(
        pr.family
            .outer
            .iter()
            .map(|t| (UnitKind::Outer, vec![t.clone()])),
    );
    units.extend(
        pr.family
            .inner
            .iter()
            .map(|t| (UnitKind::Inner, vec![t.clone()])),
    );
    for chunk in pr.family.mixed.chunks(2) {
        match chunk {
            [p, q] => units.push((UnitKind::MixedPair, vec![p.clone(), q.reversed()])),
            [p] => units.push((UnitKind::MixedLone, vec![p.clone()])),
            _ => unreachable!("chunks of at most two"),
        }
    }
    Ok(units)
}

fn partial_sum(g: &Graph, labels: &[usize], sigma: &[Option<EdgeId>], v: VertexId) -> Result<u64> {
    let mut total = 0u64;
    for &(_, e) in g.neighbors(v) {
        if Some(e) == sigma[v] {
            continue;
        }
        if labels[e] == 0 {
            return Err(Error::internal(format!(
                "edge {e} at vertex {v} is unlabeled when its partial sum is needed"
            )));
        }
        total += labels[e] as u64;
    }
    Ok(total)
}

/// Labels a connected `(2k+2)`-regular graph, `k ≥ 1`, and verifies the result.
pub fn label_graph(g: &Graph, root: VertexId) -> Result<Construction> {
    let k = validate_even_regular(g)?;
    if root >= g.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            count: g.vertex_count(),
        });
    }
    let layering = bfs_layering(g, root)?;
    let p = layering.depth();
    let prepared = (1..=p)
        .map(|i| prepare_layer(g, &layering, i, k))
        .collect::<Result<Vec<_>>>()?;

    let counts: Vec<_> = prepared
        .iter()
        .map(|pr| {
            (
                pr.view.y.len(),
                layering.inner_edges(g, pr.view.index).len(),
                pr.residual.g_sigma_prime.len(),
                2 * pr.pair.links.len(),
            )
        })
        .collect();
    let plan = compute_interval_plan(&counts, g.edge_count())?;

    let n = g.vertex_count();
    let mut sigma = vec![None; n];
    for pr in &prepared {
        for (y, &e) in pr.sigma.iter().enumerate() {
            sigma[pr.view.y[y]] = Some(pr.view.global_edge(e));
        }
    }

    let mut labels = vec![0usize; g.edge_count()];
    let mut partial = vec![0u64; n];
    let mut traces = Vec::with_capacity(p);
    for pr in prepared.into_iter().rev() {
        let i = pr.view.index;
        let lp = *plan.layer(i);
        assign_inner_labels(g, &layering.inner_edges(g, i), &lp, &mut labels)?;
        let units = assign_trail_labels(plan_units(&pr, k)?, &lp, &mut labels)?;
        let in_bad = |v: VertexId| pr.residual.component_of(v).is_some_and(|c| pr.bad[c]);
        let links = assign_link_labels(&pr.view, &pr.pair, &in_bad, &lp, k, &mut labels)?;

        let layer = &layering.layers[i];
        let bound = lp.bound(k);
        let outer_bound = (i < p).then(|| plan.layer(i + 1).bound(k));
        for &u in layer {
            partial[u] = partial_sum(g, &labels, &sigma, u)?;
            if partial[u] > bound {
                return Err(Error::internal(format!(
                    "layer {i}: partial sum {} at vertex {u} exceeds the layer bound {bound}",
                    partial[u]
                )));
            }
            if let Some(b) = outer_bound.filter(|&b| partial[u] < b) {
                return Err(Error::internal(format!(
                    "layer {}: partial sum {} at vertex {u} is below the bound {b} of the next layer out",
                    i,
                    partial[u]
                )));
            }
        }
        let sigma_order = assign_sigma_labels(layer, &sigma, &partial, &lp, &mut labels)?;

        let bad_components = pr
            .bad
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b)
            .map(|(c, _)| pr.residual.component_vertices(c))
            .collect();
        traces.push(LayerTrace {
            index: i,
            residual_edges: pr.residual.g_sigma_prime.clone(),
            view: pr.view,
            pair: pr.pair,
            sigma: pr.sigma,
            bad_components,
            free_links: pr.free_links,
            exchanges: pr.exchanges,
            links,
            units,
            sigma_order,
        });
    }
    traces.reverse();

    let sums: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(_, e)| labels[e] as u64).sum())
        .collect();
    partial[root] = sums[root];
    if p >= 1 && sums[root] < plan.layer(1).bound(k) {
        return Err(Error::internal(format!(
            "root sum {} is below the innermost bound {}",
            sums[root],
            plan.layer(1).bound(k)
        )));
    }

    let construction = Construction {
        root,
        k,
        layering,
        plan,
        layers: traces,
        labels,
        sigma,
        sums,
        partial,
    };
    let report = verify_construction(g, &construction);
    if !report.passed() {
        return Err(Error::Verification(format!(
            "{}\n{}",
            report.render(),
            construction.dump()
        )));
    }
    Ok(construction)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circulant, complete, complete_bipartite, octahedron};

    #[test]
    fn complete_graph_on_five_golden() {
        let g = complete(5);
        let c = label_graph(&g, 0).unwrap();
        let inner: Vec<_> = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
            .iter()
            .map(|&(u, v)| c.labels[g.edge_between(u, v).unwrap()])
            .collect();
        assert_eq!(inner, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(&c.partial[1..], &[6, 10, 12, 14]);
        let sigma: Vec<_> = (1..5).map(|v| c.labels[c.sigma[v].unwrap()]).collect();
        assert_eq!(sigma, vec![7, 8, 9, 10]);
        assert_eq!(c.sums, vec![34, 13, 18, 21, 24]);
        assert_eq!(c.plan.layer(1).bound(1), 19);
    }

    #[test]
    fn small_families_label() {
        for g in [
            circulant(7, &[1, 2]),
            octahedron(),
            complete_bipartite(6, 6),
            complete(7),
            circulant(12, &[1, 3, 5]),
        ] {
            for root in [0, g.vertex_count() - 1] {
                let c = label_graph(&g, root).unwrap();
                let mut sorted = c.labels.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, (1..=g.edge_count()).collect::<Vec<_>>());
                let mut sums = c.sums.clone();
                sums.sort_unstable();
                sums.dedup();
                assert_eq!(sums.len(), g.vertex_count());
            }
        }
    }

    #[test]
    fn rejects_out_of_scope_input() {
        assert!(label_graph(&circulant(5, &[1]), 0).is_err());
        assert!(matches!(
            label_graph(&complete(5), 9),
            Err(Error::VertexOutOfRange { .. })
        ));
    }
}
