//! Checks of the recorded per-layer decisions against the labels.

use std::collections::HashMap;

use super::{Recomputed, VerificationReport};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::labeling::{Construction, EdgeRole, LayerTrace, UnitKind};
use crate::trails::StartCase;

#[derive(Default)]
struct Messages {
    covering: Vec<String>,
    trails: Vec<String>,
    cursor: Vec<String>,
    pair_sum: Vec<String>,
    free_links: Vec<String>,
    link_bound: Vec<String>,
}

pub(super) fn check_layers(
    g: &Graph,
    c: &Construction,
    roles: &[EdgeRole],
    rec: &Recomputed,
    report: &mut VerificationReport,
) {
    let mut m = Messages::default();
    let mut bad_total = 0;
    for t in &c.layers {
        bad_total += check_layer(g, c, t, roles, rec, &mut m);
    }
    report.bad_components = bad_total;
    report.covering_ok = report.record(m.covering);
    report.trails_ok = report.record(m.trails);
    report.cursor_ok = report.record(m.cursor);
    report.pair_sum_ok = report.record(m.pair_sum);
    report.free_links_ok = report.record(m.free_links);
    report.link_bound_ok = report.record(m.link_bound);
}

/// Disjoint-set forest over vertex ids.
struct Components {
    parent: Vec<usize>,
}

impl Components {
    fn new(n: usize) -> Self {
        Components {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        let mut r = v;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut v = v;
        while self.parent[v] != r {
            let next = self.parent[v];
            self.parent[v] = r;
            v = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Returns the number of bad components found in the layer.
fn check_layer(
    g: &Graph,
    c: &Construction,
    t: &LayerTrace,
    roles: &[EdgeRole],
    rec: &Recomputed,
    m: &mut Messages,
) -> usize {
    let i = t.index;
    let k = rec.k;
    let labels = &c.labels;
    let n = g.vertex_count();
    let outer = |v: VertexId| rec.dist[v] + 1 == i;
    let inner = |v: VertexId| rec.dist[v] == i;
    let is_cross = |e: EdgeId| {
        let (u, v) = g.endpoints(e);
        (outer(u) && inner(v)) || (inner(u) && outer(v))
    };

    // Covering pair, in global ids.
    let matching: Vec<EdgeId> = t
        .pair
        .matching
        .iter()
        .map(|&j| t.view.global_edge(j))
        .collect();
    let mut matched_edge: HashMap<VertexId, EdgeId> = HashMap::new();
    for &e in &matching {
        if !is_cross(e) {
            m.covering
                .push(format!("layer {i}: matching edge {e} is not a cross edge"));
        }
        let (u, v) = g.endpoints(e);
        for w in [u, v] {
            if matched_edge.insert(w, e).is_some() {
                m.covering
                    .push(format!("layer {i}: vertex {w} matched twice"));
            }
        }
    }
    let mut link_end: HashMap<VertexId, usize> = HashMap::new();
    let mut centers: HashMap<VertexId, usize> = HashMap::new();
    let mut link_edges = vec![false; g.edge_count()];
    if t.links.len() != t.pair.links.len() {
        m.covering.push(format!(
            "layer {i}: link records do not match the covering pair"
        ));
    }
    for (j, r) in t.links.iter().enumerate() {
        let ok_edges = g.endpoints(r.edge_u) == (r.center.min(r.u), r.center.max(r.u))
            && g.endpoints(r.edge_u2) == (r.center.min(r.u2), r.center.max(r.u2));
        if !ok_edges || !outer(r.center) || !inner(r.u) || !inner(r.u2) || r.u == r.u2 {
            m.covering.push(format!(
                "layer {i}: link {}-{}-{} is malformed",
                r.u, r.center, r.u2
            ));
            continue;
        }
        link_edges[r.edge_u] = true;
        link_edges[r.edge_u2] = true;
        if centers.insert(r.center, j).is_some() {
            m.covering
                .push(format!("layer {i}: two links share center {}", r.center));
        }
        for w in [r.u, r.u2] {
            if link_end.insert(w, j).is_some() {
                m.covering
                    .push(format!("layer {i}: two links share end {w}"));
            }
        }
    }
    let d = 2 * k + 1;
    let cross_neighbors = |v: VertexId| -> Vec<VertexId> {
        g.neighbors(v)
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| inner(w))
            .collect()
    };
    for &x in &rec.layers[i - 1] {
        let nb = cross_neighbors(x);
        let is_center = centers.contains_key(&x);
        let is_matched = matched_edge.contains_key(&x);
        if nb.len() == d && is_center == is_matched {
            m.covering.push(format!(
                "layer {i}: vertex {x} of full degree is covered {} times",
                usize::from(is_center) + usize::from(is_matched)
            ));
        }
        if is_center {
            if nb.len() != d {
                m.covering.push(format!(
                    "layer {i}: link center {x} has degree {}",
                    nb.len()
                ));
            }
            if let Some(y) = nb.iter().find(|y| !matched_edge.contains_key(y)) {
                m.covering.push(format!(
                    "layer {i}: link center {x} has unmatched neighbor {y}"
                ));
            }
            if is_matched {
                m.covering
                    .push(format!("layer {i}: link center {x} is matched"));
            }
        }
    }
    for &y in &rec.layers[i] {
        let Some(s) = rec.sigma[y] else { continue };
        if link_edges[s] {
            m.covering
                .push(format!("layer {i}: σ edge of {y} is a linking edge"));
        }
        if let Some(&e) = matched_edge.get(&y) {
            if e != s {
                m.covering.push(format!(
                    "layer {i}: σ edge of matched vertex {y} is not its matching edge"
                ));
            }
        }
    }
    for (e, &role) in roles.iter().enumerate() {
        if is_cross(e) && (role == EdgeRole::Link) != link_edges[e] {
            m.covering
                .push(format!("layer {i}: edge {e} role disagrees with the links"));
        }
    }

    // Residual graph and its components.
    let residual: Vec<EdgeId> = (0..g.edge_count())
        .filter(|&e| is_cross(e) && roles[e] == EdgeRole::Trail)
        .collect();
    let mut sorted_trace = t.residual_edges.clone();
    sorted_trace.sort_unstable();
    if sorted_trace != residual {
        m.trails.push(format!(
            "layer {i}: recorded residual edges differ from the trail-role edges"
        ));
    }
    let mut comps = Components::new(n);
    let mut rdeg = vec![0usize; n];
    for &e in &residual {
        let (u, v) = g.endpoints(e);
        comps.union(u, v);
        rdeg[u] += 1;
        rdeg[v] += 1;
    }
    let mut members: HashMap<usize, Vec<VertexId>> = HashMap::new();
    for v in (0..n).filter(|&v| rdeg[v] > 0) {
        members.entry(comps.find(v)).or_default().push(v);
    }
    let mut bad_roots: Vec<usize> = members
        .iter()
        .filter(|(_, vs)| {
            vs.iter().all(|&v| rdeg[v] == 2 * k)
                && vs
                    .iter()
                    .filter(|&&v| inner(v))
                    .all(|v| link_end.contains_key(v))
        })
        .map(|(&r, _)| r)
        .collect();
    bad_roots.sort_unstable();
    let mut in_bad = vec![false; n];
    for r in &bad_roots {
        for &v in &members[r] {
            in_bad[v] = true;
        }
    }
    if bad_roots.len() != t.bad_components.len() {
        m.trails.push(format!(
            "layer {i}: {} bad components recorded, {} found",
            t.bad_components.len(),
            bad_roots.len()
        ));
    }

    // Free links and link labels near bad components.
    let plan = rec.pools[i - 1];
    let (_, a, b, cc, dd) = (plan[0], plan[1], plan[2], plan[3], plan[4]);
    if !bad_roots.is_empty() {
        let free = t
            .links
            .iter()
            .filter(|r| !in_bad[r.u] || !in_bad[r.u2])
            .count();
        if free < k {
            m.free_links.push(format!(
                "layer {i}: bad component present with {free} free links, fewer than {k}"
            ));
        }
        let cap = (dd + a + b + cc).saturating_sub(k);
        for r in &t.links {
            for (end, e) in [(r.u, r.edge_u), (r.u2, r.edge_u2)] {
                if in_bad[end] && labels[e] > cap {
                    m.link_bound.push(format!(
                        "layer {i}: link edge at {end} has label {} above {cap}",
                        labels[e]
                    ));
                }
            }
        }
    }

    // Trails: walks, coverage, orientation.
    let mut used = vec![0usize; g.edge_count()];
    let target = rec.trail_sum(i);
    let (mut s, mut l) = (dd + a + 1, dd + a + b);
    for unit in &t.units {
        check_unit_shape(
            g,
            unit.kind,
            &unit.trails,
            i,
            &outer,
            &inner,
            &rdeg,
            &link_end,
            &in_bad,
            k,
            m,
        );
        for tr in &unit.trails {
            for &e in &tr.edges {
                used[e] += 1;
            }
        }

        // Cursor: labels come alternately from both ends of [s, l].
        if s + l != target {
            m.cursor.push(format!(
                "layer {i}: cursor sum {} before a {} unit, expected {target}",
                s + l,
                unit.kind.name()
            ));
        }
        let mut low = !matches!(
            unit.kind,
            UnitKind::Closed(StartCase::Inner) | UnitKind::Inner
        );
        for e in unit.trails.iter().flat_map(|tr| tr.edges.iter()) {
            let expected = if low { s } else { l };
            if labels[*e] != expected {
                m.cursor.push(format!(
                    "layer {i}: {} unit edge {e} has label {}, expected {expected}",
                    unit.kind.name(),
                    labels[*e]
                ));
            }
            if low {
                s += 1;
            } else {
                l = l.wrapping_sub(1);
            }
            low = !low;
        }

        // Pair sums at trail junctions.
        for tr in &unit.trails {
            let len = tr.edges.len();
            let mut junctions: Vec<(VertexId, EdgeId, EdgeId, bool)> = (1..len)
                .map(|p| (tr.vertices[p], tr.edges[p - 1], tr.edges[p], false))
                .collect();
            if tr.closed && len >= 2 {
                junctions.push((tr.vertices[0], tr.edges[len - 1], tr.edges[0], true));
            }
            for (v, e1, e2, wrap) in junctions {
                let sum = labels[e1] + labels[e2];
                let ok = if outer(v) {
                    sum >= target || (wrap && unit.kind == UnitKind::Closed(StartCase::Outer))
                } else if in_bad[v] {
                    sum <= target + 1
                } else {
                    sum <= target || (wrap && unit.kind == UnitKind::Closed(StartCase::Inner))
                };
                if !ok {
                    m.pair_sum.push(format!(
                        "layer {i}: edges {e1} and {e2} meet at {v} with label sum {sum} (target {target})",
                    ));
                }
            }
        }
    }
    if s != l.wrapping_add(1) {
        m.cursor.push(format!(
            "layer {i}: trail pool not used up exactly, left [{s}, {l}]"
        ));
    }
    for &e in &residual {
        if used[e] != 1 {
            m.trails.push(format!(
                "layer {i}: residual edge {e} lies on {} trails",
                used[e]
            ));
        }
    }
    if used.iter().sum::<usize>() != residual.len() {
        m.trails.push(format!(
            "layer {i}: trails use edges outside the residual graph"
        ));
    }
    bad_roots.len()
}

#[allow(clippy::too_many_arguments)]
fn check_unit_shape(
    g: &Graph,
    kind: UnitKind,
    trails: &[crate::trails::Trail],
    i: usize,
    outer: &dyn Fn(VertexId) -> bool,
    inner: &dyn Fn(VertexId) -> bool,
    rdeg: &[usize],
    link_end: &HashMap<VertexId, usize>,
    in_bad: &[bool],
    k: usize,
    m: &mut Messages,
) {
    for tr in trails {
        let walk_ok = tr.vertices.len() == tr.edges.len() + 1
            && !tr.edges.is_empty()
            && tr.edges.iter().enumerate().all(|(p, &e)| {
                let (a, b) = (tr.vertices[p], tr.vertices[p + 1]);
                g.endpoints(e) == (a.min(b), a.max(b))
            })
            && tr.closed == (tr.first() == tr.last());
        if !walk_ok {
            m.trails.push(format!(
                "layer {i}: {} unit holds a broken walk",
                kind.name()
            ));
            return;
        }
    }
    let shape_ok = match (kind, trails) {
        (UnitKind::Closed(case), [tr]) => {
            let u0 = tr.first();
            tr.closed
                && match case {
                    StartCase::Inner => {
                        inner(u0)
                            && !in_bad[u0]
                            && (rdeg[u0] < 2 * k || !link_end.contains_key(&u0))
                    }
                    StartCase::Outer => outer(u0) && !in_bad[u0] && rdeg[u0] < 2 * k,
                    StartCase::Bad => inner(u0) && in_bad[u0],
                }
        }
        (UnitKind::Outer, [tr]) => !tr.closed && outer(tr.first()) && outer(tr.last()),
        (UnitKind::Inner, [tr]) => !tr.closed && inner(tr.first()) && inner(tr.last()),
        (UnitKind::MixedPair, [p, q]) => {
            !p.closed
                && !q.closed
                && outer(p.first())
                && inner(p.last())
                && inner(q.first())
                && outer(q.last())
        }
        (UnitKind::MixedLone, [p]) => !p.closed && outer(p.first()) && inner(p.last()),
        _ => false,
    };
    if !shape_ok {
        m.trails.push(format!(
            "layer {i}: {} unit has the wrong shape or start vertex",
            kind.name()
        ));
    }
}
