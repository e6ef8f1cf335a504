//! Independent checking of labelings.
//!
//! Everything here is recomputed from the graph and the edge labels: vertex
//! sums, BFS layers, label pools. The engine's own sums and layering are
//! never consulted, only its recorded decisions (roles, covering pairs,
//! trails), which are then checked for consistency with the labels.

mod generate;
mod oracle;
mod stress;
mod trace;

use std::fmt::Write as _;

pub use generate::{generate_regular, random_bipartite};
pub use oracle::{brute_force_antimagic, OracleOutcome};
pub use stress::{stress, InstanceResult, StressConfig, StressSummary};

use crate::graph::{EdgeId, Graph, VertexId};
use crate::labeling::{Construction, EdgeRole};

const MAX_MESSAGES: usize = 50;

/// Partial sums of one layer against its separating bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerBounds {
    pub index: usize,
    pub bound: u64,
    /// Largest partial sum in `L_i`.
    pub max_inner: u64,
    /// Smallest partial sum in `L_{i-1}` (the full sum at the root).
    pub min_outer: u64,
}

impl LayerBounds {
    pub fn inner_ok(&self) -> bool {
        self.max_inner <= self.bound
    }

    pub fn outer_ok(&self) -> bool {
        self.min_outer >= self.bound
    }

    /// Distance to the nearer of the two violations; negative if violated.
    pub fn slack(&self) -> i64 {
        let b = self.bound as i64;
        (b - self.max_inner as i64).min(self.min_outer as i64 - b)
    }
}

/// Outcome of verification. `None` means the check did not apply.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub bijection_ok: bool,
    pub distinct_sums_ok: bool,
    /// Vertex sums recomputed from the labels.
    pub sums: Vec<u64>,
    pub layer_monotone_ok: Option<bool>,
    pub interval_ok: Option<bool>,
    pub bounds: Vec<LayerBounds>,
    pub covering_ok: Option<bool>,
    pub trails_ok: Option<bool>,
    pub cursor_ok: Option<bool>,
    pub pair_sum_ok: Option<bool>,
    pub free_links_ok: Option<bool>,
    pub link_bound_ok: Option<bool>,
    /// Bad components found over all layers.
    pub bad_components: usize,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn bounds_ok(&self) -> bool {
        self.bounds.iter().all(|b| b.inner_ok() && b.outer_ok())
    }

    pub fn passed(&self) -> bool {
        self.bijection_ok
            && self.distinct_sums_ok
            && self.bounds_ok()
            && [
                self.layer_monotone_ok,
                self.interval_ok,
                self.covering_ok,
                self.trails_ok,
                self.cursor_ok,
                self.pair_sum_ok,
                self.free_links_ok,
                self.link_bound_ok,
            ]
            .iter()
            .all(|c| c.unwrap_or(true))
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.failures.first().map(String::as_str)
    }

    /// Smallest bound slack over all layers.
    pub fn min_slack(&self) -> Option<i64> {
        self.bounds.iter().map(LayerBounds::slack).min()
    }

    pub fn render(&self) -> String {
        fn word(ok: bool) -> &'static str {
            if ok {
                "pass"
            } else {
                "FAIL"
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "bijection: {}", word(self.bijection_ok));
        let _ = writeln!(out, "distinct sums: {}", word(self.distinct_sums_ok));
        for (name, check) in [
            ("layer monotone", self.layer_monotone_ok),
            ("label pools", self.interval_ok),
            ("covering pairs", self.covering_ok),
            ("trails", self.trails_ok),
            ("trail cursor", self.cursor_ok),
            ("pair sums", self.pair_sum_ok),
            ("free links", self.free_links_ok),
            ("link labels in bad components", self.link_bound_ok),
        ] {
            if let Some(ok) = check {
                let _ = writeln!(out, "{name}: {}", word(ok));
            }
        }
        for b in &self.bounds {
            let _ = writeln!(
                out,
                "layer {} bound {}: max inner {} {}, min outer {} {}",
                b.index,
                b.bound,
                b.max_inner,
                word(b.inner_ok()),
                b.min_outer,
                word(b.outer_ok())
            );
        }
        if !self.bounds.is_empty() {
            let _ = writeln!(out, "bad components: {}", self.bad_components);
        }
        let _ = writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        );
        if let Some(f) = self.first_failure() {
            let _ = writeln!(out, "first failure: {f}");
        }
        out
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < MAX_MESSAGES {
            self.failures.push(msg);
        }
    }

    /// Records the messages of one check and returns whether it passed.
    fn record(&mut self, messages: Vec<String>) -> Option<bool> {
        let ok = messages.is_empty();
        for m in messages {
            self.fail(m);
        }
        Some(ok)
    }
}

/// Bijection onto `1..=|E|` and pairwise distinct vertex sums.
pub fn verify_antimagic(g: &Graph, labels: &[usize]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let m = g.edge_count();
    report.bijection_ok = labels.len() == m;
    if !report.bijection_ok {
        report.fail(format!("{} labels for {m} edges", labels.len()));
    } else {
        let mut seen = vec![None; m + 1];
        for (e, &l) in labels.iter().enumerate() {
            if l == 0 || l > m {
                report.bijection_ok = false;
                report.fail(format!("edge {e} has label {l} outside [1, {m}]"));
            } else if let Some(other) = seen[l].replace(e) {
                report.bijection_ok = false;
                report.fail(format!("label {l} used by edges {other} and {e}"));
            }
        }
    }
    if labels.len() == m {
        report.sums = (0..g.vertex_count())
            .map(|v| g.neighbors(v).iter().map(|&(_, e)| labels[e] as u64).sum())
            .collect();
    }
    let mut order: Vec<VertexId> = (0..report.sums.len()).collect();
    order.sort_by_key(|&v| (report.sums[v], v));
    report.distinct_sums_ok = labels.len() == m;
    for w in order.windows(2) {
        if report.sums[w[0]] == report.sums[w[1]] {
            report.distinct_sums_ok = false;
            let msg = format!(
                "vertices {} and {} share the sum {}",
                w[0], w[1], report.sums[w[0]]
            );
            report.fail(msg);
        }
    }
    report
}

/// BFS distances from `root`.
pub(crate) fn distances(g: &Graph, root: VertexId) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([root]);
    dist[root] = Some(0);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v].expect("queued vertices have a distance");
        for &(w, _) in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(dv + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Layer structure recomputed from the graph, the root and the edge roles.
pub(crate) struct Recomputed {
    pub k: usize,
    pub dist: Vec<usize>,
    pub layers: Vec<Vec<VertexId>>,
    /// σ edge of every vertex but the root.
    pub sigma: Vec<Option<EdgeId>>,
    /// `(n, a, b, c, d)` per layer, indexed by `i - 1`.
    pub pools: Vec<[usize; 5]>,
}

impl Recomputed {
    pub fn class(&self, g: &Graph, e: EdgeId) -> usize {
        let (u, v) = g.endpoints(e);
        self.dist[u].max(self.dist[v])
    }

    pub fn trail_sum(&self, i: usize) -> usize {
        let [_, a, b, _, d] = self.pools[i - 1];
        2 * (d + a) + b + 1
    }

    pub fn bound(&self, i: usize) -> u64 {
        let [_, a, b, c, d] = self.pools[i - 1];
        let k = self.k;
        ((2 * k + 1) * (d + a) + (k + 1) * b + c + k) as u64
    }

    /// Pool of each role in layer `i` as inclusive ranges.
    pub fn pool(&self, i: usize, role: EdgeRole) -> (usize, usize) {
        let [n, a, b, c, d] = self.pools[i - 1];
        match role {
            EdgeRole::Inner => (d + 1, d + a),
            EdgeRole::Trail => (d + a + 1, d + a + b),
            EdgeRole::Link => (d + a + b + 1, d + a + b + c),
            EdgeRole::Sigma => (d + a + b + c + 1, d + a + b + c + n),
        }
    }
}

fn recompute(
    g: &Graph,
    root: VertexId,
    roles: &[EdgeRole],
    report: &mut VerificationReport,
) -> Option<Recomputed> {
    let n = g.vertex_count();
    if root >= n || roles.len() != g.edge_count() {
        report.fail(format!("root {root} or role list does not fit the graph"));
        return None;
    }
    let deg = g.degree(root);
    if deg < 4 || deg % 2 == 1 || (0..n).any(|v| g.degree(v) != deg) {
        report.fail("graph is not (2k+2)-regular with k >= 1".into());
        return None;
    }
    let dist: Vec<usize> = match distances(g, root).into_iter().collect::<Option<_>>() {
        Some(d) => d,
        None => {
            report.fail("graph is disconnected".into());
            return None;
        }
    };
    let p = dist.iter().copied().max().unwrap_or(0);
    let mut layers = vec![Vec::new(); p + 1];
    for v in 0..n {
        layers[dist[v]].push(v);
    }

    let mut messages = Vec::new();
    let mut sigma = vec![None; n];
    let mut counts = vec![[0usize; 4]; p + 1];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (near, far) = if dist[u] <= dist[v] { (u, v) } else { (v, u) };
        let i = dist[far];
        let same = dist[near] == dist[far];
        match (roles[e], same) {
            (EdgeRole::Inner, true) => counts[i][1] += 1,
            (EdgeRole::Trail, false) => counts[i][2] += 1,
            (EdgeRole::Link, false) => counts[i][3] += 1,
            (EdgeRole::Sigma, false) => {
                if sigma[far].replace(e).is_some() {
                    messages.push(format!("vertex {far} has two σ edges"));
                }
            }
            (role, _) => messages.push(format!(
                "edge {u}-{v} has role {} but joins layers {} and {}",
                role.name(),
                dist[u],
                dist[v]
            )),
        }
    }
    for v in (0..n).filter(|&v| v != root) {
        if sigma[v].is_none() {
            messages.push(format!("vertex {v} has no σ edge"));
        }
    }
    let mut pools = vec![[0usize; 5]; p];
    let mut d = 0;
    for i in (1..=p).rev() {
        let [_, a, b, c] = counts[i];
        let nn = layers[i].len();
        pools[i - 1] = [nn, a, b, c, d];
        d += nn + a + b + c;
    }
    let ok = messages.is_empty();
    report.interval_ok = report.record(messages);
    ok.then_some(Recomputed {
        k: (deg - 2) / 2,
        dist,
        layers,
        sigma,
        pools,
    })
}

/// Basic checks plus everything that follows from a root and edge roles:
/// label pools, layer monotonicity and the per-layer bounds.
pub fn verify_certificate(
    g: &Graph,
    labels: &[usize],
    root: VertexId,
    roles: &[EdgeRole],
) -> VerificationReport {
    certificate_checks(g, labels, root, roles).0
}

fn certificate_checks(
    g: &Graph,
    labels: &[usize],
    root: VertexId,
    roles: &[EdgeRole],
) -> (VerificationReport, Option<Recomputed>) {
    let mut report = verify_antimagic(g, labels);
    if !report.bijection_ok {
        return (report, None);
    }
    let Some(rec) = recompute(g, root, roles, &mut report) else {
        report.interval_ok = Some(false);
        return (report, None);
    };

    let mut messages = Vec::new();
    for (e, &role) in roles.iter().enumerate() {
        let i = rec.class(g, e);
        let (lo, hi) = rec.pool(i, role);
        if labels[e] < lo || labels[e] > hi {
            messages.push(format!(
                "edge {e} ({} of layer {i}) has label {} outside [{lo}, {hi}]",
                role.name(),
                labels[e]
            ));
        }
    }
    report.interval_ok = report.record(messages);

    let sums = report.sums.clone();
    let mut messages = Vec::new();
    for i in 1..rec.layers.len() {
        let inner_max = rec.layers[i].iter().map(|&v| sums[v]).max().unwrap_or(0);
        let outer_min = rec.layers[i - 1]
            .iter()
            .map(|&v| sums[v])
            .min()
            .unwrap_or(0);
        if inner_max >= outer_min {
            messages.push(format!(
                "layer {i} reaches sum {inner_max}, layer {} drops to {outer_min}",
                i - 1
            ));
        }
    }
    report.layer_monotone_ok = report.record(messages);

    let partial = |v: VertexId| match rec.sigma[v] {
        Some(e) => sums[v] - labels[e] as u64,
        None => sums[v],
    };
    for i in 1..rec.layers.len() {
        let b = LayerBounds {
            index: i,
            bound: rec.bound(i),
            max_inner: rec.layers[i].iter().map(|&v| partial(v)).max().unwrap_or(0),
            min_outer: rec.layers[i - 1]
                .iter()
                .map(|&v| partial(v))
                .min()
                .unwrap_or(0),
        };
        if !b.inner_ok() {
            report.fail(format!(
                "layer {i}: partial sum {} above the bound {}",
                b.max_inner, b.bound
            ));
        }
        if !b.outer_ok() {
            report.fail(format!(
                "layer {}: partial sum {} below the bound {} of layer {i}",
                i - 1,
                b.min_outer,
                b.bound
            ));
        }
        report.bounds.push(b);
    }
    (report, Some(rec))
}

/// Everything: the certificate checks plus the recorded covering pairs,
/// trails, cursor discipline, pair sums and link placement of every layer.
pub fn verify_construction(g: &Graph, c: &Construction) -> VerificationReport {
    let roles = c.roles(g);
    let (mut report, rec) = certificate_checks(g, &c.labels, c.root, &roles);
    let Some(rec) = rec else {
        return report;
    };
    if c.layers.len() + 1 != rec.layers.len() {
        report.fail(format!(
            "construction has {} layers, the graph {}",
            c.layers.len(),
            rec.layers.len() - 1
        ));
        report.trails_ok = Some(false);
        return report;
    }
    trace::check_layers(g, c, &roles, &rec, &mut report);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, octahedron};
    use crate::labeling::label_graph;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_passes() {
        let r = verify_antimagic(&triangle(), &[1, 2, 3]);
        assert!(r.passed());
        assert_eq!(r.sums, vec![3, 4, 5]);
    }

    #[test]
    fn single_edge_fails() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = verify_antimagic(&g, &[1]);
        assert!(r.bijection_ok && !r.distinct_sums_ok && !r.passed());
        assert!(r.first_failure().unwrap().contains("share the sum"));
    }

    #[test]
    fn repeated_label_is_not_a_bijection() {
        let r = verify_antimagic(&triangle(), &[1, 1, 2]);
        assert!(!r.bijection_ok && !r.passed());
        assert!(!verify_antimagic(&triangle(), &[1, 2]).passed());
        assert!(!verify_antimagic(&triangle(), &[0, 1, 2]).passed());
    }

    #[test]
    fn pipeline_output_passes_every_check() {
        for g in [complete(5), octahedron()] {
            let c = label_graph(&g, 0).unwrap();
            let r = verify_construction(&g, &c);
            assert!(r.passed(), "{}", r.render());
            for check in [
                r.layer_monotone_ok,
                r.interval_ok,
                r.covering_ok,
                r.trails_ok,
                r.cursor_ok,
                r.pair_sum_ok,
            ] {
                assert_eq!(check, Some(true));
            }
        }
        let g = complete(5);
        let r = verify_construction(&g, &label_graph(&g, 0).unwrap());
        assert_eq!(r.sums, vec![34, 13, 18, 21, 24]);
        assert_eq!(r.bounds[0].bound, 19);
        assert_eq!(r.bounds[0].max_inner, 14);
    }

    #[test]
    fn tampering_is_caught() {
        let g = octahedron();
        let c = label_graph(&g, 0).unwrap();
        // Swapping the labels of two edges from different pools breaks the pools.
        let roles = c.roles(&g);
        let a = roles.iter().position(|&r| r == EdgeRole::Sigma).unwrap();
        let b = roles.iter().position(|&r| r == EdgeRole::Inner).unwrap();
        let mut bad = c.clone();
        bad.labels.swap(a, b);
        let r = verify_construction(&g, &bad);
        assert_eq!(r.interval_ok, Some(false));
        assert!(!r.passed());
    }

    #[test]
    fn wrong_roles_are_rejected() {
        let g = complete(5);
        let c = label_graph(&g, 0).unwrap();
        let mut roles = c.roles(&g);
        let e = g.edge_between(1, 2).unwrap();
        roles[e] = EdgeRole::Sigma;
        let r = verify_certificate(&g, &c.labels, 0, &roles);
        assert_eq!(r.interval_ok, Some(false));
    }
}
