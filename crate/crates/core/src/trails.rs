//! Residual layer graphs and their decomposition into closed and open trails.

use std::fmt::Write as _;

use crate::covering::CoveringPair;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::layering::BipartiteLayerView;

/// A walk that repeats no edge. A closed trail ends where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub closed: bool,
    pub component: usize,
}

impl Trail {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("trail has a vertex")
    }

    pub fn reversed(&self) -> Trail {
        let mut t = self.clone();
        t.vertices.reverse();
        t.edges.reverse();
        t
    }

    /// Rotates a closed trail to start at position `pos`.
    pub fn rotated(&self, pos: usize) -> Trail {
        debug_assert!(self.closed);
        let m = self.edges.len();
        let edges: Vec<EdgeId> = (0..m).map(|t| self.edges[(pos + t) % m]).collect();
        let mut vertices: Vec<VertexId> = (0..m).map(|t| self.vertices[(pos + t) % m]).collect();
        vertices.push(vertices[0]);
        Trail {
            vertices,
            edges,
            closed: true,
            component: self.component,
        }
    }

    fn min_edge(&self) -> EdgeId {
        self.edges.iter().copied().min().unwrap_or(EdgeId::MAX)
    }
}

/// `G_σ` (layer edges minus σ edges) and `G'_σ` (also minus linking edges),
/// with the connected components of `G'_σ`.
///
/// Vertices are indexed locally: X vertex `x` is `x`, Y vertex `y` is
/// `view.x.len() + y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub g_sigma: Vec<EdgeId>,
    pub g_sigma_prime: Vec<EdgeId>,
    nx: usize,
    vertices: Vec<VertexId>,
    adj: Vec<Vec<(usize, EdgeId)>>,
    component_of: Vec<Option<usize>>,
    components: Vec<Vec<usize>>,
}

impl Residual {
    pub fn degree_local(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree in `G'_σ` of a global vertex of the layer view.
    pub fn degree(&self, v: VertexId) -> usize {
        self.local(v).map_or(0, |l| self.adj[l].len())
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Component of a global vertex, `None` if it has no `G'_σ` edge.
    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        self.local(v).and_then(|l| self.component_of[l])
    }

    /// Global vertex ids of component `c`, ascending local order.
    pub fn component_vertices(&self, c: usize) -> Vec<VertexId> {
        self.components[c]
            .iter()
            .map(|&l| self.vertices[l])
            .collect()
    }

    pub fn is_outer(&self, v: VertexId) -> bool {
        self.local(v).is_some_and(|l| l < self.nx)
    }

    fn local(&self, v: VertexId) -> Option<usize> {
        let (xs, ys) = self.vertices.split_at(self.nx);
        xs.binary_search(&v)
            .ok()
            .or_else(|| ys.binary_search(&v).ok().map(|p| p + self.nx))
    }
}

/// σ edges of a layer, one per Y vertex, as local edge indices of the view.
pub type LayerSigma = Vec<usize>;

/// Builds `G_σ` and `G'_σ` for one layer.
pub fn build_residual(
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    sigma: &LayerSigma,
) -> Result<Residual> {
    let g = &view.graph;
    let m = g.edge_count();
    let mut is_sigma = vec![false; m];
    for &e in sigma {
        is_sigma[e] = true;
    }
    let mut is_link = vec![false; m];
    for e in pair.link_edges(g) {
        if is_sigma[e] {
            return Err(Error::internal(format!(
                "sigma edge {} is a linking edge",
                view.global_edge(e)
            )));
        }
        is_link[e] = true;
    }
    let nx = view.x.len();
    let total = nx + view.y.len();
    let mut vertices = view.x.clone();
    vertices.extend(&view.y);
    let mut adj = vec![Vec::new(); total];
    let mut g_sigma = Vec::new();
    let mut g_sigma_prime = Vec::new();
    for j in 0..m {
        if is_sigma[j] {
            continue;
        }
        g_sigma.push(view.global_edge(j));
        if is_link[j] {
            continue;
        }
        let (x, y) = g.edge(j);
        let e = view.global_edge(j);
        g_sigma_prime.push(e);
        adj[x].push((nx + y, e));
        adj[nx + y].push((x, e));
    }
    for list in &mut adj {
        list.sort_unstable_by_key(|&(_, e)| e);
    }

    let mut component_of = vec![None; total];
    let mut components = Vec::new();
    for start in 0..total {
        if component_of[start].is_some() || adj[start].is_empty() {
            continue;
        }
        let c = components.len();
        let mut members = vec![start];
        component_of[start] = Some(c);
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &(w, _) in &adj[v] {
                if component_of[w].is_none() {
                    component_of[w] = Some(c);
                    members.push(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    Ok(Residual {
        g_sigma,
        g_sigma_prime,
        nx,
        vertices,
        adj,
        component_of,
        components,
    })
}

/// Trails decomposing `G'_σ` of one layer.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrailFamily {
    pub closed: Vec<Trail>,
    /// Open trails with both ends in `L_{i-1}`, oriented to start there.
    pub outer: Vec<Trail>,
    /// Open trails with both ends in `L_i`.
    pub inner: Vec<Trail>,
    /// Open trails with one end in each layer, oriented to start in `L_{i-1}`.
    pub mixed: Vec<Trail>,
}

impl TrailFamily {
    pub fn all(&self) -> impl Iterator<Item = &Trail> {
        self.closed
            .iter()
            .chain(&self.outer)
            .chain(&self.inner)
            .chain(&self.mixed)
    }

    pub fn edge_count(&self) -> usize {
        self.all().map(Trail::len).sum()
    }

    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (name, list) in [
            ("closed", &self.closed),
            ("outer", &self.outer),
            ("inner", &self.inner),
            ("mixed", &self.mixed),
        ] {
            for t in list {
                let vs: Vec<String> = t.vertices.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{name} c{} {}", t.component, vs.join("-"));
            }
        }
        out
    }
}

const DUMMY_BASE: usize = usize::MAX / 2;

/// Splits every component of `G'_σ` into trails: an Eulerian component
/// becomes one closed trail; otherwise odd vertices are paired by dummy
/// edges, an Euler circuit of the augmented component is taken, and it is
/// cut at the dummy edges. Circuits always leave a vertex by its lowest
/// unused edge id.
pub fn decompose_trails(res: &Residual) -> TrailFamily {
    let mut family = TrailFamily::default();
    for (c, members) in res.components.iter().enumerate() {
        let odd: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| res.adj[v].len() % 2 == 1)
            .collect();
        let mut adj: Vec<(usize, Vec<(usize, usize)>)> =
            members.iter().map(|&v| (v, res.adj[v].clone())).collect();
        let slot = |v: usize| members.binary_search(&v).expect("member");
        for (k, pair) in odd.chunks(2).enumerate() {
            let key = DUMMY_BASE + k;
            adj[slot(pair[0])].1.push((pair[1], key));
            adj[slot(pair[1])].1.push((pair[0], key));
        }
        let start = odd.first().copied().unwrap_or(members[0]);
        let circuit = euler_circuit(members, adj, start);

        let to_trail = |steps: &[(usize, usize)], from: usize, closed: bool| {
            let mut vertices = vec![res.vertices[from]];
            let mut edges = Vec::with_capacity(steps.len());
            for &(w, e) in steps {
                vertices.push(res.vertices[w]);
                edges.push(e);
            }
            Trail {
                vertices,
                edges,
                closed,
                component: c,
            }
        };
        if odd.is_empty() {
            family.closed.push(to_trail(&circuit, start, true));
            continue;
        }
        // The circuit starts at an odd vertex; rotate it to begin right
        // after a dummy edge, then cut at every dummy edge.
        let first_dummy = circuit
            .iter()
            .position(|&(_, e)| e >= DUMMY_BASE)
            .expect("augmented circuit uses a dummy edge");
        let m = circuit.len();
        let rotated: Vec<(usize, usize)> =
            (1..=m).map(|t| circuit[(first_dummy + t) % m]).collect();
        let mut from = circuit[first_dummy].0;
        let mut current: Vec<(usize, usize)> = Vec::new();
        let mut open = Vec::new();
        for (w, e) in rotated {
            if e >= DUMMY_BASE {
                open.push(to_trail(&current, from, false));
                current.clear();
                from = w;
            } else {
                current.push((w, e));
            }
        }
        for t in open {
            let a_outer = res.is_outer(t.first());
            let b_outer = res.is_outer(t.last());
            match (a_outer, b_outer) {
                (true, true) => family.outer.push(lower_first_edge(t)),
                (false, false) => family.inner.push(lower_first_edge(t)),
                (true, false) => family.mixed.push(t),
                (false, true) => family.mixed.push(t.reversed()),
            }
        }
    }
    for list in [
        &mut family.closed,
        &mut family.outer,
        &mut family.inner,
        &mut family.mixed,
    ] {
        list.sort_by_key(Trail::min_edge);
    }
    family
}

fn lower_first_edge(t: Trail) -> Trail {
    let rev = t.reversed();
    if rev.edges.first() < t.edges.first() {
        rev
    } else {
        t
    }
}

/// Hierholzer's algorithm on a multigraph given as `(vertex, [(neighbor, key)])`.
/// Returns the circuit from `start` as `(next vertex, edge key)` steps.
fn euler_circuit(
    members: &[usize],
    mut adj: Vec<(usize, Vec<(usize, usize)>)>,
    start: usize,
) -> Vec<(usize, usize)> {
    for (_, list) in &mut adj {
        list.sort_unstable_by_key(|&(_, key)| key);
    }
    let slot = |v: usize| members.binary_search(&v).expect("member");
    let mut used = std::collections::HashSet::new();
    let mut cursor = vec![0usize; adj.len()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut out = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        let s = slot(v);
        let list = &adj[s].1;
        while cursor[s] < list.len() && used.contains(&list[cursor[s]].1) {
            cursor[s] += 1;
        }
        if cursor[s] < list.len() {
            let (w, key) = list[cursor[s]];
            used.insert(key);
            stack.push((w, Some(key)));
        } else {
            let (v, key) = stack.pop().expect("non-empty");
            if let Some(key) = key {
                out.push((v, key));
            }
        }
    }
    // Pops come out in reverse circuit order, each with the edge it was reached by.
    out.reverse();
    out
}

/// Whether each component of `G'_σ` is bad: `2k`-regular with every `L_i`
/// vertex an end of some link.
pub fn detect_bad_components(
    res: &Residual,
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    k: usize,
) -> Vec<bool> {
    let ends = pair.end_link(&view.graph);
    res.components
        .iter()
        .map(|members| {
            members.iter().all(|&v| res.adj[v].len() == 2 * k)
                && members
                    .iter()
                    .filter(|&&v| v >= res.nx)
                    .all(|&v| ends[v - res.nx].is_some())
        })
        .collect()
}

/// How the first edge of a closed trail is labeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartCase {
    /// Start in `L_i` at a vertex of degree at most `2k - 1` or not covered by a link.
    Inner,
    /// Start in `L_{i-1}` at a vertex of degree at most `2k - 1`.
    Outer,
    /// The trail covers a bad component; start at its lowest `L_i` vertex.
    Bad,
}

/// Picks the start vertex `u_0` of a closed trail and rotates the trail to
/// it. Among the two directions out of `u_0` the one with the lower first
/// edge id is used.
pub fn choose_closed_start(
    trail: &Trail,
    res: &Residual,
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    bad: bool,
    k: usize,
) -> Result<(Trail, StartCase)> {
    let ends = pair.end_link(&view.graph);
    let link_covered = |v: VertexId| view.local_y(v).is_some_and(|y| ends[y].is_some());
    let mut members: Vec<VertexId> = trail.vertices[..trail.len()].to_vec();
    members.sort_unstable();
    members.dedup();
    let low_degree = |v: VertexId| res.degree(v) < 2 * k;

    let choice = if bad {
        members
            .iter()
            .copied()
            .find(|&v| !res.is_outer(v))
            .map(|v| (v, StartCase::Bad))
    } else {
        members
            .iter()
            .copied()
            .find(|&v| !res.is_outer(v) && (low_degree(v) || !link_covered(v)))
            .map(|v| (v, StartCase::Inner))
            .or_else(|| {
                members
                    .iter()
                    .copied()
                    .find(|&v| res.is_outer(v) && low_degree(v))
                    .map(|v| (v, StartCase::Outer))
            })
    };
    let (u0, case) = choice.ok_or_else(|| {
        Error::internal(format!(
            "closed trail in component {} has no admissible start vertex",
            trail.component
        ))
    })?;
    let pos = trail
        .vertices
        .iter()
        .position(|&v| v == u0)
        .expect("start vertex on trail");
    let forward = trail.rotated(pos);
    let backward = forward.reversed();
    let oriented = if backward.edges.first() < forward.edges.first() {
        backward
    } else {
        forward
    };
    Ok((oriented, case))
}
