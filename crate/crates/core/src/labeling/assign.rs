//! Label assignment for the four pools of a layer.

use super::plan::LayerPlan;
use crate::covering::CoveringPair;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::layering::BipartiteLayerView;
use crate::trails::{StartCase, Trail};

/// Two-ended cursor over the remaining trail labels `[s, l]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cursor {
    pub s: usize,
    pub l: usize,
}

impl Cursor {
    pub fn new(plan: &LayerPlan) -> Self {
        Cursor {
            s: plan.d + plan.a + 1,
            l: plan.d + plan.a + plan.b,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        self.s == self.l + 1
    }

    fn take(&mut self, low: bool) -> Result<usize> {
        if self.s > self.l {
            return Err(Error::internal(format!(
                "trail cursor overrun at s = {}, l = {}",
                self.s, self.l
            )));
        }
        Ok(if low {
            self.s += 1;
            self.s - 1
        } else {
            self.l -= 1;
            self.l + 1
        })
    }

    /// Draws `len` labels alternately from both ends, starting at the low
    /// end (`s, l, s+1, l-1, ...`) or the high end (`l, s, l-1, s+1, ...`).
    pub fn alternate(&mut self, len: usize, low_first: bool) -> Result<Vec<usize>> {
        (0..len)
            .map(|t| self.take((t % 2 == 0) == low_first))
            .collect()
    }
}

/// How a group of trails drawn in one go from the cursor is labeled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitKind {
    /// A closed trail covering a whole component.
    Closed(StartCase),
    /// An open trail with both ends in `L_{i-1}`.
    Outer,
    /// An open trail with both ends in `L_i`.
    Inner,
    /// Two mixed trails: the first starts in `L_{i-1}`, the second in `L_i`.
    MixedPair,
    /// The last mixed trail when their number is odd.
    MixedLone,
}

impl UnitKind {
    pub fn low_first(self) -> bool {
        !matches!(self, UnitKind::Closed(StartCase::Inner) | UnitKind::Inner)
    }

    pub fn name(self) -> &'static str {
        match self {
            UnitKind::Closed(StartCase::Inner) => "closed-inner",
            UnitKind::Closed(StartCase::Outer) => "closed-outer",
            UnitKind::Closed(StartCase::Bad) => "closed-bad",
            UnitKind::Outer => "outer",
            UnitKind::Inner => "inner",
            UnitKind::MixedPair => "mixed-pair",
            UnitKind::MixedLone => "mixed-lone",
        }
    }
}

/// One labeled unit: its trails in labeling order, the cursor it started
/// from, and the labels it drew (aligned with the concatenated edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailUnit {
    pub kind: UnitKind,
    pub trails: Vec<Trail>,
    pub cursor: Cursor,
    pub labels: Vec<usize>,
}

impl TrailUnit {
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.trails.iter().flat_map(|t| t.edges.iter().copied())
    }
}

/// Gives edges inside `L_i` the pool `I_i` in order of (lower, higher) endpoint.
pub fn assign_inner_labels(
    g: &Graph,
    edges: &[EdgeId],
    plan: &LayerPlan,
    labels: &mut [usize],
) -> Result<()> {
    if edges.len() != plan.a {
        return Err(Error::internal(format!(
            "layer {}: {} inner edges for a pool of {}",
            plan.index,
            edges.len(),
            plan.a
        )));
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable_by_key(|&e| g.endpoints(e));
    for (e, label) in sorted.into_iter().zip(plan.inner()) {
        labels[e] = label;
    }
    Ok(())
}

/// Labels every unit from the trail pool, checking that `s + l` keeps its
/// value before each unit and that the pool is used up exactly.
pub fn assign_trail_labels(
    units: Vec<(UnitKind, Vec<Trail>)>,
    plan: &LayerPlan,
    labels: &mut [usize],
) -> Result<Vec<TrailUnit>> {
    let mut cursor = Cursor::new(plan);
    let target = plan.trail_sum();
    let mut out = Vec::with_capacity(units.len());
    for (kind, trails) in units {
        if cursor.s + cursor.l != target {
            return Err(Error::internal(format!(
                "layer {}: cursor sum {} != {target} before a {} unit",
                plan.index,
                cursor.s + cursor.l,
                kind.name()
            )));
        }
        let start = cursor;
        let len = trails.iter().map(Trail::len).sum();
        let drawn = cursor.alternate(len, kind.low_first())?;
        let unit = TrailUnit {
            kind,
            trails,
            cursor: start,
            labels: drawn,
        };
        for (e, &label) in unit.edges().zip(&unit.labels) {
            labels[e] = label;
        }
        out.push(unit);
    }
    if !cursor.is_exhausted() {
        return Err(Error::internal(format!(
            "layer {}: trail pool left [{}, {}] unused",
            plan.index, cursor.s, cursor.l
        )));
    }
    Ok(out)
}

/// A link `u – center – u2` with its labels: `u` gets the low label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkRecord {
    pub center: VertexId,
    pub u: VertexId,
    pub u2: VertexId,
    pub edge_u: EdgeId,
    pub edge_u2: EdgeId,
    pub free: bool,
}

/// Labels linking edges from the link pool: free links first, then by
/// center. Link `j` (from 1) gets `base + j` on `u` and `base + c - j + 1`
/// on `u2`, where `u2` is kept outside bad components whenever possible.
///
/// `in_bad` tells whether an `L_i` vertex lies in a bad component.
pub fn assign_link_labels(
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    in_bad: &dyn Fn(VertexId) -> bool,
    plan: &LayerPlan,
    k: usize,
    labels: &mut [usize],
) -> Result<Vec<LinkRecord>> {
    let g = &view.graph;
    let mut records: Vec<LinkRecord> = pair
        .links
        .iter()
        .map(|l| {
            let [ey, ey2] = l.edges(g).expect("link edges exist");
            let (a, ea) = (view.y[l.y], view.global_edge(ey));
            let (b, eb) = (view.y[l.y2], view.global_edge(ey2));
            let free = !in_bad(a) || !in_bad(b);
            // Put the end outside bad components last; otherwise the lower id first.
            let a_first = if in_bad(a) != in_bad(b) {
                in_bad(a)
            } else {
                a < b
            };
            let ((u, edge_u), (u2, edge_u2)) = if a_first {
                ((a, ea), (b, eb))
            } else {
                ((b, eb), (a, ea))
            };
            LinkRecord {
                center: view.x[l.x],
                u,
                u2,
                edge_u,
                edge_u2,
                free,
            }
        })
        .collect();
    records.sort_by_key(|r| (!r.free, r.center));

    let base = plan.d + plan.a + plan.b;
    let c = plan.c;
    if c != 2 * records.len() {
        return Err(Error::internal(format!(
            "layer {}: link pool of {c} for {} links",
            plan.index,
            records.len()
        )));
    }
    let cap = (base + c).saturating_sub(k);
    for (j, r) in records.iter().enumerate() {
        let j = j + 1;
        labels[r.edge_u] = base + j;
        labels[r.edge_u2] = base + c - j + 1;
        for (end, e) in [(r.u, r.edge_u), (r.u2, r.edge_u2)] {
            if in_bad(end) && labels[e] > cap {
                return Err(Error::internal(format!(
                    "layer {}: link edge at {end} inside a bad component got label {} > {cap}",
                    plan.index, labels[e]
                )));
            }
        }
    }
    Ok(records)
}

/// Gives the σ edges of `L_i` the σ pool in order of (partial sum, vertex).
/// Returns the vertices in that order.
pub fn assign_sigma_labels(
    layer: &[VertexId],
    sigma: &[Option<EdgeId>],
    partial: &[u64],
    plan: &LayerPlan,
    labels: &mut [usize],
) -> Result<Vec<VertexId>> {
    let mut order = layer.to_vec();
    order.sort_unstable_by_key(|&v| (partial[v], v));
    if order.len() != plan.n {
        return Err(Error::internal(format!(
            "layer {}: {} vertices for a σ pool of {}",
            plan.index,
            order.len(),
            plan.n
        )));
    }
    for (&v, label) in order.iter().zip(plan.sigma()) {
        let e = sigma[v].ok_or_else(|| Error::internal(format!("vertex {v} has no σ edge")))?;
        labels[e] = label;
    }
    Ok(order)
}
