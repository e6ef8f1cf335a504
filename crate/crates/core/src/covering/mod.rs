//! Covering pairs `(F, M)` of bipartite layer graphs.
//!
//! `F` is a family of vertex-disjoint Y-links `y–x–y'` and `M` a matching;
//! together they must cover every X vertex whose degree equals the bound `d`.
//! Construction pads the graph to a `(d, d+1)`-biregular supergraph, grows a
//! link family by exchange moves until no Y vertex outside `N(X_F)` has a
//! neighbor outside `X'_F`, matches the remaining X side by augmenting paths,
//! then restricts back and reduces to the irreducible (W-shape) form.

mod free_links;
mod links;
mod matching;
mod pad;
mod reduce;

use std::fmt::Write as _;

pub use free_links::{count_free_links, free_flags, maximize_free_links, FreeLinkOutcome};
pub use links::{maximize_link_family, LinkFamilyState};
pub use matching::hall_matching;
pub use pad::{pad_to_biregular, Padded};
pub use reduce::restrict_and_reduce;

use crate::error::{Error, Result};
use crate::layering::{Bipartite, BipartiteLayerView};

/// A path `y – x – y2` with both ends on the Y side (local indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YLink {
    pub y: usize,
    pub x: usize,
    pub y2: usize,
}

impl YLink {
    pub fn new(y: usize, x: usize, y2: usize) -> Self {
        YLink { y, x, y2 }
    }

    pub fn ends(&self) -> [usize; 2] {
        [self.y, self.y2]
    }

    /// The two link edges as local edge indices.
    pub fn edges(&self, g: &Bipartite) -> Option<[usize; 2]> {
        Some([
            g.edge_between(self.x, self.y)?,
            g.edge_between(self.x, self.y2)?,
        ])
    }
}

/// Links `F` and matching `M` over a bipartite graph, in local indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoveringPair {
    pub links: Vec<YLink>,
    /// Local edge indices, ascending.
    pub matching: Vec<usize>,
}

impl CoveringPair {
    pub fn new(mut links: Vec<YLink>, mut matching: Vec<usize>) -> Self {
        links.sort_unstable_by_key(|l| (l.x, l.y, l.y2));
        matching.sort_unstable();
        CoveringPair { links, matching }
    }

    /// Partner edge of each X vertex under `M`.
    pub fn x_matched(&self, g: &Bipartite) -> Vec<Option<usize>> {
        let mut out = vec![None; g.x_count()];
        for &e in &self.matching {
            out[g.edge(e).0] = Some(e);
        }
        out
    }

    /// Partner edge of each Y vertex under `M`.
    pub fn y_matched(&self, g: &Bipartite) -> Vec<Option<usize>> {
        let mut out = vec![None; g.y_count()];
        for &e in &self.matching {
            out[g.edge(e).1] = Some(e);
        }
        out
    }

    /// Index into `links` of the link centered at each X vertex.
    pub fn center_link(&self, g: &Bipartite) -> Vec<Option<usize>> {
        let mut out = vec![None; g.x_count()];
        for (i, l) in self.links.iter().enumerate() {
            out[l.x] = Some(i);
        }
        out
    }

    /// Index into `links` of the link ending at each Y vertex.
    pub fn end_link(&self, g: &Bipartite) -> Vec<Option<usize>> {
        let mut out = vec![None; g.y_count()];
        for (i, l) in self.links.iter().enumerate() {
            out[l.y] = Some(i);
            out[l.y2] = Some(i);
        }
        out
    }

    /// All linking edges as local edge indices, ascending.
    pub fn link_edges(&self, g: &Bipartite) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .links
            .iter()
            .flat_map(|l| l.edges(g).expect("link edges exist"))
            .collect();
        out.sort_unstable();
        out
    }

    /// Checks the covering-pair definition: disjoint links, a matching, and
    /// every X vertex of degree `d` covered.
    pub fn validate(&self, g: &Bipartite, d: usize) -> Result<()> {
        let mut x_used = vec![false; g.x_count()];
        let mut y_end = vec![false; g.y_count()];
        for l in &self.links {
            if l.x >= g.x_count() || l.y >= g.y_count() || l.y2 >= g.y_count() {
                return Err(Error::internal(format!("link {l:?} out of range")));
            }
            if l.y == l.y2 || l.edges(g).is_none() {
                return Err(Error::internal(format!("link {l:?} is not a path")));
            }
            if std::mem::replace(&mut x_used[l.x], true) {
                return Err(Error::internal(format!("links share center {}", l.x)));
            }
            for y in l.ends() {
                if std::mem::replace(&mut y_end[y], true) {
                    return Err(Error::internal(format!("links share end {y}")));
                }
            }
        }
        let mut mx = vec![false; g.x_count()];
        let mut my = vec![false; g.y_count()];
        for &e in &self.matching {
            if e >= g.edge_count() {
                return Err(Error::internal(format!("matching edge {e} out of range")));
            }
            let (x, y) = g.edge(e);
            if std::mem::replace(&mut mx[x], true) || std::mem::replace(&mut my[y], true) {
                return Err(Error::internal(format!("matching edges meet at edge {e}")));
            }
        }
        for x in 0..g.x_count() {
            if g.x_degree(x) == d && !mx[x] && !x_used[x] {
                return Err(Error::internal(format!(
                    "X vertex {x} of degree {d} uncovered"
                )));
            }
        }
        Ok(())
    }

    /// Checks the irreducible form on top of [`validate`](Self::validate):
    /// link centers have degree `d` and are unmatched, and every neighbor of
    /// a link center (in particular both link ends) is matched.
    pub fn check_irreducible(&self, g: &Bipartite, d: usize) -> Result<()> {
        self.validate(g, d)?;
        let mx = self.x_matched(g);
        let my = self.y_matched(g);
        for l in &self.links {
            if g.x_degree(l.x) != d {
                return Err(Error::internal(format!(
                    "link center {} has degree {} != {d}",
                    l.x,
                    g.x_degree(l.x)
                )));
            }
            if mx[l.x].is_some() {
                return Err(Error::internal(format!(
                    "link center {} is also matched",
                    l.x
                )));
            }
            if let Some(&(y, _)) = g.x_neighbors(l.x).iter().find(|&&(y, _)| my[y].is_none()) {
                return Err(Error::internal(format!(
                    "link center {} has unmatched neighbor {y}",
                    l.x
                )));
            }
        }
        Ok(())
    }

    /// Text dump of `F` and `M` in global vertex ids.
    pub fn dump(&self, view: &BipartiteLayerView) -> String {
        let mut out = String::new();
        for l in &self.links {
            let _ = writeln!(out, "link {} {} {}", view.y[l.y], view.x[l.x], view.y[l.y2]);
        }
        for &e in &self.matching {
            let (x, y) = view.graph.edge(e);
            let _ = writeln!(out, "match {} {}", view.x[x], view.y[y]);
        }
        out
    }
}

/// Builds an irreducible `d`-covering pair of `g`.
///
/// X vertices of degree above `d` need no cover and are set aside before
/// padding; this is how the innermost layer (`X = {root}`) is handled.
pub fn build_covering_pair(g: &Bipartite, d: usize) -> Result<CoveringPair> {
    if d < 3 {
        return Err(Error::InvalidParameters(format!(
            "covering bound d = {d} < 3"
        )));
    }
    if let Some(y) = (0..g.y_count()).find(|&y| g.y_degree(y) > d + 1) {
        return Err(Error::InvalidParameters(format!(
            "Y vertex {y} has degree {} > d + 1",
            g.y_degree(y)
        )));
    }
    let kept: Vec<usize> = (0..g.x_count()).filter(|&x| g.x_degree(x) <= d).collect();
    let (sub, edge_map) = if kept.len() == g.x_count() {
        (g.clone(), (0..g.edge_count()).collect::<Vec<_>>())
    } else {
        let mut local = vec![usize::MAX; g.x_count()];
        for (i, &x) in kept.iter().enumerate() {
            local[x] = i;
        }
        let mut edges = Vec::new();
        let mut map = Vec::new();
        for (j, &(x, y)) in g.edges().iter().enumerate() {
            if local[x] != usize::MAX {
                edges.push((local[x], y));
                map.push(j);
            }
        }
        (Bipartite::new(kept.len(), g.y_count(), edges)?, map)
    };

    let padded = pad_to_biregular(&sub, d)?;
    let state = maximize_link_family(&padded.graph, d)?;
    let matching = hall_matching(&padded.graph, d, &state.centers)?;
    let pair = CoveringPair::new(state.links.clone(), matching);
    pair.validate(&padded.graph, d)?;
    let reduced = restrict_and_reduce(&padded, &pair, d)?;

    let pair = CoveringPair::new(
        reduced
            .links
            .iter()
            .map(|l| YLink::new(l.y, kept[l.x], l.y2))
            .collect(),
        reduced.matching.iter().map(|&e| edge_map[e]).collect(),
    );
    pair.check_irreducible(g, d)?;
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(nx: usize, ny: usize) -> Bipartite {
        let edges = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        Bipartite::new(nx, ny, edges).unwrap()
    }

    #[test]
    fn k43_needs_exactly_one_link() {
        let g = complete(4, 3);
        let pair = build_covering_pair(&g, 3).unwrap();
        assert_eq!(pair.links.len(), 1);
        assert_eq!(pair.matching.len(), 3);
        pair.check_irreducible(&g, 3).unwrap();
    }

    #[test]
    fn matching_suffices_when_hall_holds() {
        let g = complete(2, 3);
        let pair = build_covering_pair(&g, 3).unwrap();
        assert!(pair.links.is_empty());
        assert_eq!(pair.matching.len(), 2);
    }

    #[test]
    fn over_degree_root_needs_nothing() {
        // X = {root} joined to four Y vertices, d = 3.
        let g = complete(1, 4);
        let pair = build_covering_pair(&g, 3).unwrap();
        assert_eq!(pair, CoveringPair::default());
    }

    #[test]
    fn validate_rejects_broken_pairs() {
        let g = complete(2, 3);
        let uncovered = CoveringPair::new(vec![], vec![g.edge_between(0, 0).unwrap()]);
        assert!(uncovered.validate(&g, 3).is_err());
        let shared = CoveringPair::new(
            vec![YLink::new(0, 0, 1)],
            vec![g.edge_between(1, 0).unwrap()],
        );
        shared.validate(&g, 3).unwrap();
        assert!(shared.check_irreducible(&g, 3).is_err());
        let overlapping = CoveringPair::new(vec![YLink::new(0, 0, 1), YLink::new(1, 1, 2)], vec![]);
        assert!(overlapping.validate(&g, 3).is_err());
    }

    #[test]
    fn rejects_small_bound_and_heavy_y() {
        assert!(build_covering_pair(&complete(2, 2), 2).is_err());
        assert!(build_covering_pair(&complete(5, 1), 3).is_err());
    }
}
