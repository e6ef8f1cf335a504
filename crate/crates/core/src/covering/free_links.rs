use super::{CoveringPair, YLink};
use crate::error::{Error, Result};
use crate::layering::BipartiteLayerView;
use crate::trails::{build_residual, detect_bad_components, LayerSigma, Residual};

/// Result of free-link maximization for one layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeLinkOutcome {
    pub pair: CoveringPair,
    pub free_links: usize,
    pub has_bad_component: bool,
    pub exchanges: usize,
}

/// Whether each link of `pair` is free: at least one end outside every bad
/// component of `G'_σ`.
pub fn free_flags(
    res: &Residual,
    bad: &[bool],
    view: &BipartiteLayerView,
    pair: &CoveringPair,
) -> Vec<bool> {
    let in_bad = |y: usize| res.component_of(view.y[y]).is_some_and(|c| bad[c]);
    pair.links
        .iter()
        .map(|l| !in_bad(l.y) || !in_bad(l.y2))
        .collect()
}

/// Number of free links and whether any bad component exists.
pub fn count_free_links(
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    sigma: &LayerSigma,
    k: usize,
) -> Result<(usize, bool)> {
    let res = build_residual(view, pair, sigma)?;
    let bad = detect_bad_components(&res, view, pair, k);
    let free = free_flags(&res, &bad, view, pair)
        .into_iter()
        .filter(|&f| f)
        .count();
    Ok((free, bad.iter().any(|&b| b)))
}

/// Raises the number of free links by the exchange `F − uvu' + wvu'`, where
/// `u` lies in a bad component, `v` is its link center and `w` is a
/// neighbor of `v` not covered by any link. Only strictly improving
/// exchanges are taken, so this stops after at most `|F|` of them.
///
/// With σ fixed, link ends and all neighbors of link centers are matched,
/// so the exchange keeps the pair irreducible and leaves σ valid. On return,
/// if a bad component remains, at least `k` links are free.
pub fn maximize_free_links(
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    sigma: &LayerSigma,
    d: usize,
    k: usize,
) -> Result<FreeLinkOutcome> {
    let g = &view.graph;
    let mut pair = pair.clone();
    let (mut free, mut has_bad) = count_free_links(view, &pair, sigma, k)?;
    let mut exchanges = 0;
    while has_bad {
        match improving_exchange(view, &pair, sigma, k, free)? {
            Some((next, next_free, next_bad)) => {
                next.check_irreducible(g, d)?;
                pair = next;
                free = next_free;
                has_bad = next_bad;
                exchanges += 1;
            }
            None => break,
        }
    }
    if has_bad && free < k {
        return Err(Error::internal(format!(
            "layer {}: bad component present with only {free} free links (< k = {k})",
            view.index
        )));
    }
    Ok(FreeLinkOutcome {
        pair,
        free_links: free,
        has_bad_component: has_bad,
        exchanges,
    })
}

fn improving_exchange(
    view: &BipartiteLayerView,
    pair: &CoveringPair,
    sigma: &LayerSigma,
    k: usize,
    free: usize,
) -> Result<Option<(CoveringPair, usize, bool)>> {
    let g = &view.graph;
    let res = build_residual(view, pair, sigma)?;
    let bad = detect_bad_components(&res, view, pair, k);
    let ends = pair.end_link(g);
    for (c, _) in bad.iter().enumerate().filter(|(_, &b)| b) {
        for v in res.component_vertices(c) {
            let Some(u) = view.local_y(v) else { continue };
            let Some(li) = ends[u] else { continue };
            let link = pair.links[li];
            let other = if link.y == u { link.y2 } else { link.y };
            // The center has degree 2k - 1 in the residual graph, so it
            // cannot sit in a 2k-regular component.
            if res.component_of(view.x[link.x]) == Some(c) {
                return Err(Error::internal(format!(
                    "link center {} lies inside a bad component",
                    view.x[link.x]
                )));
            }
            for &(w, _) in g.x_neighbors(link.x) {
                if ends[w].is_some() {
                    continue;
                }
                let mut links = pair.links.clone();
                links[li] = YLink::new(w, link.x, other);
                let candidate = CoveringPair::new(links, pair.matching.clone());
                let (next_free, next_bad) = count_free_links(view, &candidate, sigma, k)?;
                if next_free > free {
                    return Ok(Some((candidate, next_free, next_bad)));
                }
            }
        }
    }
    Ok(None)
}
