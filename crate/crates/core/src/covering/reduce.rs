use super::{CoveringPair, Padded, YLink};
use crate::error::{Error, Result};
use crate::layering::Bipartite;

/// Restricts a covering pair of the padded graph to the original graph
/// (`M ∩ E(G)` and the links lying inside `G`) and reduces it:
///
/// * drop a link whose center has degree below `d`;
/// * drop a link whose center is also matched;
/// * if a link center `x` has an unmatched neighbor `y`, replace the link by
///   the matching edge `xy`.
///
/// Each step removes one link, so the loop ends after at most `|F|` rounds.
/// The last rule covers the unmatched-end case and also guarantees that
/// every neighbor of a link center is matched.
pub fn restrict_and_reduce(padded: &Padded, pair: &CoveringPair, d: usize) -> Result<CoveringPair> {
    let original = restrict_graph(padded)?;
    let links: Vec<YLink> = pair
        .links
        .iter()
        .filter(|l| l.x < padded.x_original && l.y < padded.y_original && l.y2 < padded.y_original)
        .copied()
        .collect();
    let matching: Vec<usize> = pair
        .matching
        .iter()
        .filter(|&&e| e < padded.edge_original)
        .copied()
        .collect();
    let restricted = CoveringPair::new(links, matching);
    restricted
        .validate(&original, d)
        .map_err(|e| Error::internal(format!("coverage lost after restriction: {e}")))?;
    reduce(&original, restricted, d)
}

pub(crate) fn reduce(g: &Bipartite, mut pair: CoveringPair, d: usize) -> Result<CoveringPair> {
    loop {
        let mx = pair.x_matched(g);
        let my = pair.y_matched(g);
        let mut changed = false;
        let mut next_links = Vec::with_capacity(pair.links.len());
        let mut new_edges = Vec::new();
        let mut claimed_y = vec![false; g.y_count()];
        for l in &pair.links {
            if g.x_degree(l.x) < d || mx[l.x].is_some() {
                changed = true;
                continue;
            }
            let unmatched = g
                .x_neighbors(l.x)
                .iter()
                .find(|&&(y, _)| my[y].is_none() && !claimed_y[y]);
            match unmatched {
                Some(&(y, e)) => {
                    claimed_y[y] = true;
                    new_edges.push(e);
                    changed = true;
                }
                None => next_links.push(*l),
            }
        }
        if !changed {
            return Ok(pair);
        }
        let mut matching = pair.matching.clone();
        matching.extend(new_edges);
        pair = CoveringPair::new(next_links, matching);
        pair.validate(g, d)?;
    }
}

fn restrict_graph(padded: &Padded) -> Result<Bipartite> {
    let edges = padded.graph.edges()[..padded.edge_original].to_vec();
    Bipartite::new(padded.x_original, padded.y_original, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(g: &Bipartite) -> Padded {
        Padded {
            graph: g.clone(),
            x_original: g.x_count(),
            y_original: g.y_count(),
            edge_original: g.edge_count(),
        }
    }

    fn complete(nx: usize, ny: usize) -> Bipartite {
        let edges = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        Bipartite::new(nx, ny, edges).unwrap()
    }

    #[test]
    fn irreducible_pair_is_unchanged() {
        let g = complete(4, 3);
        let m = |x, y| g.edge_between(x, y).unwrap();
        let pair = CoveringPair::new(vec![YLink::new(0, 0, 1)], vec![m(1, 0), m(2, 1), m(3, 2)]);
        let out = restrict_and_reduce(&identity(&g), &pair, 3).unwrap();
        assert_eq!(out, pair);
        out.check_irreducible(&g, 3).unwrap();
    }

    #[test]
    fn unmatched_end_becomes_matching_edge() {
        let g = complete(2, 3);
        let m = |x, y| g.edge_between(x, y).unwrap();
        let pair = CoveringPair::new(vec![YLink::new(0, 0, 1)], vec![m(1, 1)]);
        let out = restrict_and_reduce(&identity(&g), &pair, 3).unwrap();
        assert!(out.links.is_empty());
        assert_eq!(out.matching, {
            let mut v = vec![m(0, 0), m(1, 1)];
            v.sort();
            v
        });
    }

    #[test]
    fn low_degree_center_loses_its_link() {
        // x0 has degree 2 < d = 3, so it needs no cover.
        let g = Bipartite::new(1, 2, vec![(0, 0), (0, 1)]).unwrap();
        let pair = CoveringPair::new(vec![YLink::new(0, 0, 1)], vec![]);
        let out = restrict_and_reduce(&identity(&g), &pair, 3).unwrap();
        assert_eq!(out, CoveringPair::default());
    }

    #[test]
    fn matched_center_loses_its_link() {
        let g = complete(1, 3);
        let e = g.edge_between(0, 2).unwrap();
        let pair = CoveringPair::new(vec![YLink::new(0, 0, 1)], vec![e]);
        let out = restrict_and_reduce(&identity(&g), &pair, 3).unwrap();
        assert_eq!(out, CoveringPair::new(vec![], vec![e]));
    }

    #[test]
    fn restriction_drops_padding() {
        // Original: x0 - y0 only; padded adds fresh vertices around it.
        let g = Bipartite::new(1, 1, vec![(0, 0)]).unwrap();
        let padded = crate::covering::pad_to_biregular(&g, 3).unwrap();
        let fresh_edge = padded.edge_original;
        let pair = CoveringPair::new(vec![], vec![0, fresh_edge]);
        let out = restrict_and_reduce(&padded, &pair, 3).unwrap();
        assert_eq!(out.matching, vec![0]);
    }
}
