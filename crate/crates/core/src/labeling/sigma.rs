use crate::covering::CoveringPair;
use crate::error::{Error, Result};
use crate::layering::BipartiteLayerView;
use crate::trails::LayerSigma;

/// Picks `σ(u)` for every `u` in `L_i`: its matching edge if it has one,
/// otherwise its lowest-id cross edge that is not a linking edge.
pub fn build_sigma(view: &BipartiteLayerView, pair: &CoveringPair) -> Result<LayerSigma> {
    let g = &view.graph;
    let matched = pair.y_matched(g);
    let mut is_link = vec![false; g.edge_count()];
    for e in pair.link_edges(g) {
        is_link[e] = true;
    }
    (0..g.y_count())
        .map(|y| {
            if let Some(e) = matched[y] {
                return Ok(e);
            }
            g.y_neighbors(y)
                .iter()
                .map(|&(_, e)| e)
                .filter(|&e| !is_link[e])
                .min()
                .ok_or_else(|| {
                    Error::internal(format!(
                        "vertex {} of layer {} has no usable edge into the previous layer",
                        view.y[y], view.index
                    ))
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::YLink;
    use crate::families::complete;
    use crate::layering::{bfs_layering, layer_bipartite_view, Bipartite};

    #[test]
    fn first_layer_uses_root_edges() {
        let g = complete(5);
        let lay = bfs_layering(&g, 0).unwrap();
        let view = layer_bipartite_view(&g, &lay, 1).unwrap();
        let sigma = build_sigma(&view, &CoveringPair::default()).unwrap();
        let globals: Vec<_> = sigma
            .iter()
            .map(|&e| g.endpoints(view.global_edge(e)))
            .collect();
        assert_eq!(globals, vec![(0, 1), (0, 2), (0, 3), (0, 4)]);
    }

    #[test]
    fn matching_edge_wins_over_lower_ids() {
        let view = BipartiteLayerView {
            index: 2,
            x: vec![0, 1],
            y: vec![2],
            edge_ids: vec![0, 1],
            graph: Bipartite::new(2, 1, vec![(0, 0), (1, 0)]).unwrap(),
        };
        let pair = CoveringPair::new(vec![], vec![1]);
        assert_eq!(build_sigma(&view, &pair).unwrap(), vec![1]);
        assert_eq!(
            build_sigma(&view, &CoveringPair::default()).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn linking_edges_are_skipped() {
        let view = BipartiteLayerView {
            index: 2,
            x: vec![0, 1],
            y: vec![2, 3],
            edge_ids: vec![0, 1, 2, 3],
            graph: Bipartite::new(2, 2, vec![(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap(),
        };
        let pair = CoveringPair::new(vec![YLink::new(0, 0, 1)], vec![]);
        assert_eq!(build_sigma(&view, &pair).unwrap(), vec![2, 3]);
    }
}
