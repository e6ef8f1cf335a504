use antimagic::verify::generate_regular;
use antimagic::{bfs_layering, parse_graph, Graph};
use proptest::prelude::*;

/// Floyd–Warshall distances, independent of the BFS under test.
fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][m] + d[m][j]);
            }
        }
    }
    d
}

fn regular() -> impl Strategy<Value = Graph> {
    (prop_oneof![Just(4usize), Just(6)], 0usize..20, any::<u64>())
        .prop_filter_map("infeasible", |(deg, extra, seed)| {
            generate_regular(deg + 1 + extra, deg, seed).ok()
        })
}

proptest! {
    #[test]
    fn layers_match_shortest_paths(g in regular(), r in any::<prop::sample::Index>()) {
        let root = r.index(g.vertex_count());
        let lay = bfs_layering(&g, root).unwrap();
        let dist = all_pairs(&g);
        for (v, &dv) in dist[root].iter().enumerate() {
            prop_assert_eq!(lay.layer_of[v], dv);
            prop_assert!(lay.layers[dv].contains(&v));
        }
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            prop_assert_eq!(lay.edge_class[e], dist[root][u].max(dist[root][v]));
        }
    }

    #[test]
    fn edge_lists_round_trip(g in regular()) {
        let text = g.to_edge_list();
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }
}
