use crate::error::{Error, Result};
use crate::layering::Bipartite;

/// A `(d, d+1)`-biregular supergraph. The original graph is the induced
/// subgraph on the first `x_original` X and `y_original` Y vertices, and its
/// edges keep their indices `0..edge_original`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Padded {
    pub graph: Bipartite,
    pub x_original: usize,
    pub y_original: usize,
    pub edge_original: usize,
}

/// Embeds `g` as an induced subgraph of a bipartite graph in which every X
/// vertex has degree `d` and every Y vertex degree `d + 1`.
///
/// Fresh Y vertices absorb the X-side deficiency and fresh X vertices the
/// Y-side deficiency (spread round-robin so no fresh vertex gets two edges
/// to the same original vertex); the remaining fresh-to-fresh degrees are
/// realized greedily. The fresh counts `a` (X) and `b` (Y) satisfy
/// `d·a − DY = (d+1)·b − DX`, and are increased until the greedy succeeds.
pub fn pad_to_biregular(g: &Bipartite, d: usize) -> Result<Padded> {
    let nx = g.x_count();
    let ny = g.y_count();
    let mut dx = 0usize;
    let mut rx_max = 0usize;
    let mut x_def = Vec::with_capacity(nx);
    for x in 0..nx {
        let deg = g.x_degree(x);
        if deg > d {
            return Err(Error::InvalidParameters(format!(
                "X vertex {x} has degree {deg} > {d}"
            )));
        }
        x_def.push(d - deg);
        dx += d - deg;
        rx_max = rx_max.max(d - deg);
    }
    let mut dy = 0usize;
    let mut ry_max = 0usize;
    let mut y_def = Vec::with_capacity(ny);
    for y in 0..ny {
        let deg = g.y_degree(y);
        if deg > d + 1 {
            return Err(Error::InvalidParameters(format!(
                "Y vertex {y} has degree {deg} > {}",
                d + 1
            )));
        }
        y_def.push(d + 1 - deg);
        dy += d + 1 - deg;
        ry_max = ry_max.max(d + 1 - deg);
    }
    if dx == 0 && dy == 0 {
        return Ok(Padded {
            graph: g.clone(),
            x_original: nx,
            y_original: ny,
            edge_original: g.edge_count(),
        });
    }

    let mut b = rx_max.max(1);
    // Bounded: once b exceeds dx + dy + d^2 every fresh vertex has at most
    // one original neighbor and the greedy always succeeds.
    let limit = dx + dy + (d + 1) * (d + 1) * 4 + 16;
    while b <= limit {
        let fresh_y_total = (d + 1) * b;
        if fresh_y_total >= dx && (fresh_y_total - dx + dy).is_multiple_of(d) {
            let a = (fresh_y_total - dx + dy) / d;
            if a >= ry_max {
                if let Some(p) = try_pad(g, d, &x_def, &y_def, a, b) {
                    return Ok(p);
                }
            }
        }
        b += 1;
    }
    Err(Error::internal("padding to a biregular graph failed"))
}

fn try_pad(
    g: &Bipartite,
    d: usize,
    x_def: &[usize],
    y_def: &[usize],
    a: usize,
    b: usize,
) -> Option<Padded> {
    let nx = g.x_count();
    let ny = g.y_count();
    let mut edges = g.edges().to_vec();
    let mut fresh_y_load = vec![0usize; b];
    let mut fresh_x_load = vec![0usize; a];

    let mut cursor = 0;
    for (x, &r) in x_def.iter().enumerate() {
        for _ in 0..r {
            let fy = cursor % b;
            edges.push((x, ny + fy));
            fresh_y_load[fy] += 1;
            cursor += 1;
        }
    }
    let mut cursor = 0;
    for (y, &r) in y_def.iter().enumerate() {
        for _ in 0..r {
            let fx = cursor % a;
            edges.push((nx + fx, y));
            fresh_x_load[fx] += 1;
            cursor += 1;
        }
    }
    if fresh_y_load.iter().any(|&l| l > d + 1) || fresh_x_load.iter().any(|&l| l > d) {
        return None;
    }
    let mut y_rem: Vec<usize> = fresh_y_load.iter().map(|&l| d + 1 - l).collect();
    for (fx, &load) in fresh_x_load.iter().enumerate() {
        let need = d - load;
        let mut order: Vec<usize> = (0..b).filter(|&j| y_rem[j] > 0).collect();
        order.sort_by_key(|&j| (std::cmp::Reverse(y_rem[j]), j));
        if order.len() < need {
            return None;
        }
        for &j in &order[..need] {
            y_rem[j] -= 1;
            edges.push((nx + fx, ny + j));
        }
    }
    if y_rem.iter().any(|&r| r != 0) {
        return None;
    }
    let graph = Bipartite::new(nx + a, ny + b, edges).ok()?;
    let ok = (0..graph.x_count()).all(|x| graph.x_degree(x) == d)
        && (0..graph.y_count()).all(|y| graph.y_degree(y) == d + 1);
    ok.then(|| Padded {
        graph,
        x_original: nx,
        y_original: ny,
        edge_original: g.edge_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_biregular(p: &Padded, d: usize) -> bool {
        let g = &p.graph;
        (0..g.x_count()).all(|x| g.x_degree(x) == d)
            && (0..g.y_count()).all(|y| g.y_degree(y) == d + 1)
    }

    fn induced_ok(orig: &Bipartite, p: &Padded) -> bool {
        let g = &p.graph;
        (0..p.edge_original).all(|j| g.edge(j) == orig.edge(j))
            && g.edges()[p.edge_original..]
                .iter()
                .all(|&(x, y)| x >= p.x_original || y >= p.y_original)
    }

    #[test]
    fn biregular_input_is_unchanged() {
        // K_{4,3}: X degree 3, Y degree 4.
        let edges = (0..4).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        let g = Bipartite::new(4, 3, edges).unwrap();
        let p = pad_to_biregular(&g, 3).unwrap();
        assert_eq!(p.graph, g);
        assert_eq!((p.x_original, p.y_original), (4, 3));
    }

    #[test]
    fn single_edge_is_padded() {
        let g = Bipartite::new(1, 1, vec![(0, 0)]).unwrap();
        let p = pad_to_biregular(&g, 3).unwrap();
        assert!(is_biregular(&p, 3));
        assert!(induced_ok(&g, &p));
        assert_eq!(p.graph.x_degree(0), 3);
        assert_eq!(p.graph.y_degree(0), 4);
        assert_eq!(p.graph.edge(0), (0, 0));
    }

    #[test]
    fn edgeless_vertices_are_padded() {
        let g = Bipartite::new(2, 3, vec![]).unwrap();
        let p = pad_to_biregular(&g, 3).unwrap();
        assert!(is_biregular(&p, 3));
        let empty = Bipartite::new(0, 0, vec![]).unwrap();
        assert_eq!(pad_to_biregular(&empty, 3).unwrap().graph, empty);
    }

    #[test]
    fn rejects_degree_above_bound() {
        let g = Bipartite::new(1, 4, (0..4).map(|y| (0, y)).collect()).unwrap();
        assert!(pad_to_biregular(&g, 3).is_err());
    }

    proptest! {
        #[test]
        fn padding_is_biregular_and_induced(
            nx in 0usize..9, ny in 0usize..9, d in 3usize..6,
            raw in proptest::collection::vec((0usize..9, 0usize..9), 0..40),
        ) {
            let mut xd = vec![0; nx];
            let mut yd = vec![0; ny];
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for (x, y) in raw {
                if x < nx && y < ny && !edges.contains(&(x, y)) && xd[x] < d && yd[y] <= d {
                    xd[x] += 1;
                    yd[y] += 1;
                    edges.push((x, y));
                }
            }
            let g = Bipartite::new(nx, ny, edges).unwrap();
            let p = pad_to_biregular(&g, d).unwrap();
            prop_assert!(is_biregular(&p, d));
            prop_assert!(induced_ok(&g, &p));
        }
    }
}
