use crate::error::{Error, Result};
use crate::layering::Bipartite;

/// Maximum matching by augmenting paths that must cover every X vertex of
/// degree `d` not in `forbidden_x`. Candidates are tried in ascending id
/// order. Returns the matching as ascending local edge indices.
pub fn hall_matching(g: &Bipartite, d: usize, forbidden_x: &[bool]) -> Result<Vec<usize>> {
    let mut y_mate: Vec<Option<usize>> = vec![None; g.y_count()];
    let mut x_edge: Vec<Option<usize>> = vec![None; g.x_count()];
    let needed: Vec<usize> = (0..g.x_count())
        .filter(|&x| !forbidden_x.get(x).copied().unwrap_or(false) && g.x_degree(x) == d)
        .collect();
    for &x in &needed {
        let mut visited = vec![false; g.y_count()];
        if !augment(g, x, forbidden_x, &mut visited, &mut y_mate, &mut x_edge) {
            return Err(Error::internal(format!(
                "no matching covers X vertex {x}; Hall's condition fails"
            )));
        }
    }
    let mut out: Vec<usize> = x_edge.into_iter().flatten().collect();
    out.sort_unstable();
    Ok(out)
}

fn augment(
    g: &Bipartite,
    x: usize,
    forbidden_x: &[bool],
    visited: &mut [bool],
    y_mate: &mut [Option<usize>],
    x_edge: &mut [Option<usize>],
) -> bool {
    // A free neighbor is taken directly before any rematching is tried.
    if let Some(&(y, e)) = g.x_neighbors(x).iter().find(|&&(y, _)| y_mate[y].is_none()) {
        visited[y] = true;
        y_mate[y] = Some(x);
        x_edge[x] = Some(e);
        return true;
    }
    for &(y, e) in g.x_neighbors(x) {
        if visited[y] {
            continue;
        }
        visited[y] = true;
        let free = match y_mate[y] {
            None => true,
            Some(other) => {
                !forbidden_x.get(other).copied().unwrap_or(false)
                    && augment(g, other, forbidden_x, visited, y_mate, x_edge)
            }
        };
        if free {
            y_mate[y] = Some(x);
            x_edge[x] = Some(e);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(nx: usize, ny: usize) -> Bipartite {
        let edges = (0..nx).flat_map(|x| (0..ny).map(move |y| (x, y))).collect();
        Bipartite::new(nx, ny, edges).unwrap()
    }

    #[test]
    fn lowest_ids_first() {
        let g = complete(2, 3);
        let m = hall_matching(&g, 3, &[false, false]).unwrap();
        let pairs: Vec<_> = m.iter().map(|&e| g.edge(e)).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 1)]);
    }

    #[test]
    fn forbidden_centers_are_skipped() {
        let g = complete(4, 3);
        let m = hall_matching(&g, 3, &[true, false, false, false]).unwrap();
        let pairs: Vec<_> = m.iter().map(|&e| g.edge(e)).collect();
        assert_eq!(pairs, vec![(1, 0), (2, 1), (3, 2)]);
        assert!(hall_matching(&g, 3, &[false; 4]).is_err());
    }

    #[test]
    fn empty_side() {
        let g = Bipartite::new(0, 2, vec![]).unwrap();
        assert!(hall_matching(&g, 3, &[]).unwrap().is_empty());
    }

    #[test]
    fn augments_through_existing_matches() {
        // x2 finds y0 and y2 taken and pushes x0 over to y1.
        let g = Bipartite::new(3, 3, vec![(0, 0), (0, 1), (1, 0), (1, 2), (2, 0), (2, 2)]).unwrap();
        let m = hall_matching(&g, 2, &[false; 3]).unwrap();
        let pairs: Vec<_> = m.iter().map(|&e| g.edge(e)).collect();
        assert_eq!(pairs, vec![(0, 1), (1, 2), (2, 0)]);
    }
}
