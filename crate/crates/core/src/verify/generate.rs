use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::layering::Bipartite;

const ATTEMPTS: usize = 1000;

/// A connected simple `degree`-regular graph on `n` vertices, deterministic
/// in `seed`.
///
/// Points are paired in random rounds; pairs that would form a loop or a
/// repeated edge go back into the pool for the next round, and the attempt
/// restarts when no usable pair is left. Disconnected results are rejected.
pub fn generate_regular(n: usize, degree: usize, seed: u64) -> Result<Graph> {
    if n == 0 || degree == 0 {
        return Err(Error::InvalidParameters(
            "need n >= 1 and degree >= 1".into(),
        ));
    }
    if degree >= n {
        return Err(Error::InvalidParameters(format!(
            "degree {degree} needs more than {n} vertices"
        )));
    }
    if n * degree % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "n * degree = {} is odd",
            n * degree
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let Some(mut edges) = try_pairing(n, degree, &mut rng) else {
            continue;
        };
        edges.sort_unstable();
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::RejectionBudget { attempts: ATTEMPTS })
}

fn try_pairing(n: usize, degree: usize, rng: &mut ChaCha8Rng) -> Option<Vec<(usize, usize)>> {
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut points: Vec<usize> = (0..n)
        .flat_map(|v| std::iter::repeat_n(v, degree))
        .collect();
    while !points.is_empty() {
        points.shuffle(rng);
        let mut leftover: BTreeMap<usize, usize> = BTreeMap::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u != v && edges.insert((u, v)) {
                continue;
            }
            *leftover.entry(u).or_default() += 1;
            *leftover.entry(v).or_default() += 1;
        }
        if !leftover.is_empty() && !usable(&edges, &leftover) {
            return None;
        }
        points = leftover
            .iter()
            .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
            .collect();
    }
    Some(edges.into_iter().collect())
}

/// Whether some two distinct leftover vertices are still non-adjacent.
fn usable(edges: &HashSet<(usize, usize)>, leftover: &BTreeMap<usize, usize>) -> bool {
    let vs: Vec<usize> = leftover.keys().copied().collect();
    vs.iter()
        .enumerate()
        .any(|(i, &u)| vs[i + 1..].iter().any(|&v| !edges.contains(&(u, v))))
}

/// A random bipartite graph with X degrees at most `d` and Y degrees at
/// most `d + 1`, deterministic in `seed`.
pub fn random_bipartite(nx: usize, ny: usize, d: usize, seed: u64) -> Bipartite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut y_load = vec![0usize; ny];
    let mut edges = Vec::new();
    for x in 0..nx {
        let want = rng.gen_range(0..=d);
        let mut open: Vec<usize> = (0..ny).filter(|&y| y_load[y] <= d).collect();
        open.shuffle(&mut rng);
        for &y in open.iter().take(want) {
            y_load[y] += 1;
            edges.push((x, y));
        }
    }
    Bipartite::new(nx, ny, edges).expect("distinct random edges")
}
