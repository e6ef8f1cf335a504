//! Brute-force facts about covering pairs of small bipartite graphs, written
//! against the raw edge list only.

use std::collections::BTreeMap;

use antimagic::covering::CoveringPair;
use antimagic::Bipartite;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random bipartite graph with X degrees at most `d`, Y degrees at most
/// `d + 1`, and most X vertices at full degree, so that a matching alone
/// often cannot cover X.
pub fn dense_bipartite(nx: usize, d: usize, seed: u64) -> Bipartite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // As few Y vertices as the degree bounds allow.
    let ny = (nx * d).div_ceil(d + 1).max(d);
    let mut load = vec![0usize; ny];
    let mut edges = Vec::new();
    for x in 0..nx {
        let want = if rng.gen_bool(0.9) {
            d
        } else {
            rng.gen_range(0..=d)
        };
        let mut open: Vec<usize> = (0..ny).filter(|&y| load[y] <= d).collect();
        open.shuffle(&mut rng);
        for &y in open.iter().take(want) {
            load[y] += 1;
            edges.push((x, y));
        }
    }
    Bipartite::new(nx, ny, edges).unwrap()
}

fn adjacent(g: &Bipartite, x: usize, y: usize) -> bool {
    g.edges().contains(&(x, y))
}

fn x_degree(g: &Bipartite, x: usize) -> usize {
    g.edges().iter().filter(|e| e.0 == x).count()
}

fn neighbors(g: &Bipartite, x: usize) -> Vec<usize> {
    g.edges().iter().filter(|e| e.0 == x).map(|e| e.1).collect()
}

/// Smallest number of links over all covering pairs, found by trying every
/// way to cover each full-degree X vertex. `None` when no pair exists.
pub fn min_links(g: &Bipartite, d: usize) -> Option<usize> {
    let need: Vec<usize> = (0..g.x_count()).filter(|&x| x_degree(g, x) == d).collect();
    let mut best = None;
    let mut matched = vec![false; g.y_count()];
    let mut ended = vec![false; g.y_count()];
    search(g, &need, 0, 0, &mut matched, &mut ended, &mut best);
    best
}

fn search(
    g: &Bipartite,
    need: &[usize],
    at: usize,
    links: usize,
    matched: &mut [bool],
    ended: &mut [bool],
    best: &mut Option<usize>,
) {
    if best.is_some_and(|b| links >= b) {
        return;
    }
    let Some(&x) = need.get(at) else {
        *best = Some(links);
        return;
    };
    let ns = neighbors(g, x);
    for &y in &ns {
        if !matched[y] {
            matched[y] = true;
            search(g, need, at + 1, links, matched, ended, best);
            matched[y] = false;
        }
    }
    for (i, &y) in ns.iter().enumerate() {
        for &y2 in &ns[i + 1..] {
            if !ended[y] && !ended[y2] {
                ended[y] = true;
                ended[y2] = true;
                search(g, need, at + 1, links + 1, matched, ended, best);
                ended[y] = false;
                ended[y2] = false;
            }
        }
    }
}

/// Every reason `pair` is not an irreducible covering pair of `g`.
pub fn irreducibility_faults(g: &Bipartite, d: usize, pair: &CoveringPair) -> Vec<String> {
    let mut faults = Vec::new();
    let m: Vec<(usize, usize)> = pair.matching.iter().map(|&e| g.edge(e)).collect();
    let mut x_cover = vec![0usize; g.x_count()];
    let mut y_match = vec![0usize; g.y_count()];
    let mut y_end = vec![0usize; g.y_count()];
    for &(x, y) in &m {
        x_cover[x] += 1;
        y_match[y] += 1;
    }
    for l in &pair.links {
        if l.y == l.y2 || !adjacent(g, l.x, l.y) || !adjacent(g, l.x, l.y2) {
            faults.push(format!("{l:?} is not a path of the graph"));
        }
        x_cover[l.x] += 1;
        y_end[l.y] += 1;
        y_end[l.y2] += 1;
        if x_degree(g, l.x) != d {
            faults.push(format!("center {} not of full degree", l.x));
        }
        for y in neighbors(g, l.x) {
            if y_match[y] == 0 {
                faults.push(format!("center {} has unmatched neighbor {y}", l.x));
            }
        }
    }
    for (x, &cover) in x_cover.iter().enumerate() {
        let matched = m.iter().filter(|e| e.0 == x).count();
        let centered = pair.links.iter().filter(|l| l.x == x).count();
        if matched > 1 || centered > 1 {
            faults.push(format!("X vertex {x} used twice"));
        }
        if x_degree(g, x) == d && cover != 1 {
            faults.push(format!("X vertex {x} covered {cover} times"));
        }
    }
    for y in 0..g.y_count() {
        if y_match[y] > 1 || y_end[y] > 1 {
            faults.push(format!("Y vertex {y} used twice"));
        }
    }
    faults.extend(shape_faults(g, pair));
    faults
}

/// Components of `M ∪ F` must be single edges or W-shapes `x y c y' x'`.
fn shape_faults(g: &Bipartite, pair: &CoveringPair) -> Vec<String> {
    // Vertices: X as (0, x), Y as (1, y).
    let mut adj: BTreeMap<(u8, usize), Vec<(u8, usize)>> = BTreeMap::new();
    let mut add = |x: usize, y: usize| {
        adj.entry((0, x)).or_default().push((1, y));
        adj.entry((1, y)).or_default().push((0, x));
    };
    for &e in &pair.matching {
        let (x, y) = g.edge(e);
        add(x, y);
    }
    for l in &pair.links {
        add(l.x, l.y);
        add(l.x, l.y2);
    }
    let centers: Vec<usize> = pair.links.iter().map(|l| l.x).collect();
    let mut seen = BTreeMap::new();
    let mut faults = Vec::new();
    for &start in adj.keys() {
        if seen.contains_key(&start) {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        seen.insert(start, ());
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in &adj[&v] {
                if seen.insert(w, ()).is_none() {
                    stack.push(w);
                }
            }
        }
        let edges: usize = comp.iter().map(|v| adj[v].len()).sum::<usize>() / 2;
        let max_deg = comp.iter().map(|v| adj[v].len()).max().unwrap_or(0);
        let ok = match comp.len() {
            2 => edges == 1,
            5 => {
                let mid: Vec<_> = comp
                    .iter()
                    .filter(|&&(s, v)| s == 0 && centers.contains(&v))
                    .collect();
                edges == 4 && max_deg == 2 && mid.len() == 1
            }
            _ => false,
        };
        if !ok {
            faults.push(format!(
                "component {comp:?} is neither an edge nor a W-shape"
            ));
        }
    }
    faults
}

/// Subsets of the full-degree non-center X vertices that violate Hall's
/// condition in the graph without the link centers.
pub fn hall_violations(g: &Bipartite, d: usize, pair: &CoveringPair) -> Vec<Vec<usize>> {
    let centers: Vec<usize> = pair.links.iter().map(|l| l.x).collect();
    let rest: Vec<usize> = (0..g.x_count())
        .filter(|x| !centers.contains(x) && x_degree(g, *x) == d)
        .collect();
    assert!(rest.len() <= 16, "subset scan is exponential");
    let mut out = Vec::new();
    for mask in 1u32..(1 << rest.len()) {
        let z: Vec<usize> = (0..rest.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| rest[i])
            .collect();
        let mut nz: Vec<usize> = z.iter().flat_map(|&x| neighbors(g, x)).collect();
        nz.sort_unstable();
        nz.dedup();
        if nz.len() < z.len() {
            out.push(z);
        }
    }
    out
}
