use std::collections::HashMap;

use antimagic::label_graph;
use antimagic::trails::{build_residual, decompose_trails};
use antimagic::verify::generate_regular;

#[test]
fn trails_partition_the_residual_graph() {
    let mut layers = 0;
    for seed in 0..40u64 {
        let degree = [4, 6, 8][seed as usize % 3];
        let n = degree + 6 + (seed as usize * 5) % 30;
        let g = generate_regular(n, degree, seed).unwrap();
        let c = label_graph(&g, seed as usize % n).unwrap();
        for t in &c.layers {
            layers += 1;
            let res = build_residual(&t.view, &t.pair, &t.sigma).unwrap();
            let fam = decompose_trails(&res);

            let mut used: Vec<usize> = fam.all().flat_map(|t| t.edges.clone()).collect();
            used.sort_unstable();
            assert_eq!(used, res.g_sigma_prime, "seed {seed} layer {}", t.index);

            let mut degree_of: HashMap<usize, usize> = HashMap::new();
            let mut ends: HashMap<usize, usize> = HashMap::new();
            for tr in fam.all() {
                assert_eq!(tr.vertices.len(), tr.edges.len() + 1);
                for (w, &e) in tr.vertices.windows(2).zip(&tr.edges) {
                    let (a, b) = g.endpoints(e);
                    assert!((a, b) == (w[0], w[1]) || (b, a) == (w[0], w[1]));
                    *degree_of.entry(a).or_default() += 1;
                    *degree_of.entry(b).or_default() += 1;
                }
                if tr.closed {
                    assert_eq!(tr.first(), tr.last());
                } else {
                    assert_ne!(tr.first(), tr.last());
                    *ends.entry(tr.first()).or_default() += 1;
                    *ends.entry(tr.last()).or_default() += 1;
                }
            }
            for (&v, &deg) in &degree_of {
                let expect = usize::from(deg % 2 == 1);
                assert_eq!(ends.get(&v).copied().unwrap_or(0), expect, "vertex {v}");
                assert_eq!(deg, res.degree(v));
            }
            for tr in &fam.outer {
                assert!(res.is_outer(tr.first()) && res.is_outer(tr.last()));
            }
            for tr in &fam.inner {
                assert!(!res.is_outer(tr.first()) && !res.is_outer(tr.last()));
            }
            for tr in &fam.mixed {
                assert!(res.is_outer(tr.first()) && !res.is_outer(tr.last()));
            }
            // One closed trail per Eulerian component, never more.
            let mut closed_per: HashMap<usize, usize> = HashMap::new();
            for tr in &fam.closed {
                *closed_per.entry(tr.component).or_default() += 1;
                assert!(fam
                    .all()
                    .filter(|o| !o.closed)
                    .all(|o| o.component != tr.component));
            }
            assert!(closed_per.values().all(|&n| n == 1));
        }
    }
    assert!(layers > 40);
}
