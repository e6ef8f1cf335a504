#[path = "common/covering_oracle.rs"]
mod oracle;

use antimagic::covering::build_covering_pair;
use antimagic::verify::random_bipartite;
use proptest::prelude::*;

#[test]
fn agrees_with_exhaustive_search() {
    let mut with_links = 0;
    for seed in 0..100u64 {
        let d = if seed % 2 == 0 { 3 } else { 5 };
        let nx = 1 + (seed as usize * 7) % 8;
        let g = oracle::dense_bipartite(nx, d, seed);
        let exhaustive = oracle::min_links(&g, d);
        assert!(
            exhaustive.is_some(),
            "seed {seed}: no covering pair exists at all"
        );
        let pair = build_covering_pair(&g, d).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let faults = oracle::irreducibility_faults(&g, d, &pair);
        assert!(faults.is_empty(), "seed {seed}: {faults:?}");
        assert!(pair.links.len() >= exhaustive.unwrap());
        with_links += usize::from(!pair.links.is_empty());
    }
    assert!(
        with_links >= 10,
        "only {with_links} instances needed a link"
    );
}

#[test]
fn residual_hall_condition() {
    for seed in 0..60u64 {
        let d = [3, 5][seed as usize % 2];
        let nx = 4 + seed as usize % 9;
        let g = oracle::dense_bipartite(nx, d, seed + 1000);
        let pair = build_covering_pair(&g, d).unwrap();
        let bad = oracle::hall_violations(&g, d, &pair);
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
    }
}

proptest! {
    #[test]
    fn sparse_graphs_get_irreducible_pairs(
        nx in 0usize..10,
        extra in 0usize..4,
        d in prop_oneof![Just(3usize), Just(5)],
        seed in any::<u64>(),
    ) {
        let ny = (nx * d).div_ceil(d + 1) + extra;
        let g = random_bipartite(nx, ny, d, seed);
        let pair = build_covering_pair(&g, d).unwrap();
        prop_assert_eq!(oracle::irreducibility_faults(&g, d, &pair), Vec::<String>::new());
    }
}
