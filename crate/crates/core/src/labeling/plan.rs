use std::ops::RangeInclusive;

use crate::error::{Error, Result};

/// Label pools of one layer `i`.
///
/// Counts: `n` vertices in `L_i`, `a` edges inside `L_i`, `b` residual cross
/// edges (labeled along trails), `c` linking edges. `d` is the offset below
/// which all labels belong to outer layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerPlan {
    pub index: usize,
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl LayerPlan {
    /// Labels for edges inside `L_i`.
    pub fn inner(&self) -> RangeInclusive<usize> {
        self.d + 1..=self.d + self.a
    }

    /// Labels for residual cross edges, handed out along trails.
    pub fn trail(&self) -> RangeInclusive<usize> {
        self.d + self.a + 1..=self.d + self.a + self.b
    }

    pub fn link(&self) -> RangeInclusive<usize> {
        let base = self.d + self.a + self.b;
        base + 1..=base + self.c
    }

    pub fn sigma(&self) -> RangeInclusive<usize> {
        self.d + self.a + self.b + self.c + 1..=self.top()
    }

    /// Largest label of this layer, the offset of the next layer inward.
    pub fn top(&self) -> usize {
        self.d + self.a + self.b + self.c + self.n
    }

    /// The value `s + l` the trail cursor keeps between trails.
    pub fn trail_sum(&self) -> usize {
        2 * (self.d + self.a) + self.b + 1
    }

    /// Separating bound: partial sums in `L_i` stay at or below it and
    /// partial sums in `L_{i-1}` at or above it.
    pub fn bound(&self, k: usize) -> u64 {
        ((2 * k + 1) * (self.d + self.a) + (k + 1) * self.b + self.c + k) as u64
    }
}

/// Layer plans indexed by `i - 1`, for `i = 1..=p`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalPlan {
    pub layers: Vec<LayerPlan>,
}

impl IntervalPlan {
    pub fn layer(&self, i: usize) -> &LayerPlan {
        &self.layers[i - 1]
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }
}

/// Builds the plan from per-layer counts `(n, a, b, c)` for `i = 1..=p`.
/// The outermost layer starts at 0 and every layer starts where the next
/// outer one ends; the pools must tile `[1, edge_count]` exactly.
pub fn compute_interval_plan(
    counts: &[(usize, usize, usize, usize)],
    edge_count: usize,
) -> Result<IntervalPlan> {
    let mut layers = Vec::with_capacity(counts.len());
    let mut d = 0;
    for (pos, &(n, a, b, c)) in counts.iter().enumerate().rev() {
        let plan = LayerPlan {
            index: pos + 1,
            n,
            a,
            b,
            c,
            d,
        };
        d = plan.top();
        layers.push(plan);
    }
    layers.reverse();

    let mut next = 1;
    for plan in layers.iter().rev() {
        for pool in [plan.inner(), plan.trail(), plan.link(), plan.sigma()] {
            if pool.is_empty() {
                continue;
            }
            if *pool.start() != next {
                return Err(Error::internal(format!(
                    "layer {} pool {pool:?} does not start at {next}",
                    plan.index
                )));
            }
            next = pool.end() + 1;
        }
    }
    if next != edge_count + 1 {
        return Err(Error::internal(format!(
            "label pools cover [1, {}] but the graph has {edge_count} edges",
            next - 1
        )));
    }
    Ok(IntervalPlan { layers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_on_five() {
        let plan = compute_interval_plan(&[(4, 6, 0, 0)], 10).unwrap();
        let l = plan.layer(1);
        assert_eq!(l.d, 0);
        assert_eq!(l.top(), 10);
        assert_eq!(l.inner(), 1..=6);
        assert!(l.trail().is_empty() && l.link().is_empty());
        assert_eq!(l.sigma(), 7..=10);
        assert_eq!(l.bound(1), 19);
    }

    #[test]
    fn offsets_telescope_inward() {
        // Layer 2 is outermost and starts at 0.
        let plan = compute_interval_plan(&[(4, 2, 6, 2), (2, 1, 3, 0)], 20).unwrap();
        assert_eq!(plan.layer(2).d, 0);
        assert_eq!(plan.layer(2).top(), 6);
        assert_eq!(plan.layer(1).d, 6);
        assert_eq!(plan.layer(1).inner(), 7..=8);
        assert_eq!(plan.layer(1).trail(), 9..=14);
        assert_eq!(plan.layer(1).link(), 15..=16);
        assert_eq!(plan.layer(1).sigma(), 17..=20);
        assert_eq!(plan.layer(1).trail_sum(), 9 + 14);
    }

    #[test]
    fn partition_must_match_edge_count() {
        assert!(compute_interval_plan(&[(4, 6, 0, 0)], 11).is_err());
        assert!(compute_interval_plan(&[], 0).unwrap().layers.is_empty());
    }
}
