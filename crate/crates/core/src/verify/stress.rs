use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{generate_regular, verify_construction};
use crate::error::{Error, Result};
use crate::labeling::label_graph;

/// Parameters of a stress run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressConfig {
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Degrees are used round-robin over the instances.
    pub degrees: Vec<usize>,
    pub seed: u64,
}

/// Outcome of one generated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceResult {
    pub index: usize,
    pub n: usize,
    pub degree: usize,
    /// Seed passed to the generator; regenerates the graph on its own.
    pub seed: u64,
    pub passed: bool,
    pub elapsed: Duration,
    pub min_slack: Option<i64>,
    pub bad_components: usize,
    /// Smallest free-link count over layers that had a bad component.
    pub min_free_links: Option<usize>,
    /// Free-link exchanges performed across all layers.
    pub exchanges: usize,
    pub failure: Option<String>,
    /// Edge list of a failing graph.
    pub reproduction: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StressSummary {
    pub instances: Vec<InstanceResult>,
    pub elapsed: Duration,
}

impl StressSummary {
    pub fn passed(&self) -> usize {
        self.instances.iter().filter(|r| r.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.instances.len()
    }

    pub fn first_failure(&self) -> Option<&InstanceResult> {
        self.instances.iter().find(|r| !r.passed)
    }

    pub fn slack_range(&self) -> Option<(i64, i64)> {
        let slacks = self.instances.iter().filter_map(|r| r.min_slack);
        let lo = slacks.clone().min()?;
        Some((lo, slacks.max()?))
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}/{} pass", self.passed(), self.instances.len());
        let _ = writeln!(out, "elapsed: {:.3} s", self.elapsed.as_secs_f64());
        if let Some((lo, hi)) = self.slack_range() {
            let _ = writeln!(out, "bound slack: min {lo}, max {hi}");
        }
        let bad: usize = self.instances.iter().map(|r| r.bad_components).sum();
        let _ = writeln!(out, "bad components: {bad}");
        let exchanges: usize = self.instances.iter().map(|r| r.exchanges).sum();
        let _ = writeln!(out, "free-link exchanges: {exchanges}");
        if let Some(f) = self.first_failure() {
            let _ = writeln!(
                out,
                "first failure: instance {} (n {}, degree {}, seed {}): {}",
                f.index,
                f.n,
                f.degree,
                f.seed,
                f.failure.as_deref().unwrap_or("unknown")
            );
        }
        out
    }
}

fn instance_params(cfg: &StressConfig, index: usize) -> (usize, usize, u64) {
    let degree = cfg.degrees[index % cfg.degrees.len()];
    let seed = cfg.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(cfg.n_min.max(degree + 1)..=cfg.n_max);
    (n, degree, seed)
}

fn run_instance(cfg: &StressConfig, index: usize) -> InstanceResult {
    let (n, degree, seed) = instance_params(cfg, index);
    let start = Instant::now();
    let mut result = InstanceResult {
        index,
        n,
        degree,
        seed,
        passed: false,
        elapsed: Duration::ZERO,
        min_slack: None,
        bad_components: 0,
        min_free_links: None,
        exchanges: 0,
        failure: None,
        reproduction: None,
    };
    let g = match generate_regular(n, degree, seed) {
        Ok(g) => g,
        Err(e) => {
            result.failure = Some(format!("generation failed: {e}"));
            return result;
        }
    };
    match label_graph(&g, 0) {
        Ok(c) => {
            let report = verify_construction(&g, &c);
            result.passed = report.passed();
            result.min_slack = report.min_slack();
            result.bad_components = report.bad_components;
            result.min_free_links = c
                .layers
                .iter()
                .filter(|t| !t.bad_components.is_empty())
                .map(|t| t.free_links)
                .min();
            result.exchanges = c.layers.iter().map(|t| t.exchanges).sum();
            if !result.passed {
                result.failure = Some(report.first_failure().unwrap_or("unknown").to_string());
            }
        }
        Err(e) => result.failure = Some(e.to_string()),
    }
    if !result.passed {
        result.reproduction = Some(g.to_edge_list());
    }
    result.elapsed = start.elapsed();
    result
}

/// Generates `count` random regular graphs, labels and verifies each.
pub fn stress(cfg: &StressConfig) -> Result<StressSummary> {
    if let Some(&d) = cfg.degrees.iter().find(|&&d| d < 4 || d % 2 == 1) {
        return Err(Error::InvalidParameters(format!(
            "degree {d} is out of scope: degrees must be even and at least 4"
        )));
    }
    if cfg.count > 0 {
        if cfg.degrees.is_empty() {
            return Err(Error::InvalidParameters("no degrees given".into()));
        }
        if let Some(&d) = cfg
            .degrees
            .iter()
            .find(|&&d| cfg.n_max <= d || cfg.n_min > cfg.n_max)
        {
            return Err(Error::InvalidParameters(format!(
                "no vertex count in [{}, {}] admits degree {d}",
                cfg.n_min, cfg.n_max
            )));
        }
    }
    let start = Instant::now();
    #[cfg(feature = "parallel")]
    let instances = {
        use rayon::prelude::*;
        (0..cfg.count)
            .into_par_iter()
            .map(|i| run_instance(cfg, i))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let instances = (0..cfg.count).map(|i| run_instance(cfg, i)).collect();
    Ok(StressSummary {
        instances,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(count: usize, degrees: Vec<usize>) -> StressConfig {
        StressConfig {
            count,
            n_min: 8,
            n_max: 24,
            degrees,
            seed: 1,
        }
    }

    #[test]
    fn small_run_passes() {
        let s = stress(&cfg(12, vec![4, 6])).unwrap();
        assert!(s.all_passed(), "{}", s.render());
        assert!(s.instances.iter().all(|r| (8..=24).contains(&r.n)));
        assert!(s.render().starts_with("12/12 pass"));
    }

    #[test]
    fn empty_run() {
        let s = stress(&cfg(0, vec![4])).unwrap();
        assert!(s.instances.is_empty() && s.all_passed());
    }

    #[test]
    fn odd_or_small_degrees_are_rejected() {
        assert!(stress(&cfg(1, vec![3])).is_err());
        assert!(stress(&cfg(1, vec![2])).is_err());
        let mut c = cfg(1, vec![4]);
        c.n_max = 4;
        assert!(stress(&c).is_err());
    }

    #[test]
    fn instances_are_reproducible() {
        let a = stress(&cfg(4, vec![4])).unwrap();
        let b = stress(&cfg(4, vec![4])).unwrap();
        let key = |s: &StressSummary| {
            s.instances
                .iter()
                .map(|r| (r.n, r.seed, r.min_slack))
                .collect::<Vec<_>>()
        };
        assert_eq!(key(&a), key(&b));
    }
}
