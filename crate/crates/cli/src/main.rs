use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use antimagic::labeling::{parse_document, render_document};
use antimagic::verify::{
    brute_force_antimagic, generate_regular, stress, verify_antimagic, verify_certificate,
    StressConfig, VerificationReport,
};
use antimagic::{label_graph, parse_graph, verify_construction, Error, Graph};
use clap::{Parser, Subcommand};
use serde_json::json;

/// Antimagic labelings of connected even-degree regular graphs.
#[derive(Parser)]
#[command(name = "antimagic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label a graph and print the labeling document.
    Label {
        graph: PathBuf,
        /// BFS root.
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Also print the full verification report.
        #[arg(long)]
        check: bool,
    },
    /// Check a labeling document against a graph.
    Verify {
        graph: PathBuf,
        labeling: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively search for an antimagic labeling.
    Oracle {
        graph: PathBuf,
        /// Search node limit; required above 12 edges.
        #[arg(long)]
        max_perms: Option<u64>,
    },
    /// Generate a connected random regular graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Label and verify many random regular graphs.
    Stress {
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Vertex count or range, e.g. `20` or `8..40`.
        #[arg(long, default_value = "8..40", value_parser = parse_range)]
        n: (usize, usize),
        /// Comma-separated degrees.
        #[arg(long, default_value = "4", value_delimiter = ',')]
        degree: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = |_| format!("expected a number or a range like 8..40, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok((
                a.trim().parse().map_err(bad)?,
                b.trim().parse().map_err(bad)?,
            ))
        }
        None => {
            let n = s.trim().parse().map_err(bad)?;
            Ok((n, n))
        }
    }
}

/// A failed run with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) => 3,
            Error::Verification(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn report_json(r: &VerificationReport) -> serde_json::Value {
    json!({
        "passed": r.passed(),
        "bijection": r.bijection_ok,
        "distinct_sums": r.distinct_sums_ok,
        "layer_monotone": r.layer_monotone_ok,
        "label_pools": r.interval_ok,
        "bounds": r.bounds.iter().map(|b| json!({
            "layer": b.index,
            "bound": b.bound,
            "max_inner": b.max_inner,
            "min_outer": b.min_outer,
        })).collect::<Vec<_>>(),
        "failures": r.failures,
        "sums": r.sums,
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Label { graph, root, check } => {
            let g = read_graph(&graph)?;
            let c = label_graph(&g, root)?;
            let mut out = render_document(&g, &c);
            if check {
                let report = verify_construction(&g, &c);
                out.push_str(&report.render());
                if !report.passed() {
                    return Err(Failure {
                        code: 2,
                        message: out,
                    });
                }
            }
            Ok(out)
        }
        Command::Verify {
            graph,
            labeling,
            json,
        } => {
            let g = read_graph(&graph)?;
            let doc = parse_document(&read(&labeling)?)?;
            let labels = doc.labels_for(&g)?;
            let report = match (doc.root, doc.roles_for(&g)?) {
                (Some((root, _)), Some(roles)) => verify_certificate(&g, &labels, root, &roles),
                _ => verify_antimagic(&g, &labels),
            };
            let mut out = if json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report_json(&report)).expect("json")
                )
            } else {
                report.render()
            };
            for &(v, s) in &doc.sums {
                if report.sums.get(v) != Some(&s) {
                    out.push_str(&format!("recorded sum {s} at vertex {v} does not match\n"));
                    return Err(Failure {
                        code: 2,
                        message: out,
                    });
                }
            }
            if !report.bijection_ok {
                return Err(invalid(format!(
                    "{out}labels are not a bijection onto 1..={}",
                    g.edge_count()
                )));
            }
            if !report.passed() {
                return Err(Failure {
                    code: 2,
                    message: out,
                });
            }
            Ok(out)
        }
        Command::Oracle { graph, max_perms } => {
            let g = read_graph(&graph)?;
            let outcome = brute_force_antimagic(&g, max_perms)?;
            let mut out = String::new();
            match outcome.witness {
                Some(labels) => {
                    let report = verify_antimagic(&g, &labels);
                    if !report.passed() {
                        return Err(Failure {
                            code: 3,
                            message: format!(
                                "oracle witness failed verification\n{}",
                                report.render()
                            ),
                        });
                    }
                    out.push_str("antimagic\n");
                    for (e, &(u, v)) in g.edges().iter().enumerate() {
                        out.push_str(&format!("edge {u} {v} {}\n", labels[e]));
                    }
                }
                None => out.push_str("not antimagic\n"),
            }
            out.push_str(&format!("nodes {}\n", outcome.nodes));
            Ok(out)
        }
        Command::Gen {
            n,
            degree,
            seed,
            out,
        } => {
            let g = generate_regular(n, degree, seed)?;
            let text = g.to_edge_list();
            match out {
                Some(path) => {
                    fs::write(&path, &text)
                        .map_err(|e| invalid(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Stress {
            count,
            n: (n_min, n_max),
            degree,
            seed,
            json,
        } => {
            let summary = stress(&StressConfig {
                count,
                n_min,
                n_max,
                degrees: degree,
                seed,
            })?;
            let out = if json {
                let v = json!({
                    "count": summary.instances.len(),
                    "passed": summary.passed(),
                    "elapsed_seconds": summary.elapsed.as_secs_f64(),
                    "slack": summary.slack_range().map(|(lo, hi)| json!({"min": lo, "max": hi})),
                    "instances": summary.instances.iter().map(|r| json!({
                        "index": r.index,
                        "n": r.n,
                        "degree": r.degree,
                        "seed": r.seed,
                        "passed": r.passed,
                        "min_slack": r.min_slack,
                        "bad_components": r.bad_components,
                        "failure": r.failure,
                    })).collect::<Vec<_>>(),
                });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            } else {
                summary.render()
            };
            if let Some(f) = summary.first_failure() {
                let repro = f.reproduction.as_deref().unwrap_or_default();
                return Err(Failure {
                    code: 2,
                    message: format!("{out}# failing instance {}\n{repro}", f.index),
                });
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message.trim_end());
            ExitCode::from(f.code)
        }
    }
}
