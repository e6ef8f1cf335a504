//! Line-oriented labeling documents.
//!
//! ```text
//! antimagic-labeling v1
//! graph <vertices> <edges>
//! root <v> k <k>
//! layer <i> <vertices...>
//! plan <i> n <n> a <a> b <b> c <c> d <d> bound <bound>
//! edge <u> <v> <label> [<role>]
//! sum <v> <sum>
//! end
//! ```
//!
//! Only the header, `edge` lines and `end` are required, so hand-written
//! labelings of arbitrary graphs can be checked too.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Construction, EdgeRole};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub const HEADER: &str = "antimagic-labeling v1";

pub fn render_document(g: &Graph, c: &Construction) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count());
    let _ = writeln!(out, "root {} k {}", c.root, c.k);
    for (i, layer) in c.layering.layers.iter().enumerate() {
        let vs: Vec<String> = layer.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "layer {i} {}", vs.join(" "));
    }
    for p in c.plan.layers.iter().rev() {
        let _ = writeln!(
            out,
            "plan {} n {} a {} b {} c {} d {} bound {}",
            p.index,
            p.n,
            p.a,
            p.b,
            p.c,
            p.d,
            p.bound(c.k)
        );
    }
    let roles = c.roles(g);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "edge {u} {v} {} {}", c.labels[e], roles[e].name());
    }
    for (v, s) in c.sums.iter().enumerate() {
        let _ = writeln!(out, "sum {v} {s}");
    }
    out.push_str("end\n");
    out
}

/// A parsed labeling document.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabelingDocument {
    pub shape: Option<(usize, usize)>,
    pub root: Option<(VertexId, usize)>,
    pub layers: Vec<Vec<VertexId>>,
    pub edges: Vec<(VertexId, VertexId, usize, Option<EdgeRole>)>,
    pub sums: Vec<(VertexId, u64)>,
}

fn bad(line: usize, reason: impl std::fmt::Display) -> Error {
    Error::Document(format!("line {line}: {reason}"))
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    tok.ok_or_else(|| bad(line, format!("missing {what}")))?
        .parse()
        .map_err(|_| bad(line, format!("malformed {what}")))
}

pub fn parse_document(text: &str) -> Result<LabelingDocument> {
    let mut doc = LabelingDocument::default();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((n, other)) => {
            return Err(bad(
                n,
                format!("expected header `{HEADER}`, found `{other}`"),
            ))
        }
        None => return Err(Error::Document("empty document".into())),
    }
    let mut ended = false;
    for (n, line) in lines {
        if ended {
            return Err(bad(n, "content after `end`"));
        }
        let mut tok = line.split_whitespace();
        let keyword = tok.next().unwrap_or_default();
        match keyword {
            "graph" => {
                doc.shape = Some((
                    num(tok.next(), n, "vertex count")?,
                    num(tok.next(), n, "edge count")?,
                ))
            }
            "root" => {
                let r = num(tok.next(), n, "root")?;
                if tok.next() != Some("k") {
                    return Err(bad(n, "expected `k`"));
                }
                doc.root = Some((r, num(tok.next(), n, "k")?));
            }
            "layer" => {
                let i: usize = num(tok.next(), n, "layer index")?;
                if i != doc.layers.len() {
                    return Err(bad(n, format!("layer {i} out of order")));
                }
                doc.layers.push(
                    tok.by_ref()
                        .map(|t| num(Some(t), n, "vertex"))
                        .collect::<Result<_>>()?,
                );
            }
            "plan" => {
                // Informational; checked for shape only.
                num::<usize>(tok.next(), n, "layer index")?;
                for key in ["n", "a", "b", "c", "d", "bound"] {
                    if tok.next() != Some(key) {
                        return Err(bad(n, format!("expected `{key}`")));
                    }
                    num::<u64>(tok.next(), n, key)?;
                }
            }
            "edge" => {
                let u = num(tok.next(), n, "endpoint")?;
                let v = num(tok.next(), n, "endpoint")?;
                let label = num(tok.next(), n, "label")?;
                let role = match tok.next() {
                    None => None,
                    Some(r) => Some(
                        EdgeRole::parse(r).ok_or_else(|| bad(n, format!("unknown role `{r}`")))?,
                    ),
                };
                doc.edges.push((u, v, label, role));
            }
            "sum" => doc
                .sums
                .push((num(tok.next(), n, "vertex")?, num(tok.next(), n, "sum")?)),
            "end" => ended = true,
            other => return Err(bad(n, format!("unknown keyword `{other}`"))),
        }
        if !matches!(keyword, "layer" | "end") && tok.next().is_some() {
            return Err(bad(n, "trailing tokens"));
        }
    }
    if !ended {
        return Err(Error::Document("missing `end`".into()));
    }
    Ok(doc)
}

impl LabelingDocument {
    /// Labels indexed by the edge ids of `g`. The document must list each
    /// edge of `g` exactly once and nothing else.
    pub fn labels_for(&self, g: &Graph) -> Result<Vec<usize>> {
        Ok(self.aligned(g)?.into_iter().map(|(l, _)| l).collect())
    }

    /// Roles indexed by the edge ids of `g`, if every edge line has one.
    pub fn roles_for(&self, g: &Graph) -> Result<Option<Vec<EdgeRole>>> {
        Ok(self.aligned(g)?.into_iter().map(|(_, r)| r).collect())
    }

    fn aligned(&self, g: &Graph) -> Result<Vec<(usize, Option<EdgeRole>)>> {
        if let Some((n, m)) = self.shape {
            if (n, m) != (g.vertex_count(), g.edge_count()) {
                return Err(Error::Document(format!(
                    "document describes {n} vertices and {m} edges, graph has {} and {}",
                    g.vertex_count(),
                    g.edge_count()
                )));
            }
        }
        let mut index: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        for (i, &(u, v, _, _)) in self.edges.iter().enumerate() {
            if index.insert((u.min(v), u.max(v)), i).is_some() {
                return Err(Error::Document(format!("edge {u} {v} listed twice")));
            }
        }
        if self.edges.len() != g.edge_count() {
            return Err(Error::Document(format!(
                "document labels {} edges, graph has {}",
                self.edges.len(),
                g.edge_count()
            )));
        }
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let i = index
                    .get(&(u, v))
                    .ok_or_else(|| Error::Document(format!("graph edge {u} {v} has no label")))?;
                let (_, _, label, role) = self.edges[*i];
                Ok((label, role))
            })
            .collect()
    }
}
