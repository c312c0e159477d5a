use serde::{Deserialize, Serialize};

use super::{Edge, GraphSource, MultiplicativeGraph};
use crate::error::{Error, Result};
use crate::root_system::{Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

/// On-disk form of a graph (and, with `theta` and per-edge `p`, of a kernel).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub delta: Vec<i64>,
    pub source: SourceDocument,
    pub depth: usize,
    pub levels: Vec<Vec<Vec<i64>>>,
    pub edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SourceDocument {
    Finite { family: Family, rank: usize },
    Limit { family: Family, limit: bool },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub from: Vec<i64>,
    pub n: usize,
    pub to: Vec<i64>,
    pub m: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

impl GraphDocument {
    /// JSON with one level or edge per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"delta\": {},\n", compact(&self.delta)));
        out.push_str(&format!("  \"source\": {},\n", compact(&self.source)));
        out.push_str(&format!("  \"depth\": {},\n", self.depth));
        if let Some(theta) = &self.theta {
            out.push_str(&format!("  \"theta\": {},\n", compact(theta)));
        }
        out.push_str("  \"levels\": [");
        out.push_str(&block(self.levels.iter().map(compact)));
        out.push_str("],\n  \"edges\": [");
        out.push_str(&block(self.edges.iter().map(compact)));
        out.push_str("]\n}\n");
        out
    }
}

fn block(items: impl Iterator<Item = String>) -> String {
    let lines: Vec<String> = items.map(|s| format!("    {s}")).collect();
    if lines.is_empty() {
        String::new()
    } else {
        format!("\n{}\n  ", lines.join(",\n"))
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("document serializes")
}

impl MultiplicativeGraph {
    pub fn to_document(&self) -> GraphDocument {
        let source = match self.source {
            GraphSource::Finite(fr) => SourceDocument::Finite {
                family: fr.family(),
                rank: fr.rank(),
            },
            GraphSource::Limit(f) => SourceDocument::Limit { family: f, limit: true },
        };
        GraphDocument {
            delta: HighestWeight::from(&self.delta).into(),
            source,
            depth: self.depth(),
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(|v| v.parts().to_vec()).collect())
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    from: e.from.parts().to_vec(),
                    n: e.level,
                    to: e.to.parts().to_vec(),
                    m: e.weight,
                    p: None,
                })
                .collect(),
            theta: None,
        }
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let delta = Partition::new(
            doc.delta
                .iter()
                .map(|&x| u32::try_from(x).map_err(|_| Error::domain("δ must have nonnegative parts")))
                .collect::<Result<_>>()?,
        )?;
        let source = match doc.source {
            SourceDocument::Finite { family, rank } => GraphSource::Finite(FamilyRank::new(family, rank)?),
            SourceDocument::Limit { family, limit: true } => GraphSource::Limit(family),
            SourceDocument::Limit { limit: false, .. } => {
                return Err(Error::domain("source has `limit: false` and no rank"))
            }
        };
        if doc.levels.len() != doc.depth {
            return Err(Error::domain(format!(
                "depth {} but {} levels",
                doc.depth,
                doc.levels.len()
            )));
        }
        let levels: Vec<Vec<HighestWeight>> = doc
            .levels
            .iter()
            .map(|l| l.iter().map(|v| HighestWeight::new(v.clone())).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        for (i, l) in levels.iter().enumerate() {
            if !l.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::domain(format!("level {} is not in canonical order", i + 1)));
            }
        }
        let edges: Vec<Edge> = doc
            .edges
            .iter()
            .map(|e| {
                let edge = Edge {
                    from: HighestWeight::new(e.from.clone())?,
                    level: e.n,
                    to: HighestWeight::new(e.to.clone())?,
                    weight: e.m,
                };
                let ok = e.n >= 1
                    && e.n < doc.depth
                    && e.m > 0
                    && levels[e.n - 1].binary_search(&edge.from).is_ok()
                    && levels[e.n].binary_search(&edge.to).is_ok();
                if ok {
                    Ok(edge)
                } else {
                    Err(Error::domain(format!("edge {} → {} at level {} is not valid", edge.from, edge.to, e.n)))
                }
            })
            .collect::<Result<_>>()?;
        Ok(MultiplicativeGraph::from_parts(delta, source, levels, edges))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        Self::from_document(&doc)
    }

    /// Graphviz rendering: one `rank=same` subgraph per level, arrows labelled
    /// by their multiplicity.
    pub fn to_dot(&self) -> String {
        self.to_dot_labelled(|_, e| e.weight.to_string())
    }

    pub(crate) fn to_dot_labelled(&self, label: impl Fn(usize, &Edge) -> String) -> String {
        let title = match self.source {
            GraphSource::Finite(fr) => format!("{fr}"),
            GraphSource::Limit(f) => format!("{f} (limit)"),
        };
        let id = |v: &HighestWeight, n: usize| format!("\"{}:{}\"", n, v.to_flag());
        let mut out = String::new();
        out.push_str("digraph multiplicative {\n");
        out.push_str(&format!("  label=\"delta={} {}\";\n", self.delta, title));
        for (i, level) in self.levels.iter().enumerate() {
            let n = i + 1;
            out.push_str(&format!("  subgraph level_{n} {{\n    rank=same;\n"));
            for v in level {
                out.push_str(&format!("    {} [label=\"{}\"];\n", id(v, n), v));
            }
            out.push_str("  }\n");
        }
        for (i, e) in self.edges.iter().enumerate() {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                id(&e.from, e.level),
                id(&e.to, e.level + 1),
                label(i, e)
            ));
        }
        out.push_str("}\n");
        out
    }
}
