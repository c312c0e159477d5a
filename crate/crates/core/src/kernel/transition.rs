use std::collections::BTreeSet;

use rayon::prelude::*;

use super::evaluator::{FiniteEvaluator, LimitEvaluator};
use super::theta::ThetaSpec;
use crate::error::{Error, Result};
use crate::format::{format_sig12, round_sig12};
use crate::graph::{GraphDocument, GraphSource, MultiplicativeGraph};
use crate::shape::{HighestWeight, Partition};

/// Row-sum tolerance for finite-rank kernels.
pub const FINITE_ROW_TOL: f64 = 1e-9;
/// Row-sum tolerance for limit kernels, whose S values are truncated.
pub const LIMIT_ROW_TOL: f64 = 1e-6;

/// Edge probabilities on a multiplicative graph, aligned with its edge list.
#[derive(Clone, Debug)]
pub struct TransitionKernel {
    graph: MultiplicativeGraph,
    theta: ThetaSpec,
    probabilities: Vec<f64>,
}

/// One row of a kernel: a vertex and the total of its outgoing probabilities.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSum {
    pub vertex: HighestWeight,
    pub level: usize,
    pub sum: f64,
}

impl TransitionKernel {
    pub fn graph(&self) -> &MultiplicativeGraph {
        &self.graph
    }

    pub fn theta(&self) -> &ThetaSpec {
        &self.theta
    }

    /// Probabilities in the order of `graph().edges()`.
    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn probability(&self, from: &HighestWeight, level: usize, to: &HighestWeight) -> Option<f64> {
        self.graph
            .edges()
            .iter()
            .position(|e| e.level == level && &e.from == from && &e.to == to)
            .map(|i| self.probabilities[i])
    }

    pub fn row_sums(&self) -> Vec<RowSum> {
        let mut out: Vec<RowSum> = Vec::new();
        for (e, p) in self.graph.edges().iter().zip(&self.probabilities) {
            match out.last_mut() {
                Some(row) if row.level == e.level && row.vertex == e.from => row.sum += p,
                _ => out.push(RowSum {
                    vertex: e.from.clone(),
                    level: e.level,
                    sum: *p,
                }),
            }
        }
        out
    }

    fn check_rows(&self, tol: f64) -> Result<()> {
        match self.row_sums().into_iter().find(|r| (r.sum - 1.0).abs() > tol) {
            Some(r) => Err(Error::RowSum {
                vertex: r.vertex.to_string(),
                level: r.level,
                sum: r.sum,
            }),
            None => Ok(()),
        }
    }

    /// The graph document with `theta` and a rounded `p` on every edge.
    pub fn to_document(&self) -> GraphDocument {
        let mut doc = self.graph.to_document();
        doc.theta = Some(self.theta.to_string());
        for (e, p) in doc.edges.iter_mut().zip(&self.probabilities) {
            e.p = Some(round_sig12(*p));
        }
        doc
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    /// DOT rendering with edges labelled "m, p".
    pub fn to_dot(&self) -> String {
        self.graph
            .to_dot_labelled(|i, e| format!("{}, {}", e.weight, format_sig12(self.probabilities[i])))
    }
}

fn distinct_vertices(g: &MultiplicativeGraph) -> Vec<HighestWeight> {
    let set: BTreeSet<&HighestWeight> = g.levels().iter().flatten().collect();
    set.into_iter().cloned().collect()
}

/// Π_θ^{(δ, g_r)} on a finite-rank graph. Every row must sum to one within
/// [`FINITE_ROW_TOL`].
pub fn transition_kernel(g: &MultiplicativeGraph, theta: &ThetaSpec) -> Result<TransitionKernel> {
    let fr = match g.source() {
        GraphSource::Finite(fr) => fr,
        GraphSource::Limit(_) => return Err(Error::domain("transition_kernel needs a finite-rank graph")),
    };
    let eval = FiniteEvaluator::new(g.delta(), theta, fr);
    distinct_vertices(g)
        .par_iter()
        .try_for_each(|v| eval.s(v).map(|_| ()))?;
    let probabilities = g
        .edges()
        .iter()
        .map(|e| eval.probability(&e.from, &e.to, e.weight))
        .collect::<Result<_>>()?;
    let k = TransitionKernel {
        graph: g.clone(),
        theta: theta.clone(),
        probabilities,
    };
    k.check_rows(FINITE_ROW_TOL)?;
    Ok(k)
}

fn as_partition(v: &HighestWeight) -> Result<Partition> {
    v.as_partition()
        .ok_or_else(|| Error::internal(format!("limit graph vertex {v} is not a partition")))
}

/// The limit kernel on a limit graph: type-A data on arrows with
/// |μ| = |λ| + |δ|, zero on the rest. Each such arrow's weight is checked
/// against the type-A multiplicity. Rows must sum to one within
/// [`LIMIT_ROW_TOL`].
pub fn limit_kernel(g: &MultiplicativeGraph, theta: &ThetaSpec, tol: f64) -> Result<TransitionKernel> {
    if !g.source().is_limit() {
        return Err(Error::domain("limit_kernel needs a limit graph"));
    }
    let eval = LimitEvaluator::new(g.delta(), theta, tol)?;
    let vertices: Vec<Partition> = distinct_vertices(g).iter().map(as_partition).collect::<Result<_>>()?;
    vertices.par_iter().try_for_each(|v| eval.s(v).map(|_| ()))?;
    let mut probabilities = Vec::with_capacity(g.edges().len());
    for row in g.rows() {
        let lambda = as_partition(&row[0].from)?;
        let type_a = eval.type_a_row(&lambda)?;
        for e in row {
            let mu = as_partition(&e.to)?;
            if eval.is_top_degree(&lambda, &mu) {
                let want = type_a.get_partition(&mu);
                if want != e.weight {
                    return Err(Error::internal(format!(
                        "arrow {lambda} → {mu} has weight {} but the type-A multiplicity is {want}",
                        e.weight
                    )));
                }
            }
            probabilities.push(eval.probability(&lambda, &mu, e.weight)?);
        }
    }
    let k = TransitionKernel {
        graph: g.clone(),
        theta: theta.clone(),
        probabilities,
    };
    k.check_rows(LIMIT_ROW_TOL)?;
    Ok(k)
}
