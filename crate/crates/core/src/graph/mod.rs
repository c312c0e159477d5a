//! Multiplicative graphs G^(δ, g_r) at finite rank and their infinite-rank
//! limits G^(δ, X).
//!
//! Level n holds the constituents μ of V(δ)^{⊗n}; an arrow (λ, n) → (μ, n+1)
//! carries the multiplicity of V(μ) in V(λ) ⊗ V(δ). Limit graphs are built at
//! a proxy rank large enough that every multiplicity involved has stabilized.

mod export;

use std::collections::BTreeSet;

use crate::characters::{tensor_decompose_weight, DecompositionMap};
use crate::error::{Error, Result};
use crate::root_system::{Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

pub use export::{GraphDocument, SourceDocument};

/// Depth cap applied unless the caller overrides it.
pub const DEFAULT_MAX_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphSource {
    Finite(FamilyRank),
    Limit(Family),
}

impl GraphSource {
    pub fn family(&self) -> Family {
        match self {
            GraphSource::Finite(fr) => fr.family(),
            GraphSource::Limit(f) => *f,
        }
    }

    pub fn is_limit(&self) -> bool {
        matches!(self, GraphSource::Limit(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: HighestWeight,
    /// Level of `from`; `to` sits at `level + 1`.
    pub level: usize,
    pub to: HighestWeight,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeGraph {
    delta: Partition,
    source: GraphSource,
    levels: Vec<Vec<HighestWeight>>,
    edges: Vec<Edge>,
}

impl MultiplicativeGraph {
    pub fn delta(&self) -> &Partition {
        &self.delta
    }

    pub fn source(&self) -> GraphSource {
        self.source
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// Vertices of level `n` (1-based) in canonical order.
    pub fn level(&self, n: usize) -> &[HighestWeight] {
        n.checked_sub(1)
            .and_then(|i| self.levels.get(i))
            .map_or(&[], Vec::as_slice)
    }

    pub fn levels(&self) -> &[Vec<HighestWeight>] {
        &self.levels
    }

    /// Edges ordered by level, then source, then target.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains(&self, vertex: &HighestWeight, n: usize) -> bool {
        self.level(n).binary_search(vertex).is_ok()
    }

    pub fn out_edges<'a>(&'a self, vertex: &'a HighestWeight, n: usize) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges
            .iter()
            .filter(move |e| e.level == n && &e.from == vertex)
    }

    /// Maximal runs of edges sharing a source vertex.
    pub fn rows(&self) -> impl Iterator<Item = &[Edge]> {
        self.edges
            .chunk_by(|a, b| a.level == b.level && a.from == b.from)
    }

    /// The rank at which multiplicities are evaluated.
    pub fn working_rank(&self) -> usize {
        match self.source {
            GraphSource::Finite(fr) => fr.rank(),
            GraphSource::Limit(f) => limit_proxy_rank(&self.delta, self.depth(), f),
        }
    }

    pub(crate) fn from_parts(
        delta: Partition,
        source: GraphSource,
        levels: Vec<Vec<HighestWeight>>,
        edges: Vec<Edge>,
    ) -> Self {
        MultiplicativeGraph {
            delta,
            source,
            levels,
            edges,
        }
    }
}

/// Proxy rank for a limit graph: one more than N·ℓ(δ), which bounds ℓ(λ) + ℓ(δ)
/// for every arrow leaving levels 1..N−1.
pub fn limit_proxy_rank(delta: &Partition, depth: usize, family: Family) -> usize {
    (depth * delta.len() + 1).max(family.min_rank())
}

fn check_depth(depth: usize, max_depth: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::domain("depth must be positive"));
    }
    if depth > max_depth {
        return Err(Error::domain(format!(
            "depth {depth} exceeds the cap of {max_depth}; raise the cap explicitly to go deeper"
        )));
    }
    Ok(())
}

fn build(delta: &Partition, fr: FamilyRank, source: GraphSource, depth: usize) -> Result<MultiplicativeGraph> {
    if delta.is_empty() {
        return Err(Error::domain("δ must be a nonzero partition"));
    }
    if fr.rank() < delta.len() {
        return Err(Error::domain(format!("{delta} needs rank ≥ {}, got {}", delta.len(), fr.rank())));
    }
    let d = HighestWeight::from(delta);
    // f_{n,μ}, level by level; vertex sets are its supports
    let mut powers = vec![DecompositionMap::singleton(d.clone())];
    let mut edges = Vec::new();
    for n in 1..depth {
        let mut next = DecompositionMap::default();
        for (lambda, f) in powers[n - 1].iter() {
            for (mu, m) in tensor_decompose_weight(lambda, &d, fr)?.iter() {
                next.add(mu.clone(), f * m);
                edges.push(Edge {
                    from: lambda.clone(),
                    level: n,
                    to: mu.clone(),
                    weight: m,
                });
            }
        }
        powers.push(next);
    }
    let levels = powers
        .iter()
        .map(|p| p.iter().map(|(k, _)| k.clone()).collect())
        .collect();
    Ok(MultiplicativeGraph {
        delta: delta.clone(),
        source,
        levels,
        edges,
    })
}

/// G^(δ, g_r) truncated to levels 1..=depth.
pub fn build_graph(delta: &Partition, fr: FamilyRank, depth: usize) -> Result<MultiplicativeGraph> {
    build_graph_capped(delta, fr, depth, DEFAULT_MAX_DEPTH)
}

pub fn build_graph_capped(
    delta: &Partition,
    fr: FamilyRank,
    depth: usize,
    max_depth: usize,
) -> Result<MultiplicativeGraph> {
    check_depth(depth, max_depth)?;
    build(delta, fr, GraphSource::Finite(fr), depth)
}

/// G^(δ, X) truncated to levels 1..=depth.
pub fn build_limit_graph(delta: &Partition, family: Family, depth: usize) -> Result<MultiplicativeGraph> {
    build_limit_graph_capped(delta, family, depth, DEFAULT_MAX_DEPTH)
}

pub fn build_limit_graph_capped(
    delta: &Partition,
    family: Family,
    depth: usize,
    max_depth: usize,
) -> Result<MultiplicativeGraph> {
    check_depth(depth, max_depth)?;
    if delta.is_empty() {
        return Err(Error::domain("δ must be a nonzero partition"));
    }
    let fr = FamilyRank::new(family, limit_proxy_rank(delta, depth, family))?;
    let g = build(delta, fr, GraphSource::Limit(family), depth)?;
    if let Some(bad) = g.levels.iter().flatten().find(|v| !v.is_partition()) {
        return Err(Error::internal(format!("limit graph produced non-partition vertex {bad}")));
    }
    Ok(g)
}

/// Whether every level n equals {λ : |λ| ≤ n, |λ| ≡ n (mod 2), ℓ(λ) ≤ rank},
/// the vertex set of the Pascalized Young lattice. Only meaningful for δ = (1);
/// other graphs report `false`.
pub fn pascalization_check(g: &MultiplicativeGraph) -> bool {
    if g.delta().parts() != [1] {
        return false;
    }
    let rank = g.working_rank();
    (1..=g.depth()).all(|n| {
        let want: BTreeSet<HighestWeight> = (0..=n as u32)
            .filter(|k| (n as u32 - k).is_multiple_of(2))
            .flat_map(Partition::all_of_size)
            .filter(|p| p.len() <= rank)
            .map(HighestWeight::from)
            .collect();
        let have: BTreeSet<HighestWeight> = g.level(n).iter().cloned().collect();
        want == have
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn hw(s: &str) -> HighestWeight {
        s.parse().unwrap()
    }

    fn flags(level: &[HighestWeight]) -> Vec<String> {
        level.iter().map(HighestWeight::to_flag).collect()
    }

    #[test]
    fn young_lattice_gl2() {
        let g = build_graph(&p("1"), FamilyRank::new(Family::A, 2).unwrap(), 4).unwrap();
        assert_eq!(flags(g.level(1)), ["1"]);
        assert_eq!(flags(g.level(2)), ["2", "1,1"]);
        assert_eq!(flags(g.level(3)), ["3", "2,1"]);
        assert_eq!(flags(g.level(4)), ["4", "3,1", "2,2"]);
        assert!(g.edges().iter().all(|e| e.weight == 1));
        assert_eq!(g.edges().len(), 2 + 3 + 4);
    }

    #[test]
    fn sp4_level_three() {
        let g = build_graph(&p("1"), FamilyRank::new(Family::C, 2).unwrap(), 3).unwrap();
        for v in ["3", "1", "2,1"] {
            assert!(g.contains(&hw(v), 3), "{v}");
        }
        assert!(g.contains(&HighestWeight::empty(), 2));
    }

    #[test]
    fn so7_weighted_arrow() {
        let g = build_graph(&p("2"), FamilyRank::new(Family::B, 3).unwrap(), 3).unwrap();
        let v = hw("3,1");
        let e = g.out_edges(&v, 2).find(|e| e.to == v).unwrap();
        assert_eq!(e.weight, 2);
        assert!(!g.contains(&hw("2,1,1"), 2));
    }

    #[test]
    fn limit_graph_examples() {
        let a = build_limit_graph(&p("1"), Family::A, 3).unwrap();
        assert_eq!(flags(a.level(3)), ["3", "2,1", "1,1,1"]);
        let c = build_limit_graph(&p("1"), Family::C, 4).unwrap();
        assert!(pascalization_check(&c));
        assert!(!pascalization_check(&a));
        let one = build_limit_graph(&p("2,1"), Family::B, 1).unwrap();
        assert_eq!(flags(one.level(1)), ["2,1"]);
        assert!(one.edges().is_empty());
        let n1 = build_limit_graph(&p("1"), Family::A, 1).unwrap();
        assert!(pascalization_check(&n1));
    }

    #[test]
    fn every_vertex_is_connected() {
        for f in Family::ALL {
            let g = build_graph(&p("1,1"), FamilyRank::new(f, 3).unwrap(), 4).unwrap();
            for n in 1..g.depth() {
                for v in g.level(n) {
                    assert!(g.out_edges(v, n).next().is_some(), "{f} {v}@{n} has no successor");
                }
                for v in g.level(n + 1) {
                    assert!(g.edges().iter().any(|e| e.level == n && &e.to == v));
                }
            }
        }
    }

    #[test]
    fn errors() {
        let a1 = FamilyRank::new(Family::A, 1).unwrap();
        assert!(build_graph(&p("1,1"), a1, 2).is_err());
        assert!(build_graph(&Partition::empty(), a1, 2).is_err());
        assert!(build_limit_graph(&Partition::empty(), Family::C, 2).is_err());
        assert!(build_limit_graph(&p("1"), Family::C, 9).is_err());
        assert!(build_limit_graph_capped(&p("1"), Family::A, 9, 9).is_ok());
    }
}
