use std::collections::HashMap;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::evaluator::{FiniteEvaluator, LimitEvaluator};
use super::specialization::DEFAULT_LIMIT_TOL;
use super::theta::ThetaSpec;
use crate::characters::tensor_decompose_weight;
use crate::error::{Error, Result};
use crate::graph::GraphSource;
use crate::shape::{HighestWeight, Partition};

/// The chain's generator: SplitMix64 seeded with the raw seed as its state.
/// Each draw adds 0x9e3779b97f4a7c15 to the state and returns the mixed
/// state z ↦ (z ⊕ z≫30)·0xbf58476d1ce4e5b9 ↦ (z ⊕ z≫27)·0x94d049bb133111eb ↦ z ⊕ z≫31.
pub fn chain_rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// A uniform draw in [0, 1) from the top 53 bits of the next output.
pub fn uniform(rng: &mut SplitMix64) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

enum Rows {
    Finite(FiniteEvaluator, crate::root_system::FamilyRank),
    Limit(LimitEvaluator),
}

/// The Markov chain on a multiplicative graph, with rows computed on demand.
pub struct Chain {
    delta: Partition,
    rows: Rows,
    cache: HashMap<HighestWeight, Vec<(HighestWeight, f64)>>,
}

impl Chain {
    /// The limit chain only moves along top-degree arrows, which are the same
    /// for every family, so the family plays no role for a limit source.
    pub fn new(delta: &Partition, source: GraphSource, theta: &ThetaSpec) -> Result<Self> {
        if delta.is_empty() {
            return Err(Error::domain("δ must be a nonzero partition"));
        }
        let rows = match source {
            GraphSource::Finite(fr) => {
                if fr.rank() < delta.len() {
                    return Err(Error::domain(format!("{delta} needs rank ≥ {}, got {}", delta.len(), fr.rank())));
                }
                Rows::Finite(FiniteEvaluator::new(delta, theta, fr), fr)
            }
            GraphSource::Limit(_) => Rows::Limit(LimitEvaluator::new(delta, theta, DEFAULT_LIMIT_TOL)?),
        };
        Ok(Chain {
            delta: delta.clone(),
            rows,
            cache: HashMap::new(),
        })
    }

    pub fn start(&self) -> HighestWeight {
        HighestWeight::from(&self.delta)
    }

    /// Successors of `v` with their raw kernel values, in canonical order.
    pub fn row(&mut self, v: &HighestWeight) -> Result<&[(HighestWeight, f64)]> {
        if !self.cache.contains_key(v) {
            let row = self.compute_row(v)?;
            self.cache.insert(v.clone(), row);
        }
        Ok(&self.cache[v])
    }

    fn compute_row(&self, v: &HighestWeight) -> Result<Vec<(HighestWeight, f64)>> {
        match &self.rows {
            Rows::Finite(eval, fr) => tensor_decompose_weight(v, &HighestWeight::from(&self.delta), *fr)?
                .iter()
                .map(|(mu, m)| Ok((mu.clone(), eval.probability(v, mu, m)?)))
                .collect(),
            Rows::Limit(eval) => {
                let lambda = v
                    .as_partition()
                    .ok_or_else(|| Error::internal(format!("limit chain reached non-partition {v}")))?;
                eval.type_a_row(&lambda)?
                    .partitions()
                    .map(|(mu, m)| Ok((HighestWeight::from(&mu), eval.probability(&lambda, &mu, m)?)))
                    .collect()
            }
        }
    }

    /// One transition by inverse CDF over the row, renormalized by its sum.
    pub fn step(&mut self, v: &HighestWeight, rng: &mut SplitMix64) -> Result<HighestWeight> {
        let u = uniform(rng);
        let row = self.row(v)?;
        let total: f64 = row.iter().map(|(_, p)| p).sum();
        if total.is_nan() || total <= 0.0 {
            return Err(Error::internal(format!("row of {v} has no mass")));
        }
        let target = u * total;
        let mut acc = 0.0;
        for (mu, p) in row {
            acc += p;
            if target < acc {
                return Ok(mu.clone());
            }
        }
        let last = row.iter().rev().find(|(_, p)| *p > 0.0).expect("positive row");
        Ok(last.0.clone())
    }

    /// `len` vertices λ_1 = δ, λ_2, …, λ_len.
    pub fn trajectory(&mut self, len: usize, rng: &mut SplitMix64) -> Result<Vec<HighestWeight>> {
        let mut out = Vec::with_capacity(len);
        let mut v = self.start();
        for i in 0..len {
            if i > 0 {
                v = self.step(&v, rng)?;
            }
            out.push(v.clone());
        }
        Ok(out)
    }
}

/// A trajectory of `steps` vertices starting at (δ, 1).
pub fn sample_trajectory(
    delta: &Partition,
    source: GraphSource,
    theta: &ThetaSpec,
    steps: usize,
    seed: u64,
) -> Result<Vec<HighestWeight>> {
    Chain::new(delta, source, theta)?.trajectory(steps, &mut chain_rng(seed))
}

/// Space-separated vertex flags, e.g. `1 2 2,1 0`.
pub fn trajectory_line(path: &[HighestWeight]) -> String {
    path.iter().map(HighestWeight::to_flag).collect::<Vec<_>>().join(" ")
}
