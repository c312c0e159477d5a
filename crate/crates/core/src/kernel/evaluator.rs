//! Memoized edge-probability formulas shared by the kernels, the sweep and
//! the sampler.

use std::collections::HashMap;
use std::sync::RwLock;

use super::specialization::{limit_s_a, specialize_weight, ThetaPowers};
use super::theta::ThetaSpec;
use crate::characters::{tensor_decompose, DecompositionMap};
use crate::error::Result;
use crate::root_system::{Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

fn memo<K, V>(cache: &RwLock<HashMap<K, V>>, key: &K, compute: impl FnOnce() -> Result<V>) -> Result<V>
where
    K: std::hash::Hash + Eq + Clone,
    V: Copy,
{
    if let Some(v) = cache.read().expect("cache lock").get(key) {
        return Ok(*v);
    }
    let v = compute()?;
    cache.write().expect("cache lock").insert(key.clone(), v);
    Ok(v)
}

/// Π_θ^{(δ, g_r)} entries: m · S_μ/(S_λ S_δ) · θ^{[λ+δ−μ]}.
pub(crate) struct FiniteEvaluator {
    fr: FamilyRank,
    theta: ThetaSpec,
    delta: HighestWeight,
    powers: ThetaPowers,
    s: RwLock<HashMap<HighestWeight, f64>>,
}

impl FiniteEvaluator {
    pub(crate) fn new(delta: &Partition, theta: &ThetaSpec, fr: FamilyRank) -> Self {
        FiniteEvaluator {
            fr,
            theta: theta.clone(),
            delta: HighestWeight::from(delta),
            powers: ThetaPowers::new(theta, fr),
            s: RwLock::default(),
        }
    }

    pub(crate) fn s(&self, v: &HighestWeight) -> Result<f64> {
        memo(&self.s, v, || specialize_weight(v, &self.theta, self.fr))
    }

    pub(crate) fn probability(&self, lambda: &HighestWeight, mu: &HighestWeight, m: u64) -> Result<f64> {
        let r = self.fr.rank();
        let shift: Vec<i64> = lambda
            .padded(r)?
            .iter()
            .zip(self.delta.padded(r)?)
            .zip(mu.padded(r)?)
            .map(|((l, d), m)| l + d - m)
            .collect();
        Ok(m as f64 * self.s(mu)? / (self.s(lambda)? * self.s(&self.delta)?) * self.powers.of_weight(&shift))
    }
}

/// Limit entries m^{(δ,A)}_{λμ} · S^A_μ/(S^A_λ S^A_δ) · θ^{[λ+δ−μ]} on
/// top-degree arrows, zero below.
pub(crate) struct LimitEvaluator {
    theta: ThetaSpec,
    tol: f64,
    delta: Partition,
    s: RwLock<HashMap<Partition, f64>>,
}

impl LimitEvaluator {
    pub(crate) fn new(delta: &Partition, theta: &ThetaSpec, tol: f64) -> Result<Self> {
        theta.require_subunit()?;
        Ok(LimitEvaluator {
            theta: theta.clone(),
            tol,
            delta: delta.clone(),
            s: RwLock::default(),
        })
    }

    pub(crate) fn s(&self, v: &Partition) -> Result<f64> {
        memo(&self.s, v, || Ok(limit_s_a(v, &self.theta, self.tol)?.value))
    }

    pub(crate) fn is_top_degree(&self, lambda: &Partition, mu: &Partition) -> bool {
        mu.size() == lambda.size() + self.delta.size()
    }

    /// θ^{[λ+δ−μ]} for a top-degree arrow; by then the exponent no longer
    /// depends on the rank or the family, and is the type-A one.
    fn theta_shift(&self, lambda: &Partition, mu: &Partition) -> Result<f64> {
        let r = lambda.len().max(self.delta.len()).max(mu.len()).max(1);
        let fr = FamilyRank::new(Family::A, r)?;
        let shift: Vec<i64> = lambda
            .padded(r)?
            .iter()
            .zip(self.delta.padded(r)?)
            .zip(mu.padded(r)?)
            .map(|((l, d), m)| l + d - m)
            .collect();
        Ok(ThetaPowers::new(&self.theta, fr).of_weight(&shift))
    }

    /// `m` must be the type-A multiplicity of the arrow.
    pub(crate) fn probability(&self, lambda: &Partition, mu: &Partition, m: u64) -> Result<f64> {
        if !self.is_top_degree(lambda, mu) {
            return Ok(0.0);
        }
        Ok(m as f64 * self.s(mu)? / (self.s(lambda)? * self.s(&self.delta)?) * self.theta_shift(lambda, mu)?)
    }

    /// V(λ) ⊗ V(δ) for gl at the stable rank; its constituents are exactly the
    /// top-degree arrows of every limit graph.
    pub(crate) fn type_a_row(&self, lambda: &Partition) -> Result<DecompositionMap> {
        let rank = crate::characters::stable_rank(lambda, &self.delta, Family::A);
        tensor_decompose(lambda, &self.delta, FamilyRank::new(Family::A, rank)?)
    }
}
