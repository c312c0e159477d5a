//! Weight multiplicities K_{λω}, tensor product multiplicities m_{λμ} and
//! tensor power multiplicities f_{n,μ}.
//!
//! Characters are computed once per (highest weight, family, rank) by
//! Freudenthal's recursion and kept in a process-wide cache. Only dominant
//! weights are stored; full weight systems are expanded from Weyl orbits on
//! demand.

mod freudenthal;
mod tableaux;
mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::root_system::{dominant_rep, orbit, orbit_size, FamilyRank};
use crate::shape::{HighestWeight, Partition};

pub use tableaux::{littlewood_richardson, ssyt_character};
pub use tensor::{
    iterated_power_multiplicities, stable_rank, stable_tensor_multiplicity, tensor_decompose,
    tensor_decompose_weight, DecompositionMap,
};

/// The character of one irreducible V(λ), stored by dominant weights.
#[derive(Debug)]
pub struct Character {
    highest: HighestWeight,
    fr: FamilyRank,
    dominant: Vec<(Vec<i64>, u64)>,
    index: HashMap<Vec<i64>, u64>,
}

impl Character {
    pub fn highest(&self) -> &HighestWeight {
        &self.highest
    }

    pub fn family_rank(&self) -> FamilyRank {
        self.fr
    }

    /// Dominant weights with multiplicities, highest weight first.
    pub fn dominant_weights(&self) -> &[(Vec<i64>, u64)] {
        &self.dominant
    }

    /// K_{λω} for any integral ω (zero when ω is not a weight).
    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        if weight.len() != self.fr.rank() {
            return 0;
        }
        let rep = dominant_rep(weight, self.fr.family());
        self.index.get(&rep).copied().unwrap_or(0)
    }

    /// Calls `f(ω, K_{λω})` once for every weight ω of V(λ).
    pub fn for_each_weight(&self, mut f: impl FnMut(&[i64], u64)) {
        for (mu, m) in &self.dominant {
            for w in orbit(mu, self.fr.family()) {
                f(&w, *m);
            }
        }
    }

    pub fn dimension(&self) -> u128 {
        self.dominant
            .iter()
            .map(|(mu, m)| u128::from(*m) * orbit_size(mu, self.fr.family()))
            .sum()
    }

    /// Number of distinct weights.
    pub fn weight_count(&self) -> u128 {
        self.dominant
            .iter()
            .map(|(mu, _)| orbit_size(mu, self.fr.family()))
            .sum()
    }

    pub fn to_map(&self) -> WeightMultiplicityMap {
        let mut entries = BTreeMap::new();
        self.for_each_weight(|w, m| {
            entries.insert(w.to_vec(), m);
        });
        WeightMultiplicityMap {
            highest: self.highest.clone(),
            fr: self.fr,
            entries,
        }
    }
}

/// Explicit weight → multiplicity map of one irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicityMap {
    pub highest: HighestWeight,
    pub fr: FamilyRank,
    /// Integral weights on ε₁..ε_r with positive multiplicities.
    pub entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightMultiplicityMap {
    pub fn multiplicity(&self, weight: &[i64]) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u128 {
        self.entries.values().map(|&m| u128::from(m)).sum()
    }
}

type CacheKey = (HighestWeight, FamilyRank);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<Character>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<Character>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The (cached) character of V(λ) for an integral dominant λ.
pub fn character(highest: &HighestWeight, fr: FamilyRank) -> Result<Arc<Character>> {
    let key = (highest.clone(), fr);
    if let Some(c) = cache().read().expect("character cache poisoned").get(&key) {
        return Ok(Arc::clone(c));
    }
    let coords = highest.padded(fr.rank())?;
    if !highest.is_partition() && fr.family() != crate::root_system::Family::D {
        return Err(Error::domain(format!("{highest} is not dominant for family {}", fr.family())));
    }
    let dominant = freudenthal::dominant_multiplicities(&coords, fr)?;
    let index = dominant.iter().cloned().collect();
    let built = Arc::new(Character {
        highest: highest.clone(),
        fr,
        dominant,
        index,
    });
    let mut guard = cache().write().expect("character cache poisoned");
    Ok(Arc::clone(guard.entry(key).or_insert(built)))
}

/// K_{λω} for every weight ω of V(λ).
pub fn weight_multiplicities(lambda: &Partition, fr: FamilyRank) -> Result<WeightMultiplicityMap> {
    Ok(character(&lambda.into(), fr)?.to_map())
}

/// dim V(λ).
pub fn dimension(lambda: &Partition, fr: FamilyRank) -> Result<u128> {
    Ok(character(&lambda.into(), fr)?.dimension())
}
