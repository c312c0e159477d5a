use std::collections::BTreeMap;

use super::character;
use crate::error::{Error, Result};
use crate::root_system::{reflect_into_chamber, Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

/// Multiplicities of the irreducible constituents of a tensor product.
///
/// Keys are partitions except for family D at small rank, where
/// constituents with a negative last coordinate also occur. Those are kept as
/// separate keys and reported by [`DecompositionMap::discarded_nonpartition_mass`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionMap {
    entries: BTreeMap<HighestWeight, u64>,
}

impl DecompositionMap {
    pub fn singleton(hw: HighestWeight) -> Self {
        DecompositionMap {
            entries: BTreeMap::from([(hw, 1)]),
        }
    }

    pub fn get(&self, hw: &HighestWeight) -> u64 {
        self.entries.get(hw).copied().unwrap_or(0)
    }

    pub fn get_partition(&self, p: &Partition) -> u64 {
        self.get(&p.into())
    }

    /// All constituents in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&HighestWeight, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Constituents labelled by partitions.
    pub fn partitions(&self) -> impl Iterator<Item = (Partition, u64)> + '_ {
        self.entries
            .iter()
            .filter_map(|(k, &v)| k.as_partition().map(|p| (p, v)))
    }

    /// Total multiplicity of constituents that are not partitions (family D only).
    pub fn discarded_nonpartition_mass(&self) -> u64 {
        self.entries
            .iter()
            .filter(|(k, _)| !k.is_partition())
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn add(&mut self, hw: HighestWeight, m: u64) {
        *self.entries.entry(hw).or_insert(0) += m;
    }
}

/// Weyl dimension formula, used only to pick the cheaper factor.
fn approx_dimension(coords: &[i64], fr: FamilyRank) -> f64 {
    let rho2 = fr.rho_doubled();
    fr.positive_roots_int()
        .iter()
        .map(|a| {
            let num: i64 = coords.iter().zip(&rho2).zip(a).map(|((x, p), a)| (2 * x + p) * a).sum();
            let den: i64 = rho2.iter().zip(a).map(|(p, a)| p * a).sum();
            num as f64 / den as f64
        })
        .product()
}

/// V(λ) ⊗ V(δ) by the Racah–Speiser rule, for integral dominant λ and δ.
pub fn tensor_decompose_weight(
    lambda: &HighestWeight,
    delta: &HighestWeight,
    fr: FamilyRank,
) -> Result<DecompositionMap> {
    let lam = lambda.padded(fr.rank())?;
    let del = delta.padded(fr.rank())?;
    // run over the weights of the smaller factor
    let (big, small) = if approx_dimension(&lam, fr) >= approx_dimension(&del, fr) {
        (lam, delta)
    } else {
        (del, lambda)
    };
    let small_char = character(small, fr)?;
    let rho2 = fr.rho_doubled();
    let family = fr.family();
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    let mut shifted = vec![0i64; fr.rank()];
    small_char.for_each_weight(|w, k| {
        for i in 0..shifted.len() {
            shifted[i] = 2 * (big[i] + w[i]) + rho2[i];
        }
        let sign = reflect_into_chamber(&mut shifted, family);
        if sign == 0 {
            return;
        }
        let mu: Vec<i64> = shifted.iter().zip(&rho2).map(|(s, p)| (s - p) / 2).collect();
        *acc.entry(mu).or_insert(0) += i64::from(sign) * k as i64;
    });
    let mut out = DecompositionMap::default();
    for (mu, m) in acc {
        match m {
            0 => {}
            m if m < 0 => {
                return Err(Error::internal(format!(
                    "Racah–Speiser left multiplicity {m} at {mu:?} in {lambda} ⊗ {delta} for {fr}"
                )))
            }
            m => out.add(HighestWeight::from_dominant(&mu), m as u64),
        }
    }
    Ok(out)
}

/// m_{λμ}: the decomposition of V(λ) ⊗ V(δ) for partitions λ, δ.
pub fn tensor_decompose(lambda: &Partition, delta: &Partition, fr: FamilyRank) -> Result<DecompositionMap> {
    tensor_decompose_weight(&lambda.into(), &delta.into(), fr)
}

/// f_{n,μ} for n = 1..=depth: level 1 is {δ: 1}, level n+1 sums the
/// decompositions of V(λ) ⊗ V(δ) over level n weighted by f_{n,λ}.
pub fn iterated_power_multiplicities(
    delta: &Partition,
    depth: usize,
    fr: FamilyRank,
) -> Result<Vec<DecompositionMap>> {
    if delta.is_empty() {
        return Err(Error::domain("δ must be a nonzero partition"));
    }
    if depth == 0 {
        return Err(Error::domain("depth must be positive"));
    }
    let d = HighestWeight::from(delta);
    d.padded(fr.rank())?;
    let mut levels = vec![DecompositionMap::singleton(d.clone())];
    for _ in 1..depth {
        let mut next = DecompositionMap::default();
        for (lambda, f) in levels.last().expect("nonempty").iter() {
            for (mu, m) in tensor_decompose_weight(lambda, &d, fr)?.iter() {
                next.add(mu.clone(), f * m);
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// The rank ℓ(λ) + ℓ(δ) beyond which m_{λμ} no longer depends on the rank,
/// raised to the smallest rank the family admits.
pub fn stable_rank(lambda: &Partition, delta: &Partition, family: Family) -> usize {
    (lambda.len() + delta.len()).max(family.min_rank())
}

/// The stabilized multiplicity m^{(δ,X)}_{λμ}, computed at [`stable_rank`].
pub fn stable_tensor_multiplicity(
    lambda: &Partition,
    delta: &Partition,
    mu: &Partition,
    family: Family,
) -> Result<u64> {
    let rank = stable_rank(lambda, delta, family);
    if mu.len() > rank {
        return Ok(0);
    }
    let fr = FamilyRank::new(family, rank)?;
    Ok(tensor_decompose(lambda, delta, fr)?.get_partition(mu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fr(f: Family, r: usize) -> FamilyRank {
        FamilyRank::new(f, r).unwrap()
    }

    fn as_vec(d: &DecompositionMap) -> Vec<(String, u64)> {
        d.iter().map(|(k, v)| (k.to_flag(), v)).collect()
    }

    #[test]
    fn box_times_box() {
        for r in 2..=4 {
            let d = tensor_decompose(&p("1"), &p("1"), fr(Family::A, r)).unwrap();
            assert_eq!(as_vec(&d), vec![("2".into(), 1), ("1,1".into(), 1)]);
        }
        let c2 = tensor_decompose(&p("1"), &p("1"), fr(Family::C, 2)).unwrap();
        assert_eq!(as_vec(&c2), vec![("2".into(), 1), ("1,1".into(), 1), ("0".into(), 1)]);
    }

    #[test]
    fn so4_keeps_mirrored_component() {
        let d = tensor_decompose(&p("1"), &p("1"), fr(Family::D, 2)).unwrap();
        assert_eq!(d.discarded_nonpartition_mass(), 1);
        assert_eq!(d.get(&"1,-1".parse().unwrap()), 1);
        assert_eq!(d.partitions().count(), 3);
    }

    #[test]
    fn so7_weighted_arrow() {
        let d = tensor_decompose(&p("3,1"), &p("2"), fr(Family::B, 3)).unwrap();
        assert_eq!(d.get_partition(&p("3,1")), 2);
    }

    #[test]
    fn power_levels() {
        let a2 = iterated_power_multiplicities(&p("1"), 2, fr(Family::A, 2)).unwrap();
        assert_eq!(as_vec(&a2[1]), vec![("2".into(), 1), ("1,1".into(), 1)]);
        let b3 = iterated_power_multiplicities(&p("2"), 2, fr(Family::B, 3)).unwrap();
        assert_eq!(b3[1].get_partition(&p("2,1,1")), 0);
        for f in Family::ALL {
            let l = iterated_power_multiplicities(&p("1"), 1, fr(f, 3)).unwrap();
            assert_eq!(as_vec(&l[0]), vec![("1".into(), 1)]);
        }
        assert!(iterated_power_multiplicities(&Partition::empty(), 2, fr(Family::A, 2)).is_err());
    }

    #[test]
    fn stable_values() {
        let one = p("1");
        assert_eq!(stable_tensor_multiplicity(&one, &one, &p("2"), Family::C).unwrap(), 1);
        assert_eq!(stable_tensor_multiplicity(&one, &one, &Partition::empty(), Family::C).unwrap(), 1);
        assert_eq!(stable_tensor_multiplicity(&one, &one, &Partition::empty(), Family::A).unwrap(), 0);
        for f in Family::ALL {
            assert_eq!(stable_tensor_multiplicity(&one, &one, &p("2"), f).unwrap(), 1);
        }
    }
}
