use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::root_system::{dominant_rep, is_dominant_int, FamilyRank};

/// Dominant weights of V(λ) with their multiplicities, ordered by increasing
/// height of λ − μ (so λ itself comes first).
pub(super) fn dominant_multiplicities(highest: &[i64], fr: FamilyRank) -> Result<Vec<(Vec<i64>, u64)>> {
    let family = fr.family();
    let roots = fr.positive_roots_int();
    let rho2 = fr.rho_doubled();

    // Every dominant μ ≤ λ is reached from λ by subtracting positive roots
    // without leaving the dominant chamber.
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(highest.to_vec(), ());
    queue.push_back(highest.to_vec());
    while let Some(mu) = queue.pop_front() {
        for alpha in &roots {
            let nu: Vec<i64> = mu.iter().zip(alpha).map(|(m, a)| m - a).collect();
            if is_dominant_int(&nu, family) && !seen.contains_key(&nu) {
                seen.insert(nu.clone(), ());
                queue.push_back(nu);
            }
        }
    }

    let height = |mu: &[i64]| -> i64 {
        let diff: Vec<i64> = highest.iter().zip(mu).map(|(l, m)| l - m).collect();
        fr.doubled_coordinates(&diff).iter().sum()
    };
    let mut order: Vec<Vec<i64>> = seen.into_keys().collect();
    order.sort_by_cached_key(|mu| (height(mu), std::cmp::Reverse(mu.clone())));

    let norm2 = |v: &[i64]| -> i128 {
        v.iter()
            .zip(&rho2)
            .map(|(&x, &p)| {
                let y = i128::from(2 * x + p);
                y * y
            })
            .sum()
    };
    let top = norm2(highest);

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::with_capacity(order.len());
    let mut out = Vec::with_capacity(order.len());
    for mu in order {
        if mu.as_slice() == highest {
            mult.insert(mu.clone(), 1);
            out.push((mu, 1));
            continue;
        }
        // Σ_{α>0} Σ_{k≥1} m(μ+kα) ⟨μ+kα, α⟩
        let mut acc: i128 = 0;
        for alpha in &roots {
            let mut shifted = mu.clone();
            loop {
                for (s, a) in shifted.iter_mut().zip(alpha) {
                    *s += a;
                }
                let rep = dominant_rep(&shifted, family);
                let Some(&m) = mult.get(&rep) else { break };
                let ip: i64 = shifted.iter().zip(alpha).map(|(s, a)| s * a).sum();
                acc += i128::from(m) * i128::from(ip);
            }
        }
        // m(μ) = 2 acc / (|λ+ρ|² − |μ+ρ|²); norms are taken on doubled vectors
        let denom = top - norm2(&mu);
        if denom <= 0 || (8 * acc) % denom != 0 {
            return Err(Error::internal(format!(
                "Freudenthal step at {mu:?} for {highest:?} in {fr} is not integral"
            )));
        }
        let m = (8 * acc) / denom;
        if m <= 0 {
            return Err(Error::internal(format!(
                "dominant weight {mu:?} of {highest:?} in {fr} got multiplicity {m}"
            )));
        }
        mult.insert(mu.clone(), m as u64);
        out.push((mu, m as u64));
    }
    Ok(out)
}
