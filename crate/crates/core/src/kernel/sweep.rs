use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::evaluator::{FiniteEvaluator, LimitEvaluator};
use super::theta::ThetaSpec;
use crate::characters::tensor_decompose;
use crate::error::{Error, Result};
use crate::format::format_sig12;
use crate::root_system::{Family, FamilyRank};
use crate::shape::{HighestWeight, Partition};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub rank: usize,
    pub pi_r: f64,
    pub pi_limit: f64,
    pub gap: f64,
}

/// Π_r(λ → μ) for every r in `ranks` next to the limit value.
///
/// The pair must be adjacent at some rank of the range or in the limit.
pub fn convergence_sweep(
    delta: &Partition,
    lambda: &Partition,
    mu: &Partition,
    family: Family,
    theta: &ThetaSpec,
    ranks: RangeInclusive<usize>,
    tol: f64,
) -> Result<Vec<SweepRow>> {
    if ranks.is_empty() {
        return Err(Error::domain("empty rank range"));
    }
    let floor = lambda.len().max(mu.len()).max(delta.len()).max(family.min_rank());
    if *ranks.start() < floor {
        return Err(Error::domain(format!(
            "ranks must start at {floor} or above for δ = {delta}, λ = {lambda}, μ = {mu} in family {family}"
        )));
    }
    let limit = LimitEvaluator::new(delta, theta, tol)?;
    let m_limit = if limit.is_top_degree(lambda, mu) {
        limit.type_a_row(lambda)?.get_partition(mu)
    } else {
        0
    };
    let pi_limit = limit.probability(lambda, mu, m_limit)?;
    let (l, m) = (HighestWeight::from(lambda), HighestWeight::from(mu));
    let finite: Vec<(usize, u64, f64)> = ranks
        .into_par_iter()
        .map(|r| {
            let fr = FamilyRank::new(family, r)?;
            let weight = tensor_decompose(lambda, delta, fr)?.get(&m);
            let eval = FiniteEvaluator::new(delta, theta, fr);
            let p = if weight == 0 { 0.0 } else { eval.probability(&l, &m, weight)? };
            Ok((r, weight, p))
        })
        .collect::<Result<_>>()?;
    if m_limit == 0 && finite.iter().all(|&(_, w, _)| w == 0) {
        return Err(Error::domain(format!(
            "{lambda} → {mu} is not an arrow for δ = {delta} in family {family} at any rank swept or in the limit"
        )));
    }
    Ok(finite
        .into_iter()
        .map(|(rank, _, pi_r)| SweepRow {
            rank,
            pi_r,
            pi_limit,
            gap: (pi_r - pi_limit).abs(),
        })
        .collect())
}

/// CSV with header `r,pi_r,pi_limit,gap`, numbers to 12 significant digits.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("r,pi_r,pi_limit,gap\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.rank,
            format_sig12(row.pi_r),
            format_sig12(row.pi_limit),
            format_sig12(row.gap)
        ));
    }
    out
}
