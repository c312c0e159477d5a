use num_traits::ToPrimitive;

use super::theta::ThetaSpec;
use crate::characters::character;
use crate::error::{Error, Result};
use crate::root_system::{Family, FamilyRank, WeightVec};
use crate::shape::{HighestWeight, Partition};

/// Default truncation tolerance for [`limit_s_a`].
pub const DEFAULT_LIMIT_TOL: f64 = 1e-10;
/// Largest rank [`limit_s_a`] will reach before giving up.
pub const LIMIT_RANK_CAP: usize = 200;

/// θ^{[ν]} = Π_i θ_i^{⟨ν, ω_i^∨⟩}, with the exponents computed exactly.
pub fn theta_exponent(nu: &WeightVec, theta: &ThetaSpec, fr: FamilyRank) -> Result<f64> {
    let coords = fr.simple_root_coordinates(nu)?;
    Ok(coords
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let t = theta.theta(i + 1);
            if c.is_integer() {
                t.powi(c.to_integer() as i32)
            } else {
                t.powf(c.to_f64().expect("finite rational"))
            }
        })
        .product())
}

/// θ_1..θ_|I| and their square roots, for powering by doubled exponents.
#[derive(Clone, Debug)]
pub(crate) struct ThetaPowers {
    fr: FamilyRank,
    theta: Vec<f64>,
    sqrt: Vec<f64>,
}

impl ThetaPowers {
    pub(crate) fn new(theta: &ThetaSpec, fr: FamilyRank) -> Self {
        let theta = theta.values(fr.index_len());
        let sqrt = theta.iter().map(|t| t.sqrt()).collect();
        ThetaPowers { fr, theta, sqrt }
    }

    /// θ^{[ν]} for an integral ν given in ε-coordinates.
    pub(crate) fn of_weight(&self, nu: &[i64]) -> f64 {
        self.of_doubled(&self.fr.doubled_coordinates(nu))
    }

    fn of_doubled(&self, doubled: &[i64]) -> f64 {
        doubled
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if d % 2 == 0 {
                    self.theta[i].powi((d / 2) as i32)
                } else {
                    self.sqrt[i].powi(d as i32)
                }
            })
            .product()
    }
}

/// S_λ(θ) = Σ_ω K_{λω} θ^{[λ−ω]} for any highest weight the family admits.
pub fn specialize_weight(lambda: &HighestWeight, theta: &ThetaSpec, fr: FamilyRank) -> Result<f64> {
    let top = lambda.padded(fr.rank())?;
    let ch = character(lambda, fr)?;
    let powers = ThetaPowers::new(theta, fr);
    let mut diff = vec![0i64; fr.rank()];
    let mut sum = 0.0;
    ch.for_each_weight(|w, k| {
        for ((d, t), x) in diff.iter_mut().zip(&top).zip(w) {
            *d = t - x;
        }
        sum += k as f64 * powers.of_weight(&diff);
    });
    Ok(sum)
}

/// The normalized character S_λ(θ) of V(λ) for the given family and rank.
pub fn specialize_s(lambda: &Partition, theta: &ThetaSpec, fr: FamilyRank) -> Result<f64> {
    specialize_weight(&HighestWeight::from(lambda), theta, fr)
}

/// Closed product for S_λ^{gl_r} at θ_i = b:
/// Π_{i<j≤ℓ} (1−b^{λ_i−λ_j+j−i})/(1−b^{j−i}) · Π_{i≤ℓ<j≤r} (1−b^{λ_i+j−i})/(1−b^{j−i}).
pub fn principal_specialization_a(lambda: &Partition, b: f64, rank: usize) -> Result<f64> {
    let l = lambda.len();
    if rank <= l {
        return Err(Error::domain(format!("the product formula needs r > ℓ(λ) = {l}, got r = {rank}")));
    }
    if !(b > 0.0 && b < 1.0) {
        return Err(Error::domain(format!("b must lie in (0, 1), got {b}")));
    }
    let parts: Vec<i64> = lambda.parts().iter().map(|&x| i64::from(x)).collect();
    let factor = |num: i64, den: i64| (1.0 - b.powi(num as i32)) / (1.0 - b.powi(den as i32));
    let mut value = 1.0;
    for i in 0..l {
        for j in i + 1..l {
            let gap = (j - i) as i64;
            value *= factor(parts[i] - parts[j] + gap, gap);
        }
        for j in l..rank {
            let gap = (j - i) as i64;
            value *= factor(parts[i] + gap, gap);
        }
    }
    Ok(value)
}

/// The limit S_λ^A(θ) together with how it was reached.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LimitValue {
    pub value: f64,
    /// Size of the final increment, an estimate of the truncation error.
    pub last_increment: f64,
    /// Rank at which the increments fell below the tolerance.
    pub rank: usize,
}

/// S_λ^{gl_r}(θ) for r = ℓ(λ), ℓ(λ)+1, …, by adding one variable at a time.
///
/// With x_1 = 1 and x_{i+1} = θ_i x_i one has S_λ = s_λ(x)/x^λ. The Schur
/// polynomials s_κ for every κ ⊆ λ are carried along; adding x_r uses the
/// branching s_κ(x_1..x_r) = Σ s_τ(x_1..x_{r−1}) x_r^{|κ/τ|} over horizontal
/// strips κ/τ.
pub(crate) struct BranchingLadder {
    theta: ThetaSpec,
    parts: Vec<u32>,
    /// (index of τ, |κ| − |τ|) for every horizontal strip κ/τ, per κ.
    strips: Vec<Vec<(usize, i32)>>,
    top: usize,
    values: Vec<f64>,
    rank: usize,
    /// x_rank
    x: f64,
    /// log x^λ, accumulated while rank ≤ ℓ(λ)
    log_norm: f64,
}

impl BranchingLadder {
    pub(crate) fn new(lambda: &Partition, theta: &ThetaSpec) -> Self {
        let parts = lambda.parts().to_vec();
        let l = parts.len();
        let mut subs: Vec<Vec<u32>> = vec![Vec::new()];
        for i in 0..l {
            let mut next = Vec::new();
            for s in &subs {
                let cap = if i == 0 { parts[0] } else { parts[i].min(s[i - 1]) };
                for v in 0..=cap {
                    let mut t = s.clone();
                    t.push(v);
                    next.push(t);
                }
            }
            subs = next;
        }
        let index = |k: &[u32]| subs.binary_search_by(|s| s.as_slice().cmp(k)).expect("subpartition");
        let strips = subs
            .iter()
            .map(|k| {
                // τ_i ranges over [κ_{i+1}, κ_i]
                let mut taus: Vec<Vec<u32>> = vec![Vec::new()];
                for i in 0..l {
                    let lo = k.get(i + 1).copied().unwrap_or(0);
                    taus = taus
                        .into_iter()
                        .flat_map(|t| {
                            (lo..=k[i]).map(move |v| {
                                let mut t = t.clone();
                                t.push(v);
                                t
                            })
                        })
                        .collect();
                }
                let size: u32 = k.iter().sum();
                taus.iter()
                    .map(|t| (index(t), (size - t.iter().sum::<u32>()) as i32))
                    .collect()
            })
            .collect();
        let top = index(&parts);
        let mut values = vec![0.0; subs.len()];
        values[0] = 1.0;
        BranchingLadder {
            theta: theta.clone(),
            parts,
            strips,
            top,
            values,
            rank: 0,
            x: 1.0,
            log_norm: 0.0,
        }
    }

    /// Adds the next variable and returns S_λ^{gl_r}(θ) at the new rank r
    /// (zero while r < ℓ(λ)).
    pub(crate) fn step(&mut self) -> f64 {
        if self.rank > 0 {
            self.x *= self.theta.theta(self.rank);
        }
        self.rank += 1;
        if let Some(&p) = self.parts.get(self.rank - 1) {
            self.log_norm += f64::from(p) * self.x.ln();
        }
        let x = self.x;
        let next: Vec<f64> = self
            .strips
            .iter()
            .map(|row| row.iter().map(|&(t, d)| self.values[t] * x.powi(d)).sum())
            .collect();
        self.values = next;
        self.current()
    }

    pub(crate) fn current(&self) -> f64 {
        if self.rank < self.parts.len() {
            0.0
        } else {
            self.values[self.top] * (-self.log_norm).exp()
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }
}

/// S_λ^A(θ) = lim_r S_λ^{gl_r}(θ), with the default tolerance and rank cap.
pub fn limit_s_a(lambda: &Partition, theta: &ThetaSpec, tol: f64) -> Result<LimitValue> {
    limit_s_a_capped(lambda, theta, tol, LIMIT_RANK_CAP)
}

/// Raises the rank until an increment drops below `tol`; the sequence is
/// weakly increasing, so the final increment bounds the step just taken.
pub fn limit_s_a_capped(lambda: &Partition, theta: &ThetaSpec, tol: f64, cap: usize) -> Result<LimitValue> {
    theta.require_subunit()?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let mut ladder = BranchingLadder::new(lambda, theta);
    let start = lambda.len().max(1);
    let mut prev = 0.0;
    while ladder.rank() < start {
        prev = ladder.step();
    }
    while ladder.rank() < cap {
        let value = ladder.step();
        let increment = value - prev;
        if increment < tol {
            return Ok(LimitValue {
                value,
                last_increment: increment.max(0.0),
                rank: ladder.rank(),
            });
        }
        prev = value;
    }
    Err(Error::domain(format!(
        "S^A_{lambda} at {theta} did not settle to {tol} by rank {cap}"
    )))
}

/// The gap S_λ^{g_r}(θ) − S_λ^{gl_r}(θ) and its claimed upper bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DefectBound {
    pub defect: f64,
    pub bound: f64,
    /// Whether 0 ≤ defect ≤ bound, up to rounding.
    pub holds: bool,
}

/// Compares S_λ^{g_r} with S_λ^{gl_r} and evaluates the bound
/// b^{r−ℓ+1}(2r)^{|λ|} (C), b^{r−ℓ}(2r+1)^{|λ|} (B), b^{r−ℓ+2}(2r)^{|λ|} (D),
/// with b = sup θ.
///
/// The D bound fails in general: the smallest root-degree of a weight outside
/// the gl_r character is r − ℓ (via ε_ℓ + ε_r), not r − ℓ + 2, so for small b
/// the defect is of order b^{r−ℓ}. The violation is reported through `holds`.
pub fn defect_and_bound(lambda: &Partition, theta: &ThetaSpec, fr: FamilyRank) -> Result<DefectBound> {
    theta.require_subunit()?;
    let r = fr.rank();
    let exponent = |shift: i64| r as i64 - lambda.len() as i64 + shift;
    let (power, base) = match fr.family() {
        Family::A => return Err(Error::domain("the defect compares C, B or D with A; got family A")),
        Family::C => (exponent(1), 2 * r as u64),
        Family::B => (exponent(0), 2 * r as u64 + 1),
        Family::D => (exponent(2), 2 * r as u64),
    };
    let s = specialize_s(lambda, theta, fr)?;
    let s_a = specialize_s(lambda, theta, FamilyRank::new(Family::A, r)?)?;
    let defect = s - s_a;
    let b = theta.sup();
    let bound = b.powi(power as i32) * (base as f64).powi(lambda.size() as i32);
    let slack = 1e-12 * s;
    Ok(DefectBound {
        defect,
        bound,
        holds: defect >= -slack && defect <= bound + slack,
    })
}
