//! Integer partitions and the integral dominant weights that label graph vertices.
//!
//! Both types order canonically: larger size first, then parts compared
//! lexicographically with the larger sequence first. Every map, level and edge
//! list in the crate iterates in this order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// empty partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::domain(format!("partition {parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes, |λ|.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Coordinates on ε₁..ε_r, zero padded.
    pub fn padded(&self, rank: usize) -> Result<Vec<i64>> {
        HighestWeight::from(self).padded(rank)
    }

    /// All partitions of `n`, in canonical order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Comma-separated parts, `0` for the empty partition (the command-line form).
    pub fn to_flag(&self) -> String {
        HighestWeight::from(self).to_flag()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let hw: HighestWeight = s.parse()?;
        hw.as_partition()
            .ok_or_else(|| Error::domain(format!("`{s}` is not a partition")))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        HighestWeight::from(self).fmt(f)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An integral dominant weight written on ε₁, ε₂, … with trailing zeros dropped.
///
/// Almost always this is a partition. The one exception is family D at small
/// rank, where constituents such as V(ε₁ − ε₂) of so₄ carry a negative last
/// coordinate; those weights have exactly `rank` coordinates and satisfy
/// `λ_{r−1} ≥ |λ_r|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct HighestWeight {
    parts: Vec<i64>,
}

impl HighestWeight {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let n = parts.len();
        let ok = match n {
            0 => true,
            1 => parts[0] > 0,
            _ => {
                parts[..n - 1].iter().all(|&p| p > 0)
                    && parts[..n - 1].windows(2).all(|w| w[0] >= w[1])
                    && parts[n - 2] >= parts[n - 1].abs()
            }
        };
        if !ok {
            return Err(Error::domain(format!("{parts:?} is not an integral dominant weight label")));
        }
        Ok(HighestWeight { parts })
    }

    /// Trims a dominant coordinate vector. The caller guarantees dominance.
    pub(crate) fn from_dominant(coords: &[i64]) -> Self {
        let mut parts = coords.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        HighestWeight { parts }
    }

    pub fn empty() -> Self {
        HighestWeight::default()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Σ|λ_i|; equals |λ| for partitions.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|p| p.unsigned_abs()).sum()
    }

    pub fn is_partition(&self) -> bool {
        self.parts.last().is_none_or(|&p| p > 0)
    }

    pub fn as_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition {
            parts: self.parts.iter().map(|&p| p as u32).collect(),
        })
    }

    pub fn padded(&self, rank: usize) -> Result<Vec<i64>> {
        if self.parts.len() > rank {
            return Err(Error::domain(format!("{self} has more than {rank} parts")));
        }
        if !self.is_partition() && self.parts.len() != rank {
            return Err(Error::domain(format!("{self} only makes sense at rank {}", self.parts.len())));
        }
        let mut v = self.parts.clone();
        v.resize(rank, 0);
        Ok(v)
    }

    pub fn to_flag(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            join(&self.parts, ",")
        }
    }
}

pub(crate) fn join(parts: &[i64], sep: &str) -> String {
    parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(sep)
}

impl From<&Partition> for HighestWeight {
    fn from(p: &Partition) -> Self {
        HighestWeight {
            parts: p.parts.iter().map(|&x| i64::from(x)).collect(),
        }
    }
}

impl From<Partition> for HighestWeight {
    fn from(p: Partition) -> Self {
        HighestWeight::from(&p)
    }
}

impl TryFrom<Vec<i64>> for HighestWeight {
    type Error = Error;
    fn try_from(parts: Vec<i64>) -> Result<Self> {
        HighestWeight::new(parts)
    }
}

impl From<HighestWeight> for Vec<i64> {
    fn from(h: HighestWeight) -> Vec<i64> {
        h.parts
    }
}

impl FromStr for HighestWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(HighestWeight::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::domain(format!("bad part `{t}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        HighestWeight::new(parts)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "({})", join(&self.parts, ","))
        }
    }
}

impl Ord for HighestWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .size()
            .cmp(&self.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for HighestWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
