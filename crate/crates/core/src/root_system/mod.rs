//! The four classical root systems on the ε-basis and weight-lattice arithmetic.
//!
//! | family | algebra    | simple root α_r    | index set I |
//! |--------|------------|--------------------|-------------|
//! | A      | gl_r       | (none)             | 1..r−1      |
//! | C      | sp_2r      | 2ε_r               | 1..r        |
//! | B      | so_(2r+1)  | ε_r                | 1..r        |
//! | D      | so_2r      | ε_(r−1) + ε_r      | 1..r        |
//!
//! For i < r the simple root is always α_i = ε_i − ε_{i+1}.

mod reflect;
mod weight;

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) use reflect::{dominant_rep, is_dominant_int, orbit, orbit_size, reflect_into_chamber};
pub use weight::WeightVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    B,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::C, Family::B, Family::D];

    /// Smallest rank accepted by [`FamilyRank::new`].
    pub fn min_rank(self) -> usize {
        match self {
            Family::D => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::C => "C",
            Family::B => "B",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "C" => Ok(Family::C),
            "B" => Ok(Family::B),
            "D" => Ok(Family::D),
            _ => Err(Error::domain(format!("unknown family `{s}` (expected A, C, B or D)"))),
        }
    }
}

/// A classical family together with a rank r.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyRank {
    family: Family,
    rank: usize,
}

impl FamilyRank {
    /// Rank must be at least 1, and at least 2 for D so that α_r = ε_{r−1} + ε_r exists.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::domain(format!(
                "family {family} needs rank ≥ {}, got {rank}",
                family.min_rank()
            )));
        }
        Ok(FamilyRank { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// |I|: r − 1 for A, r otherwise.
    pub fn index_len(&self) -> usize {
        match self.family {
            Family::A => self.rank - 1,
            _ => self.rank,
        }
    }

    /// Dimension of the vector representation V(□).
    pub fn natural_dim(&self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r,
            Family::C | Family::D => 2 * r,
            Family::B => 2 * r + 1,
        }
    }

    pub(crate) fn positive_roots_int(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut out = Vec::new();
        let unit = |i: usize| {
            let mut v = vec![0i64; r];
            v[i] = 1;
            v
        };
        for i in 0..r {
            for j in i + 1..r {
                let mut minus = unit(i);
                minus[j] = -1;
                out.push(minus);
                if self.family != Family::A {
                    let mut plus = unit(i);
                    plus[j] = 1;
                    out.push(plus);
                }
            }
            match self.family {
                Family::C => {
                    let mut v = vec![0; r];
                    v[i] = 2;
                    out.push(v);
                }
                Family::B => out.push(unit(i)),
                _ => {}
            }
        }
        out
    }

    /// The positive roots R₊.
    pub fn positive_roots(&self) -> Vec<WeightVec> {
        self.positive_roots_int()
            .iter()
            .map(|v| WeightVec::from_ints(v))
            .collect()
    }

    /// The simple system (α_i)_{i∈I}.
    pub fn simple_roots(&self) -> Vec<WeightVec> {
        let r = self.rank;
        let mut out: Vec<WeightVec> = (1..r)
            .map(|i| &WeightVec::epsilon(r, i) - &WeightVec::epsilon(r, i + 1))
            .collect();
        match self.family {
            Family::A => {}
            Family::C => out.push(Rational64::from_integer(2) * &WeightVec::epsilon(r, r)),
            Family::B => out.push(WeightVec::epsilon(r, r)),
            Family::D => out.push(&WeightVec::epsilon(r, r - 1) + &WeightVec::epsilon(r, r)),
        }
        out
    }

    /// The fundamental weights (ω_i)_{i∈I}.
    pub fn fundamental_weights(&self) -> Vec<WeightVec> {
        let r = self.rank;
        let half = Rational64::new(1, 2);
        let one = Rational64::from_integer(1);
        let prefix = |i: usize, c: Rational64| {
            let mut v = WeightVec::zero(r);
            for x in &mut v.coords_mut()[..i] {
                *x = c;
            }
            v
        };
        (1..=self.index_len())
            .map(|i| match self.family {
                Family::A | Family::C => prefix(i, one),
                Family::B if i == r => prefix(r, half),
                Family::D if i == r => prefix(r, half),
                Family::D if i == r - 1 => {
                    let mut v = prefix(r, half);
                    v.coords_mut()[r - 1] = -half;
                    v
                }
                _ => prefix(i, one),
            })
            .collect()
    }

    /// ω_i^∨ = (2/⟨α_i,α_i⟩) ω_i, dual to the simple roots.
    pub fn fundamental_coweights(&self) -> Vec<WeightVec> {
        self.simple_roots()
            .iter()
            .zip(self.fundamental_weights())
            .map(|(a, w)| Rational64::from_integer(2) / a.dot(a) * &w)
            .collect()
    }

    /// ρ = Σ ω_i.
    pub fn rho(&self) -> WeightVec {
        let r = self.rank;
        self.fundamental_weights()
            .iter()
            .fold(WeightVec::zero(r), |acc, w| &acc + w)
    }

    /// 2ρ as an integer vector.
    pub(crate) fn rho_doubled(&self) -> Vec<i64> {
        self.rho()
            .coords()
            .iter()
            .map(|c| (c * 2).to_integer())
            .collect()
    }

    /// ρ^∨ = Σ ω_i^∨.
    pub fn rho_coweight(&self) -> WeightVec {
        self.fundamental_coweights()
            .iter()
            .fold(WeightVec::zero(self.rank), |acc, w| &acc + w)
    }

    /// Coordinates c_i = ⟨ν, ω_i^∨⟩ with Σ c_i α_i = ν.
    ///
    /// For A the simple roots only span the hyperplane of coordinate sum zero,
    /// so any other ν is rejected.
    pub fn simple_root_coordinates(&self, nu: &WeightVec) -> Result<Vec<Rational64>> {
        if nu.rank() != self.rank {
            return Err(Error::domain(format!("{nu} does not have {} coordinates", self.rank)));
        }
        if self.family == Family::A && !nu.coords().iter().copied().sum::<Rational64>().is_zero() {
            return Err(Error::domain(format!("{nu} is not in the span of the A_{} roots", self.rank)));
        }
        let coords: Vec<Rational64> = self
            .fundamental_coweights()
            .iter()
            .map(|w| nu.dot(w))
            .collect();
        let rebuilt = self
            .simple_roots()
            .iter()
            .zip(&coords)
            .fold(WeightVec::zero(self.rank), |acc, (a, &c)| &acc + &(c * a));
        if &rebuilt != nu {
            return Err(Error::internal(format!("simple-root expansion of {nu} does not reconstruct it")));
        }
        Ok(coords)
    }

    /// Twice the simple-root coordinates of an integral vector, via prefix sums.
    ///
    /// For A the caller guarantees a zero coordinate sum.
    pub(crate) fn doubled_coordinates(&self, nu: &[i64]) -> Vec<i64> {
        let r = self.rank;
        let mut prefix = Vec::with_capacity(r);
        let mut acc = 0i64;
        for &x in nu {
            acc += x;
            prefix.push(acc);
        }
        let mut out: Vec<i64> = prefix.iter().take(r.saturating_sub(1)).map(|p| 2 * p).collect();
        match self.family {
            Family::A => {}
            Family::C => out.push(prefix[r - 1]),
            Family::B => out.push(2 * prefix[r - 1]),
            Family::D => {
                out[r - 2] = prefix[r - 2] - nu[r - 1];
                out.push(prefix[r - 1]);
            }
        }
        out
    }

    /// Membership in P₊.
    pub fn is_dominant(&self, nu: &WeightVec) -> bool {
        let v = nu.coords();
        let r = v.len();
        if r == 0 || !v.windows(2).all(|w| w[0] >= w[1]) {
            return r == 0;
        }
        match self.family {
            Family::A => true,
            Family::C | Family::B => v[r - 1] >= Rational64::zero(),
            Family::D => r < 2 || v[r - 2] >= v[r - 1].abs(),
        }
    }

    /// The dominant element w·ν of the W-orbit of ν, with det(w), or sign 0
    /// when ν lies on a reflecting hyperplane.
    pub fn dominant_reflect_shifted(&self, nu: &WeightVec) -> (WeightVec, i8) {
        let mut out = nu.clone();
        let sign = reflect_into_chamber(out.coords_mut(), self.family);
        (out, sign)
    }
}

impl fmt::Display for FamilyRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(f: Family, r: usize) -> FamilyRank {
        FamilyRank::new(f, r).unwrap()
    }

    fn ints(v: &[i64]) -> WeightVec {
        WeightVec::from_ints(v)
    }

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn positive_root_examples() {
        assert_eq!(fr(Family::A, 2).positive_roots(), vec![ints(&[1, -1])]);
        let mut c2 = fr(Family::C, 2).positive_roots();
        c2.sort();
        let mut want = vec![ints(&[2, 0]), ints(&[0, 2]), ints(&[1, -1]), ints(&[1, 1])];
        want.sort();
        assert_eq!(c2, want);
        let d2 = fr(Family::D, 2).positive_roots();
        assert_eq!(d2, vec![ints(&[1, -1]), ints(&[1, 1])]);
    }

    #[test]
    fn positive_root_counts() {
        for r in 1..=6usize {
            assert_eq!(fr(Family::A, r).positive_roots().len(), r * (r - 1) / 2);
            assert_eq!(fr(Family::C, r).positive_roots().len(), r * r);
            assert_eq!(fr(Family::B, r).positive_roots().len(), r * r);
            if r >= 2 {
                assert_eq!(fr(Family::D, r).positive_roots().len(), r * (r - 1));
            }
        }
    }

    #[test]
    fn simple_root_examples() {
        assert_eq!(fr(Family::B, 3).simple_roots()[2], ints(&[0, 0, 1]));
        assert_eq!(fr(Family::A, 2).simple_roots(), vec![ints(&[1, -1])]);
        assert_eq!(
            fr(Family::D, 3).simple_roots(),
            vec![ints(&[1, -1, 0]), ints(&[0, 1, -1]), ints(&[0, 1, 1])]
        );
        assert!(fr(Family::A, 1).simple_roots().is_empty());
    }

    #[test]
    fn coweight_examples() {
        let c2 = fr(Family::C, 2).fundamental_coweights();
        assert_eq!(c2[1], WeightVec::new(vec![q(1, 2), q(1, 2)]));
        let b2 = fr(Family::B, 2).fundamental_coweights();
        assert_eq!(b2[1], ints(&[1, 1]));
        assert_eq!(fr(Family::A, 3).fundamental_coweights()[0], ints(&[1, 0, 0]));
    }

    #[test]
    fn coweights_are_dual_to_simple_roots() {
        for fam in Family::ALL {
            for r in fam.min_rank()..=6 {
                let x = fr(fam, r);
                let roots = x.simple_roots();
                for (i, w) in x.fundamental_coweights().iter().enumerate() {
                    for (j, a) in roots.iter().enumerate() {
                        let want = if i == j { 1 } else { 0 };
                        assert_eq!(w.dot(a), Rational64::from_integer(want), "{x} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn coordinate_examples() {
        let c3 = fr(Family::C, 3);
        let a2 = c3.simple_roots()[1].clone();
        assert_eq!(c3.simple_root_coordinates(&a2).unwrap(), vec![q(0, 1), q(1, 1), q(0, 1)]);
        let b3 = fr(Family::B, 3);
        assert_eq!(
            b3.simple_root_coordinates(&ints(&[1, 0, 0])).unwrap(),
            vec![q(1, 1), q(1, 1), q(1, 1)]
        );
        // 2ε₁ = α₁ + (ε₁ + ε₂) = α₁ + α₁ + α₂, solved: 2α₁ + α₂
        let c2 = fr(Family::C, 2);
        let c = c2.simple_root_coordinates(&ints(&[2, 0])).unwrap();
        assert_eq!(c, vec![q(2, 1), q(1, 1)]);
        assert!(fr(Family::A, 3).simple_root_coordinates(&ints(&[1, 0, 0])).is_err());
        assert_eq!(fr(Family::A, 1).simple_root_coordinates(&ints(&[0])).unwrap(), vec![]);
    }

    #[test]
    fn doubled_fast_path_matches_exact_coordinates() {
        let vectors: [&[i64]; 5] = [&[1, 0, 0, 0], &[2, -1, 0, 3], &[0, 0, 1, -1], &[3, 3, -2, 1], &[-1, 2, 0, 0]];
        for fam in Family::ALL {
            let x = fr(fam, 4);
            for v in vectors {
                let mut v = v.to_vec();
                if fam == Family::A {
                    let s: i64 = v.iter().sum();
                    v[3] -= s;
                }
                let exact = x.simple_root_coordinates(&ints(&v)).unwrap();
                let fast = x.doubled_coordinates(&v);
                let want: Vec<i64> = exact.iter().map(|c| (c * 2).to_integer()).collect();
                assert_eq!(fast, want, "{x} {v:?}");
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(fr(Family::A, 3).is_dominant(&ints(&[3, 1, 0])));
        assert!(fr(Family::D, 2).is_dominant(&ints(&[2, -1])));
        assert!(!fr(Family::C, 2).is_dominant(&ints(&[2, -1])));
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(fr(Family::A, 2).dominant_reflect_shifted(&ints(&[0, 2])), (ints(&[2, 0]), -1));
        assert_eq!(fr(Family::C, 2).dominant_reflect_shifted(&ints(&[-1, 3])), (ints(&[3, 1]), 1));
        assert_eq!(fr(Family::D, 2).dominant_reflect_shifted(&ints(&[2, 2])).1, 0);
    }

    #[test]
    fn rho_values() {
        assert_eq!(fr(Family::A, 3).rho(), ints(&[2, 1, 0]));
        assert_eq!(fr(Family::C, 3).rho(), ints(&[3, 2, 1]));
        assert_eq!(fr(Family::B, 2).rho(), WeightVec::new(vec![q(3, 2), q(1, 2)]));
        assert_eq!(fr(Family::D, 3).rho(), ints(&[2, 1, 0]));
    }

    #[test]
    fn d_rank_one_rejected() {
        assert!(FamilyRank::new(Family::D, 1).is_err());
        assert!(FamilyRank::new(Family::A, 0).is_err());
    }
}
