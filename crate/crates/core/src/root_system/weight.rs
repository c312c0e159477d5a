use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

/// An exact rational vector on the orthonormal basis ε₁..ε_r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(Vec<Rational64>);

impl WeightVec {
    pub fn new(coords: Vec<Rational64>) -> Self {
        WeightVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![Rational64::zero(); rank])
    }

    /// The basis vector ε_i (1-based).
    pub fn epsilon(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i - 1] = Rational64::from_integer(1);
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVec(coords.iter().map(|&c| Rational64::from_integer(c)).collect())
    }

    /// Integer coordinates, if every coordinate is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.0
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [Rational64] {
        &mut self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &WeightVec) -> Rational64 {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in inner product");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }
}

impl Add for &WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.rank(), rhs.rank());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: &WeightVec) -> WeightVec {
        assert_eq!(self.rank(), rhs.rank());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&WeightVec> for Rational64 {
    type Output = WeightVec;
    fn mul(self, rhs: &WeightVec) -> WeightVec {
        WeightVec(rhs.0.iter().map(|a| self * a).collect())
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", cs.join(", "))
    }
}
