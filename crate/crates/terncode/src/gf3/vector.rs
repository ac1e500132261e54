//! Scalars of `F_3` and vectors of `F_3^n` with their rank encoding.

use crate::error::{Error, Result};
use crate::pow3;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of `F_3`, always one of 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Trit(u8);

impl Trit {
    pub const ZERO: Trit = Trit(0);
    pub const ONE: Trit = Trit(1);
    pub const TWO: Trit = Trit(2);

    /// Wraps a value already known to be in `{0, 1, 2}`.
    #[inline]
    pub fn new(v: u8) -> Trit {
        assert!(v < 3, "Trit value {v} out of range");
        Trit(v)
    }

    /// Reduces an arbitrary integer mod 3.
    #[inline]
    pub fn from_int(v: i64) -> Trit {
        Trit(v.rem_euclid(3) as u8)
    }

    #[inline]
    pub fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Trit {
    type Output = Trit;
    #[inline]
    fn add(self, rhs: Trit) -> Trit {
        Trit((self.0 + rhs.0) % 3)
    }
}

impl Sub for Trit {
    type Output = Trit;
    #[inline]
    fn sub(self, rhs: Trit) -> Trit {
        Trit((3 + self.0 - rhs.0) % 3)
    }
}

impl Mul for Trit {
    type Output = Trit;
    #[inline]
    fn mul(self, rhs: Trit) -> Trit {
        Trit((self.0 * rhs.0) % 3)
    }
}

impl Neg for Trit {
    type Output = Trit;
    #[inline]
    fn neg(self) -> Trit {
        Trit((3 - self.0) % 3)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A vector of `F_3^n`. Coordinate 0 is the least significant rank digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryVector {
    coords: Vec<Trit>,
}

impl TernaryVector {
    /// Builds a vector from explicit coordinates.
    pub fn new(coords: Vec<Trit>) -> TernaryVector {
        TernaryVector { coords }
    }

    /// The zero vector of `F_3^n`.
    pub fn zero(n: usize) -> TernaryVector {
        TernaryVector { coords: vec![Trit::ZERO; n] }
    }

    /// The standard basis vector `e_i`.
    pub fn standard_basis(n: usize, i: usize) -> TernaryVector {
        assert!(i < n, "basis index {i} out of range for dimension {n}");
        let mut coords = vec![Trit::ZERO; n];
        coords[i] = Trit::ONE;
        TernaryVector { coords }
    }

    /// Decodes a rank into its little-endian base-3 digit vector.
    pub fn from_rank(rank: usize, n: usize) -> Result<TernaryVector> {
        if rank >= pow3(n) {
            return Err(Error::RankOutOfRange { rank, n });
        }
        let mut coords = Vec::with_capacity(n);
        let mut r = rank;
        for _ in 0..n {
            coords.push(Trit::new((r % 3) as u8));
            r /= 3;
        }
        Ok(TernaryVector { coords })
    }

    /// The canonical integer rank, inverse of [`TernaryVector::from_rank`].
    pub fn rank(&self) -> usize {
        let mut r = 0usize;
        for c in self.coords.iter().rev() {
            r = r * 3 + c.value() as usize;
        }
        r
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coords.len()
    }

    #[inline]
    pub fn coords(&self) -> &[Trit] {
        &self.coords
    }

    #[inline]
    pub fn coord(&self, i: usize) -> Trit {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Standard inner product `sum u_i v_i` in `F_3`.
    pub fn dot(&self, other: &TernaryVector) -> Result<Trit> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: other.n() });
        }
        let mut acc = 0u32;
        for (a, b) in self.coords.iter().zip(&other.coords) {
            acc += (a.value() * b.value()) as u32;
        }
        Ok(Trit::new((acc % 3) as u8))
    }

    pub fn add(&self, other: &TernaryVector) -> Result<TernaryVector> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: other.n() });
        }
        Ok(TernaryVector {
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &TernaryVector) -> Result<TernaryVector> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), got: other.n() });
        }
        Ok(TernaryVector {
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| a - b).collect(),
        })
    }

    pub fn neg(&self) -> TernaryVector {
        TernaryVector { coords: self.coords.iter().map(|&c| -c).collect() }
    }

    pub fn scale(&self, k: Trit) -> TernaryVector {
        TernaryVector { coords: self.coords.iter().map(|&c| c * k).collect() }
    }
}

impl fmt::Display for TernaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Digitwise sum of two ranks in `F_3^n` (no carries).
#[inline]
pub fn rank_add(a: usize, b: usize, n: usize) -> usize {
    let (mut a, mut b) = (a, b);
    let mut out = 0usize;
    let mut p = 1usize;
    for _ in 0..n {
        out += ((a % 3) + (b % 3)) % 3 * p;
        a /= 3;
        b /= 3;
        p *= 3;
    }
    out
}

/// Digitwise difference of two ranks in `F_3^n`.
#[inline]
pub fn rank_sub(a: usize, b: usize, n: usize) -> usize {
    let (mut a, mut b) = (a, b);
    let mut out = 0usize;
    let mut p = 1usize;
    for _ in 0..n {
        out += ((a % 3) + 3 - (b % 3)) % 3 * p;
        a /= 3;
        b /= 3;
        p *= 3;
    }
    out
}

/// Digitwise negation of a rank in `F_3^n`.
#[inline]
pub fn rank_neg(a: usize, n: usize) -> usize {
    rank_sub(0, a, n)
}

/// Inner product of two ranks in `F_3^n`, as a residue mod 3.
#[inline]
pub fn rank_dot(a: usize, b: usize, n: usize) -> u8 {
    let (mut a, mut b) = (a, b);
    let mut acc = 0u32;
    for _ in 0..n {
        acc += ((a % 3) * (b % 3)) as u32;
        a /= 3;
        b /= 3;
    }
    (acc % 3) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_decoding_examples() {
        assert_eq!(
            TernaryVector::from_rank(0, 4).unwrap().coords(),
            &[Trit::ZERO, Trit::ZERO, Trit::ZERO, Trit::ZERO]
        );
        // 5 = 2*3^0 + 1*3^1
        assert_eq!(
            TernaryVector::from_rank(5, 3).unwrap().coords(),
            &[Trit::TWO, Trit::ONE, Trit::ZERO]
        );
        assert_eq!(
            TernaryVector::from_rank(26, 3).unwrap().coords(),
            &[Trit::TWO, Trit::TWO, Trit::TWO]
        );
        assert!(TernaryVector::from_rank(27, 3).is_err());
    }

    #[test]
    fn rank_round_trip_exhaustive_small() {
        for n in 0..=5 {
            for r in 0..crate::pow3(n) {
                assert_eq!(TernaryVector::from_rank(r, n).unwrap().rank(), r);
            }
        }
    }

    #[test]
    fn dot_examples() {
        let u = TernaryVector::from_rank(1 + 2 * 3, 2).unwrap(); // (1,2)
        let v = TernaryVector::from_rank(2 + 2 * 3, 2).unwrap(); // (2,2)
        assert_eq!(u.dot(&v).unwrap(), Trit::ZERO);

        let z = TernaryVector::zero(5);
        let w = TernaryVector::from_rank(123, 5).unwrap();
        assert_eq!(z.dot(&w).unwrap(), Trit::ZERO);

        let a = TernaryVector::new(vec![Trit::ONE, Trit::ZERO, Trit::ONE]);
        let b = TernaryVector::new(vec![Trit::ONE, Trit::ONE, Trit::ONE]);
        assert_eq!(a.dot(&b).unwrap(), Trit::TWO);

        assert!(a.dot(&u).is_err());
    }

    #[test]
    fn vector_plus_its_negation_is_zero() {
        for r in 0..crate::pow3(4) {
            let v = TernaryVector::from_rank(r, 4).unwrap();
            assert!(v.add(&v.neg()).unwrap().is_zero());
        }
    }

    #[test]
    fn rank_ops_match_vector_ops() {
        let n = 4;
        for a in 0..crate::pow3(n) {
            for b in [0usize, 1, 5, 40, 80] {
                let va = TernaryVector::from_rank(a, n).unwrap();
                let vb = TernaryVector::from_rank(b, n).unwrap();
                assert_eq!(rank_add(a, b, n), va.add(&vb).unwrap().rank());
                assert_eq!(rank_sub(a, b, n), va.sub(&vb).unwrap().rank());
                assert_eq!(rank_neg(a, n), va.neg().rank());
                assert_eq!(rank_dot(a, b, n), va.dot(&vb).unwrap().value());
            }
        }
    }
}
