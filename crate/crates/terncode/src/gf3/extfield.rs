//! Extension fields `GF(3^k)` in polynomial representation.
//!
//! The modulus for each degree is a fixed published irreducible polynomial
//! (the Conway polynomial `C_{3,k}`), so tables built on top of field
//! multiplication are reproducible bit for bit:
//!
//! | k | modulus                                   |
//! |---|-------------------------------------------|
//! | 1 | x + 1                                     |
//! | 2 | x^2 + 2x + 2                              |
//! | 3 | x^3 + 2x + 1                              |
//! | 4 | x^4 + 2x^3 + 2                            |
//! | 5 | x^5 + 2x + 1                              |
//! | 6 | x^6 + 2x^4 + x^2 + 2x + 2                 |
//! | 7 | x^7 + 2x^2 + 1                            |
//! | 8 | x^8 + 2x^5 + x^4 + 2x^2 + 2x + 2          |

use super::Trit;
use crate::error::{Error, Result};

/// Modulus coefficients, little-endian (constant term first), degree = index.
const MODULI: [&[u8]; 8] = [
    &[1, 1],
    &[2, 2, 1],
    &[1, 2, 0, 1],
    &[2, 0, 0, 2, 1],
    &[1, 2, 0, 0, 0, 1],
    &[2, 2, 1, 0, 2, 0, 1],
    &[1, 0, 2, 0, 0, 0, 0, 1],
    &[2, 2, 2, 0, 1, 2, 0, 0, 1],
];

/// An element of `GF(3^k)` as polynomial coordinates over `F_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFieldElem {
    pub k: usize,
    pub coeffs: Vec<Trit>,
}

/// The field context: degree plus its fixed modulus.
#[derive(Debug, Clone, Copy)]
pub struct ExtField {
    k: usize,
    modulus: &'static [u8],
}

impl ExtField {
    pub fn new(k: usize) -> Result<ExtField> {
        if k == 0 || k > MODULI.len() {
            return Err(Error::UnsupportedExtensionDegree(k));
        }
        Ok(ExtField { k, modulus: MODULI[k - 1] })
    }

    #[inline]
    pub fn k(self) -> usize {
        self.k
    }

    pub fn zero(self) -> ExtFieldElem {
        ExtFieldElem { k: self.k, coeffs: vec![Trit::ZERO; self.k] }
    }

    pub fn one(self) -> ExtFieldElem {
        let mut e = self.zero();
        e.coeffs[0] = Trit::ONE;
        e
    }

    /// The class of the polynomial variable (a root of the modulus).
    pub fn generator(self) -> ExtFieldElem {
        if self.k == 1 {
            // Modulus x + 1: the variable maps to -1 = 2.
            ExtFieldElem { k: 1, coeffs: vec![Trit::TWO] }
        } else {
            let mut e = self.zero();
            e.coeffs[1] = Trit::ONE;
            e
        }
    }

    /// Decodes a rank (little-endian base-3 digits) into an element.
    pub fn from_rank(self, rank: usize) -> Result<ExtFieldElem> {
        if rank >= crate::pow3(self.k) {
            return Err(Error::RankOutOfRange { rank, n: self.k });
        }
        let mut coeffs = Vec::with_capacity(self.k);
        let mut r = rank;
        for _ in 0..self.k {
            coeffs.push(Trit::new((r % 3) as u8));
            r /= 3;
        }
        Ok(ExtFieldElem { k: self.k, coeffs })
    }

    pub fn add(self, a: &ExtFieldElem, b: &ExtFieldElem) -> ExtFieldElem {
        self.check(a);
        self.check(b);
        ExtFieldElem {
            k: self.k,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| x + y).collect(),
        }
    }

    /// Schoolbook multiply, then reduce by the monic modulus.
    pub fn mul(self, a: &ExtFieldElem, b: &ExtFieldElem) -> ExtFieldElem {
        self.check(a);
        self.check(b);
        let k = self.k;
        let mut prod = vec![0u8; 2 * k - 1];
        for i in 0..k {
            let ai = a.coeffs[i].value();
            if ai == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + ai * b.coeffs[j].value()) % 3;
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c != 0 {
                prod[d] = 0;
                for i in 0..k {
                    prod[d - k + i] = (prod[d - k + i] + 3 - (c * self.modulus[i]) % 3) % 3;
                }
            }
        }
        ExtFieldElem { k, coeffs: prod[..k].iter().map(|&c| Trit::new(c)).collect() }
    }

    /// Frobenius endomorphism `x -> x^3`.
    pub fn frobenius(self, a: &ExtFieldElem) -> ExtFieldElem {
        let sq = self.mul(a, a);
        self.mul(&sq, a)
    }

    /// Absolute trace `tr(x) = x + x^3 + ... + x^{3^{k-1}}`, landing in `F_3`.
    pub fn trace(self, a: &ExtFieldElem) -> Trit {
        let mut total = a.clone();
        let mut cur = a.clone();
        for _ in 1..self.k {
            cur = self.frobenius(&cur);
            total = self.add(&total, &cur);
        }
        debug_assert!(
            total.coeffs[1..].iter().all(|c| c.is_zero()),
            "trace left the prime field; modulus table corrupt"
        );
        total.coeffs[0]
    }

    fn check(self, a: &ExtFieldElem) {
        assert_eq!(a.k, self.k, "element belongs to a different field");
    }
}
