//! Incremental rank arithmetic for the condition-enumeration loops.
//!
//! The minimality conditions scan all pairs `(nu, nu')` and need the ranks
//! of `nu + nu'` and `nu - nu'` at every step. Recomputing those digitwise
//! costs `O(n)` per pair; this walker maintains them with amortized `O(1)`
//! work per increment of `nu'` by tracking the base-3 carry chain.

#[cfg(test)]
use crate::gf3::{rank_add, rank_sub};

/// Walks `x = 0, 1, 2, ...` while tracking `rank(base + x)` and
/// `rank(base - x)` (digitwise group operations, no carries).
pub struct GroupWalker {
    x: Vec<u8>,
    sum_digits: Vec<u8>,
    diff_digits: Vec<u8>,
    sum_rank: usize,
    diff_rank: usize,
    pow: Vec<usize>,
}

impl GroupWalker {
    pub fn new(base_rank: usize, n: usize) -> GroupWalker {
        let mut pow = Vec::with_capacity(n);
        let mut p = 1usize;
        for _ in 0..n {
            pow.push(p);
            p *= 3;
        }
        let mut digits = Vec::with_capacity(n);
        let mut r = base_rank;
        for _ in 0..n {
            digits.push((r % 3) as u8);
            r /= 3;
        }
        GroupWalker {
            x: vec![0; n],
            sum_digits: digits.clone(),
            diff_digits: digits,
            sum_rank: base_rank,
            diff_rank: base_rank,
            pow,
        }
    }

    /// `rank(base + x)` for the current `x`.
    #[inline]
    pub fn sum_rank(&self) -> usize {
        self.sum_rank
    }

    /// `rank(base - x)` for the current `x`.
    #[inline]
    pub fn diff_rank(&self) -> usize {
        self.diff_rank
    }

    /// Steps `x` to `x + 1`. Every digit touched by the carry chain moves
    /// by `+1 mod 3` in the sum and `-1 mod 3` in the difference.
    #[inline]
    pub fn advance(&mut self) {
        let mut k = 0usize;
        loop {
            let sd = self.sum_digits[k];
            if sd == 2 {
                self.sum_digits[k] = 0;
                self.sum_rank -= 2 * self.pow[k];
            } else {
                self.sum_digits[k] = sd + 1;
                self.sum_rank += self.pow[k];
            }
            let dd = self.diff_digits[k];
            if dd == 0 {
                self.diff_digits[k] = 2;
                self.diff_rank += 2 * self.pow[k];
            } else {
                self.diff_digits[k] = dd - 1;
                self.diff_rank -= self.pow[k];
            }
            if self.x[k] == 2 {
                self.x[k] = 0;
                k += 1;
                if k == self.x.len() {
                    return; // wrapped past 3^n - 1; walker is exhausted
                }
            } else {
                self.x[k] += 1;
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tracks_sum_and_diff_exhaustively() {
        let n = 4;
        let size = crate::pow3(n);
        for base in [0usize, 1, 40, 77, size - 1] {
            let mut w = GroupWalker::new(base, n);
            for x in 0..size {
                assert_eq!(w.sum_rank(), rank_add(base, x, n), "base={base} x={x}");
                assert_eq!(w.diff_rank(), rank_sub(base, x, n), "base={base} x={x}");
                if x + 1 < size {
                    w.advance();
                }
            }
        }
    }
}
