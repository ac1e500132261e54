//! Linear subspaces of `F_3^n` with membership tests and duals.

use super::{TernaryVector, Trit};
use crate::error::{Error, Result};
use crate::pow3;

/// A subspace given by an independent basis. A reduced row-echelon form of
/// the basis is kept alongside for membership tests and dual computation.
#[derive(Debug, Clone)]
pub struct SubspaceSpec {
    ambient_n: usize,
    basis: Vec<TernaryVector>,
    rref: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

/// Reduced row echelon form over `F_3`. Returns `(rows, pivot_columns)`
/// with zero rows dropped. In `F_3` each nonzero element is its own
/// inverse, so normalization is multiplication by the pivot itself.
fn rref(rows: Vec<Vec<u8>>, n: usize) -> (Vec<Vec<u8>>, Vec<usize>) {
    let mut rows = rows;
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pr) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = rows[rank][col]; // 1*1 = 1, 2*2 = 1 mod 3
        for v in rows[rank].iter_mut() {
            *v = (*v * inv) % 3;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..n {
                    rows[r][c] = (rows[r][c] + 3 - (factor * rows[rank][c]) % 3) % 3;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

impl SubspaceSpec {
    /// Validates that the basis is independent and builds the spec.
    pub fn new(ambient_n: usize, basis: Vec<TernaryVector>) -> Result<SubspaceSpec> {
        for v in &basis {
            if v.n() != ambient_n {
                return Err(Error::DimensionMismatch { expected: ambient_n, got: v.n() });
            }
        }
        let rows: Vec<Vec<u8>> =
            basis.iter().map(|v| v.coords().iter().map(|c| c.value()).collect()).collect();
        let (rref_rows, pivots) = rref(rows, ambient_n);
        if rref_rows.len() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(SubspaceSpec { ambient_n, basis, rref: rref_rows, pivots })
    }

    /// The trivial subspace `{0}`.
    pub fn trivial(ambient_n: usize) -> SubspaceSpec {
        SubspaceSpec { ambient_n, basis: Vec::new(), rref: Vec::new(), pivots: Vec::new() }
    }

    /// The coordinate subspace spanned by `e_0, ..., e_{r-1}`.
    pub fn coordinate(ambient_n: usize, r: usize) -> Result<SubspaceSpec> {
        if r > ambient_n {
            return Err(Error::DimensionMismatch { expected: ambient_n, got: r });
        }
        let basis = (0..r).map(|i| TernaryVector::standard_basis(ambient_n, i)).collect();
        SubspaceSpec::new(ambient_n, basis)
    }

    /// The whole space `F_3^n`.
    pub fn full(ambient_n: usize) -> SubspaceSpec {
        SubspaceSpec::coordinate(ambient_n, ambient_n).expect("full space")
    }

    #[inline]
    pub fn ambient_n(&self) -> usize {
        self.ambient_n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn basis(&self) -> &[TernaryVector] {
        &self.basis
    }

    /// Membership: reduce against the echelon rows and check for zero.
    pub fn contains(&self, v: &TernaryVector) -> bool {
        if v.n() != self.ambient_n {
            return false;
        }
        let mut w: Vec<u8> = v.coords().iter().map(|c| c.value()).collect();
        for (row, &p) in self.rref.iter().zip(&self.pivots) {
            let factor = w[p];
            if factor != 0 {
                for c in 0..self.ambient_n {
                    w[c] = (w[c] + 3 - (factor * row[c]) % 3) % 3;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    /// The dual space `E^perp = { x : x.y = 0 for all y in E }`, of
    /// dimension `n - dim(E)`.
    pub fn dual(&self) -> SubspaceSpec {
        let n = self.ambient_n;
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; n];
            for &p in &self.pivots {
                s[p] = true;
            }
            s
        };
        let mut dual_basis = Vec::with_capacity(n - self.dim());
        for free in (0..n).filter(|&c| !pivot_set[c]) {
            // Kernel vector: 1 at the free column, -rref[i][free] at pivot i.
            let mut coords = vec![Trit::ZERO; n];
            coords[free] = Trit::ONE;
            for (row, &p) in self.rref.iter().zip(&self.pivots) {
                coords[p] = Trit::from_int(-(row[free] as i64));
            }
            dual_basis.push(TernaryVector::new(coords));
        }
        SubspaceSpec::new(n, dual_basis).expect("kernel basis is independent")
    }

    /// Ranks of all `3^dim` members, ascending.
    pub fn element_ranks(&self) -> Vec<usize> {
        let r = self.dim();
        let basis_ranks: Vec<usize> = self.basis.iter().map(|v| v.rank()).collect();
        let mut out = Vec::with_capacity(pow3(r));
        for combo in 0..pow3(r) {
            let mut acc = 0usize;
            let mut c = combo;
            for &br in &basis_ranks {
                let coeff = c % 3;
                c /= 3;
                for _ in 0..coeff {
                    acc = super::rank_add(acc, br, self.ambient_n);
                }
            }
            out.push(acc);
        }
        out.sort_unstable();
        out.dedup();
        debug_assert_eq!(out.len(), pow3(r));
        out
    }

    /// Indicator bitmap over all of `F_3^n`, indexed by rank.
    pub fn indicator_table(&self) -> Vec<bool> {
        let mut table = vec![false; pow3(self.ambient_n)];
        for r in self.element_ranks() {
            table[r] = true;
        }
        table
    }

    /// Two subspaces span the same set iff their canonical RREFs agree.
    pub fn same_span(&self, other: &SubspaceSpec) -> bool {
        self.ambient_n == other.ambient_n && self.rref == other.rref
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(ranks: &[usize], n: usize) -> Vec<TernaryVector> {
        ranks.iter().map(|&r| TernaryVector::from_rank(r, n).unwrap()).collect()
    }

    #[test]
    fn dual_of_trivial_and_full() {
        let t = SubspaceSpec::trivial(4);
        assert_eq!(t.dual().dim(), 4);
        let f = SubspaceSpec::full(4);
        assert_eq!(f.dual().dim(), 0);
    }

    #[test]
    fn dual_of_coordinate_subspace() {
        let e = SubspaceSpec::coordinate(4, 2).unwrap();
        let d = e.dual();
        assert_eq!(d.dim(), 2);
        let expected = SubspaceSpec::new(
            4,
            vec![TernaryVector::standard_basis(4, 2), TernaryVector::standard_basis(4, 3)],
        )
        .unwrap();
        assert!(d.same_span(&expected));
    }

    #[test]
    fn dependent_basis_rejected() {
        let n = 3;
        let b = vec_of(&[1, 2], n); // (1,0,0) and (2,0,0) are dependent
        assert!(matches!(SubspaceSpec::new(n, b), Err(Error::DependentBasis)));
    }

    #[test]
    fn membership_and_orthogonality() {
        let n = 5;
        let e = SubspaceSpec::new(n, vec_of(&[4, 9 + 27], n)).unwrap();
        let d = e.dual();
        assert_eq!(d.dim(), n - 2);
        for be in e.basis() {
            for bd in d.basis() {
                assert_eq!(be.dot(bd).unwrap(), Trit::ZERO);
            }
        }
        for r in e.element_ranks() {
            assert!(e.contains(&TernaryVector::from_rank(r, n).unwrap()));
        }
        assert_eq!(e.element_ranks().len(), 9);
    }

    #[test]
    fn double_dual_spans_original() {
        let n = 6;
        for basis_ranks in [&[1usize, 3][..], &[5, 100, 200][..], &[728][..]] {
            if let Ok(e) = SubspaceSpec::new(n, vec_of(basis_ranks, n)) {
                assert!(e.dual().dual().same_span(&e));
            }
        }
    }

    #[test]
    fn cardinality_matches_dimension() {
        let n = 4;
        let e = SubspaceSpec::new(n, vec_of(&[2, 30], n)).unwrap();
        assert_eq!(e.element_ranks().len(), crate::pow3(e.dim()));
        let ind = e.indicator_table();
        assert_eq!(ind.iter().filter(|&&b| b).count(), 9);
        assert!(ind[0]);
    }
}
