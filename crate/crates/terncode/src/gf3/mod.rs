//! Exact arithmetic foundations: `F_3` scalars and vectors, Eisenstein
//! integers, subspaces with duals, and `GF(3^k)` extension fields.
//!
//! All types here are immutable values after construction and are safe to
//! share between threads.
//!
//! The one convention that everything else relies on: a vector in `F_3^n`
//! is identified with its *rank*, the little-endian base-3 integer
//! `sum coords[i] * 3^i` (coordinate 0 is the least significant digit).

mod eisenstein;
mod extfield;
mod subspace;
mod vector;

pub use eisenstein::EisensteinInt;
pub use extfield::{ExtField, ExtFieldElem};
pub use subspace::SubspaceSpec;
pub use vector::{rank_add, rank_dot, rank_neg, rank_sub, TernaryVector, Trit};
