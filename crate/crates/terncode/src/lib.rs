//! Exact analysis of ternary linear codes built from vectorial functions
//! `F: F_3^n -> F_3^m`.
//!
//! Every code in scope has the shape
//!
//! ```text
//! C_F = { c(mu, nu) = ( mu.F(x) + nu.x )_{x in F_3^n \ {0}} : mu in F_3^m, nu in F_3^n }
//! ```
//!
//! and everything about it — weight distribution, minimum distance, the
//! Ashikhmin–Barg (AB) ratio, and minimality — is decided from the Walsh
//! spectrum of `F`, computed exactly over the Eisenstein integers `Z[w]`
//! (`w` a primitive cube root of unity). No floating point is used anywhere
//! in the verification path: all comparisons are exact integer comparisons
//! on `2*Re(.)` values and squared magnitudes.
//!
//! Module map:
//!
//! - [`gf3`] — `F_3` scalars and vectors, little-endian base-3 ranks,
//!   subspaces and duals, extension fields `GF(3^k)` with trace, and the
//!   Eisenstein integers that carry all spectral values.
//! - [`walsh`] — naive and fast radix-3 Walsh transforms, the inverse
//!   transform, and exact spectral identities (Parseval, Titsworth).
//! - [`functions`] — function tables, the `TFT/1` text format, concrete
//!   constructions (indicator-quadratic, field-multiplication bent, dummy
//!   extension, composition), and plateau/regularity classification.
//! - [`codes`] — codeword supports, weights via the spectrum, weight
//!   distributions, minimum distance and AB status.
//! - [`minimality`] — the covering-definition oracle, the Walsh
//!   characterization of minimality, the sufficient norm bound, and the
//!   composite `(f, G)` route that produces minimal AB-violating codes.
//! - [`verify`] — self-contained verification suites used by the CLI and
//!   the acceptance tests.
//! - [`report`] — the versioned `cfa/1` JSON report and run manifest.
//!
//! Supported sizes are capped at `n <= 16`, `m <= 8` so that every
//! intermediate value fits comfortably in checked `i64` arithmetic.

pub mod codes;
pub mod error;
pub mod functions;
pub mod gf3;
pub mod minimality;
pub mod report;
pub mod verify;
pub mod walsh;

pub use error::Error;

/// Largest supported input dimension.
pub const MAX_N: usize = 16;
/// Largest supported output dimension.
pub const MAX_M: usize = 8;

/// `3^e` as `usize`. Panics if the result would overflow.
#[inline]
pub fn pow3(e: usize) -> usize {
    3usize.checked_pow(e as u32).expect("3^e overflow")
}
