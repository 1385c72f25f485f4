//! Exact arithmetic for interlacing Fibonacci sequences of dimension m, their
//! vector convergents to the algebraic points 2cos(2*pi*k/(2m+1)), the
//! generating polynomial families P_m, Q_m and relatives, Fleck-number
//! correspondences at negative indices, minimal-polynomial factorizations,
//! Mellin-transform polynomials with critical-line zeros, and the recurrences
//! obeyed by matrix-minor sequences.
//!
//! Everything that can be checked exactly is checked in big-rational
//! arithmetic; limit statements are checked with certified ball arithmetic
//! ([`appreal::AppReal`]). The crate is `no_std` (alloc only); all state is
//! immutable values except the per-engine sequence caches, which are
//! single-owner (`!Sync`) by construction.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod appreal;
pub mod bigfloat;
pub mod cf;
pub mod combin;
pub mod convergents;
pub mod error;
pub mod mat;
pub mod minors;
pub mod poly;
pub mod polyfam;
pub mod rat;
pub mod report;
pub mod sequences;
pub mod series;
pub mod spectral;
pub mod sturm;

pub use appreal::AppReal;
pub use error::Error;
pub use mat::RatMat;
pub use poly::UniPoly;
pub use rat::{GaussRat, Int, Rat};
pub use report::{Check, Report, Status};
