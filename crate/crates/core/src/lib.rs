//! Exact computations with Nuij-type pencils of hyperbolic polynomials.
//!
//! A sequence `a = (a_1, …, a_d)` acts on a degree-`d` polynomial by
//! `p ↦ p + Σ a_k s^k p^(k)`. This crate decides when that map keeps every
//! hyperbolic `p` hyperbolic for all real `s`, and when the resulting pencil
//! is `det(zI + D + s·A)` for one symmetric `A` independent of `p`. All
//! arithmetic is over ℚ or a real quadratic extension; there is no floating
//! point anywhere in the decision paths.
//!
//! ```
//! use nuij_core::nuij::NuijCandidate;
//! use nuij_core::toeplitz::is_udr;
//!
//! let twice = NuijCandidate::from_ints(&[2, 1, 0]).unwrap();
//! assert!(twice.is_nuij());
//! assert!(!is_udr(&twice));
//! ```

pub mod cli;
mod error;
pub mod matrix;
pub mod nuij;
pub mod poly;
pub mod scalar;
pub mod toeplitz;

pub use error::{Error, Result};
pub use scalar::{ArithOp, QuadExt, Rational};
