//! Exact scalars: big rationals and real quadratic extensions `ℚ(√D)`.

mod quad;
mod rational;

pub use quad::QuadExt;
pub use rational::{ArithOp, Rational};
