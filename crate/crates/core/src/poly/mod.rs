//! Exact univariate and bivariate polynomials over ℚ.

mod bi;
mod interp;
mod sturm;
mod uni;

pub use bi::{BiPoly, BiTerm};
pub use interp::{bipoly_interpolate, interpolate};
pub use sturm::{
    is_hyperbolic, is_square_free, isolate_and_refine_roots, real_root_count_with_multiplicity,
    square_free_decomposition, square_free_part, sturm_root_count, Bound, RootInterval,
    RootIsolation, SturmChain,
};
pub use uni::UniPoly;
