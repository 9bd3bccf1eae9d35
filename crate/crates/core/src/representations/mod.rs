//! `SL(2, C)` representations of knot groups, their adjoint lifts, and the
//! explicit families used for torus and twist knots.

mod matrices;
mod rep;
mod roots;
mod torus;
mod twist;

pub use matrices::{adjoint, AdjointMatrix, SL2Matrix};
pub use rep::{RepKind, Representation, RELATION_TOL};
pub use roots::{polynomial_roots, PolyRoots};
pub use torus::{bezout_pair, build_torus_rep, torus_components, TorusRepParams, DEFAULT_CONJ_PARAM};
pub use twist::{
    build_twist_rep, chebyshev_pair, chebyshev_s, riley_polynomial, riley_residual, riley_roots,
    RileyRoots, TwistRepParams,
};
