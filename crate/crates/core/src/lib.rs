//! Twisted Alexander polynomials with the adjoint action, and the
//! non-abelian Reidemeister torsion, for `SL(2, C)` representations of
//! torus-knot and twist-knot groups.
//!
//! The generic route goes through Fox calculus on a deficiency-one
//! presentation ([`word_calculus`]), the ring homomorphism into
//! `3x3` Laurent-polynomial matrices ([`wada`]) and determinants by
//! evaluation and interpolation ([`poly_matrix`]). The explicit formulas
//! for the two knot families live in [`closed_forms`] and serve as an
//! independent check of that route.

pub mod checks;
pub mod closed_forms;
pub mod error;
pub mod laurent;
pub mod poly_matrix;
pub mod report;
pub mod representations;
pub mod wada;
pub mod word_calculus;

pub use error::{Error, Result};
pub use laurent::{ComplexScalar, LaurentPoly, RationalFunction, UnitReport};
pub use poly_matrix::PolyMatrix;
pub use representations::{
    AdjointMatrix, Representation, SL2Matrix, TorusRepParams, TwistRepParams,
};
pub use wada::{TorsionValue, TwistedAlexander};
pub use word_calculus::{GroupRingElement, KnotPresentation, Word};

/// Default comparison tolerance used by the checks and the CLI.
pub const DEFAULT_TOL: f64 = 1e-8;
