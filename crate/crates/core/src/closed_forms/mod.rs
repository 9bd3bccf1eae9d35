//! Explicit formulas for torus and twist knots: the twisted Alexander
//! polynomials, the torsions, the matrix `Omega` and the identities used to
//! simplify it.

mod lemmas;
mod omega;
mod torus;
mod twist;

pub use lemmas::{lemma_d_residual, lemma_x_residual, LemmaDReport};
pub use omega::{omega_closed, omega_direct};
pub use torus::{torus_delta_closed, torus_torsion_closed};
pub use twist::{twist_delta_closed, twist_torsion_closed, TwistDenominators};

/// Threshold below which a formula denominator is treated as zero.
pub const SINGULAR_TOL: f64 = 1e-10;
