//! Complex Laurent polynomials in one variable `t` and rational functions
//! compared modulo units `±t^m`.

mod complex;
mod poly;
mod rational;

pub use complex::{format_complex, parse_complex, ComplexScalar};
pub use poly::{LaurentPoly, EPS_ROOT, EPS_TRIM};
pub use rational::{equal_up_to_unit, RationalFunction, UnitReport};
