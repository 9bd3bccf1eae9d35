//! Free-group words, the integral group ring of the free group, Fox's free
//! differential calculus, and deficiency-one knot presentations.

mod fox;
mod group_ring;
mod presentation;
mod word;

pub use fox::fox_derivative;
pub use group_ring::GroupRingElement;
pub use presentation::{Family, KnotPresentation};
pub(crate) use presentation::twist_word;
#[cfg(test)]
pub(crate) use presentation::gcd as presentation_gcd;
pub use word::Word;
