use num_bigint::BigInt;

use super::{GroupRingElement, Word};

/// Fox derivative `d u / d a_gen`.
///
/// Walks the word run by run with the prefix `P` read so far, using
/// `d(P a^e) = dP + P * d(a^e)` where
/// `d(a^e)/da = 1 + a + ... + a^{e-1}` for `e > 0` and
/// `-(a^{-1} + ... + a^{e})` for `e < 0`.
pub fn fox_derivative(u: &Word, gen: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &(g, e) in u.letters() {
        let run = Word::letter(g, e);
        if g == gen {
            if e > 0 {
                for i in 0..e {
                    out.add_term(prefix.multiply(&Word::letter(g, i)), BigInt::from(1));
                }
            } else {
                for i in 1..=-e {
                    out.add_term(prefix.multiply(&Word::letter(g, -i)), BigInt::from(-1));
                }
            }
        }
        prefix = prefix.multiply(&run);
    }
    out
}
