use serde::Serialize;

use super::Word;
use crate::{Error, Result};

/// A deficiency-one presentation `<a_1, ..., a_l | r_1, ..., r_{l-1}>`
/// together with its abelianization `a_i -> t^{e_i}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KnotPresentation {
    names: Vec<String>,
    relators: Vec<Word>,
    abelianization: Vec<i64>,
    #[serde(skip)]
    family: Family,
}

/// Which builder produced the presentation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Family {
    Torus { p: i64, q: i64 },
    Twist { n: i64 },
    #[default]
    Custom,
}

impl KnotPresentation {
    /// Validates deficiency one and `f(r) = 1` for every relator.
    pub fn new(names: Vec<String>, relators: Vec<Word>, abelianization: Vec<i64>) -> Result<Self> {
        let l = names.len();
        if l < 1 || relators.len() + 1 != l {
            return Err(Error::InvalidParameters(format!(
                "{l} generators with {} relators is not deficiency one",
                relators.len()
            )));
        }
        if abelianization.len() != l {
            return Err(Error::DimensionMismatch(
                "one abelianization exponent per generator".into(),
            ));
        }
        for (i, r) in relators.iter().enumerate() {
            if r.max_generator().is_some_and(|g| g >= l) {
                return Err(Error::InvalidParameters(format!(
                    "relator {i} uses an unknown generator"
                )));
            }
            let sum = r.abelianize(&abelianization);
            if sum != 0 {
                return Err(Error::InvalidParameters(format!(
                    "relator {i} has abelianization t^{sum}, expected 1"
                )));
            }
        }
        Ok(KnotPresentation {
            names,
            relators,
            abelianization,
            family: Family::Custom,
        })
    }

    /// `<c, d | c^p d^-q>` with `c -> t^q`, `d -> t^p`.
    pub fn torus(p: i64, q: i64) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidParameters(format!(
                "torus knot needs p, q >= 2 (got {p}, {q})"
            )));
        }
        if gcd(p, q) != 1 {
            return Err(Error::InvalidParameters(format!(
                "p = {p} and q = {q} are not coprime"
            )));
        }
        let mut pres = KnotPresentation::new(
            vec!["c".into(), "d".into()],
            vec![Word::from_letters([(0, p), (1, -q)])],
            vec![q, p],
        )?;
        pres.family = Family::Torus { p, q };
        Ok(pres)
    }

    /// `<a, b | w^n a w^-n b^-1>` with `w = b a^-1 b^-1 a`, both meridians
    /// sent to `t`.
    pub fn twist(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters(
                "twist knot with n = 0 is the unknot".into(),
            ));
        }
        let wn = twist_word().pow(n);
        let r = wn
            .multiply(&Word::generator(0))
            .multiply(&wn.inverse())
            .multiply(&Word::letter(1, -1));
        let mut pres =
            KnotPresentation::new(vec!["a".into(), "b".into()], vec![r], vec![1, 1])?;
        pres.family = Family::Twist { n };
        Ok(pres)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn abelianization(&self) -> &[i64] {
        &self.abelianization
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Exponent of `t` in the image of `w` under the abelianization.
    pub fn exponent_of(&self, w: &Word) -> i64 {
        w.abelianize(&self.abelianization)
    }

    /// Renders a word using this presentation's generator names.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|&(g, e)| {
                let name = &self.names[g];
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `w = b a^-1 b^-1 a` on generators `a = 0`, `b = 1`.
pub(crate) fn twist_word() -> Word {
    Word::from_letters([(1, 1), (0, -1), (1, -1), (0, 1)])
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
