use std::fmt;

use serde::Serialize;

/// A reduced word in a free group, stored as runs of `(generator, exponent)`.
///
/// Adjacent runs always have distinct generators and no exponent is zero, so
/// two words are equal as group elements iff they are equal as values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// The single generator `a_gen`.
    pub fn generator(gen: usize) -> Self {
        Word::letter(gen, 1)
    }

    /// `a_gen^exp`.
    pub fn letter(gen: usize, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(gen, exp);
        w
    }

    /// Builds a word from arbitrary runs, reducing as it goes.
    pub fn from_letters<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Length in the free group (sum of absolute exponents).
    pub fn len(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((gen, exp)),
        }
    }

    /// Reduced concatenation `self * other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &other.letters {
            out.push(g, e);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Exponent sum under the homomorphism sending generator `i` to `t^{weights[i]}`.
    pub fn abelianize(&self, weights: &[i64]) -> i64 {
        self.letters.iter().map(|&(g, e)| weights[g] * e).sum()
    }

    /// Expands runs into single letters `(generator, +1 | -1)`.
    pub fn syllables(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

const NAMES: &[u8] = b"abcdefghijklmnopqrstuvwxyz";

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for &(g, e) in &self.letters {
            match NAMES.get(g) {
                Some(&c) => write!(f, "{}", c as char)?,
                None => write!(f, "x{g}")?,
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
