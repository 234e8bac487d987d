//! Freely reduced words in a free group on an arbitrary alphabet.

use std::fmt;
use std::ops::Mul;

/// A word stored freely reduced: adjacent equal generators merged, no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<G> {
    letters: Vec<(G, i64)>,
}

impl<G> Default for Word<G> {
    fn default() -> Self {
        Self { letters: Vec::new() }
    }
}

impl<G: Copy + Eq> Word<G> {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(g: G) -> Self {
        Self::letter(g, 1)
    }

    pub fn letter(g: G, exp: i64) -> Self {
        let mut w = Self::identity();
        w.push(g, exp);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = (G, i64)>>(letters: I) -> Self {
        let mut w = Self::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    /// Right-multiply by `g^exp`, keeping the word reduced.
    pub fn push(&mut self, g: G, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += exp;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, exp));
    }

    pub fn append(&mut self, other: &Self) {
        for &(g, e) in &other.letters {
            self.push(g, e);
        }
    }

    pub fn letters(&self) -> &[(G, i64)] {
        &self.letters
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Word length counting each generator occurrence.
    pub fn len(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = Self::identity();
        for _ in 0..k.unsigned_abs() {
            w.append(&base);
        }
        w
    }

    pub fn exponent_sum(&self, g: G) -> i64 {
        self.letters.iter().filter(|(h, _)| *h == g).map(|(_, e)| e).sum()
    }

    /// Conjugate so that the first and last letters do not cancel.
    pub fn cyclically_reduced(&self) -> Self {
        let mut v = self.letters.clone();
        loop {
            if v.len() < 2 || v[0].0 != v[v.len() - 1].0 {
                break;
            }
            let (_, e) = v.pop().unwrap();
            v[0].1 += e;
            if v[0].1 == 0 {
                v.remove(0);
            }
        }
        Self { letters: v }
    }

    /// Image under the homomorphism sending each generator to a word.
    pub fn substitute<H: Copy + Eq>(&self, mut f: impl FnMut(G) -> Word<H>) -> Word<H> {
        let mut w = Word::identity();
        for &(g, e) in &self.letters {
            w.append(&f(g).pow(e));
        }
        w
    }

    /// Expand into single-letter steps (generator, ±1).
    pub fn unit_letters(&self) -> impl Iterator<Item = (G, i64)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }
}

impl<G: Copy + Eq> Mul for &Word<G> {
    type Output = Word<G>;
    fn mul(self, rhs: &Word<G>) -> Word<G> {
        let mut w = self.clone();
        w.append(rhs);
        w
    }
}

impl<G: Copy + Eq> Mul for Word<G> {
    type Output = Word<G>;
    fn mul(mut self, rhs: Word<G>) -> Word<G> {
        self.append(&rhs);
        self
    }
}

impl<G: fmt::Display> fmt::Display for Word<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Generators of knot groups: the meridian `x`, the core curve `y`, and the
/// auxiliary meridians `x_k` of a Schubert diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KnotLetter {
    X,
    Y,
    Sub(u64),
}

impl fmt::Display for KnotLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotLetter::X => write!(f, "x"),
            KnotLetter::Y => write!(f, "y"),
            KnotLetter::Sub(k) => write!(f, "x_{k}"),
        }
    }
}

pub type KnotWord = Word<KnotLetter>;
