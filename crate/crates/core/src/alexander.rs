//! Alexander polynomials in S³ by Fox calculus on the one-relator presentation.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::exactalg::{laurent_gcd, LaurentPoly};
use crate::knotgroup::{KnotExterior, LensSpace};
use crate::schubert::SchubertForm;
use crate::word::{KnotLetter, KnotWord, Word};
use crate::{Error, Result};

/// Element of the integral group ring of a free group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement<G> {
    terms: BTreeMap<Word<G>, i64>,
}

impl<G> Default for GroupRingElement<G> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<G: Copy + Ord> GroupRingElement<G> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, coeff: i64, w: Word<G>) {
        let c = self.terms.entry(w.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Word<G>)> {
        self.terms.iter().map(|(w, c)| (*c, w))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image in Z[t^±1] under the map sending each generator g to t^phi(g).
    pub fn abelianize(&self, phi: impl Fn(G) -> i64) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (w, c) in &self.terms {
            let e: i64 = w.letters().iter().map(|&(g, k)| phi(g) * k).sum();
            p.add_term(e, BigInt::from(*c));
        }
        p
    }
}

/// ∂w/∂g by the Fox rules.
pub fn fox_derivative<G: Copy + Ord>(w: &Word<G>, g: G) -> GroupRingElement<G> {
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for (h, e) in w.unit_letters() {
        if e > 0 {
            if h == g {
                out.add_term(1, prefix.clone());
            }
            prefix.push(h, 1);
        } else {
            prefix.push(h, -1);
            if h == g {
                out.add_term(-1, prefix.clone());
            }
        }
    }
    out
}

/// φ(∂w/∂g) computed directly, without materializing prefix words.
pub fn fox_derivative_abelianized<G: Copy + Eq>(w: &Word<G>, g: G, phi: impl Fn(G) -> i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    let mut deg = 0i64;
    for &(h, e) in w.letters() {
        let step = phi(h);
        if h == g {
            if e > 0 {
                for i in 0..e {
                    out.add_term(deg + i * step, BigInt::from(1));
                }
            } else {
                for i in 1..=-e {
                    out.add_term(deg - i * step, BigInt::from(-1));
                }
            }
        }
        deg += e * step;
    }
    out
}

fn check_s3(lens: LensSpace) -> Result<()> {
    if lens.is_s3() {
        Ok(())
    } else {
        Err(Error::NotS3(lens.to_string()))
    }
}

fn phi(mu: i64) -> impl Fn(KnotLetter) -> i64 {
    move |g| match g {
        KnotLetter::X => 1,
        KnotLetter::Y => -mu,
        KnotLetter::Sub(_) => panic!("auxiliary meridian in a substituted relator"),
    }
}

/// Exponents (of t) for x and y that kill the abelianized relator: (1, −μ).
pub fn abelianization_map(f: &SchubertForm) -> Result<(i64, i64)> {
    abelianization_map_in(f, LensSpace::s3())
}

pub fn abelianization_map_in(f: &SchubertForm, lens: LensSpace) -> Result<(i64, i64)> {
    check_s3(lens)?;
    Ok((1, -KnotExterior::new(f)?.mu()))
}

/// Δ(t) = gcd(φ(∂R/∂x), φ(∂R/∂y)), canonicalized.
pub fn alexander_poly(f: &SchubertForm) -> Result<LaurentPoly> {
    alexander_poly_in(f, LensSpace::s3())
}

pub fn alexander_poly_in(f: &SchubertForm, lens: LensSpace) -> Result<LaurentPoly> {
    check_s3(lens)?;
    let k = KnotExterior::new(f)?;
    Ok(alexander_of(&k.relator(lens), k.mu()))
}

/// Alexander polynomial of a two-generator one-relator knot group with x ↦ t, y ↦ t^-μ.
pub fn alexander_of(relator: &KnotWord, mu: i64) -> LaurentPoly {
    let dx = fox_derivative_abelianized(relator, KnotLetter::X, phi(mu));
    let dy = fox_derivative_abelianized(relator, KnotLetter::Y, phi(mu));
    laurent_gcd(&dx, &dy)
}

/// (t^pq − 1)(t − 1) / ((t^p − 1)(t^q − 1)), canonicalized.
pub fn torus_knot_alexander(p: u32, q: u32) -> LaurentPoly {
    let tm1 = |k: u32| &LaurentPoly::monomial(1, k as i64) - &LaurentPoly::one();
    let num = &tm1(p * q) * &tm1(1);
    let den = &tm1(p) * &tm1(q);
    num.div_exact(&den).expect("cyclotomic quotient is exact").canonical()
}
