//! Knot groups of 1-bridge torus knots: relators, presentations, exterior homology, cyclic covers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactalg::{AbelianGroupInvariants, IntMatrix};
use crate::schubert::{trace_triples, SchubertForm, Sign, TraceStep};
use crate::word::{KnotLetter, KnotWord, Word};
use crate::{Error, Result};

/// Lens space L(p,q) in canonical form: (1,0), (0,1), or p ≥ 2 with 1 ≤ q < p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        if p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!("lens space L({p},{q}) needs gcd(p,q)=1")));
        }
        Ok(match p {
            0 => Self { p: 0, q: 1 },
            1 => Self { p: 1, q: 0 },
            _ => Self { p, q: q.rem_euclid(p) },
        })
    }

    pub fn s3() -> Self {
        Self { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_s3(&self) -> bool {
        self.p == 1
    }
}

impl Default for LensSpace {
    fn default() -> Self {
        Self::s3()
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Generators and relators of a finitely presented group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<KnotLetter>,
    pub relators: Vec<KnotWord>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// The traced data of a knot form, from which all group-level invariants are read.
#[derive(Clone, Debug)]
pub struct KnotExterior {
    form: SchubertForm,
    plus: SchubertForm,
    triples: Vec<TraceStep>,
    /// Image of x_k as a word in x, y (index k−1).
    meridians: Vec<KnotWord>,
}

impl KnotExterior {
    pub fn new(f: &SchubertForm) -> Result<Self> {
        let triples = trace_triples(f)?;
        let plus = if f.eps == Sign::Minus { f.swap_st() } else { *f };
        let mut meridians = vec![KnotWord::identity(); triples.len()];
        let mut prefix = KnotWord::identity();
        let mut e = 1;
        for st in &triples {
            prefix.append(&st.letter);
            e *= st.sign.value();
            meridians[st.label as usize - 1] =
                &(&prefix.inverse() * &Word::letter(KnotLetter::X, e)) * &prefix;
        }
        Ok(Self { form: *f, plus, triples, meridians })
    }

    pub fn form(&self) -> &SchubertForm {
        &self.form
    }

    pub fn triples(&self) -> &[TraceStep] {
        &self.triples
    }

    fn n(&self) -> i64 {
        self.triples.len() as i64
    }

    /// x_1 x_2 ⋯ x_n.
    pub fn r01(&self) -> KnotWord {
        Word::from_letters((1..=self.n() as u64).map(|k| (KnotLetter::Sub(k), 1)))
    }

    /// R(0,1)^(−m) x_n^-1 ⋯ x_(n−ρ̄+1)^-1 y with ρ = m·n + ρ̄.
    pub fn r10(&self) -> KnotWord {
        let n = self.n();
        let (m, rb) = self.plus.rho.div_mod_floor(&n);
        let mut w = self.r01().pow(-m);
        for k in (n - rb + 1..=n).rev() {
            w.push(KnotLetter::Sub(k as u64), -1);
        }
        w.push(KnotLetter::Y, 1);
        w
    }

    /// R(p,q) in the letters x_k and y.
    pub fn rpq(&self, lens: LensSpace) -> KnotWord {
        let (p, q) = (lens.p(), lens.q());
        match p {
            0 => return self.r01(),
            1 => return self.r10(),
            _ => {}
        }
        let (r10, r01) = (self.r10(), self.r01());
        let mut w = r10.clone();
        for i in 2..=p {
            let j = (i - 1) * q % p + 1;
            if j > p - q {
                w.append(&r01);
            }
            w.append(&r10);
        }
        w
    }

    /// Rewrite a word in x_k, x, y into x and y only.
    pub fn substitute(&self, w: &KnotWord) -> KnotWord {
        w.substitute(|g| match g {
            KnotLetter::Sub(k) => self.meridians[k as usize - 1].clone(),
            other => Word::gen(other),
        })
    }

    pub fn relator(&self, lens: LensSpace) -> KnotWord {
        self.substitute(&self.rpq(lens))
    }

    pub fn presentation(&self, lens: LensSpace) -> Presentation {
        Presentation {
            generators: vec![KnotLetter::X, KnotLetter::Y],
            relators: vec![self.relator(lens)],
        }
    }

    /// Sum of the partial products of the ε sequence.
    pub fn ell(&self) -> i64 {
        let mut e = 1;
        let mut sum = 0;
        for st in &self.triples {
            e *= st.sign.value();
            sum += e;
        }
        sum
    }

    /// Exponent sum of x in the substituted R(1,0).
    pub fn mu(&self) -> i64 {
        self.substitute(&self.r10()).exponent_sum(KnotLetter::X)
    }

    /// H_1 of the exterior from ℓ and p.
    pub fn h1_exterior(&self, lens: LensSpace) -> AbelianGroupInvariants {
        let order = if lens.p() == 0 { self.ell() } else { lens.p().gcd(&self.ell()) };
        AbelianGroupInvariants::from_cyclic(&[BigInt::from(0), BigInt::from(order)])
    }

    /// H_1 of the exterior by Smith normal form of the abelianized relator.
    pub fn h1_exterior_snf(&self, lens: LensSpace) -> AbelianGroupInvariants {
        let r = self.relator(lens);
        let m = IntMatrix::from_rows(&[[r.exponent_sum(KnotLetter::X), r.exponent_sum(KnotLetter::Y)]]);
        AbelianGroupInvariants::from_presentation(&m)
    }

    /// Existence of a k-fold cyclic cover branched along the knot: qℓ+pμ ≡ 0 mod gcd(p,k).
    pub fn kfold_cover_exists(&self, lens: LensSpace, k: i64) -> Result<bool> {
        if k < 2 {
            return Err(Error::Invalid(format!("k-fold cover needs k >= 2, got {k}")));
        }
        let nx = lens.q() * self.ell() + lens.p() * self.mu();
        Ok(nx % lens.p().gcd(&k) == 0)
    }

    /// Double branched cover exists iff p is odd or s+t is odd.
    pub fn double_cover_exists(&self, lens: LensSpace) -> bool {
        lens.p() % 2 != 0 || (self.form.s + self.form.t) % 2 == 1
    }
}

pub fn relator_r01(f: &SchubertForm) -> Result<KnotWord> {
    Ok(KnotExterior::new(f)?.r01())
}

pub fn relator_r10(f: &SchubertForm) -> Result<KnotWord> {
    Ok(KnotExterior::new(f)?.r10())
}

pub fn relator_rpq(f: &SchubertForm, lens: LensSpace) -> Result<KnotWord> {
    Ok(KnotExterior::new(f)?.rpq(lens))
}

pub fn presentation(f: &SchubertForm, lens: LensSpace) -> Result<Presentation> {
    Ok(KnotExterior::new(f)?.presentation(lens))
}

pub fn ell(f: &SchubertForm) -> Result<i64> {
    Ok(KnotExterior::new(f)?.ell())
}

pub fn mu(f: &SchubertForm) -> Result<i64> {
    Ok(KnotExterior::new(f)?.mu())
}

pub fn h1_exterior(f: &SchubertForm, lens: LensSpace) -> Result<AbelianGroupInvariants> {
    Ok(KnotExterior::new(f)?.h1_exterior(lens))
}

pub fn kfold_cover_exists(f: &SchubertForm, lens: LensSpace, k: i64) -> Result<bool> {
    KnotExterior::new(f)?.kfold_cover_exists(lens, k)
}

pub fn double_cover_exists_schubert(f: &SchubertForm, lens: LensSpace) -> Result<bool> {
    Ok(KnotExterior::new(f)?.double_cover_exists(lens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use KnotLetter::{Sub, X, Y};
    use Sign::{Minus, Plus};

    fn k942() -> SchubertForm {
        SchubertForm::new(1, 3, 0, 2, Plus)
    }

    fn lens(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn lens_canonical_forms() {
        assert_eq!(lens(1, 1), LensSpace::s3());
        assert_eq!(lens(-1, 5), LensSpace::s3());
        assert_eq!(lens(0, -1), lens(0, 1));
        assert_eq!((lens(5, 7).p(), lens(5, 7).q()), (5, 2));
        assert_eq!((lens(5, -1).p(), lens(5, -1).q()), (5, 4));
        assert!(LensSpace::new(4, 2).is_err());
        assert!(LensSpace::new(0, 2).is_err());
    }

    #[test]
    fn relators_942() {
        let k = KnotExterior::new(&k942()).unwrap();
        assert_eq!(k.r01().to_string(), "x_1 x_2 x_3 x_4 x_5 x_6");
        assert_eq!(k.r10(), Word::from_letters([(Sub(6), -1), (Sub(5), -1), (Y, 1)]));
        let w: Vec<KnotWord> = k.triples().iter().map(|s| s.letter.clone()).collect();
        let p3 = &(&w[0] * &w[1]) * &w[2];
        let p4 = &p3 * &w[3];
        let expect = [p3.inverse(), Word::gen(X), p3, p4.inverse(), Word::gen(X), p4, Word::gen(Y)]
            .iter()
            .fold(KnotWord::identity(), |a, b| &a * b);
        assert_eq!(k.relator(LensSpace::s3()), expect);
        assert_eq!(k.ell(), -2);
        assert_eq!(k.mu(), 2);
    }

    #[test]
    fn negative_rho_branch() {
        // rho = -2 = -1*6 + 4: one copy of R(0,1), then x_6^-1 ... x_3^-1 y
        let f = SchubertForm::new(1, 3, 0, -2, Plus);
        if let Ok(k) = KnotExterior::new(&f) {
            let mut expect = k.r01();
            for j in [6, 5, 4, 3] {
                expect.push(Sub(j), -1);
            }
            expect.push(Y, 1);
            assert_eq!(k.r10(), expect);
        }
        let unknot = KnotExterior::new(&SchubertForm::new(0, 0, 0, 0, Plus)).unwrap();
        assert_eq!(unknot.r10(), Word::gen(Y));
        assert_eq!(unknot.r01().to_string(), "x_1");
        assert_eq!(unknot.ell(), 1);
    }

    #[test]
    fn rpq_induction() {
        let k = KnotExterior::new(&k942()).unwrap();
        assert_eq!(k.rpq(LensSpace::s3()), k.r10());
        assert_eq!(k.rpq(lens(0, 1)), k.r01());
        // p=2, q=1: i=2 gives j=2 > p-q=1
        assert_eq!(k.rpq(lens(2, 1)), &(&k.r10() * &k.r01()) * &k.r10());
    }

    #[test]
    fn homology_and_covers() {
        let k = KnotExterior::new(&k942()).unwrap();
        assert_eq!(k.h1_exterior(LensSpace::s3()).to_string(), "Z");
        assert_eq!(k.h1_exterior(lens(0, 1)).to_string(), "Z + Z_2");
        assert_eq!(k.h1_exterior(lens(4, 1)).to_string(), "Z + Z_2");
        for l in [LensSpace::s3(), lens(0, 1), lens(4, 1), lens(5, 2)] {
            assert_eq!(k.h1_exterior(l), k.h1_exterior_snf(l));
        }
        assert!(k.kfold_cover_exists(LensSpace::s3(), 5).unwrap());
        assert!(k.kfold_cover_exists(lens(0, 1), 2).unwrap());
        assert!(k.double_cover_exists(lens(2, 1)));
        for rho in 0..6 {
            if let Ok(k) = KnotExterior::new(&SchubertForm::new(1, 2, 0, rho, Plus)) {
                assert!(!k.double_cover_exists(lens(2, 1)));
                assert!(!k.kfold_cover_exists(lens(2, 1), 2).unwrap());
            }
        }
    }

    #[test]
    fn minus_forms_use_swapped_trace() {
        let f = k942().swap_st();
        assert_eq!(f.eps, Minus);
        let k = KnotExterior::new(&f).unwrap();
        assert_eq!(k.triples(), KnotExterior::new(&k942()).unwrap().triples());
        assert!(relator_r10(&SchubertForm::new(0, 0, 2, -3, Plus)).is_err());
    }

    #[test]
    fn unknot_and_trefoil_groups() {
        let u = KnotExterior::new(&SchubertForm::new(0, 0, 0, 0, Plus)).unwrap();
        let r = u.relator(LensSpace::s3());
        assert_eq!(r.exponent_sum(Y), 1);
        assert_eq!(u.h1_exterior_snf(LensSpace::s3()).to_string(), "Z");
        let t = presentation(&SchubertForm::new(0, 0, 1, -3, Plus), LensSpace::s3()).unwrap();
        assert_eq!(t.generators, [X, Y]);
        assert_eq!(t.relators.len(), 1);
    }
}
