//! Words in the kernel of the puncture-forgetting map on the twice-punctured torus,
//! the free subgroup H = <σ, h_ℓ, h_m>, and Conway normal forms.

use std::fmt;

use crate::word::Word;
use crate::{Error, Result};

/// Generators τ_ℓ, τ_m (puncture slides) and σ (puncture swap).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MapGen {
    TauL,
    TauM,
    Sigma,
}

/// Free generators of H: σ, h_ℓ = τ_ℓσ⁻¹τ_ℓ⁻¹, h_m = τ_mστ_m⁻¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HGen {
    Sigma,
    HL,
    HM,
}

impl fmt::Display for MapGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapGen::TauL => "tau_l",
            MapGen::TauM => "tau_m",
            MapGen::Sigma => "sigma",
        })
    }
}

impl fmt::Display for HGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HGen::Sigma => "sigma",
            HGen::HL => "h_l",
            HGen::HM => "h_m",
        })
    }
}

pub type MCGWord = Word<MapGen>;
pub type HWord = Word<HGen>;

/// Membership in H: both τ exponent sums even.
pub fn in_h(w: &MCGWord) -> bool {
    w.exponent_sum(MapGen::TauL) % 2 == 0 && w.exponent_sum(MapGen::TauM) % 2 == 0
}

/// Coset representative τ_m^m τ_ℓ^l, tracked by parities (m, l).
type Coset = (bool, bool);

fn hw(letters: &[(HGen, i64)]) -> HWord {
    Word::from_letters(letters.iter().copied())
}

/// Schreier generator s_(k,g) expressed in σ, h_ℓ, h_m.
fn schreier(k: Coset, g: MapGen) -> HWord {
    use HGen::{Sigma as S, HL, HM};
    use MapGen::{Sigma, TauL, TauM};
    match (k, g) {
        ((false, false), Sigma) => hw(&[(S, 1)]),
        ((true, false), Sigma) => hw(&[(HM, 1)]),
        ((false, true), Sigma) => hw(&[(HL, -1)]),
        ((true, true), Sigma) => hw(&[(HM, -1), (S, -1), (HL, 1)]),
        ((false, true), TauL) => hw(&[(HL, -1), (S, 1)]),
        ((true, false), TauM) => hw(&[(HM, -1), (S, -1)]),
        ((true, true), TauL) => hw(&[(HM, -1), (S, -1), (HL, 1), (HM, 1)]),
        ((false, true), TauM) => hw(&[(HM, -1), (S, -1), (HL, 1)]).pow(-2),
        ((true, true), TauM) => hw(&[(HM, -1), (S, -1), (HL, 2)]),
        _ => HWord::identity(),
    }
}

fn move_coset(k: Coset, g: MapGen) -> Coset {
    match g {
        MapGen::TauM => (!k.0, k.1),
        MapGen::TauL => (k.0, !k.1),
        MapGen::Sigma => k,
    }
}

/// Reidemeister–Schreier rewriting of a word in H onto the free basis σ, h_ℓ, h_m.
pub fn rewrite_to_h(w: &MCGWord) -> Result<HWord> {
    if !in_h(w) {
        return Err(Error::NotInH {
            tau_l: w.exponent_sum(MapGen::TauL),
            tau_m: w.exponent_sum(MapGen::TauM),
        });
    }
    let mut k = (false, false);
    let mut out = HWord::identity();
    for (g, e) in w.unit_letters() {
        if e > 0 {
            out.append(&schreier(k, g));
            k = move_coset(k, g);
        } else {
            k = move_coset(k, g);
            out.append(&schreier(k, g).inverse());
        }
    }
    debug_assert_eq!(k, (false, false));
    Ok(out)
}

/// Conway normal form: blocks (a_i, b_i), i = 1..m with m even, and δ ∈ {0,1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConwayForm {
    a: Vec<i64>,
    b: Vec<i64>,
    delta: u8,
}

impl ConwayForm {
    /// `a` and `b` are indexed a_1..a_m.
    pub fn new(a: Vec<i64>, b: Vec<i64>, delta: u8) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Invalid("Conway form needs as many a's as b's".into()));
        }
        if a.len() < 2 || !a.len().is_multiple_of(2) {
            return Err(Error::Invalid(format!("Conway form needs even m >= 2, got {}", a.len())));
        }
        if delta > 1 {
            return Err(Error::Invalid(format!("delta must be 0 or 1, got {delta}")));
        }
        Ok(Self { a, b, delta })
    }

    /// From display tuples [(a_m,b_m,a_(m−1),b_(m−1)), …, (a_2,b_2,a_1,b_1)].
    pub fn from_display(tuples: &[[i64; 4]], delta: u8) -> Result<Self> {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for t in tuples.iter().rev() {
            a.extend([t[2], t[0]]);
            b.extend([t[3], t[1]]);
        }
        Self::new(a, b, delta)
    }

    pub fn display_tuples(&self) -> Vec<[i64; 4]> {
        (0..self.m() / 2)
            .rev()
            .map(|i| [self.a[2 * i + 1], self.b[2 * i + 1], self.a[2 * i], self.b[2 * i]])
            .collect()
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }

    pub fn with_delta(&self, delta: u8) -> Self {
        Self { delta, ..self.clone() }
    }
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuples: Vec<String> = self
            .display_tuples()
            .iter()
            .map(|t| format!("({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect();
        write!(f, "C[{}]", tuples.join(","))?;
        if self.delta == 1 {
            write!(f, ":1")?;
        }
        Ok(())
    }
}

/// (σ^−b_1 h_m^a_1 σ^−b_2 h_ℓ^a_2) ⋯ (σ^−b_(m−1) h_m^a_(m−1) σ^−b_m h_ℓ^a_m); δ is carried separately.
pub fn conway_to_hword(c: &ConwayForm) -> (HWord, u8) {
    let mut w = HWord::identity();
    for (i, (&a, &b)) in c.a.iter().zip(&c.b).enumerate() {
        w.push(HGen::Sigma, -b);
        w.push(if i % 2 == 0 { HGen::HM } else { HGen::HL }, a);
    }
    (w, c.delta)
}

/// Shortest Conway form whose word is `w`.
pub fn hword_to_conway(w: &HWord, delta: u8) -> ConwayForm {
    const SLOTS: [HGen; 4] = [HGen::Sigma, HGen::HM, HGen::Sigma, HGen::HL];
    let mut vals = Vec::new();
    for &(g, e) in w.letters() {
        while SLOTS[vals.len() % 4] != g {
            vals.push(0);
        }
        vals.push(e);
    }
    while vals.is_empty() || vals.len() % 4 != 0 {
        vals.push(0);
    }
    let b = vals.iter().step_by(2).map(|v| -v).collect();
    let a = vals.iter().skip(1).step_by(2).copied().collect();
    ConwayForm::new(a, b, delta.min(1)).expect("padded to whole blocks")
}

/// Equality as elements of H (with the δ flag).
pub fn conway_equal(c1: &ConwayForm, c2: &ConwayForm) -> bool {
    conway_to_hword(c1) == conway_to_hword(c2)
}

/// Conway form of the 2-bridge knot with even continued fraction [2a_1, …, 2a_m].
pub fn two_bridge_to_conway(c: &[i64]) -> Result<ConwayForm> {
    if c.len() < 2 {
        return Err(Error::Invalid(format!("2-bridge input needs m >= 2 entries, got {}", c.len())));
    }
    if !c.len().is_multiple_of(2) {
        return Err(Error::Invalid(format!("2-bridge input needs an even number of entries, got {}", c.len())));
    }
    if let Some(x) = c.iter().find(|x| *x % 2 != 0) {
        return Err(Error::Invalid(format!("2-bridge input entries must be even, got {x}")));
    }
    use MapGen::{Sigma, TauL, TauM};
    let mut w = MCGWord::identity();
    for pair in c.chunks(2) {
        w.push(TauM, pair[0] / 2);
        w.push(Sigma, pair[1]);
    }
    w.push(Sigma, 1);
    w.push(TauL, -1);
    if w.exponent_sum(TauM) % 2 != 0 {
        w.push(TauM, -1);
    }
    let delta = (w.exponent_sum(TauL) % 2 != 0) as u8;
    let h = &MCGWord::letter(TauL, -(delta as i64)) * &w;
    Ok(hword_to_conway(&rewrite_to_h(&h)?, delta))
}

fn mw(letters: &[(MapGen, i64)]) -> MCGWord {
    Word::from_letters(letters.iter().copied())
}

/// The defining relators of the kernel and their conjugates by the transversal {1, τ_m, τ_ℓ, τ_mτ_ℓ}.
pub fn relator_conjugates() -> Vec<MCGWord> {
    use MapGen::{Sigma as S, TauL as L, TauM as M};
    let rels = [
        mw(&[(L, 1), (S, -1), (L, 1), (S, -1)]),
        mw(&[(M, 1), (S, 1), (M, 1), (S, 1)]),
        mw(&[(S, 2), (L, -1), (M, -1), (L, 1), (M, 1)]),
    ];
    let reps = [mw(&[]), mw(&[(M, 1)]), mw(&[(L, 1)]), mw(&[(M, 1), (L, 1)])];
    reps.iter()
        .flat_map(|k| rels.iter().map(move |r| &(k * r) * &k.inverse()))
        .collect()
}

/// Conjugates of h_ℓ and h_m by τ^±1 with their closed forms in H.
pub fn conjugation_table() -> Vec<(MCGWord, HWord)> {
    use HGen::{Sigma as S, HL, HM};
    use MapGen::{Sigma, TauL as L, TauM as M};
    let hl = mw(&[(L, 1), (Sigma, -1), (L, -1)]);
    let hm = mw(&[(M, 1), (Sigma, 1), (M, -1)]);
    let conj = |g: MapGen, e: i64, x: &MCGWord| &(&MCGWord::letter(g, e) * x) * &MCGWord::letter(g, -e);
    vec![
        (conj(L, 1, &hl), hw(&[(HL, -1), (S, -1), (HL, 1)])),
        (conj(M, -1, &hl), hw(&[(S, 1), (HM, 1), (HL, -1)])),
        (conj(M, 1, &hl), hw(&[(HL, -1), (S, 1), (HM, 1)])),
        (conj(M, 1, &hm), hw(&[(HM, -1), (S, 1), (HM, 1)])),
        (conj(L, -1, &hm), hw(&[(S, -1), (HL, 1), (HM, -1)])),
        (conj(L, 1, &hm), hw(&[(HM, -1), (S, -1), (HL, 1)])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use HGen::{HL, HM};
    use MapGen::{Sigma, TauL, TauM};

    #[test]
    fn membership() {
        assert!(in_h(&mw(&[(TauL, 1), (Sigma, -1), (TauL, -1)])));
        assert!(!in_h(&mw(&[(TauL, 1)])));
        assert!(in_h(&mw(&[(Sigma, 1), (TauL, -2)])));
        assert!(matches!(rewrite_to_h(&mw(&[(TauM, 1)])), Err(Error::NotInH { tau_l: 0, tau_m: 1 })));
    }

    #[test]
    fn basic_rewrites() {
        assert_eq!(rewrite_to_h(&mw(&[(TauL, 1), (Sigma, -1), (TauL, -1)])).unwrap(), HWord::gen(HL));
        assert_eq!(rewrite_to_h(&mw(&[(TauM, 1), (Sigma, 1), (TauM, -1)])).unwrap(), HWord::gen(HM));
        assert_eq!(rewrite_to_h(&mw(&[(Sigma, 1), (TauL, -2)])).unwrap(), HWord::gen(HL));
        assert_eq!(rewrite_to_h(&mw(&[(Sigma, -1), (TauM, -2)])).unwrap(), HWord::gen(HM));
        assert_eq!(rewrite_to_h(&mw(&[(Sigma, 1)])).unwrap(), HWord::gen(HGen::Sigma));
    }

    #[test]
    fn relators_and_conjugations() {
        let rels = relator_conjugates();
        assert_eq!(rels.len(), 12);
        for r in rels {
            assert!(rewrite_to_h(&r).unwrap().is_empty(), "{r}");
        }
        for (w, expect) in conjugation_table() {
            assert_eq!(rewrite_to_h(&w).unwrap(), expect, "{w}");
        }
    }

    #[test]
    fn conway_words() {
        let c = ConwayForm::from_display(&[[3, 0, 1, 0], [-1, 0, 1, 0]], 0).unwrap();
        assert_eq!(c.a(), &[1, -1, 1, 3]);
        assert_eq!(conway_to_hword(&c).0.to_string(), "h_m h_l^-1 h_m h_l^3");
        assert_eq!(hword_to_conway(&conway_to_hword(&c).0, 0), c);
        assert_eq!(c.to_string(), "C[(3,0,1,0),(-1,0,1,0)]");
        let z = ConwayForm::from_display(&[[0, 0, 0, 0], [0, 0, 0, 0]], 0).unwrap();
        assert!(conway_to_hword(&z).0.is_empty());
        let d = ConwayForm::from_display(&[[1, 0, -1, 1], [0, 0, -1, 1]], 1).unwrap();
        let (w, delta) = conway_to_hword(&d);
        assert_eq!((w.to_string().as_str(), delta), ("sigma^-1 h_m^-1 sigma^-1 h_m^-1 h_l", 1));
        let one = hword_to_conway(&HWord::gen(HL), 0);
        assert_eq!((one.a(), one.b()), (&[0, 1][..], &[0, 0][..]));
    }

    #[test]
    fn equality() {
        let c = ConwayForm::from_display(&[[3, 0, 1, 0], [-1, 0, 1, 0]], 0).unwrap();
        let swapped = ConwayForm::from_display(&[[-1, 0, 1, 0], [3, 0, 1, 0]], 0).unwrap();
        assert!(conway_equal(&c, &c));
        assert!(!conway_equal(&c, &swapped));
        let short = ConwayForm::from_display(&[[1, 0, 0, 0]], 0).unwrap();
        let long = ConwayForm::from_display(&[[0, 0, 0, 0], [1, 0, 0, 0]], 0).unwrap();
        assert!(conway_equal(&short, &long));
        assert!(!conway_equal(&c, &c.with_delta(1)));
    }

    #[test]
    fn two_bridge_inputs() {
        for c in [&[2, 2][..], &[2, -2], &[4, 2, -2, 6]] {
            let f = two_bridge_to_conway(c).unwrap();
            assert_eq!(f.delta(), 1);
        }
        assert!(two_bridge_to_conway(&[2]).is_err());
        assert!(two_bridge_to_conway(&[2, 2, 2]).is_err());
        assert!(two_bridge_to_conway(&[2, 3]).is_err());
    }

    fn arb_h() -> impl Strategy<Value = HWord> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..10).prop_map(|v| {
            Word::from_letters(v.into_iter().map(|(g, e)| ([HGen::Sigma, HL, HM][g], e)))
        })
    }

    fn arb_mcg_in_h() -> impl Strategy<Value = MCGWord> {
        prop::collection::vec((0usize..3, -2i64..=2), 0..15).prop_map(|v| {
            let mut w = Word::from_letters(v.into_iter().map(|(g, e)| ([TauL, TauM, Sigma][g], e)));
            if w.exponent_sum(TauL) % 2 != 0 {
                w.push(TauL, 1);
            }
            if w.exponent_sum(TauM) % 2 != 0 {
                w.push(TauM, 1);
            }
            w
        })
    }

    proptest! {
        #[test]
        fn conway_round_trip(w in arb_h(), delta in 0u8..2) {
            let c = hword_to_conway(&w, delta);
            prop_assert_eq!(conway_to_hword(&c), (w, delta));
            prop_assert_eq!(hword_to_conway(&conway_to_hword(&c).0, delta), c);
        }

        #[test]
        fn rewrite_is_multiplicative(u in arb_mcg_in_h(), v in arb_mcg_in_h()) {
            let uv = rewrite_to_h(&(&u * &v)).unwrap();
            prop_assert_eq!(uv, &rewrite_to_h(&u).unwrap() * &rewrite_to_h(&v).unwrap());
        }
    }
}
