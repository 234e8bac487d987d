use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd_big;
use crate::{Error, Result};

/// Integer Laurent polynomial in one variable `t`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// `coeffs[i]` is the coefficient of `t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// (exponent, coefficient) pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitute `t -> t^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * k)))
    }

    /// gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| gcd_big(&acc, c))
    }

    /// Representative of the class up to units `±t^k`: lowest exponent 0, lowest coefficient positive.
    pub fn canonical(&self) -> Self {
        let Some(low) = self.min_exp() else {
            return Self::zero();
        };
        let p = self.shift(-low);
        if p.terms[&0].is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn equal_up_to_units(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Dense coefficient vector starting at the lowest exponent.
    fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(low) = self.min_exp() else {
            return (0, Vec::new());
        };
        let high = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - low) as usize] = c.clone();
        }
        (low, v)
    }

    fn from_dense(low: i64, v: &[BigInt]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (low + i as i64, c.clone())))
    }

    /// Exact quotient `self / d` in Z[t, t^-1], or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (flow, mut f) = self.to_dense();
        let (dlow, dv) = d.to_dense();
        if f.len() < dv.len() {
            return None;
        }
        let dl = dv.len() - 1;
        let lead = &dv[dl];
        let mut q = vec![BigInt::zero(); f.len() - dl];
        for i in (0..q.len()).rev() {
            let (qi, rem) = f[i + dl].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for (j, dj) in dv.iter().enumerate() {
                f[i + j] -= &qi * dj;
            }
            q[i] = qi;
        }
        if f.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(flow - dlow, &q))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = v.iter().fold(BigInt::zero(), |acc, x| gcd_big(&acc, x));
    if c.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (dense, ascending, both trimmed, `b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor in Z[t, t^-1], canonicalized (lowest exponent 0, lowest coefficient positive).
pub fn laurent_gcd(f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if f.is_zero() {
        return g.canonical();
    }
    if g.is_zero() {
        return f.canonical();
    }
    let content = gcd_big(&f.content(), &g.content());
    let (_, a) = f.to_dense();
    let (_, b) = g.to_dense();
    let (mut a, mut b) = (primitive(&a), primitive(&b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    let a = primitive(&a);
    LaurentPoly::from_dense(0, &a).scale(&content).canonical()
}

/// Value of `f` at a nonzero integer; fails if the value is not an integer.
pub fn evaluate(f: &LaurentPoly, at: i64) -> Result<BigInt> {
    if at == 0 {
        return Err(Error::EvaluateAtZero);
    }
    let x = BigInt::from(at);
    let low = f.min_exp().unwrap_or(0).min(0);
    let mut num = BigInt::zero();
    for (e, c) in f.terms() {
        num += c * x.pow((e - low) as u32);
    }
    let den = x.pow((-low) as u32);
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(at));
    }
    Ok(q)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, c.clone());
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn gcd_of_942_derivatives() {
        let dx = p(-1, &[-1, 1, 1, 1, 1, -1]);
        let dy = p(1, &[-1, 2, -1, 2, -1]);
        let g = laurent_gcd(&dx, &dy);
        assert_eq!(g, p(0, &[1, -2, 1, -2, 1]));
        assert_eq!(g.to_string(), "1 - 2t + t^2 - 2t^3 + t^4");
    }

    #[test]
    fn gcd_with_zero_and_shared_factor() {
        let f = p(-3, &[-4, 2]);
        assert_eq!(laurent_gcd(&f, &LaurentPoly::zero()), p(0, &[4, -2]));
        assert_eq!(laurent_gcd(&LaurentPoly::zero(), &LaurentPoly::zero()), LaurentPoly::zero());
        let g = laurent_gcd(&p(2, &[-1, 1]), &p(1, &[-1, 1]));
        assert_eq!(g, p(0, &[1, -1]));
    }

    #[test]
    fn gcd_keeps_content() {
        let g = laurent_gcd(&p(0, &[6, 6]), &p(0, &[4, 0, -4]));
        assert_eq!(g, p(0, &[2, 2]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(evaluate(&p(0, &[1, -2, 1, -2, 1]), -1).unwrap(), BigInt::from(7));
        assert_eq!(evaluate(&LaurentPoly::one(), -1).unwrap(), BigInt::from(1));
        assert_eq!(evaluate(&p(-1, &[1, 0, 1]), -1).unwrap(), BigInt::from(-2));
        assert_eq!(evaluate(&p(0, &[1]), 0), Err(Error::EvaluateAtZero));
        assert_eq!(evaluate(&p(-1, &[1]), 2), Err(Error::NonIntegral(2)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(-2, &[-1, 0, 3, 1]).to_string(), "-t^-2 + 3 + t");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p(-2, &[1, -1]);
        let b = p(3, &[1, 1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(prod.div_exact(&p(0, &[2])), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i64..4, prop::collection::vec(-6i64..=6, 0..6)).prop_map(|(l, c)| p(l, &c))
    }

    proptest! {
        #[test]
        fn gcd_divides_and_is_symmetric(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            let f = &f * &h;
            let g = &g * &h;
            let d = laurent_gcd(&f, &g);
            prop_assert_eq!(&d, &laurent_gcd(&g, &f));
            if !d.is_zero() {
                prop_assert!(f.div_exact(&d).is_some());
                prop_assert!(g.div_exact(&d).is_some());
                if !h.is_zero() {
                    prop_assert!(d.div_exact(&h).is_some());
                }
            }
        }

        #[test]
        fn evaluate_is_ring_morphism(f in arb_poly(), g in arb_poly(), a in prop::sample::select(vec![-1i64, 1])) {
            let fg = &f * &g;
            prop_assert_eq!(evaluate(&fg, a).unwrap(), evaluate(&f, a).unwrap() * evaluate(&g, a).unwrap());
            let s = &f + &g;
            prop_assert_eq!(evaluate(&s, a).unwrap(), evaluate(&f, a).unwrap() + evaluate(&g, a).unwrap());
        }

        #[test]
        fn evaluate_morphism_on_polynomials(c1 in prop::collection::vec(-5i64..=5, 0..5), c2 in prop::collection::vec(-5i64..=5, 0..5), a in -4i64..=4) {
            prop_assume!(a != 0);
            let (f, g) = (p(0, &c1), p(0, &c2));
            prop_assert_eq!(evaluate(&(&f * &g), a).unwrap(), evaluate(&f, a).unwrap() * evaluate(&g, a).unwrap());
        }
    }
}
