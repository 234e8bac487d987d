//! Schubert normal forms S(r,s,t,ρ)ε, the cylinder tracer and the fast component counter.

use std::fmt;

use num_integer::Integer;

use crate::word::{KnotLetter, KnotWord, Word};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Self {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_value(self.value() * rhs.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The 4-tuple (r,s,t,ρ) with side ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchubertForm {
    pub r: u64,
    pub s: u64,
    pub t: u64,
    pub rho: i64,
    pub eps: Sign,
}

impl SchubertForm {
    pub fn new(r: u64, s: u64, t: u64, rho: i64, eps: Sign) -> Self {
        Self { r, s, t, rho, eps }
    }

    pub fn n(&self) -> u64 {
        2 * self.r + 1 + self.s + self.t
    }

    /// ρ̄ ≡ ε·ρ (mod n), 0 ≤ ρ̄ < n.
    pub fn rho_bar(&self) -> u64 {
        (self.eps.value() * self.rho).rem_euclid(self.n() as i64) as u64
    }

    /// The +1 representative with 0 ≤ ρ < n and the same component count.
    pub fn normalize(&self) -> Self {
        Self { rho: self.rho_bar() as i64, eps: Sign::Plus, ..*self }
    }

    /// S(r,s,t,ρ)+ ↔ S(r,t,s,ρ+2r+1)−, preserving knot type.
    pub fn swap_st(&self) -> Self {
        let w = 2 * self.r as i64 + 1;
        let rho = match self.eps {
            Sign::Plus => self.rho + w,
            Sign::Minus => self.rho - w,
        };
        Self { s: self.t, t: self.s, rho, eps: self.eps.flip(), ..*self }
    }

    /// (r,s,t,ρ)± ↦ (r,s,t,−ρ)∓.
    pub fn mirror(&self) -> Self {
        Self { rho: -self.rho, eps: self.eps.flip(), ..*self }
    }

    /// The (p,q) torus knot as S(0,0,p−1,−q)+.
    pub fn from_torus_knot(p: i64, q: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::Invalid(format!("torus knot needs p >= 1, got {p}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::Invalid(format!("torus knot needs gcd(p,q)=1, got ({p},{q})")));
        }
        Ok(Self::new(0, 0, p as u64 - 1, -q, Sign::Plus))
    }

    /// The 2-bridge knot B(α,β) as S(β−1, α−2β+1, 0, ε)ε. Requires 2β ≤ α+1 so that s ≥ 0.
    pub fn from_two_bridge(alpha: i64, beta: i64, eps: Sign) -> Result<Self> {
        let bad = |why: &str| Err(Error::Invalid(format!("B({alpha},{beta}): {why}")));
        if alpha <= 0 || alpha % 2 == 0 || beta % 2 == 0 {
            return bad("alpha and beta must be odd, alpha positive");
        }
        if !(0 < beta && beta < alpha) {
            return bad("need 0 < beta < alpha");
        }
        if alpha.gcd(&beta) != 1 {
            return bad("need gcd(alpha,beta)=1");
        }
        if 2 * beta > alpha + 1 {
            return bad("need 2*beta <= alpha+1; use an equivalent beta");
        }
        Ok(Self::new(
            beta as u64 - 1,
            (alpha - 2 * beta + 1) as u64,
            0,
            eps.value(),
            eps,
        ))
    }

    /// The satellite K(α,β;p,q)ε as S((β−1)/2, (α−2β)/2, (α/2)p, (α/2)q)ε.
    pub fn from_satellite(alpha: i64, beta: i64, eps: Sign, p: i64, q: i64) -> Result<Self> {
        if alpha <= 0 || alpha % 2 != 0 {
            return Err(Error::Invalid(format!("satellite needs even positive alpha, got {alpha}")));
        }
        if beta % 2 == 0 || !(0 < beta && 2 * beta < alpha) {
            return Err(Error::Invalid(format!("satellite needs odd beta with 0 < beta < alpha/2, got {beta}")));
        }
        if p <= 0 || q <= 0 {
            return Err(Error::Invalid(format!("satellite needs p,q > 0, got ({p},{q})")));
        }
        let h = alpha / 2;
        Ok(Self::new(
            (beta as u64 - 1) / 2,
            ((alpha - 2 * beta) / 2) as u64,
            (h * p) as u64,
            h * q,
            eps,
        ))
    }
}

impl fmt::Display for SchubertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{},{},{}){}", self.r, self.s, self.t, self.rho, self.eps)
    }
}

/// The word W carried by one passage of the curve across the diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Passage {
    X,
    XInv,
    XInvYInv,
    YInv,
    YX,
    YXYInv,
    YXInvYInv,
    Y,
}

impl Passage {
    fn word(self) -> KnotWord {
        use KnotLetter::{X, Y};
        let l: &[(KnotLetter, i64)] = match self {
            Passage::X => &[(X, 1)],
            Passage::XInv => &[(X, -1)],
            Passage::XInvYInv => &[(X, -1), (Y, -1)],
            Passage::YInv => &[(Y, -1)],
            Passage::YX => &[(Y, 1), (X, 1)],
            Passage::YXYInv => &[(Y, 1), (X, 1), (Y, -1)],
            Passage::YXInvYInv => &[(Y, 1), (X, -1), (Y, -1)],
            Passage::Y => &[(Y, 1)],
        };
        Word::from_letters(l.iter().copied())
    }
}

/// Cut-open cylinder of an ε=+1 form with 0 ≤ ρ̄ < n.
#[derive(Clone, Copy, Debug)]
struct Cylinder {
    r: i64,
    s: i64,
    t: i64,
    n: i64,
    rb: i64,
}

impl Cylinder {
    fn new(f: &SchubertForm) -> Self {
        let g = f.normalize();
        Self { r: g.r as i64, s: g.s as i64, t: g.t as i64, n: g.n() as i64, rb: g.rho }
    }

    fn md(&self, v: i64) -> i64 {
        (v - 1).rem_euclid(self.n) + 1
    }

    fn start(&self) -> i64 {
        self.md(self.s + self.r + 1 - self.rb)
    }

    /// Next (label, passage, ε) from label `k` moving in direction `d`; `None` at an arc endpoint.
    fn step(&self, k: i64, d: i64) -> Option<(i64, Passage, i64)> {
        let Cylinder { r, s, t, n, rb } = *self;
        if d == 1 {
            if 1 <= k && k <= r {
                Some((self.md(2 * (r + 1) - k), Passage::X, -1))
            } else if r + 1 < k && k <= 2 * r + 1 {
                Some((self.md(2 * (r + 1) - k), Passage::XInv, -1))
            } else if 2 * r + 1 < k && k <= n - t {
                Some((self.md(k - (2 * r + 1) - rb), Passage::XInvYInv, 1))
            } else if n - t < k && k <= n {
                Some((self.md(k - rb), Passage::YInv, 1))
            } else {
                None
            }
        } else {
            let j = self.md(k + rb);
            if 1 <= j && j <= s {
                Some((self.md(j + 2 * r + 1), Passage::YX, 1))
            } else if s < j && j <= s + r {
                Some((self.md(2 * (r + s + 1) - j - rb), Passage::YXYInv, -1))
            } else if s + r + 1 < j && j <= n - t {
                Some((self.md(2 * (r + s + 1) - j - rb), Passage::YXInvYInv, -1))
            } else if n - t < j && j <= n {
                Some((j, Passage::Y, 1))
            } else {
                None
            }
        }
    }

    /// The arc: (label, passage, ε) triples from the start until an endpoint.
    fn arc(&self) -> Vec<(i64, Passage, i64)> {
        let mut out = vec![(self.start(), Passage::YInv, 1)];
        let (mut k, mut d) = (self.start(), 1);
        while let Some((k2, w, e)) = self.step(k, d) {
            out.push((k2, w, e));
            assert!(out.len() as i64 <= self.n, "arc revisits a label");
            k = k2;
            d *= e;
        }
        out
    }
}

/// Component count by tracing the curve: 1 for the arc plus one per closed cycle.
pub fn count_components_oracle(f: &SchubertForm) -> u64 {
    let cyl = Cylinder::new(f);
    let n = cyl.n as usize;
    let mut seen = vec![false; n + 1];
    for (k, _, _) in cyl.arc() {
        seen[k as usize] = true;
    }
    let mut count = 1;
    for k0 in 1..=cyl.n {
        if seen[k0 as usize] {
            continue;
        }
        count += 1;
        let (mut k, mut d) = (k0, 1);
        let mut steps = 0;
        loop {
            seen[k as usize] = true;
            let (k2, _, e) = cyl
                .step(k, d)
                .expect("closed cycle reached an arc endpoint");
            k = k2;
            d *= e;
            steps += 1;
            if k == k0 && d == 1 {
                break;
            }
            assert!(steps <= 2 * n + 2, "closed cycle failed to close");
        }
    }
    count
}

/// One triple (k_i, W_i, ε_i) of the trace, with the direction ε_1⋯ε_(i−1) before the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub index: usize,
    pub label: u64,
    pub letter: KnotWord,
    pub sign: Sign,
    pub direction: Sign,
}

/// The n triples (k_i, W_i, ε_i) of a knot. ε=−1 forms are first moved to ε=+1 by `swap_st`.
pub fn trace_triples(f: &SchubertForm) -> Result<Vec<TraceStep>> {
    let g = if f.eps == Sign::Minus { f.swap_st() } else { *f };
    let cyl = Cylinder::new(&g);
    let arc = cyl.arc();
    if arc.len() as i64 != cyl.n {
        return Err(Error::NotAKnot { components: count_components_oracle(&g) });
    }
    let mut d = 1;
    Ok(arc
        .into_iter()
        .enumerate()
        .map(|(i, (k, w, e))| {
            let step = TraceStep {
                index: i + 1,
                label: k as u64,
                letter: w.word(),
                sign: Sign::from_value(e),
                direction: Sign::from_value(d),
            };
            d *= e;
            step
        })
        .collect())
}

/// The four-leaf parameters of a form after peeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LeafConfig {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
    pub delta: u64,
}

impl LeafConfig {
    /// Number of components of the four-leaf curve.
    pub fn count_components(&self) -> u64 {
        let LeafConfig { mut alpha, mut beta, mut gamma, mut delta } = *self;
        loop {
            if alpha < delta {
                (alpha, beta, gamma, delta) = (delta, gamma, beta, alpha);
            }
            if alpha == delta {
                return alpha + beta.gcd(&gamma).div_ceil(2);
            }
            if gamma == 0 && delta == 0 {
                return alpha.gcd(&beta).div_ceil(2);
            }
            let b = delta % (alpha - delta);
            (alpha, beta, gamma, delta) = (alpha - delta - b, b, beta, gamma);
        }
    }
}

enum Reduced {
    Count(u64),
    Leaves(LeafConfig),
}

/// Peel strands until t < ρ̄ < n − t, then read off the leaves.
fn reduce(f: &SchubertForm) -> Reduced {
    let g = f.normalize();
    let (r, s, mut t, mut rb) = (g.r, g.s, g.t, g.rho as u64);
    loop {
        let n = 2 * r + 1 + s + t;
        rb %= n;
        if rb == 0 {
            return Reduced::Count(t + (2 * r + 1).gcd(&s).div_ceil(2));
        }
        if t >= rb {
            t %= rb;
        } else if t >= n - rb {
            let k = t / (n - rb);
            t -= k * (n - rb);
            rb -= k * (n - rb);
        } else {
            return Reduced::Leaves(LeafConfig {
                alpha: rb - t,
                beta: t,
                gamma: n - rb - t,
                delta: s,
            });
        }
    }
}

/// The leaf configuration of a form, or `None` if ρ̄ vanishes during peeling.
pub fn leaf_config(f: &SchubertForm) -> Option<LeafConfig> {
    match reduce(f) {
        Reduced::Leaves(l) if f.rho_bar() != 0 => Some(l),
        _ => None,
    }
}

/// Component count via strand peeling and the four-leaf reduction; agrees with the tracer.
pub fn count_components_fast(f: &SchubertForm) -> u64 {
    if f.rho_bar() == 0 {
        return count_components_oracle(f);
    }
    match reduce(f) {
        Reduced::Count(c) => c,
        Reduced::Leaves(l) => l.count_components(),
    }
}

pub fn is_knot(f: &SchubertForm) -> bool {
    count_components_fast(f) == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Sign::{Minus, Plus};

    fn sf(r: u64, s: u64, t: u64, rho: i64, eps: Sign) -> SchubertForm {
        SchubertForm::new(r, s, t, rho, eps)
    }

    #[test]
    fn normalization() {
        assert_eq!(sf(1, 3, 0, 8, Plus).normalize(), sf(1, 3, 0, 2, Plus));
        assert_eq!(sf(0, 2, 0, 1, Minus).normalize(), sf(0, 2, 0, 2, Plus));
        assert_eq!(sf(2, 2, 1, 9, Plus).normalize(), sf(2, 2, 1, 1, Plus));
    }

    #[test]
    fn fixture_942() {
        let f = sf(1, 3, 0, 2, Plus);
        assert_eq!(count_components_oracle(&f), 1);
        assert!(is_knot(&f));
        let tr = trace_triples(&f).unwrap();
        let labels: Vec<u64> = tr.iter().map(|s| s.label).collect();
        assert_eq!(labels, [3, 1, 6, 5, 4, 2]);
        let words: Vec<String> = tr.iter().map(|s| s.letter.to_string()).collect();
        assert_eq!(words, ["y^-1", "x^-1", "y x", "y x", "y x", "y x^-1 y^-1"]);
        let signs: Vec<i64> = tr.iter().map(|s| s.sign.value()).collect();
        assert_eq!(signs, [1, -1, 1, 1, 1, -1]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_components_oracle(&sf(0, 0, 0, 0, Plus)), 1);
        assert_eq!(count_components_oracle(&sf(0, 0, 3, 0, Plus)), 4);
        assert_eq!(count_components_oracle(&sf(0, 0, 2, -3, Plus)), 3);
        assert!(!is_knot(&sf(0, 0, 2, -3, Plus)));
        // S(0,0,1,-2)+ is the (2,2) torus link
        assert_eq!(count_components_fast(&sf(0, 0, 1, -2, Plus)), 2);
        assert_eq!(count_components_fast(&sf(0, 0, 1, -3, Plus)), 1);
        assert_eq!(count_components_fast(&sf(0, 0, 1, 0, Plus)), count_components_oracle(&sf(0, 0, 1, 0, Plus)));
        let unknot = trace_triples(&sf(0, 0, 0, 0, Plus)).unwrap();
        assert_eq!(unknot.len(), 1);
        assert_eq!((unknot[0].label, unknot[0].letter.to_string()), (1, "y^-1".into()));
    }

    #[test]
    fn trefoil_trace_is_a_permutation() {
        let tr = trace_triples(&sf(0, 2, 0, 1, Plus)).unwrap();
        let mut labels: Vec<u64> = tr.iter().map(|s| s.label).collect();
        labels.sort();
        assert_eq!(labels, [1, 2, 3]);
    }

    #[test]
    fn non_knot_is_rejected() {
        assert_eq!(trace_triples(&sf(0, 0, 2, -3, Plus)), Err(Error::NotAKnot { components: 3 }));
    }

    #[test]
    fn equivalences() {
        let f = sf(1, 3, 0, 2, Plus);
        assert_eq!(f.swap_st(), sf(1, 0, 3, 5, Minus));
        assert_eq!(f.swap_st().swap_st().normalize(), f.normalize());
        assert_eq!(sf(0, 4, 2, 3, Plus).swap_st(), sf(0, 2, 4, 4, Minus));
        assert_eq!(f.mirror(), sf(1, 3, 0, -2, Minus));
        assert_eq!(f.mirror().mirror(), f);
    }

    #[test]
    fn constructors() {
        assert_eq!(SchubertForm::from_torus_knot(2, 3).unwrap(), sf(0, 0, 1, -3, Plus));
        assert_eq!(SchubertForm::from_torus_knot(1, 0).unwrap(), sf(0, 0, 0, 0, Plus));
        let t32 = SchubertForm::from_torus_knot(3, 2).unwrap();
        assert_eq!(t32, sf(0, 0, 2, -2, Plus));
        assert!(is_knot(&t32));
        assert!(SchubertForm::from_torus_knot(2, 4).is_err());
        assert_eq!(SchubertForm::from_two_bridge(3, 1, Plus).unwrap(), sf(0, 2, 0, 1, Plus));
        assert_eq!(SchubertForm::from_two_bridge(5, 3, Plus).unwrap(), sf(2, 0, 0, 1, Plus));
        assert!(SchubertForm::from_two_bridge(7, 5, Plus).is_err());
        assert!(SchubertForm::from_two_bridge(9, 3, Plus).is_err());
        assert_eq!(SchubertForm::from_satellite(4, 1, Plus, 1, 1).unwrap(), sf(0, 1, 2, 2, Plus));
        assert_eq!(SchubertForm::from_satellite(6, 1, Plus, 1, 1).unwrap(), sf(0, 2, 3, 3, Plus));
        assert!(is_knot(&sf(0, 1, 2, 2, Plus)));
        assert!(is_knot(&sf(0, 2, 3, 3, Plus)));
        assert!(SchubertForm::from_satellite(5, 1, Plus, 1, 1).is_err());
    }

    #[test]
    fn two_bridge_and_torus_are_knots() {
        for a in (3..40).step_by(2) {
            for b in (1..a).step_by(2) {
                if let Ok(f) = SchubertForm::from_two_bridge(a, b, Plus) {
                    assert_eq!(count_components_oracle(&f), 1, "B({a},{b})");
                }
            }
        }
        for p in 1..9i64 {
            for q in -9..10i64 {
                let g = p.gcd(&q) as u64;
                assert_eq!(count_components_oracle(&sf(0, 0, p as u64 - 1, -q, Plus)), g);
                assert_eq!(count_components_oracle(&sf(0, p as u64 - 1, 0, -q + 1, Minus)), g);
            }
        }
    }

    #[test]
    fn first_label_formula() {
        for r in 0..4 {
            for s in 0..4 {
                for t in 0..4 {
                    let n = 2 * r + 1 + s + t;
                    for rho in 0..n as i64 {
                        let f = sf(r, s, t, rho, Plus);
                        if let Ok(tr) = trace_triples(&f) {
                            let k1 = (s as i64 + r as i64 - rho).rem_euclid(n as i64) + 1;
                            assert_eq!(tr[0].label as i64, k1);
                            let mut seen: Vec<u64> = tr.iter().map(|x| x.label).collect();
                            seen.sort();
                            assert_eq!(seen, (1..=n).collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn fast_matches_oracle(r in 0u64..40, s in 0u64..40, t in 0u64..40, rho in -200i64..200, minus in prop::bool::ANY) {
            let f = sf(r, s, t, rho, if minus { Minus } else { Plus });
            prop_assert_eq!(count_components_fast(&f), count_components_oracle(&f));
        }

        #[test]
        fn moves_preserve_count(r in 0u64..8, s in 0u64..8, t in 0u64..8, rho in -30i64..30, minus in prop::bool::ANY) {
            let f = sf(r, s, t, rho, if minus { Minus } else { Plus });
            let c = count_components_oracle(&f);
            prop_assert_eq!(count_components_oracle(&f.swap_st()), c);
            prop_assert_eq!(count_components_oracle(&f.mirror()), c);
            prop_assert_eq!(count_components_oracle(&SchubertForm { rho: rho + f.n() as i64, ..f }), c);
        }
    }
}
