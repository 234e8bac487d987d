//! Exhaustive consistency sweeps over small forms.

use std::fmt;
use std::thread;

use crate::doublecover::{completion, h1_double_cover, h1_double_cover_heegaard, h1_double_cover_snf, z_sequence, z_recursion};
use crate::knotgroup::{KnotExterior, LensSpace};
use crate::mcg::ConwayForm;
use crate::schubert::{count_components_fast, count_components_oracle, SchubertForm, Sign};
use crate::word::KnotLetter;

const MAX_REPORTED: usize = 10;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub cases: u64,
    pub failed: u64,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl SweepReport {
    fn new(name: &str) -> Self {
        Self { name: name.to_string(), ..Self::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(what());
            }
        }
    }

    fn merge(&mut self, other: SweepReport) {
        self.cases += other.cases;
        self.failed += other.failed;
        let room = MAX_REPORTED.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} cases, {} failed", self.name, self.cases, self.failed)
    }
}

/// Run `f(r)` for r = 0..=max on worker threads, merging in order of r.
fn per_r(name: &str, max: u64, f: impl Fn(u64, &mut SweepReport) + Sync) -> SweepReport {
    let parts: Vec<SweepReport> = thread::scope(|sc| {
        let handles: Vec<_> = (0..=max)
            .map(|r| {
                let f = &f;
                sc.spawn(move || {
                    let mut rep = SweepReport::new(name);
                    f(r, &mut rep);
                    rep
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
    });
    let mut total = SweepReport::new(name);
    for p in parts {
        total.merge(p);
    }
    total
}

/// Every form with r,s,t ≤ max, 0 ≤ ρ < n and both signs.
pub fn all_forms(r: u64, max: u64) -> impl Iterator<Item = SchubertForm> {
    (0..=max).flat_map(move |s| {
        (0..=max).flat_map(move |t| {
            let n = 2 * r + 1 + s + t;
            (0..n as i64).flat_map(move |rho| {
                [Sign::Plus, Sign::Minus].map(|e| SchubertForm::new(r, s, t, rho, e))
            })
        })
    })
}

/// Canonical lens spaces with p ≤ max_p.
pub fn lens_spaces(max_p: i64) -> Vec<LensSpace> {
    let mut v = vec![LensSpace::new(0, 1).unwrap(), LensSpace::s3()];
    for p in 2..=max_p {
        for q in 1..p {
            if let Ok(l) = LensSpace::new(p, q) {
                v.push(l);
            }
        }
    }
    v
}

/// Fast counter against the tracer.
pub fn oracle_sweep(max: u64) -> SweepReport {
    per_r("fast counter = tracer", max, |r, rep| {
        for f in all_forms(r, max) {
            let (a, b) = (count_components_fast(&f), count_components_oracle(&f));
            rep.check(a == b, || format!("{f}: fast {a}, tracer {b}"));
        }
    })
}

/// Sign and ρ symmetries of the tracer.
pub fn symmetry_sweep(max: u64) -> SweepReport {
    per_r("tracer symmetries", max, |r, rep| {
        for f in all_forms(r, max).filter(|f| f.eps == Sign::Plus) {
            let n = f.n() as i64;
            let c = count_components_oracle(&f);
            let minus = SchubertForm { rho: n - f.rho, eps: Sign::Minus, ..f };
            let shifted = SchubertForm { rho: f.rho + n, ..f };
            rep.check(count_components_oracle(&minus) == c, || format!("{minus} vs {f}"));
            rep.check(count_components_oracle(&shifted) == c, || format!("{shifted} vs {f}"));
        }
    })
}

/// Exponent sums of R(p,q), H_1 formula against SNF, and double-cover parity, for knots with r,s,t ≤ max.
pub fn homology_sweep(max: u64, max_p: i64) -> SweepReport {
    let lenses = lens_spaces(max_p);
    per_r("knot group homology", max, |r, rep| {
        for f in all_forms(r, max) {
            let Ok(k) = KnotExterior::new(&f) else { continue };
            let (ell, mu) = (k.ell(), k.mu());
            rep.check(ell.rem_euclid(2) == (f.n() % 2) as i64, || format!("{f}: ell parity"));
            for &l in &lenses {
                let rel = k.relator(l);
                let nx = rel.exponent_sum(KnotLetter::X);
                let ny = rel.exponent_sum(KnotLetter::Y);
                rep.check(nx == l.q() * ell + l.p() * mu && ny == l.p(), || {
                    format!("{f} in {l}: exponent sums ({nx},{ny})")
                });
                rep.check(k.h1_exterior(l) == k.h1_exterior_snf(l), || format!("{f} in {l}: H1 formula vs SNF"));
                let kfold = k.kfold_cover_exists(l, 2).unwrap();
                rep.check(kfold == k.double_cover_exists(l), || format!("{f} in {l}: double cover parity"));
            }
        }
    })
}

/// Double-cover homology by formula, SNF and Heegaard matrix, over all forms with m ∈ {2,4} and |a_i| ≤ bound.
pub fn double_cover_sweep(bound: i64, max_p: i64) -> SweepReport {
    let lenses = lens_spaces(max_p);
    let mut rep = SweepReport::new("double cover homology");
    let vals: Vec<i64> = (-bound..=bound).collect();
    let mut forms = Vec::new();
    for &a1 in &vals {
        for &a2 in &vals {
            forms.push(vec![a1, a2]);
            for &a3 in &vals {
                for &a4 in &vals {
                    forms.push(vec![a1, a2, a3, a4]);
                }
            }
        }
    }
    for a in forms {
        let m = a.len();
        let c = ConwayForm::new(a, vec![0; m], 0).expect("even length");
        for &l in &lenses {
            let zd = z_sequence(&c, l);
            let rec1 = z_recursion(c.a(), 0.into(), 1.into()).pop().unwrap();
            let rec2 = z_recursion(c.a(), 1.into(), 0.into()).pop().unwrap();
            rep.check(zd.z1_component == rec1 && zd.z2_component == rec2, || format!("{c} in {l}: closed form"));
            let f = h1_double_cover(&c, l);
            let s = h1_double_cover_snf(&c, l);
            let h = h1_double_cover_heegaard(&c, l, completion(l));
            rep.check(f.is_ok() && f == s && f == h, || format!("{c} in {l}: {f:?} / {s:?} / {h:?}"));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweeps_pass() {
        for rep in [oracle_sweep(3), symmetry_sweep(3), homology_sweep(2, 4), double_cover_sweep(1, 4)] {
            assert!(rep.passed(), "{rep}: {:?}", rep.failures);
            assert!(rep.cases > 0);
        }
    }
}
