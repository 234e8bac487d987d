//! Double branched covers of lens spaces along knots given by Conway normal forms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactalg::{gcd_big, AbelianGroupInvariants, IntMatrix};
use crate::knotgroup::LensSpace;
use crate::mcg::ConwayForm;
use crate::{Error, Result};

/// Longest form for which the components are evaluated by the explicit expansion.
pub const CLOSED_FORM_MAX_M: usize = 24;

/// z_0..z_(m+1) and the components z_(m+1) = p·z1 + q·z2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZData {
    pub z: Vec<BigInt>,
    pub z1_component: BigInt,
    pub z2_component: BigInt,
}

impl ZData {
    pub fn last(&self) -> &BigInt {
        self.z.last().expect("z has m+2 entries")
    }
}

/// z_0 = z0, z_1 = z1, z_(k+1) = 2a_k z_k + z_(k−1).
pub fn z_recursion(a: &[i64], z0: BigInt, z1: BigInt) -> Vec<BigInt> {
    let mut z = vec![z0, z1];
    for (k, &ak) in a.iter().enumerate() {
        let next = BigInt::from(2 * ak) * &z[k + 1] + &z[k];
        z.push(next);
    }
    z
}

/// z^(i)_(m+1) as the sum over sets of disjoint adjacent pairs (j, j+1), i ≤ j < m,
/// of the product of 2a_k over the indices k ≥ i left uncovered.
pub fn z_component_closed_form(a: &[i64], i: usize) -> BigInt {
    fn expand(a: &[i64], k: usize, acc: BigInt) -> BigInt {
        let m = a.len();
        if k > m {
            return acc;
        }
        // a_k stays
        let mut total = expand(a, k + 1, &acc * BigInt::from(2 * a[k - 1]));
        // (k, k+1) is removed
        if k < m {
            total += expand(a, k + 2, acc);
        }
        total
    }
    expand(a, i, BigInt::from(1))
}

pub fn z_sequence(c: &ConwayForm, lens: LensSpace) -> ZData {
    let a = c.a();
    let z = z_recursion(a, BigInt::from(lens.q()), BigInt::from(lens.p()));
    let (z1, z2) = if a.len() <= CLOSED_FORM_MAX_M {
        (z_component_closed_form(a, 1), z_component_closed_form(a, 2))
    } else {
        let one = || BigInt::from(1);
        let zero = BigInt::zero;
        (
            z_recursion(a, zero(), one()).pop().unwrap(),
            z_recursion(a, one(), zero()).pop().unwrap(),
        )
    };
    ZData { z, z1_component: z1, z2_component: z2 }
}

/// (q', p') with q·p' − q'·p = ±1 and the smallest non-negative q'.
pub fn completion(lens: LensSpace) -> (i64, i64) {
    let (p, q) = (lens.p(), lens.q());
    if q == 0 {
        return (1, 0);
    }
    for qp in 0..=q.abs() {
        for s in [1, -1] {
            let num = s + qp * p;
            if num % q == 0 {
                return (qp, num / q);
            }
        }
    }
    unreachable!("gcd(p,q)=1 guarantees a completion")
}

fn check_completion(lens: LensSpace, (qp, pp): (i64, i64)) -> Result<()> {
    let det = lens.q() * pp - qp * lens.p();
    if det.abs() != 1 {
        return Err(Error::Invalid(format!(
            "(q',p') = ({qp},{pp}) does not complete (p,q) = ({},{}): q*p'-q'*p = {det}",
            lens.p(),
            lens.q()
        )));
    }
    Ok(())
}

fn m4(rows: [[i64; 4]; 4]) -> IntMatrix {
    IntMatrix::from_rows(&rows)
}

/// Action on H_1 of the genus-two surface, basis ([m_1],[ℓ_1],[m_2],[ℓ_2]); columns are images.
pub fn lift_matrices(a: i64, b: i64, lens: LensSpace, qp_prime: (i64, i64)) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    check_completion(lens, qp_prime)?;
    let (p, q) = (lens.p(), lens.q());
    let (qp, pp) = qp_prime;
    let hl = m4([[1, 0, 0, 0], [a, 1, -a, 0], [0, 0, 1, 0], [-a, 0, a, 1]]);
    let hm = m4([[1, b, 0, -b], [0, 1, 0, 0], [0, -b, 1, b], [0, 0, 0, 1]]);
    let h0 = m4([[q, qp, 0, 0], [p, pp, 0, 0], [0, 0, q, qp], [0, 0, p, pp]]);
    Ok((hl, hm, h0))
}

/// Whether the τ_ℓ prefix can be ignored for this ambient space.
fn check_delta(c: &ConwayForm, lens: LensSpace) -> Result<()> {
    if c.delta() == 0 || lens.is_s3() {
        return Ok(());
    }
    if lens.p() % 2 == 0 {
        Err(Error::NoDoubleCover)
    } else {
        Err(Error::NeedDeltaZero { p: lens.p(), q: lens.q() })
    }
}

/// A = Hl(a_m) Hm(a_(m−1)) ⋯ Hl(a_2) Hm(a_1) H0.
pub fn heegaard_matrix(c: &ConwayForm, lens: LensSpace, qp_prime: (i64, i64)) -> Result<IntMatrix> {
    check_delta(c, lens)?;
    let (_, _, h0) = lift_matrices(0, 0, lens, qp_prime)?;
    let mut acc = h0;
    for (i, &ai) in c.a().iter().enumerate() {
        let (hl, hm, _) = lift_matrices(ai, ai, lens, qp_prime)?;
        acc = if i % 2 == 0 { &hm * &acc } else { &hl * &acc };
    }
    Ok(acc)
}

fn half(x: &BigInt) -> Result<BigInt> {
    let (h, r) = x.div_rem(&BigInt::from(2));
    if !r.is_zero() {
        return Err(Error::NoDoubleCover);
    }
    Ok(h)
}

/// Z_k1 ⊕ Z_k2 with k1 = gcd(p, z^(2)/2, z_(m+1)) and k2 = |p·z_(m+1)/k1|.
pub fn h1_double_cover(c: &ConwayForm, lens: LensSpace) -> Result<AbelianGroupInvariants> {
    check_delta(c, lens)?;
    let zd = z_sequence(c, lens);
    let z = zd.last().clone();
    let p = BigInt::from(lens.p());
    let h2 = half(&zd.z2_component)?;
    half(&(&z - &p))?;
    let k1 = gcd_big(&gcd_big(&p, &h2), &z);
    let k1_unreduced = gcd_big(&gcd_big(&p, &(&h2 * lens.q())), &z);
    assert_eq!(k1, k1_unreduced, "gcd(p,q)=1 makes the factor q irrelevant");
    if k1.is_zero() {
        return Ok(AbelianGroupInvariants::from_cyclic(&[BigInt::zero(), BigInt::zero()]));
    }
    let k2 = (&p * &z).abs() / &k1;
    Ok(AbelianGroupInvariants::from_cyclic(&[k1, k2]))
}

/// The same group from the symmetric 2×2 presentation matrix.
pub fn h1_double_cover_snf(c: &ConwayForm, lens: LensSpace) -> Result<AbelianGroupInvariants> {
    check_delta(c, lens)?;
    let zd = z_sequence(c, lens);
    let z = zd.last();
    let p = BigInt::from(lens.p());
    let plus = half(&(z + &p))?;
    let minus = -half(&(z - &p))?;
    let m = IntMatrix::new(2, 2, vec![plus.clone(), minus.clone(), minus, plus])?;
    Ok(AbelianGroupInvariants::from_presentation(&m))
}

/// The same group read off the Heegaard matrix: images of [m_1], [m_2] in H_1 of the handlebody.
pub fn h1_double_cover_heegaard(c: &ConwayForm, lens: LensSpace, qp_prime: (i64, i64)) -> Result<AbelianGroupInvariants> {
    let a = heegaard_matrix(c, lens, qp_prime)?;
    let rel = a.select(&[1, 3], &[0, 2]);
    Ok(AbelianGroupInvariants::from_presentation(&rel))
}

/// |z^(1)_(m+1)| = |Δ(−1)| of the knot in S³.
pub fn s3_determinant(c: &ConwayForm) -> BigInt {
    z_recursion(c.a(), BigInt::zero(), BigInt::from(1)).pop().unwrap().abs()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triviality {
    Trivial,
    Nontrivial,
    Unknown,
}

impl std::fmt::Display for Triviality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Triviality::Trivial => "trivial",
            Triviality::Nontrivial => "nontrivial",
            Triviality::Unknown => "unknown",
        })
    }
}

/// Sufficient conditions for a knot in S³ to be trivial or nontrivial.
pub fn triviality_tests(c: &ConwayForm) -> Triviality {
    let a = c.a();
    if a.chunks(2).all(|pair| pair[0] == 0 || pair[1] == 0) {
        Triviality::Trivial
    } else if a.iter().all(|&x| x > 0) || a.iter().all(|&x| x < 0) {
        Triviality::Nontrivial
    } else {
        Triviality::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example() -> ConwayForm {
        ConwayForm::from_display(&[[3, 0, 1, 0], [-1, 0, 1, 0]], 0).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn example_values() {
        let zd = z_sequence(&example(), LensSpace::s3());
        assert_eq!(zd.z1_component, BigInt::from(-27));
        assert_eq!(*zd.last(), BigInt::from(-27));
        let g = h1_double_cover(&example(), LensSpace::s3()).unwrap();
        assert_eq!(g.to_string(), "Z_27");
        assert_eq!(h1_double_cover_snf(&example(), LensSpace::s3()).unwrap(), g);
        assert_eq!(h1_double_cover_heegaard(&example(), LensSpace::s3(), (1, 0)).unwrap(), g);
        assert_eq!(s3_determinant(&example()), BigInt::from(27));
    }

    #[test]
    fn zero_form() {
        let c = ConwayForm::new(vec![0; 4], vec![0; 4], 0).unwrap();
        let l = LensSpace::new(7, 3).unwrap();
        let zd = z_sequence(&c, l);
        assert_eq!(zd.z, big(&[3, 7, 3, 7, 3, 7]));
        assert_eq!((zd.z1_component.clone(), zd.z2_component.clone()), (BigInt::from(1), BigInt::from(0)));
        assert!(h1_double_cover(&c, LensSpace::s3()).unwrap().is_trivial());
        assert_eq!(s3_determinant(&c), BigInt::from(1));
        assert_eq!(heegaard_matrix(&c, LensSpace::s3(), (1, 0)).unwrap(), lift_matrices(0, 0, LensSpace::s3(), (1, 0)).unwrap().2);
    }

    #[test]
    fn lift_matrix_properties() {
        let l = LensSpace::new(5, 2).unwrap();
        let qp = completion(l);
        assert_eq!(qp, (1, 3));
        let (hl0, _, _) = lift_matrices(0, 0, l, qp).unwrap();
        assert_eq!(hl0, IntMatrix::identity(4));
        let (hl, hm, _) = lift_matrices(3, -2, l, qp).unwrap();
        let (hli, hmi, _) = lift_matrices(-3, 2, l, qp).unwrap();
        assert_eq!(&hl * &hli, IntMatrix::identity(4));
        assert_eq!(&hm * &hmi, IntMatrix::identity(4));
        assert_eq!(hl.column(0), big(&[1, 3, 0, -3]));
        assert!(lift_matrices(1, 1, l, (0, 0)).is_err());
        assert_eq!(completion(LensSpace::s3()), (1, 0));
        assert_eq!(completion(LensSpace::new(0, 1).unwrap()), (0, 1));
    }

    #[test]
    fn heegaard_first_column() {
        let c = example();
        let a = heegaard_matrix(&c, LensSpace::s3(), (1, 0)).unwrap();
        let z = z_sequence(&c, LensSpace::s3()).z;
        let (zm, zm1) = (&z[4], &z[5]);
        let two = BigInt::from(2);
        let expect = vec![
            zm / &two,
            (zm1 + BigInt::from(1)) / &two,
            -(zm / &two),
            -((zm1 - BigInt::from(1)) / &two),
        ];
        assert_eq!(a.column(0), expect);
    }

    #[test]
    fn delta_one_handling() {
        let c = example().with_delta(1);
        assert_eq!(h1_double_cover(&c, LensSpace::s3()).unwrap().to_string(), "Z_27");
        assert_eq!(h1_double_cover(&c, LensSpace::new(4, 1).unwrap()), Err(Error::NoDoubleCover));
        assert_eq!(h1_double_cover(&c, LensSpace::new(3, 1).unwrap()), Err(Error::NeedDeltaZero { p: 3, q: 1 }));
        assert!(heegaard_matrix(&c, LensSpace::new(4, 1).unwrap(), (0, 1)).is_err());
    }

    #[test]
    fn triviality() {
        let zero_even = ConwayForm::new(vec![5, 0, -2, 0], vec![0; 4], 0).unwrap();
        assert_eq!(triviality_tests(&zero_even), Triviality::Trivial);
        let pos = ConwayForm::from_display(&[[3, 0, 1, 0], [2, 0, 1, 0]], 0).unwrap();
        assert_eq!(triviality_tests(&pos), Triviality::Nontrivial);
        assert_eq!(triviality_tests(&example()), Triviality::Unknown);
    }

    fn arb_form() -> impl Strategy<Value = ConwayForm> {
        (1usize..=5)
            .prop_flat_map(|h| prop::collection::vec(-5i64..=5, 2 * h))
            .prop_map(|a| {
                let m = a.len();
                ConwayForm::new(a, vec![0; m], 0).unwrap()
            })
    }

    fn arb_lens() -> impl Strategy<Value = LensSpace> {
        (0i64..=20, -20i64..=20).prop_filter_map("coprime", |(p, q)| LensSpace::new(p, q).ok())
    }

    proptest! {
        #[test]
        fn closed_form_matches_recursion(c in arb_form(), l in arb_lens()) {
            let zd = z_sequence(&c, l);
            let rec = |z0: i64, z1: i64| z_recursion(c.a(), BigInt::from(z0), BigInt::from(z1)).pop().unwrap();
            prop_assert_eq!(&zd.z1_component, &rec(0, 1));
            prop_assert_eq!(&zd.z2_component, &rec(1, 0));
            prop_assert_eq!(zd.last(), &(&zd.z1_component * l.p() + &zd.z2_component * l.q()));
        }

        #[test]
        fn homology_routes_agree(c in arb_form(), l in arb_lens(), shift in 0i64..3) {
            let f = h1_double_cover(&c, l).unwrap();
            prop_assert_eq!(&f, &h1_double_cover_snf(&c, l).unwrap());
            let (qp, pp) = completion(l);
            prop_assert_eq!(&f, &h1_double_cover_heegaard(&c, l, (qp, pp)).unwrap());
            // another completion: (q' + k q, p' + k p)
            let other = (qp + shift * l.q(), pp + shift * l.p());
            prop_assert_eq!(&f, &h1_double_cover_heegaard(&c, l, other).unwrap());
        }
    }
}
