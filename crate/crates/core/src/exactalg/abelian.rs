use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{smith_normal_form, IntMatrix};

/// Finitely generated abelian group Z^free_rank ⊕ Z_d1 ⊕ … ⊕ Z_dk with d_i ≥ 2 and d_i | d_(i+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// Group presented by `m`: generators are columns, relations are rows.
    pub fn from_presentation(m: &IntMatrix) -> Self {
        let diag = smith_normal_form(m);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        Self {
            free_rank: m.cols() - nonzero,
            torsion: diag.into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect(),
        }
    }

    /// Direct sum of cyclic groups Z_k (k = 0 gives Z, sign ignored).
    pub fn from_cyclic(orders: &[BigInt]) -> Self {
        if orders.is_empty() {
            return Self::trivial();
        }
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, k) in orders.iter().enumerate() {
            m.set(i, i, k.clone());
        }
        Self::from_presentation(&m)
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let parts: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|d| format!("Z_{d}")))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_sums_normalize() {
        let g = AbelianGroupInvariants::from_cyclic(&big(&[2, 3, 0, 1]));
        assert_eq!(g.free_rank, 1);
        assert_eq!(g.torsion, big(&[6]));
        assert_eq!(g.to_string(), "Z + Z_6");
        assert_eq!(AbelianGroupInvariants::from_cyclic(&big(&[1, -1])).to_string(), "0");
        assert_eq!(AbelianGroupInvariants::from_cyclic(&big(&[-27])).to_string(), "Z_27");
    }

    #[test]
    fn presentation_rank() {
        let g = AbelianGroupInvariants::from_presentation(&IntMatrix::from_rows(&[[2, 1]]));
        assert_eq!(g, AbelianGroupInvariants { free_rank: 1, torsion: vec![] });
    }
}
