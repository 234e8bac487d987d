//! Exact integer algebra: Laurent polynomials, integer matrices, Smith normal form.

mod abelian;
mod laurent;
mod matrix;

pub use abelian::AbelianGroupInvariants;
pub use laurent::{evaluate, laurent_gcd, LaurentPoly};
pub use matrix::{smith_normal_form, IntMatrix};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// gcd with gcd(0,n)=|n|.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() {
        return b.abs();
    }
    a.gcd(b)
}
