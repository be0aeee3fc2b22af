//! Cantor pairing on arbitrary-precision naturals.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `π(a, b) = (a + b)(a + b + 1) / 2 + b`.
pub fn pair(a: &BigUint, b: &BigUint) -> BigUint {
    let s = a + b;
    let t = (&s * (&s + 1u32)) >> 1;
    t + b
}

pub fn pair_u64(a: u64, b: &BigUint) -> BigUint {
    pair(&BigUint::from(a), b)
}

/// Inverse of [`pair`]; total since the Cantor pairing is a bijection `ℕ² → ℕ`.
pub fn unpair(z: &BigUint) -> (BigUint, BigUint) {
    if z.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    // w = ⌊(√(8z + 1) − 1) / 2⌋
    let disc: BigUint = (z << 3) + BigUint::one();
    let w: BigUint = (disc.sqrt() - BigUint::one()) >> 1;
    let t: BigUint = (&w * (&w + 1u32)) >> 1;
    let b = z - &t;
    let a = &w - &b;
    (a, b)
}
