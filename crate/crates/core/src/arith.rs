//! Small exact-arithmetic helpers shared by the counting code.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient with a signed top argument, zero outside `0 <= k <= n`.
pub fn binomial_i(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        BigUint::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Number of m-Catalan paths of size n, `C((m+1)n, n) / (mn + 1)`.
pub fn fuss_catalan(n: usize, m: usize) -> BigUint {
    binomial((m + 1) * n, n) / (m * n + 1)
}

/// Divides exactly, panicking with `what` in the message if a remainder is left.
pub fn exact_div(num: BigUint, den: &BigUint, what: &str) -> BigUint {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: {num} is not divisible by {den}");
    q
}

pub fn exact_div_signed(num: BigInt, den: &BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: remainder {r} dividing by {den}");
    q
}

pub fn to_biguint(x: BigInt, what: &str) -> BigUint {
    x.to_biguint()
        .unwrap_or_else(|| panic!("{what}: negative value"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(2, 3), BigUint::zero());
        let cats: Vec<u32> = (0..8).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(cats, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(fuss_catalan(3, 2), BigUint::from(12u32));
    }
}
