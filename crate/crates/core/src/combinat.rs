//! Factorials and binomial coefficients over arbitrary-precision integers.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::rational::Rational;

pub fn factorial_big(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

pub fn factorial(n: usize) -> Rational {
    Rational::from_int(factorial_big(n))
}

/// C(n, k), with the convention C(n, k) = 0 for k > n.
pub fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> Rational {
    Rational::from_int(binomial_big(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_big(0, 0), BigInt::from(1));
        assert_eq!(binomial_big(5, 2), BigInt::from(10));
        assert_eq!(binomial_big(3, 7), BigInt::from(0));
        assert_eq!(binomial_big(30, 15), BigInt::from(155117520u64));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial_big(0), BigInt::from(1));
        assert_eq!(factorial_big(6), BigInt::from(720));
    }
}
