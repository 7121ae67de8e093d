//! Truncated formal power series: order-N jets with exact coefficients.
//!
//! A series of order N stores exactly N+1 coefficients c_0..c_N representing
//! sum c_k t^k + O(t^{N+1}); zeros are meaningful and never trimmed. Binary
//! operations truncate to the smaller order, so a result never contains
//! coefficients that were not determined by both inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 + O(t^{order+1}).
    pub fn one(order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The series `c` at t^1 (the zero series when order is 0).
    pub fn linear(c: Rational, order: usize) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = c;
        }
        s
    }

    /// Builds a series from raw t^k coefficients; the order is `len - 1`.
    /// Panics on an empty list (order must be >= 0).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has order >= 0");
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Builds the series sum a_k t^k / k! from exponential coefficients,
    /// padding with zeros up to `order`.
    pub fn from_exponential(a: &[Rational], order: usize) -> Self {
        TruncatedSeries::from_fn(order, |k| {
            a.get(k)
                .map(|ak| ak / &factorial(k))
                .unwrap_or_else(Rational::zero)
        })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of t^k; panics beyond the order (an undetermined jet
    /// coefficient is a caller bug, not a zero).
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    /// Exponential coefficient a_k = k! * c_k.
    pub fn exponential_coeff(&self, k: usize) -> Rational {
        &self.coeffs[k] * &factorial(k)
    }

    pub fn exponential_coeffs(&self) -> Vec<Rational> {
        (0..=self.order())
            .map(|k| self.exponential_coeff(k))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Restricts to a smaller (or equal) order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// s(-t): alternates coefficient signs.
    pub fn negate_argument(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
                .collect(),
        }
    }

    /// s(c*t): scales the k-th coefficient by c^k.
    pub fn scale_argument(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    if k > 0 {
                        pow *= c;
                    }
                    a * &pow
                })
                .collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse: r with s*r = 1 + O(t^{N+1}).
    /// `context` names the series in the error when c_0 = 0.
    pub fn reciprocal_named(&self, context: &str) -> Result<TruncatedSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnitSeries {
                context: context.to_string(),
            });
        }
        let inv0 = self.coeffs[0].recip();
        let mut r = vec![Rational::zero(); self.coeffs.len()];
        r[0] = inv0.clone();
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &r[n - k]);
            }
            r[n] = -(acc * &inv0);
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    pub fn reciprocal(&self) -> Result<TruncatedSeries> {
        self.reciprocal_named("series")
    }

    /// exp(s) for s with zero constant term, via e' = s' e:
    /// n*e_n = sum_{k=1}^{n} k * s_k * e_{n-k}.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstant {
                constant: self.coeffs[0].clone(),
            });
        }
        let mut e = vec![Rational::zero(); self.coeffs.len()];
        e[0] = Rational::one();
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &(Rational::from_int(k as i64) * &self.coeffs[k] * &e[n - k]);
            }
            e[n] = acc / Rational::from_int(n as i64);
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// e^{a t} to the given order.
    pub fn exp_linear(a: &Rational, order: usize) -> TruncatedSeries {
        let mut pow = Rational::one();
        TruncatedSeries::from_fn(order, |k| {
            if k > 0 {
                pow *= a;
            }
            &pow / &factorial(k)
        })
    }

    /// r-fold product by binary powering.
    pub fn pow(&self, r: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        let mut sq = self.clone();
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// Splits into (even part, odd part); their sum is the series.
    pub fn parity_parts(&self) -> (TruncatedSeries, TruncatedSeries) {
        let mut even = self.clone();
        let mut odd = self.clone();
        for (k, (e, o)) in even
            .coeffs
            .iter_mut()
            .zip(odd.coeffs.iter_mut())
            .enumerate()
        {
            if k % 2 == 0 {
                *o = Rational::zero();
            } else {
                *e = Rational::zero();
            }
        }
        (even, odd)
    }

    /// First index whose coefficient violates the parity class
    /// (odd-index coefficients for an even series, even-index for odd).
    pub fn first_parity_violation(&self, even: bool) -> Option<(usize, Rational)> {
        self.coeffs.iter().enumerate().find_map(|(k, c)| {
            let offending = if even { k % 2 == 1 } else { k % 2 == 0 };
            (offending && !c.is_zero()).then(|| (k, c.clone()))
        })
    }

    pub fn is_even(&self) -> bool {
        self.first_parity_violation(true).is_none()
    }

    pub fn is_odd(&self) -> bool {
        self.first_parity_violation(false).is_none()
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scalar_mul(&Rational::new(-1, 1))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O(t^{}):", self.order() + 1)?;
        for c in &self.coeffs {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// (e^t - 1)/t = sum t^k/(k+1)!; its reciprocal generates the Bernoulli
    /// numbers in exponential coefficients.
    fn expm1_over_t(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| factorial(k + 1).recip())
    }

    #[test]
    fn mul_identity_and_geometric() {
        let s = TruncatedSeries::from_fn(4, |k| rat(k as i64 + 1, 3));
        assert_eq!(s.mul(&TruncatedSeries::one(4)), s);
        let one_plus_t = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
        let one_minus_t = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(-1, 1), rat(0, 1)]);
        assert_eq!(
            one_plus_t.mul(&one_minus_t),
            TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(0, 1), rat(-1, 1)])
        );
    }

    #[test]
    fn mul_truncates_to_min_order() {
        let a = TruncatedSeries::one(5);
        let b = TruncatedSeries::one(2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn reciprocal_of_unit() {
        assert_eq!(
            TruncatedSeries::one(3).reciprocal().unwrap(),
            TruncatedSeries::one(3)
        );
        // 1/(1+t) = 1 - t + t^2 - t^3
        let s = TruncatedSeries::from_fn(3, |k| if k <= 1 { rat(1, 1) } else { rat(0, 1) });
        assert_eq!(
            s.reciprocal().unwrap(),
            TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(-1, 1), rat(1, 1), rat(-1, 1)])
        );
    }

    #[test]
    fn reciprocal_is_the_bernoulli_oracle() {
        let f = expm1_over_t(6).reciprocal().unwrap();
        let expected = [
            rat(1, 1),
            rat(-1, 2),
            rat(1, 6),
            rat(0, 1),
            rat(-1, 30),
            rat(0, 1),
            rat(1, 42),
        ];
        assert_eq!(f.exponential_coeffs(), expected);
        // and s * reciprocal(s) == 1
        assert_eq!(expm1_over_t(6).mul(&f), TruncatedSeries::one(6));
    }

    #[test]
    fn reciprocal_requires_unit() {
        let t = TruncatedSeries::linear(Rational::one(), 3);
        let err = t.reciprocal_named("t").unwrap_err();
        assert!(err.to_string().contains('t'));
    }

    #[test]
    fn exp_basics() {
        assert_eq!(
            TruncatedSeries::zero(3).exp().unwrap(),
            TruncatedSeries::one(3)
        );
        let t = TruncatedSeries::linear(Rational::one(), 3);
        assert_eq!(
            t.exp().unwrap(),
            TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)])
        );
        // group law: exp(t) * exp(-t) = 1
        let e = t.exp().unwrap();
        let e_neg = t.negate_argument().exp().unwrap();
        assert_eq!(e.mul(&e_neg), TruncatedSeries::one(3));
        assert!(TruncatedSeries::one(3).exp().is_err());
    }

    #[test]
    fn pow_small_cases() {
        let s = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(s.pow(1), s);
        assert_eq!(
            s.pow(2),
            TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(2, 1), rat(1, 1)])
        );
    }

    #[test]
    fn squared_bernoulli_series_gives_order_two_numbers() {
        let f = expm1_over_t(4).reciprocal().unwrap().pow(2);
        let a = f.exponential_coeffs();
        assert_eq!(a[0], rat(1, 1));
        assert_eq!(a[1], rat(-1, 1));
        assert_eq!(a[2], rat(5, 6));
    }

    #[test]
    fn parity_split() {
        let s = TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(1, 1)]);
        let (even, odd) = s.parity_parts();
        assert_eq!(
            even,
            TruncatedSeries::from_coeffs(vec![rat(1, 1), rat(0, 1)])
        );
        assert_eq!(
            odd,
            TruncatedSeries::from_coeffs(vec![rat(0, 1), rat(1, 1)])
        );
        assert_eq!(&even + &odd, s);

        let t3 = TruncatedSeries::from_fn(5, |k| if k % 2 == 1 { rat(1, 1) } else { rat(0, 1) });
        assert!(t3.parity_parts().0.is_zero());

        // f = t/(e^t - 1): odd part is exactly -t/2
        let f = expm1_over_t(12).reciprocal().unwrap();
        let (_, odd_part) = f.parity_parts();
        assert_eq!(odd_part, TruncatedSeries::linear(rat(-1, 2), 12));
    }

    #[test]
    fn argument_scaling() {
        let f = expm1_over_t(5).reciprocal().unwrap();
        let g = f.scale_argument(&rat(1, 2));
        for k in 0..=5 {
            assert_eq!(g.coeff(k), &(f.coeff(k) * &rat(1, 2).pow(k as i64)));
        }
        assert_eq!(f.scale_argument(&rat(-1, 1)), f.negate_argument());
    }

    #[test]
    fn exponential_round_trip() {
        let a = [rat(1, 1), rat(-1, 2), rat(0, 1), rat(3, 7)];
        let s = TruncatedSeries::from_exponential(&a, 5);
        let back = s.exponential_coeffs();
        assert_eq!(&back[..4], &a);
        assert!(back[4].is_zero() && back[5].is_zero());
    }
}
