//! Canonical exact values: Bernoulli numbers, Euler values at zero, the
//! classical polynomials built from them, and signed Stirling numbers of
//! the first kind.
//!
//! The number tables are memoized behind `RwLock`s: reads are linearizable
//! and extending a table never disturbs concurrent readers.

use std::sync::{LazyLock, RwLock};

use num::bigint::BigInt;
use num::One;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::oracle::{bernoulli_f_series, euler_f_series};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| RwLock::new(Vec::new()));
static EULER_AT_ZERO: LazyLock<RwLock<Vec<Rational>>> = LazyLock::new(|| RwLock::new(Vec::new()));
static STIRLING: LazyLock<RwLock<Vec<Vec<BigInt>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigInt::one()]]));

fn memoized_value(
    table: &RwLock<Vec<Rational>>,
    n: usize,
    compute: impl Fn(usize) -> Vec<Rational>,
) -> Rational {
    if let Some(v) = table.read().expect("table lock").get(n) {
        return v.clone();
    }
    let mut guard = table.write().expect("table lock");
    if guard.len() <= n {
        // recompute from scratch at a generous order; the series routines are
        // deterministic, so the refreshed prefix is bit-identical
        let target = (n + 1).max(guard.len() * 2).max(32);
        *guard = compute(target - 1);
    }
    guard[n].clone()
}

/// B_n, the n-th Bernoulli number (B_1 = -1/2).
pub fn bernoulli_number(n: usize) -> Rational {
    memoized_value(&BERNOULLI, n, |order| {
        bernoulli_f_series(1, false, order).exponential_coeffs()
    })
}

/// E_k(0), the Euler polynomial value at zero.
pub fn euler_at_zero(k: usize) -> Rational {
    memoized_value(&EULER_AT_ZERO, k, |order| {
        euler_f_series(1, false, order).exponential_coeffs()
    })
}

/// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    appell_poly_from_values(n, bernoulli_number)
}

/// E_n(x) = sum_k C(n,k) E_k(0) x^{n-k}.
pub fn euler_polynomial(n: usize) -> Polynomial {
    appell_poly_from_values(n, euler_at_zero)
}

fn appell_poly_from_values(n: usize, value: impl Fn(usize) -> Rational) -> Polynomial {
    let coeffs = (0..=n)
        .map(|j| &binomial(n, n - j) * &value(n - j))
        .collect();
    Polynomial::from_coeffs(coeffs)
}

/// Signed Stirling number of the first kind, s(n+1,k) = s(n,k-1) - n s(n,k).
pub fn stirling_first(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::StirlingRange { n, k });
    }
    {
        let rows = STIRLING.read().expect("table lock");
        if let Some(row) = rows.get(n) {
            return Ok(row[k].clone());
        }
    }
    let mut rows = STIRLING.write().expect("table lock");
    while rows.len() <= n {
        let prev = rows.last().expect("seeded with row 0");
        let m = rows.len() - 1; // prev is row m
        let mut row = vec![BigInt::ZERO; m + 2];
        for (j, slot) in row.iter_mut().enumerate() {
            let from_left = if j >= 1 { prev.get(j - 1) } else { None };
            let mut v = from_left.cloned().unwrap_or(BigInt::ZERO);
            if let Some(s) = prev.get(j) {
                v -= BigInt::from(m) * s;
            }
            *slot = v;
        }
        rows.push(row);
    }
    Ok(rows[n][k].clone())
}

/// Triangular snapshot of s(n,k) for 0 <= k <= n <= max_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn up_to(max_n: usize) -> Self {
        // force the memo out to max_n, then snapshot
        let _ = stirling_first(max_n, 0);
        let rows = STIRLING.read().expect("table lock");
        StirlingTable {
            rows: rows[..=max_n].to_vec(),
        }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn value(&self, n: usize, k: usize) -> Result<&BigInt> {
        if k > n || n > self.max_n() {
            return Err(Error::StirlingRange { n, k });
        }
        Ok(&self.rows[n][k])
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }
}
