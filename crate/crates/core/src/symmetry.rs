//! Symmetry machinery for Appell sequences: the predicate
//! P_n(a-x) = (-1)^n P_n(x), its series-level characterizations, the
//! V_n(a) bases of scaled Bernoulli/Euler polynomials, and the linear
//! reconstruction formulas attached to a parity decomposition of f.

use serde::{Deserialize, Serialize};

use crate::classical::{bernoulli_polynomial, euler_polynomial};
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::oracle::Family;
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// Parity class of the remainder F in a decomposition of f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// First place a comparison failed: index (polynomial degree or series
/// power) plus the two disagreeing values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstFailure {
    pub n: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of `check_symmetry`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub symmetric: bool,
    pub first_failure: Option<FirstFailure>,
}

/// Verdicts of the series-level characterizations for one (f, g, a).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub parameter_a: Rational,
    pub order_checked: usize,
    pub symmetric: bool,
    pub g_odd: bool,
    pub h_even: bool,
    pub psi_odd: bool,
    pub kernel_identity_holds: bool,
    pub first_failure: Option<FirstFailure>,
}

/// Does p(a - x) = (-1)^n p(x) hold exactly?
pub fn satisfies_symmetry(p: &Polynomial, n: usize, a: &Rational) -> bool {
    single_failure(p, n, a).is_none()
}

fn single_failure(p: &Polynomial, n: usize, a: &Rational) -> Option<FirstFailure> {
    let reflected = p.compose_affine(&Rational::new(-1, 1), a);
    let signed = if n.is_multiple_of(2) { p.clone() } else { -p };
    if reflected == signed {
        return None;
    }
    let len = reflected.coeffs().len().max(signed.coeffs().len());
    (0..len).find_map(|k| {
        let lhs = reflected.coeff(k);
        let rhs = signed.coeff(k);
        (lhs != rhs).then_some(FirstFailure { n, lhs, rhs })
    })
}

/// Checks the symmetry relation for each entry of `polys` (entry n is
/// compared with sign (-1)^n) and reports the first failing index.
pub fn check_symmetry(polys: &[Polynomial], a: &Rational) -> SymmetryCheck {
    for (n, p) in polys.iter().enumerate() {
        if let Some(failure) = single_failure(p, n, a) {
            return SymmetryCheck {
                symmetric: false,
                first_failure: Some(failure),
            };
        }
    }
    SymmetryCheck {
        symmetric: true,
        first_failure: None,
    }
}

/// Appell polynomials of a general pair (f, g) with g(0) = 0, from
/// f(t) e^{x g(t)} = sum P_n(x) t^n / n!. Used only for the independent
/// `symmetric` verdict in `characterize`; the expansion modules fix g = t.
fn appell_polys_general(f: &TruncatedSeries, g: &TruncatedSeries, n_max: usize) -> Vec<Polynomial> {
    let order = f.order().min(g.order());
    let mut products = Vec::with_capacity(n_max + 1);
    let mut fg = f.truncate(order);
    products.push(fg.clone());
    for _ in 1..=n_max {
        fg = fg.mul(&g.truncate(order));
        products.push(fg.clone());
    }
    (0..=n_max)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|j| products[j].coeff(n) * &factorial(n) / factorial(j))
                .collect();
            Polynomial::from_coeffs(coeffs)
        })
        .collect()
}

/// Fills a [`SymmetryReport`] by coefficient-level parity checks up to the
/// common order of f and g: h = f e^{(a/2) g} must be even, g odd,
/// psi = (e^{a g} - 1) f odd, and (the g = t criterion) f(t) e^{a t} = f(-t).
pub fn characterize(
    f: &TruncatedSeries,
    g: &TruncatedSeries,
    a: &Rational,
) -> Result<SymmetryReport> {
    if !g.coeff(0).is_zero() {
        return Err(Error::GNonzeroAtOrigin {
            constant: g.coeff(0).clone(),
        });
    }
    let order = f.order().min(g.order());
    let f = f.truncate(order);
    let g = g.truncate(order);

    let half_a = a / &Rational::from_int(2);
    let h = f.mul(&g.scalar_mul(&half_a).exp().expect("g(0) = 0"));
    let psi = {
        let e_ag = g.scalar_mul(a).exp().expect("g(0) = 0");
        (&e_ag - &TruncatedSeries::one(order)).mul(&f)
    };
    let kernel_lhs = f.mul(&TruncatedSeries::exp_linear(a, order));
    let kernel_identity_holds = kernel_lhs == f.negate_argument();

    let polys = appell_polys_general(&f, &g, order);
    let check = check_symmetry(&polys, a);

    Ok(SymmetryReport {
        parameter_a: a.clone(),
        order_checked: order,
        symmetric: check.symmetric,
        g_odd: g.is_odd(),
        h_even: h.is_even(),
        psi_odd: psi.is_odd(),
        kernel_identity_holds,
        first_failure: check.first_failure,
    })
}

/// Basis {B_{n-2k}(x/a)} (or Euler) of V_n(a), for 0 <= k <= floor(n/2).
pub fn vn_basis(family: Family, n: usize, a: &Rational) -> Result<Vec<Polynomial>> {
    if a.is_zero() {
        return Err(Error::ZeroParameter { op: "vn_basis" });
    }
    let inv_a = a.recip();
    Ok((0..=n / 2)
        .map(|k| {
            let p = match family {
                Family::Bernoulli => bernoulli_polynomial(n - 2 * k),
                Family::Euler => euler_polynomial(n - 2 * k),
            };
            p.compose_affine(&inv_a, &Rational::zero())
        })
        .collect())
}

/// Exact coordinates of p in the chosen V_n(a) basis, if p lies in the
/// span. Solved by rational Gauss-Jordan elimination.
pub fn vn_membership(
    p: &Polynomial,
    n: usize,
    a: &Rational,
    family: Family,
) -> Result<Option<Vec<Rational>>> {
    if a.is_zero() {
        return Err(Error::ZeroParameter {
            op: "vn_membership",
        });
    }
    if p.degree() > n as isize {
        return Ok(None);
    }
    let basis = vn_basis(family, n, a)?;
    let cols = basis.len();
    // rows: coefficient of x^row; augmented column holds p
    let mut m: Vec<Vec<Rational>> = (0..=n)
        .map(|row| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b.coeff(row)).collect();
            r.push(p.coeff(row));
            r
        })
        .collect();

    let mut pivot_rows: Vec<Option<usize>> = vec![None; cols];
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot) = (next_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, pivot);
        let inv = m[next_row][col].recip();
        for v in m[next_row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[next_row][col..=cols].to_vec();
        for (r, row) in m.iter_mut().enumerate() {
            if r != next_row && !row[col].is_zero() {
                let factor = row[col].clone();
                for (pv, slot) in pivot_row.iter().zip(row[col..=cols].iter_mut()) {
                    let delta = &factor * pv;
                    *slot -= &delta;
                }
            }
        }
        pivot_rows[col] = Some(next_row);
        next_row += 1;
    }
    // inconsistent row: zero coefficients with nonzero augmented entry
    for row in &m {
        if row[..cols].iter().all(Rational::is_zero) && !row[cols].is_zero() {
            return Ok(None);
        }
    }
    let coords = pivot_rows
        .into_iter()
        .map(|r| {
            r.map(|row| m[row][cols].clone())
                .unwrap_or_else(Rational::zero)
        })
        .collect();
    Ok(Some(coords))
}

/// A choice of coefficients (a_k) plus the remainder
/// F = f - sum a_k t^k / k!, which has the declared parity exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryDecomposition {
    pub parameter_a: Rational,
    pub parity: Parity,
    /// The a_k in exponential convention; index k.
    pub a_coeffs: Vec<Rational>,
    pub remainder: TruncatedSeries,
}

impl SymmetryDecomposition {
    pub fn order(&self) -> usize {
        self.remainder.order()
    }
}

/// Canonical decomposition: a_k are the exponential coefficients of f in
/// the parity class opposite to `parity`, zero elsewhere; the remainder is
/// then the matching parity part of f.
pub fn decompose(
    f: &TruncatedSeries,
    a: &Rational,
    parity: Parity,
) -> Result<SymmetryDecomposition> {
    if a.is_zero() {
        return Err(Error::ZeroParameter { op: "decompose" });
    }
    let (even_part, odd_part) = f.parity_parts();
    let (kept, remainder) = match parity {
        Parity::Odd => (even_part, odd_part),
        Parity::Even => (odd_part, even_part),
    };
    Ok(SymmetryDecomposition {
        parameter_a: a.clone(),
        parity,
        a_coeffs: kept.exponential_coeffs(),
        remainder,
    })
}

/// Caller-supplied coefficients; the remainder must come out with the
/// declared parity or the decomposition is rejected.
pub fn decompose_with(
    f: &TruncatedSeries,
    a: &Rational,
    parity: Parity,
    a_coeffs: &[Rational],
) -> Result<SymmetryDecomposition> {
    if a.is_zero() {
        return Err(Error::ZeroParameter { op: "decompose" });
    }
    let remainder = f - &TruncatedSeries::from_exponential(a_coeffs, f.order());
    if let Some((index, value)) = remainder.first_parity_violation(parity == Parity::Even) {
        return Err(Error::RemainderParityViolation {
            parity,
            index,
            value,
        });
    }
    let mut coeffs = a_coeffs.to_vec();
    coeffs.resize(f.order() + 1, Rational::zero());
    Ok(SymmetryDecomposition {
        parameter_a: a.clone(),
        parity,
        a_coeffs: coeffs,
        remainder,
    })
}

/// P_n(x) = sum_{k even, k <= n} a_k C(n,k) a^{n-k} E_{n-k}(x/a),
/// for a decomposition with odd remainder.
pub fn reconstruct_euler_form(d: &SymmetryDecomposition, n: usize) -> Result<Polynomial> {
    if d.parity != Parity::Odd {
        return Err(Error::ParityMismatch {
            expected: Parity::Odd,
            found: d.parity,
        });
    }
    if d.a_coeffs.len() <= n {
        return Err(Error::OrderTooSmall {
            required: n,
            available: d.a_coeffs.len() - 1,
        });
    }
    let a = &d.parameter_a;
    let inv_a = a.recip();
    let mut sum = Polynomial::zero();
    for k in (0..=n).step_by(2) {
        if d.a_coeffs[k].is_zero() {
            continue;
        }
        let weight = &d.a_coeffs[k] * &binomial(n, k) * a.pow((n - k) as i64);
        let term = euler_polynomial(n - k).compose_affine(&inv_a, &Rational::zero());
        sum = &sum + &term.scale(&weight);
    }
    Ok(sum)
}

/// P_n(x) = -2 sum_{k odd, k <= n+1} (a_k / k) C(n,k-1) a^{n-k}
/// B_{n-k+1}(x/a), for a decomposition with even remainder. The k = n+1
/// boundary term carries B_0 and is required for exactness.
pub fn reconstruct_bernoulli_form(d: &SymmetryDecomposition, n: usize) -> Result<Polynomial> {
    if d.parity != Parity::Even {
        return Err(Error::ParityMismatch {
            expected: Parity::Even,
            found: d.parity,
        });
    }
    if d.a_coeffs.len() <= n + 1 {
        return Err(Error::OrderTooSmall {
            required: n + 1,
            available: d.a_coeffs.len() - 1,
        });
    }
    let a = &d.parameter_a;
    let inv_a = a.recip();
    let minus_two = Rational::from_int(-2);
    let mut sum = Polynomial::zero();
    for k in (1..=n + 1).step_by(2) {
        if d.a_coeffs[k].is_zero() {
            continue;
        }
        let weight = &minus_two * &d.a_coeffs[k] * binomial(n, k - 1) * a.pow(n as i64 - k as i64)
            / Rational::from_int(k as i64);
        let term = bernoulli_polynomial(n + 1 - k).compose_affine(&inv_a, &Rational::zero());
        sum = &sum + &term.scale(&weight);
    }
    Ok(sum)
}
