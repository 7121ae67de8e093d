//! Ground-truth Appell expansions computed directly from generating
//! functions with g(t) = t.
//!
//! Every closed-form identity in the other modules is checked against the
//! polynomials produced here, so this module deliberately contains no
//! closed forms itself: everything is series arithmetic.

use serde::{Deserialize, Serialize};

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

/// Which of the two classical families a caller wants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bernoulli,
    Euler,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        }
    }
}

/// The polynomials P_0..P_N of the Appell sequence generated by
/// f(t) e^{xt} = sum P_n(x) t^n / n!.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppellExpansion {
    f: TruncatedSeries,
    polynomials: Vec<Polynomial>,
}

impl AppellExpansion {
    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.polynomials.len() - 1
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polynomials
    }

    pub fn polynomial(&self, n: usize) -> &Polynomial {
        &self.polynomials[n]
    }
}

impl Serialize for AppellExpansion {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("AppellExpansion", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("f_coeffs", &self.f.coeffs())?;
        let polys: Vec<&[Rational]> = self.polynomials.iter().map(|p| p.coeffs()).collect();
        st.serialize_field("polynomials", &polys)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for AppellExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            #[allow(dead_code)]
            order: usize,
            f_coeffs: Vec<Rational>,
            polynomials: Vec<Vec<Rational>>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Ok(AppellExpansion {
            f: TruncatedSeries::from_coeffs(repr.f_coeffs),
            polynomials: repr
                .polynomials
                .into_iter()
                .map(Polynomial::from_coeffs)
                .collect(),
        })
    }
}

/// Expands P_n(x) = sum_{k<=n} C(n,k) a_k x^{n-k} with a_k = k! [t^k] f,
/// for n = 0..=n_max. Requires f to carry at least n_max coefficients.
pub fn appell_from_f(f: &TruncatedSeries, n_max: usize) -> Result<AppellExpansion> {
    if f.order() < n_max {
        return Err(Error::OrderTooSmall {
            required: n_max,
            available: f.order(),
        });
    }
    let a: Vec<Rational> = (0..=n_max).map(|k| f.exponential_coeff(k)).collect();
    let polynomials = (0..=n_max)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|j| {
                    // coefficient of x^j comes from k = n - j
                    &binomial(n, n - j) * &a[n - j]
                })
                .collect();
            Polynomial::from_coeffs(coeffs)
        })
        .collect();
    Ok(AppellExpansion {
        f: f.truncate(n_max),
        polynomials,
    })
}

/// (t/(e^t - 1))^r, or with `scaled` the same with t replaced by t/r.
pub fn bernoulli_f_series(r: u32, scaled: bool, order: usize) -> TruncatedSeries {
    // (e^t - 1)/t = sum t^k/(k+1)!
    let base = TruncatedSeries::from_fn(order, |k| factorial(k + 1).recip())
        .reciprocal_named("t/(e^t - 1)")
        .expect("unit constant term");
    finish_kernel(base, r, scaled)
}

/// (2/(e^t + 1))^r, or with `scaled` the same with t replaced by t/r.
pub fn euler_f_series(r: u32, scaled: bool, order: usize) -> TruncatedSeries {
    // (e^t + 1)/2 = 1 + sum_{k>=1} t^k/(2 k!)
    let half = Rational::new(1, 2);
    let base = TruncatedSeries::from_fn(order, |k| {
        if k == 0 {
            Rational::one()
        } else {
            &half / &factorial(k)
        }
    })
    .reciprocal_named("2/(e^t + 1)")
    .expect("unit constant term");
    finish_kernel(base, r, scaled)
}

fn finish_kernel(base: TruncatedSeries, r: u32, scaled: bool) -> TruncatedSeries {
    let powered = base.pow(r);
    if scaled && r > 1 {
        powered.scale_argument(&Rational::new(1, i64::from(r)))
    } else {
        powered
    }
}

/// Ground-truth order-r polynomials from the unscaled generating kernel.
pub fn higher_oracle_polys(family: Family, r: u32, n_max: usize) -> AppellExpansion {
    let f = match family {
        Family::Bernoulli => bernoulli_f_series(r, false, n_max),
        Family::Euler => euler_f_series(r, false, n_max),
    };
    appell_from_f(&f, n_max).expect("series built at the requested order")
}

/// Renormalizes P_n into Q_n = P_n * n! / (phi(0) ... phi(n)).
pub fn phi_normalize(polys: &[Polynomial], phi: &[Rational]) -> Result<Vec<Polynomial>> {
    if phi.len() < polys.len() {
        return Err(Error::PhiTooShort {
            required: polys.len(),
            available: phi.len(),
        });
    }
    if let Some(index) = phi[..polys.len()].iter().position(Rational::is_zero) {
        return Err(Error::ZeroPhi { index });
    }
    let mut phi_product = Rational::one();
    Ok(polys
        .iter()
        .enumerate()
        .map(|(n, p)| {
            phi_product *= &phi[n];
            p.scale(&(factorial(n) / phi_product.clone()))
        })
        .collect())
}
