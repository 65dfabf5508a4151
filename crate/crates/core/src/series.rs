//! Truncated power series with exact rational coefficients.
//!
//! Every generating function in this crate is an exponential generating
//! function `Σ c_n t^n` truncated at an explicit order `N`; the Euler
//! characteristic attached to degree `n` is `n! · c_n`. Arithmetic between
//! series of different orders is rejected rather than silently re-truncated.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::factorial;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("coefficient index {index} exceeds truncation order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("{index}! * c_{index} = {value} is not an integer")]
    NotIntegral { index: usize, value: Rational },
    #[error("expected {expected} coefficients for order {order}, got {got}")]
    BadLength { order: usize, expected: usize, got: usize },
}

/// `c_0 + c_1 t + … + c_N t^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EgfSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawSeries {
    order: usize,
    coeffs: Vec<Rational>,
}

impl<'de> Deserialize<'de> for EgfSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawSeries::deserialize(deserializer)?;
        EgfSeries::from_coeffs(raw.order, raw.coeffs).map_err(serde::de::Error::custom)
    }
}

impl EgfSeries {
    pub fn from_coeffs(order: usize, coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.len() != order + 1 {
            return Err(SeriesError::BadLength {
                order,
                expected: order + 1,
                got: coeffs.len(),
            });
        }
        Ok(EgfSeries { order, coeffs })
    }

    /// Series from integer coefficients; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty slice.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        EgfSeries {
            order: coeffs.len() - 1,
            coeffs: coeffs.iter().map(|&c| Rational::from(c)).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries { order, coeffs: vec![Rational::zero(); order + 1] }
    }

    /// The multiplicative identity at the given order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(EgfSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(EgfSeries { order: self.order, coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order;
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(EgfSeries { order: n, coeffs })
    }

    /// Truncated expansion of `(1 + c t)^e` for any integer exponent.
    ///
    /// Coefficients are `binom(e, n) c^n` with the generalized binomial
    /// built incrementally: `binom(e, n) = binom(e, n-1) (e - n + 1) / n`.
    pub fn binomial(c: i64, e: i64, order: usize) -> Self {
        let c = Rational::from(c);
        let e = BigInt::from(e);
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut binom = Rational::one();
        let mut c_pow = Rational::one();
        coeffs.push(Rational::one());
        for n in 1..=order {
            let n_big = BigInt::from(n);
            binom = binom * Rational::new(&e - &n_big + 1, n_big);
            c_pow = &c_pow * &c;
            coeffs.push(&binom * &c_pow);
        }
        EgfSeries { order, coeffs }
    }

    /// Multiplicative inverse via `b_n = -(1/a_0) Σ_{k≥1} a_k b_{n-k}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv_a0 = self.coeffs[0].recip().ok_or(SeriesError::NotInvertible)?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv_a0.clone());
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc = acc + &self.coeffs[k] * &out[n - k];
            }
            out.push(-(&acc * &inv_a0));
        }
        Ok(EgfSeries { order: self.order, coeffs: out })
    }

    /// Substitution `t ↦ λ t`.
    pub fn scale_t(&self, lambda: i64) -> Self {
        let lambda = Rational::from(lambda);
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * &pow;
                pow = &pow * &lambda;
                v
            })
            .collect();
        EgfSeries { order: self.order, coeffs }
    }

    /// Integer power by repeated multiplication; negative exponents go through [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = EgfSeries::one(self.order);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// `n! · c_n`, the Euler characteristic stored at degree `n`.
    pub fn coefficient_chi(&self, n: usize) -> Result<BigInt, SeriesError> {
        let c = self
            .coeffs
            .get(n)
            .ok_or(SeriesError::OutOfRange { index: n, order: self.order })?;
        let value = c * &Rational::from_integer(factorial(n));
        value.to_integer().ok_or(SeriesError::NotIntegral { index: n, value })
    }

    /// All `n! · c_n` for `n = 0..=order`.
    pub fn chi_values(&self) -> Result<Vec<BigInt>, SeriesError> {
        (0..=self.order).map(|n| self.coefficient_chi(n)).collect()
    }
}

impl fmt::Display for EgfSeries {
    /// `1 + 1·t + 3·t^2 - 5·t^3 + O(t^4)`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}·t")?,
                _ => write!(f, "{mag}·t^{n}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}
