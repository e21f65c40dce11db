//! Truncated formal power series with exact rational coefficients.
//!
//! Dense coefficient vectors; orders stay small (double digits) at desk
//! scale, so no FFT multiplication and no sparse storage.

use num_traits::{One, Zero};

use crate::exact::{Integer, Rational};

/// A power series truncated at `order`: coefficients of `x^0 .. x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    /// Series from an explicit coefficient vector (index = exponent).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        Self { coeffs }
    }

    /// The zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Truncation order (largest retained exponent).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^i`; zero above the truncation order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `ln(1 + x)` truncated at `order`: coefficient of `x^m` is
    /// `(-1)^(m+1)/m` for `m >= 1`, constant term 0.
    pub fn log1p(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (m, c) in coeffs.iter_mut().enumerate().skip(1) {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            *c = Rational::new(Integer::from(sign), Integer::from(m));
        }
        Self { coeffs }
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// `k`-fold product; `k = 0` yields the series 1 at this order.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}
