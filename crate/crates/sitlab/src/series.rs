//! Truncated formal power series with exact arbitrary-precision integer
//! coefficients.
//!
//! Everything downstream (tree enumeration, simple-permutation counts,
//! cumulative parameter series) is built on these; no floating point ever
//! enters this module. Coefficients reach `10^150` and beyond, so equality
//! tests against oracles are bit-exact.
//!
//! ```
//! use sitlab::series::PowerSeries;
//! let a = PowerSeries::from_i64(&[1, 1], 2);   // 1 + z  (order 2)
//! let b = PowerSeries::from_i64(&[1, -1], 2);  // 1 - z
//! assert_eq!(a.mul(&b), PowerSeries::from_i64(&[1, 0, -1], 2)); // 1 - z^2
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    /// Division request where the denominator cannot be inverted over the
    /// integers (zero constant term with no matching valuation, or inexact
    /// leading division).
    #[error("non-invertible series")]
    NonInvertible,
}

/// A formal power series truncated at `truncation_order`: index `n` of
/// `coeffs` holds the exact integer coefficient of `z^n`.
///
/// Invariant: `coeffs.len() == truncation_order + 1`. Mixed-order arithmetic
/// truncates the result to the minimum of the operand orders, so a
/// coefficient is never silently read beyond its validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// The series `z` (if the order admits it).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigInt::one();
        }
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        PowerSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, v: BigInt) {
        self.coeffs[n] = v;
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Quadratic convolution; sufficient at desk scale (orders up to a few
    /// hundred).
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        PowerSeries { coeffs }
    }

    /// Termwise derivative; the result is valid one order lower.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=self.order())
            .map(|n| &self.coeffs[n] * BigInt::from(n))
            .collect();
        PowerSeries { coeffs }
    }

    /// Multiplication by `z` (drops the top coefficient to respect the order).
    pub fn shift_up(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len()];
        for n in 1..self.coeffs.len() {
            coeffs[n] = self.coeffs[n - 1].clone();
        }
        PowerSeries { coeffs }
    }

    /// Exact quotient `self / other` over the integers.
    ///
    /// Works when `other` has constant term `±1`, or when both series share a
    /// valuation that can be cancelled and the long division stays exact
    /// (which covers every quotient the enumeration layer needs, e.g.
    /// `U/(1-U)` where `1-U` has constant term 1).
    pub fn quotient(&self, other: &Self) -> Result<Self, SeriesError> {
        let order = self.order().min(other.order());
        let bv = match other.valuation() {
            Some(v) if v <= order => v,
            _ => return Err(SeriesError::NonInvertible),
        };
        if bv > 0 {
            match self.valuation() {
                None => return Ok(Self::zero(order - bv)),
                Some(av) if av >= bv => {}
                Some(_) => return Err(SeriesError::NonInvertible),
            }
        }
        let lead = other.coeffs[bv].clone();
        let n_out = order - bv;
        let mut rem: Vec<BigInt> = self.coeffs[..=order].to_vec();
        let mut out = vec![BigInt::zero(); n_out + 1];
        for n in 0..=n_out {
            let num = rem[n + bv].clone();
            if num.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&num, &lead);
            if !r.is_zero() {
                return Err(SeriesError::NonInvertible);
            }
            for (j, b) in other.coeffs.iter().enumerate().skip(bv).take(order + 1 - bv) {
                if n + j <= order && !b.is_zero() {
                    rem[n + j] -= &q * b;
                }
            }
            out[n] = q;
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self^k`, truncated at this series' order.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Decimal strings for external dumps (values exceed 64 bits routinely).
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_identity_case() {
        // (1 + z)(1 - z) = 1 - z^2
        let a = PowerSeries::from_i64(&[1, 1], 3);
        let b = PowerSeries::from_i64(&[1, -1], 3);
        assert_eq!(a.mul(&b), PowerSeries::from_i64(&[1, 0, -1, 0], 3));
    }

    #[test]
    fn derivative_basic() {
        // d/dz (z + z^2) = 1 + 2z
        let a = PowerSeries::from_i64(&[0, 1, 1], 2);
        assert_eq!(a.derivative(), PowerSeries::from_i64(&[1, 2], 1));
    }

    #[test]
    fn quotient_long_division() {
        // (z + z^2)/(1 - z) = z + 2z^2 + 2z^3 + 2z^4  (hand long division)
        let a = PowerSeries::from_i64(&[0, 1, 1], 4);
        let b = PowerSeries::from_i64(&[1, -1], 4);
        assert_eq!(
            a.quotient(&b).unwrap(),
            PowerSeries::from_i64(&[0, 1, 2, 2, 2], 4)
        );
    }

    #[test]
    fn quotient_shared_valuation() {
        // (z^2 + z^3) / z = z + z^2
        let a = PowerSeries::from_i64(&[0, 0, 1, 1], 3);
        let b = PowerSeries::from_i64(&[0, 1], 3);
        assert_eq!(a.quotient(&b).unwrap(), PowerSeries::from_i64(&[0, 1, 1], 2));
    }

    #[test]
    fn quotient_rejects_noninvertible() {
        // 1 / z is not a power series
        let a = PowerSeries::one(3);
        let b = PowerSeries::z(3);
        assert_eq!(a.quotient(&b), Err(SeriesError::NonInvertible));
    }

    #[test]
    fn mixed_order_truncates_to_minimum() {
        let a = PowerSeries::from_i64(&[1, 1, 1, 1], 3);
        let b = PowerSeries::from_i64(&[1, 1], 1);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b).order(), 1);
    }
}
