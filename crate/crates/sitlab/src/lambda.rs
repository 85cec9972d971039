//! Node-degree series `Λ` and the bootstrap solver for `T = z + Λ(T)`.
//!
//! A tree family counted by leaves is determined by the coefficients
//! `λ_m` (number of ways to build an internal node of arity `m`). For the
//! strong interval tree classes,
//! `Λ_k(x) = x²/(1−x) + Σ_{j=4}^k s_j (x/(1−x))^j`,
//! which expands coefficientwise to
//! `λ_m = 1 + Σ_{j=4}^{min(k,m)} s_j · C(m−1, j−1)` for `m ≥ 2`.
//!
//! ```
//! use sitlab::lambda::LambdaSpec;
//! use sitlab::simples::SimpleCounts;
//! let s = SimpleCounts::by_inversion(8);
//! let lam = LambdaSpec::Schroeder.resolve(6, &s);
//! let u = lam.bootstrap(6);
//! let coeffs: Vec<i64> = (0..=6).map(|n| i64::try_from(u.coeff(n)).unwrap()).collect();
//! assert_eq!(coeffs, vec![0, 1, 1, 3, 11, 45, 197]);
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::series::PowerSeries;
use crate::simples::SimpleCounts;

/// Which node-degree series to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaSpec {
    /// All simple permutations allowed as prime labels (the full class of
    /// strong interval trees; transcendental Λ).
    Full,
    /// Prime arities capped at `k`. Values below 4 degenerate to the
    /// Schröder case since there are no simple permutations that small.
    Restricted(usize),
    /// No prime nodes at all: `Λ(x) = x²/(1−x)`, i.e. `λ_m = 1`.
    Schroeder,
    /// Explicit coefficients `λ_0, λ_1, …`; must have `λ_0 = λ_1 = 0` and all
    /// entries nonnegative.
    Polynomial(Vec<BigInt>),
}

impl LambdaSpec {
    /// Expands the coefficients `λ_0..λ_order` exactly.
    pub fn resolve(&self, order: usize, simples: &SimpleCounts) -> Lambda {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        match self {
            LambdaSpec::Polynomial(c) => {
                assert!(c.len() < 2 || (c[0].is_zero() && c[1].is_zero()), "lambda_0 = lambda_1 = 0 required");
                for (i, v) in c.iter().enumerate().take(order + 1) {
                    assert!(v >= &BigInt::zero(), "lambda coefficients must be nonnegative");
                    coeffs[i] = v.clone();
                }
            }
            LambdaSpec::Schroeder => {
                for c in coeffs.iter_mut().skip(2) {
                    *c = BigInt::one();
                }
            }
            LambdaSpec::Restricted(_) | LambdaSpec::Full => {
                let cap = match self {
                    LambdaSpec::Restricted(k) => *k,
                    _ => usize::MAX,
                };
                for m in 2..=order {
                    let mut lam = BigInt::one();
                    let top = cap.min(m).min(simples.max());
                    for j in 4..=top {
                        lam += simples.get(j) * binomial(m - 1, j - 1);
                    }
                    coeffs[m] = lam;
                }
            }
        }
        Lambda {
            spec: self.clone(),
            coeffs,
        }
    }
}

/// A `LambdaSpec` with its coefficients expanded up to a fixed order.
#[derive(Debug, Clone)]
pub struct Lambda {
    spec: LambdaSpec,
    coeffs: Vec<BigInt>,
}

impl Lambda {
    pub fn spec(&self) -> &LambdaSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &BigInt {
        &self.coeffs[m]
    }

    pub fn series(&self) -> PowerSeries {
        PowerSeries::from_coeffs(self.coeffs.clone(), self.order())
    }

    /// `Λ(t)` for a truncated series argument `t` (Horner).
    pub fn apply(&self, t: &PowerSeries) -> PowerSeries {
        let order = t.order();
        let mut acc = PowerSeries::zero(order);
        for m in (0..=order.min(self.order())).rev() {
            acc = acc.mul(t);
            if !self.coeffs[m].is_zero() {
                let c = acc.coeff(0) + &self.coeffs[m];
                acc.set_coeff(0, c);
            }
        }
        acc
    }

    /// `Λ′(t)` for a truncated series argument.
    pub fn apply_derivative(&self, t: &PowerSeries) -> PowerSeries {
        let order = t.order();
        let top = order.min(self.order().saturating_sub(1));
        let mut acc = PowerSeries::zero(order);
        for m in (0..=top).rev() {
            acc = acc.mul(t);
            let c = &self.coeffs[m + 1] * BigInt::from(m + 1);
            if !c.is_zero() {
                let c0 = acc.coeff(0) + c;
                acc.set_coeff(0, c0);
            }
        }
        acc
    }

    /// The unique formal solution of `T = z + Λ(T)` with `T_0 = 0, T_1 = 1`,
    /// to order `n`. Newton iteration doubles the number of correct
    /// coefficients per step; all intermediate quotients are exact because
    /// `1 − Λ′(T)` has constant term 1.
    pub fn bootstrap(&self, n: usize) -> PowerSeries {
        assert!(
            self.coeffs[0].is_zero() && (self.coeffs.len() < 2 || self.coeffs[1].is_zero()),
            "bootstrap requires lambda_0 = lambda_1 = 0"
        );
        let mut t = PowerSeries::z(1.min(n));
        let mut order = t.order();
        while order < n {
            order = (order * 2).min(n);
            let mut tt = PowerSeries::zero(order);
            for i in 0..=t.order() {
                tt.set_coeff(i, t.coeff(i).clone());
            }
            // Newton step: T <- T - (T - z - Λ(T)) / (1 - Λ'(T))
            let residual = tt.sub(&PowerSeries::z(order)).sub(&self.apply(&tt));
            let denom = PowerSeries::one(order).sub(&self.apply_derivative(&tt));
            let delta = residual
                .quotient(&denom)
                .expect("denominator has constant term 1");
            t = tt.sub(&delta);
        }
        t
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn counts() -> SimpleCounts {
        SimpleCounts::by_inversion(12)
    }

    #[test]
    fn lambda_expansion_examples() {
        let s = counts();
        // restricted(4): lambda_4 = 1 + s_4 * C(3,3) = 3
        let l4 = LambdaSpec::Restricted(4).resolve(6, &s);
        assert_eq!(l4.coeff(4), &BigInt::from(3));
        // restricted(5): lambda_5 = 1 + s_4 * C(4,3) + s_5 * C(4,4) = 15
        let l5 = LambdaSpec::Restricted(5).resolve(6, &s);
        assert_eq!(l5.coeff(5), &BigInt::from(15));
        // schroeder: lambda_m = 1 for all m >= 2
        let ls = LambdaSpec::Schroeder.resolve(6, &s);
        assert!((2..=6).all(|m| ls.coeff(m) == &BigInt::from(1)));
        assert!(ls.coeff(0).is_zero() && ls.coeff(1).is_zero());
    }

    #[test]
    fn bootstrap_schroeder_counts() {
        let s = counts();
        let u = LambdaSpec::Schroeder.resolve(6, &s).bootstrap(6);
        let got: Vec<BigInt> = u.coeffs().to_vec();
        let want: Vec<BigInt> = [0i64, 1, 1, 3, 11, 45, 197]
            .iter()
            .map(|&c| BigInt::from(c))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn bootstrap_idempotence() {
        let s = counts();
        for spec in [
            LambdaSpec::Schroeder,
            LambdaSpec::Restricted(4),
            LambdaSpec::Restricted(7),
            LambdaSpec::Full,
        ] {
            let lam = spec.resolve(12, &s);
            let t = lam.bootstrap(12);
            let again = PowerSeries::z(12).add(&lam.apply(&t));
            assert_eq!(t, again, "T = z + Lambda(T) fails for {:?}", spec);
            assert!(t.coeffs().iter().all(|c| !c.is_negative()));
        }
    }

    #[test]
    fn restricted_matches_schroeder_below_four_leaves() {
        let s = counts();
        let r4 = LambdaSpec::Restricted(4).resolve(5, &s).bootstrap(5);
        let sch = LambdaSpec::Schroeder.resolve(5, &s).bootstrap(5);
        for n in 0..=3 {
            assert_eq!(r4.coeff(n), sch.coeff(n));
        }
        assert_ne!(r4.coeff(4), sch.coeff(4));
    }

    #[test]
    fn monotone_filtration_and_stabilization() {
        let s = counts();
        let n = 10;
        let full = LambdaSpec::Full.resolve(n, &s).bootstrap(n);
        let mut prev = LambdaSpec::Restricted(4).resolve(n, &s).bootstrap(n);
        for k in 5..=10 {
            let cur = LambdaSpec::Restricted(k).resolve(n, &s).bootstrap(n);
            for i in 0..=n {
                assert!(prev.coeff(i) <= cur.coeff(i));
                assert!(cur.coeff(i) <= full.coeff(i));
                if k >= i {
                    assert_eq!(cur.coeff(i), full.coeff(i), "k={} n={}", k, i);
                }
            }
            prev = cur;
        }
    }
}
