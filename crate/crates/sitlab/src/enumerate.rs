//! Exact enumeration of tree classes and cumulative shape parameters.
//!
//! Two object levels appear throughout. `P` counts the permutations of the
//! class (equivalently their strong interval trees), `U` the subfamily whose
//! root is not an ascending linear node; they are tied by `P = U/(1-U)` and
//! `U` is the bootstrap solution of `U = z + Λ(U)`.
//!
//! Cumulative parameters are computed twice, by independent routes that must
//! agree coefficientwise:
//!
//! * closed forms obtained by marking one node kind in the grammar
//!   (`Ξ_U = H·U'` with `H` specific to the parameter),
//! * a first-order dual-number (`a + bε`, `ε² = 0`) solution of the marked
//!   system itself.
//!
//! ```
//! use sitlab::enumerate::{cumulative, Level, Param};
//! use sitlab::lambda::LambdaSpec;
//! use sitlab::simples::SimpleCounts;
//! let s = SimpleCounts::by_inversion(8);
//! // total number of internal nodes over all strong interval trees of size 3
//! let c = cumulative(&LambdaSpec::Full, &s, Param::Internal, Level::P, 3).unwrap();
//! assert_eq!(c.coeff(3).to_string(), "10");
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::lambda::LambdaSpec;
use crate::series::{PowerSeries, SeriesError};
use crate::simples::SimpleCounts;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("parameter series are only defined for the strong interval tree classes")]
    UnsupportedSpec,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Additive tree parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    /// All internal nodes, linear and prime.
    Internal,
    /// Prime nodes only.
    Prime,
    /// Internal nodes with exactly this many children.
    Arity(usize),
    /// Sum over all nodes of the leaf count of their subtree.
    SubtreeSizeSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    U,
    P,
}

/// Counting series of a class at both levels.
#[derive(Debug, Clone)]
pub struct ClassSeries {
    pub u: PowerSeries,
    pub p: PowerSeries,
}

pub fn class_series(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    n: usize,
) -> Result<ClassSeries, EnumError> {
    let u = spec.resolve(n, simples).bootstrap(n);
    let denom = PowerSeries::one(n).sub(&u);
    let p = u.quotient(&denom)?;
    Ok(ClassSeries { u, p })
}

/// Largest prime arity the spec admits at truncation order `n`, or an error
/// for specs without tree semantics.
fn prime_cap(spec: &LambdaSpec, n: usize) -> Result<usize, EnumError> {
    match spec {
        LambdaSpec::Schroeder => Ok(3),
        LambdaSpec::Restricted(k) => Ok((*k).min(n)),
        LambdaSpec::Full => Ok(n),
        LambdaSpec::Polynomial(_) => Err(EnumError::UnsupportedSpec),
    }
}

/// Cumulative value of `param` over all objects of the class, as a series in
/// the size. Closed-form route.
pub fn cumulative(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    param: Param,
    level: Level,
    n: usize,
) -> Result<PowerSeries, EnumError> {
    let cap = prime_cap(spec, n)?;
    // One extra order so that U' is valid to order n.
    let u_hi = spec.resolve(n + 1, simples).bootstrap(n + 1);
    let du = u_hi.derivative(); // order n
    let u = u_hi.truncate(n);
    let one = PowerSeries::one(n);
    let q = one.quotient(&one.sub(&u))?;
    let q2 = q.mul(&q);
    let pser = u.mul(&q);

    // Sp = sum_j s_j P^j, Sp' = sum_j j s_j P^(j-1), over admitted arities.
    let mut sp = PowerSeries::zero(n);
    let mut spd = PowerSeries::zero(n);
    if cap >= 4 {
        let mut pj1 = pser.pow(3); // P^(j-1) starting at j = 4
        for j in 4..=cap {
            let sj = simples.get(j);
            if !sj.is_zero() {
                spd = spd.add(&pj1.scale(&(sj * BigInt::from(j))));
                sp = sp.add(&pj1.mul(&pser).scale(sj));
            }
            if j < cap {
                pj1 = pj1.mul(&pser);
            }
        }
    }

    let z_du = du.shift_up(); // z U'

    let (xi_u, p_extra) = match param {
        Param::Internal => {
            let h = u
                .mul(&u)
                .mul(&q)
                .mul(&one.add(&spd))
                .add(&sp);
            (h.mul(&du), u.mul(&u).mul(&q))
        }
        Param::Prime => (sp.mul(&du), PowerSeries::zero(n)),
        Param::Arity(kappa) => {
            if kappa < 2 {
                return Ok(PowerSeries::zero(n));
            }
            let uk = u.pow(kappa);
            let mut h = uk.mul(&one.add(&spd));
            if (4..=cap).contains(&kappa) {
                h = h.add(&pser.pow(kappa).scale(simples.get(kappa)));
            }
            (h.mul(&du), uk)
        }
        Param::SubtreeSizeSum => {
            // z U'^2 (1 + (Q^2 - 1) Sp')
            let xi = du
                .mul(&du)
                .shift_up()
                .mul(&one.add(&q2.sub(&one).mul(&spd)));
            let extra = q2.sub(&one).mul(&z_du).quotient(&q2)?;
            // extra is (1 - 1/Q^2) z U'; the P transfer below multiplies by Q^2
            (xi, extra)
        }
    };

    Ok(match level {
        Level::U => xi_u,
        Level::P => q2.mul(&xi_u).add(&match param {
            // Xi_P = Q^2 Xi_U + (Q^2 - 1) z U'
            Param::SubtreeSizeSum => q2.mul(&p_extra),
            _ => p_extra,
        }),
    })
}

/// Average of `param` per object of each size (exact rationals; index `n`
/// of the result is the mean at size `n`, zero when the class is empty
/// there).
pub fn average(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    param: Param,
    level: Level,
    n: usize,
) -> Result<Vec<BigRational>, EnumError> {
    let cum = cumulative(spec, simples, param, level, n)?;
    let cs = class_series(spec, simples, n)?;
    let counts = match level {
        Level::U => &cs.u,
        Level::P => &cs.p,
    };
    Ok((0..=n)
        .map(|i| {
            if counts.coeff(i).is_zero() {
                BigRational::zero()
            } else {
                BigRational::new(cum.coeff(i).clone(), counts.coeff(i).clone())
            }
        })
        .collect())
}

/// First-order dual numbers over truncated series: `a + b ε` with `ε² = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Dual {
    a: PowerSeries,
    b: PowerSeries,
}

impl Dual {
    fn zero(order: usize) -> Self {
        Dual {
            a: PowerSeries::zero(order),
            b: PowerSeries::zero(order),
        }
    }

    fn plain(a: PowerSeries) -> Self {
        let order = a.order();
        Dual {
            a,
            b: PowerSeries::zero(order),
        }
    }

    fn add(&self, o: &Self) -> Self {
        Dual {
            a: self.a.add(&o.a),
            b: self.b.add(&o.b),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Dual {
            a: self.a.mul(&o.a),
            b: self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        }
    }

    fn scale(&self, c: &BigInt) -> Self {
        Dual {
            a: self.a.scale(c),
            b: self.b.scale(c),
        }
    }

    /// `self / o` where `o.a` has constant term 1.
    fn quotient(&self, o: &Self) -> Result<Self, SeriesError> {
        let a = self.a.quotient(&o.a)?;
        // (a1 + b1 e)/(a2 + b2 e) = a1/a2 + (b1 - (a1/a2) b2)/a2 e
        let b = self.b.sub(&a.mul(&o.b)).quotient(&o.a)?;
        Ok(Dual { a, b })
    }

    fn pow(&self, k: usize) -> Self {
        let mut acc = Dual::plain(PowerSeries::one(self.a.order()));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `y^n` at first order in `ε = y - 1`: coefficientwise
    /// `(a_n, b_n) -> (a_n, b_n + n a_n)`.
    fn mark_size(&self) -> Self {
        let mut b = self.b.clone();
        for i in 1..=self.a.order() {
            let v = b.coeff(i) + self.a.coeff(i) * BigInt::from(i);
            b.set_coeff(i, v);
        }
        Dual {
            a: self.a.clone(),
            b,
        }
    }

    /// Multiplies by `y = 1 + ε`.
    fn mark_once(&self) -> Self {
        Dual {
            a: self.a.clone(),
            b: self.b.add(&self.a),
        }
    }
}

/// Cumulative value of `param`, recomputed by solving the marked grammar
/// with dual-number coefficients. Independent of [`cumulative`]; used to
/// cross-check it.
pub fn cumulative_bivariate(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    param: Param,
    level: Level,
    n: usize,
) -> Result<PowerSeries, EnumError> {
    let cap = prime_cap(spec, n)?;
    let one = Dual::plain(PowerSeries::one(n));
    let z = Dual::plain(PowerSeries::z(n));
    let leaf = match param {
        Param::SubtreeSizeSum => z.mark_size(),
        _ => z.clone(),
    };

    // The grammar: N = leaf + L + R, P = leaf + 2L + R,
    // L = Seq_{>=2}(N) with one sign, R = sum_j s_j P^j.
    let mut nser = Dual::zero(n);
    let mut pser = Dual::zero(n);
    let mut iterations = 0;
    loop {
        // L from N
        let seq = nser
            .mul(&nser)
            .quotient(&one.add(&Dual {
                a: nser.a.scale(&BigInt::from(-1)),
                b: nser.b.scale(&BigInt::from(-1)),
            }))?;
        let l = match param {
            Param::Internal => seq.mark_once(),
            Param::Arity(kappa) if kappa >= 2 => {
                let mut l = seq;
                l.b = l.b.add(&nser.a.pow(kappa));
                l
            }
            Param::SubtreeSizeSum => seq.mark_size(),
            _ => seq,
        };
        // R from P
        let mut r = Dual::zero(n);
        if cap >= 4 {
            let mut pj = pser.pow(4);
            for j in 4..=cap {
                let sj = simples.get(j);
                if !sj.is_zero() {
                    let term = pj.scale(sj);
                    let term = match param {
                        Param::Internal | Param::Prime => term.mark_once(),
                        Param::Arity(kappa) if kappa == j => term.mark_once(),
                        _ => term,
                    };
                    r = r.add(&term);
                }
                if j < cap {
                    pj = pj.mul(&pser);
                }
            }
            if matches!(param, Param::SubtreeSizeSum) {
                r = r.mark_size();
            }
        }
        let new_n = leaf.add(&l).add(&r);
        let new_p = leaf.add(&l).add(&l).add(&r);
        let stable = new_n == nser && new_p == pser;
        nser = new_n;
        pser = new_p;
        iterations += 1;
        if stable {
            break;
        }
        assert!(iterations <= n + 3, "marked system failed to converge");
    }
    Ok(match level {
        Level::U => nser.b,
        Level::P => pser.b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn counts() -> SimpleCounts {
        SimpleCounts::by_inversion(12)
    }

    #[test]
    fn class_counts_match_factorials_and_schroeder() {
        let s = counts();
        let full = class_series(&LambdaSpec::Full, &s, 8).unwrap();
        let fact = [1u64, 1, 2, 6, 24, 120, 720, 5040, 40320];
        for n in 1..=8 {
            assert_eq!(full.p.coeff(n), &BigInt::from(fact[n]), "n = {}", n);
        }
        let sch = class_series(&LambdaSpec::Schroeder, &s, 7).unwrap();
        let schroeder = [0u64, 1, 2, 6, 22, 90, 394, 1806];
        for n in 1..=7 {
            assert_eq!(sch.p.coeff(n), &BigInt::from(schroeder[n]), "n = {}", n);
        }
    }

    #[test]
    fn internal_cumulative_hand_values() {
        let s = counts();
        let c = cumulative(&LambdaSpec::Full, &s, Param::Internal, Level::P, 4).unwrap();
        assert_eq!(c.coeff(3), &BigInt::from(10));
        assert_eq!(c.coeff(4), &BigInt::from(54));
    }

    #[test]
    fn prime_cumulative_hand_value() {
        let s = counts();
        let c = cumulative(&LambdaSpec::Restricted(4), &s, Param::Prime, Level::P, 5).unwrap();
        // at size 4 only the two simple permutations have a prime node
        assert_eq!(c.coeff(4), &BigInt::from(2));
        assert_eq!(c.coeff(5), &BigInt::from(24));
    }

    #[test]
    fn sss_small_cases() {
        let s = counts();
        let c = cumulative(&LambdaSpec::Full, &s, Param::SubtreeSizeSum, Level::P, 3).unwrap();
        // sizes 1, 2, 3: 1*1, 2*4, (123:6)+(321:6)+4 perms with 8 each
        assert_eq!(c.coeff(1), &BigInt::from(1));
        assert_eq!(c.coeff(2), &BigInt::from(8));
        assert_eq!(c.coeff(3), &BigInt::from(44));
    }

    #[test]
    fn both_routes_agree() {
        let s = counts();
        for spec in [
            LambdaSpec::Schroeder,
            LambdaSpec::Restricted(4),
            LambdaSpec::Restricted(6),
            LambdaSpec::Full,
        ] {
            for param in [
                Param::Internal,
                Param::Prime,
                Param::Arity(2),
                Param::Arity(3),
                Param::Arity(4),
                Param::Arity(5),
                Param::SubtreeSizeSum,
            ] {
                for level in [Level::U, Level::P] {
                    let a = cumulative(&spec, &s, param, level, 9).unwrap();
                    let b = cumulative_bivariate(&spec, &s, param, level, 9).unwrap();
                    assert_eq!(a, b, "{:?} {:?} {:?}", spec, param, level);
                }
            }
        }
    }

    #[test]
    fn averages_are_rational_means() {
        let s = counts();
        let avg = average(&LambdaSpec::Full, &s, Param::Internal, Level::P, 3).unwrap();
        assert_eq!(avg[3], BigRational::new(BigInt::from(5), BigInt::from(3)));
    }

    #[test]
    fn polynomial_spec_has_no_parameter_series() {
        let s = counts();
        let spec = LambdaSpec::Polynomial(vec![
            BigInt::zero(),
            BigInt::zero(),
            BigInt::one(),
        ]);
        assert!(class_series(&spec, &s, 5).is_ok());
        assert_eq!(
            cumulative(&spec, &s, Param::Internal, Level::P, 5),
            Err(EnumError::UnsupportedSpec)
        );
    }
}
