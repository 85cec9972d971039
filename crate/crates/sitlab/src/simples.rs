//! Counting and enumerating simple permutations.
//!
//! A permutation is simple when its only intervals are the trivial ones
//! (singletons and the whole word); by convention sizes 1 and 2 do not count.
//! The exact counts `s_n` come from a triangular functional inversion against
//! the factorial series, cross-checked by brute force at small sizes:
//!
//! ```
//! use sitlab::simples::SimpleCounts;
//! let s = SimpleCounts::by_inversion(6);
//! assert_eq!(s.get(4).to_string(), "2");
//! assert_eq!(s.get(6).to_string(), "46");
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::perm::Permutation;
use crate::series::PowerSeries;

/// Sizes above this make exhaustive enumeration unreasonable.
pub const BRUTE_FORCE_CEILING: usize = 10;

/// Default upper size for the inversion computation; quadratic series
/// arithmetic keeps this in seconds.
pub const DEFAULT_MAX: usize = 300;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplesError {
    #[error("brute-force ceiling exceeded: n = {0} > {1}")]
    CeilingExceeded(usize, usize),
}

/// `values[n]` holds `s_n`, the number of simple permutations of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCounts {
    values: Vec<BigInt>,
}

impl SimpleCounts {
    /// Computes `s_n` for all `n <= max` by triangular inversion.
    ///
    /// With `F(z) = sum n! z^n` the generating function of all permutations
    /// and `U = F/(1+F)`, the substitution-decomposition grammar forces
    /// `S(F(z)) = U - z - U*F`, and since `F` has valuation 1 with unit
    /// leading coefficient the coefficients `s_j` peel off one at a time.
    pub fn by_inversion(max: usize) -> Self {
        let order = max;
        let mut fact = vec![BigInt::zero(); order + 1];
        let mut acc = BigInt::one();
        for n in 1..=order {
            acc *= BigInt::from(n);
            fact[n] = acc.clone();
        }
        let f = PowerSeries::from_coeffs(fact, order);
        let one_plus_f = PowerSeries::one(order).add(&f);
        let u = f.quotient(&one_plus_f).expect("1+F is invertible");
        // rhs = U - z - U*F  (= U - z - U^2/(1-U), using U/(1-U) = F)
        let mut rhs = u.sub(&PowerSeries::z(order)).sub(&u.mul(&f));

        let mut values = vec![BigInt::zero(); order + 1];
        if max >= 4 {
            // F^j has valuation j with leading coefficient 1.
            let mut f_pow = f.pow(4);
            for j in 4..=order {
                let s_j = rhs.coeff(j).clone();
                if !s_j.is_zero() {
                    rhs = rhs.sub(&f_pow.scale(&s_j));
                }
                values[j] = s_j;
                if j < order {
                    f_pow = f_pow.mul(&f);
                }
            }
        }
        SimpleCounts { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// True iff `p` is simple: size at least 4 and no factor of length in
/// `[2, n-1]` whose value set is an integer interval. Quadratic scan with
/// running min/max.
pub fn is_simple(p: &Permutation) -> bool {
    let n = p.size();
    if n < 4 {
        return false;
    }
    let w = p.word();
    for i in 0..n - 1 {
        let mut lo = w[i];
        let mut hi = w[i];
        for j in i + 1..n {
            lo = lo.min(w[j]);
            hi = hi.max(w[j]);
            let len = (j - i + 1) as u32;
            if len as usize == n {
                break;
            }
            if hi - lo + 1 == len {
                return false;
            }
        }
    }
    true
}

/// All simple permutations of size `n` in lexicographic order.
pub fn enumerate_simples(n: usize) -> Result<Vec<Permutation>, SimplesError> {
    if n > BRUTE_FORCE_CEILING {
        return Err(SimplesError::CeilingExceeded(n, BRUTE_FORCE_CEILING));
    }
    let mut out = Vec::new();
    if n < 4 {
        return Ok(out);
    }
    let mut p = Permutation::identity(n);
    loop {
        if is_simple(&p) {
            out.push(p.clone());
        }
        if !p.next_lex() {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn printed_series_values() {
        // S(z) = 2z^4 + 6z^5 + 46z^6 + 338z^7 + 2926z^8 + 28146z^9
        //        + 298526z^10 + 3454434z^11 + ...
        let s = SimpleCounts::by_inversion(11);
        let expect: [(usize, u64); 8] = [
            (4, 2),
            (5, 6),
            (6, 46),
            (7, 338),
            (8, 2926),
            (9, 28146),
            (10, 298526),
            (11, 3454434),
        ];
        for (n, v) in expect {
            assert_eq!(s.get(n), &BigInt::from(v), "s_{}", n);
        }
        for n in 0..4 {
            assert!(s.get(n).is_zero());
        }
    }

    #[test]
    fn small_sizes_by_convention() {
        let s = SimpleCounts::by_inversion(3);
        assert!(s.values().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn is_simple_known_cases() {
        assert!(is_simple(&"2 4 1 3".parse().unwrap()));
        assert!(is_simple(&"3 1 4 2".parse().unwrap()));
        assert!(is_simple(&"3 5 7 1 4 2 6".parse().unwrap()));
        assert!(!is_simple(&"1 2".parse().unwrap()));
        assert!(!is_simple(&"2 1".parse().unwrap()));
        assert!(!is_simple(&"1".parse().unwrap()));
        assert!(!is_simple(&"1 2 3 4".parse().unwrap()));
        // 4 5 1 2 3 contains the interval 4 5
        assert!(!is_simple(&"4 5 1 2 3".parse().unwrap()));
    }

    #[test]
    fn enumeration_matches_counts() {
        assert!(enumerate_simples(3).unwrap().is_empty());
        let s4 = enumerate_simples(4).unwrap();
        assert_eq!(
            s4,
            vec!["2 4 1 3".parse().unwrap(), "3 1 4 2".parse().unwrap()]
        );
        assert_eq!(enumerate_simples(6).unwrap().len(), 46);
        assert!(enumerate_simples(11).is_err());
    }
}
