//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive: stream all `n!` permutations,
//! decompose each one, and aggregate. The results are used to validate the
//! generating-function machinery coefficient by coefficient at small sizes.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::lambda::LambdaSpec;
use crate::perm::Permutation;
use crate::simples::{enumerate_simples, SimplesError};
use crate::sit::{compose, decompose, tree_params, Label, PrimeLabel, SITree};

/// Exhaustive enumeration is kept below this size (9! decompositions run in
/// seconds, 10! does not in debug builds).
pub const ORACLE_CEILING: usize = 9;

/// Aggregated totals for one class at one size, at both object levels.
/// The `u` level restricts to permutations whose tree root is not an
/// ascending linear node.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassTotals {
    pub count_p: u64,
    pub count_u: u64,
    pub internal_p: u64,
    pub internal_u: u64,
    pub prime_p: u64,
    pub prime_u: u64,
    pub sss_p: u64,
    pub sss_u: u64,
    pub arity_p: BTreeMap<usize, u64>,
    pub arity_u: BTreeMap<usize, u64>,
}

/// Largest admitted prime arity, `None` for unlimited.
fn arity_cap(spec: &LambdaSpec) -> Option<usize> {
    match spec {
        LambdaSpec::Schroeder => Some(0),
        LambdaSpec::Restricted(k) => Some(*k),
        LambdaSpec::Full => None,
        LambdaSpec::Polynomial(_) => unreachable!("no tree semantics"),
    }
}

/// Decomposes every permutation of size `n` and totals the tree parameters
/// of those belonging to the class.
pub fn exhaustive(n: usize, spec: &LambdaSpec) -> Result<ClassTotals, SimplesError> {
    if n > ORACLE_CEILING {
        return Err(SimplesError::CeilingExceeded(n, ORACLE_CEILING));
    }
    let cap = arity_cap(spec);
    let mut totals = ClassTotals::default();
    let mut p = Permutation::identity(n);
    loop {
        let t = decompose(&p);
        let params = tree_params(&t);
        let admitted = cap.map_or(true, |c| params.max_prime_arity <= c);
        if admitted {
            let in_u = !matches!(
                &t,
                SITree::Internal {
                    label: Label::Plus,
                    ..
                }
            );
            totals.count_p += 1;
            totals.internal_p += params.internal as u64;
            totals.prime_p += params.prime as u64;
            totals.sss_p += params.subtree_size_sum as u64;
            for (&m, &c) in &params.arity {
                *totals.arity_p.entry(m).or_insert(0) += c as u64;
            }
            if in_u {
                totals.count_u += 1;
                totals.internal_u += params.internal as u64;
                totals.prime_u += params.prime as u64;
                totals.sss_u += params.subtree_size_sum as u64;
                for (&m, &c) in &params.arity {
                    *totals.arity_u.entry(m).or_insert(0) += c as u64;
                }
            }
        }
        if !p.next_lex() {
            break;
        }
    }
    Ok(totals)
}

/// All valid strong interval trees with `n` leaves in the class, generated
/// directly from the grammar (not via permutations).
pub fn all_trees(n: usize, spec: &LambdaSpec) -> Result<Vec<SITree>, SimplesError> {
    if n > ORACLE_CEILING {
        return Err(SimplesError::CeilingExceeded(n, ORACLE_CEILING));
    }
    let cap = arity_cap(spec);
    let simples: Vec<Vec<Permutation>> = (0..=n.min(cap.unwrap_or(n)))
        .map(|j| {
            if j >= 4 {
                enumerate_simples(j)
            } else {
                Ok(Vec::new())
            }
        })
        .collect::<Result<_, _>>()?;
    return Ok(gen(n, Forbid::Nothing, &simples, cap));

    #[derive(Clone, Copy, PartialEq)]
    enum Forbid {
        Nothing,
        Plus,
        Minus,
    }

    fn gen(
        n: usize,
        forbid: Forbid,
        simples: &[Vec<Permutation>],
        cap: Option<usize>,
    ) -> Vec<SITree> {
        if n == 1 {
            return vec![SITree::Leaf];
        }
        let mut out = Vec::new();
        if forbid != Forbid::Plus {
            for children in parts(n, 2, Forbid::Plus, simples, cap) {
                out.push(SITree::internal(Label::Plus, children));
            }
        }
        if forbid != Forbid::Minus {
            for children in parts(n, 2, Forbid::Minus, simples, cap) {
                out.push(SITree::internal(Label::Minus, children));
            }
        }
        let top = cap.unwrap_or(n).min(n).min(simples.len() - 1);
        for j in 4..=top {
            for q in &simples[j] {
                for children in parts(n, j, Forbid::Nothing, simples, cap) {
                    out.push(SITree::internal(
                        Label::Prime(PrimeLabel::Perm(q.clone())),
                        children,
                    ));
                }
            }
        }
        out
    }

    /// All child lists for a node of total size `n`: at least `min_parts`
    /// children when `min_parts == 2` (linear nodes, any longer list), or
    /// exactly `min_parts` children (prime nodes).
    fn parts(
        n: usize,
        min_parts: usize,
        forbid: Forbid,
        simples: &[Vec<Permutation>],
        cap: Option<usize>,
    ) -> Vec<Vec<SITree>> {
        let exact = min_parts != 2;
        let mut out = Vec::new();
        rec(n, min_parts, exact, forbid, simples, cap, &mut Vec::new(), &mut out);
        return out;

        #[allow(clippy::too_many_arguments)]
        fn rec(
            n: usize,
            remaining_min: usize,
            exact: bool,
            forbid: Forbid,
            simples: &[Vec<Permutation>],
            cap: Option<usize>,
            acc: &mut Vec<SITree>,
            out: &mut Vec<Vec<SITree>>,
        ) {
            if n == 0 {
                if remaining_min == 0 && acc.len() >= 2 {
                    out.push(acc.clone());
                }
                return;
            }
            if exact && remaining_min == 0 {
                return;
            }
            let max_here = if exact {
                n + 1 - remaining_min
            } else {
                n
            };
            for size in 1..=max_here {
                if !exact && n - size == 0 && acc.len() + 1 < 2 {
                    continue;
                }
                for t in gen(size, forbid, simples, cap) {
                    acc.push(t);
                    rec(
                        n - size,
                        remaining_min.saturating_sub(1),
                        exact,
                        forbid,
                        simples,
                        cap,
                        acc,
                        out,
                    );
                    acc.pop();
                }
            }
        }
    }
}

/// Round-trips every generated tree through its permutation and back.
/// Returns the number of trees checked.
pub fn tree_round_trip(n: usize, spec: &LambdaSpec) -> Result<usize, SimplesError> {
    let trees = all_trees(n, spec)?;
    let mut seen = std::collections::BTreeSet::new();
    for t in &trees {
        let p = compose(t).expect("generated trees are valid");
        assert_eq!(&decompose(&p), t, "round trip failed for {}", p);
        assert!(seen.insert(p.word().to_vec()), "duplicate tree target");
    }
    Ok(trees.len())
}

/// Helper for comparing against generating-function coefficients.
pub fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{class_series, cumulative, Level, Param};
    use crate::simples::SimpleCounts;

    fn counts() -> SimpleCounts {
        SimpleCounts::by_inversion(12)
    }

    #[test]
    fn oracle_validates_counting_series() {
        let s = counts();
        for spec in [
            LambdaSpec::Schroeder,
            LambdaSpec::Restricted(4),
            LambdaSpec::Restricted(5),
            LambdaSpec::Full,
        ] {
            let cs = class_series(&spec, &s, 6).unwrap();
            for n in 1..=6 {
                let o = exhaustive(n, &spec).unwrap();
                assert_eq!(cs.p.coeff(n), &big(o.count_p), "{:?} P n={}", spec, n);
                assert_eq!(cs.u.coeff(n), &big(o.count_u), "{:?} U n={}", spec, n);
            }
        }
    }

    #[test]
    fn oracle_validates_cumulative_parameters() {
        let s = counts();
        for spec in [
            LambdaSpec::Schroeder,
            LambdaSpec::Restricted(4),
            LambdaSpec::Full,
        ] {
            for n in 1..=6 {
                let o = exhaustive(n, &spec).unwrap();
                let check = |param: Param, p_val: u64, u_val: u64| {
                    let cp = cumulative(&spec, &s, param, Level::P, n).unwrap();
                    let cu = cumulative(&spec, &s, param, Level::U, n).unwrap();
                    assert_eq!(cp.coeff(n), &big(p_val), "{:?} {:?} P n={}", spec, param, n);
                    assert_eq!(cu.coeff(n), &big(u_val), "{:?} {:?} U n={}", spec, param, n);
                };
                check(Param::Internal, o.internal_p, o.internal_u);
                check(Param::Prime, o.prime_p, o.prime_u);
                check(Param::SubtreeSizeSum, o.sss_p, o.sss_u);
                for m in 2..=n {
                    check(
                        Param::Arity(m),
                        o.arity_p.get(&m).copied().unwrap_or(0),
                        o.arity_u.get(&m).copied().unwrap_or(0),
                    );
                }
            }
        }
    }

    #[test]
    fn tree_generation_matches_counts_and_round_trips() {
        let s = counts();
        let cs = class_series(&LambdaSpec::Restricted(4), &s, 5).unwrap();
        let checked = tree_round_trip(5, &LambdaSpec::Restricted(4)).unwrap();
        assert_eq!(&big(checked as u64), cs.p.coeff(5));
        for n in 1..=6 {
            let full = class_series(&LambdaSpec::Full, &s, n).unwrap();
            let checked = tree_round_trip(n, &LambdaSpec::Full).unwrap();
            assert_eq!(&big(checked as u64), full.p.coeff(n), "n={}", n);
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        assert!(exhaustive(10, &LambdaSpec::Full).is_err());
        assert!(all_trees(10, &LambdaSpec::Full).is_err());
    }
}
