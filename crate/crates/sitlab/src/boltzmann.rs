//! Boltzmann random generation of prime-degree restricted trees.
//!
//! The sampler draws from the permutation-level class: an object is a leaf,
//! a signed linear node with at least two children, or a prime node of arity
//! `j ∈ [4,k]`. Children of linear nodes come from the root-restricted
//! family (their own linear roots take the opposite sign); all other
//! children are unrestricted. Every tree has exactly one derivation, so
//! conditioned on its size the output is uniform over the class.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::lambda::LambdaSpec;
use crate::perm::Permutation;
use crate::simples::{enumerate_simples, SimpleCounts, BRUTE_FORCE_CEILING};
use crate::sit::{Label, PrimeLabel, SITree};

#[derive(Debug, Error)]
pub enum BoltzmannError {
    #[error("invalid sampler configuration: {0}")]
    BadConfig(String),
    #[error("fixed-point evaluation diverged (is x above the singularity?)")]
    Diverged,
    #[error("rejection budget exhausted: {attempts} attempts, {accepted} accepted")]
    BudgetExhausted { attempts: usize, accepted: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    /// Prime nodes carry only their arity.
    Skeleton,
    /// Prime nodes of arity up to the given ceiling get a uniformly chosen
    /// simple permutation label; larger ones stay opaque.
    Labeled(usize),
}

pub const DEFAULT_LABEL_CEILING: usize = 9;

#[derive(Debug, Clone)]
pub struct SamplerConfig {
    pub k: usize,
    pub x: f64,
    pub target: usize,
    /// Accepted sizes are `[(1−eps)·target, (1+eps)·target]`.
    pub eps: f64,
    pub max_attempts: usize,
    pub seed: u64,
    pub labels: LabelMode,
}

impl SamplerConfig {
    fn window(&self) -> (usize, usize) {
        let lo = ((1.0 - self.eps) * self.target as f64).ceil().max(1.0) as usize;
        let hi = ((1.0 + self.eps) * self.target as f64).floor() as usize;
        (lo, hi.max(lo))
    }
}

/// Values of the generating functions at the control parameter, plus the
/// unnormalized branch weights.
#[derive(Debug, Clone)]
pub struct OracleValues {
    pub x: f64,
    pub u: f64,
    pub p: f64,
    /// `U²/(1−U)`, the one-sign linear branch weight.
    pub linear: f64,
    /// `s_j·P^j` for `j = 4..=k`.
    pub prime: Vec<f64>,
}

impl OracleValues {
    /// Branch probabilities at the permutation level (leaf, signed linear,
    /// primes by arity); they sum to 1 up to evaluation tolerance.
    pub fn p_probabilities(&self) -> Vec<f64> {
        let mut out = vec![self.x / self.p, 2.0 * self.linear / self.p];
        out.extend(self.prime.iter().map(|w| w / self.p));
        out
    }
}

fn lambda_f64(spec: &LambdaSpec, simples: &SimpleCounts, u: f64) -> f64 {
    let y = u / (1.0 - u);
    let mut v = u * u / (1.0 - u);
    if let LambdaSpec::Restricted(k) = spec {
        for j in 4..=*k {
            v += simples.get(j).to_f64().unwrap() * y.powi(j as i32);
        }
    }
    v
}

fn lambda_deriv_f64(spec: &LambdaSpec, simples: &SimpleCounts, u: f64) -> f64 {
    let y = u / (1.0 - u);
    let q2 = 1.0 / ((1.0 - u) * (1.0 - u));
    let mut a1 = 0.0;
    if let LambdaSpec::Restricted(k) = spec {
        for j in 4..=*k {
            a1 += j as f64 * simples.get(j).to_f64().unwrap() * y.powi(j as i32 - 1);
        }
    }
    q2 * (1.0 + a1) - 1.0
}

/// Evaluates `U(x)` by the monotone fixed point `u ← x + Λ_k(u)` and
/// derives the branch weights. Converges from below for `x` up to the
/// singularity; divergence past it is detected when the iterate leaves
/// `[0,1)` or keeps growing at the budget.
pub fn oracle_values(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    x: f64,
) -> Result<OracleValues, BoltzmannError> {
    if !(x > 0.0 && x < 1.0) {
        return Err(BoltzmannError::BadConfig(format!("x = {} out of (0,1)", x)));
    }
    let mut u = 0.0f64;
    let mut converged = false;
    for _ in 0..200_000 {
        let next = x + lambda_f64(spec, simples, u);
        if !next.is_finite() || next >= 1.0 {
            return Err(BoltzmannError::Diverged);
        }
        if (next - u).abs() < 1e-14 {
            u = next;
            converged = true;
            break;
        }
        u = next;
    }
    // at the budget, accept only if the slope certifies we are at or below
    // the critical point (the iteration is then merely slow, not divergent)
    if !converged && lambda_deriv_f64(spec, simples, u) > 1.0 {
        return Err(BoltzmannError::Diverged);
    }
    let p = u / (1.0 - u);
    let linear = u * u / (1.0 - u);
    let mut prime = Vec::new();
    if let LambdaSpec::Restricted(k) = spec {
        for j in 4..=*k {
            prime.push(simples.get(j).to_f64().unwrap() * p.powi(j as i32));
        }
    }
    Ok(OracleValues {
        x,
        u,
        p,
        linear,
        prime,
    })
}

/// Expected object size at parameter `x`: `x P′(x)/P(x) = x U′/(U(1−U))`
/// with `U′ = 1/(1−Λ′(U))`.
pub fn expected_size(spec: &LambdaSpec, simples: &SimpleCounts, x: f64) -> Result<f64, BoltzmannError> {
    let vals = oracle_values(spec, simples, x)?;
    let slope = lambda_deriv_f64(spec, simples, vals.u);
    if slope >= 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(x / ((1.0 - slope) * vals.u * (1.0 - vals.u)))
}

/// Finds `x` below the singularity with `E[size] ≈ target` by bisection
/// (the expectation is increasing in `x`).
pub fn tune_x(
    spec: &LambdaSpec,
    simples: &SimpleCounts,
    rho: f64,
    target: usize,
) -> Result<f64, BoltzmannError> {
    if target < 2 {
        return Ok(rho * 0.5);
    }
    let mut lo = rho * 1e-6;
    let mut hi = rho * (1.0 - 1e-12);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let e = expected_size(spec, simples, mid)?;
        if e < target as f64 {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo) / rho < 1e-13 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub struct Sampler {
    config: SamplerConfig,
    spec: LambdaSpec,
    vals: OracleValues,
    rng: ChaCha12Rng,
    label_pools: BTreeMap<usize, Vec<Permutation>>,
    pub attempts: usize,
    pub accepted: usize,
}

enum Task {
    /// Draw one object; a linear root takes the given forced sign, or a
    /// fair coin when `None`.
    Obj(Option<Label>),
    /// Assemble the top `arity` finished subtrees under this label.
    Finish(Label, usize),
}

impl Sampler {
    pub fn new(config: SamplerConfig, simples: &SimpleCounts) -> Result<Self, BoltzmannError> {
        if config.eps <= 0.0 || config.eps >= 1.0 {
            return Err(BoltzmannError::BadConfig("eps must be in (0,1)".into()));
        }
        let spec = if config.k >= 4 {
            LambdaSpec::Restricted(config.k)
        } else {
            LambdaSpec::Schroeder
        };
        if let LambdaSpec::Restricted(k) = spec {
            if k > simples.max() {
                return Err(BoltzmannError::BadConfig(format!(
                    "s_j available only up to {}",
                    simples.max()
                )));
            }
        }
        let mut label_pools = BTreeMap::new();
        if let LabelMode::Labeled(ceiling) = config.labels {
            if ceiling > BRUTE_FORCE_CEILING {
                return Err(BoltzmannError::BadConfig(format!(
                    "label ceiling {} above enumerable arity {}",
                    ceiling, BRUTE_FORCE_CEILING
                )));
            }
            for j in 4..=config.k.min(ceiling) {
                label_pools.insert(j, enumerate_simples(j).expect("ceiling checked"));
            }
        }
        let vals = oracle_values(&spec, simples, config.x)?;
        let rng = ChaCha12Rng::seed_from_u64(config.seed);
        Ok(Sampler {
            config,
            spec,
            vals,
            rng,
            label_pools,
            attempts: 0,
            accepted: 0,
        })
    }

    pub fn spec(&self) -> &LambdaSpec {
        &self.spec
    }

    pub fn values(&self) -> &OracleValues {
        &self.vals
    }

    /// One free (unconditioned) Boltzmann draw, abandoned above `cap`
    /// leaves.
    pub fn sample_free(&mut self, cap: usize) -> Option<SITree> {
        let mut tasks = vec![Task::Obj(None)];
        let mut done: Vec<SITree> = Vec::new();
        let mut leaves = 0usize;
        while let Some(task) = tasks.pop() {
            match task {
                Task::Obj(forced) => {
                    leaves += self.step(forced, &mut tasks, &mut done)?;
                    if leaves > cap {
                        return None;
                    }
                }
                Task::Finish(label, arity) => {
                    let at = done.len() - arity;
                    let children = done.split_off(at);
                    done.push(SITree::internal(label, children));
                }
            }
        }
        debug_assert_eq!(done.len(), 1);
        done.pop()
    }

    /// Expands one grammar branch; returns the number of leaves emitted
    /// directly (0 or 1).
    fn step(
        &mut self,
        forced: Option<Label>,
        tasks: &mut Vec<Task>,
        done: &mut Vec<SITree>,
    ) -> Option<usize> {
        // weights: leaf x; linear L (forced sign) or 2L (free); primes s_j P^j
        let linear_w = if forced.is_some() {
            self.vals.linear
        } else {
            2.0 * self.vals.linear
        };
        let total = self.vals.x + linear_w + self.vals.prime.iter().sum::<f64>();
        let mut draw = self.rng.gen::<f64>() * total;
        if draw < self.vals.x {
            done.push(SITree::Leaf);
            return Some(1);
        }
        draw -= self.vals.x;
        if draw < linear_w {
            let label = forced.unwrap_or_else(|| {
                if self.rng.gen::<bool>() {
                    Label::Plus
                } else {
                    Label::Minus
                }
            });
            let opposite = match label {
                Label::Plus => Label::Minus,
                Label::Minus => Label::Plus,
                Label::Prime(_) => unreachable!(),
            };
            // Seq>=2 of root-restricted objects: geometric length
            let mut m = 2usize;
            while self.rng.gen::<f64>() < self.vals.u {
                m += 1;
                if m > 100_000_000 {
                    return None;
                }
            }
            tasks.push(Task::Finish(label, m));
            for _ in 0..m {
                tasks.push(Task::Obj(Some(opposite.clone())));
            }
            return Some(0);
        }
        draw -= linear_w;
        for (idx, w) in self.vals.prime.iter().enumerate() {
            if draw < *w {
                let j = idx + 4;
                let label = match self.label_pools.get(&j) {
                    Some(pool) => {
                        let q = pool[self.rng.gen_range(0..pool.len())].clone();
                        Label::Prime(PrimeLabel::Perm(q))
                    }
                    None => Label::Prime(PrimeLabel::Opaque(j)),
                };
                tasks.push(Task::Finish(label, j));
                for _ in 0..j {
                    tasks.push(Task::Obj(None));
                }
                return Some(0);
            }
            draw -= *w;
        }
        // float roundoff at the end of the weight line: retry as a leaf
        done.push(SITree::Leaf);
        Some(1)
    }

    /// Rejection-samples until the size lands in the window.
    pub fn sample(&mut self) -> Result<SITree, BoltzmannError> {
        let (lo, hi) = self.config.window();
        while self.attempts < self.config.max_attempts {
            self.attempts += 1;
            if let Some(t) = self.sample_free(hi) {
                let size = t.size();
                if size >= lo && size <= hi {
                    self.accepted += 1;
                    return Ok(t);
                }
            }
        }
        Err(BoltzmannError::BudgetExhausted {
            attempts: self.attempts,
            accepted: self.accepted,
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct SampleStats {
    pub samples: usize,
    pub attempts: usize,
    pub mean_size: f64,
    pub mean_internal: f64,
    pub mean_prime: f64,
    pub mean_sss: f64,
    pub mean_max_arity: f64,
    pub se_internal: f64,
    pub se_prime: f64,
    pub se_sss: f64,
    pub size_histogram: BTreeMap<usize, usize>,
    /// Arities of all internal nodes (linear and prime).
    pub arity_histogram: BTreeMap<usize, usize>,
    /// Arities of prime nodes only.
    pub prime_arity_histogram: BTreeMap<usize, usize>,
}

fn count_prime_arities(tree: &SITree, hist: &mut BTreeMap<usize, usize>) {
    let mut stack = vec![tree];
    while let Some(t) = stack.pop() {
        if let SITree::Internal { label, children } = t {
            if matches!(label, Label::Prime(_)) {
                *hist.entry(children.len()).or_insert(0) += 1;
            }
            stack.extend(children.iter());
        }
    }
}

/// Draws `count` accepted samples and aggregates tree parameters.
pub fn sample_stats(
    config: SamplerConfig,
    simples: &SimpleCounts,
    count: usize,
) -> Result<SampleStats, BoltzmannError> {
    let mut sampler = Sampler::new(config, simples)?;
    let mut stats = SampleStats::default();
    let (mut s_int, mut s_int2) = (0.0f64, 0.0f64);
    let (mut s_pr, mut s_pr2) = (0.0f64, 0.0f64);
    let (mut s_sss, mut s_sss2) = (0.0f64, 0.0f64);
    let mut s_size = 0.0f64;
    let mut s_max = 0.0f64;
    for _ in 0..count {
        let t = sampler.sample()?;
        let params = crate::sit::tree_params(&t);
        let internal = params.internal as f64;
        let prime = params.prime as f64;
        let sss = params.subtree_size_sum as f64;
        s_int += internal;
        s_int2 += internal * internal;
        s_pr += prime;
        s_pr2 += prime * prime;
        s_sss += sss;
        s_sss2 += sss * sss;
        s_size += params.leaves as f64;
        s_max += params.max_prime_arity as f64;
        *stats.size_histogram.entry(params.leaves).or_insert(0) += 1;
        for (&m, &c) in &params.arity {
            *stats.arity_histogram.entry(m).or_insert(0) += c;
        }
        count_prime_arities(&t, &mut stats.prime_arity_histogram);
    }
    let n = count as f64;
    stats.samples = count;
    stats.attempts = sampler.attempts;
    stats.mean_size = s_size / n;
    stats.mean_internal = s_int / n;
    stats.mean_prime = s_pr / n;
    stats.mean_sss = s_sss / n;
    stats.mean_max_arity = s_max / n;
    let se = |sum: f64, sum2: f64| ((sum2 / n - (sum / n).powi(2)).max(0.0) / n).sqrt();
    stats.se_internal = se(s_int, s_int2);
    stats.se_prime = se(s_pr, s_pr2);
    stats.se_sss = se(s_sss, s_sss2);
    Ok(stats)
}

/// Chi-square statistic for observed counts against uniform expectation.
pub fn chi_square_uniform(observed: &[usize]) -> f64 {
    let total: usize = observed.iter().sum();
    let expected = total as f64 / observed.len() as f64;
    observed
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum()
}

/// Upper critical value of the chi-square distribution.
pub fn chi_square_critical(df: usize, p: f64) -> f64 {
    use statrs::distribution::{ChiSquared, ContinuousCDF};
    ChiSquared::new(df as f64).unwrap().inverse_cdf(1.0 - p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::class_series;
    use crate::oracle::all_trees;

    fn counts() -> SimpleCounts {
        SimpleCounts::by_inversion(12)
    }

    fn config(k: usize, x: f64, target: usize, eps: f64, seed: u64) -> SamplerConfig {
        SamplerConfig {
            k,
            x,
            target,
            eps,
            max_attempts: 10_000_000,
            seed,
            labels: LabelMode::Labeled(DEFAULT_LABEL_CEILING),
        }
    }

    #[test]
    fn oracle_evaluation() {
        let s = counts();
        let spec = LambdaSpec::Restricted(4);
        let v = oracle_values(&spec, &s, 0.01).unwrap();
        assert!(v.u > 0.01 && v.u < 0.012);
        let probs = v.p_probabilities();
        assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        // leaf probability tends to 1 as x tends to 0
        let tiny = oracle_values(&spec, &s, 1e-4).unwrap();
        assert!(tiny.p_probabilities()[0] > 0.999);
        assert!(oracle_values(&spec, &s, 0.5).is_err());
        // at the singularity, U approaches tau
        let v = oracle_values(&spec, &s, 0.145472624).unwrap();
        assert!((v.u - 0.2258458016).abs() < 1e-3);
    }

    #[test]
    fn tuning_hits_the_target() {
        let s = counts();
        let spec = LambdaSpec::Restricted(5);
        let x = tune_x(&spec, &s, 0.1364583031, 500).unwrap();
        let e = expected_size(&spec, &s, x).unwrap();
        assert!((e - 500.0).abs() < 5.0, "tuned E[size] = {}", e);
    }

    #[test]
    fn samples_are_valid_and_deterministic() {
        let s = counts();
        let x = tune_x(&LambdaSpec::Restricted(6), &s, 0.1277948168, 80).unwrap();
        let mut a = Sampler::new(config(6, x, 80, 0.3, 42), &s).unwrap();
        let mut b = Sampler::new(config(6, x, 80, 0.3, 42), &s).unwrap();
        for _ in 0..20 {
            let ta = a.sample().unwrap();
            let tb = b.sample().unwrap();
            assert_eq!(ta, tb);
            assert!(ta.validate().is_ok());
            let size = ta.size();
            assert!((56..=104).contains(&size));
        }
    }

    #[test]
    fn window_of_one_yields_the_leaf() {
        let s = counts();
        let mut sm = Sampler::new(config(4, 0.05, 1, 0.5, 7), &s).unwrap();
        assert_eq!(sm.sample().unwrap(), SITree::Leaf);
    }

    #[test]
    fn exact_size_sampling_is_uniform() {
        let s = counts();
        // all 114 trees of size 5 at k = 4, labeled
        let trees = all_trees(5, &LambdaSpec::Restricted(4)).unwrap();
        assert_eq!(trees.len(), 114);
        let index: BTreeMap<_, _> = trees.iter().cloned().zip(0usize..).collect();
        let mut observed = vec![0usize; trees.len()];
        let mut sm = Sampler::new(config(4, 0.09, 5, 0.05, 2024), &s).unwrap();
        let draws = 40_000;
        for _ in 0..draws {
            let t = sm.sample().unwrap();
            observed[index[&t]] += 1;
        }
        let stat = chi_square_uniform(&observed);
        let crit = chi_square_critical(trees.len() - 1, 0.001);
        assert!(stat < crit, "chi-square {} over critical {}", stat, crit);
    }

    #[test]
    fn free_size_distribution_matches_coefficients() {
        let s = counts();
        let spec = LambdaSpec::Restricted(4);
        let x = 0.08;
        let v = oracle_values(&spec, &s, x).unwrap();
        let cs = class_series(&spec, &s, 15).unwrap();
        let mut expected = vec![0.0f64; 16];
        for n in 1..=15usize {
            expected[n] = cs.p.coeff(n).to_f64().unwrap() * x.powi(n as i32) / v.p;
        }
        let mut sm = Sampler::new(config(4, x, 1, 0.5, 99), &s).unwrap();
        let draws = 60_000usize;
        let mut observed = vec![0usize; 16];
        let mut other = 0usize;
        for _ in 0..draws {
            match sm.sample_free(1_000_000) {
                Some(t) => {
                    let n = t.size();
                    if n <= 15 {
                        observed[n] += 1;
                    } else {
                        other += 1;
                    }
                }
                None => other += 1,
            }
        }
        // chi-square against the theoretical law, tail bucket included
        let tail_p = 1.0 - expected[1..].iter().sum::<f64>();
        let mut stat = 0.0;
        let mut df = 0usize;
        for n in 1..=15 {
            let e = expected[n] * draws as f64;
            if e >= 5.0 {
                let d = observed[n] as f64 - e;
                stat += d * d / e;
                df += 1;
            }
        }
        let e_tail = tail_p * draws as f64;
        if e_tail >= 5.0 {
            let d = other as f64 - e_tail;
            stat += d * d / e_tail;
        }
        let crit = chi_square_critical(df, 0.001);
        assert!(stat < crit, "chi-square {} over critical {}", stat, crit);
    }

    #[test]
    fn rejects_bad_configs() {
        let s = counts();
        assert!(Sampler::new(config(4, 1.5, 10, 0.1, 0), &s).is_err());
        let mut c = config(4, 0.1, 10, 0.1, 0);
        c.labels = LabelMode::Labeled(11);
        assert!(Sampler::new(c, &s).is_err());
        let mut c = config(4, 0.1, 10, 0.1, 0);
        c.eps = 0.0;
        assert!(Sampler::new(c, &s).is_err());
    }
}
