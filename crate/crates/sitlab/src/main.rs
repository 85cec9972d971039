//! Command line front end. Every operation of the library is exposed as a
//! subcommand; tabular results default to CSV with headers matching the
//! published table layouts, trees to JSON or DOT.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use sitlab::asymptotics::{
    self, bounds_report, generic_limit_check, parameter_constants, solve_constants,
    stirling_reconciliation,
};
use sitlab::boltzmann::{
    sample_stats, tune_x, LabelMode, Sampler, SamplerConfig, DEFAULT_LABEL_CEILING,
};
use sitlab::enumerate::{class_series, cumulative, Level, Param};
use sitlab::lambda::LambdaSpec;
use sitlab::oracle;
use sitlab::perm::Permutation;
use sitlab::simples::{SimpleCounts, DEFAULT_MAX};
use sitlab::sit::{compose, decompose, from_json, to_dot, to_json};

#[derive(Parser)]
#[command(name = "sitlab", version, about = "strong interval tree laboratory")]
struct Cli {
    /// Optional key=value defaults file; explicit flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: csv, json, dot or text (where applicable).
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Significant digits for decimal rendering.
    #[arg(long, global = true)]
    digits: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counts of simple permutations s_n.
    Simples(SimplesArgs),
    /// Exact class counts U^(k)_n / P^(k)_n.
    Count(CountArgs),
    /// Certified constants tau_k, rho_k and friends.
    Constants(ConstantsArgs),
    /// Numeric evaluation of the tail-bound inequalities.
    Bounds(BoundsArgs),
    /// Truncation limits for a generic polynomial grammar.
    LimitCheck(LimitCheckArgs),
    /// Permutation to strong interval tree.
    Decompose(DecomposeArgs),
    /// Strong interval tree to permutation.
    Compose(ComposeArgs),
    /// Exact cumulative parameter tables and means.
    StatsExact(StatsExactArgs),
    /// Random trees from the Boltzmann generator.
    Sample(SampleArgs),
    /// Aggregate statistics over Boltzmann samples.
    SampleStats(SampleStatsArgs),
    /// Brute-force cross-validation of the exact machinery.
    Verify(VerifyArgs),
    /// Factorial reconciliation of the upper-bound estimate.
    Stirling(StirlingArgs),
}

#[derive(Args)]
struct SimplesArgs {
    #[arg(long)]
    n_max: Option<usize>,
    /// Cross-check small counts against brute-force enumeration.
    #[arg(long)]
    brute_check: bool,
}

#[derive(Args)]
struct CountArgs {
    /// Class: an integer k >= 4, "schroeder", or "full".
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    /// "p" (permutation level) or "u" (root-restricted).
    #[arg(long)]
    level: Option<String>,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Range "lo..hi" inclusive, or a single k.
    #[arg(long)]
    k_range: Option<String>,
    #[arg(long)]
    eps: Option<f64>,
    /// Also emit the parameter constants of each k.
    #[arg(long)]
    params: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    k_range: Option<String>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Size at which the explicit upper-bound estimate is evaluated.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args)]
struct LimitCheckArgs {
    /// "seq" for x^2/(1-x), "x2" for x^2, or comma-separated coefficients.
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Permutation as "2 4 1 3" (or comma separated).
    perm: String,
}

#[derive(Args)]
struct ComposeArgs {
    /// Tree JSON; "-" reads stdin.
    tree: String,
}

#[derive(Args)]
struct StatsExactArgs {
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    n_max: Option<usize>,
    /// internal | prime | sss | arity:K
    #[arg(long)]
    param: Option<String>,
    #[arg(long)]
    level: Option<String>,
}

#[derive(Args, Clone)]
struct SampleArgs {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Control parameter; tuned from the target size when omitted.
    #[arg(long)]
    x: Option<f64>,
    /// "skeleton" or a labeling arity ceiling.
    #[arg(long)]
    labels: Option<String>,
    #[arg(long)]
    max_attempts: Option<usize>,
}

#[derive(Args)]
struct SampleStatsArgs {
    #[command(flatten)]
    sample: SampleArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n_max: Option<usize>,
}

#[derive(Args)]
struct StirlingArgs {
    /// Comma-separated sizes.
    #[arg(long)]
    n_list: Option<String>,
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn usage<T: std::fmt::Display>(m: T) -> CliError {
    CliError::Usage(m.to_string())
}

fn domain<T: std::fmt::Display>(m: T) -> CliError {
    CliError::Domain(m.to_string())
}

type Config = BTreeMap<String, String>;

fn load_config(path: &Option<PathBuf>) -> Result<Config, CliError> {
    let mut map = Config::new();
    if let Some(p) = path {
        let text = std::fs::read_to_string(p)
            .map_err(|e| usage(format!("cannot read config {}: {}", p.display(), e)))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line without '=': {}", line)))?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
    }
    Ok(map)
}

fn merge<T: FromStr>(opt: Option<T>, cfg: &Config, key: &str) -> Result<Option<T>, CliError> {
    if opt.is_some() {
        return Ok(opt);
    }
    match cfg.get(key) {
        Some(raw) => raw
            .parse::<T>()
            .map(Some)
            .map_err(|_| usage(format!("config value for '{}' does not parse", key))),
        None => Ok(None),
    }
}

fn parse_spec(s: &str) -> Result<LambdaSpec, CliError> {
    match s {
        "schroeder" | "sep" => Ok(LambdaSpec::Schroeder),
        "full" | "inf" => Ok(LambdaSpec::Full),
        other => {
            let k: usize = other
                .parse()
                .map_err(|_| usage(format!("bad class '{}': expected k, schroeder or full", other)))?;
            if k < 4 {
                Ok(LambdaSpec::Schroeder)
            } else {
                Ok(LambdaSpec::Restricted(k))
            }
        }
    }
}

fn parse_level(s: &str) -> Result<Level, CliError> {
    match s {
        "p" | "P" => Ok(Level::P),
        "u" | "U" => Ok(Level::U),
        other => Err(usage(format!("bad level '{}': expected p or u", other))),
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a.parse().map_err(|_| usage("bad range start"))?;
        let hi = b.trim_start_matches('=').parse().map_err(|_| usage("bad range end"))?;
        if lo > hi {
            return Err(usage("empty range"));
        }
        Ok((lo, hi))
    } else {
        let k = s.parse().map_err(|_| usage("bad k value"))?;
        Ok((k, k))
    }
}

fn parse_param(s: &str) -> Result<Param, CliError> {
    match s {
        "internal" => Ok(Param::Internal),
        "prime" => Ok(Param::Prime),
        "sss" | "subtree-size-sum" => Ok(Param::SubtreeSizeSum),
        other => {
            if let Some(rest) = other.strip_prefix("arity:") {
                let kappa: usize = rest.parse().map_err(|_| usage("bad arity parameter"))?;
                Ok(Param::Arity(kappa))
            } else {
                Err(usage(format!(
                    "bad parameter '{}': expected internal, prime, sss or arity:K",
                    other
                )))
            }
        }
    }
}

fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", x);
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

struct Output {
    format: String,
    out: Option<PathBuf>,
    digits: usize,
}

impl Output {
    fn emit(&self, content: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => std::fs::write(p, content)
                .map_err(|e| domain(format!("cannot write {}: {}", p.display(), e))),
            None => {
                print!("{}", content);
                Ok(())
            }
        }
    }

    fn sig(&self, x: f64) -> String {
        format_sig(x, self.digits)
    }
}

/// Renders rows either as CSV (default), JSON records, or aligned text.
fn emit_table(output: &Output, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let rendered = match output.format.as_str() {
        "csv" => {
            let mut s = header.join(",");
            s.push('\n');
            for row in rows {
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        "json" => {
            let records: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (name, value) in header.iter().zip(row) {
                        let v = value
                            .parse::<i64>()
                            .map(serde_json::Value::from)
                            .or_else(|_| value.parse::<f64>().map(serde_json::Value::from))
                            .unwrap_or_else(|_| serde_json::Value::from(value.clone()));
                        obj.insert(name.to_string(), v);
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            format!("{}\n", serde_json::Value::from(records))
        }
        "text" => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let mut s = String::new();
            for (h, w) in header.iter().zip(&widths) {
                s.push_str(&format!("{:w$}  ", h, w = w));
            }
            s.push('\n');
            for row in rows {
                for (cell, w) in row.iter().zip(&widths) {
                    s.push_str(&format!("{:w$}  ", cell, w = w));
                }
                s.push('\n');
            }
            s
        }
        other => return Err(usage(format!("format '{}' not valid for tables", other))),
    };
    output.emit(&rendered)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sitlab: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = load_config(&cli.config)?;
    let format = merge(cli.format, &cfg, "format")?.unwrap_or_else(|| "csv".to_string());
    let digits = merge(cli.digits, &cfg, "digits")?.unwrap_or(10);
    let output = Output {
        format,
        out: cli.out,
        digits,
    };
    match cli.cmd {
        Cmd::Simples(a) => cmd_simples(a, &cfg, &output),
        Cmd::Count(a) => cmd_count(a, &cfg, &output),
        Cmd::Constants(a) => cmd_constants(a, &cfg, &output),
        Cmd::Bounds(a) => cmd_bounds(a, &cfg, &output),
        Cmd::LimitCheck(a) => cmd_limit_check(a, &cfg, &output),
        Cmd::Decompose(a) => cmd_decompose(a, &output),
        Cmd::Compose(a) => cmd_compose(a, &output),
        Cmd::StatsExact(a) => cmd_stats_exact(a, &cfg, &output),
        Cmd::Sample(a) => cmd_sample(a, &cfg, &output),
        Cmd::SampleStats(a) => cmd_sample_stats(a.sample, &cfg, &output),
        Cmd::Verify(a) => cmd_verify(a, &cfg, &output),
        Cmd::Stirling(a) => cmd_stirling(a, &cfg, &output),
    }
}

fn cmd_simples(a: SimplesArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let n_max = merge(a.n_max, cfg, "n-max")?.unwrap_or(20);
    if n_max > DEFAULT_MAX {
        return Err(domain(format!("n-max {} above supported {}", n_max, DEFAULT_MAX)));
    }
    let counts = SimpleCounts::by_inversion(n_max);
    if a.brute_check {
        for n in 4..=n_max.min(8) {
            let brute = sitlab::simples::enumerate_simples(n)
                .map_err(|e| domain(e))?
                .len();
            if &BigInt::from(brute) != counts.get(n) {
                return Err(domain(format!("brute-force mismatch at n = {}", n)));
            }
        }
    }
    let rows: Vec<Vec<String>> = (4..=n_max)
        .map(|n| vec![n.to_string(), counts.get(n).to_string()])
        .collect();
    emit_table(output, &["n", "s_n"], &rows)
}

fn cmd_count(a: CountArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let spec = parse_spec(&merge(a.k, cfg, "k")?.unwrap_or_else(|| "full".into()))?;
    let n_max = merge(a.n_max, cfg, "n-max")?.unwrap_or(10);
    let level = parse_level(&merge(a.level, cfg, "level")?.unwrap_or_else(|| "p".into()))?;
    let simples = SimpleCounts::by_inversion(n_max);
    let cs = class_series(&spec, &simples, n_max).map_err(|e| domain(e))?;
    let series = match level {
        Level::P => &cs.p,
        Level::U => &cs.u,
    };
    let rows: Vec<Vec<String>> = (1..=n_max)
        .map(|n| vec![n.to_string(), series.coeff(n).to_string()])
        .collect();
    emit_table(output, &["n", "count"], &rows)
}

fn eps_rational(eps: f64) -> BigRational {
    BigRational::from_float(eps).unwrap_or_else(asymptotics::default_eps)
}

fn cmd_constants(a: ConstantsArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let (lo, hi) = parse_range(&merge(a.k_range, cfg, "k-range")?.unwrap_or_else(|| "4..13".into()))?;
    if lo < 4 {
        return Err(domain("constants need k >= 4 (use limit-check for generic grammars)"));
    }
    let eps = eps_rational(merge(a.eps, cfg, "eps")?.unwrap_or(1e-12));
    let simples = SimpleCounts::by_inversion(hi);
    let mut rows = Vec::new();
    let mut header: Vec<&str> = vec!["k", "tau_k", "rho_k"];
    if a.params {
        header.extend(["internal", "prime", "sss", "beta_k", "gamma_k"]);
    }
    for k in lo..=hi {
        let c = solve_constants(&LambdaSpec::Restricted(k), &simples, &eps)
            .map_err(|e| domain(e))?;
        let mut row = vec![
            k.to_string(),
            output.sig(c.tau.mid_f64()),
            output.sig(c.rho.mid_f64()),
        ];
        if a.params {
            let pc = parameter_constants(&c, &simples).map_err(|e| domain(e))?;
            row.extend([
                output.sig(pc.internal),
                output.sig(pc.prime),
                output.sig(pc.sss),
                output.sig(c.beta_mid()),
                output.sig(c.gamma_mid()),
            ]);
        }
        rows.push(row);
    }
    emit_table(output, &header, &rows)
}

fn cmd_bounds(a: BoundsArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let (lo, hi) = parse_range(&merge(a.k_range, cfg, "k-range")?.unwrap_or_else(|| "4..30".into()))?;
    if lo < 4 {
        return Err(domain("bounds need k >= 4"));
    }
    let alpha = merge(a.alpha, cfg, "alpha")?.unwrap_or(0.58);
    let beta = merge(a.beta, cfg, "beta")?.unwrap_or(8.0);
    let n = merge(a.n, cfg, "n")?.unwrap_or(50);
    let eps = asymptotics::default_eps();
    let simples = SimpleCounts::by_inversion(hi.max(4));
    let mut rows = Vec::new();
    for k in lo..=hi {
        let c = solve_constants(&LambdaSpec::Restricted(k), &simples, &eps)
            .map_err(|e| domain(e))?;
        let r = bounds_report(k, &simples, &c, alpha, beta, n);
        rows.push(vec![
            k.to_string(),
            r.s_bound.holds.to_string(),
            r.s_bracket.3.to_string(),
            r.prop2_lower.holds.to_string(),
            r.prop2_upper.holds.to_string(),
            r.e_over_k.holds.to_string(),
            r.rho_lower.holds.to_string(),
            r.rho_upper.holds.to_string(),
            output.sig(r.k_term),
            output.sig(r.beta_empirical),
            output.sig(r.a_k),
            output.sig(r.b_k),
            output.sig(r.rho_k_over_e),
            output.sig(r.residual),
            output.sig(r.ln_upper_at_n),
        ]);
    }
    emit_table(
        output,
        &[
            "k",
            "s_bound",
            "s_bracket",
            "prop2_lower",
            "prop2_upper",
            "e_over_k",
            "rho_lower",
            "rho_upper",
            "k_term",
            "beta_emp",
            "A_k",
            "B_k",
            "rho_k_k_over_e",
            "residual",
            "ln_upper",
        ],
        &rows,
    )
}

fn cmd_limit_check(a: LimitCheckArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let which = merge(a.lambda, cfg, "lambda")?.unwrap_or_else(|| "seq".into());
    let k_max = merge(a.k_max, cfg, "k-max")?.unwrap_or(60);
    let eps = eps_rational(merge(a.eps, cfg, "eps")?.unwrap_or(1e-12));
    let coeffs: Vec<BigInt> = match which.as_str() {
        "seq" => {
            let mut v = vec![BigInt::zero(), BigInt::zero()];
            v.extend(std::iter::repeat(BigInt::one()).take(k_max.max(2) - 1));
            v
        }
        "x2" => vec![BigInt::zero(), BigInt::zero(), BigInt::one()],
        list => list
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage("bad lambda coefficient list"))?,
    };
    let rows: Vec<Vec<String>> = generic_limit_check(&coeffs, k_max, &eps)
        .into_iter()
        .map(|(k, tau, rho)| vec![k.to_string(), output.sig(tau), output.sig(rho)])
        .collect();
    emit_table(output, &["k", "tau_k", "rho_k"], &rows)
}

fn emit_tree(output: &Output, tree: &sitlab::sit::SITree) -> Result<(), CliError> {
    match output.format.as_str() {
        "json" | "csv" => output.emit(&format!("{}\n", to_json(tree))),
        "dot" => output.emit(&to_dot(tree)),
        "text" => output.emit(&format!("{:?}\n", tree)),
        other => Err(usage(format!("format '{}' not valid for trees", other))),
    }
}

fn cmd_decompose(a: DecomposeArgs, output: &Output) -> Result<(), CliError> {
    let p: Permutation = a.perm.parse().map_err(|e| domain(e))?;
    emit_tree(output, &decompose(&p))
}

fn cmd_compose(a: ComposeArgs, output: &Output) -> Result<(), CliError> {
    let text = if a.tree == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| domain(e))?;
        buf
    } else {
        a.tree
    };
    let value: serde_json::Value =
        serde_json::from_str(text.trim()).map_err(|e| domain(format!("bad tree JSON: {}", e)))?;
    let tree = from_json(&value).map_err(|e| domain(e))?;
    let p = compose(&tree).map_err(|e| domain(e))?;
    output.emit(&format!("{}\n", p))
}

fn cmd_stats_exact(a: StatsExactArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let spec = parse_spec(&merge(a.k, cfg, "k")?.unwrap_or_else(|| "full".into()))?;
    let n_max = merge(a.n_max, cfg, "n-max")?.unwrap_or(10);
    let param = parse_param(&merge(a.param, cfg, "param")?.unwrap_or_else(|| "internal".into()))?;
    let level = parse_level(&merge(a.level, cfg, "level")?.unwrap_or_else(|| "p".into()))?;
    let simples = SimpleCounts::by_inversion(n_max);
    let cs = class_series(&spec, &simples, n_max).map_err(|e| domain(e))?;
    let counts = match level {
        Level::P => &cs.p,
        Level::U => &cs.u,
    };
    let cum = cumulative(&spec, &simples, param, level, n_max).map_err(|e| domain(e))?;
    let rows: Vec<Vec<String>> = (1..=n_max)
        .map(|n| {
            let count = counts.coeff(n);
            let total = cum.coeff(n);
            let mean = if count.is_zero() {
                "0".to_string()
            } else {
                let m = BigRational::new(total.clone(), count.clone());
                output.sig(m.to_f64().unwrap_or(f64::NAN))
            };
            vec![n.to_string(), count.to_string(), total.to_string(), mean]
        })
        .collect();
    emit_table(output, &["n", "count", "cumulative", "mean"], &rows)
}

struct ResolvedSample {
    config: SamplerConfig,
    count: usize,
    simples: SimpleCounts,
}

fn resolve_sample(a: SampleArgs, cfg: &Config) -> Result<ResolvedSample, CliError> {
    let k = merge(a.k, cfg, "k")?.unwrap_or(7);
    let target = merge(a.size, cfg, "size")?.unwrap_or(1000);
    let eps = merge(a.eps, cfg, "eps")?.unwrap_or(0.1);
    let count = merge(a.count, cfg, "count")?.unwrap_or(1);
    let seed = match merge(a.seed, cfg, "seed")? {
        Some(s) => s,
        None => {
            let s: u64 = rand::random();
            eprintln!("seed: {}", s);
            s
        }
    };
    let max_attempts = merge(a.max_attempts, cfg, "max-attempts")?.unwrap_or(10_000_000);
    let labels = match merge(a.labels, cfg, "labels")?.as_deref() {
        None => LabelMode::Labeled(DEFAULT_LABEL_CEILING),
        Some("skeleton") => LabelMode::Skeleton,
        Some(v) => LabelMode::Labeled(
            v.parse()
                .map_err(|_| usage("labels must be 'skeleton' or an arity ceiling"))?,
        ),
    };
    let simples = SimpleCounts::by_inversion(k.max(4));
    let spec = if k >= 4 {
        LambdaSpec::Restricted(k)
    } else {
        LambdaSpec::Schroeder
    };
    let x = match merge(a.x, cfg, "x")? {
        Some(x) => x,
        None => {
            let c = solve_constants(&spec, &simples, &asymptotics::default_eps())
                .map_err(|e| domain(e))?;
            tune_x(&spec, &simples, c.rho.mid_f64(), target).map_err(|e| domain(e))?
        }
    };
    Ok(ResolvedSample {
        config: SamplerConfig {
            k,
            x,
            target,
            eps,
            max_attempts,
            seed,
            labels,
        },
        count,
        simples,
    })
}

fn cmd_sample(a: SampleArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let r = resolve_sample(a, cfg)?;
    let mut sampler = Sampler::new(r.config.clone(), &r.simples).map_err(|e| domain(e))?;
    let mut trees = Vec::new();
    for _ in 0..r.count {
        trees.push(sampler.sample().map_err(|e| domain(e))?);
    }
    match output.format.as_str() {
        "dot" => {
            let mut s = String::new();
            for t in &trees {
                s.push_str(&format!("// seed {} size {}\n", r.config.seed, t.size()));
                s.push_str(&to_dot(t));
            }
            output.emit(&s)
        }
        "json" | "csv" | "text" => {
            let doc = serde_json::json!({
                "seed": r.config.seed,
                "k": r.config.k,
                "x": r.config.x,
                "attempts": sampler.attempts,
                "trees": trees
                    .iter()
                    .map(to_json)
                    .collect::<Vec<_>>(),
            });
            output.emit(&format!("{}\n", doc))
        }
        other => Err(usage(format!("format '{}' not valid for samples", other))),
    }
}

fn cmd_sample_stats(a: SampleArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let r = resolve_sample(a, cfg)?;
    let count = r.count.max(2);
    let spec = if r.config.k >= 4 {
        LambdaSpec::Restricted(r.config.k)
    } else {
        LambdaSpec::Schroeder
    };
    let consts = solve_constants(&spec, &r.simples, &asymptotics::default_eps())
        .map_err(|e| domain(e))?;
    let pc = parameter_constants(&consts, &r.simples).map_err(|e| domain(e))?;
    let st = sample_stats(r.config.clone(), &r.simples, count).map_err(|e| domain(e))?;
    eprintln!(
        "seed {} samples {} attempts {} mean size {:.1}",
        r.config.seed, st.samples, st.attempts, st.mean_size
    );
    let density = |mean: f64| mean / st.mean_size;
    let rows = vec![
        ("internal_density", density(st.mean_internal), pc.internal),
        ("prime_density", density(st.mean_prime), pc.prime),
        (
            "sss_normalized",
            st.mean_sss / st.mean_size.powf(1.5),
            pc.sss,
        ),
    ];
    let table: Vec<Vec<String>> = rows
        .into_iter()
        .map(|(name, emp, theo)| {
            vec![
                name.to_string(),
                output.sig(emp),
                output.sig(theo),
                output.sig((emp - theo).abs() / theo.abs()),
            ]
        })
        .collect();
    emit_table(
        output,
        &["parameter", "empirical", "theoretical", "relative_error"],
        &table,
    )
}

fn cmd_verify(a: VerifyArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let n_max = merge(a.n_max, cfg, "n-max")?.unwrap_or(7);
    if n_max > oracle::ORACLE_CEILING {
        return Err(domain(format!(
            "verify is exhaustive; n-max {} above ceiling {}",
            n_max,
            oracle::ORACLE_CEILING
        )));
    }
    let simples = SimpleCounts::by_inversion(n_max.max(4));
    let specs = [
        ("schroeder".to_string(), LambdaSpec::Schroeder),
        ("4".to_string(), LambdaSpec::Restricted(4)),
        ("5".to_string(), LambdaSpec::Restricted(5)),
        ("full".to_string(), LambdaSpec::Full),
    ];
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (name, spec) in &specs {
        let cs = class_series(spec, &simples, n_max).map_err(|e| domain(e))?;
        for n in 1..=n_max {
            let o = oracle::exhaustive(n, spec).map_err(|e| domain(e))?;
            let count_ok = cs.p.coeff(n) == &BigInt::from(o.count_p)
                && cs.u.coeff(n) == &BigInt::from(o.count_u);
            let int_ok = cumulative(spec, &simples, Param::Internal, Level::P, n)
                .map(|s| s.coeff(n) == &BigInt::from(o.internal_p))
                .unwrap_or(false);
            let prime_ok = cumulative(spec, &simples, Param::Prime, Level::P, n)
                .map(|s| s.coeff(n) == &BigInt::from(o.prime_p))
                .unwrap_or(false);
            let sss_ok = cumulative(spec, &simples, Param::SubtreeSizeSum, Level::P, n)
                .map(|s| s.coeff(n) == &BigInt::from(o.sss_p))
                .unwrap_or(false);
            let ok = count_ok && int_ok && prime_ok && sss_ok;
            all_ok &= ok;
            rows.push(vec![
                name.clone(),
                n.to_string(),
                count_ok.to_string(),
                int_ok.to_string(),
                prime_ok.to_string(),
                sss_ok.to_string(),
                if ok { "pass".into() } else { "FAIL".into() },
            ]);
        }
    }
    emit_table(
        output,
        &["k", "n", "counts", "internal", "prime", "sss", "status"],
        &rows,
    )?;
    if all_ok {
        Ok(())
    } else {
        Err(domain("oracle verification failed"))
    }
}

fn cmd_stirling(a: StirlingArgs, cfg: &Config, output: &Output) -> Result<(), CliError> {
    let list = merge(a.n_list, cfg, "n-list")?.unwrap_or_else(|| "10,30,100,300,1000".into());
    let ns: Vec<usize> = list
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage("bad n list"))?;
    if ns.iter().any(|&n| n < 5) {
        return Err(domain("stirling reconciliation needs n >= 5"));
    }
    let rows: Vec<Vec<String>> = ns
        .into_iter()
        .map(|n| {
            let row = stirling_reconciliation(n);
            vec![
                n.to_string(),
                output.sig(row.ln_factorial),
                output.sig(row.ln_estimate),
                output.sig(row.ratio),
            ]
        })
        .collect();
    emit_table(output, &["n", "ln_factorial", "ln_estimate", "ratio"], &rows)
}
