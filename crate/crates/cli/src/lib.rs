//! Command-line front end: argument model, execution and the JSON-lines cache.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sumfree_core::constructions::{
    complete_to_maximal, family_text, CeFamilySpec, FamilyKind, QuarterFamilySpec,
};
use sumfree_core::enumerate::{
    count_maximal_sum_free, count_sum_free, growth_csv, growth_json, oracle_count, Algorithm,
    EnumerationConfig, EnumerationReport, GrowthRow, Mode, GROWTH_CSV_HEADER,
};
use sumfree_core::groundset::{is_sum_free, GroundInterval, IntSet};
use sumfree_core::structure::{container_case, dfst_classify};
use sumfree_core::verify::{run_suite, Suite, DEFAULT_SEED};
use sumfree_core::BigUint;

pub const CACHE_ENV: &str = "SUMFREE_CACHE";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] sumfree_core::Error),
    #[error("io: {0}")]
    Io(#[from] io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(sumfree_core::Error::ResourceLimit { .. }) => 3,
            CliError::Core(_) | CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "sumfree", version, about = "Sum-free subsets of [1..n]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Oracle,
    Backtracking,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Oracle => Algorithm::Oracle,
            AlgorithmArg::Backtracking => Algorithm::Backtracking,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Ce,
    Quarter,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// JSON-lines result cache.
    #[arg(long, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: u16,
}

#[derive(Clone, Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    /// Count maximal sum-free sets instead of all sum-free sets.
    #[arg(long)]
    pub maximal: bool,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Backtracking)]
    pub algorithm: AlgorithmArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact f(n), or f_max(n) with --maximal.
    Count(CountArgs),
    /// List the sets in ascending order.
    Enumerate(CountArgs),
    /// Run a named invariant suite.
    Verify {
        #[arg(value_parser = suite_name)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Stream a lower-bound family and certify its distinct maximal completions.
    Construct {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Structure flags and the large-set case diagnostic of one set.
    Classify {
        /// Comma-separated elements.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Ground set size; defaults to the largest element.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.2)]
        epsilon: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Table of f(n), f_max(n) and log2(f_max)/n.
    Growth {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn suite_name(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

/// Cache key. Records with an equal key supersede earlier ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub command: String,
    pub n: usize,
    pub mode: String,
    pub algorithm: String,
    pub version: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    pub value: serde_json::Value,
    pub timestamp: u64,
}

/// Append-only JSON-lines store.
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Self { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Latest value stored under `key`. Unreadable lines are skipped.
    pub fn get(&self, key: &CacheKey) -> CliResult<Option<serde_json::Value>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let mut found = None;
        for line in BufReader::new(file).lines() {
            let line = line?;
            if let Ok(rec) = serde_json::from_str::<CacheRecord>(&line) {
                if &rec.key == key {
                    found = Some(rec.value);
                }
            }
        }
        Ok(found)
    }

    pub fn put(&self, key: CacheKey, value: serde_json::Value) -> CliResult<()> {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let rec = CacheRecord {
            key,
            value,
            timestamp,
        };
        let mut line = serde_json::to_string(&rec)?;
        line.push('\n');
        let mut f = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }
}

/// Output of `count`. Elapsed time is left out so output is reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub n: usize,
    pub mode: String,
    pub algorithm: String,
    /// Decimal string; counts can exceed `u64`.
    pub count: String,
    pub nodes_explored: u64,
    pub cached: bool,
}

fn mode_name(maximal: bool) -> &'static str {
    if maximal {
        "maximal_sum_free"
    } else {
        "all_sum_free"
    }
}

fn algorithm_name(a: AlgorithmArg) -> &'static str {
    match a {
        AlgorithmArg::Oracle => "oracle",
        AlgorithmArg::Backtracking => "backtracking",
    }
}

fn enumeration_config(common: &Common) -> EnumerationConfig {
    EnumerationConfig::with_workers(common.workers as usize)
}

fn run_count(
    n: usize,
    maximal: bool,
    algorithm: AlgorithmArg,
    emit: bool,
    cfg: &EnumerationConfig,
) -> CliResult<EnumerationReport> {
    let g = GroundInterval::new(n)?;
    let report = match (maximal, algorithm) {
        (true, a) => count_maximal_sum_free(g, a.into(), emit, cfg)?,
        (false, AlgorithmArg::Backtracking) => count_sum_free(g, emit, cfg)?,
        (false, AlgorithmArg::Oracle) => oracle_count(g, Mode::AllSumFree, emit, cfg)?,
    };
    Ok(report)
}

/// Count, served from the cache when a matching record exists.
pub fn cached_count(
    n: usize,
    maximal: bool,
    algorithm: AlgorithmArg,
    common: &Common,
) -> CliResult<CountOutput> {
    let key = CacheKey {
        command: "count".into(),
        n,
        mode: mode_name(maximal).into(),
        algorithm: algorithm_name(algorithm).into(),
        version: VERSION.into(),
    };
    let cache = common.cache.as_ref().map(Cache::new);
    if let Some(cache) = &cache {
        if let Some(v) = cache.get(&key)? {
            if let Ok(mut out) = serde_json::from_value::<CountOutput>(v) {
                out.nodes_explored = 0;
                out.cached = true;
                return Ok(out);
            }
        }
    }
    let report = run_count(n, maximal, algorithm, false, &enumeration_config(common))?;
    let out = CountOutput {
        n,
        mode: key.mode.clone(),
        algorithm: key.algorithm.clone(),
        count: report.count.to_string(),
        nodes_explored: report.nodes_explored,
        cached: false,
    };
    if let Some(cache) = &cache {
        cache.put(key, serde_json::to_value(&out)?)?;
    }
    Ok(out)
}

/// What a command produced: the bytes for stdout and the process exit status.
pub struct Outcome {
    pub stdout: String,
    pub status: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, status: 0 }
    }
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_line<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

pub fn execute(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Count(a) => {
            let out = cached_count(a.n, a.maximal, a.algorithm, &a.common)?;
            let text = match a.common.format {
                Format::Text => format!("{}\n", out.count),
                Format::Json => json_line(&out)?,
                Format::Csv => csv_string(
                    &["n", "mode", "algorithm", "count", "nodes_explored", "cached"],
                    &[vec![
                        out.n.to_string(),
                        out.mode.clone(),
                        out.algorithm.clone(),
                        out.count.clone(),
                        out.nodes_explored.to_string(),
                        out.cached.to_string(),
                    ]],
                )?,
            };
            Ok(Outcome::ok(text))
        }
        Command::Enumerate(a) => {
            let report = run_count(a.n, a.maximal, a.algorithm, true, &enumeration_config(&a.common))?;
            let sets = report.sets.unwrap_or_default();
            let text = match a.common.format {
                Format::Text => sets.iter().map(|s| format!("{s}\n")).collect(),
                Format::Json => json_line(&serde_json::json!({
                    "n": a.n,
                    "mode": mode_name(a.maximal),
                    "count": report.count.to_string(),
                    "sets": sets,
                }))?,
                Format::Csv => {
                    let rows: Vec<Vec<String>> = sets.iter().map(|s| vec![s.to_string()]).collect();
                    csv_string(&["set"], &rows)?
                }
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify {
            suite,
            n,
            trials,
            seed,
            common,
        } => {
            let mut params = suite.default_params();
            params.n = n.unwrap_or(params.n);
            params.trials = trials.unwrap_or(params.trials);
            params.seed = seed;
            let report = run_suite(suite, params)?;
            let text = match common.format {
                Format::Json => json_line(&report)?,
                Format::Text | Format::Csv => report.summary(),
            };
            Ok(Outcome {
                stdout: text,
                status: if report.passed() { 0 } else { 1 },
            })
        }
        Command::Construct { family, n, common } => construct(family, n, &common),
        Command::Classify {
            set,
            n,
            epsilon,
            common,
        } => classify(&set, n, epsilon, &common),
        Command::Growth { from, to, common } => growth(from, to, &common),
    }
}

fn construct(family: FamilyArg, n: usize, common: &Common) -> CliResult<Outcome> {
    let g = GroundInterval::new(n)?;
    let (kind, members): (FamilyKind, Vec<IntSet>) = match family {
        FamilyArg::Ce => (FamilyKind::Ce, CeFamilySpec::new(g)?.members().collect()),
        FamilyArg::Quarter => (
            FamilyKind::Quarter,
            QuarterFamilySpec::new(g)?.members().collect(),
        ),
    };
    let mut completions = Vec::with_capacity(members.len());
    for m in &members {
        completions.push(complete_to_maximal(m, g)?);
    }
    let all_sum_free = members.iter().all(is_sum_free);
    let mut distinct = completions.clone();
    distinct.sort();
    distinct.dedup();
    let size = members.len() as u128;
    let text = match common.format {
        Format::Text => {
            let mut s = family_text(kind, n, size, &members);
            s.push_str(&format!(
                "sum_free={all_sum_free} distinct_maximal={} lower_bound={}\n",
                distinct.len(),
                1u128 << (n / 4)
            ));
            s
        }
        Format::Json => json_line(&serde_json::json!({
            "family": kind,
            "n": n,
            "size": size,
            "members": members,
            "sum_free": all_sum_free,
            "distinct_maximal": distinct.len(),
        }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = members
                .iter()
                .zip(&completions)
                .map(|(m, c)| vec![m.to_string(), c.to_string()])
                .collect();
            csv_string(&["member", "maximal_completion"], &rows)?
        }
    };
    Ok(Outcome::ok(text))
}

fn classify(set: &str, n: Option<usize>, epsilon: f64, common: &Common) -> CliResult<Outcome> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(CliError::Usage(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let n = match n {
        Some(n) => n,
        None => largest_element(set)?
            .ok_or_else(|| CliError::Usage("--n is required for the empty set".into()))?,
    };
    let g = GroundInterval::new(n)?;
    let a = IntSet::parse(set, n)?;
    let class = dfst_classify(&a, g);
    let case = container_case(&a, g, epsilon);
    let sum_free = is_sum_free(&a);
    let text = match common.format {
        Format::Text => format!(
            "set={a} n={n} sum_free={sum_free}\n\
             alt_small={} alt_odd={} alt_min={}\n\
             gamma={:.6} low_part={} even_part={} case_a={} case_b={} schur_triples={}\n",
            class.alt_small,
            class.alt_odd,
            class.alt_min,
            case.gamma,
            case.low_part,
            case.even_part,
            case.case_a,
            case.case_b,
            case.schur_triples
        ),
        Format::Json => json_line(&serde_json::json!({
            "n": n,
            "set": a,
            "sum_free": sum_free,
            "structure": class,
            "case": case,
        }))?,
        Format::Csv => csv_string(
            &[
                "set", "n", "sum_free", "alt_small", "alt_odd", "alt_min", "gamma", "low_part",
                "even_part", "case_a", "case_b", "schur_triples",
            ],
            &[vec![
                a.to_string(),
                n.to_string(),
                sum_free.to_string(),
                class.alt_small.to_string(),
                class.alt_odd.to_string(),
                class.alt_min.to_string(),
                format!("{:.6}", case.gamma),
                case.low_part.to_string(),
                case.even_part.to_string(),
                case.case_a.to_string(),
                case.case_b.to_string(),
                case.schur_triples.to_string(),
            ]],
        )?,
    };
    Ok(Outcome::ok(text))
}

fn largest_element(set: &str) -> CliResult<Option<usize>> {
    let mut best = None;
    for tok in set.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok
            .parse()
            .map_err(|_| CliError::Usage(format!("bad element {tok:?}")))?;
        best = best.max(Some(v));
    }
    Ok(best)
}

fn growth(from: usize, to: usize, common: &Common) -> CliResult<Outcome> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "growth range {from}..={to} must satisfy 1 <= from <= to"
        )));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        let f = cached_count(n, false, AlgorithmArg::Backtracking, common)?;
        let fmax = cached_count(n, true, AlgorithmArg::Backtracking, common)?;
        let parse = |s: &str| {
            s.parse::<BigUint>()
                .map_err(|_| CliError::Usage(format!("bad cached count {s:?}")))
        };
        rows.push(GrowthRow::new(n, &parse(&f.count)?, &parse(&fmax.count)?));
    }
    let text = match common.format {
        Format::Csv => growth_csv(&rows),
        Format::Json => format!("{}\n", growth_json(&rows)),
        Format::Text => {
            let mut s = format!(
                "{:>3} {:>14} {:>10} {:>16}\n",
                GROWTH_CSV_HEADER[0], GROWTH_CSV_HEADER[1], GROWTH_CSV_HEADER[2], GROWTH_CSV_HEADER[3]
            );
            for r in &rows {
                s.push_str(&format!("{:>3} {:>14} {:>10} {:>16}\n", r.n, r.f, r.fmax, r.ratio_text()));
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}
