//! Benchmark harness: a flat `key = value` config expands to a list of
//! instances, each solved with every listed formulation, and the results go
//! out as CSV.
//!
//! ```text
//! time_limit = 60          # seconds per solve
//! repetitions = 3          # elapsed is the mean over repetitions
//! formulations = f1,f1-min,f2,oracle
//! seeds = 0..2             # used by random families without an explicit seed
//! instance = queen2xk:2..8
//! instance = erdos_renyi:20..30,4..6
//! instance = erdos_renyi:40,5,seed=7
//! ```

use std::io::Write;
use std::path::Path;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use updom::{Family, Formulation, Graph, InstanceSpec, Status, ORACLE_MAX_VERTICES};

use crate::commands::{parse_range, solve_graph};
use crate::Method;

pub const DEFAULT_CONFIG: &str = include_str!("../configs/default.conf");

pub const CSV_HEADER: [&str; 11] = [
    "family",
    "params",
    "n",
    "m",
    "formulation",
    "objective",
    "status",
    "nodes",
    "elapsed",
    "closed_form",
    "match",
];

/// One `instance =` line: a family and a list of choices per parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstancePattern {
    pub family: Family,
    pub params: Vec<Vec<usize>>,
    /// Overrides the config's `seeds` for this line.
    pub seeds: Option<Vec<u64>>,
}

impl InstancePattern {
    fn parse(text: &str) -> Result<Self> {
        let (family, rest) = text
            .split_once(':')
            .ok_or_else(|| anyhow!("expected `family:params`, got `{text}`"))?;
        let family: Family = family.trim().parse()?;
        let mut params = Vec::new();
        let mut seeds = None;
        for part in rest.split(',').map(str::trim) {
            if let Some(s) = part.strip_prefix("seed=") {
                seeds = Some(parse_range(s)?.map(|v| v as u64).collect());
            } else {
                params.push(parse_range(part)?.collect());
            }
        }
        Ok(Self {
            family,
            params,
            seeds,
        })
    }

    /// Every valid parameter combination, first parameter outermost, seeds
    /// innermost. Combinations the family rejects are skipped.
    pub fn expand(&self, default_seeds: &[u64]) -> Result<Vec<InstanceSpec>> {
        let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
        for choices in &self.params {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |&c| {
                        let mut next = prefix.clone();
                        next.push(c);
                        next
                    })
                })
                .collect();
        }
        let seeds: Vec<Option<u64>> = if self.family.is_random() {
            self.seeds
                .as_deref()
                .unwrap_or(default_seeds)
                .iter()
                .map(|&s| Some(s))
                .collect()
        } else {
            vec![None]
        };
        let mut out = Vec::new();
        let mut first_error = None;
        for params in combos {
            for &seed in &seeds {
                let spec = InstanceSpec {
                    family: self.family,
                    params: params.clone(),
                    seed,
                };
                match spec.validate() {
                    Ok(()) => out.push(spec),
                    Err(e) => {
                        first_error.get_or_insert(e);
                    }
                }
            }
        }
        match (out.is_empty(), first_error) {
            (true, Some(e)) => Err(e.into()),
            (true, None) => bail!("pattern for {} yields no instances", self.family),
            _ => Ok(out),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    /// Seconds per solve.
    pub time_limit: f64,
    pub repetitions: usize,
    pub formulations: Vec<Method>,
    pub seeds: Vec<u64>,
    pub instances: Vec<InstancePattern>,
}

impl BenchConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut time_limit = None;
        let mut repetitions = None;
        let mut formulations = None;
        let mut seeds = None;
        let mut instances = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {lineno}: expected `key = value`, got `{line}`"))?;
            let (key, value) = (key.trim(), value.trim());
            let ctx = || format!("line {lineno}: key `{key}`");
            fn once<T>(slot: &mut Option<T>, v: T, key: &str, lineno: usize) -> Result<()> {
                if slot.replace(v).is_some() {
                    bail!("line {lineno}: key `{key}` given more than once");
                }
                Ok(())
            }
            match key {
                "time_limit" => {
                    let v: f64 = value.parse().with_context(ctx)?;
                    if !(v > 0.0 && v.is_finite()) {
                        bail!("line {lineno}: key `time_limit` must be positive, got {value}");
                    }
                    once(&mut time_limit, v, key, lineno)?;
                }
                "repetitions" => {
                    let v: usize = value.parse().with_context(ctx)?;
                    if v == 0 {
                        bail!("line {lineno}: key `repetitions` must be at least 1");
                    }
                    once(&mut repetitions, v, key, lineno)?;
                }
                "formulations" => {
                    let v = value
                        .split(',')
                        .map(|s| s.trim().parse::<Method>().map_err(|e| anyhow!(e)))
                        .collect::<Result<Vec<_>>>()
                        .with_context(ctx)?;
                    once(&mut formulations, v, key, lineno)?;
                }
                "seeds" => {
                    let mut v = Vec::new();
                    for part in value.split(',') {
                        v.extend(parse_range(part).with_context(ctx)?.map(|s| s as u64));
                    }
                    once(&mut seeds, v, key, lineno)?;
                }
                "instance" => instances.push(InstancePattern::parse(value).with_context(ctx)?),
                other => bail!(
                    "line {lineno}: unknown key `{other}` (expected time_limit, repetitions, \
                     formulations, seeds or instance)"
                ),
            }
        }
        if instances.is_empty() {
            bail!("config has no `instance` lines");
        }
        Ok(Self {
            time_limit: time_limit.unwrap_or(10000.0),
            repetitions: repetitions.unwrap_or(1),
            formulations: formulations.unwrap_or_else(|| {
                vec![
                    Method::Model(Formulation::F1),
                    Method::Model(Formulation::F2),
                ]
            }),
            seeds: seeds.unwrap_or_else(|| vec![0]),
            instances,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn default_config() -> Self {
        Self::parse(DEFAULT_CONFIG).expect("shipped config parses")
    }

    /// All instances in config order.
    pub fn specs(&self) -> Result<Vec<InstanceSpec>> {
        let mut out = Vec::new();
        for pattern in &self.instances {
            out.extend(pattern.expand(&self.seeds)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    /// Spec text after `family:`, seed included, so the row identifies the
    /// graph exactly.
    pub params: String,
    pub n: usize,
    pub m: usize,
    pub formulation: Method,
    pub objective: Option<i64>,
    pub status: Status,
    pub nodes: u64,
    /// Mean over repetitions.
    pub elapsed: Duration,
    pub closed_form: Option<usize>,
    pub matches: bool,
}

impl BenchRow {
    pub fn record(&self) -> [String; 11] {
        let opt = |v: Option<String>| v.unwrap_or_default();
        [
            self.family.to_string(),
            self.params.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.formulation.label().to_string(),
            opt(self.objective.map(|v| v.to_string())),
            self.status.to_string(),
            self.nodes.to_string(),
            format!("{:.6}", self.elapsed.as_secs_f64()),
            opt(self.closed_form.map(|v| v.to_string())),
            self.matches.to_string(),
        ]
    }
}

fn params_text(spec: &InstanceSpec) -> String {
    let text = spec.to_string();
    text.split_once(':')
        .map(|(_, p)| p.to_string())
        .unwrap_or_default()
}

fn run_one(
    spec: &InstanceSpec,
    g: &Graph,
    method: Method,
    config: &BenchConfig,
) -> Result<BenchRow> {
    let mut total = Duration::ZERO;
    let mut first = None;
    for _ in 0..config.repetitions {
        let r = solve_graph(g, method, config.time_limit, false)
            .with_context(|| format!("{spec} with {method}"))?;
        total += r.elapsed;
        first.get_or_insert(r);
    }
    let r = first.expect("at least one repetition");
    let closed_form = spec.closed_form_gamma();
    let matches = match closed_form {
        None => true,
        Some(c) => r.status == Status::Optimal && r.objective == Some(c as i64),
    };
    Ok(BenchRow {
        family: spec.family,
        params: params_text(spec),
        n: g.n(),
        m: g.m(),
        formulation: method,
        objective: r.objective,
        status: r.status,
        nodes: r.nodes,
        elapsed: total / config.repetitions as u32,
        closed_form,
        matches,
    })
}

/// One row per (instance, formulation) in config order. Oracle rows are
/// omitted for graphs above the oracle's size cap. `jobs` sizes the worker
/// pool; each solve stays single-threaded.
pub fn cmd_bench(config: &BenchConfig, jobs: usize) -> Result<Vec<BenchRow>> {
    let mut tasks = Vec::new();
    for spec in config.specs()? {
        let g = spec.generate()?;
        for &method in &config.formulations {
            if method == Method::Oracle && g.n() > ORACLE_MAX_VERTICES {
                continue;
            }
            tasks.push((spec.clone(), g.clone(), method));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("starting worker pool")?;
    pool.install(|| {
        tasks
            .par_iter()
            .map(|(spec, g, method)| run_one(spec, g, *method, config))
            .collect()
    })
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_covers_the_documented_grid() {
        let c = BenchConfig::default_config();
        assert_eq!(c.time_limit, 10000.0);
        assert_eq!(c.seeds, vec![0, 1, 2]);
        let specs = c.specs().unwrap();
        let count = |f: Family| specs.iter().filter(|s| s.family == f).count();
        assert_eq!(count(Family::Queen2xK), 7);
        assert_eq!(count(Family::FlowerSnark), 5);
        assert_eq!(count(Family::ErdosRenyi), 11 * 3 * 3);
    }

    #[test]
    fn errors_name_the_key() {
        let err = |t: &str| format!("{:#}", BenchConfig::parse(t).unwrap_err());
        assert!(err("time_limit = soon\ninstance = complete:3").contains("key `time_limit`"));
        assert!(err("colour = red\ninstance = complete:3").contains("unknown key `colour`"));
        assert!(err("formulations = f3\ninstance = complete:3").contains("key `formulations`"));
        assert!(err("instance = nope:3").contains("line 1: key `instance`"));
        assert!(err("seeds = 1\nseeds = 2\ninstance = complete:3").contains("more than once"));
        assert!(err("time_limit = 5").contains("no `instance`"));
        let petersen = BenchConfig::parse("instance = gen_petersen:4,2").unwrap();
        assert!(format!("{:#}", petersen.specs().unwrap_err()).contains("k < n/2"));
    }

    #[test]
    fn invalid_combinations_are_skipped() {
        let c = BenchConfig::parse("instance = gen_petersen:5..6,1..2").unwrap();
        let specs: Vec<String> = c.specs().unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(
            specs,
            [
                "gen_petersen:5,1",
                "gen_petersen:5,2",
                "gen_petersen:6,1",
                "gen_petersen:6,2"
            ]
        );
    }

    #[test]
    fn explicit_seed_overrides_seed_list() {
        let c = BenchConfig::parse("seeds = 0..4\ninstance = erdos_renyi:9,3,seed=7").unwrap();
        let specs = c.specs().unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].seed, Some(7));
    }

    #[test]
    fn oracle_rows_respect_size_cap() {
        let c =
            BenchConfig::parse("formulations = oracle,f1\ninstance = flower_snark:5..7").unwrap();
        let rows = cmd_bench(&c, 2).unwrap();
        let oracle = rows
            .iter()
            .filter(|r| r.formulation == Method::Oracle)
            .count();
        assert_eq!((rows.len(), oracle), (5, 2));
        assert!(rows.iter().all(|r| r.matches));
    }
}
