use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use updom::{
    export_lp, gamma_oracle, solve_with, warm_start, Family, Formulation, Graph, InstanceSpec,
    SolveOptions, Status, VertexSet, ORACLE_MAX_VERTICES,
};

use crate::{emit, exit, load_input, parse_spec, Method};

/// Graph text for `spec`; written to `out` when given, otherwise returned.
pub fn cmd_generate(spec: &str, seed: Option<u64>, out: Option<&Path>) -> Result<Option<String>> {
    let spec = parse_spec(spec, seed)?;
    let g = spec.generate()?;
    emit(g.to_text(), out)
}

/// LP text of the chosen model for `spec`.
pub fn cmd_export(
    spec: &str,
    formulation: Formulation,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<Option<String>> {
    let spec = parse_spec(spec, seed)?;
    let g = spec.generate()?;
    emit(export_lp(&formulation.build(&g)), out)
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    /// `<formulation> vars=<k> cons=<c>`, or `oracle n=<n> m=<m>`.
    pub header: String,
    pub status: Status,
    pub objective: Option<i64>,
    pub witness: Option<VertexSet>,
    pub nodes: u64,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Optimal => exit::OK,
            Status::TimeLimit => exit::TIME_LIMIT,
            Status::Infeasible => exit::INFEASIBLE,
        }
    }
}

impl fmt::Display for SolveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.header)?;
        writeln!(f, "status: {}", self.status)?;
        match self.objective {
            Some(v) => writeln!(f, "objective: {v}")?,
            None => writeln!(f, "objective: -")?,
        }
        match &self.witness {
            Some(s) => writeln!(f, "witness: {s}")?,
            None => writeln!(f, "witness: -")?,
        }
        writeln!(f, "nodes: {}", self.nodes)?;
        writeln!(f, "elapsed: {:.6}", self.elapsed.as_secs_f64())
    }
}

/// Solves one graph. `time_limit` is in seconds.
pub fn solve_graph(g: &Graph, method: Method, time_limit: f64, warm: bool) -> Result<SolveReport> {
    match method {
        Method::Oracle => {
            let start = Instant::now();
            let cert = gamma_oracle(g)?;
            Ok(SolveReport {
                header: format!("oracle n={} m={}", g.n(), g.m()),
                status: Status::Optimal,
                objective: Some(cert.gamma as i64),
                witness: Some(cert.witness),
                nodes: 0,
                elapsed: start.elapsed(),
            })
        }
        Method::Model(formulation) => {
            let model = formulation.build(g);
            let mut options = SolveOptions::with_time_limit(time_limit)?;
            if warm {
                options.warm_start = Some(warm_start(g, formulation));
            }
            let r = solve_with(&model, &options)?;
            let witness = match &r.assignment {
                Some(a) => Some(model.decode(a)?),
                None => None,
            };
            Ok(SolveReport {
                header: model.summary(formulation.name()),
                status: r.status,
                objective: r.objective,
                witness,
                nodes: r.nodes_explored,
                elapsed: r.elapsed,
            })
        }
    }
}

/// `input` is a graph file path or a spec string.
pub fn cmd_solve(
    input: &str,
    method: Method,
    time_limit: f64,
    seed: Option<u64>,
    warm: bool,
) -> Result<SolveReport> {
    let (_, g) = load_input(input, seed)?;
    solve_graph(&g, method, time_limit, warm)
}

/// Parameter range used by `verify` when none is given.
pub fn default_verify_range(family: Family) -> Option<RangeInclusive<usize>> {
    Some(match family {
        Family::Queen2xK => 2..=8,
        Family::Rook2xK => 2..=10,
        Family::RookKxK => 2..=4,
        Family::BishopKxK => 2..=5,
        Family::KnightKxK => 3..=4,
        Family::FlowerSnark => 3..=6,
        Family::GenPetersen => 3..=8,
        Family::Complete => 1..=6,
        Family::CompleteBipartite => 2..=4,
        Family::ErdosRenyi | Family::Cycle | Family::Path => return None,
    })
}

/// Instances checked by `verify`. The range runs over the first parameter;
/// `gen_petersen` adds every valid `k` and `complete_bipartite` every
/// smaller side from the start of the range up to `n`.
pub fn verify_instances(family: Family, range: RangeInclusive<usize>) -> Result<Vec<InstanceSpec>> {
    if default_verify_range(family).is_none() {
        bail!("family `{family}` has no known upper domination number to verify against");
    }
    let lo = *range.start();
    let mut out = Vec::new();
    for p in range {
        match family {
            Family::GenPetersen => out.extend(
                (1..p)
                    .filter(|k| 2 * k < p)
                    .map(|k| InstanceSpec::new(family, [p, k])),
            ),
            Family::CompleteBipartite => {
                out.extend((lo.max(1)..=p).map(|m| InstanceSpec::new(family, [m, p])))
            }
            _ => out.push(InstanceSpec::new(family, [p])),
        }
    }
    for spec in &out {
        spec.validate()?;
    }
    Ok(out)
}

/// Parses `a..b` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .with_context(|| format!("`{s}` in range `{text}` is not a non-negative integer"))
    };
    let range = match text.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = parse(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        bail!("range `{text}` is empty");
    }
    Ok(range)
}

#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub spec: InstanceSpec,
    pub n: usize,
    pub closed_form: usize,
    /// `None` when the graph exceeds the oracle's size cap.
    pub oracle: Option<usize>,
    pub f1: Option<i64>,
    pub f2: Option<i64>,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.ok)
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_match() {
            exit::OK
        } else {
            exit::MISMATCH
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        writeln!(
            f,
            "{:<26} {:>4} {:>7} {:>7} {:>7} {:>7}  result",
            "instance", "n", "closed", "oracle", "f1", "f2"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<26} {:>4} {:>7} {:>7} {:>7} {:>7}  {}",
                r.spec.to_string(),
                r.n,
                r.closed_form,
                cell(r.oracle.map(|v| v.to_string())),
                cell(r.f1.map(|v| v.to_string())),
                cell(r.f2.map(|v| v.to_string())),
                if r.ok { "ok" } else { "MISMATCH" }
            )?;
        }
        let bad = self.rows.iter().filter(|r| !r.ok).count();
        write!(f, "{} instances, {} mismatches", self.rows.len(), bad)
    }
}

fn proven(g: &Graph, f: Formulation, time_limit: f64) -> Result<Option<i64>> {
    let r = solve_graph(g, Method::Model(f), time_limit, false)?;
    Ok(if r.status == Status::Optimal {
        r.objective
    } else {
        None
    })
}

pub fn verify_spec(spec: &InstanceSpec, time_limit: f64) -> Result<VerifyRow> {
    let g = spec.generate()?;
    let closed_form = spec
        .closed_form_gamma()
        .with_context(|| format!("{spec} has no closed form"))?;
    let oracle = if g.n() <= ORACLE_MAX_VERTICES {
        Some(gamma_oracle(&g)?.gamma)
    } else {
        None
    };
    let f1 = proven(&g, Formulation::F1, time_limit)?;
    let f2 = proven(&g, Formulation::F2, time_limit)?;
    let want = closed_form as i64;
    let ok = oracle.is_none_or(|v| v == closed_form) && f1 == Some(want) && f2 == Some(want);
    Ok(VerifyRow {
        spec: spec.clone(),
        n: g.n(),
        closed_form,
        oracle,
        f1,
        f2,
        ok,
    })
}

/// `family` may be `all`, which runs every family with a closed form over its
/// default range.
pub fn cmd_verify(family: &str, range: Option<&str>, time_limit: f64) -> Result<VerifyReport> {
    let families: Vec<Family> = if family == "all" {
        if range.is_some() {
            bail!("a range cannot be combined with `all`");
        }
        Family::ALL
            .iter()
            .copied()
            .filter(|f| default_verify_range(*f).is_some())
            .collect()
    } else {
        vec![family.parse()?]
    };
    let mut rows = Vec::new();
    for fam in families {
        let range = match range {
            Some(text) => parse_range(text)?,
            None => default_verify_range(fam).with_context(|| {
                format!("family `{fam}` has no known upper domination number to verify against")
            })?,
        };
        for spec in verify_instances(fam, range)? {
            rows.push(verify_spec(&spec, time_limit)?);
        }
    }
    Ok(VerifyReport { rows })
}
