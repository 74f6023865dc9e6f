//! Library side of the `updom` command: every subcommand is a plain function
//! here so it can be exercised without spawning a process.

pub mod bench;
pub mod commands;

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{Context, Result};
use updom::{Formulation, Graph, InstanceSpec};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// `verify` found a mismatch.
    pub const MISMATCH: u8 = 1;
    /// Bad arguments, unreadable input, parse errors.
    pub const USAGE: u8 = 2;
    pub const TIME_LIMIT: u8 = 3;
    pub const INFEASIBLE: u8 = 4;
}

/// How to obtain an upper (or lower) domination number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Model(Formulation),
    /// Exhaustive enumeration of minimal dominating sets.
    Oracle,
}

impl Method {
    /// Label used in bench CSV rows.
    pub fn label(self) -> &'static str {
        match self {
            Method::Model(Formulation::F1) => "F1",
            Method::Model(Formulation::F1Min) => "F1-min",
            Method::Model(Formulation::F2) => "F2",
            Method::Model(Formulation::Domination) => "domination",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Model(m) => write!(f, "{m}"),
            Method::Oracle => f.write_str("oracle"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "oracle" => Ok(Method::Oracle),
            other => other.parse().map(Method::Model).map_err(|_| {
                format!("unknown formulation `{s}` (expected f1, f1-min, f2, domination or oracle)")
            }),
        }
    }
}

/// Parses a spec string, applying `seed` when the string carries none.
pub fn parse_spec(text: &str, seed: Option<u64>) -> Result<InstanceSpec> {
    let mut spec: InstanceSpec = text.parse()?;
    if spec.seed.is_none() && spec.family.is_random() {
        spec.seed = seed;
    }
    Ok(spec)
}

/// An existing file is read in graph text format; anything else must be a
/// spec string.
pub fn load_input(input: &str, seed: Option<u64>) -> Result<(Option<InstanceSpec>, Graph)> {
    let path = Path::new(input);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let g = Graph::parse_text(&text).with_context(|| format!("parsing {}", path.display()))?;
        Ok((None, g))
    } else {
        let spec = parse_spec(input, seed).with_context(|| {
            format!("`{input}` is neither a readable graph file nor a spec string")
        })?;
        let g = spec.generate()?;
        Ok((Some(spec), g))
    }
}

/// Writes `text` to `out`, or returns it for stdout when `out` is `None`.
pub fn emit(text: String, out: Option<&Path>) -> Result<Option<String>> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn methods_parse() {
        assert_eq!("oracle".parse::<Method>().unwrap(), Method::Oracle);
        assert_eq!(
            "f1-min".parse::<Method>().unwrap(),
            Method::Model(Formulation::F1Min)
        );
        assert!("cplex".parse::<Method>().is_err());
    }

    #[test]
    fn seed_flag_fills_missing_seed_only() {
        assert_eq!(
            parse_spec("erdos_renyi:10,4", Some(5)).unwrap().seed,
            Some(5)
        );
        assert_eq!(
            parse_spec("erdos_renyi:10,4,seed=2", Some(5)).unwrap().seed,
            Some(2)
        );
        assert_eq!(parse_spec("complete:4", Some(5)).unwrap().seed, None);
    }
}
