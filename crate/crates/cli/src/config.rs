//! Command-line and key=value file configuration.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Parser;
use gk_core::exactfield::{Matrix, Scalar, Vector};
use gk_core::liealg::GroupSpec;
use gk_core::presets::Preset;

use crate::checks::registry;

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error(transparent)]
    Cli(#[from] clap::Error),
    #[error("cannot read config file {path}: {message}")]
    File { path: PathBuf, message: String },
    #[error("config file line {line}: {message}")]
    FileSyntax { line: usize, message: String },
    #[error("{0}")]
    Core(#[from] gk_core::Error),
    #[error("{0}")]
    Invalid(String),
}

/// Verification battery for Lie-algebraic generalized Kähler structures.
#[derive(Parser, Debug, Default)]
#[command(name = "gkverify", version)]
pub struct Cli {
    /// Group spec: comma-separated `A1`, `A2`, `U1`, `Tk` tokens, e.g. `A1,U1`.
    pub group: Option<String>,
    /// Flat key=value file; command-line flags override its keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Named structure: canonical, induced-pair-1, induced-pair-2, opposite-borel.
    #[arg(long, conflicts_with_all = ["t10_plus", "t10_minus"])]
    pub preset: Option<String>,
    /// Basis of t_{1,0} for l_+: vectors separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    pub t10_plus: Option<String>,
    /// Basis of t_{1,0} for l_−; defaults to the plus basis.
    #[arg(long, allow_hyphen_values = true)]
    pub t10_minus: Option<String>,
    /// Positive system of l_−: standard or opposite.
    #[arg(long)]
    pub minus_borel: Option<String>,
    /// Squarefree d of the field Q(i)[√d].
    #[arg(long)]
    pub field_d: Option<u32>,
    /// Gram matrix of κ on the center: rows separated by `;`, entries by `,`.
    #[arg(long, allow_hyphen_values = true)]
    pub center_gram: Option<String>,
    /// Comma-separated check names; `all` selects the whole registry.
    #[arg(long)]
    pub checks: Option<String>,
    /// Output format: json or text.
    #[arg(long)]
    pub format: Option<String>,
    /// Product-table cache file for the Clifford algebra.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Record per-check wall time in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl FromStr for Format {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(ConfigError::Invalid(format!("unknown format `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Borel {
    Standard,
    Opposite,
}

impl fmt::Display for Borel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Borel::Standard => "standard",
            Borel::Opposite => "opposite",
        })
    }
}

impl FromStr for Borel {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "standard" => Ok(Borel::Standard),
            "opposite" => Ok(Borel::Opposite),
            other => Err(ConfigError::Invalid(format!("unknown positive system `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    Preset(Preset),
    Custom { t10_plus: Vec<Vector>, t10_minus: Vec<Vector>, minus_borel: Borel },
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: GroupSpec,
    pub structure: Structure,
    /// Sorted, without duplicates.
    pub checks: Vec<String>,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub timings: bool,
}

const FILE_KEYS: [&str; 11] =
    ["group", "preset", "t10_plus", "t10_minus", "minus_borel", "field_d", "center_gram", "checks", "format", "cache", "timings"];

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_file(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut out = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ConfigError::FileSyntax { line: k + 1, message };
        let (key, value) = line.split_once('=').ok_or_else(|| err("expected `key = value`".into()))?;
        let key = key.trim().replace('-', "_");
        if !FILE_KEYS.contains(&key.as_str()) {
            return Err(err(format!("unknown key `{key}`")));
        }
        if out.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(err(format!("duplicate key `{key}`")));
        }
    }
    Ok(out)
}

fn parse_rows(text: &str, d: u32) -> Result<Vec<Vec<Scalar>>, ConfigError> {
    text.split(';').map(|row| row.split(',').map(|x| Scalar::parse(x, d).map_err(ConfigError::from)).collect()).collect()
}

fn parse_basis(text: &str, dim: usize, d: u32) -> Result<Vec<Vector>, ConfigError> {
    let rows = parse_rows(text, d)?;
    if let Some(row) = rows.iter().find(|r| r.len() != dim) {
        return Err(ConfigError::Invalid(format!("basis vector has {} entries, expected {dim}", row.len())));
    }
    Ok(rows)
}

/// Parses `argv` (program name first) and the file named by `--config`.
pub fn parse_config<I, T>(argv: I) -> Result<RunConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let file = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| ConfigError::File { path: path.clone(), message: e.to_string() })?;
            parse_file(&text)?
        }
        None => BTreeMap::new(),
    };
    resolve(cli, &file)
}

/// Merges flags over file keys and validates the result.
pub fn resolve(cli: Cli, file: &BTreeMap<String, String>) -> Result<RunConfig, ConfigError> {
    let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).cloned());
    let group = pick(cli.group, "group").ok_or_else(|| ConfigError::Invalid("missing group spec".into()))?;
    let field_d = match cli.field_d {
        Some(d) => d,
        None => match file.get("field_d") {
            Some(v) => v.parse().map_err(|_| ConfigError::Invalid(format!("field_d `{v}` is not a positive integer")))?,
            None => 1,
        },
    };
    let gram = match pick(cli.center_gram, "center_gram") {
        Some(text) => {
            let rows = parse_rows(&text, field_d)?;
            let n = rows.len();
            if rows.iter().any(|r| r.len() != n) {
                return Err(ConfigError::Invalid("center Gram must be square".into()));
            }
            Some(Matrix::from_fn(n, n, |r, c| rows[r][c].clone()))
        }
        None => None,
    };
    let spec = GroupSpec::parse(&group, gram, field_d)?;

    // a flag for one side of the structure replaces the file's structure keys
    let flag_structure = cli.preset.is_some() || cli.t10_plus.is_some() || cli.t10_minus.is_some() || cli.minus_borel.is_some();
    let structure_key = |flag: Option<String>, key: &str| if flag_structure { flag } else { file.get(key).cloned() };
    let preset = structure_key(cli.preset, "preset");
    let t10_plus = structure_key(cli.t10_plus, "t10_plus");
    let t10_minus = structure_key(cli.t10_minus, "t10_minus");
    let minus_borel = structure_key(cli.minus_borel, "minus_borel");
    let structure = match (preset, t10_plus, t10_minus) {
        (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
            return Err(ConfigError::Invalid("a preset excludes explicit t10 bases".into()));
        }
        (Some(name), None, None) => {
            if minus_borel.is_some() {
                return Err(ConfigError::Invalid("a preset fixes the positive systems".into()));
            }
            Structure::Preset(name.parse()?)
        }
        (None, Some(plus), minus) => {
            let t10_plus = parse_basis(&plus, spec.dim(), field_d)?;
            let t10_minus = match minus {
                Some(m) => parse_basis(&m, spec.dim(), field_d)?,
                None => t10_plus.clone(),
            };
            let minus_borel = minus_borel.as_deref().map(str::parse).transpose()?.unwrap_or(Borel::Standard);
            Structure::Custom { t10_plus, t10_minus, minus_borel }
        }
        (None, None, Some(_)) => return Err(ConfigError::Invalid("t10_minus needs t10_plus".into())),
        (None, None, None) => {
            if minus_borel.is_some() {
                return Err(ConfigError::Invalid("minus_borel needs explicit t10 bases".into()));
            }
            Structure::Preset(Preset::Canonical)
        }
    };

    let names: Vec<&str> = registry().iter().map(|c| c.name).collect();
    let mut checks: Vec<String> = match pick(cli.checks, "checks") {
        None => names.iter().map(|s| s.to_string()).collect(),
        Some(list) if list.trim() == "all" => names.iter().map(|s| s.to_string()).collect(),
        Some(list) => list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
    };
    if let Some(bad) = checks.iter().find(|c| !names.contains(&c.as_str())) {
        return Err(ConfigError::Invalid(format!("unknown check `{bad}`")));
    }
    if checks.is_empty() {
        return Err(ConfigError::Invalid("empty check list".into()));
    }
    checks.sort();
    checks.dedup();

    let format = pick(cli.format, "format").as_deref().map(str::parse).transpose()?.unwrap_or(Format::Text);
    let cache = cli.cache.or_else(|| file.get("cache").map(PathBuf::from));
    let timings = cli.timings
        || match file.get("timings").map(String::as_str) {
            None | Some("false") => false,
            Some("true") => true,
            Some(other) => return Err(ConfigError::Invalid(format!("timings must be true or false, got `{other}`"))),
        };
    Ok(RunConfig { spec, structure, checks, format, cache, timings })
}
