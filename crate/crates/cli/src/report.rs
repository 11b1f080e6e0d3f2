//! Report assembly and rendering.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{registry, Context, Outcome, Witness};
use crate::config::{RunConfig, Structure};

/// Bumped on any change to the JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Witness,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StructureEcho {
    Preset { name: String },
    Custom { t10_plus: Vec<Vec<String>>, t10_minus: Vec<Vec<String>>, minus_borel: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub group: String,
    pub field_d: u32,
    pub center_gram: Vec<Vec<String>>,
    pub structure: StructureEcho,
    pub checks: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let structure = match &c.structure {
            StructureEcho::Preset { name } => name.clone(),
            StructureEcho::Custom { minus_borel, .. } => format!("custom ({minus_borel} minus Borel)"),
        };
        let mut out = format!("{} {}: {} over Q(i)[√{}], {}\n", self.tool, self.version, c.group, c.field_d, structure);
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(out, "{status}  {:width$}  {}", r.name, r.anchor);
            if let Some(ms) = r.elapsed_ms {
                let _ = write!(out, "  [{ms} ms]");
            }
            out.push('\n');
            for (k, v) in &r.witness {
                let _ = writeln!(out, "      {k}: {v}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} passed, {} failed, {} skipped", s.pass, s.fail, s.skipped);
        out
    }
}

fn echo(config: &RunConfig) -> ConfigEcho {
    let lit =
        |rows: &[Vec<gk_core::Scalar>]| -> Vec<Vec<String>> { rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect() };
    let g = &config.spec.center_gram;
    let structure = match &config.structure {
        Structure::Preset(p) => StructureEcho::Preset { name: p.to_string() },
        Structure::Custom { t10_plus, t10_minus, minus_borel } => {
            StructureEcho::Custom { t10_plus: lit(t10_plus), t10_minus: lit(t10_minus), minus_borel: minus_borel.to_string() }
        }
    };
    ConfigEcho {
        group: config.spec.to_string(),
        field_d: config.spec.field_d,
        center_gram: (0..g.rows()).map(|r| (0..g.cols()).map(|c| g[(r, c)].to_string()).collect()).collect(),
        structure,
        checks: config.checks.clone(),
    }
}

/// Runs the configured checks in parallel and merges them in name order.
pub fn run(config: &RunConfig, ctx: &Context) -> Report {
    let defs: Vec<_> = registry().iter().filter(|d| config.checks.iter().any(|c| c == d.name)).collect();
    let mut records: Vec<Record> = defs
        .par_iter()
        .map(|def| {
            let start = Instant::now();
            let outcome = (def.run)(ctx);
            let elapsed_ms = config.timings.then(|| start.elapsed().as_millis() as u64);
            let (status, witness) = match outcome {
                Outcome::Pass(w) => (Status::Pass, w),
                Outcome::Fail(w) => (Status::Fail, w),
                Outcome::Skipped(reason) => (Status::Skipped, Witness::from([("reason".to_string(), reason)])),
            };
            Record { name: def.name.to_string(), anchor: def.anchor.to_string(), status, witness, elapsed_ms }
        })
        .collect();
    records.sort_by(|a, b| a.name.cmp(&b.name));
    let mut summary = Summary::default();
    for r in &records {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report {
        schema_version: SCHEMA_VERSION,
        tool: "gkverify".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        config: echo(config),
        records,
        summary,
    }
}
