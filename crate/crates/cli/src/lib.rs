//! Verification battery over the exact engine: configuration, check registry
//! and deterministic reports.

pub mod checks;
pub mod config;
pub mod report;

pub use checks::{registry, CheckDef, Context, Outcome, Scope};
pub use config::{parse_config, ConfigError, Format, RunConfig, Structure};
pub use report::{run, Record, Report, Status, Summary};

/// Exit code for a run in which every check passed or was skipped.
pub const EXIT_PASS: i32 = 0;
/// Exit code for a run with at least one failed check.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for an invalid configuration.
pub const EXIT_CONFIG: i32 = 2;

/// Parses, prepares and runs; returns the rendered output and the exit code.
pub fn execute<I, T>(argv: I) -> Result<(String, i32), ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = parse_config(argv)?;
    let ctx = Context::new(&config)?;
    let report = run(&config, &ctx);
    if let Some(path) = &config.cache {
        ctx.cl.save_cache(path)?;
    }
    let out = match config.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok((out, if report.passed() { EXIT_PASS } else { EXIT_FAIL }))
}
