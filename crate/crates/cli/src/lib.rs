//! Library side of the `purebraid` command-line tool.
//!
//! [`run`] parses arguments, executes one command and writes its report.
//! Exit codes: `0` success, `1` usage or configuration error, `2` failed
//! verification, `3` criterion not satisfied.

pub mod args;
pub mod cache;
mod commands;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use report::{Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_CRITERION_FAILED: i32 = 3;

/// Runs one invocation, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let env_cache = std::env::var_os(args::CACHE_ENV).filter(|v| !v.is_empty()).map(Into::into);
    let settings = match args::Settings::resolve(&cli.common, &cli.command, env_cache) {
        Ok(s) => s,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let (result, warnings) = commands::execute(&cli.command, &settings);
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match result {
        Ok(report) => {
            for note in &report.notes {
                let _ = writeln!(err, "note: {note}");
            }
            if let Err(msg) = report.emit(&settings, out) {
                let _ = writeln!(err, "error: {msg}");
                return EXIT_USAGE;
            }
            report.exit_code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
