//! Command-line driver.
//!
//! Exit codes: 0 success, 1 parse or format error (including bad flags),
//! 2 validation error, 3 I/O error, 4 target kets unreachable (only when
//! `verify` is emitted).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use qnet_core::{analyze, AnalysisOptions};

use crate::error::Error;
use crate::ingest::{load_bundle, Source};
use crate::report::{render_artifacts, write_file, NATIVE_SUFFIX, OPTICAL_SUFFIX, REPORT_SUFFIX};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNREACHABLE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Emit {
    Native,
    Optical,
    Report,
    Verify,
}

/// Analyze a quantum-optics network graph and write drawings and a report.
#[derive(Debug, Parser)]
#[command(name = "qnet", version)]
pub struct Cli {
    /// Graph JSON file.
    #[arg(long)]
    pub graph: PathBuf,
    /// Role and target-state config JSON file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Directory for the output files.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Output file prefix; defaults to the graph file stem.
    #[arg(long)]
    pub prefix: Option<String>,
    /// Outputs to produce, comma separated.
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        num_args = 1..,
        default_values_t = [Emit::Native, Emit::Optical, Emit::Report, Emit::Verify]
    )]
    pub emit: Vec<Emit>,
    /// Largest vertex count for perfect-matching enumeration.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(2..))]
    pub matcher_cap: u32,
}

fn fail(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    e.exit_code()
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    execute(&cli, err)
}

pub fn execute(cli: &Cli, err: &mut dyn Write) -> i32 {
    let graph = Source::Path(cli.graph.clone());
    let config = cli.config.clone().map(Source::Path);
    let bundle = match load_bundle(config.as_ref(), &graph) {
        Ok(b) => b,
        Err(e) => return fail(err, &e),
    };
    let options = AnalysisOptions {
        vertex_cap: cli.matcher_cap as usize,
        ..AnalysisOptions::default()
    };
    let result = match analyze(&bundle.graph, &bundle.config, &options) {
        Ok(r) => r,
        Err(source) => {
            return fail(
                err,
                &Error::Validation {
                    origin: "analysis".to_owned(),
                    source,
                },
            )
        }
    };
    for w in &result.warnings {
        let _ = writeln!(err, "warning: {w}");
    }

    let prefix = cli.prefix.clone().unwrap_or_else(|| {
        cli.graph
            .file_stem()
            .map_or_else(|| "qnet".to_owned(), |s| s.to_string_lossy().into_owned())
    });
    let name = bundle.config.name.as_deref().unwrap_or(&prefix);
    let artifacts = render_artifacts(&bundle.graph, &result, name);

    let wanted = |e: Emit| cli.emit.contains(&e);
    let files = [
        (Emit::Native, NATIVE_SUFFIX, &artifacts.native_svg),
        (Emit::Optical, OPTICAL_SUFFIX, &artifacts.optical_svg),
        (Emit::Report, REPORT_SUFFIX, &artifacts.report),
    ];
    if files.iter().any(|(e, ..)| wanted(*e)) {
        if let Err(source) = std::fs::create_dir_all(&cli.out_dir) {
            return fail(
                err,
                &Error::Io {
                    path: cli.out_dir.clone(),
                    source,
                },
            );
        }
    }
    for (emit, suffix, contents) in files {
        if wanted(emit) {
            if let Err(e) = write_file(cli.out_dir.join(format!("{prefix}{suffix}")), contents) {
                return fail(err, &e);
            }
        }
    }

    if wanted(Emit::Verify) {
        match &result.verification {
            Some(v) if !v.report.all_reachable() => {
                let kets: Vec<String> = v.report.unreachable().map(|k| k.to_string()).collect();
                let _ = writeln!(err, "unreachable target kets: {}", kets.join(","));
                return EXIT_UNREACHABLE;
            }
            Some(_) => {}
            None => {
                let _ = writeln!(err, "verification unavailable");
            }
        }
    }
    EXIT_OK
}
