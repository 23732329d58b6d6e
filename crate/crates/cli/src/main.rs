use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use minfaith_core::chartab::{build_table, io::write_ctbl};
use minfaith_core::families::{build_group_with, BuildContext};
use minfaith_core::perm::lattice::DEFAULT_SUBGROUP_BOUND;
use minfaith_core::perm::{profile, GroupConfig};
use minfaith_core::quasiperm::{degree_report, ReportOptions, SearchConfig};
use minfaith_core::verify::{verify_theorems, CorpusSelection, VerifyOptions};
use minfaith_core::{Error, ErrorClass, Result};

/// Minimal faithful permutation and quasi-permutation degrees of small groups.
#[derive(Parser)]
#[command(name = "minfaith", version)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Largest group order a closure may reach.
    #[arg(long, global = true, default_value_t = GroupConfig::default().closure_bound as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    bound: u64,
    /// Largest group order for which the subgroup lattice is enumerated in the μ search.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBGROUP_BOUND as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    mu_bound: u64,
    /// Wall-clock limit in seconds for each search.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structural profile of a group.
    Analyze { spec: String },
    /// Compute c(G), q(G) and μ(G) with witnesses and closed-form values.
    Degrees {
        spec: String,
        /// Character table method.
        #[arg(long, default_value = "auto")]
        table: String,
    },
    /// Write the character table in .ctbl form.
    Chartab {
        spec: String,
        #[arg(long, default_value = "auto")]
        table: String,
        /// Output file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every registered check over the corpus.
    VerifyTheorems {
        #[arg(long, value_parser = parse_corpus, default_value = "default")]
        corpus: CorpusSelection,
        /// Also check the class-3 Camina instance from the data directory.
        #[arg(long)]
        include_camina3: bool,
    },
}

fn parse_corpus(s: &str) -> std::result::Result<CorpusSelection, String> {
    CorpusSelection::parse(s).map_err(|e| e.to_string())
}

impl RunConfig {
    fn build(&self) -> BuildContext {
        BuildContext {
            config: GroupConfig {
                closure_bound: self.bound as usize,
            },
            ..BuildContext::default()
        }
    }

    fn search(&self) -> Result<SearchConfig> {
        let time_limit = match self.time_limit {
            None => None,
            Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
            Some(s) => return Err(Error::parse(format!("time limit must be positive, got {s}"))),
        };
        Ok(SearchConfig {
            time_limit,
            ..SearchConfig::default()
        })
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Write to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cfg = &cli.run;
    let json = cfg.format == Format::Json;
    match &cli.command {
        Command::Analyze { spec } => {
            let g = build_group_with(spec, &cfg.build())?;
            let p = profile(&g);
            if json {
                emit(&to_json(&p));
            } else {
                emit(&format!("{p}\n"));
            }
        }
        Command::Degrees { spec, table } => {
            let g = build_group_with(spec, &cfg.build())?;
            let options = ReportOptions {
                table_method: table.clone(),
                mu_bound: cfg.mu_bound as usize,
                search: cfg.search()?,
            };
            let report = degree_report(&g, &options)?;
            if json {
                emit(&to_json(&report));
            } else {
                emit(&report.to_string());
            }
        }
        Command::Chartab { spec, table, output } => {
            let g = build_group_with(spec, &cfg.build())?;
            let t = build_table(table, &g)?;
            let text = write_ctbl(&g, &t);
            match output {
                Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
                    path: path.display().to_string(),
                    source,
                })?,
                None => emit(&text),
            }
        }
        Command::VerifyTheorems { corpus, include_camina3 } => {
            let report = verify_theorems(VerifyOptions {
                corpus: *corpus,
                include_camina3: *include_camina3,
                mu_bound: cfg.mu_bound as usize,
                search: cfg.search()?,
                build: cfg.build(),
            })?;
            if json {
                emit(&to_json(&report));
            } else {
                emit(&report.to_string());
            }
            if !report.passed {
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(class: ErrorClass) -> u8 {
    match class {
        ErrorClass::Parse => 2,
        ErrorClass::Bounds => 3,
        ErrorClass::Verification => 4,
        ErrorClass::Other => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(e.class());
            if cli.run.format == Format::Json {
                emit(&to_json(&json!({ "error": e.to_string(), "exit_code": code })));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}
