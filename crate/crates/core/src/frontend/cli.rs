//! Argument handling and dispatch. Every path through [`run`] yields an exit
//! status; argument errors map to the input-error status.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::frontend::parse::{parse_with, InputDocument, ParseOptions};
use crate::frontend::report::{self, OrbitChecks, Outcome, Status};
use crate::jacobian::Bounds;

#[derive(Debug, Parser)]
#[command(name = "gdgcat", version, about = "Ginzburg dg algebras, H0 and type-A higher cluster categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Write a JSON report to this path.
    #[arg(long, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Read potential words left to right.
    #[arg(long)]
    pub diagrammatic: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_name = "N")]
    pub max_steps: Option<usize>,
    #[arg(long, value_name = "N")]
    pub max_basis: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the potential degree and d^2 = 0.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Print the extended quiver with degrees and the differential.
    Gamma {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compute H0: finiteness verdict, basis and multiplication table.
    H0 {
        file: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Checks on the orbit category D^b(kA_n) / tau^-1 Sigma^m.
    Orbit {
        #[arg(long = "type", value_name = "TYPE")]
        dynkin: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated subset of `cy,tilting`.
        #[arg(long, value_delimiter = ',', default_value = "cy,tilting")]
        checks: Vec<String>,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
    },
    /// check + gamma + h0 in one report.
    Report {
        file: PathBuf,
        #[command(flatten)]
        bounds: BoundArgs,
        #[command(flatten)]
        common: Common,
    },
}

/// Result of one invocation: what to print and the exit status.
#[derive(Debug, Clone)]
pub struct Invocation {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

impl Invocation {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Invocation {
                    status: Status::Pass,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Invocation {
                    status: Status::InputError,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    dispatch(cli.command)
}

fn load(file: &Path, diagrammatic: bool) -> Result<(InputDocument, String), String> {
    let bytes = std::fs::read(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| format!("{}: not valid UTF-8", file.display()))?;
    let doc = parse_with(&text, ParseOptions { diagrammatic }).map_err(|e| format!("{}:{e}", file.display()))?;
    Ok((doc, report::sha256_hex(&bytes)))
}

fn finish(outcome: Outcome, json: Option<&Path>, command: &str, sha: &str, bounds: serde_json::Value, diagrammatic: bool) -> Invocation {
    let mut inv = Invocation {
        status: outcome.status,
        stdout: String::new(),
        stderr: String::new(),
    };
    if outcome.status == Status::InputError {
        inv.stderr = outcome.text.clone();
    } else {
        inv.stdout = outcome.text.clone();
    }
    if let Some(path) = json {
        let doc = report::report_json(command, sha, outcome.verdicts, bounds, diagrammatic);
        if let Err(e) = std::fs::write(path, doc) {
            inv.status = Status::InputError;
            inv.stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
        }
    }
    inv
}

fn input_error(message: String) -> Invocation {
    Invocation {
        status: Status::InputError,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

fn dispatch(command: Command) -> Invocation {
    match command {
        Command::Check { file, common } => with_doc(&file, &common, "check", None, |doc, _| report::run_check(doc)),
        Command::Gamma { file, common } => with_doc(&file, &common, "gamma", None, |doc, _| report::run_gamma(doc)),
        Command::H0 { file, bounds, common } => with_doc(&file, &common, "h0", Some(&bounds), |doc, b| {
            report::run_h0(doc, b.expect("bounds"))
        }),
        Command::Report { file, bounds, common } => {
            if common.json.is_none() {
                return input_error("report requires --json <out>".into());
            }
            with_doc(&file, &common, "report", Some(&bounds), |doc, b| report::run_report(doc, b.expect("bounds")))
        }
        Command::Orbit { dynkin, n, m, checks, json } => {
            let mut selected = OrbitChecks { cy: false, tilting: false };
            for c in &checks {
                match c.trim() {
                    "cy" => selected.cy = true,
                    "tilting" => selected.tilting = true,
                    "" => {}
                    other => return input_error(format!("unknown check '{other}' (expected cy, tilting)")),
                }
            }
            let key = format!(
                "orbit type={dynkin} n={n} m={m} checks={}{}",
                if selected.cy { "cy" } else { "" },
                if selected.tilting { ",tilting" } else { "" }
            );
            let sha = report::sha256_hex(key.as_bytes());
            let outcome = report::run_orbit(&dynkin, n, m, selected);
            finish(outcome, json.as_deref(), "orbit", &sha, serde_json::json!({}), false)
        }
    }
}

fn with_doc<F>(file: &Path, common: &Common, command: &str, bounds: Option<&BoundArgs>, body: F) -> Invocation
where
    F: FnOnce(&InputDocument, Option<Bounds>) -> Outcome,
{
    let (doc, sha) = match load(file, common.diagrammatic) {
        Ok(x) => x,
        Err(e) => return input_error(e),
    };
    let effective = bounds.map(|b| report::effective_bounds(&doc, b.max_steps, b.max_basis));
    let bounds_json = effective.as_ref().map(report::bounds_json).unwrap_or_else(|| serde_json::json!({}));
    let outcome = body(&doc, effective);
    finish(outcome, common.json.as_deref(), command, &sha, bounds_json, common.diagrammatic)
}
