//! Command-line workbench for partial group actions: document parsing,
//! command implementations and report rendering. The `partact` binary is a
//! thin wrapper over [`run`].

pub mod commands;
pub mod document;
pub mod example;
mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

/// Anything that makes the input unusable; always exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// What a command produced: both renderings and whether every check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub pass: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("reports serialize");
                s.push('\n');
                s
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "partact", version, about = "Partial group actions on sets and block algebras")]
pub struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the partial-action axioms for every action in a document.
    Verify {
        /// Workbench document.
        file: PathBuf,
    },
    /// Print the j/h table of a subgroup's left transversal.
    Factorize {
        /// `symmetric:n`, `cyclic:n`, or an inline JSON group document.
        #[arg(long)]
        group: String,
        /// Generator of the subgroup, by element label; repeatable.
        #[arg(long = "gen")]
        generators: Vec<String>,
        /// Claimed rows to compare against.
        #[arg(long)]
        compare: Option<PathBuf>,
    },
    /// Build and check the enveloping action of each action in a document.
    Globalize {
        /// Workbench document.
        file: PathBuf,
        /// Only this action.
        #[arg(long)]
        action: Option<String>,
    },
    /// List every partial action of a group on a small set.
    Enumerate {
        /// `symmetric:n`, `cyclic:n`, or an inline JSON group document.
        #[arg(long)]
        group: String,
        /// Number of points.
        #[arg(long)]
        size: usize,
        /// Also print the size of each envelope.
        #[arg(long)]
        envelopes: bool,
        /// Print the action with this 1-based id as a document instead.
        #[arg(long)]
        emit: Option<usize>,
    },
    /// Recompute the built-in S3 example.
    ExampleS3 {
        #[arg(long, value_enum, default_value_t = Section::All)]
        section: Section,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Section {
    Table,
    Beta,
    All,
}

pub(crate) fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

/// Runs a parsed command line, returning the exit code.
pub fn run(cli: &Cli, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32 {
    let outcome = match &cli.command {
        Command::Verify { file } => commands::verify(file),
        Command::Factorize {
            group,
            generators,
            compare,
        } => commands::factorize(group, generators, compare.as_ref()),
        Command::Globalize { file, action } => commands::globalize(file, action.as_deref()),
        Command::Enumerate {
            group,
            size,
            envelopes,
            emit,
        } => commands::enumerate(group, *size, *envelopes, *emit),
        Command::ExampleS3 { section } => Ok(example::run(*section)),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let rendered = outcome.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &rendered).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => out.write_all(rendered.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    outcome.exit_code()
}
