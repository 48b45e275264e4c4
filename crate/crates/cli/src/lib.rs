//! Library side of the `satake-kit` command: run configurations, the result
//! envelope, the content-addressed cache and table rendering.

pub mod cache;
pub mod commands;
pub mod table;

use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use satake_core::verify::Check;

pub use commands::Command;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] satake_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use satake_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::Precondition(_) | E::DimensionMismatch(_) | E::DimensionOverflow { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub format: Format,
    /// Not echoed: where results are cached does not change them.
    #[serde(skip)]
    pub cache_dir: Option<PathBuf>,
    #[serde(skip)]
    pub timing: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            format: Format::Json,
            cache_dir: None,
            timing: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResultEnvelope {
    pub version: &'static str,
    pub config: RunConfig,
    pub payload: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl ResultEnvelope {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Computes (or fetches from the cache) the payload and checks for `config`.
pub fn run(config: RunConfig) -> Result<ResultEnvelope> {
    config.command.validate(config.format)?;
    let start = Instant::now();
    let store = config.cache_dir.as_deref().map(cache::Cache::new);
    let key = cache::key(&config.command)?;
    let cached = match &store {
        Some(c) => c.lookup(&key),
        None => None,
    };
    let (payload, checks) = match cached {
        Some(entry) => (entry.payload, entry.checks),
        None => {
            let (payload, checks) = config.command.execute()?;
            if let Some(c) = &store {
                c.store(&key, &payload, &checks)?;
            }
            (payload, checks)
        }
    };
    let timing_ms = config.timing.then(|| start.elapsed().as_millis() as u64);
    Ok(ResultEnvelope {
        version: VERSION,
        config,
        payload,
        checks,
        timing_ms,
    })
}

/// Text written to stdout: the payload (or the whole envelope) as compact
/// JSON, or a CSV / LaTeX projection of its table.
pub fn render(env: &ResultEnvelope, envelope: bool) -> Result<String> {
    match env.config.format {
        Format::Json if envelope || env.config.command.always_enveloped() => {
            Ok(serde_json::to_string(env)? + "\n")
        }
        Format::Json => Ok(serde_json::to_string(&env.payload)? + "\n"),
        Format::Csv => table::tabulate(env)?.to_csv(),
        Format::Latex => Ok(table::tabulate(env)?.to_latex()),
    }
}
