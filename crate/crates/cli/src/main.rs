use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use satake_core::centralizers::CheckKind;
use satake_core::sample::DEFAULT_SEED;
use satake_core::spectral::BigradedSeries;
use satake_core::stalks::Flavor;
use satake_core::verify::Suite;
use satake_core::weights::Coweight;
use satake_kit::{render, run, CliError, Command, Format, RunConfig};

#[derive(Parser)]
#[command(
    name = "satake-kit",
    version,
    about = "Kostka-Foulkes, IC stalk and equivariant cohomology computations"
)]
struct Cli {
    /// Output format; csv and latex are tables projected from the JSON payload
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory of the content-addressed result cache
    #[arg(long, global = true, env = "SATAKE_KIT_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Always recompute; never read or write the cache
    #[arg(long, global = true)]
    no_cache: bool,
    /// Print the whole result envelope instead of the bare payload
    #[arg(long, global = true)]
    envelope: bool,
    /// Record wall-clock time in the envelope (breaks byte-for-byte reproducibility)
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Cmd,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_i64(s: &str) -> Result<i64, String> {
    match s.parse::<i64>() {
        Ok(v) if v > 0 => Ok(v),
        Ok(_) => Err("must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// One Kostka-Foulkes polynomial K_{lam,mu}(q)
    Kostka {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        lam: Vec<i64>,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        mu: Vec<i64>,
    },
    /// All K_{lam,mu} with mu <= lam partitions of size at most --size
    KostkaTable {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive_i64)]
        size: i64,
    },
    /// Brylinski-Kostant filtration polynomials of V_lam
    Bk {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, num_args = 1.., required = true, allow_negative_numbers = true)]
        lam: Vec<i64>,
        #[arg(long, num_args = 1.., allow_negative_numbers = true)]
        mu: Option<Vec<i64>>,
    },
    /// IC stalk tables on affine Grassmannian orbit closures
    Stalks {
        #[arg(long, default_value = "complex")]
        flavor: Flavor,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, value_parser = positive_i64)]
        size: i64,
    },
    /// Equivariant cohomology of the twistor fibration and the matrix Phi
    Twistor {
        #[arg(long, value_parser = positive)]
        n: usize,
    },
    /// Sampled identities for companion matrices and regular centralizers
    Centralizers {
        #[arg(long)]
        check: CheckKind,
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = positive)]
        samples: usize,
    },
    /// Nearby-cycles branching of a GL_2n representation
    Branch {
        #[arg(long, value_parser = positive)]
        n: usize,
        #[arg(long = "Lam", num_args = 1.., required = true, allow_negative_numbers = true)]
        big_lam: Vec<i64>,
    },
    /// Shear a bigraded series given as a JSON list of [degree, weight, dim]
    Shear {
        #[arg(long)]
        input: PathBuf,
        /// Undo the shear instead
        #[arg(long)]
        inverse: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 2, value_parser = positive)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 20, value_parser = positive)]
        samples: usize,
    },
}

fn command(cmd: Cmd) -> Result<Command, CliError> {
    Ok(match cmd {
        Cmd::Kostka { n, lam, mu } => Command::Kostka {
            n,
            lam: Coweight(lam),
            mu: Coweight(mu),
        },
        Cmd::KostkaTable { n, size } => Command::KostkaTable { n, size },
        Cmd::Bk { n, lam, mu } => Command::Bk {
            n,
            lam: Coweight(lam),
            mu: mu.map(Coweight),
        },
        Cmd::Stalks { flavor, n, size } => Command::Stalks { n, size, flavor },
        Cmd::Twistor { n } => Command::Twistor { n },
        Cmd::Centralizers {
            check,
            n,
            seed,
            samples,
        } => Command::Centralizers {
            n,
            check,
            seed,
            samples,
        },
        Cmd::Branch { n, big_lam } => Command::Branch {
            n,
            big_lam: Coweight(big_lam),
        },
        Cmd::Shear { input, inverse } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
            let input: BigradedSeries = serde_json::from_str(&text).map_err(|e| {
                CliError::Usage(format!(
                    "{} is not a list of [i, j, dim]: {e}",
                    input.display()
                ))
            })?;
            Command::Shear { input, inverse }
        }
        Cmd::Verify {
            suite,
            n,
            seed,
            samples,
        } => Command::Verify {
            n,
            suite,
            seed,
            samples,
        },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let envelope = cli.envelope;
    let result = command(cli.command).and_then(|command| {
        run(RunConfig {
            command,
            format: cli.format,
            cache_dir: if cli.no_cache { None } else { cli.cache_dir },
            timing: cli.timing,
        })
    });
    let env = match result {
        Ok(env) => env,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match render(&env, envelope) {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    }
    if env.ok() {
        ExitCode::SUCCESS
    } else {
        for c in env.failures() {
            eprintln!(
                "FAILED {}{}",
                c.name,
                c.detail
                    .as_deref()
                    .map(|d| format!(": {d}"))
                    .unwrap_or_default()
            );
        }
        ExitCode::from(1)
    }
}
