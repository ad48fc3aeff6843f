mod commands;
mod input;
mod render;
mod suite;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde_json::Value;
use spacecurves::{Error, PrimeField, DEFAULT_PRIME};

use commands::{load_input, parse_type, surface, JobConfig};

#[derive(Parser)]
#[command(name = "spacecurves", version, about = "Liaison invariants of space curves in P^3")]
struct Cli {
    /// Characteristic of the coefficient field.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Degree window LO,HI (Hilbert values, or the h range for obstruct).
    #[arg(long, global = true, allow_hyphen_values = true)]
    window: Option<String>,
    /// Reject curves that are not locally Cohen-Macaulay.
    #[arg(long, global = true)]
    strict_cm: bool,
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis and minimal generators.
    Gb { input: String },
    /// Betti table of R/I.
    Resolve { input: String },
    /// Hilbert series, polynomial and values of R/I.
    Hilbert { input: String },
    /// Degree, genus, s0, e, Rao module, alpha.
    CurveInfo { input: String },
    /// The curve linked by the complete intersection (F, G).
    Link {
        input: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Elementary biliaison: up with --mult, down with a negative --h.
    Biliaison {
        input: String,
        #[arg(long)]
        surface: String,
        #[arg(long)]
        factors: Option<String>,
        #[arg(long)]
        mult: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<i32>,
    },
    /// Whether a descending biliaison exists on the given surfaces.
    Obstruct {
        input: String,
        #[arg(long)]
        surface: Vec<String>,
        /// Factorization of the (single) --surface.
        #[arg(long)]
        factors: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        h: Option<i32>,
    },
    /// Minimal curve of a Koszul biliaison class.
    Koszul {
        #[arg(long = "type")]
        ty: String,
    },
    /// Minimality check for a subcanonical curve (verdict PASS/FAIL).
    VerifyMin {
        input: String,
        #[arg(long)]
        surface: Vec<String>,
    },
    /// Runs the named experiments and diffs them against golden files.
    PaperSuite {
        #[arg(long)]
        goldens: Option<PathBuf>,
        /// Rewrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

fn parse_window(text: &str) -> Result<(i32, i32)> {
    let bad = || Error::Parse {
        pos: 0,
        message: format!("window must be LO,HI with LO <= HI, got '{text}'"),
    };
    let (lo, hi) = text.split_once(',').ok_or_else(bad)?;
    let lo: i32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad().into());
    }
    Ok((lo, hi))
}

fn emit(cfg_json: bool, v: &Value) {
    let text = if cfg_json {
        serde_json::to_string_pretty(v).unwrap() + "\n"
    } else {
        render::render(v)
    };
    // a closed pipe (`| head`) is not an error
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<u8> {
    let cfg = JobConfig {
        field: PrimeField::new(cli.prime)?,
        seed: cli.seed,
        window: cli.window.as_deref().map(parse_window).transpose()?,
        strict_cm: cli.strict_cm,
    };
    let value = match &cli.command {
        Command::Gb { input } => commands::cmd_gb(&cfg, &load_input(&cfg, input)?)?,
        Command::Resolve { input } => commands::cmd_resolve(&cfg, &load_input(&cfg, input)?)?,
        Command::Hilbert { input } => commands::cmd_hilbert(&cfg, &load_input(&cfg, input)?)?,
        Command::CurveInfo { input } => commands::cmd_curve_info(&cfg, &load_input(&cfg, input)?)?,
        Command::Link { input, f, g } => commands::cmd_link(&cfg, &load_input(&cfg, input)?, f, g)?,
        Command::Biliaison {
            input,
            surface: q,
            factors,
            mult,
            h,
        } => {
            let q = surface(&cfg, q, factors.as_deref())?;
            commands::cmd_biliaison(&cfg, &load_input(&cfg, input)?, &q, mult.as_deref(), *h)?
        }
        Command::Obstruct {
            input,
            surface: qs,
            factors,
            h,
        } => {
            if factors.is_some() && qs.len() != 1 {
                anyhow::bail!(Error::precondition("--factors needs exactly one --surface"));
            }
            let surfaces = qs
                .iter()
                .map(|q| surface(&cfg, q, factors.as_deref()))
                .collect::<Result<Vec<_>>>()?;
            commands::cmd_obstruct(&cfg, &load_input(&cfg, input)?, surfaces, *h)?
        }
        Command::Koszul { ty } => commands::cmd_koszul(&cfg, parse_type(ty)?)?,
        Command::VerifyMin { input, surface: qs } => {
            let surfaces = qs
                .iter()
                .map(|q| surface(&cfg, q, None))
                .collect::<Result<Vec<_>>>()?;
            commands::cmd_verify_min(&cfg, &load_input(&cfg, input)?, surfaces)?
        }
        Command::PaperSuite { goldens, bless } => {
            let dir = goldens
                .clone()
                .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens"));
            let outcomes = suite::run(&cfg, &dir, *bless)?;
            let mut failed = 0;
            for o in &outcomes {
                match &o.failure {
                    None => println!("PASS {}", o.name),
                    Some(why) => {
                        failed += 1;
                        println!("FAIL {}: {why}", o.name);
                    }
                }
            }
            println!("{} passed, {failed} failed", outcomes.len() - failed);
            return Ok(if failed == 0 { 0 } else { 1 });
        }
    };
    emit(cli.json, &value);
    Ok(0)
}

/// 2 for parse errors, 3 for ideals that are not curves, 1 otherwise.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse { .. } | Error::UnknownVariable { .. } | Error::NotHomogeneous(_)) => 2,
        Some(Error::NotACurve { .. }) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
