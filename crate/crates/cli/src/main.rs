//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 arithmetic overflow.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use g2ido::multiplets::{build, classify};
use g2ido::parabolic::ParabolicName;
use g2ido::rational::Rational;
use g2ido::verify::verify_fixtures;
use g2ido::weights::{weyl_dim, WeightLabels};
use g2ido::Error;

#[derive(Parser)]
#[command(
    name = "g2ido",
    about = "Multiplets and invariant differential operators for G2(2)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the six positive roots with ε-coordinates and dual roots
    Roots {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Print the twelve Weyl group elements and their label actions
    Weyl {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Build the multiplet for (m1, m2) and a parabolic
    Multiplet {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long, default_value = "P0")]
        parabolic: String,
        #[arg(long, default_value = "table")]
        format: String,
        /// Write the document to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the case label for (m1, m2) and a parabolic
    Classify {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
        #[arg(long, default_value = "P0")]
        parabolic: String,
    },
    /// Print the parabolic subalgebra catalog
    Parabolics {
        #[arg(long, default_value = "table")]
        format: String,
    },
    /// Dimension of the finite-dimensional representation with labels (m1, m2)
    Dim {
        #[arg(long)]
        m1: String,
        #[arg(long)]
        m2: String,
    },
    /// Run the built-in fixture suite
    Verify {
        #[arg(long, default_value = "table")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Parse(_) => ExitCode::from(2),
                Error::Overflow | Error::ZeroDenominator => ExitCode::from(3),
                // Internal invariants; not reachable through the CLI surface.
                Error::Cycle | Error::MissingKsPartner(_) => ExitCode::from(3),
            }
        }
    }
}

fn parse_rational(flag: &str, text: &str) -> Result<Rational, Error> {
    text.parse()
        .map_err(|_| Error::Parse(format!("--{flag}: expected \"p\" or \"p/q\" with q > 0, got {text:?}")))
}

fn parse_parabolic(text: &str) -> Result<ParabolicName, Error> {
    text.parse()
        .map_err(|_| Error::Parse(format!("--parabolic: expected P0, P1 or P2, got {text:?}")))
}

fn bad_format(command: &str, format: &str) -> Error {
    Error::Parse(format!("--format: unknown format {format:?} for {command}"))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Roots { format } => {
            let payload = match format.as_str() {
                "table" => render::roots_table(),
                "json" => render::roots_json(),
                other => return Err(bad_format("roots", other)),
            };
            print!("{payload}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Weyl { format } => {
            let payload = match format.as_str() {
                "table" => render::weyl_table(),
                "json" => render::weyl_json(),
                other => return Err(bad_format("weyl", other)),
            };
            print!("{payload}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Multiplet {
            m1,
            m2,
            parabolic,
            format,
            out,
        } => {
            let m1 = parse_rational("m1", &m1)?;
            let m2 = parse_rational("m2", &m2)?;
            let p = parse_parabolic(&parabolic)?;
            let graph = build(&m1, &m2, p)?;
            let payload = match format.as_str() {
                "table" => render::multiplet_table(&graph),
                "json" => render::multiplet_json(&graph),
                "dot" => render::multiplet_dot(&graph),
                other => return Err(bad_format("multiplet", other)),
            };
            match out {
                Some(path) => std::fs::write(&path, payload)
                    .map_err(|e| Error::Parse(format!("--out: cannot write {path:?}: {e}")))?,
                None => print!("{payload}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { m1, m2, parabolic } => {
            let m1 = parse_rational("m1", &m1)?;
            let m2 = parse_rational("m2", &m2)?;
            let p = parse_parabolic(&parabolic)?;
            println!("{}", classify(&m1, &m2, p)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Parabolics { format } => {
            let payload = match format.as_str() {
                "table" => render::parabolics_table(),
                "json" => render::parabolics_json(),
                other => return Err(bad_format("parabolics", other)),
            };
            print!("{payload}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Dim { m1, m2 } => {
            let m1 = parse_rational("m1", &m1)?;
            let m2 = parse_rational("m2", &m2)?;
            if !m1.is_natural() || !m2.is_natural() {
                return Err(Error::Parse(
                    "dim expects positive integer labels --m1 and --m2".to_string(),
                ));
            }
            let dim = weyl_dim(&WeightLabels::new(m1, m2))?;
            println!("{dim}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { format } => {
            let report = verify_fixtures();
            let (payload, all_passed) = match format.as_str() {
                "table" => render::verify_table(&report),
                "json" => render::verify_json(&report),
                other => return Err(bad_format("verify", other)),
            };
            print!("{payload}");
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
