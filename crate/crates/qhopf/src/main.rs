use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qhopf::bundles::{build_e, build_f, chern_pairing, Side};
use qhopf::cli::{
    self, parse_mu_range, parse_rational, render_pairing_text, render_projector_text,
    render_report_text, Check, Format, VerifyConfig,
};
use qhopf::parser::parse_expr;

#[derive(Parser)]
#[command(name = "qhopf", version, about = "Exact quantum Hopf line bundle computations over the standard Podles quantum sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normalize an expression to its PBW form
    Normalize {
        /// Expression, e.g. "a*d - q^-1*b*c"
        expr: String,
    },
    /// Print a projector matrix e_mu (left) or f_mu (right)
    Projector {
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compute the rank and Chern pairings of a projector
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        mu: i64,
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run the verification suites over a range of winding numbers
    Verify {
        /// Inclusive winding-number range A..B
        #[arg(long, default_value = "-4..4", allow_hyphen_values = true)]
        mu_range: String,
        /// Comma-separated subset of: idempotent, pairing, rank,
        /// coinvariance, closed_forms, hopf_axioms, confluence
        #[arg(long)]
        checks: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Also run the numeric cross-check at this rational q, e.g. 1/2
        #[arg(long, allow_hyphen_values = true)]
        q_numeric: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include per-check timing in the report (breaks byte-for-byte
        /// reproducibility of the output)
        #[arg(long)]
        timing: bool,
        /// Write the report to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn build(mu: i64, side: Side) -> qhopf::bundles::ProjMatrix {
    match side {
        Side::Left => build_e(mu),
        Side::Right => build_f(mu),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Normalize { expr } => match parse_expr(&expr) {
            Ok(p) => {
                println!("{}", p.rendered());
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Projector { mu, side, format } => {
            let m = build(mu, side.into());
            match Format::from(format) {
                Format::Text => print!("{}", render_projector_text(&m)),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&cli::projector_json(&m)).unwrap()
                ),
            }
            ExitCode::SUCCESS
        }
        Command::Pair { mu, side, format } => {
            let m = build(mu, side.into());
            match chern_pairing(&m) {
                Ok(r) => {
                    match Format::from(format) {
                        Format::Text => print!("{}", render_pairing_text(&r)),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&cli::pairing_json_value(&r)).unwrap()
                        ),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("pairing failed: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Verify {
            mu_range,
            checks,
            format,
            q_numeric,
            seed,
            timing,
            output,
        } => {
            let parsed = (|| -> Result<VerifyConfig, cli::UsageError> {
                let (mu_min, mu_max) = parse_mu_range(&mu_range)?;
                let checks = match checks {
                    None => Check::ALL.into_iter().collect(),
                    Some(list) => {
                        let mut set = BTreeSet::new();
                        for item in list.split(',') {
                            let item = item.trim();
                            if item.is_empty() {
                                continue;
                            }
                            set.insert(
                                item.parse::<Check>().map_err(cli::UsageError)?,
                            );
                        }
                        set
                    }
                };
                let q_numeric = q_numeric.as_deref().map(parse_rational).transpose()?;
                Ok(VerifyConfig {
                    mu_min,
                    mu_max,
                    checks,
                    q_numeric,
                    format: format.into(),
                    seed,
                    timing,
                })
            })();
            let config = match parsed {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("usage error: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = match cli::run_verify(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("usage error: {e}");
                    return ExitCode::from(2);
                }
            };
            let rendered = match config.format {
                Format::Text => render_report_text(&report),
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&report).unwrap())
                }
            };
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &rendered) {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{rendered}"),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
