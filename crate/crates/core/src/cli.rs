//! Command-line driver. Exit codes: 0 success, 1 a check failed, 2 usage or
//! validation error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{cartan_matrix, cartan_matrix_oracle, hom_basis, DEFAULT_PATH_CAP};
use crate::checks::{path_image, run_suite, CheckConfig, Suite};
use crate::error::Error;
use crate::grading::{hilbert_table, Ring, WeightVector};
use crate::mckay::mckay_quiver;
use crate::quiver::{
    build_gamma, export_dot, gamma_vertex, serialize_dsl, to_json, QuiverWithRelations,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mckay",
    version,
    about = "Weighted McKay quivers and the quiver with relations Γ(a_1, ..., a_n)"
)]
pub struct Cli {
    /// Write the payload to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WeightArgs {
    /// Weights a_1 ... a_n (at least two, positive, gcd 1).
    #[arg(required = true, allow_negative_numbers = true)]
    weights: Vec<i64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Dsl,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// McKay quiver of the cyclic group.
    Mckay {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The quiver with relations Γ(a).
    Gamma {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value = "dsl")]
        format: Format,
    },
    /// Cartan matrix of CΓ(a).
    Cartan {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Use the linear-algebra oracle instead of normal forms.
        #[arg(long)]
        oracle: bool,
        /// Largest raw path space the oracle accepts.
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        cap: usize,
    },
    /// Hilbert function of R or A over 0..=max.
    Hilbert {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, default_value = "R")]
        ring: Ring,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Normal-form basis of e_k CΓ e_l.
    Basis {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        from: u32,
        #[arg(long)]
        to: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification checks.
    Check {
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = CheckConfig::default().kmax)]
        kmax: usize,
        #[arg(long, default_value_t = CheckConfig::default().trials)]
        trials: usize,
        /// Multiplicativity samples for the isomorphism check.
        #[arg(long, default_value_t = CheckConfig::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = CheckConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Json(_) => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn unsupported(command: &str, format: Format, allowed: &str) -> Failure {
    Failure::Usage(format!(
        "{command} does not support --format {}; use one of {allowed}",
        format
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    ))
}

fn quiver_payload(
    qwr: &QuiverWithRelations,
    format: Format,
    command: &str,
) -> Result<String, Failure> {
    match format {
        Format::Json => Ok(to_json(qwr)? + "\n"),
        Format::Dot => Ok(export_dot(&qwr.quiver)),
        Format::Dsl if command == "gamma" => Ok(serialize_dsl(qwr)),
        _ if command == "gamma" => Err(unsupported(command, format, "json, dot, dsl")),
        _ => Err(unsupported(command, format, "json, dot")),
    }
}

/// Payload and exit code for a parsed command line.
fn execute(command: Command) -> Result<(String, i32), Failure> {
    match command {
        Command::Mckay { w, format } => {
            let w = WeightVector::new(&w.weights)?;
            let qwr = QuiverWithRelations::new(mckay_quiver(&w), Vec::new(), Some(w))?;
            Ok((quiver_payload(&qwr, format, "mckay")?, EXIT_OK))
        }
        Command::Gamma { w, format } => {
            let w = WeightVector::new(&w.weights)?;
            Ok((quiver_payload(&build_gamma(&w), format, "gamma")?, EXIT_OK))
        }
        Command::Cartan {
            w,
            format,
            oracle,
            cap,
        } => {
            let w = WeightVector::new(&w.weights)?;
            let g = build_gamma(&w);
            let m = if oracle {
                cartan_matrix_oracle(&g, cap)?
            } else {
                cartan_matrix(&g)?
            };
            let payload = match format {
                Format::Json => m.to_json()? + "\n",
                Format::Text => m.to_text(),
                other => return Err(unsupported("cartan", other, "json, text")),
            };
            Ok((payload, EXIT_OK))
        }
        Command::Hilbert {
            w,
            ring,
            max,
            format,
        } => {
            let w = WeightVector::new(&w.weights)?;
            let t = hilbert_table(&w, ring, max);
            let payload = match format {
                Format::Json => t.to_json()? + "\n",
                Format::Text => t.to_text(),
                other => return Err(unsupported("hilbert", other, "json, text")),
            };
            Ok((payload, EXIT_OK))
        }
        Command::Basis {
            w,
            from,
            to,
            format,
        } => {
            let w = WeightVector::new(&w.weights)?;
            let n = w.total();
            for k in [from, to] {
                if k == 0 || k >= n {
                    return Err(Failure::Usage(format!(
                        "vertex rho{k} is not in Γ; valid range is 1..={}",
                        n - 1
                    )));
                }
            }
            let g = build_gamma(&w);
            let basis = hom_basis(&g, gamma_vertex(from), gamma_vertex(to))?;
            let payload = match format {
                Format::Text => basis
                    .iter()
                    .map(|p| format!("{}\t{}\n", p.display(&g.quiver), path_image(&w, &g, p)))
                    .collect(),
                Format::Json => {
                    let entries: Vec<_> = basis
                        .iter()
                        .map(|p| {
                            json!({
                                "arrows": p.arrows(),
                                "names": p.arrows().iter().map(|&id| g.quiver.arrow(id).name.clone()).collect::<Vec<_>>(),
                                "monomial": path_image(&w, &g, p).exponents(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "weights": w,
                        "from": format!("rho{from}"),
                        "to": format!("rho{to}"),
                        "basis": entries,
                    });
                    serde_json::to_string_pretty(&doc).map_err(Error::from)? + "\n"
                }
                other => return Err(unsupported("basis", other, "json, text")),
            };
            Ok((payload, EXIT_OK))
        }
        Command::Check {
            w,
            suite,
            kmax,
            trials,
            samples,
            seed,
            cap,
            format,
        } => {
            let w = WeightVector::new(&w.weights)?;
            if kmax == 0 || trials == 0 {
                return Err(Failure::Usage(
                    "--kmax and --trials must be at least 1".into(),
                ));
            }
            let config = CheckConfig {
                kmax,
                trials,
                samples,
                seed,
                oracle_cap: cap,
            };
            let report = run_suite(&w, suite, &config);
            let payload = match format {
                Format::Text => report.to_text(),
                Format::Json => serde_json::to_string_pretty(&report).map_err(Error::from)? + "\n",
                other => return Err(unsupported("check", other, "json, text")),
            };
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            Ok((payload, code))
        }
    }
}

/// Parses `argv` (including the program name), runs the command and writes
/// the payload to `stdout` (or `--out`) and diagnostics to `stderr`.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(stdout, "{text}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{text}");
            return EXIT_USAGE;
        }
    };
    let out = cli.out.clone();
    match execute(cli.command) {
        Ok((payload, code)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, payload) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            } else if stdout.write_all(payload.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}
