use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pdo_cli::commands::{run_command, CliError, Command, ModeArg, Script};
use pdo_cli::script::parse_script;

/// Exact arithmetic for partial differential operators: composition,
/// commutators, factorization rings, and shifted differential resultants.
#[derive(Parser)]
#[command(name = "pdo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Verb,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Verb {
    /// Compose two operators: A . B.
    Mult {
        #[arg(long)]
        dim: usize,
        a: String,
        b: String,
    },
    /// Apply an operator to coeff * exp(x1 z1 + ... + xn zn).
    Apply {
        #[arg(long)]
        dim: usize,
        op: String,
        coeff: Option<String>,
    },
    /// The commutator A . B - B . A.
    Commutator {
        #[arg(long)]
        dim: usize,
        a: String,
        b: String,
    },
    /// The conjugate K . P . K^-1 as an operator L with L . K = K . P,
    /// when it is differential.
    Conjugate {
        #[arg(long)]
        dim: usize,
        p: String,
        k: String,
        /// Order bound for the unknown operator (default: ord P + ord K).
        #[arg(long)]
        ansatz: Option<usize>,
    },
    /// The shifted differential resultant of n+1 operators.
    Resultant {
        #[arg(long)]
        dim: usize,
        ops: Vec<String>,
        /// exhaustive | sampled:<k>
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only decide zero vs nonzero by matrix rank.
        #[arg(long)]
        rank_only: bool,
    },
    /// Membership of a constant-coefficient operator in the kernel ring of
    /// the built-in example (dim must be 2).
    KernelCheck {
        #[arg(long)]
        dim: usize,
        q: String,
    },
    /// Membership of a polynomial in x1, x2 in the structure ring.
    RlambdaCheck {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        q: String,
        /// Rational specialization of lambda (default: symbolic).
        #[arg(long)]
        lambda_value: Option<String>,
    },
    /// Structure decomposition q = g (x1 x2 - lambda)^3 + c.
    RlambdaDecompose {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        q: String,
        #[arg(long)]
        lambda_value: Option<String>,
    },
    /// Decompose a maximal minor over the generating operators.
    Dform {
        #[arg(long)]
        dim: usize,
        ops: Vec<String>,
        /// Comma-separated row selection (default: first nonsingular
        /// seeded selection).
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a script file (dim line, let bindings, one command).
    Script { file: PathBuf },
    /// Run the built-in reproduction suite.
    VerifyPaper {
        /// Sample fewer minors in the resultant check.
        #[arg(long)]
        fast: bool,
    },
}

fn to_script(verb: Verb) -> Result<Script, CliError> {
    let script = match verb {
        Verb::Mult { dim, a, b } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Mult { a, b },
        },
        Verb::Apply { dim, op, coeff } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Apply { op, coeff },
        },
        Verb::Commutator { dim, a, b } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Commutator { a, b },
        },
        Verb::Conjugate { dim, p, k, ansatz } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Conjugate { p, k, ansatz },
        },
        Verb::Resultant {
            dim,
            ops,
            mode,
            seed,
            rank_only,
        } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Resultant {
                ops,
                mode: ModeArg::parse(&mode).map_err(CliError::Usage)?,
                seed,
                rank_only,
            },
        },
        Verb::KernelCheck { dim, q } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::KernelCheck { q },
        },
        Verb::RlambdaCheck {
            dim,
            q,
            lambda_value,
        } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::RlambdaCheck {
                q,
                lambda: lambda_value,
            },
        },
        Verb::RlambdaDecompose {
            dim,
            q,
            lambda_value,
        } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::RlambdaDecompose {
                q,
                lambda: lambda_value,
            },
        },
        Verb::Dform {
            dim,
            ops,
            rows,
            seed,
        } => Script {
            dim,
            bindings: Vec::new(),
            command: Command::Dform { ops, rows, seed },
        },
        Verb::Script { file } => {
            let src = std::fs::read_to_string(&file).map_err(|e| {
                CliError::Usage(format!("cannot read {}: {e}", file.display()))
            })?;
            parse_script(&src)?
        }
        Verb::VerifyPaper { fast } => Script {
            dim: 2,
            bindings: Vec::new(),
            command: Command::VerifyPaper { fast },
        },
    };
    Ok(script)
}

fn emit(text: String, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out;
    let run = std::panic::catch_unwind(move || -> Result<i32, CliError> {
        let script = to_script(cli.command)?;
        let report = run_command(&script)?;
        let text = match format {
            Format::Text => report.to_text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&report.to_json())
                    .expect("report JSON serializes");
                s.push('\n');
                s
            }
        };
        emit(text, &out).map_err(|e| CliError::Usage(format!("cannot write output: {e}")))?;
        Ok(report.exit_code())
    });
    match run {
        Ok(Ok(code)) => ExitCode::from(code as u8),
        Ok(Err(err @ CliError::Math { .. })) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(3)
        }
    }
}
