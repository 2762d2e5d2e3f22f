//! Scripts and command execution: every front-end entry point builds a
//! [`Script`] and runs it through [`run_command`].

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use pdo_core::poly::rat;
use pdo_core::resultant::sampled_selections;
use pdo_core::*;

use crate::parse::{parse_expression, parse_polynomial, ParseError};
use crate::paper;
use crate::report::{Check, Payload, Provenance, Report};

/// Minor-walk selection for the resultant command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exhaustive,
    Sampled(usize),
}

impl ModeArg {
    pub fn parse(s: &str) -> Result<Self, String> {
        if s == "exhaustive" {
            return Ok(ModeArg::Exhaustive);
        }
        if let Some(k) = s.strip_prefix("sampled:") {
            let k: usize = k
                .parse()
                .map_err(|_| format!("invalid sample count in mode '{s}'"))?;
            if k == 0 {
                return Err("sample count must be positive".to_string());
            }
            return Ok(ModeArg::Sampled(k));
        }
        Err(format!(
            "unknown mode '{s}' (expected 'exhaustive' or 'sampled:<k>')"
        ))
    }
}

/// A single command with expression arguments still in source form.
#[derive(Debug, Clone)]
pub enum Command {
    Mult { a: String, b: String },
    Apply { op: String, coeff: Option<String> },
    Commutator { a: String, b: String },
    Conjugate { p: String, k: String, ansatz: Option<usize> },
    Resultant {
        ops: Vec<String>,
        mode: ModeArg,
        seed: u64,
        rank_only: bool,
    },
    KernelCheck { q: String },
    RlambdaCheck { q: String, lambda: Option<String> },
    RlambdaDecompose { q: String, lambda: Option<String> },
    Dform {
        ops: Vec<String>,
        rows: Option<Vec<usize>>,
        seed: u64,
    },
    VerifyPaper { fast: bool },
}

impl Command {
    pub fn echo(&self) -> String {
        match self {
            Command::Mult { a, b } => format!("mult {a} ; {b}"),
            Command::Apply { op, coeff } => match coeff {
                Some(c) => format!("apply {op} ; {c}"),
                None => format!("apply {op}"),
            },
            Command::Commutator { a, b } => format!("commutator {a} ; {b}"),
            Command::Conjugate { p, k, ansatz } => match ansatz {
                Some(n) => format!("conjugate {p} ; {k} --ansatz {n}"),
                None => format!("conjugate {p} ; {k}"),
            },
            Command::Resultant {
                ops,
                mode,
                seed,
                rank_only,
            } => {
                let mode = match mode {
                    ModeArg::Exhaustive => "exhaustive".to_string(),
                    ModeArg::Sampled(k) => format!("sampled:{k}"),
                };
                format!(
                    "resultant {} --mode {mode} --seed {seed}{}",
                    ops.join(" ; "),
                    if *rank_only { " --rank-only" } else { "" }
                )
            }
            Command::KernelCheck { q } => format!("kernel-check {q}"),
            Command::RlambdaCheck { q, lambda } => match lambda {
                Some(l) => format!("rlambda-check {q} --lambda-value {l}"),
                None => format!("rlambda-check {q}"),
            },
            Command::RlambdaDecompose { q, lambda } => match lambda {
                Some(l) => format!("rlambda-decompose {q} --lambda-value {l}"),
                None => format!("rlambda-decompose {q}"),
            },
            Command::Dform { ops, rows, seed } => {
                let rows = match rows {
                    Some(r) => format!(
                        " --rows {}",
                        r.iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                    None => format!(" --seed {seed}"),
                };
                format!("dform {}{}", ops.join(" ; "), rows)
            }
            Command::VerifyPaper { fast } => {
                format!("verify-paper{}", if *fast { " --fast" } else { "" })
            }
        }
    }
}

/// A parsed script: dimension, ordered bindings, and one command.
#[derive(Debug, Clone)]
pub struct Script {
    pub dim: usize,
    pub bindings: Vec<(String, String)>,
    pub command: Command,
}

/// Errors surfaced to the user with exit code 2 (usage/parse) unless noted.
#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    /// A module error propagated from the library, rendered with the
    /// failing subexpression.
    Math { context: String, message: String },
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Math { context, message } => write!(f, "{context}: {message}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn math<E: fmt::Display>(context: &str) -> impl Fn(E) -> CliError + '_ {
    move |e| CliError::Math {
        context: context.to_string(),
        message: e.to_string(),
    }
}

fn parse_lambda_value(src: &Option<String>) -> Result<MultiPoly, CliError> {
    match src {
        None => Ok(MultiPoly::var(VarId::lambda())),
        Some(text) => {
            let (n, d) = match text.split_once('/') {
                Some((n, d)) => (n, d),
                None => (text.as_str(), "1"),
            };
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid lambda value '{text}'")))?;
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("invalid lambda value '{text}'")))?;
            if d == 0 {
                return Err(CliError::Usage("lambda denominator is zero".to_string()));
            }
            Ok(MultiPoly::constant(pdo_core::ratio(n, d)))
        }
    }
}

/// Execute a script and assemble its report.
pub fn run_command(script: &Script) -> Result<Report, CliError> {
    let start = Instant::now();
    let dim = script.dim;
    if dim == 0 {
        return Err(CliError::Usage("--dim must be at least 1".to_string()));
    }
    let mut env: HashMap<String, DiffOp> = HashMap::new();
    for (name, source) in &script.bindings {
        let value = parse_expression(source, dim, &env)?;
        env.insert(name.clone(), value);
    }
    let mut provenance = Provenance {
        mode: None,
        seed: None,
        minors_examined: None,
    };
    let payload = match &script.command {
        Command::Mult { a, b } => {
            let a = parse_expression(a, dim, &env)?;
            let b = parse_expression(b, dim, &env)?;
            Payload::Operator(a.compose(&b).map_err(math("mult"))?)
        }
        Command::Apply { op, coeff } => {
            let op = parse_expression(op, dim, &env)?;
            let coeff = match coeff {
                Some(src) => {
                    let c = parse_expression(src, dim, &env)?;
                    crate::parse::as_scalar(&c).ok_or_else(|| CliError::Usage(
                        "the function coefficient must be a scalar expression".to_string(),
                    ))?
                }
                None => RatFun::one(),
            };
            let image = op
                .apply(&ExpFunction::new(dim, coeff))
                .map_err(math("apply"))?;
            Payload::Function {
                dim,
                coeff: image.coeff().clone(),
            }
        }
        Command::Commutator { a, b } => {
            let a = parse_expression(a, dim, &env)?;
            let b = parse_expression(b, dim, &env)?;
            Payload::Operator(a.commutator(&b).map_err(math("commutator"))?)
        }
        Command::Conjugate { p, k, ansatz } => {
            let p = parse_expression(p, dim, &env)?;
            let k = parse_expression(k, dim, &env)?;
            let bound = ansatz
                .unwrap_or_else(|| p.order().unwrap_or(0) + k.order().unwrap_or(0));
            match conjugate_through(&p, &k, bound).map_err(math("conjugate"))? {
                Some(l) => Payload::Operator(l),
                None => Payload::Verdict {
                    value: false,
                    detail: format!(
                        "no differential conjugate of order at most {bound} exists"
                    ),
                },
            }
        }
        Command::Resultant {
            ops,
            mode,
            seed,
            rank_only,
        } => {
            let parsed: Vec<DiffOp> = ops
                .iter()
                .map(|src| parse_expression(src, dim, &env))
                .collect::<Result<_, _>>()?;
            let matrix = build_resultant_matrix(&parsed).map_err(math("resultant"))?;
            if *rank_only {
                let report = resultant_rank(&matrix);
                provenance.mode = Some("rank-only".to_string());
                Payload::Resultant {
                    kind: if report.deficient {
                        "zero".to_string()
                    } else {
                        "nonzero (full rank; run a minor mode for the value)".to_string()
                    },
                    value: MultiPoly::zero(),
                    x_content: MultiPoly::zero(),
                    rank: report.rank,
                    columns: report.columns,
                }
            } else {
                let minor_mode = match mode {
                    ModeArg::Exhaustive => MinorMode::Exhaustive,
                    ModeArg::Sampled(k) => MinorMode::Sampled {
                        count: *k,
                        seed: *seed,
                    },
                };
                let out =
                    differential_resultant_of(&matrix, minor_mode).map_err(math("resultant"))?;
                provenance.mode = Some(match out.mode {
                    ResultantMode::Exhaustive => "exhaustive".to_string(),
                    ResultantMode::Sampled { count, .. } => {
                        format!("sampled:{count} (gcd of a subset: a multiple of the resultant)")
                    }
                    ResultantMode::RankOnly => "rank-only".to_string(),
                });
                if matches!(out.mode, ResultantMode::Sampled { .. }) {
                    provenance.seed = Some(*seed);
                }
                provenance.minors_examined = Some(out.minors_examined);
                Payload::Resultant {
                    kind: match out.kind {
                        ResultantKind::Zero => "zero".to_string(),
                        ResultantKind::Poly => "polynomial".to_string(),
                    },
                    value: out.value,
                    x_content: out.x_content,
                    rank: out.rank,
                    columns: out.columns,
                }
            }
        }
        Command::KernelCheck { q } => {
            if dim != 2 {
                return Err(CliError::Usage(
                    "kernel-check runs against the built-in two-dimensional example; \
                     use --dim 2"
                        .to_string(),
                ));
            }
            let q = parse_expression(q, dim, &env)?;
            let ex = build_example_k();
            let constraint = SpectralConstraint::new(1, 2, MultiPoly::var(VarId::lambda()));
            let value = kernel_membership(&ex.k, &q, &constraint).map_err(math("kernel-check"))?;
            Payload::Verdict {
                value,
                detail: "membership of q in the kernel ring of the built-in example \
                         along z1 z2 = lambda"
                    .to_string(),
            }
        }
        Command::RlambdaCheck { q, lambda } => {
            if dim != 2 {
                return Err(CliError::Usage(
                    "rlambda-check works in the two designated variables x1, x2; use --dim 2"
                        .to_string(),
                ));
            }
            let q = parse_polynomial(q, 2, &env)?;
            let lam = parse_lambda_value(lambda)?;
            let value = rlambda_membership(&q, VarId::x(1), VarId::x(2), &lam);
            Payload::Verdict {
                value,
                detail: "q_x, q_y and q_xy all divisible by x1*x2 - lambda".to_string(),
            }
        }
        Command::RlambdaDecompose { q, lambda } => {
            if dim != 2 {
                return Err(CliError::Usage(
                    "rlambda-decompose works in the two designated variables x1, x2; use --dim 2"
                        .to_string(),
                ));
            }
            let qp = parse_polynomial(q, 2, &env)?;
            let lam = parse_lambda_value(lambda)?;
            match rlambda_decompose(&qp, VarId::x(1), VarId::x(2), &lam) {
                Ok((g, c)) => {
                    let modulus = (&(&MultiPoly::var(VarId::x(1))
                        * &MultiPoly::var(VarId::x(2)))
                        - &lam)
                        .pow(3);
                    Payload::StructurePair { g, c, modulus }
                }
                Err(e @ DarbouxError::NotInRing) | Err(e @ DarbouxError::DegenerateLambda) => {
                    Payload::Verdict {
                        value: false,
                        detail: e.to_string(),
                    }
                }
                Err(e) => return Err(math("rlambda-decompose")(e)),
            }
        }
        Command::Dform { ops, rows, seed } => {
            let parsed: Vec<DiffOp> = ops
                .iter()
                .map(|src| parse_expression(src, dim, &env))
                .collect::<Result<_, _>>()?;
            let matrix = build_resultant_matrix(&parsed).map_err(math("dform"))?;
            let selection = match rows {
                Some(r) => {
                    let mut r = r.clone();
                    r.sort_unstable();
                    r.dedup();
                    if r.len() != matrix.col_count() {
                        return Err(CliError::Usage(format!(
                            "--rows must select {} distinct rows",
                            matrix.col_count()
                        )));
                    }
                    if r.iter().any(|&i| i >= matrix.row_count()) {
                        return Err(CliError::Usage(format!(
                            "row indices must be below {}",
                            matrix.row_count()
                        )));
                    }
                    r
                }
                None => {
                    // First nonsingular seeded selection.
                    provenance.seed = Some(*seed);
                    let mut found = None;
                    for sel in
                        sampled_selections(matrix.row_count(), matrix.col_count(), 64, *seed)
                    {
                        if !minor_value(&matrix, &sel).value.is_zero() {
                            found = Some(sel);
                            break;
                        }
                    }
                    found.ok_or_else(|| CliError::Math {
                        context: "dform".to_string(),
                        message: "no nonsingular minor among 64 seeded selections".to_string(),
                    })?
                }
            };
            let parts = dform_decomposition(&matrix, &selection).map_err(math("dform"))?;
            let sub: Vec<Vec<MultiPoly>> =
                selection.iter().map(|&r| matrix.rows[r].clone()).collect();
            let determinant = bareiss_det(&sub);
            let names: Vec<String> = (1..=parts.len()).map(|i| format!("D{i}")).collect();
            provenance.mode = Some(format!("rows {:?}", selection));
            Payload::OperatorList {
                names,
                ops: parts,
                determinant,
            }
        }
        Command::VerifyPaper { fast } => {
            let checks = paper::run_suite(*fast);
            Payload::Suite { checks }
        }
    };
    Ok(Report {
        command: script.command.echo(),
        dim,
        payload,
        provenance,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Convenience for tests: run a single command with no bindings.
pub fn run_single(dim: usize, command: Command) -> Result<Report, CliError> {
    run_command(&Script {
        dim,
        bindings: Vec::new(),
        command,
    })
}

/// A tiny deterministic check helper used by the suite.
pub(crate) fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

pub(crate) fn rat_const(n: i64) -> MultiPoly {
    MultiPoly::constant(rat(n))
}
