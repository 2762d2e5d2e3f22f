//! Script files: a dimension line, ordered `let` bindings, and one command.
//!
//! ```text
//! # crossed derivative pair
//! dim 2
//! let A = D1^2 - D2^2
//! let B = x2*D1 + x1*D2
//! commutator A ; B
//! ```
//!
//! Expression arguments are separated by `;` (expressions themselves never
//! contain semicolons); flags come after the expressions.

use crate::commands::{CliError, Command, ModeArg, Script};

pub fn parse_script(src: &str) -> Result<Script, CliError> {
    let mut dim: Option<usize> = None;
    let mut bindings: Vec<(String, String)> = Vec::new();
    let mut command: Option<Command> = None;
    for (lineno, raw) in src.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| CliError::Usage(format!("line {}: {}", lineno + 1, msg));
        if command.is_some() {
            return Err(err("unexpected content after the command line".to_string()));
        }
        if let Some(rest) = line.strip_prefix("dim") {
            if rest.starts_with(char::is_whitespace) {
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid dimension '{}'", rest.trim())))?;
                if dim.replace(n).is_some() {
                    return Err(err("duplicate dim line".to_string()));
                }
                continue;
            }
        }
        if let Some(rest) = line.strip_prefix("let ") {
            let (name, value) = rest
                .split_once('=')
                .ok_or_else(|| err("expected 'let NAME = expression'".to_string()))?;
            let name = name.trim();
            if name.is_empty()
                || !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_')
                || name.chars().next().is_some_and(|c| c.is_ascii_digit())
            {
                return Err(err(format!("invalid binding name '{name}'")));
            }
            bindings.push((name.to_string(), value.trim().to_string()));
            continue;
        }
        command = Some(parse_command_line(line).map_err(err)?);
    }
    let dim = dim.ok_or_else(|| CliError::Usage("script needs a 'dim N' line".to_string()))?;
    let command =
        command.ok_or_else(|| CliError::Usage("script needs a command line".to_string()))?;
    Ok(Script {
        dim,
        bindings,
        command,
    })
}

fn parse_command_line(line: &str) -> Result<Command, String> {
    let (verb, rest) = match line.split_once(char::is_whitespace) {
        Some((v, r)) => (v, r.trim()),
        None => (line, ""),
    };
    // Split flags (tokens starting with --) off the end.
    let mut flag_start = rest.len();
    for (idx, _) in rest.match_indices("--") {
        if idx == 0 || rest[..idx].ends_with(char::is_whitespace) {
            flag_start = idx;
            break;
        }
    }
    let (exprs_part, flags_part) = rest.split_at(flag_start);
    let exprs: Vec<String> = exprs_part
        .split(';')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    let mut flags: std::collections::HashMap<String, String> = std::collections::HashMap::new();
    let mut toks = flags_part.split_whitespace().peekable();
    while let Some(tok) = toks.next() {
        let name = tok
            .strip_prefix("--")
            .ok_or_else(|| format!("expected a flag, found '{tok}'"))?;
        match name.split_once('=') {
            Some((k, v)) => {
                flags.insert(k.to_string(), v.to_string());
            }
            None => {
                let value = if matches!(name, "rank-only" | "fast") {
                    "true".to_string()
                } else {
                    toks.next()
                        .ok_or_else(|| format!("flag --{name} needs a value"))?
                        .to_string()
                };
                flags.insert(name.to_string(), value);
            }
        }
    }
    let arity = |want: usize| -> Result<(), String> {
        if exprs.len() == want {
            Ok(())
        } else {
            Err(format!(
                "{verb} takes {want} expression argument(s) separated by ';', found {}",
                exprs.len()
            ))
        }
    };
    let seed: u64 = flags
        .get("seed")
        .map(|s| s.parse().map_err(|_| format!("invalid seed '{s}'")))
        .transpose()?
        .unwrap_or(0);
    let cmd = match verb {
        "mult" => {
            arity(2)?;
            Command::Mult {
                a: exprs[0].clone(),
                b: exprs[1].clone(),
            }
        }
        "apply" => {
            if exprs.is_empty() || exprs.len() > 2 {
                return Err("apply takes one or two expression arguments".to_string());
            }
            Command::Apply {
                op: exprs[0].clone(),
                coeff: exprs.get(1).cloned(),
            }
        }
        "commutator" => {
            arity(2)?;
            Command::Commutator {
                a: exprs[0].clone(),
                b: exprs[1].clone(),
            }
        }
        "conjugate" => {
            arity(2)?;
            let ansatz = flags
                .get("ansatz")
                .map(|s| s.parse().map_err(|_| format!("invalid ansatz '{s}'")))
                .transpose()?;
            Command::Conjugate {
                p: exprs[0].clone(),
                k: exprs[1].clone(),
                ansatz,
            }
        }
        "resultant" => {
            if exprs.is_empty() {
                return Err("resultant needs operator arguments".to_string());
            }
            let mode = match flags.get("mode") {
                Some(s) => ModeArg::parse(s)?,
                None => ModeArg::Exhaustive,
            };
            Command::Resultant {
                ops: exprs,
                mode,
                seed,
                rank_only: flags.contains_key("rank-only"),
            }
        }
        "kernel-check" => {
            arity(1)?;
            Command::KernelCheck {
                q: exprs[0].clone(),
            }
        }
        "rlambda-check" => {
            arity(1)?;
            Command::RlambdaCheck {
                q: exprs[0].clone(),
                lambda: flags.get("lambda-value").cloned(),
            }
        }
        "rlambda-decompose" => {
            arity(1)?;
            Command::RlambdaDecompose {
                q: exprs[0].clone(),
                lambda: flags.get("lambda-value").cloned(),
            }
        }
        "dform" => {
            if exprs.is_empty() {
                return Err("dform needs operator arguments".to_string());
            }
            let rows = flags
                .get("rows")
                .map(|s| {
                    s.split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| format!("invalid row list '{s}'"))
                })
                .transpose()?;
            Command::Dform {
                ops: exprs,
                rows,
                seed,
            }
        }
        "verify-paper" => Command::VerifyPaper {
            fast: flags.contains_key("fast"),
        },
        other => return Err(format!("unknown command '{other}'")),
    };
    Ok(cmd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_script() {
        let src = "\
# crossed derivative pair
dim 2
let A = D1^2 - D2^2
let B = x2*D1 + x1*D2
commutator A ; B
";
        let script = parse_script(src).unwrap();
        assert_eq!(script.dim, 2);
        assert_eq!(script.bindings.len(), 2);
        assert!(matches!(script.command, Command::Commutator { .. }));
        let report = crate::commands::run_command(&script).unwrap();
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn flags_on_command_lines() {
        let src = "dim 2\nresultant D1 ; D2 ; D1+ D2 --mode sampled:3 --seed 9 \n";
        let script = parse_script(src).unwrap();
        match script.command {
            Command::Resultant {
                ops,
                mode,
                seed,
                rank_only,
            } => {
                assert_eq!(ops.len(), 3);
                assert_eq!(mode, ModeArg::Sampled(3));
                assert_eq!(seed, 9);
                assert!(!rank_only);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_pieces_are_usage_errors() {
        assert!(parse_script("commutator D1 ; D2\n").is_err()); // no dim
        assert!(parse_script("dim 2\n").is_err()); // no command
        assert!(parse_script("dim 2\nlet 1bad = D1\nmult D1 ; D1\n").is_err());
    }
}
