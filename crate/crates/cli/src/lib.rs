//! Library side of the command-line front end: the expression language,
//! scripts, command execution, reports, and the built-in reproduction
//! suite. The binary in `main.rs` is a thin argument-parsing shell over
//! [`commands::run_command`].

pub mod commands;
pub mod paper;
pub mod parse;
pub mod report;
pub mod script;

pub use commands::{run_command, run_single, CliError, Command, ModeArg, Script};
pub use parse::{parse_expression, parse_polynomial, ParseError, ParseErrorKind};
pub use report::{operator_from_json, operator_to_json, Payload, Report};
pub use script::parse_script;
