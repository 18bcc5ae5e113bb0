//! Argument dispatch and output rendering for the `dioph` command.
//!
//! Exit codes: 0 on success, 1 when an operation rejects its input, 2 for
//! usage and parse errors. Structured output is one JSON object
//! `{"command", "status", "payload"}` with every rational as a string.

mod args;
mod commands;

use clap::error::ErrorKind;
use clap::{CommandFactory, FromArgMatches};
use serde_json::{json, Value};

pub use args::{Cli, Command, Format};
pub use commands::MAX_ITERATE_STEPS;

/// Library operation behind each subcommand.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("parse", "parser::parse_equation"),
    ("check-point", "parser::is_point"),
    ("search", "parser::search_integer_points"),
    ("conic-sweep", "conic::Conic::sweep"),
    ("conic-slope", "conic::Conic::slope_between"),
    ("triples", "conic::pythagorean_triple"),
    ("cubic-tangent", "cubic::DiagonalCubic::tangent_step"),
    ("cubic-secant", "cubic::DiagonalCubic::secant_step"),
    ("cubic-iterate", "cubic::DiagonalCubic::tangent_iterates"),
    ("weierstrass-map", "cubic::DiagonalCubic::to_weierstrass"),
    ("ec-add", "elliptic::WeierstrassCurve::add"),
    ("ec-mul", "elliptic::WeierstrassCurve::multiply"),
    ("torsion-test", "elliptic::WeierstrassCurve::nagell_lutz_test"),
    ("torsion-subgroup", "elliptic::WeierstrassCurve::torsion_subgroup"),
    ("divide", "division::division_preimages"),
    ("divpoly", "division::division_polynomial"),
    ("roots", "poly::UniPoly::rational_roots"),
    ("discriminant", "poly::discriminant"),
    ("resultant", "poly::resultant"),
    ("is-unit", "etale::is_unit"),
    ("etale-check", "etale::is_etale"),
    ("fiber", "etale::geometric_fiber_count"),
    ("cover-check", "etale::covers_spec_z"),
    ("padic-log", "padic::padic_log"),
    ("iterint", "padic::iterated_integral"),
    ("shuffle", "padic::shuffle_check"),
    ("strassmann", "padic::strassmann_bound"),
    ("zeros", "padic::locate_zeros"),
];

#[derive(Debug, Clone, PartialEq)]
pub enum Status {
    Ok { payload: Value, text: String },
    /// The operation rejected its input.
    DomainError(String),
    /// The arguments could not be parsed.
    UsageError(String),
    /// Help or version text was requested.
    Info(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    /// Subcommand name, empty when none was recognized.
    pub command: String,
    pub format: Format,
    pub status: Status,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok { .. } | Status::Info(_) => 0,
            Status::DomainError(_) => 1,
            Status::UsageError(_) => 2,
        }
    }
}

/// Bytes destined for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Rendered {
    pub stdout: String,
    pub stderr: String,
}

fn subcommand_names() -> Vec<String> {
    Cli::command()
        .get_subcommands()
        .map(|c| c.get_name().to_string())
        .collect()
}

/// Best-effort reading of `--format` when full parsing failed.
fn sniff_format(argv: &[String]) -> Format {
    let mut it = argv.iter();
    while let Some(a) = it.next() {
        let value = match a.strip_prefix("--format") {
            Some("") => it.next().map(String::as_str),
            Some(rest) => rest.strip_prefix('='),
            None => None,
        };
        if value == Some("structured") {
            return Format::Structured;
        }
    }
    Format::Text
}

/// First argument after the program name that is not an option.
fn sniff_command(argv: &[String]) -> String {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--format" {
            it.next();
        } else if !a.starts_with('-') {
            return a.clone();
        }
    }
    String::new()
}

fn usage_message(e: &clap::Error) -> String {
    if e.kind() == ErrorKind::InvalidSubcommand || e.kind() == ErrorKind::MissingSubcommand
        || e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
    {
        return format!("expected a subcommand, one of: {}", subcommand_names().join(", "));
    }
    let rendered = e.render().to_string();
    let first = rendered.lines().next().unwrap_or_default();
    first.trim_start_matches("error: ").trim().to_string()
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let matches = match Cli::command().try_get_matches_from(&argv) {
        Ok(m) => m,
        Err(e) => {
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Info(e.render().to_string()),
                _ => Status::UsageError(usage_message(&e)),
            };
            let command = match e.kind() {
                ErrorKind::InvalidSubcommand => String::new(),
                _ => sniff_command(&argv),
            };
            return CommandResult {
                command,
                format: sniff_format(&argv),
                status,
            };
        }
    };
    let command = matches.subcommand_name().unwrap_or_default().to_string();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            return CommandResult {
                command,
                format: sniff_format(&argv),
                status: Status::UsageError(usage_message(&e)),
            }
        }
    };
    let status = match commands::run(&cli.command) {
        Ok(out) => Status::Ok {
            payload: out.payload,
            text: out.text,
        },
        Err(msg) => Status::DomainError(msg),
    };
    CommandResult {
        command,
        format: cli.format,
        status,
    }
}

/// Renders a result; payloads go to stdout, errors to stderr.
pub fn emit(result: &CommandResult, format: Format) -> Rendered {
    let envelope = |status: &str, payload: Value| {
        let v = json!({ "command": result.command, "status": status, "payload": payload });
        format!("{}\n", serde_json::to_string(&v).expect("JSON values serialize"))
    };
    let error_payload = |kind: &str, msg: &str| json!({ "kind": kind, "message": msg });
    match (&result.status, format) {
        (Status::Info(text), _) => Rendered {
            stdout: text.clone(),
            stderr: String::new(),
        },
        (Status::Ok { text, .. }, Format::Text) => Rendered {
            stdout: format!("{text}\n"),
            stderr: String::new(),
        },
        (Status::Ok { payload, .. }, Format::Structured) => Rendered {
            stdout: envelope("ok", payload.clone()),
            stderr: String::new(),
        },
        (Status::DomainError(msg) | Status::UsageError(msg), Format::Text) => Rendered {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        (Status::DomainError(msg), Format::Structured) => Rendered {
            stdout: String::new(),
            stderr: envelope("error", error_payload("domain", msg)),
        },
        (Status::UsageError(msg), Format::Structured) => Rendered {
            stdout: String::new(),
            stderr: envelope("error", error_payload("usage", msg)),
        },
    }
}

/// Dispatches and renders in the format requested on the command line.
pub fn run<I, T>(argv: I) -> (Rendered, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let result = dispatch(argv);
    (emit(&result, result.format), result.exit_code())
}
