//! `umbra`: exact umbral calculus from the command line.

mod error;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use umbral::combinatorics::{stirling_first_classical, stirling_second_classical};
use umbral::dsl::{parse, pretty_print};
use umbral::scalar::{factorial, format_rational, parse_rational};
use umbral::sheffer::{self, Provenance};
use umbral::special::{self, RecurrenceReport};
use umbral::workspace::Workspace;
use umbral::{evaluate, Error, Expr, Poly, Rational, Registry, ShefferPair, TruncatedEGF, Umbra};

use error::CliError;
use render::Format;

const DEFAULT_ORDER: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "umbra", version, about = "Exact umbral calculus: moments, Sheffer sequences, connection constants")]
struct Cli {
    /// Truncation order N: moments 0..=N are computed.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(0..=64))]
    order: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// JSON file holding user-defined umbrae.
    #[arg(long, global = true, env = "UMBRA_WORKSPACE", default_value = "./umbrae.json")]
    workspace: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Moments of umbral expressions.
    Eval {
        #[arg(required = true)]
        expressions: Vec<String>,
    },
    /// Sheffer sequence for the pair (alpha, gamma).
    Sheffer {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        gamma: String,
    },
    /// Associated sequence of gamma.
    Associated {
        #[arg(long)]
        gamma: String,
    },
    /// Appell sequence of alpha.
    Appell {
        #[arg(long)]
        alpha: String,
    },
    /// Connection constants between two Sheffer sequences.
    Connect {
        #[arg(long)]
        from_alpha: String,
        #[arg(long)]
        from_gamma: String,
        #[arg(long)]
        to_alpha: String,
        #[arg(long)]
        to_gamma: String,
    },
    /// Triangle of Stirling numbers, computed umbrally.
    Stirling {
        kind: StirlingKind,
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=64))]
        n: u16,
    },
    /// Abel polynomials of gamma.
    Abel {
        #[arg(long)]
        gamma: String,
    },
    /// Worked recurrence examples.
    Example { name: ExampleName },
    /// Store an umbra in the workspace.
    #[command(group(ArgGroup::new("source").required(true).args(["moments", "egf", "cumulants"])))]
    Define {
        name: String,
        /// Comma-separated moments a_0, a_1, ... (a_0 must be 1).
        #[arg(long)]
        moments: Option<String>,
        /// Comma-separated coefficients c_0, c_1, ... of the generating function.
        #[arg(long)]
        egf: Option<String>,
        /// Comma-separated cumulants k_1, k_2, ...
        #[arg(long)]
        cumulants: Option<String>,
    },
    /// Built-in and user-defined umbrae.
    List,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StirlingKind {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExampleName {
    BernoulliDiff,
    BackwardDiff,
    Fibonacci,
}

const BUILTINS: [(&str, &str); 7] = [
    ("eps", "augmentation: 1, 0, 0, ..."),
    ("u", "unity: 1, 1, 1, ..."),
    ("chi", "singleton: 1, 1, 0, 0, ..."),
    ("bell", "Bell numbers"),
    ("bern", "Bernoulli numbers"),
    ("ubar", "(-1)^n n!"),
    ("uinv", "inverse of unity: 1, -1, 1, ..."),
];

struct Ctx {
    order: Option<usize>,
    format: Format,
    workspace: PathBuf,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let ctx = Ctx { order: cli.order.map(usize::from), format: cli.format, workspace: cli.workspace };
    match run(&ctx, cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.render());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Result<String, CliError> {
    match command {
        Command::Eval { expressions } => eval(ctx, &expressions),
        Command::Sheffer { alpha, gamma } => {
            let (exprs, order) = prepare(ctx, &[&alpha, &gamma])?;
            let reg = registry(ctx)?;
            let pair = ShefferPair::new(evaluate(&exprs[0], order, &reg)?, evaluate(&exprs[1], order, &reg)?)?;
            let mut seq = sheffer::sheffer_moments(&pair)?;
            seq.provenance = Provenance::Sheffer { alpha: pretty_print(&exprs[0]), gamma: pretty_print(&exprs[1]) };
            sequence_out(ctx, "sheffer", seq)
        }
        Command::Associated { gamma } => {
            let (exprs, order) = prepare(ctx, &[&gamma])?;
            let mut seq = sheffer::associated_moments(&evaluate(&exprs[0], order, &registry(ctx)?)?)?;
            seq.provenance = Provenance::Associated { gamma: pretty_print(&exprs[0]) };
            sequence_out(ctx, "associated", seq)
        }
        Command::Appell { alpha } => {
            let (exprs, order) = prepare(ctx, &[&alpha])?;
            let mut seq = sheffer::appell_moments(&evaluate(&exprs[0], order, &registry(ctx)?)?)?;
            seq.provenance = Provenance::Appell { alpha: pretty_print(&exprs[0]) };
            sequence_out(ctx, "appell", seq)
        }
        Command::Abel { gamma } => {
            let (exprs, order) = prepare(ctx, &[&gamma])?;
            let mut seq = special::abel_polynomials(&evaluate(&exprs[0], order, &registry(ctx)?)?, order)?;
            seq.provenance = Provenance::Abel { gamma: pretty_print(&exprs[0]) };
            sequence_out(ctx, "abel", seq)
        }
        Command::Connect { from_alpha, from_gamma, to_alpha, to_gamma } => {
            connect(ctx, [&from_alpha, &from_gamma, &to_alpha, &to_gamma])
        }
        Command::Stirling { kind, n } => stirling(ctx, kind, usize::from(n)),
        Command::Example { name } => example(ctx, name),
        Command::Define { name, moments, egf, cumulants } => define(ctx, &name, moments, egf, cumulants),
        Command::List => list(ctx),
    }
}

fn parse_expr(text: &str) -> Result<Expr, CliError> {
    parse(text).map_err(|error| CliError::Syntax { error, source: text.to_string() })
}

fn registry(ctx: &Ctx) -> Result<Registry, CliError> {
    Ok(Workspace::load(&ctx.workspace)?.registry()?)
}

/// Parses the expressions and picks the order: the requested one, or the
/// largest order up to the default that the referenced user umbrae support.
fn prepare(ctx: &Ctx, texts: &[&str]) -> Result<(Vec<Expr>, usize), CliError> {
    let exprs = texts.iter().map(|t| parse_expr(t)).collect::<Result<Vec<_>, _>>()?;
    let reg = registry(ctx)?;
    if let Some(order) = ctx.order {
        return Ok((exprs, order));
    }
    let mut order = DEFAULT_ORDER;
    loop {
        match exprs.iter().try_for_each(|e| evaluate(e, order, &reg).map(|_| ())) {
            Err(Error::InsufficientMoments { .. }) if order > 0 => order -= 1,
            Err(e) => return Err(e.into()),
            Ok(()) => return Ok((exprs, order)),
        }
    }
}

fn eval(ctx: &Ctx, texts: &[String]) -> Result<String, CliError> {
    let reg = registry(ctx)?;
    let mut blocks = Vec::with_capacity(texts.len());
    for text in texts {
        let (exprs, order) = prepare(ctx, &[text])?;
        let u = evaluate(&exprs[0], order, &reg)?;
        blocks.push((pretty_print(&exprs[0]), order, u));
    }
    if ctx.format == Format::Json {
        let items: Vec<Value> = blocks
            .iter()
            .map(|(canon, order, u)| json!({"command": "eval", "expression": canon, "order": order, "moments": u.moments()}))
            .collect();
        let v = if items.len() == 1 { items.into_iter().next().unwrap_or(Value::Null) } else { Value::Array(items) };
        return Ok(render::json_string(&v));
    }
    let single = blocks.len() == 1;
    let mut out = String::new();
    for (i, (canon, _, u)) in blocks.iter().enumerate() {
        if !single {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(&format!("# {canon}\n"));
        }
        out.push_str(&render::polys(ctx.format, u.moments(), Value::Null)?);
    }
    Ok(out)
}

fn sequence_out(ctx: &Ctx, command: &str, seq: umbral::PolySequence) -> Result<String, CliError> {
    let head = json!({"command": command, "order": seq.order(), "provenance": seq.provenance});
    render::polys(ctx.format, &seq.polynomials, head)
}

fn connect(ctx: &Ctx, texts: [&String; 4]) -> Result<String, CliError> {
    let (exprs, order) = prepare(ctx, &texts.map(String::as_str))?;
    let reg = registry(ctx)?;
    let mut u = exprs.iter().map(|e| evaluate(e, order, &reg));
    let mut next = || u.next().expect("four expressions").map_err(CliError::from);
    let from = ShefferPair::new(next()?, next()?)?;
    let to = ShefferPair::new(next()?, next()?)?;
    let umbral = sheffer::connection_constants_umbral(&from, &to)?;
    let solved =
        sheffer::connection_constants_solve(&sheffer::sheffer_moments(&from)?, &sheffer::sheffer_moments(&to)?)?;
    let verified = umbral == solved;
    let head = json!({
        "command": "connect",
        "order": order,
        "from": {"alpha": pretty_print(&exprs[0]), "gamma": pretty_print(&exprs[1])},
        "to": {"alpha": pretty_print(&exprs[2]), "gamma": pretty_print(&exprs[3])},
    });
    render::matrix(ctx.format, &umbral, verified, head)
}

fn stirling(ctx: &Ctx, kind: StirlingKind, n: usize) -> Result<String, CliError> {
    let mut rows = Vec::with_capacity(n + 1);
    let mut verified = true;
    for i in 0..=n {
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let (umbral, classical) = match kind {
                StirlingKind::First => (special::stirling_first_umbral(i, k)?, stirling_first_classical(i, k)),
                StirlingKind::Second => (special::stirling_second_umbral(i, k)?, stirling_second_classical(i, k)),
            };
            verified &= umbral == classical;
            row.push(umbral);
        }
        rows.push(row);
    }
    let kind = match kind {
        StirlingKind::First => "first",
        StirlingKind::Second => "second",
    };
    render::matrix(ctx.format, &rows, verified, json!({"command": "stirling", "kind": kind, "n": n}))
}

fn example(ctx: &Ctx, name: ExampleName) -> Result<String, CliError> {
    let order = ctx.order.unwrap_or(DEFAULT_ORDER);
    let (label, report): (&str, RecurrenceReport) = match name {
        ExampleName::BernoulliDiff => ("bernoulli-diff", special::recurrence_example_bernoulli(order)?),
        ExampleName::BackwardDiff => ("backward-diff", special::recurrence_example_backward(order)?),
        ExampleName::Fibonacci => ("fibonacci", special::recurrence_example_fibonacci(order)?),
    };
    let head = json!({"command": "example", "name": label, "order": order});
    let out = render::report(ctx.format, &report.sequence.polynomials, &report.checks, &report.observations, head)?;
    if !report.passed() {
        let failed: Vec<&str> = report.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        print!("{out}");
        return Err(CliError::Math(Error::Inconsistent(failed.join(", "))));
    }
    Ok(out)
}

fn parse_list(text: &str) -> Result<Vec<Rational>, CliError> {
    let values = text
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    if values.is_empty() {
        return Err(CliError::Usage("empty value list".into()));
    }
    Ok(values)
}

fn umbra_from_cumulants(k: &[Rational]) -> Result<Umbra, Error> {
    let mut coeffs = vec![Rational::from_integer(0.into())];
    coeffs.extend(k.iter().enumerate().map(|(i, c)| c / factorial(i + 1)));
    Umbra::from_egf(&TruncatedEGF::from_rational_coeffs(&coeffs).exp()?)
}

fn define(
    ctx: &Ctx,
    name: &str,
    moments: Option<String>,
    egf: Option<String>,
    cumulants: Option<String>,
) -> Result<String, CliError> {
    let umbra = if let Some(m) = moments {
        Umbra::from_rationals(&parse_list(&m)?)
    } else if let Some(c) = egf {
        Umbra::from_egf(&TruncatedEGF::from_rational_coeffs(&parse_list(&c)?))
    } else {
        umbra_from_cumulants(&parse_list(cumulants.as_deref().unwrap_or_default())?)
    };
    let umbra = umbra.map_err(|e| CliError::Usage(e.to_string()))?;
    let mut ws = Workspace::load(&ctx.workspace)?;
    ws.insert(name, &umbra).map_err(|e| CliError::Usage(e.to_string()))?;
    ws.save(&ctx.workspace)?;
    define_out(ctx, name, &umbra, &ctx.workspace)
}

fn list(ctx: &Ctx) -> Result<String, CliError> {
    let reg = registry(ctx)?;
    let user: Vec<(&String, &Umbra)> = reg.user_umbrae().collect();
    Ok(match ctx.format {
        Format::Json => {
            let builtins: Vec<Value> = BUILTINS.iter().map(|(n, d)| json!({"name": n, "description": d})).collect();
            let user: Vec<Value> = user
                .iter()
                .map(|(n, u)| json!({"name": n, "order": u.order(), "moments": moment_strings(u)}))
                .collect();
            render::json_string(&json!({"command": "list", "builtins": builtins, "user": user}))
        }
        Format::Csv => {
            let mut out = String::from("name,kind,order\n");
            for (n, _) in BUILTINS {
                out.push_str(&format!("{n},builtin,\n"));
            }
            for (n, u) in &user {
                out.push_str(&format!("{n},user,{}\n", u.order()));
            }
            out
        }
        Format::Pretty | Format::Latex => {
            let mut out = String::from("built-in:\n");
            for (n, d) in BUILTINS {
                out.push_str(&format!("  {n:<6} {d}\n"));
            }
            out.push_str("user:\n");
            for (n, u) in &user {
                out.push_str(&format!("  {n} (order {}): {}\n", u.order(), moment_strings(u).join(", ")));
            }
            out
        }
    })
}

fn moment_strings(u: &Umbra) -> Vec<String> {
    u.moments().iter().map(Poly::to_string).collect()
}

fn define_out(ctx: &Ctx, name: &str, umbra: &Umbra, path: &Path) -> Result<String, CliError> {
    let moments = umbra.rational_moments()?;
    Ok(match ctx.format {
        Format::Json => render::json_string(&json!({
            "command": "define",
            "name": name,
            "workspace": path.display().to_string(),
            "moments": moments.iter().map(format_rational).collect::<Vec<_>>(),
        })),
        _ => render::polys(ctx.format, umbra.moments(), Value::Null)?,
    })
}
