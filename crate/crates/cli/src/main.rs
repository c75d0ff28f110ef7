use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lieweyl::embedding::Embedder;
use lieweyl::levimodule::{parse_lambda, DEFAULT_DIM_CAP};
use lieweyl::liealgebra::ChevalleyAlgebra;
use lieweyl::parabolic::parse_crossed;
use lieweyl::rootsystem::{RootSystem, SimpleType};
use lieweyl::uea::ReduceOptions;
use lieweyl::verify::{action_oracle, lie_closure, omega_contract, ClosureOptions};
use lieweyl::Rational;

/// Realizations of simple Lie algebras by differential operators with
/// matrix coefficients, induced from parabolic subalgebras.
#[derive(Parser)]
#[command(name = "lieweyl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the images of the Chevalley generators.
    Embed {
        #[command(flatten)]
        config: Config,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print the reduced products g·u before the operators.
        #[arg(long)]
        trace: bool,
    },
    /// Run the closure, action and property checks; prints a JSON report.
    Check {
        #[command(flatten)]
        config: Config,
        /// Total degree bound for the action oracle.
        #[arg(long, default_value_t = 3)]
        degree_cap: u32,
        /// Random monomials for the action oracle instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        /// Random specializations for the ω contract.
        #[arg(long, default_value_t = 200)]
        omega_samples: usize,
        /// Cap on the closure basis (default twice dim 𝔤).
        #[arg(long)]
        max_basis: Option<usize>,
        #[arg(long, default_value_t = 10_000_000)]
        max_brackets: usize,
        #[arg(long)]
        skip_closure: bool,
        #[arg(long)]
        skip_oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print the bracket table of a Chevalley basis.
    Table {
        #[arg(long = "type", default_value = "G2")]
        ty: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Rational-operation counts and timings per configuration.
    Bench {
        /// Run a single configuration instead of the reference list.
        #[arg(long = "type", requires = "crossed")]
        ty: Option<String>,
        #[arg(long)]
        crossed: Option<String>,
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Config {
    /// Lie type such as G2, F4, E8.
    #[arg(long = "type")]
    ty: String,
    /// Crossed simple roots as a 0/1 list, e.g. 1,0.
    #[arg(long)]
    crossed: String,
    /// Highest weight in fundamental coordinates; zeros if omitted.
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: u64,
    #[arg(long, default_value_t = ReduceOptions::default().step_budget)]
    step_budget: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Latex,
    #[value(alias = "json")]
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Latex,
}

/// Configurations of the reference run table with their published counts.
const REFERENCE_RUNS: &[(&str, &str, &str, u64)] = &[
    ("E8", "0,0,0,0,0,0,0,1", "last root crossed", 28_754_380),
    ("E7", "0,0,0,0,0,0,1", "last root crossed", 2_431_419),
    ("E6", "0,0,0,0,0,1", "last root crossed", 487_021),
    ("F4", "1,0,0,0", "first (long) root crossed", 374_377),
    ("F4", "0,0,0,1", "last (short) root crossed", 469_892),
    ("G2", "1,0", "first (short) root crossed", 22_185),
    ("G2", "0,1", "last (long) root crossed", 14_072),
];

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn parse_config(c: &Config) -> Result<(Embedder, SimpleType, Vec<bool>, Vec<Rational>), Failure> {
    let ty: SimpleType = c.ty.parse()?;
    let crossed = parse_crossed(&c.crossed)?;
    let lambda = lambda_or_zero(&c.lambda, ty)?;
    let emb = Embedder::with_options(ty, &crossed, &lambda, c.dim_cap, ReduceOptions { step_budget: c.step_budget })?;
    Ok((emb, ty, crossed, lambda))
}

fn lambda_or_zero(s: &str, ty: SimpleType) -> Result<Vec<Rational>, Failure> {
    if s.trim().is_empty() {
        Ok(vec![Rational::zero(); ty.rank])
    } else {
        Ok(parse_lambda(s)?)
    }
}

fn embed(config: &Config, format: Format, trace: bool) -> Result<bool, Failure> {
    let (emb, ..) = parse_config(config)?;
    let result = emb.embed()?;
    if trace {
        for img in &result.images {
            let line = match format {
                Format::Latex => format!("{}\\cdot u = {}", img.generator.latex(), img.reduced.latex()),
                _ => format!("{} . u = {}", img.generator.plain(), img.reduced.plain()),
            };
            println!("{line}");
        }
        println!();
    }
    match format {
        Format::Text => print!("{}", result.to_text()),
        Format::Latex => print!("{}", result.to_latex()),
        Format::Structured => println!("{}", result.to_json()),
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn check(
    config: &Config,
    degree_cap: u32,
    samples: Option<usize>,
    omega_samples: usize,
    closure_options: ClosureOptions,
    skip_closure: bool,
    skip_oracle: bool,
    seed: u64,
) -> Result<bool, Failure> {
    let (emb, ty, crossed, lambda) = parse_config(config)?;
    let result = emb.embed()?;
    let alg = emb.algebra();
    let mut report = serde_json::Map::new();
    report.insert("type".into(), json!(ty.to_string()));
    report.insert("crossed".into(), json!(crossed.iter().map(|c| *c as u8).collect::<Vec<_>>()));
    report.insert("lambda".into(), json!(lambda.iter().map(|q| q.to_string()).collect::<Vec<_>>()));
    report.insert("n".into(), json!(result.n));
    report.insert("module_dim".into(), json!(result.module_dim));
    let mut pass = true;

    let jacobi = if ty.rank <= 4 { alg.verify_jacobi() } else { alg.verify_jacobi_sampled(10_000, seed) };
    pass &= jacobi.passed();
    report.insert(
        "jacobi".into(),
        json!({
            "checked": jacobi.checked,
            "failure": jacobi.failure.map(|(x, y, z)| [x.latex(), y.latex(), z.latex()]),
        }),
    );

    let omega = omega_contract(&emb, &result, omega_samples, 6, seed)?;
    pass &= omega.is_none();
    report.insert("omega_contract".into(), json!({ "samples": omega_samples, "failure": omega }));

    if !skip_oracle {
        let action = action_oracle(&emb, &result, degree_cap, samples, seed);
        pass &= action.passed();
        report.insert("action_oracle".into(), serde_json::to_value(&action)?);
    }
    if !skip_closure {
        let ops: Vec<_> = result.simple_images().into_iter().cloned().collect();
        let closure = lie_closure(&ops, alg.dimension(), closure_options);
        pass &= closure.pass;
        report.insert("closure".into(), serde_json::to_value(&closure)?);
    }
    report.insert("pass".into(), json!(pass));
    println!("{}", serde_json::to_string_pretty(&Value::Object(report))?);
    Ok(pass)
}

fn table(ty: &str, format: TableFormat) -> Result<bool, Failure> {
    let ty: SimpleType = ty.parse()?;
    let alg = ChevalleyAlgebra::new(RootSystem::build(ty));
    match format {
        TableFormat::Text => print!("{}", alg.bracket_table_text()),
        TableFormat::Latex => print!("{}", alg.bracket_table_latex()),
    }
    Ok(true)
}

fn bench(single: Option<(String, String, String)>, as_json: bool) -> Result<bool, Failure> {
    let runs: Vec<(String, String, String, Option<u64>)> = match single {
        Some((t, c, l)) => vec![(t, c, l, None)],
        None => REFERENCE_RUNS.iter().map(|(t, c, _, ops)| (t.to_string(), c.to_string(), String::new(), Some(*ops))).collect(),
    };
    let mut rows = Vec::new();
    if !as_json {
        println!("{:<5} {:<18} {:>3} {:>12} {:>10} {:>14}", "type", "crossed", "n", "ops", "seconds", "reference ops");
    }
    for (t, c, l, reference) in runs {
        let ty: SimpleType = t.parse()?;
        let crossed = parse_crossed(&c)?;
        let lambda = lambda_or_zero(&l, ty)?;
        let start = Instant::now();
        let emb = Embedder::new(ty, &crossed, &lambda)?;
        let result = emb.embed()?;
        let secs = start.elapsed().as_secs_f64();
        let ops = result.total_op_count();
        if as_json {
            rows.push(json!({
                "type": t, "crossed": c, "n": result.n, "op_count": ops,
                "seconds": secs, "reference_op_count": reference,
            }));
        } else {
            let reference = reference.map(|r| r.to_string()).unwrap_or_else(|| "-".into());
            println!("{:<5} {:<18} {:>3} {:>12} {:>10.3} {:>14}", t, c, result.n, ops, secs, reference);
        }
    }
    if as_json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Embed { config, format, trace } => embed(config, *format, *trace),
        Command::Check {
            config,
            degree_cap,
            samples,
            omega_samples,
            max_basis,
            max_brackets,
            skip_closure,
            skip_oracle,
            seed,
        } => check(
            config,
            *degree_cap,
            *samples,
            *omega_samples,
            ClosureOptions { max_basis: *max_basis, max_brackets: *max_brackets },
            *skip_closure,
            *skip_oracle,
            *seed,
        ),
        Command::Table { ty, format } => table(ty, *format),
        Command::Bench { ty, crossed, lambda, json } => {
            bench(ty.clone().zip(crossed.clone()).map(|(t, c)| (t, c, lambda.clone())), *json)
        }
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
