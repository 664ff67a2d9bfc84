//! `bell-euler`: compute sequence values and tables, run identity checks,
//! and expand polynomials in the Bell-based Euler basis.

use std::io::{self, Write};
use std::process::ExitCode;

use bell_euler_core::algebra::{parse_rational, X, XY, Y};
use bell_euler_core::identities::{self, AdditionMode, Grid, IdentityId};
use bell_euler_core::sequences::{self, Family, FamilySpec, SequenceValue};
use bell_euler_core::umbral::{expand_in_appell, AppellContext, YParam};
use bell_euler_core::{BivariatePoly, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bell-euler", version, about = "Exact Bell, Euler and Bell-based Euler polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one member of a family.
    Compute(ComputeArgs),
    /// Print rows n = 0..=n_max of a family.
    Table(TableArgs),
    /// Run identity checks and print a JSON array of reports.
    Verify(VerifyArgs),
    /// Expand a polynomial in x as a combination of BE_k^{(mu)}(x; y).
    Expand(ExpandArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Args)]
struct FamilyArgs {
    /// bell-number, bell-poly, bivariate-bell, euler-number, euler,
    /// stirling2, stirling2-poly, bell-euler, bell-euler-number
    #[arg(long, value_parser = parse_family)]
    family: Family,
    /// Order, an integer or "p/q".
    #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    /// Block count for the Stirling families.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Series truncation order; must be at least n.
    #[arg(long)]
    truncation: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to run; repeatable.
    #[arg(long = "id", value_parser = parse_identity, required_unless_present = "all")]
    ids: Vec<IdentityId>,
    /// Every identity except the literal-form negative control.
    #[arg(long, conflicts_with = "ids")]
    all: bool,
    /// Largest degree checked; defaults per identity.
    #[arg(long)]
    n_max: Option<usize>,
    /// Comma-separated orders (integers or "p/q").
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, allow_hyphen_values = true)]
    alphas: Option<Vec<Rational>>,
    /// Comma-separated interval lengths for the integral identities.
    #[arg(long, value_delimiter = ',', value_parser = parse_alpha, allow_hyphen_values = true)]
    zs: Option<Vec<Rational>>,
    /// Random instances for the randomized checks.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Check the addition theorem on a sample grid instead of symbolically.
    #[arg(long)]
    sampling: bool,
    /// Evaluate grid points in parallel.
    #[arg(long)]
    parallel: bool,
    /// Report elapsed_ms as 0.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: i64,
    /// Fix y to a rational value instead of keeping it formal.
    #[arg(long, value_parser = parse_alpha, allow_hyphen_values = true)]
    y: Option<Rational>,
    /// Polynomial in x, e.g. "x^3 - 2/3".
    #[arg(allow_hyphen_values = true)]
    poly: String,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: bell_euler_core::ParseError| e.to_string())
}

fn parse_alpha(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: bell_euler_core::ParseError| e.to_string())
}

/// Outcome of a command: text for stdout and the exit status.
type Outcome = Result<(String, u8), String>;

fn value_pretty(v: &SequenceValue) -> String {
    match v.as_number() {
        Some(q) => q.to_string(),
        None => v.value.pretty(),
    }
}

fn value_json(v: &SequenceValue) -> Value {
    match v.as_number() {
        Some(q) => Value::String(q.to_string()),
        None => v.value.json(),
    }
}

fn compute(args: &ComputeArgs) -> Outcome {
    if let Some(t) = args.truncation {
        if t < args.n {
            return Err(format!("truncation order {t} is below n = {}", args.n));
        }
    }
    let f = &args.family;
    let spec = FamilySpec::new(f.family, args.n, f.alpha.clone(), f.k).map_err(|e| e.to_string())?;
    let v = sequences::compute(&spec).map_err(|e| e.to_string())?;
    let out = match args.format {
        Format::Pretty => value_pretty(&v),
        Format::Json => value_json(&v).to_string(),
        Format::Csv => format!("n,value\n{},{}", args.n, value_pretty(&v)),
    };
    Ok((out, 0))
}

fn table(args: &TableArgs) -> Outcome {
    let f = &args.family;
    if f.family == Family::Stirling2Number && f.k.is_none() {
        return stirling_triangle(args.n_max, args.format);
    }
    let rows = sequences::compute_table(f.family, args.n_max, f.alpha.clone(), f.k).map_err(|e| e.to_string())?;
    let out = match args.format {
        Format::Csv => {
            let mut s = String::from("n,value");
            for (n, v) in rows.iter().enumerate() {
                s.push_str(&format!("\n{n},{}", value_pretty(v)));
            }
            s
        }
        Format::Json => Value::Array(
            rows.iter()
                .enumerate()
                .map(|(n, v)| json!({"n": n, "value": value_json(v)}))
                .collect(),
        )
        .to_string(),
        Format::Pretty => rows
            .iter()
            .enumerate()
            .map(|(n, v)| format!("{n}: {}", value_pretty(v)))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((out, 0))
}

fn stirling_triangle(n_max: usize, format: Format) -> Outcome {
    let rows = (0..=n_max)
        .map(|n| sequences::stirling2_row(n, n_max))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let cells = |row: &Vec<Rational>| row.iter().map(|q| q.to_string()).collect::<Vec<_>>();
    let out = match format {
        Format::Csv => {
            let header: Vec<String> = (0..=n_max).map(|k| format!("k{k}")).collect();
            let mut s = format!("n,{}", header.join(","));
            for (n, row) in rows.iter().enumerate() {
                s.push_str(&format!("\n{n},{}", cells(row).join(",")));
            }
            s
        }
        Format::Json => Value::Array(rows.iter().map(|r| json!(cells(r))).collect()).to_string(),
        Format::Pretty => rows
            .iter()
            .enumerate()
            .map(|(n, r)| format!("{n}: {}", cells(r).join(" ")))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((out, 0))
}

fn verify(args: &VerifyArgs) -> Outcome {
    let ids: Vec<IdentityId> = if args.all { IdentityId::all_true().collect() } else { args.ids.clone() };
    let grid_for = |id: IdentityId| {
        let mut g = Grid::default_for(id);
        if let Some(n) = args.n_max {
            g = Grid { n_max: n, ..g };
        }
        if let Some(a) = &args.alphas {
            let fresh = Grid::new(g.n_max, a.clone());
            g = Grid { alphas: fresh.alphas, alpha_pairs: fresh.alpha_pairs, ..g };
        }
        if let Some(z) = &args.zs {
            g.zs = z.clone();
        }
        if let Some(s) = args.samples {
            g.samples = s;
        }
        if let Some(seed) = args.seed {
            g.seed = seed;
        }
        if args.sampling {
            g.addition_mode = AdditionMode::Sampling;
        }
        g.parallel = args.parallel;
        g
    };
    for &id in &ids {
        grid_for(id).validate().map_err(|e| format!("{id}: {e}"))?;
    }
    let reports = identities::run_many(&ids, grid_for, args.parallel);
    let all_pass = reports.iter().all(|r| r.pass);
    let reports: Vec<_> = if args.no_timings {
        reports.into_iter().map(|r| r.without_timing()).collect()
    } else {
        reports
    };
    let out = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
    Ok((out, if all_pass { 0 } else { 1 }))
}

fn expand(args: &ExpandArgs) -> Outcome {
    let q = BivariatePoly::parse(&args.poly, &XY).map_err(|e| e.to_string())?;
    if q.degree_in(Y) > 0 {
        return Err(format!("{:?} must be a polynomial in x only", args.poly));
    }
    let y = args.y.clone().map_or(YParam::Formal, YParam::Value);
    let ctx = AppellContext::for_degree(args.mu, y, q.degree_in(X) as usize).map_err(|e| e.to_string())?;
    let e = expand_in_appell(&q, &ctx).map_err(|e| e.to_string())?;
    let residual = &q - &e.reconstruct(&ctx).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&e).map_err(|e| e.to_string())?;
    v["residual"] = Value::String(residual.pretty());
    Ok((v.to_string(), 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Expand(a) => expand(a),
    };
    match outcome {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if writeln!(stdout, "{text}").is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
