use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hecke_fusion::combinatorics::{MPartition, StandardMTableau};
use hecke_fusion::hecke::HeckeAlgebra;
use hecke_fusion::scalar::{HeckeParams, Rational};
use hecke_fusion::verify::{idempotent_report, run_verification, tableaux_listing, Mode, RunConfig, Suite};

/// Exact computations in the cyclotomic Hecke algebra H(m,1,n): standard
/// m-tableaux, primitive idempotents by the fusion procedure, and
/// verification suites.
#[derive(Parser)]
#[command(name = "hecke-fusion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List standard m-tableaux with their contents.
    Tableaux(TableauxArgs),
    /// Compute the idempotent of one tableau by fusion and by the
    /// Jucys-Murphy formula and compare.
    Idempotent(IdempotentArgs),
    /// Run verification suites and emit a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct Ground {
    /// generic (rational q, v) or symbolic-q (q indeterminate, v_k = zeta_m^(k-1))
    #[arg(long, default_value = "generic", value_parser = parse_mode)]
    mode: Mode,
    /// Seed for sampling generic parameters.
    #[arg(long, env = "HECKE_FUSION_SEED", default_value_t = 0)]
    seed: u64,
    /// Explicit q, e.g. 3/2.
    #[arg(long, value_parser = parse_rational)]
    q: Option<Rational>,
    /// Explicit v_1,...,v_m as comma-separated rationals.
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    v: Option<Vec<Rational>>,
    /// Write the JSON document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    m: usize,
    /// Size; all shapes of this size are listed.
    #[arg(long, required_unless_present = "shape")]
    n: Option<usize>,
    /// A single shape such as [[2],[1],[1]].
    #[arg(long)]
    shape: Option<String>,
    #[command(flatten)]
    ground: Ground,
}

#[derive(Args)]
struct IdempotentArgs {
    /// Tableau such as [[[1,3]],[[2]]] (components, rows, entries).
    #[arg(long)]
    tableau: String,
    /// Number of components; must match the tableau.
    #[arg(long)]
    m: Option<usize>,
    /// Rank of the ambient algebra; defaults to the tableau size.
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    ground: Ground,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, requires = "n")]
    m: Option<usize>,
    #[arg(long, requires = "m")]
    n: Option<usize>,
    /// algebra, fusion, scalar, baxter, classical or all
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include wall times in the report (makes the output run dependent).
    #[arg(long)]
    timings: bool,
    #[command(flatten)]
    ground: Ground,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: hecke_fusion::Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: hecke_fusion::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: hecke_fusion::Error| e.to_string())
}

fn emit(doc: &Value, out: Option<&PathBuf>) -> Result<()> {
    let text = serde_json::to_string_pretty(doc)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn config(ground: &Ground, m: Option<usize>, n: Option<usize>) -> RunConfig {
    RunConfig { m, n, mode: ground.mode, seed: ground.seed, q: ground.q.clone(), v: ground.v.clone(), ..RunConfig::default() }
}

fn generic_params(ground: &Ground, m: usize, n: usize) -> Result<HeckeParams<Rational>> {
    let g = config(ground, Some(m), Some(n)).generic_ground(m, n)?;
    Ok(g.generic_params().expect("generic ground"))
}

fn ground_json(p: &HeckeParams<Rational>) -> Value {
    json!({ "q": p.q.to_string(), "v": p.v.iter().map(|x| x.to_string()).collect::<Vec<_>>() })
}

fn tableaux(args: &TableauxArgs) -> Result<bool> {
    let shape = args.shape.as_deref().map(MPartition::parse).transpose()?;
    if let Some(s) = &shape {
        if s.m() != args.m {
            bail!("shape {} has {} components but --m is {}", s.encode(), s.m(), args.m);
        }
    }
    let n = shape.as_ref().map_or_else(|| args.n.unwrap_or(0), |s| s.size());
    let doc = match args.ground.mode {
        Mode::Generic => {
            let p = generic_params(&args.ground, args.m, n.max(1))?;
            let mut doc = tableaux_listing(args.m, n, shape.as_ref(), Some(&p));
            doc["ground"] = ground_json(&p);
            doc
        }
        Mode::SymbolicQ => {
            if args.ground.q.is_some() || args.ground.v.is_some() {
                bail!("--q and --v only apply in generic mode");
            }
            tableaux_listing(args.m, n, shape.as_ref(), Some(&HeckeParams::symbolic_q(args.m)))
        }
    };
    emit(&doc, args.ground.out.as_ref())?;
    Ok(true)
}

fn idempotent(args: &IdempotentArgs) -> Result<bool> {
    let t = StandardMTableau::parse(&args.tableau)?;
    if args.m.is_some_and(|m| m != t.m()) {
        bail!("tableau {} has {} components but --m is {}", t.encode(), t.m(), args.m.unwrap());
    }
    let n = args.n.unwrap_or(t.size()).max(t.size()).max(1);
    let report = match args.ground.mode {
        Mode::Generic => {
            let p = generic_params(&args.ground, t.m(), n)?;
            let ground = ground_json(&p);
            idempotent_report(&HeckeAlgebra::new(p, n)?, &t, ground)?
        }
        Mode::SymbolicQ => {
            if args.ground.q.is_some() || args.ground.v.is_some() {
                bail!("--q and --v only apply in generic mode");
            }
            let ground = json!({ "q": "q", "v": format!("zeta_{}^(k-1)", t.m()) });
            idempotent_report(&HeckeAlgebra::new(HeckeParams::symbolic_q(t.m()), n)?, &t, ground)?
        }
    };
    emit(&report.json, args.ground.out.as_ref())?;
    Ok(report.passed)
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let cfg = RunConfig { suite: args.suite, jobs: args.jobs, timings: args.timings, ..config(&args.ground, args.m, args.n) };
    let report = run_verification(&cfg)?;
    emit(&serde_json::to_value(&report)?, args.ground.out.as_ref())?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Tableaux(a) => tableaux(a),
        Command::Idempotent(a) => idempotent(a),
        Command::Verify(a) => verify(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
