use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nilred::exterior::{plucker_relations, IndexSet};
use nilred::fieldpoly::FieldSpec;
use nilred::groebner::{orbit_closure_ideal, GroebnerConfig, Ideal};
use nilred::harness::{self, CheckParams, CheckSpec, Report};
use nilred::orbits::Partition;
use nilred::schemes::{
    invariance_chart_ideal, invariant_chart_ideal, nilpotent_scheme_ideal, shuffle_chart_ideal, vee_scheme_ideal,
    Chart, JordanOperator, NilpotentSchemeSpec,
};

#[derive(Parser)]
#[command(name = "nilred", version, about = "Exact checks for nilpotent matrix schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered checks and suites.
    List,
    /// Run a single check.
    Run {
        check: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Also write the report as a JSON array.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a suite on its default grid.
    Suite {
        #[arg(value_parser = harness::SUITES.to_vec())]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a constructed ideal in the ideal file format.
    Ideal {
        scheme: Scheme,
        #[command(flatten)]
        args: IdealArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// `Q` or `Fp:P`.
    #[arg(long)]
    field: Option<FieldSpec>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    timeout_secs: Option<u64>,
    /// Monomial order: `grevlex` or `lex`.
    #[arg(long)]
    order: Option<String>,
    /// Jordan type, e.g. `[2,2]`.
    #[arg(long)]
    partition: Option<Partition>,
    #[arg(long)]
    degree: Option<usize>,
}

impl From<ParamArgs> for CheckParams {
    fn from(p: ParamArgs) -> Self {
        CheckParams {
            n: p.n,
            e: p.e,
            a: p.a,
            b: p.b,
            field: p.field,
            seed: p.seed,
            trials: p.trials,
            timeout_secs: p.timeout_secs,
            order: p.order,
            partition: p.partition,
            degree: p.degree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    /// Entries of A^e and char poly coefficients (`--n --e`).
    Nilpotent,
    /// Closure of the orbit of J_sigma (`--partition`).
    Orbit,
    /// Invariant planes with nilpotent restriction, on a chart (`--partition --pivots`).
    InvariantChart,
    /// Invariance equations alone, on a chart (`--partition --pivots`).
    InvarianceChart,
    /// Shuffle ideal on a chart (`--partition --pivots`).
    ShuffleChart,
    /// Intertwining scheme for T of type (e^n) (`--n --e`).
    Vee,
    /// Plücker relations of Gr(n, k^ambient) (`--n --ambient`).
    Plucker,
}

#[derive(Args)]
struct IdealArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    partition: Option<Partition>,
    /// Chart pivot rows, 1-based and comma separated, e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    pivots: Option<Vec<usize>>,
    #[arg(long)]
    ambient: Option<usize>,
    #[arg(long, default_value = "Q")]
    field: FieldSpec,
    #[arg(long, default_value_t = 600)]
    timeout_secs: u64,
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.with_context(|| format!("--{flag} is required for this scheme"))
}

fn build_ideal(scheme: Scheme, args: IdealArgs) -> Result<Ideal> {
    let field = args.field;
    let chart_parts = |args: &IdealArgs| -> Result<(JordanOperator, Chart)> {
        let sigma = need(args.partition.clone(), "partition")?;
        let pivots = IndexSet::new(need(args.pivots.clone(), "pivots")?)?;
        let t = JordanOperator::new(sigma, field);
        let chart = Chart::new(t.ambient_dim(), pivots)?;
        Ok((t, chart))
    };
    Ok(match scheme {
        Scheme::Nilpotent => {
            let spec = NilpotentSchemeSpec::new(need(args.n, "n")?, need(args.e, "e")?)?;
            nilpotent_scheme_ideal(spec, field)?
        }
        Scheme::Orbit => {
            let sigma = need(args.partition.clone(), "partition")?;
            orbit_closure_ideal(&sigma, field, &GroebnerConfig::with_timeout(args.timeout_secs))?
        }
        Scheme::InvariantChart => {
            let (t, chart) = chart_parts(&args)?;
            invariant_chart_ideal(&t, &chart)?
        }
        Scheme::InvarianceChart => {
            let (t, chart) = chart_parts(&args)?;
            invariance_chart_ideal(&t, &chart)?
        }
        Scheme::ShuffleChart => {
            let (t, chart) = chart_parts(&args)?;
            shuffle_chart_ideal(&t, &chart)?
        }
        Scheme::Vee => {
            let spec = NilpotentSchemeSpec::new(need(args.n, "n")?, need(args.e, "e")?)?;
            vee_scheme_ideal(spec, &JordanOperator::rectangular(spec.e, spec.n, field))?
        }
        Scheme::Plucker => {
            let (ring, rels) = plucker_relations(need(args.ambient, "ambient")?, need(args.n, "n")?, field)?;
            Ideal::new(&ring, rels)?
        }
    })
}

fn finish(reports: &[Report], out: Option<PathBuf>) -> Result<ExitCode> {
    for r in reports {
        println!("{}", r.summary());
    }
    if let Some(path) = out {
        harness::emit_report(reports, &path).with_context(|| format!("writing {}", path.display()))?;
    }
    let failed = reports.iter().filter(|r| r.status == harness::Status::Fail).count();
    println!("{} checks, {} failed", reports.len(), failed);
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::List => {
            for c in harness::registry() {
                println!("{:<24} [{}] {}", c.name, c.params.join(", "), c.description);
            }
            println!();
            for s in harness::SUITES {
                println!("suite {:<14} {} checks", s, harness::suite_specs(s)?.len());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Run { check, params, out } => {
            let report = harness::run_check(&CheckSpec::new(&check, params.into()))?;
            finish(&[report], out)
        }
        Command::Suite { name, out } => {
            let reports = harness::run_suite(&name)?;
            finish(&reports, out)
        }
        Command::Ideal { scheme, args, out } => {
            let ideal = build_ideal(scheme, args)?;
            let text = ideal.to_file_string();
            match out {
                Some(path) => std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
