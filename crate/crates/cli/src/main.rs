use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use subcodes::bounds::{all_bounds, mds_classify, syndrome_count, BoundReport};
use subcodes::constructions::{bacon_shor, euclidean, euclidean_analyzed, lattice};
use subcodes::io::{CodeRecord, MatrixFile};
use subcodes::quditsim::{
    commutation_phase, measure_syndrome, prepare_codestate, syndrome_generators, PauliLabel, SimConfig,
};
use subcodes::transforms::{puncture_impure, puncture_pure1, singleton_chain, Puncturing};
use subcodes::{EnumConfig, Error, Field, SubsystemCode};

mod table;

#[derive(Parser)]
#[command(name = "subcodes", version, about = "Subsystem codes over finite fields")]
struct Cli {
    /// Worker threads for distance enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and print its record.
    Construct(ConstructArgs),
    /// Compute distance and purity of a record.
    Analyze { record: PathBuf },
    /// Singleton, Hamming and syndrome-count checks.
    Bounds(BoundsArgs),
    /// Remove one qudit.
    Puncture {
        record: PathBuf,
        #[arg(long, value_enum, default_value_t = PunctureMode::Auto)]
        mode: PunctureMode,
    },
    /// Measure the syndrome of an error on a simulated code state.
    Simulate {
        record: PathBuf,
        /// e.g. `X1*Z3`, `X1:2`, `I`.
        #[arg(long, default_value = "I")]
        error: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Apply controlled Paulis directly instead of the gate circuit.
        #[arg(long)]
        fused: bool,
    },
    /// Recompute the worked examples for the Bacon-Shor family.
    PaperTable,
}

#[derive(Args)]
struct ConstructArgs {
    /// Skip distance and purity.
    #[arg(long, global = true)]
    no_distance: bool,
    #[command(subcommand)]
    kind: Kind,
}

#[derive(Subcommand)]
enum Kind {
    /// Gauge code X1 × X2 from two classical codes.
    Euclidean {
        #[arg(long)]
        x1: PathBuf,
        #[arg(long)]
        x2: PathBuf,
    },
    /// Lattice code from two classical codes.
    Lattice {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
    },
    /// n1 × n2 Bacon-Shor code; also accepts `3 3 q=2`.
    BaconShor {
        #[arg(long)]
        n1: Option<usize>,
        #[arg(long)]
        n2: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        positional: Vec<String>,
    },
    /// Gauge code given directly as a symplectic matrix file.
    Raw {
        #[arg(long)]
        gauge: PathBuf,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// Record file; alternatively give --n --k --r --d --q.
    record: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PunctureMode {
    /// Pure-to-1 puncture if d' = 1, otherwise the impure puncture; pure
    /// codes are refused.
    Auto,
    Pure1,
    Impure,
    Chain,
}

/// Failure with its exit status: 2 parse, 3 precondition, 4 resource.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) => 2,
            Error::EnumerationTooLarge { .. } | Error::StateTooLarge(_) => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

fn parse_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| parse_failure(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| parse_failure(format!("{}: {e}", path.display())))
    }
}

fn read_matrix(path: &Path) -> CliResult<MatrixFile> {
    Ok(MatrixFile::parse(&read_input(path)?)?)
}

fn read_record(path: &Path) -> CliResult<SubsystemCode> {
    Ok(CodeRecord::from_json(&read_input(path)?)?.to_code()?)
}

fn record_json(code: &SubsystemCode) -> Value {
    serde_json::to_value(CodeRecord::from_code(code)).expect("record serializes")
}

fn with_parameters(code: SubsystemCode, cfg: &EnumConfig) -> CliResult<SubsystemCode> {
    if code.distance().is_some() && code.purity().is_some() {
        Ok(code)
    } else {
        Ok(code.analyze(cfg)?)
    }
}

fn bacon_shor_args(
    n1: Option<usize>,
    n2: Option<usize>,
    q: Option<u32>,
    positional: &[String],
) -> CliResult<(usize, usize, u32)> {
    let mut sizes = vec![];
    let mut q = q;
    for arg in positional {
        if let Some(v) = arg.strip_prefix("q=") {
            q = Some(v.parse().map_err(|_| parse_failure(format!("bad field order `{v}`")))?);
        } else {
            sizes.push(arg.parse::<usize>().map_err(|_| parse_failure(format!("bad size `{arg}`")))?);
        }
    }
    let (n1, n2) = match (n1, n2, sizes.as_slice()) {
        (Some(a), Some(b), []) => (a, b),
        (None, None, [a, b]) => (*a, *b),
        _ => return Err(parse_failure("give --n1 and --n2, or two sizes".into())),
    };
    Ok((n1, n2, q.unwrap_or(2)))
}

fn construct(args: ConstructArgs, cfg: &EnumConfig) -> CliResult<Value> {
    let code = match args.kind {
        Kind::Euclidean { x1, x2 } => {
            let (x1, x2) = (read_matrix(&x1)?.matrix, read_matrix(&x2)?.matrix);
            if args.no_distance {
                euclidean(&x1, &x2)?
            } else {
                euclidean_analyzed(&x1, &x2, cfg)?
            }
        }
        Kind::Lattice { c1, c2 } => lattice(&read_matrix(&c1)?.matrix, &read_matrix(&c2)?.matrix)?,
        Kind::BaconShor { n1, n2, q, positional } => {
            let (n1, n2, q) = bacon_shor_args(n1, n2, q, &positional)?;
            let field = Field::with_order(q).map_err(|e| parse_failure(e.to_string()))?;
            bacon_shor(n1, n2, &field)?
        }
        Kind::Raw { gauge } => {
            let file = read_matrix(&gauge)?;
            if !file.symplectic {
                return Err(parse_failure("gauge file needs symplectic=true".into()));
            }
            if file.additive {
                let n = file.matrix.len() / 2;
                let f = file.matrix.field().clone();
                SubsystemCode::from_additive(&f, n, file.matrix.into_rows())?
            } else {
                SubsystemCode::from_gauge_code(file.matrix)?
            }
        }
    };
    let code = if args.no_distance { code } else { with_parameters(code, cfg)? };
    Ok(record_json(&code))
}

fn bounds(args: BoundsArgs, cfg: &EnumConfig) -> CliResult<String> {
    let (n, k, r, d, q) = match (&args.record, args.n, args.k, args.r, args.d, args.q) {
        (Some(path), None, None, None, None, None) => {
            let code = with_parameters(read_record(path)?, cfg)?;
            (code.n(), code.k(), code.r(), code.distance().unwrap(), code.field().q())
        }
        (None, Some(n), Some(k), Some(r), Some(d), Some(q)) => (n, k, r, d, q),
        _ => return Err(parse_failure("give a record, or all of --n --k --r --d --q".into())),
    };
    if d == 0 || k + r > n {
        return Err(Failure::from(Error::PreconditionFailed(format!("no code has n={n}, k={k}, r={r}, d={d}"))));
    }
    let reports = all_bounds(n, k, r, d, q);
    let mds = mds_classify(n, k, r, d, q);
    let syndromes = syndrome_count(n, k, r);
    Ok(match args.format {
        Format::Json => {
            let v = json!({
                "code": format!("[[{n},{k},{r},{d}]]_{q}"),
                "reports": reports,
                "mds": mds,
                "syndrome_count": syndromes,
            });
            serde_json::to_string_pretty(&v).unwrap()
        }
        Format::Text => bounds_table(&format!("[[{n},{k},{r},{d}]]_{q}"), &reports, mds.as_str(), syndromes),
    })
}

fn bounds_table(label: &str, reports: &[BoundReport], mds: &str, syndromes: usize) -> String {
    let mut out = format!("{label}\n{:<16} {:>8} {:>8} {:>8}  {}\n", "bound", "lhs", "rhs", "slack", "status");
    for rep in reports {
        let status = if rep.satisfied { "ok" } else { "VIOLATED" };
        out.push_str(&format!(
            "{:<16} {:>8} {:>8} {:>8}  {status}\n",
            rep.bound_name, rep.lhs, rep.rhs, rep.slack
        ));
    }
    out.push_str(&format!("mds class: {mds}\nsyndrome measurements: {syndromes}\n"));
    out
}

fn puncturing_json(p: &Puncturing) -> Value {
    json!({
        "before": record_json(&p.input),
        "after": record_json(&p.output),
        "trace": p.trace,
    })
}

fn puncture(path: &Path, mode: PunctureMode, cfg: &EnumConfig) -> CliResult<Value> {
    let code = with_parameters(read_record(path)?, cfg)?;
    let value = match mode {
        PunctureMode::Chain => {
            let chain = singleton_chain(code, cfg)?;
            let links: Vec<Value> = chain
                .links
                .iter()
                .map(|l| json!({"via": l.via, "record": record_json(&l.code), "trace": l.trace}))
                .collect();
            json!({"links": links, "stop": chain.stop})
        }
        PunctureMode::Pure1 => puncturing_json(&puncture_pure1(code, cfg)?),
        PunctureMode::Impure => puncturing_json(&puncture_impure(code, cfg)?),
        PunctureMode::Auto => {
            if code.is_pure() == Some(true) {
                return Err(Error::PreconditionFailed("code is pure".into()).into());
            }
            if code.purity() == Some(1) {
                puncturing_json(&puncture_pure1(code, cfg)?)
            } else {
                puncturing_json(&puncture_impure(code, cfg)?)
            }
        }
    };
    Ok(value)
}

fn simulate(path: &Path, error: &str, seed: u64, fused: bool) -> CliResult<Value> {
    let code = read_record(path)?;
    let f = code.field().clone();
    let e = PauliLabel::parse(&f, code.n(), error)?;
    let generators = syndrome_generators(&code)?;
    let psi = prepare_codestate(&code, seed)?;
    let mut corrupted = psi.clone();
    corrupted.apply_pauli(&e)?;
    let (syndrome, post) = measure_syndrome(&corrupted, &generators, SimConfig { fused })?;
    let expected = generators
        .iter()
        .map(|g| commutation_phase(g, &e.vector))
        .collect::<Result<Vec<_>, _>>()?;
    let values = |v: &[subcodes::FieldElement]| v.iter().map(|x| x.value()).collect::<Vec<_>>();
    let rows: Vec<Vec<u32>> = generators.iter().map(|g| values(g.coords())).collect();
    Ok(json!({
        "error": error,
        "seed": seed,
        "generators": rows,
        "syndrome": values(&syndrome),
        "predicted": values(&expected),
        "agrees": syndrome == expected,
        "fidelity": post.fidelity(&corrupted),
    }))
}

fn run(cli: Cli) -> CliResult<String> {
    let cfg = EnumConfig::from_env().with_jobs(cli.jobs);
    let pretty = |v: Value| serde_json::to_string_pretty(&v).unwrap();
    match cli.command {
        Command::Construct(args) => construct(args, &cfg).map(pretty),
        Command::Analyze { record } => {
            let code = read_record(&record)?.with_known(None, None).analyze(&cfg)?;
            Ok(pretty(record_json(&code)))
        }
        Command::Bounds(args) => bounds(args, &cfg),
        Command::Puncture { record, mode } => puncture(&record, mode, &cfg).map(pretty),
        Command::Simulate { record, error, seed, fused } => simulate(&record, &error, seed, fused).map(pretty),
        Command::PaperTable => Ok(table::paper_table(&cfg)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout(), "{}", out.trim_end());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
