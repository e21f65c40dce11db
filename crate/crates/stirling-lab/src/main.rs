//! Command-line front end: table emission, Bell evaluation, identity
//! audits, strategy benchmarks, and a checksummed table cache.
//!
//! Exit codes: 0 success, 2 invalid flags or values, 3 cache corruption,
//! 4 internal route disagreement, 5 unexpected identity failure.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use stirling_lab::bell::{bell_partitions, bell_series, BellArgs};
use stirling_lab::exact::parse_rational;
use stirling_lab::strategies::{build_table, s_triangular};
use stirling_lab::table::{SignedStirlingTable, StrategyId};
use stirling_lab::verify::{run_suite, IdentityId, SuiteConfig};

const EXIT_BAD_FLAGS: u8 = 2;
const EXIT_CACHE_CORRUPT: u8 = 3;
const EXIT_ROUTE_DISAGREEMENT: u8 = 4;
const EXIT_UNEXPECTED_FAILURE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "stirling-lab",
    about = "Exact Stirling-number tables, Bell polynomial evaluation, and identity audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the triangle of s(n,k) built by a chosen strategy
    Table(TableArgs),
    /// Evaluate a partial Bell polynomial at exact rational arguments
    Bell(BellCmdArgs),
    /// Audit the identity catalogue against the oracle and emit a JSON report
    Verify(VerifyArgs),
    /// Time table construction per strategy (values verified first)
    Bench(BenchArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Largest row of the triangle
    #[arg(long = "max-n")]
    max_n: usize,
    /// Construction strategy
    #[arg(long, default_value = "triangular")]
    strategy: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Cache file path (STIRLING_LAB_CACHE overrides)
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct BellCmdArgs {
    n: usize,
    k: usize,
    /// Arguments x1 x2 ... as rational literals `p` or `p/q`
    #[arg(required = true)]
    args: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "max-n", default_value_t = 40)]
    max_n: usize,
    /// Comma-separated identity names; defaults to the full catalogue
    #[arg(long, value_delimiter = ',')]
    identities: Vec<String>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long = "max-n", default_value_t = 60)]
    max_n: usize,
    /// Comma-separated strategy names; defaults to every oracle-agreeing strategy
    #[arg(long, value_delimiter = ',')]
    strategies: Vec<String>,
    #[arg(long, default_value_t = 3)]
    repetitions: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Bell(args) => cmd_bell(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn fail(code: u8, message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn cmd_table(args: TableArgs) -> ExitCode {
    if args.max_n < 1 {
        return fail(EXIT_BAD_FLAGS, "--max-n must be at least 1");
    }
    let Some(strategy) = StrategyId::parse(&args.strategy) else {
        return fail(
            EXIT_BAD_FLAGS,
            &format!(
                "unknown strategy {:?}; valid: {}",
                args.strategy,
                StrategyId::ALL.map(|s| s.name()).join(", ")
            ),
        );
    };
    let cache_path = std::env::var_os("STIRLING_LAB_CACHE")
        .map(PathBuf::from)
        .or(args.cache);

    let fresh = build_table(strategy, args.max_n);
    let table = match cache_path {
        Some(path) => match reuse_or_write_cache(&path, &fresh) {
            Ok(table) => table,
            Err(message) => return fail(EXIT_CACHE_CORRUPT, &message),
        },
        None => fresh,
    };

    let rendered = match args.format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
    };
    print!("{rendered}");
    ExitCode::SUCCESS
}

/// Warm-cache protocol: a stale or absent cache is rewritten; a present
/// cache must pass its checksum and must agree with a fresh computation
/// before it is reused.
fn reuse_or_write_cache(
    path: &std::path::Path,
    fresh: &SignedStirlingTable,
) -> Result<SignedStirlingTable, String> {
    if path.exists() {
        let content = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read cache {}: {e}", path.display()))?;
        let cache: CacheFile = serde_json::from_str(&content)
            .map_err(|e| format!("cache corruption: malformed cache file: {e}"))?;
        let table_json = cache.table.to_string();
        if sha256_hex(table_json.as_bytes()) != cache.checksum {
            return Err("cache corruption: checksum mismatch".to_owned());
        }
        let cached = SignedStirlingTable::from_json(&table_json)
            .map_err(|e| format!("cache corruption: {e}"))?;
        if cached.max_n() == fresh.max_n() && cached.strategy() == fresh.strategy() {
            if !cached.same_values(fresh) {
                return Err(
                    "cache corruption: cached values disagree with fresh computation".to_owned(),
                );
            }
            return Ok(cached);
        }
        // different parameters: fall through and overwrite
    }
    write_cache(path, fresh)?;
    Ok(fresh.clone())
}

fn write_cache(path: &std::path::Path, table: &SignedStirlingTable) -> Result<(), String> {
    // checksum the Value rendering (sorted keys), the same form the
    // reader recovers from the cache file
    let value: serde_json::Value =
        serde_json::from_str(&table.to_json()).expect("just serialized");
    let cache = CacheFile {
        checksum: sha256_hex(value.to_string().as_bytes()),
        table: value,
    };
    let body = serde_json::to_string(&cache).expect("cache serialization cannot fail");
    std::fs::write(path, body).map_err(|e| format!("cannot write cache {}: {e}", path.display()))
}

#[derive(serde::Serialize, serde::Deserialize)]
struct CacheFile {
    checksum: String,
    table: serde_json::Value,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn cmd_bell(args: BellCmdArgs) -> ExitCode {
    if args.k > args.n {
        return fail(EXIT_BAD_FLAGS, "k must not exceed n");
    }
    let mut values = Vec::with_capacity(args.args.len());
    for literal in &args.args {
        match parse_rational(literal) {
            Some(v) => values.push(v),
            None => {
                return fail(
                    EXIT_BAD_FLAGS,
                    &format!("malformed rational literal {literal:?} (expected p or p/q)"),
                )
            }
        }
    }
    let needed = args.n + 1 - args.k.min(args.n);
    if args.n > 0 && values.len() < needed {
        return fail(
            EXIT_BAD_FLAGS,
            &format!("B({},{}) needs {needed} arguments, got {}", args.n, args.k, values.len()),
        );
    }
    let bell_args = BellArgs::new(values);
    let by_partitions = bell_partitions(args.n, args.k, &bell_args);
    let by_series = bell_series(args.n, args.k, &bell_args);
    if by_partitions != by_series {
        return fail(
            EXIT_ROUTE_DISAGREEMENT,
            &format!(
                "internal route disagreement: partitions give {by_partitions}, series gives {by_series}"
            ),
        );
    }
    println!("{by_partitions}");
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.max_n < 1 {
        return fail(EXIT_BAD_FLAGS, "--max-n must be at least 1");
    }
    let identities = if args.identities.is_empty() {
        IdentityId::ALL.to_vec()
    } else {
        let mut ids = Vec::new();
        for name in &args.identities {
            match IdentityId::parse(name) {
                Some(id) => ids.push(id),
                None => {
                    return fail(
                        EXIT_BAD_FLAGS,
                        &format!(
                            "unknown identity {name:?}; valid: {}",
                            IdentityId::ALL.map(|i| i.name()).join(", ")
                        ),
                    )
                }
            }
        }
        ids
    };
    let report = run_suite(&SuiteConfig {
        identities,
        max_n: args.max_n,
    });
    println!("{}", report.to_json());
    match report.catalogue_verdict() {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => fail(EXIT_UNEXPECTED_FAILURE, &message),
    }
}

fn cmd_bench(args: BenchArgs) -> ExitCode {
    if args.max_n < 1 {
        return fail(EXIT_BAD_FLAGS, "--max-n must be at least 1");
    }
    if args.repetitions < 1 {
        return fail(EXIT_BAD_FLAGS, "--repetitions must be at least 1");
    }
    let strategies: Vec<StrategyId> = if args.strategies.is_empty() {
        StrategyId::ALL
            .into_iter()
            .filter(|&s| s != StrategyId::VerticalFactorialPrinted)
            .collect()
    } else {
        let mut out = Vec::new();
        for name in &args.strategies {
            match StrategyId::parse(name) {
                Some(s) => out.push(s),
                None => {
                    return fail(EXIT_BAD_FLAGS, &format!("unknown strategy {name:?}"))
                }
            }
        }
        out
    };

    let oracle = s_triangular(args.max_n);
    // values first: timings of wrong answers are worthless
    for &strategy in &strategies {
        let table = build_table(strategy, args.max_n);
        if !table.same_values(&oracle) {
            return fail(
                EXIT_ROUTE_DISAGREEMENT,
                &format!("strategy {strategy} disagrees with the oracle at max_n = {}", args.max_n),
            );
        }
    }

    let mut out = String::new();
    out.push_str(&format!(
        "{:<30} {:>9} {:>14}\n",
        "strategy", "verified", "best_time"
    ));
    for &strategy in &strategies {
        let mut best = f64::INFINITY;
        for _ in 0..args.repetitions {
            let start = Instant::now();
            let table = build_table(strategy, args.max_n);
            let elapsed = start.elapsed().as_secs_f64();
            std::hint::black_box(&table);
            best = best.min(elapsed);
        }
        out.push_str(&format!(
            "{:<30} {:>9} {:>13.6}s\n",
            strategy.name(),
            "yes",
            best
        ));
    }
    print!("{out}");
    ExitCode::SUCCESS
}
