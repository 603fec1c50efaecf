//! Command-line surface: apply maps to tableaux, enumerate LR sets,
//! certify count symmetries, run property suites, and benchmark scaling.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lrsym::circuits::{bench, dilation_base, log_log_slope, reports_to_csv};
use lrsym::conjugation::{fast_blacklozenge, rho3};
use lrsym::crystal::{reversal_general, sigma, sigma0};
use lrsym::error::Error;
use lrsym::jdt::{anti_normal, evacuate, rectify};
use lrsym::json::{tableau_from_json, tableau_to_json};
use lrsym::oracle::{enumerate_lr_jobs, verify_symmetries, Bounds};
use lrsym::shapes::{NumberingVariant, Partition};
use lrsym::suites::{run_suite, SUITE_NAMES};
use lrsym::switching::rho_bss;
use lrsym::tableau::Tableau;

#[derive(Parser)]
#[command(name = "lrsym", about = "Littlewood-Richardson conjugation symmetry maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a tableau map to a tableau read as JSON.
    Apply(ApplyArgs),
    /// Enumerate LR(outer/inner, weight) as a JSON array.
    Enumerate(EnumerateArgs),
    /// Count symmetries of one triple and report as JSON.
    Coeff(TripleArgs),
    /// Run a property suite; exits 1 on the first counterexample.
    Verify(VerifyArgs),
    /// Time a map over column dilations and emit CSV plus a slope report.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ApplyArgs {
    /// One of: rho3, bss, whs, blacklozenge, blacklozenge-fast, rotate,
    /// reversal, evacuate, rectify, anti-normal, standardize, transpose,
    /// tau, tau-inv, sigma:i, sigma0
    map: String,
    /// Input file with tableau JSON, or "-" for stdin
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<String>,
    /// Inner shape for tau-inv, comma-separated parts
    #[arg(long)]
    mu: Option<String>,
}

#[derive(Args)]
struct TripleArgs {
    /// Outer shape, comma-separated parts
    outer: String,
    /// Inner shape; use "" for the empty partition
    inner: String,
    /// Weight partition
    weight: String,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    triple: TripleArgs,
    /// Print only the number of tableaux
    #[arg(long)]
    count: bool,
    /// Worker threads for the search
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or "all"
    suite: String,
    #[arg(long, default_value_t = 10)]
    max_cells: usize,
    #[arg(long, default_value_t = 5)]
    max_parts: usize,
    #[arg(long, default_value_t = 6)]
    max_part: usize,
    /// Seed for the randomized checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// A map registered in the benchmark harness
    map: String,
    /// Base tableau JSON file; the built-in running example when absent
    #[arg(long)]
    base: Option<String>,
    /// Dilation scales: "a..b" inclusive or a comma-separated list
    #[arg(long, default_value = "1..256")]
    scales: String,
    /// Timing repetitions per scale; the median is reported
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    csv: Option<String>,
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("stdin: {}", e)))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path, e)))
    }
}

fn write_output(out: &Option<String>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Error::Parse(format!("{}: {}", path, e)))
        }
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, Error> {
    s.parse::<Partition>()
}

/// Word-level operators lifted to tableaux: rewrite the row word and place
/// it back into the same shape.
fn via_row_word(t: &Tableau, f: impl Fn(&lrsym::words::Word) -> lrsym::words::Word) -> Result<Tableau, Error> {
    Tableau::place(t.shape().clone(), &f(&t.row_word()), NumberingVariant::Row)
}

fn apply_map(args: &ApplyArgs) -> Result<String, Error> {
    let t = tableau_from_json(&read_input(&args.input)?)?;
    let result = match args.map.as_str() {
        "rho3" => rho3(&t)?,
        "bss" | "whs" => rho_bss(&t)?,
        "blacklozenge" => t.blacklozenge_slow()?,
        "blacklozenge-fast" => fast_blacklozenge(&t.recording_matrix())?.to_tableau()?,
        "rotate" => t.rotate(),
        "reversal" => reversal_general(&t)?,
        "evacuate" => evacuate(&t)?,
        "rectify" => rectify(&t),
        "anti-normal" => anti_normal(&t),
        "standardize" => t.standardize().into_tableau(),
        "transpose" => t.standardize().transpose().into_tableau(),
        "tau" => t.tau()?,
        "tau-inv" => {
            let mu = parse_partition(args.mu.as_deref().ok_or_else(|| {
                Error::Parse("tau-inv needs --mu".into())
            })?)?;
            t.tau_inv(&mu)?
        }
        "sigma0" => via_row_word(&t, sigma0)?,
        other => match other.strip_prefix("sigma:") {
            Some(i) => {
                let i: usize = i
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad sigma index {:?}: {}", i, e)))?;
                let word = sigma(i, &t.row_word())?;
                Tableau::place(t.shape().clone(), &word, NumberingVariant::Row)?
            }
            None => return Err(Error::UnknownMap(other.to_string())),
        },
    };
    Ok(tableau_to_json(&result))
}

fn run_enumerate(args: &EnumerateArgs) -> Result<String, Error> {
    let outer = parse_partition(&args.triple.outer)?;
    let inner = parse_partition(&args.triple.inner)?;
    let weight = parse_partition(&args.triple.weight)?;
    let list = enumerate_lr_jobs(&outer, &inner, &weight, args.jobs.max(1))?;
    if args.count {
        return Ok(list.len().to_string());
    }
    let items: Vec<String> = list.iter().map(tableau_to_json).collect();
    Ok(format!("[{}]", items.join(",")))
}

fn run_coeff(args: &TripleArgs) -> Result<String, Error> {
    let report = verify_symmetries(
        &parse_partition(&args.outer)?,
        &parse_partition(&args.inner)?,
        &parse_partition(&args.weight)?,
    )?;
    serde_json::to_string(&report).map_err(|e| Error::Parse(e.to_string()))
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    let bounds = Bounds {
        max_cells: args.max_cells,
        max_parts: args.max_parts,
        max_part: args.max_part,
    };
    let names: Vec<&str> = if args.suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&args.suite.as_str()) {
        vec![args.suite.as_str()]
    } else {
        return Err(Error::UnknownMap(args.suite.clone()));
    };
    let mut failed = false;
    for name in names {
        match run_suite(name, bounds, args.seed) {
            Ok(n) => println!("{}: ok ({} checks)", name, n),
            Err(msg) => {
                println!("{}: FAIL\n{}", name, msg);
                failed = true;
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn parse_scales(spec: &str) -> Result<Vec<usize>, Error> {
    let bad = |e: &dyn std::fmt::Display| Error::Parse(format!("bad scales {:?}: {}", spec, e));
    if let Some((a, b)) = spec.split_once("..") {
        let a: usize = a.trim().parse().map_err(|e| bad(&e))?;
        let b: usize = b.trim().parse().map_err(|e| bad(&e))?;
        if a == 0 || b < a {
            return Err(bad(&"need 1 <= start <= end"));
        }
        Ok((a..=b).collect())
    } else {
        spec.split(',')
            .map(|s| s.trim().parse().map_err(|e| bad(&e)))
            .collect()
    }
}

fn run_bench(args: &BenchArgs) -> Result<String, Error> {
    let base = match &args.base {
        Some(path) => tableau_from_json(&read_input(path)?)?,
        None => dilation_base(),
    };
    let scales = parse_scales(&args.scales)?;
    let reports = bench(&args.map, &base, &scales, args.repeats.max(1))?;
    let csv = reports_to_csv(&reports);
    let points: Vec<(usize, u128)> = reports
        .iter()
        .map(|r| (r.cells, r.wall_nanos))
        .collect();
    let mut out = String::new();
    match &args.csv {
        Some(path) => {
            fs::write(path, &csv).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?
        }
        None => out.push_str(&csv),
    }
    if points.len() >= 2 {
        out.push_str(&format!("# log-log slope: {:.4}\n", log_log_slope(&points)));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome: Result<ExitCode, Error> = match &cli.command {
        Command::Apply(args) => apply_map(args)
            .and_then(|text| write_output(&args.out, &text))
            .map(|()| ExitCode::SUCCESS),
        Command::Enumerate(args) => run_enumerate(args)
            .map(|text| {
                println!("{}", text);
                ExitCode::SUCCESS
            }),
        Command::Coeff(args) => run_coeff(args).map(|text| {
            println!("{}", text);
            ExitCode::SUCCESS
        }),
        Command::Verify(args) => run_verify(args),
        Command::Bench(args) => run_bench(args).map(|text| {
            print!("{}", text);
            ExitCode::SUCCESS
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
