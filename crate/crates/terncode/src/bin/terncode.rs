//! Command-line front end: build function tables, analyze the codes they
//! generate, export spectra, and run the built-in verification suites.
//!
//! Exit codes: 0 success (and "minimal" for analyze), 1 parse/I/O failure,
//! 2 precondition or parameter violation, 3 not minimal (witness in the
//! report), 4 inconclusive.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use terncode::codes;
use terncode::error::Error;
use terncode::functions::{
    classify_spectrum, compose, extend_with_dummy, field_mult_bent, indicator_quadratic,
    FunctionTable,
};
use terncode::gf3::{SubspaceSpec, TernaryVector};
use terncode::minimality::{
    covering_oracle, norm_bound_check, walsh_direct_check, CoveringMode, MinimalityVerdict,
    Verdict, EXHAUSTIVE_CAP,
};
use terncode::report::{AnalysisReport, MethodReport, RunManifest};
use terncode::verify;
use terncode::walsh::WalshSpectrum;

#[derive(Parser)]
#[command(name = "terncode", version, about = "Exact analysis of ternary codes from vectorial functions")]
struct Cli {
    /// Worker threads for parallel enumeration (0 = all available).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a function table and write it as TFT/1.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Analyze the code of a function table: weights, AB status, minimality.
    Analyze(AnalyzeArgs),
    /// Export the full exact Walsh spectrum as CSV.
    Spectrum {
        /// Input table (TFT/1).
        table: PathBuf,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a built-in verification suite and print one line per check.
    VerifyPaper {
        /// identities | tables | differential | theorem6
        #[arg(long)]
        suite: String,
        /// Largest n for randomized suites.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Seed for randomized corpora.
        #[arg(long, default_value_t = 0xA11CE)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Indicator-plus-quadratic seed on the coordinate subspace of
    /// dimension r, with directions e_0 and e_1.
    IndicatorQuadratic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Field-multiplication bent function on F_3^{2k} with m components.
    FieldMultBent {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Append inert coordinates, shifting the plateau amount by extra.
    DummyExtend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        extra: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Assemble F = (f, G) from a scalar table and a vectorial table.
    Compose {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input table (TFT/1).
    table: PathBuf,
    /// Minimality route(s) to run.
    #[arg(long, value_enum, default_value_t = MinimalityMode::Walsh)]
    minimality: MinimalityMode,
    /// Report output path (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for sampled covering (used when the exhaustive cap is exceeded).
    #[arg(long, default_value_t = 0xC0DE)]
    seed: u64,
    /// Pair budget for sampled covering.
    #[arg(long, default_value_t = 1_000_000)]
    sample_pairs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MinimalityMode {
    Walsh,
    Brute,
    Both,
    Bound,
}

impl MinimalityMode {
    fn as_str(self) -> &'static str {
        match self {
            MinimalityMode::Walsh => "walsh",
            MinimalityMode::Brute => "brute",
            MinimalityMode::Both => "both",
            MinimalityMode::Bound => "bound",
        }
    }
}

fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::TftParse(_) | Error::Io(_) => 1,
        _ => 2,
    }
}

fn read_table(path: &Path) -> Result<FunctionTable, Error> {
    let file = File::open(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    FunctionTable::read_tft(BufReader::new(file))
}

fn write_table(f: &FunctionTable, path: &Path) -> Result<(), Error> {
    let file = File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut w = BufWriter::new(file);
    f.write_tft(&mut w)?;
    w.flush()?;
    Ok(())
}

fn run_construct(kind: ConstructKind) -> Result<(), Error> {
    let (table, out) = match kind {
        ConstructKind::IndicatorQuadratic { n, r, out } => {
            if r < 2 {
                return Err(Error::Parameter(format!(
                    "r must be at least 2 so e_0, e_1 work as directions, got {r}"
                )));
            }
            let e = SubspaceSpec::coordinate(n, r)?;
            let a = TernaryVector::standard_basis(n, 0);
            let b = TernaryVector::standard_basis(n, 1);
            (indicator_quadratic(&e, &a, &b)?, out)
        }
        ConstructKind::FieldMultBent { k, m, out } => (field_mult_bent(k, m)?, out),
        ConstructKind::DummyExtend { input, extra, out } => {
            let g = read_table(&input)?;
            (extend_with_dummy(&g, extra)?, out)
        }
        ConstructKind::Compose { f, g, out } => {
            let ft = read_table(&f)?;
            let gt = read_table(&g)?;
            (compose(&ft, &gt)?, out)
        }
    };
    write_table(&table, &out)?;
    let spec = WalshSpectrum::compute(&table);
    let cls = classify_spectrum(&spec);
    println!(
        "wrote {} (n = {}, m = {}); classification: {cls}",
        out.display(),
        table.n(),
        table.m()
    );
    Ok(())
}

fn run_analyze(args: &AnalyzeArgs) -> Result<AnalysisReport, Error> {
    let table = read_table(&args.table)?;
    let spec = WalshSpectrum::compute(&table);
    if !spec.origin_is_zero() {
        return Err(Error::NonzeroOrigin);
    }
    let dimension = codes::check_dimension(&spec)?;
    let dist = codes::weight_distribution(&spec)?;
    let ab = codes::ab_status(&dist)?;
    let spectral_violation = codes::ab_spectral_violation(&spec);

    let exhaustive_fits = terncode::pow3(table.n() + table.m()) <= EXHAUSTIVE_CAP;
    let mut manifest = RunManifest::new("analyze")
        .with_param("table", args.table.display().to_string())
        .with_param("minimality", args.minimality.as_str());
    let mut methods: Vec<MethodReport> = Vec::new();
    let push_covering = |methods: &mut Vec<MethodReport>| -> Result<(), Error> {
        if exhaustive_fits {
            let v = covering_oracle(&table, CoveringMode::Exhaustive)?;
            methods.push(MethodReport::from_verdict(&v));
        } else {
            let v = covering_oracle(
                &table,
                CoveringMode::Sampled { pairs: args.sample_pairs, seed: args.seed },
            )?;
            methods.push(MethodReport::from_verdict(&v).with_sample_pairs(args.sample_pairs));
        }
        Ok(())
    };
    match args.minimality {
        MinimalityMode::Walsh => {
            methods.push(MethodReport::from_verdict(&walsh_direct_check(&spec)?));
        }
        MinimalityMode::Brute => {
            if !exhaustive_fits {
                manifest = manifest.with_seed(args.seed);
            }
            push_covering(&mut methods)?;
        }
        MinimalityMode::Both => {
            let direct = walsh_direct_check(&spec)?;
            methods.push(MethodReport::from_verdict(&direct));
            if !exhaustive_fits {
                manifest = manifest.with_seed(args.seed);
            }
            push_covering(&mut methods)?;
            let cover_verdict = &methods[1].verdict;
            let agree = *cover_verdict == Verdict::Inconclusive.as_str()
                || *cover_verdict == direct.verdict.as_str();
            assert!(
                agree,
                "internal invariant violated: covering and Walsh verdicts disagree \
                 ({cover_verdict} vs {})",
                direct.verdict.as_str()
            );
        }
        MinimalityMode::Bound => {
            let v: MinimalityVerdict = norm_bound_check(&spec);
            methods.push(MethodReport::from_verdict(&v));
        }
    }

    Ok(AnalysisReport::assemble(
        manifest,
        table.n(),
        table.m(),
        dimension,
        &dist,
        ab,
        spectral_violation,
        methods,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .expect("thread pool is configured once at startup");
    }
    let started = Instant::now();
    let code = match cli.command {
        Command::Construct { kind } => match run_construct(kind) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                error_exit_code(&e)
            }
        },
        Command::Analyze(args) => match run_analyze(&args) {
            Ok(report) => {
                let json = report.to_json();
                let ok = match &args.out {
                    Some(path) => std::fs::write(path, json.as_bytes())
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
                    None => {
                        println!("{json}");
                        Ok(())
                    }
                };
                match ok {
                    Ok(()) => {
                        eprintln!(
                            "analyzed [{}, {}] code in {:.2?}: w_min = {}, w_max = {}, AB = {}",
                            report.length,
                            report.dimension,
                            started.elapsed(),
                            report.w_min,
                            report.w_max,
                            report.ab_satisfied
                        );
                        report.exit_code() as u8
                    }
                    Err(e) => {
                        eprintln!("error: {e}");
                        error_exit_code(&e)
                    }
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                error_exit_code(&e)
            }
        },
        Command::Spectrum { table, out } => {
            let result = read_table(&table).and_then(|t| {
                let spec = WalshSpectrum::compute(&t);
                let file = File::create(&out)
                    .map_err(|e| Error::Io(format!("{}: {e}", out.display())))?;
                let mut w = BufWriter::new(file);
                spec.write_csv(&mut w)?;
                w.flush()?;
                Ok(())
            });
            match result {
                Ok(()) => {
                    println!("wrote {}", out.display());
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    error_exit_code(&e)
                }
            }
        }
        Command::VerifyPaper { suite, max_n, seed } => {
            match verify::run_suite(&suite, max_n, seed) {
                None => {
                    eprintln!(
                        "error: unknown suite {suite:?} (expected identities, tables, \
                         differential or theorem6)"
                    );
                    2
                }
                Some(checks) => {
                    let mut failures = 0usize;
                    for c in &checks {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        println!("{tag} {} — {}", c.name, c.detail);
                        if !c.passed {
                            failures += 1;
                        }
                    }
                    println!(
                        "{} checks, {} failed, elapsed {:.2?}",
                        checks.len(),
                        failures,
                        started.elapsed()
                    );
                    if failures == 0 {
                        0
                    } else {
                        1
                    }
                }
            }
        }
    };
    ExitCode::from(code)
}
