use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use isaw_cli::bench::{self, BenchMode};
use isaw_cli::tokens::{read_text, TokenFormat};
use isaw_cli::{query, verify};
use isaw_core::{AnyIndex, Mode, Text};
use rand::{rngs::StdRng, SeedableRng};

#[derive(Parser)]
#[command(
    name = "isaw",
    version,
    about = "Shortest absent words of text fragments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexMode {
    Dense,
    Linear,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index and write it to disk.
    Build {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "linear")]
        mode: IndexMode,
        /// Alphabet size; defaults to the number of distinct tokens.
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long, value_enum, default_value = "bytes")]
        token_format: TokenFormat,
    },
    /// Answer range queries; prints `a b len i j alpha [word]` per range.
    Query {
        #[arg(long)]
        index: PathBuf,
        #[arg(long)]
        text: PathBuf,
        #[arg(long, num_args = 2, value_names = ["A", "B"], conflicts_with = "batch")]
        range: Option<Vec<usize>>,
        /// File of `a b` lines, or `-` for stdin.
        #[arg(long, required_unless_present = "range")]
        batch: Option<PathBuf>,
        #[arg(long)]
        print_word: bool,
    },
    /// Compare every query path with the brute-force oracle.
    Verify {
        /// Extra text to check besides the random ones.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "bytes")]
        token_format: TokenFormat,
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long, default_value_t = 200)]
        n_max: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Query latency and index size on power-of-two prefixes.
    Bench {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "bytes")]
        token_format: TokenFormat,
        #[arg(long)]
        sigma: Option<usize>,
        /// Length of the random text used without `--input`.
        #[arg(long, default_value_t = 1 << 16)]
        n: usize,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "dense,linear,loglog"
        )]
        modes: Vec<BenchMode>,
        #[arg(long, default_value_t = 10_000)]
        query_count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn build(
    input: PathBuf,
    output: PathBuf,
    mode: IndexMode,
    sigma: Option<usize>,
    format: TokenFormat,
) -> Result<ExitCode> {
    let text = read_text(&input, format, sigma)?;
    let mode = match mode {
        IndexMode::Dense => Mode::Dense,
        IndexMode::Linear => Mode::Linear,
    };
    let start = Instant::now();
    let index = AnyIndex::build(&text, mode);
    let build_ms = start.elapsed().as_secs_f64() * 1e3;
    let bytes = index.to_bytes(format.tag());
    std::fs::write(&output, &bytes).with_context(|| format!("writing {}", output.display()))?;
    let info = index.info();
    eprintln!(
        "n={} sigma={} lambda={} mode={} build_ms={build_ms:.1} index_bytes={} bytes_per_char={:.3}",
        info.n,
        info.sigma,
        info.lambda,
        if mode == Mode::Dense { "dense" } else { "linear" },
        bytes.len(),
        bytes.len() as f64 / info.n as f64
    );
    Ok(ExitCode::SUCCESS)
}

fn run_query(
    index: PathBuf,
    text: PathBuf,
    range: Option<Vec<usize>>,
    batch: Option<PathBuf>,
    print_word: bool,
) -> Result<ExitCode> {
    let (index, text, format) = query::load(&index, &text)?;
    let ranges = match (range, batch) {
        (Some(r), _) => vec![(r[0], r[1])],
        (None, Some(path)) => {
            let mut data = String::new();
            if path.as_os_str() == "-" {
                io::stdin().read_to_string(&mut data)?;
            } else {
                data = std::fs::read_to_string(&path)
                    .with_context(|| format!("reading {}", path.display()))?;
            }
            query::parse_ranges(&data)?
        }
        (None, None) => bail!("give --range or --batch"),
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let failed = query::run(
        &index,
        &text,
        format,
        &ranges,
        print_word,
        &mut out,
        &mut io::stderr(),
    )?;
    out.flush()?;
    Ok(if failed > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_verify(extra: Option<Text>, cfg: verify::VerifyConfig) -> Result<ExitCode> {
    let report = verify::run(&cfg, extra.as_ref());
    for f in &report.failures {
        println!("{f}");
    }
    println!(
        "{}\ttexts={}\tranges={}\tlemma_pairs={}\tfailures={}",
        if report.passed() { "PASS" } else { "FAIL" },
        report.texts,
        report.ranges,
        report.lemma_pairs,
        report.failures.len()
    );
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build {
            input,
            output,
            mode,
            sigma,
            token_format,
        } => build(input, output, mode, sigma, token_format),
        Command::Query {
            index,
            text,
            range,
            batch,
            print_word,
        } => run_query(index, text, range, batch, print_word),
        Command::Verify {
            input,
            token_format,
            sigma,
            n_max,
            trials,
            seed,
            inject_fault,
        } => input
            .map(|p| read_text(&p, token_format, sigma))
            .transpose()
            .and_then(|extra| {
                run_verify(
                    extra,
                    verify::VerifyConfig {
                        n_max,
                        trials,
                        seed,
                        inject_fault,
                    },
                )
            }),
        Command::Bench {
            input,
            token_format,
            sigma,
            n,
            modes,
            query_count,
            seed,
        } => {
            let text = match input {
                Some(p) => read_text(&p, token_format, sigma),
                None => {
                    let sigma = sigma.unwrap_or(2);
                    let codes = verify::random_codes(&mut StdRng::seed_from_u64(seed), n, sigma);
                    Text::from_codes(codes, sigma).map_err(Into::into)
                }
            };
            text.and_then(|t| {
                let stdout = io::stdout();
                let mut out = io::BufWriter::new(stdout.lock());
                bench::run(&t, &modes, query_count, seed, &mut out)?;
                out.flush()?;
                Ok(ExitCode::SUCCESS)
            })
        }
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
