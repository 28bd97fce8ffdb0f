use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use posbraid::harness::{self, EnumerationRecord};
use posbraid::minor::{self, MinorKind, Strategy, DEFAULT_WIDTH};
use posbraid::surface::{render_svg, LinkingPattern};
use posbraid::{BraidWord, BrickDiagram};
use serde::Serialize;

/// Largest strand count and word length `enumerate` accepts without --unsafe.
const MAX_SAFE_STRANDS: usize = 6;
const MAX_SAFE_LENGTH: usize = 16;

#[derive(Parser)]
#[command(name = "posbraid", version, about = "Invariants and genus-defect certificates for positive braid links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Components, Betti number, genus, primality, signature and nullity.
    Info(WordArgs),
    /// Genus-defect lower bound from disjoint obstruction minors.
    Defect {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = DEFAULT_WIDTH)]
        width: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Interval)]
        strategy: StrategyArg,
    },
    /// Obstruction graphs found in the whole linking pattern (including D5).
    Minors(WordArgs),
    /// Brick diagram as SVG.
    Render {
        #[command(flatten)]
        word: WordArgs,
        /// Output file (defaults to stdout).
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw the linking pattern on top of the bricks.
        #[arg(long)]
        overlay: bool,
    },
    /// Invariants of every word up to cyclic rotation, as CSV (or JSON).
    Enumerate {
        #[arg(long)]
        strands: usize,
        #[arg(long = "max-length")]
        max_length: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        json: bool,
        /// Lift the strand/length guards.
        #[arg(long = "unsafe")]
        allow_large: bool,
    },
    /// Check the β_k family: k+1 components, b1 = 3k, |σ| = 2k+1, nullity k−1.
    Betak {
        k: usize,
        /// Check every k' in 1..=k.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct WordArgs {
    /// Braid word, e.g. "s1^2 s2^2 s1 s3 s2^2 s3".
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long)]
    strands: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Fixed,
    Interval,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Fixed => Strategy::FixedWindows,
            StrategyArg::Interval => Strategy::IntervalScheduling,
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Runtime(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

impl WordArgs {
    fn parse(&self) -> Result<BraidWord, Failure> {
        BraidWord::parse(&self.word, self.strands).map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value).context("serializing report")?);
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Info(args) => {
            let word = args.parse()?;
            let r = harness::info(&word);
            if args.json {
                print_json(&r)?;
            } else {
                println!("word:        {}", r.word);
                println!("strands:     {}", r.strands);
                println!("components:  {}", r.components);
                println!("b1:          {}", r.b1);
                match r.genus {
                    Some(g) => println!("genus:       {g}"),
                    None => println!("genus:       - (split)"),
                }
                println!("primality:   {}", r.primality.as_str());
                println!("signature:   {}", r.signature);
                println!("nullity:     {}", r.nullity);
                println!("kt:          {}", r.kt_certificate.map_or("split", |c| c.as_str()));
            }
        }
        Command::Defect { word, width, strategy } => {
            let w = word.parse()?;
            if width == 0 {
                return Err(Failure::Usage("--width must be at least 1".into()));
            }
            let report = minor::defect_lower_bound(&w, strategy.into(), width);
            print_json(&report)?;
        }
        Command::Minors(args) => {
            let word = args.parse()?;
            let pattern = LinkingPattern::new(&word);
            let certs = if word.generator_count() == 0 {
                Vec::new()
            } else {
                minor::detect_kinds(&pattern, 1..=word.generator_count(), &MinorKind::ALL)
            };
            if args.json {
                print_json(&certs)?;
            } else if certs.is_empty() {
                println!("no obstruction graphs found");
            } else {
                for c in &certs {
                    println!("{:<3} columns {}..{}  bricks {:?}", c.kind.short_name(), c.columns.0, c.columns.1, c.embedding);
                }
            }
        }
        Command::Render { word, svg, overlay } => {
            let w = word.parse()?;
            let doc = render_svg(&BrickDiagram::new(&w), overlay);
            match svg {
                Some(path) => write_file(&path, doc.as_bytes())?,
                None => print!("{doc}"),
            }
        }
        Command::Enumerate { strands, max_length, out, workers, json, allow_large } => {
            if strands < 2 {
                return Err(Failure::Usage("--strands must be at least 2".into()));
            }
            if !allow_large && (strands > MAX_SAFE_STRANDS || max_length > MAX_SAFE_LENGTH) {
                return Err(Failure::Usage(format!(
                    "enumeration limited to {MAX_SAFE_STRANDS} strands and length {MAX_SAFE_LENGTH}; pass --unsafe to override"
                )));
            }
            let rows = harness::enumerate(strands, max_length, workers);
            let bytes = if json || out.extension().is_some_and(|e| e == "json") {
                serde_json::to_vec_pretty(&rows).context("serializing rows")?
            } else {
                to_csv(&rows)?
            };
            write_file(&out, &bytes)?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
        }
        Command::Betak { k, all, json } => {
            if k == 0 {
                return Err(Failure::Usage("k must be at least 1".into()));
            }
            let ks = if all { 1..=k } else { k..=k };
            let reports: Vec<_> = ks.map(harness::betak_report).collect();
            if json {
                print_json(&reports)?;
            } else {
                for r in &reports {
                    for c in &r.checks {
                        let verdict = if c.pass { "PASS" } else { "FAIL" };
                        println!("{verdict} k={} {}: expected {}, computed {}", r.k, c.name, c.expected, c.computed);
                    }
                }
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub const CSV_HEADER: [&str; 12] = [
    "word", "strands", "length", "components", "b1", "genus", "signature", "nullity", "primality", "kt", "minors",
    "defect_lb",
];

fn to_csv(rows: &[EnumerationRecord]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).context("writing CSV")?;
    for r in rows {
        let minors: Vec<&str> = r.minors.iter().map(|k| k.short_name()).collect();
        w.write_record([
            r.word.clone(),
            r.strands.to_string(),
            r.length.to_string(),
            r.components.to_string(),
            r.b1.to_string(),
            r.genus.map_or_else(String::new, |g| g.to_string()),
            r.signature.to_string(),
            r.nullity.to_string(),
            r.primality.as_str().to_string(),
            r.kt.map_or("split", |c| c.as_str()).to_string(),
            minors.join(";"),
            r.defect_lb.to_string(),
        ])
        .context("writing CSV")?;
    }
    w.into_inner().map_err(|e| Failure::Runtime(anyhow::anyhow!("flushing CSV: {e}")))
}
