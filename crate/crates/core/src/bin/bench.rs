//! Times repeated exact pattern searches over a FASTA or synthetic text.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser};

use seqlib::bench::{
    emit_report, run_bench, BenchConfig, ReportFormat, SyntheticText, TextSource, DEFAULT_SET,
    EXTENDED_SET,
};
use seqlib::pattern_matching::Algorithm;

#[derive(Parser, Debug)]
#[command(version, about = "Benchmark exact pattern matching algorithms")]
#[command(group(ArgGroup::new("text").required(true).args(["text_file", "synthetic"])))]
struct Args {
    /// Algorithm to run: naive, kmp, horspool, bndm, bom, shift-and, or all
    #[arg(long, default_value = "all")]
    algorithm: String,

    /// Pattern to search for
    #[arg(long, default_value = "GCGCGTACACACCGCCCG")]
    pattern: String,

    /// FASTA file whose first record is the text
    #[arg(long, value_name = "FASTA")]
    text_file: Option<PathBuf>,

    /// Uniform random DNA text: <len>:<seed>[:<alphabet>]
    #[arg(long, value_name = "LEN:SEED")]
    synthetic: Option<SyntheticText>,

    /// Search passes per algorithm
    #[arg(long, default_value_t = 10_000)]
    iterations: usize,

    /// Build each matcher once instead of in every pass
    #[arg(long)]
    no_init: bool,

    /// With `all`, also run KMP and the naive matcher
    #[arg(long)]
    all_algorithms: bool,

    /// Report format
    #[arg(long, default_value = "tsv", value_parser = ["tsv", "pretty"])]
    format: String,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let algorithms = if args.algorithm.eq_ignore_ascii_case("all") {
        if args.all_algorithms {
            EXTENDED_SET.to_vec()
        } else {
            DEFAULT_SET.to_vec()
        }
    } else {
        match args.algorithm.parse::<Algorithm>() {
            Ok(a) => vec![a],
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    };
    let text = match (args.text_file, args.synthetic) {
        (Some(path), _) => TextSource::Fasta(path),
        (None, Some(synthetic)) => TextSource::Synthetic(synthetic),
        (None, None) => unreachable!("clap enforces a text source"),
    };
    let format: ReportFormat = args.format.parse().expect("validated by clap");
    let cfg = BenchConfig {
        algorithms,
        pattern: args.pattern.into_bytes(),
        text,
        iterations: args.iterations,
        include_init: !args.no_init,
    };
    let report = match run_bench(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut stdout = io::stdout().lock();
    if let Err(e) = emit_report(&report, format, &mut stdout).and_then(|_| stdout.flush()) {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
