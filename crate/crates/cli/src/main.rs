use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use zipmorph::cg::{format_readings, parse_readings, parse_rules, run_cg, run_cg_traced};
use zipmorph::gradation::{gradation_arrow, patterns_by_kotus_index};
use zipmorph::pipeline::{Pipeline, Stage};
use zipmorph::text::nfc;
use zipmorph::vowel::harmonize;
use zipmorph::{bench, generate, laws, Error, NounCase};

#[derive(Parser)]
#[command(name = "zipmorph", version, about = "Finnish morphophonology and CG-lite disambiguation as zipper arrows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Grade {
    Weak,
    Strong,
}

impl From<Grade> for zipmorph::Grade {
    fn from(g: Grade) -> Self {
        match g {
            Grade::Weak => zipmorph::Grade::Weak,
            Grade::Strong => zipmorph::Grade::Strong,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply consonant gradation to a word
    Grad {
        #[arg(long, value_enum)]
        grade: Grade,
        /// Print the word and deletion log after each step
        #[arg(long)]
        trace: bool,
        word: String,
    },
    /// Resolve the harmony archiphonemes A, O and U
    Harmony { word: String },
    /// Run gradation, harmony and possessive copying
    Pipeline {
        #[arg(long, value_enum)]
        grade: Grade,
        #[arg(long)]
        trace: bool,
        word: String,
    },
    /// Inflect a noun
    Generate {
        lemma: String,
        /// Case name, e.g. genitive or gen
        #[arg(long = "case")]
        case: NounCase,
        /// Add the third-person possessive suffix
        #[arg(long)]
        poss3: bool,
    },
    /// Disambiguate a readings file with a rule file
    Cg {
        rules: PathBuf,
        input: PathBuf,
        /// Report each rule firing on stderr
        #[arg(long)]
        trace: bool,
    },
    /// Check the algebraic laws on random inputs
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u32,
    },
    /// Measure per-rule latency
    Bench {
        #[arg(long, default_value_t = 10_000)]
        iterations: usize,
    },
    /// Print the gradation pattern table as TSV
    DumpPatterns,
}

fn word_arg(word: &str) -> Result<String> {
    let word = nfc(word);
    if word.is_empty() {
        return Err(Error::EmptyInput.into());
    }
    Ok(word)
}

fn run_stages(pipeline: Pipeline, word: &str, trace: bool) -> Result<()> {
    if trace {
        let (_, t) = pipeline.run_traced(&word_arg(word)?)?;
        print!("{t}");
    } else {
        println!("{}", pipeline.run(&word_arg(word)?)?);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Grad { grade, trace, word } => {
            let p = Pipeline::new(vec![Stage::new("gradation", gradation_arrow(grade.into()))]);
            run_stages(p, &word, trace)?;
        }
        Command::Harmony { word } => println!("{}", harmonize(&word_arg(&word)?)),
        Command::Pipeline { grade, trace, word } => {
            run_stages(Pipeline::standard(grade.into()), &word, trace)?;
        }
        Command::Generate { lemma, case, poss3 } => {
            println!("{}", generate(&word_arg(&lemma)?, case, poss3)?);
        }
        Command::Cg { rules, input, trace } => {
            let read = |p: &PathBuf| fs::read_to_string(p).with_context(|| format!("reading {}", p.display()));
            let rules = parse_rules(&read(&rules)?).with_context(|| format!("in {}", rules.display()))?;
            let text = nfc(&read(&input)?);
            let sentences = parse_readings(&text).with_context(|| format!("in {}", input.display()))?;
            let mut out = Vec::with_capacity(sentences.len());
            for s in &sentences {
                out.push(if trace {
                    run_cg_traced(s, &rules, |f| eprintln!("{f}"))?
                } else {
                    run_cg(s, &rules)?
                });
            }
            print!("{}", format_readings(&out));
        }
        Command::Laws { seed, cases } => {
            let report = laws::run_all(seed, cases);
            print!("{report}");
            return Ok(report.all_passed());
        }
        Command::Bench { iterations } => print!("{}", bench::run(iterations)),
        Command::DumpPatterns => {
            println!("kotus_index\tstrong\tweak\ttype\texample");
            for p in patterns_by_kotus_index() {
                println!(
                    "{}\t{}\t{}\t{}\t{}\u{2192}{}",
                    p.kotus_index, p.strong, p.weak, p.kind, p.example.0, p.example.1
                );
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
