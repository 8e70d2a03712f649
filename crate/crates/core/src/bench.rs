//! Per-rule latency measurements.
//!
//! Every row times a complete call on a small fixed input, including zipper
//! construction and materialization, so the full pipeline row is directly
//! comparable with its component rows.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use crate::cg::{parse_rules, parse_sentence, run_cg, CgRule};
use crate::gradation::{gradation_arrow, Grade, PATTERNS};
use crate::pipeline::Pipeline;
use crate::vowel::{harmony_arrow, possessive_arrow};
use crate::writer::{WriterArrow, WriterZipper};
use crate::zipper::Zipper;

/// The rule file used for the CG rows.
pub const CG_RULES: &str = include_str!("../data/cg/finnish.cg");
/// The sentence used for the CG rows.
pub const CG_SENTENCE: &str = include_str!("../data/cg/sentence.tsv");

pub const HARMONY_WORDS: [&str; 4] = ["talossA", "kynässA", "pöydässA", "tiessA"];
pub const POSSESSIVE_WORDS: [&str; 3] = ["talossaVn", "kammastaVn", "kengästäVn"];
pub const PIPELINE_WORDS: [&str; 4] = ["kampAstAVn", "rantAssA", "pukussA", "kenkästAVn"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Section {
    CoKleisli,
    Cg,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub section: Section,
    pub label: String,
    /// Mean latency per call, in microseconds.
    pub mean_us: f64,
    pub std_us: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub iterations: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn row(&self, label_prefix: &str) -> Option<&BenchRow> {
        self.rows.iter().find(|r| r.label.starts_with(label_prefix))
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Per-rule latency ({} iterations)", self.iterations)?;
        writeln!(f, "{:<32} {:>10} {:>10}", "Component", "Mean (µs)", "Std (µs)")?;
        let mut section = None;
        for row in &self.rows {
            if section != Some(row.section) {
                section = Some(row.section);
                let title = match row.section {
                    Section::CoKleisli => "CoKleisli (char-level)",
                    Section::Cg => "CG-lite (sentence-level)",
                };
                writeln!(f, "{title}")?;
            }
            writeln!(f, "  {:<30} {:>10.2} {:>10.2}", row.label, row.mean_us, row.std_us)?;
        }
        Ok(())
    }
}

// Per-call samples in microseconds.
fn sample<F: FnMut()>(iterations: usize, mut f: F) -> Vec<f64> {
    f();
    (0..iterations.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64() * 1e6
        })
        .collect()
}

fn row(section: Section, label: impl Into<String>, samples: &[f64]) -> BenchRow {
    let n = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / n;
    let var = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    BenchRow {
        section,
        label: label.into(),
        mean_us: mean,
        std_us: var.sqrt(),
    }
}

fn one_stage(arrow: &WriterArrow, word: &str) -> String {
    let z = Zipper::from_word(word, 0).expect("non-empty word");
    WriterZipper::new(z)
        .extend(arrow)
        .materialize_word()
        .expect("valid deletions")
}

fn time_words(
    iterations: usize,
    words: &[&str],
    mut run: impl FnMut(&str) -> String,
) -> Vec<f64> {
    words
        .iter()
        .flat_map(|w| sample(iterations, || drop(black_box(run(black_box(w))))))
        .collect()
}

/// Measures every row with `iterations` timed calls per input.
pub fn run(iterations: usize) -> BenchReport {
    use Section::*;
    let mut rows = Vec::new();

    let weak = gradation_arrow(Grade::Weak);
    let mut all_gradation = Vec::new();
    for p in &PATTERNS {
        let s = time_words(iterations, &[p.example.0], |w| one_stage(&weak, w));
        rows.push(row(CoKleisli, format!("Gradation {} ({})", p.kotus_index, p.example.0), &s));
        all_gradation.extend(s);
    }
    rows.push(row(CoKleisli, "Gradation (avg/11)", &all_gradation));

    let harmony = WriterArrow::lift_pure(harmony_arrow);
    let s = time_words(iterations, &HARMONY_WORDS, |w| one_stage(&harmony, w));
    rows.push(row(CoKleisli, "Harmony (avg/4)", &s));

    let possessive = WriterArrow::lift_pure(possessive_arrow);
    let s = time_words(iterations, &POSSESSIVE_WORDS, |w| one_stage(&possessive, w));
    rows.push(row(CoKleisli, "Possessive (avg/3)", &s));

    let pipeline = Pipeline::standard(Grade::Weak);
    let s = time_words(iterations, &PIPELINE_WORDS, |w| {
        pipeline.run(w).expect("non-empty word")
    });
    rows.push(row(CoKleisli, "Full pipeline (avg/4)", &s));

    let rules = parse_rules(CG_RULES).expect("bundled rules parse");
    let sentence = parse_sentence(CG_SENTENCE).expect("bundled sentence parses");
    let cg = |rules: &[CgRule]| {
        sample(iterations, || {
            drop(black_box(run_cg(black_box(&sentence), rules).expect("non-empty sentence")))
        })
    };
    let single: Vec<f64> = rules.chunks(1).flat_map(cg).collect();
    rows.push(row(Cg, format!("Single rule (avg/{})", rules.len()), &single));
    rows.push(row(Cg, format!("Full CG ({} rules)", rules.len()), &cg(&rules)));

    BenchReport { iterations, rows }
}
