//! Composing writer arrows into a morphophonological pipeline.
//!
//! The standard pipeline is gradation, then harmony, then possessive vowel
//! copying. Gradation comes first because it may delete characters and so
//! change which vowels are adjacent. Each stage is one `extend` over the
//! whole word; deletions accumulate in the log and are applied exactly once
//! at the end.

use std::fmt;

use crate::error::{Error, Result};
use crate::gradation::{gradation_arrow, Grade};
use crate::text::nfc;
use crate::vowel::{harmony_arrow, possessive_arrow};
use crate::writer::{DeletionSet, WriterArrow, WriterZipper};
use crate::zipper::Zipper;

/// CoKleisli composition `f ≫= g`: extend with `f`, then apply `g` at the
/// focus of the result.
///
/// The composite reports every deletion `f` makes anywhere in the word plus
/// whatever `g` reports at the focus. With this, extending once with the
/// composite gives the same word and the same log as extending with `f`
/// and then with `g`.
pub fn compose<T: Clone + Send + Sync + 'static>(
    f: &WriterArrow<T>,
    g: &WriterArrow<T>,
) -> WriterArrow<T> {
    let (f, g) = (f.clone(), g.clone());
    WriterArrow::new(move |w: &WriterZipper<T>| {
        let (f_deleted, extended) = w.extend_emitting(|x| f.apply(x));
        let extended =
            WriterZipper::with_log_unchecked(w.log().union(&f_deleted), extended.into_parts().1);
        let (g_deleted, out) = g.apply(&extended);
        (f_deleted.union(&g_deleted), out)
    })
}

#[derive(Clone, Debug)]
pub struct Stage {
    pub name: String,
    pub arrow: WriterArrow,
}

impl Stage {
    pub fn new(name: impl Into<String>, arrow: WriterArrow) -> Self {
        Stage {
            name: name.into(),
            arrow,
        }
    }
}

/// An ordered list of stages, each applied with one `extend`.
#[derive(Clone, Debug, Default)]
pub struct Pipeline {
    stages: Vec<Stage>,
}

impl Pipeline {
    pub fn new(stages: Vec<Stage>) -> Self {
        Pipeline { stages }
    }

    /// Gradation toward `grade`, then harmony, then possessive copying.
    pub fn standard(grade: Grade) -> Self {
        Pipeline::new(vec![
            Stage::new("gradation", gradation_arrow(grade)),
            Stage::new("harmony", WriterArrow::lift_pure(harmony_arrow)),
            Stage::new("possessive", WriterArrow::lift_pure(possessive_arrow)),
        ])
    }

    /// Harmony and possessive copying only.
    pub fn vowels_only() -> Self {
        Pipeline::new(vec![
            Stage::new("harmony", WriterArrow::lift_pure(harmony_arrow)),
            Stage::new("possessive", WriterArrow::lift_pure(possessive_arrow)),
        ])
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn push(&mut self, stage: Stage) {
        self.stages.push(stage);
    }

    /// Runs every stage over `w` without materializing.
    pub fn extend_all(&self, w: WriterZipper) -> WriterZipper {
        self.stages.iter().fold(w, |w, s| w.extend(&s.arrow))
    }

    /// The whole pipeline as a single arrow. Extending with it is equivalent
    /// to [`Pipeline::extend_all`]. The empty pipeline is the identity.
    pub fn composed(&self) -> WriterArrow {
        let mut stages = self.stages.iter();
        match stages.next() {
            None => WriterArrow::identity(),
            Some(first) => stages.fold(first.arrow.clone(), |acc, s| compose(&acc, &s.arrow)),
        }
    }

    /// Normalizes `word`, runs every stage from an empty log and
    /// materializes once.
    pub fn run(&self, word: &str) -> Result<String> {
        let w = start(word)?;
        self.extend_all(w).materialize_word()
    }

    /// Like [`Pipeline::run`], also recording the word and log after each
    /// stage.
    pub fn run_traced(&self, word: &str) -> Result<(String, Trace)> {
        let mut w = start(word)?;
        let mut rows = vec![TraceRow::snapshot("input", &w)];
        for s in &self.stages {
            w = w.extend(&s.arrow);
            rows.push(TraceRow::snapshot(&s.name, &w));
        }
        let surface = w.materialize_word()?;
        rows.push(TraceRow {
            stage: "materialize".into(),
            chars: surface.clone(),
            deletions: DeletionSet::empty(),
        });
        Ok((surface, Trace(rows)))
    }
}

fn start(word: &str) -> Result<WriterZipper> {
    let word = nfc(word);
    let zipper = Zipper::from_word(&word, 0).map_err(|_| Error::EmptyInput)?;
    Ok(WriterZipper::new(zipper))
}

/// Runs the standard pipeline for `grade` over `word`.
pub fn run_pipeline(word: &str, grade: Grade) -> Result<String> {
    Pipeline::standard(grade).run(word)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub stage: String,
    pub chars: String,
    pub deletions: DeletionSet,
}

impl TraceRow {
    fn snapshot(stage: &str, w: &WriterZipper) -> Self {
        TraceRow {
            stage: stage.to_string(),
            chars: w.zipper().to_word(),
            deletions: w.log().clone(),
        }
    }
}

/// Stage-by-stage record of a pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace(pub Vec<TraceRow>);

/// One line per stage: `stage TAB chars TAB deletions`.
impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            writeln!(f, "{}\t{}\t{}", row.stage, row.chars, row.deletions)?;
        }
        Ok(())
    }
}
