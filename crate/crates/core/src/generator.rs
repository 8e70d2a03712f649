//! Noun inflection by running the rule pipeline in the generative direction.
//!
//! A case is a suffix written with archiphonemes plus the grade the stem
//! takes before it. The underlying form `lemma ++ suffix` goes through the
//! same gradation, harmony and possessive arrows used everywhere else.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gradation::{gradation_arrow_within, Grade};
use crate::pipeline::{Pipeline, Stage};
use crate::text::nfc;
use crate::vowel::{classify_vowel, VowelClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NounCase {
    Nominative,
    Genitive,
    Partitive,
    Inessive,
    Elative,
    Illative,
    Adessive,
    Ablative,
    Allative,
    Essive,
    Translative,
}

impl NounCase {
    pub const ALL: [NounCase; 11] = [
        NounCase::Nominative,
        NounCase::Genitive,
        NounCase::Partitive,
        NounCase::Inessive,
        NounCase::Elative,
        NounCase::Illative,
        NounCase::Adessive,
        NounCase::Ablative,
        NounCase::Allative,
        NounCase::Essive,
        NounCase::Translative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NounCase::Nominative => "nominative",
            NounCase::Genitive => "genitive",
            NounCase::Partitive => "partitive",
            NounCase::Inessive => "inessive",
            NounCase::Elative => "elative",
            NounCase::Illative => "illative",
            NounCase::Adessive => "adessive",
            NounCase::Ablative => "ablative",
            NounCase::Allative => "allative",
            NounCase::Essive => "essive",
            NounCase::Translative => "translative",
        }
    }
}

impl fmt::Display for NounCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NounCase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        NounCase::ALL
            .into_iter()
            .find(|c| c.name() == lower || c.name()[..3] == lower)
            .ok_or_else(|| format!("unknown case {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseTemplate {
    pub suffix: &'static str,
    pub grade: Grade,
}

/// The suffix and stem grade for each case.
pub fn case_template(case: NounCase) -> CaseTemplate {
    use Grade::*;
    let (suffix, grade) = match case {
        NounCase::Nominative => ("", Strong),
        NounCase::Genitive => ("n", Weak),
        NounCase::Partitive => ("A", Strong),
        NounCase::Inessive => ("ssA", Weak),
        NounCase::Elative => ("stA", Weak),
        NounCase::Illative => ("Vn", Strong),
        NounCase::Adessive => ("llA", Weak),
        NounCase::Ablative => ("ltA", Weak),
        NounCase::Allative => ("lle", Weak),
        NounCase::Essive => ("nA", Strong),
        NounCase::Translative => ("ksi", Weak),
    };
    CaseTemplate { suffix, grade }
}

/// Third-person possessive suffix.
pub const POSSESSIVE_3: &str = "Vn";

/// The underlying form for `lemma` in `case`, before any rule runs.
pub fn underlying_form(lemma: &str, case: NounCase, possessive_3: bool) -> String {
    let template = case_template(case);
    let mut form = format!("{lemma}{}", template.suffix);
    if possessive_3 && !template.suffix.ends_with(POSSESSIVE_3) {
        form.push_str(POSSESSIVE_3);
    }
    form
}

/// The pipeline used to inflect a stem of `stem_len` characters.
///
/// Lemmas are citation forms and so already in the strong grade: strong
/// templates need no gradation stage, and weak templates grade the stem
/// only, never the suffix.
pub fn generation_pipeline(grade: Grade, stem_len: usize) -> Pipeline {
    let mut p = Pipeline::default();
    if grade == Grade::Weak {
        p.push(Stage::new("gradation", gradation_arrow_within(Grade::Weak, stem_len)));
    }
    for s in Pipeline::vowels_only().stages() {
        p.push(s.clone());
    }
    p
}

/// Inflects `lemma` for `case`, optionally with the third-person possessive.
pub fn generate(lemma: &str, case: NounCase, possessive_3: bool) -> Result<String> {
    let lemma = nfc(lemma);
    let last = lemma.chars().last().ok_or(Error::EmptyInput)?;
    if classify_vowel(last.to_lowercase().next().unwrap_or(last)) == VowelClass::NotVowel {
        return Err(Error::UnsupportedStem(lemma));
    }
    let template = case_template(case);
    generation_pipeline(template.grade, lemma.chars().count())
        .run(&underlying_form(&lemma, case, possessive_3))
}
