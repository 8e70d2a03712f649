//! Readings, reading sets, and the tab-separated readings format.
//!
//! One token per line: `surface TAB reading(;reading)*` where a reading is
//! `pos:baseform` optionally followed by `:feat,feat,...`. A blank line ends
//! a sentence.

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reading {
    pub baseform: String,
    pub pos: String,
    pub features: BTreeSet<String>,
}

impl Reading {
    pub fn new(pos: impl Into<String>, baseform: impl Into<String>) -> Self {
        Reading {
            baseform: baseform.into(),
            pos: pos.into(),
            features: BTreeSet::new(),
        }
    }

    pub fn with_features<I, S>(mut self, features: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.features.extend(features.into_iter().map(Into::into));
        self
    }
}

/// `pos:baseform[:feat,feat]`
impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.pos, self.baseform)?;
        if !self.features.is_empty() {
            let feats: Vec<&str> = self.features.iter().map(String::as_str).collect();
            write!(f, ":{}", feats.join(","))?;
        }
        Ok(())
    }
}

/// The candidate readings of one token. Never empty.
///
/// Readings keep their input order for output; equality ignores order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingSet {
    surface: String,
    readings: IndexSet<Reading>,
}

impl ReadingSet {
    pub fn new<I>(surface: impl Into<String>, readings: I) -> Result<Self>
    where
        I: IntoIterator<Item = Reading>,
    {
        let readings: IndexSet<Reading> = readings.into_iter().collect();
        if readings.is_empty() {
            return Err(Error::EmptyReadingSet);
        }
        Ok(ReadingSet {
            surface: surface.into(),
            readings,
        })
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn readings(&self) -> impl Iterator<Item = &Reading> {
        self.readings.iter()
    }

    pub fn len(&self) -> usize {
        self.readings.len()
    }

    /// Always false.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, reading: &Reading) -> bool {
        self.readings.contains(reading)
    }

    pub fn is_subset(&self, other: &ReadingSet) -> bool {
        self.readings.is_subset(&other.readings)
    }

    /// Keeps only the readings satisfying `keep`. When that would leave
    /// nothing, the set is returned unchanged.
    pub fn retain_nonempty<F: Fn(&Reading) -> bool>(&self, keep: F) -> ReadingSet {
        let kept: IndexSet<Reading> = self.readings.iter().filter(|r| keep(r)).cloned().collect();
        if kept.is_empty() {
            self.clone()
        } else {
            ReadingSet {
                surface: self.surface.clone(),
                readings: kept,
            }
        }
    }
}

/// `{pos:baseform;pos:baseform}`
impl fmt::Display for ReadingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        write_readings(f, self)?;
        f.write_str("}")
    }
}

fn write_readings(f: &mut fmt::Formatter<'_>, set: &ReadingSet) -> fmt::Result {
    for (i, r) in set.readings.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        write!(f, "{r}")?;
    }
    Ok(())
}

/// A sentence: an ordered sequence of reading sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence(pub Vec<ReadingSet>);

impl Sentence {
    pub fn tokens(&self) -> &[ReadingSet] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The token lines of the sentence, each terminated by a newline.
impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for token in &self.0 {
            write!(f, "{}\t", token.surface)?;
            write_readings(f, token)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Parses a readings file into sentences.
pub fn parse_readings(text: &str) -> Result<Vec<Sentence>> {
    let mut sentences = Vec::new();
    let mut current = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            if !current.is_empty() {
                sentences.push(Sentence(std::mem::take(&mut current)));
            }
            continue;
        }
        current.push(parse_token_line(line, line_no)?);
    }
    if !current.is_empty() {
        sentences.push(Sentence(current));
    }
    Ok(sentences)
}

/// Parses a readings file that holds exactly one sentence.
pub fn parse_sentence(text: &str) -> Result<Sentence> {
    let mut sentences = parse_readings(text)?;
    match sentences.len() {
        0 => Err(Error::EmptyInput),
        1 => Ok(sentences.pop().expect("one sentence")),
        n => Err(Error::ReadingSyntax {
            line: 0,
            message: format!("expected one sentence, found {n}"),
        }),
    }
}

/// Renders sentences back into the readings format.
pub fn format_readings(sentences: &[Sentence]) -> String {
    sentences
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn parse_token_line(line: &str, line_no: usize) -> Result<ReadingSet> {
    let err = |message: String| Error::ReadingSyntax {
        line: line_no,
        message,
    };
    let (surface, rest) = line
        .split_once('\t')
        .ok_or_else(|| err("expected `surface<TAB>readings`".into()))?;
    if surface.is_empty() {
        return Err(err("empty surface form".into()));
    }
    let readings = rest
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| parse_reading(r).map_err(&err))
        .collect::<Result<Vec<_>>>()?;
    if readings.is_empty() {
        return Err(err(format!("token {surface:?} has no readings")));
    }
    ReadingSet::new(surface, readings)
}

fn parse_reading(text: &str) -> std::result::Result<Reading, String> {
    let mut parts = text.splitn(3, ':');
    let pos = parts.next().unwrap_or("").trim();
    let baseform = parts.next().map(str::trim).unwrap_or("");
    if pos.is_empty() || baseform.is_empty() {
        return Err(format!("malformed reading {text:?}, expected pos:baseform"));
    }
    let features: Vec<&str> = match parts.next() {
        Some(f) => f.split(',').map(str::trim).filter(|f| !f.is_empty()).collect(),
        None => Vec::new(),
    };
    Ok(Reading::new(pos, baseform).with_features(features))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ambiguous_token() {
        let s = parse_sentence("kuusi\tnum:kuusi;noun:kuusi\n").unwrap();
        assert_eq!(s.len(), 1);
        let t = &s.tokens()[0];
        assert_eq!(t.surface(), "kuusi");
        assert_eq!(t.len(), 2);
        assert!(t.contains(&Reading::new("num", "kuusi")));
        assert!(t.contains(&Reading::new("noun", "kuusi")));
    }

    #[test]
    fn parses_features_and_sentences() {
        let text = "koiraa\tnoun:koira:Par,Sg\n\nei\tverb:ei:Neg\nvoi\tnoun:voi;verb:voida\n";
        let doc = parse_readings(text).unwrap();
        assert_eq!(doc.len(), 2);
        assert_eq!(doc[0].tokens()[0].len(), 1);
        let r = doc[0].tokens()[0].readings().next().unwrap();
        assert_eq!(r.features.iter().collect::<Vec<_>>(), ["Par", "Sg"]);
        assert_eq!(format_readings(&doc), text);
    }

    #[test]
    fn rejects_empty_reading_list() {
        assert_eq!(
            parse_readings("kuusi\tnum:kuusi\nvoi\t\n"),
            Err(Error::ReadingSyntax {
                line: 2,
                message: "token \"voi\" has no readings".into()
            })
        );
    }

    #[test]
    fn rejects_malformed_readings() {
        for bad in ["voi\tnoun", "voi\t:voi", "voi noun:voi", "\tnoun:voi"] {
            match parse_readings(bad) {
                Err(Error::ReadingSyntax { line: 1, .. }) => {}
                other => panic!("{bad:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn retain_never_empties() {
        let set = ReadingSet::new("voi", [Reading::new("noun", "voi")]).unwrap();
        assert_eq!(set.retain_nonempty(|_| false), set);
        assert_eq!(ReadingSet::new("x", []), Err(Error::EmptyReadingSet));
    }

    #[test]
    fn equality_ignores_order() {
        let a = ReadingSet::new("voi", [Reading::new("noun", "voi"), Reading::new("verb", "voida")]).unwrap();
        let b = ReadingSet::new("voi", [Reading::new("verb", "voida"), Reading::new("noun", "voi")]).unwrap();
        assert_eq!(a, b);
    }
}
