//! Finnish consonant gradation.
//!
//! Each of the eleven alternations is a two-character window on the strong
//! side paired with one on the weak side. The arrow only ever rewrites the
//! second character of a window (the focus); the first is read-only left
//! context. Weakening matches strong-side windows and emits the weak-side
//! character, strengthening does the reverse.
//!
//! Two details decide correctness:
//!
//! * **Priority.** Geminates are tried before clusters, clusters before
//!   single consonants. The first matching window wins.
//! * **Suppression.** A character that *starts* a geminate or cluster window
//!   is left alone, even if a lower-priority single-consonant window would
//!   match it. Without this the first `p` of `kaappi` would become `v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::text::nfc;
use crate::vowel::is_archiphoneme;
use crate::writer::{DeletionSet, WriterArrow, WriterZipper};
use crate::zipper::Zipper;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grade {
    Strong,
    Weak,
}

impl Grade {
    pub fn opposite(self) -> Grade {
        match self {
            Grade::Strong => Grade::Weak,
            Grade::Weak => Grade::Strong,
        }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Grade::Strong => "strong",
            Grade::Weak => "weak",
        })
    }
}

/// First cell of a window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Head {
    Char(char),
    /// Matches any vowel.
    AnyVowel,
}

/// A two-character gradation window. `tail == None` marks a deleted
/// consonant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub head: Head,
    pub tail: Option<char>,
}

impl Window {
    const fn chars(head: char, tail: char) -> Window {
        Window {
            head: Head::Char(head),
            tail: Some(tail),
        }
    }

    const fn geminate_reduced(head: char) -> Window {
        Window {
            head: Head::Char(head),
            tail: None,
        }
    }

    const fn after_vowel(tail: Option<char>) -> Window {
        Window {
            head: Head::AnyVowel,
            tail,
        }
    }

    fn head_matches(&self, left: Option<char>) -> bool {
        match (self.head, left) {
            (_, None) => false,
            (Head::Char(h), Some(l)) => h == fold(l),
            (Head::AnyVowel, Some(l)) => is_window_vowel(l),
        }
    }
}

/// Renders the consonants of the window the way grammars list them:
/// `pp`, `mp`, `p`, and `∅` for a deleted consonant.
impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.head, self.tail) {
            (Head::Char(h), Some(t)) => write!(f, "{h}{t}"),
            (Head::Char(h), None) => write!(f, "{h}"),
            (Head::AnyVowel, Some(t)) => write!(f, "{t}"),
            (Head::AnyVowel, None) => f.write_str("\u{2205}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    /// Geminate reduction.
    Quantitative,
    /// Single consonant after a vowel.
    QualitativeSingle,
    /// Two-consonant cluster.
    QualitativeCluster,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::Quantitative => "quantitative",
            PatternKind::QualitativeSingle => "qualitative-single",
            PatternKind::QualitativeCluster => "qualitative-cluster",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradationPattern {
    /// Row number in the conventional KOTUS listing, 1 to 11.
    pub kotus_index: u8,
    /// Position in matching order; 0 is tried first.
    pub priority_rank: u8,
    pub strong: Window,
    pub weak: Window,
    pub kind: PatternKind,
    /// A strong-grade example word and its weak-grade form.
    pub example: (&'static str, &'static str),
}

impl GradationPattern {
    /// The window matched when producing `target`.
    pub fn source(&self, target: Grade) -> &Window {
        match target {
            Grade::Weak => &self.strong,
            Grade::Strong => &self.weak,
        }
    }

    /// The window emitted when producing `target`.
    pub fn target(&self, target: Grade) -> &Window {
        match target {
            Grade::Weak => &self.weak,
            Grade::Strong => &self.strong,
        }
    }

    /// Whether weakening removes a consonant.
    pub fn deletes(&self) -> bool {
        self.weak.tail.is_none()
    }
}

const fn pattern(
    kotus_index: u8,
    priority_rank: u8,
    strong: Window,
    weak: Window,
    kind: PatternKind,
    example: (&'static str, &'static str),
) -> GradationPattern {
    GradationPattern {
        kotus_index,
        priority_rank,
        strong,
        weak,
        kind,
        example,
    }
}

/// All eleven patterns in matching order: geminates, then clusters, then
/// single consonants.
pub const PATTERNS: [GradationPattern; 11] = {
    use PatternKind::*;
    [
        pattern(1, 0, Window::chars('p', 'p'), Window::geminate_reduced('p'), Quantitative, ("kaappi", "kaapi")),
        pattern(2, 1, Window::chars('t', 't'), Window::geminate_reduced('t'), Quantitative, ("matto", "mato")),
        pattern(3, 2, Window::chars('k', 'k'), Window::geminate_reduced('k'), Quantitative, ("kukka", "kuka")),
        pattern(7, 3, Window::chars('m', 'p'), Window::chars('m', 'm'), QualitativeCluster, ("kampa", "kamma")),
        pattern(8, 4, Window::chars('l', 't'), Window::chars('l', 'l'), QualitativeCluster, ("kulta", "kulla")),
        pattern(9, 5, Window::chars('n', 't'), Window::chars('n', 'n'), QualitativeCluster, ("ranta", "ranna")),
        pattern(10, 6, Window::chars('r', 't'), Window::chars('r', 'r'), QualitativeCluster, ("parta", "parra")),
        pattern(11, 7, Window::chars('n', 'k'), Window::chars('n', 'g'), QualitativeCluster, ("kenkä", "kengä")),
        pattern(4, 8, Window::after_vowel(Some('p')), Window::after_vowel(Some('v')), QualitativeSingle, ("tupa", "tuva")),
        pattern(5, 9, Window::after_vowel(Some('t')), Window::after_vowel(Some('d')), QualitativeSingle, ("katu", "kadu")),
        pattern(6, 10, Window::after_vowel(Some('k')), Window::after_vowel(None), QualitativeSingle, ("puku", "puu")),
    ]
};

/// The patterns in KOTUS row order (1 to 11).
pub fn patterns_by_kotus_index() -> Vec<&'static GradationPattern> {
    let mut rows: Vec<_> = PATTERNS.iter().collect();
    rows.sort_by_key(|p| p.kotus_index);
    rows
}

pub fn pattern_by_kotus_index(index: u8) -> Option<&'static GradationPattern> {
    PATTERNS.iter().find(|p| p.kotus_index == index)
}

/// Case folding used for window matching. Archiphonemes keep their case.
fn fold(c: char) -> char {
    if is_archiphoneme(c) {
        c
    } else {
        c.to_lowercase().next().unwrap_or(c)
    }
}

/// Vowels that satisfy the `AnyVowel` window head. Unresolved archiphonemes
/// count as vowels.
fn is_window_vowel(c: char) -> bool {
    is_archiphoneme(c) || matches!(fold(c), 'a' | 'e' | 'i' | 'o' | 'u' | 'y' | 'ä' | 'ö')
}

/// True when `focus` followed by `right` is the opening of a geminate or
/// cluster window on the side that producing `target` reads from.
pub fn is_pos0(focus: char, right: Option<char>, target: Grade) -> bool {
    let Some(right) = right else {
        return false;
    };
    let (focus, right) = (fold(focus), fold(right));
    PATTERNS.iter().any(|p| {
        let w = p.source(target);
        w.head == Head::Char(focus) && w.tail == Some(right)
    })
}

/// The highest-priority pattern whose source window is `(left, focus)`.
pub fn find_pattern(
    left: Option<char>,
    focus: char,
    target: Grade,
) -> Option<&'static GradationPattern> {
    let focus = fold(focus);
    PATTERNS.iter().find(|p| {
        let w = p.source(target);
        w.tail == Some(focus) && w.head_matches(left)
    })
}

/// What the gradation arrow does at one position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradationOutcome {
    Keep(char),
    Replace(char),
    /// The consonant is removed; carries the original character.
    Delete(char),
}

impl GradationOutcome {
    /// The character left in the zipper.
    pub fn char(self) -> char {
        match self {
            GradationOutcome::Keep(c) | GradationOutcome::Replace(c) | GradationOutcome::Delete(c) => c,
        }
    }
}

/// Gradation at the focus of `z`: suppression first, then the pattern
/// table, otherwise the focus is kept.
pub fn gradate_at(z: &Zipper<char>, target: Grade) -> GradationOutcome {
    let focus = *z.extract();
    let left = z.peek_left(1).copied();
    let right = z.peek_right(1).copied();
    if is_pos0(focus, right, target) {
        return GradationOutcome::Keep(focus);
    }
    match find_pattern(left, focus, target).map(|p| p.target(target).tail) {
        Some(Some(c)) => GradationOutcome::Replace(c),
        Some(None) => GradationOutcome::Delete(focus),
        None => GradationOutcome::Keep(focus),
    }
}

/// Gradation toward `target` as a writer arrow. Deletions are reported by
/// absolute position; the zipper keeps the original character.
pub fn gradation_arrow(target: Grade) -> WriterArrow {
    WriterArrow::new(move |w: &WriterZipper| gradation_step(w.zipper(), target))
}

/// Like [`gradation_arrow`], but positions at or past `limit` are left
/// untouched. Used to confine gradation to a stem when suffixes follow.
pub fn gradation_arrow_within(target: Grade, limit: usize) -> WriterArrow {
    WriterArrow::new(move |w: &WriterZipper| {
        let z = w.zipper();
        if z.position() >= limit {
            (DeletionSet::empty(), *z.extract())
        } else {
            gradation_step(z, target)
        }
    })
}

fn gradation_step(z: &Zipper<char>, target: Grade) -> (DeletionSet, char) {
    match gradate_at(z, target) {
        GradationOutcome::Delete(c) => (DeletionSet::singleton(z.position()), c),
        other => (DeletionSet::empty(), other.char()),
    }
}

/// Rewrites `word` into grade `target`.
///
/// Strengthening cannot undo the deletion patterns (the removed consonant
/// is not recoverable), so those four rows never fire in that direction.
pub fn gradate(word: &str, target: Grade) -> Result<String> {
    let word = nfc(word);
    let zipper = Zipper::from_word(&word, 0).map_err(|_| Error::EmptyInput)?;
    WriterZipper::new(zipper)
        .extend(&gradation_arrow(target))
        .materialize_word()
}

pub fn weaken(word: &str) -> Result<String> {
    gradate(word, Grade::Weak)
}

pub fn strengthen(word: &str) -> Result<String> {
    gradate(word, Grade::Strong)
}
