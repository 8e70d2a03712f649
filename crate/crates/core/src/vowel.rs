//! Vowel harmony and possessive vowel copying.
//!
//! Suffixes are written with archiphonemes: `A`, `O` and `U` are resolved to
//! their back (`a o u`) or front (`ä ö y`) variant by the nearest
//! non-neutral vowel to the left, and `V` copies the nearest vowel to the
//! left. Both rules are non-deleting zipper arrows.

use crate::zipper::Zipper;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HarmonyClass {
    Back,
    Front,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VowelClass {
    Back,
    Front,
    Neutral,
    NotVowel,
}

/// Archiphonemes used in underlying suffix forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Archiphoneme {
    A,
    O,
    U,
    V,
}

impl Archiphoneme {
    pub fn from_char(c: char) -> Option<Archiphoneme> {
        match c {
            'A' => Some(Archiphoneme::A),
            'O' => Some(Archiphoneme::O),
            'U' => Some(Archiphoneme::U),
            'V' => Some(Archiphoneme::V),
            _ => None,
        }
    }

    /// The surface vowel for harmony class `class`. `V` is not resolved by
    /// harmony and yields `None`.
    pub fn resolve(self, class: HarmonyClass) -> Option<char> {
        use HarmonyClass::*;
        match (self, class) {
            (Archiphoneme::A, Back) => Some('a'),
            (Archiphoneme::A, Front) => Some('ä'),
            (Archiphoneme::O, Back) => Some('o'),
            (Archiphoneme::O, Front) => Some('ö'),
            (Archiphoneme::U, Back) => Some('u'),
            (Archiphoneme::U, Front) => Some('y'),
            (Archiphoneme::V, _) => None,
        }
    }
}

pub fn is_archiphoneme(c: char) -> bool {
    Archiphoneme::from_char(c).is_some()
}

/// Classifies a surface vowel. Archiphonemes are unresolved and classify as
/// [`VowelClass::NotVowel`].
pub fn classify_vowel(c: char) -> VowelClass {
    match c {
        'a' | 'o' | 'u' => VowelClass::Back,
        'ä' | 'ö' | 'y' | 'Ä' | 'Ö' | 'Y' => VowelClass::Front,
        'e' | 'i' | 'E' | 'I' => VowelClass::Neutral,
        _ => VowelClass::NotVowel,
    }
}

/// Harmony class seen from the focus: the class of the nearest back or
/// front vowel in the left context. Neutral vowels are skipped; with none
/// found the class is front.
pub fn detect_harmony(z: &Zipper<char>) -> HarmonyClass {
    z.lefts_nearest_first()
        .find_map(|&c| match classify_vowel(c) {
            VowelClass::Back => Some(HarmonyClass::Back),
            VowelClass::Front => Some(HarmonyClass::Front),
            _ => None,
        })
        .unwrap_or(HarmonyClass::Front)
}

/// Resolves a focused `A`, `O` or `U`; every other character passes through.
pub fn harmony_arrow(z: &Zipper<char>) -> char {
    let focus = *z.extract();
    match Archiphoneme::from_char(focus) {
        Some(a @ (Archiphoneme::A | Archiphoneme::O | Archiphoneme::U)) => a
            .resolve(detect_harmony(z))
            .expect("A, O and U always resolve"),
        _ => focus,
    }
}

fn is_copyable_vowel(c: char) -> bool {
    classify_vowel(c) != VowelClass::NotVowel || matches!(c, 'A' | 'O' | 'U')
}

/// Resolves a focused `V` to a copy of the nearest vowel on its left.
///
/// A `V` with no vowel anywhere to its left is returned unchanged and a
/// warning is logged.
pub fn possessive_arrow(z: &Zipper<char>) -> char {
    let focus = *z.extract();
    if focus != 'V' {
        return focus;
    }
    match z.lefts_nearest_first().copied().find(|&c| is_copyable_vowel(c)) {
        Some(v) => v,
        None => {
            log::warn!(
                "no vowel to the left of V at position {} in {:?}",
                z.position(),
                z.to_word()
            );
            focus
        }
    }
}

/// Applies harmony over a whole word.
pub fn harmonize(word: &str) -> String {
    apply_everywhere(word, harmony_arrow)
}

/// Applies possessive vowel copying over a whole word.
pub fn copy_possessive_vowels(word: &str) -> String {
    apply_everywhere(word, possessive_arrow)
}

fn apply_everywhere(word: &str, arrow: fn(&Zipper<char>) -> char) -> String {
    let word = crate::text::nfc(word);
    match Zipper::from_word(&word, 0) {
        Ok(z) => z.extend(arrow).to_word(),
        Err(_) => String::new(),
    }
}
