//! Reference implementations used as test oracles. They work on plain
//! strings and share no code with the library.

#![allow(dead_code)]

const VOWELS: &str = "aeiouyäöAOUV";

fn is_vowel(c: char) -> bool {
    VOWELS.contains(c)
}

/// Two-letter strong windows, most specific first, with the replacement for
/// the second letter (`None` deletes it).
const WEAKENING: [(&str, Option<char>); 8] = [
    ("pp", None),
    ("tt", None),
    ("kk", None),
    ("mp", Some('m')),
    ("lt", Some('l')),
    ("nt", Some('n')),
    ("rt", Some('r')),
    ("nk", Some('g')),
];
const WEAKENING_AFTER_VOWEL: [(char, Option<char>); 3] = [('p', Some('v')), ('t', Some('d')), ('k', None)];

const STRENGTHENING: [(&str, char); 5] = [("mm", 'p'), ("ll", 't'), ("nn", 't'), ("rr", 't'), ("ng", 'k')];
const STRENGTHENING_AFTER_VOWEL: [(char, char); 2] = [('v', 'p'), ('d', 't')];

/// Rewrites a lowercase word to the weak grade, all positions at once.
pub fn weaken(word: &str) -> String {
    drop_sentinels(&weaken_with_sentinel(word))
}

/// Rewrites a lowercase word to the strong grade, all positions at once.
pub fn strengthen(word: &str) -> String {
    let w: Vec<char> = word.chars().collect();
    let opens = |i: usize| {
        i + 1 < w.len()
            && STRENGTHENING.iter().any(|(pair, _)| pair.starts_with(w[i]) && pair.ends_with(w[i + 1]))
    };
    let mut out = String::new();
    for i in 0..w.len() {
        if i == 0 || opens(i) {
            out.push(w[i]);
            continue;
        }
        let pair: String = [w[i - 1], w[i]].iter().collect();
        let rewrite = STRENGTHENING.iter().find(|(p, _)| *p == pair).map(|(_, r)| *r).or_else(|| {
            is_vowel(w[i - 1])
                .then(|| STRENGTHENING_AFTER_VOWEL.iter().find(|(c, _)| *c == w[i]).map(|(_, r)| *r))
                .flatten()
        });
        out.push(rewrite.unwrap_or(w[i]));
    }
    out
}

/// Resolves `A`, `O`, `U` by the last back or front vowel before them.
pub fn harmonize(word: &str) -> String {
    let mut out = String::new();
    let mut back = false;
    for c in word.chars() {
        let resolved = match (c, back) {
            ('A', true) => 'a',
            ('A', false) => 'ä',
            ('O', true) => 'o',
            ('O', false) => 'ö',
            ('U', true) => 'u',
            ('U', false) => 'y',
            _ => c,
        };
        match c {
            'a' | 'o' | 'u' => back = true,
            'ä' | 'ö' | 'y' => back = false,
            _ => {}
        }
        out.push(resolved);
    }
    out
}

/// Replaces each `V` with the last vowel before it.
pub fn copy_vowels(word: &str) -> String {
    let mut out = String::new();
    let mut last = None;
    for c in word.chars() {
        let resolved = if c == 'V' { last.unwrap_or('V') } else { c };
        if "aeiouyäöAOU".contains(c) {
            last = Some(c);
        }
        out.push(resolved);
    }
    out
}

/// Marks deleted letters instead of removing them.
pub const SENTINEL: char = '\u{0}';

/// Weakening that writes [`SENTINEL`] where a letter is deleted, keeping
/// one output letter per input letter.
pub fn weaken_with_sentinel(word: &str) -> String {
    let w: Vec<char> = word.chars().collect();
    let opens = |i: usize| {
        i + 1 < w.len() && WEAKENING.iter().any(|(pair, _)| pair.starts_with(w[i]) && pair.ends_with(w[i + 1]))
    };
    (0..w.len())
        .map(|i| {
            if i == 0 || opens(i) {
                return w[i];
            }
            let pair: String = [w[i - 1], w[i]].iter().collect();
            let rewrite = WEAKENING.iter().find(|(p, _)| *p == pair).map(|(_, r)| *r).or_else(|| {
                is_vowel(w[i - 1])
                    .then(|| WEAKENING_AFTER_VOWEL.iter().find(|(c, _)| *c == w[i]).map(|(_, r)| *r))
                    .flatten()
            });
            match rewrite {
                Some(Some(c)) => c,
                Some(None) => SENTINEL,
                None => w[i],
            }
        })
        .collect()
}

pub fn drop_sentinels(word: &str) -> String {
    word.chars().filter(|&c| c != SENTINEL).collect()
}

/// The weak pipeline built from eager stages: each stage runs over the
/// whole word and deleted letters are filtered out before the next one.
pub fn sentinel_pipeline(word: &str) -> String {
    let graded = drop_sentinels(&weaken_with_sentinel(word));
    copy_vowels(&harmonize(&graded))
}
