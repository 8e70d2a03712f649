//! Text ingestion helpers.

use unicode_normalization::UnicodeNormalization;

/// Normalizes `word` to NFC so that letters such as `ä` and `ö` occupy a
/// single zipper cell.
pub fn nfc(word: &str) -> String {
    word.nfc().collect()
}
