mod common;

use proptest::prelude::*;
use zipmorph::gradation::PATTERNS;
use zipmorph::pipeline::Pipeline;
use zipmorph::vowel::{copy_possessive_vowels, harmonize};
use zipmorph::{run_pipeline, strengthen, weaken, Grade};

fn lowercase_word() -> impl Strategy<Value = String> {
    "[aeiouyäöptkmnlrsvdgh]{1,14}"
}

fn underlying_word() -> impl Strategy<Value = String> {
    "[aeiouyäöptkmnlrsvdg]{1,8}(ssA|stA|llA|ltA|nA|ksi|A|n)?(Vn)?"
}

#[test]
fn oracle_reproduces_pattern_examples() {
    for p in &PATTERNS {
        assert_eq!(common::weaken(p.example.0), p.example.1, "row {}", p.kotus_index);
    }
}

#[test]
fn every_pattern_in_a_carrier_matches_the_sentinel_pipeline() {
    for p in &PATTERNS {
        let word = format!("{}ssA", p.example.0);
        let expected = common::sentinel_pipeline(&word);
        assert_eq!(run_pipeline(&word, Grade::Weak).unwrap(), expected, "{word}");
        let a = if p.example.1.contains(['ä', 'ö', 'y']) { 'ä' } else { 'a' };
        assert_eq!(expected, format!("{}ss{a}", p.example.1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn weaken_matches_oracle(word in lowercase_word()) {
        prop_assert_eq!(weaken(&word).unwrap(), common::weaken(&word));
    }

    #[test]
    fn strengthen_matches_oracle(word in lowercase_word()) {
        prop_assert_eq!(strengthen(&word).unwrap(), common::strengthen(&word));
    }

    #[test]
    fn harmony_matches_oracle(word in "[aeiouyäöstklnAOU]{1,14}") {
        prop_assert_eq!(harmonize(&word), common::harmonize(&word));
    }

    #[test]
    fn possessive_matches_oracle(word in "[aeiouyäöstklnV]{1,14}") {
        prop_assert_eq!(copy_possessive_vowels(&word), common::copy_vowels(&word));
    }

    #[test]
    fn writer_pipeline_matches_sentinel_pipeline(word in underlying_word()) {
        prop_assert_eq!(run_pipeline(&word, Grade::Weak).unwrap(), common::sentinel_pipeline(&word));
    }

    #[test]
    fn composed_pipeline_matches_stagewise_run(word in underlying_word(), strong in any::<bool>()) {
        let grade = if strong { Grade::Strong } else { Grade::Weak };
        let p = Pipeline::standard(grade);
        let z = zipmorph::Zipper::from_word(&word, 0).unwrap();
        let composed = zipmorph::WriterZipper::new(z).extend(&p.composed()).materialize_word().unwrap();
        prop_assert_eq!(composed, p.run(&word).unwrap());
    }
}
