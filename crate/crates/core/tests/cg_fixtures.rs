use std::fs;
use std::path::PathBuf;

use zipmorph::cg::{format_readings, parse_readings, parse_rules, run_cg, run_cg_traced, Reading};

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/cg").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn only_reading(rules: &str, input: &str, token: usize) -> Reading {
    let rules = parse_rules(rules).unwrap();
    let sentence = &parse_readings(input).unwrap()[0];
    let out = run_cg(sentence, &rules).unwrap();
    let set = &out.tokens()[token];
    assert_eq!(set.len(), 1, "{set}");
    let reading = set.readings().next().unwrap().clone();
    reading
}

#[test]
fn numeral_before_noun() {
    let r = only_reading("SELECT lukusana IF (+1 nimisana)", &fixture("kuusi_koiraa.tsv"), 0);
    assert_eq!(r, Reading::new("num", "kuusi"));
}

#[test]
fn noun_before_verb() {
    let r = only_reading("SELECT nimisana IF (+1 teonsana)", &fixture("kuusi_kasvaa.tsv"), 0);
    assert_eq!(r, Reading::new("noun", "kuusi"));
}

#[test]
fn verb_after_negation() {
    let r = only_reading("SELECT teonsana IF (-1 BASEFORM=ei)", &fixture("ei_voi.tsv"), 1);
    assert_eq!(r, Reading::new("verb", "voida"));
}

#[test]
fn cascade_narrows_four_readings_to_one() {
    let rules = parse_rules(&fixture("cascade.cg")).unwrap();
    let sentence = &parse_readings(&fixture("cascade.tsv")).unwrap()[0];
    assert_eq!(sentence.tokens()[1].len(), 4);
    let mut sizes = Vec::new();
    run_cg_traced(sentence, &rules, |f| {
        if f.token == 2 {
            sizes.push(f.after.len())
        }
    })
    .unwrap();
    assert_eq!(sizes, [3, 2, 1]);
    let out = run_cg(sentence, &rules).unwrap();
    assert_eq!(out.tokens()[1].readings().next().unwrap(), &Reading::new("verb", "x"));
}

#[test]
fn bundled_grammar_runs_on_bundled_sentence() {
    let rules = parse_rules(&fixture("finnish.cg")).unwrap();
    let doc = parse_readings(&fixture("sentence.tsv")).unwrap();
    let out = run_cg(&doc[0], &rules).unwrap();
    let voi = &out.tokens()[2];
    assert_eq!(voi.readings().collect::<Vec<_>>(), [&Reading::new("verb", "voida")]);
    let kuusi = &out.tokens()[4];
    assert_eq!(kuusi.readings().collect::<Vec<_>>(), [&Reading::new("num", "kuusi")]);
}

#[test]
fn empty_rule_file_echoes_input() {
    let text = fixture("sentence.tsv");
    let doc = parse_readings(&text).unwrap();
    let out: Vec<_> = doc.iter().map(|s| run_cg(s, &parse_rules("# nothing\n").unwrap()).unwrap()).collect();
    assert_eq!(format_readings(&out), text);
}
