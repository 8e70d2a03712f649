use std::path::PathBuf;
use std::process::{Command, Output};

fn zipmorph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zipmorph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zipmorph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data/cg")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn grad() {
    assert_eq!(stdout(&["grad", "--grade", "weak", "kaappi"]), "kaapi\n");
    assert_eq!(stdout(&["grad", "--grade", "strong", "kamma"]), "kampa\n");
    assert_eq!(stdout(&["grad", "--grade", "weak", "xyz"]), "xyz\n");
}

#[test]
fn grad_trace_has_three_rows() {
    assert_eq!(
        stdout(&["grad", "--grade", "weak", "--trace", "kaappi"]),
        "input\tkaappi\t\ngradation\tkaappi\t4\nmaterialize\tkaapi\t\n"
    );
}

#[test]
fn empty_word_fails() {
    let out = zipmorph(&["grad", "--grade", "weak", ""]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty"));
}

#[test]
fn pipeline_and_harmony() {
    assert_eq!(stdout(&["pipeline", "--grade", "weak", "kampAstAVn"]), "kammastaan\n");
    assert_eq!(stdout(&["pipeline", "--grade", "weak", "talossA"]), "talossa\n");
    assert_eq!(stdout(&["pipeline", "--grade", "weak", "a"]), "a\n");
    assert_eq!(stdout(&["harmony", "pöydässA"]), "pöydässä\n");
    let traced = stdout(&["pipeline", "--grade", "weak", "--trace", "rantAssA"]);
    assert_eq!(traced.lines().count(), 5);
    assert!(traced.ends_with("materialize\trannassa\t\n"), "{traced}");
}

#[test]
fn input_is_normalized() {
    assert_eq!(stdout(&["harmony", "kyna\u{308}ssA"]), "kynässä\n");
}

#[test]
fn generate() {
    assert_eq!(stdout(&["generate", "kaappi", "--case", "genitive"]), "kaapin\n");
    assert_eq!(stdout(&["generate", "kampa", "--case", "elative", "--poss3"]), "kammastaan\n");
    assert_eq!(stdout(&["generate", "talo", "--case", "nominative"]), "talo\n");
    assert!(!zipmorph(&["generate", "talo", "--case", "vocative"]).status.success());
    assert!(!zipmorph(&["generate", "hevos", "--case", "gen"]).status.success());
}

#[test]
fn cg_selects_readings() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("r.cg");
    std::fs::write(&rules, "SELECT lukusana IF (+1 nimisana)\n").unwrap();
    let out = stdout(&["cg", rules.to_str().unwrap(), &fixture("kuusi_koiraa.tsv")]);
    assert_eq!(out, "kuusi\tnum:kuusi\nkoiraa\tnoun:koira:Par,Sg\n");

    std::fs::write(&rules, "SELECT teonsana IF (-1 BASEFORM=ei)\n").unwrap();
    let out = stdout(&["cg", rules.to_str().unwrap(), &fixture("ei_voi.tsv")]);
    assert_eq!(out, "ei\tverb:ei:Neg\nvoi\tverb:voida\n");
}

#[test]
fn cg_with_empty_rules_echoes_input() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("empty.cg");
    std::fs::write(&rules, "").unwrap();
    let input = fixture("sentence.tsv");
    let out = stdout(&["cg", rules.to_str().unwrap(), &input]);
    assert_eq!(out, std::fs::read_to_string(&input).unwrap());
}

#[test]
fn cg_trace_goes_to_stderr() {
    let out = zipmorph(&["cg", "--trace", &fixture("cascade.cg"), &fixture("cascade.tsv")]);
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 3);
    assert!(stderr.starts_with("rule 1 fired at token 2: {noun:x;verb:x;adj:x;adv:x} \u{2192} {noun:x;verb:x;adv:x}"));
    assert!(String::from_utf8(out.stdout).unwrap().contains("x\tverb:x\n"));
}

#[test]
fn cg_reports_syntax_errors_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let rules = dir.path().join("bad.cg");
    std::fs::write(&rules, "SELECT POS=num\nMAP x\n").unwrap();
    let out = zipmorph(&["cg", rules.to_str().unwrap(), &fixture("ei_voi.tsv")]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn laws_pass() {
    let out = stdout(&["laws", "--seed", "3", "--cases", "64"]);
    assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
}

#[test]
fn bench_with_one_iteration_prints_all_rows() {
    let out = stdout(&["bench", "--iterations", "1"]);
    for label in ["Gradation (avg/11)", "Harmony (avg/4)", "Possessive (avg/3)", "Full pipeline (avg/4)", "Single rule", "Full CG"] {
        assert!(out.contains(label), "{out}");
    }
    let row = out.lines().find(|l| l.contains("Harmony")).unwrap();
    let mean = row.split_whitespace().rev().nth(1).unwrap();
    assert_eq!(mean.split('.').nth(1).map(str::len), Some(2), "{row}");
}

#[test]
fn dump_patterns() {
    let out = stdout(&["dump-patterns"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "kotus_index\tstrong\tweak\ttype\texample");
    assert_eq!(lines[1], "1\tpp\tp\tquantitative\tkaappi\u{2192}kaapi");
    assert_eq!(lines[11], "11\tnk\tng\tqualitative-cluster\tkenkä\u{2192}kengä");
}
