//! CG-lite rules and their text syntax.
//!
//! ```text
//! # one rule per line
//! SELECT POS=num IF (+1 POS=noun)
//! SELECT teonsana IF (-1 BASEFORM=ei)
//! REMOVE laatusana IF (NOT -1 lukusana)
//! REMOVE POS=adj|adv
//! ```
//!
//! A test is `POS=tag` (or `POS=a|b` for a class of tags), `BASEFORM=form`,
//! `FEAT=feature`, or a bare tag name, which is read as `POS=`. Finnish tag
//! names are mapped through [`POS_ALIASES`].

use std::fmt;

use crate::error::{Error, Result};

use super::reading::Reading;

/// Finnish part-of-speech names accepted in rules, and the tags they stand
/// for.
pub const POS_ALIASES: [(&str, &str); 5] = [
    ("lukusana", "num"),
    ("nimisana", "noun"),
    ("teonsana", "verb"),
    ("laatusana", "adj"),
    ("seikkasana", "adv"),
];

pub fn resolve_pos_alias(tag: &str) -> &str {
    POS_ALIASES
        .iter()
        .find(|(alias, _)| alias.eq_ignore_ascii_case(tag))
        .map(|(_, t)| *t)
        .unwrap_or(tag)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Select,
    Remove,
}

/// A predicate over a single reading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Test {
    /// POS tag is one of these.
    Pos(Vec<String>),
    Baseform(String),
    Feature(String),
}

impl Test {
    pub fn pos(tag: &str) -> Test {
        Test::Pos(vec![resolve_pos_alias(tag).to_string()])
    }

    pub fn matches(&self, reading: &Reading) -> bool {
        match self {
            Test::Pos(tags) => tags.contains(&reading.pos),
            Test::Baseform(b) => *b == reading.baseform,
            Test::Feature(f) => reading.features.contains(f),
        }
    }
}

impl fmt::Display for Test {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Test::Pos(tags) => write!(f, "POS={}", tags.join("|")),
            Test::Baseform(b) => write!(f, "BASEFORM={b}"),
            Test::Feature(x) => write!(f, "FEAT={x}"),
        }
    }
}

/// A context condition: does some reading at `offset` from the focus pass
/// `test`? `negated` flips the answer, including for positions outside the
/// sentence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Condition {
    pub negated: bool,
    pub offset: isize,
    pub test: Test,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("NOT ")?;
        }
        if self.offset > 0 {
            write!(f, "+{} {}", self.offset, self.test)
        } else {
            write!(f, "{} {}", self.offset, self.test)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CgRule {
    pub action: Action,
    pub target: Test,
    pub condition: Option<Condition>,
}

impl CgRule {
    pub fn select(target: Test) -> Self {
        CgRule {
            action: Action::Select,
            target,
            condition: None,
        }
    }

    pub fn remove(target: Test) -> Self {
        CgRule {
            action: Action::Remove,
            target,
            condition: None,
        }
    }

    pub fn when(mut self, offset: isize, test: Test) -> Self {
        self.condition = Some(Condition {
            negated: false,
            offset,
            test,
        });
        self
    }

    pub fn unless(mut self, offset: isize, test: Test) -> Self {
        self.condition = Some(Condition {
            negated: true,
            offset,
            test,
        });
        self
    }
}

/// Prints the rule in the syntax [`parse_rules`] reads.
impl fmt::Display for CgRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let action = match self.action {
            Action::Select => "SELECT",
            Action::Remove => "REMOVE",
        };
        write!(f, "{action} {}", self.target)?;
        if let Some(c) = &self.condition {
            write!(f, " IF ({c})")?;
        }
        Ok(())
    }
}

/// Parses a rule file. Blank lines and `#` comments are skipped.
pub fn parse_rules(text: &str) -> Result<Vec<CgRule>> {
    let mut rules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        let line = line.strip_suffix(';').unwrap_or(line).trim();
        if line.is_empty() {
            continue;
        }
        rules.push(parse_rule(line).map_err(|message| Error::RuleSyntax {
            line: i + 1,
            message,
        })?);
    }
    Ok(rules)
}

/// Parses a single rule.
pub fn parse_rule(line: &str) -> std::result::Result<CgRule, String> {
    let spaced = line.replace('(', " ( ").replace(')', " ) ");
    let mut tokens = spaced.split_whitespace().peekable();

    let action = match tokens.next() {
        Some(t) if t.eq_ignore_ascii_case("SELECT") => Action::Select,
        Some(t) if t.eq_ignore_ascii_case("REMOVE") => Action::Remove,
        Some(t) => return Err(format!("unknown action {t:?}, expected SELECT or REMOVE")),
        None => return Err("empty rule".into()),
    };
    let target = parse_test(tokens.next().ok_or("missing target")?)?;

    let condition = match tokens.next() {
        None => None,
        Some(t) if t.eq_ignore_ascii_case("IF") => {
            expect(tokens.next(), "(")?;
            let mut next = tokens.next().ok_or("missing condition")?;
            let negated = next.eq_ignore_ascii_case("NOT");
            if negated {
                next = tokens.next().ok_or("missing offset after NOT")?;
            }
            let offset = parse_offset(next)?;
            let test = parse_test(tokens.next().ok_or("missing condition test")?)?;
            expect(tokens.next(), ")")?;
            Some(Condition {
                negated,
                offset,
                test,
            })
        }
        Some(t) => return Err(format!("unexpected {t:?}, expected IF")),
    };
    if let Some(extra) = tokens.next() {
        return Err(format!("unexpected trailing {extra:?}"));
    }
    Ok(CgRule {
        action,
        target,
        condition,
    })
}

fn expect(token: Option<&str>, want: &str) -> std::result::Result<(), String> {
    match token {
        Some(t) if t == want => Ok(()),
        Some(t) => Err(format!("expected {want:?}, found {t:?}")),
        None => Err(format!("expected {want:?}")),
    }
}

fn parse_offset(token: &str) -> std::result::Result<isize, String> {
    let digits = token.strip_prefix('+').unwrap_or(token);
    let valid = !digits.is_empty()
        && digits
            .strip_prefix('-')
            .unwrap_or(digits)
            .chars()
            .all(|c| c.is_ascii_digit());
    if !valid {
        return Err(format!("bad offset {token:?}, expected a signed integer like -1 or +1"));
    }
    digits
        .parse()
        .map_err(|_| format!("offset {token:?} is out of range"))
}

fn parse_test(token: &str) -> std::result::Result<Test, String> {
    let nonempty = |v: &str, what: &str| {
        if v.is_empty() {
            Err(format!("empty {what} in {token:?}"))
        } else {
            Ok(v.to_string())
        }
    };
    match token.split_once('=') {
        Some((key, value)) if key.eq_ignore_ascii_case("POS") => {
            let tags = value
                .split('|')
                .map(|t| nonempty(t, "tag").map(|t| resolve_pos_alias(&t).to_string()))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            Ok(Test::Pos(tags))
        }
        Some((key, value)) if key.eq_ignore_ascii_case("BASEFORM") => {
            Ok(Test::Baseform(nonempty(value, "baseform")?))
        }
        Some((key, value)) if key.eq_ignore_ascii_case("FEAT") => {
            Ok(Test::Feature(nonempty(value, "feature")?))
        }
        Some((key, _)) => Err(format!("unknown test keyword {key:?}")),
        None if token == "(" || token == ")" => Err(format!("unexpected {token:?}")),
        None => Ok(Test::pos(token)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_select_with_offset() {
        let r = parse_rule("SELECT POS=num IF (+1 POS=noun)").unwrap();
        assert_eq!(r, CgRule::select(Test::pos("num")).when(1, Test::pos("noun")));
    }

    #[test]
    fn parses_baseform_test() {
        let r = parse_rule("SELECT POS=verb IF (-1 BASEFORM=ei)").unwrap();
        assert_eq!(r, CgRule::select(Test::pos("verb")).when(-1, Test::Baseform("ei".into())));
    }

    #[test]
    fn parses_negated_condition() {
        let r = parse_rule("REMOVE POS=adj IF (NOT -1 POS=num)").unwrap();
        assert_eq!(r, CgRule::remove(Test::pos("adj")).unless(-1, Test::pos("num")));
    }

    #[test]
    fn finnish_aliases_run_verbatim() {
        assert_eq!(
            parse_rule("SELECT lukusana IF (+1 nimisana)").unwrap(),
            parse_rule("SELECT POS=num IF (+1 POS=noun)").unwrap()
        );
        assert_eq!(
            parse_rule("REMOVE laatusana IF (NOT -1 lukusana)").unwrap(),
            parse_rule("REMOVE POS=adj IF (NOT -1 POS=num)").unwrap()
        );
        assert_eq!(parse_rule("SELECT teonsana").unwrap().target, Test::pos("verb"));
        assert_eq!(parse_rule("SELECT seikkasana").unwrap().target, Test::pos("adv"));
    }

    #[test]
    fn pos_class_and_feature() {
        let r = parse_rule("REMOVE POS=adj|adv IF (0 FEAT=Sg)").unwrap();
        assert_eq!(r.target, Test::Pos(vec!["adj".into(), "adv".into()]));
        assert_eq!(r.condition.unwrap().test, Test::Feature("Sg".into()));
    }

    #[test]
    fn file_with_comments() {
        let text = "# header\n\nSELECT POS=num IF (+1 POS=noun) ; # trailing\nREMOVE POS=adj\n";
        let rules = parse_rules(text).unwrap();
        assert_eq!(rules.len(), 2);
        assert!(rules[1].condition.is_none());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "SELECT POS=num\nMAP POS=noun\n";
        match parse_rules(text) {
            Err(Error::RuleSyntax { line: 2, message }) => assert!(message.contains("MAP")),
            other => panic!("{other:?}"),
        }
        for bad in [
            "SELECT",
            "SELECT POS=num IF",
            "SELECT POS=num IF (+x POS=noun)",
            "SELECT POS=num IF (+1 POS=noun",
            "SELECT POS=num WHEN (+1 POS=noun)",
            "SELECT POS=num IF (+1 LEMMA=x)",
            "SELECT POS= IF (+1 POS=noun)",
            "SELECT POS=num IF (+1 POS=noun) extra",
        ] {
            assert!(matches!(parse_rules(bad), Err(Error::RuleSyntax { line: 1, .. })), "{bad}");
        }
    }

    #[test]
    fn display_reparses() {
        for text in [
            "SELECT POS=num IF (+1 POS=noun)",
            "REMOVE POS=adj IF (NOT -1 POS=num)",
            "SELECT POS=verb IF (-1 BASEFORM=ei)",
            "REMOVE POS=adj|adv IF (0 FEAT=Sg)",
            "SELECT POS=noun",
        ] {
            let r = parse_rule(text).unwrap();
            assert_eq!(r.to_string(), text);
            assert_eq!(parse_rule(&r.to_string()).unwrap(), r);
        }
    }
}
