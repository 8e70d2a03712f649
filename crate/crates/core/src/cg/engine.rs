use std::fmt;

use crate::error::{Error, Result};
use crate::zipper::Zipper;

use super::reading::{ReadingSet, Sentence};
use super::rule::{Action, CgRule, Condition};

/// Evaluates `condition` from the focus of `z`. A position outside the
/// sentence counts as "no reading matches" before negation.
pub fn eval_condition(z: &Zipper<ReadingSet>, condition: &Condition) -> bool {
    let found = z
        .peek(condition.offset)
        .is_some_and(|set| set.readings().any(|r| condition.test.matches(r)));
    found != condition.negated
}

/// The rule as a coKleisli arrow: the focus reading set after the rule.
///
/// SELECT keeps the matching readings if there are any; REMOVE drops them
/// unless that would drop everything. The result is never empty.
pub fn apply_rule(z: &Zipper<ReadingSet>, rule: &CgRule) -> ReadingSet {
    let focus = z.extract();
    if let Some(c) = &rule.condition {
        if !eval_condition(z, c) {
            return focus.clone();
        }
    }
    match rule.action {
        Action::Select => focus.retain_nonempty(|r| rule.target.matches(r)),
        Action::Remove => focus.retain_nonempty(|r| !rule.target.matches(r)),
    }
}

impl CgRule {
    pub fn apply(&self, z: &Zipper<ReadingSet>) -> ReadingSet {
        apply_rule(z, self)
    }
}

/// Applies each rule in order with one `extend` over the sentence.
pub fn run_cg(sentence: &Sentence, rules: &[CgRule]) -> Result<Sentence> {
    run_cg_traced(sentence, rules, |_| {})
}

/// A reading set changed by a rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Firing {
    /// 1-based rule number.
    pub rule: usize,
    /// 1-based token number.
    pub token: usize,
    pub before: ReadingSet,
    pub after: ReadingSet,
}

impl fmt::Display for Firing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rule {} fired at token {}: {} \u{2192} {}",
            self.rule, self.token, self.before, self.after
        )
    }
}

/// Like [`run_cg`], reporting every reading set a rule changed.
pub fn run_cg_traced<F>(sentence: &Sentence, rules: &[CgRule], mut on_fire: F) -> Result<Sentence>
where
    F: FnMut(Firing),
{
    let mut z = Zipper::from_vec(sentence.0.clone(), 0).map_err(|_| Error::EmptyInput)?;
    for (n, rule) in rules.iter().enumerate() {
        let next = z.extend(|w| rule.apply(w));
        for (m, (before, after)) in z.iter().zip(next.iter()).enumerate() {
            if before != after {
                on_fire(Firing {
                    rule: n + 1,
                    token: m + 1,
                    before: before.clone(),
                    after: after.clone(),
                });
            }
        }
        z = next;
    }
    Ok(Sentence(z.into_vec()))
}

/// CoKleisli composition of rules: `rules[0] ≫= rules[1] ≫= ...`. Extending
/// once with the composite equals running the rules one `extend` at a time.
pub fn compose_rules(rules: &[CgRule]) -> impl Fn(&Zipper<ReadingSet>) -> ReadingSet + '_ {
    move |z| compose_from(z, rules)
}

fn compose_from(z: &Zipper<ReadingSet>, rules: &[CgRule]) -> ReadingSet {
    match rules {
        [] => z.extract().clone(),
        [last] => last.apply(z),
        [first, rest @ ..] => compose_from(&z.extend(|w| first.apply(w)), rest),
    }
}
