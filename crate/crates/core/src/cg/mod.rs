//! Sentence-level disambiguation with CG-lite rules.
//!
//! The zipper's elements are [`ReadingSet`]s instead of characters, and each
//! [`CgRule`] is an arrow from a focused sentence to the new reading set at
//! the focus. Rules never remove the last reading of a token.

mod engine;
mod reading;
mod rule;

pub use engine::{apply_rule, compose_rules, eval_condition, run_cg, run_cg_traced, Firing};
pub use reading::{format_readings, parse_readings, parse_sentence, Reading, ReadingSet, Sentence};
pub use rule::{parse_rule, parse_rules, resolve_pos_alias, Action, CgRule, Condition, Test, POS_ALIASES};
