//! Randomized checks of the algebraic laws the rule engine relies on.
//!
//! Each law is a property over randomly generated zippers, arrows, deletion
//! sets, sentences and rules. [`run_all`] runs them with a fixed seed and
//! reports a shrunk counterexample for any law that fails. The generators in
//! [`strategy`] are public so test suites can reuse them.

use std::fmt;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

use crate::cg::{compose_rules, run_cg, Sentence};
use crate::pipeline::compose;
use crate::writer::{DeletionSet, WriterArrow, WriterZipper};
use crate::zipper::Zipper;

pub mod strategy {
    //! Generators for law checking.

    use proptest::collection::{btree_set, vec};
    use proptest::prelude::*;

    use crate::cg::{Action, CgRule, Condition, Reading, ReadingSet, Sentence, Test};
    use crate::writer::{DeletionSet, WriterArrow, WriterZipper};
    use crate::zipper::Zipper;

    /// Letters used for random words. Small, so that neighbors often repeat.
    pub const ALPHABET: [char; 8] = ['a', 'k', 'p', 't', 'i', 'ä', 's', 'n'];

    fn letter(n: usize) -> char {
        ALPHABET[n % ALPHABET.len()]
    }

    fn letter_index(c: char) -> usize {
        ALPHABET
            .iter()
            .position(|&x| x == c)
            .unwrap_or(c as usize)
    }

    /// Words of 1 to 20 letters.
    pub fn word() -> impl Strategy<Value = Vec<char>> {
        vec(prop::sample::select(ALPHABET.to_vec()), 1..=20)
    }

    /// A word together with a focus index inside it.
    pub fn zipper() -> impl Strategy<Value = Zipper<char>> {
        word().prop_flat_map(|w| {
            let n = w.len();
            (Just(w), 0..n).prop_map(|(w, i)| Zipper::from_vec(w, i).expect("index in range"))
        })
    }

    /// A describable zipper arrow `Zipper<char> -> char`.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub enum CharArrow {
        Extract,
        /// The element at `offset` from the focus, or `default`.
        Peek { offset: i8, default: char },
        /// Rotates the focus through the alphabet by `by`.
        Rotate { by: u8 },
        /// Letter chosen by how often `of` occurs to the left.
        CountLeft { of: char },
        /// Letter mixing the focus with the element at `offset`.
        Mix { offset: i8 },
        /// Letter chosen by the distance to the right end.
        FromRightEnd,
    }

    impl CharArrow {
        pub fn eval(&self, z: &Zipper<char>) -> char {
            let focus = *z.extract();
            match *self {
                CharArrow::Extract => focus,
                CharArrow::Peek { offset, default } => {
                    z.peek(offset as isize).copied().unwrap_or(default)
                }
                CharArrow::Rotate { by } => letter(letter_index(focus) + by as usize),
                CharArrow::CountLeft { of } => letter(z.left().iter().filter(|&&c| c == of).count()),
                CharArrow::Mix { offset } => {
                    let other = z.peek(offset as isize).map_or(3, |&c| letter_index(c));
                    letter(letter_index(focus) * 3 + other)
                }
                CharArrow::FromRightEnd => letter(z.right().len()),
            }
        }
    }

    pub fn char_arrow() -> impl Strategy<Value = CharArrow> {
        let ch = prop::sample::select(ALPHABET.to_vec());
        prop_oneof![
            Just(CharArrow::Extract),
            (-3i8..=3, ch.clone()).prop_map(|(offset, default)| CharArrow::Peek { offset, default }),
            (1u8..8).prop_map(|by| CharArrow::Rotate { by }),
            ch.prop_map(|of| CharArrow::CountLeft { of }),
            (-2i8..=2).prop_map(|offset| CharArrow::Mix { offset }),
            Just(CharArrow::FromRightEnd),
        ]
    }

    /// When a random writer arrow reports a deletion.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub enum DeletionRule {
        Never,
        /// Deletes the focus when it is this letter.
        FocusIs(char),
        /// Deletes the focus when it repeats its left neighbor.
        RepeatsLeft,
        /// Deletes the position `offset` away from the focus, when it exists
        /// and the focus is `trigger`.
        Remote { trigger: char, offset: i8 },
        /// Deletes the focus when the log already holds something.
        AfterEarlier,
    }

    impl DeletionRule {
        pub fn eval(&self, w: &WriterZipper<char>) -> DeletionSet {
            let z = w.zipper();
            let here = z.position();
            let focus = *z.extract();
            let hit = |b: bool| {
                if b {
                    DeletionSet::singleton(here)
                } else {
                    DeletionSet::empty()
                }
            };
            match *self {
                DeletionRule::Never => DeletionSet::empty(),
                DeletionRule::FocusIs(c) => hit(focus == c),
                DeletionRule::RepeatsLeft => hit(z.peek_left(1) == Some(&focus)),
                DeletionRule::Remote { trigger, offset } => {
                    let target = here as isize + offset as isize;
                    if focus == trigger && target >= 0 && (target as usize) < z.len() {
                        DeletionSet::singleton(target as usize)
                    } else {
                        DeletionSet::empty()
                    }
                }
                DeletionRule::AfterEarlier => hit(!w.log().is_empty()),
            }
        }
    }

    /// A describable writer arrow: a character arrow plus a deletion rule.
    #[derive(Debug, Clone, PartialEq, Eq)]
    pub struct RandomWriterArrow {
        pub chars: CharArrow,
        pub deletes: DeletionRule,
    }

    impl RandomWriterArrow {
        pub fn eval(&self, w: &WriterZipper<char>) -> (DeletionSet, char) {
            (self.deletes.eval(w), self.chars.eval(w.zipper()))
        }

        pub fn arrow(&self) -> WriterArrow<char> {
            let this = self.clone();
            WriterArrow::new(move |w| this.eval(w))
        }
    }

    pub fn deletion_rule() -> impl Strategy<Value = DeletionRule> {
        let ch = prop::sample::select(ALPHABET.to_vec());
        prop_oneof![
            Just(DeletionRule::Never),
            ch.clone().prop_map(DeletionRule::FocusIs),
            Just(DeletionRule::RepeatsLeft),
            (ch, -2i8..=2).prop_map(|(trigger, offset)| DeletionRule::Remote { trigger, offset }),
            Just(DeletionRule::AfterEarlier),
        ]
    }

    pub fn writer_arrow() -> impl Strategy<Value = RandomWriterArrow> {
        (char_arrow(), deletion_rule()).prop_map(|(chars, deletes)| RandomWriterArrow { chars, deletes })
    }

    /// Positions drawn from `0..32`.
    pub fn deletion_set() -> impl Strategy<Value = DeletionSet> {
        btree_set(0usize..32, 0..8).prop_map(|s| s.into_iter().collect())
    }

    /// A writer zipper whose log holds only valid positions.
    pub fn writer_zipper() -> impl Strategy<Value = WriterZipper<char>> {
        zipper().prop_flat_map(|z| {
            let n = z.len();
            btree_set(0..n, 0..=n.min(4)).prop_map(move |log| {
                WriterZipper::with_log(log.into_iter().collect(), z.clone()).expect("positions in range")
            })
        })
    }

    const POS: [&str; 5] = ["noun", "verb", "adj", "adv", "num"];
    const BASEFORMS: [&str; 4] = ["ei", "kuusi", "voi", "olla"];
    const FEATURES: [&str; 2] = ["Sg", "Pl"];

    pub fn reading() -> impl Strategy<Value = Reading> {
        (
            prop::sample::select(POS.to_vec()),
            prop::sample::select(BASEFORMS.to_vec()),
            prop::sample::subsequence(FEATURES.to_vec(), 0..=2),
        )
            .prop_map(|(pos, base, feats)| Reading::new(pos, base).with_features(feats))
    }

    /// Token with 1 to 4 distinct readings.
    pub fn reading_set() -> impl Strategy<Value = ReadingSet> {
        btree_set(reading(), 1..=4)
            .prop_map(|rs| ReadingSet::new("w", rs).expect("at least one reading"))
    }

    /// Sentences of 1 to 8 tokens.
    pub fn sentence() -> impl Strategy<Value = Sentence> {
        vec(reading_set(), 1..=8).prop_map(Sentence)
    }

    pub fn test() -> impl Strategy<Value = Test> {
        prop_oneof![
            prop::sample::select(POS.to_vec()).prop_map(Test::pos),
            prop::sample::subsequence(POS.to_vec(), 1..=2)
                .prop_map(|tags| Test::Pos(tags.into_iter().map(String::from).collect())),
            prop::sample::select(BASEFORMS.to_vec()).prop_map(|b| Test::Baseform(b.into())),
            prop::sample::select(FEATURES.to_vec()).prop_map(|f| Test::Feature(f.into())),
        ]
    }

    pub fn rule() -> impl Strategy<Value = CgRule> {
        let condition = (any::<bool>(), -2isize..=2, test())
            .prop_map(|(negated, offset, test)| Condition { negated, offset, test });
        (
            prop_oneof![Just(Action::Select), Just(Action::Remove)],
            test(),
            prop::option::of(condition),
        )
            .prop_map(|(action, target, condition)| CgRule { action, target, condition })
    }
}

use strategy::*;

/// Outcome of one law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub group: &'static str,
    pub name: &'static str,
    pub cases: u32,
    /// `None` when the law held; otherwise the failure with its shrunk input.
    pub counterexample: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for LawResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS  {:<8} {} ({} cases)", self.group, self.name, self.cases),
            Some(c) => write!(f, "FAIL  {:<8} {}\n{c}", self.group, self.name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport(pub Vec<LawResult>);

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.0.iter().all(LawResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawResult> {
        self.0.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.0 {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

type LawFn = fn(&mut TestRunner) -> Result<(), String>;

/// A named law.
#[derive(Clone, Copy)]
pub struct Law {
    pub group: &'static str,
    pub name: &'static str,
    check: LawFn,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Law({}/{})", self.group, self.name)
    }
}

impl Law {
    /// Runs this law for `cases` random inputs drawn from `seed`.
    pub fn run(&self, seed: u64, cases: u32) -> LawResult {
        let mut runner = runner(seed ^ fxhash(self.name), cases);
        LawResult {
            group: self.group,
            name: self.name,
            cases,
            counterexample: (self.check)(&mut runner).err(),
        }
    }
}

fn fxhash(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn runner(seed: u64, cases: u32) -> TestRunner {
    let mut bytes = [0u8; 32];
    for (i, chunk) in bytes.chunks_mut(8).enumerate() {
        chunk.copy_from_slice(&seed.rotate_left(i as u32 * 16).to_le_bytes());
    }
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

fn report<T: fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    match r {
        Ok(()) => Ok(()),
        Err(TestError::Fail(reason, input)) => {
            Err(format!("  {reason}\n  minimal failing input: {input:?}"))
        }
        Err(TestError::Abort(reason)) => Err(format!("  aborted: {reason}")),
    }
}

// Checks `prop` at every focus position of `z`.
fn at_every_focus<F>(z: &Zipper<char>, mut prop: F) -> Result<(), TestCaseError>
where
    F: FnMut(&Zipper<char>) -> Result<(), TestCaseError>,
{
    z.refocusings().try_for_each(|r| prop(&r))
}

fn zipper_l1(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&zipper(), |z| {
        at_every_focus(&z, |z| {
            prop_assert_eq!(z.extend(|w| *w.extract()), z.clone());
            Ok(())
        })
    }))
}

fn zipper_l2(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(zipper(), char_arrow()), |(z, f)| {
        at_every_focus(&z, |z| {
            prop_assert_eq!(*z.extend(|w| f.eval(w)).extract(), f.eval(z));
            Ok(())
        })
    }))
}

fn zipper_l3(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(zipper(), char_arrow(), char_arrow()), |(z, f, g)| {
        at_every_focus(&z, |z| {
            let lhs = z.extend(|w| f.eval(w)).extend(|w| g.eval(w));
            let rhs = z.extend(|w| g.eval(&w.extend(|v| f.eval(v))));
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
    }))
}

fn zipper_shape(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(zipper(), char_arrow()), |(z, f)| {
        at_every_focus(&z, |z| {
            let e = z.extend(|w| f.eval(w));
            prop_assert_eq!(e.len(), z.len());
            prop_assert_eq!(e.position(), z.position());
            prop_assert_eq!(Zipper::from_vec(z.to_vec(), z.position()).ok(), Some(z.clone()));
            if let Some(l) = z.move_left() {
                prop_assert_eq!(l.to_vec(), z.to_vec());
                prop_assert_eq!(l.move_right(), Some(z.clone()));
            }
            Ok(())
        })
    }))
}

fn monoid_identity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&deletion_set(), |a| {
        prop_assert_eq!(a.union(&DeletionSet::empty()), a.clone());
        prop_assert_eq!(DeletionSet::empty().union(&a), a);
        Ok(())
    }))
}

fn monoid_associativity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(deletion_set(), deletion_set(), deletion_set()), |(a, b, c)| {
        prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
        Ok(())
    }))
}

fn monoid_commutativity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(deletion_set(), deletion_set()), |(a, b)| {
        prop_assert_eq!(a.union(&b), b.union(&a));
        Ok(())
    }))
}

fn monoid_idempotence(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&deletion_set(), |a| {
        prop_assert_eq!(a.union(&a), a);
        Ok(())
    }))
}

fn writer_l1(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&writer_zipper(), |w| {
        prop_assert_eq!(w.extend(&WriterArrow::identity()), w);
        Ok(())
    }))
}

fn writer_l2(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(writer_zipper(), writer_arrow()), |(w, f)| {
        prop_assert_eq!(*w.extend(&f.arrow()).extract(), f.eval(&w).1);
        Ok(())
    }))
}

// Emitted deletions of one extend, computed by direct enumeration.
fn emitted(w: &WriterZipper<char>, f: &RandomWriterArrow) -> DeletionSet {
    w.zipper().refocusings().fold(DeletionSet::empty(), |acc, z| {
        let here = WriterZipper::with_log(w.log().clone(), z).expect("same positions");
        acc.union(&f.eval(&here).0)
    })
}

fn writer_l3_chars(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(writer_zipper(), writer_arrow(), writer_arrow()), |(w, f, g)| {
        let (f_arrow, g_arrow) = (f.arrow(), g.arrow());
        let lhs = w.extend(&f_arrow).extend(&g_arrow);
        let rhs = w.extend_with(|v| g_arrow.apply(&v.extend(&f_arrow)));
        prop_assert_eq!(lhs.zipper(), rhs.zipper());
        Ok(())
    }))
}

fn writer_log_associativity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(writer_zipper(), writer_arrow(), writer_arrow()), |(w, f, g)| {
        let after_f = w.extend(&f.arrow());
        let after_g = after_f.extend(&g.arrow());
        let d_f = emitted(&w, &f);
        let d_g = emitted(&after_f, &g);
        prop_assert_eq!(after_f.log(), &w.log().union(&d_f));
        prop_assert_eq!(w.log().union(&d_f).union(&d_g), w.log().union(&d_f.union(&d_g)));
        prop_assert_eq!(after_g.log(), &w.log().union(&d_f.union(&d_g)));
        Ok(())
    }))
}

fn writer_sequential_is_composed(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(writer_zipper(), writer_arrow(), writer_arrow()), |(w, f, g)| {
        let (f, g) = (f.arrow(), g.arrow());
        prop_assert_eq!(w.extend(&f).extend(&g), w.extend(&compose(&f, &g)));
        Ok(())
    }))
}

fn writer_compose_associativity(r: &mut TestRunner) -> Result<(), String> {
    let inputs = (writer_zipper(), writer_arrow(), writer_arrow(), writer_arrow());
    report(r.run(&inputs, |(w, f, g, h)| {
        let (f, g, h) = (f.arrow(), g.arrow(), h.arrow());
        let left = compose(&compose(&f, &g), &h);
        let right = compose(&f, &compose(&g, &h));
        prop_assert_eq!(left.apply(&w), right.apply(&w));
        Ok(())
    }))
}

fn writer_compose_identity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(writer_zipper(), writer_arrow()), |(w, f)| {
        let id = WriterArrow::identity();
        let f = f.arrow();
        prop_assert_eq!(compose(&id, &f).apply(&w), f.apply(&w));
        // the right identity reports all of f's deletions, so compare after
        // lifting with extend
        prop_assert_eq!(compose(&f, &id).apply(&w).1, f.apply(&w).1);
        prop_assert_eq!(w.extend(&compose(&f, &id)), w.extend(&f));
        Ok(())
    }))
}

fn cg_safety(r: &mut TestRunner) -> Result<(), String> {
    let rules = proptest::collection::vec(strategy::rule(), 1..=4);
    report(r.run(&(sentence(), rules), |(s, rules)| {
        let mut current = s.clone();
        for rule in &rules {
            current = run_cg(&current, std::slice::from_ref(rule)).expect("non-empty sentence");
            prop_assert_eq!(current.len(), s.len());
            for (after, before) in current.tokens().iter().zip(s.tokens()) {
                prop_assert!(after.readings().count() > 0);
                prop_assert!(after.is_subset(before));
            }
        }
        Ok(())
    }))
}

fn cg_sequential_is_composed(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(sentence(), strategy::rule(), strategy::rule()), |(s, r1, r2)| {
        let rules = [r1, r2];
        let sequential = run_cg(&s, &rules).expect("non-empty sentence");
        let z = Zipper::from_vec(s.0.clone(), 0).expect("non-empty sentence");
        let composed = Sentence(z.extend(compose_rules(&rules)).into_vec());
        prop_assert_eq!(sequential, composed);
        Ok(())
    }))
}

/// Every law, in reporting order.
pub const LAWS: [Law; 18] = [
    Law { group: "zipper", name: "L1' extend extract = id", check: zipper_l1 },
    Law { group: "zipper", name: "L2' extract . extend f = f", check: zipper_l2 },
    Law { group: "zipper", name: "L3' extend g . extend f = extend (g . extend f)", check: zipper_l3 },
    Law { group: "zipper", name: "extend keeps length and focus; navigation keeps content", check: zipper_shape },
    Law { group: "monoid", name: "deletion set identity", check: monoid_identity },
    Law { group: "monoid", name: "deletion set associativity", check: monoid_associativity },
    Law { group: "monoid", name: "deletion set commutativity", check: monoid_commutativity },
    Law { group: "monoid", name: "deletion set idempotence", check: monoid_idempotence },
    Law { group: "writer", name: "L1' extend extract = id", check: writer_l1 },
    Law { group: "writer", name: "L2' extract . extend f = snd . f", check: writer_l2 },
    Law { group: "writer", name: "L3' on the character component", check: writer_l3_chars },
    Law { group: "writer", name: "log associativity across chained extends", check: writer_log_associativity },
    Law { group: "writer", name: "extend g . extend f = extend (f >=> g)", check: writer_sequential_is_composed },
    Law { group: "writer", name: "(f >=> g) >=> h = f >=> (g >=> h)", check: writer_compose_associativity },
    Law { group: "writer", name: "extract is a unit for >=>", check: writer_compose_identity },
    Law { group: "cg", name: "reading sets never empty, never grow", check: cg_safety },
    Law { group: "cg", name: "sequential rules = composed rule", check: cg_sequential_is_composed },
    Law { group: "cg", name: "L3' over reading sets", check: cg_l3 },
];

fn cg_l3(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(sentence(), strategy::rule(), strategy::rule()), |(s, f, g)| {
        for i in 0..s.len() {
            let z = Zipper::from_vec(s.0.clone(), i).expect("index in range");
            let lhs = z.extend(|w| f.apply(w)).extend(|w| g.apply(w));
            let rhs = z.extend(|w| g.apply(&w.extend(|v| f.apply(v))));
            prop_assert_eq!(lhs, rhs);
        }
        Ok(())
    }))
}

/// Looks up laws by group name (`zipper`, `monoid`, `writer`, `cg`).
pub fn group(name: &str) -> Vec<Law> {
    LAWS.iter().copied().filter(|l| l.group == name).collect()
}

/// Runs every law with `cases` random inputs each.
pub fn run_all(seed: u64, cases: u32) -> LawReport {
    LawReport(LAWS.iter().map(|l| l.run(seed, cases)).collect())
}
