//! Deferred deletion: the writer comonad over [`DeletionSet`] × [`Zipper`].
//!
//! Rules that shorten a word cannot be plain zipper arrows, since `extend`
//! produces exactly one output per position. Instead each arrow returns a
//! pair: the set of absolute positions it wants removed, and an output
//! element. [`WriterZipper::extend`] unions the deletion sets into the log
//! and rebuilds the zipper from the output elements. Nothing is removed until
//! [`WriterZipper::materialize`] runs, so positions stay valid for the whole
//! pipeline.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::zipper::Zipper;

/// A set of absolute, 0-based positions marked for deletion.
///
/// Forms a commutative, idempotent monoid under [`DeletionSet::union`] with
/// [`DeletionSet::empty`] as identity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DeletionSet(BTreeSet<usize>);

impl DeletionSet {
    pub fn empty() -> Self {
        DeletionSet(BTreeSet::new())
    }

    pub fn singleton(position: usize) -> Self {
        DeletionSet(BTreeSet::from([position]))
    }

    pub fn union(&self, other: &DeletionSet) -> DeletionSet {
        DeletionSet(self.0.union(&other.0).copied().collect())
    }

    /// In-place union.
    pub fn absorb(&mut self, other: &DeletionSet) {
        self.0.extend(other.0.iter().copied());
    }

    pub fn insert(&mut self, position: usize) -> bool {
        self.0.insert(position)
    }

    pub fn contains(&self, position: usize) -> bool {
        self.0.contains(&position)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Positions in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for DeletionSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        DeletionSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for DeletionSet {
    fn from(positions: [usize; N]) -> Self {
        positions.into_iter().collect()
    }
}

/// Comma-separated ascending positions, e.g. `0,5`. The empty set prints as
/// an empty string.
impl fmt::Display for DeletionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DeletionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A zipper paired with the deletions accumulated so far.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WriterZipper<T = char> {
    log: DeletionSet,
    zipper: Zipper<T>,
}

impl<T> WriterZipper<T> {
    /// Pairs `zipper` with an empty log.
    pub fn new(zipper: Zipper<T>) -> Self {
        WriterZipper {
            log: DeletionSet::empty(),
            zipper,
        }
    }

    /// Pairs `zipper` with `log`, rejecting positions past the end.
    pub fn with_log(log: DeletionSet, zipper: Zipper<T>) -> Result<Self> {
        check_positions(&log, zipper.len())?;
        Ok(WriterZipper { log, zipper })
    }

    pub(crate) fn with_log_unchecked(log: DeletionSet, zipper: Zipper<T>) -> Self {
        WriterZipper { log, zipper }
    }

    pub fn log(&self) -> &DeletionSet {
        &self.log
    }

    pub fn zipper(&self) -> &Zipper<T> {
        &self.zipper
    }

    pub fn into_parts(self) -> (DeletionSet, Zipper<T>) {
        (self.log, self.zipper)
    }

    /// The focus of the underlying zipper. The log plays no part.
    pub fn extract(&self) -> &T {
        self.zipper.extract()
    }

    pub fn position(&self) -> usize {
        self.zipper.position()
    }
}

impl<T: Clone> WriterZipper<T> {
    /// Runs `f` at every position, holding the incoming log fixed. The new
    /// log is the old log united with every deletion set `f` returned; the
    /// new zipper holds `f`'s output elements.
    pub fn extend_with<U, F>(&self, f: F) -> WriterZipper<U>
    where
        F: Fn(&WriterZipper<T>) -> (DeletionSet, U),
    {
        let (emitted, mut out) = self.extend_emitting(f);
        out.log.absorb(&self.log);
        out.log.absorb(&emitted);
        out
    }

    /// Runs `f` at every position and returns the union of the deletion
    /// sets it emitted, separately from the result zipper (whose log is
    /// left empty).
    pub(crate) fn extend_emitting<U, F>(&self, f: F) -> (DeletionSet, WriterZipper<U>)
    where
        F: Fn(&WriterZipper<T>) -> (DeletionSet, U),
    {
        let mut emitted = DeletionSet::empty();
        let mut outputs = Vec::with_capacity(self.zipper.len());
        let mut here = WriterZipper {
            log: self.log.clone(),
            zipper: self.zipper.rewound(),
        };
        loop {
            let (deleted, out) = f(&here);
            emitted.absorb(&deleted);
            outputs.push(out);
            if !here.zipper.step_right() {
                break;
            }
        }
        let zipper = Zipper::from_vec(outputs, self.zipper.position())
            .expect("extend preserves length");
        (
            emitted,
            WriterZipper {
                log: DeletionSet::empty(),
                zipper,
            },
        )
    }

    pub fn extend(&self, arrow: &WriterArrow<T>) -> WriterZipper<T> {
        self.extend_with(|w| arrow.apply(w))
    }

    /// Applies the accumulated deletions: the underlying sequence with every
    /// logged position removed, survivors in their original order.
    pub fn materialize(&self) -> Result<Vec<T>> {
        check_positions(&self.log, self.zipper.len())?;
        Ok(self
            .zipper
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.log.contains(*i))
            .map(|(_, x)| x.clone())
            .collect())
    }
}

impl WriterZipper<char> {
    pub fn materialize_word(&self) -> Result<String> {
        Ok(self.materialize()?.into_iter().collect())
    }
}

fn check_positions(log: &DeletionSet, len: usize) -> Result<()> {
    match log.max() {
        Some(position) if position >= len => Err(Error::DeletionOutOfRange { position, len }),
        _ => Ok(()),
    }
}

type ArrowFn<T> = dyn Fn(&WriterZipper<T>) -> (DeletionSet, T) + Send + Sync;

/// A coKleisli arrow of the writer comonad: reads a focused [`WriterZipper`]
/// and returns the positions it deletes together with an output element.
///
/// Arrows that delete return the *original* focus element as their output so
/// that later stages still see the full context.
pub struct WriterArrow<T = char> {
    f: Arc<ArrowFn<T>>,
}

impl<T> Clone for WriterArrow<T> {
    fn clone(&self) -> Self {
        WriterArrow { f: self.f.clone() }
    }
}

impl<T> WriterArrow<T> {
    pub fn apply(&self, w: &WriterZipper<T>) -> (DeletionSet, T) {
        (self.f)(w)
    }
}

impl<T> fmt::Debug for WriterArrow<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("WriterArrow")
    }
}

impl<T: Clone + 'static> WriterArrow<T> {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(&WriterZipper<T>) -> (DeletionSet, T) + Send + Sync + 'static,
    {
        WriterArrow { f: Arc::new(f) }
    }

    /// The identity arrow: no deletions, the focus unchanged.
    pub fn identity() -> Self {
        Self::new(|w| (DeletionSet::empty(), w.extract().clone()))
    }

    /// Lifts a non-deleting zipper arrow.
    pub fn lift_pure<F>(f: F) -> Self
    where
        F: Fn(&Zipper<T>) -> T + Send + Sync + 'static,
    {
        Self::new(move |w| (DeletionSet::empty(), f(w.zipper())))
    }

}
