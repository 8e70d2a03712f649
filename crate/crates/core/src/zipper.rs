//! The list zipper comonad.
//!
//! A [`Zipper`] is a non-empty sequence with one distinguished element, the
//! *focus*. Everything to the left of the focus is kept nearest-neighbor-last
//! (reversed), everything to the right in natural order.
//!
//! The two comonad operations are [`Zipper::extract`], which reads the focus,
//! and [`Zipper::extend`], which runs a context-consuming function at every
//! position of the sequence and collects the results into a new zipper with
//! the same shape and the same focus position.

use std::fmt;

use crate::error::{Error, Result};

/// A focused, non-empty sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Zipper<T> {
    // nearest neighbor last
    left: Vec<T>,
    focus: T,
    right: Vec<T>,
}

impl<T> Zipper<T> {
    /// A zipper holding exactly one element.
    pub fn singleton(item: T) -> Self {
        Zipper {
            left: Vec::new(),
            focus: item,
            right: Vec::new(),
        }
    }

    /// Builds a zipper from its three parts. `left` is given nearest neighbor
    /// last, `right` in natural order.
    pub fn from_parts(left: Vec<T>, focus: T, right: Vec<T>) -> Self {
        Zipper { left, focus, right }
    }

    /// Splits a sequence at `focus_index`.
    pub fn from_vec(mut items: Vec<T>, focus_index: usize) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyInput);
        }
        if focus_index >= items.len() {
            return Err(Error::FocusOutOfRange {
                index: focus_index,
                len: items.len(),
            });
        }
        let right = items.split_off(focus_index + 1);
        let focus = items.pop().expect("focus index is in range");
        Ok(Zipper {
            left: items,
            focus,
            right,
        })
    }

    pub fn extract(&self) -> &T {
        &self.focus
    }

    /// Index of the focus in the underlying sequence.
    pub fn position(&self) -> usize {
        self.left.len()
    }

    pub fn len(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The left context, stored nearest neighbor last.
    pub fn left(&self) -> &[T] {
        &self.left
    }

    /// The right context in natural order.
    pub fn right(&self) -> &[T] {
        &self.right
    }

    /// The `k`-th neighbor to the left (`k = 1` is the immediate neighbor).
    pub fn peek_left(&self, k: usize) -> Option<&T> {
        if k == 0 {
            return Some(&self.focus);
        }
        self.left.len().checked_sub(k).map(|i| &self.left[i])
    }

    /// The `k`-th neighbor to the right (`k = 1` is the immediate neighbor).
    pub fn peek_right(&self, k: usize) -> Option<&T> {
        if k == 0 {
            return Some(&self.focus);
        }
        self.right.get(k - 1)
    }

    /// The element at `offset` relative to the focus, if it exists.
    pub fn peek(&self, offset: isize) -> Option<&T> {
        if offset < 0 {
            self.peek_left(offset.unsigned_abs())
        } else {
            self.peek_right(offset as usize)
        }
    }

    /// Iterates the left context starting from the immediate neighbor.
    pub fn lefts_nearest_first(&self) -> impl Iterator<Item = &T> {
        self.left.iter().rev()
    }

    /// Iterates the whole sequence in natural order.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.left
            .iter()
            .chain(std::iter::once(&self.focus))
            .chain(self.right.iter())
    }

    pub fn into_vec(self) -> Vec<T> {
        let mut out = self.left;
        out.push(self.focus);
        out.extend(self.right);
        out
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> Zipper<U> {
        Zipper {
            left: self.left.iter().map(&mut f).collect(),
            focus: f(&self.focus),
            right: self.right.iter().map(&mut f).collect(),
        }
    }
}

impl<T: Clone> Zipper<T> {
    pub fn to_vec(&self) -> Vec<T> {
        self.iter().cloned().collect()
    }

    /// Moves the focus one step left; `None` at the left boundary.
    pub fn move_left(&self) -> Option<Self> {
        let mut left = self.left.clone();
        let focus = left.pop()?;
        let mut right = Vec::with_capacity(self.right.len() + 1);
        right.push(self.focus.clone());
        right.extend(self.right.iter().cloned());
        Some(Zipper { left, focus, right })
    }

    /// Moves the focus one step right; `None` at the right boundary.
    pub fn move_right(&self) -> Option<Self> {
        let (focus, rest) = self.right.split_first()?;
        let mut left = self.left.clone();
        left.push(self.focus.clone());
        Some(Zipper {
            left,
            focus: focus.clone(),
            right: rest.to_vec(),
        })
    }

    /// The same sequence focused at absolute index `index`.
    pub fn focus_at(&self, index: usize) -> Option<Self> {
        if index >= self.len() {
            return None;
        }
        Some(Self::split_at(&self.to_vec(), index))
    }

    /// Every refocusing of this zipper, ordered by absolute index.
    pub fn refocusings(&self) -> Refocusings<T> {
        Refocusings {
            items: self.to_vec(),
            next: 0,
        }
    }

    /// Applies `f` at every position. The element at index `i` of the result
    /// is `f` applied to this sequence focused at `i`; the result keeps this
    /// zipper's focus position.
    pub fn extend<U, F>(&self, f: F) -> Zipper<U>
    where
        F: Fn(&Zipper<T>) -> U,
    {
        let mut outputs = Vec::with_capacity(self.len());
        self.walk(|z| outputs.push(f(z)));
        Zipper::from_vec(outputs, self.position()).expect("extend preserves length")
    }

    /// Calls `f` on every refocusing in index order, moving one cursor along
    /// the sequence instead of building each zipper afresh.
    pub(crate) fn walk<F: FnMut(&Zipper<T>)>(&self, mut f: F) {
        let mut cursor = self.rewound();
        loop {
            f(&cursor);
            if !cursor.step_right() {
                break;
            }
        }
    }

    /// The same sequence focused at index 0.
    pub(crate) fn rewound(&self) -> Zipper<T> {
        Self::split_at(&self.to_vec(), 0)
    }
}

impl<T> Zipper<T> {
    /// Moves the focus right in place; false at the right boundary.
    pub(crate) fn step_right(&mut self) -> bool {
        if self.right.is_empty() {
            return false;
        }
        let next = self.right.remove(0);
        self.left.push(std::mem::replace(&mut self.focus, next));
        true
    }
}

impl<T: Clone> Zipper<T> {
    fn split_at(items: &[T], index: usize) -> Self {
        Zipper {
            left: items[..index].to_vec(),
            focus: items[index].clone(),
            right: items[index + 1..].to_vec(),
        }
    }
}

impl Zipper<char> {
    /// Builds a character zipper over `word`, focused at `focus_index`.
    /// The word is used as given; see [`crate::text::nfc`] for normalization.
    pub fn from_word(word: &str, focus_index: usize) -> Result<Self> {
        Self::from_vec(word.chars().collect(), focus_index)
    }

    pub fn to_word(&self) -> String {
        self.iter().collect()
    }
}

impl<T: fmt::Debug> fmt::Debug for Zipper<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Zipper")
            .field(&self.left)
            .field(&self.focus)
            .field(&self.right)
            .finish()
    }
}

/// Iterator over all refocusings of a zipper, see [`Zipper::refocusings`].
pub struct Refocusings<T> {
    items: Vec<T>,
    next: usize,
}

impl<T: Clone> Iterator for Refocusings<T> {
    type Item = Zipper<T>;

    fn next(&mut self) -> Option<Zipper<T>> {
        if self.next >= self.items.len() {
            return None;
        }
        let z = Zipper::split_at(&self.items, self.next);
        self.next += 1;
        Some(z)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.items.len() - self.next;
        (n, Some(n))
    }
}

impl<T: Clone> ExactSizeIterator for Refocusings<T> {}
