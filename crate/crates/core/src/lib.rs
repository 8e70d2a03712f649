//! Context-dependent rewrite rules as arrows over a zipper comonad.
//!
//! A rule reads a focused sequence and returns one output element; `extend`
//! runs it at every position. Finnish consonant gradation, vowel harmony and
//! possessive vowel copying are written this way over characters, and
//! constraint-grammar disambiguation over sets of readings.
//!
//! ```
//! use zipmorph::{run_pipeline, Grade};
//!
//! assert_eq!(run_pipeline("kampAstAVn", Grade::Weak).unwrap(), "kammastaan");
//! ```

pub mod bench;
pub mod cg;
pub mod error;
pub mod generator;
pub mod gradation;
pub mod laws;
pub mod pipeline;
pub mod text;
pub mod vowel;
pub mod writer;
pub mod zipper;

pub use error::{Error, Result};
pub use generator::{generate, NounCase};
pub use gradation::{strengthen, weaken, Grade};
pub use pipeline::{compose, run_pipeline, Pipeline};
pub use writer::{DeletionSet, WriterArrow, WriterZipper};
pub use zipper::Zipper;
