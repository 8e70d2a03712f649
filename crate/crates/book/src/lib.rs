//! Compiles the guide in `book/src` so `cargo test --doc` runs its code
//! blocks. One module per chapter, so a failure names its chapter.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}
#[doc = include_str!("../../../book/src/zipper.md")]
pub mod zipper {}
#[doc = include_str!("../../../book/src/writer.md")]
pub mod writer {}
#[doc = include_str!("../../../book/src/gradation.md")]
pub mod gradation {}
#[doc = include_str!("../../../book/src/harmony.md")]
pub mod harmony {}
#[doc = include_str!("../../../book/src/pipeline.md")]
pub mod pipeline {}
#[doc = include_str!("../../../book/src/generator.md")]
pub mod generator {}
#[doc = include_str!("../../../book/src/cg.md")]
pub mod cg {}
#[doc = include_str!("../../../book/src/laws.md")]
pub mod laws {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
