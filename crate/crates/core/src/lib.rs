//! Kernel, elaborator and normalizer for a two-level type theory.

pub mod corpus;
pub mod diagnostic;
pub mod driver;
pub mod normalizer;
pub mod parser;
pub mod pretty;
pub mod signature;
pub mod span;
pub mod syntax;
pub mod typechecker;
