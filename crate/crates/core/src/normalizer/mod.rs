//! Normalization by evaluation and conversion checking.

mod conv;
mod eval;
mod quote;
mod value;

pub use conv::Conv;
pub use eval::{Budget, Machine};
pub use value::{Closure, Elim, Env, Head, Val, Value};
