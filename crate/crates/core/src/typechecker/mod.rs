//! Bidirectional elaboration with least-sort inference.

mod decl;
mod infer;

use std::cell::RefCell;
use std::sync::Arc;

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::normalizer::{Budget, Conv, Env, Machine, Val, Value};
use crate::pretty::pretty_print;
use crate::signature::Signature;
use crate::span::SourceSpan;
use crate::syntax::{Fragment, Hint, Name, Sort, Term};

pub use decl::Outcome;

/// Checking options that change which programs are accepted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mode {
    /// Identify the strict and fibrant natural numbers, empty types and
    /// (for fibrant summands) sums.
    pub strong: bool,
    /// Make all proofs of a strict equality definitionally equal.
    pub strict_proof_irrelevance: bool,
}

/// Local variables in scope, outermost first.
#[derive(Clone, Debug, Default)]
pub struct Ctx {
    pub names: Vec<Name>,
    pub types: Vec<Val>,
    pub env: Env,
}

impl Ctx {
    pub fn new() -> Ctx {
        Ctx::default()
    }

    pub fn depth(&self) -> usize {
        self.types.len()
    }

    /// Extends the context with a variable of type `ty`.
    pub fn bind(&self, name: &Hint, ty: Val) -> Ctx {
        let mut out = self.clone();
        out.names.push(name.0.clone());
        out.env = out.env.push(Value::var(self.depth()));
        out.types.push(ty);
        out
    }

    /// The value standing for the most recently bound variable.
    pub fn last_var(&self) -> Val {
        Value::var(self.depth() - 1)
    }
}

pub type TcResult<T> = Result<T, Diagnostic>;

pub struct Checker {
    pub sig: Signature,
    pub mode: Mode,
    budget: Budget,
    budget_limit: Option<u64>,
    span: RefCell<SourceSpan>,
}

impl Checker {
    pub fn new(mode: Mode) -> Checker {
        Checker::with_signature(Signature::new(), mode)
    }

    pub fn with_signature(sig: Signature, mode: Mode) -> Checker {
        Checker {
            sig,
            mode,
            budget: Budget::new(None),
            budget_limit: None,
            span: RefCell::new(SourceSpan::synthetic()),
        }
    }

    /// Limits the number of definition unfoldings per declaration.
    pub fn set_unfold_budget(&mut self, limit: Option<u64>) {
        self.budget_limit = limit;
        self.budget.reset(limit);
    }

    pub fn machine(&self) -> Machine<'_> {
        Machine::with_budget(&self.sig, &self.budget)
    }

    pub fn conv_in(&self, ctx: &Ctx) -> Conv<'_> {
        Conv::new(self.machine(), ctx.types.iter().cloned(), self.mode.strict_proof_irrelevance)
    }

    pub fn eval(&self, ctx: &Ctx, term: &Term) -> Val {
        self.machine().eval(&ctx.env, term)
    }

    pub fn quote(&self, ctx: &Ctx, value: &Val) -> Term {
        self.machine().quote(ctx.depth(), value)
    }

    /// β-ι normal form of `term` in `ctx`.
    pub fn normalize(&self, ctx: &Ctx, term: &Term) -> Term {
        self.quote(ctx, &self.eval(ctx, term))
    }

    /// Prints a value for a diagnostic.
    pub fn show(&self, ctx: &Ctx, value: &Val) -> String {
        pretty_print(&self.quote(ctx, value), &ctx.names)
    }

    pub fn show_term(&self, ctx: &Ctx, term: &Term) -> String {
        pretty_print(term, &ctx.names)
    }

    /// The least sort whose universe contains the type `term`.
    pub fn classify(&self, ctx: &Ctx, term: &Term) -> TcResult<Sort> {
        self.infer_type(ctx, term).map(|(_, _, sort)| sort)
    }

    fn error(&self, code: ErrorCode, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(code, self.span.borrow().clone(), message)
    }

    /// Runs `f` with `span` as the location for new diagnostics.
    fn at<T>(&self, span: &SourceSpan, f: impl FnOnce() -> T) -> T {
        let saved = self.span.replace(span.clone());
        let out = f();
        self.span.replace(saved);
        out
    }

    fn sort_of(fragment: Fragment, level: u32) -> Sort {
        Sort { fragment, level }
    }

    fn univ(sort: Sort) -> Val {
        Arc::new(Value::Univ(sort))
    }
}

/// Rewrites strict natural numbers and empty types to their fibrant
/// counterparts; strong mode treats them as the same type.
pub fn merge_strict_formers(term: &Term) -> Term {
    term.rewrite(&|t| match t {
        Term::Nat(_) => Term::Nat(Fragment::Fibrant),
        Term::Zero(_) => Term::Zero(Fragment::Fibrant),
        Term::Succ(_, n) => Term::Succ(Fragment::Fibrant, n),
        Term::NatElim { motive, base, step, target, .. } => {
            Term::NatElim { fragment: Fragment::Fibrant, motive, base, step, target }
        }
        Term::Empty(_) => Term::Empty(Fragment::Fibrant),
        Term::EmptyElim { motive, target, .. } => Term::EmptyElim { fragment: Fragment::Fibrant, motive, target },
        other => other,
    })
}
