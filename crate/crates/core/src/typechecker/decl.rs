use std::sync::Arc;

use super::{merge_strict_formers, Checker, Ctx, TcResult};
use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::pretty::pretty;
use crate::signature::GlobalEntry;
use crate::syntax::{Decl, DeclKind, FailScope, Name, Pragma, Term};

/// What a successfully checked declaration produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Declared(Name),
    Checked,
    /// `#infer`: the printed type.
    Inferred(String),
    /// `#normalize`: the printed normal form.
    Normalized(String),
    Converted,
    /// A `#fail` item failed as pinned.
    ExpectedFailure(ErrorCode),
}

enum Elaborated {
    Entry(GlobalEntry),
    Done(Outcome),
}

impl Checker {
    /// Checks one declaration, adding it to the signature on success.
    pub fn check_decl(&mut self, decl: &Decl) -> TcResult<Outcome> {
        self.budget.reset(self.budget_limit);
        let result = self.at(&decl.span, || self.elaborate(decl));
        if self.budget.exhausted() {
            return Err(Diagnostic::error(
                ErrorCode::BudgetExhausted,
                decl.span.clone(),
                "ran out of definition unfoldings while checking this declaration",
            ));
        }
        match result? {
            Elaborated::Entry(entry) => {
                let name = entry.name.clone();
                if self.sig.insert(entry).is_err() {
                    return Err(self.duplicate(&name));
                }
                Ok(Outcome::Declared(name))
            }
            Elaborated::Done(outcome) => Ok(outcome),
        }
    }

    fn duplicate(&self, name: &str) -> Diagnostic {
        self.error(ErrorCode::DuplicateName, format!("`{name}` is already defined"))
    }

    fn prepare(&self, term: &Term) -> Term {
        if self.mode.strong {
            merge_strict_formers(term)
        } else {
            term.clone()
        }
    }

    fn elaborate(&self, decl: &Decl) -> TcResult<Elaborated> {
        let ctx = Ctx::new();
        match &decl.kind {
            DeclKind::Definition { name, ty, body } => {
                if self.sig.contains(name) {
                    return Err(self.duplicate(name));
                }
                let body = self.prepare(body);
                let (ty_term, ty, sort, body) = match ty {
                    Some(ty) => {
                        let (ty_term, ty, sort) = self.infer_type(&ctx, &self.prepare(ty))?;
                        let body = self.check(&ctx, &body, &ty)?;
                        (ty_term, ty, sort, body)
                    }
                    None => {
                        let (body, ty) = self.infer(&ctx, &body)?;
                        let (ty_term, _, sort) = self.infer_type(&ctx, &self.quote(&ctx, &ty))?;
                        (ty_term, ty, sort, body)
                    }
                };
                let value = self.eval(&ctx, &body);
                Ok(Elaborated::Entry(GlobalEntry {
                    name: name.clone(),
                    ty_term: Arc::new(ty_term),
                    ty,
                    sort,
                    body: Some((Arc::new(body), value)),
                }))
            }
            DeclKind::Axiom { name, ty } => {
                if self.sig.contains(name) {
                    return Err(self.duplicate(name));
                }
                let (ty_term, ty, sort) = self.infer_type(&ctx, &self.prepare(ty))?;
                Ok(Elaborated::Entry(GlobalEntry {
                    name: name.clone(),
                    ty_term: Arc::new(ty_term),
                    ty,
                    sort,
                    body: None,
                }))
            }
            DeclKind::Pragma(pragma) => self.pragma(&ctx, pragma).map(Elaborated::Done),
        }
    }

    fn pragma(&self, ctx: &Ctx, pragma: &Pragma) -> TcResult<Outcome> {
        match pragma {
            Pragma::Check { term, ty } => {
                let (_, ty, _) = self.infer_type(ctx, &self.prepare(ty))?;
                self.check(ctx, &self.prepare(term), &ty)?;
                Ok(Outcome::Checked)
            }
            Pragma::Infer { term } => {
                let (_, ty) = self.infer(ctx, &self.prepare(term))?;
                Ok(Outcome::Inferred(self.show(ctx, &ty)))
            }
            Pragma::Normalize { term } => {
                let (term, _) = self.infer(ctx, &self.prepare(term))?;
                Ok(Outcome::Normalized(pretty(&self.normalize(ctx, &term))))
            }
            Pragma::Conv { lhs, rhs, ty } => {
                let (_, ty, _) = self.infer_type(ctx, &self.prepare(ty))?;
                let lhs = self.check(ctx, &self.prepare(lhs), &ty)?;
                let rhs = self.check(ctx, &self.prepare(rhs), &ty)?;
                let (l, r) = (self.eval(ctx, &lhs), self.eval(ctx, &rhs));
                if self.conv_in(ctx).conv(&l, &r, &ty) {
                    Ok(Outcome::Converted)
                } else {
                    Err(self
                        .error(ErrorCode::ConversionFailure, "the two sides are not definitionally equal")
                        .with_terms(self.show(ctx, &l), self.show(ctx, &r)))
                }
            }
            Pragma::Fail { expected, scope, item } => {
                let result = match item {
                    Ok(inner) => self.at(&inner.span, || self.elaborate(inner)).map(|_| ()),
                    Err(diagnostic) => Err((**diagnostic).clone()),
                };
                let must_fail = *scope == FailScope::Always || !self.mode.strong;
                match (result, must_fail) {
                    (Ok(()), false) => Ok(Outcome::Checked),
                    (Err(e), false) => Err(self.error(
                        ErrorCode::ExpectationFailed,
                        format!(
                            "expected this item to check in strong mode, but it failed with {}: {}",
                            e.code, e.message
                        ),
                    )),
                    (Ok(()), true) => Err(self.error(
                        ErrorCode::ExpectationFailed,
                        match expected {
                            Some(code) => format!("expected this item to fail with {code}, but it checked"),
                            None => "expected this item to fail, but it checked".to_owned(),
                        },
                    )),
                    (Err(e), true) => match expected {
                        Some(code) if *code != e.code => Err(self.error(
                            ErrorCode::ExpectationFailed,
                            format!("expected {code}, but the item failed with {}: {}", e.code, e.message),
                        )),
                        _ => Ok(Outcome::ExpectedFailure(e.code)),
                    },
                }
            }
        }
    }
}
