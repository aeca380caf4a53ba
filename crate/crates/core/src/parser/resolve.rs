//! Name resolution: named surface syntax to de Bruijn core terms.

use std::sync::Arc;

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::parser::surface::*;
use crate::syntax::{Decl, DeclKind, Hint, Pragma, Term, TermRef};

/// Local names, innermost last, plus a test for global constants.
pub struct Scope<'g> {
    locals: Vec<String>,
    is_global: &'g dyn Fn(&str) -> bool,
}

impl<'g> Scope<'g> {
    pub fn new(locals: Vec<String>, is_global: &'g dyn Fn(&str) -> bool) -> Scope<'g> {
        Scope { locals, is_global }
    }

    fn with_local<T>(&mut self, name: &str, f: impl FnOnce(&mut Self) -> T) -> T {
        self.locals.push(name.to_owned());
        let out = f(self);
        self.locals.pop();
        out
    }

    fn lookup(&self, name: &str) -> Option<Term> {
        if name != "_" {
            if let Some(pos) = self.locals.iter().rposition(|local| local == name) {
                return Some(Term::Var(self.locals.len() - 1 - pos));
            }
        }
        (self.is_global)(name).then(|| Term::Const(Arc::from(name)))
    }

    pub fn term(&mut self, expr: &Expr) -> Result<Term, Diagnostic> {
        let term = self.term_inner(expr)?;
        Ok(Term::Loc(expr.span.clone(), Arc::new(term)))
    }

    fn sub(&mut self, expr: &Expr) -> Result<TermRef, Diagnostic> {
        self.term(expr).map(Arc::new)
    }

    fn under(&mut self, name: &str, expr: &Expr) -> Result<TermRef, Diagnostic> {
        self.with_local(name, |scope| scope.sub(expr))
    }

    fn term_inner(&mut self, expr: &Expr) -> Result<Term, Diagnostic> {
        Ok(match &expr.kind {
            ExprKind::Var(name) => self.lookup(name).ok_or_else(|| {
                Diagnostic::error(ErrorCode::UnboundVariable, expr.span.clone(), format!("unbound identifier `{name}`"))
            })?,
            ExprKind::Univ(sort) => Term::Univ(*sort),
            ExprKind::Lit(lit) => match *lit {
                Lit::Nat(fr) => Term::Nat(fr),
                Lit::Empty(fr) => Term::Empty(fr),
                Lit::Unit => Term::Unit,
                Lit::Star => Term::Star,
                Lit::Refl(fr) => Term::Refl(fr),
                Lit::Numeral(fr, n) => Term::numeral(fr, n),
            },
            ExprKind::Prim(prim, args) => {
                let args = args.iter().map(|a| self.sub(a)).collect::<Result<Vec<_>, _>>()?;
                prim_term(*prim, args)
            }
            ExprKind::App(f, a) => Term::App(self.sub(f)?, self.sub(a)?),
            ExprKind::Lam(name, ann, body) => {
                let ann = ann.as_ref().map(|a| self.sub(a)).transpose()?;
                Term::Lam(Hint::new(name), ann, self.under(name, body)?)
            }
            ExprKind::Pi(name, dom, cod) => Term::Pi(Hint::new(name), self.sub(dom)?, self.under(name, cod)?),
            ExprKind::Sigma(name, fst, snd) => Term::Sigma(Hint::new(name), self.sub(fst)?, self.under(name, snd)?),
            ExprKind::Sum(fr, a, b) => Term::Sum(*fr, self.sub(a)?, self.sub(b)?),
            ExprKind::Eq(fr, a, b) => Term::Id(*fr, None, self.sub(a)?, self.sub(b)?),
            ExprKind::Pair(a, b) => Term::Pair(self.sub(a)?, self.sub(b)?),
            ExprKind::Ann(t, ty) => Term::Ann(self.sub(t)?, self.sub(ty)?),
        })
    }

    /// `(x : A) ... -> ty`, each parameter type in scope of the earlier ones.
    fn telescope(&mut self, params: &[(String, Expr)], ty: &Expr) -> Result<Term, Diagnostic> {
        match params.split_first() {
            None => self.term(ty),
            Some(((name, dom), rest)) => {
                let dom = self.sub(dom)?;
                let cod = self.with_local(name, |scope| scope.telescope(rest, ty))?;
                Ok(Term::Pi(Hint::new(name), dom, Arc::new(cod)))
            }
        }
    }

    /// `\x ... . body`, annotating binders only when there is no declared type.
    fn lambdas(&mut self, params: &[(String, Expr)], body: &Expr, annotate: bool) -> Result<Term, Diagnostic> {
        match params.split_first() {
            None => self.term(body),
            Some(((name, dom), rest)) => {
                let ann = if annotate { Some(self.sub(dom)?) } else { None };
                let inner = self.with_local(name, |scope| scope.lambdas(rest, body, annotate))?;
                Ok(Term::Lam(Hint::new(name), ann, Arc::new(inner)))
            }
        }
    }

    pub fn decl(&mut self, decl: &SurfaceDecl) -> Result<Decl, Diagnostic> {
        let kind = match &decl.kind {
            SurfaceDeclKind::Def { name, params, ty, body, .. } => {
                let (ty, body) = match ty {
                    Some(ty) => (Some(self.telescope(params, ty)?), self.lambdas(params, body, false)?),
                    None => (None, self.lambdas(params, body, true)?),
                };
                DeclKind::Definition { name: Arc::from(name.as_str()), ty: ty.map(Arc::new), body: Arc::new(body) }
            }
            SurfaceDeclKind::Axiom { name, params, ty, .. } => {
                DeclKind::Axiom { name: Arc::from(name.as_str()), ty: Arc::new(self.telescope(params, ty)?) }
            }
            SurfaceDeclKind::Check(term, ty) => {
                DeclKind::Pragma(Pragma::Check { term: self.sub(term)?, ty: self.sub(ty)? })
            }
            SurfaceDeclKind::Infer(term) => DeclKind::Pragma(Pragma::Infer { term: self.sub(term)? }),
            SurfaceDeclKind::Normalize(term) => DeclKind::Pragma(Pragma::Normalize { term: self.sub(term)? }),
            SurfaceDeclKind::Conv(lhs, rhs, ty) => {
                DeclKind::Pragma(Pragma::Conv { lhs: self.sub(lhs)?, rhs: self.sub(rhs)?, ty: self.sub(ty)? })
            }
            SurfaceDeclKind::Fail { expected, scope, item } => {
                let item = match item {
                    Ok(inner) => self.decl(inner).map(Box::new).map_err(Box::new),
                    Err(diag) => Err(diag.clone()),
                };
                DeclKind::Pragma(Pragma::Fail { expected: *expected, scope: *scope, item })
            }
        };
        Ok(Decl { span: decl.span.clone(), kind })
    }
}

fn prim_term(prim: Prim, args: Vec<TermRef>) -> Term {
    let mut args = args.into_iter();
    let mut next = || args.next().expect("parser enforces arity");
    match prim {
        Prim::Succ(fr) => Term::Succ(fr, next()),
        Prim::Inl(fr) => Term::Inl(fr, next()),
        Prim::Inr(fr) => Term::Inr(fr, next()),
        Prim::Fst => Term::Fst(next()),
        Prim::Snd => Term::Snd(next()),
        Prim::NatElim(fragment) => {
            Term::NatElim { fragment, motive: next(), base: next(), step: next(), target: next() }
        }
        Prim::EmptyElim(fragment) => Term::EmptyElim { fragment, motive: next(), target: next() },
        Prim::SumElim(fragment) => {
            Term::SumElim { fragment, motive: next(), left: next(), right: next(), target: next() }
        }
        Prim::IdElim(fragment) => {
            Term::IdElim { fragment, motive: next(), refl_case: next(), lhs: next(), rhs: next(), proof: next() }
        }
        Prim::Uip => {
            let p = next();
            Term::UipS(p, next())
        }
        Prim::Id(fr) => {
            let ty = next();
            let lhs = next();
            Term::Id(fr, Some(ty), lhs, next())
        }
    }
}
