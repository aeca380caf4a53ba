//! Recursive-descent parser producing [`Expr`] and [`SurfaceDecl`].
//!
//! Precedence, loosest first: binders and `->` (right), `*` (right),
//! `+`/`+s` (right), `=`/`=s` (non-associative), application.

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::parser::lexer::{Tok, Token};
use crate::parser::surface::*;
use crate::span::SourceSpan;
use crate::syntax::{FailScope, Fragment, Sort};

pub type PResult<T> = Result<T, Diagnostic>;

pub struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn boxed(e: Expr) -> Box<Expr> {
    Box::new(e)
}

impl Parser {
    pub fn new(tokens: Vec<Token>) -> Parser {
        debug_assert!(matches!(tokens.last(), Some(Token { tok: Tok::Eof, .. })));
        Parser { tokens, pos: 0 }
    }

    fn tok_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn peek(&self) -> &Tok {
        self.tok_at(0)
    }

    fn span(&self) -> SourceSpan {
        self.tokens[self.pos].span.clone()
    }

    fn prev_span(&self) -> SourceSpan {
        self.tokens[self.pos.saturating_sub(1)].span.clone()
    }

    fn bump(&mut self) -> Token {
        let token = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        token
    }

    fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    fn error_expected(&self, expected: &[&str]) -> Diagnostic {
        Diagnostic::error(
            ErrorCode::SyntaxError,
            self.span(),
            format!("expected {}, found {}", expected.join(" or "), self.peek()),
        )
    }

    fn expect(&mut self, tok: Tok) -> PResult<Token> {
        if *self.peek() == tok {
            Ok(self.bump())
        } else {
            Err(self.error_expected(&[&tok.to_string()]))
        }
    }

    fn is_keyword(&self, word: &str) -> bool {
        matches!(self.peek(), Tok::Ident(w) if w == word)
    }

    fn binder_name(&mut self) -> PResult<(String, SourceSpan)> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "_" || !is_reserved(&name) => {
                let span = self.bump().span;
                Ok((name, span))
            }
            _ => Err(self.error_expected(&["a name"])),
        }
    }

    fn node(&self, start: &SourceSpan, kind: ExprKind) -> Expr {
        Expr { span: start.to(&self.prev_span()), kind }
    }

    /// Looks past a run of `(x y : A)` groups and returns the token after
    /// them, if at least one group is present.
    fn token_after_groups(&self) -> Option<&Tok> {
        let mut i = self.pos;
        let mut groups = 0;
        loop {
            if self.tokens[i].tok != Tok::LParen {
                break;
            }
            let mut j = i + 1;
            while matches!(&self.tokens[j].tok, Tok::Ident(w) if w == "_" || !is_reserved(w)) {
                j += 1;
            }
            if j == i + 1 || self.tokens[j].tok != Tok::Colon {
                break;
            }
            let mut depth = 0usize;
            let mut k = i;
            loop {
                match self.tokens[k].tok {
                    Tok::LParen => depth += 1,
                    Tok::RParen => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    Tok::Eof => return None,
                    _ => {}
                }
                k += 1;
            }
            i = k + 1;
            groups += 1;
        }
        (groups > 0).then(|| &self.tokens[i].tok)
    }

    /// Zero or more `(x y : A)` groups.
    fn param_groups(&mut self) -> PResult<Params> {
        let mut params = Vec::new();
        while *self.peek() == Tok::LParen && self.token_after_groups().is_some() {
            self.bump();
            let mut names = Vec::new();
            while *self.peek() != Tok::Colon {
                names.push(self.binder_name()?.0);
            }
            self.bump();
            let ty = self.expr()?;
            self.expect(Tok::RParen)?;
            params.extend(names.into_iter().map(|n| (n, ty.clone())));
        }
        Ok(params)
    }

    fn fold_binders(
        &self,
        start: &SourceSpan,
        params: Params,
        body: Expr,
        make: fn(String, Box<Expr>, Box<Expr>) -> ExprKind,
    ) -> Expr {
        params.into_iter().rev().fold(body, |body, (name, ty)| Expr {
            span: start.to(&body.span),
            kind: make(name, boxed(ty), boxed(body)),
        })
    }

    pub fn expr(&mut self) -> PResult<Expr> {
        let start = self.span();
        if *self.peek() == Tok::Backslash {
            return self.lambda();
        }
        if self.token_after_groups() == Some(&Tok::Arrow) {
            let params = self.param_groups()?;
            self.expect(Tok::Arrow)?;
            let body = self.expr()?;
            return Ok(self.fold_binders(&start, params, body, ExprKind::Pi));
        }
        let lhs = self.product()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.expr()?;
            return Ok(self.node(&start, ExprKind::Pi("_".into(), boxed(lhs), boxed(rhs))));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> PResult<Expr> {
        let start = self.span();
        if self.token_after_groups() == Some(&Tok::Star) {
            let params = self.param_groups()?;
            self.expect(Tok::Star)?;
            let body = self.product()?;
            return Ok(self.fold_binders(&start, params, body, ExprKind::Sigma));
        }
        let lhs = self.sum()?;
        if *self.peek() == Tok::Star {
            self.bump();
            let rhs = self.product()?;
            return Ok(self.node(&start, ExprKind::Sigma("_".into(), boxed(lhs), boxed(rhs))));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> PResult<Expr> {
        let start = self.span();
        let lhs = self.equality()?;
        let fragment = match self.peek() {
            Tok::Plus => Fragment::Fibrant,
            Tok::PlusS => Fragment::Strict,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.sum()?;
        Ok(self.node(&start, ExprKind::Sum(fragment, boxed(lhs), boxed(rhs))))
    }

    fn equality(&mut self) -> PResult<Expr> {
        let start = self.span();
        let lhs = self.application()?;
        let fragment = match self.peek() {
            Tok::Eq => Fragment::Fibrant,
            Tok::EqS => Fragment::Strict,
            _ => return Ok(lhs),
        };
        self.bump();
        let rhs = self.application()?;
        Ok(self.node(&start, ExprKind::Eq(fragment, boxed(lhs), boxed(rhs))))
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::Ident(w) => !matches!(w.as_str(), "def" | "axiom"),
            Tok::Num(_) | Tok::NumS(_) | Tok::LParen => true,
            _ => false,
        }
    }

    fn application(&mut self) -> PResult<Expr> {
        let start = self.span();
        let mut head = match self.peek() {
            Tok::Ident(w) if Prim::from_keyword(w).is_some() => self.prim_app()?,
            _ => self.atom()?,
        };
        while self.starts_atom() {
            let arg = self.atom()?;
            head = self.node(&start, ExprKind::App(boxed(head), boxed(arg)));
        }
        Ok(head)
    }

    fn prim_app(&mut self) -> PResult<Expr> {
        let start = self.span();
        let Tok::Ident(word) = self.bump().tok else { unreachable!("checked by caller") };
        let prim = Prim::from_keyword(&word).expect("checked by caller");
        let mut args = Vec::with_capacity(prim.arity());
        for _ in 0..prim.arity() {
            if !self.starts_atom() {
                return Err(Diagnostic::error(
                    ErrorCode::SyntaxError,
                    self.span(),
                    format!("`{word}` takes {} argument(s), found {} before {}", prim.arity(), args.len(), self.peek()),
                ));
            }
            args.push(self.atom()?);
        }
        Ok(self.node(&start, ExprKind::Prim(prim, args)))
    }

    fn atom(&mut self) -> PResult<Expr> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Ident(word) => {
                if word == "U" || word == "Us" {
                    self.bump();
                    let level = match self.peek() {
                        Tok::Num(n) => u32::try_from(*n).map_err(|_| {
                            Diagnostic::error(ErrorCode::SyntaxError, self.span(), "universe level too large")
                        })?,
                        _ => return Err(self.error_expected(&["a universe level"])),
                    };
                    self.bump();
                    let sort = if word == "U" { Sort::fibrant(level) } else { Sort::strict(level) };
                    return Ok(self.node(&start, ExprKind::Univ(sort)));
                }
                if let Some(lit) = lit_from_keyword(&word) {
                    self.bump();
                    return Ok(self.node(&start, ExprKind::Lit(lit)));
                }
                if let Some(prim) = Prim::from_keyword(&word) {
                    return Err(Diagnostic::error(
                        ErrorCode::SyntaxError,
                        start,
                        format!(
                            "`{word}` takes {} argument(s); parenthesize it when used as an argument",
                            prim.arity()
                        ),
                    ));
                }
                if word == "def" || word == "axiom" {
                    return Err(self.error_expected(&["a term"]));
                }
                self.bump();
                Ok(self.node(&start, ExprKind::Var(word)))
            }
            Tok::Num(n) => {
                self.bump();
                Ok(self.node(&start, ExprKind::Lit(Lit::Numeral(Fragment::Fibrant, n))))
            }
            Tok::NumS(n) => {
                self.bump();
                Ok(self.node(&start, ExprKind::Lit(Lit::Numeral(Fragment::Strict, n))))
            }
            Tok::LParen => {
                self.bump();
                let first = self.expr()?;
                match self.peek() {
                    Tok::Colon => {
                        self.bump();
                        let ty = self.expr()?;
                        self.expect(Tok::RParen)?;
                        Ok(self.node(&start, ExprKind::Ann(boxed(first), boxed(ty))))
                    }
                    Tok::Comma => {
                        let mut items = vec![first];
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            items.push(self.expr()?);
                        }
                        self.expect(Tok::RParen)?;
                        let end = self.prev_span();
                        let last = items.pop().expect("at least two items");
                        Ok(items.into_iter().rev().fold(last, |acc, item| Expr {
                            span: item.span.to(&end),
                            kind: ExprKind::Pair(boxed(item), boxed(acc)),
                        }))
                    }
                    _ => {
                        self.expect(Tok::RParen)?;
                        Ok(first)
                    }
                }
            }
            _ => Err(self.error_expected(&["a term"])),
        }
    }

    fn lambda(&mut self) -> PResult<Expr> {
        let start = self.expect(Tok::Backslash)?.span;
        let mut binders: Vec<(String, Option<Expr>)> = Vec::new();
        loop {
            match self.peek() {
                Tok::Dot if !binders.is_empty() => break,
                Tok::LParen => {
                    self.bump();
                    let mut names = Vec::new();
                    while *self.peek() != Tok::Colon {
                        names.push(self.binder_name()?.0);
                    }
                    if names.is_empty() {
                        return Err(self.error_expected(&["a name"]));
                    }
                    self.bump();
                    let ty = self.expr()?;
                    self.expect(Tok::RParen)?;
                    binders.extend(names.into_iter().map(|n| (n, Some(ty.clone()))));
                }
                Tok::Ident(_) => binders.push((self.binder_name()?.0, None)),
                _ => return Err(self.error_expected(&["a binder", "`.`"])),
            }
        }
        self.expect(Tok::Dot)?;
        let body = self.expr()?;
        Ok(binders.into_iter().rev().fold(body, |body, (name, ty)| Expr {
            span: start.to(&body.span),
            kind: ExprKind::Lam(name, ty.map(boxed), boxed(body)),
        }))
    }

    fn decl_name(&mut self) -> PResult<(String, SourceSpan)> {
        match self.peek().clone() {
            Tok::Ident(name) if name != "_" && !is_reserved(&name) => {
                let span = self.bump().span;
                Ok((name, span))
            }
            _ => Err(self.error_expected(&["a declaration name"])),
        }
    }

    pub fn decl(&mut self) -> PResult<SurfaceDecl> {
        let start = self.span();
        let kind = match self.peek().clone() {
            Tok::Ident(w) if w == "def" => {
                self.bump();
                let (name, name_span) = self.decl_name()?;
                let params = self.param_groups()?;
                let ty = if *self.peek() == Tok::Colon {
                    self.bump();
                    Some(self.expr()?)
                } else {
                    None
                };
                self.expect(Tok::ColonEq)?;
                let body = self.expr()?;
                SurfaceDeclKind::Def { name, name_span, params, ty, body }
            }
            Tok::Ident(w) if w == "axiom" => {
                self.bump();
                let (name, name_span) = self.decl_name()?;
                let params = self.param_groups()?;
                self.expect(Tok::Colon)?;
                let ty = self.expr()?;
                SurfaceDeclKind::Axiom { name, name_span, params, ty }
            }
            Tok::Pragma(p) => {
                self.bump();
                match p.as_str() {
                    "#check" => {
                        let term = self.expr()?;
                        self.expect(Tok::Colon)?;
                        SurfaceDeclKind::Check(term, self.expr()?)
                    }
                    "#infer" => SurfaceDeclKind::Infer(self.expr()?),
                    "#normalize" => SurfaceDeclKind::Normalize(self.expr()?),
                    "#conv" => {
                        let lhs = self.expr()?;
                        self.expect(Tok::Tilde)?;
                        let rhs = self.expr()?;
                        self.expect(Tok::Colon)?;
                        SurfaceDeclKind::Conv(lhs, rhs, self.expr()?)
                    }
                    "#fail" | "#fail-unless-strong" => {
                        let scope = if p == "#fail" { FailScope::Always } else { FailScope::UnlessStrong };
                        let expected = self.fail_code()?;
                        let item = match self.decl() {
                            Ok(inner) => Ok(Box::new(inner)),
                            Err(diag) => {
                                self.recover();
                                Err(Box::new(diag))
                            }
                        };
                        SurfaceDeclKind::Fail { expected, scope, item }
                    }
                    _ => return Err(Diagnostic::error(ErrorCode::SyntaxError, start, format!("unknown pragma `{p}`"))),
                }
            }
            _ => return Err(self.error_expected(&["`def`", "`axiom`", "a pragma"])),
        };
        Ok(SurfaceDecl { span: start.to(&self.prev_span()), kind })
    }

    fn fail_code(&mut self) -> PResult<Option<ErrorCode>> {
        if *self.peek() != Tok::LBracket {
            return Ok(None);
        }
        self.bump();
        let span = self.span();
        let code = match self.bump().tok {
            Tok::Ident(name) => {
                name.parse::<ErrorCode>().map_err(|e| Diagnostic::error(ErrorCode::SyntaxError, span, e.to_string()))?
            }
            _ => return Err(Diagnostic::error(ErrorCode::SyntaxError, span, "expected an error code")),
        };
        self.expect(Tok::RBracket)?;
        Ok(Some(code))
    }

    fn at_decl_start(&self) -> bool {
        self.is_keyword("def") || self.is_keyword("axiom") || matches!(self.peek(), Tok::Pragma(_))
    }

    /// Skips to the next token that can start a declaration.
    fn recover(&mut self) {
        if !self.at_eof() {
            self.bump();
        }
        while !self.at_eof() && !self.at_decl_start() {
            self.bump();
        }
    }

    /// Parses declarations until end of input, recovering after errors.
    pub fn decls(&mut self) -> (Vec<SurfaceDecl>, Vec<Diagnostic>) {
        let mut decls = Vec::new();
        let mut errors = Vec::new();
        while !self.at_eof() {
            match self.decl() {
                Ok(decl) => decls.push(decl),
                Err(diag) => {
                    errors.push(diag);
                    self.recover();
                }
            }
        }
        (decls, errors)
    }

    pub fn finish(&self) -> PResult<()> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.error_expected(&["end of input"]))
        }
    }
}
