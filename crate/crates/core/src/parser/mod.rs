//! Surface language: lexing, parsing and name resolution.

pub mod grammar;
pub mod lexer;
pub mod resolve;
pub mod surface;

use std::collections::HashSet;
use std::sync::Arc;

use crate::diagnostic::Diagnostic;
use crate::syntax::{Module, Term};

pub use resolve::Scope;
pub use surface::{SurfaceDecl, SurfaceDeclKind};

/// Parses a file into surface declarations without resolving names.
/// Syntax errors are collected; parsing resumes at the next declaration.
pub fn parse_surface(text: &str, path: &str) -> (Vec<SurfaceDecl>, Vec<Diagnostic>) {
    match lexer::tokenize(text, Arc::from(path)) {
        Ok(tokens) => grammar::Parser::new(tokens).decls(),
        Err(diag) => (Vec::new(), vec![diag]),
    }
}

/// Parses and resolves a whole file. Each declaration may refer to the
/// names accepted by `is_global` and to earlier declarations of the file.
pub fn parse_module(text: &str, path: &str, is_global: &dyn Fn(&str) -> bool) -> Result<Module, Diagnostic> {
    let (surface, errors) = parse_surface(text, path);
    if let Some(first) = errors.into_iter().next() {
        return Err(first);
    }
    let mut declared: HashSet<String> = HashSet::new();
    let mut decls = Vec::with_capacity(surface.len());
    for item in &surface {
        let known = |name: &str| declared.contains(name) || is_global(name);
        let decl = Scope::new(Vec::new(), &known).decl(item)?;
        if let Some(name) = decl.name() {
            declared.insert(name.to_string());
        }
        decls.push(decl);
    }
    Ok(Module { path: Arc::from(path), decls })
}

/// Parses a single term. `locals` lists bound names, innermost last.
pub fn parse_term(text: &str, locals: &[&str], is_global: &dyn Fn(&str) -> bool) -> Result<Term, Diagnostic> {
    let tokens = lexer::tokenize(text, Arc::from("<input>"))?;
    let mut parser = grammar::Parser::new(tokens);
    let expr = parser.expr()?;
    parser.finish()?;
    Scope::new(locals.iter().map(|s| s.to_string()).collect(), is_global).term(&expr)
}

/// Parses a closed term with no globals.
pub fn parse_closed(text: &str) -> Result<Term, Diagnostic> {
    parse_term(text, &[], &|_| false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagnostic::ErrorCode;
    use crate::syntax::{alpha_eq, DeclKind, Fragment, Pragma, Sort};

    fn closed(text: &str) -> Term {
        parse_closed(text).unwrap().strip_locs()
    }

    #[test]
    fn definition_of_identity() {
        let m = parse_module("def id : (A : U 0) -> A -> A := \\A. \\x. x", "m.2lt", &|_| false).unwrap();
        assert_eq!(m.decls.len(), 1);
        let DeclKind::Definition { name, body, ty } = &m.decls[0].kind else { panic!() };
        assert_eq!(&**name, "id");
        assert_eq!(body.strip_locs(), Term::lam("A", Term::lam("x", Term::Var(0))));
        let expect_ty = Term::pi("A", Term::Univ(Sort::fibrant(0)), Term::arrow(Term::Var(0), Term::Var(0)));
        assert_eq!(ty.as_ref().unwrap().strip_locs(), expect_ty);
    }

    #[test]
    fn unbound_identifier_names_it() {
        let err = parse_module("def bad := y", "m.2lt", &|_| false).unwrap_err();
        assert_eq!(err.code, ErrorCode::UnboundVariable);
        assert!(err.message.contains("`y`"));
        assert_eq!((err.span.start.line, err.span.start.col), (1, 12));
    }

    #[test]
    fn axiom_referring_to_earlier_name() {
        let src = "axiom Equiv : U 0 -> U 0 -> U 1\naxiom ua : (A : U 0) -> (B : U 0) -> Equiv A B -> A = B";
        let m = parse_module(src, "m.2lt", &|_| false).unwrap();
        assert!(matches!(m.decls[1].kind, DeclKind::Axiom { .. }));
        let forward = parse_module("axiom ua : Equiv\naxiom Equiv : U 0", "m.2lt", &|_| false);
        assert_eq!(forward.unwrap_err().code, ErrorCode::UnboundVariable);
    }

    #[test]
    fn term_examples() {
        assert_eq!(
            closed("(x : Nat) -> Nat"),
            Term::pi("x", Term::Nat(Fragment::Fibrant), Term::Nat(Fragment::Fibrant))
        );
        assert_eq!(
            closed("(x : NatS) * Us 0"),
            Term::sigma("x", Term::Nat(Fragment::Strict), Term::Univ(Sort::strict(0)))
        );
        assert_eq!(closed("refls"), Term::Refl(Fragment::Strict));
        assert_eq!(closed("3s"), Term::numeral(Fragment::Strict, 3));
    }

    #[test]
    fn precedence() {
        let t = closed("(a b : Nat) -> a = b -> a =s b * Unit");
        let nat = Term::Nat(Fragment::Fibrant);
        let eq = Term::Id(Fragment::Fibrant, None, Arc::new(Term::Var(1)), Arc::new(Term::Var(0)));
        let eqs = Term::Id(Fragment::Strict, None, Arc::new(Term::Var(2)), Arc::new(Term::Var(1)));
        let expect =
            Term::pi("a", nat.clone(), Term::pi("b", nat, Term::pi("_", eq, Term::sigma("_", eqs, Term::Unit))));
        assert_eq!(t, expect);
        // `+` binds tighter than `*`, application tighter than everything.
        assert_eq!(
            closed("Nat + Unit * Empty"),
            Term::sigma(
                "_",
                Term::Sum(Fragment::Fibrant, Arc::new(Term::Nat(Fragment::Fibrant)), Arc::new(Term::Unit)),
                Term::Empty(Fragment::Fibrant)
            )
        );
    }

    #[test]
    fn prefix_eliminators_and_tuples() {
        let t = parse_term("fst p q", &["p", "q"], &|_| false).unwrap().strip_locs();
        assert_eq!(t, Term::app(Term::Fst(Arc::new(Term::Var(1))), Term::Var(0)));
        let tuple = closed("(star, 0, 1s)");
        assert_eq!(
            tuple,
            Term::pair(Term::Star, Term::pair(Term::numeral(Fragment::Fibrant, 0), Term::numeral(Fragment::Strict, 1)))
        );
        assert!(parse_closed("J star").is_err());
        assert!(parse_closed("(\\x. fst) star").is_err());
    }

    #[test]
    fn annotation_is_not_a_binder() {
        let t = parse_term("(x : Nat) = x", &["x"], &|_| false).unwrap().strip_locs();
        let ann = Term::Ann(Arc::new(Term::Var(0)), Arc::new(Term::Nat(Fragment::Fibrant)));
        assert_eq!(t, Term::Id(Fragment::Fibrant, None, Arc::new(ann), Arc::new(Term::Var(0))));
    }

    #[test]
    fn juxtaposed_binder_groups() {
        let a = closed("(A : U 0) (x y : A) -> A");
        let b = closed("(A : U 0) -> (x : A) -> (y : A) -> A");
        assert!(alpha_eq(&a, &b));
    }

    #[test]
    fn def_parameters_desugar() {
        let m = parse_module("def k (A : U 0) (x : A) : A := x\ndef j (A : U 0) := A", "m", &|_| false).unwrap();
        let DeclKind::Definition { body, .. } = &m.decls[0].kind else { panic!() };
        assert_eq!(body.strip_locs(), Term::lam("A", Term::lam("x", Term::Var(0))));
        let DeclKind::Definition { body, ty, .. } = &m.decls[1].kind else { panic!() };
        assert!(ty.is_none());
        assert!(matches!(body.strip_locs(), Term::Lam(_, Some(_), _)));
    }

    #[test]
    fn pragmas_and_fail_codes() {
        let src = "#check 0 : Nat\n#infer Nat\n#normalize 1\n#conv 0 ~ 0 : Nat\n#fail[FibrancyViolation] def x : U 0 := NatS\n#fail-unless-strong def y := 0s = 0s";
        let m = parse_module(src, "m", &|_| false).unwrap();
        assert_eq!(m.decls.len(), 6);
        let DeclKind::Pragma(Pragma::Fail { expected, item, .. }) = &m.decls[4].kind else { panic!() };
        assert_eq!(*expected, Some(ErrorCode::FibrancyViolation));
        assert!(item.is_ok());
        // Names inside `#fail` are captured as failures, not reported.
        let m = parse_module("#fail[UnboundVariable] def z := nope", "m", &|_| false).unwrap();
        let DeclKind::Pragma(Pragma::Fail { item, .. }) = &m.decls[0].kind else { panic!() };
        assert_eq!(item.as_ref().unwrap_err().code, ErrorCode::UnboundVariable);
    }

    #[test]
    fn syntax_errors_report_expected_tokens() {
        let err = parse_module("def x : Nat 0", "m", &|_| false).unwrap_err();
        assert_eq!(err.code, ErrorCode::SyntaxError);
        assert!(err.message.contains("`:=`"), "{}", err.message);
        let (decls, errors) = parse_surface("def a : Nat := )\ndef b : Nat := 0", "m");
        assert_eq!(errors.len(), 1);
        assert_eq!(decls.len(), 1);
    }

    #[test]
    fn parsing_is_deterministic() {
        let src = "def f : Nat -> Nat := \\n. natElim (\\_. Nat) 0 (\\_ r. succ r) n";
        let a = parse_module(src, "m", &|_| false).unwrap();
        let b = parse_module(src, "m", &|_| false).unwrap();
        let body = |m: &Module| match &m.decls[0].kind {
            DeclKind::Definition { body, .. } => (**body).clone(),
            _ => unreachable!(),
        };
        assert_eq!(body(&a), body(&b));
    }
}
