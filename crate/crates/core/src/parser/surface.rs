//! Named, spanned syntax straight out of the parser.

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::span::SourceSpan;
use crate::syntax::{FailScope, Fragment, Sort};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lit {
    Nat(Fragment),
    Empty(Fragment),
    Unit,
    Star,
    Refl(Fragment),
    Numeral(Fragment, u64),
}

/// Formers and eliminators written prefix with a fixed number of arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prim {
    Succ(Fragment),
    Inl(Fragment),
    Inr(Fragment),
    Fst,
    Snd,
    NatElim(Fragment),
    EmptyElim(Fragment),
    SumElim(Fragment),
    IdElim(Fragment),
    Uip,
    Id(Fragment),
}

impl Prim {
    pub fn arity(self) -> usize {
        match self {
            Prim::Succ(_) | Prim::Inl(_) | Prim::Inr(_) | Prim::Fst | Prim::Snd => 1,
            Prim::EmptyElim(_) | Prim::Uip => 2,
            Prim::Id(_) => 3,
            Prim::NatElim(_) | Prim::SumElim(_) => 4,
            Prim::IdElim(_) => 5,
        }
    }

    pub fn keyword(self) -> &'static str {
        use Fragment::{Fibrant as F, Strict as S};
        match self {
            Prim::Succ(F) => "succ",
            Prim::Succ(S) => "succs",
            Prim::Inl(F) => "inl",
            Prim::Inl(S) => "inls",
            Prim::Inr(F) => "inr",
            Prim::Inr(S) => "inrs",
            Prim::Fst => "fst",
            Prim::Snd => "snd",
            Prim::NatElim(F) => "natElim",
            Prim::NatElim(S) => "natElimS",
            Prim::EmptyElim(F) => "emptyElim",
            Prim::EmptyElim(S) => "emptyElimS",
            Prim::SumElim(F) => "sumElim",
            Prim::SumElim(S) => "sumElimS",
            Prim::IdElim(F) => "J",
            Prim::IdElim(S) => "Js",
            Prim::Uip => "Ks",
            Prim::Id(F) => "Id",
            Prim::Id(S) => "IdS",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Prim> {
        use Fragment::{Fibrant as F, Strict as S};
        Some(match word {
            "succ" => Prim::Succ(F),
            "succs" => Prim::Succ(S),
            "inl" => Prim::Inl(F),
            "inls" => Prim::Inl(S),
            "inr" => Prim::Inr(F),
            "inrs" => Prim::Inr(S),
            "fst" => Prim::Fst,
            "snd" => Prim::Snd,
            "natElim" => Prim::NatElim(F),
            "natElimS" => Prim::NatElim(S),
            "emptyElim" => Prim::EmptyElim(F),
            "emptyElimS" => Prim::EmptyElim(S),
            "sumElim" => Prim::SumElim(F),
            "sumElimS" => Prim::SumElim(S),
            "J" => Prim::IdElim(F),
            "Js" => Prim::IdElim(S),
            "Ks" => Prim::Uip,
            "Id" => Prim::Id(F),
            "IdS" => Prim::Id(S),
            _ => return None,
        })
    }
}

pub fn lit_from_keyword(word: &str) -> Option<Lit> {
    Some(match word {
        "Nat" => Lit::Nat(Fragment::Fibrant),
        "NatS" => Lit::Nat(Fragment::Strict),
        "Empty" => Lit::Empty(Fragment::Fibrant),
        "EmptyS" => Lit::Empty(Fragment::Strict),
        "Unit" => Lit::Unit,
        "star" => Lit::Star,
        "refl" => Lit::Refl(Fragment::Fibrant),
        "refls" => Lit::Refl(Fragment::Strict),
        _ => return None,
    })
}

/// Words that can never name a variable.
pub fn is_reserved(word: &str) -> bool {
    matches!(word, "def" | "axiom" | "U" | "Us")
        || lit_from_keyword(word).is_some()
        || Prim::from_keyword(word).is_some()
}

#[derive(Clone, Debug)]
pub struct Expr {
    pub span: SourceSpan,
    pub kind: ExprKind,
}

#[derive(Clone, Debug)]
pub enum ExprKind {
    Var(String),
    Univ(Sort),
    Lit(Lit),
    Prim(Prim, Vec<Expr>),
    App(Box<Expr>, Box<Expr>),
    Lam(String, Option<Box<Expr>>, Box<Expr>),
    Pi(String, Box<Expr>, Box<Expr>),
    Sigma(String, Box<Expr>, Box<Expr>),
    Sum(Fragment, Box<Expr>, Box<Expr>),
    Eq(Fragment, Box<Expr>, Box<Expr>),
    Pair(Box<Expr>, Box<Expr>),
    Ann(Box<Expr>, Box<Expr>),
}

/// A parameter group `(x y : A)` of a definition or binder.
pub type Params = Vec<(String, Expr)>;

#[derive(Clone, Debug)]
pub struct SurfaceDecl {
    pub span: SourceSpan,
    pub kind: SurfaceDeclKind,
}

#[derive(Clone, Debug)]
pub enum SurfaceDeclKind {
    Def { name: String, name_span: SourceSpan, params: Params, ty: Option<Expr>, body: Expr },
    Axiom { name: String, name_span: SourceSpan, params: Params, ty: Expr },
    Check(Expr, Expr),
    Infer(Expr),
    Normalize(Expr),
    Conv(Expr, Expr, Expr),
    Fail { expected: Option<ErrorCode>, scope: FailScope, item: Result<Box<SurfaceDecl>, Box<Diagnostic>> },
}
