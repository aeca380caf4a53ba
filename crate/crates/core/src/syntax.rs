//! Core term language.
//!
//! Terms use de Bruijn indices. Binder names are kept only as [`Hint`]s for
//! printing and never take part in equality, so the derived `PartialEq` on
//! [`Term`] is α-equality (modulo [`Term::Loc`] wrappers, see
//! [`Term::strip_locs`]).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::span::SourceSpan;

pub type Name = Arc<str>;
pub type TermRef = Arc<Term>;

/// Which layer of the theory a sort, former or eliminator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fragment {
    /// The inner, homotopical layer: fibrant types.
    Fibrant,
    /// The outer layer: pretypes with strict equality.
    Strict,
}

impl Fragment {
    pub fn is_strict(self) -> bool {
        self == Fragment::Strict
    }
}

/// A universe: `U i` is `Sort { Fibrant, i }`, `Us i` is `Sort { Strict, i }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sort {
    pub fragment: Fragment,
    pub level: u32,
}

impl Sort {
    pub const fn fibrant(level: u32) -> Sort {
        Sort { fragment: Fragment::Fibrant, level }
    }

    pub const fn strict(level: u32) -> Sort {
        Sort { fragment: Fragment::Strict, level }
    }

    /// The sort of this universe itself.
    pub fn succ(self) -> Sort {
        Sort { fragment: self.fragment, level: self.level + 1 }
    }

    /// Least upper bound: strict if either side is, at the larger level.
    pub fn join(self, other: Sort) -> Sort {
        let fragment =
            if self.fragment.is_strict() || other.fragment.is_strict() { Fragment::Strict } else { Fragment::Fibrant };
        Sort { fragment, level: self.level.max(other.level) }
    }

    pub fn is_fibrant(self) -> bool {
        self.fragment == Fragment::Fibrant
    }
}

/// Universe subsumption: cumulativity within each hierarchy plus
/// `U i <= Us j` for `i <= j`. Pretypes never become types.
pub fn sort_sub(a: Sort, b: Sort) -> bool {
    let fragment_ok = a.fragment == b.fragment || (a.fragment == Fragment::Fibrant && b.fragment == Fragment::Strict);
    fragment_ok && a.level <= b.level
}

impl PartialOrd for Sort {
    fn partial_cmp(&self, other: &Sort) -> Option<Ordering> {
        if self == other {
            Some(Ordering::Equal)
        } else if sort_sub(*self, *other) {
            Some(Ordering::Less)
        } else if sort_sub(*other, *self) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.fragment {
            Fragment::Fibrant => write!(f, "U {}", self.level),
            Fragment::Strict => write!(f, "Us {}", self.level),
        }
    }
}

/// A binder name used only when printing. All hints compare equal.
#[derive(Clone, Debug)]
pub struct Hint(pub Name);

impl Hint {
    pub fn new(name: &str) -> Hint {
        Hint(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PartialEq for Hint {
    fn eq(&self, _: &Hint) -> bool {
        true
    }
}

impl Eq for Hint {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Const(Name),
    Univ(Sort),

    Pi(Hint, TermRef, TermRef),
    Lam(Hint, Option<TermRef>, TermRef),
    App(TermRef, TermRef),

    Sigma(Hint, TermRef, TermRef),
    Pair(TermRef, TermRef),
    Fst(TermRef),
    Snd(TermRef),

    Unit,
    Star,

    Nat(Fragment),
    Zero(Fragment),
    Succ(Fragment, TermRef),
    NatElim {
        fragment: Fragment,
        motive: TermRef,
        base: TermRef,
        step: TermRef,
        target: TermRef,
    },

    Empty(Fragment),
    EmptyElim {
        fragment: Fragment,
        motive: TermRef,
        target: TermRef,
    },

    Sum(Fragment, TermRef, TermRef),
    Inl(Fragment, TermRef),
    Inr(Fragment, TermRef),
    SumElim {
        fragment: Fragment,
        motive: TermRef,
        left: TermRef,
        right: TermRef,
        target: TermRef,
    },

    /// `lhs = rhs` (fibrant) or `lhs =s rhs` (strict). The carrier is filled
    /// in by elaboration when the surface syntax leaves it out.
    Id(Fragment, Option<TermRef>, TermRef, TermRef),
    Refl(Fragment),
    /// `J` / `Js`.
    IdElim {
        fragment: Fragment,
        motive: TermRef,
        refl_case: TermRef,
        lhs: TermRef,
        rhs: TermRef,
        proof: TermRef,
    },
    /// `Ks p q : p =s q`. No computation rule.
    UipS(TermRef, TermRef),

    Ann(TermRef, TermRef),
    Loc(SourceSpan, TermRef),
}

// Constructors that hide the `Arc` noise.
impl Term {
    pub fn pi(hint: &str, dom: Term, cod: Term) -> Term {
        Term::Pi(Hint::new(hint), Arc::new(dom), Arc::new(cod))
    }

    pub fn arrow(dom: Term, cod: Term) -> Term {
        Term::pi("_", dom, cod.shift(1, 0))
    }

    pub fn sigma(hint: &str, fst: Term, snd: Term) -> Term {
        Term::Sigma(Hint::new(hint), Arc::new(fst), Arc::new(snd))
    }

    pub fn lam(hint: &str, body: Term) -> Term {
        Term::Lam(Hint::new(hint), None, Arc::new(body))
    }

    pub fn app(f: Term, a: Term) -> Term {
        Term::App(Arc::new(f), Arc::new(a))
    }

    pub fn apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, Term::app)
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(Arc::from(name))
    }

    /// `n` as a chain of successors over zero.
    pub fn numeral(fragment: Fragment, n: u64) -> Term {
        (0..n).fold(Term::Zero(fragment), |t, _| Term::Succ(fragment, Arc::new(t)))
    }

    /// Recognises a successor chain ending in zero.
    pub fn as_numeral(&self) -> Option<(Fragment, u64)> {
        match self {
            Term::Zero(fr) => Some((*fr, 0)),
            Term::Succ(fr, t) => match t.as_numeral() {
                Some((inner, n)) if inner == *fr => Some((*fr, n + 1)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Removes all source-location wrappers.
    pub fn strip_locs(&self) -> Term {
        self.map_children(&mut |t, _| Arc::new(t.strip_locs())).unwrap_or_else(|inner| inner.strip_locs())
    }

    /// Applies `f` to every immediate subterm, passing the number of binders
    /// crossed to reach it. `Loc` nodes are reported back as `Err(inner)`.
    fn map_children(&self, f: &mut impl FnMut(&Term, usize) -> TermRef) -> Result<Term, &Term> {
        use Term::*;
        Ok(match self {
            Var(_) | Const(_) | Univ(_) | Unit | Star | Nat(_) | Zero(_) | Empty(_) | Refl(_) => self.clone(),
            Pi(h, a, b) => Pi(h.clone(), f(a, 0), f(b, 1)),
            Lam(h, ann, body) => Lam(h.clone(), ann.as_ref().map(|a| f(a, 0)), f(body, 1)),
            App(a, b) => App(f(a, 0), f(b, 0)),
            Sigma(h, a, b) => Sigma(h.clone(), f(a, 0), f(b, 1)),
            Pair(a, b) => Pair(f(a, 0), f(b, 0)),
            Fst(p) => Fst(f(p, 0)),
            Snd(p) => Snd(f(p, 0)),
            Succ(fr, n) => Succ(*fr, f(n, 0)),
            NatElim { fragment, motive, base, step, target } => NatElim {
                fragment: *fragment,
                motive: f(motive, 0),
                base: f(base, 0),
                step: f(step, 0),
                target: f(target, 0),
            },
            EmptyElim { fragment, motive, target } => {
                EmptyElim { fragment: *fragment, motive: f(motive, 0), target: f(target, 0) }
            }
            Sum(fr, a, b) => Sum(*fr, f(a, 0), f(b, 0)),
            Inl(fr, a) => Inl(*fr, f(a, 0)),
            Inr(fr, a) => Inr(*fr, f(a, 0)),
            SumElim { fragment, motive, left, right, target } => SumElim {
                fragment: *fragment,
                motive: f(motive, 0),
                left: f(left, 0),
                right: f(right, 0),
                target: f(target, 0),
            },
            Id(fr, ty, a, b) => Id(*fr, ty.as_ref().map(|t| f(t, 0)), f(a, 0), f(b, 0)),
            IdElim { fragment, motive, refl_case, lhs, rhs, proof } => IdElim {
                fragment: *fragment,
                motive: f(motive, 0),
                refl_case: f(refl_case, 0),
                lhs: f(lhs, 0),
                rhs: f(rhs, 0),
                proof: f(proof, 0),
            },
            UipS(p, q) => UipS(f(p, 0), f(q, 0)),
            Ann(t, ty) => Ann(f(t, 0), f(ty, 0)),
            Loc(_, inner) => return Err(inner),
        })
    }

    /// Rebuilds the term bottom-up, passing every rebuilt node through `f`.
    pub fn rewrite(&self, f: &impl Fn(Term) -> Term) -> Term {
        match self {
            Term::Loc(span, inner) => Term::Loc(span.clone(), Arc::new(inner.rewrite(f))),
            _ => f(self.map_children(&mut |t, _| Arc::new(t.rewrite(f))).expect("Loc handled above")),
        }
    }

    /// Rebuilds the term, replacing each free variable `Var(i)` (with
    /// `i >= cutoff` counted at the point of use) by `on_var(depth, i)`.
    fn map_free(&self, cutoff: usize, on_var: &impl Fn(usize, usize) -> Term) -> Term {
        match self {
            Term::Var(i) if *i >= cutoff => on_var(cutoff, *i),
            Term::Loc(span, inner) => Term::Loc(span.clone(), Arc::new(inner.map_free(cutoff, on_var))),
            _ => self
                .map_children(&mut |t, binders| Arc::new(t.map_free(cutoff + binders, on_var)))
                .expect("Loc handled above"),
        }
    }

    /// Adds `amount` to every free index `>= cutoff`.
    pub fn shift(&self, amount: isize, cutoff: usize) -> Term {
        if amount == 0 {
            return self.clone();
        }
        self.map_free(cutoff, &|_, i| {
            let shifted = i as isize + amount;
            assert!(shifted >= 0, "shift produced a negative index");
            Term::Var(shifted as usize)
        })
    }

    /// Replaces `Var(index)` by `replacement`, lowering the free variables
    /// above it by one (the binder for `index` disappears).
    pub fn subst(&self, index: usize, replacement: &Term) -> Term {
        self.subst_at(index, replacement, 0)
    }

    fn subst_at(&self, index: usize, replacement: &Term, depth: usize) -> Term {
        match self {
            Term::Var(i) if *i == index + depth => replacement.shift(depth as isize, 0),
            Term::Var(i) if *i > index + depth => Term::Var(i - 1),
            Term::Var(_) => self.clone(),
            Term::Loc(span, inner) => Term::Loc(span.clone(), Arc::new(inner.subst_at(index, replacement, depth))),
            _ => self
                .map_children(&mut |t, binders| Arc::new(t.subst_at(index, replacement, depth + binders)))
                .expect("Loc handled above"),
        }
    }

    /// Whether `Var(index)` occurs free.
    pub fn mentions(&self, index: usize) -> bool {
        let mut found = false;
        self.visit(0, &mut |depth, t| {
            if let Term::Var(i) = t {
                if *i == index + depth {
                    found = true;
                }
            }
        });
        found
    }

    /// Whether every variable is bound within `depth` enclosing binders.
    pub fn is_closed_under(&self, depth: usize) -> bool {
        let mut ok = true;
        self.visit(0, &mut |binders, t| {
            if let Term::Var(i) = t {
                if *i >= depth + binders {
                    ok = false;
                }
            }
        });
        ok
    }

    /// Pre-order traversal; the callback receives the binder depth.
    pub fn visit(&self, depth: usize, f: &mut impl FnMut(usize, &Term)) {
        f(depth, self);
        if let Term::Loc(_, inner) = self {
            inner.visit(depth, f);
            return;
        }
        let _ = self.map_children(&mut |t, binders| {
            t.visit(depth + binders, f);
            Arc::new(Term::Unit)
        });
    }

    /// Size in nodes; used to keep generated test terms bounded.
    pub fn size(&self) -> usize {
        let mut n = 0;
        self.visit(0, &mut |_, _| n += 1);
        n
    }
}

/// α-equality: structural equality after dropping locations.
pub fn alpha_eq(a: &Term, b: &Term) -> bool {
    a.strip_locs() == b.strip_locs()
}

/// Which assertion a `#fail` wrapper pins down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailScope {
    /// The item must fail in every mode.
    Always,
    /// The item must fail in default mode and check in strong mode, where the
    /// strict and fibrant formers coincide.
    UnlessStrong,
}

#[derive(Clone, Debug)]
pub enum Pragma {
    Check {
        term: TermRef,
        ty: TermRef,
    },
    Infer {
        term: TermRef,
    },
    Normalize {
        term: TermRef,
    },
    Conv {
        lhs: TermRef,
        rhs: TermRef,
        ty: TermRef,
    },
    Fail {
        expected: Option<ErrorCode>,
        scope: FailScope,
        /// The wrapped item, or the scoping error it produced while parsing.
        item: Result<Box<Decl>, Box<Diagnostic>>,
    },
}

impl Pragma {
    pub fn keyword(&self) -> &'static str {
        match self {
            Pragma::Check { .. } => "#check",
            Pragma::Infer { .. } => "#infer",
            Pragma::Normalize { .. } => "#normalize",
            Pragma::Conv { .. } => "#conv",
            Pragma::Fail { scope: FailScope::Always, .. } => "#fail",
            Pragma::Fail { scope: FailScope::UnlessStrong, .. } => "#fail-unless-strong",
        }
    }
}

#[derive(Clone, Debug)]
pub enum DeclKind {
    Definition { name: Name, ty: Option<TermRef>, body: TermRef },
    Axiom { name: Name, ty: TermRef },
    Pragma(Pragma),
}

#[derive(Clone, Debug)]
pub struct Decl {
    pub span: SourceSpan,
    pub kind: DeclKind,
}

impl Decl {
    pub fn name(&self) -> Option<&Name> {
        match &self.kind {
            DeclKind::Definition { name, .. } | DeclKind::Axiom { name, .. } => Some(name),
            DeclKind::Pragma(_) => None,
        }
    }

    pub fn is_pragma(&self) -> bool {
        matches!(self.kind, DeclKind::Pragma(_))
    }
}

/// A parsed source file: declarations in order.
#[derive(Clone, Debug)]
pub struct Module {
    pub path: Name,
    pub decls: Vec<Decl>,
}
