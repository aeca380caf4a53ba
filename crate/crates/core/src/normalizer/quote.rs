use std::sync::Arc;

use crate::normalizer::eval::Machine;
use crate::normalizer::value::*;
use crate::syntax::{Term, TermRef};

impl Machine<'_> {
    /// Reads a value back to a β-ι-normal term with `depth` free variables.
    pub fn quote(&self, depth: usize, value: &Val) -> Term {
        let q = |v: &Val| Arc::new(self.quote(depth, v));
        match &**value {
            Value::Univ(sort) => Term::Univ(*sort),
            Value::Pi(h, dom, cod) => Term::Pi(h.clone(), q(dom), self.quote_under(depth, cod)),
            Value::Lam(h, body) => Term::Lam(h.clone(), None, self.quote_under(depth, body)),
            Value::Sigma(h, a, b) => Term::Sigma(h.clone(), q(a), self.quote_under(depth, b)),
            Value::Pair(a, b) => Term::Pair(q(a), q(b)),
            Value::Unit => Term::Unit,
            Value::Star => Term::Star,
            Value::Nat(fr) => Term::Nat(*fr),
            Value::Zero(fr) => Term::Zero(*fr),
            Value::Succ(fr, n) => Term::Succ(*fr, q(n)),
            Value::Empty(fr) => Term::Empty(*fr),
            Value::Sum(fr, a, b) => Term::Sum(*fr, q(a), q(b)),
            Value::Inl(fr, a) => Term::Inl(*fr, q(a)),
            Value::Inr(fr, b) => Term::Inr(*fr, q(b)),
            Value::Id(fr, ty, a, b) => Term::Id(*fr, ty.as_ref().map(q), q(a), q(b)),
            Value::Refl(fr) => Term::Refl(*fr),
            Value::Neutral(head, spine) => self.quote_neutral(depth, head, spine),
        }
    }

    fn quote_under(&self, depth: usize, closure: &Closure) -> TermRef {
        Arc::new(self.quote(depth + 1, &self.apply(closure, Value::var(depth))))
    }

    fn quote_head(&self, depth: usize, head: &Head) -> Term {
        match head {
            Head::Var(level) => {
                assert!(*level < depth, "level {level} escapes depth {depth}");
                Term::Var(depth - 1 - level)
            }
            Head::Const(name) => Term::Const(name.clone()),
            Head::Uip { ty, p, q } => {
                let p = self.quote(depth, p);
                let p = match ty {
                    Some(ty) => Term::Ann(Arc::new(p), Arc::new(self.quote(depth, ty))),
                    None => p,
                };
                Term::UipS(Arc::new(p), Arc::new(self.quote(depth, q)))
            }
            Head::Stuck(v) => self.quote(depth, v),
        }
    }

    pub fn quote_neutral(&self, depth: usize, head: &Head, spine: &[Elim]) -> Term {
        let q = |v: &Val| Arc::new(self.quote(depth, v));
        spine.iter().fold(self.quote_head(depth, head), |acc, elim| {
            let target = Arc::new(acc);
            match elim {
                Elim::App(a) => Term::App(target, q(a)),
                Elim::Fst => Term::Fst(target),
                Elim::Snd => Term::Snd(target),
                Elim::NatElim { fragment, motive, base, step } => {
                    Term::NatElim { fragment: *fragment, motive: q(motive), base: q(base), step: q(step), target }
                }
                Elim::EmptyElim { fragment, motive } => {
                    Term::EmptyElim { fragment: *fragment, motive: q(motive), target }
                }
                Elim::SumElim { fragment, motive, left, right } => {
                    Term::SumElim { fragment: *fragment, motive: q(motive), left: q(left), right: q(right), target }
                }
                Elim::IdElim { fragment, motive, refl_case, lhs, rhs } => Term::IdElim {
                    fragment: *fragment,
                    motive: q(motive),
                    refl_case: q(refl_case),
                    lhs: q(lhs),
                    rhs: q(rhs),
                    proof: target,
                },
            }
        })
    }

    /// `quote ∘ eval` in the identity environment of the given depth.
    pub fn normalize(&self, depth: usize, term: &Term) -> Term {
        self.quote(depth, &self.eval(&Env::identity(depth), term))
    }
}
