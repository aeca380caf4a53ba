use std::cell::Cell;
use std::sync::Arc;

use crate::normalizer::value::*;
use crate::signature::Signature;
use crate::syntax::{Fragment, Hint, Sort, Term};

/// A limit on how many times definitions may be unfolded.
#[derive(Debug, Default)]
pub struct Budget {
    remaining: Cell<Option<u64>>,
    exhausted: Cell<bool>,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Budget {
        Budget { remaining: Cell::new(limit), exhausted: Cell::new(false) }
    }

    fn take(&self) -> bool {
        match self.remaining.get() {
            None => true,
            Some(0) => {
                self.exhausted.set(true);
                false
            }
            Some(n) => {
                self.remaining.set(Some(n - 1));
                true
            }
        }
    }

    /// Whether some unfolding was refused since the last reset.
    pub fn exhausted(&self) -> bool {
        self.exhausted.get()
    }

    pub fn reset(&self, limit: Option<u64>) {
        self.remaining.set(limit);
        self.exhausted.set(false);
    }
}

/// Evaluation against a fixed signature.
#[derive(Clone, Copy)]
pub struct Machine<'s> {
    pub sig: &'s Signature,
    budget: Option<&'s Budget>,
}

fn val(v: Value) -> Val {
    Arc::new(v)
}

impl<'s> Machine<'s> {
    pub fn new(sig: &'s Signature) -> Machine<'s> {
        Machine { sig, budget: None }
    }

    pub fn with_budget(sig: &'s Signature, budget: &'s Budget) -> Machine<'s> {
        Machine { sig, budget: Some(budget) }
    }

    pub fn eval(&self, env: &Env, term: &Term) -> Val {
        match term {
            Term::Var(i) => env
                .get(*i)
                .unwrap_or_else(|| panic!("variable {i} is not bound in an environment of length {}", env.len()))
                .clone(),
            Term::Const(name) => match self.sig.get(name).and_then(|entry| entry.body.as_ref()) {
                Some((_, value)) if self.budget.is_none_or(Budget::take) => value.clone(),
                _ => Value::constant(name.clone()),
            },
            Term::Univ(sort) => val(Value::Univ(*sort)),
            Term::Pi(h, a, b) => val(Value::Pi(h.clone(), self.eval(env, a), self.closure(env, b))),
            Term::Lam(h, _, body) => val(Value::Lam(h.clone(), self.closure(env, body))),
            Term::App(f, a) => self.app(&self.eval(env, f), self.eval(env, a)),
            Term::Sigma(h, a, b) => val(Value::Sigma(h.clone(), self.eval(env, a), self.closure(env, b))),
            Term::Pair(a, b) => val(Value::Pair(self.eval(env, a), self.eval(env, b))),
            Term::Fst(p) => self.fst(&self.eval(env, p)),
            Term::Snd(p) => self.snd(&self.eval(env, p)),
            Term::Unit => val(Value::Unit),
            Term::Star => val(Value::Star),
            Term::Nat(fr) => val(Value::Nat(*fr)),
            Term::Zero(fr) => val(Value::Zero(*fr)),
            Term::Succ(fr, n) => val(Value::Succ(*fr, self.eval(env, n))),
            Term::NatElim { fragment, motive, base, step, target } => {
                let elim = Elim::NatElim {
                    fragment: *fragment,
                    motive: self.eval(env, motive),
                    base: self.eval(env, base),
                    step: self.eval(env, step),
                };
                self.elim(&self.eval(env, target), elim)
            }
            Term::Empty(fr) => val(Value::Empty(*fr)),
            Term::EmptyElim { fragment, motive, target } => {
                let elim = Elim::EmptyElim { fragment: *fragment, motive: self.eval(env, motive) };
                self.elim(&self.eval(env, target), elim)
            }
            Term::Sum(fr, a, b) => val(Value::Sum(*fr, self.eval(env, a), self.eval(env, b))),
            Term::Inl(fr, a) => val(Value::Inl(*fr, self.eval(env, a))),
            Term::Inr(fr, b) => val(Value::Inr(*fr, self.eval(env, b))),
            Term::SumElim { fragment, motive, left, right, target } => {
                let elim = Elim::SumElim {
                    fragment: *fragment,
                    motive: self.eval(env, motive),
                    left: self.eval(env, left),
                    right: self.eval(env, right),
                };
                self.elim(&self.eval(env, target), elim)
            }
            Term::Id(fr, ty, a, b) => {
                val(Value::Id(*fr, ty.as_ref().map(|t| self.eval(env, t)), self.eval(env, a), self.eval(env, b)))
            }
            Term::Refl(fr) => val(Value::Refl(*fr)),
            Term::IdElim { fragment, motive, refl_case, lhs, rhs, proof } => {
                let elim = Elim::IdElim {
                    fragment: *fragment,
                    motive: self.eval(env, motive),
                    refl_case: self.eval(env, refl_case),
                    lhs: self.eval(env, lhs),
                    rhs: self.eval(env, rhs),
                };
                self.elim(&self.eval(env, proof), elim)
            }
            Term::UipS(p, q) => {
                let (p, ty) = match peel(p) {
                    Term::Ann(p, ty) => (self.eval(env, p), Some(self.eval(env, ty))),
                    p => (self.eval(env, p), None),
                };
                val(Value::Neutral(Head::Uip { ty, p, q: self.eval(env, q) }, Vec::new()))
            }
            Term::Ann(t, _) => self.eval(env, t),
            Term::Loc(_, inner) => self.eval(env, inner),
        }
    }

    fn closure(&self, env: &Env, body: &Arc<Term>) -> Closure {
        Closure { env: env.clone(), body: body.clone() }
    }

    pub fn apply(&self, closure: &Closure, arg: Val) -> Val {
        self.eval(&closure.env.push(arg), &closure.body)
    }

    pub fn app(&self, f: &Val, a: Val) -> Val {
        match &**f {
            Value::Lam(_, body) => self.apply(body, a),
            _ => self.elim(f, Elim::App(a)),
        }
    }

    pub fn apps(&self, f: &Val, args: impl IntoIterator<Item = Val>) -> Val {
        args.into_iter().fold(f.clone(), |f, a| self.app(&f, a))
    }

    pub fn fst(&self, p: &Val) -> Val {
        match &**p {
            Value::Pair(a, _) => a.clone(),
            _ => self.elim(p, Elim::Fst),
        }
    }

    pub fn snd(&self, p: &Val) -> Val {
        match &**p {
            Value::Pair(_, b) => b.clone(),
            _ => self.elim(p, Elim::Snd),
        }
    }

    /// Applies an elimination, firing the matching computation rule if
    /// the scrutinee is a constructor.
    pub fn elim(&self, scrutinee: &Val, elim: Elim) -> Val {
        match (&**scrutinee, elim) {
            (Value::Neutral(head, spine), elim) => {
                let mut spine = spine.clone();
                spine.push(elim);
                val(Value::Neutral(head.clone(), spine))
            }
            (Value::Lam(_, body), Elim::App(a)) => self.apply(body, a),
            (Value::Pair(a, _), Elim::Fst) => a.clone(),
            (Value::Pair(_, b), Elim::Snd) => b.clone(),
            (Value::Zero(_), Elim::NatElim { base, .. }) => base,
            (Value::Succ(_, n), elim @ Elim::NatElim { .. }) => {
                let Elim::NatElim { step, .. } = &elim else { unreachable!() };
                let step = step.clone();
                let rec = self.elim(n, elim);
                self.apps(&step, [n.clone(), rec])
            }
            (Value::Inl(_, a), Elim::SumElim { left, .. }) => self.app(&left, a.clone()),
            (Value::Inr(_, b), Elim::SumElim { right, .. }) => self.app(&right, b.clone()),
            (Value::Refl(_), Elim::IdElim { refl_case, lhs, .. }) => self.app(&refl_case, lhs),
            (_, elim) => val(Value::Neutral(Head::Stuck(scrutinee.clone()), vec![elim])),
        }
    }

    /// `(n : Nat) -> U`, the shape of a motive for `natElim`.
    pub fn nat_motive_type(&self, fr: Fragment) -> Val {
        self.eval(&Env::new(), &Term::pi("n", Term::Nat(fr), placeholder_univ()))
    }

    /// `(n : Nat) -> P n -> P (succ n)`.
    pub fn nat_step_type(&self, fr: Fragment, motive: &Val) -> Val {
        let ty = Term::pi(
            "n",
            Term::Nat(fr),
            Term::pi(
                "r",
                Term::app(Term::Var(1), Term::Var(0)),
                Term::app(Term::Var(2), Term::Succ(fr, Arc::new(Term::Var(1)))),
            ),
        );
        self.eval(&Env::from_values([motive.clone()]), &ty)
    }

    pub fn empty_motive_type(&self, fr: Fragment) -> Val {
        self.eval(&Env::new(), &Term::pi("e", Term::Empty(fr), placeholder_univ()))
    }

    pub fn sum_motive_type(&self, fr: Fragment, left: &Val, right: &Val) -> Val {
        let ty = Term::pi("s", Term::Sum(fr, Arc::new(Term::Var(1)), Arc::new(Term::Var(0))), placeholder_univ());
        self.eval(&Env::from_values([left.clone(), right.clone()]), &ty)
    }

    /// `(a : A) -> P (inl a)` and `(b : B) -> P (inr b)`.
    pub fn sum_branch_types(&self, fr: Fragment, left: &Val, right: &Val, motive: &Val) -> (Val, Val) {
        let env = Env::from_values([left.clone(), right.clone(), motive.clone()]);
        let branch = |dom: usize, inj: fn(Fragment, Arc<Term>) -> Term| {
            Term::pi("a", Term::Var(dom), Term::app(Term::Var(1), inj(fr, Arc::new(Term::Var(0)))))
        };
        (self.eval(&env, &branch(2, Term::Inl)), self.eval(&env, &branch(1, Term::Inr)))
    }

    /// `(x y : A) -> x = y -> U`.
    pub fn id_motive_type(&self, fr: Fragment, carrier: &Val) -> Val {
        let ty = Term::pi(
            "x",
            Term::Var(0),
            Term::pi(
                "y",
                Term::Var(1),
                Term::pi(
                    "p",
                    Term::Id(fr, Some(Arc::new(Term::Var(2))), Arc::new(Term::Var(1)), Arc::new(Term::Var(0))),
                    placeholder_univ(),
                ),
            ),
        );
        self.eval(&Env::from_values([carrier.clone()]), &ty)
    }

    /// `(x : A) -> P x x refl`.
    pub fn id_refl_type(&self, fr: Fragment, carrier: &Val, motive: &Val) -> Val {
        let ty = Term::pi("x", Term::Var(1), Term::apps(Term::Var(1), [Term::Var(0), Term::Var(0), Term::Refl(fr)]));
        self.eval(&Env::from_values([carrier.clone(), motive.clone()]), &ty)
    }

    /// A non-dependent function type between two values.
    pub fn arrow(&self, dom: Val, cod: Val) -> Val {
        let env = Env::from_values([cod]);
        val(Value::Pi(Hint::new("_"), dom, Closure { env, body: Arc::new(Term::Var(1)) }))
    }
}

/// Motive shapes only fix their binders; conversion at a universe ignores
/// which universe, so any sort serves as the codomain.
fn placeholder_univ() -> Term {
    Term::Univ(Sort::strict(0))
}

fn peel(term: &Term) -> &Term {
    match term {
        Term::Loc(_, inner) => peel(inner),
        other => other,
    }
}
