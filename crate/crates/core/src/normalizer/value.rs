use std::sync::Arc;

use crate::syntax::{Fragment, Hint, Name, Sort, TermRef};

pub type Val = Arc<Value>;

/// Weak-head normal forms. Variables are de Bruijn levels.
#[derive(Clone, Debug)]
pub enum Value {
    Univ(Sort),
    Pi(Hint, Val, Closure),
    Lam(Hint, Closure),
    Sigma(Hint, Val, Closure),
    Pair(Val, Val),
    Unit,
    Star,
    Nat(Fragment),
    Zero(Fragment),
    Succ(Fragment, Val),
    Empty(Fragment),
    Sum(Fragment, Val, Val),
    Inl(Fragment, Val),
    Inr(Fragment, Val),
    Id(Fragment, Option<Val>, Val, Val),
    Refl(Fragment),
    Neutral(Head, Vec<Elim>),
}

#[derive(Clone, Debug)]
pub enum Head {
    Var(usize),
    /// An axiom, or a definition left folded once the unfold budget ran out.
    Const(Name),
    /// `Ks p q`, with the type of `p` and `q` when elaboration recorded it.
    Uip {
        ty: Option<Val>,
        p: Val,
        q: Val,
    },
    /// An eliminator applied to a value of the wrong shape. Only ill-typed
    /// input produces this.
    Stuck(Val),
}

#[derive(Clone, Debug)]
pub enum Elim {
    App(Val),
    Fst,
    Snd,
    NatElim { fragment: Fragment, motive: Val, base: Val, step: Val },
    EmptyElim { fragment: Fragment, motive: Val },
    SumElim { fragment: Fragment, motive: Val, left: Val, right: Val },
    IdElim { fragment: Fragment, motive: Val, refl_case: Val, lhs: Val, rhs: Val },
}

impl Value {
    pub fn var(level: usize) -> Val {
        Arc::new(Value::Neutral(Head::Var(level), Vec::new()))
    }

    pub fn constant(name: Name) -> Val {
        Arc::new(Value::Neutral(Head::Const(name), Vec::new()))
    }
}

/// A term under one binder together with the environment it was met in.
#[derive(Clone, Debug)]
pub struct Closure {
    pub env: Env,
    pub body: TermRef,
}

/// Values for the free variables of a term; index 0 is the innermost.
#[derive(Clone, Debug, Default)]
pub struct Env(Option<Arc<EnvNode>>);

#[derive(Debug)]
struct EnvNode {
    head: Val,
    tail: Env,
    len: usize,
}

impl Env {
    pub fn new() -> Env {
        Env(None)
    }

    pub fn len(&self) -> usize {
        self.0.as_ref().map_or(0, |node| node.len)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn push(&self, value: Val) -> Env {
        Env(Some(Arc::new(EnvNode { head: value, tail: self.clone(), len: self.len() + 1 })))
    }

    pub fn get(&self, index: usize) -> Option<&Val> {
        let mut node = self.0.as_ref()?;
        for _ in 0..index {
            node = node.tail.0.as_ref()?;
        }
        Some(&node.head)
    }

    /// An environment binding variables `0..depth` to themselves.
    pub fn identity(depth: usize) -> Env {
        (0..depth).fold(Env::new(), |env, level| env.push(Value::var(level)))
    }

    pub fn from_values(values: impl IntoIterator<Item = Val>) -> Env {
        values.into_iter().fold(Env::new(), |env, v| env.push(v))
    }
}
