//! Definitional equality.
//!
//! Comparison is type-directed so that η for Π, Σ and Unit (and, when
//! enabled, irrelevance of strict equality proofs) can be decided. Inside
//! neutral spines the types of later arguments are recovered from the
//! head's type; where that is not possible the comparison falls back to an
//! untyped structural check.

use std::sync::Arc;

use crate::normalizer::eval::Machine;
use crate::normalizer::value::*;
use crate::syntax::{sort_sub, Fragment};

pub struct Conv<'m> {
    m: Machine<'m>,
    /// Types of the variables in scope, by level; `None` when unknown.
    types: Vec<Option<Val>>,
    proof_irrelevance: bool,
}

impl<'m> Conv<'m> {
    pub fn new(m: Machine<'m>, types: impl IntoIterator<Item = Val>, proof_irrelevance: bool) -> Conv<'m> {
        Conv { m, types: types.into_iter().map(Some).collect(), proof_irrelevance }
    }

    pub fn depth(&self) -> usize {
        self.types.len()
    }

    fn under<T>(&mut self, ty: Option<Val>, f: impl FnOnce(&mut Self, Val) -> T) -> T {
        let var = Value::var(self.types.len());
        self.types.push(ty);
        let out = f(self, var);
        self.types.pop();
        out
    }

    /// Whether `a` and `b`, both of type `ty`, are definitionally equal.
    pub fn conv(&mut self, a: &Val, b: &Val, ty: &Val) -> bool {
        let m = self.m;
        match &**ty {
            Value::Pi(_, dom, cod) => self.under(Some(dom.clone()), |this, x| {
                let cod = m.apply(cod, x.clone());
                this.conv(&m.app(a, x.clone()), &m.app(b, x), &cod)
            }),
            Value::Sigma(_, fst_ty, snd_ty) => {
                let (a1, b1) = (m.fst(a), m.fst(b));
                self.conv(&a1, &b1, fst_ty) && {
                    let snd_ty = m.apply(snd_ty, a1);
                    self.conv(&m.snd(a), &m.snd(b), &snd_ty)
                }
            }
            Value::Unit => true,
            Value::Id(Fragment::Strict, ..) if self.proof_irrelevance => true,
            Value::Univ(_) => self.conv_type(a, b),
            _ => self.conv_structural(a, b, ty),
        }
    }

    fn conv_structural(&mut self, a: &Val, b: &Val, ty: &Val) -> bool {
        match (&**a, &**b) {
            (Value::Zero(f1), Value::Zero(f2)) => f1 == f2,
            (Value::Succ(f1, n1), Value::Succ(f2, n2)) => f1 == f2 && self.conv(n1, n2, ty),
            (Value::Inl(f1, x1), Value::Inl(f2, x2)) => {
                f1 == f2
                    && match &**ty {
                        Value::Sum(_, left, _) => self.conv(x1, x2, left),
                        _ => self.conv_untyped(x1, x2),
                    }
            }
            (Value::Inr(f1, x1), Value::Inr(f2, x2)) => {
                f1 == f2
                    && match &**ty {
                        Value::Sum(_, _, right) => self.conv(x1, x2, right),
                        _ => self.conv_untyped(x1, x2),
                    }
            }
            (Value::Refl(f1), Value::Refl(f2)) => f1 == f2,
            (Value::Neutral(h1, s1), Value::Neutral(h2, s2)) => self.conv_neutral(h1, s1, h2, s2),
            _ => self.conv_untyped(a, b),
        }
    }

    /// Equality of two types (elements of some universe).
    pub fn conv_type(&mut self, a: &Val, b: &Val) -> bool {
        let m = self.m;
        match (&**a, &**b) {
            (Value::Univ(s1), Value::Univ(s2)) => s1 == s2,
            (Value::Pi(_, d1, c1), Value::Pi(_, d2, c2)) | (Value::Sigma(_, d1, c1), Value::Sigma(_, d2, c2)) => {
                self.conv_type(d1, d2)
                    && self.under(Some(d1.clone()), |this, x| this.conv_type(&m.apply(c1, x.clone()), &m.apply(c2, x)))
            }
            (Value::Unit, Value::Unit) => true,
            (Value::Nat(f1), Value::Nat(f2)) | (Value::Empty(f1), Value::Empty(f2)) => f1 == f2,
            (Value::Sum(f1, a1, b1), Value::Sum(f2, a2, b2)) => {
                f1 == f2 && self.conv_type(a1, a2) && self.conv_type(b1, b2)
            }
            (Value::Id(f1, t1, x1, y1), Value::Id(f2, t2, x2, y2)) => {
                f1 == f2
                    && match (t1, t2) {
                        (Some(t1), Some(t2)) => {
                            self.conv_type(t1, t2) && self.conv(x1, x2, t1) && self.conv(y1, y2, t1)
                        }
                        (Some(t), None) | (None, Some(t)) => self.conv(x1, x2, t) && self.conv(y1, y2, t),
                        (None, None) => self.conv_untyped(x1, x2) && self.conv_untyped(y1, y2),
                    }
            }
            (Value::Neutral(h1, s1), Value::Neutral(h2, s2)) => self.conv_neutral(h1, s1, h2, s2),
            _ => false,
        }
    }

    /// Subtyping: universe cumulativity, covariant in Π codomains and Σ
    /// components, conversion elsewhere.
    pub fn subtype(&mut self, a: &Val, b: &Val) -> bool {
        let m = self.m;
        match (&**a, &**b) {
            (Value::Univ(s1), Value::Univ(s2)) => sort_sub(*s1, *s2),
            (Value::Pi(_, d1, c1), Value::Pi(_, d2, c2)) => {
                self.conv_type(d1, d2)
                    && self.under(Some(d1.clone()), |this, x| this.subtype(&m.apply(c1, x.clone()), &m.apply(c2, x)))
            }
            (Value::Sigma(_, d1, c1), Value::Sigma(_, d2, c2)) => {
                self.subtype(d1, d2)
                    && self.under(Some(d1.clone()), |this, x| this.subtype(&m.apply(c1, x.clone()), &m.apply(c2, x)))
            }
            _ => self.conv_type(a, b),
        }
    }

    /// Structural comparison without type information.
    pub fn conv_untyped(&mut self, a: &Val, b: &Val) -> bool {
        let m = self.m;
        match (&**a, &**b) {
            (Value::Lam(..), _) | (_, Value::Lam(..)) => {
                self.under(None, |this, x| this.conv_untyped(&m.app(a, x.clone()), &m.app(b, x)))
            }
            (Value::Pair(..), _) | (_, Value::Pair(..)) => {
                self.conv_untyped(&m.fst(a), &m.fst(b)) && self.conv_untyped(&m.snd(a), &m.snd(b))
            }
            (Value::Star, Value::Star) => true,
            (Value::Zero(f1), Value::Zero(f2)) | (Value::Refl(f1), Value::Refl(f2)) => f1 == f2,
            (Value::Succ(f1, x1), Value::Succ(f2, x2))
            | (Value::Inl(f1, x1), Value::Inl(f2, x2))
            | (Value::Inr(f1, x1), Value::Inr(f2, x2)) => f1 == f2 && self.conv_untyped(x1, x2),
            (Value::Neutral(h1, s1), Value::Neutral(h2, s2)) => self.conv_neutral(h1, s1, h2, s2),
            _ => self.conv_type(a, b),
        }
    }

    fn head_type(&mut self, h1: &Head, h2: &Head) -> Result<Option<Val>, ()> {
        match (h1, h2) {
            (Head::Var(l1), Head::Var(l2)) if l1 == l2 => Ok(self.types.get(*l1).cloned().flatten()),
            (Head::Const(c1), Head::Const(c2)) if c1 == c2 => Ok(self.m.sig.get(c1).map(|e| e.ty.clone())),
            (Head::Uip { ty: t1, p: p1, q: q1 }, Head::Uip { ty: t2, p: p2, q: q2 }) => {
                let ty = t1.clone().or_else(|| t2.clone());
                let same = match &ty {
                    Some(ty) => self.conv(p1, p2, ty) && self.conv(q1, q2, ty),
                    None => self.conv_untyped(p1, p2) && self.conv_untyped(q1, q2),
                };
                if !same {
                    return Err(());
                }
                Ok(ty.map(|ty| Arc::new(Value::Id(Fragment::Strict, Some(ty), p1.clone(), q1.clone()))))
            }
            (Head::Stuck(v1), Head::Stuck(v2)) if self.conv_untyped(v1, v2) => Ok(None),
            _ => Err(()),
        }
    }

    fn conv_neutral(&mut self, h1: &Head, s1: &[Elim], h2: &Head, s2: &[Elim]) -> bool {
        if s1.len() != s2.len() {
            return false;
        }
        let Ok(mut ty) = self.head_type(h1, h2) else { return false };
        let m = self.m;
        for (i, (e1, e2)) in s1.iter().zip(s2).enumerate() {
            let so_far = || Arc::new(Value::Neutral(h1.clone(), s1[..i].to_vec()));
            let ty_known = ty.take();
            let next = match (e1, e2) {
                (Elim::App(a1), Elim::App(a2)) => match ty_known.as_deref() {
                    Some(Value::Pi(_, dom, cod)) => {
                        if !self.conv(a1, a2, dom) {
                            return false;
                        }
                        Some(m.apply(cod, a1.clone()))
                    }
                    _ => {
                        if !self.conv_untyped(a1, a2) {
                            return false;
                        }
                        None
                    }
                },
                (Elim::Fst, Elim::Fst) => match ty_known.as_deref() {
                    Some(Value::Sigma(_, a, _)) => Some(a.clone()),
                    _ => None,
                },
                (Elim::Snd, Elim::Snd) => match ty_known.as_deref() {
                    Some(Value::Sigma(_, _, b)) => Some(m.apply(b, m.fst(&so_far()))),
                    _ => None,
                },
                (
                    Elim::NatElim { fragment: f1, motive: m1, base: b1, step: st1 },
                    Elim::NatElim { fragment: f2, motive: m2, base: b2, step: st2 },
                ) => {
                    let same = f1 == f2
                        && self.conv(m1, m2, &m.nat_motive_type(*f1))
                        && self.conv(b1, b2, &m.app(m1, Arc::new(Value::Zero(*f1))))
                        && self.conv(st1, st2, &m.nat_step_type(*f1, m1));
                    if !same {
                        return false;
                    }
                    Some(m.app(m1, so_far()))
                }
                (Elim::EmptyElim { fragment: f1, motive: m1 }, Elim::EmptyElim { fragment: f2, motive: m2 }) => {
                    if f1 != f2 || !self.conv(m1, m2, &m.empty_motive_type(*f1)) {
                        return false;
                    }
                    Some(m.app(m1, so_far()))
                }
                (
                    Elim::SumElim { fragment: f1, motive: m1, left: l1, right: r1 },
                    Elim::SumElim { fragment: f2, motive: m2, left: l2, right: r2 },
                ) => {
                    if f1 != f2 {
                        return false;
                    }
                    let same = match ty_known.as_deref() {
                        Some(Value::Sum(fr, a, b)) => {
                            let (lt, rt) = m.sum_branch_types(*fr, a, b, m1);
                            self.conv(m1, m2, &m.sum_motive_type(*fr, a, b))
                                && self.conv(l1, l2, &lt)
                                && self.conv(r1, r2, &rt)
                        }
                        _ => self.conv_untyped(m1, m2) && self.conv_untyped(l1, l2) && self.conv_untyped(r1, r2),
                    };
                    if !same {
                        return false;
                    }
                    Some(m.app(m1, so_far()))
                }
                (
                    Elim::IdElim { fragment: f1, motive: m1, refl_case: d1, lhs: x1, rhs: y1 },
                    Elim::IdElim { fragment: f2, motive: m2, refl_case: d2, lhs: x2, rhs: y2 },
                ) => {
                    if f1 != f2 {
                        return false;
                    }
                    let same = match ty_known.as_deref() {
                        Some(Value::Id(_, Some(carrier), _, _)) => {
                            self.conv(x1, x2, carrier)
                                && self.conv(y1, y2, carrier)
                                && self.conv(m1, m2, &m.id_motive_type(*f1, carrier))
                                && self.conv(d1, d2, &m.id_refl_type(*f1, carrier, m1))
                        }
                        _ => {
                            self.conv_untyped(x1, x2)
                                && self.conv_untyped(y1, y2)
                                && self.conv_untyped(m1, m2)
                                && self.conv_untyped(d1, d2)
                        }
                    };
                    if !same {
                        return false;
                    }
                    Some(m.apps(m1, [x1.clone(), y1.clone(), so_far()]))
                }
                _ => return false,
            };
            ty = next;
        }
        true
    }
}
