use std::sync::Arc;

use super::{Checker, Ctx, TcResult};
use crate::diagnostic::{Diagnostic, ErrorCode};
use crate::normalizer::{Closure, Val, Value};
use crate::syntax::{Fragment, Hint, Sort, Term};

fn fragment_word(fr: Fragment, fibrant: &'static str, strict: &'static str) -> &'static str {
    match fr {
        Fragment::Fibrant => fibrant,
        Fragment::Strict => strict,
    }
}

impl Checker {
    /// Infers a type for `term`, returning the elaborated term with it.
    pub fn infer(&self, ctx: &Ctx, term: &Term) -> TcResult<(Term, Val)> {
        let m = self.machine();
        match term {
            Term::Loc(span, inner) => {
                self.at(span, || self.infer(ctx, inner)).map(|(t, ty)| (Term::Loc(span.clone(), Arc::new(t)), ty))
            }
            Term::Var(i) => match ctx.depth().checked_sub(i + 1) {
                Some(level) => Ok((term.clone(), ctx.types[level].clone())),
                None => Err(self.error(ErrorCode::UnboundVariable, format!("variable #{i} is not in scope"))),
            },
            Term::Const(name) => match self.sig.get(name) {
                Some(entry) => Ok((term.clone(), entry.ty.clone())),
                None => Err(self.error(ErrorCode::UnboundVariable, format!("unknown constant `{name}`"))),
            },
            Term::Univ(sort) => Ok((term.clone(), Self::univ(sort.succ()))),
            Term::Pi(h, dom, cod) | Term::Sigma(h, dom, cod) => {
                let (dom, dom_val, s1) = self.infer_type(ctx, dom)?;
                let (cod, _, s2) = self.infer_type(&ctx.bind(h, dom_val), cod)?;
                let (dom, cod) = (Arc::new(dom), Arc::new(cod));
                let out = match term {
                    Term::Pi(..) => Term::Pi(h.clone(), dom, cod),
                    _ => Term::Sigma(h.clone(), dom, cod),
                };
                Ok((out, Self::univ(s1.join(s2))))
            }
            Term::Lam(h, Some(ann), body) => {
                let (ann, ann_val, _) = self.infer_type(ctx, ann)?;
                let inner = ctx.bind(h, ann_val.clone());
                let (body, body_ty) = self.infer(&inner, body)?;
                let cod = Closure { env: ctx.env.clone(), body: Arc::new(self.quote(&inner, &body_ty)) };
                let ty = Arc::new(Value::Pi(h.clone(), ann_val, cod));
                Ok((Term::Lam(h.clone(), Some(Arc::new(ann)), Arc::new(body)), ty))
            }
            Term::App(f, a) => {
                let (f, f_ty) = self.infer(ctx, f)?;
                let Value::Pi(_, dom, cod) = &*f_ty else {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`{}` is applied to an argument but has type `{}`, which is not a function type",
                            self.show_term(ctx, &f),
                            self.show(ctx, &f_ty)
                        ),
                    ));
                };
                let a = self.check(ctx, a, dom)?;
                let ty = m.apply(cod, self.eval(ctx, &a));
                Ok((Term::App(Arc::new(f), Arc::new(a)), ty))
            }
            Term::Pair(a, b) => {
                let (a, a_ty) = self.infer(ctx, a)?;
                let (b, b_ty) = self.infer(ctx, b)?;
                let snd = Closure { env: ctx.env.clone(), body: Arc::new(self.quote(ctx, &b_ty).shift(1, 0)) };
                let ty = Arc::new(Value::Sigma(Hint::new("_"), a_ty, snd));
                Ok((Term::Pair(Arc::new(a), Arc::new(b)), ty))
            }
            Term::Fst(p) | Term::Snd(p) => {
                let (p, p_ty) = self.infer(ctx, p)?;
                let Value::Sigma(_, fst_ty, snd_ty) = &*p_ty else {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "projection from `{}`, whose type `{}` is not a Σ-type",
                            self.show_term(ctx, &p),
                            self.show(ctx, &p_ty)
                        ),
                    ));
                };
                let p = Arc::new(p);
                if matches!(term, Term::Fst(_)) {
                    Ok((Term::Fst(p), fst_ty.clone()))
                } else {
                    let ty = m.apply(snd_ty, m.fst(&self.eval(ctx, &p)));
                    Ok((Term::Snd(p), ty))
                }
            }
            Term::Unit => Ok((Term::Unit, Self::univ(Sort::fibrant(0)))),
            Term::Star => Ok((Term::Star, Arc::new(Value::Unit))),
            Term::Nat(fr) | Term::Empty(fr) => Ok((term.clone(), Self::univ(Self::sort_of(*fr, 0)))),
            Term::Zero(fr) => Ok((term.clone(), Arc::new(Value::Nat(*fr)))),
            Term::Succ(fr, n) => {
                let nat = Arc::new(Value::Nat(*fr));
                let n = self.check(ctx, n, &nat)?;
                Ok((Term::Succ(*fr, Arc::new(n)), nat))
            }
            Term::NatElim { fragment, motive, base, step, target } => {
                let fr = *fragment;
                let (motive, sort) = self.check_family(ctx, motive, &m.nat_motive_type(fr), 1)?;
                if fr == Fragment::Fibrant && !self.mode.strong {
                    self.require_fibrant_motive("natElim", sort)?;
                }
                let motive_val = self.eval(ctx, &motive);
                let base = self.check(ctx, base, &m.app(&motive_val, Arc::new(Value::Zero(fr))))?;
                let step = self.check(ctx, step, &m.nat_step_type(fr, &motive_val))?;
                let target = self.check(ctx, target, &Arc::new(Value::Nat(fr)))?;
                let ty = m.app(&motive_val, self.eval(ctx, &target));
                let out = Term::NatElim {
                    fragment: fr,
                    motive: Arc::new(motive),
                    base: Arc::new(base),
                    step: Arc::new(step),
                    target: Arc::new(target),
                };
                Ok((out, ty))
            }
            Term::EmptyElim { fragment, motive, target } => {
                let fr = *fragment;
                let (motive, sort) = self.check_family(ctx, motive, &m.empty_motive_type(fr), 1)?;
                if fr == Fragment::Fibrant && !self.mode.strong {
                    self.require_fibrant_motive("emptyElim", sort)?;
                }
                let target = self.check(ctx, target, &Arc::new(Value::Empty(fr)))?;
                let ty = m.app(&self.eval(ctx, &motive), self.eval(ctx, &target));
                Ok((Term::EmptyElim { fragment: fr, motive: Arc::new(motive), target: Arc::new(target) }, ty))
            }
            Term::Sum(fr, a, b) => {
                let (a, _, sa) = self.infer_type(ctx, a)?;
                let (b, _, sb) = self.infer_type(ctx, b)?;
                let both_fibrant = sa.is_fibrant() && sb.is_fibrant();
                let fr = match fr {
                    Fragment::Fibrant if !both_fibrant => {
                        let (culprit, sort) = if sa.is_fibrant() { (&b, sb) } else { (&a, sa) };
                        return Err(self.error(
                            ErrorCode::FibrancyViolation,
                            format!(
                                "`+` forms a sum of types, but `{}` is a pretype in {sort}; use `+s`",
                                self.show_term(ctx, culprit)
                            ),
                        ));
                    }
                    Fragment::Strict if !(self.mode.strong && both_fibrant) => Fragment::Strict,
                    _ => Fragment::Fibrant,
                };
                let level = sa.level.max(sb.level);
                Ok((Term::Sum(fr, Arc::new(a), Arc::new(b)), Self::univ(Self::sort_of(fr, level))))
            }
            Term::SumElim { fragment, motive, left, right, target } => {
                let (target, target_ty) = self.infer(ctx, target)?;
                let Value::Sum(target_fr, a, b) = &*target_ty else {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`{}` eliminates a sum, but the target has type `{}`",
                            fragment_word(*fragment, "sumElim", "sumElimS"),
                            self.show(ctx, &target_ty)
                        ),
                    ));
                };
                let fr = if self.mode.strong { *target_fr } else { *fragment };
                if fr != *target_fr {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`{}` eliminates `{}`, but the target has type `{}`",
                            fragment_word(fr, "sumElim", "sumElimS"),
                            fragment_word(fr, "+", "+s"),
                            self.show(ctx, &target_ty)
                        ),
                    ));
                }
                let (motive, sort) = self.check_family(ctx, motive, &m.sum_motive_type(fr, a, b), 1)?;
                if fr == Fragment::Fibrant && !self.mode.strong {
                    self.require_fibrant_motive("sumElim", sort)?;
                }
                let motive_val = self.eval(ctx, &motive);
                let (left_ty, right_ty) = m.sum_branch_types(fr, a, b, &motive_val);
                let left = self.check(ctx, left, &left_ty)?;
                let right = self.check(ctx, right, &right_ty)?;
                let ty = m.app(&motive_val, self.eval(ctx, &target));
                let out = Term::SumElim {
                    fragment: fr,
                    motive: Arc::new(motive),
                    left: Arc::new(left),
                    right: Arc::new(right),
                    target: Arc::new(target),
                };
                Ok((out, ty))
            }
            Term::Id(fr, carrier, lhs, rhs) => self.infer_id(ctx, *fr, carrier.as_deref(), lhs, rhs),
            Term::IdElim { fragment, motive, refl_case, lhs, rhs, proof } => {
                self.infer_id_elim(ctx, *fragment, motive, refl_case, lhs, rhs, proof)
            }
            Term::UipS(p, q) => {
                let (p, p_ty) = self.infer(ctx, p)?;
                if !matches!(&*p_ty, Value::Id(Fragment::Strict, ..)) {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`Ks` compares proofs of a strict equality, but `{}` has type `{}`",
                            self.show_term(ctx, &p),
                            self.show(ctx, &p_ty)
                        ),
                    ));
                }
                let q = self.check(ctx, q, &p_ty)?;
                let ty =
                    Arc::new(Value::Id(Fragment::Strict, Some(p_ty.clone()), self.eval(ctx, &p), self.eval(ctx, &q)));
                let p = Term::Ann(Arc::new(p), Arc::new(self.quote(ctx, &p_ty)));
                Ok((Term::UipS(Arc::new(p), Arc::new(q)), ty))
            }
            Term::Ann(t, ty) => {
                let (ty, ty_val, _) = self.infer_type(ctx, ty)?;
                let t = self.check(ctx, t, &ty_val)?;
                Ok((Term::Ann(Arc::new(t), Arc::new(ty)), ty_val))
            }
            Term::Lam(_, None, _) | Term::Inl(..) | Term::Inr(..) | Term::Refl(_) => Err(self.error(
                ErrorCode::InferenceFailure,
                format!("cannot infer a type for `{}`; add a type annotation", self.show_term(ctx, term)),
            )),
        }
    }

    /// Infers `term` as a type: returns it elaborated, evaluated, and the
    /// least sort containing it.
    pub fn infer_type(&self, ctx: &Ctx, term: &Term) -> TcResult<(Term, Val, Sort)> {
        let (elaborated, ty) = self.infer(ctx, term)?;
        match &*ty {
            Value::Univ(sort) => {
                let value = self.eval(ctx, &elaborated);
                Ok((elaborated, value, *sort))
            }
            _ => Err(self.error(
                ErrorCode::ConversionFailure,
                format!(
                    "expected a type, but `{}` has type `{}`",
                    self.show_term(ctx, &elaborated),
                    self.show(ctx, &ty)
                ),
            )),
        }
    }

    /// Checks `term` against `expected`, returning the elaborated term.
    pub fn check(&self, ctx: &Ctx, term: &Term, expected: &Val) -> TcResult<Term> {
        let m = self.machine();
        match (term, &**expected) {
            (Term::Loc(span, inner), _) => {
                self.at(span, || self.check(ctx, inner, expected)).map(|t| Term::Loc(span.clone(), Arc::new(t)))
            }
            (Term::Lam(h, ann, body), Value::Pi(_, dom, cod)) => {
                let ann = match ann {
                    Some(ann) => {
                        let (ann, ann_val, _) = self.infer_type(ctx, ann)?;
                        if !self.conv_in(ctx).conv_type(&ann_val, dom) {
                            return Err(self
                                .error(
                                    ErrorCode::ConversionFailure,
                                    "the binder's annotation does not match the expected domain",
                                )
                                .with_terms(self.show(ctx, dom), self.show(ctx, &ann_val)));
                        }
                        Some(Arc::new(ann))
                    }
                    None => None,
                };
                let inner = ctx.bind(h, dom.clone());
                let body = self.check(&inner, body, &m.apply(cod, inner.last_var()))?;
                Ok(Term::Lam(h.clone(), ann, Arc::new(body)))
            }
            (Term::Pair(a, b), Value::Sigma(_, fst_ty, snd_ty)) => {
                let a = self.check(ctx, a, fst_ty)?;
                let b = self.check(ctx, b, &m.apply(snd_ty, self.eval(ctx, &a)))?;
                Ok(Term::Pair(Arc::new(a), Arc::new(b)))
            }
            (Term::Inl(fr, a), Value::Sum(sum_fr, left, _)) if self.injection_fits(*fr, *sum_fr) => {
                Ok(Term::Inl(*sum_fr, Arc::new(self.check(ctx, a, left)?)))
            }
            (Term::Inr(fr, b), Value::Sum(sum_fr, _, right)) if self.injection_fits(*fr, *sum_fr) => {
                Ok(Term::Inr(*sum_fr, Arc::new(self.check(ctx, b, right)?)))
            }
            (Term::Refl(fr), Value::Id(id_fr, carrier, lhs, rhs)) if fr == id_fr => {
                let mut conv = self.conv_in(ctx);
                let equal = match carrier {
                    Some(carrier) => conv.conv(lhs, rhs, carrier),
                    None => conv.conv_untyped(lhs, rhs),
                };
                if equal {
                    Ok(term.clone())
                } else {
                    Err(self
                        .error(
                            ErrorCode::ConversionFailure,
                            format!(
                                "`{}` needs both sides of `{}` to be definitionally equal",
                                fragment_word(*fr, "refl", "refls"),
                                self.show(ctx, expected)
                            ),
                        )
                        .with_terms(self.show(ctx, lhs), self.show(ctx, rhs)))
                }
            }
            (Term::Lam(..) | Term::Pair(..) | Term::Inl(..) | Term::Inr(..) | Term::Refl(_), _)
                if !matches!(term, Term::Lam(_, Some(_), _)) =>
            {
                Err(self.error(
                    ErrorCode::ConversionFailure,
                    format!("`{}` cannot have type `{}`", self.show_term(ctx, term), self.show(ctx, expected)),
                ))
            }
            _ => {
                let (elaborated, actual) = self.infer(ctx, term)?;
                if self.conv_in(ctx).subtype(&actual, expected) {
                    Ok(elaborated)
                } else {
                    Err(self.mismatch(ctx, &elaborated, expected, &actual))
                }
            }
        }
    }

    fn injection_fits(&self, injection: Fragment, sum: Fragment) -> bool {
        injection == sum || self.mode.strong
    }

    /// Explains why `actual` is not a subtype of `expected`.
    fn mismatch(&self, ctx: &Ctx, term: &Term, expected: &Val, actual: &Val) -> Diagnostic {
        let shown = |v: &Val| self.show(ctx, v);
        let (code, message) = match self.codomain_sorts(ctx, expected, actual) {
            Some((want, got)) if want.fragment == Fragment::Fibrant && got.fragment == Fragment::Strict => (
                ErrorCode::FibrancyViolation,
                format!(
                    "`{}` is a pretype in {got}, but a fibrant type in {want} is required",
                    self.show_term(ctx, term)
                ),
            ),
            Some((want, got)) => (
                ErrorCode::UniverseError,
                format!("`{}` lives in {got}, which does not fit in {want}", self.show_term(ctx, term)),
            ),
            None => (ErrorCode::ConversionFailure, format!("`{}` has the wrong type", self.show_term(ctx, term))),
        };
        self.error(code, message).with_terms(shown(expected), shown(actual))
    }

    /// When both types end, after matching binders, in universes, the two
    /// sorts.
    fn codomain_sorts(&self, ctx: &Ctx, expected: &Val, actual: &Val) -> Option<(Sort, Sort)> {
        let m = self.machine();
        match (&**expected, &**actual) {
            (Value::Univ(want), Value::Univ(got)) => Some((*want, *got)),
            (Value::Pi(h, d1, c1), Value::Pi(_, d2, c2)) if self.conv_in(ctx).conv_type(d1, d2) => {
                let inner = ctx.bind(h, d1.clone());
                let x = inner.last_var();
                self.codomain_sorts(&inner, &m.apply(c1, x.clone()), &m.apply(c2, x))
            }
            _ => None,
        }
    }

    fn require_fibrant_motive(&self, eliminator: &str, sort: Sort) -> TcResult<()> {
        if sort.is_fibrant() {
            Ok(())
        } else {
            Err(self.error(
                ErrorCode::NonFibrantMotive,
                format!(
                    "`{eliminator}` can only eliminate into a family of fibrant types, but the motive lands in {sort}"
                ),
            ))
        }
    }

    /// Checks a motive against the binders of `shape` (a Π-telescope of
    /// `arity` arguments) and returns it with the sort of its values.
    pub fn check_family(&self, ctx: &Ctx, motive: &Term, shape: &Val, arity: usize) -> TcResult<(Term, Sort)> {
        if arity == 0 {
            return self.infer_type(ctx, motive).map(|(t, _, sort)| (t, sort));
        }
        let m = self.machine();
        match (motive, &**shape) {
            (Term::Loc(span, inner), _) => self
                .at(span, || self.check_family(ctx, inner, shape, arity))
                .map(|(t, sort)| (Term::Loc(span.clone(), Arc::new(t)), sort)),
            (Term::Lam(h, ann, body), Value::Pi(_, dom, cod)) => {
                let ann = match ann {
                    Some(ann) => {
                        let (ann, ann_val, _) = self.infer_type(ctx, ann)?;
                        if !self.conv_in(ctx).conv_type(&ann_val, dom) {
                            return Err(self
                                .error(ErrorCode::ConversionFailure, "the motive's binder has the wrong type")
                                .with_terms(self.show(ctx, dom), self.show(ctx, &ann_val)));
                        }
                        Some(Arc::new(ann))
                    }
                    None => None,
                };
                let inner = ctx.bind(h, dom.clone());
                let (body, sort) = self.check_family(&inner, body, &m.apply(cod, inner.last_var()), arity - 1)?;
                Ok((Term::Lam(h.clone(), ann, Arc::new(body)), sort))
            }
            _ => {
                let (elaborated, ty) = self.infer(ctx, motive)?;
                let sort = self.family_codomain(ctx, &ty, shape, arity).ok_or_else(|| {
                    self.error(
                        ErrorCode::ConversionFailure,
                        format!("`{}` is not a type family of the required shape", self.show_term(ctx, &elaborated)),
                    )
                    .with_terms(self.show(ctx, shape), self.show(ctx, &ty))
                })?;
                Ok((elaborated, sort))
            }
        }
    }

    fn family_codomain(&self, ctx: &Ctx, ty: &Val, shape: &Val, arity: usize) -> Option<Sort> {
        let m = self.machine();
        if arity == 0 {
            return match &**ty {
                Value::Univ(sort) => Some(*sort),
                _ => None,
            };
        }
        match (&**ty, &**shape) {
            (Value::Pi(h, dom, cod), Value::Pi(_, want, shape_cod)) if self.conv_in(ctx).conv_type(want, dom) => {
                let inner = ctx.bind(h, dom.clone());
                let x = inner.last_var();
                self.family_codomain(&inner, &m.apply(cod, x.clone()), &m.apply(shape_cod, x), arity - 1)
            }
            _ => None,
        }
    }

    fn infer_id(
        &self,
        ctx: &Ctx,
        fr: Fragment,
        carrier: Option<&Term>,
        lhs: &Term,
        rhs: &Term,
    ) -> TcResult<(Term, Val)> {
        let (carrier, carrier_val, sort, lhs, rhs) = match carrier {
            Some(carrier) => {
                let (carrier, carrier_val, sort) = self.infer_type(ctx, carrier)?;
                let lhs = self.check(ctx, lhs, &carrier_val)?;
                let rhs = self.check(ctx, rhs, &carrier_val)?;
                (carrier, carrier_val, sort, lhs, rhs)
            }
            None => {
                let (lhs, rhs, ty) = match self.infer(ctx, lhs) {
                    Ok((lhs, ty)) => (lhs, self.check(ctx, rhs, &ty)?, ty),
                    Err(e) if e.code == ErrorCode::InferenceFailure => {
                        let (rhs, ty) = self.infer(ctx, rhs).map_err(|_| e)?;
                        (self.check(ctx, lhs, &ty)?, rhs, ty)
                    }
                    Err(e) => return Err(e),
                };
                let (carrier, _, sort) = self.infer_type(ctx, &self.quote(ctx, &ty))?;
                (carrier, ty, sort, lhs, rhs)
            }
        };
        if fr == Fragment::Fibrant && !sort.is_fibrant() {
            return Err(self.error(
                ErrorCode::NonFibrantEqualityFormation,
                format!(
                    "`=` relates elements of fibrant types only, but `{}` is a pretype in {sort}; use `=s`",
                    self.show(ctx, &carrier_val)
                ),
            ));
        }
        let out = Term::Id(fr, Some(Arc::new(carrier)), Arc::new(lhs), Arc::new(rhs));
        Ok((out, Self::univ(Self::sort_of(fr, sort.level))))
    }

    #[allow(clippy::too_many_arguments)]
    fn infer_id_elim(
        &self,
        ctx: &Ctx,
        fr: Fragment,
        motive: &Term,
        refl_case: &Term,
        lhs: &Term,
        rhs: &Term,
        proof: &Term,
    ) -> TcResult<(Term, Val)> {
        let m = self.machine();
        let name = fragment_word(fr, "J", "Js");
        let (proof, lhs, rhs, carrier) = match self.infer(ctx, proof) {
            Ok((proof, proof_ty)) => {
                let Value::Id(proof_fr, Some(carrier), x, y) = &*proof_ty else {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`{name}` needs an equality proof, but got one of type `{}`",
                            self.show(ctx, &proof_ty)
                        ),
                    ));
                };
                if *proof_fr != fr {
                    return Err(self.error(
                        ErrorCode::ConversionFailure,
                        format!(
                            "`{name}` eliminates `{}`, but the proof has type `{}`",
                            fragment_word(fr, "=", "=s"),
                            self.show(ctx, &proof_ty)
                        ),
                    ));
                }
                let lhs = self.check(ctx, lhs, carrier)?;
                let rhs = self.check(ctx, rhs, carrier)?;
                for (given, want) in [(&lhs, x), (&rhs, y)] {
                    let given_val = self.eval(ctx, given);
                    if !self.conv_in(ctx).conv(&given_val, want, carrier) {
                        return Err(self
                            .error(
                                ErrorCode::ConversionFailure,
                                format!("`{name}`: endpoint does not match the proof's type"),
                            )
                            .with_terms(self.show(ctx, want), self.show(ctx, &given_val)));
                    }
                }
                (proof, lhs, rhs, carrier.clone())
            }
            Err(e) if e.code == ErrorCode::InferenceFailure => {
                let (lhs, carrier) = self.infer(ctx, lhs)?;
                let rhs = self.check(ctx, rhs, &carrier)?;
                let id_ty = Arc::new(Value::Id(fr, Some(carrier.clone()), self.eval(ctx, &lhs), self.eval(ctx, &rhs)));
                let proof = self.check(ctx, proof, &id_ty)?;
                (proof, lhs, rhs, carrier)
            }
            Err(e) => return Err(e),
        };
        let (motive, sort) = self.check_family(ctx, motive, &m.id_motive_type(fr, &carrier), 3)?;
        if fr == Fragment::Fibrant {
            self.require_fibrant_motive(name, sort)?;
        }
        let motive_val = self.eval(ctx, &motive);
        let refl_case = self.check(ctx, refl_case, &m.id_refl_type(fr, &carrier, &motive_val))?;
        let ty = m.apps(&motive_val, [self.eval(ctx, &lhs), self.eval(ctx, &rhs), self.eval(ctx, &proof)]);
        let out = Term::IdElim {
            fragment: fr,
            motive: Arc::new(motive),
            refl_case: Arc::new(refl_case),
            lhs: Arc::new(lhs),
            rhs: Arc::new(rhs),
            proof: Arc::new(proof),
        };
        Ok((out, ty))
    }
}
