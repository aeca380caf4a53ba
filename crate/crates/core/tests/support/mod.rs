//! Term generators and the property suite, shared by the `properties` and
//! `acceptance` test targets.

#![allow(dead_code)]

pub mod oracle;

use std::rc::Rc;
use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use tltt_core::normalizer::Val;
use tltt_core::parser::parse_term;
use tltt_core::pretty::pretty_print;
use tltt_core::syntax::{alpha_eq, sort_sub, Fragment, Hint, Name, Sort, Term};
use tltt_core::typechecker::{merge_strict_formers, Checker, Ctx, Mode};

pub const CASES: u32 = 1000;

/// Closed types of the generated fragment.
#[derive(Clone, Debug, PartialEq)]
pub enum Ty {
    Nat(Fragment),
    Unit,
    Arrow(Box<Ty>, Box<Ty>),
    Prod(Box<Ty>, Box<Ty>),
    Sum(Fragment, Box<Ty>, Box<Ty>),
    /// `k = k` or `ks =s ks`.
    Refl(Fragment, u64),
}

impl Ty {
    pub fn is_fibrant(&self) -> bool {
        match self {
            Ty::Nat(fr) | Ty::Sum(fr, ..) | Ty::Refl(fr, _) => *fr == Fragment::Fibrant,
            Ty::Unit => true,
            Ty::Arrow(a, b) | Ty::Prod(a, b) => a.is_fibrant() && b.is_fibrant(),
        }
    }

    /// Makes a fibrant sum strict when a summand is not fibrant.
    pub fn fixed(self) -> Ty {
        match self {
            Ty::Arrow(a, b) => Ty::Arrow(Box::new(a.fixed()), Box::new(b.fixed())),
            Ty::Prod(a, b) => Ty::Prod(Box::new(a.fixed()), Box::new(b.fixed())),
            Ty::Sum(fr, a, b) => {
                let (a, b) = (a.fixed(), b.fixed());
                let fr = if a.is_fibrant() && b.is_fibrant() { fr } else { Fragment::Strict };
                Ty::Sum(fr, Box::new(a), Box::new(b))
            }
            other => other,
        }
    }

    pub fn term(&self) -> Term {
        match self {
            Ty::Nat(fr) => Term::Nat(*fr),
            Ty::Unit => Term::Unit,
            Ty::Arrow(a, b) => Term::arrow(a.term(), b.term()),
            Ty::Prod(a, b) => Term::sigma("_", a.term(), b.term()),
            Ty::Sum(fr, a, b) => Term::Sum(*fr, Arc::new(a.term()), Arc::new(b.term())),
            Ty::Refl(fr, k) => Term::Id(
                *fr,
                Some(Arc::new(Term::Nat(*fr))),
                Arc::new(Term::numeral(*fr, *k)),
                Arc::new(Term::numeral(*fr, *k)),
            ),
        }
    }
}

fn arb_fragment() -> impl Strategy<Value = Fragment> {
    prop_oneof![Just(Fragment::Fibrant), Just(Fragment::Strict)]
}

/// Types whose sums may mix fibrant and strict summands.
pub fn arb_raw_ty() -> BoxedStrategy<Ty> {
    let leaf = prop_oneof![
        arb_fragment().prop_map(Ty::Nat),
        Just(Ty::Unit),
        (arb_fragment(), 0u64..3).prop_map(|(fr, k)| Ty::Refl(fr, k)),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ty::Arrow(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ty::Prod(Box::new(a), Box::new(b))),
            (arb_fragment(), inner.clone(), inner).prop_map(|(fr, a, b)| Ty::Sum(fr, Box::new(a), Box::new(b))),
        ]
    })
    .boxed()
}

/// Well-formed types.
pub fn arb_ty() -> BoxedStrategy<Ty> {
    arb_raw_ty().prop_map(Ty::fixed).boxed()
}

fn small_ty() -> BoxedStrategy<Ty> {
    prop_oneof![
        3 => arb_fragment().prop_map(Ty::Nat),
        1 => Just(Ty::Unit),
        1 => Just(Ty::Sum(Fragment::Fibrant, Box::new(Ty::Unit), Box::new(Ty::Nat(Fragment::Fibrant)))),
        1 => Just(Ty::Prod(Box::new(Ty::Nat(Fragment::Strict)), Box::new(Ty::Unit))),
        1 => Just(Ty::Arrow(Box::new(Ty::Nat(Fragment::Fibrant)), Box::new(Ty::Nat(Fragment::Fibrant)))),
    ]
    .boxed()
}

fn ann(t: Term, ty: &Ty) -> Term {
    Term::Ann(Arc::new(t), Arc::new(ty.term()))
}

fn lam(hint: &str, body: Term) -> Term {
    Term::lam(hint, body)
}

/// Canonical inhabitant built from introduction forms only.
fn canonical(ty: &Ty) -> Term {
    match ty {
        Ty::Nat(fr) => Term::Zero(*fr),
        Ty::Unit => Term::Star,
        Ty::Arrow(_, b) => lam("x", canonical(b)),
        Ty::Prod(a, b) => Term::pair(canonical(a), canonical(b)),
        Ty::Sum(fr, a, _) => Term::Inl(*fr, Arc::new(canonical(a))),
        Ty::Refl(fr, _) => Term::Refl(*fr),
    }
}

/// Terms of type `ty` in a context of closed types, innermost last.
pub fn gen(ctx: Rc<Vec<Ty>>, ty: Ty, depth: u32) -> BoxedStrategy<Term> {
    let vars: Vec<Term> =
        ctx.iter().enumerate().filter(|(_, t)| **t == ty).map(|(i, _)| Term::Var(ctx.len() - 1 - i)).collect();
    let mut leaves: Vec<BoxedStrategy<Term>> = vec![Just(canonical(&ty)).boxed()];
    if !vars.is_empty() {
        leaves.push(proptest::sample::select(vars).boxed());
    }
    if depth == 0 {
        return proptest::strategy::Union::new(leaves).boxed();
    }
    let d = depth - 1;
    let mut options = leaves;

    // Introduction forms.
    options.push(match &ty {
        Ty::Nat(fr) => {
            let fr = *fr;
            gen(ctx.clone(), ty.clone(), d).prop_map(move |t| Term::Succ(fr, Arc::new(t))).boxed()
        }
        Ty::Arrow(a, b) => {
            let mut inner = (*ctx).clone();
            inner.push((**a).clone());
            gen(Rc::new(inner), (**b).clone(), d).prop_map(|body| lam("x", body)).boxed()
        }
        Ty::Prod(a, b) => (gen(ctx.clone(), (**a).clone(), d), gen(ctx.clone(), (**b).clone(), d))
            .prop_map(|(x, y)| Term::pair(x, y))
            .boxed(),
        Ty::Sum(fr, a, b) => {
            let fr = *fr;
            prop_oneof![
                gen(ctx.clone(), (**a).clone(), d).prop_map(move |t| Term::Inl(fr, Arc::new(t))),
                gen(ctx.clone(), (**b).clone(), d).prop_map(move |t| Term::Inr(fr, Arc::new(t))),
            ]
            .boxed()
        }
        _ => Just(canonical(&ty)).boxed(),
    });

    // Redexes and eliminations.
    let (c1, t1) = (ctx.clone(), ty.clone());
    options.push(
        small_ty()
            .prop_flat_map(move |a| {
                let fty = Ty::Arrow(Box::new(a.clone()), Box::new(t1.clone()));
                (gen(c1.clone(), fty.clone(), d), gen(c1.clone(), a, d))
                    .prop_map(move |(f, x)| Term::app(ann(f, &fty), x))
            })
            .boxed(),
    );
    let (c2, t2) = (ctx.clone(), ty.clone());
    options.push(
        (small_ty(), any::<bool>())
            .prop_flat_map(move |(other, first)| {
                let pty = if first {
                    Ty::Prod(Box::new(t2.clone()), Box::new(other))
                } else {
                    Ty::Prod(Box::new(other), Box::new(t2.clone()))
                };
                gen(c2.clone(), pty.clone(), d).prop_map(move |p| {
                    let p = Arc::new(ann(p, &pty));
                    if first {
                        Term::Fst(p)
                    } else {
                        Term::Snd(p)
                    }
                })
            })
            .boxed(),
    );
    let (c3, t3) = (ctx.clone(), ty.clone());
    let fibrant = ty.is_fibrant();
    options.push(
        arb_fragment()
            .prop_map(move |fr| if fibrant { fr } else { Fragment::Strict })
            .prop_flat_map(move |fr| {
                let mut inner = (*c3).clone();
                inner.push(Ty::Nat(fr));
                inner.push(t3.clone());
                let motive = lam("_", t3.term());
                (gen(c3.clone(), t3.clone(), d), gen(Rc::new(inner), t3.clone(), d), gen(c3.clone(), Ty::Nat(fr), d))
                    .prop_map(move |(base, step, target)| Term::NatElim {
                        fragment: fr,
                        motive: Arc::new(motive.clone()),
                        base: Arc::new(base),
                        step: Arc::new(lam("n", lam("r", step))),
                        target: Arc::new(ann(target, &Ty::Nat(fr))),
                    })
            })
            .boxed(),
    );
    let (c4, t4) = (ctx.clone(), ty.clone());
    options.push(
        (small_ty(), small_ty(), arb_fragment())
            .prop_map(move |(a, b, fr)| {
                let fr = if fibrant && a.is_fibrant() && b.is_fibrant() { fr } else { Fragment::Strict };
                Ty::Sum(fr, Box::new(a), Box::new(b))
            })
            .prop_flat_map(move |sty| {
                let Ty::Sum(fr, a, b) = sty.clone() else { unreachable!() };
                let mut left = (*c4).clone();
                left.push(*a);
                let mut right = (*c4).clone();
                right.push(*b);
                let motive = lam("_", t4.term());
                (gen(Rc::new(left), t4.clone(), d), gen(Rc::new(right), t4.clone(), d), gen(c4.clone(), sty.clone(), d))
                    .prop_map(move |(l, r, target)| Term::SumElim {
                        fragment: fr,
                        motive: Arc::new(motive.clone()),
                        left: Arc::new(lam("x", l)),
                        right: Arc::new(lam("y", r)),
                        target: Arc::new(ann(target, &sty)),
                    })
            })
            .boxed(),
    );
    proptest::strategy::Union::new(options).boxed()
}

/// The free variables every generated open term may use.
pub fn base_ctx() -> Vec<Ty> {
    vec![
        Ty::Nat(Fragment::Fibrant),
        Ty::Arrow(Box::new(Ty::Nat(Fragment::Fibrant)), Box::new(Ty::Nat(Fragment::Fibrant))),
        Ty::Sum(Fragment::Fibrant, Box::new(Ty::Unit), Box::new(Ty::Unit)),
        Ty::Nat(Fragment::Strict),
        Ty::Prod(Box::new(Ty::Nat(Fragment::Strict)), Box::new(Ty::Unit)),
    ]
}

/// A type together with an open term of that type.
pub fn typed_term() -> BoxedStrategy<(Ty, Term)> {
    let ctx = Rc::new(base_ctx());
    arb_ty().prop_flat_map(move |ty| (Just(ty.clone()), gen(ctx.clone(), ty, 3))).boxed()
}

/// A type with two open terms of it.
pub fn typed_pair() -> BoxedStrategy<(Ty, Term, Term)> {
    let ctx = Rc::new(base_ctx());
    prop_oneof![arb_ty(), small_ty()]
        .prop_flat_map(move |ty| (Just(ty.clone()), gen(ctx.clone(), ty.clone(), 3), gen(ctx.clone(), ty, 2)))
        .boxed()
}

pub fn checker(strong: bool) -> Checker {
    Checker::new(Mode { strong, strict_proof_irrelevance: false })
}

/// Elaborates a closed type; strong mode merges the strict formers first.
fn elab_type(c: &Checker, ty: &Term) -> Val {
    let ty = if c.mode.strong { merge_strict_formers(ty) } else { ty.clone() };
    let (_, v, _) = c.infer_type(&Ctx::new(), &ty).expect("generated type is well formed");
    v
}

pub fn typing_ctx(c: &Checker, types: &[Ty]) -> Ctx {
    types.iter().enumerate().fold(Ctx::new(), |ctx, (i, ty)| ctx.bind(&Hint::new(&format!("v{i}")), type_val(c, ty)))
}

fn type_val(c: &Checker, ty: &Ty) -> Val {
    elab_type(c, &ty.term())
}

fn fail(msg: String) -> TestCaseError {
    TestCaseError::fail(msg)
}

fn elaborate(c: &Checker, ctx: &Ctx, t: &Term, ty: &Ty) -> Result<Term, TestCaseError> {
    c.check(ctx, t, &type_val(c, ty))
        .map_err(|d| fail(format!("generated term rejected: {} ({})", d.message, c.show_term(ctx, t))))
}

/// Reference evaluator for closed terms of the generated fragment.
#[derive(Clone)]
pub enum Ref {
    Num(u64),
    Star,
    Pair(Rc<Ref>, Rc<Ref>),
    Left(Rc<Ref>),
    Right(Rc<Ref>),
    Fun(Rc<dyn Fn(Rc<Ref>) -> Rc<Ref>>),
    Refl,
}

fn ref_apply(f: &Ref, x: Rc<Ref>) -> Rc<Ref> {
    match f {
        Ref::Fun(body) => body(x),
        _ => panic!("applying a non-function"),
    }
}

pub fn reference_eval(t: &Term, env: &[Rc<Ref>]) -> Rc<Ref> {
    match t {
        Term::Var(i) => env[env.len() - 1 - i].clone(),
        Term::Lam(_, _, body) => {
            let env = env.to_vec();
            let body = body.clone();
            Rc::new(Ref::Fun(Rc::new(move |x| {
                let mut env = env.clone();
                env.push(x);
                reference_eval(&body, &env)
            })))
        }
        Term::App(f, x) => ref_apply(&reference_eval(f, env), reference_eval(x, env)),
        Term::Ann(x, _) | Term::Loc(_, x) => reference_eval(x, env),
        Term::Pair(a, b) => Rc::new(Ref::Pair(reference_eval(a, env), reference_eval(b, env))),
        Term::Fst(p) => match &*reference_eval(p, env) {
            Ref::Pair(a, _) => a.clone(),
            _ => panic!("fst of a non-pair"),
        },
        Term::Snd(p) => match &*reference_eval(p, env) {
            Ref::Pair(_, b) => b.clone(),
            _ => panic!("snd of a non-pair"),
        },
        Term::Star => Rc::new(Ref::Star),
        Term::Refl(_) => Rc::new(Ref::Refl),
        Term::Zero(_) => Rc::new(Ref::Num(0)),
        Term::Succ(_, n) => match &*reference_eval(n, env) {
            Ref::Num(k) => Rc::new(Ref::Num(k + 1)),
            _ => panic!("succ of a non-number"),
        },
        Term::Inl(_, x) => Rc::new(Ref::Left(reference_eval(x, env))),
        Term::Inr(_, x) => Rc::new(Ref::Right(reference_eval(x, env))),
        Term::NatElim { base, step, target, .. } => {
            let Ref::Num(n) = *reference_eval(target, env) else { panic!("natElim on a non-number") };
            let step = reference_eval(step, env);
            let mut acc = reference_eval(base, env);
            for k in 0..n {
                acc = ref_apply(&ref_apply(&step, Rc::new(Ref::Num(k))), acc);
            }
            acc
        }
        Term::SumElim { left, right, target, .. } => match &*reference_eval(target, env) {
            Ref::Left(x) => ref_apply(&reference_eval(left, env), x.clone()),
            Ref::Right(y) => ref_apply(&reference_eval(right, env), y.clone()),
            _ => panic!("sumElim on a non-injection"),
        },
        other => panic!("outside the reference fragment: {other:?}"),
    }
}

/// Arbitrary well-scoped terms over the whole syntax, typed or not.
pub fn arb_scoped(depth: usize, size: u32) -> BoxedStrategy<Term> {
    const HINTS: &[&str] = &["x", "y", "f", "_", "x1", "a"];
    let hint = || proptest::sample::select(HINTS.to_vec());
    let mut leaves: Vec<BoxedStrategy<Term>> = vec![prop_oneof![
        Just(Term::Unit),
        Just(Term::Star),
        arb_fragment().prop_map(Term::Nat),
        arb_fragment().prop_map(Term::Zero),
        arb_fragment().prop_map(Term::Empty),
        arb_fragment().prop_map(Term::Refl),
        (arb_fragment(), 0u32..3).prop_map(|(fr, l)| Term::Univ(Sort { fragment: fr, level: l })),
        (arb_fragment(), 0u64..4).prop_map(|(fr, k)| Term::numeral(fr, k)),
        proptest::sample::select(vec!["c", "g"]).prop_map(Term::constant),
    ]
    .boxed()];
    if depth > 0 {
        leaves.push((0..depth).prop_map(Term::Var).boxed());
    }
    if size == 0 {
        return proptest::strategy::Union::new(leaves).boxed();
    }
    let s = size - 1;
    let here = move || arb_scoped(depth, s);
    let under = move || arb_scoped(depth + 1, s);
    let mut options = leaves;
    options.extend([
        (hint(), here(), under()).prop_map(|(h, a, b)| Term::Pi(Hint::new(h), Arc::new(a), Arc::new(b))).boxed(),
        (hint(), here(), under()).prop_map(|(h, a, b)| Term::Sigma(Hint::new(h), Arc::new(a), Arc::new(b))).boxed(),
        (hint(), proptest::option::of(here()), under())
            .prop_map(|(h, a, b)| Term::Lam(Hint::new(h), a.map(Arc::new), Arc::new(b)))
            .boxed(),
        (here(), here()).prop_map(|(f, x)| Term::app(f, x)).boxed(),
        (here(), here()).prop_map(|(a, b)| Term::pair(a, b)).boxed(),
        here().prop_map(|p| Term::Fst(Arc::new(p))).boxed(),
        here().prop_map(|p| Term::Snd(Arc::new(p))).boxed(),
        (arb_fragment(), here()).prop_map(|(fr, n)| Term::Succ(fr, Arc::new(n))).boxed(),
        (arb_fragment(), here(), here()).prop_map(|(fr, a, b)| Term::Sum(fr, Arc::new(a), Arc::new(b))).boxed(),
        (arb_fragment(), here(), any::<bool>())
            .prop_map(|(fr, x, left)| if left { Term::Inl(fr, Arc::new(x)) } else { Term::Inr(fr, Arc::new(x)) })
            .boxed(),
        (arb_fragment(), proptest::option::of(here()), here(), here())
            .prop_map(|(fr, c, a, b)| Term::Id(fr, c.map(Arc::new), Arc::new(a), Arc::new(b)))
            .boxed(),
        (here(), here()).prop_map(|(p, q)| Term::UipS(Arc::new(p), Arc::new(q))).boxed(),
        (here(), here()).prop_map(|(x, a)| Term::Ann(Arc::new(x), Arc::new(a))).boxed(),
        (arb_fragment(), here(), here(), here(), here())
            .prop_map(|(fr, m, b, st, t)| Term::NatElim {
                fragment: fr,
                motive: Arc::new(m),
                base: Arc::new(b),
                step: Arc::new(st),
                target: Arc::new(t),
            })
            .boxed(),
        (arb_fragment(), here(), here())
            .prop_map(|(fr, m, t)| Term::EmptyElim { fragment: fr, motive: Arc::new(m), target: Arc::new(t) })
            .boxed(),
        (arb_fragment(), here(), here(), here(), here())
            .prop_map(|(fr, m, l, r, t)| Term::SumElim {
                fragment: fr,
                motive: Arc::new(m),
                left: Arc::new(l),
                right: Arc::new(r),
                target: Arc::new(t),
            })
            .boxed(),
        (arb_fragment(), here(), here(), (here(), here(), here()))
            .prop_map(|(fr, m, rc, (l, r, p))| Term::IdElim {
                fragment: fr,
                motive: Arc::new(m),
                refl_case: Arc::new(rc),
                lhs: Arc::new(l),
                rhs: Arc::new(r),
                proof: Arc::new(p),
            })
            .boxed(),
    ]);
    proptest::strategy::Union::new(options).boxed()
}

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, failure_persistence: None, ..Config::default() })
}

fn outcome(
    name: &str,
    result: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    result.map_err(|e| format!("{name}: {e}"))
}

/// Normalizing a normal form changes nothing.
pub fn nbe_idempotent() -> Result<(), String> {
    let c = checker(false);
    let ctx = typing_ctx(&c, &base_ctx());
    outcome(
        "nbe idempotence",
        runner().run(&typed_term(), |(ty, t)| {
            let e = elaborate(&c, &ctx, &t, &ty)?;
            let n = c.normalize(&ctx, &e);
            let nn = c.normalize(&ctx, &n);
            prop_assert_eq!(&nn, &n);
            Ok(())
        }),
    )
}

/// Closed natural numbers normalize to the numeral the reference evaluator
/// computes.
pub fn nbe_matches_reference() -> Result<(), String> {
    let c = checker(false);
    let ctx = Ctx::new();
    let strategy = arb_fragment().prop_flat_map(|fr| (Just(fr), gen(Rc::new(vec![]), Ty::Nat(fr), 4)));
    outcome(
        "nbe against reference",
        runner().run(&strategy, |(fr, t)| {
            let e = elaborate(&c, &ctx, &t, &Ty::Nat(fr))?;
            let Ref::Num(expected) = *reference_eval(&t, &[]) else {
                return Err(fail("reference produced a non-number".into()));
            };
            let n = c.normalize(&ctx, &e);
            prop_assert_eq!(n.as_numeral(), Some((fr, expected)));
            Ok(())
        }),
    )
}

fn id_redex(t: Term, ty: &Ty) -> Term {
    let idty = Ty::Arrow(Box::new(ty.clone()), Box::new(ty.clone()));
    Term::app(ann(lam("x", Term::Var(0)), &idty), t)
}

/// Conversion is symmetric and transitive on well-typed terms.
pub fn conv_symmetric_transitive() -> Result<(), String> {
    let c = checker(false);
    let ctx = typing_ctx(&c, &base_ctx());
    outcome(
        "conversion symmetry/transitivity",
        runner().run(&typed_pair(), |(ty, a, b)| {
            let tyv = type_val(&c, &ty);
            let ea = elaborate(&c, &ctx, &a, &ty)?;
            let eb = elaborate(&c, &ctx, &b, &ty)?;
            let ew = elaborate(&c, &ctx, &id_redex(a.clone(), &ty), &ty)?;
            let na = c.normalize(&ctx, &ea);
            let vals: Vec<Val> = [&ea, &eb, &ew, &na].iter().map(|t| c.eval(&ctx, t)).collect();
            let conv = |i: usize, j: usize| c.conv_in(&ctx).conv(&vals[i], &vals[j], &tyv);
            for i in 0..4 {
                prop_assert!(conv(i, i), "not reflexive at {}", i);
                for j in 0..4 {
                    prop_assert_eq!(conv(i, j), conv(j, i), "asymmetric at {} {}", i, j);
                    for k in 0..4 {
                        if conv(i, j) && conv(j, k) {
                            prop_assert!(conv(i, k), "not transitive at {} {} {}", i, j, k);
                        }
                    }
                }
            }
            prop_assert!(conv(0, 2) && conv(0, 3));
            Ok(())
        }),
    )
}

/// The normal form of a well-typed term checks against the inferred type.
pub fn preservation() -> Result<(), String> {
    let c = checker(false);
    let ctx = typing_ctx(&c, &base_ctx());
    outcome(
        "preservation",
        runner().run(&typed_term(), |(ty, t)| {
            let (e, inferred) =
                c.infer(&ctx, &ann(t.clone(), &ty)).map_err(|d| fail(format!("inference failed: {}", d.message)))?;
            let n = c.normalize(&ctx, &e);
            c.check(&ctx, &n, &inferred)
                .map_err(|d| fail(format!("normal form {} rejected: {}", c.show_term(&ctx, &n), d.message)))?;
            Ok(())
        }),
    )
}

fn arb_sort() -> impl Strategy<Value = Sort> {
    (arb_fragment(), 0u32..3).prop_map(|(fragment, level)| Sort { fragment, level })
}

fn arb_type_term() -> BoxedStrategy<Term> {
    prop_oneof![
        3 => arb_raw_ty().prop_map(|t| t.term()),
        1 => arb_sort().prop_map(Term::Univ),
        1 => (arb_raw_ty(), arb_sort()).prop_map(|(t, s)| Term::pi("x", t.term(), Term::Univ(s))),
    ]
    .boxed()
}

/// Whatever a universe accepts, every larger universe accepts; in
/// particular fibrant acceptance implies strict acceptance.
pub fn subsumption_monotone() -> Result<(), String> {
    let c = checker(false);
    let ctx = Ctx::new();
    let strategy = (arb_type_term(), arb_sort(), arb_sort());
    outcome(
        "subsumption monotonicity",
        runner().run(&strategy, |(t, s1, s2)| {
            let accepts = |s: Sort| c.check(&ctx, &t, &c.eval(&ctx, &Term::Univ(s))).is_ok();
            if accepts(s1) {
                let strict = Sort::strict(s1.level);
                prop_assert!(accepts(strict), "{} at {} but not {}", c.show_term(&ctx, &t), s1, strict);
                if sort_sub(s1, s2) {
                    prop_assert!(accepts(s2), "{} at {} but not {}", c.show_term(&ctx, &t), s1, s2);
                }
            }
            Ok(())
        }),
    )
}

/// Terms the default mode accepts are accepted in strong mode as well.
pub fn strong_mode_monotone() -> Result<(), String> {
    let weak = checker(false);
    let strong = checker(true);
    let wctx = typing_ctx(&weak, &base_ctx());
    let sctx = typing_ctx(&strong, &base_ctx());
    outcome(
        "strong-mode monotonicity",
        runner().run(&typed_term(), |(ty, t)| {
            elaborate(&weak, &wctx, &t, &ty)?;
            strong
                .check(&sctx, &merge_strict_formers(&t), &type_val(&strong, &ty))
                .map_err(|d| fail(format!("strong mode rejected: {}", d.message)))?;
            Ok(())
        }),
    )
}

/// Printing and reparsing gives back an α-equal term.
pub fn round_trip() -> Result<(), String> {
    let names: Vec<Name> = vec![Arc::from("p"), Arc::from("q")];
    let locals = ["p", "q"];
    let strategy = arb_scoped(2, 4);
    outcome(
        "parse/print round trip",
        runner().run(&strategy, |t| {
            let text = pretty_print(&t, &names);
            let back = parse_term(&text, &locals, &|n| n == "c" || n == "g")
                .map_err(|d| fail(format!("`{text}` does not parse: {}", d.message)))?;
            prop_assert!(alpha_eq(&back, &t), "`{}` reparses as {:?}", text, back);
            Ok(())
        }),
    )
}
