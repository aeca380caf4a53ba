//! Printing core terms back to concrete syntax.
//!
//! Output is a single line that the parser reads back to an α-equal term.
//! Binder names come from hints, renamed when they would capture a constant
//! or an enclosing name.

use std::collections::HashSet;

use crate::parser::lexer::{is_ident_continue, is_ident_start};
use crate::parser::surface::is_reserved;
use crate::syntax::{Fragment, Hint, Name, Term};

// Precedence levels, loosest first.
const BINDER: u8 = 0;
const PRODUCT: u8 = 1;
const SUM: u8 = 2;
const EQUALITY: u8 = 3;
const APP: u8 = 4;
const ATOM: u8 = 5;

/// Prints `term` with `names` naming its free variables, innermost last.
pub fn pretty_print(term: &Term, names: &[Name]) -> String {
    let mut consts = HashSet::new();
    term.visit(0, &mut |_, t| {
        if let Term::Const(name) = t {
            consts.insert(name.to_string());
        }
    });
    let mut printer = Printer { names: names.iter().map(|n| n.to_string()).collect(), consts };
    printer.go(term, BINDER)
}

/// Prints a closed term.
pub fn pretty(term: &Term) -> String {
    pretty_print(term, &[])
}

struct Printer {
    names: Vec<String>,
    consts: HashSet<String>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_continue) && name != "_" && !is_reserved(name)
}

fn peel(term: &Term) -> &Term {
    match term {
        Term::Loc(_, inner) => peel(inner),
        other => other,
    }
}

fn wrap(needed: bool, s: String) -> String {
    if needed {
        format!("({s})")
    } else {
        s
    }
}

fn strict_suffix(fr: Fragment) -> &'static str {
    match fr {
        Fragment::Fibrant => "",
        Fragment::Strict => "s",
    }
}

fn word(fibrant: &'static str, strict: &'static str, fr: Fragment) -> &'static str {
    match fr {
        Fragment::Fibrant => fibrant,
        Fragment::Strict => strict,
    }
}

impl Printer {
    fn taken(&self, name: &str) -> bool {
        self.consts.contains(name) || self.names.iter().any(|n| n == name)
    }

    fn fresh(&self, hint: &Hint) -> String {
        let base = if valid_name(hint.as_str()) { hint.as_str() } else { "x" };
        if !self.taken(base) {
            return base.to_owned();
        }
        (1..).map(|i| format!("{base}{i}")).find(|candidate| !self.taken(candidate)).expect("some suffix is free")
    }

    /// Name for a binder whose body is `body`; `_` when unused.
    fn binder(&self, hint: &Hint, body: &Term) -> String {
        if body.mentions(0) {
            self.fresh(hint)
        } else {
            "_".to_owned()
        }
    }

    fn under(&mut self, name: String, body: &Term, prec: u8) -> String {
        self.names.push(name);
        let out = self.go(body, prec);
        self.names.pop();
        out
    }

    fn var(&self, index: usize) -> String {
        match self.names.len().checked_sub(index + 1) {
            Some(level) => self.names[level].clone(),
            None => format!("?{index}"),
        }
    }

    fn prim(&mut self, keyword: &str, args: &[&Term], prec: u8) -> String {
        let mut out = keyword.to_owned();
        for arg in args {
            out.push(' ');
            out.push_str(&self.go(arg, ATOM));
        }
        wrap(prec > APP, out)
    }

    fn go(&mut self, term: &Term, prec: u8) -> String {
        use Term::*;
        if matches!(peel(term), Zero(_) | Succ(..)) {
            if let Some((fr, n)) = term.strip_locs().as_numeral() {
                return format!("{n}{}", strict_suffix(fr));
            }
        }
        match term {
            Loc(_, inner) => self.go(inner, prec),
            Var(i) => self.var(*i),
            Const(name) => name.to_string(),
            Univ(sort) => wrap(prec > APP, sort.to_string()),
            Pi(hint, dom, cod) => {
                let out = if cod.mentions(0) {
                    let name = self.fresh(hint);
                    let dom = self.go(dom, BINDER);
                    format!("({name} : {dom}) -> {}", self.under(name.clone(), cod, BINDER))
                } else {
                    let dom = self.go(dom, PRODUCT);
                    format!("{dom} -> {}", self.under("_".into(), cod, BINDER))
                };
                wrap(prec > BINDER, out)
            }
            Sigma(hint, fst, snd) => {
                let out = if snd.mentions(0) {
                    let name = self.fresh(hint);
                    let fst = self.go(fst, BINDER);
                    format!("({name} : {fst}) * {}", self.under(name.clone(), snd, PRODUCT))
                } else {
                    let fst = self.go(fst, SUM);
                    format!("{fst} * {}", self.under("_".into(), snd, PRODUCT))
                };
                wrap(prec > PRODUCT, out)
            }
            Lam(..) => {
                let mut out = String::from("\\");
                let mut pushed = 0;
                let mut current = term;
                while let Lam(hint, ann, body) = peel(current) {
                    let name = self.binder(hint, body);
                    if pushed > 0 {
                        out.push(' ');
                    }
                    match ann {
                        Some(ann) => {
                            let ann = self.go(ann, BINDER);
                            out.push_str(&format!("({name} : {ann})"));
                        }
                        None => out.push_str(&name),
                    }
                    self.names.push(name);
                    pushed += 1;
                    current = body;
                }
                out.push_str(". ");
                out.push_str(&self.go(current, BINDER));
                self.names.truncate(self.names.len() - pushed);
                wrap(prec > BINDER, out)
            }
            App(..) => {
                let mut args = Vec::new();
                let mut head = term;
                while let App(f, a) = peel(head) {
                    args.push(&**a);
                    head = f;
                }
                let mut out = self.go(head, APP);
                for arg in args.into_iter().rev() {
                    out.push(' ');
                    out.push_str(&self.go(arg, ATOM));
                }
                wrap(prec > APP, out)
            }
            Pair(..) => {
                let mut items = Vec::new();
                let mut current = term;
                while let Pair(a, b) = peel(current) {
                    items.push(self.go(a, BINDER));
                    current = b;
                }
                items.push(self.go(current, BINDER));
                format!("({})", items.join(", "))
            }
            Fst(p) => self.prim("fst", &[p], prec),
            Snd(p) => self.prim("snd", &[p], prec),
            Unit => "Unit".into(),
            Star => "star".into(),
            Nat(fr) => word("Nat", "NatS", *fr).into(),
            Zero(fr) => format!("0{}", strict_suffix(*fr)),
            Succ(fr, n) => self.prim(word("succ", "succs", *fr), &[n], prec),
            NatElim { fragment, motive, base, step, target } => {
                self.prim(word("natElim", "natElimS", *fragment), &[motive, base, step, target], prec)
            }
            Empty(fr) => word("Empty", "EmptyS", *fr).into(),
            EmptyElim { fragment, motive, target } => {
                self.prim(word("emptyElim", "emptyElimS", *fragment), &[motive, target], prec)
            }
            Sum(fr, a, b) => {
                let op = word("+", "+s", *fr);
                let out = format!("{} {op} {}", self.go(a, EQUALITY), self.go(b, SUM));
                wrap(prec > SUM, out)
            }
            Inl(fr, a) => self.prim(word("inl", "inls", *fr), &[a], prec),
            Inr(fr, a) => self.prim(word("inr", "inrs", *fr), &[a], prec),
            SumElim { fragment, motive, left, right, target } => {
                self.prim(word("sumElim", "sumElimS", *fragment), &[motive, left, right, target], prec)
            }
            Id(fr, Some(ty), a, b) => self.prim(word("Id", "IdS", *fr), &[ty, a, b], prec),
            Id(fr, None, a, b) => {
                let op = word("=", "=s", *fr);
                let out = format!("{} {op} {}", self.go(a, APP), self.go(b, APP));
                wrap(prec > EQUALITY, out)
            }
            Refl(fr) => word("refl", "refls", *fr).into(),
            IdElim { fragment, motive, refl_case, lhs, rhs, proof } => {
                self.prim(word("J", "Js", *fragment), &[motive, refl_case, lhs, rhs, proof], prec)
            }
            UipS(p, q) => self.prim("Ks", &[p, q], prec),
            Ann(t, ty) => {
                let inner = self.go(t, BINDER);
                // `(x y : A)` would read back as a binder group.
                let inner = wrap(inner.chars().all(|c| is_ident_continue(c) || c == ' '), inner);
                format!("({inner} : {})", self.go(ty, BINDER))
            }
        }
    }
}
