//! Rewriting abbreviations into core syntax.
//!
//! Bound variables introduced by an expansion are fresh with respect to
//! every name in the formula being expanded, so arguments are never captured.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{helly::helly_core, Formula, MacroName, Term};

struct Fresh {
    used: BTreeSet<String>,
}

impl Fresh {
    fn name(&mut self, base: &str) -> String {
        let mut candidate = String::from(base);
        let mut k = 1;
        while self.used.contains(&candidate) {
            candidate = format!("{base}{k}");
            k += 1;
        }
        self.used.insert(candidate.clone());
        candidate
    }
}

/// Replaces every macro node by its definition.
pub fn expand_macros(f: &Formula) -> Formula {
    let mut fresh = Fresh {
        used: f.all_variables(),
    };
    expand(f, &mut fresh)
}

fn expand(f: &Formula, fresh: &mut Fresh) -> Formula {
    match f {
        Formula::Leq(..) | Formula::Eq(..) | Formula::Conv(_) => f.clone(),
        Formula::Not(g) => expand(g, fresh).not(),
        Formula::And(a, b) => expand(a, fresh).and(expand(b, fresh)),
        Formula::Or(a, b) => expand(a, fresh).or(expand(b, fresh)),
        Formula::Implies(a, b) => expand(a, fresh).implies(expand(b, fresh)),
        Formula::Exists(v, g) => Formula::exists(v, expand(g, fresh)),
        Formula::Forall(v, g) => Formula::forall(v, expand(g, fresh)),
        Formula::Macro(m, args) => expand_call(*m, args, fresh),
        Formula::Helly { dim, count } => {
            let names: Vec<String> = (1..=*count).map(|i| fresh.name(&format!("x{i}"))).collect();
            helly_core(*dim, &names)
        }
    }
}

fn zero_product(ts: &[&Term]) -> Formula {
    let product = ts[1..]
        .iter()
        .fold(ts[0].clone(), |acc, t| acc.mul((*t).clone()));
    Formula::eq(product, Term::Zero)
}

/// `x·y = 0 ∨ x·−y = 0 ∨ −x·y = 0 ∨ −x·−y = 0`, grouped in pairs.
fn some_quadrant_empty(x: &Term, y: &Term) -> Formula {
    let (nx, ny) = (x.clone().neg(), y.clone().neg());
    zero_product(&[x, y])
        .or(zero_product(&[x, &ny]))
        .or(zero_product(&[&nx, y]).or(zero_product(&[&nx, &ny])))
}

fn hs(args: &[Term]) -> Formula {
    let mut parts = Vec::new();
    for x in args {
        parts.push(Formula::Conv(x.clone()));
        parts.push(Formula::Conv(x.clone().neg()));
        parts.push(Formula::neq(x.clone(), Term::Zero));
        parts.push(Formula::neq(x.clone(), Term::One));
    }
    for (i, x) in args.iter().enumerate() {
        for (j, y) in args.iter().enumerate() {
            if i != j {
                parts.push(Formula::neq(x.clone(), y.clone()));
                parts.push(Formula::neq(x.clone(), y.clone().neg()));
            }
        }
    }
    Formula::and_all(parts)
}

fn line(x: &Term, y: &Term) -> Formula {
    hs(&[x.clone(), y.clone()]).and(some_quadrant_empty(x, y).not())
}

fn parallel(x: &Term, y: &Term) -> Formula {
    hs(&[x.clone(), y.clone()]).and(some_quadrant_empty(x, y))
}

fn lines3(a: &Term, b: &Term, c: &Term) -> Formula {
    line(a, b).and(line(a, c)).and(line(b, c))
}

/// `v = t ∨ v = −t`.
fn plus_minus(v: &str, t: &Term) -> Formula {
    let var = Term::var(v);
    Formula::eq(var.clone(), t.clone()).or(Formula::eq(var, t.clone().neg()))
}

/// Bound triple ranging over `±a`, `±b`, `±c`.
struct Triple {
    names: [String; 3],
}

impl Triple {
    fn new(fresh: &mut Fresh, bases: [&str; 3]) -> Triple {
        Triple {
            names: bases.map(|b| fresh.name(b)),
        }
    }

    fn guard(&self, args: [&Term; 3]) -> Formula {
        plus_minus(&self.names[0], args[0])
            .and(plus_minus(&self.names[1], args[1]))
            .and(plus_minus(&self.names[2], args[2]))
    }

    fn empty(&self) -> Formula {
        let [x, y, z] = self.names.clone().map(Term::Var);
        zero_product(&[&x, &y, &z])
    }

    fn differs(&self, other: &Triple) -> Formula {
        let ne = |i: usize| Formula::neq(Term::var(&self.names[i]), Term::var(&other.names[i]));
        ne(0).or(ne(1)).or(ne(2))
    }

    fn exists(&self, body: Formula) -> Formula {
        let [x, y, z] = &self.names;
        Formula::exists(x, Formula::exists(y, Formula::exists(z, body)))
    }
}

fn corner(a: &Term, b: &Term, c: &Term, fresh: &mut Fresh) -> Formula {
    let t = Triple::new(fresh, ["x", "y", "z"]);
    let args = [a, b, c];
    lines3(a, b, c).and(t.exists(t.guard(args).and(t.empty())).not())
}

fn prism(a: &Term, b: &Term, c: &Term, fresh: &mut Fresh) -> Formula {
    let t = Triple::new(fresh, ["x", "y", "z"]);
    let u = Triple::new(fresh, ["x1_", "y1_", "z1_"]);
    let args = [a, b, c];
    let only = u.exists(u.guard(args).and(t.differs(&u)).and(u.empty())).not();
    lines3(a, b, c).and(t.exists(t.guard(args).and(t.empty()).and(only)))
}

fn fan(a: &Term, b: &Term, c: &Term, fresh: &mut Fresh) -> Formula {
    let t = Triple::new(fresh, ["x", "y", "z"]);
    let u = Triple::new(fresh, ["x1_", "y1_", "z1_"]);
    let w = Triple::new(fresh, ["x2_", "y2_", "z2_"]);
    let args = [a, b, c];
    let no_third = w
        .exists(
            w.guard(args)
                .and(t.differs(&w))
                .and(u.differs(&w))
                .and(w.empty()),
        )
        .not();
    let second = u.exists(u.guard(args).and(u.empty()).and(t.differs(&u)).and(no_third));
    lines3(a, b, c).and(t.exists(t.guard(args).and(t.empty()).and(second)))
}

/// `y₁ = y₂ ∨ y₁ = −y₂`.
fn same_plane(a: &Term, b: &Term) -> Formula {
    Formula::eq(a.clone(), b.clone()).or(Formula::eq(a.clone(), b.clone().neg()))
}

fn coincident2(a: &Term, b: &Term, y: &Term) -> Formula {
    line(a, y).and(line(b, y)).and(same_plane(a, b))
}

fn parallel2(a: &Term, b: &Term, y: &Term) -> Formula {
    let (na, nb) = (a.clone().neg(), b.clone().neg());
    let empty_quadrant = Formula::or_all([
        zero_product(&[a, b]),
        zero_product(&[a, &nb]),
        zero_product(&[&na, b]),
        zero_product(&[&na, &nb]),
    ]);
    line(a, y)
        .and(line(b, y))
        .and(same_plane(a, b).not())
        .and(empty_quadrant)
}

fn point2(a: &Term, b: &Term, y: &Term) -> Formula {
    line(a, y)
        .and(line(b, y))
        .and(coincident2(a, b, y).not())
        .and(parallel2(a, b, y).not())
}

fn expand_call(m: MacroName, args: &[Term], fresh: &mut Fresh) -> Formula {
    let a = |i: usize| &args[i];
    match m {
        MacroName::Hs => hs(args),
        MacroName::Line => line(a(0), a(1)),
        MacroName::Parallel => parallel(a(0), a(1)),
        MacroName::Fan => fan(a(0), a(1), a(2), fresh),
        MacroName::Prism => prism(a(0), a(1), a(2), fresh),
        MacroName::Corner => corner(a(0), a(1), a(2), fresh),
        MacroName::Frame => corner(a(0), a(1), a(2), fresh)
            .and(line(a(0), a(3)))
            .and(line(a(1), a(3)))
            .and(line(a(2), a(3))),
        MacroName::Coincident2 => coincident2(a(0), a(1), a(2)),
        MacroName::Parallel2 => parallel2(a(0), a(1), a(2)),
        MacroName::Point2 => point2(a(0), a(1), a(2)),
    }
}

fn leq(a: &str, b: &str) -> Formula {
    Formula::leq(Term::var(a), Term::var(b))
}

/// `m` is the product of `x` and `y`, using `w` as the bound variable.
pub fn product_definition(m: &str, x: &str, y: &str, w: &str) -> Formula {
    leq(m, x)
        .and(leq(m, y))
        .and(Formula::forall(w, leq(w, x).and(leq(w, y)).implies(leq(w, m))))
}

/// `m` is the sum of `x` and `y`, using `w` as the bound variable.
pub fn sum_definition(m: &str, x: &str, y: &str, w: &str) -> Formula {
    leq(x, m)
        .and(leq(y, m))
        .and(Formula::forall(w, leq(x, w).and(leq(y, w)).implies(leq(m, w))))
}

/// `y` is the complement of `x`, using `w` as the bound variable.
pub fn complement_definition(y: &str, x: &str, w: &str) -> Formula {
    let meet = |a: &str| Formula::eq(Term::var(a).mul(Term::var(x)), Term::Zero);
    meet(y).and(Formula::forall(w, meet(w).implies(leq(w, y))))
}

/// `x` is the top element, using `y` as the bound variable.
pub fn top_definition(x: &str, y: &str) -> Formula {
    Formula::forall(y, leq(y, x))
}

/// `x` is the bottom element, using `y` as the bound variable.
pub fn bottom_definition(x: &str, y: &str) -> Formula {
    Formula::forall(y, Formula::eq(Term::var(y), Term::var(x)).or(leq(y, x).not()))
}
