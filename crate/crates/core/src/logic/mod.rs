//! First-order formulas over regions with `conv` and `≤`.
//!
//! Terms are built from variables, `0`, `1`, complement, product and sum.
//! Formulas combine the atoms `t ≤ s`, `t = s` and `conv(t)` with the usual
//! connectives and quantifiers, plus named abbreviations ([`MacroName`]) and
//! Helly sentences that [`expand_macros`] rewrites into core syntax.

mod eval;
mod helly;
mod macros;
mod parse;
mod print;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

pub use eval::{evaluate, evaluate_with, Assignment, EvalOptions, Truth, Verdict};
pub use helly::{check_helly_implication, check_helly_instance, helly_formula, helly_witness};
pub use macros::{
    bottom_definition, complement_definition, expand_macros, product_definition, sum_definition,
    top_definition,
};
pub use parse::parse;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Neg(Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Add(Box<Term>, Box<Term>),
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn neg(self) -> Term {
        Term::Neg(Box::new(self))
    }

    pub fn mul(self, other: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(other))
    }

    pub fn add(self, other: Term) -> Term {
        Term::Add(Box::new(self), Box::new(other))
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v == name,
            Term::Zero | Term::One => false,
            Term::Neg(t) => t.mentions(name),
            Term::Mul(a, b) | Term::Add(a, b) => a.mentions(name) || b.mentions(name),
        }
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Neg(t) => t.collect_vars(out),
            Term::Mul(a, b) | Term::Add(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MacroName {
    /// Variadic: pairwise distinct, non-complementary half-spaces.
    Hs,
    Line,
    Parallel,
    Fan,
    Prism,
    Corner,
    Frame,
    Coincident2,
    Parallel2,
    Point2,
}

impl MacroName {
    pub const ALL: [MacroName; 10] = [
        MacroName::Hs,
        MacroName::Line,
        MacroName::Parallel,
        MacroName::Fan,
        MacroName::Prism,
        MacroName::Corner,
        MacroName::Frame,
        MacroName::Coincident2,
        MacroName::Parallel2,
        MacroName::Point2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MacroName::Hs => "hs",
            MacroName::Line => "line",
            MacroName::Parallel => "parallel",
            MacroName::Fan => "fan",
            MacroName::Prism => "prism",
            MacroName::Corner => "corner",
            MacroName::Frame => "frame",
            MacroName::Coincident2 => "coincident2",
            MacroName::Parallel2 => "parallel2",
            MacroName::Point2 => "point2",
        }
    }

    pub fn from_name(name: &str) -> Option<MacroName> {
        MacroName::ALL.into_iter().find(|m| m.name() == name)
    }

    /// Fixed arity, or `None` for `hs`, which takes one or more arguments.
    pub fn arity(self) -> Option<usize> {
        match self {
            MacroName::Hs => None,
            MacroName::Line | MacroName::Parallel => Some(2),
            MacroName::Frame => Some(4),
            _ => Some(3),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Leq(Term, Term),
    Eq(Term, Term),
    Conv(Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    Macro(MacroName, Vec<Term>),
    /// The Helly sentence for dimension `dim` over `count` regions.
    Helly { dim: usize, count: usize },
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn not(self) -> Formula {
        Formula::Not(Box::new(self))
    }

    pub fn and(self, other: Formula) -> Formula {
        Formula::And(Box::new(self), Box::new(other))
    }

    pub fn or(self, other: Formula) -> Formula {
        Formula::Or(Box::new(self), Box::new(other))
    }

    pub fn implies(self, other: Formula) -> Formula {
        Formula::Implies(Box::new(self), Box::new(other))
    }

    pub fn exists(var: &str, body: Formula) -> Formula {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: &str, body: Formula) -> Formula {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn neq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b).not()
    }

    pub fn leq(a: Term, b: Term) -> Formula {
        Formula::Leq(a, b)
    }

    /// Left-nested conjunction; panics on an empty list.
    pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::and).expect("nonempty conjunction")
    }

    /// Left-nested disjunction; panics on an empty list.
    pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).expect("nonempty disjunction")
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let mut terms = BTreeSet::new();
        match self {
            Formula::Leq(a, b) | Formula::Eq(a, b) => {
                a.collect_vars(&mut terms);
                b.collect_vars(&mut terms);
            }
            Formula::Conv(t) => t.collect_vars(&mut terms),
            Formula::Macro(_, args) => args.iter().for_each(|t| t.collect_vars(&mut terms)),
            Formula::Helly { .. } => {}
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                bound.push(v.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
        }
        out.extend(terms.into_iter().filter(|v| !bound.contains(v)));
    }

    /// Every variable name occurring anywhere, bound or free.
    pub fn all_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_all(&mut out);
        out
    }

    fn collect_all(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Leq(a, b) | Formula::Eq(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Conv(t) => t.collect_vars(out),
            Formula::Macro(_, args) => args.iter().for_each(|t| t.collect_vars(out)),
            Formula::Helly { .. } => {}
            Formula::Not(f) => f.collect_all(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_all(out);
                b.collect_all(out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                out.insert(v.clone());
                f.collect_all(out);
            }
        }
    }
}

/// Names that cannot be used as variables.
pub(crate) fn is_reserved(name: &str) -> bool {
    name == "conv" || name == "helly" || MacroName::from_name(name).is_some()
}
