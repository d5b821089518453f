//! Three-valued satisfaction over rational polytopes.
//!
//! Atoms and terms are decided exactly. A quantifier whose bound variable is
//! pinned by a conjunct `v = t₁ ∨ … ∨ v = t_k` is expanded over those terms;
//! any other quantifier ranges over a finite candidate pool, so it can only
//! produce `True` (for `∃`) or `False` (for `∀`) and otherwise `Unknown`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{expand_macros, Formula, Term};
use crate::region::Region;
use crate::{Error, Result};

pub type Assignment = BTreeMap<String, Region>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    fn from_bool(b: bool) -> Truth {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub value: Truth,
    /// Bindings of the outermost quantifier block that decided the value: a
    /// witness for `True`, a counterexample for `False`.
    pub witness: Vec<(String, Region)>,
    /// Whether the instantiation budget ran out.
    pub budget_exhausted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvalOptions {
    /// Maximum number of quantifier instantiations.
    pub budget: usize,
    /// Closure depth of the candidate pool for unguarded quantifiers.
    pub pool_depth: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            budget: 1_000_000,
            pool_depth: 2,
        }
    }
}

/// Largest candidate pool an unguarded quantifier ranges over.
const POOL_CAP: usize = 64;

pub fn evaluate(dim: usize, f: &Formula, a: &Assignment, budget: usize) -> Result<Verdict> {
    evaluate_with(
        dim,
        f,
        a,
        EvalOptions {
            budget,
            ..EvalOptions::default()
        },
    )
}

pub fn evaluate_with(dim: usize, f: &Formula, a: &Assignment, options: EvalOptions) -> Result<Verdict> {
    if options.budget == 0 {
        return Err(Error::Precondition("evaluation budget must be positive".into()));
    }
    for r in a.values() {
        crate::error::check_dim(dim, r.dim())?;
    }
    let expanded = expand_macros(f);
    if let Some(v) = expanded.free_variables().into_iter().find(|v| !a.contains_key(v)) {
        return Err(Error::UnboundVariable(v));
    }
    let mut level: Vec<Region> = a.values().cloned().collect();
    level.push(Region::empty(dim));
    level.push(Region::full(dim));
    dedup(&mut level);

    let mut remaining = options.budget;
    let mut depth = 0;
    loop {
        let mut ev = Evaluator {
            dim,
            remaining,
            exhausted: false,
            pool_used: false,
            pool: &level,
            env: a.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
        };
        let out = ev.formula(&expanded)?;
        remaining = ev.remaining;
        let decided = out.truth != Truth::Unknown;
        if decided || !ev.pool_used || ev.exhausted || depth >= options.pool_depth {
            return Ok(Verdict {
                value: out.truth,
                witness: out.witness,
                budget_exhausted: ev.exhausted,
            });
        }
        level = grow(&level)?;
        depth += 1;
    }
}

fn dedup(pool: &mut Vec<Region>) {
    let mut seen = alloc::collections::BTreeSet::new();
    pool.retain(|r| seen.insert(r.clone()));
}

/// One closure step under complement, product and sum.
fn grow(level: &[Region]) -> Result<Vec<Region>> {
    let mut next = level.to_vec();
    let push = |next: &mut Vec<Region>, r: Region| {
        if next.len() < POOL_CAP && !next.contains(&r) {
            next.push(r);
        }
    };
    for r in level {
        match r.complement() {
            Ok(c) => push(&mut next, c),
            Err(Error::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    for (i, r) in level.iter().enumerate() {
        for s in &level[i + 1..] {
            push(&mut next, r.product(s)?);
            push(&mut next, r.sum(s)?);
        }
    }
    Ok(next)
}

struct Outcome {
    truth: Truth,
    witness: Vec<(String, Region)>,
}

impl Outcome {
    fn plain(truth: Truth) -> Outcome {
        Outcome {
            truth,
            witness: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Quantifier {
    Exists,
    Forall,
}

struct Evaluator<'a> {
    dim: usize,
    remaining: usize,
    exhausted: bool,
    pool_used: bool,
    pool: &'a [Region],
    env: Vec<(String, Region)>,
}

impl Evaluator<'_> {
    fn lookup(&self, v: &str) -> Result<&Region> {
        self.env
            .iter()
            .rev()
            .find(|(k, _)| k == v)
            .map(|(_, r)| r)
            .ok_or_else(|| Error::UnboundVariable(v.into()))
    }

    fn term(&self, t: &Term) -> Result<Region> {
        match t {
            Term::Var(v) => self.lookup(v).cloned(),
            Term::Zero => Ok(Region::empty(self.dim)),
            Term::One => Ok(Region::full(self.dim)),
            Term::Neg(a) => self.term(a)?.complement(),
            Term::Mul(a, b) => self.term(a)?.product(&self.term(b)?),
            Term::Add(a, b) => self.term(a)?.sum(&self.term(b)?),
        }
    }

    fn formula(&mut self, f: &Formula) -> Result<Outcome> {
        Ok(match f {
            Formula::Leq(a, b) => Outcome::plain(Truth::from_bool(self.term(a)?.leq(&self.term(b)?)?)),
            Formula::Eq(a, b) => Outcome::plain(Truth::from_bool(self.term(a)?.equals(&self.term(b)?)?)),
            Formula::Conv(t) => Outcome::plain(Truth::from_bool(self.term(t)?.is_convex())),
            Formula::Not(g) => {
                let inner = self.formula(g)?;
                Outcome {
                    truth: inner.truth.not(),
                    witness: inner.witness,
                }
            }
            Formula::And(a, b) => {
                let left = self.formula(a)?;
                if left.truth == Truth::False {
                    return Ok(left);
                }
                let right = self.formula(b)?;
                match (left.truth, right.truth) {
                    (_, Truth::False) => right,
                    (Truth::True, Truth::True) => Outcome::plain(Truth::True),
                    _ => Outcome::plain(Truth::Unknown),
                }
            }
            Formula::Or(a, b) => {
                let left = self.formula(a)?;
                if left.truth == Truth::True {
                    return Ok(left);
                }
                let right = self.formula(b)?;
                match (left.truth, right.truth) {
                    (_, Truth::True) => right,
                    (Truth::False, Truth::False) => Outcome::plain(Truth::False),
                    _ => Outcome::plain(Truth::Unknown),
                }
            }
            Formula::Implies(a, b) => {
                let left = self.formula(a)?;
                if left.truth == Truth::False {
                    return Ok(Outcome::plain(Truth::True));
                }
                let right = self.formula(b)?;
                match (left.truth, right.truth) {
                    (_, Truth::True) => right,
                    (Truth::True, Truth::False) => right,
                    _ => Outcome::plain(Truth::Unknown),
                }
            }
            Formula::Exists(v, body) => self.quantifier(Quantifier::Exists, v, body)?,
            Formula::Forall(v, body) => self.quantifier(Quantifier::Forall, v, body)?,
            Formula::Macro(..) | Formula::Helly { .. } => {
                return Err(Error::Precondition(format!("unexpanded abbreviation in {f}")))
            }
        })
    }

    fn quantifier(&mut self, q: Quantifier, v: &str, body: &Formula) -> Result<Outcome> {
        let guard = match q {
            Quantifier::Exists => exists_guard(v, body, &mut Vec::new()),
            Quantifier::Forall => forall_guard(v, body, &mut Vec::new()),
        };
        let guarded = guard.is_some();
        let candidates = match guard {
            Some(terms) => {
                let mut values = Vec::with_capacity(terms.len());
                for t in terms {
                    let r = self.term(t)?;
                    if !values.contains(&r) {
                        values.push(r);
                    }
                }
                values
            }
            None => {
                self.pool_used = true;
                self.pool.to_vec()
            }
        };
        let (decisive, other) = match q {
            Quantifier::Exists => (Truth::True, Truth::False),
            Quantifier::Forall => (Truth::False, Truth::True),
        };
        let mut undecided = false;
        for value in candidates {
            if self.remaining == 0 {
                self.exhausted = true;
                return Ok(Outcome::plain(Truth::Unknown));
            }
            self.remaining -= 1;
            self.env.push((v.into(), value));
            let out = self.formula(body);
            let (_, value) = self.env.pop().expect("pushed above");
            let out = out?;
            if out.truth == decisive {
                let mut witness = Vec::with_capacity(out.witness.len() + 1);
                witness.push((String::from(v), value));
                witness.extend(out.witness);
                return Ok(Outcome {
                    truth: decisive,
                    witness,
                });
            }
            undecided |= out.truth == Truth::Unknown;
        }
        Ok(Outcome::plain(if undecided || !guarded {
            Truth::Unknown
        } else {
            other
        }))
    }
}

/// Terms `t` of a conjunct `v = t₁ ∨ … ∨ v = t_k`, none mentioning `v` or a
/// variable bound between the quantifier and the conjunct.
fn equality_guard<'f>(v: &str, f: &'f Formula, crossed: &[&str]) -> Option<Vec<&'f Term>> {
    let mut terms = Vec::new();
    let mut stack = alloc::vec![f];
    while let Some(g) = stack.pop() {
        match g {
            Formula::Or(a, b) => {
                stack.push(b);
                stack.push(a);
            }
            Formula::Eq(Term::Var(x), t) | Formula::Eq(t, Term::Var(x)) if x == v => {
                if t.mentions(v) || crossed.iter().any(|c| t.mentions(c)) {
                    return None;
                }
                terms.push(t);
            }
            _ => return None,
        }
    }
    Some(terms)
}

/// Guard terms for `∃v.f`: a guarding conjunct of `f`, looking through
/// nested existential prefixes.
fn exists_guard<'f>(v: &str, f: &'f Formula, crossed: &mut Vec<&'f str>) -> Option<Vec<&'f Term>> {
    match f {
        Formula::And(a, b) => exists_guard(v, a, crossed).or_else(|| exists_guard(v, b, crossed)),
        Formula::Exists(w, body) if w != v => {
            crossed.push(w);
            let g = exists_guard(v, body, crossed);
            crossed.pop();
            g
        }
        _ => equality_guard(v, f, crossed),
    }
}

/// Guard terms for `∀v.f`, where `f` is `¬ψ` or `ψ → χ` and `ψ` guards `v`
/// existentially, looking through nested universal prefixes.
fn forall_guard<'f>(v: &str, f: &'f Formula, crossed: &mut Vec<&'f str>) -> Option<Vec<&'f Term>> {
    match f {
        Formula::Forall(w, body) if w != v => {
            crossed.push(w);
            let g = forall_guard(v, body, crossed);
            crossed.pop();
            g
        }
        Formula::Not(psi) | Formula::Implies(psi, _) => exists_guard(v, psi, crossed),
        _ => None,
    }
}
