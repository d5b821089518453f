//! Feasibility of systems of strict and non-strict linear inequalities by
//! exact Fourier–Motzkin elimination.
//!
//! Rows are scaled to primitive integer coefficients before elimination; parallel
//! rows are merged keeping the tightest bound, which keeps the intermediate
//! systems small in the low dimensions this crate targets.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{HalfSpace, Rational, Vector};
use crate::error::{check_dim, Result};

/// `normal·x > offset` when strict, `normal·x ≥ offset` otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub normal: Vector,
    pub offset: Rational,
    pub strict: bool,
}

impl LinearConstraint {
    pub fn strict(normal: Vector, offset: Rational) -> Self {
        LinearConstraint {
            normal,
            offset,
            strict: true,
        }
    }

    pub fn non_strict(normal: Vector, offset: Rational) -> Self {
        LinearConstraint {
            normal,
            offset,
            strict: false,
        }
    }

    pub fn is_satisfied(&self, point: &Vector) -> bool {
        let lhs = self.normal.dot(point);
        if self.strict {
            lhs > self.offset
        } else {
            lhs >= self.offset
        }
    }
}

/// A point strictly inside every half-space, or `None` when the open
/// intersection is empty.
pub fn feasible_interior(constraints: &[HalfSpace]) -> Result<Option<Vector>> {
    let Some(first) = constraints.first() else {
        return Err(crate::error::Error::Precondition(
            "dimension of an empty constraint list is unknown".into(),
        ));
    };
    let dim = first.dim();
    let rows: Vec<LinearConstraint> = constraints
        .iter()
        .map(|h| {
            check_dim(dim, h.dim())?;
            Ok(h.constraint())
        })
        .collect::<Result<_>>()?;
    Ok(feasible_point(dim, &rows))
}

/// Decision-only variant of [`feasible_interior`].
pub fn is_feasible(dim: usize, constraints: &[HalfSpace]) -> bool {
    let mut system = System::new(dim);
    for h in constraints {
        debug_assert_eq!(h.dim(), dim);
        if !system.push(&h.constraint()) {
            return false;
        }
    }
    system.eliminate_all(false).is_some()
}

/// A point satisfying every constraint in ℝ^`dim`, or `None`.
pub fn feasible_point(dim: usize, constraints: &[LinearConstraint]) -> Option<Vector> {
    let mut system = System::new(dim);
    for c in constraints {
        debug_assert_eq!(c.normal.dim(), dim);
        if !system.push(c) {
            return None;
        }
    }
    let levels = system.eliminate_all(true)?;
    Some(back_substitute(dim, &levels))
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<BigInt>,
    bound: Rational,
    strict: bool,
}

#[derive(Clone, Debug)]
struct System {
    dim: usize,
    /// Keyed by the primitive coefficient vector; value is the tightest bound.
    rows: BTreeMap<Vec<BigInt>, (Rational, bool)>,
}

/// One elimination step: the variable removed and the system it was removed from.
struct Level {
    var: usize,
    rows: Vec<Row>,
}

impl System {
    fn new(dim: usize) -> Self {
        System {
            dim,
            rows: BTreeMap::new(),
        }
    }

    /// Adds a rational constraint. Returns false if it is a violated constant.
    fn push(&mut self, c: &LinearConstraint) -> bool {
        let lcm = c
            .normal
            .coords()
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let factor = Rational::from_integer(lcm);
        let row = Row {
            coeffs: c
                .normal
                .coords()
                .iter()
                .map(|q| (q * &factor).to_integer())
                .collect(),
            bound: &c.offset * &factor,
            strict: c.strict,
        };
        self.insert(row)
    }

    fn insert(&mut self, mut row: Row) -> bool {
        let g = row
            .coeffs
            .iter()
            .fold(BigInt::zero(), |acc, a| acc.gcd(a));
        if g.is_zero() {
            // 0 > b  or  0 ≥ b
            return if row.strict {
                row.bound.is_negative()
            } else {
                !row.bound.is_positive()
            };
        }
        if !g.is_one() {
            for a in row.coeffs.iter_mut() {
                *a /= &g;
            }
            row.bound /= Rational::from_integer(g);
        }
        match self.rows.get_mut(&row.coeffs) {
            Some((bound, strict)) => {
                if row.bound > *bound || (row.bound == *bound && row.strict && !*strict) {
                    *bound = row.bound;
                    *strict = row.strict;
                }
            }
            None => {
                self.rows.insert(row.coeffs, (row.bound, row.strict));
            }
        }
        true
    }

    fn snapshot(&self) -> Vec<Row> {
        self.rows
            .iter()
            .map(|(coeffs, (bound, strict))| Row {
                coeffs: coeffs.clone(),
                bound: bound.clone(),
                strict: *strict,
            })
            .collect()
    }

    /// Eliminates every variable. Returns the recorded levels when feasible.
    fn eliminate_all(mut self, record: bool) -> Option<Vec<Level>> {
        let mut remaining: Vec<usize> = (0..self.dim).collect();
        let mut levels = Vec::new();
        while !remaining.is_empty() {
            let (pos, var) = remaining
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| self.elimination_cost(v))
                .map(|(i, &v)| (i, v))
                .expect("nonempty");
            remaining.swap_remove(pos);
            let rows = self.snapshot();
            let mut next = System::new(self.dim);
            let (mut lower, mut upper) = (Vec::new(), Vec::new());
            for row in &rows {
                match row.coeffs[var].sign() {
                    num_bigint::Sign::Plus => lower.push(row),
                    num_bigint::Sign::Minus => upper.push(row),
                    num_bigint::Sign::NoSign => {
                        next.insert(row.clone());
                    }
                }
            }
            for lo in &lower {
                for up in &upper {
                    let a = &lo.coeffs[var];
                    let b = -&up.coeffs[var];
                    let (ra, rb) = (Rational::from_integer(a.clone()), Rational::from_integer(b.clone()));
                    let combined = Row {
                        coeffs: lo
                            .coeffs
                            .iter()
                            .zip(&up.coeffs)
                            .map(|(x, y)| x * &b + y * a)
                            .collect(),
                        bound: &lo.bound * &rb + &up.bound * &ra,
                        strict: lo.strict || up.strict,
                    };
                    if !next.insert(combined) {
                        return None;
                    }
                }
            }
            if record {
                levels.push(Level { var, rows });
            }
            self = next;
        }
        Some(levels)
    }

    fn elimination_cost(&self, var: usize) -> usize {
        let (mut p, mut n) = (0usize, 0usize);
        for coeffs in self.rows.keys() {
            match coeffs[var].sign() {
                num_bigint::Sign::Plus => p += 1,
                num_bigint::Sign::Minus => n += 1,
                num_bigint::Sign::NoSign => {}
            }
        }
        p * n
    }
}

fn back_substitute(dim: usize, levels: &[Level]) -> Vector {
    let mut values: Vec<Option<Rational>> = alloc::vec![None; dim];
    for level in levels.iter().rev() {
        let mut lower: Option<(Rational, bool)> = None;
        let mut upper: Option<(Rational, bool)> = None;
        for row in &level.rows {
            let a = &row.coeffs[level.var];
            if a.is_zero() {
                continue;
            }
            // a·x_var > bound − Σ_{others} coeffs·x
            let mut rest = row.bound.clone();
            for (i, c) in row.coeffs.iter().enumerate() {
                if i != level.var && !c.is_zero() {
                    let v = values[i].as_ref().expect("later variables are fixed first");
                    rest -= Rational::from_integer(c.clone()) * v;
                }
            }
            let limit = rest / Rational::from_integer(a.clone());
            if a.is_positive() {
                tighten(&mut lower, limit, row.strict, true);
            } else {
                tighten(&mut upper, limit, row.strict, false);
            }
        }
        values[level.var] = Some(pick_between(lower, upper));
    }
    Vector::new(values.into_iter().map(|v| v.unwrap_or_else(Rational::zero)).collect())
}

fn tighten(slot: &mut Option<(Rational, bool)>, limit: Rational, strict: bool, is_lower: bool) {
    let replace = match slot {
        None => true,
        Some((cur, cur_strict)) => {
            if is_lower {
                limit > *cur || (limit == *cur && strict && !*cur_strict)
            } else {
                limit < *cur || (limit == *cur && strict && !*cur_strict)
            }
        }
    };
    if replace {
        *slot = Some((limit, strict));
    }
}

/// A simple value inside the interval: the integer closest to zero when one
/// exists, otherwise the midpoint.
fn pick_between(lower: Option<(Rational, bool)>, upper: Option<(Rational, bool)>) -> Rational {
    let lo_int = lower.as_ref().map(|(l, strict)| {
        if *strict {
            l.floor() + Rational::one()
        } else {
            l.ceil()
        }
    });
    let hi_int = upper.as_ref().map(|(u, strict)| {
        if *strict {
            u.ceil() - Rational::one()
        } else {
            u.floor()
        }
    });
    let zero = Rational::zero();
    let candidate = match (&lo_int, &hi_int) {
        (None, None) => Some(zero),
        (Some(lo), None) => Some(if lo > &zero { lo.clone() } else { zero }),
        (None, Some(hi)) => Some(if hi < &zero { hi.clone() } else { zero }),
        (Some(lo), Some(hi)) if lo <= hi => Some(if lo > &zero {
            lo.clone()
        } else if hi < &zero {
            hi.clone()
        } else {
            zero
        }),
        _ => None,
    };
    match candidate {
        Some(v) => v,
        None => {
            let (l, _) = lower.expect("bounded interval");
            let (u, _) = upper.expect("bounded interval");
            (l + u) / Rational::from_integer(BigInt::from(2))
        }
    }
}
