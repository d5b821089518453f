//! Helly sentences and the families that separate dimensions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Formula, Term};
use crate::kernel::{int, HalfSpace, Vector};
use crate::region::{regions_intersect, Region};
use crate::{Error, Result};

/// All `k`-element index subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn product_of(names: &[String], indices: &[usize]) -> Term {
    indices[1..]
        .iter()
        .fold(Term::var(&names[indices[0]]), |acc, &i| acc.mul(Term::var(&names[i])))
}

/// The universally closed sentence over the given variable names; requires
/// `names.len() >= dim + 1`.
pub(crate) fn helly_core(dim: usize, names: &[String]) -> Formula {
    let count = names.len();
    let mut hypothesis: Vec<Formula> = subsets(count, dim + 1)
        .iter()
        .map(|s| Formula::neq(product_of(names, s), Term::Zero))
        .collect();
    hypothesis.extend(names.iter().map(|n| Formula::Conv(Term::var(n))));
    let all: Vec<usize> = (0..count).collect();
    let body = Formula::and_all(hypothesis).implies(Formula::neq(product_of(names, &all), Term::Zero));
    names
        .iter()
        .rev()
        .fold(body, |acc, n| Formula::forall(n, acc))
}

/// The Helly sentence for `count` convex regions in dimension `dim`.
pub fn helly_formula(dim: usize, count: usize) -> Result<Formula> {
    if dim == 0 || count < dim + 1 {
        return Err(Error::Precondition(format!(
            "helly sentence needs dim >= 1 and count >= dim + 1, got dim {dim}, count {count}"
        )));
    }
    let names: Vec<String> = (1..=count).map(|i| format!("x{i}")).collect();
    Ok(helly_core(dim, &names))
}

/// `n + 2` open half-spaces in dimension `n + 1`, each `n + 1` of which meet
/// while all of them do not.
pub fn helly_witness(n: usize) -> Result<Vec<Region>> {
    if n == 0 {
        return Err(Error::Precondition("helly witness needs n >= 1".into()));
    }
    let dim = n + 1;
    let mut out: Vec<Region> = (0..dim)
        .map(|i| HalfSpace::less(Vector::unit(dim, i), int(0)).map(|h| Region::from_halfspace(&h)))
        .collect::<Result<_>>()?;
    let ones = Vector::new((0..dim).map(|_| int(1)).collect());
    out.push(Region::from_halfspace(&HalfSpace::greater(ones, int(1))?));
    Ok(out)
}

/// Decides one instance of the Helly implication in the regions' own
/// dimension: if every `dim + 1` of them meet, all of them meet.
pub fn check_helly_instance(regions: &[Region]) -> Result<bool> {
    let dim = regions.first().map_or(0, Region::dim);
    check_helly_implication(regions, dim + 1)
}

/// Whether `subset_size`-wise intersection of the convex family implies
/// total intersection.
pub fn check_helly_implication(regions: &[Region], subset_size: usize) -> Result<bool> {
    let Some(first) = regions.first() else {
        return Err(Error::Precondition("empty family".into()));
    };
    if subset_size == 0 {
        return Err(Error::Precondition("subset size must be positive".into()));
    }
    let dim = first.dim();
    for r in regions {
        crate::error::check_dim(dim, r.dim())?;
        if !r.is_convex() {
            return Err(Error::Precondition("helly instance needs convex regions".into()));
        }
    }
    let k = subset_size.min(regions.len());
    for s in subsets(regions.len(), k) {
        let chosen: Vec<&Region> = s.iter().map(|&i| &regions[i]).collect();
        if !regions_intersect(&chosen)? {
            return Ok(true);
        }
    }
    let all: Vec<&Region> = regions.iter().collect();
    regions_intersect(&all)
}
