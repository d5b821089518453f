//! The Helly separation experiment.
//!
//! The sentence for `N` convex regions holds in every dimension-`n`
//! structure but fails one dimension up. The suite certifies the failure on
//! an explicit family and searches seeded dimension-`n` families for a
//! counterexample, which must not exist.

use roq_core::logic::{check_helly_implication, evaluate_with, helly_formula, helly_witness, Assignment, EvalOptions, Formula, Truth, Verdict};
use roq_core::region::Region;

use crate::random;
use crate::Failure;

#[derive(Clone, Debug)]
pub struct HellyReport {
    pub dim: usize,
    pub count: usize,
    pub sentence: Formula,
    /// Separating family in dimension `dim + 1`; absent when `count` is too
    /// small for the sentence to say more than its hypothesis.
    pub witness: Option<Vec<Region>>,
    /// The sentence evaluated one dimension up, seeded with the witness.
    pub verdict: Option<Verdict>,
    /// The counterexample tuple returned by the evaluator passed the
    /// independent convexity and intersection check.
    pub certified: bool,
    pub samples: usize,
    /// Sampled families whose every `dim + 1` members meet.
    pub nonvacuous: usize,
    pub counterexample: Option<Vec<Region>>,
}

impl HellyReport {
    pub fn separates(&self) -> bool {
        self.certified && self.verdict.as_ref().is_some_and(|v| v.value == Truth::False) && self.counterexample.is_none()
    }

    /// One-line summary, e.g. `False in M^3, no counterexample found in M^2 (500 samples)`.
    pub fn summary(&self) -> String {
        let up = match &self.verdict {
            Some(v) => format!("{} in M^{}", truth_text(v.value), self.dim + 1),
            None => format!("no separation for {} regions", self.count),
        };
        let down = match &self.counterexample {
            None => format!("no counterexample found in M^{} ({} samples)", self.dim, self.samples),
            Some(_) => format!("counterexample found in M^{}", self.dim),
        };
        format!("{up}, {down}")
    }
}

pub fn truth_text(t: Truth) -> &'static str {
    match t {
        Truth::True => "True",
        Truth::False => "False",
        Truth::Unknown => "Unknown",
    }
}

/// Pads the standard `dim + 2` family with copies of the whole space.
pub fn separating_family(dim: usize, count: usize) -> Result<Option<Vec<Region>>, Failure> {
    if count < dim + 2 {
        return Ok(None);
    }
    let mut family = helly_witness(dim)?;
    family.resize(count, Region::full(dim + 1));
    Ok(Some(family))
}

fn certify(tuple: &[Region], dim: usize) -> bool {
    tuple.iter().all(Region::is_convex) && matches!(check_helly_implication(tuple, dim + 1), Ok(false))
}

pub fn helly_suite(dim: usize, count: usize, samples: usize, seed: u64, options: EvalOptions) -> Result<HellyReport, Failure> {
    let sentence = helly_formula(dim, count)?;
    let witness = separating_family(dim, count)?;
    let (verdict, certified) = match &witness {
        Some(family) => {
            let seeds: Assignment = family.iter().enumerate().map(|(i, r)| (format!("w{i}"), r.clone())).collect();
            let v = evaluate_with(dim + 1, &sentence, &seeds, options)?;
            let tuple: Vec<Region> = v.witness.iter().map(|(_, r)| r.clone()).collect();
            let ok = v.value == Truth::False && tuple.len() == count && certify(&tuple, dim);
            (Some(v), ok)
        }
        None => (None, false),
    };
    let mut rng = random::rng(seed);
    let mut nonvacuous = 0;
    let mut counterexample = None;
    for _ in 0..samples {
        let family = random::convex_family(&mut rng, dim, count);
        if !check_helly_implication(&family, dim + 1)? {
            counterexample.get_or_insert(family);
            continue;
        }
        // The implication held; its hypothesis did exactly when all meet.
        let all: Vec<&Region> = family.iter().collect();
        if roq_core::region::regions_intersect(&all)? {
            nonvacuous += 1;
        }
    }
    Ok(HellyReport { dim, count, sentence, witness, verdict, certified, samples, nonvacuous, counterexample })
}
