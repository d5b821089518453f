//! Regular open rational polytopes and their Boolean algebra.
//!
//! A [`Region`] is stored as a set of full-dimensional cells of the
//! arrangement of its supporting hyperplanes, each cell named by its sign
//! vector. The region denotes the interior of the closure of the union of
//! those cells, which is always regular open. Supports are kept *essential*:
//! a hyperplane is retained only when some pair of adjacent cells across it
//! disagree on membership, i.e. when the region's boundary contains a
//! codimension-one piece of it. With essential supports sorted canonically
//! the representation is unique, so structural equality is set equality.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::kernel::{
    feasible_point, is_feasible, AffineMap, HalfSpace, Hyperplane, LinearConstraint, Side, Vector,
};

/// Default limit on supporting hyperplanes for operations that enumerate a
/// whole arrangement.
pub const DEFAULT_HYPERPLANE_BUDGET: usize = 20;

/// Sign vector aligned with a sorted list of hyperplanes.
pub type SignVector = Vec<Side>;

/// An open convex polyhedral cell given by strict constraints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConvexCell {
    dim: usize,
    constraints: Vec<HalfSpace>,
}

impl ConvexCell {
    /// Sorts and deduplicates the constraints; `None` when the open
    /// intersection is empty.
    pub fn new(dim: usize, mut constraints: Vec<HalfSpace>) -> Result<Option<Self>> {
        for h in &constraints {
            check_dim(dim, h.dim())?;
        }
        constraints.sort();
        constraints.dedup();
        if !is_feasible(dim, &constraints) {
            return Ok(None);
        }
        Ok(Some(ConvexCell { dim, constraints }))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[HalfSpace] {
        &self.constraints
    }

    pub fn contains(&self, point: &Vector) -> bool {
        self.constraints.iter().all(|h| h.contains(point))
    }

    pub fn interior_point(&self) -> Vector {
        let rows: Vec<LinearConstraint> = self.constraints.iter().map(HalfSpace::constraint).collect();
        feasible_point(self.dim, &rows).expect("cells are feasible by construction")
    }

    /// Drops every constraint whose removal leaves the open cell unchanged.
    pub fn reduced(&self) -> ConvexCell {
        let mut kept = self.constraints.clone();
        let mut i = 0;
        while i < kept.len() {
            let mut probe: Vec<HalfSpace> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, h)| h.clone())
                .collect();
            probe.push(kept[i].complement());
            if is_feasible(self.dim, &probe) {
                i += 1;
            } else {
                kept.remove(i);
            }
        }
        ConvexCell {
            dim: self.dim,
            constraints: kept,
        }
    }
}

/// A canonical element of ROQ(ℝⁿ).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Region {
    dim: usize,
    supports: Vec<Hyperplane>,
    cells: BTreeSet<SignVector>,
}

fn constraints_for(supports: &[Hyperplane], signs: &[Side]) -> Vec<HalfSpace> {
    supports
        .iter()
        .zip(signs)
        .map(|(p, &s)| p.half(s))
        .collect()
}

/// Enumerates the full-dimensional sub-cells of the open cell `base` cut by
/// `planes`, returning each sign vector (over `planes`) with an interior point.
fn refine(dim: usize, base: &[HalfSpace], planes: &[Hyperplane]) -> Vec<(SignVector, Vector)> {
    let base_rows: Vec<LinearConstraint> = base.iter().map(HalfSpace::constraint).collect();
    let Some(start) = feasible_point(dim, &base_rows) else {
        return Vec::new();
    };
    let mut cells: Vec<(SignVector, Vector)> = alloc::vec![(Vec::new(), start)];
    for (k, plane) in planes.iter().enumerate() {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for (signs, point) in cells {
            let value = plane.evaluate(&point);
            let known = if value.is_positive() {
                Some(Side::Pos)
            } else if value.is_negative() {
                Some(Side::Neg)
            } else {
                None
            };
            for side in [Side::Pos, Side::Neg] {
                if known == Some(side) {
                    let mut s = signs.clone();
                    s.push(side);
                    next.push((s, point.clone()));
                    continue;
                }
                let mut rows = base_rows.clone();
                rows.extend(
                    constraints_for(&planes[..k], &signs)
                        .iter()
                        .map(HalfSpace::constraint),
                );
                rows.push(plane.half(side).constraint());
                if let Some(p) = feasible_point(dim, &rows) {
                    let mut s = signs.clone();
                    s.push(side);
                    next.push((s, p));
                }
            }
        }
        cells = next;
    }
    cells
}

fn validate_planes(dim: usize, planes: &[Hyperplane]) -> Result<()> {
    for p in planes {
        check_dim(dim, p.dim())?;
    }
    Ok(())
}

/// Full-dimensional cells of the arrangement of `planes`, each with an interior point.
pub fn arrangement(dim: usize, planes: &[Hyperplane]) -> Result<Vec<(SignVector, Vector)>> {
    validate_planes(dim, planes)?;
    Ok(refine(dim, &[], planes))
}

/// Number of full-dimensional cells of the arrangement of distinct hyperplanes.
pub fn count_cells(planes: &[Hyperplane]) -> Result<usize> {
    let dim = planes
        .first()
        .map(Hyperplane::dim)
        .ok_or_else(|| Error::Precondition("count_cells needs at least one hyperplane".into()))?;
    validate_planes(dim, planes)?;
    let mut seen = BTreeSet::new();
    for p in planes {
        if !seen.insert(p) {
            return Err(Error::DuplicateHyperplane(format!("{p}")));
        }
    }
    Ok(refine(dim, &[], planes).len())
}

/// Merged sorted supports and, for each input, the position of each of its
/// supports inside the merged list.
fn merge_supports(a: &[Hyperplane], b: &[Hyperplane]) -> (Vec<Hyperplane>, Vec<usize>, Vec<usize>) {
    let mut merged: Vec<Hyperplane> = a.iter().chain(b).cloned().collect();
    merged.sort();
    merged.dedup();
    let index = |xs: &[Hyperplane]| {
        xs.iter()
            .map(|p| merged.binary_search(p).expect("merged contains every support"))
            .collect::<Vec<_>>()
    };
    let ia = index(a);
    let ib = index(b);
    (merged, ia, ib)
}

impl Region {
    pub fn empty(dim: usize) -> Self {
        Region {
            dim,
            supports: Vec::new(),
            cells: BTreeSet::new(),
        }
    }

    pub fn full(dim: usize) -> Self {
        let mut cells = BTreeSet::new();
        cells.insert(Vec::new());
        Region {
            dim,
            supports: Vec::new(),
            cells,
        }
    }

    pub fn from_halfspace(h: &HalfSpace) -> Self {
        let mut cells = BTreeSet::new();
        cells.insert(alloc::vec![h.side()]);
        Region {
            dim: h.dim(),
            supports: alloc::vec![h.plane().clone()],
            cells,
        }
    }

    /// Regularized union of open convex cells given by constraint lists.
    /// Infeasible cells are dropped; non-canonical input is accepted.
    pub fn from_cells(dim: usize, cells: &[Vec<HalfSpace>]) -> Result<Self> {
        let mut supports: Vec<Hyperplane> = Vec::new();
        for cell in cells {
            for h in cell {
                check_dim(dim, h.dim())?;
                supports.push(h.plane().clone());
            }
        }
        supports.sort();
        supports.dedup();
        let mut out = BTreeSet::new();
        for cell in cells {
            let mut fixed: Vec<Option<Side>> = alloc::vec![None; supports.len()];
            let mut contradictory = false;
            for h in cell {
                let i = supports.binary_search(h.plane()).expect("collected above");
                match fixed[i] {
                    Some(s) if s != h.side() => contradictory = true,
                    _ => fixed[i] = Some(h.side()),
                }
            }
            if contradictory {
                continue;
            }
            let free: Vec<usize> = (0..supports.len()).filter(|&i| fixed[i].is_none()).collect();
            let free_planes: Vec<Hyperplane> = free.iter().map(|&i| supports[i].clone()).collect();
            for (sub, _) in refine(dim, cell, &free_planes) {
                let mut signs: Vec<Side> = fixed.iter().map(|s| s.unwrap_or(Side::Pos)).collect();
                for (&i, s) in free.iter().zip(sub) {
                    signs[i] = s;
                }
                out.insert(signs);
            }
        }
        Ok(Self::normalized(dim, supports, out))
    }

    /// Region made of chosen cells of an arrangement. Sign vectors must be
    /// aligned with `planes`; infeasible ones are an error.
    pub fn from_sign_vectors(dim: usize, planes: &[Hyperplane], signs: &[SignVector]) -> Result<Self> {
        validate_planes(dim, planes)?;
        let mut order: Vec<usize> = (0..planes.len()).collect();
        order.sort_by(|&i, &j| planes[i].cmp(&planes[j]));
        let supports: Vec<Hyperplane> = order.iter().map(|&i| planes[i].clone()).collect();
        for w in supports.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateHyperplane(format!("{}", w[0])));
            }
        }
        let mut cells = BTreeSet::new();
        for sv in signs {
            check_dim(planes.len(), sv.len())?;
            let sorted: SignVector = order.iter().map(|&i| sv[i]).collect();
            if !is_feasible(dim, &constraints_for(&supports, &sorted)) {
                return Err(Error::Precondition("sign vector names an empty cell".into()));
            }
            cells.insert(sorted);
        }
        Ok(Self::normalized(dim, supports, cells))
    }

    /// Drops inessential supports and merges the cells they separated.
    fn normalized(dim: usize, supports: Vec<Hyperplane>, cells: BTreeSet<SignVector>) -> Self {
        let essential: Vec<bool> = (0..supports.len())
            .map(|p| {
                cells.iter().any(|sv| {
                    let mut flipped = sv.clone();
                    flipped[p] = flipped[p].flip();
                    !cells.contains(&flipped)
                        && is_feasible(dim, &constraints_for(&supports, &flipped))
                })
            })
            .collect();
        if essential.iter().all(|&e| e) {
            return Region {
                dim,
                supports,
                cells,
            };
        }
        let keep: Vec<usize> = (0..supports.len()).filter(|&i| essential[i]).collect();
        Region {
            dim,
            supports: keep.iter().map(|&i| supports[i].clone()).collect(),
            cells: cells
                .iter()
                .map(|sv| keep.iter().map(|&i| sv[i]).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Essential supporting hyperplanes, sorted.
    pub fn supports(&self) -> &[Hyperplane] {
        &self.supports
    }

    pub fn sign_vectors(&self) -> impl Iterator<Item = &SignVector> {
        self.cells.iter()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Cells as constraint lists over all supports, in canonical order.
    pub fn cells(&self) -> Vec<ConvexCell> {
        self.cells
            .iter()
            .map(|sv| ConvexCell {
                dim: self.dim,
                constraints: constraints_for(&self.supports, sv),
            })
            .collect()
    }

    /// One interior point per cell.
    pub fn interior_points(&self) -> Vec<Vector> {
        self.cells().iter().map(ConvexCell::interior_point).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.supports.is_empty() && !self.cells.is_empty()
    }

    /// Greatest lower bound: the set intersection.
    pub fn product(&self, other: &Region) -> Result<Region> {
        check_dim(self.dim, other.dim)?;
        let (merged, ia, ib) = merge_supports(&self.supports, &other.supports);
        let mut out = BTreeSet::new();
        for ca in &self.cells {
            'pairs: for cb in &other.cells {
                let mut signs: Vec<Option<Side>> = alloc::vec![None; merged.len()];
                for (&i, &s) in ia.iter().zip(ca) {
                    signs[i] = Some(s);
                }
                for (&i, &s) in ib.iter().zip(cb) {
                    match signs[i] {
                        Some(t) if t != s => continue 'pairs,
                        _ => signs[i] = Some(s),
                    }
                }
                let sv: SignVector = signs.into_iter().map(|s| s.expect("merged = a ∪ b")).collect();
                if is_feasible(self.dim, &constraints_for(&merged, &sv)) {
                    out.insert(sv);
                }
            }
        }
        Ok(Self::normalized(self.dim, merged, out))
    }

    /// Least upper bound: the interior of the closure of the union.
    pub fn sum(&self, other: &Region) -> Result<Region> {
        check_dim(self.dim, other.dim)?;
        let (merged, ia, ib) = merge_supports(&self.supports, &other.supports);
        let mut out = BTreeSet::new();
        for (region, index) in [(self, &ia), (other, &ib)] {
            let free: Vec<usize> = (0..merged.len()).filter(|i| !index.contains(i)).collect();
            let free_planes: Vec<Hyperplane> = free.iter().map(|&i| merged[i].clone()).collect();
            for cell in &region.cells {
                let base = constraints_for(&region.supports, cell);
                for (sub, _) in refine(self.dim, &base, &free_planes) {
                    let mut sv = alloc::vec![Side::Pos; merged.len()];
                    for (&i, &s) in index.iter().zip(cell) {
                        sv[i] = s;
                    }
                    for (&i, s) in free.iter().zip(sub) {
                        sv[i] = s;
                    }
                    out.insert(sv);
                }
            }
        }
        Ok(Self::normalized(self.dim, merged, out))
    }

    /// Regular open complement, enumerating the arrangement of at most
    /// [`DEFAULT_HYPERPLANE_BUDGET`] supports.
    pub fn complement(&self) -> Result<Region> {
        self.complement_with_budget(DEFAULT_HYPERPLANE_BUDGET)
    }

    pub fn complement_with_budget(&self, budget: usize) -> Result<Region> {
        if self.supports.len() > budget {
            return Err(Error::BudgetExceeded {
                count: self.supports.len(),
                budget,
            });
        }
        let cells = refine(self.dim, &[], &self.supports)
            .into_iter()
            .map(|(sv, _)| sv)
            .filter(|sv| !self.cells.contains(sv))
            .collect();
        // The boundary is unchanged, so the supports stay essential.
        Ok(Region {
            dim: self.dim,
            supports: self.supports.clone(),
            cells,
        })
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Region) -> Result<bool> {
        Ok(&self.product(other)? == self)
    }

    pub fn equals(&self, other: &Region) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(self == other)
    }

    /// Convexity via the product criterion: the region equals the product of
    /// its supporting half-spaces that contain it.
    pub fn is_convex(&self) -> bool {
        if self.cells.is_empty() {
            return true;
        }
        let mut containing = Vec::new();
        for (i, plane) in self.supports.iter().enumerate() {
            let mut sides = self.cells.iter().map(|sv| sv[i]);
            let first = sides.next().expect("nonempty");
            if sides.all(|s| s == first) {
                containing.push(plane.half(first));
            } else {
                return false;
            }
        }
        match Region::from_cells(self.dim, &[containing]) {
            Ok(hull) => &hull == self,
            Err(_) => false,
        }
    }

    /// The bounding half-space, when the region is one.
    pub fn as_halfspace(&self) -> Option<HalfSpace> {
        if self.supports.len() == 1 && self.cells.len() == 1 {
            let side = self.cells.iter().next().expect("one cell")[0];
            Some(self.supports[0].half(side))
        } else {
            None
        }
    }

    /// Exact membership of any rational point, including points on supports.
    pub fn contains_point(&self, point: &Vector) -> bool {
        debug_assert_eq!(point.dim(), self.dim);
        let mut signs = Vec::with_capacity(self.supports.len());
        let mut zeros = Vec::new();
        for (i, plane) in self.supports.iter().enumerate() {
            let v = plane.evaluate(point);
            if v.is_positive() {
                signs.push(Side::Pos);
            } else if v.is_negative() {
                signs.push(Side::Neg);
            } else {
                signs.push(Side::Pos);
                zeros.push(i);
            }
        }
        if zeros.is_empty() {
            return self.cells.contains(&signs);
        }
        // Every cell touching the point must belong to the region.
        let through: Vec<Hyperplane> = zeros
            .iter()
            .map(|&i| {
                Hyperplane::new(self.supports[i].normal().clone(), num_rational::BigRational::zero())
                    .expect("support normals are nonzero")
            })
            .collect();
        refine(self.dim, &[], &through).into_iter().all(|(local, _)| {
            let mut sv = signs.clone();
            for (&i, s) in zeros.iter().zip(local) {
                sv[i] = s;
            }
            self.cells.contains(&sv)
        })
    }

    pub fn is_bounded(&self) -> bool {
        self.cells
            .iter()
            .all(|sv| cell_is_bounded(self.dim, &constraints_for(&self.supports, sv)))
    }

    /// Image under an affine map, in canonical form.
    pub fn transform(&self, map: &AffineMap) -> Result<Region> {
        check_dim(map.dim(), self.dim)?;
        let images: Vec<(Hyperplane, bool)> = self
            .supports
            .iter()
            .map(|p| map.transform_plane(p))
            .collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..images.len()).collect();
        order.sort_by(|&i, &j| images[i].0.cmp(&images[j].0));
        let supports = order.iter().map(|&i| images[i].0.clone()).collect();
        let cells = self
            .cells
            .iter()
            .map(|sv| order.iter().map(|&i| sv[i].flipped_if(images[i].1)).collect())
            .collect();
        Ok(Region {
            dim: self.dim,
            supports,
            cells,
        })
    }
}

/// An open cell is bounded iff its recession cone is `{0}`.
fn cell_is_bounded(dim: usize, constraints: &[HalfSpace]) -> bool {
    let cone: Vec<LinearConstraint> = constraints
        .iter()
        .map(|h| {
            let c = h.constraint();
            LinearConstraint::non_strict(c.normal, num_rational::BigRational::zero())
        })
        .collect();
    for axis in 0..dim {
        for sign in [1i64, -1] {
            let mut rows = cone.clone();
            rows.push(LinearConstraint::non_strict(
                Vector::unit(dim, axis).scale(&crate::kernel::int(sign)),
                num_rational::BigRational::one(),
            ));
            if feasible_point(dim, &rows).is_some() {
                return false;
            }
        }
    }
    true
}

/// Whether the intersection of all regions is nonempty, by backtracking over
/// one cell per region.
pub fn regions_intersect(regions: &[&Region]) -> Result<bool> {
    let Some(first) = regions.first() else {
        return Err(Error::Precondition("regions_intersect needs at least one region".into()));
    };
    for r in regions {
        check_dim(first.dim, r.dim)?;
    }
    fn search(dim: usize, regions: &[&Region], acc: &mut Vec<HalfSpace>) -> bool {
        let Some((r, rest)) = regions.split_first() else {
            return true;
        };
        for sv in &r.cells {
            let mark = acc.len();
            acc.extend(constraints_for(&r.supports, sv));
            if (acc.is_empty() || is_feasible(dim, acc)) && search(dim, rest, acc) {
                return true;
            }
            acc.truncate(mark);
        }
        false
    }
    Ok(search(first.dim, regions, &mut Vec::new()))
}

/// Canonical region equal to the regularized union of the given open cells.
pub fn region_from_halfspaces(dim: usize, cells: &[Vec<HalfSpace>]) -> Result<Region> {
    Region::from_cells(dim, cells)
}

pub fn product(a: &Region, b: &Region) -> Result<Region> {
    a.product(b)
}

pub fn sum(a: &Region, b: &Region) -> Result<Region> {
    a.sum(b)
}

pub fn complement(a: &Region) -> Result<Region> {
    a.complement()
}

pub fn leq(a: &Region, b: &Region) -> Result<bool> {
    a.leq(b)
}

pub fn equals(a: &Region, b: &Region) -> Result<bool> {
    a.equals(b)
}

pub fn is_empty(a: &Region) -> bool {
    a.is_empty()
}

pub fn is_convex(a: &Region) -> bool {
    a.is_convex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rational, Side::*};
    use alloc::vec;

    fn hs(coeffs: &[i64], offset: i64, side: Side) -> HalfSpace {
        HalfSpace::from_ints(coeffs, offset, side).unwrap()
    }

    fn square(lo: i64, hi: i64, lo_y: i64, hi_y: i64) -> Vec<HalfSpace> {
        vec![
            hs(&[1, 0], lo, Pos),
            hs(&[1, 0], hi, Neg),
            hs(&[0, 1], lo_y, Pos),
            hs(&[0, 1], hi_y, Neg),
        ]
    }

    #[test]
    fn single_halfspace_cell() {
        let h = hs(&[1, 0, 0], 0, Pos);
        let r = region_from_halfspaces(3, &[vec![h.clone()]]).unwrap();
        assert_eq!(r, Region::from_halfspace(&h));
        assert_eq!(r.as_halfspace(), Some(h));
    }

    #[test]
    fn infeasible_cell_gives_zero() {
        let r = region_from_halfspaces(1, &[vec![hs(&[1], 0, Pos), hs(&[1], 0, Neg)]]).unwrap();
        assert!(r.is_empty());
        assert_eq!(r, Region::empty(1));
    }

    #[test]
    fn nested_cells_collapse_to_the_larger() {
        let h = HalfSpace::greater(Vector::from_ints(&[1]), rational(1, 2)).unwrap();
        let r = region_from_halfspaces(1, &[vec![hs(&[1], 0, Pos)], vec![h]]).unwrap();
        assert_eq!(r, Region::from_halfspace(&hs(&[1], 0, Pos)));
    }

    #[test]
    fn product_and_sum_of_opposite_halfspaces() {
        let a = Region::from_halfspace(&hs(&[1, 0], 0, Pos));
        let b = Region::from_halfspace(&hs(&[1, 0], 0, Neg));
        assert!(a.product(&b).unwrap().is_empty());
        assert_eq!(a.sum(&b).unwrap(), Region::full(2));
        assert_eq!(a.product(&Region::full(2)).unwrap(), a);
        assert_eq!(a.sum(&Region::empty(2)).unwrap(), a);
    }

    #[test]
    fn complement_of_unit_square_has_four_supports_and_eight_cells() {
        let sq = region_from_halfspaces(2, &[square(0, 1, 0, 1)]).unwrap();
        let out = sq.complement().unwrap();
        assert_eq!(out.supports().len(), 4);
        // 3×3 grid of the four lines minus the middle cell
        assert_eq!(out.cell_count(), 8);
        assert_eq!(out.complement().unwrap(), sq);
        assert_eq!(Region::full(2).complement().unwrap(), Region::empty(2));
    }

    #[test]
    fn inclusion_examples() {
        let sq = region_from_halfspaces(2, &[square(0, 1, 0, 1)]).unwrap();
        let right = Region::from_halfspace(&hs(&[1, 0], 0, Pos));
        assert!(sq.leq(&right).unwrap());
        assert!(!right.leq(&sq).unwrap());
        assert!(Region::empty(2).leq(&sq).unwrap());
        let x1 = Region::from_halfspace(&hs(&[1, 0], 1, Pos));
        assert!(x1.leq(&right).unwrap());
        assert!(!right.equals(&x1).unwrap());
    }

    #[test]
    fn l_shape_built_two_ways_is_equal_and_not_convex() {
        let a = region_from_halfspaces(2, &[square(0, 2, 0, 1), square(0, 1, 0, 2)]).unwrap();
        let b = region_from_halfspaces(2, &[square(0, 1, 0, 1), square(1, 2, 0, 1), square(0, 1, 1, 2)])
            .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.cell_count(), 3);
        assert!(!a.is_convex());
        assert!(!a.contains_point(&Vector::from_ints(&[1, 1])));
        assert!(a.contains_point(&Vector::new(vec![int(1), rational(1, 2)])));
        assert!(a.is_bounded());
    }

    #[test]
    fn convexity_of_trivial_regions() {
        assert!(Region::full(3).is_convex());
        assert!(Region::empty(3).is_convex());
        assert!(Region::from_halfspace(&hs(&[1, 2, 3], 4, Neg)).is_convex());
    }

    #[test]
    fn triangle_interior_is_nonempty() {
        let tri = region_from_halfspaces(
            2,
            &[vec![hs(&[1, 0], 0, Pos), hs(&[0, 1], 0, Pos), hs(&[1, 1], 1, Neg)]],
        )
        .unwrap();
        assert!(!tri.is_empty());
        assert!(tri.is_convex());
        assert!(tri.is_bounded());
    }

    #[test]
    fn arrangement_counts() {
        let x = Hyperplane::coordinate(3, 0, int(0));
        let y = Hyperplane::coordinate(3, 1, int(0));
        let z = Hyperplane::coordinate(3, 2, int(0));
        assert_eq!(count_cells(std::slice::from_ref(&x)).unwrap(), 2);
        assert_eq!(count_cells(&[x.clone(), y.clone(), z]).unwrap(), 8);
        let diag = Hyperplane::new(Vector::from_ints(&[1, 1, 0]), int(0)).unwrap();
        assert_eq!(count_cells(&[x.clone(), y.clone(), diag]).unwrap(), 6);
        assert!(matches!(count_cells(&[x.clone(), x]), Err(Error::DuplicateHyperplane(_))));
    }

    #[test]
    fn points_on_seams_and_corners() {
        let a = Region::from_halfspace(&hs(&[1, 0], 0, Pos));
        let b = Region::from_halfspace(&hs(&[1, 0], 0, Neg));
        let whole = a.sum(&b).unwrap();
        assert!(whole.contains_point(&Vector::from_ints(&[0, 5])));
        assert!(!a.contains_point(&Vector::from_ints(&[0, 5])));
    }

    #[test]
    fn complement_budget_is_enforced() {
        let sq = region_from_halfspaces(2, &[square(0, 1, 0, 1)]).unwrap();
        assert_eq!(
            sq.complement_with_budget(3),
            Err(Error::BudgetExceeded { count: 4, budget: 3 })
        );
    }

    #[test]
    fn dimension_mismatch_in_binary_ops() {
        let a = Region::full(2);
        let b = Region::full(3);
        assert!(a.product(&b).is_err());
        assert!(a.sum(&b).is_err());
        assert!(a.leq(&b).is_err());
    }

    #[test]
    fn multiway_intersection() {
        let neg = |i: usize| {
            let mut c = [0i64; 3];
            c[i] = 1;
            Region::from_halfspace(&hs(&c, 0, Neg))
        };
        let top = Region::from_halfspace(&hs(&[1, 1, 1], 1, Pos));
        let (a, b, c) = (neg(0), neg(1), neg(2));
        assert!(regions_intersect(&[&a, &b, &c]).unwrap());
        assert!(regions_intersect(&[&a, &b, &top]).unwrap());
        assert!(!regions_intersect(&[&a, &b, &c, &top]).unwrap());
    }

    #[test]
    fn reduced_cell_drops_redundant_constraints() {
        let cell = ConvexCell::new(1, vec![hs(&[1], 0, Pos), hs(&[1], 1, Pos), hs(&[1], 5, Neg)])
            .unwrap()
            .unwrap();
        assert_eq!(cell.reduced().constraints(), &[hs(&[1], 1, Pos), hs(&[1], 5, Neg)][..]);
    }
}
