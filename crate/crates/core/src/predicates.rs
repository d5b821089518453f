//! Semantic deciders for the geometric relations definable over
//! `⟨ROQ(ℝⁿ), conv, ≤⟩`: half-space recognition, parallel and intersecting
//! planes, fan/prism/corner triples, coordinate frames in ℝ³, and relations
//! between lines inside a reference plane.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::kernel::{
    affine_from_simplex, apply_affine, intersect_planes, AffineMap, HalfSpace, Hyperplane, Vector,
};
use crate::region::{count_cells, Region};

/// The bounding half-space of `r` when both `r` and its complement are convex
/// and `r` is neither 0 nor 1.
pub fn halfspace_of(r: &Region) -> Option<HalfSpace> {
    if r.is_empty() || r.is_full() || !r.is_convex() {
        return None;
    }
    let complement = r.complement().ok()?;
    if !complement.is_convex() {
        return None;
    }
    r.as_halfspace()
}

pub fn is_halfspace_region(r: &Region) -> bool {
    halfspace_of(r).is_some()
}

/// Every region is a half-space, and no two are equal or complementary.
pub fn hs_distinct(rs: &[Region]) -> bool {
    let mut planes = Vec::with_capacity(rs.len());
    for r in rs {
        match halfspace_of(r) {
            Some(h) => planes.push(h.plane().clone()),
            None => return false,
        }
    }
    // Equal or complementary half-spaces are exactly those sharing a plane.
    (0..planes.len()).all(|i| (i + 1..planes.len()).all(|j| planes[i] != planes[j]))
}

fn require_distinct(a: &HalfSpace, b: &HalfSpace) -> Result<()> {
    check_dim(a.dim(), b.dim())?;
    if a.plane() == b.plane() {
        return Err(Error::Precondition(
            "half-spaces must be distinct and non-complementary".into(),
        ));
    }
    Ok(())
}

/// Distinct parallel bounding planes.
pub fn planes_parallel(a: &HalfSpace, b: &HalfSpace) -> Result<bool> {
    require_distinct(a, b)?;
    Ok(a.plane().is_parallel_to(b.plane()))
}

/// Bounding planes meet in a codimension-two flat.
pub fn planes_meet_in_line(a: &HalfSpace, b: &HalfSpace) -> Result<bool> {
    Ok(!planes_parallel(a, b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TripleTag {
    Fan,
    Prism,
    Corner,
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleClass {
    pub tag: TripleTag,
    /// Cells in the arrangement of the distinct bounding planes.
    pub cell_count: usize,
}

/// Classifies three half-spaces of ℝ³ by the arrangement of their planes.
pub fn classify_triple(a: &HalfSpace, b: &HalfSpace, c: &HalfSpace) -> TripleClass {
    let mut planes: Vec<Hyperplane> = [a, b, c].iter().map(|h| h.plane().clone()).collect();
    let same_dim = planes.iter().all(|p| p.dim() == planes[0].dim());
    let pairwise_lines = same_dim
        && (0..3).all(|i| {
            (i + 1..3).all(|j| planes[i] != planes[j] && !planes[i].is_parallel_to(&planes[j]))
        });
    planes.sort();
    planes.dedup();
    let cell_count = if same_dim {
        count_cells(&planes).unwrap_or(0)
    } else {
        0
    };
    let tag = if !pairwise_lines || planes[0].dim() != 3 {
        TripleTag::Degenerate
    } else {
        match cell_count {
            6 => TripleTag::Fan,
            7 => TripleTag::Prism,
            8 => TripleTag::Corner,
            _ => TripleTag::Degenerate,
        }
    };
    TripleClass { tag, cell_count }
}

/// The line `reference ∩ cutter`, viewed inside the reference plane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineInPlane {
    reference: Hyperplane,
    cutter: Hyperplane,
}

impl LineInPlane {
    pub fn new(reference: Hyperplane, cutter: Hyperplane) -> Result<Self> {
        check_dim(3, reference.dim())?;
        check_dim(3, cutter.dim())?;
        if reference.is_parallel_to(&cutter) || reference == cutter {
            return Err(Error::Degenerate("cutter must cross the reference plane".into()));
        }
        Ok(LineInPlane { reference, cutter })
    }

    pub fn reference(&self) -> &Hyperplane {
        &self.reference
    }

    pub fn cutter(&self) -> &Hyperplane {
        &self.cutter
    }

    pub fn direction(&self) -> Vector {
        self.reference.normal().cross(self.cutter.normal())
    }

    /// The point of the line closest to the origin in the coordinate metric.
    pub fn point(&self) -> Vector {
        let d = self.direction();
        let through_origin = Hyperplane::new(d, num_rational::BigRational::zero())
            .expect("direction of a genuine line is nonzero");
        intersect_planes(&[&self.reference, &self.cutter, &through_origin])
            .expect("normals of a line and its direction are independent")
    }

    pub fn contains(&self, p: &Vector) -> bool {
        self.reference.contains(p) && self.cutter.contains(p)
    }

    /// Image under an affine map of ℝ³.
    pub fn transform(&self, map: &AffineMap) -> Result<LineInPlane> {
        let (reference, _) = map.transform_plane(&self.reference)?;
        let (cutter, _) = map.transform_plane(&self.cutter)?;
        LineInPlane::new(reference, cutter)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineRelation {
    Coincident,
    Parallel,
    Point(Vector),
}

/// Relative position of two lines sharing a reference plane.
pub fn classify_lines_in_plane(l1: &LineInPlane, l2: &LineInPlane) -> Result<LineRelation> {
    if l1.reference != l2.reference {
        return Err(Error::Precondition("lines lie in different reference planes".into()));
    }
    if l1.direction().is_proportional(&l2.direction()) {
        return Ok(if l2.contains(&l1.point()) {
            LineRelation::Coincident
        } else {
            LineRelation::Parallel
        });
    }
    let p = intersect_planes(&[&l1.reference, &l1.cutter, &l2.cutter])
        .expect("non-parallel coplanar lines meet in one point");
    Ok(LineRelation::Point(p))
}

/// The single point common to all lines of one reference plane, if the
/// common intersection is exactly one point. Repeated lines are allowed.
pub fn common_point(lines: &[&LineInPlane]) -> Option<Vector> {
    let first = lines.first()?;
    let mut point = None;
    for other in &lines[1..] {
        match classify_lines_in_plane(first, other).ok()? {
            LineRelation::Coincident => {}
            LineRelation::Parallel => return None,
            LineRelation::Point(p) => {
                point = Some(p);
                break;
            }
        }
    }
    let p = point?;
    lines.iter().all(|l| l.contains(&p)).then_some(p)
}

/// Three pairwise non-coincident lines of one plane through one point.
pub fn concurrent_in_plane(l1: &LineInPlane, l2: &LineInPlane, l3: &LineInPlane) -> Result<bool> {
    for (a, b) in [(l1, l2), (l1, l3), (l2, l3)] {
        if classify_lines_in_plane(a, b)? == LineRelation::Coincident {
            return Err(Error::Precondition("lines must be pairwise non-coincident".into()));
        }
    }
    Ok(common_point(&[l1, l2, l3]).is_some())
}

/// A validated coordinate frame of ℝ³.
///
/// Planes `P₀, P₁, P₂` bound the corner and `P₃` the unit half-space. Axis
/// `j` is the line common to the corner planes other than `Pⱼ`, and unit
/// `Iⱼ` is where axis `j` crosses `P₃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameWitness {
    halfspaces: [HalfSpace; 4],
    origin: Vector,
    axes: [LineInPlane; 3],
    units: [Vector; 3],
    to_canonical: AffineMap,
}

/// The two corner indices other than `j`, in increasing order.
fn others(j: usize) -> (usize, usize) {
    match j {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// The corner plane index that is neither `a` nor `b`.
pub(crate) fn third(a: usize, b: usize) -> usize {
    3 - a - b
}

impl FrameWitness {
    pub fn halfspaces(&self) -> &[HalfSpace; 4] {
        &self.halfspaces
    }

    pub fn plane(&self, k: usize) -> &Hyperplane {
        self.halfspaces[k].plane()
    }

    pub fn origin(&self) -> &Vector {
        &self.origin
    }

    pub fn axis(&self, j: usize) -> &LineInPlane {
        &self.axes[j]
    }

    pub fn unit(&self, j: usize) -> &Vector {
        &self.units[j]
    }

    /// Points `O, I₀, I₁, I₂`.
    pub fn simplex(&self) -> [Vector; 4] {
        [
            self.origin.clone(),
            self.units[0].clone(),
            self.units[1].clone(),
            self.units[2].clone(),
        ]
    }

    /// The affine map sending `O` to the origin and each `Iⱼ` to `eⱼ`.
    pub fn to_canonical(&self) -> &AffineMap {
        &self.to_canonical
    }

    /// Coordinates of `p` in this frame.
    pub fn coordinates(&self, p: &Vector) -> Vector {
        self.to_canonical.apply(p)
    }

    /// Axis `axis` seen as a line inside corner plane `plane`.
    pub fn axis_in(&self, plane: usize, axis: usize) -> Result<LineInPlane> {
        if plane == axis || plane > 2 || axis > 2 {
            return Err(Error::Precondition("axis must lie in the chosen corner plane".into()));
        }
        LineInPlane::new(self.plane(plane).clone(), self.plane(third(plane, axis)).clone())
    }

    /// Trace of the unit plane on corner plane `plane`.
    pub fn unit_line(&self, plane: usize) -> Result<LineInPlane> {
        if plane > 2 {
            return Err(Error::Precondition("reference plane index must be 0, 1 or 2".into()));
        }
        LineInPlane::new(self.plane(plane).clone(), self.plane(3).clone())
    }

    /// Image of the frame under an invertible affine map.
    pub fn transform(&self, map: &AffineMap) -> Result<FrameWitness> {
        let hs: Vec<HalfSpace> = self
            .halfspaces
            .iter()
            .map(|h| apply_affine(map, h))
            .collect::<Result<_>>()?;
        check_frame(&hs[0], &hs[1], &hs[2], &hs[3])
            .ok_or_else(|| Error::Degenerate("affine image is not a frame".into()))
    }
}

/// Corner on the first three planes, each crossed by the fourth in a line.
pub fn is_frame_configuration(h1: &HalfSpace, h2: &HalfSpace, h3: &HalfSpace, h4: &HalfSpace) -> bool {
    classify_triple(h1, h2, h3).tag == TripleTag::Corner
        && [h1, h2, h3]
            .iter()
            .all(|h| planes_meet_in_line(h, h4).unwrap_or(false))
}

/// A frame witness when the configuration holds, the unit plane avoids `O`,
/// and it crosses every axis.
pub fn check_frame(h1: &HalfSpace, h2: &HalfSpace, h3: &HalfSpace, h4: &HalfSpace) -> Option<FrameWitness> {
    if !is_frame_configuration(h1, h2, h3, h4) {
        return None;
    }
    let halfspaces = [h1.clone(), h2.clone(), h3.clone(), h4.clone()];
    let p = |k: usize| halfspaces[k].plane();
    let origin = intersect_planes(&[p(0), p(1), p(2)])?;
    if p(3).contains(&origin) {
        return None;
    }
    let mut axes = Vec::with_capacity(3);
    let mut units = Vec::with_capacity(3);
    for j in 0..3 {
        let (k, l) = others(j);
        axes.push(LineInPlane::new(p(k).clone(), p(l).clone()).ok()?);
        units.push(intersect_planes(&[p(k), p(l), p(3)])?);
    }
    let axes: [LineInPlane; 3] = axes.try_into().ok()?;
    let units: [Vector; 3] = units.try_into().ok()?;
    let src = [origin.clone(), units[0].clone(), units[1].clone(), units[2].clone()];
    let dst = [
        Vector::zeros(3),
        Vector::unit(3, 0),
        Vector::unit(3, 1),
        Vector::unit(3, 2),
    ];
    let to_canonical = affine_from_simplex(&src, &dst).ok()?;
    Some(FrameWitness {
        halfspaces,
        origin,
        axes,
        units,
        to_canonical,
    })
}

/// `({x>0}, {y>0}, {z>0}, {x+y+z<1})`.
pub fn canonical_frame_halfspaces() -> [HalfSpace; 4] {
    use crate::kernel::Side::{Neg, Pos};
    let h = |c: &[i64], o: i64, s| HalfSpace::from_ints(c, o, s).expect("nonzero normal");
    [
        h(&[1, 0, 0], 0, Pos),
        h(&[0, 1, 0], 0, Pos),
        h(&[0, 0, 1], 0, Pos),
        h(&[1, 1, 1], 1, Neg),
    ]
}

pub fn canonical_frame() -> FrameWitness {
    let [a, b, c, d] = canonical_frame_halfspaces();
    check_frame(&a, &b, &c, &d).expect("the canonical frame is valid")
}
