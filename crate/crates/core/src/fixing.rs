//! Frame-relative descriptions of half-spaces and regions.
//!
//! A [`HalfSpaceDescriptor`] records where a half-space's plane crosses the
//! three axes and the three unit lines of a frame, together with the plane
//! equation in frame coordinates and the side. Within one frame exactly one
//! half-space has a given descriptor, and descriptors are invariant when the
//! frame and the half-space are moved by the same affine map.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::kernel::{
    affine_from_simplex, apply_affine, int, intersect_planes, solve_general, AffineMap, HalfSpace,
    Hyperplane, Matrix, Rational, Side, Vector,
};
use crate::predicates::{canonical_frame, FrameWitness, LineInPlane};
use crate::region::Region;

/// How a plane meets a line of the frame.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Trace {
    /// Crossing at the given line parameter.
    Crosses(Rational),
    Parallel,
    Contains,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfSpaceDescriptor {
    /// Bounding plane in frame coordinates.
    pub plane: Hyperplane,
    pub side: Side,
    /// Traces on axes 0, 1, 2; parameter is the axis coordinate.
    pub axis_traces: [Trace; 3],
    /// Traces on the unit lines of corner planes 0, 1, 2. On plane `k` the
    /// line runs from `I_{k+1}` (parameter 0) to `I_{k+2}` (parameter 1),
    /// indices mod 3.
    pub unit_traces: [Trace; 3],
}

fn unit_line_axes(k: usize) -> (usize, usize) {
    ((k + 1) % 3, (k + 2) % 3)
}

fn trace(frame: &FrameWitness, line: &LineInPlane, plane: &Hyperplane, coord: usize) -> Trace {
    if plane.normal().dot(&line.direction()).is_zero() {
        if plane.contains(&line.point()) {
            Trace::Contains
        } else {
            Trace::Parallel
        }
    } else {
        let p = intersect_planes(&[line.reference(), line.cutter(), plane])
            .expect("a line not parallel to a plane crosses it");
        Trace::Crosses(frame.coordinates(&p)[coord].clone())
    }
}

pub fn describe_halfspace(frame: &FrameWitness, h: &HalfSpace) -> Result<HalfSpaceDescriptor> {
    check_dim(3, h.dim())?;
    let image = apply_affine(frame.to_canonical(), h)?;
    let axis_traces = [0, 1, 2].map(|j| trace(frame, frame.axis(j), h.plane(), j));
    let unit_traces = [0, 1, 2].map(|k| {
        let line = frame.unit_line(k).expect("corner plane index");
        trace(frame, &line, h.plane(), unit_line_axes(k).1)
    });
    let d = HalfSpaceDescriptor {
        plane: image.plane().clone(),
        side: image.side(),
        axis_traces,
        unit_traces,
    };
    debug_assert_eq!(equation_from_traces(&d.axis_traces, &d.unit_traces).as_ref(), Some(&d.plane));
    Ok(d)
}

/// The frame-coordinate plane determined by the six traces alone.
pub fn equation_from_traces(axis: &[Trace; 3], unit: &[Trace; 3]) -> Option<Hyperplane> {
    // unknowns (a₀, a₁, a₂, c) of a·x = c
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let row = |coeffs: [Rational; 3], c: Rational| -> Vec<Rational> {
        let mut r = coeffs.to_vec();
        r.push(c);
        r
    };
    let e = |j: usize, v: Rational| {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
        c[j] = v;
        c
    };
    for (j, t) in axis.iter().enumerate() {
        match t {
            Trace::Crosses(t) => rows.push(row(e(j, t.clone()), -Rational::one())),
            Trace::Parallel => rows.push(row(e(j, Rational::one()), Rational::zero())),
            Trace::Contains => {
                rows.push(row(e(j, Rational::one()), Rational::zero()));
                rows.push(row(e(j, Rational::zero()), Rational::one()));
            }
        }
    }
    for (k, t) in unit.iter().enumerate() {
        let (a, b) = unit_line_axes(k);
        let at = |s: Rational, u: Rational| {
            let mut c = e(a, s);
            c[b] = u;
            c
        };
        match t {
            Trace::Crosses(t) => rows.push(row(at(Rational::one() - t, t.clone()), -Rational::one())),
            Trace::Parallel => rows.push(row(at(Rational::one(), -Rational::one()), Rational::zero())),
            Trace::Contains => {
                rows.push(row(e(a, Rational::one()), -Rational::one()));
                rows.push(row(e(b, Rational::one()), -Rational::one()));
            }
        }
    }
    let basis = crate::kernel::nullspace(&rows, 4);
    if basis.len() != 1 {
        return None;
    }
    let v = basis[0].coords();
    Hyperplane::new(Vector::new(v[..3].to_vec()), v[3].clone()).ok()
}

/// `h′` has descriptor `d` relative to `frame`.
pub fn matches_halfspace(frame: &FrameWitness, d: &HalfSpaceDescriptor, h: &HalfSpace) -> Result<bool> {
    Ok(&describe_halfspace(frame, h)? == d)
}

/// Boolean expression over indexed half-spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Combination {
    Zero,
    One,
    Literal(usize),
    Complement(Box<Combination>),
    Product(Vec<Combination>),
    Sum(Vec<Combination>),
}

impl Combination {
    pub fn evaluate(&self, dim: usize, halfspaces: &[HalfSpace]) -> Result<Region> {
        match self {
            Combination::Zero => Ok(Region::empty(dim)),
            Combination::One => Ok(Region::full(dim)),
            Combination::Literal(i) => {
                let h = halfspaces
                    .get(*i)
                    .ok_or_else(|| Error::Precondition("literal index out of range".into()))?;
                check_dim(dim, h.dim())?;
                Ok(Region::from_halfspace(h))
            }
            Combination::Complement(inner) => match inner.as_ref() {
                Combination::Literal(i) => {
                    let h = halfspaces
                        .get(*i)
                        .ok_or_else(|| Error::Precondition("literal index out of range".into()))?;
                    check_dim(dim, h.dim())?;
                    Ok(Region::from_halfspace(&h.complement()))
                }
                other => other.evaluate(dim, halfspaces)?.complement(),
            },
            Combination::Product(items) => items.iter().try_fold(Region::full(dim), |acc, c| {
                acc.product(&c.evaluate(dim, halfspaces)?)
            }),
            Combination::Sum(items) => items.iter().try_fold(Region::empty(dim), |acc, c| {
                acc.sum(&c.evaluate(dim, halfspaces)?)
            }),
        }
    }
}

/// The supports of `r` as positive half-spaces and a sum-of-cells expression over them.
pub fn halfspace_decomposition(r: &Region) -> (Vec<HalfSpace>, Combination) {
    let halfspaces: Vec<HalfSpace> = r.supports().iter().map(|p| p.half(Side::Pos)).collect();
    let mut cells: Vec<Combination> = r
        .sign_vectors()
        .map(|sv| {
            let mut literals: Vec<Combination> = sv
                .iter()
                .enumerate()
                .map(|(i, s)| match s {
                    Side::Pos => Combination::Literal(i),
                    Side::Neg => Combination::Complement(Box::new(Combination::Literal(i))),
                })
                .collect();
            match literals.len() {
                0 => Combination::One,
                1 => literals.pop().expect("one literal"),
                _ => Combination::Product(literals),
            }
        })
        .collect();
    let combination = match cells.len() {
        0 => Combination::Zero,
        1 => cells.pop().expect("one cell"),
        _ => Combination::Sum(cells),
    };
    (halfspaces, combination)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionDescriptor {
    pub halfspaces: Vec<HalfSpaceDescriptor>,
    pub combination: Combination,
}

/// Descriptor of `r` relative to the canonical frame.
pub fn affine_complete_descriptor(r: &Region) -> Result<RegionDescriptor> {
    check_dim(3, r.dim())?;
    let frame = canonical_frame();
    let (hs, combination) = halfspace_decomposition(r);
    let halfspaces = hs
        .iter()
        .map(|h| describe_halfspace(&frame, h))
        .collect::<Result<_>>()?;
    Ok(RegionDescriptor {
        halfspaces,
        combination,
    })
}

/// The region described by `d` over `hs`, if every `hsᵢ` matches its descriptor.
pub fn satisfies_descriptor(frame: &FrameWitness, hs: &[HalfSpace], d: &RegionDescriptor) -> Option<Region> {
    if hs.len() != d.halfspaces.len() {
        return None;
    }
    for (h, dh) in hs.iter().zip(&d.halfspaces) {
        if !matches_halfspace(frame, dh, h).ok()? {
            return None;
        }
    }
    d.combination.evaluate(3, hs).ok()
}

/// The affine map carrying `f1`'s origin and units to `f2`'s.
pub fn recover_affine(f1: &FrameWitness, f2: &FrameWitness) -> Result<AffineMap> {
    affine_from_simplex(&f1.simplex(), &f2.simplex())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// Carries the first region exactly onto the second.
    Equivalent(AffineMap),
    NotEquivalent(String),
    Unknown,
}

/// Searches bijections between the supports of `r1` and `r2` for an affine
/// map carrying one region onto the other. `budget` bounds the number of
/// linear systems solved.
pub fn are_affine_equivalent(r1: &Region, r2: &Region, budget: usize) -> Result<Equivalence> {
    check_dim(r1.dim(), r2.dim())?;
    let n = r1.dim();
    let differ = |what: &str| Ok(Equivalence::NotEquivalent(alloc::format!("{what} differs")));
    if r1.supports().len() != r2.supports().len() {
        return differ("number of supporting hyperplanes");
    }
    if r1.cell_count() != r2.cell_count() {
        return differ("number of cells");
    }
    if r1.is_convex() != r2.is_convex() {
        return differ("convexity");
    }
    if r1.is_bounded() != r2.is_bounded() {
        return differ("boundedness");
    }
    if r1 == r2 {
        return Ok(Equivalence::Equivalent(AffineMap::identity(n)));
    }
    let mut search = Search {
        r1,
        r2,
        n,
        solves: 0,
        budget,
        exhaustive: true,
        rows: Vec::new(),
        rhs: Vec::new(),
        used: alloc::vec![false; r2.supports().len()],
    };
    match search.extend(0) {
        Some(map) => Ok(Equivalence::Equivalent(map)),
        None if search.solves > search.budget || !search.exhaustive => Ok(Equivalence::Unknown),
        None => differ("every support correspondence"),
    }
}

/// Unknowns: `B = A⁻¹` (row-major), `β = A⁻¹b`, then one scale per matched plane.
struct Search<'r> {
    r1: &'r Region,
    r2: &'r Region,
    n: usize,
    solves: usize,
    budget: usize,
    exhaustive: bool,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn unknowns(&self) -> usize {
        self.n * self.n + self.n + self.r1.supports().len()
    }

    fn extend(&mut self, i: usize) -> Option<AffineMap> {
        let m = self.r1.supports().len();
        if i == m {
            return self.finish();
        }
        let n = self.n;
        let cols = self.unknowns();
        let src = self.r1.supports()[i].clone();
        for j in 0..m {
            if self.used[j] || self.solves > self.budget {
                continue;
            }
            let dst = self.r2.supports()[j].clone();
            let mark = self.rows.len();
            // (Bᵀa)_r − λᵢ a′_r = 0 and a·β − λᵢ c′ = −c
            for r in 0..n {
                let mut row = alloc::vec![Rational::zero(); cols];
                for c in 0..n {
                    row[c * n + r] = src.normal()[c].clone();
                }
                row[n * n + n + i] = -dst.normal()[r].clone();
                self.rows.push(row);
                self.rhs.push(Rational::zero());
            }
            let mut row = alloc::vec![Rational::zero(); cols];
            for c in 0..n {
                row[n * n + c] = src.normal()[c].clone();
            }
            row[n * n + n + i] = -dst.offset().clone();
            self.rows.push(row);
            self.rhs.push(-src.offset().clone());
            self.solves += 1;
            if solve_general(&self.rows, &self.rhs, cols).is_some() {
                self.used[j] = true;
                if let Some(map) = self.extend(i + 1) {
                    return Some(map);
                }
                self.used[j] = false;
            }
            self.rows.truncate(mark);
            self.rhs.truncate(mark);
        }
        None
    }

    fn finish(&mut self) -> Option<AffineMap> {
        let cols = self.unknowns();
        self.solves += 1;
        let (particular, basis) = solve_general(&self.rows, &self.rhs, cols)?;
        let tries = if basis.is_empty() { 1 } else { 24 };
        if !basis.is_empty() {
            self.exhaustive = false;
        }
        for t in 0..tries {
            let mut x = particular.clone();
            for (k, v) in basis.iter().enumerate() {
                let coeff = ((t * 7 + k * 3 + 1) % 9) as i64 - 4;
                x = x.add(&v.scale(&int(coeff)));
            }
            if let Some(map) = self.candidate(&x) {
                return Some(map);
            }
        }
        None
    }

    fn candidate(&self, x: &Vector) -> Option<AffineMap> {
        let n = self.n;
        if x.coords()[n * n + n..].iter().any(Zero::is_zero) {
            return None;
        }
        let b = Matrix::from_rows((0..n).map(|r| x.coords()[r * n..(r + 1) * n].to_vec()).collect());
        let beta = Vector::new(x.coords()[n * n..n * n + n].to_vec());
        let a = b.inverse()?;
        let translation = a.mul_vec(&beta);
        let map = AffineMap::new(a, translation).ok()?;
        (self.r1.transform(&map).ok()? == *self.r2).then_some(map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rational, Side::*};
    use crate::predicates::check_frame;
    use crate::region::region_from_halfspaces;
    use alloc::vec;

    fn hs(c: &[i64], o: i64, s: Side) -> HalfSpace {
        HalfSpace::from_ints(c, o, s).unwrap()
    }

    fn cube() -> Region {
        let mut cell = Vec::new();
        for j in 0..3 {
            let mut c = [0i64; 3];
            c[j] = 1;
            cell.push(hs(&c, 0, Pos));
            cell.push(hs(&c, 1, Neg));
        }
        region_from_halfspaces(3, &[cell]).unwrap()
    }

    fn shear() -> AffineMap {
        let m = Matrix::from_rows(vec![
            vec![int(2), int(1), int(0)],
            vec![int(0), int(1), rational(1, 2)],
            vec![int(1), int(0), int(3)],
        ]);
        AffineMap::new(m, Vector::from_ints(&[1, -2, 3])).unwrap()
    }

    #[test]
    fn descriptor_of_a_frame_plane() {
        let d = describe_halfspace(&canonical_frame(), &hs(&[1, 0, 0], 0, Pos)).unwrap();
        assert_eq!(d.plane, hs(&[1, 0, 0], 0, Pos).plane().clone());
        assert_eq!(d.side, Pos);
        assert_eq!(d.axis_traces[0], Trace::Crosses(int(0)));
        assert_eq!(d.axis_traces[1], Trace::Contains);
    }

    #[test]
    fn descriptor_intercepts() {
        let d = describe_halfspace(&canonical_frame(), &hs(&[1, 2, 3], 6, Neg)).unwrap();
        assert_eq!(d.side, Neg);
        assert_eq!(
            d.axis_traces,
            [Trace::Crosses(int(6)), Trace::Crosses(int(3)), Trace::Crosses(int(2))]
        );
    }

    #[test]
    fn descriptor_is_covariant() {
        let f = canonical_frame();
        let tau = shear();
        let g = f.transform(&tau).unwrap();
        for h in [hs(&[1, 2, 3], 6, Neg), hs(&[0, 1, -1], 0, Pos), hs(&[1, 1, 0], 1, Pos)] {
            let moved = apply_affine(&tau, &h).unwrap();
            assert_eq!(describe_halfspace(&f, &h).unwrap(), describe_halfspace(&g, &moved).unwrap());
        }
    }

    #[test]
    fn traces_determine_the_plane_through_the_origin() {
        let d = describe_halfspace(&canonical_frame(), &hs(&[0, 1, -1], 0, Pos)).unwrap();
        assert_eq!(equation_from_traces(&d.axis_traces, &d.unit_traces), Some(d.plane.clone()));
    }

    #[test]
    fn matching_rejects_the_complement() {
        let f = canonical_frame();
        let h = hs(&[1, 2, 3], 6, Neg);
        let d = describe_halfspace(&f, &h).unwrap();
        assert!(matches_halfspace(&f, &d, &h).unwrap());
        assert!(!matches_halfspace(&f, &d, &h.complement()).unwrap());
    }

    #[test]
    fn decompositions_rebuild_the_region() {
        let h = hs(&[1, 0, 0], 0, Pos);
        let (list, comb) = halfspace_decomposition(&Region::from_halfspace(&h));
        assert_eq!(list, vec![h]);
        assert_eq!(comb, Combination::Literal(0));
        assert_eq!(halfspace_decomposition(&Region::empty(3)).1, Combination::Zero);
        let c = cube();
        let (list, comb) = halfspace_decomposition(&c);
        assert_eq!(list.len(), 6);
        assert!(matches!(&comb, Combination::Product(items) if items.len() == 6));
        assert_eq!(comb.evaluate(3, &list).unwrap(), c);
    }

    #[test]
    fn cube_descriptor_roundtrip_and_image() {
        let c = cube();
        let d = affine_complete_descriptor(&c).unwrap();
        assert_eq!(d.halfspaces.len(), 6);
        let (list, _) = halfspace_decomposition(&c);
        assert_eq!(satisfies_descriptor(&canonical_frame(), &list, &d), Some(c.clone()));
        let tau = shear();
        let g = canonical_frame().transform(&tau).unwrap();
        let moved: Vec<HalfSpace> = list.iter().map(|h| apply_affine(&tau, h).unwrap()).collect();
        assert_eq!(satisfies_descriptor(&g, &moved, &d), Some(c.transform(&tau).unwrap()));
        let mut decoy = moved.clone();
        decoy[0] = decoy[0].complement();
        assert_eq!(satisfies_descriptor(&g, &decoy, &d), None);
    }

    #[test]
    fn frame_recovery() {
        let f = canonical_frame();
        assert_eq!(recover_affine(&f, &f).unwrap(), AffineMap::identity(3));
        let [a, b, c, _] = crate::predicates::canonical_frame_halfspaces();
        let scaled = check_frame(&a, &b, &c, &hs(&[1, 1, 1], 2, Neg)).unwrap();
        let map = recover_affine(&f, &scaled).unwrap();
        assert_eq!(map.linear(), &Matrix::identity(3).scale(&int(2)));
        let tau = shear();
        assert_eq!(recover_affine(&f, &f.transform(&tau).unwrap()).unwrap(), tau);
    }

    #[test]
    fn equivalence_search() {
        let c = cube();
        assert_eq!(are_affine_equivalent(&c, &c, 100).unwrap(), Equivalence::Equivalent(AffineMap::identity(3)));
        let l_shape = Region::from_halfspace(&hs(&[1, 0, 0], 0, Pos))
            .sum(&Region::from_halfspace(&hs(&[0, 1, 0], 0, Pos)))
            .unwrap();
        let quadrant = Region::from_halfspace(&hs(&[1, 0, 0], 0, Pos))
            .product(&Region::from_halfspace(&hs(&[0, 1, 0], 0, Pos)))
            .unwrap();
        assert!(matches!(are_affine_equivalent(&l_shape, &quadrant, 100).unwrap(), Equivalence::NotEquivalent(_)));
        let image = c.transform(&shear()).unwrap();
        match are_affine_equivalent(&c, &image, 10_000).unwrap() {
            Equivalence::Equivalent(map) => assert_eq!(c.transform(&map).unwrap(), image),
            other => panic!("expected an equivalence, got {other:?}"),
        }
    }
}
