#![allow(dead_code)]

use proptest::prelude::*;
use roq_core::kernel::{rational, AffineMap, HalfSpace, Hyperplane, Matrix, Rational, Side, Vector};
use roq_core::region::{arrangement, Region};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| rational(p, q))
}

pub fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Pos), Just(Side::Neg)]
}

pub fn normal(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(-3i64..=3, dim)
        .prop_filter("nonzero normal", |v| v.iter().any(|&c| c != 0))
        .prop_map(|v| Vector::from_ints(&v))
}

pub fn plane(dim: usize) -> impl Strategy<Value = Hyperplane> {
    (normal(dim), small_rational()).prop_map(|(n, o)| Hyperplane::new(n, o).unwrap())
}

pub fn halfspace(dim: usize) -> impl Strategy<Value = HalfSpace> {
    (plane(dim), side()).prop_map(|(p, s)| p.half(s))
}

/// Distinct planes, between one and `max` of them.
pub fn planes(dim: usize, max: usize) -> impl Strategy<Value = Vec<Hyperplane>> {
    proptest::collection::vec(plane(dim), 1..=max).prop_map(|mut ps| {
        ps.sort();
        ps.dedup();
        ps
    })
}

/// A union of arrangement cells chosen by `mask`.
pub fn region_from_mask(dim: usize, ps: &[Hyperplane], mask: &[bool]) -> Region {
    let cells = arrangement(dim, ps).unwrap();
    let chosen: Vec<_> = cells
        .into_iter()
        .zip(mask.iter().cycle())
        .filter(|(_, &keep)| keep)
        .map(|((sv, _), _)| sv)
        .collect();
    Region::from_sign_vectors(dim, ps, &chosen).unwrap()
}

/// Regions whose supports lie in one shared plane pool, so Boolean
/// combinations stay small.
pub fn regions_over_pool(dim: usize, max_planes: usize, count: usize) -> impl Strategy<Value = Vec<Region>> {
    (
        planes(dim, max_planes),
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), 1..16), count),
    )
        .prop_map(move |(ps, masks)| masks.iter().map(|m| region_from_mask(dim, &ps, m)).collect())
}

pub fn region(dim: usize, max_planes: usize) -> impl Strategy<Value = Region> {
    regions_over_pool(dim, max_planes, 1).prop_map(|mut v| v.pop().unwrap())
}

pub fn affine_map(dim: usize) -> impl Strategy<Value = AffineMap> {
    (
        proptest::collection::vec(-3i64..=3, dim * dim),
        proptest::collection::vec(small_rational(), dim),
    )
        .prop_filter_map("invertible", move |(entries, t)| {
            let rows = entries
                .chunks(dim)
                .map(|r| r.iter().map(|&c| rational(c, 1)).collect())
                .collect();
            AffineMap::new(Matrix::from_rows(rows), Vector::new(t)).ok()
        })
}

pub fn point(dim: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec((-12i64..=12, 1i64..=5), dim)
        .prop_map(|cs| Vector::new(cs.into_iter().map(|(p, q)| rational(p, q)).collect()))
}

pub fn points(dim: usize, n: usize) -> impl Strategy<Value = Vec<Vector>> {
    proptest::collection::vec(point(dim), n)
}

/// Whether `p` avoids every support of every region.
pub fn generic_for(p: &Vector, regions: &[&Region]) -> bool {
    regions
        .iter()
        .all(|r| r.supports().iter().all(|h| !h.contains(p)))
}

#[derive(Clone, Copy, Debug)]
pub enum Shape {
    Fan,
    Prism,
    Corner,
}

/// Canonical planes of a fan, a prism or a corner.
pub fn canonical_triple(shape: Shape) -> [HalfSpace; 3] {
    let h = |c: &[i64], o: i64| HalfSpace::from_ints(c, o, Side::Pos).unwrap();
    match shape {
        Shape::Fan => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[1, 1, 0], 0)],
        Shape::Prism => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[1, 1, 0], 1)],
        Shape::Corner => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[0, 0, 1], 0)],
    }
}

/// Affine image of a canonical triple with random sides.
pub fn shaped_triple() -> impl Strategy<Value = (Shape, [HalfSpace; 3])> {
    (
        prop_oneof![Just(Shape::Fan), Just(Shape::Prism), Just(Shape::Corner)],
        affine_map(3),
        proptest::array::uniform3(any::<bool>()),
    )
        .prop_map(|(shape, m, flips)| {
            let t = canonical_triple(shape);
            let img = [0, 1, 2].map(|i| {
                let h = roq_core::kernel::apply_affine(&m, &t[i]).unwrap();
                if flips[i] {
                    h.complement()
                } else {
                    h
                }
            });
            (shape, img)
        })
}

/// Mostly half-spaces, sometimes 0, 1 or a wedge.
pub fn hs_candidate(dim: usize) -> impl Strategy<Value = Region> {
    prop_oneof![
        6 => halfspace(dim).prop_map(|h| Region::from_halfspace(&h)),
        1 => Just(Region::empty(dim)),
        1 => Just(Region::full(dim)),
        2 => (halfspace(dim), halfspace(dim)).prop_map(|(a, b)| {
            Region::from_halfspace(&a).product(&Region::from_halfspace(&b)).unwrap()
        }),
    ]
}
