//! Seeded generators for sampling suites.
//!
//! Every generator draws from a caller-supplied [`ChaCha8Rng`], so a seed
//! fixes the whole sequence on every platform.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roq_core::kernel::{apply_affine, rational, AffineMap, HalfSpace, Hyperplane, Matrix, Rational, Side, Vector};
use roq_core::region::{arrangement, Region};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    rational(rng.random_range(-6..=6), rng.random_range(1..=3))
}

pub fn side(rng: &mut ChaCha8Rng) -> Side {
    if rng.random_bool(0.5) {
        Side::Pos
    } else {
        Side::Neg
    }
}

pub fn normal(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.random_range(-3..=3)).collect();
        if v.iter().any(|&c| c != 0) {
            return Vector::from_ints(&v);
        }
    }
}

pub fn plane(rng: &mut ChaCha8Rng, dim: usize) -> Hyperplane {
    let n = normal(rng, dim);
    Hyperplane::new(n, small_rational(rng)).expect("nonzero normal")
}

pub fn halfspace(rng: &mut ChaCha8Rng, dim: usize) -> HalfSpace {
    let p = plane(rng, dim);
    p.half(side(rng))
}

/// Between one and `max` distinct planes.
pub fn planes(rng: &mut ChaCha8Rng, dim: usize, max: usize) -> Vec<Hyperplane> {
    let n = rng.random_range(1..=max);
    let mut ps: Vec<Hyperplane> = (0..n).map(|_| plane(rng, dim)).collect();
    ps.sort();
    ps.dedup();
    ps
}

/// A random union of cells of the arrangement of `ps`.
pub fn region_over(rng: &mut ChaCha8Rng, dim: usize, ps: &[Hyperplane]) -> Region {
    let cells = arrangement(dim, ps).expect("distinct planes");
    let chosen: Vec<_> = cells
        .into_iter()
        .filter(|_| rng.random_bool(0.5))
        .map(|(sv, _)| sv)
        .collect();
    Region::from_sign_vectors(dim, ps, &chosen).expect("cells of the arrangement")
}

/// A region whose supports are among at most `max_planes` random planes.
pub fn region(rng: &mut ChaCha8Rng, dim: usize, max_planes: usize) -> Region {
    let ps = planes(rng, dim, max_planes);
    region_over(rng, dim, &ps)
}

/// Regions sharing one plane pool, so their combinations stay small.
pub fn regions_over_pool(rng: &mut ChaCha8Rng, dim: usize, max_planes: usize, count: usize) -> Vec<Region> {
    let ps = planes(rng, dim, max_planes);
    (0..count).map(|_| region_over(rng, dim, &ps)).collect()
}

/// Invertible map with small integer linear part.
pub fn affine_map(rng: &mut ChaCha8Rng, dim: usize) -> AffineMap {
    loop {
        let rows: Vec<Vec<Rational>> = (0..dim)
            .map(|_| (0..dim).map(|_| rational(rng.random_range(-3..=3), 1)).collect())
            .collect();
        let t = Vector::new((0..dim).map(|_| small_rational(rng)).collect());
        if let Ok(m) = AffineMap::new(Matrix::from_rows(rows), t) {
            return m;
        }
    }
}

/// Nonempty intersection of one to three half-spaces.
pub fn convex_region(rng: &mut ChaCha8Rng, dim: usize) -> Region {
    loop {
        let k = rng.random_range(1..=3);
        let hs: Vec<HalfSpace> = (0..k).map(|_| halfspace(rng, dim)).collect();
        let r = Region::from_cells(dim, &[hs]).expect("matching dimensions");
        if !r.is_empty() {
            return r;
        }
    }
}

/// Convex region through `point`: each bounding half-space contains it.
pub fn convex_region_through(rng: &mut ChaCha8Rng, point: &Vector) -> Region {
    let dim = point.dim();
    let k = rng.random_range(1..=3);
    let hs: Vec<HalfSpace> = (0..k)
        .map(|_| {
            let n = normal(rng, dim);
            let slack = rational(rng.random_range(1..=4), rng.random_range(1..=2));
            HalfSpace::greater(n.clone(), n.dot(point) - slack).expect("nonzero normal")
        })
        .collect();
    Region::from_cells(dim, &[hs]).expect("matching dimensions")
}

/// A family of `count` convex regions; most members are anchored at a few
/// shared points so that subfamilies often intersect.
pub fn convex_family(rng: &mut ChaCha8Rng, dim: usize, count: usize) -> Vec<Region> {
    let anchors: Vec<Vector> = (0..rng.random_range(1..=2))
        .map(|_| Vector::new((0..dim).map(|_| small_rational(rng)).collect()))
        .collect();
    (0..count)
        .map(|_| {
            if rng.random_bool(0.8) {
                let a = anchors.choose(rng).expect("at least one anchor").clone();
                convex_region_through(rng, &a)
            } else {
                convex_region(rng, dim)
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Fan,
    Prism,
    Corner,
}

pub fn canonical_triple(shape: Shape) -> [HalfSpace; 3] {
    let h = |c: &[i64], o: i64| HalfSpace::from_ints(c, o, Side::Pos).expect("nonzero normal");
    match shape {
        Shape::Fan => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[1, 1, 0], 0)],
        Shape::Prism => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[1, 1, 0], 1)],
        Shape::Corner => [h(&[1, 0, 0], 0), h(&[0, 1, 0], 0), h(&[0, 0, 1], 0)],
    }
}

/// Affine image of a canonical triple with random sides.
pub fn shaped_triple(rng: &mut ChaCha8Rng, shape: Shape) -> [HalfSpace; 3] {
    let m = affine_map(rng, 3);
    canonical_triple(shape).map(|h| {
        let g = apply_affine(&m, &h).expect("three-dimensional");
        if rng.random_bool(0.5) {
            g.complement()
        } else {
            g
        }
    })
}

/// Mostly half-spaces, occasionally 0, 1 or a wedge.
pub fn hs_candidate(rng: &mut ChaCha8Rng, dim: usize) -> Region {
    match rng.random_range(0..10) {
        0 => Region::empty(dim),
        1 => Region::full(dim),
        2 | 3 => {
            let a = Region::from_halfspace(&halfspace(rng, dim));
            let b = Region::from_halfspace(&halfspace(rng, dim));
            a.product(&b).expect("matching dimensions")
        }
        _ => Region::from_halfspace(&halfspace(rng, dim)),
    }
}
