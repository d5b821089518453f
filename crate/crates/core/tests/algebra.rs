mod common;

use common::*;
use proptest::prelude::*;
use roq_core::kernel::{intersect_planes, rational, HalfSpace, Hyperplane, Rational, Vector};
use roq_core::region::{arrangement, Region};

fn laws(a: &Region, b: &Region, c: &Region) {
    let zero = Region::empty(a.dim());
    let one = Region::full(a.dim());
    let na = a.complement().unwrap();
    let nb = b.complement().unwrap();

    assert_eq!(a.product(b).unwrap(), b.product(a).unwrap());
    assert_eq!(a.sum(b).unwrap(), b.sum(a).unwrap());
    assert_eq!(
        a.product(b).unwrap().product(c).unwrap(),
        a.product(&b.product(c).unwrap()).unwrap()
    );
    assert_eq!(a.sum(b).unwrap().sum(c).unwrap(), a.sum(&b.sum(c).unwrap()).unwrap());
    assert_eq!(
        a.product(&b.sum(c).unwrap()).unwrap(),
        a.product(b).unwrap().sum(&a.product(c).unwrap()).unwrap()
    );
    assert_eq!(
        a.sum(&b.product(c).unwrap()).unwrap(),
        a.sum(b).unwrap().product(&a.sum(c).unwrap()).unwrap()
    );
    assert_eq!(a.product(b).unwrap().complement().unwrap(), na.sum(&nb).unwrap());
    assert_eq!(a.sum(b).unwrap().complement().unwrap(), na.product(&nb).unwrap());
    assert_eq!(a.product(&na).unwrap(), zero);
    assert_eq!(a.sum(&na).unwrap(), one);
    assert_eq!(na.complement().unwrap(), *a);
    assert_eq!(a.leq(b).unwrap(), a.product(b).unwrap() == *a);
    assert_eq!(a.product(&one).unwrap(), *a);
    assert_eq!(a.sum(&zero).unwrap(), *a);
}

/// Point membership agrees with set operations away from every support.
fn membership(a: &Region, b: &Region, battery: &[Vector]) {
    let prod = a.product(b).unwrap();
    let sum = a.sum(b).unwrap();
    let comp = a.complement().unwrap();
    for p in battery {
        if !generic_for(p, &[a, b]) {
            continue;
        }
        let (ia, ib) = (a.contains_point(p), b.contains_point(p));
        assert_eq!(prod.contains_point(p), ia && ib);
        assert_eq!(sum.contains_point(p), ia || ib);
        assert_eq!(comp.contains_point(p), !ia);
    }
}

fn rebuilt(r: &Region) -> Region {
    let cells: Vec<_> = r.cells().iter().map(|c| c.constraints().to_vec()).collect();
    Region::from_cells(r.dim(), &cells).unwrap()
}

fn lerp(p: &Vector, q: &Vector, t: &Rational) -> Vector {
    p.add(&q.sub(p).scale(t))
}

/// Vertices of the closure of an open cell.
fn cell_vertices(dim: usize, cons: &[HalfSpace]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    let n = cons.len();
    let mut pick = |idx: &[usize]| {
        let planes: Vec<_> = idx.iter().map(|&i| cons[i].plane()).collect();
        if let Some(v) = intersect_planes(&planes) {
            let closed = cons.iter().all(|h| h.contains(&v) || h.plane().contains(&v));
            if closed && !out.contains(&v) {
                out.push(v);
            }
        }
    };
    for i in 0..n {
        for j in i + 1..n {
            if dim == 2 {
                pick(&[i, j]);
            } else {
                for k in j + 1..n {
                    pick(&[i, j, k]);
                }
            }
        }
    }
    out
}

/// Sample points of an open cell: its interior point pulled towards each
/// vertex and pushed away from it.
fn cell_samples(dim: usize, cons: &[HalfSpace], center: &Vector) -> Vec<Vector> {
    let mut out = vec![center.clone()];
    for v in cell_vertices(dim, cons) {
        let away = center.sub(&v);
        for t in [rational(-7, 8), rational(-1, 2), rational(4, 1), rational(32, 1)] {
            out.push(center.add(&away.scale(&t)));
        }
    }
    out
}

/// Two region points whose joining segment passes through a point `z` of a
/// missing arrangement cell: `q = z + t (z - p)` for region points `p`.
fn violating_pair(r: &Region) -> Option<(Vector, Vector)> {
    let dim = r.dim();
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for (sv, center) in arrangement(dim, r.supports()).unwrap() {
        let cons: Vec<HalfSpace> = r.supports().iter().zip(&sv).map(|(h, &s)| h.half(s)).collect();
        let mut samples = cell_samples(dim, &cons, &center);
        for h in r.supports() {
            for t in [rational(-3, 1), rational(-1, 3), rational(1, 3), rational(3, 1)] {
                samples.push(center.add(&h.normal().scale(&t)));
            }
        }
        for z in samples {
            if !generic_for(&z, &[r]) {
                continue;
            }
            if r.contains_point(&z) {
                inside.push(z);
            } else {
                outside.push(z);
            }
        }
    }
    let scales = [rational(1, 4), rational(1, 1), rational(4, 1), rational(32, 1)];
    for z in &outside {
        for p in &inside {
            for t in &scales {
                let q = z.add(&z.sub(p).scale(t));
                if r.contains_point(&q) {
                    return Some((p.clone(), q));
                }
            }
        }
    }
    None
}

fn convexity_oracle(r: &Region, battery: &[Vector]) {
    if r.is_convex() {
        let mut inside: Vec<Vector> = battery.iter().filter(|p| r.contains_point(p)).cloned().collect();
        inside.extend(r.interior_points());
        for (i, p) in inside.iter().enumerate() {
            for q in &inside[i + 1..] {
                assert!(r.contains_point(&lerp(p, q, &rational(1, 2))));
            }
        }
    } else {
        assert!(violating_pair(r).is_some(), "non-convex without a violating pair: {r:?}");
    }
}

/// Vertices of a bounded planar cell given by strict constraints.
fn polygon_vertices(cons: &[HalfSpace]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for (i, a) in cons.iter().enumerate() {
        for b in &cons[i + 1..] {
            let Some(v) = intersect_planes(&[a.plane(), b.plane()]) else {
                continue;
            };
            let inside = cons.iter().all(|h| h.contains(&v) || h.plane().contains(&v));
            if inside && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

fn cross(o: &Vector, a: &Vector, b: &Vector) -> Rational {
    let (o, a, b) = (o.coords(), a.coords(), b.coords());
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain, counter-clockwise, without collinear points.
fn hull(mut pts: Vec<Vector>) -> Vec<Vector> {
    pts.sort_by(|a, b| a.coords().cmp(b.coords()));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= Rational::from_integer(0.into()) {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= Rational::from_integer(0.into()) {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn area(poly: &[Vector]) -> Rational {
    let mut twice = Rational::from_integer(0.into());
    for i in 0..poly.len() {
        let (p, q) = (poly[i].coords(), poly[(i + 1) % poly.len()].coords());
        twice += &p[0] * &q[1] - &q[0] * &p[1];
    }
    twice / Rational::from_integer(2.into())
}

/// For bounded planar regions, convexity iff the area equals the area of the
/// hull of all cell vertices.
fn hull_oracle(r: &Region) {
    if r.is_empty() || !r.is_bounded() {
        return;
    }
    let mut all = Vec::new();
    let mut total = Rational::from_integer(0.into());
    for cell in r.cells() {
        let verts = polygon_vertices(cell.constraints());
        total += area(&hull(verts.clone()));
        all.extend(verts);
    }
    assert_eq!(r.is_convex(), area(&hull(all)) == total);
}

fn box2(x0: i64, x1: i64, y0: i64, y1: i64) -> Region {
    use roq_core::kernel::Side;
    Region::from_cells(
        2,
        &[vec![
            HalfSpace::from_ints(&[1, 0], x0, Side::Pos).unwrap(),
            HalfSpace::from_ints(&[1, 0], x1, Side::Neg).unwrap(),
            HalfSpace::from_ints(&[0, 1], y0, Side::Pos).unwrap(),
            HalfSpace::from_ints(&[0, 1], y1, Side::Neg).unwrap(),
        ]],
    )
    .unwrap()
}

#[test]
fn hull_oracle_on_fixed_shapes() {
    let l = box2(0, 2, 0, 1).sum(&box2(0, 1, 0, 2)).unwrap();
    hull_oracle(&l);
    assert!(!l.is_convex());
    let joined = box2(0, 1, 0, 1).sum(&box2(1, 2, 0, 1)).unwrap();
    hull_oracle(&joined);
    assert!(joined.is_convex());
    assert_eq!(joined, box2(0, 2, 0, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn boolean_laws_planar(rs in regions_over_pool(2, 5, 3)) {
        laws(&rs[0], &rs[1], &rs[2]);
    }

    #[test]
    fn membership_planar(rs in regions_over_pool(2, 6, 2), battery in points(2, 24)) {
        membership(&rs[0], &rs[1], &battery);
    }

    #[test]
    fn regularity(r in region(2, 6), s in region(3, 4)) {
        prop_assert_eq!(rebuilt(&r), r);
        prop_assert_eq!(rebuilt(&s), s);
    }

    #[test]
    fn convexity_planar(r in region(2, 5), battery in points(2, 12)) {
        convexity_oracle(&r, &battery);
        hull_oracle(&r);
    }

    #[test]
    fn transform_is_a_homomorphism(rs in regions_over_pool(2, 4, 2), m in affine_map(2)) {
        let (a, b) = (&rs[0], &rs[1]);
        let t = |r: &Region| r.transform(&m).unwrap();
        prop_assert_eq!(t(&a.product(b).unwrap()), t(a).product(&t(b)).unwrap());
        prop_assert_eq!(t(&a.complement().unwrap()), t(a).complement().unwrap());
        prop_assert_eq!(t(a).is_convex(), a.is_convex());
        prop_assert_eq!(t(a).transform(&m.inverse()).unwrap(), a.clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn boolean_laws_spatial(rs in regions_over_pool(3, 4, 3)) {
        laws(&rs[0], &rs[1], &rs[2]);
    }

    #[test]
    fn membership_spatial(rs in regions_over_pool(3, 4, 2), battery in points(3, 16)) {
        membership(&rs[0], &rs[1], &battery);
    }

    #[test]
    fn convexity_spatial(r in region(3, 4), battery in points(3, 8)) {
        convexity_oracle(&r, &battery);
    }
}

#[test]
fn supports_of_results_are_essential() {
    let a = box2(0, 2, 0, 2);
    let b = box2(1, 3, 0, 2);
    let u = a.sum(&b).unwrap();
    assert_eq!(u, box2(0, 3, 0, 2));
    let expected: Vec<Hyperplane> = box2(0, 3, 0, 2).supports().to_vec();
    assert_eq!(u.supports(), &expected[..]);
}
