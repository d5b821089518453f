mod common;

use common::*;
use proptest::prelude::*;
use roq_core::kernel::{apply_affine, HalfSpace};
use roq_core::logic::{evaluate, parse, Assignment, Truth};
use roq_core::predicates::{
    check_frame, classify_triple, halfspace_of, hs_distinct, is_frame_configuration,
    is_halfspace_region, planes_meet_in_line, planes_parallel, TripleTag,
};
use roq_core::region::Region;

fn expected_tag(shape: Shape) -> TripleTag {
    match shape {
        Shape::Fan => TripleTag::Fan,
        Shape::Prism => TripleTag::Prism,
        Shape::Corner => TripleTag::Corner,
    }
}

fn regions(hs: &[HalfSpace]) -> Vec<Region> {
    hs.iter().map(Region::from_halfspace).collect()
}

fn assignment(names: &[&str], rs: &[Region]) -> Assignment {
    names.iter().map(|n| n.to_string()).zip(rs.iter().cloned()).collect()
}

/// Evaluates a macro call and insists on an exact verdict.
fn decide(dim: usize, src: &str, names: &[&str], rs: &[Region]) -> bool {
    let v = evaluate(dim, &parse(src).unwrap(), &assignment(names, rs), 1_000_000).unwrap();
    assert!(!v.budget_exhausted, "{src}");
    match v.value {
        Truth::True => true,
        Truth::False => false,
        Truth::Unknown => panic!("guarded formula {src} came back Unknown"),
    }
}

fn line_decider(a: &Region, b: &Region) -> bool {
    hs_distinct(&[a.clone(), b.clone()])
        && planes_meet_in_line(&halfspace_of(a).unwrap(), &halfspace_of(b).unwrap()).unwrap()
}

fn parallel_decider(a: &Region, b: &Region) -> bool {
    hs_distinct(&[a.clone(), b.clone()])
        && planes_parallel(&halfspace_of(a).unwrap(), &halfspace_of(b).unwrap()).unwrap()
}

#[test]
fn canonical_cell_counts() {
    for (shape, count) in [(Shape::Fan, 6), (Shape::Prism, 7), (Shape::Corner, 8)] {
        let [a, b, c] = canonical_triple(shape);
        let class = classify_triple(&a, &b, &c);
        assert_eq!(class.tag, expected_tag(shape));
        assert_eq!(class.cell_count, count);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn classification_is_invariant((shape, t) in shaped_triple(), m in affine_map(3), flip in 0usize..3) {
        let tag = expected_tag(shape);
        let [a, b, c] = &t;
        prop_assert_eq!(classify_triple(a, b, c).tag, tag);
        for [x, y, z] in [[a, b, c], [b, a, c], [c, b, a], [a, c, b], [b, c, a], [c, a, b]] {
            prop_assert_eq!(classify_triple(x, y, z).tag, tag);
        }
        let mut flipped = t.clone();
        flipped[flip] = flipped[flip].complement();
        prop_assert_eq!(classify_triple(&flipped[0], &flipped[1], &flipped[2]).tag, tag);
        let img = t.clone().map(|h| apply_affine(&m, &h).unwrap());
        prop_assert_eq!(classify_triple(&img[0], &img[1], &img[2]).tag, tag);
    }

    #[test]
    fn parallel_and_line_partition_distinct_pairs(a in halfspace(3), b in halfspace(3)) {
        if a.plane() != b.plane() {
            prop_assert_ne!(planes_parallel(&a, &b).unwrap(), planes_meet_in_line(&a, &b).unwrap());
        } else {
            prop_assert!(planes_parallel(&a, &b).is_err());
        }
    }

    #[test]
    fn frame_witness_geometry(m in affine_map(3), unit in (1i64..=4, 1i64..=4, 1i64..=4)) {
        use roq_core::kernel::{Side, Vector};
        let (p, q, r) = unit;
        let d = HalfSpace::new(Vector::from_ints(&[q * r, p * r, p * q]), roq_core::kernel::rational(p * q * r, 1), Side::Neg).unwrap();
        let [a, b, c] = canonical_triple(Shape::Corner);
        let hs = [a, b, c, d].map(|h| apply_affine(&m, &h).unwrap());
        let w = check_frame(&hs[0], &hs[1], &hs[2], &hs[3]).expect("affine image of a frame");
        for k in 0..3 {
            prop_assert!(w.plane(k).contains(w.origin()));
        }
        for j in 0..3 {
            let u = w.unit(j);
            prop_assert_ne!(u, w.origin());
            let on = (0..4).filter(|&k| w.plane(k).contains(u)).count();
            prop_assert_eq!(on, 3);
            prop_assert!(!w.plane(j).contains(u));
        }
    }

    #[test]
    fn triple_macros_agree_with_classification((_, t) in shaped_triple()) {
        let rs = regions(&t);
        let tag = classify_triple(&t[0], &t[1], &t[2]).tag;
        let names = ["a", "b", "c"];
        prop_assert_eq!(decide(3, "fan(a,b,c)", &names, &rs), tag == TripleTag::Fan);
        prop_assert_eq!(decide(3, "prism(a,b,c)", &names, &rs), tag == TripleTag::Prism);
        prop_assert_eq!(decide(3, "corner(a,b,c)", &names, &rs), tag == TripleTag::Corner);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_triples_agree(t in proptest::array::uniform3(halfspace(3))) {
        let rs = regions(&t);
        let tag = classify_triple(&t[0], &t[1], &t[2]).tag;
        let names = ["a", "b", "c"];
        prop_assert_eq!(decide(3, "corner(a,b,c)", &names, &rs), tag == TripleTag::Corner);
        prop_assert_eq!(decide(3, "prism(a,b,c)", &names, &rs), tag == TripleTag::Prism);
    }

    #[test]
    fn pair_macros_agree(a in hs_candidate(3), b in hs_candidate(3)) {
        let rs = [a.clone(), b.clone()];
        let names = ["a", "b"];
        prop_assert_eq!(decide(3, "hs(a)", &names[..1], &rs[..1]), is_halfspace_region(&a));
        prop_assert_eq!(decide(3, "hs(a,b)", &names, &rs), hs_distinct(&rs));
        prop_assert_eq!(decide(3, "line(a,b)", &names, &rs), line_decider(&a, &b));
        prop_assert_eq!(decide(3, "parallel(a,b)", &names, &rs), parallel_decider(&a, &b));
    }

    #[test]
    fn frame_macro_agrees(hs in proptest::array::uniform4(halfspace(3)), m in affine_map(3), canonical in any::<bool>()) {
        let hs = if canonical {
            roq_core::predicates::canonical_frame_halfspaces().map(|h| apply_affine(&m, &h).unwrap())
        } else {
            hs
        };
        let rs = regions(&hs);
        let expected = is_frame_configuration(&hs[0], &hs[1], &hs[2], &hs[3]);
        prop_assert_eq!(decide(3, "frame(a,b,c,d)", &["a", "b", "c", "d"], &rs), expected);
        if canonical {
            prop_assert!(expected);
        }
    }
}

#[test]
fn planar_pair_macros() {
    use roq_core::kernel::Side;
    let h = |c: &[i64], o: i64, s| Region::from_halfspace(&HalfSpace::from_ints(c, o, s).unwrap());
    let x = h(&[1, 0], 0, Side::Pos);
    let y = h(&[0, 1], 0, Side::Pos);
    let x1 = h(&[1, 0], 1, Side::Neg);
    let names = ["a", "b"];
    assert!(decide(2, "line(a,b)", &names, &[x.clone(), y.clone()]));
    assert!(decide(2, "parallel(a,b)", &names, &[x.clone(), x1.clone()]));
    assert!(!decide(2, "hs(a,b)", &names, &[x.clone(), x.complement().unwrap()]));
}
