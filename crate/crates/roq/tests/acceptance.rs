//! End-to-end acceptance criteria. Each prints one PASS/FAIL line with its
//! timing; the process fails if any criterion fails or overruns its limit.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use roq::random::{self, Shape};
use roq::suite::helly_suite;
use roq_core::fixing::{
    affine_complete_descriptor, describe_halfspace, halfspace_decomposition, matches_halfspace, recover_affine,
    satisfies_descriptor,
};
use roq_core::kernel::{apply_affine, rational, HalfSpace, Hyperplane, Rational};
use roq_core::logic::{
    bottom_definition, complement_definition, evaluate, expand_macros, helly_formula, parse, product_definition,
    sum_definition, top_definition, Assignment, EvalOptions, Formula, Truth,
};
use roq_core::predicates::{
    canonical_frame, canonical_frame_halfspaces, classify_triple, halfspace_of, hs_distinct, is_frame_configuration,
    is_halfspace_region, planes_meet_in_line, planes_parallel, TripleTag,
};
use roq_core::region::Region;
use roq_core::vonstaudt::{check_witness, encode_rational, point_value, vs_add, vs_multiply};

type Outcome = Result<String, String>;
/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ok<T>(r: roq_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tag_of(shape: Shape) -> (TripleTag, usize) {
    match shape {
        Shape::Fan => (TripleTag::Fan, 6),
        Shape::Prism => (TripleTag::Prism, 7),
        Shape::Corner => (TripleTag::Corner, 8),
    }
}

fn cell_counts() -> Outcome {
    let mut rng = random::rng(1);
    let mut checked = 0;
    for shape in [Shape::Fan, Shape::Prism, Shape::Corner] {
        let (tag, count) = tag_of(shape);
        let [a, b, c] = random::canonical_triple(shape);
        let mut triples = vec![[a, b, c]];
        triples.extend((0..100).map(|_| random::shaped_triple(&mut rng, shape)));
        for [a, b, c] in &triples {
            let class = classify_triple(a, b, c);
            ensure(class.tag == tag && class.cell_count == count, || {
                format!("{shape:?} gave {:?} with {} cells", class.tag, class.cell_count)
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} triples, counts 6/7/8 exact"))
}

fn algebra_laws(a: &Region, b: &Region, c: &Region) -> Result<(), String> {
    let dim = a.dim();
    let (zero, one) = (Region::empty(dim), Region::full(dim));
    let na = ok(a.complement())?;
    let checks = [
        ("a*b = b*a", ok(a.product(b))? == ok(b.product(a))?),
        ("a+b = b+a", ok(a.sum(b))? == ok(b.sum(a))?),
        ("(a*b)*c = a*(b*c)", ok(ok(a.product(b))?.product(c))? == ok(a.product(&ok(b.product(c))?))?),
        ("(a+b)+c = a+(b+c)", ok(ok(a.sum(b))?.sum(c))? == ok(a.sum(&ok(b.sum(c))?))?),
        (
            "a*(b+c) = a*b+a*c",
            ok(a.product(&ok(b.sum(c))?))? == ok(ok(a.product(b))?.sum(&ok(a.product(c))?))?,
        ),
        (
            "a+(b*c) = (a+b)*(a+c)",
            ok(a.sum(&ok(b.product(c))?))? == ok(ok(a.sum(b))?.product(&ok(a.sum(c))?))?,
        ),
        (
            "-(a*b) = -a+-b",
            ok(ok(a.product(b))?.complement())? == ok(na.sum(&ok(b.complement())?))?,
        ),
        (
            "-(a+b) = -a*-b",
            ok(ok(a.sum(b))?.complement())? == ok(na.product(&ok(b.complement())?))?,
        ),
        ("a*-a = 0", ok(a.product(&na))? == zero),
        ("a+-a = 1", ok(a.sum(&na))? == one),
        ("--a = a", ok(na.complement())? == *a),
        ("a<=b iff a*b = a", ok(a.leq(b))? == (ok(a.product(b))? == *a)),
    ];
    for (law, ok) in checks {
        ensure(ok, || format!("{law} fails in dimension {dim}"))?;
    }
    Ok(())
}

fn boolean_algebra() -> Outcome {
    let mut rng = random::rng(2);
    let mut regions = 0;
    for dim in [2, 3] {
        let mut made = 0;
        while made < 200 {
            let rs = random::regions_over_pool(&mut rng, dim, 6, 3);
            algebra_laws(&rs[0], &rs[1], &rs[2])?;
            algebra_laws(&rs[2], &rs[0], &rs[1])?;
            made += 3;
        }
        regions += made;
    }
    Ok(format!("{regions} regions over pools of at most 6 planes"))
}

fn theory_separation() -> Outcome {
    let mut lines = Vec::new();
    for n in 1..=2 {
        let r = helly_suite(n, n + 2, 500, 3 + n as u64, EvalOptions::default()).map_err(|e| e.to_string())?;
        ensure(r.separates(), || format!("n = {n}: {}", r.summary()))?;
        lines.push(format!("n={n}: {} ({} non-vacuous)", r.summary(), r.nonvacuous));
    }
    Ok(lines.join("; "))
}

fn von_staudt() -> Outcome {
    let f = canonical_frame();
    let mut values: Vec<Rational> = (-10..=10).flat_map(|p| (1..=10).map(move |q| rational(p, q))).collect();
    values.sort();
    values.dedup();
    let charts = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let mut witnesses = 0usize;
    for &(plane, axis) in &charts {
        for q in &values {
            let (p, cert) = ok(encode_rational(&f, plane, axis, q))?;
            ensure(p.value() == q && &ok(point_value(&f, axis, p.marker()))? == q, || format!("{q} on chart ({plane},{axis})"))?;
            ensure(cert.iter().all(check_witness), || format!("certificate of {q} rejected"))?;
            witnesses += cert.len();
        }
    }
    let (plane, axis) = (2, 0);
    let points: Vec<_> = values
        .iter()
        .map(|q| ok(encode_rational(&f, plane, axis, q)).map(|(p, _)| p))
        .collect::<Result<_, _>>()?;
    let mut pairs = 0usize;
    for (i, a) in points.iter().enumerate() {
        for b in &points[i..] {
            let (s, ws) = ok(vs_add(a, b))?;
            let (m, wm) = ok(vs_multiply(a, b))?;
            ensure(ok(point_value(&f, axis, s.marker()))? == a.value() + b.value(), || {
                format!("{} + {}", a.value(), b.value())
            })?;
            ensure(ok(point_value(&f, axis, m.marker()))? == a.value() * b.value(), || {
                format!("{} * {}", a.value(), b.value())
            })?;
            ensure(check_witness(&ws) && check_witness(&wm), || format!("witness for {}, {}", a.value(), b.value()))?;
            pairs += 1;
            witnesses += 2;
        }
    }
    Ok(format!(
        "{} values on 6 charts, {pairs} unordered pairs, {witnesses} witnesses checked",
        values.len()
    ))
}

fn fixing_uniqueness() -> Outcome {
    let mut rng = random::rng(5);
    for i in 0..50 {
        let frame = ok(canonical_frame().transform(&random::affine_map(&mut rng, 3)))?;
        let h = random::halfspace(&mut rng, 3);
        let d = ok(describe_halfspace(&frame, &h))?;
        ensure(ok(matches_halfspace(&frame, &d, &h))?, || format!("half-space {i} does not match itself"))?;
        let mut decoys: Vec<HalfSpace> = vec![h.complement()];
        while decoys.len() < 200 {
            let g = random::halfspace(&mut rng, 3);
            if g != h {
                decoys.push(g);
            }
        }
        for g in &decoys {
            ensure(!ok(matches_halfspace(&frame, &d, g))?, || format!("decoy {g} matches half-space {i}"))?;
        }
    }
    Ok("50 half-spaces, 200 decoys each, no false matches".into())
}

fn affine_completeness() -> Outcome {
    let mut rng = random::rng(6);
    let maps: Vec<_> = (0..20).map(|_| random::affine_map(&mut rng, 3)).collect();
    for i in 0..20 {
        let r = random::region(&mut rng, 3, 4);
        let d = ok(affine_complete_descriptor(&r))?;
        let (hs, _) = halfspace_decomposition(&r);
        for tau in &maps {
            let frame = ok(canonical_frame().transform(tau))?;
            let tuple: Vec<HalfSpace> = hs.iter().map(|h| apply_affine(tau, h)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
            let image = ok(r.transform(tau))?;
            let got = satisfies_descriptor(&frame, &tuple, &d);
            ensure(got.as_ref() == Some(&image), || format!("region {i}: image tuple does not satisfy its descriptor"))?;
            let recovered = ok(recover_affine(&canonical_frame(), &frame))?;
            ensure(ok(r.transform(&recovered))? == image, || format!("region {i}: recovered map misses the image"))?;
        }
    }
    Ok("20 regions x 20 maps, exact images".into())
}

fn decide(dim: usize, src: &str, names: &[&str], rs: &[Region]) -> Result<bool, String> {
    let a: Assignment = names.iter().map(|n| n.to_string()).zip(rs.iter().cloned()).collect();
    let v = evaluate(dim, &parse(src).map_err(|e| e.to_string())?, &a, 1_000_000).map_err(|e| e.to_string())?;
    match v.value {
        Truth::True => Ok(true),
        Truth::False => Ok(false),
        Truth::Unknown => Err(format!("{src} returned Unknown")),
    }
}

fn pair_planes(a: &Region, b: &Region) -> Option<(HalfSpace, HalfSpace)> {
    (hs_distinct(&[a.clone(), b.clone()])).then(|| (halfspace_of(a).unwrap(), halfspace_of(b).unwrap()))
}

/// A half-space, sometimes sharing a normal with `other` so pairs are parallel.
fn pair_partner(rng: &mut ChaCha8Rng, other: &Region) -> Region {
    match (rng.random_range(0..3), halfspace_of(other)) {
        (0, Some(h)) => {
            let shift = random::small_rational(rng);
            let p = Hyperplane::new(h.plane().normal().clone(), h.plane().offset() + shift).unwrap();
            Region::from_halfspace(&p.half(random::side(rng)))
        }
        _ => random::hs_candidate(rng, 3),
    }
}

fn evaluator_agreement() -> Outcome {
    let mut rng = random::rng(7);
    let names = ["a", "b", "c", "d"];
    let mut agreed = 0;
    for _ in 0..100 {
        let a = random::hs_candidate(&mut rng, 3);
        ensure(decide(3, "hs(a)", &names[..1], std::slice::from_ref(&a))? == is_halfspace_region(&a), || "hs disagrees".into())?;
        let b = pair_partner(&mut rng, &a);
        let rs = [a, b];
        let planes = pair_planes(&rs[0], &rs[1]);
        let line = planes.as_ref().is_some_and(|(x, y)| planes_meet_in_line(x, y).unwrap());
        let parallel = planes.as_ref().is_some_and(|(x, y)| planes_parallel(x, y).unwrap());
        ensure(decide(3, "line(a,b)", &names[..2], &rs)? == line, || "line disagrees".into())?;
        ensure(decide(3, "parallel(a,b)", &names[..2], &rs)? == parallel, || "parallel disagrees".into())?;
        agreed += 3;
    }
    for (src, tag) in [("fan(a,b,c)", TripleTag::Fan), ("prism(a,b,c)", TripleTag::Prism), ("corner(a,b,c)", TripleTag::Corner)] {
        for i in 0..100 {
            let t = match i % 4 {
                0 => random::shaped_triple(&mut rng, Shape::Fan),
                1 => random::shaped_triple(&mut rng, Shape::Prism),
                2 => random::shaped_triple(&mut rng, Shape::Corner),
                _ => [0; 3].map(|_| random::halfspace(&mut rng, 3)),
            };
            let expected = classify_triple(&t[0], &t[1], &t[2]).tag == tag;
            let rs: Vec<Region> = t.iter().map(Region::from_halfspace).collect();
            ensure(decide(3, src, &names[..3], &rs)? == expected, || format!("{src} disagrees"))?;
            agreed += 1;
        }
    }
    for i in 0..100 {
        let hs = if i % 2 == 0 {
            let m = random::affine_map(&mut rng, 3);
            canonical_frame_halfspaces().map(|h| {
                let g = apply_affine(&m, &h).unwrap();
                if rng.random_bool(0.25) {
                    g.complement()
                } else {
                    g
                }
            })
        } else {
            [0; 4].map(|_| random::halfspace(&mut rng, 3))
        };
        let expected = is_frame_configuration(&hs[0], &hs[1], &hs[2], &hs[3]);
        let rs: Vec<Region> = hs.iter().map(Region::from_halfspace).collect();
        ensure(decide(3, "frame(a,b,c,d)", &names, &rs)? == expected, || "frame disagrees".into())?;
        agreed += 1;
    }
    Ok(format!("{agreed} guarded evaluations, no Unknown"))
}

/// Every defining formula, as text and as built by the library.
fn corpus() -> Vec<Formula> {
    let texts = [
        "hs(x)",
        "hs(x,y,z)",
        "hs(x1,x2,x3,x4)",
        "line(x,y)",
        "parallel(x,y)",
        "fan(a,b,c)",
        "prism(a,b,c)",
        "corner(a,b,c)",
        "frame(a,b,c,d)",
        "coincident2(a,b,y)",
        "parallel2(a,b,y)",
        "point2(a,b,y)",
        "conv(x) & conv(-x) & x != 0 & x != 1",
        "helly(1,3)",
        "helly(2,4)",
        "helly(3,5)",
        "A x. A y. (x <= y -> x * y = x) & (x * y = x -> x <= y)",
        "E w. (w = x * y | w = x + y) & w <= x + y",
    ];
    let mut out: Vec<Formula> = texts.iter().map(|t| parse(t).expect("corpus text parses")).collect();
    let expanded: Vec<Formula> = out.iter().map(expand_macros).collect();
    out.extend(expanded);
    out.extend([
        product_definition("m", "x", "y", "w"),
        sum_definition("m", "x", "y", "w"),
        complement_definition("y", "x", "w"),
        top_definition("x", "y"),
        bottom_definition("x", "y"),
    ]);
    for n in 1..=3 {
        for extra in 0..3 {
            out.push(helly_formula(n, n + 1 + extra).expect("valid sizes"));
        }
    }
    out
}

fn parser_roundtrip() -> Outcome {
    let formulas = corpus();
    for f in &formulas {
        let text = f.to_string();
        let back = parse(&text).map_err(|e| format!("{text}: {e}"))?;
        ensure(&back == f, || format!("roundtrip changed {text}"))?;
        ensure(back.to_string() == text, || format!("reprint changed {text}"))?;
    }
    Ok(format!("{} formulas", formulas.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("cell counts", cell_counts, 10),
        ("boolean algebra", boolean_algebra, 60),
        ("theory separation", theory_separation, 60),
        ("von staudt homomorphism", von_staudt, 120),
        ("fixing uniqueness", fixing_uniqueness, 30),
        ("affine completeness", affine_completeness, 120),
        ("evaluator agreement", evaluator_agreement, 60),
        ("parser roundtrip", parser_roundtrip, 5),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        match (&result, over) {
            (Ok(detail), false) => println!("PASS {}. {name} ({:.2}s < {limit}s): {detail}", i + 1, took.as_secs_f64()),
            (Ok(detail), true) => {
                failed += 1;
                println!("FAIL {}. {name} ({:.2}s exceeds {limit}s): {detail}", i + 1, took.as_secs_f64())
            }
            (Err(why), _) => {
                failed += 1;
                println!("FAIL {}. {name} ({:.2}s): {why}", i + 1, took.as_secs_f64())
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
