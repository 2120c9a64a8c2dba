//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::time::{Duration, Instant};

use common::*;
use multiweb::algebra::{det, poly_coefficient, Matrix, Poly, Rational, Scalar};
use multiweb::connection::{kasteleyn_connection, AnnulusSpec, Connection};
use multiweb::graph::{cilia_parity_polygon, euler_check, simple_cycles, standard_structure, PlanarGraph};
use multiweb::multiweb::{enumerate_multiwebs, Multiweb};
use multiweb::random::{
    random_connection, random_lattice_polygon, random_matchable_graph, random_planar_graph, random_rational_matrix,
    random_rational_vectors, random_triangulation, rng, TestRng,
};
use multiweb::theorem::*;
use multiweb::trace::*;
use rand::Rng;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, start: Instant, out: Outcome) -> Outcome {
    let took = start.elapsed();
    if out.ok && took > limit {
        return fail(format!("{} but took {took:.1?} (limit {limit:?})", out.detail));
    }
    out
}

fn symbolic(g: PlanarGraph) -> PlanarGraph {
    g.with_weights(|e| format!("w{e}"))
}

fn c1_pfaffian_golden() -> Outcome {
    let start = Instant::now();
    let g = two_by_three();
    let w = symbolic_weights(&g);
    let r = verify_kasteleyn(&g, &w, 2).unwrap();
    let quartic = Poly::var("a").mul(&Poly::var("d")).add(&Poly::var("b").mul(&Poly::var("e"))).add(&Poly::var("c").mul(&Poly::var("f"))).pow(4);
    if r.pf != quartic && r.pf != quartic.neg() {
        return fail(format!("Pf = {}", r.pf));
    }
    let c = poly_coefficient(&r.pf, "a^2*b*c*d^2*e*f").unwrap();
    if c.abs() != Rational::from_integer(12) {
        return fail(format!("coefficient {c}"));
    }
    within(Duration::from_secs(10), start, pass(format!("Pf = {:+}(ad+be+cf)^4, coefficient {c}", r.sign)))
}

fn c2_trace_golden() -> Outcome {
    let g = two_by_three();
    let m = Multiweb::new(&g, 2, two_by_three_web()).unwrap();
    let k = kasteleyn_connection::<Rational>(&g, 2);
    let s = standard_structure(&g).unwrap();
    let t = trace_contraction(&g, &k, &m, &s).unwrap();
    let d = kasteleyn_trace_decomposition(&g, &m, &unit_weights::<Rational>(&g)).unwrap();
    let mut weights: Vec<u64> = d.decompositions.iter().map(|c| c.weight).collect();
    weights.sort_unstable();
    if t.abs() != Rational::from_integer(12) || d.trace != t || weights != [2, 2, 4, 4] {
        return fail(format!("trace {t}, decomposition {} with weights {weights:?}", d.trace));
    }
    pass(format!("Tr = {t}, colored decompositions {weights:?}"))
}

fn c3_main_suite() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    let mut signs = Vec::new();
    for (count, max_k, n) in [(50, 6, 1), (20, 4, 2)] {
        for i in 0..count {
            let g = random_planar_graph(&mut r, 2 + i % (max_k - 1), 0.3);
            let c = random_connection(&mut r, &g, n);
            match verify_main(&g, &c, &unit_weights(&g)) {
                Ok(m) => signs.push(m.sign),
                Err(e) => return fail(format!("n={n} instance {i}: {e}")),
            }
        }
    }
    for i in 0..10 {
        let g = symbolic(random_planar_graph(&mut r, 2 + i % 4, 0.3));
        let c = random_connection(&mut r, &g, 1).lift::<Poly>();
        match verify_main(&g, &c, &symbolic_weights(&g)) {
            Ok(m) => signs.push(m.sign),
            Err(e) => return fail(format!("weighted instance {i}: {e}")),
        }
    }
    let plus = signs.iter().filter(|&&s| s > 0).count();
    within(
        Duration::from_secs(120),
        start,
        pass(format!("{} instances, sign +1 on {plus}", signs.len())),
    )
}

fn c4_kasteleyn_suite() -> Outcome {
    let start = Instant::now();
    let mut r = rng(4);
    for i in 0..30 {
        let k = 2 * (1 + i % 3);
        let g = symbolic(random_matchable_graph(&mut r, k, 0.3));
        let w = symbolic_weights(&g);
        for n in 1..=2 {
            if let Err(e) = verify_kasteleyn(&g, &w, n) {
                return fail(format!("instance {i} n={n}: {e}"));
            }
        }
    }
    within(Duration::from_secs(120), start, pass("30 graphs, |Pf| = Z_d^2n"))
}

fn suite_graphs(r: &mut TestRng) -> Vec<PlanarGraph> {
    let mut gs = vec![two_by_three(), square(), digon(), single_edge(), ladder()];
    gs.extend((0..6).map(|i| random_planar_graph(r, 2 + i % 4, 0.3)));
    gs
}

fn c5_engines() -> Outcome {
    let mut r = rng(5);
    let mut webs = 0;
    for g in suite_graphs(&mut r) {
        let s = standard_structure(&g).unwrap();
        for n in 1..=2 {
            if n == 2 && g.num_vertices() > 4 {
                continue;
            }
            let c = random_connection(&mut r, &g, n);
            for m in enumerate_multiwebs(&g, n) {
                let a = trace_coloring(&g, &c, &m, &s).unwrap();
                let b = trace_contraction(&g, &c, &m, &s).unwrap();
                if a != b {
                    return fail(format!("coloring {a} vs contraction {b}"));
                }
                if n == 1 && trace_sp2_loops(&g, &c, &m).unwrap() != a {
                    return fail("loop formula disagrees");
                }
                webs += 1;
            }
        }
    }
    pass(format!("{webs} webs"))
}

fn c6_identity() -> Outcome {
    let mut r = rng(6);
    let mut webs = 0;
    for g in suite_graphs(&mut r) {
        let s = standard_structure(&g).unwrap();
        for n in 1..=2 {
            if n == 2 && g.num_vertices() > 4 {
                continue;
            }
            let id = Connection::<Rational>::identity(&g, n);
            for m in enumerate_multiwebs(&g, n) {
                if trace_identity_colorings(&g, &m, &s).unwrap() != trace_contraction(&g, &id, &m, &s).unwrap() {
                    return fail("identity coloring trace disagrees");
                }
                webs += 1;
            }
        }
    }
    pass(format!("{webs} webs"))
}

fn c7_isotopy() -> Outcome {
    let mut r = rng(7);
    for i in 0..1000 {
        let p = random_lattice_polygon(&mut r, 8, 6);
        if !cilia_parity_polygon(&p).unwrap().congruence_holds() {
            return fail(format!("polygon {i}"));
        }
    }
    let mut loops = 0;
    for i in 0..20 {
        let g = random_triangulation(&mut r, 6 + i % 2);
        for c in simple_cycles(&g) {
            if !euler_check(&g, &c).unwrap() {
                return fail(format!("euler on triangulation {i}"));
            }
            loops += 1;
        }
    }
    pass(format!("1000 polygons, {loops} loops"))
}

fn c8_det_vertex() -> Outcome {
    let start = Instant::now();
    let mut r = rng(8);
    for n in 1..=3 {
        for i in 0..200 {
            let v = random_rational_vectors(&mut r, 2 * n, 2 * n);
            if det_vertex(&v).unwrap() != wedge_norm(&v).unwrap() {
                return fail(format!("n={n} input {i}"));
            }
        }
        let e: Vec<Vec<Rational>> = (0..2 * n)
            .map(|i| (0..2 * n).map(|j| Rational::from_integer((i == j) as i64)).collect())
            .collect();
        if !det_vertex(&e).unwrap().is_one() {
            return fail(format!("basis at n={n}"));
        }
    }
    within(Duration::from_secs(30), start, pass("600 inputs"))
}

fn c9_covariance() -> Outcome {
    let mut r = rng(9);
    let mut cases = 0;
    while cases < 100 {
        let n = 1 + cases % 2;
        let g = random_planar_graph(&mut r, if n == 1 { 5 } else { 3 }, 0.3);
        let s = standard_structure(&g).unwrap();
        let c = random_connection(&mut r, &g, n);
        let webs = enumerate_multiwebs(&g, n);
        if webs.is_empty() {
            continue;
        }
        let m = &webs[r.gen_range(0..webs.len())];
        let base = trace_coloring(&g, &c, m, &s).unwrap();
        let v = r.gen_range(0..g.num_vertices());
        let mut moved = s.clone();
        let e = moved.advance_cilium(&g, v);
        let expect = if m.get(e) % 2 == 1 { base.neg() } else { base.clone() };
        if trace_coloring(&g, &c, m, &moved).unwrap() != expect {
            return fail(format!("cilium move, case {cases}"));
        }
        let e = r.gen_range(0..g.num_edges());
        let mut flipped = s.clone();
        flipped.flip(e);
        let expect = if m.get(e) % 2 == 1 { base.neg() } else { base };
        if trace_coloring(&g, &c, m, &flipped).unwrap() != expect {
            return fail(format!("orientation flip, case {cases}"));
        }
        cases += 1;
    }
    pass("100 cases")
}

fn c10_spin() -> Outcome {
    let mut r = rng(10);
    let graphs = vec![two_by_three(), square_ring(), hex_ring(), ladder(), random_matchable_graph(&mut r, 6, 0.1)];
    let mut pairs = 0;
    for g in &graphs {
        let w: Vec<Rational> = (0..g.num_edges()).map(|e| Rational::from_integer(1 + (e % 3) as i64)).collect();
        let faces: Vec<usize> = (0..g.num_faces()).collect();
        for &f1 in &faces {
            for &f2 in &faces {
                if f1 >= f2 {
                    continue;
                }
                let pf = spin_correlation(g, f1, f2, &w).unwrap().value;
                let en = spin_correlation_enumerated(g, f1, f2, &w).unwrap();
                if pf != en {
                    return fail(format!("faces {f1},{f2}: {pf} vs {en}"));
                }
                pairs += 1;
            }
        }
    }
    for g in [square_ring(), hex_ring()] {
        let inner = if g.num_vertices() == 8 {
            g.face_with_vertices(&[4, 5, 6, 7]).unwrap()
        } else {
            hex_hole(&g)
        };
        let spec = AnnulusSpec::new(&g, inner).unwrap();
        let w = unit_weights::<Rational>(&g);
        let a = annulus_parity(&g, &spec, &w).unwrap();
        let b = annulus_parity_enumerated(&g, &spec, &w).unwrap();
        if a != b {
            return fail(format!("annulus {a} vs {b}"));
        }
    }
    pass(format!("{pairs} face pairs, 2 annuli"))
}

fn c11_u2() -> Outcome {
    let mut r = rng(11);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let (alpha, beta, eps, theta) = (r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0), r.gen_range(0.0..1.5));
        let rho = u2_rho(theta, alpha, beta, eps);
        for area in 0..8 {
            for mult in 1..=2u32 {
                let expect = match (area % 2, mult) {
                    (0, 1) => u2_loop_trace(U2LoopKind::EvenSingle, alpha, eps, theta),
                    (0, 2) => u2_loop_trace(U2LoopKind::EvenDoubled, alpha, eps, theta),
                    (1, 2) => u2_loop_trace(U2LoopKind::OddDoubled, alpha, eps, theta),
                    _ => continue,
                };
                let raw = raw_loop_trace(area, mult, &rho).unwrap();
                worst = worst.max((raw - expect).abs());
            }
        }
    }
    if worst > 1e-10 {
        return fail(format!("loop traces off by {worst:e}"));
    }
    for i in 0..20 {
        let theta = r.gen_range(-3.0..3.0);
        let (a, b) = (rsigns(theta), rsigns_raw(theta));
        let sign = if (a[0] - b[0]).abs() < (a[0] + b[0]).abs() { 1.0 } else { -1.0 };
        if a.iter().zip(b).any(|(x, y)| (x - sign * y).abs() > 1e-12) {
            return fail(format!("rotation weights at sample {i}"));
        }
    }
    let mut solved = 0;
    while solved < 20 {
        let (alpha, eps) = (r.gen_range(-3.0..3.0), r.gen_range(-3.0..3.0));
        let Ok(theta) = solved_theta(alpha, eps) else { continue };
        let odd = u2_loop_trace(U2LoopKind::OddDoubled, alpha, eps, theta);
        let esl = u2_loop_trace(U2LoopKind::EvenSingle, alpha, eps, theta);
        let edl = u2_loop_trace(U2LoopKind::EvenDoubled, alpha, eps, theta);
        if odd.abs() > 1e-12 || (esl - 1.0 - edl / 2.0).abs() > 1e-12 {
            return fail(format!("solved θ at α={alpha}, ε={eps}: odd {odd:e}, esl {esl}, edl {edl}"));
        }
        solved += 1;
    }
    pass(format!("raw traces within {worst:.1e}, 20 solved angles"))
}

fn c12_ck() -> Outcome {
    let g = hex_ring();
    let spec = AnnulusSpec::new(&g, hex_hole(&g)).unwrap();
    let a = extract_ck(&g, &spec, 2, &[0.3, 1.1, 1.9, 2.6], 0.7, 0.0, 0.0).unwrap();
    let b = extract_ck(&g, &spec, 2, &[0.5, 1.4, 2.2, 2.9], 1.7, 0.0, 0.0).unwrap();
    let drift = a.c.iter().zip(&b.c).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
    let residual = a.residual.max(b.residual);
    if residual >= 1e-8 || drift >= 1e-6 {
        return fail(format!("residual {residual:e}, drift {drift:e}"));
    }
    pass(format!("C = {:.6?}, residual {residual:.1e}, drift {drift:.1e}", a.c))
}

fn c13_qdet() -> Outcome {
    let mut r = rng(13);
    for i in 0..50 {
        let a = random_rational_matrix::<Rational>(&mut r, 3, 3);
        if qdet(&a, &Rational::one()).unwrap() != det(&a).unwrap() {
            return fail(format!("matrix {i}"));
        }
    }
    let v = |s: &str| Poly::var(s);
    let a = Matrix::from_rows(vec![vec![v("a11"), v("a12")], vec![v("a21"), v("a22")]]).unwrap();
    let expect = v("a11").mul(&v("a22")).sub(&v("q").mul(&v("a12")).mul(&v("a21")));
    if qdet(&a, &v("q")).unwrap() != expect {
        return fail("2x2 closed form");
    }
    pass("50 matrices, 2x2 closed form")
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 13] = [
        ("2by3 Pfaffian", c1_pfaffian_golden),
        ("2by3 trace", c2_trace_golden),
        ("Pf H = sum of traces", c3_main_suite),
        ("Kasteleyn |Pf| = Z_d^2n", c4_kasteleyn_suite),
        ("trace engines agree", c5_engines),
        ("identity coloring trace", c6_identity),
        ("isotopy parity and euler", c7_isotopy),
        ("det vertex = wedge norm", c8_det_vertex),
        ("cilium and orientation signs", c9_covariance),
        ("spin correlations", c10_spin),
        ("U(2) loop formulas", c11_u2),
        ("C_k extraction", c12_ck),
        ("quantum determinant", c13_qdet),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let tag = if out.ok { "PASS" } else { "FAIL" };
        println!("{tag} {:>2} {name}: {} [{:.1?}]", i + 1, out.detail, start.elapsed());
        if !out.ok {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
