mod common;

use common::*;
use multiweb::algebra::{Matrix, Rational, Scalar};
use multiweb::connection::Connection;
use multiweb::graph::{standard_structure, Structure};
use multiweb::multiweb::{enumerate_multiwebs, Multiweb};
use multiweb::random::{random_connection, random_planar_graph, random_rational_matrix, random_rational_vectors, random_symplectic, rng};
use multiweb::trace::*;
use proptest::prelude::*;

fn web(g: &multiweb::graph::PlanarGraph, n: usize, m: Vec<u32>) -> Multiweb {
    Multiweb::new(g, n, m).unwrap()
}

#[test]
fn small_identity_traces() {
    let e = single_edge();
    let s = standard_structure(&e).unwrap();
    let id = Connection::<Rational>::identity(&e, 1);
    let m = web(&e, 1, vec![2]);
    assert_eq!(trace_coloring(&e, &id, &m, &s).unwrap(), Rational::from_integer(-1));
    assert_eq!(trace_contraction(&e, &id, &m, &s).unwrap(), Rational::from_integer(-1));

    let d = digon();
    let s = standard_structure(&d).unwrap();
    let id = Connection::<Rational>::identity(&d, 1);
    let lp = web(&d, 1, vec![1, 1]);
    for t in [
        trace_coloring(&d, &id, &lp, &s).unwrap(),
        trace_contraction(&d, &id, &lp, &s).unwrap(),
        trace_sp2_loops(&d, &id, &lp).unwrap(),
        trace_identity_colorings(&d, &lp, &s).unwrap(),
    ] {
        assert_eq!(t, Rational::from_integer(-2));
    }
}

#[test]
fn loop_with_monodromy_j_has_zero_trace() {
    let g = square();
    let j = multiweb::algebra::symplectic_j::<Rational>(1);
    let c = Connection::identity(&g, 1).with_edge(0, j).unwrap();
    let m = web(&g, 1, vec![1, 1, 1, 1]);
    assert!(trace_sp2_loops(&g, &c, &m).unwrap().is_zero());
    assert!(trace_contraction(&g, &c, &m, &standard_structure(&g).unwrap()).unwrap().is_zero());
}

#[test]
fn sp2_requires_rank_one() {
    let g = digon();
    let c = Connection::<Rational>::identity(&g, 2);
    let m = web(&g, 2, vec![2, 2]);
    assert!(matches!(trace_sp2_loops(&g, &c, &m), Err(multiweb::Error::WrongRank { .. })));
}

#[test]
fn engines_agree_at_rank_two() {
    let mut r = rng(11);
    for _ in 0..4 {
        let g = random_planar_graph(&mut r, 4, 0.3);
        let s = standard_structure(&g).unwrap();
        let c = random_connection(&mut r, &g, 2);
        for m in enumerate_multiwebs(&g, 2).iter().take(12) {
            assert_eq!(trace_coloring(&g, &c, m, &s).unwrap(), trace_contraction(&g, &c, m, &s).unwrap());
        }
    }
}

#[test]
fn sl_trace_is_proportional_on_bipartite_graphs() {
    for (g, n) in [(square(), 1), (ladder(), 1), (square(), 2)] {
        let s = standard_structure(&g).unwrap();
        let bw = bipartite_structure(&g, &s).unwrap();
        let mut r = rng(5);
        let c = random_connection(&mut r, &g, n);
        let mut ratio = None;
        for m in enumerate_multiwebs(&g, n) {
            let sp = trace_coloring(&g, &c, &m, &bw).unwrap();
            let sl = trace_sl_bipartite(&g, &c, &m, &s).unwrap();
            if sl.is_zero() {
                assert!(sp.is_zero());
                continue;
            }
            let q = sp.div_exact(&sl).unwrap();
            assert_eq!(*ratio.get_or_insert(q.clone()), q);
        }
        assert_eq!(ratio, Some(Rational::one()));
    }
    let tri = multiweb::graph::PlanarGraph::from_integer_points(&[(0, 0), (2, 1), (1, 3)], &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let s = standard_structure(&tri).unwrap();
    assert!(matches!(bipartite_structure(&tri, &s), Err(multiweb::Error::NotBipartite)));
}

#[test]
fn codeterminant_entries() {
    let g1 = codeterminant(1);
    assert_eq!(g1.entries, vec![(vec![0, 1], 1), (vec![1, 0], -1)]);
    let g2 = codeterminant(2);
    assert_eq!(g2.entries.len(), 24);
    assert_eq!(g2.entry(&[1, 0, 2, 3]), -g2.entry(&[0, 1, 2, 3]));
    assert_eq!(g2.entry(&[0, 0, 2, 3]), 0);
}

#[test]
fn crossing_counts() {
    let nested = PairingDiagram { pairs: vec![(0, 3), (1, 2)] };
    let crossed = PairingDiagram { pairs: vec![(0, 2), (1, 3)] };
    assert_eq!(crossing_count(&nested), 0);
    assert_eq!(crossing_count(&crossed), 1);
    for n in 1..=4 {
        let alpha0 = PairingDiagram { pairs: (0..n).map(|k| (k, k + n)).collect() };
        assert_eq!(alpha0.crossing_count(), n * (n - 1) / 2);
        assert_eq!(PairingDiagram::all(2 * n).len(), (1..=n).map(|k| 2 * k - 1).product::<usize>());
    }
}

fn basis(n: usize) -> Vec<Vec<Rational>> {
    (0..2 * n)
        .map(|i| (0..2 * n).map(|j| Rational::from_integer((i == j) as i64)).collect())
        .collect()
}

#[test]
fn det_vertex_on_basis_and_degenerate_input() {
    for n in 1..=3 {
        assert!(det_vertex(&basis(n)).unwrap().is_one());
        assert!(wedge_norm(&basis(n)).unwrap().is_one());
        let mut swapped = basis(n);
        swapped.swap(0, 1);
        assert_eq!(wedge_norm(&swapped).unwrap(), Rational::from_integer(-1));
        let mut repeated = basis(n);
        repeated[1] = repeated[0].clone();
        assert!(det_vertex(&repeated).unwrap().is_zero());
    }
    assert!(matches!(det_vertex(&basis(1)[..1]), Err(multiweb::Error::DimensionMismatch(_))));
}

#[test]
fn qdet_closed_forms() {
    use multiweb::algebra::Poly;
    let a = Matrix::from_rows(vec![vec![Poly::var("a"), Poly::var("b")], vec![Poly::var("c"), Poly::var("d")]]).unwrap();
    assert_eq!(qdet(&a, &Poly::var("q")).unwrap().to_string(), "-b*c*q + a*d");
    assert!(qdet(&Matrix::<Poly>::identity(3), &Poly::var("q")).unwrap().is_one());
    assert_eq!(inversions(&[2, 0, 1]), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn det_vertex_matches_wedge_norm(seed in any::<u64>(), n in 1usize..=3) {
        let vs = random_rational_vectors(&mut rng(seed), 2 * n, 2 * n);
        prop_assert_eq!(det_vertex(&vs).unwrap(), wedge_norm(&vs).unwrap());
    }

    #[test]
    fn det_vertex_is_multilinear(seed in any::<u64>(), n in 1usize..=2, slot in 0usize..4) {
        let mut r = rng(seed);
        let slot = slot % (2 * n);
        let vs = random_rational_vectors(&mut r, 2 * n, 2 * n);
        let extra = random_rational_vectors(&mut r, 1, 2 * n).remove(0);
        let mut summed = vs.clone();
        summed[slot] = vs[slot].iter().zip(&extra).map(|(a, b)| a.add(b)).collect();
        let mut other = vs.clone();
        other[slot] = extra;
        let lhs = det_vertex(&summed).unwrap();
        let rhs = det_vertex(&vs).unwrap().add(&det_vertex(&other).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qdet_at_one_is_det(seed in any::<u64>(), k in 1usize..=4) {
        let a = random_rational_matrix::<Rational>(&mut rng(seed), k, k);
        prop_assert_eq!(qdet(&a, &Rational::one()).unwrap(), multiweb::algebra::det(&a).unwrap());
    }

    #[test]
    fn engines_agree_at_rank_one(seed in any::<u64>(), k in 2usize..=6) {
        let mut r = rng(seed);
        let g = random_planar_graph(&mut r, k, 0.3);
        let s = standard_structure(&g).unwrap();
        let c = random_connection(&mut r, &g, 1);
        for m in enumerate_multiwebs(&g, 1).iter().take(16) {
            let a = trace_coloring(&g, &c, m, &s).unwrap();
            prop_assert_eq!(&a, &trace_contraction(&g, &c, m, &s).unwrap());
            prop_assert_eq!(&a, &trace_sp2_loops(&g, &c, m).unwrap());
        }
    }

    #[test]
    fn identity_colorings_match_tensor_trace(seed in any::<u64>(), k in 2usize..=5, n in 1usize..=2) {
        let mut r = rng(seed);
        let g = random_planar_graph(&mut r, if n == 2 { k.min(4) } else { k }, 0.3);
        let s = standard_structure(&g).unwrap();
        let id = Connection::<Rational>::identity(&g, n);
        for m in enumerate_multiwebs(&g, n).iter().take(10) {
            prop_assert_eq!(trace_identity_colorings(&g, m, &s).unwrap(), trace_contraction(&g, &id, m, &s).unwrap());
        }
    }

    #[test]
    fn cilium_and_orientation_moves(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = rng(seed);
        let g = random_planar_graph(&mut r, k, 0.3);
        let s = standard_structure(&g).unwrap();
        let c = random_connection(&mut r, &g, 1);
        let v = (seed as usize) % g.num_vertices();
        let e = (seed as usize / 7) % g.num_edges();
        for m in enumerate_multiwebs(&g, 1).iter().take(8) {
            let base = trace_contraction(&g, &c, m, &s).unwrap();
            let mut moved: Structure = s.clone();
            let crossed = moved.advance_cilium(&g, v);
            let sign = if m.get(crossed) % 2 == 1 { base.neg() } else { base.clone() };
            prop_assert_eq!(trace_contraction(&g, &c, m, &moved).unwrap(), sign);
            let mut flipped = s.clone();
            flipped.flip(e);
            let sign = if m.get(e) % 2 == 1 { base.neg() } else { base.clone() };
            prop_assert_eq!(trace_coloring(&g, &c, m, &flipped).unwrap(), sign);
        }
    }

    #[test]
    fn gauge_invariance(seed in any::<u64>(), k in 2usize..=4, n in 1usize..=2) {
        let mut r = rng(seed);
        let g = random_planar_graph(&mut r, k, 0.3);
        let s = standard_structure(&g).unwrap();
        let c = random_connection(&mut r, &g, n);
        let at: Vec<_> = (0..g.num_vertices()).map(|_| random_symplectic(&mut r, n)).collect();
        let gauged = c.gauge(&g, &at).unwrap();
        for m in enumerate_multiwebs(&g, n).iter().take(6) {
            prop_assert_eq!(trace_contraction(&g, &c, m, &s).unwrap(), trace_contraction(&g, &gauged, m, &s).unwrap());
        }
    }
}
