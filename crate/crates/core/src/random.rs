//! Seeded generators for randomized suites: planar graphs, symplectic
//! matrices and lattice polygons.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Matrix, Rational, Scalar};
use crate::connection::Connection;
use crate::graph::{cmp_ccw_from, orient, PlanarGraph, Point};

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `k` integer points in `[0, span)²` with distinct y-coordinates and no
/// three collinear.
pub fn generic_points(rng: &mut impl Rng, k: usize, span: i64) -> Vec<Point> {
    assert!(span as usize >= k, "span too small for distinct heights");
    'retry: loop {
        let mut ys: Vec<i64> = (0..span).collect();
        ys.shuffle(rng);
        let mut pts: Vec<Point> = Vec::with_capacity(k);
        for &y in ys.iter().take(k) {
            pts.push(Point::from_ints(rng.gen_range(0..span), y));
        }
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    if orient(&pts[a], &pts[b], &pts[c]) == Ordering::Equal {
                        continue 'retry;
                    }
                }
            }
        }
        return pts;
    }
}

/// Whether segments `ab` and `cd` cross at a point interior to both.
/// Assumes no three of the four points are collinear.
fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    if a == c || a == d || b == c || b == d {
        return false;
    }
    orient(a, b, c) != orient(a, b, d) && orient(c, d, a) != orient(c, d, b)
}

/// A maximal non-crossing straight-line graph on generic points: short
/// segments are inserted first, each kept if it crosses nothing so far.
pub fn triangulation_edges(pts: &[Point]) -> Vec<(usize, usize)> {
    let mut cand: Vec<(usize, usize)> = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            cand.push((i, j));
        }
    }
    let len2 = |&(i, j): &(usize, usize)| {
        let d = pts[j].sub(&pts[i]);
        &d.x * &d.x + &d.y * &d.y
    };
    cand.sort_by(|a, b| len2(a).cmp(&len2(b)).then(a.cmp(b)));
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for (i, j) in cand {
        if kept
            .iter()
            .all(|&(k, l)| !segments_cross(&pts[i], &pts[j], &pts[k], &pts[l]))
        {
            kept.push((i, j));
        }
    }
    kept
}

fn build(pts: &[Point], edges: &[(usize, usize)]) -> PlanarGraph {
    PlanarGraph::new(
        pts.iter().enumerate().map(|(i, p)| (i as i64, p.clone())).collect(),
        edges
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| (e as i64, u as i64, v as i64, "1".to_string()))
            .collect(),
    )
    .expect("generated graphs are planar")
}

pub fn random_triangulation(rng: &mut impl Rng, k: usize) -> PlanarGraph {
    let pts = generic_points(rng, k, (3 * k as i64).max(8));
    build(&pts, &triangulation_edges(&pts))
}

/// A random triangulation with each edge deleted with probability `p_delete`
/// unless that would disconnect the graph.
pub fn random_planar_graph(rng: &mut impl Rng, k: usize, p_delete: f64) -> PlanarGraph {
    let pts = generic_points(rng, k, (3 * k as i64).max(8));
    let mut edges = triangulation_edges(&pts);
    edges.shuffle(rng);
    let mut i = 0;
    while i < edges.len() {
        if rng.gen_bool(p_delete) {
            let removed = edges.remove(i);
            if !connected(k, &edges) {
                edges.insert(i, removed);
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    edges.sort_unstable();
    build(&pts, &edges)
}

/// Random planar graph with an even number of vertices and at least one
/// perfect matching.
pub fn random_matchable_graph(rng: &mut impl Rng, k: usize, p_delete: f64) -> PlanarGraph {
    assert!(k.is_multiple_of(2));
    loop {
        let g = random_planar_graph(rng, k, p_delete);
        if !crate::multiweb::enumerate_dimers(&g).is_empty() {
            return g;
        }
    }
}

fn connected(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = k;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// Product of random elementary symplectic factors `[[I, S], [0, I]]`,
/// `[[I, 0], [S, I]]` (with `S` symmetric) and `diag(A, A⁻ᵀ)` (with `A` unit
/// lower triangular).
pub fn random_symplectic(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    let mut m = Matrix::identity(2 * n);
    for _ in 0..3 {
        let kind = rng.gen_range(0..3);
        let f = match kind {
            0 | 1 => {
                let mut s = Matrix::zeros(n, n);
                for i in 0..n {
                    for j in i..n {
                        let x = small_rational(rng);
                        s.set(i, j, x.clone());
                        s.set(j, i, x);
                    }
                }
                let mut f = Matrix::identity(2 * n);
                if kind == 0 {
                    f.set_block(0, n, &s);
                } else {
                    f.set_block(n, 0, &s);
                }
                f
            }
            _ => {
                let mut a = Matrix::identity(n);
                for i in 0..n {
                    for j in 0..i {
                        a.set(i, j, Rational::from_integer(rng.gen_range(-2..=2)));
                    }
                }
                let a_inv_t = unit_lower_inverse(&a).transpose();
                let mut f = Matrix::zeros(2 * n, 2 * n);
                f.set_block(0, 0, &a);
                f.set_block(n, n, &a_inv_t);
                f
            }
        };
        m = m.mul(&f);
    }
    m
}

fn unit_lower_inverse(a: &Matrix<Rational>) -> Matrix<Rational> {
    let n = a.rows();
    let mut inv = Matrix::<Rational>::identity(n);
    for i in 0..n {
        for j in 0..i {
            let mut s = Rational::zero();
            for k in j..i {
                s = &s + &(a.get(i, k) * inv.get(k, j));
            }
            inv.set(i, j, -s);
        }
    }
    inv
}

pub fn random_connection(rng: &mut impl Rng, g: &PlanarGraph, n: usize) -> Connection<Rational> {
    let mats = (0..g.num_edges()).map(|_| random_symplectic(rng, n)).collect();
    Connection::new(g, n, mats).expect("products of symplectic factors are symplectic")
}

/// A random simple lattice polygon with no horizontal step, in random
/// orientation. Vertices are sorted by angle around an interior point.
pub fn random_lattice_polygon(rng: &mut impl Rng, max_vertices: usize, span: i64) -> Vec<Point> {
    loop {
        let k = rng.gen_range(3..=max_vertices.max(3));
        let pts: Vec<Point> = (0..k)
            .map(|_| Point::from_ints(rng.gen_range(-span..=span), rng.gen_range(-span..=span)))
            .collect();
        // Offset center avoids lattice points lying on rays through it.
        let center = Point::new(Rational::new(1, 3), Rational::new(1, 7));
        let ray = Point::from_ints(1, 0);
        let mut sorted = pts.clone();
        sorted.sort_by(|a, b| cmp_ccw_from(&ray, &a.sub(&center), &b.sub(&center)));
        let distinct_angles = sorted.windows(2).all(|w| {
            cmp_ccw_from(&ray, &w[0].sub(&center), &w[1].sub(&center)) == Ordering::Less
        });
        if !distinct_angles {
            continue;
        }
        // The center must be strictly inside: every turn around it is less than π.
        let l = sorted.len();
        let inside = (0..l).all(|i| orient(&sorted[i], &sorted[(i + 1) % l], &center) == Ordering::Greater);
        let no_flat = (0..l).all(|i| sorted[i].y != sorted[(i + 1) % l].y);
        if !inside || !no_flat {
            continue;
        }
        if rng.gen_bool(0.5) {
            sorted.reverse();
        }
        return sorted;
    }
}

pub fn random_rational_vectors(rng: &mut impl Rng, count: usize, len: usize) -> Vec<Vec<Rational>> {
    (0..count)
        .map(|_| (0..len).map(|_| small_rational(rng)).collect())
        .collect()
}

pub fn random_rational_matrix<T: Scalar>(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix<T> {
    Matrix::from_fn(rows, cols, |_, _| T::from_rational(&small_rational(rng)))
}
