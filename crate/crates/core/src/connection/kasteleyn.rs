use std::collections::VecDeque;

use super::{j_power, Connection};
use crate::algebra::Scalar;
use crate::graph::PlanarGraph;

/// Exponents `x_e ∈ ℤ/4` on canonical directions such that every bounded face
/// has counterclockwise exponent sum `ℓ − 2`.
///
/// Edges of a BFS spanning tree get exponent 0. The remaining edges form a
/// spanning tree of the dual rooted at the outer face, and each is solved
/// when its face is reached in post-order.
pub fn kasteleyn_exponents(g: &PlanarGraph) -> Vec<u8> {
    let ne = g.num_edges();
    let mut in_tree = vec![false; ne];
    let mut seen = vec![false; g.num_vertices()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        for &h in g.rotation(x) {
            let y = g.to(h);
            if !seen[y] {
                seen[y] = true;
                in_tree[h / 2] = true;
                queue.push_back(y);
            }
        }
    }

    // Dual tree over non-tree edges, discovered from the outer face.
    let nf = g.num_faces();
    let dual = g.dual_adjacency();
    let mut parent_edge = vec![usize::MAX; nf];
    let mut visited = vec![false; nf];
    let mut order = Vec::with_capacity(nf);
    let root = g.outer_face();
    visited[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(f) = queue.pop_front() {
        order.push(f);
        for &(nf2, e) in &dual[f] {
            if !in_tree[e] && !visited[nf2] {
                visited[nf2] = true;
                parent_edge[nf2] = e;
                queue.push_back(nf2);
            }
        }
    }
    assert!(visited.iter().all(|&v| v), "non-tree edges must span the dual");

    let mut x = vec![0i64; ne];
    let mut solved = in_tree.clone();
    for &f in order.iter().rev() {
        if f == root {
            continue;
        }
        let pe = parent_edge[f];
        let mut sum = 0i64;
        let mut parent_half = None;
        for &h in g.face(f) {
            let e = h / 2;
            if e == pe {
                parent_half = Some(h);
                continue;
            }
            assert!(solved[e], "child edges are solved before their parent");
            sum += if h % 2 == 0 { x[e] } else { -x[e] };
        }
        let h = parent_half.expect("parent edge bounds the face");
        let need = (g.face_len(f) as i64 - 2 - sum).rem_euclid(4);
        x[pe] = if h % 2 == 0 { need } else { (-need).rem_euclid(4) };
        solved[pe] = true;
    }
    x.into_iter().map(|v| v.rem_euclid(4) as u8).collect()
}

/// A connection of `J`-powers whose counterclockwise monodromy around each
/// bounded face of length `ℓ` is `J^{ℓ−2}`.
pub fn kasteleyn_connection<T: Scalar>(g: &PlanarGraph, n: usize) -> Connection<T> {
    let forward = kasteleyn_exponents(g)
        .into_iter()
        .map(|k| j_power(n, i64::from(k)))
        .collect();
    Connection::new_unchecked(n, forward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Matrix, Rational};

    #[test]
    fn face_monodromies_are_j_powers() {
        // Triangle next to a quadrilateral, plus a pendant edge.
        let g = PlanarGraph::from_integer_points(
            &[(0, 0), (4, 1), (3, 5), (-2, 3), (-1, 6), (6, 7)],
            &[(0, 1), (1, 2), (2, 0), (2, 4), (4, 3), (3, 0), (2, 5)],
        )
        .unwrap();
        for n in 1..=2 {
            let c = kasteleyn_connection::<Rational>(&g, n);
            for (f, m) in c.face_monodromies(&g) {
                assert_eq!(m, j_power(n, g.face_len(f) as i64 - 2));
            }
        }
    }

    #[test]
    fn single_quad() {
        let g = PlanarGraph::from_integer_points(&[(0, 0), (3, 1), (2, 4), (-1, 3)], &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap();
        let c = kasteleyn_connection::<Rational>(&g, 1);
        let (_, m) = &c.face_monodromies(&g)[0];
        assert_eq!(m, &Matrix::identity(2).neg());
    }
}
