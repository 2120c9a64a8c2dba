#![allow(dead_code)]

use multiweb::graph::{PlanarGraph, Point};

/// K4 with weights `a..f`; its dimer partition function is `ad + be + cf`.
pub fn two_by_three() -> PlanarGraph {
    PlanarGraph::new(
        vec![
            (1, Point::from_ints(0, 0)),
            (2, Point::from_ints(4, 1)),
            (3, Point::from_ints(1, 4)),
            (4, Point::from_ints(2, 2)),
        ],
        vec![
            (1, 1, 2, "a".into()),
            (2, 1, 3, "b".into()),
            (3, 1, 4, "c".into()),
            (4, 3, 4, "d".into()),
            (5, 2, 4, "e".into()),
            (6, 2, 3, "f".into()),
        ],
    )
    .unwrap()
}

/// Multiplicities of the figure's web `a²bcd²ef`, by edge index.
pub fn two_by_three_web() -> Vec<u32> {
    vec![2, 1, 1, 2, 1, 1]
}

/// A hexagonal hole sharing one edge with the outer face, surrounded by
/// four extra vertices.
pub fn hex_ring() -> PlanarGraph {
    let pts = [(0, 0), (4, 1), (6, 4), (4, 8), (0, 9), (-2, 5), (9, 3), (7, 11), (-5, 12), (-6, 2)];
    let edges = [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 2),
        (6, 7), (7, 3), (7, 8), (8, 4), (8, 5), (8, 9), (9, 5), (9, 0),
    ];
    PlanarGraph::from_integer_points(&pts, &edges).unwrap()
}

pub fn hex_hole(g: &PlanarGraph) -> usize {
    g.face_with_vertices(&[0, 1, 2, 3, 4, 5]).unwrap()
}

/// A square inside a square joined by four spokes.
pub fn square_ring() -> PlanarGraph {
    PlanarGraph::from_integer_points(
        &[(0, 0), (6, 1), (7, 7), (1, 6), (2, 2), (5, 3), (4, 5), (3, 4)],
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap()
}

pub fn square() -> PlanarGraph {
    PlanarGraph::from_integer_points(&[(0, 0), (3, 1), (2, 4), (-1, 3)], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
}

pub fn digon() -> PlanarGraph {
    PlanarGraph::from_integer_points(&[(0, 0), (1, 2)], &[(0, 1), (0, 1)]).unwrap()
}

pub fn single_edge() -> PlanarGraph {
    PlanarGraph::from_integer_points(&[(0, 0), (1, 1)], &[(0, 1)]).unwrap()
}

/// Two squares side by side: a bipartite 2×3 ladder.
pub fn ladder() -> PlanarGraph {
    PlanarGraph::from_integer_points(
        &[(0, 0), (3, 1), (6, 2), (-1, 4), (2, 5), (5, 6)],
        &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}
