use super::PlanarGraph;
use crate::error::{Error, Result};

/// Edge orientations and cilia.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Structure {
    /// `true` when edge `e` points along its canonical direction `u → v`.
    pub forward: Vec<bool>,
    /// Index into the rotation at each vertex of the first half-edge after the cilium.
    pub cilia: Vec<usize>,
}

impl Structure {
    /// Canonical orientation everywhere and every cilium before rotation index 0.
    pub fn canonical(g: &PlanarGraph) -> Self {
        Structure {
            forward: vec![true; g.num_edges()],
            cilia: vec![0; g.num_vertices()],
        }
    }

    pub fn tail(&self, g: &PlanarGraph, e: usize) -> usize {
        if self.forward[e] {
            g.edge(e).u
        } else {
            g.edge(e).v
        }
    }

    pub fn head(&self, g: &PlanarGraph, e: usize) -> usize {
        if self.forward[e] {
            g.edge(e).v
        } else {
            g.edge(e).u
        }
    }

    /// Outgoing half-edges at `v` in counterclockwise order starting at the cilium.
    pub fn ordered_half_edges<'a>(&self, g: &'a PlanarGraph, v: usize) -> impl Iterator<Item = usize> + 'a {
        let rot = g.rotation(v);
        let c = self.cilia[v];
        (0..rot.len()).map(move |i| rot[(c + i) % rot.len()])
    }

    /// Moves the cilium at `v` one notch counterclockwise; returns the edge it crossed.
    pub fn advance_cilium(&mut self, g: &PlanarGraph, v: usize) -> usize {
        let rot = g.rotation(v);
        let crossed = rot[self.cilia[v]] / 2;
        self.cilia[v] = (self.cilia[v] + 1) % rot.len();
        crossed
    }

    pub fn flip(&mut self, e: usize) {
        self.forward[e] = !self.forward[e];
    }
}

/// Edges point up and every cilium points west.
///
/// Requires distinct y-coordinates across every edge, which also rules out
/// edges leaving a vertex due west.
pub fn standard_structure(g: &PlanarGraph) -> Result<Structure> {
    let mut forward = Vec::with_capacity(g.num_edges());
    for e in g.edges() {
        let (pu, pv) = (g.position(e.u), g.position(e.v));
        if pu.y == pv.y {
            return Err(Error::NonGenericPosition(format!(
                "edge {} joins vertices {} and {} at equal height",
                e.id,
                g.vertex(e.u).id,
                g.vertex(e.v).id
            )));
        }
        forward.push(pu.y < pv.y);
    }
    Ok(Structure {
        forward,
        cilia: vec![0; g.num_vertices()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Point;

    fn g(points: &[(i64, i64)], edges: &[(i64, i64)]) -> PlanarGraph {
        PlanarGraph::new(
            points.iter().enumerate().map(|(i, &(x, y))| (i as i64, Point::from_ints(x, y))).collect(),
            edges.iter().enumerate().map(|(i, &(u, v))| (i as i64, u, v, "1".into())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn vertical_edge_points_up() {
        let gr = g(&[(0, 1), (0, 0)], &[(0, 1)]);
        let s = standard_structure(&gr).unwrap();
        assert_eq!(s.tail(&gr, 0), 1);
        assert_eq!(s.head(&gr, 0), 0);
    }

    #[test]
    fn horizontal_edge_is_rejected() {
        let gr = g(&[(0, 0), (1, 0)], &[(0, 1)]);
        assert!(matches!(standard_structure(&gr), Err(Error::NonGenericPosition(_))));
    }

    #[test]
    fn cilium_order_starts_after_west() {
        // Neighbors at 45, 135 and 315 degrees.
        let gr = g(&[(0, 0), (1, 1), (-1, 1), (1, -1)], &[(0, 1), (0, 2), (0, 3)]);
        let s = standard_structure(&gr).unwrap();
        let order: Vec<usize> = s.ordered_half_edges(&gr, 0).map(|h| gr.to(h)).collect();
        assert_eq!(order, vec![3, 1, 2]);
    }
}
