use super::Multiweb;
use crate::algebra::Scalar;
use crate::connection::Connection;
use crate::error::Result;
use crate::graph::{PlanarGraph, Structure};

/// A multiweb made simple by replacing each edge of multiplicity `k ≥ 1` with
/// `k` parallel copies. Unused edges keep a single copy so the graph stays
/// connected.
#[derive(Clone, Debug)]
pub struct SplitWeb {
    pub graph: PlanarGraph,
    pub web: Multiweb,
    /// `∏ m_e!`.
    pub factor: u64,
    /// Original edge of each new edge.
    pub parent: Vec<usize>,
}

impl SplitWeb {
    /// Orientation is inherited, and each cilium sits before the first copy
    /// of the half-edge it originally preceded.
    pub fn lift_structure(&self, g: &PlanarGraph, s: &Structure) -> Structure {
        let forward = self.parent.iter().map(|&p| s.forward[p]).collect();
        let cilia = (0..g.num_vertices())
            .map(|v| {
                let first = g.rotation(v)[s.cilia[v]] / 2;
                self.graph
                    .rotation(v)
                    .iter()
                    .position(|&h| self.parent[h / 2] == first)
                    .expect("every edge keeps a copy")
            })
            .collect();
        Structure { forward, cilia }
    }

    pub fn lift_connection<T: Scalar>(&self, c: &Connection<T>) -> Connection<T> {
        let forward = self.parent.iter().map(|&p| c.edge_matrix(p).clone()).collect();
        Connection::new_unchecked(c.rank(), forward)
    }
}

pub fn split_simple(g: &PlanarGraph, m: &Multiweb) -> Result<SplitWeb> {
    let mut edges = Vec::new();
    let mut parent = Vec::new();
    let mut mult = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let k = m.get(e);
        for _ in 0..k.max(1) {
            edges.push((
                edges.len() as i64,
                g.vertex(edge.u).id,
                g.vertex(edge.v).id,
                edge.weight.clone(),
            ));
            parent.push(e);
            mult.push(u32::from(k > 0));
        }
    }
    let graph = PlanarGraph::new(
        g.vertices().iter().map(|v| (v.id, v.pos.clone())).collect(),
        edges,
    )?;
    let web = Multiweb::new(&graph, m.rank(), mult)?;
    Ok(SplitWeb {
        graph,
        web,
        factor: m.symmetry_factor(),
        parent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard_structure;

    #[test]
    fn copies_and_factor() {
        let tri = PlanarGraph::from_integer_points(&[(0, 0), (2, 1), (1, 3)], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let m = Multiweb::new(&tri, 2, vec![2, 2, 2]).unwrap();
        let sw = split_simple(&tri, &m).unwrap();
        assert_eq!(sw.graph.num_edges(), 6);
        assert_eq!(sw.factor, 8);
        assert!(sw.web.is_simple());
        let s = standard_structure(&tri).unwrap();
        let lifted = sw.lift_structure(&tri, &s);
        assert_eq!(lifted, standard_structure(&sw.graph).unwrap());

        let simple = Multiweb::new(&tri, 1, vec![1, 1, 1]).unwrap();
        let sw = split_simple(&tri, &simple).unwrap();
        assert_eq!(sw.factor, 1);
        assert_eq!(sw.graph.num_edges(), 3);
    }
}
