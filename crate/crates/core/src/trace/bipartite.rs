use super::coloring::coloring_sum;
use super::layout::{normalize, WebLayout};
use crate::algebra::Scalar;
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, Structure};
use crate::multiweb::{split_simple, Multiweb};

/// `s` with every edge pointing from black to white, keeping its cilia.
pub fn bipartite_structure(g: &PlanarGraph, s: &Structure) -> Result<Structure> {
    let black = g.bipartition()?;
    Ok(Structure {
        forward: g.edges().iter().map(|e| black[e.u]).collect(),
        cilia: s.cilia.clone(),
    })
}

/// SL(2n) trace of a multiweb on a bipartite graph: determinants at the
/// vertices contracted along `φ_{black→white}` on every strand, with no `J`.
pub fn trace_sl_bipartite<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, m: &Multiweb, s: &Structure) -> Result<T> {
    let bw = bipartite_structure(g, s)?;
    if conn.rank() != m.rank() {
        return Err(Error::WrongRank {
            expected: m.rank(),
            got: conn.rank(),
        });
    }
    let split = split_simple(g, m)?;
    let c2 = split.lift_connection(conn);
    let layout = WebLayout::from_simple(&split.graph, &split.web, &split.lift_structure(g, &bw))?;
    let mats: Vec<_> = layout
        .strands
        .iter()
        .map(|st| c2.along(&split.graph, st.edge, st.tail).clone())
        .collect();
    let total = coloring_sum(&layout, &|k, a, b| mats[k].get(a, b).clone());
    Ok(normalize(total, split.factor))
}
