use crate::algebra::Scalar;
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;
use crate::multiweb::{decompose_2multiweb, Multiweb};

/// `Tr(m) = (−1)^{c_1 + N} ∏_γ (−tr φ_γ)` for a 2-multiweb under the
/// standard structure, over its loops `γ`, with `c_1` doubled edges and
/// `N` vertices.
pub fn trace_sp2_loops<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, m: &Multiweb) -> Result<T> {
    if m.rank() != 1 || conn.rank() != 1 {
        return Err(Error::WrongRank {
            expected: 1,
            got: m.rank().max(conn.rank()),
        });
    }
    let dec = decompose_2multiweb(g, m)?;
    let mut acc = T::one();
    for gamma in &dec.loops {
        acc = acc.mul(&conn.monodromy(g, gamma).trace().neg());
    }
    if (dec.c1() + g.num_vertices()) % 2 == 1 {
        acc = acc.neg();
    }
    Ok(acc)
}
