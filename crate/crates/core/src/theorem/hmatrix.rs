use rayon::prelude::*;

use crate::algebra::{pf_eliminate, symplectic_j, Matrix, Poly, Rational, Scalar, SkewMatrix};
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::graph::{standard_structure, PlanarGraph};
use crate::multiweb::{enumerate_multiwebs, weight_poly, Multiweb};
use crate::trace::trace_contraction;

/// The `2nN × 2nN` matrix `H̃` with vertex-major blocks.
#[derive(Clone, Debug)]
pub struct HMatrix<T> {
    pub matrix: SkewMatrix<T>,
    /// Vertex index of each block row, by increasing `(y, x, id)`.
    pub order: Vec<usize>,
    pub n: usize,
}

impl<T: Scalar> HMatrix<T> {
    pub fn pfaffian(&self) -> T {
        pf_eliminate(&self.matrix)
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

pub fn unit_weights<T: Scalar>(g: &PlanarGraph) -> Vec<T> {
    vec![T::one(); g.num_edges()]
}

/// Edge weights read as variables or rational literals.
pub fn symbolic_weights(g: &PlanarGraph) -> Vec<Poly> {
    g.edges().iter().map(|e| weight_poly(&e.weight)).collect()
}

/// Edge weights that must all be rational literals.
pub fn numeric_weights(g: &PlanarGraph) -> Result<Vec<Rational>> {
    (0..g.num_edges())
        .map(|e| {
            g.numeric_weight(e)
                .ok_or_else(|| Error::Parse(format!("edge {} weight {:?} is not a number", g.edge(e).id, g.edge(e).weight)))
        })
        .collect()
}

/// Block `(u, v)` is `Σ w_e Jφ_{uv}` over the edges joining `u` and `v`.
pub fn build_h<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, w: &[T]) -> Result<HMatrix<T>> {
    if w.len() != g.num_edges() {
        return Err(Error::DimensionMismatch(format!("{} weights for {} edges", w.len(), g.num_edges())));
    }
    let n = conn.rank();
    let d = 2 * n;
    let order = g.vertex_order();
    let mut pos = vec![0; g.num_vertices()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let j = symplectic_j::<T>(n);
    let mut m = Matrix::zeros(d * order.len(), d * order.len());
    for (e, edge) in g.edges().iter().enumerate() {
        let fwd = j.mul(conn.along(g, e, edge.u)).scale(&w[e]);
        let bwd = j.mul(conn.along(g, e, edge.v)).scale(&w[e]);
        m.add_block(d * pos[edge.u], d * pos[edge.v], &fwd);
        m.add_block(d * pos[edge.v], d * pos[edge.u], &bwd);
    }
    Ok(HMatrix {
        matrix: SkewMatrix::new(m)?,
        order,
        n,
    })
}

/// `Σ_m Tr(m) ∏ w_e^{m_e}` over all `2n`-multiwebs, traced in the standard structure.
pub fn sum_traces<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, w: &[T]) -> Result<T> {
    let s = standard_structure(g)?;
    let webs = enumerate_multiwebs(g, conn.rank());
    let parts: Result<Vec<T>> = webs
        .par_iter()
        .map(|m| Ok(trace_contraction(g, conn, m, &s)?.mul(&web_weight(m, w))))
        .collect();
    Ok(T::sum(&parts?))
}

/// `∏ w_e^{m_e}`.
pub fn web_weight<T: Scalar>(m: &Multiweb, w: &[T]) -> T {
    let mut acc = T::one();
    for (e, &k) in m.multiplicities().iter().enumerate() {
        if k > 0 {
            acc = acc.mul(&w[e].pow(k));
        }
    }
    acc
}

/// Outcome of comparing `Pf H̃` with the weighted trace sum.
#[derive(Clone, Debug, PartialEq)]
pub struct MainCheck<T> {
    pub pf: T,
    pub sum_traces: T,
    pub sign: i32,
}

/// The sign `s` with `Pf H̃ = s · Σ_m Tr(m) w(m)`.
pub fn verify_main<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, w: &[T]) -> Result<MainCheck<T>> {
    let pf = build_h(g, conn, w)?.pfaffian();
    let sum = sum_traces(g, conn, w)?;
    let sign = signed_match(&pf, &sum)?;
    Ok(MainCheck {
        pf,
        sum_traces: sum,
        sign,
    })
}

/// `+1` or `−1` when `a = ±b`, preferring `+1` when both vanish.
pub(crate) fn signed_match<T: Scalar>(a: &T, b: &T) -> Result<i32> {
    if a.approx_eq(b) {
        Ok(1)
    } else if a.approx_eq(&b.neg()) {
        Ok(-1)
    } else {
        Err(Error::IdentityViolated {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}
