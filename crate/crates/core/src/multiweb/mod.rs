//! Multiwebs: edge multiplicities summing to `2n` at every vertex.

mod decompose;
mod split;

pub use decompose::{colored_2web_decompositions, decompose_2multiweb, superposition, LoopDecomposition};
pub use split::{split_simple, SplitWeb};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational, Scalar};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiweb {
    n: usize,
    m: Vec<u32>,
}

impl Multiweb {
    /// Checks that multiplicities sum to `2n` at every vertex.
    pub fn new(g: &PlanarGraph, n: usize, m: Vec<u32>) -> Result<Self> {
        if m.len() != g.num_edges() {
            return Err(Error::MalformedWeb(format!(
                "{} multiplicities for {} edges",
                m.len(),
                g.num_edges()
            )));
        }
        let deg = vertex_degrees(g, &m);
        if let Some(v) = deg.iter().position(|&d| d != 2 * n as u32) {
            return Err(Error::MalformedWeb(format!(
                "vertex {} has degree {}, expected {}",
                g.vertex(v).id,
                deg[v],
                2 * n
            )));
        }
        Ok(Multiweb { n, m })
    }

    pub(crate) fn new_unchecked(n: usize, m: Vec<u32>) -> Self {
        Multiweb { n, m }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.m
    }

    pub fn get(&self, e: usize) -> u32 {
        self.m[e]
    }

    pub fn is_simple(&self) -> bool {
        self.m.iter().all(|&k| k <= 1)
    }

    /// `∏ m_e!`.
    pub fn symmetry_factor(&self) -> u64 {
        self.m.iter().map(|&k| (1..=u64::from(k)).product::<u64>()).product()
    }

    /// `w(m) = ∏ w_e^{m_e}` with weights read as symbols or rational literals.
    pub fn weight_poly(&self, g: &PlanarGraph) -> Poly {
        let mut w = Poly::one();
        for (e, &k) in self.m.iter().enumerate() {
            if k > 0 {
                w = w.mul(&weight_poly(&g.edge(e).weight).pow(k));
            }
        }
        w
    }

    /// Serialized as `{"n": n, "m": {edge-id: multiplicity}}` without zeros.
    pub fn to_spec(&self, g: &PlanarGraph) -> MultiwebSpec {
        MultiwebSpec {
            n: self.n,
            m: self
                .m
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(e, &k)| (g.edge(e).id, k))
                .collect(),
        }
    }

    pub fn to_json(&self, g: &PlanarGraph) -> String {
        serde_json::to_string(&self.to_spec(g)).expect("multiweb serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiwebSpec {
    pub n: usize,
    pub m: BTreeMap<i64, u32>,
}

impl MultiwebSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self, g: &PlanarGraph) -> Result<Multiweb> {
        let mut m = vec![0; g.num_edges()];
        for (&id, &k) in &self.m {
            m[g.edge_index(id)?] = k;
        }
        Multiweb::new(g, self.n, m)
    }
}

/// A weight string as a polynomial: a rational literal or a variable name.
pub fn weight_poly(w: &str) -> Poly {
    match w.parse::<Rational>() {
        Ok(r) => Poly::constant(r),
        Err(_) => Poly::var(w.trim()),
    }
}

pub(crate) fn vertex_degrees(g: &PlanarGraph, m: &[u32]) -> Vec<u32> {
    let mut deg = vec![0; g.num_vertices()];
    for (e, &k) in m.iter().enumerate() {
        deg[g.edge(e).u] += k;
        deg[g.edge(e).v] += k;
    }
    deg
}

/// All multiplicity vectors with vertex degree `degree` and `m_e ≤ bound_e`,
/// in lexicographic order of the vectors.
pub(crate) fn enumerate_bounded(g: &PlanarGraph, degree: u32, bound: &[u32]) -> Vec<Vec<u32>> {
    let ne = g.num_edges();
    // Last edge index touching each vertex: once passed, the residual must be zero.
    let mut last = vec![None; g.num_vertices()];
    for e in 0..ne {
        last[g.edge(e).u] = Some(e);
        last[g.edge(e).v] = Some(e);
    }
    if last.iter().any(Option::is_none) && degree > 0 {
        return Vec::new();
    }
    // Capacity still available at each vertex from edges not yet assigned.
    let mut capacity = vec![0u32; g.num_vertices()];
    for e in 0..ne {
        capacity[g.edge(e).u] += bound[e];
        capacity[g.edge(e).v] += bound[e];
    }
    let mut residual = vec![degree; g.num_vertices()];
    if residual.iter().zip(&capacity).any(|(r, c)| r > c) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; ne];
    let mut state = Search {
        g,
        bound,
        last: &last,
        residual: &mut residual,
        capacity: &mut capacity,
        current: &mut current,
        out: &mut out,
    };
    state.go(0);
    out
}

struct Search<'a> {
    g: &'a PlanarGraph,
    bound: &'a [u32],
    last: &'a [Option<usize>],
    residual: &'a mut [u32],
    capacity: &'a mut [u32],
    current: &'a mut [u32],
    out: &'a mut Vec<Vec<u32>>,
}

impl Search<'_> {
    fn go(&mut self, e: usize) {
        if e == self.current.len() {
            if self.residual.iter().all(|&r| r == 0) {
                self.out.push(self.current.to_vec());
            }
            return;
        }
        let (u, v) = (self.g.edge(e).u, self.g.edge(e).v);
        let b = self.bound[e];
        self.capacity[u] -= b;
        self.capacity[v] -= b;
        let max = b.min(self.residual[u]).min(self.residual[v]);
        for k in 0..=max {
            let (ru, rv) = (self.residual[u] - k, self.residual[v] - k);
            if ru > self.capacity[u] || rv > self.capacity[v] {
                continue;
            }
            if (self.last[u] == Some(e) && ru != 0) || (self.last[v] == Some(e) && rv != 0) {
                continue;
            }
            self.residual[u] = ru;
            self.residual[v] = rv;
            self.current[e] = k;
            self.go(e + 1);
            self.residual[u] += k;
            self.residual[v] += k;
        }
        self.current[e] = 0;
        self.capacity[u] += b;
        self.capacity[v] += b;
    }
}

/// Every 2n-multiweb of `g`, lexicographically by multiplicity vector.
pub fn enumerate_multiwebs(g: &PlanarGraph, n: usize) -> Vec<Multiweb> {
    let d = 2 * n as u32;
    enumerate_bounded(g, d, &vec![d; g.num_edges()])
        .into_iter()
        .map(|m| Multiweb::new_unchecked(n, m))
        .collect()
}

/// Every perfect matching as a 0/1 vector.
pub fn enumerate_dimers(g: &PlanarGraph) -> Vec<Vec<u32>> {
    enumerate_bounded(g, 1, &vec![1; g.num_edges()])
}
