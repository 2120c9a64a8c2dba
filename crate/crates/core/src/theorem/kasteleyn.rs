use super::hmatrix::{build_h, signed_match, web_weight};
use crate::algebra::Scalar;
use crate::connection::kasteleyn_connection;
use crate::error::Result;
use crate::graph::PlanarGraph;
use crate::multiweb::{colored_2web_decompositions, decompose_2multiweb, enumerate_dimers, Multiweb};

/// `Z_d = Σ_{dimer covers} ∏ w_e`.
pub fn dimer_partition<T: Scalar>(g: &PlanarGraph, w: &[T]) -> T {
    let covers: Vec<T> = enumerate_dimers(g)
        .into_iter()
        .map(|d| web_weight(&Multiweb::new_unchecked(1, d), w))
        .collect();
    T::sum(&covers)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KasteleynCheck<T> {
    pub pf: T,
    /// `Z_d^{2n}`.
    pub power: T,
    pub sign: i32,
}

/// Checks `Pf K̃ = ±Z_d^{2n}` under the Kasteleyn connection of rank `n`.
pub fn verify_kasteleyn<T: Scalar>(g: &PlanarGraph, w: &[T], n: usize) -> Result<KasteleynCheck<T>> {
    let k = kasteleyn_connection::<T>(g, n);
    let pf = build_h(g, &k, w)?.pfaffian();
    let power = dimer_partition(g, w).pow(2 * n as u32);
    let sign = signed_match(&pf, &power)?;
    Ok(KasteleynCheck { pf, power, sign })
}

/// One ordered splitting of a `2n`-multiweb into `n` 2-multiwebs.
#[derive(Clone, Debug, PartialEq)]
pub struct ColoredDecomposition {
    pub parts: Vec<Multiweb>,
    /// Total number of loops over all parts.
    pub loops: usize,
    /// `2^loops` if every loop has even length, else 0.
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceDecomposition<T> {
    pub decompositions: Vec<ColoredDecomposition>,
    /// `(−1)^{nN/2} Σ_c 2^{l(c)} w(m)`.
    pub trace: T,
}

/// The Kasteleyn trace of `m` assembled from its colored decompositions.
pub fn kasteleyn_trace_decomposition<T: Scalar>(g: &PlanarGraph, m: &Multiweb, w: &[T]) -> Result<TraceDecomposition<T>> {
    let mut decompositions = Vec::new();
    let mut total: u64 = 0;
    for parts in colored_2web_decompositions(g, m) {
        let mut loops = 0;
        let mut even = true;
        for p in &parts {
            let d = decompose_2multiweb(g, p)?;
            loops += d.loops.len();
            even &= d.loops.iter().all(|l| l.len() % 2 == 0);
        }
        let weight = if even { 1u64 << loops } else { 0 };
        total += weight;
        decompositions.push(ColoredDecomposition { parts, loops, weight });
    }
    let mut trace = T::from_i64(total as i64).mul(&web_weight(m, w));
    if (m.rank() * g.num_vertices() / 2) % 2 == 1 {
        trace = trace.neg();
    }
    Ok(TraceDecomposition { decompositions, trace })
}
