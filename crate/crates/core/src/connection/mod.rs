//! Sp(2n) connections on planar graphs.
//!
//! A connection stores one matrix per edge, for the canonical direction
//! `u → v`; the reverse direction carries the symplectic inverse.

mod annulus;
mod io;
mod kasteleyn;
mod unitary;

pub use annulus::{face_spin_connection, flat_annulus_connection, AnnulusSpec};
pub use io::{ConnectionEdgeSpec, ConnectionSpec};
pub use kasteleyn::{kasteleyn_connection, kasteleyn_exponents};
pub use unitary::{rotation_matrix, rotation_matrix_f64, unitary_embed};

use crate::algebra::{is_symplectic, symplectic_j, Matrix, Rational, Scalar};
use crate::algebra::symplectic_inverse_unchecked;
use crate::error::{Error, Result};
use crate::graph::{Loop, PlanarGraph};

#[derive(Clone, Debug, PartialEq)]
pub struct Connection<T> {
    n: usize,
    forward: Vec<Matrix<T>>,
    backward: Vec<Matrix<T>>,
}

impl<T: Scalar> Connection<T> {
    pub fn identity(g: &PlanarGraph, n: usize) -> Self {
        let id = Matrix::identity(2 * n);
        Connection {
            n,
            forward: vec![id.clone(); g.num_edges()],
            backward: vec![id; g.num_edges()],
        }
    }

    /// Validates that every matrix is `2n×2n` and symplectic.
    pub fn new(g: &PlanarGraph, n: usize, forward: Vec<Matrix<T>>) -> Result<Self> {
        if forward.len() != g.num_edges() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} edges",
                forward.len(),
                g.num_edges()
            )));
        }
        for m in &forward {
            if !is_symplectic(m, n)? {
                return Err(Error::NotSymplectic);
            }
        }
        Ok(Self::new_unchecked(n, forward))
    }

    pub(crate) fn new_unchecked(n: usize, forward: Vec<Matrix<T>>) -> Self {
        let backward = forward
            .iter()
            .map(|m| symplectic_inverse_unchecked(m, n))
            .collect();
        Connection { n, forward, backward }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.forward.len()
    }

    /// Matrix on the canonical direction of edge `e`.
    pub fn edge_matrix(&self, e: usize) -> &Matrix<T> {
        &self.forward[e]
    }

    /// Matrix on half-edge `h`.
    pub fn half_edge_matrix(&self, h: usize) -> &Matrix<T> {
        if h.is_multiple_of(2) {
            &self.forward[h / 2]
        } else {
            &self.backward[h / 2]
        }
    }

    /// `φ_{ab}` for edge `e` traversed from `a`.
    pub fn along(&self, g: &PlanarGraph, e: usize, a: usize) -> &Matrix<T> {
        self.half_edge_matrix(g.half_edge_from(e, a))
    }

    /// `φ_{v0 v1} φ_{v1 v2} ⋯ φ_{v_{L-1} v0}`.
    pub fn monodromy(&self, g: &PlanarGraph, gamma: &Loop) -> Matrix<T> {
        let mut acc = Matrix::identity(2 * self.n);
        for i in 0..gamma.len() {
            acc = acc.mul(self.half_edge_matrix(gamma.half_edge(g, i)));
        }
        acc
    }

    /// Gauge move `φ_{uv} ↦ g_u φ_{uv} g_v⁻¹` by symplectic matrices.
    pub fn gauge(&self, g: &PlanarGraph, at: &[Matrix<T>]) -> Result<Self> {
        let mut inv = Vec::with_capacity(at.len());
        for m in at {
            if !is_symplectic(m, self.n)? {
                return Err(Error::NotSymplectic);
            }
            inv.push(symplectic_inverse_unchecked(m, self.n));
        }
        let forward = g
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(e, m)| at[e.u].mul(m).mul(&inv[e.v]))
            .collect();
        Ok(Self::new_unchecked(self.n, forward))
    }

    /// Edge-by-edge product of two connections whose matrices commute.
    pub fn edgewise_product(&self, g: &PlanarGraph, other: &Self) -> Result<Self> {
        if self.n != other.n || self.num_edges() != other.num_edges() {
            return Err(Error::DimensionMismatch("connections on different graphs".into()));
        }
        let mut forward = Vec::with_capacity(self.num_edges());
        for (e, (a, b)) in self.forward.iter().zip(&other.forward).enumerate() {
            let ab = a.mul(b);
            if !ab.approx_eq(&b.mul(a)) {
                return Err(Error::NonCommuting(g.edge(e).id));
            }
            forward.push(ab);
        }
        Ok(Self::new_unchecked(self.n, forward))
    }

    /// Replaces the matrix on one edge.
    pub fn with_edge(&self, e: usize, m: Matrix<T>) -> Result<Self> {
        if !is_symplectic(&m, self.n)? {
            return Err(Error::NotSymplectic);
        }
        let mut c = self.clone();
        c.backward[e] = symplectic_inverse_unchecked(&m, self.n);
        c.forward[e] = m;
        Ok(c)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Connection<U> {
        Connection {
            n: self.n,
            forward: self.forward.iter().map(|m| m.map(&f)).collect(),
            backward: self.backward.iter().map(|m| m.map(&f)).collect(),
        }
    }

    /// Whether `φ_vu φ_uv = I` on every edge.
    pub fn inverses_consistent(&self) -> bool {
        self.forward
            .iter()
            .zip(&self.backward)
            .all(|(f, b)| b.mul(f).is_identity())
    }

    /// Traces of the counterclockwise monodromy around every bounded face.
    pub fn face_monodromies(&self, g: &PlanarGraph) -> Vec<(usize, Matrix<T>)> {
        g.bounded_faces()
            .map(|f| (f, self.monodromy(g, &Loop::face_boundary(g, f))))
            .collect()
    }
}

impl Connection<Rational> {
    pub fn lift<T: Scalar>(&self) -> Connection<T> {
        self.map(T::from_rational)
    }
}

/// `J^k` of size `2n`, for any integer `k`.
pub fn j_power<T: Scalar>(n: usize, k: i64) -> Matrix<T> {
    symplectic_j::<T>(n).pow(k.rem_euclid(4) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> PlanarGraph {
        PlanarGraph::from_integer_points(&[(0, 0), (3, 1), (2, 4), (-1, 3)], &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn shear(s: i64) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![Rational::one(), Rational::from_integer(s)],
            vec![Rational::zero(), Rational::one()],
        ])
        .unwrap()
    }

    #[test]
    fn identity_monodromy() {
        let g = square();
        let c = Connection::<Rational>::identity(&g, 2);
        let gamma = Loop::through(&g, vec![0, 1, 2, 3]).unwrap();
        assert!(c.monodromy(&g, &gamma).is_identity());
        assert!(c.inverses_consistent());
    }

    #[test]
    fn monodromy_trace_invariances() {
        let g = square();
        let mats = (0..4).map(|e| shear(e as i64 + 1).mul(&j_power(1, e as i64))).collect();
        let c = Connection::new(&g, 1, mats).unwrap();
        let gamma = Loop::through(&g, vec![0, 1, 2, 3]).unwrap();
        let tr = c.monodromy(&g, &gamma).trace();
        assert_eq!(c.monodromy(&g, &gamma.rotated(2)).trace(), tr);
        assert_eq!(c.monodromy(&g, &gamma.reversed()).trace(), tr);
        let gauged = c.gauge(&g, &[shear(2), j_power(1, 1), shear(-3), Matrix::identity(2)]).unwrap();
        assert_eq!(gauged.monodromy(&g, &gamma).trace(), tr);
    }

    #[test]
    fn rejects_non_symplectic_and_non_commuting() {
        let g = square();
        let bad = vec![Matrix::scalar(2, Rational::from_integer(2)); 4];
        assert_eq!(Connection::new(&g, 1, bad), Err(Error::NotSymplectic));
        let a = Connection::new(&g, 1, vec![shear(1); 4]).unwrap();
        let b = Connection::new(&g, 1, vec![shear(1).transpose(); 4]).unwrap();
        assert_eq!(a.edgewise_product(&g, &b), Err(Error::NonCommuting(0)));
        let id = Connection::identity(&g, 1);
        assert_eq!(a.edgewise_product(&g, &id).unwrap(), a);
    }
}
