use std::collections::VecDeque;

use super::Connection;
use crate::algebra::{is_symplectic, Matrix, Scalar};
use crate::error::{Error, Result};
use crate::graph::PlanarGraph;

/// A bounded face treated as the hole of an annulus, with a cut running from
/// it to the outer face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnulusSpec {
    pub inner_face: usize,
    /// `(edge, sign)`: `+1` when the canonical half-edge has the hole side on its left.
    pub cut: Vec<(usize, i8)>,
}

impl AnnulusSpec {
    /// Cut along a shortest dual path from the inner face to the outer face.
    pub fn new(g: &PlanarGraph, inner_face: usize) -> Result<Self> {
        if inner_face >= g.num_faces() {
            return Err(Error::UnknownFace(inner_face));
        }
        if inner_face == g.outer_face() {
            return Err(Error::InvalidCut("the inner face must be bounded".into()));
        }
        let path = dual_path(g, inner_face, g.outer_face());
        let cut = path
            .into_iter()
            .map(|(from_face, e)| {
                let sign = if g.face_of(2 * e) == from_face { 1 } else { -1 };
                (e, sign)
            })
            .collect();
        let spec = AnnulusSpec { inner_face, cut };
        spec.validate(g)?;
        Ok(spec)
    }

    /// The half-edge that carries `M` on each cut edge.
    pub fn marked_half_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.cut
            .iter()
            .map(|&(e, s)| if s > 0 { 2 * e } else { 2 * e + 1 })
    }

    /// Signed number of cut crossings along half-edge `h`.
    pub fn crossing(&self, h: usize) -> i64 {
        self.marked_half_edges()
            .map(|m| {
                if m == h {
                    1
                } else if m == h ^ 1 {
                    -1
                } else {
                    0
                }
            })
            .sum()
    }

    /// Every bounded face boundary must cross the cut zero times, except the
    /// inner face, which crosses it once.
    pub fn validate(&self, g: &PlanarGraph) -> Result<()> {
        if self.inner_face >= g.num_faces() || self.inner_face == g.outer_face() {
            return Err(Error::InvalidCut("the inner face must be bounded".into()));
        }
        for f in g.bounded_faces() {
            let w: i64 = g.face(f).iter().map(|&h| self.crossing(h)).sum();
            let want = i64::from(f == self.inner_face);
            if w != want {
                return Err(Error::InvalidCut(format!(
                    "face {f} crosses the cut {w} times, expected {want}"
                )));
            }
        }
        Ok(())
    }
}

/// BFS shortest path in the dual: `(face left, edge crossed)` per step.
fn dual_path(g: &PlanarGraph, from: usize, to: usize) -> Vec<(usize, usize)> {
    let dual = g.dual_adjacency();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.num_faces()];
    let mut seen = vec![false; g.num_faces()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if f == to {
            break;
        }
        for &(nf, e) in &dual[f] {
            if !seen[nf] {
                seen[nf] = true;
                prev[nf] = Some((f, e));
                queue.push_back(nf);
            }
        }
    }
    let mut path = Vec::new();
    let mut f = to;
    while let Some((pf, e)) = prev[f] {
        path.push((pf, e));
        f = pf;
    }
    path.reverse();
    path
}

/// Flat connection: `M` across the cut, identity elsewhere. A loop winding
/// `k` times counterclockwise around the hole has monodromy `M^k`.
pub fn flat_annulus_connection<T: Scalar>(
    g: &PlanarGraph,
    spec: &AnnulusSpec,
    m: &Matrix<T>,
    n: usize,
) -> Result<Connection<T>> {
    spec.validate(g)?;
    if !is_symplectic(m, n)? {
        return Err(Error::NotSymplectic);
    }
    let id = Matrix::identity(2 * n);
    let inv = crate::algebra::symplectic_inverse_unchecked(m, n);
    let mut forward = vec![id; g.num_edges()];
    for h in spec.marked_half_edges() {
        let e = h / 2;
        forward[e] = if h % 2 == 0 {
            forward[e].mul(m)
        } else {
            forward[e].mul(&inv)
        };
    }
    Ok(Connection::new_unchecked(n, forward))
}

/// Scalar `±I` connection with monodromy `−1` around each marked face and
/// `+1` around every other bounded face.
///
/// Each marked face is joined to the outer face by a dual path whose edges
/// flip sign, so an odd marking would leave `−1` on the outer boundary.
pub fn face_spin_connection<T: Scalar>(g: &PlanarGraph, faces: &[usize], n: usize) -> Result<Connection<T>> {
    if faces.len() % 2 == 1 {
        return Err(Error::OddMarking);
    }
    let mut flip = vec![false; g.num_edges()];
    for &f in faces {
        if f >= g.num_faces() {
            return Err(Error::UnknownFace(f));
        }
        for (_, e) in dual_path(g, f, g.outer_face()) {
            flip[e] = !flip[e];
        }
    }
    let id = Matrix::<T>::identity(2 * n);
    let forward = flip
        .into_iter()
        .map(|f| if f { id.neg() } else { id.clone() })
        .collect();
    Ok(Connection::new_unchecked(n, forward))
}
