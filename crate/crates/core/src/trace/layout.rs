use crate::algebra::{symplectic_j, Matrix, Scalar};
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::graph::{PlanarGraph, Structure};
use crate::multiweb::{split_simple, Multiweb};

/// One used edge of a simple multiweb, with its orientation and the slots it
/// occupies at either end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub edge: usize,
    pub tail: usize,
    pub head: usize,
    pub tail_slot: usize,
    pub head_slot: usize,
}

/// The combinatorics a trace needs: at each vertex, the incident strands in
/// counterclockwise order from the cilium.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebLayout {
    pub n: usize,
    pub slots: Vec<Vec<usize>>,
    pub strands: Vec<Strand>,
}

impl WebLayout {
    pub fn from_simple(g: &PlanarGraph, m: &Multiweb, s: &Structure) -> Result<Self> {
        if !m.is_simple() {
            return Err(Error::MalformedWeb("layout needs a simple multiweb".into()));
        }
        let mut strand_of = vec![usize::MAX; g.num_edges()];
        let mut strands = Vec::new();
        for e in 0..g.num_edges() {
            if m.get(e) == 1 {
                strand_of[e] = strands.len();
                strands.push(Strand {
                    edge: e,
                    tail: s.tail(g, e),
                    head: s.head(g, e),
                    tail_slot: 0,
                    head_slot: 0,
                });
            }
        }
        let mut slots = Vec::with_capacity(g.num_vertices());
        for v in 0..g.num_vertices() {
            let mut here = Vec::with_capacity(2 * m.rank());
            for h in s.ordered_half_edges(g, v) {
                let k = strand_of[h / 2];
                if k == usize::MAX {
                    continue;
                }
                let st = &mut strands[k];
                if st.tail == v {
                    st.tail_slot = here.len();
                } else {
                    st.head_slot = here.len();
                }
                here.push(k);
            }
            slots.push(here);
        }
        Ok(WebLayout {
            n: m.rank(),
            slots,
            strands,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.slots.len()
    }
}

/// A simple layout of `m` (after splitting multiple edges), the matrices
/// `Jφ_{tail→head}` on its strands, and the symmetry factor `∏ m_e!`.
pub struct Prepared<T> {
    pub layout: WebLayout,
    pub factors: Vec<Matrix<T>>,
    pub symmetry: u64,
}

pub fn prepare<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, m: &Multiweb, s: &Structure) -> Result<Prepared<T>> {
    if conn.rank() != m.rank() {
        return Err(Error::WrongRank {
            expected: m.rank(),
            got: conn.rank(),
        });
    }
    let split = split_simple(g, m)?;
    let s2 = split.lift_structure(g, s);
    let c2 = split.lift_connection(conn);
    let layout = WebLayout::from_simple(&split.graph, &split.web, &s2)?;
    let j = symplectic_j::<T>(m.rank());
    let factors = layout
        .strands
        .iter()
        .map(|st| j.mul(c2.along(&split.graph, st.edge, st.tail)))
        .collect();
    Ok(Prepared {
        layout,
        factors,
        symmetry: split.factor,
    })
}

/// Divides an unnormalized trace of the split web by `∏ m_e!`.
pub(crate) fn normalize<T: Scalar>(total: T, symmetry: u64) -> T {
    if symmetry == 1 {
        return total;
    }
    total
        .div_exact(&T::from_i64(symmetry as i64))
        .expect("symmetry factor is invertible")
}

/// Sign of a permutation given as a slice of distinct values.
pub(crate) fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..k` in lexicographic order.
pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}
