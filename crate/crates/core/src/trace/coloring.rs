use std::collections::VecDeque;

use rayon::prelude::*;

use super::layout::{normalize, perm_sign, permutations, prepare, WebLayout};
use crate::algebra::Scalar;
use crate::connection::Connection;
use crate::error::Result;
use crate::graph::{PlanarGraph, Structure};
use crate::multiweb::Multiweb;

/// Trace as a sum over colorings: at every vertex the colors read from the
/// cilium form a permutation contributing its sign, and every strand
/// contributes `(Jφ_{tail→head})_{c(tail), c(head)}`.
pub fn trace_coloring<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, m: &Multiweb, s: &Structure) -> Result<T> {
    let p = prepare(g, conn, m, s)?;
    let total = coloring_sum(&p.layout, &|k, a, b| p.factors[k].get(a, b).clone());
    Ok(normalize(total, p.symmetry))
}

/// Vertices in BFS order so that each new vertex meets colored neighbors early.
pub(crate) fn bfs_order(layout: &WebLayout) -> Vec<usize> {
    let nv = layout.num_vertices();
    let mut seen = vec![false; nv];
    let mut order = Vec::with_capacity(nv);
    for start in 0..nv {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &k in &layout.slots[v] {
                let st = &layout.strands[k];
                let w = if st.tail == v { st.head } else { st.tail };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

/// `Σ_c ∏_v sgn(c_v) ∏_strands value(strand, c(tail), c(head))`, pruning on zeros.
pub(crate) fn coloring_sum<T: Scalar>(layout: &WebLayout, value: &(dyn Fn(usize, usize, usize) -> T + Sync)) -> T {
    let order = bfs_order(layout);
    let perms = permutations(2 * layout.n);
    let signs: Vec<i64> = perms.iter().map(|p| perm_sign(p)).collect();
    let ctx = Ctx {
        layout,
        order: &order,
        perms: &perms,
        signs: &signs,
        value,
    };
    let Some(&first) = order.first() else {
        return T::one();
    };
    let parts: Vec<T> = (0..perms.len())
        .into_par_iter()
        .map(|pi| {
            let mut tail = vec![usize::MAX; layout.strands.len()];
            let mut head = vec![usize::MAX; layout.strands.len()];
            match ctx.place(first, pi, &mut tail, &mut head, T::one()) {
                Some(w) => {
                    let r = ctx.go(1, &mut tail, &mut head, w);
                    ctx.unplace(first, &mut tail, &mut head);
                    r
                }
                None => T::zero(),
            }
        })
        .collect();
    T::sum(&parts)
}

struct Ctx<'a, T> {
    layout: &'a WebLayout,
    order: &'a [usize],
    perms: &'a [Vec<usize>],
    signs: &'a [i64],
    value: &'a (dyn Fn(usize, usize, usize) -> T + Sync),
}

impl<T: Scalar> Ctx<'_, T> {
    /// Colors vertex `v` by permutation `pi`, multiplying in completed strands.
    fn place(&self, v: usize, pi: usize, tail: &mut [usize], head: &mut [usize], mut w: T) -> Option<T> {
        let p = &self.perms[pi];
        for (slot, &k) in self.layout.slots[v].iter().enumerate() {
            let st = &self.layout.strands[k];
            let color = p[slot];
            let other = if st.tail == v {
                tail[k] = color;
                head[k]
            } else {
                head[k] = color;
                tail[k]
            };
            if other != usize::MAX {
                let f = (self.value)(k, tail[k], head[k]);
                if f.is_zero() {
                    self.unplace(v, tail, head);
                    return None;
                }
                w = w.mul(&f);
            }
        }
        if self.signs[pi] < 0 {
            w = w.neg();
        }
        Some(w)
    }

    fn unplace(&self, v: usize, tail: &mut [usize], head: &mut [usize]) {
        for &k in &self.layout.slots[v] {
            if self.layout.strands[k].tail == v {
                tail[k] = usize::MAX;
            } else {
                head[k] = usize::MAX;
            }
        }
    }

    fn go(&self, depth: usize, tail: &mut [usize], head: &mut [usize], w: T) -> T {
        if depth == self.order.len() {
            return w;
        }
        let v = self.order[depth];
        let mut acc = T::zero();
        for pi in 0..self.perms.len() {
            if let Some(w2) = self.place(v, pi, tail, head, w.clone()) {
                acc.add_assign(&self.go(depth + 1, tail, head, w2));
                self.unplace(v, tail, head);
            }
        }
        acc
    }
}
