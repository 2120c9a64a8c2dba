use super::coloring::bfs_order;
use super::layout::{perm_sign, permutations, WebLayout};
use crate::algebra::{Rational, Scalar};
use crate::error::Result;
use crate::graph::{PlanarGraph, Structure};
use crate::multiweb::{split_simple, Multiweb};

/// Signed count of Sp(2n)-colorings under the identity connection.
///
/// Colors `0..2n` are bijective around each vertex and complementary across
/// each strand (`i ↔ i ± n`). The sign is `∏_v c_v ∏_e c_e`, where `c_v` is
/// the sign of the color permutation read from the cilium and `c_e = +1`
/// exactly when the tail color is below `n`.
pub fn trace_identity_colorings(g: &PlanarGraph, m: &Multiweb, s: &Structure) -> Result<Rational> {
    let split = split_simple(g, m)?;
    let layout = WebLayout::from_simple(&split.graph, &split.web, &split.lift_structure(g, s))?;
    let n = m.rank();
    let perms = permutations(2 * n);
    let order = bfs_order(&layout);
    let mut tail = vec![usize::MAX; layout.strands.len()];
    let mut head = vec![usize::MAX; layout.strands.len()];
    let total = count(&layout, &order, &perms, 0, &mut tail, &mut head);
    Ok(Rational::from_integer(total).div_exact(&Rational::from_integer(split.factor as i64)).expect("nonzero"))
}

fn count(
    layout: &WebLayout,
    order: &[usize],
    perms: &[Vec<usize>],
    depth: usize,
    tail: &mut [usize],
    head: &mut [usize],
) -> i64 {
    if depth == order.len() {
        let mut sign = order
            .iter()
            .map(|&v| {
                let colors: Vec<usize> = layout.slots[v]
                    .iter()
                    .map(|&k| if layout.strands[k].tail == v { tail[k] } else { head[k] })
                    .collect();
                perm_sign(&colors)
            })
            .product::<i64>();
        for k in 0..layout.strands.len() {
            if tail[k] >= layout.n {
                sign = -sign;
            }
        }
        return sign;
    }
    let n = layout.n;
    let v = order[depth];
    let mut total = 0;
    'perm: for p in perms {
        for (slot, &k) in layout.slots[v].iter().enumerate() {
            let st = &layout.strands[k];
            let other = if st.tail == v { head[k] } else { tail[k] };
            if other != usize::MAX && (p[slot] + n) % (2 * n) != other {
                continue 'perm;
            }
        }
        for (slot, &k) in layout.slots[v].iter().enumerate() {
            if layout.strands[k].tail == v {
                tail[k] = p[slot];
            } else {
                head[k] = p[slot];
            }
        }
        total += count(layout, order, perms, depth + 1, tail, head);
        for &k in &layout.slots[v] {
            if layout.strands[k].tail == v {
                tail[k] = usize::MAX;
            } else {
                head[k] = usize::MAX;
            }
        }
    }
    total
}
