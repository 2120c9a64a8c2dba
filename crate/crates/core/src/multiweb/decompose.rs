use super::{enumerate_bounded, Multiweb};
use crate::error::{Error, Result};
use crate::graph::{Loop, PlanarGraph};

/// A 2-multiweb as disjoint simple loops and doubled edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopDecomposition {
    pub loops: Vec<Loop>,
    pub doubled: Vec<usize>,
}

impl LoopDecomposition {
    /// Number of doubled edges, `c_1`.
    pub fn c1(&self) -> usize {
        self.doubled.len()
    }

    pub fn all_even(&self) -> bool {
        self.loops.iter().all(|l| l.len() % 2 == 0)
    }
}

pub fn decompose_2multiweb(g: &PlanarGraph, m: &Multiweb) -> Result<LoopDecomposition> {
    if m.rank() != 1 {
        return Err(Error::WrongRank {
            expected: 1,
            got: m.rank(),
        });
    }
    let mm = m.multiplicities();
    let doubled: Vec<usize> = (0..mm.len()).filter(|&e| mm[e] == 2).collect();
    let single_at = |v: usize| -> Vec<usize> {
        g.rotation(v)
            .iter()
            .map(|&h| h / 2)
            .filter(|&e| mm[e] == 1)
            .collect()
    };
    let mut used = vec![false; mm.len()];
    let mut loops = Vec::new();
    for start in 0..mm.len() {
        if mm[start] != 1 || used[start] {
            continue;
        }
        let mut vertices = vec![g.edge(start).u];
        let mut edges = vec![start];
        used[start] = true;
        let mut at = g.edge(start).v;
        let mut via = start;
        while at != vertices[0] {
            let incident = single_at(at);
            if incident.len() != 2 {
                return Err(Error::MalformedWeb(format!(
                    "vertex {} has {} simple edges",
                    g.vertex(at).id,
                    incident.len()
                )));
            }
            let next = if incident[0] == via { incident[1] } else { incident[0] };
            vertices.push(at);
            edges.push(next);
            used[next] = true;
            at = if g.edge(next).u == at { g.edge(next).v } else { g.edge(next).u };
            via = next;
        }
        loops.push(Loop::new(g, vertices, edges)?);
    }
    Ok(LoopDecomposition { loops, doubled })
}

/// Sum of two dimer covers; every loop of the result has even length.
pub fn superposition(g: &PlanarGraph, d1: &[u32], d2: &[u32]) -> Result<Multiweb> {
    let m = d1.iter().zip(d2).map(|(a, b)| a + b).collect();
    let web = Multiweb::new(g, 1, m)?;
    let dec = decompose_2multiweb(g, &web)?;
    if !dec.all_even() {
        return Err(Error::MalformedWeb("superposition produced an odd loop".into()));
    }
    Ok(web)
}

/// Every ordered way to write `m` as a sum of `n` 2-multiwebs.
pub fn colored_2web_decompositions(g: &PlanarGraph, m: &Multiweb) -> Vec<Vec<Multiweb>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    colored_rec(g, m.rank(), m.multiplicities().to_vec(), &mut prefix, &mut out);
    out
}

fn colored_rec(g: &PlanarGraph, left: usize, rest: Vec<u32>, prefix: &mut Vec<Multiweb>, out: &mut Vec<Vec<Multiweb>>) {
    if left == 1 {
        let mut full = prefix.clone();
        full.push(Multiweb::new_unchecked(1, rest));
        out.push(full);
        return;
    }
    for part in enumerate_bounded(g, 2, &rest) {
        let next: Vec<u32> = rest.iter().zip(&part).map(|(r, p)| r - p).collect();
        prefix.push(Multiweb::new_unchecked(1, part));
        colored_rec(g, left - 1, next, prefix, out);
        prefix.pop();
    }
}
