use std::collections::{HashSet, VecDeque};

use super::{strictly_in_sector, west, PlanarGraph, Point, Structure};
use crate::error::{Error, Result};

/// A closed walk `v_0 → v_1 → … → v_{L-1} → v_0`, where `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loop {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Loop {
    pub fn new(g: &PlanarGraph, vertices: Vec<usize>, edges: Vec<usize>) -> Result<Self> {
        let l = vertices.len();
        if l < 2 || edges.len() != l {
            return Err(Error::BrokenLoop);
        }
        for i in 0..l {
            let (a, b) = (vertices[i], vertices[(i + 1) % l]);
            let e = *edges.get(i).ok_or(Error::BrokenLoop)?;
            if e >= g.num_edges() {
                return Err(Error::BrokenLoop);
            }
            let edge = g.edge(e);
            if !((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a)) {
                return Err(Error::BrokenLoop);
            }
        }
        Ok(Loop { vertices, edges })
    }

    /// The loop through `vertices`, using the lowest-index edge at each step
    /// (and a second parallel edge to close a digon).
    pub fn through(g: &PlanarGraph, vertices: Vec<usize>) -> Result<Self> {
        let l = vertices.len();
        let mut edges = Vec::with_capacity(l);
        for i in 0..l {
            let between = g.edges_between(vertices[i], vertices[(i + 1) % l]);
            let mut sorted = between.clone();
            sorted.sort_unstable();
            let pick = sorted
                .into_iter()
                .find(|e| !edges.contains(e))
                .ok_or(Error::BrokenLoop)?;
            edges.push(pick);
        }
        Loop::new(g, vertices, edges)
    }

    /// Boundary walk of a face.
    pub fn face_boundary(g: &PlanarGraph, f: usize) -> Self {
        let hs = g.face(f);
        Loop {
            vertices: hs.iter().map(|&h| g.from(h)).collect(),
            edges: hs.iter().map(|&h| h / 2).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        let vs: HashSet<_> = self.vertices.iter().collect();
        let es: HashSet<_> = self.edges.iter().collect();
        vs.len() == self.vertices.len() && es.len() == self.edges.len()
    }

    /// Half-edge traversed at step `i`.
    pub fn half_edge(&self, g: &PlanarGraph, i: usize) -> usize {
        g.half_edge_from(self.edges[i], self.vertices[i])
    }

    pub fn reversed(&self) -> Loop {
        let l = self.len();
        let vertices = (0..l).map(|i| self.vertices[(l - i) % l]).collect();
        let edges = (0..l).map(|i| self.edges[l - 1 - i]).collect();
        Loop { vertices, edges }
    }

    /// The same cycle started at step `k`.
    pub fn rotated(&self, k: usize) -> Loop {
        let l = self.len();
        Loop {
            vertices: (0..l).map(|i| self.vertices[(i + k) % l]).collect(),
            edges: (0..l).map(|i| self.edges[(i + k) % l]).collect(),
        }
    }
}

/// The region bounded by a simple loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    /// Per face: whether it lies inside the loop.
    pub inside: Vec<bool>,
    /// Sum over enclosed faces of `ℓ − 2`.
    pub area: i64,
    /// Vertices strictly inside the loop.
    pub enclosed_vertices: Vec<usize>,
    /// Whether the loop runs counterclockwise around its interior.
    pub ccw: bool,
}

impl Enclosure {
    /// Decides inside and outside by flooding the dual graph from the outer
    /// face without crossing the loop.
    pub fn of(g: &PlanarGraph, gamma: &Loop) -> Result<Self> {
        if !gamma.is_simple() {
            return Err(Error::NotSimpleLoop);
        }
        let on_loop: HashSet<usize> = gamma.edges.iter().copied().collect();
        let mut outside = vec![false; g.num_faces()];
        let mut queue = VecDeque::from([g.outer_face()]);
        outside[g.outer_face()] = true;
        let dual = g.dual_adjacency();
        while let Some(f) = queue.pop_front() {
            for &(nf, e) in &dual[f] {
                if !on_loop.contains(&e) && !outside[nf] {
                    outside[nf] = true;
                    queue.push_back(nf);
                }
            }
        }
        let inside: Vec<bool> = outside.iter().map(|&o| !o).collect();
        let area = (0..g.num_faces())
            .filter(|&f| inside[f])
            .map(|f| g.face_len(f) as i64 - 2)
            .sum();
        let loop_vertices: HashSet<usize> = gamma.vertices.iter().copied().collect();
        let mut enclosed: Vec<usize> = (0..g.num_faces())
            .filter(|&f| inside[f])
            .flat_map(|f| g.face_vertices(f))
            .filter(|v| !loop_vertices.contains(v))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        enclosed.sort_unstable();
        let ccw = inside[g.face_of(gamma.half_edge(g, 0))];
        Ok(Enclosure {
            inside,
            area,
            enclosed_vertices: enclosed,
            ccw,
        })
    }
}

/// Area of a simple loop counted in triangles: each enclosed face of length
/// `ℓ` contributes `ℓ − 2`.
pub fn loop_area(g: &PlanarGraph, gamma: &Loop) -> Result<i64> {
    Ok(Enclosure::of(g, gamma)?.area)
}

/// Whether `A(γ) = L(γ) + 2·V_enc(γ) − 2`.
pub fn euler_check(g: &PlanarGraph, gamma: &Loop) -> Result<bool> {
    let enc = Enclosure::of(g, gamma)?;
    Ok(enc.area == gamma.len() as i64 + 2 * enc.enclosed_vertices.len() as i64 - 2)
}

/// Every simple cycle once, starting at its lowest vertex index.
pub fn simple_cycles(g: &PlanarGraph) -> Vec<Loop> {
    fn dfs(g: &PlanarGraph, start: usize, at: usize, vs: &mut Vec<usize>, es: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Loop>) {
        for &h in g.rotation(at) {
            let (e, w) = (h / 2, g.to(h));
            if es.contains(&e) {
                continue;
            }
            if w == start {
                // Each cycle is met in both directions; keep one.
                if es[0] < e {
                    let mut edges = es.clone();
                    edges.push(e);
                    out.push(Loop {
                        vertices: vs.clone(),
                        edges,
                    });
                }
            } else if w > start && !on[w] {
                on[w] = true;
                vs.push(w);
                es.push(e);
                dfs(g, start, w, vs, es, on, out);
                es.pop();
                vs.pop();
                on[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.num_vertices()];
    for start in 0..g.num_vertices() {
        for &h in g.rotation(start) {
            let w = g.to(h);
            if w > start {
                on[w] = true;
                dfs(g, start, w, &mut vec![start, w], &mut vec![h / 2], &mut on, &mut out);
                on[w] = false;
            }
        }
    }
    out
}

/// Counts along a closed path: descending steps, cilia on the left, length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParityCount {
    pub d: usize,
    pub s: usize,
    pub n: usize,
}

impl ParityCount {
    /// Whether `d ≡ s + n + 1 (mod 2)`.
    pub fn congruence_holds(&self) -> bool {
        (self.d + self.s + self.n + 1).is_multiple_of(2)
    }
}

/// Counts for a loop in a graph under an arbitrary structure. A step is
/// descending when it runs against the edge orientation, and a cilium is on
/// the left when its gap lies in the counterclockwise sector from the
/// outgoing half-edge to the incoming one.
pub fn cilia_parity(g: &PlanarGraph, gamma: &Loop, s: &Structure) -> ParityCount {
    let l = gamma.len();
    let mut d = 0;
    let mut left = 0;
    for i in 0..l {
        let v = gamma.vertices[i];
        if s.tail(g, gamma.edges[i]) != v {
            d += 1;
        }
        let deg = g.degree(v);
        let out = g.rotation_index(gamma.half_edge(g, i));
        let back = g.rotation_index(gamma.half_edge(g, (i + l - 1) % l) ^ 1);
        let offset = (s.cilia[v] + deg - out) % deg;
        let width = (back + deg - out) % deg;
        if offset >= 1 && offset <= width {
            left += 1;
        }
    }
    ParityCount { d, s: left, n: l }
}

/// Counts for a closed polygon with a west-pointing cilium at every corner.
pub fn cilia_parity_polygon(points: &[Point]) -> Result<ParityCount> {
    let l = points.len();
    let mut d = 0;
    let mut left = 0;
    for i in 0..l {
        let (cur, next, prev) = (&points[i], &points[(i + 1) % l], &points[(i + l - 1) % l]);
        if cur.y == next.y {
            return Err(Error::HorizontalStep(i));
        }
        if next.y < cur.y {
            d += 1;
        }
        if strictly_in_sector(&west(), &next.sub(cur), &prev.sub(cur)) {
            left += 1;
        }
    }
    Ok(ParityCount { d, s: left, n: l })
}
