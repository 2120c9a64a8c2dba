//! Planar graphs as combinatorial maps realized by exact rational positions.
//!
//! Each edge `e` has two half-edges: `2e` runs from the lower-id endpoint to
//! the higher-id endpoint (the canonical direction) and `2e + 1` runs back.

mod geometry;
mod io;
mod loops;
mod structure;

pub use geometry::{cmp_ccw_from, cmp_from_west, cross_sign, orient, strictly_in_sector, west, Point};
pub use io::{EdgeSpec, GraphSpec, VertexSpec};
pub use loops::{cilia_parity, cilia_parity_polygon, euler_check, loop_area, simple_cycles, Enclosure, Loop, ParityCount};
pub use structure::{standard_structure, Structure};

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use crate::algebra::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: i64,
    pub pos: Point,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub id: i64,
    /// Endpoint with the smaller vertex id.
    pub u: usize,
    pub v: usize,
    /// Weight symbol or rational literal.
    pub weight: String,
}

#[derive(Clone, Debug)]
pub struct PlanarGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    vertex_index: HashMap<i64, usize>,
    edge_index: HashMap<i64, usize>,
    rotation: Vec<Vec<usize>>,
    rot_pos: Vec<usize>,
    faces: Vec<Vec<usize>>,
    face_of: Vec<usize>,
    outer: usize,
}

impl PlanarGraph {
    /// Builds the graph, derives the rotation system from positions and traces faces.
    ///
    /// Edges are `(id, u, v, weight)` with `u`, `v` vertex ids.
    pub fn new(vertices: Vec<(i64, Point)>, edges: Vec<(i64, i64, i64, String)>) -> Result<Self> {
        let mut vertices: Vec<Vertex> = vertices
            .into_iter()
            .map(|(id, pos)| Vertex { id, pos })
            .collect();
        vertices.sort_by_key(|v| v.id);
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::DuplicateId(w[0].id));
            }
        }
        let vertex_index: HashMap<i64, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.id, i)).collect();
        let mut seen = HashMap::new();
        for v in &vertices {
            if let Some(other) = seen.insert(v.pos.clone(), v.id) {
                return Err(Error::DegenerateGeometry {
                    vertex: v.id,
                    reason: format!("same position as vertex {other}"),
                });
            }
        }

        let mut raw = edges;
        raw.sort_by_key(|e| e.0);
        let mut out_edges = Vec::with_capacity(raw.len());
        for (k, (id, a, b, weight)) in raw.into_iter().enumerate() {
            if k > 0 && out_edges.last().map(|e: &Edge| e.id) == Some(id) {
                return Err(Error::DuplicateId(id));
            }
            if a == b {
                return Err(Error::SelfLoop(id));
            }
            let ia = *vertex_index.get(&a).ok_or(Error::UnknownVertex(a))?;
            let ib = *vertex_index.get(&b).ok_or(Error::UnknownVertex(b))?;
            let (u, v) = if ia < ib { (ia, ib) } else { (ib, ia) };
            out_edges.push(Edge { id, u, v, weight });
        }
        let edge_index = out_edges.iter().enumerate().map(|(i, e)| (e.id, i)).collect();

        let mut g = PlanarGraph {
            vertices,
            edges: out_edges,
            vertex_index,
            edge_index,
            rotation: Vec::new(),
            rot_pos: Vec::new(),
            faces: Vec::new(),
            face_of: Vec::new(),
            outer: 0,
        };
        g.check_connected()?;
        g.build_rotation()?;
        g.trace_faces()?;
        Ok(g)
    }

    fn check_connected(&self) -> Result<()> {
        let nv = self.vertices.len();
        if nv == 0 {
            return Err(Error::Disconnected);
        }
        let mut adj = vec![Vec::new(); nv];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    fn build_rotation(&mut self) -> Result<()> {
        let nv = self.vertices.len();
        let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for h in 0..2 * self.edges.len() {
            rotation[self.from(h)].push(h);
        }
        for (x, hs) in rotation.iter_mut().enumerate() {
            let mut err = None;
            hs.sort_by(|&a, &b| {
                let da = self.direction(a);
                let db = self.direction(b);
                match cmp_from_west(&da, &db) {
                    Ordering::Equal => {
                        if self.to(a) != self.to(b) {
                            err = Some(Error::DegenerateGeometry {
                                vertex: self.vertices[x].id,
                                reason: format!(
                                    "edges {} and {} leave at the same angle",
                                    self.edges[a / 2].id,
                                    self.edges[b / 2].id
                                ),
                            });
                            return a.cmp(&b);
                        }
                        // Parallel bundle: ascending edge order at the lower-id endpoint.
                        if self.edges[a / 2].u == x {
                            a.cmp(&b)
                        } else {
                            b.cmp(&a)
                        }
                    }
                    ord => ord,
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        let mut rot_pos = vec![0; 2 * self.edges.len()];
        for hs in &rotation {
            for (i, &h) in hs.iter().enumerate() {
                rot_pos[h] = i;
            }
        }
        self.rotation = rotation;
        self.rot_pos = rot_pos;
        Ok(())
    }

    fn trace_faces(&mut self) -> Result<()> {
        let nh = 2 * self.edges.len();
        let mut face_of = vec![usize::MAX; nh];
        let mut faces = Vec::new();
        for start in 0..nh {
            if face_of[start] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut cycle = Vec::new();
            let mut h = start;
            loop {
                face_of[h] = f;
                cycle.push(h);
                h = self.next_in_face(h);
                if h == start {
                    break;
                }
            }
            faces.push(cycle);
        }
        if nh == 0 {
            faces.push(Vec::new());
        }
        let euler = self.vertices.len() as i64 - self.edges.len() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonPlanarEmbedding(euler));
        }
        self.outer = if nh == 0 {
            0
        } else {
            let v0 = (0..self.vertices.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.vertices[a].pos, &self.vertices[b].pos);
                    pa.y.cmp(&pb.y).then(pa.x.cmp(&pb.x))
                })
                .expect("nonempty");
            face_of[self.rotation[v0][0] ^ 1]
        };
        self.faces = faces;
        self.face_of = face_of;
        Ok(())
    }

    /// Successor of `h` in its face: the face lies to the left of every half-edge.
    pub fn next_in_face(&self, h: usize) -> usize {
        let v = self.to(h);
        let rot = &self.rotation[v];
        let p = self.rot_pos[h ^ 1];
        rot[(p + rot.len() - 1) % rot.len()]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: usize) -> &Vertex {
        &self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_index(&self, id: i64) -> Result<usize> {
        self.vertex_index.get(&id).copied().ok_or(Error::UnknownVertex(id))
    }

    pub fn edge_index(&self, id: i64) -> Result<usize> {
        self.edge_index.get(&id).copied().ok_or(Error::UnknownEdge(id))
    }

    pub fn position(&self, v: usize) -> &Point {
        &self.vertices[v].pos
    }

    pub fn from(&self, h: usize) -> usize {
        let e = &self.edges[h / 2];
        if h.is_multiple_of(2) {
            e.u
        } else {
            e.v
        }
    }

    pub fn to(&self, h: usize) -> usize {
        self.from(h ^ 1)
    }

    /// The half-edge of `e` leaving `v`.
    pub fn half_edge_from(&self, e: usize, v: usize) -> usize {
        if self.edges[e].u == v {
            2 * e
        } else {
            debug_assert_eq!(self.edges[e].v, v);
            2 * e + 1
        }
    }

    fn direction(&self, h: usize) -> Point {
        self.position(self.to(h)).sub(self.position(self.from(h)))
    }

    /// Outgoing half-edges at `v`, counterclockwise starting after west.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_index(&self, h: usize) -> usize {
        self.rot_pos[h]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Half-edges bounding face `f`, in order, with the face on their left.
    pub fn face(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_len(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    pub fn face_of(&self, h: usize) -> usize {
        self.face_of[h]
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }

    pub fn bounded_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| f != self.outer)
    }

    /// Vertices visited along the boundary of `f`, in order.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&h| self.from(h)).collect()
    }

    /// The face whose boundary visits exactly the vertices with these ids,
    /// preferring a bounded face when the outer face matches too.
    pub fn face_with_vertices(&self, ids: &[i64]) -> Result<usize> {
        let mut want: Vec<usize> = ids.iter().map(|&id| self.vertex_index(id)).collect::<Result<_>>()?;
        want.sort_unstable();
        want.dedup();
        let matches = |f: usize| {
            let mut vs = self.face_vertices(f);
            vs.sort_unstable();
            vs.dedup();
            vs == want
        };
        self.bounded_faces()
            .chain(std::iter::once(self.outer_face()))
            .find(|&f| matches(f))
            .ok_or_else(|| Error::NoSuchFace(format!("{ids:?}")))
    }

    /// Edges between `a` and `b`, by ascending edge index.
    pub fn edges_between(&self, a: usize, b: usize) -> Vec<usize> {
        self.rotation[a]
            .iter()
            .filter(|&&h| self.to(h) == b)
            .map(|&h| h / 2)
            .collect()
    }

    /// Two-coloring of the vertices, `true` for black, with vertex 0 black.
    pub fn bipartition(&self) -> Result<Vec<bool>> {
        let nv = self.vertices.len();
        let mut color: Vec<Option<bool>> = vec![None; nv];
        color[0] = Some(true);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].expect("colored");
            for &h in &self.rotation[x] {
                let y = self.to(h);
                match color[y] {
                    None => {
                        color[y] = Some(!cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
        Ok(color.into_iter().map(|c| c.expect("connected")).collect())
    }

    /// Vertex indices ordered by increasing y, then x, then id.
    pub fn vertex_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertices.len()).collect();
        order.sort_by(|&a, &b| {
            let (pa, pb) = (&self.vertices[a].pos, &self.vertices[b].pos);
            pa.y.cmp(&pb.y)
                .then(pa.x.cmp(&pb.x))
                .then(self.vertices[a].id.cmp(&self.vertices[b].id))
        });
        order
    }

    /// Dual adjacency: for each face, `(neighbor face, edge)` pairs.
    pub fn dual_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for e in 0..self.edges.len() {
            let (f1, f2) = (self.face_of[2 * e], self.face_of[2 * e + 1]);
            adj[f1].push((f2, e));
            if f1 != f2 {
                adj[f2].push((f1, e));
            }
        }
        adj
    }

    /// Rational edge weight, if the weight string is a literal.
    pub fn numeric_weight(&self, e: usize) -> Option<Rational> {
        self.edges[e].weight.parse().ok()
    }

    /// A copy of this graph with different weight strings.
    pub fn with_weights(&self, weight: impl Fn(usize) -> String) -> PlanarGraph {
        let mut g = self.clone();
        for (e, edge) in g.edges.iter_mut().enumerate() {
            edge.weight = weight(e);
        }
        g
    }
}
