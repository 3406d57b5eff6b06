//! Plane graphs as rotation systems.
//!
//! A [`PlaneGraph`] stores, for every vertex, the cyclic clockwise order of
//! its neighbours, plus one anchor designating the outer face.  Faces are
//! never stored; they are traced on demand from the rotations.  All
//! operations are pure and return freshly labelled graphs.

mod canon;
mod format;
mod surgery;

pub use canon::brute_force_isomorphic;
pub use surgery::{CutResult, SplitResult};

use std::collections::{HashMap, HashSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    /// The rotation data does not describe a simple plane graph.
    #[error("malformed plane graph: {0}")]
    Structural(String),
    /// The graph is fine but an operation argument is not.
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Designates the outer face: the face to the right of a directed edge,
/// or the single face of an edgeless component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum OuterAnchor {
    Edge(u32, u32),
    Vertex(u32),
}

/// Immutable plane graph: clockwise rotations plus an outer-face anchor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneGraph {
    rotations: Vec<Vec<u32>>,
    outer: OuterAnchor,
}

/// A facial walk: the cyclic sequence of directed edges with the face on
/// their right.  An edge incident with the face on both sides appears twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub edges: Vec<(u32, u32)>,
}

impl FaceWalk {
    /// |f|: the number of directed edges in the walk.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices in walk order (with repetitions).
    pub fn vertices(&self) -> Vec<u32> {
        self.edges.iter().map(|&(u, _)| u).collect()
    }

    /// The distinct vertices on the walk.
    pub fn vertex_set(&self) -> HashSet<u32> {
        self.edges.iter().map(|&(u, _)| u).collect()
    }

    pub fn contains_directed(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&(u, v))
    }

    /// True when the walk visits every vertex exactly once (a cycle).
    pub fn is_simple_cycle(&self) -> bool {
        let vs = self.vertices();
        let set: HashSet<u32> = vs.iter().copied().collect();
        set.len() == vs.len() && vs.len() >= 3
    }
}

/// A path q_0 … q_k of pairwise adjacent vertices; closed paths (q_0 = q_k)
/// represent cycles.  ℓ = k is the edge count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexPath {
    verts: Vec<u32>,
}

impl VertexPath {
    /// Validates adjacency of consecutive pairs and internal disjointness.
    pub fn new(g: &PlaneGraph, verts: Vec<u32>) -> Result<Self, GraphError> {
        if verts.is_empty() {
            return Err(GraphError::Argument("empty vertex path".into()));
        }
        for &v in &verts {
            if v as usize >= g.n() {
                return Err(GraphError::Argument(format!("vertex {v} out of range")));
            }
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::Argument(format!(
                    "consecutive vertices {} and {} are not adjacent",
                    w[0], w[1]
                )));
            }
        }
        let closed = verts.len() > 1 && verts[0] == *verts.last().unwrap();
        let inner = if closed { &verts[..verts.len() - 1] } else { &verts[..] };
        let set: HashSet<u32> = inner.iter().copied().collect();
        if set.len() != inner.len() {
            return Err(GraphError::Argument("path revisits a vertex".into()));
        }
        Ok(VertexPath { verts })
    }

    pub fn verts(&self) -> &[u32] {
        &self.verts
    }

    /// ℓ: the number of edges.
    pub fn len(&self) -> usize {
        self.verts.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.verts.len() <= 1
    }

    pub fn is_closed(&self) -> bool {
        self.verts.len() > 1 && self.verts[0] == *self.verts.last().unwrap()
    }

    /// Distinct vertices (for a closed path, the repeated endpoint once).
    pub fn vertex_set(&self) -> HashSet<u32> {
        self.verts.iter().copied().collect()
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.verts[0], *self.verts.last().unwrap())
    }

    pub fn contains_edge(&self, u: u32, v: u32) -> bool {
        self.verts
            .windows(2)
            .any(|w| (w[0] == u && w[1] == v) || (w[0] == v && w[1] == u))
    }
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise rotations, checking simplicity,
    /// adjacency symmetry, the anchor, and per-component Euler counts.
    pub fn new(rotations: Vec<Vec<u32>>, outer: OuterAnchor) -> Result<Self, GraphError> {
        let n = rotations.len();
        for (v, rot) in rotations.iter().enumerate() {
            let mut seen = HashSet::new();
            for &u in rot {
                if u as usize >= n {
                    return Err(GraphError::Structural(format!(
                        "vertex {v} lists out-of-range neighbour {u}"
                    )));
                }
                if u as usize == v {
                    return Err(GraphError::Structural(format!("loop at vertex {v}")));
                }
                if !seen.insert(u) {
                    return Err(GraphError::Structural(format!(
                        "vertex {v} lists neighbour {u} twice"
                    )));
                }
            }
        }
        for (v, rot) in rotations.iter().enumerate() {
            for &u in rot {
                if !rotations[u as usize].contains(&(v as u32)) {
                    return Err(GraphError::Structural(format!(
                        "asymmetric adjacency: {v} lists {u} but not conversely"
                    )));
                }
            }
        }
        match outer {
            OuterAnchor::Edge(u, v) => {
                if u as usize >= n
                    || v as usize >= n
                    || !rotations[u as usize].contains(&v)
                {
                    return Err(GraphError::Structural(format!(
                        "outer anchor {u}>{v} is not an edge"
                    )));
                }
            }
            OuterAnchor::Vertex(u) => {
                if u as usize >= n {
                    return Err(GraphError::Structural(format!(
                        "outer anchor vertex {u} out of range"
                    )));
                }
                if !rotations[u as usize].is_empty() {
                    return Err(GraphError::Structural(format!(
                        "outer anchor vertex {u} has edges; anchor with a directed edge"
                    )));
                }
            }
        }
        let g = PlaneGraph { rotations, outer };
        g.check_planar()?;
        Ok(g)
    }

    fn check_planar(&self) -> Result<(), GraphError> {
        // Rotation systems always embed in some orientable surface; the
        // graph is plane iff every component satisfies V - E + F = 2.
        let comps = self.components();
        let mut walks_of: Vec<usize> = vec![0; comps.len()];
        let mut comp_of = vec![usize::MAX; self.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v as usize] = i;
            }
        }
        for w in self.trace_faces() {
            walks_of[comp_of[w.edges[0].0 as usize]] += 1;
        }
        for (i, c) in comps.iter().enumerate() {
            let vc = c.len() as i64;
            let ec: i64 = c
                .iter()
                .map(|&v| self.rotations[v as usize].len() as i64)
                .sum::<i64>()
                / 2;
            let fc = if ec == 0 { 1 } else { walks_of[i] as i64 };
            if vc - ec + fc != 2 {
                return Err(GraphError::Structural(format!(
                    "component {i} violates Euler's formula: V={vc} E={ec} F={fc}"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn outer_anchor(&self) -> OuterAnchor {
        self.outer
    }

    pub fn rotation(&self, v: u32) -> &[u32] {
        &self.rotations[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.rotations[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        u != v && self.rotations[u as usize].contains(&v)
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                if (v as u32) < u {
                    out.push((v as u32, u));
                }
            }
        }
        out
    }

    /// The neighbour following `u` in the clockwise rotation of `v`.
    pub fn succ(&self, v: u32, u: u32) -> u32 {
        let rot = &self.rotations[v as usize];
        let i = rot.iter().position(|&x| x == u).expect("succ: not a neighbour");
        rot[(i + 1) % rot.len()]
    }

    /// The neighbour preceding `u` in the clockwise rotation of `v`.
    pub fn pred(&self, v: u32, u: u32) -> u32 {
        let rot = &self.rotations[v as usize];
        let i = rot.iter().position(|&x| x == u).expect("pred: not a neighbour");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Successor of the directed edge (u, v) along the face on its right.
    /// With clockwise rotations this is (v, pred_v(u)).
    pub fn face_next(&self, u: u32, v: u32) -> (u32, u32) {
        (v, self.pred(v, u))
    }

    /// Traces every face once.  Each directed edge appears in exactly one
    /// returned walk; the face lies to the right of its directed edges.
    pub fn trace_faces(&self) -> Vec<FaceWalk> {
        let mut seen: HashSet<(u32, u32)> = HashSet::new();
        let mut out = Vec::new();
        for (v, rot) in self.rotations.iter().enumerate() {
            for &u in rot {
                let start = (v as u32, u);
                if seen.contains(&start) {
                    continue;
                }
                let mut walk = Vec::new();
                let mut cur = start;
                loop {
                    walk.push(cur);
                    seen.insert(cur);
                    cur = self.face_next(cur.0, cur.1);
                    if cur == start {
                        break;
                    }
                }
                out.push(FaceWalk { edges: walk });
            }
        }
        out
    }

    /// The walk of the outer face (empty for an edgeless anchor component).
    pub fn outer_walk(&self) -> FaceWalk {
        match self.outer {
            OuterAnchor::Vertex(_) => FaceWalk { edges: Vec::new() },
            OuterAnchor::Edge(u, v) => {
                let start = (u, v);
                let mut walk = Vec::new();
                let mut cur = start;
                loop {
                    walk.push(cur);
                    cur = self.face_next(cur.0, cur.1);
                    if cur == start {
                        break;
                    }
                }
                FaceWalk { edges: walk }
            }
        }
    }

    /// Faces other than the outer one.
    pub fn internal_faces(&self) -> Vec<FaceWalk> {
        let outer = self.outer_walk();
        self.trace_faces()
            .into_iter()
            .filter(|f| f.edges[0] != outer.edges[0] || f.edges != outer.edges)
            .collect()
    }

    /// BFS distance; `None` when `u` and `v` are in different components.
    pub fn distance(&self, u: u32, v: u32) -> Result<Option<usize>, GraphError> {
        if u as usize >= self.n() || v as usize >= self.n() {
            return Err(GraphError::Argument(format!(
                "distance: vertex out of range ({u}, {v})"
            )));
        }
        if u == v {
            return Ok(Some(0));
        }
        let mut dist = vec![usize::MAX; self.n()];
        dist[u as usize] = 0;
        let mut q = VecDeque::new();
        q.push_back(u);
        while let Some(x) = q.pop_front() {
            for &y in &self.rotations[x as usize] {
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    if y == v {
                        return Ok(Some(dist[y as usize]));
                    }
                    q.push_back(y);
                }
            }
        }
        Ok(None)
    }

    /// Single-source BFS distances (usize::MAX = unreachable).
    pub fn distances_from(&self, u: u32) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[u as usize] = 0;
        let mut q = VecDeque::new();
        q.push_back(u);
        while let Some(x) = q.pop_front() {
            for &y in &self.rotations[x as usize] {
                if dist[y as usize] == usize::MAX {
                    dist[y as usize] = dist[x as usize] + 1;
                    q.push_back(y);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut q = VecDeque::new();
            q.push_back(s as u32);
            seen[s] = true;
            while let Some(x) = q.pop_front() {
                comp.push(x);
                for &y in &self.rotations[x as usize] {
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        q.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Number of faces with the outer faces of all components identified.
    pub fn face_count(&self) -> usize {
        let comps = self.components();
        let with_edges = comps
            .iter()
            .filter(|c| c.iter().any(|&v| !self.rotations[v as usize].is_empty()))
            .count();
        if with_edges == 0 {
            return 1;
        }
        self.trace_faces().len() - (comps.len() - 1)
    }

    /// Cut vertices, by the lowpoint DFS.
    pub fn cut_vertices(&self) -> HashSet<u32> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = HashSet::new();
        let mut timer = 0usize;
        // Iterative DFS to keep deep graphs safe.
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            let mut root_children = 0usize;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx == 0 {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                }
                if *idx < self.rotations[v].len() {
                    let u = self.rotations[v][*idx] as usize;
                    *idx += 1;
                    if disc[u] == usize::MAX {
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else if u != parent {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            cut.insert(p as u32);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cut.insert(root as u32);
            }
        }
        cut
    }

    /// The outer cycle, when the outer face is bounded by a simple cycle.
    pub fn outer_cycle(&self) -> Option<VertexPath> {
        let w = self.outer_walk();
        if w.is_empty() || !w.is_simple_cycle() {
            return None;
        }
        let mut verts = w.vertices();
        verts.push(verts[0]);
        VertexPath::new(self, verts).ok()
    }

    /// The cycle C_n on vertices 0..n-1 in cyclic order.
    pub fn cycle(n: usize) -> PlaneGraph {
        assert!(n >= 3);
        let rotations = (0..n)
            .map(|i| vec![((i + n - 1) % n) as u32, ((i + 1) % n) as u32])
            .collect();
        PlaneGraph::new(rotations, OuterAnchor::Edge(0, (n - 1) as u32)).unwrap()
    }

    /// The path on vertices 0..n-1.
    pub fn path(n: usize) -> PlaneGraph {
        assert!(n >= 1);
        if n == 1 {
            return PlaneGraph::new(vec![Vec::new()], OuterAnchor::Vertex(0)).unwrap();
        }
        let rotations = (0..n)
            .map(|i| {
                if i == 0 {
                    vec![1u32]
                } else if i == n - 1 {
                    vec![(n - 2) as u32]
                } else {
                    vec![(i - 1) as u32, (i + 1) as u32]
                }
            })
            .collect();
        PlaneGraph::new(rotations, OuterAnchor::Edge(0, 1)).unwrap()
    }

    /// Planar K4: outer triangle 0,1,2 with 3 inside.
    pub fn k4() -> PlaneGraph {
        PlaneGraph::wheel(3, &[0, 1, 2])
    }

    /// The wheel: cycle 0..n-1 plus hub `n` adjacent to the listed rim
    /// vertices (clockwise positions on the rim).
    pub fn wheel(n: usize, spokes: &[u32]) -> PlaneGraph {
        assert!(n >= 3);
        let hub = n as u32;
        let mut rotations: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let prev = ((i + n - 1) % n) as u32;
                let next = ((i + 1) % n) as u32;
                if spokes.contains(&(i as u32)) {
                    // Hub drawn inside: clockwise as seen with the outer
                    // face outside is (prev, next, hub) at each rim vertex.
                    vec![prev, next, hub]
                } else {
                    vec![prev, next]
                }
            })
            .collect();
        let mut hub_rot: Vec<u32> = spokes.to_vec();
        hub_rot.sort_unstable();
        rotations.push(hub_rot);
        PlaneGraph::new(rotations, OuterAnchor::Edge(0, (n - 1) as u32)).unwrap()
    }
}
