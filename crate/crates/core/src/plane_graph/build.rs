//! Rotation-local construction primitives: inserting a vertex inside a face
//! and adding a chord inside a face.  These are the only ways the toolkit
//! ever grows a graph, so embeddings stay planar by construction.

use super::{FaceWalk, GraphError, OuterAnchor, PlaneGraph};

impl PlaneGraph {
    /// Walk vertex at position `i` of a face: the source of edges[i].
    /// Its visit has incoming edges[i-1] and outgoing edges[i].
    pub fn walk_vertex(f: &FaceWalk, i: usize) -> u32 {
        f.edges[i].0
    }

    /// Inserts a new vertex inside the face `f`, adjacent to the walk
    /// vertices at the given positions (in walk order, distinct vertices).
    /// When `f` is the outer face, the sector from the last position around
    /// to the first becomes the new outer face.
    pub fn insert_vertex_in_face(
        &self,
        f: &FaceWalk,
        positions: &[usize],
    ) -> Result<(PlaneGraph, u32), GraphError> {
        let m = f.edges.len();
        if positions.is_empty() {
            return Err(GraphError::Argument("insert_vertex_in_face: no positions".into()));
        }
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() || sorted.last().copied().unwrap_or(0) >= m {
            return Err(GraphError::Argument(
                "insert_vertex_in_face: positions must be distinct and in range".into(),
            ));
        }
        let verts: Vec<u32> = sorted.iter().map(|&i| Self::walk_vertex(f, i)).collect();
        {
            let mut vs = verts.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != verts.len() {
                return Err(GraphError::Argument(
                    "insert_vertex_in_face: positions repeat a vertex".into(),
                ));
            }
        }
        let w = self.n() as u32;
        let mut rotations: Vec<Vec<u32>> = (0..self.n() as u32)
            .map(|v| self.rotation(v).to_vec())
            .collect();
        for &i in &sorted {
            let v = Self::walk_vertex(f, i);
            let a = f.edges[(i + m - 1) % m].0; // incoming neighbour
            let b = f.edges[i].1; // outgoing neighbour
            insert_in_corner(&mut rotations[v as usize], b, a, w);
        }
        // Around w (drawn inside f) the attachments appear in walk order.
        rotations.push(verts.clone());
        let anchor = match self.outer {
            OuterAnchor::Edge(u, v) if f.contains_directed(u, v) => {
                let last = *sorted.last().unwrap();
                f.edges[last]
            }
            OuterAnchor::Edge(u, v) => (u, v),
            OuterAnchor::Vertex(_) => {
                return Err(GraphError::Argument(
                    "insert_vertex_in_face: edgeless anchor".into(),
                ))
            }
        };
        let g = PlaneGraph::new(rotations, OuterAnchor::Edge(anchor.0, anchor.1))?;
        Ok((g, w))
    }

    /// Adds the chord between the walk vertices at positions `i` and `j`,
    /// drawn inside the face `f`.  Fails if the edge already exists.
    pub fn add_chord_in_face(
        &self,
        f: &FaceWalk,
        i: usize,
        j: usize,
    ) -> Result<PlaneGraph, GraphError> {
        let m = f.edges.len();
        if i == j || i >= m || j >= m {
            return Err(GraphError::Argument("add_chord_in_face: bad positions".into()));
        }
        let u = Self::walk_vertex(f, i);
        let v = Self::walk_vertex(f, j);
        if u == v {
            return Err(GraphError::Argument(
                "add_chord_in_face: positions name the same vertex".into(),
            ));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::Argument(format!(
                "add_chord_in_face: edge {u}-{v} already present"
            )));
        }
        let mut rotations: Vec<Vec<u32>> = (0..self.n() as u32)
            .map(|x| self.rotation(x).to_vec())
            .collect();
        for (&p, other) in [(&i, v), (&j, u)].iter().map(|(p, o)| (*p, *o)) {
            let x = Self::walk_vertex(f, p);
            let a = f.edges[(p + m - 1) % m].0;
            let b = f.edges[p].1;
            insert_in_corner(&mut rotations[x as usize], b, a, other);
        }
        // If f was the outer face the old anchor edge still bounds one of
        // the two sectors, which stays the outer face.
        PlaneGraph::new(rotations, self.outer)
    }
}

/// Inserts `w` into the corner between `b` and `a` (b immediately before a
/// clockwise; for a degree-1 vertex a == b).
fn insert_in_corner(rot: &mut Vec<u32>, b: u32, a: u32, w: u32) {
    if rot.len() == 1 {
        debug_assert_eq!(a, b);
        rot.push(w);
        return;
    }
    let ia = rot
        .iter()
        .position(|&x| x == a)
        .expect("corner incoming neighbour present");
    let prev = (ia + rot.len() - 1) % rot.len();
    debug_assert_eq!(rot[prev], b, "corner neighbours must be rotation-adjacent");
    rot.insert(ia, w);
}
