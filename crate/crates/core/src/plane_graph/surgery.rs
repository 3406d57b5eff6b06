//! Rotation-local surgeries: interiors of cycles, cutting along a path,
//! and splitting a facial walk into a simple cycle.

use super::{FaceWalk, GraphError, OuterAnchor, PlaneGraph, VertexPath};
use std::collections::{HashMap, HashSet};

/// Result of [`PlaneGraph::cut_along_path`]: the cut graph with the two
/// bank paths and a map from new vertex ids to the originals.
#[derive(Debug, Clone)]
pub struct CutResult {
    pub graph: PlaneGraph,
    pub q_left: VertexPath,
    pub q_right: VertexPath,
    pub relabel: Vec<u32>,
}

/// Result of [`PlaneGraph::split_face_to_cycle`].
#[derive(Debug, Clone)]
pub struct SplitResult {
    pub graph: PlaneGraph,
    pub cycle: VertexPath,
    pub relabel: Vec<u32>,
}

impl PlaneGraph {
    /// All k-chords of `cycle`: paths of length `k` with both endpoints on
    /// the cycle and all internal vertices off it.  `k = 1` yields chords.
    pub fn chords_and_k_chords(
        &self,
        cycle: &VertexPath,
        k: usize,
    ) -> Result<Vec<VertexPath>, GraphError> {
        if !cycle.is_closed() || cycle.len() < 3 {
            return Err(GraphError::Argument("chords: input is not a cycle".into()));
        }
        if k < 1 {
            return Err(GraphError::Argument("chords: k must be positive".into()));
        }
        let on_cycle = cycle.vertex_set();
        let mut out = Vec::new();
        let mut starts: Vec<u32> = on_cycle.iter().copied().collect();
        starts.sort_unstable();
        let mut path: Vec<u32> = Vec::with_capacity(k + 1);
        for &s in &starts {
            path.clear();
            path.push(s);
            self.k_chord_dfs(&on_cycle, cycle, k, &mut path, &mut out);
        }
        Ok(out)
    }

    fn k_chord_dfs(
        &self,
        on_cycle: &HashSet<u32>,
        cycle: &VertexPath,
        k: usize,
        path: &mut Vec<u32>,
        out: &mut Vec<VertexPath>,
    ) {
        if path.len() == k + 1 {
            let last = *path.last().unwrap();
            if on_cycle.contains(&last) && path[0] < last {
                if k == 1 && cycle.contains_edge(path[0], last) {
                    return;
                }
                out.push(VertexPath { verts: path.clone() });
            }
            return;
        }
        let v = *path.last().unwrap();
        for &u in self.rotation(v) {
            if path.contains(&u) {
                continue;
            }
            let is_last = path.len() == k;
            if is_last {
                if !on_cycle.contains(&u) {
                    continue;
                }
            } else if on_cycle.contains(&u) {
                continue;
            }
            path.push(u);
            self.k_chord_dfs(on_cycle, cycle, k, path, out);
            path.pop();
        }
    }

    /// Partitions the faces into the two sides of `cycle`: faces reachable
    /// from one another without crossing a cycle edge share a side.
    /// Returns (faces, side id per face, side containing the outer face).
    fn cycle_sides(&self, cycle: &VertexPath) -> (Vec<FaceWalk>, Vec<usize>, usize) {
        let faces = self.trace_faces();
        let mut face_of: HashMap<(u32, u32), usize> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &e in &f.edges {
                face_of.insert(e, i);
            }
        }
        let mut side = vec![usize::MAX; faces.len()];
        let mut next_side = 0usize;
        for i in 0..faces.len() {
            if side[i] != usize::MAX {
                continue;
            }
            let mut stack = vec![i];
            side[i] = next_side;
            while let Some(f) = stack.pop() {
                for &(u, v) in &faces[f].edges {
                    if cycle.contains_edge(u, v) {
                        continue;
                    }
                    let g = face_of[&(v, u)];
                    if side[g] == usize::MAX {
                        side[g] = next_side;
                        stack.push(g);
                    }
                }
            }
            next_side += 1;
        }
        let outer_edge = match self.outer {
            OuterAnchor::Edge(u, v) => (u, v),
            OuterAnchor::Vertex(_) => {
                // Edgeless anchor component: treat side 0 as outer.
                return (faces, side, 0);
            }
        };
        let outer_side = side[face_of[&outer_edge]];
        (faces, side, outer_side)
    }

    /// The subgraph drawn inside the closed disk bounded by `cycle`, with
    /// the cycle as its outer face (Int_S(G)).  Vertices are relabelled
    /// densely; the second component maps new ids to old.
    pub fn interior_subgraph(
        &self,
        cycle: &VertexPath,
    ) -> Result<(PlaneGraph, Vec<u32>), GraphError> {
        if !cycle.is_closed() || cycle.len() < 3 {
            return Err(GraphError::Argument(
                "interior_subgraph: input is not a cycle".into(),
            ));
        }
        if !self.is_connected() {
            return Err(GraphError::Argument(
                "interior_subgraph: graph must be connected".into(),
            ));
        }
        let (faces, side, outer_side) = self.cycle_sides(cycle);
        let mut face_of: HashMap<(u32, u32), usize> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for &e in &f.edges {
                face_of.insert(e, i);
            }
        }
        // The interior side is the side of a cycle-edge face distinct from
        // the outer side; when the cycle bounds the outer face itself the
        // whole graph is its interior.
        let cv = cycle.verts();
        let inner_face = face_of[&(cv[0], cv[1])];
        let rev_face = face_of[&(cv[1], cv[0])];
        let interior_side = if side[inner_face] != outer_side {
            side[inner_face]
        } else if side[rev_face] != outer_side {
            side[rev_face]
        } else {
            // Both sides contain outer-face material: only possible when the
            // cycle bounds the outer face; the interior is everything.
            side[inner_face]
        };
        let mut keep_vertex = vec![false; self.n()];
        let mut keep_edge: HashSet<(u32, u32)> = HashSet::new();
        for w in cycle.verts() {
            keep_vertex[*w as usize] = true;
        }
        for i in 0..cycle.len() {
            keep_edge.insert((cv[i], cv[i + 1]));
            keep_edge.insert((cv[i + 1], cv[i]));
        }
        for (i, f) in faces.iter().enumerate() {
            if side[i] != interior_side {
                continue;
            }
            for &(u, v) in &f.edges {
                keep_vertex[u as usize] = true;
                keep_vertex[v as usize] = true;
                keep_edge.insert((u, v));
                keep_edge.insert((v, u));
            }
        }
        let mut relabel: Vec<u32> = Vec::new();
        let mut new_id = vec![u32::MAX; self.n()];
        for v in 0..self.n() as u32 {
            if keep_vertex[v as usize] {
                new_id[v as usize] = relabel.len() as u32;
                relabel.push(v);
            }
        }
        let mut rotations: Vec<Vec<u32>> = vec![Vec::new(); relabel.len()];
        for &old in &relabel {
            let rot: Vec<u32> = self
                .rotation(old)
                .iter()
                .filter(|&&u| keep_edge.contains(&(old, u)))
                .map(|&u| new_id[u as usize])
                .collect();
            rotations[new_id[old as usize] as usize] = rot;
        }
        // Anchor: the direction of the first cycle edge whose right face is
        // on the exterior side becomes the outer anchor of the subgraph.
        let anchor = if side[inner_face] == interior_side {
            OuterAnchor::Edge(new_id[cv[1] as usize], new_id[cv[0] as usize])
        } else {
            OuterAnchor::Edge(new_id[cv[0] as usize], new_id[cv[1] as usize])
        };
        let g = PlaneGraph::new(rotations, anchor)?;
        Ok((g, relabel))
    }

    /// Cuts along the path `q` (q_0 on the outer face): every vertex of the
    /// path except the far endpoint splits into a left and a right copy and
    /// the path edges are duplicated, opening a slit into the outer face.
    pub fn cut_along_path(&self, q: &VertexPath) -> Result<CutResult, GraphError> {
        if q.is_closed() || q.len() < 1 {
            return Err(GraphError::Argument(
                "cut_along_path: need an open path with at least one edge".into(),
            ));
        }
        let qs = q.verts();
        let k = q.len();
        let outer = self.outer_walk();
        if outer.is_empty() {
            return Err(GraphError::Argument(
                "cut_along_path: graph has no outer walk".into(),
            ));
        }
        if !outer.vertex_set().contains(&qs[0]) {
            return Err(GraphError::Argument(format!(
                "cut_along_path: q_0 = {} is not on the outer face",
                qs[0]
            )));
        }
        let n = self.n() as u32;
        // Left copy of q_i keeps the original id; right copy is n + i.
        let right = |i: usize| n + i as u32;
        let qpos: HashMap<u32, usize> = qs.iter().enumerate().map(|(i, &v)| (v, i)).collect();

        // The outer corner at q_0: a walk step (x -> q_0), (q_0 -> y) puts
        // the outer face in the wedge between y and x (y just before x in
        // the clockwise rotation of q_0).
        let (gap_x, gap_y) = {
            let m = outer.edges.len();
            let mut found = None;
            for i in 0..m {
                let (_, b) = outer.edges[i];
                if b == qs[0] {
                    let (_, y) = outer.edges[(i + 1) % m];
                    let (x, _) = outer.edges[i];
                    found = Some((x, y));
                    break;
                }
            }
            found.expect("q_0 lies on the outer walk")
        };

        // Split the rotation of q_i into the right-bank and left-bank arcs.
        // Clockwise order at q_i is (q_{i+1}, R_i, boundary, L_i) where the
        // boundary is q_{i-1} for internal i and the outer-face gap at i=0.
        let split_arcs = |i: usize| -> (Vec<u32>, Vec<u32>) {
            let v = qs[i];
            let rot = self.rotation(v);
            let d = rot.len();
            let start = rot
                .iter()
                .position(|&x| x == qs[i + 1])
                .expect("path edge present");
            let mut r_arc = Vec::new();
            let mut l_arc = Vec::new();
            let mut in_r = true;
            for j in 1..d {
                let u = rot[(start + j) % d];
                if i > 0 {
                    if u == qs[i - 1] {
                        in_r = false;
                        continue;
                    }
                } else if in_r && rot[(start + j - 1 + d) % d] == gap_y && u == gap_x {
                    // Crossed the outer gap (between gap_y and gap_x).
                    in_r = false;
                }
                if in_r {
                    r_arc.push(u);
                } else {
                    l_arc.push(u);
                }
            }
            (r_arc, l_arc)
        };

        // Handle the i=0 gap lying immediately after q_1 (empty R_0).
        let split_arcs_fixed = |i: usize| -> (Vec<u32>, Vec<u32>) {
            if i == 0 && gap_y == qs[1] {
                let v = qs[0];
                let rot = self.rotation(v);
                let d = rot.len();
                let start = rot.iter().position(|&x| x == qs[1]).unwrap();
                let l_arc: Vec<u32> = (1..d).map(|j| rot[(start + j) % d]).collect();
                (Vec::new(), l_arc)
            } else {
                split_arcs(i)
            }
        };

        let mut arcs: Vec<(Vec<u32>, Vec<u32>)> = Vec::with_capacity(k);
        for i in 0..k {
            arcs.push(split_arcs_fixed(i));
        }

        // Map a neighbour u of q_i (u in one of the banks' arcs) to its new
        // id: vertices off the path are unchanged; path vertices take the
        // copy on the same bank.
        let resolve = |u: u32, bank_right: bool| -> u32 {
            match qpos.get(&u) {
                Some(&j) if j < k => {
                    if bank_right {
                        right(j)
                    } else {
                        u
                    }
                }
                _ => u,
            }
        };

        let mut rotations: Vec<Vec<u32>> = vec![Vec::new(); self.n() + k];
        for v in 0..self.n() as u32 {
            match qpos.get(&v) {
                Some(&i) if i < k => {
                    let (r_arc, l_arc) = &arcs[i];
                    // Left copy (id v): q_{i+1}^L, then (for i>0) q_{i-1}^L,
                    // then the left arc, all clockwise.
                    let mut lrot: Vec<u32> = Vec::with_capacity(l_arc.len() + 2);
                    lrot.push(if i + 1 == k { qs[k] } else { qs[i + 1] });
                    if i > 0 {
                        lrot.push(qs[i - 1]);
                    }
                    for &u in l_arc {
                        lrot.push(resolve(u, false));
                    }
                    rotations[v as usize] = lrot;
                    // Right copy: q_{i+1}^R, the right arc, then q_{i-1}^R.
                    let mut rrot: Vec<u32> = Vec::with_capacity(r_arc.len() + 2);
                    rrot.push(if i + 1 == k { qs[k] } else { right(i + 1) });
                    for &u in r_arc {
                        rrot.push(resolve(u, true));
                    }
                    if i > 0 {
                        rrot.push(right(i - 1));
                    }
                    rotations[right(i) as usize] = rrot;
                }
                _ => {
                    let mut rot: Vec<u32> = Vec::with_capacity(self.degree(v) + 1);
                    if v == qs[k] {
                        // The far endpoint keeps all edges; the edge to
                        // q_{k-1} splits into the two bank copies, right
                        // bank first in clockwise order.
                        for &u in self.rotation(v) {
                            if u == qs[k - 1] {
                                rot.push(right(k - 1));
                                rot.push(qs[k - 1]);
                            } else {
                                rot.push(u);
                            }
                        }
                    } else {
                        for &u in self.rotation(v) {
                            match qpos.get(&u) {
                                Some(&j) if j < k => {
                                    // Which bank does this edge belong to?
                                    let (r_arc, _) = &arcs[j];
                                    if r_arc.contains(&v) {
                                        rot.push(right(j));
                                    } else {
                                        rot.push(u);
                                    }
                                }
                                _ => rot.push(u),
                            }
                        }
                    }
                    rotations[v as usize] = rot;
                }
            }
        }

        // The outer face contains the wedge at q_0^R between the last
        // rotation entry and q_1^R, so anchor there.
        let r0_rot = &rotations[right(0) as usize];
        let anchor = OuterAnchor::Edge(right(0), *r0_rot.last().unwrap());
        let graph = PlaneGraph::new(rotations, anchor)?;
        let mut relabel: Vec<u32> = (0..n).collect();
        relabel.extend(qs[..k].iter().copied());
        let mut lv: Vec<u32> = qs[..k].to_vec();
        lv.push(qs[k]);
        let mut rv: Vec<u32> = (0..k).map(|i| right(i)).collect();
        rv.push(qs[k]);
        let q_left = VertexPath::new(&graph, lv)?;
        let q_right = VertexPath::new(&graph, rv)?;
        Ok(CutResult { graph, q_left, q_right, relabel })
    }

    /// Splits the boundary of the face `f`: a vertex visited `t` times by
    /// the walk becomes `t` vertices so the walk turns into a simple cycle
    /// of length |f|; everything else is untouched.
    pub fn split_face_to_cycle(&self, f: &FaceWalk) -> Result<SplitResult, GraphError> {
        if f.is_empty() {
            return Err(GraphError::Argument("split_face_to_cycle: empty face".into()));
        }
        // Validate that f is a traced face of this graph.
        let traced = self.trace_faces();
        let m = f.edges.len();
        let is_face = traced.iter().any(|t| {
            t.edges.len() == m
                && (0..m).any(|s| (0..m).all(|j| t.edges[(s + j) % m] == f.edges[j]))
        });
        if !is_face {
            return Err(GraphError::Argument("split_face_to_cycle: not a face".into()));
        }
        let is_outer = match self.outer {
            OuterAnchor::Edge(u, v) => f.contains_directed(u, v),
            OuterAnchor::Vertex(_) => false,
        };

        // Walk instance p: edges[p] = (a, v); the visit of v at p has
        // incoming edges[p] and outgoing edges[p+1].
        let pos_in_f: HashMap<(u32, u32), usize> =
            f.edges.iter().enumerate().map(|(p, &e)| (e, p)).collect();
        let doubled = |u: u32, v: u32| -> bool {
            pos_in_f.contains_key(&(u, v)) && pos_in_f.contains_key(&(v, u))
        };

        // Copies: one per visit; visit of v at walk position p (incoming
        // index).  copy_id[(v, p)] -> new id.
        let on_f: HashSet<u32> = f.vertex_set();
        let mut copy_id: HashMap<(u32, usize), u32> = HashMap::new();
        let mut relabel: Vec<u32> = Vec::new();
        let mut plain_id: HashMap<u32, u32> = HashMap::new();
        for v in 0..self.n() as u32 {
            if !on_f.contains(&v) {
                plain_id.insert(v, relabel.len() as u32);
                relabel.push(v);
            }
        }
        for p in 0..m {
            let (_, v) = f.edges[p];
            copy_id.insert((v, p), relabel.len() as u32);
            relabel.push(v);
        }

        // Slot sequence around an f-vertex: each rotation position becomes
        // one slot, except doubled edges which contribute two (incoming
        // instance first, then outgoing, in clockwise order).
        #[derive(Clone, Copy, PartialEq, Eq, Debug)]
        enum Slot {
            Plain(u32),
            Out(usize),
            In(usize),
        }
        let slots_of = |v: u32| -> Vec<Slot> {
            let mut slots = Vec::new();
            for &u in self.rotation(v) {
                if doubled(v, u) {
                    slots.push(Slot::In(pos_in_f[&(u, v)]));
                    slots.push(Slot::Out(pos_in_f[&(v, u)]));
                } else if let Some(&p) = pos_in_f.get(&(v, u)) {
                    slots.push(Slot::Out(p));
                } else if let Some(&p) = pos_in_f.get(&(u, v)) {
                    slots.push(Slot::In(p));
                } else {
                    slots.push(Slot::Plain(u));
                }
            }
            slots
        };

        // A visit at position p (incoming edges[p] = (a,v), outgoing
        // edges[p+1] = (v,b)) keeps its face corner: Out(p+1) immediately
        // precedes In(p) clockwise, and the copy's arc runs clockwise from
        // just after the previous In slot up to In(p) inclusive.
        let mut rotations: Vec<Vec<u32>> = vec![Vec::new(); relabel.len()];
        // Resolve a slot at vertex v to the new id of the neighbour copy.
        let resolve = |owner_arcs: &HashMap<(u32, usize), (u32, usize)>, v: u32, s: Slot| -> u32 {
            match s {
                Slot::Plain(u) => {
                    if let Some(&id) = plain_id.get(&u) {
                        id
                    } else {
                        // u on f but the edge {v,u} is not a walk edge: the
                        // copy of u owning the slot for edge (u,v).
                        owner_arcs[&(u, v)].0
                    }
                }
                Slot::Out(p) => {
                    // Edge instance edges[p] = (v, b): connects this copy to
                    // the copy of b whose visit is at p (incoming).
                    let (_, b) = f.edges[p];
                    copy_id[&(b, p)]
                }
                Slot::In(p) => {
                    let (a, _) = f.edges[p];
                    // Connects to the copy of a whose visit OUTGOES at p,
                    // i.e. the visit of a with incoming at p-1 position of a.
                    let q = (p + m - 1) % m;
                    copy_id[&(a, q)]
                }
            }
        };

        // owner_arcs[(v, u)] = (copy id of v owning the non-walk edge {v,u},
        // unused) for v on f, u any neighbour via a non-walk edge.
        let mut owner_arcs: HashMap<(u32, usize), (u32, usize)> = HashMap::new();
        let mut owner_plain: HashMap<(u32, u32), u32> = HashMap::new();
        let mut arcs_by_vertex: HashMap<u32, Vec<(usize, Vec<Slot>)>> = HashMap::new();
        for &v in &on_f {
            let slots = slots_of(v);
            let d = slots.len();
            // Visits of v: positions p with edges[p] = (_, v).
            let visits: Vec<usize> = (0..m).filter(|&p| f.edges[p].1 == v).collect();
            let mut arcs: Vec<(usize, Vec<Slot>)> = Vec::new();
            for &p in &visits {
                let end = slots
                    .iter()
                    .position(|&s| s == Slot::In(p))
                    .expect("incoming slot exists");
                let mut arc = vec![slots[end]];
                for j in 1..d {
                    let s = slots[(end + d - j) % d];
                    if let Slot::In(_) = s {
                        break;
                    }
                    arc.push(s);
                }
                arc.reverse();
                arcs.push((p, arc));
            }
            for (p, arc) in &arcs {
                let cid = copy_id[&(v, *p)];
                for s in arc {
                    if let Slot::Plain(u) = s {
                        owner_plain.insert((v, *u), cid);
                    }
                }
            }
            arcs_by_vertex.insert(v, arcs);
        }
        for ((v, u), cid) in &owner_plain {
            owner_arcs.insert((*v, *u), (*cid, 0));
        }

        for (&v, arcs) in &arcs_by_vertex {
            for (p, arc) in arcs {
                let cid = copy_id[&(v, *p)];
                let rot: Vec<u32> = arc.iter().map(|&s| resolve(&owner_arcs, v, s)).collect();
                rotations[cid as usize] = rot;
            }
        }
        for v in 0..self.n() as u32 {
            if on_f.contains(&v) {
                continue;
            }
            let rot: Vec<u32> = self
                .rotation(v)
                .iter()
                .map(|&u| {
                    if let Some(&id) = plain_id.get(&u) {
                        id
                    } else {
                        owner_arcs[&(u, v)].0
                    }
                })
                .collect();
            rotations[plain_id[&v] as usize] = rot;
        }

        // Cycle C: the copies in walk order; edge instance p joins the copy
        // outgoing at p to the copy incoming at p.
        let mut cyc: Vec<u32> = Vec::with_capacity(m + 1);
        for p in 0..m {
            let (_, v) = f.edges[p];
            cyc.push(copy_id[&(v, p)]);
        }
        cyc.push(cyc[0]);

        let anchor = if is_outer {
            // The split side becomes the outer face: the face to the right
            // of instance 0's new edge.
            let (_, v0) = f.edges[0];
            let p_prev = (m - 1) % m;
            let (_, a0) = f.edges[p_prev];
            OuterAnchor::Edge(copy_id[&(a0, p_prev)], copy_id[&(v0, 0)])
        } else {
            match self.outer {
                OuterAnchor::Edge(u, v) => {
                    let nu = if let Some(&id) = plain_id.get(&u) {
                        id
                    } else if let Some(&p) = pos_in_f.get(&(v, u)) {
                        // Walk edge in the single direction (v,u).
                        copy_id[&(u, p)]
                    } else {
                        owner_arcs[&(u, v)].0
                    };
                    let nv = if let Some(&id) = plain_id.get(&v) {
                        id
                    } else if let Some(&p) = pos_in_f.get(&(v, u)) {
                        let q = (p + m - 1) % m;
                        copy_id[&(v, q)]
                    } else {
                        owner_arcs[&(v, u)].0
                    };
                    OuterAnchor::Edge(nu, nv)
                }
                a @ OuterAnchor::Vertex(_) => a,
            }
        };

        let graph = PlaneGraph::new(rotations, anchor)?;
        let cycle = VertexPath::new(&graph, cyc)?;
        Ok(SplitResult { graph, cycle, relabel })
    }
}
