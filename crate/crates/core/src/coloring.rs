//! Exact list-coloring: extension solving, non-extendable precolorings,
//! T-criticality with certificates, and validity predicates.

use crate::plane_graph::{GraphError, PlaneGraph, VertexPath};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("fixed color {color} of vertex {vertex} is not in its list")]
    FixedOutsideList { vertex: u32, color: u32 },
    #[error("list assignment covers {have} vertices, graph has {want}")]
    WrongSize { have: usize, want: usize },
    #[error("color universe exceeds 64 distinct colors")]
    UniverseTooLarge,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Per-vertex sorted color sets.  Empty lists are legal and simply make the
/// instance unsatisfiable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(mut lists: Vec<Vec<u32>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// All vertices get the same list.
    pub fn uniform(n: usize, colors: &[u32]) -> Self {
        Self::new(vec![colors.to_vec(); n])
    }

    pub fn n(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: u32) -> &[u32] {
        &self.lists[v as usize]
    }

    pub fn set_list(&mut self, v: u32, colors: &[u32]) {
        let mut l = colors.to_vec();
        l.sort_unstable();
        l.dedup();
        self.lists[v as usize] = l;
    }

    pub fn size(&self, v: u32) -> usize {
        self.lists[v as usize].len()
    }

    /// The sorted union of all lists.
    pub fn universe(&self) -> Vec<u32> {
        let mut u: Vec<u32> = self.lists.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    /// LST/1: one `v: c1 c2 ...` line per vertex.
    pub fn to_lst(&self) -> String {
        let mut s = String::new();
        for (v, l) in self.lists.iter().enumerate() {
            s.push_str(&v.to_string());
            s.push(':');
            for c in l {
                s.push(' ');
                s.push_str(&c.to_string());
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_lst(text: &str, n: usize) -> Result<Self, ColoringError> {
        let mut lists = vec![Vec::new(); n];
        let mut filled = vec![false; n];
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or(ColoringError::Parse {
                line: i + 1,
                msg: "expected `v: colors`".into(),
            })?;
            let v: usize = head.trim().parse().map_err(|_| ColoringError::Parse {
                line: i + 1,
                msg: format!("bad vertex id {head:?}"),
            })?;
            if v >= n {
                return Err(ColoringError::Parse {
                    line: i + 1,
                    msg: format!("vertex {v} out of range (n={n})"),
                });
            }
            if filled[v] {
                return Err(ColoringError::Parse {
                    line: i + 1,
                    msg: format!("duplicate list for vertex {v}"),
                });
            }
            filled[v] = true;
            for tok in tail.split_whitespace() {
                let c: u32 = tok.parse().map_err(|_| ColoringError::Parse {
                    line: i + 1,
                    msg: format!("bad color {tok:?}"),
                })?;
                lists[v].push(c);
            }
        }
        if let Some(v) = filled.iter().position(|&f| !f) {
            return Err(ColoringError::Parse {
                line: 0,
                msg: format!("missing list for vertex {v}"),
            });
        }
        Ok(Self::new(lists))
    }
}

/// A partial proper color mapping on an explicit vertex subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Precoloring {
    map: BTreeMap<u32, u32>,
}

impl Precoloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        Precoloring { map: pairs.iter().copied().collect() }
    }

    pub fn set(&mut self, v: u32, c: u32) {
        self.map.insert(v, c);
    }

    pub fn get(&self, v: u32) -> Option<u32> {
        self.map.get(&v).copied()
    }

    pub fn domain(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.map.iter().map(|(&v, &c)| (v, c))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `v=c` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in &self.map {
            s.push_str(&format!("{v}={c}\n"));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut map = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (v, c) = line.split_once('=').ok_or(ColoringError::Parse {
                line: i + 1,
                msg: "expected `v=c`".into(),
            })?;
            let v: u32 = v.trim().parse().map_err(|_| ColoringError::Parse {
                line: i + 1,
                msg: format!("bad vertex {v:?}"),
            })?;
            let c: u32 = c.trim().parse().map_err(|_| ColoringError::Parse {
                line: i + 1,
                msg: format!("bad color {c:?}"),
            })?;
            map.insert(v, c);
        }
        Ok(Precoloring { map })
    }
}

/// A total coloring, in the original color names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    /// Soundness check: proper on `g` and within `l`.
    pub fn verify(&self, g: &PlaneGraph, l: &ListAssignment) -> bool {
        if self.0.len() != g.n() {
            return false;
        }
        for v in 0..g.n() as u32 {
            if !l.list(v).contains(&self.0[v as usize]) {
                return false;
            }
            for &u in g.rotation(v) {
                if self.0[u as usize] == self.0[v as usize] {
                    return false;
                }
            }
        }
        true
    }
}

/// A subgraph T of G given explicitly: precolorings must be proper on
/// E(T) only, and T's edges are never deleted by criticality testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphT {
    pub verts: Vec<u32>,
    pub edges: Vec<(u32, u32)>,
}

impl SubgraphT {
    pub fn from_path(p: &VertexPath) -> Self {
        let vs = p.verts();
        let mut verts: Vec<u32> = p.vertex_set().into_iter().collect();
        verts.sort_unstable();
        let mut edges = Vec::new();
        for w in vs.windows(2) {
            edges.push(norm(w[0], w[1]));
        }
        edges.sort_unstable();
        edges.dedup();
        SubgraphT { verts, edges }
    }

    pub fn single_vertex(v: u32) -> Self {
        SubgraphT { verts: vec![v], edges: Vec::new() }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edges.contains(&norm(u, v))
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.verts.contains(&v)
    }
}

fn norm(u: u32, v: u32) -> (u32, u32) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// One witness per maximal proper subgraph: a precoloring of T extending to
/// the reduced graph but not to G.
#[derive(Debug, Clone)]
pub struct CriticalityCertificate {
    /// (deleted edge, witness) pairs.
    pub edge_witnesses: Vec<((u32, u32), Precoloring)>,
    /// (deleted isolated vertex, witness) pairs.
    pub vertex_witnesses: Vec<(u32, Precoloring)>,
}

/// Internal exact solver state over normalized color masks.
struct Csp<'a> {
    adj: &'a [Vec<u32>],
    masks: Vec<u64>,
    assigned: Vec<Option<u8>>,
}

impl<'a> Csp<'a> {
    fn new(adj: &'a [Vec<u32>], masks: Vec<u64>) -> Self {
        let n = adj.len();
        Csp { adj, masks, assigned: vec![None; n] }
    }

    /// Exhaustive backtracking with minimum-remaining-values ordering.
    /// Returns the first solution in deterministic order, if any.
    fn solve(&mut self) -> Option<Vec<u8>> {
        // Pre-assign forced vertices and fail fast on empty masks.
        if self.search() {
            Some(self.assigned.iter().map(|a| a.unwrap()).collect())
        } else {
            None
        }
    }

    fn search(&mut self) -> bool {
        // MRV choice; ties by vertex id.
        let mut best: Option<(u32, usize)> = None;
        for v in 0..self.adj.len() {
            if self.assigned[v].is_some() {
                continue;
            }
            let cnt = self.masks[v].count_ones() as usize;
            if cnt == 0 {
                return false;
            }
            if best.is_none_or(|(_, b)| cnt < b) {
                best = Some((v as u32, cnt));
                if cnt == 1 {
                    break;
                }
            }
        }
        let Some((v, _)) = best else {
            return true; // everything assigned
        };
        let avail = self.masks[v as usize];
        let mut m = avail;
        while m != 0 {
            let c = m.trailing_zeros() as u8;
            m &= m - 1;
            self.assigned[v as usize] = Some(c);
            let bit = 1u64 << c;
            let mut touched: Vec<u32> = Vec::new();
            let mut dead = false;
            for &u in &self.adj[v as usize] {
                let u = u as usize;
                if self.assigned[u].is_none() && self.masks[u] & bit != 0 {
                    self.masks[u] &= !bit;
                    touched.push(u as u32);
                    if self.masks[u] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead && self.search() {
                return true;
            }
            for &u in &touched {
                self.masks[u as usize] |= bit;
            }
            self.assigned[v as usize] = None;
        }
        false
    }
}

fn normalize(
    g: &PlaneGraph,
    l: &ListAssignment,
) -> Result<(Vec<Vec<u32>>, Vec<u64>, Vec<u32>), ColoringError> {
    if l.n() != g.n() {
        return Err(ColoringError::WrongSize { have: l.n(), want: g.n() });
    }
    let universe = l.universe();
    if universe.len() > 64 {
        return Err(ColoringError::UniverseTooLarge);
    }
    let index: BTreeMap<u32, u8> = universe
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u8))
        .collect();
    let masks: Vec<u64> = (0..g.n() as u32)
        .map(|v| {
            l.list(v)
                .iter()
                .fold(0u64, |m, c| m | (1u64 << index[c]))
        })
        .collect();
    let adj: Vec<Vec<u32>> = (0..g.n() as u32).map(|v| g.rotation(v).to_vec()).collect();
    Ok((adj, masks, universe))
}

/// Exact extension solving: a proper total coloring within `l` extending
/// `fixed`, or `None` iff none exists.  A `fixed` that already clashes on an
/// edge of `g` yields `None`; a fixed color outside its list is an error.
pub fn solve_extension(
    g: &PlaneGraph,
    l: &ListAssignment,
    fixed: &Precoloring,
) -> Result<Option<Coloring>, ColoringError> {
    let (adj, mut masks, universe) = normalize(g, l)?;
    for (v, c) in fixed.iter() {
        if !l.list(v).contains(&c) {
            return Err(ColoringError::FixedOutsideList { vertex: v, color: c });
        }
    }
    // Collapse fixed vertices to singletons; a clash surfaces as UNSAT.
    let index: BTreeMap<u32, u8> = universe
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i as u8))
        .collect();
    for (v, c) in fixed.iter() {
        masks[v as usize] = 1u64 << index[&c];
    }
    let mut csp = Csp::new(&adj, masks);
    Ok(csp.solve().map(|sol| {
        Coloring(sol.into_iter().map(|c| universe[c as usize]).collect())
    }))
}

/// Enumerates the proper L-colorings of T (proper on E(T) only).
pub fn precolorings_of(t: &SubgraphT, l: &ListAssignment) -> Vec<Precoloring> {
    let mut out = Vec::new();
    let mut cur: Vec<(u32, u32)> = Vec::new();
    fn rec(
        t: &SubgraphT,
        l: &ListAssignment,
        i: usize,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Precoloring>,
    ) {
        if i == t.verts.len() {
            out.push(Precoloring::from_pairs(cur));
            return;
        }
        let v = t.verts[i];
        'colors: for &c in l.list(v) {
            for &(u, uc) in cur.iter() {
                if uc == c && t.has_edge(u, v) {
                    continue 'colors;
                }
            }
            cur.push((v, c));
            rec(t, l, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(t, l, 0, &mut cur, &mut out);
    out
}

/// Exactly the proper L-colorings of `t` that do not extend to `g`.
pub fn nonextendable_precolorings(
    g: &PlaneGraph,
    t: &SubgraphT,
    l: &ListAssignment,
) -> Result<Vec<Precoloring>, ColoringError> {
    let mut out = Vec::new();
    for psi in precolorings_of(t, l) {
        if solve_extension(g, l, &psi)?.is_none() {
            out.push(psi);
        }
    }
    Ok(out)
}

/// Deletes one edge from a plane graph (rotation-local).
pub fn delete_edge(g: &PlaneGraph, u: u32, v: u32) -> PlaneGraph {
    let n = g.n();
    let rotations: Vec<Vec<u32>> = (0..n as u32)
        .map(|x| {
            g.rotation(x)
                .iter()
                .copied()
                .filter(|&y| !(x == u && y == v || x == v && y == u))
                .collect()
        })
        .collect();
    let anchor = match g.outer_anchor() {
        crate::plane_graph::OuterAnchor::Edge(a, b)
            if (a == u && b == v) || (a == v && b == u) =>
        {
            // Re-anchor on a surviving outer-walk edge; deleting an outer
            // edge merges its two faces, so any other outer edge still
            // bounds the (enlarged) outer face.
            let w = g.outer_walk();
            w.edges
                .iter()
                .copied()
                .find(|&(x, y)| !(x == u && y == v || x == v && y == u))
                .map(|(x, y)| crate::plane_graph::OuterAnchor::Edge(x, y))
                .unwrap_or(crate::plane_graph::OuterAnchor::Vertex(u))
        }
        a => a,
    };
    PlaneGraph::new(rotations, anchor).expect("edge deletion keeps the embedding valid")
}

/// T-criticality: true iff every maximal proper subgraph containing T
/// (single-edge deletions off E(T), single isolated-vertex deletions off
/// V(T)) admits a precoloring of T extending to it but not to G.
pub fn is_t_critical(
    g: &PlaneGraph,
    t: &SubgraphT,
    l: &ListAssignment,
) -> Result<(bool, CriticalityCertificate), ColoringError> {
    let deletable_edges: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| !t.has_edge(u, v))
        .collect();
    let deletable_verts: Vec<u32> = (0..g.n() as u32)
        .filter(|&v| g.degree(v) == 0 && !t.contains_vertex(v))
        .collect();
    if deletable_edges.is_empty() && deletable_verts.is_empty() {
        return Err(ColoringError::Graph(GraphError::Argument(
            "is_t_critical: G has no deletable part outside T".into(),
        )));
    }
    // Precolorings that do not extend to G, computed once.
    let bad = nonextendable_precolorings(g, t, l)?;
    let mut cert = CriticalityCertificate {
        edge_witnesses: Vec::new(),
        vertex_witnesses: Vec::new(),
    };
    let mut ok = true;
    for &(u, v) in &deletable_edges {
        let reduced = delete_edge(g, u, v);
        let mut found = None;
        for psi in &bad {
            if solve_extension(&reduced, l, psi)?.is_some() {
                found = Some(psi.clone());
                break;
            }
        }
        match found {
            Some(psi) => cert.edge_witnesses.push(((u, v), psi)),
            None => {
                ok = false;
                break;
            }
        }
    }
    if ok {
        for &v in &deletable_verts {
            // Deleting an isolated vertex: extension to G - v is extension
            // of psi restricted, with v ignored; it succeeds iff psi extends
            // on the rest and fails on G iff L(v) is empty.
            let mut found = None;
            for psi in &bad {
                // G - v: solve on g with v's list replaced by a throwaway
                // color unique to v.
                let mut l2 = l.clone();
                l2.set_list(v, &[u32::MAX]);
                if solve_extension(g, &l2, psi)?.is_some() {
                    found = Some(psi.clone());
                    break;
                }
            }
            match found {
                Some(psi) => cert.vertex_witnesses.push((v, psi)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
    }
    Ok((ok, cert))
}

/// S(v) = L(v) minus the colors of v's colored neighbours; colored vertices
/// collapse to singletons.
pub fn reduced_lists(g: &PlaneGraph, l: &ListAssignment, fixed: &Precoloring) -> ListAssignment {
    let mut lists: Vec<Vec<u32>> = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        if let Some(c) = fixed.get(v) {
            lists.push(vec![c]);
            continue;
        }
        let forbidden: BTreeSet<u32> = g
            .rotation(v)
            .iter()
            .filter_map(|&u| fixed.get(u))
            .collect();
        lists.push(
            l.list(v)
                .iter()
                .copied()
                .filter(|c| !forbidden.contains(c))
                .collect(),
        );
    }
    ListAssignment::new(lists)
}

/// The five conditions for L to be M-valid with respect to P and X.
pub fn is_valid_assignment(
    g: &PlaneGraph,
    p: &VertexPath,
    x: &[u32],
    l: &ListAssignment,
    m: usize,
) -> Result<bool, ColoringError> {
    let outer: BTreeSet<u32> = g.outer_walk().vertex_set().into_iter().collect();
    for v in p.vertex_set() {
        if !outer.contains(&v) {
            return Err(ColoringError::Graph(GraphError::Argument(format!(
                "path vertex {v} is not on the outer face"
            ))));
        }
    }
    let pset = p.vertex_set();
    let xset: BTreeSet<u32> = x.iter().copied().collect();
    for v in 0..g.n() as u32 {
        let s = l.size(v);
        if xset.contains(&v) {
            if s != 1 {
                return Ok(false);
            }
        } else if pset.contains(&v) {
            // No size constraint on P vertices.
        } else if outer.contains(&v) {
            if !(3..=5).contains(&s) {
                return Ok(false);
            }
        } else if s != 5 {
            return Ok(false);
        }
    }
    // G[V(P) ∪ X] must be L-colorable.
    let mut keep: BTreeSet<u32> = pset.iter().copied().collect();
    keep.extend(xset.iter().copied());
    let mut sub = SubgraphT {
        verts: keep.iter().copied().collect(),
        edges: Vec::new(),
    };
    for &u in &sub.verts.clone() {
        for &v in g.rotation(u) {
            if u < v && keep.contains(&v) {
                sub.edges.push((u, v));
            }
        }
    }
    if precolorings_of(&sub, l).is_empty() {
        return Ok(false);
    }
    // Distance-M buffer around each x.
    for &xv in &xset {
        let dist = g.distances_from(xv);
        for v in 0..g.n() as u32 {
            if v == xv || dist[v as usize] > m {
                continue;
            }
            if pset.contains(&v) {
                return Ok(false);
            }
            if l.size(v) != 5 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
