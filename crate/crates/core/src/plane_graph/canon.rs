//! Canonical byte strings for plane graphs with a marked outer face.
//!
//! Two graphs get equal strings iff they are isomorphic as embedded plane
//! graphs with the same outer face and marks, up to reflection.  The code is
//! the minimum, over all outer-face root edges and both chiralities, of a
//! breadth-first encoding of the rotation system.

use super::{OuterAnchor, PlaneGraph};

impl PlaneGraph {
    /// Canonical byte string; `marks` gives an optional per-vertex label that
    /// must be preserved by isomorphisms (e.g. list sizes or path positions).
    pub fn canonical_form(&self, marks: Option<&[u32]>) -> Vec<u8> {
        if let OuterAnchor::Vertex(v) = self.outer {
            // Edgeless anchor component: encode components count and marks.
            let mut code = vec![0xffu8];
            code.extend((self.n() as u32).to_be_bytes());
            if let Some(m) = marks {
                code.extend(m[v as usize].to_be_bytes());
            }
            return code;
        }
        let outer = self.outer_walk();
        let mut best: Option<Vec<u8>> = None;
        for &(u, v) in &outer.edges {
            for flip in [false, true] {
                // A reflection reverses both the rotations and the outer walk;
                // rooting flipped codes at reversed outer edges covers it.
                let root = if flip { (v, u) } else { (u, v) };
                let code = self.rooted_code(root, flip, marks);
                if best.as_ref().is_none_or(|b| code < *b) {
                    best = Some(code);
                }
            }
        }
        best.expect("outer walk of an anchored graph is nonempty")
    }

    fn rooted_code(&self, root: (u32, u32), flip: bool, marks: Option<&[u32]>) -> Vec<u8> {
        let n = self.n();
        let mut label = vec![u32::MAX; n];
        let mut order: Vec<u32> = Vec::with_capacity(n);
        let mut entry: Vec<u32> = vec![u32::MAX; n];
        let (r0, r1) = root;
        label[r0 as usize] = 0;
        order.push(r0);
        entry[r0 as usize] = r1;
        let mut code: Vec<u8> = Vec::new();
        let mut next_label = 1u32;
        let mut i = 0usize;
        while i < order.len() {
            let v = order[i];
            i += 1;
            let rot = &self.rotations[v as usize];
            let d = rot.len();
            let e = entry[v as usize];
            let start = rot.iter().position(|&x| x == e).expect("entry neighbour");
            code.push(0xfe); // vertex separator
            for j in 0..d {
                let idx = if flip {
                    (start + d - j) % d
                } else {
                    (start + j) % d
                };
                let u = rot[idx];
                if label[u as usize] == u32::MAX {
                    label[u as usize] = next_label;
                    next_label += 1;
                    order.push(u);
                    entry[u as usize] = v;
                }
                code.extend(label[u as usize].to_be_bytes());
            }
        }
        // Unreached vertices would mean a disconnected graph; encode count so
        // graphs with extra components differ.
        code.push(0xfd);
        code.extend((n as u32).to_be_bytes());
        if let Some(m) = marks {
            for &v in &order {
                code.extend(m[v as usize].to_be_bytes());
            }
        }
        code
    }
}

/// Test oracle: decides plane-graph isomorphism (fixed outer face, optional
/// marks, reflections allowed) by trying every vertex bijection.  Only
/// sensible for small graphs.
pub fn brute_force_isomorphic(
    a: &PlaneGraph,
    am: Option<&[u32]>,
    b: &PlaneGraph,
    bm: Option<&[u32]>,
) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    loop {
        for flip in [false, true] {
            if check_map(a, am, b, bm, &perm, flip) {
                return true;
            }
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn check_map(
    a: &PlaneGraph,
    am: Option<&[u32]>,
    b: &PlaneGraph,
    bm: Option<&[u32]>,
    perm: &[u32],
    flip: bool,
) -> bool {
    let n = a.n();
    if let (Some(x), Some(y)) = (am, bm) {
        for v in 0..n {
            if x[v] != y[perm[v] as usize] {
                return false;
            }
        }
    }
    for v in 0..n {
        let ra = a.rotation(v as u32);
        let rb = b.rotation(perm[v]);
        if ra.len() != rb.len() {
            return false;
        }
        if ra.is_empty() {
            continue;
        }
        let mapped: Vec<u32> = ra.iter().map(|&u| perm[u as usize]).collect();
        // rb must equal mapped up to cyclic rotation (reversed when flipped).
        let target: Vec<u32> = if flip {
            mapped.iter().rev().copied().collect()
        } else {
            mapped
        };
        let d = target.len();
        let ok = (0..d).any(|s| (0..d).all(|j| rb[j] == target[(s + j) % d]));
        if !ok {
            return false;
        }
    }
    // The outer face must map to the outer face.
    let wa = a.outer_walk();
    let wb = b.outer_walk();
    if wa.len() != wb.len() {
        return false;
    }
    if wa.is_empty() {
        return true;
    }
    let (u, v) = wa.edges[0];
    let img = if flip {
        (perm[v as usize], perm[u as usize])
    } else {
        (perm[u as usize], perm[v as usize])
    };
    wb.contains_directed(img.0, img.1)
}

fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
