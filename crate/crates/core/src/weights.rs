//! The weight function on vertices and faces of a plane graph with a
//! precolored boundary subgraph, and exact-rational checkers for the
//! inequalities the catalogs must satisfy.

use crate::coloring::ListAssignment;
use crate::plane_graph::{GraphError, PlaneGraph, VertexPath};
use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

/// Per-face and per-vertex weights plus their total.
#[derive(Debug, Clone, Serialize)]
pub struct WeightReport {
    /// (face length, weight) for every internal face; the outer face has
    /// weight 0 and is omitted.
    pub face_weights: Vec<(usize, i64)>,
    /// (vertex, weight) for vertices of nonzero weight.
    pub vertex_weights: Vec<(u32, i64)>,
    pub total: i64,
}

impl WeightReport {
    pub fn total_rational(&self) -> Rational64 {
        Rational64::from_integer(self.total)
    }
}

/// Result of one bound check, kept exact: `lhs <= rhs` decided in rationals.
#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    /// rhs - lhs as an exact rational string.
    pub slack: String,
    /// Side conditions of the statement that the input fails to meet; the
    /// check is still evaluated but should be read as inapplicable.
    pub hypothesis_warnings: Vec<String>,
}

fn check(name: &str, lhs: Rational64, rhs: Rational64, warnings: Vec<String>) -> BoundCheck {
    BoundCheck {
        name: name.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        holds: lhs <= rhs,
        slack: (rhs - lhs).to_string(),
        hypothesis_warnings: warnings,
    }
}

/// ω_{P,L}(G): |f|-3 per internal face; cut-vertex indicator on P-vertices;
/// |L(v)|-3 on outer non-P vertices; 0 elsewhere.
pub fn compute_weight(
    g: &PlaneGraph,
    p: &VertexPath,
    l: &ListAssignment,
) -> Result<WeightReport, GraphError> {
    let outer = g.outer_walk();
    let outer_set = outer.vertex_set();
    for v in p.vertex_set() {
        if !outer_set.contains(&v) {
            return Err(GraphError::Argument(format!(
                "compute_weight: path vertex {v} is not on the outer face"
            )));
        }
    }
    let pset = p.vertex_set();
    let cuts = g.cut_vertices();
    let mut face_weights = Vec::new();
    let mut total = 0i64;
    for f in g.internal_faces() {
        let w = f.len() as i64 - 3;
        face_weights.push((f.len(), w));
        total += w;
    }
    let mut vertex_weights = Vec::new();
    for v in 0..g.n() as u32 {
        let w = if pset.contains(&v) {
            i64::from(cuts.contains(&v))
        } else if outer_set.contains(&v) {
            l.size(v) as i64 - 3
        } else {
            0
        };
        if w != 0 {
            vertex_weights.push((v, w));
        }
        total += w;
    }
    Ok(WeightReport { face_weights, vertex_weights, total })
}

/// ω_{H,L}(G) + |V(G)\V(H)| / (2|H|+2)  <=  |H| - 9/2, for an H-critical
/// plane graph with outer cycle H and interior lists of size >= 5 that is
/// not H plus a single chord.  Side conditions are reported as warnings.
pub fn check_preouf(g: &PlaneGraph, l: &ListAssignment) -> Result<BoundCheck, GraphError> {
    let mut warnings = Vec::new();
    let Some(h) = g.outer_cycle() else {
        return Err(GraphError::Argument(
            "check_preouf: outer face is not bounded by a cycle".into(),
        ));
    };
    let hlen = h.len() as i64;
    let hset = h.vertex_set();
    let n_int = (g.n() - hset.len()) as i64;
    for v in 0..g.n() as u32 {
        if !hset.contains(&v) && l.size(v) < 5 {
            warnings.push(format!("interior vertex {v} has list of size {}", l.size(v)));
        }
    }
    if n_int == 0 && g.edge_count() as i64 == hlen + 1 {
        warnings.push("graph is H plus a single chord, excluded by the bound".into());
    }
    let w = compute_weight(g, &h, l)?;
    let lhs = w.total_rational() + Rational64::new(n_int, 2 * hlen + 2);
    let rhs = Rational64::new(2 * hlen - 9, 2);
    Ok(check("preouf", lhs, rhs, warnings))
}

/// ω_{P,L}(G) <= ℓ(P) - 2 for a P-critical graph with a valid assignment.
pub fn check_prepathw(
    g: &PlaneGraph,
    p: &VertexPath,
    l: &ListAssignment,
) -> Result<BoundCheck, GraphError> {
    let w = compute_weight(g, p, l)?;
    let lhs = w.total_rational();
    let rhs = Rational64::from_integer(p.len() as i64 - 2);
    Ok(check("prepathw", lhs, rhs, Vec::new()))
}

/// Σ_f (|f|^2 - 2) <= 4n^2 - 8n + 2 for a connected plane graph.
pub fn check_qsum(h: &PlaneGraph) -> Result<BoundCheck, GraphError> {
    if !h.is_connected() {
        return Err(GraphError::Argument("check_qsum: graph must be connected".into()));
    }
    let n = h.n() as i64;
    let mut lhs = Rational64::zero();
    if h.edge_count() == 0 {
        // A single vertex has one face of length 0.
        lhs += Rational64::from_integer(-2);
    }
    for f in h.trace_faces() {
        let fl = f.len() as i64;
        lhs += Rational64::from_integer(fl * fl - 2);
    }
    let rhs = Rational64::from_integer(4 * n * n - 8 * n + 2);
    Ok(check("qsum", lhs, rhs, Vec::new()))
}

/// Which size bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeBoundMode {
    /// |V(G)| <= 8 |V(H)|^2 (critical subgraph against a connected H).
    ConnSg,
    /// |V(G)| <= 8 ℓ(P)^2 (P-critical, no two size-3 lists adjacent).
    BoundSize,
}

pub fn check_size_bounds(
    g: &PlaneGraph,
    boundary_len: usize,
    l: &ListAssignment,
    mode: SizeBoundMode,
) -> Result<BoundCheck, GraphError> {
    let mut warnings = Vec::new();
    if mode == SizeBoundMode::BoundSize {
        for (u, v) in g.edges() {
            if l.size(u) == 3 && l.size(v) == 3 {
                warnings.push(format!(
                    "adjacent size-3 lists at {u} and {v} violate the independence hypothesis"
                ));
                break;
            }
        }
    }
    let b = boundary_len as i64;
    let lhs = Rational64::from_integer(g.n() as i64);
    let rhs = Rational64::from_integer(8 * b * b);
    let name = match mode {
        SizeBoundMode::ConnSg => "connsg",
        SizeBoundMode::BoundSize => "boundsize",
    };
    Ok(check(name, lhs, rhs, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::OuterAnchor;

    fn lists_uniform5(n: usize) -> ListAssignment {
        ListAssignment::uniform(n, &[1, 2, 3, 4, 5])
    }

    #[test]
    fn wheel_weight_is_zero() {
        let g = PlaneGraph::wheel(5, &[0, 1, 2, 3, 4]);
        let rim = g.outer_cycle().unwrap();
        let w = compute_weight(&g, &rim, &lists_uniform5(6)).unwrap();
        assert_eq!(w.total, 0);
        assert_eq!(w.face_weights.len(), 5);
    }

    #[test]
    fn cycle_with_chord_weight() {
        // C6 with a chord 0-2: faces of length 3 and 5; omega = |C| - 4 = 2.
        let mut rotations: Vec<Vec<u32>> = (0..6)
            .map(|i| vec![((i + 5) % 6) as u32, ((i + 1) % 6) as u32])
            .collect();
        rotations[0] = vec![5, 1, 2];
        rotations[2] = vec![1, 0, 3];
        let g = PlaneGraph::new(rotations, OuterAnchor::Edge(0, 5)).unwrap();
        let c = g.outer_cycle().unwrap();
        assert_eq!(c.len(), 6);
        let w = compute_weight(&g, &c, &lists_uniform5(6)).unwrap();
        assert_eq!(w.total, 6 - 4);
    }

    #[test]
    fn facial_cycle_weight() {
        for n in 3..9 {
            let g = PlaneGraph::cycle(n);
            let c = g.outer_cycle().unwrap();
            let w = compute_weight(&g, &c, &lists_uniform5(n)).unwrap();
            assert_eq!(w.total, n as i64 - 3);
        }
    }

    #[test]
    fn preouf_on_the_wheel() {
        let g = PlaneGraph::wheel(5, &[0, 1, 2, 3, 4]);
        let c = check_preouf(&g, &lists_uniform5(6)).unwrap();
        assert!(c.holds);
        assert!(c.hypothesis_warnings.is_empty());
        // 0 + 1/12 <= 1/2
        assert_eq!(c.lhs, "1/12");
        assert_eq!(c.rhs, "1/2");
    }

    #[test]
    fn qsum_tree_equality() {
        // A tree has one face of length 2n-2, attaining the bound.
        for n in 2..=12 {
            let g = PlaneGraph::path(n);
            let c = check_qsum(&g).unwrap();
            assert!(c.holds, "n={n}");
            assert_eq!(c.slack, "0", "n={n}");
        }
    }

    #[test]
    fn qsum_examples() {
        // Triangle: (9-2)+(9-2) = 14 = 4*9-24+2.
        let c = check_qsum(&PlaneGraph::cycle(3)).unwrap();
        assert_eq!(c.lhs, "14");
        assert_eq!(c.rhs, "14");
        // K4: 4*(9-2) = 28 <= 34.
        let c = check_qsum(&PlaneGraph::k4()).unwrap();
        assert_eq!(c.lhs, "28");
        assert_eq!(c.rhs, "34");
        assert!(c.holds);
    }
}
