//! PLG/1: line-oriented plane-graph text format.
//!
//! ```text
//! n
//! 0: 1 2 3
//! ...
//! outer: 0>1        (or `outer: vertex 0` for edgeless components)
//! ```

use super::{GraphError, OuterAnchor, PlaneGraph};
use std::fmt::Write as _;

impl PlaneGraph {
    /// Serialises to PLG/1.  `parse_plg(to_plg(g)) == g` bit-exactly.
    pub fn to_plg(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.n());
        for (v, rot) in self.rotations.iter().enumerate() {
            let _ = write!(s, "{v}:");
            for &u in rot {
                let _ = write!(s, " {u}");
            }
            s.push('\n');
        }
        match self.outer {
            OuterAnchor::Edge(u, v) => {
                let _ = writeln!(s, "outer: {u}>{v}");
            }
            OuterAnchor::Vertex(u) => {
                let _ = writeln!(s, "outer: vertex {u}");
            }
        }
        s
    }

    pub fn parse_plg(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate();
        let (_, first) = lines
            .next()
            .ok_or(GraphError::Parse { line: 1, msg: "empty input".into() })?;
        let n: usize = first.trim().parse().map_err(|_| GraphError::Parse {
            line: 1,
            msg: format!("expected vertex count, got {first:?}"),
        })?;
        let mut rotations: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut filled = vec![false; n];
        let mut outer: Option<OuterAnchor> = None;
        for (i, line) in lines {
            let lineno = i + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("outer:") {
                let rest = rest.trim();
                if let Some(v) = rest.strip_prefix("vertex ") {
                    let v: u32 = v.trim().parse().map_err(|_| GraphError::Parse {
                        line: lineno,
                        msg: format!("bad outer vertex {rest:?}"),
                    })?;
                    outer = Some(OuterAnchor::Vertex(v));
                } else {
                    let (u, v) = rest.split_once('>').ok_or_else(|| GraphError::Parse {
                        line: lineno,
                        msg: format!("expected u>v, got {rest:?}"),
                    })?;
                    let u: u32 = u.trim().parse().map_err(|_| GraphError::Parse {
                        line: lineno,
                        msg: format!("bad vertex {u:?}"),
                    })?;
                    let v: u32 = v.trim().parse().map_err(|_| GraphError::Parse {
                        line: lineno,
                        msg: format!("bad vertex {v:?}"),
                    })?;
                    outer = Some(OuterAnchor::Edge(u, v));
                }
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| GraphError::Parse {
                line: lineno,
                msg: "expected `v: neighbours` or `outer:` line".into(),
            })?;
            let v: usize = head.trim().parse().map_err(|_| GraphError::Parse {
                line: lineno,
                msg: format!("bad vertex id {head:?}"),
            })?;
            if v >= n {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range (n={n})"),
                });
            }
            if filled[v] {
                return Err(GraphError::Parse {
                    line: lineno,
                    msg: format!("duplicate rotation line for vertex {v}"),
                });
            }
            filled[v] = true;
            for tok in tail.split_whitespace() {
                let u: u32 = tok.parse().map_err(|_| GraphError::Parse {
                    line: lineno,
                    msg: format!("bad neighbour {tok:?}"),
                })?;
                rotations[v].push(u);
            }
        }
        if let Some(v) = filled.iter().position(|&f| !f) {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("missing rotation line for vertex {v}"),
            });
        }
        let outer = outer.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing outer: line".into(),
        })?;
        PlaneGraph::new(rotations, outer)
    }
}
