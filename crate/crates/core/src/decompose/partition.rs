//! Vertex-partition descriptions of certificates.

use serde::Serialize;

use super::certificate::{is_separating, Certificate};
use super::weighting::{Pattern, Weight, Weighting};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// `{V+, V-}` for pattern I, `{V1, .., V5}` for pattern II.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "pattern")]
pub enum PartitionView {
    #[serde(rename = "I")]
    TypeI {
        positive: Vec<usize>,
        negative: Vec<usize>,
    },
    /// `v1`/`v2` carry weight `+1`/`-1`; `v4` and `v3` are the zero-weight
    /// neighbours of `v1` and `v2`; `v5` holds the remaining zero vertices.
    #[serde(rename = "II")]
    TypeII {
        v1: Vec<usize>,
        v2: Vec<usize>,
        v3: Vec<usize>,
        v4: Vec<usize>,
        v5: Vec<usize>,
    },
}

impl PartitionView {
    pub fn pattern(&self) -> Pattern {
        match self {
            PartitionView::TypeI { .. } => Pattern::TypeI,
            PartitionView::TypeII { .. } => Pattern::TypeII,
        }
    }

    fn cells(&self) -> Vec<&[usize]> {
        match self {
            PartitionView::TypeI { positive, negative } => vec![positive, negative],
            PartitionView::TypeII { v1, v2, v3, v4, v5 } => vec![v1, v2, v3, v4, v5],
        }
    }

    /// Weighting with `+1` on `V+`/`V1`, `-1` on `V-`/`V2`, zero elsewhere.
    pub fn induced_weighting(&self, d: usize) -> Weighting {
        let mut a = Weighting::zeros(d);
        let (pos, neg) = match self {
            PartitionView::TypeI { positive, negative } => (positive, negative),
            PartitionView::TypeII { v1, v2, .. } => (v1, v2),
        };
        for &v in pos {
            a.set(v, Weight::Pos);
        }
        for &v in neg {
            a.set(v, Weight::Neg);
        }
        a
    }

    /// Errors unless the cells are pairwise disjoint and cover `1..=d`.
    pub fn check_partition(&self, d: usize) -> Result<()> {
        let mut owner = vec![false; d + 1];
        for cell in self.cells() {
            for &v in cell {
                if v == 0 || v > d {
                    return Err(Error::NotAPartition(format!("vertex {v} outside 1..={d}")));
                }
                if owner[v] {
                    return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
                }
                owner[v] = true;
            }
        }
        if let Some(v) = (1..=d).find(|&v| !owner[v]) {
            return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
        }
        Ok(())
    }
}

/// Reads the vertex partition off a certificate of a connected graph.
pub fn partition_view(g: &Graph, c: &Certificate) -> Result<PartitionView> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    c.check(g)?;
    let a = &c.weights;
    let positive = a.vertices_with(Weight::Pos);
    let negative = a.vertices_with(Weight::Neg);
    match c.pattern {
        Pattern::TypeI => Ok(PartitionView::TypeI { positive, negative }),
        Pattern::TypeII => {
            let (mut v3, mut v4, mut v5) = (Vec::new(), Vec::new(), Vec::new());
            for v in a.vertices_with(Weight::Zero) {
                let near_pos = g.neighbors(v).any(|u| a.get(u) == Weight::Pos);
                let near_neg = g.neighbors(v).any(|u| a.get(u) == Weight::Neg);
                match (near_pos, near_neg) {
                    (true, true) => {
                        return Err(Error::InvalidCertificate(format!(
                            "zero vertex {v} touches both a positive and a negative edge"
                        )))
                    }
                    (true, false) => v4.push(v),
                    (false, true) => v3.push(v),
                    (false, false) => v5.push(v),
                }
            }
            Ok(PartitionView::TypeII {
                v1: positive,
                v2: negative,
                v3,
                v4,
                v5,
            })
        }
    }
}

fn all_pairs_compatible(g: &Graph, xs: &[Edge], ys: &[Edge]) -> bool {
    xs.iter()
        .all(|e| ys.iter().all(|f| g.cycle_compatible_unchecked(e, f)))
}

/// Both induced sides carry an edge, and every edge of `G[V+]` is
/// cycle-compatible with every edge of `G[V-]`.
pub fn verify_partition_i(g: &Graph, p: &PartitionView) -> Result<bool> {
    let PartitionView::TypeI { positive, negative } = p else {
        return Err(Error::NotAPartition("expected a two-cell partition".into()));
    };
    p.check_partition(g.d())?;
    let side = side_map(g.d(), &[positive, negative]);
    let inside = |k: u8| -> Vec<Edge> {
        g.edges()
            .iter()
            .filter(|e| side[e.u()] == k && side[e.v()] == k)
            .copied()
            .collect()
    };
    let (plus, minus) = (inside(1), inside(2));
    Ok(!plus.is_empty() && !minus.is_empty() && all_pairs_compatible(g, &plus, &minus))
}

/// The three conditions of the five-cell characterization:
/// no edge inside `V1` or inside `V2`; `E(V1,V4)` and `E(V2,V3)` non-empty and
/// pairwise cycle-compatible; no edge in `E(V1,V3)`, `E(V1,V5)`, `E(V2,V4)` or
/// `E(V2,V5)`.
pub fn verify_partition_ii(g: &Graph, p: &PartitionView) -> Result<bool> {
    let PartitionView::TypeII { v1, v2, v3, v4, v5 } = p else {
        return Err(Error::NotAPartition(
            "expected a five-cell partition".into(),
        ));
    };
    p.check_partition(g.d())?;
    let cell = side_map(g.d(), &[v1, v2, v3, v4, v5]);
    let between = |x: u8, y: u8| -> Vec<Edge> {
        g.edges()
            .iter()
            .filter(|e| {
                let (a, b) = (cell[e.u()], cell[e.v()]);
                (a == x && b == y) || (a == y && b == x)
            })
            .copied()
            .collect()
    };
    let bipartite = between(1, 1).is_empty() && between(2, 2).is_empty();
    let (e14, e23) = (between(1, 4), between(2, 3));
    let crossing = !e14.is_empty() && !e23.is_empty() && all_pairs_compatible(g, &e14, &e23);
    let forbidden_empty = [(1, 3), (1, 5), (2, 4), (2, 5)]
        .iter()
        .all(|&(x, y)| between(x, y).is_empty());
    Ok(bipartite && crossing && forbidden_empty)
}

fn side_map(d: usize, cells: &[&Vec<usize>]) -> Vec<u8> {
    let mut side = vec![0u8; d + 1];
    for (k, cell) in cells.iter().enumerate() {
        for &v in cell.iter() {
            side[v] = k as u8 + 1;
        }
    }
    side
}

/// Checks that a verified partition induces a separating weighting of the
/// same pattern.
pub fn partition_agrees(g: &Graph, p: &PartitionView) -> Result<bool> {
    let verified = match p.pattern() {
        Pattern::TypeI => verify_partition_i(g, p)?,
        Pattern::TypeII => verify_partition_ii(g, p)?,
    };
    let induced = is_separating(g, &p.induced_weighting(g.d()))?;
    Ok(!verified || induced == Some(p.pattern()))
}
