//! Combinatorial model of the edge polytope: vertex coordinates, the
//! 1-skeleton and the dimension. The polytope itself is never built.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A 0/1 lattice point in `R^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint(pub Vec<u8>);

/// The vertex `e_i + e_j` of the edge polytope for the edge `{i, j}`.
pub fn rho(e: &Edge, d: usize) -> Result<LatticePoint> {
    if e.v() > d {
        return Err(Error::VertexOutOfRange { vertex: e.v(), d });
    }
    let mut coords = vec![0u8; d];
    coords[e.u() - 1] = 1;
    coords[e.v() - 1] = 1;
    Ok(LatticePoint(coords))
}

/// A pair of graph edges whose images are joined by an edge of the polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkeletonEdge {
    pub first: Edge,
    pub second: Edge,
}

/// All polytope edges: the pairs of distinct graph edges that are not
/// cycle-compatible, in lexicographic order.
pub fn skeleton_edges(g: &Graph) -> Vec<SkeletonEdge> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (k, e) in edges.iter().enumerate() {
        for f in &edges[k + 1..] {
            if !g.cycle_compatible_unchecked(e, f) {
                out.push(SkeletonEdge {
                    first: *e,
                    second: *f,
                });
            }
        }
    }
    out
}

/// `d - r - 1`, where `r` counts the bipartite components.
pub fn dimension(g: &Graph) -> Result<usize> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.d() - g.bipartite_component_count() - 1)
}
