//! Labeled simple graphs on the vertex set `1..=d`.
//!
//! All public interfaces speak 1-indexed vertex labels. Internally every
//! vertex owns a row of `u64` words in a flat adjacency bitset, so a graph
//! with `d <= 64` keeps each neighbourhood in a single word.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::Loop(a));
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    /// Smaller endpoint.
    pub fn u(&self) -> usize {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> usize {
        self.v
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.u, self.v]
    }

    pub fn contains(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

/// An immutable labeled simple graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    d: usize,
    words: usize,
    adjacency: Vec<u64>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("d", &self.d)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from 1-indexed vertex pairs. Duplicate pairs collapse
    /// into one edge.
    pub fn from_edge_list(d: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        if d == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for w in [a, b] {
                if w == 0 || w > d {
                    return Err(Error::VertexOutOfRange { vertex: w, d });
                }
            }
            edges.push(Edge::new(a, b)?);
        }
        Ok(Graph::from_checked_edges(d, edges))
    }

    /// Graph on `d` vertices with no edges.
    pub fn empty(d: usize) -> Result<Graph> {
        Graph::from_edge_list(d, &[])
    }

    pub(crate) fn from_checked_edges(d: usize, mut edges: Vec<Edge>) -> Graph {
        edges.sort_unstable();
        edges.dedup();
        let words = d.div_ceil(64);
        let mut adjacency = vec![0u64; d * words];
        for e in &edges {
            let (a, b) = (e.u - 1, e.v - 1);
            adjacency[a * words + b / 64] |= 1 << (b % 64);
            adjacency[b * words + a / 64] |= 1 << (a % 64);
        }
        Graph {
            d,
            words,
            adjacency,
            edges,
        }
    }

    /// Number of vertices.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.d
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == 0 || b == 0 || a > self.d || b > self.d || a == b {
            return false;
        }
        let (a, b) = (a - 1, b - 1);
        self.adjacency[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adjacency[(v - 1) * self.words..v * self.words]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t + 1)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Smallest isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.vertices().find(|&v| self.degree(v) == 0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.d + 1];
        let mut components = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Two-colouring of every component, or `None` if some component has an
    /// odd cycle. The smallest vertex of each component lands in the first part.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour: Vec<Option<bool>> = vec![None; self.d + 1];
        for start in self.vertices() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for w in self.neighbors(v) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for v in self.vertices() {
            if colour[v] == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Number of connected components that are bipartite.
    pub fn bipartite_component_count(&self) -> usize {
        self.connected_components()
            .iter()
            .filter(|c| self.induced_subgraph(c).is_bipartite())
            .count()
    }

    /// Subgraph induced by `vertices`, relabeled `1..=k` in the given order.
    /// Vertex `i` of the result corresponds to `vertices[i - 1]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![0usize; self.d + 1];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != 0 && local[e.v] != 0)
            .map(|e| Edge {
                u: local[e.u].min(local[e.v]),
                v: local[e.u].max(local[e.v]),
            })
            .collect();
        Graph::from_checked_edges(vertices.len(), edges)
    }

    /// Whether the pair `e`, `f` is cycle-compatible: the two edges are
    /// vertex-disjoint and their four endpoints induce a 4-cycle.
    pub fn cycle_compatible(&self, e: &Edge, f: &Edge) -> Result<bool> {
        for edge in [e, f] {
            if !self.contains_edge(edge) {
                return Err(Error::MissingEdge(*edge));
            }
        }
        Ok(self.cycle_compatible_unchecked(e, f))
    }

    /// [`Graph::cycle_compatible`] without the membership check. With both
    /// edges present, a 4-cycle on `{i, j, k, l}` exists iff one of the two
    /// perfect matchings crossing `e = ij` and `f = kl` is present.
    pub(crate) fn cycle_compatible_unchecked(&self, e: &Edge, f: &Edge) -> bool {
        if e.shares_vertex(f) {
            return false;
        }
        let (i, j, k, l) = (e.u, e.v, f.u, f.v);
        (self.has_edge(j, k) && self.has_edge(i, l)) || (self.has_edge(j, l) && self.has_edge(i, k))
    }

    /// Applies the vertex map `i -> perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.d {
            return Err(Error::NotAPermutation(self.d));
        }
        let mut hit = vec![false; self.d + 1];
        for &p in perm {
            if p == 0 || p > self.d || hit[p] {
                return Err(Error::NotAPermutation(self.d));
            }
            hit[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.u - 1], perm[e.v - 1]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Graph::from_checked_edges(self.d, edges))
    }

    /// Disjoint union; the vertices of `parts[k]` are shifted past those of
    /// all earlier parts.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let d: usize = parts.iter().map(|g| g.d).sum();
        if d == 0 {
            return Err(Error::NoVertices);
        }
        let mut offset = 0;
        let mut edges = Vec::new();
        for g in parts {
            edges.extend(g.edges.iter().map(|e| Edge {
                u: e.u + offset,
                v: e.v + offset,
            }));
            offset += g.d;
        }
        Ok(Graph::from_checked_edges(d, edges))
    }

    /// Adds `extra` fresh vertices and the given edges.
    pub fn extended(&self, extra: usize, new_edges: &[(usize, usize)]) -> Result<Graph> {
        let mut pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        pairs.extend_from_slice(new_edges);
        Graph::from_edge_list(self.d + extra, &pairs)
    }
}
