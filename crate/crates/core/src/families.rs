//! Generators for the graph families used throughout the analysis.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Default largest vertex count for [`enumerate_connected_graphs`].
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// A named graph family with its size parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    Cycle(usize),
    Path(usize),
    TriPan(usize),
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match self {
            Family::Complete(d) => complete(*d),
            Family::CompleteMultipartite(parts) => complete_multipartite(parts),
            Family::Cycle(n) => cycle(*n),
            Family::Path(n) => path(*n),
            Family::TriPan(n) => tri_pan(*n),
        }
    }
}

pub fn complete(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidFamily("complete graph needs d >= 1".into()));
    }
    let pairs: Vec<_> = (1..=d)
        .flat_map(|i| (i + 1..=d).map(move |j| (i, j)))
        .collect();
    Graph::from_edge_list(d, &pairs)
}

/// Complete multipartite graph with parts of the given sizes; parts occupy
/// consecutive label ranges.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::InvalidFamily(
            "multipartite graph needs at least one part, every part of size >= 1".into(),
        ));
    }
    let mut part_of = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let d = part_of.len();
    let mut pairs = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            if part_of[i - 1] != part_of[j - 1] {
                pairs.push((i, j));
            }
        }
    }
    Graph::from_edge_list(d, &pairs)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidFamily("cycle needs n >= 3".into()));
    }
    let pairs: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("path needs n >= 1".into()));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &pairs)
}

/// Vertex labels of the n-joined tri-pan.
///
/// The apex `x` is vertex 1, spoke `i` (for `i` in `1..=n`) is vertex `1 + i`
/// and base vertex `y_j` (for `j` in `0..=n`) is vertex `n + 2 + j`.
#[derive(Clone, Copy, Debug)]
pub struct TriPanLayout {
    pub n: usize,
}

impl TriPanLayout {
    pub fn apex(&self) -> usize {
        1
    }

    pub fn spoke(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        1 + i
    }

    pub fn base(&self, j: usize) -> usize {
        debug_assert!(j <= self.n);
        self.n + 2 + j
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n + 2
    }
}

/// The n-joined tri-pan `T(n)`: `n` triangles `(i, y_{i-1}, y_i)` on a base
/// path `y_0 .. y_n`, each spoke `i` also joined to the common apex `x`.
pub fn tri_pan(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidFamily("tri-pan needs n >= 1".into()));
    }
    let t = TriPanLayout { n };
    let mut pairs = Vec::with_capacity(4 * n);
    for i in 1..=n {
        pairs.push((t.apex(), t.spoke(i)));
        pairs.push((t.spoke(i), t.base(i - 1)));
        pairs.push((t.spoke(i), t.base(i)));
        pairs.push((t.base(i - 1), t.base(i)));
    }
    Graph::from_edge_list(t.vertex_count(), &pairs)
}

/// Joins a path of length 3 through two fresh vertices to the edge `e`,
/// closing a new 4-cycle. Vertex `d + 1` is adjacent to `e.u()`, vertex
/// `d + 2` to `e.v()`.
pub fn attach_four_cycle(g: &Graph, e: Edge) -> Result<Graph> {
    if !g.contains_edge(&e) {
        return Err(Error::MissingEdge(e));
    }
    let (x1, x2) = (g.d() + 1, g.d() + 2);
    g.extended(2, &[(e.u(), x1), (x1, x2), (x2, e.v())])
}

/// Every labeled connected simple graph on `n` vertices, each exactly once.
///
/// Graphs are produced by walking all `2^(n choose 2)` edge masks in
/// increasing order and keeping the connected ones.
pub fn enumerate_connected_graphs(n: usize, cap: usize) -> Result<ConnectedGraphs> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "enumeration vertex count",
            got: n,
            cap,
        });
    }
    if n > 11 {
        // 2^(n choose 2) no longer fits a u64 mask
        return Err(Error::CapExceeded {
            what: "enumeration vertex count",
            got: n,
            cap: 11,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    Ok(ConnectedGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

/// Iterator returned by [`enumerate_connected_graphs`].
pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl ConnectedGraphs {
    fn connected(&self, mask: u64) -> bool {
        let mut adj = [0u16; 16];
        for (k, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i - 1] |= 1 << (j - 1);
                adj[j - 1] |= 1 << (i - 1);
            }
        }
        let all = (1u32 << self.n) - 1;
        let mut reached = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] as u32;
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == all
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if self.connected(mask) {
                let pairs: Vec<_> = self
                    .pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                return Some(Graph::from_edge_list(self.n, &pairs).expect("pairs are in range"));
            }
        }
        None
    }
}
