#![allow(dead_code)]

use edgepoly::families::{
    attach_four_cycle, complete, complete_multipartite, cycle, path, tri_pan,
};
use edgepoly::{Edge, Graph};

/// The six-vertex graph with a chord: hexagon 1-2-3-4-5-6 plus {1,4}.
pub fn fixture() -> Graph {
    Graph::from_edge_list(6, &[(1, 4), (3, 4), (1, 2), (2, 3), (4, 5), (1, 6), (5, 6)]).unwrap()
}

pub fn edge(a: usize, b: usize) -> Edge {
    Edge::new(a, b).unwrap()
}

/// A handful of named graphs used for relabeling and union tests.
pub fn fixtures() -> Vec<Graph> {
    vec![
        fixture(),
        complete(3).unwrap(),
        complete(4).unwrap(),
        complete(5).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        cycle(6).unwrap(),
        path(2).unwrap(),
        path(4).unwrap(),
        tri_pan(1).unwrap(),
        tri_pan(2).unwrap(),
        complete_multipartite(&[2, 2]).unwrap(),
        complete_multipartite(&[1, 2, 2]).unwrap(),
        attach_four_cycle(&complete(3).unwrap(), edge(1, 2)).unwrap(),
        attach_four_cycle(&tri_pan(2).unwrap(), edge(1, 2)).unwrap(),
    ]
}

/// All 4-cycles of `g` as sorted vertex quadruples with their cyclic order,
/// found by trying every ordered quadruple.
pub fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
    let d = g.d();
    let mut out = Vec::new();
    for a in 1..=d {
        for b in 1..=d {
            for c in 1..=d {
                for e in 1..=d {
                    let distinct = a != b && a != c && a != e && b != c && b != e && c != e;
                    // canonical rotation/reflection: a smallest, b < e
                    if distinct
                        && a < b.min(c).min(e)
                        && b < e
                        && g.has_edge(a, b)
                        && g.has_edge(b, c)
                        && g.has_edge(c, e)
                        && g.has_edge(e, a)
                    {
                        out.push([a, b, c, e]);
                    }
                }
            }
        }
    }
    out
}

/// Cycle-compatibility straight from the definition: disjoint edges whose
/// endpoints carry a 4-cycle of the induced subgraph.
pub fn literal_compatible(g: &Graph, e: &Edge, f: &Edge) -> bool {
    let mut vs = vec![e.u(), e.v(), f.u(), f.v()];
    vs.sort_unstable();
    vs.dedup();
    if vs.len() < 4 {
        return false;
    }
    let h = g.induced_subgraph(&vs);
    !four_cycles(&h).is_empty()
}
