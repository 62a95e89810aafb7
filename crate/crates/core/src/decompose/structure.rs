//! Shape of the zero subgraph cut out by a separating hyperplane.

use serde::Serialize;

use super::certificate::Certificate;
use super::weighting::Pattern;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// The graph of zero edges, on the endpoints of those edges only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroComponent {
    pub vertices: Vec<usize>,
    pub bipartite: bool,
}

impl ZeroSubgraph {
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Components in original labels, ordered by smallest vertex.
    pub fn components(&self) -> Vec<ZeroComponent> {
        let Some(&d) = self.vertices.last() else {
            return Vec::new();
        };
        let pairs: Vec<_> = self.edges.iter().map(|e| (e.u(), e.v())).collect();
        let g = Graph::from_edge_list(d, &pairs).expect("edges come from a valid graph");
        g.connected_components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|vertices| {
                let bipartite = g.induced_subgraph(&vertices).is_bipartite();
                ZeroComponent {
                    vertices,
                    bipartite,
                }
            })
            .collect()
    }
}

pub fn zero_subgraph(g: &Graph, c: &Certificate) -> Result<ZeroSubgraph> {
    c.check(g)?;
    let mut vertices: Vec<usize> = c.zero.iter().flat_map(|e| e.endpoints()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(ZeroSubgraph {
        vertices,
        edges: c.zero.clone(),
    })
}

/// Which shape the zero subgraph must take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// Non-bipartite graph, pattern I: one bipartite component.
    ConnectedBipartite,
    /// Non-bipartite graph, pattern II: one bipartite and one
    /// non-bipartite component.
    BipartiteAndOdd,
    /// Bipartite graph, pattern I: exactly two components.
    TwoComponents,
}

impl Clause {
    pub fn for_case(graph_bipartite: bool, pattern: Pattern) -> Option<Clause> {
        match (graph_bipartite, pattern) {
            (false, Pattern::TypeI) => Some(Clause::ConnectedBipartite),
            (false, Pattern::TypeII) => Some(Clause::BipartiteAndOdd),
            (true, Pattern::TypeI) => Some(Clause::TwoComponents),
            (true, Pattern::TypeII) => None,
        }
    }

    pub fn holds(self, components: &[ZeroComponent]) -> bool {
        match self {
            Clause::ConnectedBipartite => components.len() == 1 && components[0].bipartite,
            Clause::BipartiteAndOdd => {
                components.len() == 2 && components[0].bipartite != components[1].bipartite
            }
            Clause::TwoComponents => components.len() == 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    /// `None` when no clause covers the case (bipartite graph, pattern II).
    pub clause: Option<Clause>,
    pub passed: bool,
    pub components: Vec<ZeroComponent>,
}

pub fn structure_check(g: &Graph, c: &Certificate) -> Result<StructureCheck> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let components = zero_subgraph(g, c)?.components();
    let clause = Clause::for_case(g.is_bipartite(), c.pattern);
    Ok(StructureCheck {
        clause,
        passed: clause.is_none_or(|cl| cl.holds(&components)),
        components,
    })
}
