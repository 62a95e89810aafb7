use std::time::{Duration, Instant};

use serde::{Serialize, Serializer};

use super::certificate::Certificate;
use super::partition::{partition_view, PartitionView};
use super::search::{search_type_i, search_type_ii};
use super::structure::{structure_check, StructureCheck};
use super::weighting::Weighting;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A certificate with its partition view and zero-subgraph check. The last
/// two are only computed for connected graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub certificate: Certificate,
    pub partition: Option<PartitionView>,
    pub structure: Option<StructureCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub vertices: Vec<usize>,
    pub type_i: bool,
    pub type_ii: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Timings {
    #[serde(serialize_with = "micros")]
    pub type_i: Duration,
    #[serde(serialize_with = "micros")]
    pub type_ii: Duration,
    #[serde(serialize_with = "micros")]
    pub total: Duration,
}

fn micros<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_micros() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub decomposable: bool,
    pub type_i: Option<Witness>,
    pub type_ii: Option<Witness>,
    pub components: Vec<ComponentVerdict>,
    #[serde(rename = "timings_us")]
    pub timings: Timings,
}

impl AnalysisReport {
    pub fn type_i_certificate(&self) -> Option<&Certificate> {
        self.type_i.as_ref().map(|w| &w.certificate)
    }

    pub fn type_ii_certificate(&self) -> Option<&Certificate> {
        self.type_ii.as_ref().map(|w| &w.certificate)
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

/// Runs both searches. Disconnected graphs go through [`component_reduce`].
pub fn decide(g: &Graph) -> Result<AnalysisReport> {
    check_input(g)?;
    if !g.is_connected() {
        return component_reduce(g);
    }
    let start = Instant::now();
    let type_i = search_type_i(g)?;
    let after_i = Instant::now();
    let type_ii = search_type_ii(g)?;
    let after_ii = Instant::now();

    let witness = |c: Option<Certificate>| -> Result<Option<Witness>> {
        c.map(|certificate| {
            Ok(Witness {
                partition: Some(partition_view(g, &certificate)?),
                structure: Some(structure_check(g, &certificate)?),
                certificate,
            })
        })
        .transpose()
    };
    let components = vec![ComponentVerdict {
        vertices: g.vertices().collect(),
        type_i: type_i.is_some(),
        type_ii: type_ii.is_some(),
    }];
    let type_i = witness(type_i)?;
    let type_ii = witness(type_ii)?;
    Ok(AnalysisReport {
        vertices: g.d(),
        edges: g.edge_count(),
        connected: true,
        decomposable: type_i.is_some() || type_ii.is_some(),
        type_i,
        type_ii,
        components,
        timings: Timings {
            type_i: after_i - start,
            type_ii: after_ii - after_i,
            total: start.elapsed(),
        },
    })
}

/// Decides each component separately. The graph is decomposable iff some
/// component is; the reported certificates are the first witnessing
/// component's certificates with every other vertex weighted zero.
pub fn component_reduce(g: &Graph) -> Result<AnalysisReport> {
    check_input(g)?;
    let start = Instant::now();
    let mut timings = Timings::default();
    let mut components = Vec::new();
    let (mut type_i, mut type_ii) = (None, None);
    for vertices in g.connected_components() {
        let h = g.induced_subgraph(&vertices);
        let t0 = Instant::now();
        let ci = search_type_i(&h)?;
        let t1 = Instant::now();
        let cii = search_type_ii(&h)?;
        timings.type_i += t1 - t0;
        timings.type_ii += t1.elapsed();

        let lift = |c: &Certificate| -> Result<Witness> {
            let mut a = Weighting::zeros(g.d());
            for (k, &v) in vertices.iter().enumerate() {
                a.set(v, c.weights.get(k + 1));
            }
            Ok(Witness {
                certificate: Certificate::new(g, a)?,
                partition: None,
                structure: None,
            })
        };
        if type_i.is_none() {
            type_i = ci.as_ref().map(lift).transpose()?;
        }
        if type_ii.is_none() {
            type_ii = cii.as_ref().map(lift).transpose()?;
        }
        components.push(ComponentVerdict {
            vertices,
            type_i: ci.is_some(),
            type_ii: cii.is_some(),
        });
    }
    timings.total = start.elapsed();
    Ok(AnalysisReport {
        vertices: g.d(),
        edges: g.edge_count(),
        connected: components.len() == 1,
        decomposable: type_i.is_some() || type_ii.is_some(),
        type_i,
        type_ii,
        components,
        timings,
    })
}
