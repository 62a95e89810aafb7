use serde::Serialize;

use super::weighting::{Pattern, Weight, Weighting};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Everything [`classify`] learns about a weighting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub positive: Vec<Edge>,
    pub negative: Vec<Edge>,
    pub zero: Vec<Edge>,
    /// (positive, negative) pairs that are not cycle-compatible.
    pub incompatible: Vec<(Edge, Edge)>,
    /// At least one positive and one negative edge, and every such pair is
    /// cycle-compatible. Signatures are not considered.
    pub general_valid: bool,
    /// The pattern matched by a generally valid weighting, if any.
    pub pattern: Option<Pattern>,
}

/// Classifies `a` against `g`.
///
/// The pattern is judged on the support: the vertices of the component
/// carrying the non-zero edges. For a connected graph that is every vertex.
pub fn classify(g: &Graph, a: &Weighting) -> Result<Classification> {
    a.check_len(g)?;
    let (mut positive, mut negative, mut zero) = (Vec::new(), Vec::new(), Vec::new());
    for &e in g.edges() {
        match a.get(e.u()).value() + a.get(e.v()).value() {
            s if s > 0 => positive.push(e),
            s if s < 0 => negative.push(e),
            _ => zero.push(e),
        }
    }
    let mut incompatible = Vec::new();
    for p in &positive {
        for n in &negative {
            if !g.cycle_compatible_unchecked(p, n) {
                incompatible.push((*p, *n));
            }
        }
    }
    let general_valid = !positive.is_empty() && !negative.is_empty() && incompatible.is_empty();
    let pattern = if general_valid {
        support_pattern(g, a, &positive)
    } else {
        None
    };
    Ok(Classification {
        positive,
        negative,
        zero,
        incompatible,
        general_valid,
        pattern,
    })
}

fn support_pattern(g: &Graph, a: &Weighting, positive: &[Edge]) -> Option<Pattern> {
    let anchor = positive[0].u();
    let support = g
        .connected_components()
        .into_iter()
        .find(|c| c.binary_search(&anchor).is_ok())
        .expect("every vertex lies in a component");
    let has_zero = support.iter().any(|&v| a.get(v) == Weight::Zero);
    if !has_zero {
        return Some(Pattern::TypeI);
    }
    let same_sign_edge = g.edges().iter().any(|e| {
        let (x, y) = (a.get(e.u()), a.get(e.v()));
        x == y && x != Weight::Zero && support.binary_search(&e.u()).is_ok()
    });
    (!same_sign_edge).then_some(Pattern::TypeII)
}

/// The pattern of a separating weighting of a connected graph, or `None` if
/// `a` does not separate or matches neither pattern.
pub fn is_separating(g: &Graph, a: &Weighting) -> Result<Option<Pattern>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(classify(g, a)?.pattern)
}

/// A validated separating weighting together with its edge sign split.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub weights: Weighting,
    pub pattern: Pattern,
    pub positive: Vec<Edge>,
    pub negative: Vec<Edge>,
    pub zero: Vec<Edge>,
}

impl Certificate {
    /// Validates `weights` against `g`.
    pub fn new(g: &Graph, weights: Weighting) -> Result<Certificate> {
        let c = classify(g, &weights)?;
        let Some(pattern) = c.pattern else {
            let why = if c.positive.is_empty() {
                "no positive edge".to_string()
            } else if c.negative.is_empty() {
                "no negative edge".to_string()
            } else if let Some((p, n)) = c.incompatible.first() {
                format!("positive edge {p} and negative edge {n} are not cycle-compatible")
            } else {
                "weighting matches neither pattern I nor pattern II".to_string()
            };
            return Err(Error::InvalidCertificate(format!("{weights}: {why}")));
        };
        Ok(Certificate {
            weights,
            pattern,
            positive: c.positive,
            negative: c.negative,
            zero: c.zero,
        })
    }

    /// Re-validates the certificate against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if Certificate::new(g, self.weights.clone())? != *self {
            return Err(Error::InvalidCertificate(format!(
                "{} does not describe this graph",
                self.weights
            )));
        }
        Ok(())
    }

    pub fn negated(&self) -> Certificate {
        Certificate {
            weights: self.weights.negated(),
            pattern: self.pattern,
            positive: self.negative.clone(),
            negative: self.positive.clone(),
            zero: self.zero.clone(),
        }
    }
}
