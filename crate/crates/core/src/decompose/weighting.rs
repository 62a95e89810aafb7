use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Coefficient of a single vertex in a hyperplane `sum a_i x_i = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Weight {
    Neg = -1,
    Zero = 0,
    Pos = 1,
}

impl Weight {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn from_value(v: i64) -> Result<Weight> {
        match v {
            -1 => Ok(Weight::Neg),
            0 => Ok(Weight::Zero),
            1 => Ok(Weight::Pos),
            other => Err(Error::InvalidWeight(other.to_string())),
        }
    }

    pub fn negated(self) -> Weight {
        match self {
            Weight::Neg => Weight::Pos,
            Weight::Zero => Weight::Zero,
            Weight::Pos => Weight::Neg,
        }
    }
}

/// A vector in `{-1, 0, 1}^d`, indexed by 1-based vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weighting(Vec<Weight>);

impl Weighting {
    pub fn new(weights: Vec<Weight>) -> Weighting {
        Weighting(weights)
    }

    pub fn zeros(d: usize) -> Weighting {
        Weighting(vec![Weight::Zero; d])
    }

    pub fn from_values(values: &[i64]) -> Result<Weighting> {
        values
            .iter()
            .map(|&v| Weight::from_value(v))
            .collect::<Result<_>>()
            .map(Weighting)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight of vertex `v` (1-indexed).
    pub fn get(&self, v: usize) -> Weight {
        self.0[v - 1]
    }

    pub fn set(&mut self, v: usize, w: Weight) {
        self.0[v - 1] = w;
    }

    pub fn weights(&self) -> &[Weight] {
        &self.0
    }

    pub fn values(&self) -> Vec<i8> {
        self.0.iter().map(|w| w.value()).collect()
    }

    pub fn negated(&self) -> Weighting {
        Weighting(self.0.iter().map(|w| w.negated()).collect())
    }

    /// Flips the sign if needed so the first non-zero entry is `+1`.
    pub fn normalized(&self) -> Weighting {
        match self.0.iter().find(|&&w| w != Weight::Zero) {
            Some(Weight::Neg) => self.negated(),
            _ => self.clone(),
        }
    }

    /// Vertices carrying weight `w`, ascending.
    pub fn vertices_with(&self, w: Weight) -> Vec<usize> {
        (1..=self.len()).filter(|&v| self.get(v) == w).collect()
    }

    pub(crate) fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.d() {
            return Err(Error::LengthMismatch {
                expected: g.d(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for Weighting {
    type Err = Error;

    /// Parses a comma-separated list such as `-1,0,1`.
    fn from_str(s: &str) -> Result<Weighting> {
        s.split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidWeight(t.to_string()))
                    .and_then(Weight::from_value)
            })
            .collect::<Result<_>>()
            .map(Weighting)
    }
}

impl fmt::Display for Weighting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.value().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Weighting {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values().serialize(s)
    }
}

/// Sign of `a_u + a_v` for an edge `{u, v}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
    Zero,
}

impl Sign {
    pub fn of_sum(sum: i8) -> Sign {
        match sum.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSign {
    pub edge: Edge,
    pub sign: Sign,
    /// `{a_u, a_v}`, smaller value first.
    pub signature: (i8, i8),
}

/// Sign and signature of every edge, in canonical edge order.
pub fn edge_signs(g: &Graph, a: &Weighting) -> Result<Vec<EdgeSign>> {
    a.check_len(g)?;
    Ok(g.edges()
        .iter()
        .map(|&edge| {
            let (x, y) = (a.get(edge.u()).value(), a.get(edge.v()).value());
            EdgeSign {
                edge,
                sign: Sign::of_sum(x + y),
                signature: (x.min(y), x.max(y)),
            }
        })
        .collect())
}

/// The two admissible sign patterns of a separating weighting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pattern {
    /// No zero weights; positive edges `{1,1}`, negative edges `{-1,-1}`.
    #[serde(rename = "I")]
    TypeI,
    /// Some zero weight; positive edges `{1,0}`, negative edges `{-1,0}`.
    #[serde(rename = "II")]
    TypeII,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::TypeI => "I",
            Pattern::TypeII => "II",
        })
    }
}
