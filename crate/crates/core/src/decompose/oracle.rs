//! Exhaustive enumeration of `{-1, 0, 1}^d`.
//!
//! The oracle decides cycle-compatibility by looking for a literal 4-cycle
//! among the orderings of the four endpoints, independently of the
//! cross-edge shortcut used elsewhere.

use rayon::prelude::*;
use serde::Serialize;

use super::weighting::{Pattern, Weight, Weighting};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest vertex count for [`brute_force_certificates`].
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// A generally valid weighting and the pattern it matches, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleHit {
    pub weights: Weighting,
    pub pattern: Option<Pattern>,
}

/// True iff `a b c d a` is a cycle of `g` for some ordering of the four
/// distinct vertices.
pub fn has_four_cycle_on(g: &Graph, vertices: [usize; 4]) -> bool {
    let [a, b, c, d] = vertices;
    // the three distinct 4-cycles through a fixed start
    [[a, b, c, d], [a, b, d, c], [a, c, b, d]]
        .iter()
        .any(|&[p, q, r, s]| {
            g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) && g.has_edge(s, p)
        })
}

/// All generally valid weightings of a connected graph, in base-3 counting
/// order with vertex 1 as the least significant digit.
pub fn brute_force_certificates(g: &Graph, cap: usize) -> Result<Vec<OracleHit>> {
    // 3^40 is the last power of three that fits a u64 counter
    let cap = cap.min(40);
    if g.d() > cap {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            got: g.d(),
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = g.d();
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u() - 1, e.v() - 1)).collect();
    let m = edges.len();
    let mut compatible = vec![false; m * m];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, e)) in edges.iter().enumerate() {
            let disjoint = a != c && a != e && b != c && b != e;
            compatible[i * m + j] = disjoint && has_four_cycle_on(g, [a + 1, b + 1, c + 1, e + 1]);
        }
    }
    let total = 3u64.pow(d as u32);
    let hits = (0..total)
        .into_par_iter()
        .filter_map(|code| {
            let mut w = [0i8; 64];
            let mut rest = code;
            for slot in w.iter_mut().take(d) {
                *slot = (rest % 3) as i8 - 1;
                rest /= 3;
            }
            let w = &w[..d];
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            let mut same_sign = false;
            for (k, &(a, b)) in edges.iter().enumerate() {
                let s = w[a] + w[b];
                if s > 0 {
                    pos.push(k);
                } else if s < 0 {
                    neg.push(k);
                }
                same_sign |= s.abs() == 2;
            }
            if pos.is_empty() || neg.is_empty() {
                return None;
            }
            if !pos
                .iter()
                .all(|&p| neg.iter().all(|&n| compatible[p * m + n]))
            {
                return None;
            }
            let pattern = if !w.contains(&0) {
                Some(Pattern::TypeI)
            } else if !same_sign {
                Some(Pattern::TypeII)
            } else {
                None
            };
            let weights = Weighting::new(
                w.iter()
                    .map(|&x| Weight::from_value(x as i64).expect("digit in range"))
                    .collect(),
            );
            Some(OracleHit { weights, pattern })
        })
        .collect();
    Ok(hits)
}
