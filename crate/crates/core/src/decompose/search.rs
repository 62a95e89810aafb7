//! Backtracking searches for pattern I and pattern II certificates.
//!
//! Vertices are assigned in label order. Values are tried in the order
//! `+1, 0, -1`, so the first certificate found is the lexicographically
//! greatest among those whose first non-zero weight is `+1`. A branch is cut
//! as soon as a completed positive edge and a completed negative edge fail
//! cycle-compatibility, or (pattern II) an edge receives signature `{1,1}` or
//! `{-1,-1}`.

use super::certificate::Certificate;
use super::weighting::{Pattern, Weight, Weighting};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest vertex count accepted by the backtracking searches.
pub const DEFAULT_SEARCH_CAP: usize = 64;

pub fn search_type_i(g: &Graph) -> Result<Option<Certificate>> {
    search(g, Pattern::TypeI)
}

pub fn search_type_ii(g: &Graph) -> Result<Option<Certificate>> {
    search(g, Pattern::TypeII)
}

/// Runs the search for `pattern` on a connected graph.
pub fn search(g: &Graph, pattern: Pattern) -> Result<Option<Certificate>> {
    if g.d() > DEFAULT_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "search vertex count",
            got: g.d(),
            cap: DEFAULT_SEARCH_CAP,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let mut state = Search {
        g,
        pattern,
        weights: vec![Weight::Zero; g.d() + 1],
        positive: Vec::new(),
        negative: Vec::new(),
    };
    if !state.assign(1, false) {
        return Ok(None);
    }
    let weighting = Weighting::new(state.weights[1..].to_vec());
    Certificate::new(g, weighting).map(Some)
}

struct Search<'a> {
    g: &'a Graph,
    pattern: Pattern,
    // 1-indexed; slot 0 unused
    weights: Vec<Weight>,
    positive: Vec<Edge>,
    negative: Vec<Edge>,
}

impl Search<'_> {
    fn candidates(&self, v: usize, seen_nonzero: bool) -> &'static [Weight] {
        match (self.pattern, v, seen_nonzero) {
            (Pattern::TypeI, 1, _) => &[Weight::Pos],
            (Pattern::TypeI, _, _) => &[Weight::Pos, Weight::Neg],
            (Pattern::TypeII, _, false) => &[Weight::Pos, Weight::Zero],
            (Pattern::TypeII, _, true) => &[Weight::Pos, Weight::Zero, Weight::Neg],
        }
    }

    fn assign(&mut self, v: usize, seen_nonzero: bool) -> bool {
        if v > self.g.d() {
            return self.complete();
        }
        for &w in self.candidates(v, seen_nonzero) {
            self.weights[v] = w;
            let (np, nn) = (self.positive.len(), self.negative.len());
            if self.extend(v) && self.assign(v + 1, seen_nonzero || w != Weight::Zero) {
                return true;
            }
            self.positive.truncate(np);
            self.negative.truncate(nn);
        }
        self.weights[v] = Weight::Zero;
        false
    }

    /// Records the edges from `v` to earlier vertices; false if this breaks
    /// a constraint.
    fn extend(&mut self, v: usize) -> bool {
        let wv = self.weights[v];
        for u in self.g.neighbors(v).take_while(|&u| u < v) {
            let wu = self.weights[u];
            if self.pattern == Pattern::TypeII && wu == wv && wu != Weight::Zero {
                return false;
            }
            let e = Edge::new(u, v).expect("u < v");
            match wu.value() + wv.value() {
                s if s > 0 => {
                    if !self
                        .negative
                        .iter()
                        .all(|f| self.g.cycle_compatible_unchecked(&e, f))
                    {
                        return false;
                    }
                    self.positive.push(e);
                }
                s if s < 0 => {
                    if !self
                        .positive
                        .iter()
                        .all(|f| self.g.cycle_compatible_unchecked(&e, f))
                    {
                        return false;
                    }
                    self.negative.push(e);
                }
                _ => {}
            }
        }
        true
    }

    fn complete(&self) -> bool {
        if self.positive.is_empty() || self.negative.is_empty() {
            return false;
        }
        match self.pattern {
            Pattern::TypeI => true,
            Pattern::TypeII => self.weights[1..].contains(&Weight::Zero),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{attach_four_cycle, complete, cycle, tri_pan};

    fn values(c: &Option<Certificate>) -> Vec<i8> {
        c.as_ref().unwrap().weights.values()
    }

    #[test]
    fn complete_graph() {
        let k4 = complete(4).unwrap();
        assert_eq!(values(&search_type_i(&k4).unwrap()), vec![1, 1, -1, -1]);
        assert!(search_type_ii(&k4).unwrap().is_none());
    }

    #[test]
    fn four_cycle() {
        let c4 = cycle(4).unwrap();
        let c = search_type_i(&c4).unwrap().unwrap();
        assert_eq!(c.weights.values(), vec![1, 1, -1, -1]);
        assert_eq!(c.positive, vec![Edge::new(1, 2).unwrap()]);
        assert_eq!(c.negative, vec![Edge::new(3, 4).unwrap()]);
    }

    #[test]
    fn tri_pan_two() {
        let t2 = tri_pan(2).unwrap();
        assert!(search_type_i(&t2).unwrap().is_none());
        assert!(search_type_ii(&t2).unwrap().is_none());
    }

    #[test]
    fn attached_triangle() {
        let g = attach_four_cycle(&complete(3).unwrap(), Edge::new(1, 2).unwrap()).unwrap();
        assert_eq!(values(&search_type_ii(&g).unwrap()), vec![0, 0, 0, 1, -1]);
    }

    #[test]
    fn fixture_certificates() {
        let g = Graph::from_edge_list(6, &[(1, 4), (3, 4), (1, 2), (2, 3), (4, 5), (1, 6), (5, 6)])
            .unwrap();
        // sign flips of the weightings -1,-1,1,1,-1,1 and -1,0,0,1,-1,1
        assert_eq!(
            values(&search_type_i(&g).unwrap()),
            vec![1, 1, -1, -1, 1, -1]
        );
        assert_eq!(
            values(&search_type_ii(&g).unwrap()),
            vec![1, 0, 0, -1, 1, -1]
        );
    }

    #[test]
    fn preconditions() {
        let g = Graph::disjoint_union(&[complete(3).unwrap(), complete(3).unwrap()]).unwrap();
        assert!(matches!(search_type_i(&g), Err(Error::Disconnected)));
        let g = Graph::empty(65).unwrap();
        assert!(matches!(search_type_ii(&g), Err(Error::CapExceeded { .. })));
    }
}
