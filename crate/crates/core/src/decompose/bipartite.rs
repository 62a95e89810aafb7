use super::certificate::Certificate;
use super::weighting::{Pattern, Weight, Weighting};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `+1` on the first colour class and `-1` on the second, which makes every
/// edge a zero edge. `None` if the graph has an odd cycle.
pub fn bipartite_zero_weighting(g: &Graph) -> Option<Weighting> {
    let (left, _) = g.bipartition()?;
    let mut a = Weighting::new(vec![Weight::Neg; g.d()]);
    for v in left {
        a.set(v, Weight::Pos);
    }
    Some(a)
}

/// Zeroes the positive vertices of `left` and the negative vertices of
/// `right`, leaving every other weight unchanged.
pub fn zero_out_sides(left: &[usize], a: &Weighting) -> Weighting {
    let mut out = a.clone();
    let mut on_left = vec![false; a.len() + 1];
    for &v in left {
        on_left[v] = true;
    }
    for (v, &left_side) in on_left.iter().enumerate().skip(1) {
        let w = a.get(v);
        if (left_side && w == Weight::Pos) || (!left_side && w == Weight::Neg) {
            out.set(v, Weight::Zero);
        }
    }
    out
}

/// Turns a pattern I certificate of a connected bipartite graph into a
/// pattern II certificate with the same sign on every edge.
pub fn convert_type_i_to_ii(
    g: &Graph,
    bipartition: (&[usize], &[usize]),
    c: &Certificate,
) -> Result<Certificate> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (left, right) = bipartition;
    let mut side = vec![0u8; g.d() + 1];
    for (s, part) in [(1u8, left), (2u8, right)] {
        for &v in part {
            if v == 0 || v > g.d() || side[v] != 0 {
                return Err(Error::NotAPartition(format!("vertex {v} in bipartition")));
            }
            side[v] = s;
        }
    }
    if side[1..].contains(&0) {
        return Err(Error::NotAPartition(
            "bipartition does not cover every vertex".into(),
        ));
    }
    if g.edges().iter().any(|e| side[e.u()] == side[e.v()]) {
        return Err(Error::NotBipartite);
    }
    c.check(g)?;
    if c.pattern != Pattern::TypeI {
        return Err(Error::InvalidCertificate(
            "expected a pattern I certificate".into(),
        ));
    }
    Certificate::new(g, zero_out_sides(left, &c.weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::weighting::edge_signs;
    use crate::families::{complete, cycle};

    fn fixture() -> Graph {
        Graph::from_edge_list(6, &[(1, 4), (3, 4), (1, 2), (2, 3), (4, 5), (1, 6), (5, 6)]).unwrap()
    }

    #[test]
    fn zero_weightings() {
        assert_eq!(
            bipartite_zero_weighting(&cycle(4).unwrap())
                .unwrap()
                .values(),
            vec![1, -1, 1, -1]
        );
        assert!(bipartite_zero_weighting(&complete(3).unwrap()).is_none());
        let g = fixture();
        let a = bipartite_zero_weighting(&g).unwrap();
        assert_eq!(a.values(), vec![1, -1, 1, -1, 1, -1]);
        assert!(edge_signs(&g, &a)
            .unwrap()
            .iter()
            .all(|s| s.sign == crate::Sign::Zero));
    }

    #[test]
    fn four_cycle_conversion() {
        let g = cycle(4).unwrap();
        let c = Certificate::new(&g, "1,1,-1,-1".parse().unwrap()).unwrap();
        let out = convert_type_i_to_ii(&g, (&[1, 3], &[2, 4]), &c).unwrap();
        assert_eq!(out.weights.values(), vec![0, 1, -1, 0]);
        assert_eq!(out.pattern, Pattern::TypeII);
        assert_eq!(out.positive, c.positive);
        assert_eq!(out.negative, c.negative);
    }

    #[test]
    fn fixture_conversion() {
        let g = fixture();
        let c = Certificate::new(&g, "-1,-1,1,1,-1,1".parse().unwrap()).unwrap();
        let out = convert_type_i_to_ii(&g, (&[1, 3, 5], &[2, 4, 6]), &c).unwrap();
        assert_eq!(out.weights.values(), vec![-1, 0, 0, 1, -1, 1]);
    }

    #[test]
    fn rule_fires_on_nothing() {
        let a: Weighting = "-1,1,-1,1".parse().unwrap();
        assert_eq!(zero_out_sides(&[1, 3], &a), a);
    }

    #[test]
    fn conversion_errors() {
        let k4 = complete(4).unwrap();
        let c = Certificate::new(&k4, "1,1,-1,-1".parse().unwrap()).unwrap();
        assert!(matches!(
            convert_type_i_to_ii(&k4, (&[1, 3], &[2, 4]), &c),
            Err(Error::NotBipartite)
        ));
        let g = cycle(4).unwrap();
        let c2 = Certificate::new(&g, "0,1,-1,0".parse().unwrap()).unwrap();
        assert!(matches!(
            convert_type_i_to_ii(&g, (&[1, 3], &[2, 4]), &c2),
            Err(Error::InvalidCertificate(_))
        ));
        assert!(matches!(
            convert_type_i_to_ii(&g, (&[1], &[2, 4]), &c2),
            Err(Error::NotAPartition(_))
        ));
    }
}
