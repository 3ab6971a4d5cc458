//! Small-graph isomorphism by backtracking with degree pruning. Only used to
//! assert structural identities on fixtures, hence the hard size cap.

use super::{Graph, GraphError};

/// Cap for [`is_isomorphic_small`]; the search is factorial in the worst case.
pub const ISO_VERTEX_CAP: usize = 12;

/// Decides whether two graphs on at most [`ISO_VERTEX_CAP`] vertices are
/// isomorphic, by degree-pruned backtracking over vertex maps.
pub fn is_isomorphic_small(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > ISO_VERTEX_CAP {
            return Err(GraphError::SizeCap { size: g.vertex_count(), cap: ISO_VERTEX_CAP });
        }
    }
    if n != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(false);
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g1, g2, 0, &mut mapping, &mut used))
}

fn extend(g1: &Graph, g2: &Graph, next: usize, mapping: &mut [usize], used: &mut [bool]) -> bool {
    let n = g1.vertex_count();
    if next == n {
        return true;
    }
    for candidate in 0..n {
        if used[candidate] || g2.degree(candidate) != g1.degree(next) {
            continue;
        }
        let consistent = (0..next).all(|prev| {
            g1.adjacent_ids(prev, next) == g2.adjacent_ids(mapping[prev], candidate)
        });
        if !consistent {
            continue;
        }
        mapping[next] = candidate;
        used[candidate] = true;
        if extend(g1, g2, next + 1, mapping, used) {
            return true;
        }
        mapping[next] = usize::MAX;
        used[candidate] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};

    #[test]
    fn c4_is_k22() {
        let c4 = cycle(4).unwrap();
        let k22 = Graph::from_parts(
            ["a", "b", "x", "y"],
            [
                ("a".into(), "x".into()),
                ("a".into(), "y".into()),
                ("b".into(), "x".into()),
                ("b".into(), "y".into()),
            ],
        )
        .unwrap();
        assert!(is_isomorphic_small(&c4, &k22).unwrap());
    }

    #[test]
    fn k3_is_not_p3() {
        assert!(!is_isomorphic_small(&complete(3).unwrap(), &path(3).unwrap()).unwrap());
    }

    #[test]
    fn size_cap_enforced() {
        let g = complete(13).unwrap();
        assert!(matches!(
            is_isomorphic_small(&g, &g),
            Err(GraphError::SizeCap { size: 13, cap: 12 })
        ));
    }

    #[test]
    fn same_degree_sequence_but_not_isomorphic() {
        // C6 vs two triangles: both 2-regular on 6 vertices.
        let c6 = cycle(6).unwrap();
        let two_k3 = {
            let a = complete(3).unwrap();
            let mut b = Graph::new();
            for v in ["w1", "w2", "w3"] {
                b.add_vertex(v).unwrap();
            }
            b.add_edge("w1", "w2").unwrap();
            b.add_edge("w2", "w3").unwrap();
            b.add_edge("w1", "w3").unwrap();
            a.union(&b).unwrap()
        };
        assert!(!is_isomorphic_small(&c6, &two_k3).unwrap());
    }
}
