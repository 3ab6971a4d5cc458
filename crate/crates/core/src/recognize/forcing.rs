//! Transitive-orientation search by implication-class forcing.
//!
//! A directed edge a->b forces a->c whenever {a,c} is an edge but {b,c} is
//! not (otherwise transitivity would demand the non-edge b..c), and forces
//! c->b whenever {c,b} is an edge but {a,c} is not. Seeding the least
//! undecided edge low->high and closing under these rules yields one
//! implication class; the class is removed and the process repeats on the
//! remaining subgraph. If some class forces an edge both ways the graph has
//! no transitive orientation. The assembled orientation is verified globally
//! at the end, so a positive answer never rests on the theory alone.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Obstruction, Orientation};
use crate::graph::Graph;

/// Edge in canonical (low, high) index form.
type EdgeKey = (usize, usize);

pub fn find_transitive_orientation(g: &Graph) -> Result<Orientation, Obstruction> {
    let n = g.vertex_count();
    let mut remaining: Vec<BTreeSet<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut undecided: BTreeSet<EdgeKey> = g.edge_ids().into_iter().collect();
    // canonical edge -> directed low->high?
    let mut decided: BTreeMap<EdgeKey, bool> = BTreeMap::new();

    while let Some(&(seed_u, seed_v)) = undecided.iter().next() {
        let class = force_class(&remaining, (seed_u, seed_v))
            .map_err(|contradiction| contradiction.into_obstruction(g))?;
        for (&edge, &forward) in &class {
            decided.insert(edge, forward);
            undecided.remove(&edge);
            remaining[edge.0].remove(&edge.1);
            remaining[edge.1].remove(&edge.0);
        }
    }

    let mut out: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (&(u, v), &forward) in &decided {
        if forward {
            out[u].insert(v);
        } else {
            out[v].insert(u);
        }
    }
    for x in 0..n {
        for &y in &out[x] {
            for &z in &out[y] {
                if !out[x].contains(&z) {
                    return Err(Obstruction::TransitivityFailure {
                        x: g.label(x).to_owned(),
                        y: g.label(y).to_owned(),
                        z: g.label(z).to_owned(),
                    });
                }
            }
        }
    }

    let mut pairs = Vec::with_capacity(decided.len());
    for (x, targets) in out.iter().enumerate() {
        for &y in targets {
            pairs.push((g.label(x).to_owned(), g.label(y).to_owned()));
        }
    }
    Ok(Orientation::from_directed_pairs(pairs))
}

struct Contradiction {
    /// Forcing steps (directed index pairs) from the seed to each side of
    /// the doubly-forced edge.
    chain: Vec<(usize, usize)>,
    edge: EdgeKey,
}

impl Contradiction {
    fn into_obstruction(self, g: &Graph) -> Obstruction {
        Obstruction::ForcingContradiction {
            chain: self
                .chain
                .into_iter()
                .map(|(a, b)| (g.label(a).to_owned(), g.label(b).to_owned()))
                .collect(),
            edge: (g.label(self.edge.0).to_owned(), g.label(self.edge.1).to_owned()),
        }
    }
}

/// Closes the seed edge (oriented low -> high) under the two forcing rules
/// inside the graph spanned by `remaining`. Returns the class as canonical
/// edges with their forced direction, or the contradiction trace.
fn force_class(
    remaining: &[BTreeSet<usize>],
    seed: EdgeKey,
) -> Result<BTreeMap<EdgeKey, bool>, Contradiction> {
    let mut class: BTreeMap<EdgeKey, bool> = BTreeMap::new();
    // directed edge -> the directed edge that forced it (seed maps to itself)
    let mut forced_by: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();

    class.insert(seed, true);
    forced_by.insert(seed, seed);
    queue.push_back(seed);

    while let Some((a, b)) = queue.pop_front() {
        for &c in &remaining[a] {
            if c != b && !remaining[b].contains(&c) {
                push_forced((a, c), (a, b), &mut class, &mut forced_by, &mut queue)?;
            }
        }
        for &c in &remaining[b] {
            if c != a && !remaining[a].contains(&c) {
                push_forced((c, b), (a, b), &mut class, &mut forced_by, &mut queue)?;
            }
        }
    }
    Ok(class)
}

fn push_forced(
    directed: (usize, usize),
    by: (usize, usize),
    class: &mut BTreeMap<EdgeKey, bool>,
    forced_by: &mut BTreeMap<(usize, usize), (usize, usize)>,
    queue: &mut VecDeque<(usize, usize)>,
) -> Result<(), Contradiction> {
    let (x, y) = directed;
    let key = (x.min(y), x.max(y));
    let forward = x < y;
    match class.get(&key) {
        Some(&dir) if dir == forward => Ok(()),
        Some(_) => {
            // the opposite direction was already forced: splice both traces
            let mut chain = trace(forced_by, (y, x));
            chain.extend(trace(forced_by, by));
            chain.push(directed);
            Err(Contradiction { chain, edge: key })
        }
        None => {
            class.insert(key, forward);
            forced_by.insert(directed, by);
            queue.push_back(directed);
            Ok(())
        }
    }
}

/// Replays forcing parents from the seed down to `edge`.
fn trace(
    forced_by: &BTreeMap<(usize, usize), (usize, usize)>,
    edge: (usize, usize),
) -> Vec<(usize, usize)> {
    let mut rev = vec![edge];
    let mut at = edge;
    while let Some(&parent) = forced_by.get(&at) {
        if parent == at {
            break;
        }
        rev.push(parent);
        at = parent;
    }
    rev.reverse();
    rev
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless, path};
    use crate::recognize::{net_graph_fixture, validate_orientation};

    #[test]
    fn complete_graphs_get_the_vertex_order_tournament() {
        for n in 1..=7 {
            let g = complete(n).unwrap();
            let o = find_transitive_orientation(&g).unwrap();
            assert_eq!(validate_orientation(&g, &o), Ok(true));
            assert_eq!(o.len(), g.edge_count());
        }
        let k3 = complete(3).unwrap();
        let o = find_transitive_orientation(&k3).unwrap();
        assert!(o.contains("v1", "v2") && o.contains("v2", "v3") && o.contains("v1", "v3"));
    }

    #[test]
    fn odd_holes_are_rejected() {
        for n in [5, 7, 9] {
            let g = cycle(n).unwrap();
            assert!(find_transitive_orientation(&g).is_err(), "C{n} oriented");
        }
    }

    #[test]
    fn even_cycles_and_paths_are_oriented() {
        for n in [4, 6, 8] {
            let g = cycle(n).unwrap();
            let o = find_transitive_orientation(&g).unwrap();
            assert_eq!(validate_orientation(&g, &o), Ok(true));
        }
        for n in 1..=8 {
            let g = path(n).unwrap();
            let o = find_transitive_orientation(&g).unwrap();
            assert_eq!(validate_orientation(&g, &o), Ok(true));
        }
        let e = edgeless(4).unwrap();
        assert!(find_transitive_orientation(&e).unwrap().is_empty());
    }

    #[test]
    fn net_graph_fails_with_witness() {
        let net = net_graph_fixture();
        match find_transitive_orientation(&net) {
            Err(Obstruction::TransitivityFailure { .. })
            | Err(Obstruction::ForcingContradiction { .. }) => {}
            other => panic!("expected an obstruction, got {other:?}"),
        }
    }

    #[test]
    fn c5_contradiction_chain_is_nonempty() {
        let g = cycle(5).unwrap();
        match find_transitive_orientation(&g) {
            Err(Obstruction::ForcingContradiction { chain, .. }) => {
                assert!(chain.len() >= 2);
            }
            other => panic!("expected a forcing contradiction, got {other:?}"),
        }
    }

    #[test]
    fn deterministic_output() {
        let g = cycle(6).unwrap();
        let o1 = find_transitive_orientation(&g).unwrap();
        let o2 = find_transitive_orientation(&g).unwrap();
        assert_eq!(o1, o2);
    }
}
