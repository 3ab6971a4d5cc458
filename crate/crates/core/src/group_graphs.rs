//! Graphs a finite group induces through element orders: the coprime graph,
//! its radical-graph reduction, power and reduced power graphs, the order
//! graph, and the cyclic-subgroup graph with its containment orientation.
//!
//! Element vertices are labeled `"<index>:<order>"`; radical vertices carry
//! the radical in decimal. Both give deterministic DOT output.

use std::collections::{BTreeMap, BTreeSet};

use crate::arith::{gcd, radical};
use crate::graph::Graph;
use crate::group::{ConcreteGroup, GroupError, GroupSpec, OrderSpectrum};
use crate::recognize::Orientation;

/// Coprimality graph on the distinct radicals of element orders. Deciding
/// the divisor property for a coprime graph reduces to this graph, which has
/// at most `2^|pi(G)| - 1` vertices.
#[derive(Debug, Clone)]
pub struct RadicalGraph {
    graph: Graph,
    radicals: BTreeSet<u64>,
}

impl RadicalGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn radicals(&self) -> &BTreeSet<u64> {
        &self.radicals
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// `{"radicals": [...], "edges": [[x, y], ...]}` with numeric entries.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                serde_json::json!([
                    u.parse::<u64>().expect("radical labels are decimal"),
                    v.parse::<u64>().expect("radical labels are decimal")
                ])
            })
            .collect();
        serde_json::json!({
            "radicals": self.radicals.iter().copied().collect::<Vec<u64>>(),
            "edges": edges,
        })
    }
}

/// Radical graph of an order spectrum: one vertex per distinct radical of a
/// non-identity order, edges between coprime radicals.
pub fn radical_graph(spectrum: &OrderSpectrum) -> RadicalGraph {
    let radicals = spectrum.radicals();
    radical_graph_from_set(&radicals)
}

/// Radical graph on an explicit radical set (already squarefree integers).
pub fn radical_graph_from_set(radicals: &BTreeSet<u64>) -> RadicalGraph {
    let mut graph = Graph::new();
    for &r in radicals {
        graph.add_vertex(r.to_string()).expect("radicals are distinct");
    }
    let list: Vec<u64> = radicals.iter().copied().collect();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            if gcd(list[i], list[j]) == 1 {
                graph
                    .add_edge(&list[i].to_string(), &list[j].to_string())
                    .expect("vertices exist");
            }
        }
    }
    RadicalGraph { graph, radicals: radicals.clone() }
}

fn element_label(group: &ConcreteGroup, index: usize) -> String {
    format!("{index}:{}", group.element_order(index))
}

fn element_graph(group: &ConcreteGroup) -> Graph {
    let mut g = Graph::new();
    for i in 0..group.order() {
        g.add_vertex(element_label(group, i)).expect("indices are distinct");
    }
    g
}

/// Coprime graph: one vertex per element, edges between elements of coprime
/// order. The identity has order 1 and is adjacent to everything else.
pub fn coprime_graph(spec: &GroupSpec) -> Result<Graph, GroupError> {
    Ok(coprime_graph_of(&spec.enumerate()?))
}

pub fn coprime_graph_of(group: &ConcreteGroup) -> Graph {
    let mut g = element_graph(group);
    for i in 0..group.order() {
        for j in i + 1..group.order() {
            if gcd(group.element_order(i), group.element_order(j)) == 1 {
                g.add_edge(&element_label(group, i), &element_label(group, j))
                    .expect("vertices exist");
            }
        }
    }
    g
}

/// Cyclic-subgroup table shared by the power-graph family: per-element
/// subgroup ids plus the strict-containment relation between distinct
/// subgroups.
struct SubgroupTable {
    /// element index -> subgroup id
    of_element: Vec<usize>,
    /// subgroup id -> sorted member set
    members: Vec<BTreeSet<usize>>,
    /// (a, b) with subgroup a strictly contained in subgroup b
    strictly_inside: Vec<Vec<bool>>,
    /// subgroup id -> least element generating it
    representative: Vec<usize>,
}

impl SubgroupTable {
    fn build(group: &ConcreteGroup) -> Self {
        let mut ids: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut of_element = Vec::with_capacity(group.order());
        let mut members: Vec<BTreeSet<usize>> = Vec::new();
        let mut representative: Vec<usize> = Vec::new();
        for i in 0..group.order() {
            let sub = group.cyclic_subgroup(i);
            let id = *ids.entry(sub.clone()).or_insert_with(|| {
                members.push(sub);
                representative.push(i);
                members.len() - 1
            });
            of_element.push(id);
        }
        let count = members.len();
        let mut strictly_inside = vec![vec![false; count]; count];
        for a in 0..count {
            for b in 0..count {
                if a != b
                    && members[a].len() < members[b].len()
                    && members[a].is_subset(&members[b])
                {
                    strictly_inside[a][b] = true;
                }
            }
        }
        Self { of_element, members, strictly_inside, representative }
    }
}

/// Power graph with its canonical transitive orientation: edges point from
/// the element generating the larger cyclic subgroup to the smaller, and
/// run down the element-index chain inside each equal-subgroup class.
pub fn power_graph_with_orientation(spec: &GroupSpec) -> Result<(Graph, Orientation), GroupError> {
    let group = spec.enumerate()?;
    Ok(power_graph_of(&group, &SubgroupTable::build(&group)))
}

pub fn power_graph(spec: &GroupSpec) -> Result<Graph, GroupError> {
    Ok(power_graph_with_orientation(spec)?.0)
}

fn power_graph_of(group: &ConcreteGroup, table: &SubgroupTable) -> (Graph, Orientation) {
    let mut g = element_graph(group);
    let mut directed = Vec::new();
    for i in 0..group.order() {
        for j in i + 1..group.order() {
            let (si, sj) = (table.of_element[i], table.of_element[j]);
            let edge = si == sj || table.strictly_inside[si][sj] || table.strictly_inside[sj][si];
            if !edge {
                continue;
            }
            let (li, lj) = (element_label(group, i), element_label(group, j));
            g.add_edge(&li, &lj).expect("vertices exist");
            if table.strictly_inside[sj][si] || si == sj {
                directed.push((li, lj));
            } else {
                directed.push((lj, li));
            }
        }
    }
    (g, Orientation::from_directed_pairs(directed))
}

/// Reduced power graph: the power graph minus edges between elements
/// generating the same cyclic subgroup. Oriented from the larger subgroup
/// to the smaller.
pub fn reduced_power_graph_with_orientation(
    spec: &GroupSpec,
) -> Result<(Graph, Orientation), GroupError> {
    let group = spec.enumerate()?;
    let table = SubgroupTable::build(&group);
    let mut g = element_graph(&group);
    let mut directed = Vec::new();
    for i in 0..group.order() {
        for j in i + 1..group.order() {
            let (si, sj) = (table.of_element[i], table.of_element[j]);
            if table.strictly_inside[si][sj] {
                let (li, lj) = (element_label(&group, i), element_label(&group, j));
                g.add_edge(&li, &lj).expect("vertices exist");
                directed.push((lj, li));
            } else if table.strictly_inside[sj][si] {
                let (li, lj) = (element_label(&group, i), element_label(&group, j));
                g.add_edge(&li, &lj).expect("vertices exist");
                directed.push((li, lj));
            }
        }
    }
    Ok((g, Orientation::from_directed_pairs(directed)))
}

pub fn reduced_power_graph(spec: &GroupSpec) -> Result<Graph, GroupError> {
    Ok(reduced_power_graph_with_orientation(spec)?.0)
}

/// Order graph: elements adjacent when one order divides the other.
/// Oriented from divisor order to multiple, index chains inside each
/// equal-order class.
pub fn order_graph_with_orientation(spec: &GroupSpec) -> Result<(Graph, Orientation), GroupError> {
    let group = spec.enumerate()?;
    let mut g = element_graph(&group);
    let mut directed = Vec::new();
    for i in 0..group.order() {
        for j in i + 1..group.order() {
            let (oi, oj) = (group.element_order(i), group.element_order(j));
            if oi % oj != 0 && oj % oi != 0 {
                continue;
            }
            let (li, lj) = (element_label(&group, i), element_label(&group, j));
            g.add_edge(&li, &lj).expect("vertices exist");
            if oi == oj || oj % oi == 0 {
                directed.push((li, lj));
            } else {
                directed.push((lj, li));
            }
        }
    }
    Ok((g, Orientation::from_directed_pairs(directed)))
}

pub fn order_graph(spec: &GroupSpec) -> Result<Graph, GroupError> {
    Ok(order_graph_with_orientation(spec)?.0)
}

/// Graph on distinct cyclic subgroups with strict-containment edges,
/// oriented from the larger subgroup to the smaller. Vertices are labeled
/// `"<representative index>:<subgroup order>"`.
pub fn l_graph(spec: &GroupSpec) -> Result<(Graph, Orientation), GroupError> {
    let group = spec.enumerate()?;
    let table = SubgroupTable::build(&group);
    let mut g = Graph::new();
    let label = |id: usize| format!("{}:{}", table.representative[id], table.members[id].len());
    for id in 0..table.members.len() {
        g.add_vertex(label(id)).expect("representatives are distinct");
    }
    let mut directed = Vec::new();
    for a in 0..table.members.len() {
        for b in a + 1..table.members.len() {
            if table.strictly_inside[a][b] {
                g.add_edge(&label(a), &label(b)).expect("vertices exist");
                directed.push((label(b), label(a)));
            } else if table.strictly_inside[b][a] {
                g.add_edge(&label(a), &label(b)).expect("vertices exist");
                directed.push((label(a), label(b)));
            }
        }
    }
    Ok((g, Orientation::from_directed_pairs(directed)))
}

/// The coprime graph decomposed: the radical graph plus, per radical, how
/// many group elements have that order radical. Rebuilding
/// `K1 v radical_graph[edgeless fibers]` recovers the coprime graph.
pub fn decompose_coprime(
    spec: &GroupSpec,
) -> Result<(RadicalGraph, BTreeMap<u64, u64>), GroupError> {
    let spectrum = spec.order_spectrum()?;
    let sizes = spectrum
        .class_sizes_by_radical()
        .ok_or_else(|| GroupError::SupportOnly(spec.to_string()))?;
    Ok((radical_graph(&spectrum), sizes))
}

/// Verifies the structural isomorphism `coprime(G) = K1 v O_G[fibers]` by
/// the explicit bijection (element -> (order radical, rank inside its
/// class)), checking adjacency agreement on every vertex pair. No search is
/// involved.
pub fn verify_coprime_decomposition(spec: &GroupSpec) -> Result<(), String> {
    let group = spec.enumerate().map_err(|e| e.to_string())?;
    let coprime = coprime_graph_of(&group);
    let (radicals, sizes) = decompose_coprime(spec).map_err(|e| e.to_string())?;

    let mut blown_up = radicals
        .graph()
        .lex_product(|r| {
            let size = sizes[&r.parse::<u64>().expect("radical labels are decimal")];
            crate::graph::edgeless(size as usize).ok()
        })
        .map_err(|e| e.to_string())?;
    let mut k1 = Graph::new();
    k1.add_vertex("e").map_err(|e| e.to_string())?;
    blown_up = k1.join(&blown_up).map_err(|e| e.to_string())?;

    if blown_up.vertex_count() != coprime.vertex_count() {
        return Err(format!(
            "vertex counts differ: coprime {} vs reconstruction {}",
            coprime.vertex_count(),
            blown_up.vertex_count()
        ));
    }

    // element index -> reconstructed label
    let mut rank_within: BTreeMap<u64, usize> = BTreeMap::new();
    let mut image: Vec<String> = Vec::with_capacity(group.order());
    for i in 0..group.order() {
        if i == group.identity() {
            image.push("e".to_owned());
            continue;
        }
        let r = radical(group.element_order(i));
        let rank = rank_within.entry(r).or_insert(0);
        // edgeless fiber labels are v1..vk
        image.push(format!("({r},v{})", *rank + 1));
        *rank += 1;
    }

    for label in &image {
        if !blown_up.has_vertex(label) {
            return Err(format!("image vertex {label} missing in reconstruction"));
        }
    }
    for i in 0..group.order() {
        for j in i + 1..group.order() {
            let original = gcd(group.element_order(i), group.element_order(j)) == 1;
            let mapped = blown_up
                .adjacent(&image[i], &image[j])
                .map_err(|e| e.to_string())?;
            if original != mapped {
                return Err(format!(
                    "adjacency mismatch between elements {i} and {j}: coprime {original}, reconstruction {mapped}"
                ));
            }
        }
    }
    Ok(())
}
