//! Finite simple undirected graphs with stable string vertex labels, plus
//! the constructions the divisor-graph results compose: induced subgraphs,
//! disjoint union, join, and the generalized lexicographic product.
//!
//! Vertices keep their insertion order and every algorithm iterates in that
//! order, so outputs are deterministic across runs.

mod io;
mod iso;

pub use iso::is_isomorphic_small;

use std::collections::BTreeSet;
use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("vertex sets overlap at `{0}`")]
    OverlappingLabels(String),
    #[error("no fiber graph supplied for vertex `{0}`")]
    MissingFiber(String),
    #[error("graph too large for this operation: {size} vertices exceeds cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
}

/// Finite simple undirected graph. No loops, no multi-edges.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex labels (insertion order) and label-pair edges.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.into())?;
        }
        for (u, v) in edges {
            g.add_edge(&u, &v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize, GraphError> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(GraphError::DuplicateVertex(label));
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(id)
    }

    /// Adds the vertex if not already present, returning its index either way.
    pub fn ensure_vertex(&mut self, label: &str) -> usize {
        match self.index.get(label) {
            Some(&id) => id,
            None => self.add_vertex(label).expect("checked absent"),
        }
    }

    /// Adds an undirected edge between two existing vertices (idempotent).
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let ui = self.vertex_id(u)?;
        let vi = self.vertex_id(v)?;
        if ui == vi {
            return Err(GraphError::LoopEdge(u.to_owned()));
        }
        self.adj[ui].insert(vi);
        self.adj[vi].insert(ui);
        Ok(())
    }

    pub fn vertex_id(&self, label: &str) -> Result<usize, GraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(label.to_owned()))
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.labels.iter().map(String::as_str)
    }

    pub fn degree(&self, id: usize) -> usize {
        self.adj[id].len()
    }

    pub fn neighbors(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[id].iter().copied()
    }

    pub fn adjacent_ids(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn adjacent(&self, u: &str, v: &str) -> Result<bool, GraphError> {
        Ok(self.adjacent_ids(self.vertex_id(u)?, self.vertex_id(v)?))
    }

    /// Edges as index pairs (u, v) with u < v, ascending.
    pub fn edge_ids(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.labels.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges as label pairs following the index order of `edge_ids`.
    pub fn edges(&self) -> Vec<(String, String)> {
        self.edge_ids()
            .into_iter()
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.adj.iter().map(BTreeSet::len).collect();
        ds.sort_unstable();
        ds
    }

    /// Subgraph induced by `keep`, preserving the original vertex order.
    pub fn induced_subgraph<'a, I>(&self, keep: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut keep_ids = BTreeSet::new();
        for label in keep {
            keep_ids.insert(self.vertex_id(label)?);
        }
        let mut g = Graph::new();
        for &id in &keep_ids {
            g.add_vertex(self.labels[id].clone())?;
        }
        for &u in &keep_ids {
            for &v in &self.adj[u] {
                if u < v && keep_ids.contains(&v) {
                    g.add_edge(&self.labels[u].clone(), &self.labels[v].clone())?;
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; the label sets must not overlap.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        for label in other.labels() {
            if self.has_vertex(label) {
                return Err(GraphError::OverlappingLabels(label.to_owned()));
            }
        }
        let mut g = self.clone();
        for label in other.labels() {
            g.add_vertex(label)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(&u, &v)?;
        }
        Ok(g)
    }

    /// Join: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.union(other)?;
        for u in self.labels() {
            for v in other.labels() {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Generalized lexicographic product: every vertex `v` of `self` is
    /// replaced by its fiber graph, fibers of adjacent vertices are joined
    /// completely, and each fiber keeps its own edges. Product vertices are
    /// labeled `"(v,w)"`.
    pub fn lex_product<F>(&self, mut fiber: F) -> Result<Graph, GraphError>
    where
        F: FnMut(&str) -> Option<Graph>,
    {
        let mut fibers = Vec::with_capacity(self.vertex_count());
        for v in self.labels() {
            let f = fiber(v).ok_or_else(|| GraphError::MissingFiber(v.to_owned()))?;
            fibers.push(f);
        }
        let mut g = Graph::new();
        let pair = |v: &str, w: &str| format!("({v},{w})");
        for (v, f) in self.labels().zip(&fibers) {
            for w in f.labels() {
                g.add_vertex(pair(v, w))?;
            }
        }
        // fiber-internal edges
        for (v, f) in self.labels().zip(&fibers) {
            for (w1, w2) in f.edges() {
                g.add_edge(&pair(v, &w1), &pair(v, &w2))?;
            }
        }
        // complete connections along the base edges
        for (u, v) in self.edge_ids() {
            let (lu, lv) = (self.label(u), self.label(v));
            for w1 in fibers[u].labels() {
                for w2 in fibers[v].labels() {
                    g.add_edge(&pair(lu, w1), &pair(lv, w2))?;
                }
            }
        }
        Ok(g)
    }
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

/// Complete graph on `n >= 1` vertices labeled `v1..vn`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadParameter("complete graph needs n >= 1".into()));
    }
    let labels = numbered_labels(n);
    let mut g = Graph::from_parts(labels.clone(), [])?;
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(&labels[i], &labels[j])?;
        }
    }
    Ok(g)
}

/// Edgeless graph on `n >= 1` vertices.
pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadParameter("edgeless graph needs n >= 1".into()));
    }
    Graph::from_parts(numbered_labels(n), [])
}

/// Path on `n >= 1` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::BadParameter("path needs n >= 1".into()));
    }
    let labels = numbered_labels(n);
    let mut g = Graph::from_parts(labels.clone(), [])?;
    for w in labels.windows(2) {
        g.add_edge(&w[0], &w[1])?;
    }
    Ok(g)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter("cycle needs n >= 3".into()));
    }
    let labels = numbered_labels(n);
    let mut g = path(n)?;
    g.add_edge(&labels[n - 1], &labels[0])?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_graphs() {
        assert_eq!(complete(3).unwrap().edge_count(), 3);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(5).unwrap().degree_sequence().iter().all(|&d| d == 2));
        assert_eq!(edgeless(4).unwrap().edge_count(), 0);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let k4 = complete(4).unwrap();
        let sub = k4.induced_subgraph(["v1", "v2", "v4"]).unwrap();
        assert_eq!(sub.vertex_count(), 3);
        assert_eq!(sub.edge_count(), 3);
    }

    #[test]
    fn induced_subgraph_drops_crossing_edges() {
        let p3 = path(3).unwrap();
        let sub = p3.induced_subgraph(["v1", "v3"]).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.edge_count(), 0);
        assert!(p3.induced_subgraph(["nope"]).is_err());
    }

    #[test]
    fn union_and_join_counts() {
        let k2 = complete(2).unwrap();
        let mut k1 = Graph::new();
        k1.add_vertex("w").unwrap();
        let u = k2.union(&k1).unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (3, 1));

        let j = k2.join(&k1).unwrap();
        assert_eq!((j.vertex_count(), j.edge_count()), (3, 3));

        let overlap = k2.union(&complete(2).unwrap());
        assert!(overlap.is_err());
    }

    #[test]
    fn union_and_join_associate_on_disjoint_labels() {
        let a = complete(2).unwrap();
        let b = Graph::from_parts(["x", "y"], [("x".into(), "y".into())]).unwrap();
        let c = Graph::from_parts(["p", "q", "r"], [("p".into(), "q".into())]).unwrap();
        for op in [Graph::union, Graph::join] {
            let left = op(&op(&a, &b).unwrap(), &c).unwrap();
            let right = op(&a, &op(&b, &c).unwrap()).unwrap();
            assert_eq!(left.labels().collect::<Vec<_>>(), right.labels().collect::<Vec<_>>());
            assert_eq!(left.edges(), right.edges());
        }
    }

    #[test]
    fn join_of_k1_and_edgeless_is_star() {
        let mut hub = Graph::new();
        hub.add_vertex("hub").unwrap();
        let star = hub.join(&edgeless(4).unwrap()).unwrap();
        assert_eq!(star.edge_count(), 4);
        assert_eq!(star.degree(0), 4);
    }

    #[test]
    fn lex_product_with_singleton_fibers_is_base() {
        let k2 = complete(2).unwrap();
        let g = k2.lex_product(|_| Some(edgeless(1).unwrap())).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn lex_product_over_k1_is_fiber() {
        let mut k1 = Graph::new();
        k1.add_vertex("b").unwrap();
        let g = k1.lex_product(|_| Some(cycle(4).unwrap())).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
    }

    #[test]
    fn lex_product_mixed_fibers() {
        let k2 = complete(2).unwrap();
        let g = k2
            .lex_product(|v| {
                Some(if v == "v1" { complete(2).unwrap() } else { edgeless(2).unwrap() })
            })
            .unwrap();
        // 4 cross edges plus the one fiber edge
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 5));
    }

    #[test]
    fn lex_product_requires_all_fibers() {
        let k2 = complete(2).unwrap();
        let res = k2.lex_product(|v| (v == "v1").then(|| edgeless(1).unwrap()));
        assert_eq!(res.unwrap_err(), GraphError::MissingFiber("v2".into()));
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        let mut g = Graph::new();
        g.add_vertex("a").unwrap();
        assert!(g.add_vertex("a").is_err());
        assert!(g.add_edge("a", "a").is_err());
        assert!(g.add_edge("a", "b").is_err());
    }
}
