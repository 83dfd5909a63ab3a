//! Simple undirected graphs with dense vertex ids `0..n`.

use crate::bitset::Bitset;
use crate::error::GraphError;

/// A finite simple undirected graph.
///
/// Vertices are exactly `0..n()`. Adjacency is stored as one bitset row per
/// vertex, kept symmetric and irreflexive by construction. Optional labels
/// carry provenance such as product coordinates; they take no part in
/// structural equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<Bitset>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bitset::new(n); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Panics on self-loops or ids `>= n`;
    /// callers that take untrusted input validate first.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter()
    }

    /// Open neighborhood as a bitset row.
    pub fn neighbor_bits(&self, u: usize) -> &Bitset {
        &self.adj[u]
    }

    /// Closed neighborhood `N[u]`.
    pub fn closed_neighbor_bits(&self, u: usize) -> Bitset {
        let mut b = self.adj[u].clone();
        b.insert(u);
        b
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as ordered pairs `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count()).sum::<usize>() / 2
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n, "label count must equal order");
        self.labels = Some(labels);
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Complement: `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Subgraph induced by `s`, relabeled to `0..s.len()`. Labels of the new
    /// graph record the original ids (or the original labels when present).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        for &v in s.members() {
            if v >= self.n {
                return Err(GraphError::InvalidVertex {
                    vertex: v,
                    order: self.n,
                });
            }
        }
        let members = s.members();
        let mut g = Graph::new(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        let labels = members
            .iter()
            .map(|&u| match self.label(u) {
                Some(l) => l.to_string(),
                None => u.to_string(),
            })
            .collect();
        g.set_labels(labels);
        Ok(g)
    }

    /// True twins: `N[u] = N[v]`. Only adjacent vertices qualify.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        if u == v || !self.has_edge(u, v) {
            return false;
        }
        self.closed_neighbor_bits(u) == self.closed_neighbor_bits(v)
    }

    /// Whether the graph has any true twin pair.
    pub fn has_true_twins(&self) -> bool {
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u && self.are_true_twins(u, v) {
                    return true;
                }
            }
        }
        false
    }
}

impl PartialEq for Graph {
    /// Structural equality on order and edge set; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

/// A subset of the vertices of some host graph, kept strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Sorts and deduplicates.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn from_bitset(b: &Bitset) -> Self {
        VertexSet {
            members: b.iter().collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_bitset(&self, capacity: usize) -> Bitset {
        let mut b = Bitset::new(capacity);
        for &v in &self.members {
            b.insert(v);
        }
        b
    }

    /// Validates membership against a host graph of order `n`.
    pub fn check_in(&self, n: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= n => Err(GraphError::InvalidVertex { vertex: v, order: n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn complement_of_complete_is_edgeless() {
        let g = families::complete(5).unwrap();
        assert_eq!(g.complement().edge_count(), 0);
    }

    #[test]
    fn complement_of_c4_is_matching() {
        let c4 = families::cycle(4).unwrap();
        let co = c4.complement();
        assert_eq!(co.edges(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn complement_is_involution() {
        let g = families::random_connected_graph(9, 0.4, 7);
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn induced_subgraph_relabels_and_keeps_origin() {
        let c5 = families::cycle(5).unwrap();
        let s = VertexSet::new(vec![1, 2, 3]);
        let p = c5.induced_subgraph(&s).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]); // a path
        assert_eq!(p.label(0), Some("1"));
        assert_eq!(p.label(2), Some("3"));
    }

    #[test]
    fn induced_on_all_vertices_is_identity() {
        let g = families::petersen();
        let all: VertexSet = g.vertices().collect();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
    }

    #[test]
    fn induced_rejects_bad_vertex() {
        let g = families::path(3).unwrap();
        let err = g.induced_subgraph(&VertexSet::new(vec![0, 5])).unwrap_err();
        assert_eq!(err, GraphError::InvalidVertex { vertex: 5, order: 3 });
    }

    #[test]
    fn true_twins_in_complete_graph() {
        let g = families::complete(4).unwrap();
        assert!(g.are_true_twins(0, 3));
    }

    #[test]
    fn same_part_of_bipartite_not_true_twins() {
        // Non-adjacent vertices can never be true twins.
        let g = families::complete_bipartite(2, 3).unwrap();
        assert!(!g.are_true_twins(2, 3));
        assert!(!g.are_true_twins(2, 4));
    }
}
