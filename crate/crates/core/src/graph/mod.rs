//! Finite simple graphs with stable vertex labels, and exact invariants.

mod clique;
mod export;
mod planarity;
mod witness;

use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;

pub use clique::{
    clique_number, independence_number, is_clique, is_independent_set, max_clique,
    max_independent_set,
};
pub use export::{export, ExportFormat};
pub use planarity::{
    embedding_is_valid, is_planar, is_planar_capped, PlanarityResult, Verdict, DEFAULT_WITNESS_CAP,
};
pub use witness::{extract_witness, verify_witness, SubdivisionWitness, WitnessKind};

use crate::{Error, Result};

/// Undirected simple graph. Vertices are `0..n`, each with a unique label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    rows: Vec<FixedBitSet>,
}

impl GraphBuilder {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(labels.len());
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate label {l:?}")));
            }
        }
        let n = labels.len();
        Ok(GraphBuilder {
            labels,
            rows: vec![FixedBitSet::with_capacity(n); n],
        })
    }

    /// Adds the edge `{a, b}`; repeated edges collapse.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.labels.len();
        if a >= n || b >= n {
            return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
        }
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop at {a}")));
        }
        self.rows[a].insert(b);
        self.rows[b].insert(a);
        Ok(())
    }

    pub fn build(self) -> Graph {
        Graph {
            labels: self.labels,
            rows: self.rows,
        }
    }
}

impl Graph {
    pub fn from_edges(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut b = GraphBuilder::new(labels)?;
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph with vertices labelled `0..n` and the given edges.
    pub fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Self::numbered(n, edges).expect("complete graph is simple")
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j)));
        Self::numbered(m + n, edges).expect("complete bipartite graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.rows.len() && self.rows[a].contains(b)
    }

    pub fn has_edge_labels(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(x), Some(y)) => self.has_edge(x, y),
            _ => false,
        }
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> fixedbitset::Ones<'_> {
        self.rows[v].ones()
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Edges `(i, j)` with `i < j`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.ones().filter(move |&j| j > i).map(move |j| (i, j)))
            .collect()
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertices adjacent to every other vertex, ascending.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let n = self.vertex_count();
        (0..n).filter(|&v| self.degree(v) + 1 == n).collect()
    }

    /// `K_{1,k}` for some `k ≥ 1`: a universal vertex whose removal leaves
    /// no edges. `K_{1,1}` qualifies; a single vertex does not.
    pub fn is_star(&self) -> bool {
        let n = self.vertex_count();
        n >= 2
            && self
                .universal_vertices()
                .first()
                .is_some_and(|_| self.edge_count() == n - 1)
    }

    /// Part sizes `(m, n)` with `m ≤ n` if the graph is `K_{m,n}`, `m ≥ 1`.
    pub fn is_complete_bipartite(&self) -> Option<(usize, usize)> {
        let n = self.vertex_count();
        if n < 2 {
            return None;
        }
        let mut color = vec![u8::MAX; n];
        color[0] = 0;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    reached += 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        if reached != n {
            return None;
        }
        let left = color.iter().filter(|&&c| c == 0).count();
        let right = n - left;
        (self.edge_count() == left * right).then(|| (left.min(right), left.max(right)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        let rows: Vec<FixedBitSet> = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                let mut c = r.clone();
                c.toggle_range(..);
                c.set(v, false);
                c
            })
            .collect();
        debug_assert_eq!(rows.len(), n);
        Graph {
            labels: self.labels.clone(),
            rows,
        }
    }

    /// Subgraph induced on `vertices`, keeping their labels and order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let pos: HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let mut b = GraphBuilder::new(labels).expect("labels stay unique");
        for (k, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if let Some(&j) = pos.get(&w) {
                    if j > k {
                        b.add_edge(k, j).expect("induced edge is valid");
                    }
                }
            }
        }
        b.build()
    }

    /// Same graph with every label passed through `f`.
    pub fn relabel(&self, mut f: impl FnMut(usize, &str) -> String) -> Result<Graph> {
        let labels: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| f(v, l))
            .collect();
        let mut g = self.clone();
        GraphBuilder::new(labels.clone())?;
        g.labels = labels;
        Ok(g)
    }

    /// Equality of labelled vertex sets and labelled edge sets, ignoring
    /// vertex order.
    pub fn same_labelled(&self, other: &Graph) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let pos: HashMap<&str, usize> = other
            .labels
            .iter()
            .enumerate()
            .map(|(k, l)| (l.as_str(), k))
            .collect();
        let Some(map) = self
            .labels
            .iter()
            .map(|l| pos.get(l.as_str()).copied())
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        self.edges()
            .into_iter()
            .all(|(a, b)| other.has_edge(map[a], map[b]))
    }

    /// Connected components as ascending vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_bad_input() {
        assert!(GraphBuilder::new(vec!["a".into(), "a".into()]).is_err());
        let mut b = GraphBuilder::new(vec!["a".into(), "b".into()]).unwrap();
        assert!(b.add_edge(0, 0).is_err());
        assert!(b.add_edge(0, 2).is_err());
        b.add_edge(0, 1).unwrap();
        b.add_edge(1, 0).unwrap();
        assert_eq!(b.build().edge_count(), 1);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(
            Graph::numbered(0, []).unwrap().degree_sequence(),
            Vec::<usize>::new()
        );
        assert_eq!(Graph::complete_bipartite(3, 3).degree_sequence(), [3; 6]);
    }

    #[test]
    fn stars_and_universal_vertices() {
        let star = Graph::complete_bipartite(1, 3);
        assert_eq!(star.universal_vertices(), [0]);
        assert!(star.is_star());
        assert!(Graph::complete_bipartite(1, 1).is_star());

        let square = Graph::complete_bipartite(2, 2);
        assert!(square.universal_vertices().is_empty());
        assert!(!square.is_star());
        assert_eq!(square.is_complete_bipartite(), Some((2, 2)));

        let single = Graph::numbered(1, []).unwrap();
        assert_eq!(single.universal_vertices(), [0]);
        assert!(!single.is_star());
        assert!(!Graph::numbered(0, []).unwrap().is_star());
        assert!(!Graph::complete(3).is_star());
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert_eq!(
            Graph::complete_bipartite(2, 5).is_complete_bipartite(),
            Some((2, 5))
        );
        assert_eq!(Graph::complete(3).is_complete_bipartite(), None);
        // path on 4 vertices is bipartite but not complete bipartite
        let p4 = Graph::numbered(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.is_complete_bipartite(), None);
        // two disjoint edges
        let m = Graph::numbered(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(m.is_complete_bipartite(), None);
    }

    #[test]
    fn complement_and_relabel() {
        let g = Graph::complete_bipartite(2, 2);
        let c = g.complement();
        assert_eq!(c.edges(), [(0, 1), (2, 3)]);
        let r = g.relabel(|v, _| format!("v{v}")).unwrap();
        assert!(r.has_edge_labels("v0", "v2"));
        assert!(g.relabel(|_, _| "same".into()).is_err());
    }

    #[test]
    fn labelled_equality_ignores_vertex_order() {
        let a = Graph::from_edges(vec!["x".into(), "y".into(), "z".into()], [(0, 1)]).unwrap();
        let b = Graph::from_edges(vec!["z".into(), "y".into(), "x".into()], [(2, 1)]).unwrap();
        let c = Graph::from_edges(vec!["z".into(), "y".into(), "x".into()], [(0, 1)]).unwrap();
        assert!(a.same_labelled(&b));
        assert!(!a.same_labelled(&c));
    }
}
