//! Kuratowski subdivisions: extraction from nonplanar graphs and checking.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::planarity::planar_embedding;
use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    K5,
    K33,
}

impl std::fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WitnessKind::K5 => "K5",
            WitnessKind::K33 => "K33",
        })
    }
}

/// A subdivision of `K₅` or `K₃,₃` inside a graph.
///
/// For `K5`, `paths` runs over branch pairs `(i, j)`, `i < j`, in
/// lexicographic order. For `K33` the first three branch vertices form one
/// side and `paths` runs over `(a_i, b_j)` with `i` major. Each path lists
/// every vertex from one branch endpoint to the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionWitness {
    pub kind: WitnessKind,
    pub branch_vertices: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl SubdivisionWitness {
    /// Branch-index pairs each path must connect.
    pub fn required_pairs(kind: WitnessKind) -> Vec<(usize, usize)> {
        match kind {
            WitnessKind::K5 => (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .collect(),
            WitnessKind::K33 => (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect(),
        }
    }

    /// Witness whose branch edges are all direct edges of the graph.
    pub fn direct(kind: WitnessKind, branch_vertices: Vec<usize>) -> Self {
        let paths = Self::required_pairs(kind)
            .into_iter()
            .map(|(i, j)| vec![branch_vertices[i], branch_vertices[j]])
            .collect();
        SubdivisionWitness {
            kind,
            branch_vertices,
            paths,
        }
    }
}

/// True iff `w` is a subdivision of its kind inside `g`: the branch pattern
/// matches, every path edge exists, and path interiors avoid each other and
/// the branch vertices.
pub fn verify_witness(g: &Graph, w: &SubdivisionWitness) -> bool {
    let (branches, pairs) = match w.kind {
        WitnessKind::K5 => (5, 10),
        WitnessKind::K33 => (6, 9),
    };
    if w.branch_vertices.len() != branches || w.paths.len() != pairs {
        return false;
    }
    let branch: HashSet<usize> = w.branch_vertices.iter().copied().collect();
    if branch.len() != branches || branch.iter().any(|&v| v >= g.vertex_count()) {
        return false;
    }
    let mut used_interior = HashSet::new();
    for ((i, j), path) in SubdivisionWitness::required_pairs(w.kind)
        .into_iter()
        .zip(&w.paths)
    {
        if path.len() < 2 {
            return false;
        }
        let (a, b) = (w.branch_vertices[i], w.branch_vertices[j]);
        let (first, last) = (path[0], path[path.len() - 1]);
        if !((first, last) == (a, b) || (first, last) == (b, a)) {
            return false;
        }
        if path.windows(2).any(|s| !g.has_edge(s[0], s[1])) {
            return false;
        }
        for &x in &path[1..path.len() - 1] {
            if branch.contains(&x) || !used_interior.insert(x) {
                return false;
            }
        }
    }
    true
}

/// Finds a Kuratowski subdivision in a nonplanar graph by deleting every
/// edge whose removal keeps the graph nonplanar (ascending edge order). The
/// surviving edges form a minimal nonplanar subgraph, which is a subdivision
/// of `K₅` or `K₃,₃`. Returns `None` for planar graphs.
pub fn extract_witness(g: &Graph) -> Option<SubdivisionWitness> {
    let n = g.vertex_count();
    let mut keep = g.edges();
    if planar_embedding(n, &keep).is_some() {
        return None;
    }
    let mut i = 0;
    while i < keep.len() {
        let e = keep.remove(i);
        if planar_embedding(n, &keep).is_some() {
            keep.insert(i, e);
            i += 1;
        }
    }
    parse_subdivision(n, &keep)
}

fn parse_subdivision(n: usize, edges: &[(usize, usize)]) -> Option<SubdivisionWitness> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match (branch.len(), branch.iter().all(|&v| adj[v].len() == 4)) {
        (5, true) => WitnessKind::K5,
        (6, _) if branch.iter().all(|&v| adj[v].len() == 3) => WitnessKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| adj[v].len() >= 3;

    // path between each adjacent branch pair, keyed by (from, to)
    let mut paths: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &b in &branch {
        for &start in &adj[b] {
            let mut path = vec![b];
            let (mut prev, mut cur) = (b, start);
            while !is_branch(cur) {
                path.push(cur);
                let next = *adj[cur].iter().find(|&&x| x != prev)?;
                prev = cur;
                cur = next;
            }
            path.push(cur);
            paths.insert((b, cur), path);
        }
    }

    let branch_vertices = match kind {
        WitnessKind::K5 => branch.clone(),
        WitnessKind::K33 => {
            let first = branch[0];
            let other: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|&v| paths.contains_key(&(first, v)))
                .collect();
            let mut side: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|v| !other.contains(v))
                .collect();
            side.extend(other);
            side
        }
    };
    let ordered = SubdivisionWitness::required_pairs(kind)
        .into_iter()
        .map(|(i, j)| {
            paths
                .get(&(branch_vertices[i], branch_vertices[j]))
                .cloned()
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SubdivisionWitness {
        kind,
        branch_vertices,
        paths: ordered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_and_k33_have_direct_witnesses() {
        let k5 = Graph::complete(5);
        let w = extract_witness(&k5).unwrap();
        assert_eq!(w.kind, WitnessKind::K5);
        assert!(w.paths.iter().all(|p| p.len() == 2));
        assert!(verify_witness(&k5, &w));

        let k33 = Graph::complete_bipartite(3, 3);
        let w = extract_witness(&k33).unwrap();
        assert_eq!(w.kind, WitnessKind::K33);
        assert_eq!(w.branch_vertices, [0, 1, 2, 3, 4, 5]);
        assert!(verify_witness(&k33, &w));
    }

    #[test]
    fn subdivided_k33() {
        // K33 with edge (0,3) replaced by 0-6-7-3
        let mut edges: Vec<(usize, usize)> = (0..3)
            .flat_map(|i| (3..6).map(move |j| (i, j)))
            .filter(|&e| e != (0, 3))
            .collect();
        edges.extend([(0, 6), (6, 7), (7, 3)]);
        let g = Graph::numbered(8, edges).unwrap();
        let w = extract_witness(&g).unwrap();
        assert_eq!(w.kind, WitnessKind::K33);
        assert!(verify_witness(&g, &w));
        assert!(w.paths.iter().any(|p| p.len() == 4));
    }

    #[test]
    fn planar_graph_has_no_witness() {
        assert!(extract_witness(&Graph::complete(4)).is_none());
    }

    #[test]
    fn verifier_rejects_broken_witnesses() {
        let g = Graph::complete_bipartite(3, 3);
        let good = SubdivisionWitness::direct(WitnessKind::K33, vec![0, 1, 2, 3, 4, 5]);
        assert!(verify_witness(&g, &good));

        // sides mixed up: (0, 1) is not an edge
        let absent = SubdivisionWitness::direct(WitnessKind::K33, vec![0, 3, 2, 1, 4, 5]);
        assert!(!verify_witness(&g, &absent));

        // two paths sharing an interior vertex
        let mut edges: Vec<(usize, usize)> =
            (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        edges.extend([(0, 6), (6, 3), (1, 6)]);
        let h = Graph::numbered(7, edges).unwrap();
        let mut overlap = SubdivisionWitness::direct(WitnessKind::K33, vec![0, 1, 2, 3, 4, 5]);
        overlap.paths[0] = vec![0, 6, 3];
        assert!(verify_witness(&h, &overlap));
        overlap.paths[3] = vec![1, 6, 3];
        assert!(!verify_witness(&h, &overlap));

        // interior vertex that is a branch vertex
        let mut through_branch = good.clone();
        through_branch.paths[0] = vec![0, 4, 1, 3];
        assert!(!verify_witness(&g, &through_branch));

        let mut wrong_count = good;
        wrong_count.paths.pop();
        assert!(!verify_witness(&g, &wrong_count));
    }
}
