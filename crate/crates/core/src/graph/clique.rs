//! Exact maximum clique and maximum independent set.
//!
//! Twins are collapsed first: vertices with equal closed neighbourhoods
//! become one weighted vertex, and of a class with equal open neighbourhoods
//! only the lowest index is kept (a clique holds at most one of them). The
//! reduced instance is solved by weighted branch and bound with a greedy
//! colouring bound.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::Graph;
use crate::{Error, Result};

/// A maximum clique as ascending vertex indices.
pub fn max_clique(g: &Graph, budget: u64) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let reduced = Reduction::new(g);
    let kept = &reduced.kept;
    let position: HashMap<usize, usize> = kept.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let adjacency: Vec<FixedBitSet> = kept
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(kept.len());
            for w in g.row(v).ones() {
                if let Some(&k) = position.get(&w) {
                    row.insert(k);
                }
            }
            row
        })
        .collect();
    let weights: Vec<u64> = kept
        .iter()
        .map(|&v| reduced.class[&v].len() as u64)
        .collect();

    let mut search = Search {
        adjacency: &adjacency,
        weights: &weights,
        best: Vec::new(),
        best_weight: 0,
        nodes: 0,
        budget,
    };
    let mut all = FixedBitSet::with_capacity(kept.len());
    all.insert_range(..);
    search.expand(&mut Vec::new(), 0, all)?;

    let mut clique: Vec<usize> = search
        .best
        .iter()
        .flat_map(|&k| reduced.class[&kept[k]].iter().copied())
        .collect();
    clique.sort_unstable();
    debug_assert!(is_clique(g, &clique));
    Ok(clique)
}

pub fn clique_number(g: &Graph, budget: u64) -> Result<usize> {
    max_clique(g, budget).map(|c| c.len())
}

/// A maximum independent set, as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph, budget: u64) -> Result<Vec<usize>> {
    max_clique(&g.complement(), budget)
}

pub fn independence_number(g: &Graph, budget: u64) -> Result<usize> {
    max_independent_set(g, budget).map(|s| s.len())
}

pub fn is_clique(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(k, &a)| vertices[k + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_independent_set(g: &Graph, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(k, &a)| {
        vertices[k + 1..]
            .iter()
            .all(|&b| a != b && !g.has_edge(a, b))
    })
}

struct Reduction {
    kept: Vec<usize>,
    /// True-twin class of each kept vertex.
    class: HashMap<usize, Vec<usize>>,
}

impl Reduction {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut closed: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
        let mut open: HashMap<&FixedBitSet, usize> = HashMap::new();
        let mut open_leader = vec![0; n];
        for (v, leader) in open_leader.iter_mut().enumerate() {
            let mut row = g.row(v).clone();
            row.insert(v);
            closed.entry(row).or_default().push(v);
            *leader = *open.entry(g.row(v)).or_insert(v);
        }
        let mut class = HashMap::new();
        for members in closed.into_values() {
            let leader = members[0];
            if open_leader[leader] == leader {
                class.insert(leader, members);
            }
        }
        let mut kept: Vec<usize> = class.keys().copied().collect();
        kept.sort_unstable();
        Reduction { kept, class }
    }
}

struct Search<'a> {
    adjacency: &'a [FixedBitSet],
    weights: &'a [u64],
    best: Vec<usize>,
    best_weight: u64,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn expand(
        &mut self,
        current: &mut Vec<usize>,
        weight: u64,
        mut candidates: FixedBitSet,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { limit: self.budget });
        }
        if weight > self.best_weight {
            self.best_weight = weight;
            self.best = current.clone();
        }
        let (order, bounds) = self.colour(&candidates);
        for k in (0..order.len()).rev() {
            if weight + bounds[k] <= self.best_weight {
                return Ok(());
            }
            let v = order[k];
            let mut next = candidates.clone();
            next.intersect_with(&self.adjacency[v]);
            current.push(v);
            self.expand(current, weight + self.weights[v], next)?;
            current.pop();
            candidates.set(v, false);
        }
        Ok(())
    }

    /// Greedy colouring of the candidates. Returns them grouped by colour
    /// class, with `bounds[k]` the summed maximum weight of classes up to
    /// and including the class of `order[k]`.
    fn colour(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<u64>) {
        let mut uncoloured = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut total = 0;
        while let Some(first) = uncoloured.ones().next() {
            let mut available = uncoloured.clone();
            let start = order.len();
            let mut heaviest = 0;
            let mut v = Some(first);
            while let Some(x) = v {
                order.push(x);
                heaviest = heaviest.max(self.weights[x]);
                uncoloured.set(x, false);
                available.set(x, false);
                available.difference_with(&self.adjacency[x]);
                v = available.ones().next();
            }
            total += heaviest;
            bounds.extend(std::iter::repeat_n(total, order.len() - start));
        }
        (order, bounds)
    }
}
