use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::{FiniteRing, RingKind};
use crate::graph::{Graph, GraphBuilder};
use crate::{Error, Limits, Result};

/// An ideal stored as a bitset over the element indices of its ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring_id: u64,
    members: FixedBitSet,
}

impl Ideal {
    /// Wraps `members` after checking that they form an ideal of `ring`.
    pub fn from_members(
        ring: &FiniteRing,
        members: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(ring.order());
        for m in members {
            if m >= ring.order() {
                return Err(Error::ElementOutOfRange(m));
            }
            bits.insert(m);
        }
        if !is_ideal_set(ring, &bits) {
            return Err(Error::Precondition("member set is not an ideal".into()));
        }
        Ok(Ideal {
            ring_id: ring.id(),
            members: bits,
        })
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    /// Ideals always contain zero, so this is never true; kept for clippy's sake.
    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    /// Member indices in ascending order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring_id != other.ring_id {
            return Err(Error::RingMismatch);
        }
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ok(Ideal {
            ring_id: self.ring_id,
            members,
        })
    }

    pub fn belongs_to(&self, ring: &FiniteRing) -> bool {
        self.ring_id == ring.id()
    }
}

/// True when `set` contains zero and is closed under addition and under
/// multiplication by arbitrary ring elements.
pub fn is_ideal_set(ring: &FiniteRing, set: &FixedBitSet) -> bool {
    if !set.contains(ring.zero()) {
        return false;
    }
    let members: Vec<usize> = set.ones().collect();
    for &a in &members {
        for &b in &members {
            if !set.contains(ring.add(a, b)) {
                return false;
            }
        }
        for r in ring.elements() {
            if !set.contains(ring.mul(r, a)) {
                return false;
            }
        }
    }
    true
}

/// The ideal `Ra = {r·a : r ∈ R}`.
pub fn principal_ideal(ring: &FiniteRing, a: usize) -> Result<Ideal> {
    if a >= ring.order() {
        return Err(Error::ElementOutOfRange(a));
    }
    let mut members = FixedBitSet::with_capacity(ring.order());
    for r in ring.elements() {
        members.insert(ring.mul(r, a));
    }
    Ok(Ideal {
        ring_id: ring.id(),
        members,
    })
}

/// `I + J = {x + y : x ∈ I, y ∈ J}`.
pub fn ideal_sum(ring: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    if !i.belongs_to(ring) || !j.belongs_to(ring) {
        return Err(Error::RingMismatch);
    }
    Ok(Ideal {
        ring_id: ring.id(),
        members: sum_bits(ring, &i.members, &j.members),
    })
}

// I + J is the union of the cosets I + y for y ∈ J. Cosets partition the
// group, so a y already covered contributes nothing new.
fn sum_bits(ring: &FiniteRing, i: &FixedBitSet, j: &FixedBitSet) -> FixedBitSet {
    let mut out = i.clone();
    let base: Vec<usize> = i.ones().collect();
    for y in j.ones() {
        if out.contains(y) {
            continue;
        }
        for &x in &base {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Every ideal of a ring, in canonical order: by cardinality, then
/// lexicographically on the ascending member list.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ring_id: u64,
    ideals: Vec<Ideal>,
    labels: Vec<String>,
    maximal: Vec<usize>,
    jacobson: usize,
    zero: usize,
    unit: usize,
    index: HashMap<FixedBitSet, usize>,
}

/// Enumerates all ideals as the closure of the principal ideals under sums.
pub fn enumerate_ideals(ring: &FiniteRing, limits: &Limits) -> Result<IdealLattice> {
    if ring.order() > limits.max_order {
        return Err(Error::Capacity {
            what: "ring order",
            size: ring.order() as u128,
            cap: limits.max_order as u128,
        });
    }

    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut generators = Vec::new();
    for a in ring.elements() {
        let p = principal_ideal(ring, a)?.members;
        if seen.insert(p.clone()) {
            generators.push(p);
        }
    }
    // every ideal is a finite sum of principal ideals
    let mut worklist = generators.clone();
    while let Some(current) = worklist.pop() {
        for g in &generators {
            if g.is_subset(&current) {
                continue;
            }
            let s = sum_bits(ring, &current, g);
            if seen.insert(s.clone()) {
                worklist.push(s);
            }
        }
    }

    let mut keyed: Vec<(usize, Vec<usize>, FixedBitSet)> = seen
        .into_iter()
        .map(|bits| (bits.count_ones(..), bits.ones().collect(), bits))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    let ideals: Vec<Ideal> = keyed
        .into_iter()
        .map(|(_, _, members)| Ideal {
            ring_id: ring.id(),
            members,
        })
        .collect();
    let index: HashMap<FixedBitSet, usize> = ideals
        .iter()
        .enumerate()
        .map(|(k, i)| (i.members.clone(), k))
        .collect();

    let zero = 0;
    let unit = ideals.len() - 1;
    debug_assert_eq!(ideals[zero].len(), 1);
    debug_assert_eq!(ideals[unit].len(), ring.order());

    let maximal: Vec<usize> = (0..unit)
        .filter(|&k| (0..unit).all(|j| j == k || !ideals[k].is_subset(&ideals[j])))
        .collect();

    let mut radical = ideals[unit].members.clone();
    for &m in &maximal {
        radical.intersect_with(&ideals[m].members);
    }
    let jacobson = index[&radical];

    let labels = ideals
        .iter()
        .enumerate()
        .map(|(k, ideal)| match ring.kind() {
            RingKind::Zmod(_) => {
                let generator = ideal.members().find(|&x| x != 0).unwrap_or(0);
                format!("({generator})")
            }
            RingKind::Other => format!("I{k}"),
        })
        .collect();

    Ok(IdealLattice {
        ring_id: ring.id(),
        ideals,
        labels,
        maximal,
        jacobson,
        zero,
        unit,
        index,
    })
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, k: usize) -> &Ideal {
        &self.ideals[k]
    }

    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn maximal_indices(&self) -> &[usize] {
        &self.maximal
    }

    pub fn jacobson_index(&self) -> usize {
        self.jacobson
    }

    pub fn zero_index(&self) -> usize {
        self.zero
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    /// Exactly one maximal ideal.
    pub fn is_local(&self) -> bool {
        self.maximal.len() == 1
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        if ideal.ring_id != self.ring_id {
            return None;
        }
        self.index.get(&ideal.members).copied()
    }

    pub fn index_of_bits(&self, bits: &FixedBitSet) -> Option<usize> {
        self.index.get(bits).copied()
    }

    pub fn belongs_to(&self, ring: &FiniteRing) -> bool {
        self.ring_id == ring.id()
    }

    /// Lattice indices of the vertices of Γ(R): proper ideals not contained
    /// in the Jacobson radical, in canonical order.
    pub fn vertex_indices(&self) -> Vec<usize> {
        let radical = &self.ideals[self.jacobson];
        (0..self.unit)
            .filter(|&k| !self.ideals[k].is_subset(radical))
            .collect()
    }
}

/// Γ(R) built straight from the definition.
pub fn comaximal_graph(ring: &FiniteRing, limits: &Limits) -> Result<Graph> {
    let lattice = enumerate_ideals(ring, limits)?;
    comaximal_graph_of(ring, &lattice)
}

pub fn comaximal_graph_of(ring: &FiniteRing, lattice: &IdealLattice) -> Result<Graph> {
    if !lattice.belongs_to(ring) {
        return Err(Error::RingMismatch);
    }
    let vertices = lattice.vertex_indices();
    let unit = &lattice.ideals[lattice.unit];
    let mut builder = GraphBuilder::new(
        vertices
            .iter()
            .map(|&k| lattice.labels[k].clone())
            .collect(),
    )?;
    for (a, &i) in vertices.iter().enumerate() {
        for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
            if ideal_sum(ring, &lattice.ideals[i], &lattice.ideals[j])? == *unit {
                builder.add_edge(a, b)?;
            }
        }
    }
    Ok(builder.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: u64) -> FiniteRing {
        FiniteRing::zmod(n, &Limits::default()).unwrap()
    }

    fn labels_of(lattice: &IdealLattice, ks: &[usize]) -> Vec<String> {
        ks.iter().map(|&k| lattice.label(k).to_string()).collect()
    }

    #[test]
    fn z12_lattice() {
        let r = zmod(12);
        let l = enumerate_ideals(&r, &Limits::default()).unwrap();
        assert_eq!(l.labels(), ["(0)", "(6)", "(4)", "(3)", "(2)", "(1)"]);
        assert_eq!(labels_of(&l, l.maximal_indices()), ["(3)", "(2)"]);
        assert_eq!(l.label(l.jacobson_index()), "(6)");
        assert!(!l.is_local());
    }

    #[test]
    fn field_and_chain_rings() {
        let l = enumerate_ideals(&zmod(7), &Limits::default()).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.maximal_indices(), [0]);
        assert_eq!(l.jacobson_index(), 0);

        let l8 = enumerate_ideals(&zmod(8), &Limits::default()).unwrap();
        assert_eq!(labels_of(&l8, l8.maximal_indices()), ["(2)"]);
        assert_eq!(l8.label(l8.jacobson_index()), "(2)");
        assert!(l8.is_local());

        let dual = FiniteRing::poly_quotient(2, &[0, 0, 1], &Limits::default()).unwrap();
        let ld = enumerate_ideals(&dual, &Limits::default()).unwrap();
        assert_eq!(ld.len(), 3);
        // chain: each ideal contains the previous one
        for k in 1..ld.len() {
            assert!(ld.ideal(k - 1).is_subset(ld.ideal(k)));
        }
    }

    #[test]
    fn principal_and_sum() {
        let r = zmod(12);
        let four = principal_ideal(&r, 8).unwrap();
        assert_eq!(four.members().collect::<Vec<_>>(), [0, 4, 8]);
        assert_eq!(principal_ideal(&r, 0).unwrap().len(), 1);
        assert_eq!(principal_ideal(&r, 1).unwrap().len(), 12);
        assert!(principal_ideal(&r, 12).is_err());

        let two = principal_ideal(&r, 2).unwrap();
        let three = principal_ideal(&r, 3).unwrap();
        assert_eq!(ideal_sum(&r, &two, &three).unwrap().len(), 12);
        assert_eq!(ideal_sum(&r, &two, &four).unwrap(), two);
        let zero = principal_ideal(&r, 0).unwrap();
        assert_eq!(ideal_sum(&r, &three, &zero).unwrap(), three);
    }

    #[test]
    fn sum_across_rings_is_rejected() {
        let a = zmod(12);
        let b = zmod(12);
        let i = principal_ideal(&a, 2).unwrap();
        let j = principal_ideal(&b, 3).unwrap();
        assert_eq!(ideal_sum(&a, &i, &j).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn z12_graph_is_a_two_star() {
        let g = comaximal_graph(&zmod(12), &Limits::default()).unwrap();
        assert_eq!(g.labels(), ["(4)", "(3)", "(2)"]);
        assert!(g.has_edge_labels("(2)", "(3)"));
        assert!(g.has_edge_labels("(3)", "(4)"));
        assert!(!g.has_edge_labels("(2)", "(4)"));
    }

    #[test]
    fn local_ring_graph_is_empty() {
        let g = comaximal_graph(&zmod(8), &Limits::default()).unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn z30_graph_edges_are_coprime_pairs() {
        let g = comaximal_graph(&zmod(30), &Limits::default()).unwrap();
        let mut labels = g.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["(10)", "(15)", "(2)", "(3)", "(5)", "(6)"]);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn from_members_validates() {
        let r = zmod(12);
        assert!(Ideal::from_members(&r, [0, 4, 8]).is_ok());
        assert!(Ideal::from_members(&r, [0, 4]).is_err());
        assert!(Ideal::from_members(&r, [0, 40]).is_err());
    }
}
