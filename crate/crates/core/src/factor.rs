//! Products of local rings described only by proper-ideal counts.
//!
//! For `R ≅ R₁ × ⋯ × Rₙ` with local `Rᵢ`, an ideal is a tuple of factor
//! ideals. It is a vertex of Γ(R) when some coordinate is the whole factor
//! (otherwise it lies in `J(R)`) and
//! not every coordinate is. Two vertices are adjacent exactly when every
//! coordinate is the whole factor in at least one of them. Containment
//! between proper ideals of a factor never matters, so each factor is
//! reduced to its count `c` of proper ideals.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::{Graph, GraphBuilder};
use crate::ring::{
    comaximal_graph_of, decompose, enumerate_ideals, Decomposition, FiniteRing, Ideal, IdealLattice,
};
use crate::{Error, Limits, Result};

/// A local factor: `proper_ideals` counts the zero ideal and excludes the
/// factor itself, so fields have 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalFactorSpec {
    pub label: String,
    pub proper_ideals: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductRingSpec {
    factors: Vec<LocalFactorSpec>,
}

/// Coordinate of a vertex code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coord {
    /// Proper ideal of the factor by index; 0 is the zero ideal.
    Proper(usize),
    /// The whole factor.
    Full,
}

/// A vertex of Γ for a product spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCode {
    pub coords: Vec<Coord>,
}

impl VertexCode {
    pub fn new(coords: Vec<Coord>) -> Self {
        VertexCode { coords }
    }

    /// Bit `i` set when coordinate `i` is [`Coord::Full`].
    pub fn full_mask(&self) -> u64 {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Coord::Full)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    pub fn validate(&self, spec: &ProductRingSpec) -> Result<()> {
        if self.coords.len() != spec.len() {
            return Err(Error::InvalidCode(format!(
                "{self} has {} coordinates, spec has {}",
                self.coords.len(),
                spec.len()
            )));
        }
        for (c, f) in self.coords.iter().zip(&spec.factors) {
            if let Coord::Proper(k) = c {
                if *k >= f.proper_ideals {
                    return Err(Error::InvalidCode(format!(
                        "{self}: index {k} out of range for a factor with {} proper ideals",
                        f.proper_ideals
                    )));
                }
            }
        }
        if !self.coords.contains(&Coord::Full) {
            return Err(Error::InvalidCode(format!(
                "{self} lies in the Jacobson radical"
            )));
        }
        if self.coords.iter().all(|&c| c == Coord::Full) {
            return Err(Error::InvalidCode(format!("{self} is the whole ring")));
        }
        Ok(())
    }
}

impl fmt::Display for VertexCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            match c {
                Coord::Full => f.write_str("R")?,
                Coord::Proper(k) => write!(f, "{k}")?,
            }
        }
        f.write_str("⟩")
    }
}

impl ProductRingSpec {
    pub fn new(factors: Vec<LocalFactorSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidSpec("at least one factor is required".into()));
        }
        if factors.len() > 64 {
            return Err(Error::InvalidSpec(
                "at most 64 factors are supported".into(),
            ));
        }
        if let Some(f) = factors.iter().find(|f| f.proper_ideals == 0) {
            return Err(Error::InvalidSpec(format!(
                "factor {} needs at least one proper ideal",
                f.label
            )));
        }
        Ok(ProductRingSpec { factors })
    }

    /// Spec with factors labelled `R1, R2, …`.
    pub fn from_counts(counts: &[usize]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(i, &c)| LocalFactorSpec {
                    label: format!("R{}", i + 1),
                    proper_ideals: c,
                })
                .collect(),
        )
    }

    pub fn factors(&self) -> &[LocalFactorSpec] {
        &self.factors
    }

    pub fn counts(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.proper_ideals).collect()
    }

    /// Number of factors, i.e. of maximal ideals.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Counts sorted ascending.
    pub fn canonical_counts(&self) -> Vec<usize> {
        let mut c = self.counts();
        c.sort_unstable();
        c
    }

    /// Every vertex code, ordered lexicographically with proper indices
    /// before `R` in each coordinate.
    pub fn vertex_codes(&self) -> Vec<VertexCode> {
        let radices: Vec<usize> = self.factors.iter().map(|f| f.proper_ideals + 1).collect();
        let mut out = Vec::new();
        let mut digits = vec![0usize; radices.len()];
        loop {
            let coords: Vec<Coord> = digits
                .iter()
                .zip(&radices)
                .map(|(&d, &r)| {
                    if d + 1 == r {
                        Coord::Full
                    } else {
                        Coord::Proper(d)
                    }
                })
                .collect();
            let fulls = coords.iter().filter(|&&c| c == Coord::Full).count();
            if fulls > 0 && fulls < coords.len() {
                out.push(VertexCode { coords });
            }
            // increment, last coordinate fastest
            let mut i = radices.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                digits[i] += 1;
                if digits[i] < radices[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
    }

    fn all_mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }
}

fn product(values: impl Iterator<Item = u128>) -> u128 {
    values.fold(1u128, |acc, v| {
        acc.checked_mul(v).expect("count overflows u128")
    })
}

/// `∏(cᵢ+1) − ∏cᵢ − 1`.
pub fn vertex_count(spec: &ProductRingSpec) -> u128 {
    let counts = spec.counts();
    product(counts.iter().map(|&c| c as u128 + 1)) - product(counts.iter().map(|&c| c as u128)) - 1
}

/// `∏_{i : vᵢ = R}(cᵢ+1) − 1`: a neighbour must be `R` wherever `v` is
/// not, and is free elsewhere except that it cannot be the whole ring.
pub fn vertex_degree(spec: &ProductRingSpec, v: &VertexCode) -> Result<u128> {
    v.validate(spec)?;
    Ok(product(
        v.coords
            .iter()
            .zip(spec.factors())
            .filter(|(c, _)| **c == Coord::Full)
            .map(|(_, f)| f.proper_ideals as u128 + 1),
    ) - 1)
}

/// Half the degree sum, grouped by the set of full coordinates.
pub fn edge_count(spec: &ProductRingSpec) -> u128 {
    let counts = spec.counts();
    let n = counts.len();
    let mut total = 0u128;
    for mask in 1..(1u128 << n) - 1 {
        let (mut members, mut degree) = (1u128, 1u128);
        for (i, &c) in counts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                degree *= c as u128 + 1;
            } else {
                members *= c as u128;
            }
        }
        total += members * (degree - 1);
    }
    total / 2
}

/// Γ for a product spec, with vertices in [`ProductRingSpec::vertex_codes`]
/// order and labels `⟨x₁,…,xₙ⟩`.
pub fn build_graph(spec: &ProductRingSpec, limits: &Limits) -> Result<Graph> {
    let count = vertex_count(spec);
    if count > limits.graph_vertex_cap as u128 {
        return Err(Error::Capacity {
            what: "graph vertex count",
            size: count,
            cap: limits.graph_vertex_cap as u128,
        });
    }
    let codes = spec.vertex_codes();
    debug_assert_eq!(codes.len() as u128, count);
    let all = spec.all_mask();
    let masks: Vec<u64> = codes.iter().map(VertexCode::full_mask).collect();

    // vertices sharing a mask share their neighbourhood
    let mut distinct: Vec<u64> = masks.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let groups: Vec<FixedBitSet> = distinct
        .iter()
        .map(|&m| {
            let mut bits = FixedBitSet::with_capacity(codes.len());
            masks
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == m)
                .for_each(|(k, _)| bits.insert(k));
            bits
        })
        .collect();

    let mut builder = GraphBuilder::new(codes.iter().map(VertexCode::label).collect())?;
    for (a, &ma) in distinct.iter().enumerate() {
        for (b, &mb) in distinct.iter().enumerate().skip(a) {
            if ma | mb != all {
                continue;
            }
            for u in groups[a].ones() {
                for v in groups[b].ones() {
                    builder.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(builder.build())
}

/// A concrete ring read as a product spec, with everything needed to carry
/// its ideals over to vertex codes.
#[derive(Debug, Clone)]
pub struct SpecTransport {
    pub spec: ProductRingSpec,
    pub decomposition: Decomposition,
    pub factor_lattices: Vec<IdealLattice>,
}

/// Splits `ring` into local factors and reads off `cᵢ = |ideals(Rᵢ)| − 1`.
pub fn spec_from_ring(ring: &FiniteRing, limits: &Limits) -> Result<SpecTransport> {
    if ring.order() > limits.max_order {
        return Err(Error::Capacity {
            what: "ring order",
            size: ring.order() as u128,
            cap: limits.max_order as u128,
        });
    }
    let decomposition = decompose(ring)?;
    let factor_lattices = decomposition
        .factors
        .iter()
        .map(|f| enumerate_ideals(f, limits))
        .collect::<Result<Vec<_>>>()?;
    let spec = ProductRingSpec::new(
        decomposition
            .factors
            .iter()
            .zip(&factor_lattices)
            .map(|(f, l)| LocalFactorSpec {
                label: f.label().to_string(),
                proper_ideals: l.len() - 1,
            })
            .collect(),
    )?;
    Ok(SpecTransport {
        spec,
        decomposition,
        factor_lattices,
    })
}

impl SpecTransport {
    /// The coordinate tuple of an ideal of the source ring: each coordinate
    /// is its projection to a factor, as `R` or a proper-ideal index in the
    /// factor's canonical lattice order.
    pub fn code_of_ideal(&self, ideal: &Ideal) -> Result<VertexCode> {
        let bijection = &self.decomposition.bijection;
        let coords = self
            .decomposition
            .factors
            .iter()
            .zip(&self.factor_lattices)
            .enumerate()
            .map(|(i, (factor, lattice))| {
                let mut projection = FixedBitSet::with_capacity(factor.order());
                for x in ideal.members() {
                    projection.insert(bijection.coords(x)[i]);
                }
                let k = lattice
                    .index_of_bits(&projection)
                    .ok_or_else(|| Error::Precondition("projection is not an ideal".into()))?;
                Ok(if k == lattice.unit_index() {
                    Coord::Full
                } else {
                    Coord::Proper(k)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexCode { coords })
    }

    /// Γ(R) from the table engine, relabelled by vertex codes.
    pub fn transported_graph(&self, ring: &FiniteRing, lattice: &IdealLattice) -> Result<Graph> {
        let graph = comaximal_graph_of(ring, lattice)?;
        let codes: Vec<String> = lattice
            .vertex_indices()
            .into_iter()
            .map(|k| self.code_of_ideal(lattice.ideal(k)).map(|c| c.label()))
            .collect::<Result<_>>()?;
        graph.relabel(|v, _| codes[v].clone())
    }
}

/// Label-transported Γ(R) from the table engine next to Γ of the
/// decomposed spec. Equal graphs mean the two engines agree on `ring`.
pub fn engine_pair(ring: &FiniteRing, limits: &Limits) -> Result<(Graph, Graph)> {
    let transport = spec_from_ring(ring, limits)?;
    let lattice = enumerate_ideals(ring, limits)?;
    let from_ring = transport.transported_graph(ring, &lattice)?;
    let from_spec = build_graph(&transport.spec, limits)?;
    Ok((from_ring, from_spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_planar;

    fn spec(c: &[usize]) -> ProductRingSpec {
        ProductRingSpec::from_counts(c).unwrap()
    }

    fn full_first(c: &[usize]) -> VertexCode {
        let mut coords = vec![Coord::Proper(0); c.len()];
        coords[0] = Coord::Full;
        VertexCode::new(coords)
    }

    #[test]
    fn counts_for_small_specs() {
        assert_eq!(vertex_count(&spec(&[2, 1])), 3);
        assert_eq!(vertex_count(&spec(&[1, 1, 1])), 6);
        assert_eq!(vertex_count(&spec(&[5])), 0);
        assert_eq!(edge_count(&spec(&[1, 1, 1])), 6);
        assert_eq!(edge_count(&spec(&[3, 3])), 9);
        assert_eq!(edge_count(&spec(&[2, 1])), 2);
    }

    #[test]
    fn degrees() {
        let s = spec(&[1, 1, 1]);
        assert_eq!(vertex_degree(&s, &full_first(&[1, 1, 1])).unwrap(), 1);
        let two_full = VertexCode::new(vec![Coord::Proper(0), Coord::Full, Coord::Full]);
        assert_eq!(vertex_degree(&s, &two_full).unwrap(), 3);
        // star centre
        for c1 in 1..6 {
            let s = spec(&[c1, 1]);
            assert_eq!(
                vertex_degree(&s, &full_first(&[c1, 1])).unwrap(),
                c1 as u128
            );
            let g = build_graph(&s, &Limits::default()).unwrap();
            let centre = g.index_of(&full_first(&[c1, 1]).label()).unwrap();
            assert_eq!(g.degree(centre), c1);
        }
    }

    #[test]
    fn invalid_codes_are_rejected() {
        let s = spec(&[2, 1]);
        let bad = [
            VertexCode::new(vec![Coord::Proper(0), Coord::Proper(0)]),
            VertexCode::new(vec![Coord::Full, Coord::Full]),
            VertexCode::new(vec![Coord::Full, Coord::Proper(1)]),
            VertexCode::new(vec![Coord::Full]),
        ];
        for code in &bad {
            assert!(
                matches!(vertex_degree(&s, code), Err(Error::InvalidCode(_))),
                "{code}"
            );
        }
    }

    #[test]
    fn spec_validation() {
        assert!(ProductRingSpec::from_counts(&[]).is_err());
        assert!(ProductRingSpec::from_counts(&[2, 0]).is_err());
    }

    #[test]
    fn two_factors_give_complete_bipartite() {
        let g = build_graph(&spec(&[3, 3]), &Limits::default()).unwrap();
        assert_eq!(g.is_complete_bipartite(), Some((3, 3)));
        assert!(!is_planar(&g, false).is_planar());
        assert_eq!(
            build_graph(&spec(&[1]), &Limits::default())
                .unwrap()
                .vertex_count(),
            0
        );
    }

    #[test]
    fn labels() {
        let g = build_graph(&spec(&[2, 1]), &Limits::default()).unwrap();
        assert_eq!(g.labels(), ["⟨0,R⟩", "⟨1,R⟩", "⟨R,0⟩"]);
        assert!(g.has_edge_labels("⟨R,0⟩", "⟨0,R⟩"));
    }

    #[test]
    fn graph_cap() {
        let tight = Limits {
            graph_vertex_cap: 10,
            ..Limits::default()
        };
        assert!(build_graph(&spec(&[3, 3, 3]), &tight)
            .unwrap_err()
            .is_capacity());
    }

    #[test]
    fn spec_from_zmod() {
        let l = Limits::default();
        let counts = |n| {
            spec_from_ring(&FiniteRing::zmod(n, &l).unwrap(), &l)
                .unwrap()
                .spec
                .counts()
        };
        assert_eq!(counts(12), [2, 1]);
        assert_eq!(counts(30), [1, 1, 1]);
        assert_eq!(counts(8), [3]);
    }

    #[test]
    fn z12_codes() {
        let l = Limits::default();
        let (from_ring, from_spec) = engine_pair(&FiniteRing::zmod(12, &l).unwrap(), &l).unwrap();
        assert!(from_ring.same_labelled(&from_spec));
        // (3) = 3Z/12 is Z/4 × 0 after CRT
        let r = FiniteRing::zmod(12, &l).unwrap();
        let t = spec_from_ring(&r, &l).unwrap();
        let three = crate::ring::principal_ideal(&r, 3).unwrap();
        assert_eq!(t.code_of_ideal(&three).unwrap().label(), "⟨R,0⟩");
    }
}
