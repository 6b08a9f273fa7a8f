use super::{mixed_radix_encode, FiniteRing, RingKind};
use crate::Result;

/// All `e` with `e·e = e`, ascending.
pub fn idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.elements().filter(|&e| ring.mul(e, e) == e).collect()
}

/// Nonzero idempotents that do not split further. They are pairwise
/// orthogonal and sum to one, one per local factor.
pub fn primitive_idempotents(ring: &FiniteRing) -> Vec<usize> {
    let all = idempotents(ring);
    all.iter()
        .copied()
        .filter(|&e| e != ring.zero())
        .filter(|&e| {
            all.iter()
                .all(|&f| f == ring.zero() || f == e || ring.mul(e, f) != f)
        })
        .collect()
}

/// Element-level isomorphism `R → R₁ × ⋯ × Rₙ`.
///
/// Product elements use the mixed-radix encoding of
/// [`FiniteRing::direct_product`], so `forward` lands directly in the
/// recombined product ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateBijection {
    radices: Vec<usize>,
    coords: Vec<Vec<usize>>,
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl CoordinateBijection {
    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// Coordinates of ring element `x` in each factor.
    pub fn coords(&self, x: usize) -> &[usize] {
        &self.coords[x]
    }

    /// Mixed-radix product index of ring element `x`.
    pub fn forward(&self, x: usize) -> usize {
        self.forward[x]
    }

    pub fn inverse(&self, y: usize) -> usize {
        self.inverse[y]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// A ring split into local factors by its primitive idempotents.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub factors: Vec<FiniteRing>,
    /// The primitive idempotent `e` of the source ring with factor `eR`.
    pub idempotents: Vec<usize>,
    pub bijection: CoordinateBijection,
}

/// Splits `ring` as `e₁R × ⋯ × eₙR` over its primitive idempotents.
///
/// Factors are ordered by the smallest prime dividing their characteristic,
/// then by order, then by idempotent index; for `Z/n` this is the usual
/// prime-power factorisation order. A factor whose additive group is
/// generated by its unity is re-indexed as a canonical `Z/m`.
pub fn decompose(ring: &FiniteRing) -> Result<Decomposition> {
    let mut parts: Vec<(usize, FiniteRing, Vec<usize>)> = primitive_idempotents(ring)
        .into_iter()
        .map(|e| {
            let (factor, positions) = corner_ring(ring, e)?;
            Ok((e, factor, positions))
        })
        .collect::<Result<_>>()?;
    parts.sort_by_key(|(e, f, _)| (f.smallest_prime_of_characteristic(), f.order(), *e));

    let radices: Vec<usize> = parts.iter().map(|(_, f, _)| f.order()).collect();
    let mut coords = Vec::with_capacity(ring.order());
    let mut forward = Vec::with_capacity(ring.order());
    let mut inverse = vec![usize::MAX; ring.order()];
    for x in ring.elements() {
        let c: Vec<usize> = parts
            .iter()
            .map(|(e, _, positions)| positions[ring.mul(*e, x)])
            .collect();
        let y = mixed_radix_encode(&c, &radices);
        forward.push(y);
        inverse[y] = x;
        coords.push(c);
    }
    debug_assert!(inverse.iter().all(|&x| x != usize::MAX));

    let (idempotents, factors) = parts.into_iter().map(|(e, f, _)| (e, f)).unzip();
    Ok(Decomposition {
        factors,
        idempotents,
        bijection: CoordinateBijection {
            radices,
            coords,
            forward,
            inverse,
        },
    })
}

/// The ring `eR` with identity `e`, plus the position of each of its
/// elements (indexed by source element, `usize::MAX` outside `eR`).
fn corner_ring(ring: &FiniteRing, e: usize) -> Result<(FiniteRing, Vec<usize>)> {
    let mut members: Vec<usize> = ring.elements().map(|r| ring.mul(e, r)).collect();
    members.sort_unstable();
    members.dedup();

    // additive multiples of e enumerate eR when it is cyclic
    let mut multiples = vec![ring.zero()];
    let mut x = e;
    while x != ring.zero() {
        multiples.push(x);
        x = ring.add(x, e);
    }
    let cyclic = multiples.len() == members.len();
    if cyclic {
        members = multiples;
    }

    let mut positions = vec![usize::MAX; ring.order()];
    for (k, &m) in members.iter().enumerate() {
        positions[m] = k;
    }
    let size = members.len();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for &a in &members {
        for &b in &members {
            add.push(positions[ring.add(a, b)] as u32);
            mul.push(positions[ring.mul(a, b)] as u32);
        }
    }
    let (label, kind) = if cyclic {
        (format!("Z/{size}"), RingKind::Zmod(size as u64))
    } else {
        (format!("e{e}({})", ring.label()), RingKind::Other)
    };
    let factor = FiniteRing::assemble(
        label,
        size,
        add,
        mul,
        positions[ring.zero()],
        positions[e],
        kind,
    )?;
    Ok((factor, positions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::enumerate_ideals;
    use crate::Limits;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn z6_splits_into_two_fields() {
        let r = FiniteRing::zmod(6, &l()).unwrap();
        assert_eq!(idempotents(&r), [0, 1, 3, 4]);
        let d = decompose(&r).unwrap();
        let orders: Vec<usize> = d.factors.iter().map(|f| f.order()).collect();
        assert_eq!(orders, [2, 3]);
        for f in &d.factors {
            f.check_axioms().unwrap();
            assert_eq!(enumerate_ideals(f, &l()).unwrap().len(), 2);
        }
    }

    #[test]
    fn local_ring_is_its_own_factor() {
        let r = FiniteRing::zmod(4, &l()).unwrap();
        assert_eq!(idempotents(&r), [0, 1]);
        let d = decompose(&r).unwrap();
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].order(), 4);
        assert_eq!(d.factors[0].label(), "Z/4");
    }

    #[test]
    fn boolean_cube() {
        let f2 = FiniteRing::zmod(2, &l()).unwrap();
        let r = FiniteRing::direct_product(&[f2.clone(), f2.clone(), f2], &l()).unwrap();
        assert_eq!(idempotents(&r).len(), 8);
        let d = decompose(&r).unwrap();
        assert_eq!(d.factors.len(), 3);
        assert!(d.factors.iter().all(|f| f.order() == 2));
    }

    #[test]
    fn z12_factor_order_follows_primes() {
        let r = FiniteRing::zmod(12, &l()).unwrap();
        let d = decompose(&r).unwrap();
        let labels: Vec<&str> = d.factors.iter().map(|f| f.label()).collect();
        assert_eq!(labels, ["Z/4", "Z/3"]);
        // CRT: 7 ↦ (3 mod 4, 1 mod 3)
        assert_eq!(d.bijection.coords(7), [3, 1]);
        for x in r.elements() {
            assert_eq!(d.bijection.inverse(d.bijection.forward(x)), x);
        }
    }

    #[test]
    fn bijection_is_a_ring_isomorphism() {
        let a = FiniteRing::poly_quotient(2, &[0, 0, 1], &l()).unwrap();
        let b = FiniteRing::zmod(3, &l()).unwrap();
        let r = FiniteRing::direct_product(&[a, b], &l()).unwrap();
        let d = decompose(&r).unwrap();
        let p = FiniteRing::direct_product(&d.factors, &l()).unwrap();
        let phi = &d.bijection;
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(
                    phi.forward(r.add(x, y)),
                    p.add(phi.forward(x), phi.forward(y))
                );
                assert_eq!(
                    phi.forward(r.mul(x, y)),
                    p.mul(phi.forward(x), phi.forward(y))
                );
            }
        }
        assert_eq!(phi.forward(r.one()), p.one());
    }
}
