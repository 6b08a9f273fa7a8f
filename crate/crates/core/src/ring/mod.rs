//! Table-based finite commutative rings and their ideals.
//!
//! Elements are indices `0..order`; addition and multiplication are dense
//! lookup tables. Everything here is brute force on purpose: this engine is
//! the ground truth the factor model is checked against.

mod decompose;
mod ideal;

use std::sync::atomic::{AtomicU64, Ordering};

pub use decompose::{
    decompose, idempotents, primitive_idempotents, CoordinateBijection, Decomposition,
};
pub use ideal::{
    comaximal_graph, comaximal_graph_of, enumerate_ideals, ideal_sum, principal_ideal, Ideal,
    IdealLattice,
};

use crate::{Error, Limits, Result};

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

fn fresh_id() -> u64 {
    NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)
}

/// How element indices relate to a familiar presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    /// `Z/n` with element `k` at index `k`.
    Zmod(u64),
    Other,
}

/// A finite commutative ring with unity, given by its operation tables.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    id: u64,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    label: String,
    kind: RingKind,
}

fn check_order(order: u128, limits: &Limits) -> Result<()> {
    if order < 2 {
        return Err(Error::InvalidOrder(order as u64));
    }
    if order > limits.max_order as u128 {
        return Err(Error::Capacity {
            what: "ring order",
            size: order,
            cap: limits.max_order as u128,
        });
    }
    Ok(())
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// Index of the coordinate tuple `coords` in mixed radix, first coordinate
/// most significant.
pub(crate) fn mixed_radix_encode(coords: &[usize], radices: &[usize]) -> usize {
    coords
        .iter()
        .zip(radices)
        .fold(0, |acc, (&c, &r)| acc * r + c)
}

pub(crate) fn mixed_radix_decode(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut coords = vec![0; radices.len()];
    for (slot, &r) in coords.iter_mut().zip(radices).rev() {
        *slot = index % r;
        index /= r;
    }
    coords
}

impl FiniteRing {
    /// Builds a ring from raw tables, checking every ring axiom.
    ///
    /// The check is cubic in the order; the dedicated constructors skip it
    /// because their tables are correct by construction.
    pub fn from_tables(
        label: impl Into<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        limits: &Limits,
    ) -> Result<Self> {
        let order = (add.len() as f64).sqrt().round() as usize;
        if order * order != add.len() || mul.len() != add.len() {
            return Err(Error::InvalidTable("tables must be order x order".into()));
        }
        check_order(order as u128, limits)?;
        if zero >= order || one >= order {
            return Err(Error::InvalidTable("identity index out of range".into()));
        }
        if add.iter().chain(&mul).any(|&x| x as usize >= order) {
            return Err(Error::InvalidTable("table entry out of range".into()));
        }
        let ring = Self::assemble(label.into(), order, add, mul, zero, one, RingKind::Other)?;
        ring.check_axioms()?;
        Ok(ring)
    }

    fn assemble(
        label: String,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        kind: RingKind,
    ) -> Result<Self> {
        let mut neg = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] as usize == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        if neg.contains(&u32::MAX) {
            return Err(Error::InvalidTable("missing additive inverse".into()));
        }
        Ok(FiniteRing {
            id: fresh_id(),
            order,
            add,
            mul,
            neg,
            zero,
            one,
            label,
            kind,
        })
    }

    /// `Z/n` with canonical element indices `0..n`.
    pub fn zmod(n: u64, limits: &Limits) -> Result<Self> {
        check_order(n as u128, limits)?;
        let order = n as usize;
        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..n {
            for b in 0..n {
                add.push(((a + b) % n) as u32);
                mul.push(((a * b) % n) as u32);
            }
        }
        Self::assemble(format!("Z/{n}"), order, add, mul, 0, 1, RingKind::Zmod(n))
    }

    /// `F_p[x]/(f)` for a monic `f` given by coefficients, constant term first.
    ///
    /// Element `Σ c_i x^i` (degree below `deg f`) sits at index `Σ c_i p^i`.
    pub fn poly_quotient(p: u64, f: &[u64], limits: &Limits) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&coeff) = f.iter().find(|&&c| c >= p) {
            return Err(Error::UnreducedCoefficient { coeff, p });
        }
        let degree = match f.iter().rposition(|&c| c != 0) {
            Some(d) if d >= 1 && f[d] == 1 => d,
            _ => return Err(Error::NotMonic),
        };
        let order = (p as u128).checked_pow(degree as u32).unwrap_or(u128::MAX);
        check_order(order, limits)?;
        let order = order as usize;
        let p_us = p as usize;

        let to_coeffs = |mut x: usize| {
            let mut c = vec![0u64; degree];
            for slot in c.iter_mut() {
                *slot = (x % p_us) as u64;
                x /= p_us;
            }
            c
        };
        let from_coeffs = |c: &[u64]| {
            c.iter()
                .rev()
                .fold(0usize, |acc, &d| acc * p_us + d as usize)
        };
        let elements: Vec<Vec<u64>> = (0..order).map(to_coeffs).collect();

        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        let mut product = vec![0u64; 2 * degree];
        for a in &elements {
            for b in &elements {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                add.push(from_coeffs(&sum) as u32);

                product.iter_mut().for_each(|c| *c = 0);
                for (i, &x) in a.iter().enumerate() {
                    for (j, &y) in b.iter().enumerate() {
                        product[i + j] = (product[i + j] + x * y) % p;
                    }
                }
                // reduce by the monic modulus from the top degree down
                for top in (degree..2 * degree).rev() {
                    let lead = product[top];
                    if lead == 0 {
                        continue;
                    }
                    for (k, &fk) in f[..=degree].iter().enumerate() {
                        let slot = top - degree + k;
                        product[slot] = (product[slot] + (p - lead) * fk) % p;
                    }
                }
                mul.push(from_coeffs(&product[..degree]) as u32);
            }
        }
        let label = format!("F{p}[x]/({})", poly_to_string(&f[..=degree]));
        Self::assemble(label, order, add, mul, 0, 1, RingKind::Other)
    }

    /// Componentwise ring on the Cartesian product of `factors`.
    ///
    /// Element indices encode coordinate tuples in mixed radix with the first
    /// factor most significant.
    pub fn direct_product(factors: &[FiniteRing], limits: &Limits) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        let order = factors
            .iter()
            .try_fold(1u128, |acc, f| acc.checked_mul(f.order as u128))
            .unwrap_or(u128::MAX);
        check_order(order, limits)?;
        let order = order as usize;
        let radices: Vec<usize> = factors.iter().map(|f| f.order).collect();
        let tuples: Vec<Vec<usize>> = (0..order)
            .map(|i| mixed_radix_decode(i, &radices))
            .collect();

        let mut add = Vec::with_capacity(order * order);
        let mut mul = Vec::with_capacity(order * order);
        let mut scratch_add = vec![0; factors.len()];
        let mut scratch_mul = vec![0; factors.len()];
        for a in &tuples {
            for b in &tuples {
                for (k, f) in factors.iter().enumerate() {
                    scratch_add[k] = f.add(a[k], b[k]);
                    scratch_mul[k] = f.mul(a[k], b[k]);
                }
                add.push(mixed_radix_encode(&scratch_add, &radices) as u32);
                mul.push(mixed_radix_encode(&scratch_mul, &radices) as u32);
            }
        }
        let zero: Vec<usize> = factors.iter().map(|f| f.zero).collect();
        let one: Vec<usize> = factors.iter().map(|f| f.one).collect();
        let label = factors
            .iter()
            .map(|f| f.label.as_str())
            .collect::<Vec<_>>()
            .join("×");
        Self::assemble(
            label,
            order,
            add,
            mul,
            mixed_radix_encode(&zero, &radices),
            mixed_radix_encode(&one, &radices),
            RingKind::Other,
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Smallest `k ≥ 1` with `k·1 = 0`.
    pub fn characteristic(&self) -> usize {
        let mut x = self.one;
        let mut k = 1;
        while x != self.zero {
            x = self.add(x, self.one);
            k += 1;
        }
        k
    }

    /// Exhaustive check of the commutative-ring-with-unity axioms.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.order;
        if self.zero == self.one {
            return Err(Error::InvalidTable("one equals zero".into()));
        }
        let fail = |what: &str, a: usize, b: usize| {
            Err(Error::InvalidTable(format!("{what} fails at ({a}, {b})")))
        };
        for a in 0..n {
            if self.add(a, self.zero) != a {
                return fail("additive identity", a, self.zero);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative identity", a, self.one);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", a, self.neg(a));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative commutativity", a, b);
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive associativity", a, b);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative associativity", a, b);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", a, b);
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn smallest_prime_of_characteristic(&self) -> u64 {
        smallest_prime_factor(self.characteristic() as u64)
    }
}

fn poly_to_string(f: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn zmod_rejects_zero_ring() {
        assert_eq!(
            FiniteRing::zmod(1, &limits()).unwrap_err(),
            Error::InvalidOrder(1)
        );
        assert!(FiniteRing::zmod(0, &limits()).is_err());
    }

    #[test]
    fn zmod_two_is_smallest_field() {
        let r = FiniteRing::zmod(2, &limits()).unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.one(), 1);
        r.check_axioms().unwrap();
    }

    #[test]
    fn zmod_cap_is_enforced() {
        let small = Limits {
            max_order: 10,
            ..Limits::default()
        };
        assert!(FiniteRing::zmod(11, &small).unwrap_err().is_capacity());
    }

    #[test]
    fn poly_quotient_arithmetic() {
        // F2[x]/(x^2 + x + 1): x * x = x + 1
        let r = FiniteRing::poly_quotient(2, &[1, 1, 1], &limits()).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.mul(2, 2), 3);
        assert_eq!(r.label(), "F2[x]/(x^2+x+1)");
        r.check_axioms().unwrap();

        // F3[x]/(x^2): x * x = 0, (1 + x)(2 + x) = 2 + 0x ... checked via axioms
        let s = FiniteRing::poly_quotient(3, &[0, 0, 1], &limits()).unwrap();
        assert_eq!(s.mul(3, 3), 0);
        s.check_axioms().unwrap();
    }

    #[test]
    fn poly_quotient_errors() {
        assert_eq!(
            FiniteRing::poly_quotient(4, &[0, 0, 1], &limits()).unwrap_err(),
            Error::NotPrime(4)
        );
        assert_eq!(
            FiniteRing::poly_quotient(3, &[0, 0, 2], &limits()).unwrap_err(),
            Error::NotMonic
        );
        assert_eq!(
            FiniteRing::poly_quotient(3, &[1], &limits()).unwrap_err(),
            Error::NotMonic
        );
        assert!(matches!(
            FiniteRing::poly_quotient(3, &[5, 1], &limits()),
            Err(Error::UnreducedCoefficient { .. })
        ));
    }

    #[test]
    fn direct_product_tables() {
        let l = limits();
        let p = FiniteRing::direct_product(
            &[
                FiniteRing::zmod(4, &l).unwrap(),
                FiniteRing::zmod(3, &l).unwrap(),
            ],
            &l,
        )
        .unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.label(), "Z/4×Z/3");
        assert_eq!(p.one(), mixed_radix_encode(&[1, 1], &[4, 3]));
        p.check_axioms().unwrap();
        assert_eq!(
            FiniteRing::direct_product(&[], &l).unwrap_err(),
            Error::EmptyProduct
        );
    }

    #[test]
    fn from_tables_rejects_broken_tables() {
        let l = limits();
        // Z/2 with a broken multiplication: 1*1 = 0
        let add = vec![0, 1, 1, 0];
        let mul = vec![0, 0, 0, 0];
        assert!(FiniteRing::from_tables("bad", add.clone(), mul, 0, 1, &l).is_err());
        let ok = FiniteRing::from_tables("F2", add, vec![0, 0, 0, 1], 0, 1, &l).unwrap();
        assert_eq!(ok.characteristic(), 2);
    }

    #[test]
    fn mixed_radix_roundtrip() {
        let radices = [4, 3, 5];
        for i in 0..60 {
            assert_eq!(
                mixed_radix_encode(&mixed_radix_decode(i, &radices), &radices),
                i
            );
        }
    }
}
