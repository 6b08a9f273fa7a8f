#![allow(dead_code)]

use comaximal::{FiniteRing, Graph, Limits};

/// Adjacency matrix copy, so the oracles below touch nothing but edges.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

struct PathSearch<'a> {
    adj: &'a [Vec<bool>],
    used: Vec<bool>,
    pairs: Vec<(usize, usize)>,
}

impl PathSearch<'_> {
    fn route(&mut self, t: usize) -> bool {
        if t == self.pairs.len() {
            return true;
        }
        let (a, b) = self.pairs[t];
        let mut interior = Vec::new();
        self.walk(t, a, b, &mut interior)
    }

    /// Extends a path from `at` towards `target` through unused vertices;
    /// on arrival routes the next pair.
    fn walk(&mut self, t: usize, at: usize, target: usize, interior: &mut Vec<usize>) -> bool {
        if self.adj[at][target] && self.route(t + 1) {
            return true;
        }
        for next in 0..self.adj.len() {
            if self.adj[at][next] && !self.used[next] {
                self.used[next] = true;
                interior.push(next);
                let found = self.walk(t, next, target, interior);
                interior.pop();
                self.used[next] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }
}

fn routable(adj: &[Vec<bool>], branch: &[usize], pairs: Vec<(usize, usize)>) -> bool {
    let mut used = vec![false; adj.len()];
    for &b in branch {
        used[b] = true;
    }
    PathSearch { adj, used, pairs }.route(0)
}

/// Exhaustive search for a subdivision of `K₅` or `K₃,₃`: every choice of
/// branch vertices, then backtracking over internally disjoint paths.
pub fn has_kuratowski_subdivision(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let degree: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|&&x| x).count())
        .collect();

    let deg4: Vec<usize> = (0..n).filter(|&v| degree[v] >= 4).collect();
    for b in combinations(&deg4, 5) {
        let pairs = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (b[i], b[j]))
            .collect();
        if routable(adj, &b, pairs) {
            return true;
        }
    }

    let deg3: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    for six in combinations(&deg3, 6) {
        for rest in combinations(&six[1..], 2) {
            let side_a = [six[0], rest[0], rest[1]];
            let side_b: Vec<usize> = six
                .iter()
                .copied()
                .filter(|v| !side_a.contains(v))
                .collect();
            let pairs = side_a
                .iter()
                .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                .collect();
            if routable(adj, &six, pairs) {
                return true;
            }
        }
    }
    false
}

/// Planarity by Kuratowski's theorem and the exhaustive search.
pub fn oracle_planar(g: &Graph) -> bool {
    !has_kuratowski_subdivision(&matrix(g))
}

/// Every ideal of `ring` by scanning all subsets that contain zero.
pub fn oracle_ideals(ring: &FiniteRing) -> Vec<Vec<usize>> {
    let n = ring.order();
    assert!(n <= 20, "subset scan is exponential");
    let zero = ring.zero();
    let others: Vec<usize> = ring.elements().filter(|&x| x != zero).collect();
    let mut found = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let mut member = vec![false; n];
        member[zero] = true;
        for (i, &x) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                member[x] = true;
            }
        }
        let closed = (0..n).filter(|&a| member[a]).all(|a| {
            (0..n).all(|b| (!member[b] || member[ring.add(a, b)]) && member[ring.mul(a, b)])
        });
        if closed {
            found.push((0..n).filter(|&a| member[a]).collect());
        }
    }
    found.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    found
}

/// Every ring of order at most 16 reachable from the constructors:
/// `Z/n`, `F_p[x]/(f)` for monic `f`, and direct products of those.
pub fn small_rings() -> Vec<FiniteRing> {
    let limits = Limits::default();
    let mut base = Vec::new();
    for n in 2..=16 {
        base.push(FiniteRing::zmod(n, &limits).unwrap());
    }
    for (p, max_deg) in [(2u64, 4u32), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1)] {
        for deg in 1..=max_deg {
            for low in 0..p.pow(deg) {
                let mut f: Vec<u64> = (0..deg).map(|i| low / p.pow(i) % p).collect();
                f.push(1);
                base.push(FiniteRing::poly_quotient(p, &f, &limits).unwrap());
            }
        }
    }
    let mut rings = base.clone();
    let small: Vec<&FiniteRing> = base.iter().filter(|r| r.order() <= 8).collect();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            if a.order() * b.order() <= 16 {
                rings.push(
                    FiniteRing::direct_product(&[(*a).clone(), (*b).clone()], &limits).unwrap(),
                );
            }
        }
    }
    let z2 = FiniteRing::zmod(2, &limits).unwrap();
    let z3 = FiniteRing::zmod(3, &limits).unwrap();
    let z4 = FiniteRing::zmod(4, &limits).unwrap();
    for parts in [
        vec![z2.clone(), z2.clone(), z2.clone()],
        vec![z2.clone(), z2.clone(), z3],
        vec![z2.clone(), z2.clone(), z4],
        vec![z2.clone(), z2.clone(), z2.clone(), z2],
    ] {
        rings.push(FiniteRing::direct_product(&parts, &limits).unwrap());
    }
    rings
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn radical(mut n: u64) -> u64 {
    let mut r = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            r *= p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        r *= n;
    }
    r
}

/// Γ(Z/n) from divisors: vertices `(d)` for divisors `1 < d < n` with
/// `rad(n) ∤ d`, edges when `gcd(d, e) = 1`. Returns sorted labels and
/// sorted label-pair edges.
pub fn zmod_gamma(n: u64) -> (Vec<String>, Vec<(String, String)>) {
    let rad = radical(n);
    let divisors: Vec<u64> = (2..n)
        .filter(|&d| n.is_multiple_of(d) && !d.is_multiple_of(rad))
        .collect();
    let label = |d: u64| format!("({d})");
    let mut labels: Vec<String> = divisors.iter().map(|&d| label(d)).collect();
    labels.sort();
    let mut edges = Vec::new();
    for (i, &a) in divisors.iter().enumerate() {
        for &b in &divisors[i + 1..] {
            if gcd(a, b) == 1 {
                let (x, y) = (label(a), label(b));
                edges.push(if x < y { (x, y) } else { (y, x) });
            }
        }
    }
    edges.sort();
    (labels, edges)
}

/// Labels and label-pair edges of `g`, sorted.
pub fn labelled_edges(g: &Graph) -> (Vec<String>, Vec<(String, String)>) {
    let mut labels = g.labels().to_vec();
    labels.sort();
    let mut edges: Vec<(String, String)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (g.label(a).to_string(), g.label(b).to_string());
            if x < y {
                (x, y)
            } else {
                (y, x)
            }
        })
        .collect();
    edges.sort();
    (labels, edges)
}

/// Vertices of Γ for a product spec straight from the definition: tuples
/// over `{0..cᵢ−1, R}` (`None` is `R`) with some but not every coordinate
/// `R`.
pub fn spec_tuples_by_definition(counts: &[usize]) -> Vec<Vec<Option<usize>>> {
    let mut tuples: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for &c in counts {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..=c).map(move |x| {
                    let mut t = t.clone();
                    t.push(if x == c { None } else { Some(x) });
                    t
                })
            })
            .collect();
    }
    tuples.retain(|t| t.iter().any(Option::is_none) && !t.iter().all(Option::is_none));
    tuples
}

/// Adjacency of Γ from the definition: two tuples are adjacent when every
/// coordinate is `R` in at least one of them.
pub fn spec_gamma_by_definition(counts: &[usize]) -> Vec<Vec<bool>> {
    let tuples = spec_tuples_by_definition(counts);
    let n = tuples.len();
    let mut adj = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            adj[a][b] = a != b
                && tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .all(|(x, y)| x.is_none() || y.is_none());
        }
    }
    adj
}

/// Largest clique size by exhaustive subset scan (small graphs only).
pub fn brute_clique_number(adj: &[Vec<bool>]) -> usize {
    let n = adj.len();
    assert!(n <= 22);
    let rows: Vec<u32> = adj
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &x)| x)
                .fold(0, |m, (b, _)| m | 1 << b)
        })
        .collect();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .all(|v| mask & !(1 << v) & !rows[v] == 0)
        {
            best = size;
        }
    }
    best
}

pub fn complement(adj: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let n = adj.len();
    (0..n)
        .map(|a| (0..n).map(|b| a != b && !adj[a][b]).collect())
        .collect()
}
