//! Left-right planarity test with embedding construction.
//!
//! This follows Brandes' formulation of the de Fraysseix–Rosenstiehl
//! left-right criterion: a DFS orientation, lowpoints and nesting depths,
//! then a second DFS that maintains a stack of conflict pairs of return-edge
//! intervals. On success the side assignments are resolved and a rotation
//! system is assembled. All DFS passes are iterative.

use std::collections::HashMap;

use super::witness::{extract_witness, SubdivisionWitness};
use super::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Planar,
    Nonplanar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarityResult {
    pub verdict: Verdict,
    /// Clockwise neighbour order around each vertex, for planar graphs.
    pub embedding: Option<Vec<Vec<usize>>>,
    /// Kuratowski subdivision, when requested and the graph is small enough.
    pub witness: Option<SubdivisionWitness>,
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        self.verdict == Verdict::Planar
    }
}

/// Default vertex limit for witness extraction.
pub const DEFAULT_WITNESS_CAP: usize = 64;

/// Exact planarity verdict; with `want_witness`, nonplanar graphs up to
/// [`DEFAULT_WITNESS_CAP`] vertices also get a Kuratowski witness.
pub fn is_planar(g: &Graph, want_witness: bool) -> PlanarityResult {
    is_planar_capped(g, want_witness, DEFAULT_WITNESS_CAP)
}

pub fn is_planar_capped(g: &Graph, want_witness: bool, witness_cap: usize) -> PlanarityResult {
    let n = g.vertex_count();
    let embedding = if n > 2 && g.edge_count() > 3 * n - 6 {
        None
    } else {
        planar_embedding(n, &g.edges())
    };
    match embedding {
        Some(rotation) => PlanarityResult {
            verdict: Verdict::Planar,
            embedding: Some(rotation),
            witness: None,
        },
        None => PlanarityResult {
            verdict: Verdict::Nonplanar,
            embedding: None,
            witness: (want_witness && g.vertex_count() <= witness_cap)
                .then(|| extract_witness(g))
                .flatten(),
        },
    }
}

/// Checks that `rotation` is a rotation system of `g` whose face count
/// satisfies Euler's formula `F = E − V + 2` on every component with edges.
pub fn embedding_is_valid(g: &Graph, rotation: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    if rotation.len() != n {
        return false;
    }
    let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(n);
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if !sorted.iter().copied().eq(g.neighbors(v)) {
            return false;
        }
        position.push(rot.iter().enumerate().map(|(k, &w)| (w, k)).collect());
    }

    let components = g.components();
    let mut component_of = vec![0; n];
    for (c, members) in components.iter().enumerate() {
        for &v in members {
            component_of[v] = c;
        }
    }
    let mut faces = vec![0usize; components.len()];
    let mut visited: HashMap<(usize, usize), bool> = HashMap::new();
    for v in 0..n {
        for &w in &rotation[v] {
            if visited.contains_key(&(v, w)) {
                continue;
            }
            faces[component_of[v]] += 1;
            let (mut a, mut b) = (v, w);
            loop {
                visited.insert((a, b), true);
                let rot = &rotation[b];
                let k = position[b][&a];
                let next = rot[(k + rot.len() - 1) % rot.len()];
                (a, b) = (b, next);
                if (a, b) == (v, w) {
                    break;
                }
                if visited.contains_key(&(a, b)) {
                    return false;
                }
            }
        }
    }
    components.iter().zip(&faces).all(|(members, &f)| {
        let vs = members.len();
        let es: usize = members.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        es == 0 || f + vs == es + 2
    })
}

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
struct ConflictPair {
    id: u64,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

#[derive(Debug, Clone, Copy)]
struct Link {
    cw: usize,
    ccw: usize,
}

/// Rotation system under construction: per vertex, a cyclic doubly linked
/// list of neighbours plus the current leftmost one.
struct Rotation {
    links: Vec<HashMap<usize, Link>>,
    leftmost: Vec<Option<usize>>,
}

impl Rotation {
    fn new(n: usize) -> Self {
        Rotation {
            links: vec![HashMap::new(); n],
            leftmost: vec![None; n],
        }
    }

    /// Inserts `start → end`. A `cw` reference places `end` immediately
    /// counter-clockwise of it; a `ccw` reference immediately clockwise.
    fn add_half_edge(&mut self, start: usize, end: usize, cw: Option<usize>, ccw: Option<usize>) {
        let links = &mut self.links[start];
        if links.is_empty() {
            links.insert(end, Link { cw: end, ccw: end });
            self.leftmost[start] = Some(end);
            return;
        }
        if let Some(reference) = cw {
            let ref_ccw = links[&reference].ccw;
            links.insert(
                end,
                Link {
                    cw: reference,
                    ccw: ref_ccw,
                },
            );
            links.get_mut(&ref_ccw).expect("linked").cw = end;
            links.get_mut(&reference).expect("linked").ccw = end;
            if self.leftmost[start] == Some(reference) {
                self.leftmost[start] = Some(end);
            }
        } else if let Some(reference) = ccw {
            let ref_cw = links[&reference].cw;
            links.insert(
                end,
                Link {
                    cw: ref_cw,
                    ccw: reference,
                },
            );
            links.get_mut(&ref_cw).expect("linked").ccw = end;
            links.get_mut(&reference).expect("linked").cw = end;
        } else {
            unreachable!("reference neighbour required");
        }
    }

    fn add_half_edge_first(&mut self, start: usize, end: usize) {
        let leftmost = self.leftmost[start];
        self.add_half_edge(start, end, leftmost, None);
    }

    fn into_cw_lists(self) -> Vec<Vec<usize>> {
        self.links
            .iter()
            .zip(&self.leftmost)
            .map(|(links, &first)| {
                let Some(first) = first else {
                    return Vec::new();
                };
                let mut order = vec![first];
                let mut cur = links[&first].cw;
                while cur != first {
                    order.push(cur);
                    cur = links[&cur].cw;
                }
                order
            })
            .collect()
    }
}

struct LrState<'a> {
    edges: &'a [(usize, usize)],
    adjacency: Vec<Vec<(usize, usize)>>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    roots: Vec<usize>,
    oriented: Vec<bool>,
    tail: Vec<usize>,
    head: Vec<usize>,
    out_edges: Vec<Vec<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    ordered: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    side: Vec<i64>,
    stack: Vec<ConflictPair>,
    next_pair_id: u64,
    stack_bottom: Vec<Option<u64>>,
    lowpt_edge: Vec<usize>,
}

/// Rotation system of a planar graph, or `None` when the graph is not planar.
pub(crate) fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    if n > 2 && edges.len() > 3 * n - 6 {
        return None;
    }
    let m = edges.len();
    let mut adjacency = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        adjacency[a].push((b, e));
        adjacency[b].push((a, e));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    let mut st = LrState {
        edges,
        adjacency,
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        roots: Vec::new(),
        oriented: vec![false; m],
        tail: vec![NONE; m],
        head: vec![NONE; m],
        out_edges: vec![Vec::new(); n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        ordered: Vec::new(),
        reference: vec![None; m],
        side: vec![1; m],
        stack: Vec::new(),
        next_pair_id: 0,
        stack_bottom: vec![None; m],
        lowpt_edge: vec![NONE; m],
    };

    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            st.roots.push(v);
            st.orient(v);
        }
    }

    st.ordered = st
        .out_edges
        .iter()
        .map(|out| {
            let mut o = out.clone();
            o.sort_by_key(|&e| st.nesting_depth[e]);
            o
        })
        .collect();
    for k in 0..st.roots.len() {
        if !st.test(st.roots[k]) {
            return None;
        }
    }

    for e in 0..m {
        let s = st.sign(e);
        st.nesting_depth[e] *= s;
    }
    let mut rotation = Rotation::new(n);
    for v in 0..n {
        let mut o = st.out_edges[v].clone();
        o.sort_by_key(|&e| st.nesting_depth[e]);
        let mut previous = None;
        for &e in &o {
            let w = st.head[e];
            rotation.add_half_edge(v, w, None, previous);
            previous = Some(w);
        }
        st.ordered[v] = o;
    }
    for k in 0..st.roots.len() {
        st.embed(st.roots[k], &mut rotation);
    }
    Some(rotation.into_cw_lists())
}

impl LrState<'_> {
    fn orient(&mut self, root: usize) {
        let n = self.height.len();
        let mut stack = vec![root];
        let mut next_index = vec![0usize; n];
        let mut resumed = vec![false; self.edges.len()];

        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            while next_index[v] < self.adjacency[v].len() {
                let (w, e) = self.adjacency[v][next_index[v]];
                if !resumed[e] {
                    if self.oriented[e] {
                        next_index[v] += 1;
                        continue;
                    }
                    self.oriented[e] = true;
                    self.tail[e] = v;
                    self.head[e] = w;
                    self.out_edges[v].push(e);
                    self.lowpt[e] = self.height[v];
                    self.lowpt2[e] = self.height[v];
                    if self.height[w] == NONE {
                        // tree edge: descend into w, finish e afterwards
                        self.parent_edge[w] = e;
                        self.height[w] = self.height[v] + 1;
                        resumed[e] = true;
                        stack.push(v);
                        stack.push(w);
                        break;
                    }
                    // back edge
                    self.lowpt[e] = self.height[w];
                }

                self.nesting_depth[e] = 2 * self.lowpt[e] as i64;
                if self.lowpt2[e] < self.height[v] {
                    // chordal
                    self.nesting_depth[e] += 1;
                }

                if parent != NONE {
                    let (lp, lp2) = (self.lowpt[e], self.lowpt2[e]);
                    if lp < self.lowpt[parent] {
                        self.lowpt2[parent] = self.lowpt[parent].min(lp2);
                        self.lowpt[parent] = lp;
                    } else if lp > self.lowpt[parent] {
                        self.lowpt2[parent] = self.lowpt2[parent].min(lp);
                    } else {
                        self.lowpt2[parent] = self.lowpt2[parent].min(lp2);
                    }
                }
                next_index[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<u64> {
        self.stack.last().map(|p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, e: usize) -> bool {
        !i.is_empty()
            && self.lowpt[i.high.expect("nonempty interval has a high edge")] > self.lowpt[e]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("right low")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("left low")];
        }
        self.lowpt[p.left.low.expect("left low")].min(self.lowpt[p.right.low.expect("right low")])
    }

    fn test(&mut self, root: usize) -> bool {
        let n = self.height.len();
        let mut stack = vec![root];
        let mut next_index = vec![0usize; n];
        let mut resumed = vec![false; self.edges.len()];

        while let Some(v) = stack.pop() {
            let parent = self.parent_edge[v];
            let mut descended = false;
            while next_index[v] < self.ordered[v].len() {
                let ei = self.ordered[v][next_index[v]];
                let w = self.head[ei];
                if !resumed[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if self.parent_edge[w] == ei {
                        stack.push(v);
                        stack.push(w);
                        resumed[ei] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.push_pair(
                        Interval::default(),
                        Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    );
                }

                // integrate new return edges
                if self.lowpt[ei] < self.height[v] {
                    if ei == self.ordered[v][0] {
                        self.lowpt_edge[parent] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, parent) {
                        return false;
                    }
                }
                next_index[v] += 1;
            }
            if !descended && parent != NONE {
                self.remove_back_edges(parent);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            id: 0,
            left: Interval::default(),
            right: Interval::default(),
        };
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("right interval has a low edge");
            if self.lowpt[q_low] > self.lowpt[e] {
                // merge intervals
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.reference[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                // align
                self.reference[q_low] = Some(self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }

        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last().copied() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("peeked");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            // merge interval below lowpt(ei) into p.right
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }

        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push_pair(p.left, p.right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        let hu = self.height[u];
        // drop entire conflict pairs returning to u
        while let Some(top) = self.stack.last().copied() {
            if self.lowest(&top) != hu {
                break;
            }
            self.stack.pop();
            if let Some(ll) = top.left.low {
                self.side[ll] = -1;
            }
        }

        if let Some(mut p) = self.stack.pop() {
            // trim left interval
            while let Some(h) = p.left.high.filter(|&h| self.head[h] == u) {
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(ll) = p.left.low {
                    // just emptied
                    self.reference[ll] = p.right.low;
                    self.side[ll] = -1;
                    p.left.low = None;
                }
            }
            // trim right interval
            while let Some(h) = p.right.high.filter(|&h| self.head[h] == u) {
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(rl) = p.right.low {
                    self.reference[rl] = p.left.low;
                    self.side[rl] = -1;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }

        // side of e is the side of a highest return edge
        if self.lowpt[e] < hu {
            let top = self
                .stack
                .last()
                .expect("return edge implies a conflict pair");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        let mut stack = vec![e];
        let mut old_ref: HashMap<usize, usize> = HashMap::new();
        while let Some(x) = stack.pop() {
            if let Some(r) = self.reference[x] {
                stack.push(x);
                stack.push(r);
                old_ref.insert(x, r);
                self.reference[x] = None;
            } else if let Some(&r) = old_ref.get(&x) {
                self.side[x] *= self.side[r];
            }
        }
        self.side[e]
    }

    fn embed(&mut self, root: usize, rotation: &mut Rotation) {
        let n = self.height.len();
        let mut stack = vec![root];
        let mut next_index = vec![0usize; n];
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        while let Some(v) = stack.pop() {
            while next_index[v] < self.ordered[v].len() {
                let ei = self.ordered[v][next_index[v]];
                next_index[v] += 1;
                let w = self.head[ei];
                if self.parent_edge[w] == ei {
                    rotation.add_half_edge_first(w, v);
                    left_ref[v] = w;
                    right_ref[v] = w;
                    stack.push(v);
                    stack.push(w);
                    break;
                }
                if self.side[ei] == 1 {
                    rotation.add_half_edge(w, v, None, Some(right_ref[w]));
                } else {
                    rotation.add_half_edge(w, v, Some(left_ref[w]), None);
                    left_ref[w] = v;
                }
            }
        }
    }
}
