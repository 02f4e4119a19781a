//! Simple graphs on at most 64 vertices, stored as one adjacency bitset per
//! vertex, with the union/join/complement operations and the forbidden
//! induced subgraph recognizers.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Hard limit imposed by the `u64` adjacency rows.
pub const MAX_VERTICES: usize = 64;
/// Largest order accepted by the brute-force isomorphism test.
pub const MAX_ISO_VERTICES: usize = 12;
/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUM_VERTICES: usize = 7;
/// Largest order with a [`CanonicalCode`] (120 pair bits fit in a `u128`).
pub const MAX_CANON_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph would have {0} vertices, more than the limit of {MAX_VERTICES}")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{what} supports at most {limit} vertices, got {n}")]
    SizeGuard {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid graph text: {0}")]
    Parse(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn check_capacity(n: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        Err(GraphError::Capacity(n))
    } else {
        Ok(())
    }
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_capacity(n)?;
        Ok(SimpleGraph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        check_capacity(n)?;
        let all = full_mask(n);
        Ok(SimpleGraph {
            n,
            adj: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn k1() -> Self {
        SimpleGraph { n: 1, adj: vec![0] }
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        SimpleGraph::from_edges(n, &edges)
    }

    /// `K_{1,3}`, centre 0.
    pub fn claw() -> Self {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    pub fn two_k2() -> Self {
        SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
    }

    pub fn c4() -> Self {
        SimpleGraph::cycle(4).unwrap()
    }

    pub fn p4() -> Self {
        SimpleGraph::path(4).unwrap()
    }

    pub fn k3() -> Self {
        SimpleGraph::complete(3).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut higher = self.adj[u] & !full_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    /// Degree sequence sorted non-increasingly.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&a| a << shift));
        Ok(SimpleGraph { n, adj })
    }

    pub fn join(&self, other: &SimpleGraph) -> Result<SimpleGraph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(g.n) & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = full_mask(self.n);
        SimpleGraph {
            n: self.n,
            adj: (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect(),
        }
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SimpleGraph, GraphError> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                }
            }
        }
        Ok(SimpleGraph { n: k, adj })
    }

    /// Subgraph induced by a vertex bitset, vertices kept in increasing order.
    pub fn induced_by_mask(&self, mask: u64) -> SimpleGraph {
        let vertices = mask_to_vec(mask & self.vertex_mask());
        self.induced_subgraph(&vertices).expect("mask within range")
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = self.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                adj[perm[u]] |= bit(perm[v]);
                row &= row - 1;
            }
        }
        SimpleGraph { n: self.n, adj }
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            remaining &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    pub fn connected_components(&self) -> Vec<SimpleGraph> {
        sort_components(
            self.component_masks()
                .into_iter()
                .map(|m| self.induced_by_mask(m))
                .collect(),
        )
    }

    /// Complements of the connected components of the complement; their
    /// join is isomorphic to `self`.
    pub fn coconnected_components(&self) -> Vec<SimpleGraph> {
        sort_components(
            self.complement()
                .component_masks()
                .into_iter()
                .map(|m| self.induced_by_mask(m))
                .collect(),
        )
    }

    /// True iff no induced subgraph is isomorphic to a member of `forbidden`.
    pub fn is_f_free(&self, forbidden: &[SimpleGraph]) -> bool {
        forbidden.iter().all(|f| !self.contains_induced(f))
    }

    fn contains_induced(&self, f: &SimpleGraph) -> bool {
        let k = f.n;
        if k > self.n {
            return false;
        }
        if k == 0 {
            return true;
        }
        let target_degrees = f.degree_sequence();
        let target_edges = f.edge_count();
        let mut found = false;
        for_each_subset(self.n, k, &mut |mask| {
            let sub = self.induced_by_mask(mask);
            if sub.edge_count() == target_edges
                && sub.degree_sequence() == target_degrees
                && isomorphic_search(&sub, f)
            {
                found = true;
                return false;
            }
            true
        });
        found
    }

    pub fn classify(&self) -> ClassFlags {
        let (two_k2, c4, p4) = (SimpleGraph::two_k2(), SimpleGraph::c4(), SimpleGraph::p4());
        let cograph = self.is_f_free(std::slice::from_ref(&p4));
        let trivially_perfect = cograph && self.is_f_free(std::slice::from_ref(&c4));
        let threshold = trivially_perfect && self.is_f_free(std::slice::from_ref(&two_k2));
        ClassFlags {
            threshold,
            trivially_perfect,
            cograph,
            claw_free: self.is_f_free(&[SimpleGraph::claw()]),
            triangle_free_complement: self.complement().is_f_free(&[SimpleGraph::k3()]),
        }
    }

    /// Brute-force isomorphism test by vertex-by-vertex extension of a
    /// partial bijection, restricted to degree-preserving images.
    pub fn is_isomorphic_small(&self, other: &SimpleGraph) -> Result<bool, GraphError> {
        for n in [self.n, other.n] {
            if n > MAX_ISO_VERTICES {
                return Err(GraphError::SizeGuard {
                    what: "isomorphism test",
                    n,
                    limit: MAX_ISO_VERTICES,
                });
            }
        }
        if self.n != other.n
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return Ok(false);
        }
        Ok(isomorphic_search(self, other))
    }

    /// Canonical isomorphism-class code; two graphs have equal codes iff
    /// they are isomorphic.
    pub fn canonical_code(&self) -> Result<CanonicalCode, GraphError> {
        if self.n > MAX_CANON_VERTICES {
            return Err(GraphError::SizeGuard {
                what: "canonical code",
                n: self.n,
                limit: MAX_CANON_VERTICES,
            });
        }
        Ok(canonical_labeling(self).0)
    }

    /// Relabelled copy whose labelled pair code is the canonical code.
    pub fn canonical_form(&self) -> Result<SimpleGraph, GraphError> {
        self.canonical_code()?;
        let (_, order) = canonical_labeling(self);
        let mut perm = vec![0; self.n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        Ok(self.relabel(&perm))
    }
}

/// Membership in the graph classes of interest, each decided by a
/// forbidden induced subgraph test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub threshold: bool,
    pub trivially_perfect: bool,
    pub cograph: bool,
    pub claw_free: bool,
    pub triangle_free_complement: bool,
}

/// Isomorphism invariant of a graph on at most [`MAX_CANON_VERTICES`] vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u128,
}

pub(crate) fn mask_to_vec(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

fn sort_components(mut comps: Vec<SimpleGraph>) -> Vec<SimpleGraph> {
    comps.sort_by(|a, b| {
        (a.n, a.edge_count())
            .cmp(&(b.n, b.edge_count()))
            .then_with(|| a.adj.cmp(&b.adj))
    });
    comps
}

/// Calls `f` with every `k`-subset of `0..n` as a bitset; stops when `f`
/// returns false.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(u64) -> bool) {
    fn rec(start: usize, n: usize, left: usize, mask: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return f(mask);
        }
        for v in start..=(n - left) {
            if !rec(v + 1, n, left - 1, mask | bit(v), f) {
                return false;
            }
        }
        true
    }
    rec(0, n, k, 0, f);
}

fn isomorphic_search(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    fn extend(g: &SimpleGraph, h: &SimpleGraph, map: &mut Vec<usize>, used: u64) -> bool {
        let u = map.len();
        if u == g.n {
            return true;
        }
        for w in 0..h.n {
            if used & bit(w) != 0 || g.degree(u) != h.degree(w) {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(x, &y)| g.has_edge(u, x) == h.has_edge(w, y));
            if consistent {
                map.push(w);
                if extend(g, h, map, used | bit(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    g.n == h.n && extend(g, h, &mut Vec::with_capacity(g.n), 0)
}

/// Maximises the pair code `(0,1),(0,2),(1,2),(0,3),...` over vertex
/// orderings whose degrees are non-increasing. Returns the code and the
/// optimal ordering (position -> original vertex).
fn canonical_labeling(g: &SimpleGraph) -> (CanonicalCode, Vec<usize>) {
    struct Search<'a> {
        g: &'a SimpleGraph,
        degrees: Vec<usize>,
        order: Vec<usize>,
        best: Option<(u128, Vec<usize>)>,
    }

    impl Search<'_> {
        // `code` holds the bits of columns 1..order.len(), most significant first.
        fn run(&mut self, code: u128, used: u64, bits: u32) {
            let pos = self.order.len();
            if let Some((best, _)) = &self.best {
                let total = (self.g.n * self.g.n.saturating_sub(1) / 2) as u32;
                let prefix = if bits == 0 { 0 } else { best >> (total - bits) };
                if code < prefix {
                    return;
                }
            }
            if pos == self.g.n {
                let better = match &self.best {
                    Some((b, _)) => code > *b,
                    None => true,
                };
                if better {
                    self.best = Some((code, self.order.clone()));
                }
                return;
            }
            for v in 0..self.g.n {
                if used & bit(v) != 0 || self.g.degree(v) != self.degrees[pos] {
                    continue;
                }
                let mut c = code;
                for &u in &self.order {
                    c = (c << 1) | u128::from(self.g.has_edge(u, v));
                }
                self.order.push(v);
                self.run(c, used | bit(v), bits + pos as u32);
                self.order.pop();
            }
        }
    }

    let mut search = Search {
        g,
        degrees: g.degree_sequence(),
        order: Vec::with_capacity(g.n),
        best: None,
    };
    search.run(0, 0, 0);
    let (bits, order) = search.best.expect("at least one ordering");
    (CanonicalCode { n: g.n as u8, bits }, order)
}

impl CanonicalCode {
    /// The labelled graph whose pair code is this code.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut g = SimpleGraph::empty(n).expect("small");
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if self.bits >> (total - 1 - idx) & 1 == 1 {
                    g.add_edge(u, v).expect("in range");
                }
                idx += 1;
            }
        }
        g
    }
}

/// One representative (in canonical labelling) of every isomorphism class
/// of graphs on `n` vertices, sorted by canonical code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if n > MAX_ENUM_VERTICES {
        return Err(GraphError::SizeGuard {
            what: "graph enumeration",
            n,
            limit: MAX_ENUM_VERTICES,
        });
    }
    let mut level = vec![SimpleGraph::empty(0)?];
    for k in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0..(1u64 << k) {
                let mut h = g.disjoint_union(&SimpleGraph::k1())?;
                for u in mask_to_vec(nbrs) {
                    h.add_edge(u, k)?;
                }
                let code = h.canonical_code()?;
                if seen.insert(code) {
                    next.push(code);
                }
            }
        }
        next.sort();
        level = next.iter().map(CanonicalCode::to_graph).collect();
    }
    Ok(level)
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; edges=", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `n=<int>; edges=<u>-<v>,...` (whitespace-insensitive).
impl FromStr for SimpleGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (n_part, edge_part) = compact
            .split_once(';')
            .ok_or_else(|| GraphError::Parse("expected `n=<int>; edges=...`".into()))?;
        let n: usize = n_part
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad vertex count {n_part:?}")))?;
        let list = edge_part
            .strip_prefix("edges=")
            .ok_or_else(|| GraphError::Parse(format!("expected `edges=`, got {edge_part:?}")))?;
        let mut g = SimpleGraph::empty(n)?;
        for tok in list.split(',').filter(|t| !t.is_empty()) {
            let (u, v) = tok
                .split_once('-')
                .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
                .ok_or_else(|| GraphError::Parse(format!("bad edge {tok:?}")))?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> SimpleGraph {
        s.parse().unwrap()
    }

    /// Stanley's bowtie: two triangles sharing vertex 2.
    fn bowtie() -> SimpleGraph {
        SimpleGraph::from_edges(5, &[(2, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn union_and_join_examples() {
        let two = SimpleGraph::k1().disjoint_union(&SimpleGraph::k1()).unwrap();
        assert_eq!(two, SimpleGraph::empty(2).unwrap());

        let p3 = SimpleGraph::path(3).unwrap();
        let k2 = SimpleGraph::complete(2).unwrap();
        let u = p3.disjoint_union(&k2).unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (5, 3));
        let j = p3.join(&k2).unwrap();
        assert_eq!((j.vertex_count(), j.edge_count()), (5, 2 + 1 + 6));

        let k4k2 = SimpleGraph::complete(4).unwrap().disjoint_union(&k2).unwrap();
        assert_eq!((k4k2.vertex_count(), k4k2.edge_count()), (6, 7));

        assert_eq!(SimpleGraph::k1().join(&SimpleGraph::k1()).unwrap(), k2);
        let mut kn = SimpleGraph::k1();
        for _ in 1..6 {
            kn = kn.join(&SimpleGraph::k1()).unwrap();
        }
        assert_eq!(kn, SimpleGraph::complete(6).unwrap());
    }

    #[test]
    fn capacity_is_enforced() {
        let big = SimpleGraph::empty(40).unwrap();
        assert_eq!(big.disjoint_union(&big), Err(GraphError::Capacity(80)));
        assert_eq!(big.join(&big), Err(GraphError::Capacity(80)));
        assert!(SimpleGraph::complete(64).unwrap().complement().edge_count() == 0);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            SimpleGraph::complete(5).unwrap().complement(),
            SimpleGraph::empty(5).unwrap()
        );
        // C4 on {0,1,3,4} plus the isolated former centre.
        let expected = SimpleGraph::from_edges(5, &[(0, 3), (3, 1), (1, 4), (4, 0)]).unwrap();
        assert_eq!(bowtie().complement(), expected);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c4 = SimpleGraph::c4();
        assert_eq!(c4.induced_subgraph(&[0, 1, 2]).unwrap(), SimpleGraph::path(3).unwrap());
        assert_eq!(
            SimpleGraph::p4().induced_subgraph(&[0, 3]).unwrap(),
            SimpleGraph::empty(2).unwrap()
        );
        assert_eq!(c4.induced_subgraph(&[0, 1, 2, 3]).unwrap(), c4);
        assert_eq!(
            c4.induced_subgraph(&[0, 4]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 4 })
        );
    }

    #[test]
    fn component_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        let k2 = SimpleGraph::complete(2).unwrap();
        assert_eq!(k2.disjoint_union(&k4).unwrap().connected_components(), vec![k2.clone(), k4.clone()]);
        assert_eq!(k4.connected_components(), vec![k4.clone()]);
        assert_eq!(
            SimpleGraph::empty(3).unwrap().connected_components(),
            vec![SimpleGraph::k1(); 3]
        );
        assert!(SimpleGraph::empty(0).unwrap().connected_components().is_empty());
    }

    #[test]
    fn coconnected_examples() {
        assert_eq!(
            SimpleGraph::complete(4).unwrap().coconnected_components(),
            vec![SimpleGraph::k1(); 4]
        );
        assert_eq!(
            SimpleGraph::path(3).unwrap().coconnected_components(),
            vec![SimpleGraph::k1(), SimpleGraph::empty(2).unwrap()]
        );
        let p4 = SimpleGraph::p4();
        assert_eq!(p4.coconnected_components(), vec![p4.clone()]);
    }

    #[test]
    fn f_free_examples() {
        let c4 = SimpleGraph::c4();
        assert!(!c4.is_f_free(std::slice::from_ref(&c4)));
        assert!(SimpleGraph::complete(6).unwrap().is_f_free(&[SimpleGraph::p4()]));
        let p4 = SimpleGraph::p4();
        assert!(!p4.is_f_free(&[SimpleGraph::two_k2(), c4, p4.clone()]));
        assert!(SimpleGraph::k3().is_f_free(&[p4]));
    }

    #[test]
    fn classify_examples() {
        let k1 = SimpleGraph::k1().classify();
        assert!(k1.threshold && k1.trivially_perfect && k1.cograph && k1.claw_free);

        let c4 = SimpleGraph::c4().classify();
        assert!(c4.cograph && !c4.trivially_perfect && !c4.threshold);

        let claw = SimpleGraph::claw().classify();
        assert!(claw.trivially_perfect && !claw.claw_free);
        assert!(!claw.triangle_free_complement);
    }

    #[test]
    fn isomorphism_examples() {
        let h = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).unwrap();
        assert!(!bowtie().is_isomorphic_small(&h).unwrap());
        let relabeled = bowtie().relabel(&[4, 2, 0, 1, 3]);
        assert!(bowtie().is_isomorphic_small(&relabeled).unwrap());
        assert!(!SimpleGraph::k3().is_isomorphic_small(&SimpleGraph::path(3).unwrap()).unwrap());
        assert!(!SimpleGraph::k3().is_isomorphic_small(&SimpleGraph::k1()).unwrap());
        let big = SimpleGraph::empty(13).unwrap();
        assert!(big.is_isomorphic_small(&big).is_err());
    }

    #[test]
    fn text_format() {
        let p4 = g("n=4; edges=0-1,1-2,2-3");
        assert_eq!(p4, SimpleGraph::p4());
        assert_eq!(p4.to_string(), "n=4; edges=0-1,1-2,2-3");
        assert_eq!(g("n=3; edges="), SimpleGraph::empty(3).unwrap());
        assert_eq!(g(" n = 2 ;edges = 1-0 "), SimpleGraph::complete(2).unwrap());
        assert!("n=2; edges=0-2".parse::<SimpleGraph>().is_err());
        assert!("n=2; edges=1-1".parse::<SimpleGraph>().is_err());
        assert!("n=x; edges=".parse::<SimpleGraph>().is_err());
        assert!("edges=0-1".parse::<SimpleGraph>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn enumeration_matches_labeled_brute_force() {
        // Oracle: all 2^C(n,2) labelled graphs, deduplicated by pairwise
        // brute-force isomorphism.
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut reps: Vec<SimpleGraph> = Vec::new();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = (0..pairs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pairs[i])
                    .collect();
                let h = SimpleGraph::from_edges(n, &edges).unwrap();
                if !reps.iter().any(|r| r.is_isomorphic_small(&h).unwrap()) {
                    reps.push(h);
                }
            }
            let listed = enumerate_graphs(n).unwrap();
            assert_eq!(listed.len(), reps.len(), "n = {n}");
            for h in &reps {
                assert_eq!(
                    listed.iter().filter(|r| r.is_isomorphic_small(h).unwrap()).count(),
                    1
                );
            }
        }
    }

    #[test]
    fn canonical_code_agrees_with_brute_force() {
        let graphs: Vec<SimpleGraph> = (0..=5).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
        for a in &graphs {
            let shuffled = a.relabel(&(0..a.vertex_count()).rev().collect::<Vec<_>>());
            assert_eq!(a.canonical_code().unwrap(), shuffled.canonical_code().unwrap());
            assert_eq!(a.canonical_form().unwrap().canonical_code(), a.canonical_code());
            for b in &graphs {
                assert_eq!(
                    a.canonical_code().unwrap() == b.canonical_code().unwrap(),
                    a.is_isomorphic_small(b).unwrap()
                );
            }
        }
    }

    #[test]
    fn complement_involution_and_join_duality() {
        let graphs: Vec<SimpleGraph> = (0..=6).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
        for a in &graphs {
            assert_eq!(&a.complement().complement(), a);
        }
        let small: Vec<&SimpleGraph> = graphs.iter().filter(|g| g.vertex_count() >= 1).collect();
        for a in &small {
            for b in &small {
                if a.vertex_count() + b.vertex_count() > 7 {
                    continue;
                }
                let join = a.join(b).unwrap();
                let dual = a.complement().disjoint_union(&b.complement()).unwrap().complement();
                assert_eq!(join, dual);
            }
        }
    }

    #[test]
    fn class_nesting_up_to_seven() {
        for n in 1..=7 {
            for h in enumerate_graphs(n).unwrap() {
                let c = h.classify();
                assert!(!c.threshold || c.trivially_perfect);
                assert!(!c.trivially_perfect || c.cograph);
            }
        }
    }

    #[test]
    fn components_reassemble() {
        for n in 1..=6 {
            for h in enumerate_graphs(n).unwrap() {
                let union = h
                    .connected_components()
                    .iter()
                    .fold(SimpleGraph::empty(0).unwrap(), |acc, c| acc.disjoint_union(c).unwrap());
                assert!(union.is_isomorphic_small(&h).unwrap());
                let join = h
                    .coconnected_components()
                    .iter()
                    .fold(SimpleGraph::empty(0).unwrap(), |acc, c| acc.join(c).unwrap());
                assert!(join.is_isomorphic_small(&h).unwrap());
            }
        }
    }
}
