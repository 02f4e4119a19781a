//! Construction expressions over `K1`, disjoint union, join and complement.
//!
//! Canonical expressions contain no complement nodes, every `U`/`J` node
//! has at least two children, the node kinds alternate along every path,
//! and children are sorted by `(leaf count, canonical text)`. Two cographs
//! are isomorphic exactly when their canonical expressions are equal.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConstructExpr {
    Leaf,
    Union(Vec<ConstructExpr>),
    Join(Vec<ConstructExpr>),
    Complement(Box<ConstructExpr>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at offset {position}: expected {}, found {}", expected.join(" or "), found.map_or("end of input".to_string(), |c| format!("{c:?}")))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotreeError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not a cograph: it and its complement are both connected")]
    NotACograph,
    #[error("the empty graph has no construction expression")]
    EmptyGraph,
    #[error("expression contains a complement node; canonicalize it first")]
    ComplementNode,
    #[error("{class} enumeration supports 1 <= n <= {limit}, got {n}")]
    EnumerationLimit {
        class: GraphClass,
        n: usize,
        limit: usize,
    },
}

/// Graph classes generated from `K1` by construction rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    /// Repeatedly add an isolated or a dominating vertex.
    Threshold,
    /// Disjoint unions, and a dominating vertex added to any member.
    TriviallyPerfect,
    /// Disjoint unions and complements.
    Cograph,
}

impl GraphClass {
    pub const ALL: [GraphClass; 3] = [GraphClass::Threshold, GraphClass::TriviallyPerfect, GraphClass::Cograph];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Threshold => "threshold",
            GraphClass::TriviallyPerfect => "trivially_perfect",
            GraphClass::Cograph => "cograph",
        }
    }

    /// Forbidden induced subgraphs characterising the class.
    pub fn forbidden(self) -> Vec<SimpleGraph> {
        match self {
            GraphClass::Threshold => vec![SimpleGraph::two_k2(), SimpleGraph::c4(), SimpleGraph::p4()],
            GraphClass::TriviallyPerfect => vec![SimpleGraph::c4(), SimpleGraph::p4()],
            GraphClass::Cograph => vec![SimpleGraph::p4()],
        }
    }

    pub fn enumeration_limit(self) -> usize {
        match self {
            GraphClass::Cograph => 10,
            _ => 12,
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('-', "_").as_str() {
            "threshold" => Ok(GraphClass::Threshold),
            "trivially_perfect" | "tp" => Ok(GraphClass::TriviallyPerfect),
            "cograph" => Ok(GraphClass::Cograph),
            _ => Err(format!("unknown graph class {s:?}")),
        }
    }
}

impl ConstructExpr {
    /// `K_m` as a join of `m` leaves.
    pub fn complete(m: usize) -> ConstructExpr {
        if m == 1 {
            ConstructExpr::Leaf
        } else {
            ConstructExpr::Join(vec![ConstructExpr::Leaf; m])
        }
    }

    /// The edgeless graph on `m` vertices as a union of `m` leaves.
    pub fn edgeless(m: usize) -> ConstructExpr {
        if m == 1 {
            ConstructExpr::Leaf
        } else {
            ConstructExpr::Union(vec![ConstructExpr::Leaf; m])
        }
    }

    /// Number of leaves, i.e. vertices of the denoted graph.
    pub fn size(&self) -> usize {
        match self {
            ConstructExpr::Leaf => 1,
            ConstructExpr::Union(cs) | ConstructExpr::Join(cs) => cs.iter().map(Self::size).sum(),
            ConstructExpr::Complement(c) => c.size(),
        }
    }

    pub fn parse(text: &str) -> Result<ConstructExpr, ParseError> {
        Parser::new(text).parse_all()
    }

    pub fn to_graph(&self) -> Result<SimpleGraph, GraphError> {
        match self {
            ConstructExpr::Leaf => Ok(SimpleGraph::k1()),
            ConstructExpr::Union(cs) => cs.iter().try_fold(SimpleGraph::empty(0)?, |acc, c| {
                acc.disjoint_union(&c.to_graph()?)
            }),
            ConstructExpr::Join(cs) => cs
                .iter()
                .try_fold(SimpleGraph::empty(0)?, |acc, c| acc.join(&c.to_graph()?)),
            ConstructExpr::Complement(c) => Ok(c.to_graph()?.complement()),
        }
    }

    pub fn has_complement(&self) -> bool {
        match self {
            ConstructExpr::Leaf => false,
            ConstructExpr::Union(cs) | ConstructExpr::Join(cs) => cs.iter().any(Self::has_complement),
            ConstructExpr::Complement(_) => true,
        }
    }

    /// Pushes complements to the leaves with `¬(G ⊔ H) = ¬G + ¬H` and its
    /// dual, flattens nested nodes of the same kind and sorts children.
    pub fn canonicalize(&self) -> ConstructExpr {
        normalize(self, false).0
    }

    pub fn is_canonical(&self) -> bool {
        &self.canonicalize() == self
    }

    /// Text with `K<m>` / `E<m>` sugar for all-leaf joins and unions.
    pub fn to_sugared_string(&self) -> String {
        let mut out = String::new();
        write_expr(self, true, &mut out);
        out
    }
}

/// Returns the normalized expression and its sort key.
fn normalize(e: &ConstructExpr, negate: bool) -> (ConstructExpr, (usize, String)) {
    let (is_join, children) = match e {
        ConstructExpr::Leaf => return (ConstructExpr::Leaf, (1, "K1".to_string())),
        ConstructExpr::Complement(c) => return normalize(c, !negate),
        ConstructExpr::Union(cs) => (negate, cs),
        ConstructExpr::Join(cs) => (!negate, cs),
    };
    let mut flat: Vec<(ConstructExpr, (usize, String))> = Vec::new();
    for c in children {
        let (child, key) = normalize(c, negate);
        match child {
            ConstructExpr::Join(gs) if is_join => flat.extend(gs.into_iter().map(keyed)),
            ConstructExpr::Union(gs) if !is_join => flat.extend(gs.into_iter().map(keyed)),
            other => flat.push((other, key)),
        }
    }
    if flat.len() == 1 {
        return flat.pop().expect("one child");
    }
    flat.sort_by(|a, b| a.1.cmp(&b.1));
    let size = flat.iter().map(|(_, k)| k.0).sum();
    let kids: Vec<ConstructExpr> = flat.into_iter().map(|(c, _)| c).collect();
    let expr = if is_join { ConstructExpr::Join(kids) } else { ConstructExpr::Union(kids) };
    let text = expr.to_string();
    (expr, (size, text))
}

fn keyed(e: ConstructExpr) -> (ConstructExpr, (usize, String)) {
    let key = (e.size(), e.to_string());
    (e, key)
}

fn write_expr(e: &ConstructExpr, sugar: bool, out: &mut String) {
    match e {
        ConstructExpr::Leaf => out.push_str("K1"),
        ConstructExpr::Complement(c) => {
            out.push_str("C(");
            write_expr(c, sugar, out);
            out.push(')');
        }
        ConstructExpr::Union(cs) | ConstructExpr::Join(cs) => {
            let is_join = matches!(e, ConstructExpr::Join(_));
            if sugar && cs.iter().all(|c| *c == ConstructExpr::Leaf) {
                out.push(if is_join { 'K' } else { 'E' });
                out.push_str(&cs.len().to_string());
                return;
            }
            out.push_str(if is_join { "J(" } else { "U(" });
            for (i, c) in cs.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_expr(c, sugar, out);
            }
            out.push(')');
        }
    }
}

/// Plain form using only `K1`, `U(..)`, `J(..)` and `C(..)`.
impl fmt::Display for ConstructExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_expr(self, false, &mut out);
        f.write_str(&out)
    }
}

impl FromStr for ConstructExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ConstructExpr::parse(s)
    }
}

/// Recursive-descent parser for
/// `expr := K<int> | E<int> | U(expr, expr, ...) | J(expr, expr, ...) | C(expr)`.
struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&mut self, expected: Vec<&'static str>) -> ParseError {
        let found = self.peek();
        ParseError { position: self.offset(), expected, found }
    }

    fn expect(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    fn parse_all(mut self) -> Result<ConstructExpr, ParseError> {
        let e = self.expr()?;
        if self.peek().is_some() {
            return Err(self.error(vec!["end of input"]));
        }
        Ok(e)
    }

    fn count(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        match digits.parse::<usize>() {
            Ok(m) if (1..=MAX_VERTICES).contains(&m) => Ok(m),
            _ => {
                self.pos = start;
                Err(self.error(vec!["vertex count between 1 and 64"]))
            }
        }
    }

    fn expr(&mut self) -> Result<ConstructExpr, ParseError> {
        let expected = vec!["K<int>", "E<int>", "U(", "J(", "C("];
        let Some(c) = self.peek() else {
            return Err(self.error(expected));
        };
        match c {
            'K' | 'E' => {
                self.pos += 1;
                let m = self.count()?;
                Ok(if c == 'K' {
                    ConstructExpr::complete(m)
                } else {
                    ConstructExpr::edgeless(m)
                })
            }
            'U' | 'J' => {
                self.pos += 1;
                self.expect('(', "'('")?;
                let mut children = vec![self.expr()?];
                self.expect(',', "','")?;
                children.push(self.expr()?);
                loop {
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            children.push(self.expr()?);
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.error(vec!["','", "')'"])),
                    }
                }
                Ok(if c == 'U' {
                    ConstructExpr::Union(children)
                } else {
                    ConstructExpr::Join(children)
                })
            }
            'C' => {
                self.pos += 1;
                self.expect('(', "'('")?;
                let inner = self.expr()?;
                self.expect(')', "')'")?;
                Ok(ConstructExpr::Complement(Box::new(inner)))
            }
            _ => Err(self.error(expected)),
        }
    }
}

/// Canonical cotree of a cograph, by recursive decomposition into connected
/// or coconnected components.
pub fn from_cograph(g: &SimpleGraph) -> Result<ConstructExpr, CotreeError> {
    if g.vertex_count() == 0 {
        return Err(CotreeError::EmptyGraph);
    }
    Ok(decompose(g)?.canonicalize())
}

fn decompose(g: &SimpleGraph) -> Result<ConstructExpr, CotreeError> {
    if g.vertex_count() == 1 {
        return Ok(ConstructExpr::Leaf);
    }
    let comps = g.connected_components();
    if comps.len() > 1 {
        return Ok(ConstructExpr::Union(comps.iter().map(decompose).collect::<Result<_, _>>()?));
    }
    let cocomps = g.coconnected_components();
    if cocomps.len() > 1 {
        return Ok(ConstructExpr::Join(cocomps.iter().map(decompose).collect::<Result<_, _>>()?));
    }
    Err(CotreeError::NotACograph)
}

/// Isomorphism of cographs via equality of canonical cotrees.
pub fn cograph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool, CotreeError> {
    Ok(from_cograph(g)? == from_cograph(h)?)
}

/// Decides membership by running the generating rules backwards.
pub fn recognize_constructive(g: &SimpleGraph, class: GraphClass) -> bool {
    if g.vertex_count() == 0 {
        return false;
    }
    match class {
        GraphClass::Threshold => is_threshold_constructive(g),
        GraphClass::TriviallyPerfect => is_tp_constructive(g, g.vertex_mask()),
        GraphClass::Cograph => from_cograph(g).is_ok(),
    }
}

/// Repeatedly strips an isolated or dominating vertex.
fn is_threshold_constructive(g: &SimpleGraph) -> bool {
    let mut left = g.vertex_mask();
    while left.count_ones() > 1 {
        let strip = crate::graph::mask_to_vec(left).into_iter().find(|&v| {
            let nbrs = g.neighbors(v) & left;
            nbrs == 0 || nbrs == left & !(1u64 << v)
        });
        match strip {
            Some(v) => left &= !(1u64 << v),
            None => return false,
        }
    }
    true
}

/// Disconnected: every component qualifies. Connected: some vertex is
/// universal and the rest qualifies.
fn is_tp_constructive(g: &SimpleGraph, set: u64) -> bool {
    if set.count_ones() <= 1 {
        return true;
    }
    let sub = g.induced_by_mask(set);
    let comps = sub.component_masks();
    let verts = crate::graph::mask_to_vec(set);
    let lift = |m: u64| {
        crate::graph::mask_to_vec(m)
            .into_iter()
            .fold(0u64, |acc, i| acc | 1u64 << verts[i])
    };
    if comps.len() > 1 {
        return comps.into_iter().all(|m| is_tp_constructive(g, lift(m)));
    }
    match verts
        .iter()
        .find(|&&v| g.neighbors(v) & set == set & !(1u64 << v))
    {
        Some(&u) => is_tp_constructive(g, set & !(1u64 << u)),
        None => false,
    }
}

/// One canonical expression per isomorphism class of `class` graphs on
/// `n` vertices, sorted by canonical text.
pub fn enumerate_class(class: GraphClass, n: usize) -> Result<Vec<ConstructExpr>, CotreeError> {
    let limit = class.enumeration_limit();
    if n == 0 || n > limit {
        return Err(CotreeError::EnumerationLimit { class, n, limit });
    }
    let mut found: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    let mut keep = |e: ConstructExpr| {
        let e = e.canonicalize();
        if found.insert(e.to_string()) {
            out.push(e);
        }
    };
    match class {
        GraphClass::Threshold => {
            for seq in 0u64..(1 << (n - 1)) {
                let e = (0..n - 1).fold(ConstructExpr::Leaf, |acc, i| {
                    if seq >> i & 1 == 1 {
                        ConstructExpr::Join(vec![acc, ConstructExpr::Leaf])
                    } else {
                        ConstructExpr::Union(vec![acc, ConstructExpr::Leaf])
                    }
                });
                keep(e);
            }
        }
        GraphClass::TriviallyPerfect => {
            let mut gen = TpForests::default();
            for e in gen.forests(n) {
                keep(e);
            }
        }
        GraphClass::Cograph => {
            let mut gen = Cotrees::default();
            if n == 1 {
                keep(ConstructExpr::Leaf);
            } else {
                for e in gen.rooted(n, true).into_iter().chain(gen.rooted(n, false)) {
                    keep(e);
                }
            }
        }
    }
    out.sort_by_cached_key(|e| e.to_string());
    Ok(out)
}

/// Multisets of at least `min_count` items drawn from `pools[1..k]`
/// (`pools[s]` holds items of size `s`), with total size `k`.
fn multisets<T: Clone>(pools: &[Vec<T>], k: usize, min_count: usize) -> Vec<Vec<T>> {
    // Items indexed globally as (size, index); choose non-increasing sequences.
    let items: Vec<(usize, &T)> = (1..pools.len())
        .flat_map(|s| pools[s].iter().map(move |t| (s, t)))
        .collect();
    let mut out = Vec::new();
    fn rec<T: Clone>(
        items: &[(usize, &T)],
        max_idx: usize,
        left: usize,
        picked: &mut Vec<T>,
        min_count: usize,
        out: &mut Vec<Vec<T>>,
    ) {
        if left == 0 {
            if picked.len() >= min_count {
                out.push(picked.clone());
            }
            return;
        }
        for i in (0..max_idx).rev() {
            let (s, t) = items[i];
            if s <= left {
                picked.push(t.clone());
                rec(items, i + 1, left - s, picked, min_count, out);
                picked.pop();
            }
        }
    }
    rec(&items, items.len(), k, &mut Vec::new(), min_count, &mut out);
    out
}

/// Cotrees with a prescribed root kind, memoized by size.
#[derive(Default)]
struct Cotrees {
    memo: HashMap<(usize, bool), Vec<ConstructExpr>>,
}

impl Cotrees {
    /// Canonical cotrees on `k` leaves whose root is a join (`join = true`)
    /// or a union; size 1 yields the leaf for either kind.
    fn rooted(&mut self, k: usize, join: bool) -> Vec<ConstructExpr> {
        if k == 1 {
            return vec![ConstructExpr::Leaf];
        }
        if let Some(v) = self.memo.get(&(k, join)) {
            return v.clone();
        }
        // Children of a join root are leaves or union-rooted, and vice versa.
        let pools: Vec<Vec<ConstructExpr>> = (0..k)
            .map(|s| if s == 0 { Vec::new() } else { self.rooted(s, !join) })
            .collect();
        let out: Vec<ConstructExpr> = multisets(&pools, k, 2)
            .into_iter()
            .map(|kids| {
                if join {
                    ConstructExpr::Join(kids)
                } else {
                    ConstructExpr::Union(kids)
                }
                .canonicalize()
            })
            .collect();
        self.memo.insert((k, join), out.clone());
        out
    }
}

/// Trivially perfect graphs as rooted forests: a connected member on `k`
/// vertices is a dominating vertex joined to a forest on `k - 1` vertices.
#[derive(Default)]
struct TpForests {
    trees: HashMap<usize, Vec<ConstructExpr>>,
}

impl TpForests {
    fn connected(&mut self, k: usize) -> Vec<ConstructExpr> {
        if k == 1 {
            return vec![ConstructExpr::Leaf];
        }
        if let Some(v) = self.trees.get(&k) {
            return v.clone();
        }
        let out: Vec<ConstructExpr> = self
            .forests(k - 1)
            .into_iter()
            .map(|f| ConstructExpr::Join(vec![ConstructExpr::Leaf, f]).canonicalize())
            .collect();
        self.trees.insert(k, out.clone());
        out
    }

    fn forests(&mut self, k: usize) -> Vec<ConstructExpr> {
        let pools: Vec<Vec<ConstructExpr>> = (0..=k)
            .map(|s| if s == 0 { Vec::new() } else { self.connected(s) })
            .collect();
        multisets(&pools, k, 1)
            .into_iter()
            .map(|mut parts| {
                if parts.len() == 1 {
                    parts.pop().expect("one part")
                } else {
                    ConstructExpr::Union(parts).canonicalize()
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    fn parse(s: &str) -> ConstructExpr {
        ConstructExpr::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("K1"), ConstructExpr::Leaf);
        let left = parse("J(U(K2,K1),U(K6,K1))");
        assert_eq!(left.size(), 10);
        let g = left.to_graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 1 + 15 + 21));
        assert_eq!(parse("C(U(K1,K1))").canonicalize(), parse("K2"));
        assert_eq!(parse("C(U(K1,K1))").canonicalize().to_sugared_string(), "K2");
        assert_eq!(parse(" J ( K1 ,\tE2 ) "), parse("J(K1,U(K1,K1))"));
    }

    #[test]
    fn parse_errors_report_position() {
        let err = ConstructExpr::parse("U(K1)").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.expected, vec!["','"]);
        assert_eq!(err.found, Some(')'));

        let err = ConstructExpr::parse("J(K1,X)").unwrap_err();
        assert_eq!(err.position, 5);
        assert!(err.expected.contains(&"U("));

        let err = ConstructExpr::parse("K0").unwrap_err();
        assert_eq!(err.position, 1);
        assert!(ConstructExpr::parse("K1 K1").is_err());
        assert!(ConstructExpr::parse("").is_err());
        assert!(ConstructExpr::parse("C(K1").is_err());
        assert!(ConstructExpr::parse("K65").is_err());
    }

    #[test]
    fn to_graph_examples() {
        assert_eq!(ConstructExpr::Leaf.to_graph().unwrap(), SimpleGraph::k1());
        let p3 = parse("J(K1,U(K1,K1))").to_graph().unwrap();
        assert!(p3.is_isomorphic_small(&SimpleGraph::path(3).unwrap()).unwrap());
        let right = parse("J(U(K4,K2),K4)").to_graph().unwrap();
        assert_eq!((right.vertex_count(), right.edge_count()), (10, 6 + 1 + 6 + 24));
        assert_eq!(
            parse("C(K3)").to_graph().unwrap(),
            SimpleGraph::empty(3).unwrap()
        );
        let big = ConstructExpr::Union(vec![parse("E40"), parse("E40")]);
        assert_eq!(big.to_graph(), Err(GraphError::Capacity(80)));
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(parse("U(K1,U(K1,K1))").canonicalize(), parse("E3"));
        let a = parse("J(U(K2,K1),K3)").canonicalize();
        let b = parse("J(K3,U(K1,K2))").canonicalize();
        assert_eq!(a, b);
        assert_eq!(a.canonicalize(), a);
        assert!(a.is_canonical());
        assert!(!parse("J(K3,U(K1,K2))").is_canonical());
        // ¬(K2 ⊔ K1) = E2 + K1 = P3
        assert_eq!(
            parse("C(U(K2,K1))").canonicalize(),
            parse("J(K1,U(K1,K1))")
        );
        assert_eq!(parse("C(C(K3))").canonicalize(), parse("K3"));
    }

    #[test]
    fn from_cograph_examples() {
        assert_eq!(from_cograph(&SimpleGraph::k1()).unwrap(), ConstructExpr::Leaf);
        assert_eq!(from_cograph(&SimpleGraph::p4()), Err(CotreeError::NotACograph));
        assert_eq!(
            from_cograph(&SimpleGraph::path(3).unwrap()).unwrap().to_string(),
            "J(K1,U(K1,K1))"
        );
        assert_eq!(from_cograph(&SimpleGraph::empty(0).unwrap()), Err(CotreeError::EmptyGraph));
    }

    #[test]
    fn cograph_isomorphism_examples() {
        let left = parse("J(U(K2,K1),U(K6,K1))").to_graph().unwrap();
        let right = parse("J(U(K4,K2),K4)").to_graph().unwrap();
        assert!(!cograph_isomorphic(&left, &right).unwrap());
        let shuffled = left.relabel(&[9, 3, 5, 0, 1, 2, 8, 7, 6, 4]);
        assert!(cograph_isomorphic(&left, &shuffled).unwrap());
        assert!(!cograph_isomorphic(&SimpleGraph::k3(), &SimpleGraph::path(3).unwrap()).unwrap());
        assert_eq!(
            cograph_isomorphic(&SimpleGraph::p4(), &SimpleGraph::p4()),
            Err(CotreeError::NotACograph)
        );
    }

    #[test]
    fn recognizer_examples() {
        for class in GraphClass::ALL {
            assert!(recognize_constructive(&SimpleGraph::k1(), class));
        }
        assert!(!recognize_constructive(&SimpleGraph::c4(), GraphClass::TriviallyPerfect));
        assert!(!recognize_constructive(&SimpleGraph::two_k2(), GraphClass::Threshold));
        assert!(recognize_constructive(&SimpleGraph::two_k2(), GraphClass::Cograph));
    }

    #[test]
    fn recognizers_agree_with_forbidden_subgraphs() {
        for n in 1..=6 {
            for g in enumerate_graphs(n).unwrap() {
                for class in GraphClass::ALL {
                    assert_eq!(
                        recognize_constructive(&g, class),
                        g.is_f_free(&class.forbidden()),
                        "{class} on {g}"
                    );
                }
            }
        }
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_class(GraphClass::TriviallyPerfect, 3).unwrap().len(), 4);
        assert_eq!(enumerate_class(GraphClass::Threshold, 5).unwrap().len(), 16);
        assert_eq!(enumerate_class(GraphClass::Cograph, 4).unwrap().len(), 10);
        let cographs: Vec<usize> = (1..=8)
            .map(|n| enumerate_class(GraphClass::Cograph, n).unwrap().len())
            .collect();
        assert_eq!(cographs, vec![1, 2, 4, 10, 24, 66, 180, 522]);
        let tp: Vec<usize> = (1..=8)
            .map(|n| enumerate_class(GraphClass::TriviallyPerfect, n).unwrap().len())
            .collect();
        assert_eq!(tp, vec![1, 2, 4, 9, 20, 48, 115, 286]);
        assert!(enumerate_class(GraphClass::Cograph, 11).is_err());
        assert!(enumerate_class(GraphClass::Threshold, 0).is_err());
    }

    /// Cotrees rooted at a fixed node kind: `t(n)` counts multisets of at
    /// least two subtrees of the other kind, via the Euler transform.
    fn cograph_counts_by_euler_transform(n_max: usize) -> Vec<u64> {
        let mut s = vec![0u64; n_max + 1];
        let mut t = vec![0u64; n_max + 1];
        s[1] = 1;
        for n in 2..=n_max {
            // Multisets of any size over items counted by s[1..n].
            let mut ms = vec![0u64; n + 1];
            ms[0] = 1;
            for k in 1..n {
                for _ in 0..s[k] {
                    for total in k..=n {
                        ms[total] += ms[total - k];
                    }
                }
            }
            t[n] = ms[n];
            s[n] = t[n];
        }
        (1..=n_max).map(|n| if n == 1 { 1 } else { 2 * t[n] }).collect()
    }

    #[test]
    fn cograph_counts_match_euler_transform() {
        let expected = cograph_counts_by_euler_transform(10);
        assert_eq!(&expected[..9], &[1, 2, 4, 10, 24, 66, 180, 522, 1532]);
        let got: Vec<u64> = (1..=10)
            .map(|n| enumerate_class(GraphClass::Cograph, n).unwrap().len() as u64)
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumeration_is_complete_up_to_six() {
        for n in 1..=6 {
            let graphs = enumerate_graphs(n).unwrap();
            for class in GraphClass::ALL {
                let mut expected: Vec<_> = graphs
                    .iter()
                    .filter(|g| g.is_f_free(&class.forbidden()))
                    .map(|g| g.canonical_code().unwrap())
                    .collect();
                let mut got: Vec<_> = enumerate_class(class, n)
                    .unwrap()
                    .iter()
                    .map(|e| e.to_graph().unwrap().canonical_code().unwrap())
                    .collect();
                expected.sort();
                got.sort();
                assert_eq!(got, expected, "{class}, n = {n}");
            }
        }
    }

    #[test]
    fn canonical_forms_are_canonical() {
        for n in 1..=7 {
            for e in enumerate_class(GraphClass::Cograph, n).unwrap() {
                assert!(!e.has_complement());
                assert!(e.is_canonical());
                assert_eq!(e.size(), n);
                let g = e.to_graph().unwrap();
                assert_eq!(from_cograph(&g).unwrap(), e);
            }
        }
    }

    #[test]
    fn cotree_equality_matches_isomorphism() {
        for n in 1..=7 {
            let exprs = enumerate_class(GraphClass::Cograph, n).unwrap();
            let graphs: Vec<_> = exprs.iter().map(|e| e.to_graph().unwrap()).collect();
            for (i, a) in graphs.iter().enumerate() {
                for (j, b) in graphs.iter().enumerate() {
                    assert_eq!(a.is_isomorphic_small(b).unwrap(), i == j);
                }
            }
        }
    }
}
