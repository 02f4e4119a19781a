//! Reproducible experiments: exhaustive distinguishing checks, the
//! ten-vertex cograph collision, Stanley's pair and e-positivity of
//! claw-free cographs. Every report carries a list of named claims.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chromatic::{csf_cotree, csf_powersum, csf_stable, ChromaticError};
use crate::cotree::{enumerate_class, from_cograph, ConstructExpr, CotreeError, GraphClass};
use crate::graph::{enumerate_graphs, GraphError, SimpleGraph, MAX_ENUM_VERTICES};
use crate::partition::Partition;
use crate::symfunc::{Basis, SymFunc};

/// Largest `n_max` accepted by [`epositive`].
pub const MAX_EPOSITIVE_VERTICES: usize = 9;

/// Largest `n` for which class counts are cross-checked by brute force.
pub const MAX_CROSSCHECK_VERTICES: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExperimentError {
    #[error(transparent)]
    Cotree(#[from] CotreeError),
    #[error(transparent)]
    Chromatic(#[from] ChromaticError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("n_max = {n_max} exceeds the limit {limit} for {what}")]
    Guard {
        what: &'static str,
        n_max: usize,
        limit: usize,
    },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Claim {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Claim {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn all_passed(claims: &[Claim]) -> bool {
    claims.iter().all(|c| c.passed)
}

/// Two non-isomorphic cographs with the same chromatic symmetric function.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CollisionCertificate {
    pub vertices: usize,
    pub left: String,
    pub right: String,
    pub csf_mtilde: SymFunc,
    pub isomorphic: bool,
}

impl CollisionCertificate {
    /// Recomputes both expressions by the cotree and stable-partition
    /// routes and checks the stored function and the distinct cotrees.
    pub fn verify(&self) -> bool {
        let check = |text: &str| -> Option<bool> {
            let e = ConstructExpr::parse(text).ok()?.canonicalize();
            let g = e.to_graph().ok()?;
            let by_cotree = csf_cotree(&e).ok()?;
            let by_stable = csf_stable(&g).ok()?;
            Some(
                by_cotree.to_text() == self.csf_mtilde.to_text()
                    && by_stable == self.csf_mtilde
                    && g.vertex_count() == self.vertices,
            )
        };
        let distinct = match (ConstructExpr::parse(&self.left), ConstructExpr::parse(&self.right)) {
            (Ok(a), Ok(b)) => a.canonicalize() != b.canonicalize(),
            _ => false,
        };
        !self.isomorphic && distinct && check(&self.left) == Some(true) && check(&self.right) == Some(true)
    }

    pub fn is_pair(&self, a: &ConstructExpr, b: &ConstructExpr) -> bool {
        let (a, b) = (a.canonicalize().to_string(), b.canonicalize().to_string());
        (self.left == a && self.right == b) || (self.left == b && self.right == a)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LevelSummary {
    pub n: usize,
    pub graphs: usize,
    pub distinct_csfs: usize,
    pub collision_pairs: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct DistinguishReport {
    pub class: String,
    pub n_max: usize,
    pub levels: Vec<LevelSummary>,
    pub certificates: Vec<CollisionCertificate>,
    pub claims: Vec<Claim>,
}

impl DistinguishReport {
    pub fn total_graphs(&self) -> usize {
        self.levels.iter().map(|l| l.graphs).sum()
    }

    pub fn passed(&self) -> bool {
        all_passed(&self.claims)
    }
}

/// The pair `(K2 ⊔ K1) + (K6 ⊔ K1)` and `(K4 ⊔ K2) + K4`.
pub fn ten_vertex_pair() -> (ConstructExpr, ConstructExpr) {
    let parse = |s: &str| ConstructExpr::parse(s).expect("literal expression").canonicalize();
    (parse("J(U(K2,K1),U(K6,K1))"), parse("J(U(K4,K2),K4)"))
}

/// Count of `class` members on `n` vertices by filtering all graphs for
/// the forbidden induced subgraphs.
pub fn brute_force_class_count(class: GraphClass, n: usize) -> Result<usize, ExperimentError> {
    let forbidden = class.forbidden();
    Ok(enumerate_graphs(n)?
        .iter()
        .filter(|g| g.is_f_free(&forbidden))
        .count())
}

/// Groups all members of `class` with at most `n_max` vertices by their
/// chromatic symmetric function and certifies every collision.
pub fn distinguish(class: GraphClass, n_max: usize) -> Result<DistinguishReport, ExperimentError> {
    let limit = class.enumeration_limit();
    if n_max == 0 || n_max > limit {
        return Err(ExperimentError::Guard { what: "class enumeration", n_max, limit });
    }
    let mut levels = Vec::new();
    let mut certificates = Vec::new();
    let mut claims = Vec::new();
    let mut count_mismatch = Vec::new();
    for n in 1..=n_max {
        let exprs = enumerate_class(class, n)?;
        if n <= MAX_CROSSCHECK_VERTICES.min(MAX_ENUM_VERTICES) {
            let expected = brute_force_class_count(class, n)?;
            if expected != exprs.len() {
                count_mismatch.push(format!("n = {n}: {} vs {expected}", exprs.len()));
            }
        }
        let csfs: Vec<SymFunc> = exprs
            .par_iter()
            .map(csf_cotree)
            .collect::<Result<_, _>>()?;
        let mut groups: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, x) in csfs.iter().enumerate() {
            groups.entry(x.to_text()).or_default().push(i);
        }
        let mut pairs = 0;
        let mut keys: Vec<&String> = groups.keys().collect();
        keys.sort();
        for key in keys {
            let members = &groups[key];
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    if csfs[i] != csfs[j] {
                        continue;
                    }
                    pairs += 1;
                    let (gi, gj) = (exprs[i].to_graph()?, exprs[j].to_graph()?);
                    certificates.push(CollisionCertificate {
                        vertices: n,
                        left: exprs[i].to_string(),
                        right: exprs[j].to_string(),
                        csf_mtilde: csfs[i].clone(),
                        isomorphic: gi.canonical_code()? == gj.canonical_code()?,
                    });
                }
            }
        }
        levels.push(LevelSummary {
            n,
            graphs: exprs.len(),
            distinct_csfs: groups.len(),
            collision_pairs: pairs,
        });
    }

    let checked = n_max.min(MAX_CROSSCHECK_VERTICES);
    claims.push(Claim::new(
        "class counts match forbidden-subgraph filtering",
        count_mismatch.is_empty(),
        if count_mismatch.is_empty() {
            format!("n = 1..{checked}")
        } else {
            count_mismatch.join("; ")
        },
    ));
    let bad = certificates.iter().filter(|c| !c.verify()).count();
    claims.push(Claim::new(
        "every collision certificate re-verifies",
        bad == 0,
        format!("{} certificates, {bad} failed", certificates.len()),
    ));
    match class {
        GraphClass::Threshold | GraphClass::TriviallyPerfect => {
            claims.push(Claim::new(
                format!("chromatic symmetric function distinguishes {class} graphs"),
                certificates.is_empty(),
                format!("{} collisions among {} graphs", certificates.len(), levels.iter().map(|l| l.graphs).sum::<usize>()),
            ));
        }
        GraphClass::Cograph => {
            let small = certificates.iter().filter(|c| c.vertices < 10).count();
            claims.push(Claim::new(
                "no collision among cographs below 10 vertices",
                small == 0,
                format!("{small} collisions with n <= {}", n_max.min(9)),
            ));
            if n_max >= 10 {
                let (a, b) = ten_vertex_pair();
                let found = certificates.iter().any(|c| c.is_pair(&a, &b));
                claims.push(Claim::new(
                    "ten-vertex collision list contains the known pair",
                    found,
                    format!("{a} vs {b}"),
                ));
            }
        }
    }
    Ok(DistinguishReport {
        class: class.name().to_string(),
        n_max,
        levels,
        certificates,
        claims,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub graph: String,
    pub csf_mtilde: SymFunc,
    pub expanded: SymFunc,
    pub factored: SymFunc,
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleReport {
    pub left: String,
    pub right: String,
    pub csf_left: SymFunc,
    pub csf_right: SymFunc,
    pub factored: SymFunc,
    pub identities: Vec<IdentityCheck>,
    pub claims: Vec<Claim>,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.claims)
    }
}

fn mt(terms: &[(&[u32], i64)]) -> SymFunc {
    SymFunc::from_int_terms(Basis::MTilde, terms.iter().map(|(p, c)| (Partition::new(p.to_vec()), *c)))
}

fn ones(k: usize) -> Vec<u32> {
    vec![1; k]
}

/// Checks the four factorisations of the building blocks and the equality
/// of the two ten-vertex cographs.
pub fn counterexample_demo() -> Result<CounterexampleReport, ExperimentError> {
    let two = mt(&[(&[1, 1], 1), (&[2], 2)]);
    let six = mt(&[(&[1, 1], 1), (&[2], 6)]);
    let unit = |k: usize| SymFunc::basis_element(Basis::MTilde, Partition::new(ones(k)));
    let blocks = [
        ("U(K2,K1)", mt(&[(&[1, 1, 1], 1), (&[2, 1], 2)]), unit(1).odot(&two)),
        (
            "U(K6,K1)",
            mt(&[(&ones(7), 1), (&[2, 1, 1, 1, 1, 1], 6)]),
            unit(5).odot(&six),
        ),
        (
            "U(K4,K2)",
            mt(&[(&ones(6), 1), (&[2, 1, 1, 1, 1], 8), (&[2, 2, 1, 1], 12)]),
            unit(2).odot(&two).odot(&six),
        ),
        ("K4", unit(4), unit(4)),
    ];
    let mut identities = Vec::new();
    let mut claims = Vec::new();
    for (text, expanded, factored) in blocks {
        let e = ConstructExpr::parse(text).expect("literal expression");
        let x = csf_stable(&e.to_graph()?)?;
        claims.push(Claim::new(
            format!("X({}) matches its expansion and factorisation", e.to_sugared_string()),
            x == expanded && x == factored,
            x.to_string(),
        ));
        identities.push(IdentityCheck {
            graph: text.to_string(),
            csf_mtilde: x,
            expanded,
            factored,
        });
    }
    let (left, right) = ten_vertex_pair();
    let csf_left = csf_cotree(&left)?;
    let csf_right = csf_cotree(&right)?;
    let factored = unit(6).odot(&two).odot(&six);
    claims.push(Claim::new(
        "both cographs share one chromatic symmetric function",
        csf_left == csf_right,
        csf_left.to_string(),
    ));
    claims.push(Claim::new(
        "shared function equals mt_111111 ⊙ (mt_11 + 2 mt_2) ⊙ (mt_11 + 6 mt_2)",
        csf_left == factored && csf_right == factored,
        factored.to_string(),
    ));
    let stable_agrees = csf_stable(&left.to_graph()?)? == csf_left && csf_stable(&right.to_graph()?)? == csf_right;
    claims.push(Claim::new(
        "stable-partition route agrees with the cotree route",
        stable_agrees,
        "10 vertices",
    ));
    let (gl, gr) = (left.to_graph()?, right.to_graph()?);
    claims.push(Claim::new(
        "canonical cotrees differ and the graphs are not isomorphic",
        left != right && gl.canonical_code()? != gr.canonical_code()?,
        format!("{left} vs {right}"),
    ));
    Ok(CounterexampleReport {
        left: left.to_string(),
        right: right.to_string(),
        csf_left,
        csf_right,
        factored,
        identities,
        claims,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct StanleyReport {
    pub g: String,
    pub h: String,
    pub csf_g: SymFunc,
    pub csf_h: SymFunc,
    pub csf_g_complement: SymFunc,
    pub csf_h_complement: SymFunc,
    pub claims: Vec<Claim>,
}

impl StanleyReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.claims)
    }
}

/// Two triangles sharing a vertex.
pub fn stanley_g() -> SimpleGraph {
    SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).expect("five vertices")
}

/// A diamond with a pendant vertex on one of its degree-two vertices.
pub fn stanley_h() -> SimpleGraph {
    SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4)]).expect("five vertices")
}

pub fn stanley_demo() -> Result<StanleyReport, ExperimentError> {
    let (g, h) = (stanley_g(), stanley_h());
    let csf_g = csf_stable(&g)?;
    let csf_h = csf_stable(&h)?;
    let csf_g_complement = csf_stable(&g.complement())?;
    let csf_h_complement = csf_stable(&h.complement())?;
    let shared = mt(&[(&[1, 1, 1, 1, 1], 1), (&[2, 1, 1, 1], 4), (&[2, 2, 1], 2)]);
    let common = [(&[1u32, 1, 1, 1, 1][..], 1), (&[2, 1, 1, 1], 6), (&[2, 2, 1], 5), (&[3, 1, 1], 2)];
    let with_32 = |c: i64| {
        let mut terms = common.to_vec();
        terms.push((&[3, 2], c));
        mt(&terms)
    };
    let diff = csf_g_complement.sub(&csf_h_complement);
    let claims = vec![
        Claim::new(
            "X(G) = X(H) = mt_11111 + 4 mt_2111 + 2 mt_221",
            csf_g == shared && csf_h == shared,
            csf_g.to_string(),
        ),
        Claim::new(
            "G and H are not isomorphic",
            !g.is_isomorphic_small(&h)?,
            format!("{g} vs {h}"),
        ),
        Claim::new(
            "X(complement of G) matches its display",
            csf_g_complement == with_32(2),
            csf_g_complement.to_string(),
        ),
        Claim::new(
            "X(complement of H) matches its display",
            csf_h_complement == with_32(1),
            csf_h_complement.to_string(),
        ),
        Claim::new(
            "complements differ exactly in the mt_32 coefficient",
            diff == mt(&[(&[3, 2], 1)]),
            diff.to_string(),
        ),
    ];
    Ok(StanleyReport {
        g: g.to_string(),
        h: h.to_string(),
        csf_g,
        csf_h,
        csf_g_complement,
        csf_h_complement,
        claims,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EPositiveLevel {
    pub n: usize,
    pub cographs: usize,
    pub claw_free: usize,
    pub e_positive: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct EPositiveFailure {
    pub expr: String,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EPositiveReport {
    pub n_max: usize,
    pub levels: Vec<EPositiveLevel>,
    pub failures: Vec<EPositiveFailure>,
    /// A cograph containing a claw whose e-expansion has a negative coefficient.
    pub contrast: Option<EPositiveFailure>,
    pub claims: Vec<Claim>,
}

impl EPositiveReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.claims)
    }
}

/// A coconnected component is `K1` or the disjoint union of two cliques.
fn is_k1_or_two_cliques(c: &SimpleGraph) -> bool {
    let is_clique = |g: &SimpleGraph| {
        let n = g.vertex_count();
        g.edge_count() == n * (n - 1) / 2
    };
    if c.vertex_count() == 1 {
        return true;
    }
    let parts = c.connected_components();
    parts.len() == 2 && parts.iter().all(is_clique)
}

/// Checks every claw-free cograph with at most `n_max` vertices.
pub fn epositive(n_max: usize) -> Result<EPositiveReport, ExperimentError> {
    if n_max == 0 || n_max > MAX_EPOSITIVE_VERTICES {
        return Err(ExperimentError::Guard {
            what: "e-positivity sweep",
            n_max,
            limit: MAX_EPOSITIVE_VERTICES,
        });
    }
    let claw = [SimpleGraph::claw()];
    let triangle = [SimpleGraph::k3()];
    let mut levels = Vec::new();
    let mut failures = Vec::new();
    let mut contrast = None;
    let mut literal_bad: Vec<String> = Vec::new();
    let (mut connected_bad, mut positive_bad, mut structure_bad) = (0, 0, 0);
    for n in 1..=n_max {
        let exprs = enumerate_class(GraphClass::Cograph, n)?;
        let mut claw_free = 0;
        let mut e_positive = 0;
        for e in &exprs {
            let g = e.to_graph()?;
            if !g.is_f_free(&claw) {
                if contrast.is_none() {
                    if let Some((lambda, c)) = csf_cotree(e)?.e_positivity().witness {
                        contrast = Some(EPositiveFailure {
                            expr: e.to_sugared_string(),
                            reason: format!("coefficient {c} on e{lambda}"),
                        });
                    }
                }
                continue;
            }
            claw_free += 1;
            let mut fail = |reason: String| failures.push(EPositiveFailure { expr: e.to_string(), reason });
            let connected = g.is_connected();
            if !g.complement().is_f_free(&triangle) {
                literal_bad.push(e.to_sugared_string());
                if connected {
                    connected_bad += 1;
                    fail("complement of a connected graph contains a triangle".into());
                }
            }
            match csf_cotree(e)?.e_positivity().witness {
                None => e_positive += 1,
                Some((lambda, c)) => {
                    positive_bad += 1;
                    fail(format!("coefficient {c} on e{lambda}"));
                }
            }
            let complete = g.edge_count() == n * (n - 1) / 2;
            if connected && !complete && !g.coconnected_components().iter().all(is_k1_or_two_cliques) {
                structure_bad += 1;
                fail("a coconnected component is neither K1 nor two cliques".into());
            }
        }
        levels.push(EPositiveLevel {
            n,
            cographs: exprs.len(),
            claw_free,
            e_positive,
        });
    }
    let total: usize = levels.iter().map(|l| l.claw_free).sum();
    let connected_total = (1..=n_max)
        .map(|n| enumerate_class(GraphClass::Cograph, n))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .filter_map(|e| e.to_graph().ok())
        .filter(|g| g.is_connected() && g.is_f_free(&claw))
        .count();
    let claims = vec![
        Claim::new(
            "every claw-free cograph has a triangle-free complement",
            literal_bad.is_empty(),
            match literal_bad.first() {
                None => format!("0 of {total} fail"),
                Some(first) => format!(
                    "{} of {total} fail, all disconnected with at least three components; smallest {first}",
                    literal_bad.len()
                ),
            },
        ),
        Claim::new(
            "every connected claw-free cograph has a triangle-free complement",
            connected_bad == 0,
            format!("{connected_bad} of {connected_total} fail"),
        ),
        Claim::new(
            "claw-free cographs are e-positive",
            positive_bad == 0,
            format!("{positive_bad} of {total} fail"),
        ),
        Claim::new(
            "coconnected components of connected non-complete claw-free cographs are K1 or two cliques",
            structure_bad == 0,
            format!("{structure_bad} of {total} fail"),
        ),
    ];
    Ok(EPositiveReport {
        n_max,
        levels,
        failures,
        contrast,
        claims,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerateLevel {
    pub n: usize,
    pub count: usize,
    pub expressions: Vec<String>,
}

/// Canonical expressions of `class` for each `n` in `1..=n_max`.
pub fn enumerate(class: GraphClass, n_max: usize) -> Result<Vec<EnumerateLevel>, ExperimentError> {
    (1..=n_max)
        .map(|n| {
            let exprs = enumerate_class(class, n)?;
            Ok(EnumerateLevel {
                n,
                count: exprs.len(),
                expressions: exprs.iter().map(|e| e.to_string()).collect(),
            })
        })
        .collect()
}

/// Each unordered pair becomes an edge with probability one half.
pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    SimpleGraph::from_edges(n, &edges).expect("n within capacity")
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Cross-validates the independent CSF routes on `g` and on a random
/// relabelling of it.
pub fn cross_check<R: Rng>(g: &SimpleGraph, rng: &mut R) -> Result<Vec<Claim>, ExperimentError> {
    let reference = csf_stable(g)?;
    let mut claims = Vec::new();
    match from_cograph(g) {
        Ok(e) => claims.push(Claim::new(
            "cotree route agrees",
            csf_cotree(&e)? == reference,
            e.to_string(),
        )),
        Err(CotreeError::NotACograph) | Err(CotreeError::EmptyGraph) => {}
        Err(err) => return Err(err.into()),
    }
    match csf_powersum(g) {
        Ok(p) => claims.push(Claim::new("power-sum route agrees", p == reference, p.to_string())),
        Err(ChromaticError::Guard { .. }) => {}
        Err(err) => return Err(err.into()),
    }
    let relabelled = g.relabel(&random_permutation(g.vertex_count(), rng));
    claims.push(Claim::new(
        "relabelling preserves the function",
        csf_stable(&relabelled)? == reference,
        relabelled.to_string(),
    ));
    claims.push(Claim::new(
        "chromatic polynomial is the mt specialization",
        crate::chromatic::chromatic_poly(g)? == reference.epsilon_m_tilde(),
        reference.epsilon_m_tilde().to_string(),
    ));
    Ok(claims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counterexample_report_passes() {
        let report = counterexample_demo().unwrap();
        for c in &report.claims {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.identities.len(), 4);
        assert!(report.csf_left.is_homogeneous_of_degree(10));
    }

    #[test]
    fn stanley_report_passes() {
        let report = stanley_demo().unwrap();
        for c in &report.claims {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn small_distinguish_runs() {
        let report = distinguish(GraphClass::TriviallyPerfect, 6).unwrap();
        assert!(report.passed());
        assert_eq!(report.total_graphs(), 1 + 2 + 4 + 9 + 20 + 48);
        let report = distinguish(GraphClass::Cograph, 7).unwrap();
        assert!(report.passed());
        assert!(report.certificates.is_empty());
        assert!(distinguish(GraphClass::Cograph, 11).is_err());
    }

    #[test]
    fn certificate_verification_rejects_tampering() {
        let (a, b) = ten_vertex_pair();
        let x = csf_cotree(&a).unwrap();
        let good = CollisionCertificate {
            vertices: 10,
            left: a.to_string(),
            right: b.to_string(),
            csf_mtilde: x.clone(),
            isomorphic: false,
        };
        assert!(good.verify());
        assert!(good.is_pair(&b, &a));
        let mut wrong = good.clone();
        wrong.csf_mtilde = x.add(&mt(&[(&ones(10), 1)]));
        assert!(!wrong.verify());
        let mut same = good.clone();
        same.right = same.left.clone();
        assert!(!same.verify());
    }

    #[test]
    fn small_epositive_sweep() {
        let report = epositive(6).unwrap();
        assert!(report.failures.is_empty(), "{:?}", report.failures);
        // Three isolated vertices are claw-free with complement K3.
        assert!(!report.claims[0].passed);
        assert!(report.claims[0].detail.ends_with("smallest E3"), "{}", report.claims[0].detail);
        assert!(report.claims[1..].iter().all(|c| c.passed));
        let contrast = report.contrast.expect("the claw itself is not e-positive");
        assert_eq!(contrast.expr, "J(K1,E3)");
        assert!(epositive(10).is_err());
    }

    #[test]
    fn two_clique_components() {
        assert!(is_k1_or_two_cliques(&SimpleGraph::k1()));
        assert!(is_k1_or_two_cliques(&SimpleGraph::two_k2()));
        assert!(!is_k1_or_two_cliques(&SimpleGraph::empty(3).unwrap()));
        assert!(!is_k1_or_two_cliques(&SimpleGraph::p4()));
    }

    #[test]
    fn cross_check_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            let g = random_graph(n, &mut rng);
            for c in cross_check(&g, &mut rng).unwrap() {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        let counts: Vec<usize> = enumerate(GraphClass::Threshold, 5).unwrap().iter().map(|l| l.count).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 16]);
    }
}
