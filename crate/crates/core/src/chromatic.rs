//! Chromatic symmetric functions and chromatic polynomials by three
//! independent routes: stable set partitions, cotree recursion and the
//! edge-subset power-sum expansion.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cotree::ConstructExpr;
use crate::graph::{mask_to_vec, GraphError, SimpleGraph};
use crate::partition::Partition;
use crate::poly::FallingPoly;
use crate::symfunc::{Basis, SymFunc};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("{what} is {value}, above the configured limit {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("expression contains a complement node; canonicalize it first")]
    ComplementNode,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Size limits for the exponential routes. Exceeding one is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Vertex limit for stable-partition enumeration.
    pub max_stable_vertices: usize,
    /// Edge limit for the power-sum expansion.
    pub max_powersum_edges: usize,
    /// Limit on `colors^vertices` for brute-force coloring counts.
    pub max_coloring_work: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_stable_vertices: 12,
            max_powersum_edges: 24,
            max_coloring_work: 100_000_000,
        }
    }
}

/// A partition of the vertex set into independent sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StablePartition {
    blocks: Vec<u64>,
}

impl StablePartition {
    /// Blocks as vertex bitmasks, in order of their smallest vertex.
    pub fn blocks(&self) -> &[u64] {
        &self.blocks
    }

    pub fn block_vertices(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|&b| mask_to_vec(b)).collect()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// The integer partition of block sizes.
    pub fn type_(&self) -> Partition {
        Partition::new(self.blocks.iter().map(|b| b.count_ones()).collect())
    }
}

impl Guards {
    fn check_stable(&self, g: &SimpleGraph) -> Result<(), ChromaticError> {
        if g.vertex_count() > self.max_stable_vertices {
            return Err(ChromaticError::Guard {
                what: "vertex count for stable partitions",
                value: g.vertex_count() as u128,
                limit: self.max_stable_vertices as u128,
            });
        }
        Ok(())
    }

    /// Calls `f` once per stable partition, inserting vertices in order into
    /// a compatible existing block or a new one.
    pub fn for_each_stable_partition(
        &self,
        g: &SimpleGraph,
        mut f: impl FnMut(&[u64]),
    ) -> Result<(), ChromaticError> {
        self.check_stable(g)?;
        fn rec(g: &SimpleGraph, v: usize, blocks: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
            if v == g.vertex_count() {
                f(blocks);
                return;
            }
            let nbrs = g.neighbors(v);
            for i in 0..blocks.len() {
                if blocks[i] & nbrs == 0 {
                    blocks[i] |= 1 << v;
                    rec(g, v + 1, blocks, f);
                    blocks[i] &= !(1 << v);
                }
            }
            blocks.push(1 << v);
            rec(g, v + 1, blocks, f);
            blocks.pop();
        }
        rec(g, 0, &mut Vec::new(), &mut f);
        Ok(())
    }

    pub fn stable_partitions(&self, g: &SimpleGraph) -> Result<Vec<StablePartition>, ChromaticError> {
        let mut out = Vec::new();
        self.for_each_stable_partition(g, |b| out.push(StablePartition { blocks: b.to_vec() }))?;
        Ok(out)
    }

    /// `X(G) = Σ_λ |St_λ(G)| mt_λ`.
    pub fn csf_stable(&self, g: &SimpleGraph) -> Result<SymFunc, ChromaticError> {
        let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
        self.for_each_stable_partition(g, |blocks| {
            let mut sizes: Vec<u32> = blocks.iter().map(|b| b.count_ones()).collect();
            sizes.sort_unstable();
            *counts.entry(sizes).or_default() += 1;
        })?;
        Ok(SymFunc::from_terms(
            Basis::MTilde,
            counts
                .into_iter()
                .map(|(sizes, c)| (Partition::new(sizes), Rational::from_integer(c.into()))),
        ))
    }

    /// `χ(G, t) = Σ_ℓ |St_ℓ(G)| (t)_ℓ`.
    pub fn chromatic_poly(&self, g: &SimpleGraph) -> Result<FallingPoly, ChromaticError> {
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        self.for_each_stable_partition(g, |blocks| *counts.entry(blocks.len()).or_default() += 1)?;
        Ok(FallingPoly::from_terms(
            counts.into_iter().map(|(l, c)| (l, Rational::from_integer(c.into()))),
        ))
    }

    /// `Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`, accumulated edge by edge over the
    /// set partitions cut out by the connected components of `(V, S)`.
    pub fn csf_powersum(&self, g: &SimpleGraph) -> Result<SymFunc, ChromaticError> {
        let edges = g.edges();
        if edges.len() > self.max_powersum_edges {
            return Err(ChromaticError::Guard {
                what: "edge count for the power-sum expansion",
                value: edges.len() as u128,
                limit: self.max_powersum_edges as u128,
            });
        }
        // State: block label per vertex, relabelled in first-occurrence order.
        let start: Vec<u8> = (0..g.vertex_count() as u8).collect();
        let mut states: HashMap<Vec<u8>, BigInt> = HashMap::from([(start, BigInt::one())]);
        for (u, v) in edges {
            let mut next: HashMap<Vec<u8>, BigInt> = HashMap::with_capacity(states.len() * 2);
            for (labels, c) in states {
                let merged = merge_blocks(&labels, labels[u], labels[v]);
                *next.entry(merged).or_insert_with(BigInt::zero) -= &c;
                *next.entry(labels).or_insert_with(BigInt::zero) += c;
            }
            next.retain(|_, c| !c.is_zero());
            states = next;
        }
        Ok(SymFunc::from_terms(
            Basis::P,
            states.into_iter().map(|(labels, c)| {
                let mut sizes: BTreeMap<u8, u32> = BTreeMap::new();
                for l in labels {
                    *sizes.entry(l).or_default() += 1;
                }
                (Partition::new(sizes.into_values().collect()), Rational::from_integer(c))
            }),
        ))
    }

    /// Number of proper colorings with `colors` colors, by backtracking.
    pub fn count_colorings(&self, g: &SimpleGraph, colors: usize) -> Result<u64, ChromaticError> {
        let n = g.vertex_count();
        let work = (colors as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if work > self.max_coloring_work {
            return Err(ChromaticError::Guard {
                what: "coloring search size colors^vertices",
                value: work,
                limit: self.max_coloring_work,
            });
        }
        fn rec(g: &SimpleGraph, v: usize, colors: usize, assigned: &mut Vec<usize>) -> u64 {
            if v == g.vertex_count() {
                return 1;
            }
            let mut total = 0;
            for c in 0..colors {
                if (0..v).all(|u| !g.has_edge(u, v) || assigned[u] != c) {
                    assigned.push(c);
                    total += rec(g, v + 1, colors, assigned);
                    assigned.pop();
                }
            }
            total
        }
        Ok(rec(g, 0, colors, &mut Vec::with_capacity(n)))
    }
}

fn merge_blocks(labels: &[u8], a: u8, b: u8) -> Vec<u8> {
    if a == b {
        return labels.to_vec();
    }
    let (keep, gone) = (a.min(b), a.max(b));
    labels
        .iter()
        .map(|&l| match l {
            l if l == gone => keep,
            l if l > gone => l - 1,
            l => l,
        })
        .collect()
}

/// Bottom-up evaluation: `mt_1` at leaves, ordinary product at unions and
/// ⊙ at joins. Equal subtrees are evaluated once.
pub fn csf_cotree(e: &ConstructExpr) -> Result<SymFunc, ChromaticError> {
    fn eval(e: &ConstructExpr, cache: &mut HashMap<String, SymFunc>) -> Result<SymFunc, ChromaticError> {
        let (children, join) = match e {
            ConstructExpr::Leaf => {
                return Ok(SymFunc::basis_element(Basis::MTilde, Partition::row(1)));
            }
            ConstructExpr::Complement(_) => return Err(ChromaticError::ComplementNode),
            ConstructExpr::Union(cs) => (cs, false),
            ConstructExpr::Join(cs) => (cs, true),
        };
        let key = e.to_string();
        if let Some(hit) = cache.get(&key) {
            return Ok(hit.clone());
        }
        let mut acc = SymFunc::one(Basis::MTilde);
        for c in children {
            let x = eval(c, cache)?;
            acc = if join { acc.odot(&x) } else { acc.multiply(&x).to_basis(Basis::MTilde) };
        }
        cache.insert(key, acc.clone());
        Ok(acc)
    }
    eval(e, &mut HashMap::new())
}

pub fn stable_partitions(g: &SimpleGraph) -> Result<Vec<StablePartition>, ChromaticError> {
    Guards::default().stable_partitions(g)
}

pub fn csf_stable(g: &SimpleGraph) -> Result<SymFunc, ChromaticError> {
    Guards::default().csf_stable(g)
}

pub fn csf_powersum(g: &SimpleGraph) -> Result<SymFunc, ChromaticError> {
    Guards::default().csf_powersum(g)
}

pub fn chromatic_poly(g: &SimpleGraph) -> Result<FallingPoly, ChromaticError> {
    Guards::default().chromatic_poly(g)
}

pub fn count_colorings(g: &SimpleGraph, colors: usize) -> Result<u64, ChromaticError> {
    Guards::default().count_colorings(g, colors)
}
