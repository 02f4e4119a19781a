//! Integer partitions stored as non-increasing part lists.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions have different weights ({0} vs {1})")]
    WeightMismatch(u32, u32),
    #[error("invalid partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A finite multiset of positive integers, kept sorted non-increasingly.
///
/// The total order (`Ord`) compares weight first and then the part
/// sequences lexicographically, so within one weight `[1,1,1] < [2,1] < [3]`.
/// Lexicographic order is a linear extension of dominance: if `a` strictly
/// dominates `b` then `a > b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Result of comparing two partitions of equal weight under dominance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    /// The left partition is strictly dominated by the right one.
    Below,
    /// The left partition strictly dominates the right one.
    Above,
    Incomparable,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The single-row partition `(k)`; `(0)` is the empty partition.
    pub fn row(k: u32) -> Self {
        Partition::new(vec![k])
    }

    /// `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity `r_i` of the part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, r)) if *q == p => *r += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union; a merge of the two sorted part lists.
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.parts, &other.parts);
        let mut parts = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        Partition { parts }
    }

    /// Removes one occurrence of `part`, if present.
    pub fn remove_part(&self, part: u32) -> Option<Partition> {
        let idx = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn dominance(&self, other: &Partition) -> Result<Dominance, PartitionError> {
        let (wa, wb) = (self.weight(), other.weight());
        if wa != wb {
            return Err(PartitionError::WeightMismatch(wa, wb));
        }
        let len = self.len().max(other.len());
        let (mut sa, mut sb) = (0u32, 0u32);
        let (mut some_less, mut some_greater) = (false, false);
        for i in 0..len {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            match sa.cmp(&sb) {
                Ordering::Less => some_less = true,
                Ordering::Greater => some_greater = true,
                Ordering::Equal => {}
            }
        }
        Ok(match (some_less, some_greater) {
            (false, false) => Dominance::Equal,
            (true, false) => Dominance::Below,
            (false, true) => Dominance::Above,
            (true, true) => Dominance::Incomparable,
        })
    }

    /// `self ⊴ other` in dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool, PartitionError> {
        Ok(matches!(
            self.dominance(other)?,
            Dominance::Equal | Dominance::Below
        ))
    }

    /// `∏ r_i!` over the part multiplicities.
    pub fn multiplicity_factorial(&self) -> num_bigint::BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(_, r)| factorial(r as u32))
            .product()
    }
}

pub(crate) fn factorial(n: u32) -> num_bigint::BigUint {
    (1..=n).map(num_bigint::BigUint::from).product()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// Accepts `[4,2,1]`, `[]`, and the multiplicity form `<1^3 2^1>`.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                return Ok(Partition::empty());
            }
            let parts = inner
                .split(',')
                .map(|p| p.trim().parse::<u32>().map_err(|_| err("bad part")))
                .collect::<Result<Vec<_>, _>>()?;
            if parts.contains(&0) {
                return Err(err("parts must be positive"));
            }
            return Ok(Partition::new(parts));
        }
        if let Some(inner) = t.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            let mut parts = Vec::new();
            for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let (part, mult) = match tok.split_once('^') {
                    Some((p, m)) => (p, m),
                    None => (tok, "1"),
                };
                let part: u32 = part.parse().map_err(|_| err("bad part"))?;
                let mult: usize = mult.parse().map_err(|_| err("bad multiplicity"))?;
                if part == 0 {
                    return Err(err("parts must be positive"));
                }
                parts.extend(std::iter::repeat_n(part, mult));
            }
            return Ok(Partition::new(parts));
        }
        Err(err("expected [..] or <..>"))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// Iterator returned by [`partitions_of`].
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: drop trailing 1s, decrement the last part > 1, then
        // refill greedily with parts no larger than it.
        let mut parts = current.clone();
        let mut ones = 0u32;
        while parts.last() == Some(&1) {
            parts.pop();
            ones += 1;
        }
        if let Some(last) = parts.pop() {
            let k = last - 1;
            let mut rest = ones + 1 + k;
            while rest > 0 {
                let p = k.min(rest);
                parts.push(p);
                rest -= p;
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}
