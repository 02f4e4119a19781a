//! Exact symmetric functions in the monomial (`m`), augmented monomial
//! (`mt`), power-sum (`p`) and elementary (`e`) bases.
//!
//! A [`SymFunc`] is a sparse map from partitions to rationals tagged with
//! its basis. Conversions go through the monomial basis:
//!
//! * `mt -> m` scales the coefficient of `λ` by `∏ r_i!`;
//! * `p -> m` and `e -> m` expand products of `p_k = m_(k)` and
//!   `e_k = m_(1^k)` with the ordinary product;
//! * `m -> e` and `m -> p` solve the triangular systems given by those
//!   expansions.
//!
//! The ordinary product works on monomial coefficients directly: the
//! coefficient of `m_ν` in `fg` is the coefficient of the sorted monomial
//! `x^ν` in the product of the two polynomials, i.e. the sum over all
//! splittings `ν = α + β` of `[x^α]f · [x^β]g`, and `[x^α]f` is the
//! `m`-coefficient of `sort(α)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{factorial, partitions_of, Partition};
use crate::poly::{write_signed_term, FallingPoly, Poly};
use crate::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymFuncError {
    #[error("not a ⊙-multiple of mt[1]: support contains {0} which has no part 1")]
    NotDivisible(Partition),
    #[error("invalid symmetric function text: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "mt")]
    MTilde,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "e")]
    E,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::MTilde => "mt",
            Basis::P => "p",
            Basis::E => "e",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = SymFuncError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "m" => Ok(Basis::M),
            "mt" => Ok(Basis::MTilde),
            "p" => Ok(Basis::P),
            "e" => Ok(Basis::E),
            _ => Err(SymFuncError::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

type Terms = BTreeMap<Partition, Rational>;

#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: Terms,
}

fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn add_into(terms: &mut Terms, key: Partition, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: Terms::new() }
    }

    /// The unit; `b_∅ = 1` in every basis.
    pub fn one(basis: Basis) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        SymFunc::from_terms(basis, [(lambda, Rational::one())])
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SymFunc::zero(basis);
        for (lambda, c) in terms {
            add_into(&mut out.terms, lambda, c);
        }
        out
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms<P: Into<Partition>>(
        basis: Basis,
        terms: impl IntoIterator<Item = (P, i64)>,
    ) -> Self {
        SymFunc::from_terms(basis, terms.into_iter().map(|(p, c)| (p.into(), int(c))))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Coefficients in increasing partition order; never contains zeros.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term has weight `d` (vacuously for zero).
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|p| p.weight() == d)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (p, c) in other.terms {
            add_into(&mut out.terms, p, c);
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(p, a)| (p.clone(), a * c)))
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let m = self.to_m();
        match target {
            Basis::M => m,
            Basis::MTilde => m_to_m_tilde(&m),
            Basis::E => m_to_e(&m),
            Basis::P => m_to_p(&m),
        }
    }

    fn to_m(&self) -> SymFunc {
        match self.basis {
            Basis::M => self.clone(),
            Basis::MTilde => SymFunc::from_terms(
                Basis::M,
                self.terms
                    .iter()
                    .map(|(p, c)| (p.clone(), c * Rational::from_integer(p.multiplicity_factorial().into()))),
            ),
            Basis::E => self.terms.iter().fold(SymFunc::zero(Basis::M), |acc, (p, c)| {
                acc.add(&expand_e(p).scale(c))
            }),
            Basis::P => self.terms.iter().fold(SymFunc::zero(Basis::M), |acc, (p, c)| {
                acc.add(&expand_p(p).scale(c))
            }),
        }
    }

    /// Ordinary product of symmetric functions, returned in the `m` basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let f = self.to_basis(Basis::M);
        let g = other.to_basis(Basis::M);
        SymFunc { basis: Basis::M, terms: multiply_m(&f.terms, &g.terms) }
    }

    /// The product `mt_λ ⊙ mt_μ = mt_{λ ⊎ μ}`, returned in the `mt` basis.
    pub fn odot(&self, other: &SymFunc) -> SymFunc {
        let f = self.to_basis(Basis::MTilde);
        let g = other.to_basis(Basis::MTilde);
        let mut out = SymFunc::zero(Basis::MTilde);
        for (a, x) in &f.terms {
            for (b, y) in &g.terms {
                add_into(&mut out.terms, a.union(b), x * y);
            }
        }
        out
    }

    /// Exact division by `mt_(1)` in the ⊙ algebra: removes one part 1 from
    /// every support partition.
    pub fn odot_divide_m1(&self) -> Result<SymFunc, SymFuncError> {
        let f = self.to_basis(Basis::MTilde);
        let mut out = SymFunc::zero(Basis::MTilde);
        for (p, c) in f.terms {
            let q = p.remove_part(1).ok_or_else(|| SymFuncError::NotDivisible(p.clone()))?;
            add_into(&mut out.terms, q, c);
        }
        Ok(out)
    }

    pub fn to_e_basis(&self) -> SymFunc {
        self.to_basis(Basis::E)
    }

    pub fn e_positivity(&self) -> EPositivity {
        let e = self.to_e_basis();
        let witness = e
            .terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(p, c)| (p.clone(), c.clone()));
        EPositivity { positive: witness.is_none(), witness, e_expansion: e }
    }

    pub fn is_e_positive(&self) -> bool {
        self.e_positivity().positive
    }

    /// Linear map `mt_λ ↦ (t)_{ℓ(λ)}`.
    pub fn epsilon_m_tilde(&self) -> FallingPoly {
        let f = self.to_basis(Basis::MTilde);
        FallingPoly::from_terms(f.terms.iter().map(|(p, c)| (p.len(), c.clone())))
    }

    /// Ring homomorphism `p_k ↦ t`, i.e. `p_λ ↦ t^{ℓ(λ)}`.
    pub fn epsilon_p(&self) -> Poly {
        let f = self.to_basis(Basis::P);
        f.terms
            .iter()
            .fold(Poly::zero(), |acc, (p, c)| acc.add(&Poly::monomial(c.clone(), p.len())))
    }

    /// Value at `x_1 = ... = x_n = 1`, `x_i = 0` otherwise.
    pub fn evaluate_ones(&self, n: u32) -> Rational {
        let m = self.to_basis(Basis::M);
        m.terms
            .iter()
            .map(|(p, c)| c * Rational::from_integer(monomial_at_ones(p, n).into()))
            .sum()
    }

    /// One line per term, `<coeff> * <basis>[<partition>]`, or `0`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0\n".to_string();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("{c} * {}{p}\n", self.basis))
            .collect()
    }

    /// Parses the line-oriented text form produced by [`SymFunc::to_text`].
    pub fn from_text(text: &str) -> Result<SymFunc, SymFuncError> {
        let mut basis = None;
        let mut terms = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line == "0" {
                continue;
            }
            let (coeff, elem) = line
                .split_once('*')
                .ok_or_else(|| SymFuncError::Parse(format!("missing `*` in {line:?}")))?;
            let elem = elem.trim();
            let open = elem
                .find('[')
                .ok_or_else(|| SymFuncError::Parse(format!("missing partition in {line:?}")))?;
            let b: Basis = elem[..open].parse()?;
            if basis.is_some_and(|x| x != b) {
                return Err(SymFuncError::Parse("mixed bases".into()));
            }
            basis = Some(b);
            let p: Partition = elem[open..]
                .parse()
                .map_err(|e| SymFuncError::Parse(format!("{e}")))?;
            let c: Rational = coeff
                .trim()
                .parse()
                .map_err(|_| SymFuncError::Parse(format!("bad coefficient in {line:?}")))?;
            terms.push((p, c));
        }
        Ok(SymFunc::from_terms(basis.unwrap_or(Basis::MTilde), terms))
    }
}

/// Outcome of an e-positivity check.
#[derive(Debug, Clone)]
pub struct EPositivity {
    pub positive: bool,
    /// A negative `(λ, coefficient of e_λ)`, when not e-positive.
    pub witness: Option<(Partition, Rational)>,
    pub e_expansion: SymFunc,
}

/// `m_λ(1^n) = n! / (∏ r_i! · (n - ℓ)!)`, zero when `ℓ > n`.
fn monomial_at_ones(p: &Partition, n: u32) -> num_bigint::BigUint {
    let len = p.len() as u32;
    if len > n {
        return 0u32.into();
    }
    factorial(n) / (p.multiplicity_factorial() * factorial(n - len))
}

fn m_to_m_tilde(m: &SymFunc) -> SymFunc {
    SymFunc::from_terms(
        Basis::MTilde,
        m.terms
            .iter()
            .map(|(p, c)| (p.clone(), c / Rational::from_integer(p.multiplicity_factorial().into()))),
    )
}

/// Eliminates the lexicographically largest support element first. Within
/// a fixed weight that element is dominance-maximal, and `e_{μ'}` is
/// `m_μ` plus terms strictly dominated by `μ`, so every step removes the
/// current leading term without creating anything above it.
fn m_to_e(m: &SymFunc) -> SymFunc {
    let mut residual = m.terms.clone();
    let mut out = Terms::new();
    while let Some((mu, c)) = residual.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
        let lambda = mu.conjugate();
        for (p, a) in &expand_e(&lambda).terms {
            add_into(&mut residual, p.clone(), -(a * &c));
        }
        debug_assert!(!residual.contains_key(&mu));
        add_into(&mut out, lambda, c);
    }
    SymFunc { basis: Basis::E, terms: out }
}

/// `p_μ` is `∏ r_i! · m_μ` plus terms that strictly dominate `μ`, so the
/// elimination runs from the lexicographically smallest element upwards.
fn m_to_p(m: &SymFunc) -> SymFunc {
    let mut residual = m.terms.clone();
    let mut out = Terms::new();
    while let Some((mu, c)) = residual.iter().next().map(|(p, c)| (p.clone(), c.clone())) {
        let expansion = expand_p(&mu);
        let scale = c / expansion.coeff(&mu);
        for (p, a) in &expansion.terms {
            add_into(&mut residual, p.clone(), -(a * &scale));
        }
        debug_assert!(!residual.contains_key(&mu));
        add_into(&mut out, mu, scale);
    }
    SymFunc { basis: Basis::P, terms: out }
}

type Cache = OnceLock<Mutex<HashMap<Partition, SymFunc>>>;

fn cached(cache: &'static Cache, key: &Partition, compute: impl FnOnce() -> SymFunc) -> SymFunc {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("cache poisoned").get(key) {
        return v.clone();
    }
    let v = compute();
    map.lock().expect("cache poisoned").insert(key.clone(), v.clone());
    v
}

/// Monomial expansion of `e_λ = e_{λ_1} ⋯ e_{λ_ℓ}` with `e_k = m_(1^k)`.
pub fn expand_e(lambda: &Partition) -> SymFunc {
    static CACHE: Cache = OnceLock::new();
    cached(&CACHE, lambda, || {
        lambda.parts().iter().fold(SymFunc::one(Basis::M), |acc, &k| {
            acc.multiply(&SymFunc::basis_element(Basis::M, Partition::column(k)))
        })
    })
}

/// Monomial expansion of `p_λ = p_{λ_1} ⋯ p_{λ_ℓ}` with `p_k = m_(k)`.
pub fn expand_p(lambda: &Partition) -> SymFunc {
    static CACHE: Cache = OnceLock::new();
    cached(&CACHE, lambda, || {
        lambda.parts().iter().fold(SymFunc::one(Basis::M), |acc, &k| {
            acc.multiply(&SymFunc::basis_element(Basis::M, Partition::row(k)))
        })
    })
}

fn multiply_m(f: &Terms, g: &Terms) -> Terms {
    let by_degree = |t: &Terms| {
        let mut out: BTreeMap<u32, HashMap<Partition, Rational>> = BTreeMap::new();
        for (p, c) in t {
            out.entry(p.weight()).or_default().insert(p.clone(), c.clone());
        }
        out
    };
    let (fd, gd) = (by_degree(f), by_degree(g));
    let mut out = Terms::new();
    for (&a, fa) in &fd {
        for (&b, gb) in &gd {
            for nu in partitions_of(a + b) {
                let c = product_coefficient(nu.parts(), a, fa, gb);
                add_into(&mut out, nu, c);
            }
        }
    }
    out
}

/// `Σ_{α + β = ν, |α| = a} f[sort α] · g[sort β]` over exponent vectors
/// supported on the positions of `ν`.
fn product_coefficient(
    nu: &[u32],
    a: u32,
    f: &HashMap<Partition, Rational>,
    g: &HashMap<Partition, Rational>,
) -> Rational {
    fn rec(
        nu: &[u32],
        i: usize,
        left: u32,
        alpha: &mut Vec<u32>,
        f: &HashMap<Partition, Rational>,
        g: &HashMap<Partition, Rational>,
        acc: &mut Rational,
    ) {
        if i == nu.len() {
            if left != 0 {
                return;
            }
            let Some(x) = f.get(&Partition::new(alpha.clone())) else { return };
            let beta: Vec<u32> = nu.iter().zip(alpha.iter()).map(|(n, a)| n - a).collect();
            if let Some(y) = g.get(&Partition::new(beta)) {
                *acc += x * y;
            }
            return;
        }
        let capacity: u32 = nu[i + 1..].iter().sum();
        let lo = left.saturating_sub(capacity);
        for ai in lo..=nu[i].min(left) {
            alpha.push(ai);
            rec(nu, i + 1, left - ai, alpha, f, g, acc);
            alpha.pop();
        }
    }
    let mut acc = Rational::zero();
    rec(nu, 0, a, &mut Vec::with_capacity(nu.len()), f, g, &mut acc);
    acc
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_basis(Basis::M).terms == other.to_basis(Basis::M).terms
        }
    }
}

impl Eq for SymFunc {}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            write_signed_term(f, c, i == 0, &format!("{}{p}", self.basis))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson { partition: p.clone(), coeff: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = SymFuncJson::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in json.terms {
            let c: Rational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            terms.push((t.partition, c));
        }
        Ok(SymFunc::from_terms(json.basis, terms))
    }
}
