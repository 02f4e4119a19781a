//! Univariate polynomials over the rationals, in the monomial basis
//! ([`Poly`]) and in the falling-factorial basis ([`FallingPoly`]).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::Rational;

/// `Σ c_k t^k`, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(t)_l = t(t-1)...(t-l+1)`.
    pub fn falling(l: usize) -> Self {
        let mut p = Poly::one();
        for i in 0..l {
            let shift = Rational::from_integer((-(i as i64)).into());
            p = p.mul(&Poly::from_coeffs(vec![shift, Rational::one()]));
        }
        p
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&Rational::from_integer(t.into()))
    }

    /// Rewrites in the falling-factorial basis using
    /// `t^k = Σ_j S(k, j) (t)_j` with Stirling numbers of the second kind.
    pub fn to_falling(&self) -> FallingPoly {
        let mut out = FallingPoly::zero();
        // stirling[j] = S(k, j) for the current k.
        let mut stirling: Vec<num_bigint::BigInt> = vec![1.into()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                let mut next = vec![num_bigint::BigInt::zero(); k + 1];
                for j in 1..=k {
                    let keep = stirling.get(j).cloned().unwrap_or_default();
                    next[j] = keep * j + &stirling[j - 1];
                }
                stirling = next;
            }
            for (j, s) in stirling.iter().enumerate() {
                if !s.is_zero() {
                    out.add_term(j, c * Rational::from_integer(s.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let x = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            write_signed_term(f, c, first, &x)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `± c*x`, dropping a unit coefficient when `x` is non-empty.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    c: &Rational,
    first: bool,
    x: &str,
) -> fmt::Result {
    let abs = c.abs();
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if x.is_empty() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        f.write_str(x)
    } else {
        write!(f, "{abs}*{x}")
    }
}

/// `Σ c_l (t)_l`, stored sparsely; the native form of chromatic polynomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FallingPoly {
    coeffs: BTreeMap<usize, Rational>,
}

impl FallingPoly {
    pub fn zero() -> Self {
        FallingPoly::default()
    }

    /// `(t)_0 = 1`.
    pub fn one() -> Self {
        FallingPoly::falling(0)
    }

    /// The basis element `(t)_l`.
    pub fn falling(l: usize) -> Self {
        let mut p = FallingPoly::zero();
        p.add_term(l, Rational::one());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut p = FallingPoly::zero();
        for (l, c) in terms {
            p.add_term(l, c);
        }
        p
    }

    pub fn add_term(&mut self, l: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(l).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&l);
        }
    }

    pub fn coeff(&self, l: usize) -> Rational {
        self.coeffs.get(&l).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&l, c)| (l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &FallingPoly) -> FallingPoly {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l, c.clone());
        }
        out
    }

    /// The product with `(t)_l ⊙ (t)_m = (t)_{l+m}`.
    pub fn odot(&self, other: &FallingPoly) -> FallingPoly {
        let mut out = FallingPoly::zero();
        for (l, a) in self.terms() {
            for (m, b) in other.terms() {
                out.add_term(l + m, a * b);
            }
        }
        out
    }

    pub fn to_poly(&self) -> Poly {
        self.terms()
            .fold(Poly::zero(), |acc, (l, c)| acc.add(&Poly::falling(l).scale(c)))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.terms()
            .map(|(l, c)| {
                let mut v = c.clone();
                for i in 0..l {
                    v *= t - Rational::from_integer((i as i64).into());
                }
                v
            })
            .sum()
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&Rational::from_integer(t.into()))
    }
}

impl fmt::Display for FallingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().rev().enumerate() {
            let x = if *l == 0 { String::new() } else { format!("(t)_{l}") };
            write_signed_term(f, c, i == 0, &x)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FallingPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct FallingTerm {
    ell: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct FallingJson {
    basis: String,
    terms: Vec<FallingTerm>,
}

impl Serialize for FallingPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FallingJson {
            basis: "falling".into(),
            terms: self
                .terms()
                .map(|(ell, c)| FallingTerm { ell, coeff: c.to_string() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FallingPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let json = FallingJson::deserialize(deserializer)?;
        if json.basis != "falling" {
            return Err(serde::de::Error::custom("expected basis \"falling\""));
        }
        let mut p = FallingPoly::zero();
        for t in json.terms {
            let c: Rational = t.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(t.ell, c);
        }
        Ok(p)
    }
}
