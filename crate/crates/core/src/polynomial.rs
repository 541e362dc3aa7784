//! Exact sparse polynomials with nonnegative integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::{dominates_parts, WeakComposition};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::tableau::{self, Family};

/// A polynomial in `variables` indeterminates, stored as exponent vector →
/// coefficient with terms ordered lexicographically by exponent vector.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialPolynomial {
    variables: usize,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl MonomialPolynomial {
    pub fn zero(variables: usize) -> Self {
        MonomialPolynomial {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(variables: usize) -> Self {
        let mut p = Self::zero(variables);
        p.terms.insert(vec![0; variables], 1);
        p
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], u64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[usize]) -> u64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Adds `coefficient · x^exponents`.
    pub fn add_term(&mut self, exponents: &[usize], coefficient: u64) -> Result<()> {
        if exponents.len() != self.variables {
            return Err(Error::VariableMismatch {
                left: self.variables,
                right: exponents.len(),
            });
        }
        if coefficient == 0 {
            return Ok(());
        }
        match self.terms.get_mut(exponents) {
            Some(c) => *c = c.checked_add(coefficient).ok_or(Error::Overflow)?,
            None => {
                self.terms.insert(exponents.to_vec(), coefficient);
            }
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &MonomialPolynomial) -> Result<()> {
        if other.variables != self.variables {
            return Err(Error::VariableMismatch {
                left: self.variables,
                right: other.variables,
            });
        }
        for (exp, &c) in &other.terms {
            self.add_term(exp, c)?;
        }
        Ok(())
    }

    /// Coefficientwise sum.
    pub fn sum(&self, other: &MonomialPolynomial) -> Result<MonomialPolynomial> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    /// Value at `x_1 = … = x_ℓ = 1`, i.e. the sum of coefficients.
    pub fn evaluate_all_ones(&self) -> Result<u64> {
        self.terms
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow)
    }

    /// `Some(d)` when every term has total degree `d`; the zero polynomial
    /// reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<usize>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// Terms in the `x_{1}^{2}x_{2}^{3}` notation.
    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        for (exp, &c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for (idx, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push_str(&format!("x_{{{}}}", idx + 1)),
                    _ => mono.push_str(&format!("x_{{{}}}^{{{}}}", idx + 1, e)),
                }
            }
            pieces.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                (_, false) => format!("{c}{mono}"),
            });
        }
        pieces.join(" + ")
    }
}

impl fmt::Display for MonomialPolynomial {
    /// Plain text, `x1^2*x2^3 + 2*x1*x3`, largest exponent vector first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (exp, &c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let factors: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(idx, &e)| match e {
                    1 => format!("x{}", idx + 1),
                    _ => format!("x{}^{}", idx + 1, e),
                })
                .collect();
            match (c, factors.is_empty()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => f.write_str(&factors.join("*"))?,
                (_, false) => write!(f, "{c}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<usize>,
    coefficient: u64,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    variables: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MonomialPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            variables: self.variables,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| TermJson {
                    exponents: e.clone(),
                    coefficient: c,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MonomialPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let mut p = MonomialPolynomial::zero(raw.variables);
        for term in raw.terms {
            p.add_term(&term.exponents, term.coefficient)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(p)
    }
}

/// `κ_a`: one monomial `x^{wt(T)}` per Kohnert tableau of content `a`.
pub fn key_polynomial(a: &WeakComposition, limits: &Limits) -> Result<MonomialPolynomial> {
    let mut poly = MonomialPolynomial::zero(a.len());
    let mut failure = None;
    tableau::for_each(a, limits, Family::Kohnert, |tab| {
        if failure.is_none() {
            if let Err(err) = poly.add_term(tab.weight().parts(), 1) {
                failure = Some(err);
            }
        }
    })?;
    match failure {
        Some(err) => Err(err),
        None => Ok(poly),
    }
}

/// Every strong composition refining `alpha` with at most `max_len` parts.
fn refinements(alpha: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    fn rec(alpha: &[usize], rest: usize, max_len: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() + alpha.len() + usize::from(rest > 0) > max_len {
            return;
        }
        if rest == 0 {
            match alpha.split_first() {
                None => out.push(prefix.clone()),
                Some((&next, tail)) => rec(tail, next, max_len, prefix, out),
            }
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            rec(alpha, rest - first, max_len, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(alpha, 0, max_len, &mut Vec::new(), &mut out);
    out
}

/// Spreads the parts of `gamma` over `target.len()` positions in order,
/// keeping only placements whose prefix sums dominate `target`.
fn dominating_placements(gamma: &[usize], target: &[usize], out: &mut Vec<Vec<usize>>) {
    fn rec(
        gamma: &[usize],
        target: &[usize],
        pos: usize,
        sum_b: usize,
        sum_a: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == target.len() {
            if gamma.is_empty() {
                out.push(current.clone());
            }
            return;
        }
        let slots_left = target.len() - pos;
        let next_a = sum_a + target[pos];
        // leave a zero here
        if gamma.len() < slots_left && sum_b >= next_a {
            current.push(0);
            rec(gamma, target, pos + 1, sum_b, next_a, current, out);
            current.pop();
        }
        if let Some((&part, tail)) = gamma.split_first() {
            if sum_b + part >= next_a {
                current.push(part);
                rec(tail, target, pos + 1, sum_b + part, next_a, current, out);
                current.pop();
            }
        }
    }
    rec(gamma, target, 0, 0, 0, &mut Vec::with_capacity(target.len()), out);
}

/// `𝔉_a`: the sum of `x^b` over weak compositions `b` of the same length with
/// `b ≥ a` in dominance order and `flat(b)` refining `flat(a)`.
pub fn slide_polynomial(a: &WeakComposition, limits: &Limits) -> Result<MonomialPolynomial> {
    limits.check(a)?;
    let flat = a.flatten();
    let mut poly = MonomialPolynomial::zero(a.len());
    let mut placements = Vec::new();
    for gamma in refinements(flat.parts(), a.len()) {
        dominating_placements(&gamma, a.parts(), &mut placements);
    }
    for b in placements {
        debug_assert!(dominates_parts(&b, a.parts()));
        poly.add_term(&b, 1)?;
    }
    Ok(poly)
}
