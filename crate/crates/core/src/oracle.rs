//! Independent oracles: Schur polynomials from semistandard tableaux, the
//! fundamental quasisymmetric expansion of Schur functions from standard
//! tableau descents, stable limits and exhaustive sweeps.
//!
//! Tableaux here are straight shapes drawn with the longest row first. Row
//! `0` is the longest; entries weakly increase along rows and strictly
//! increase going from row `r` to row `r + 1` in a column. In French
//! notation (longest row at the bottom) the semistandard filling
//!
//! ```text
//! 2 3
//! 1 1 2
//! ```
//!
//! has shape `(3,2)`, rows `[[1,1,2],[2,3]]` and content `x_1^2 x_2^2 x_3`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Verdict};
use crate::composition::{Partition, StrongComposition, WeakComposition};
use crate::error::{Error, Result};
use crate::expansion::max_multiplicity;
use crate::limits::Limits;
use crate::polynomial::{key_polynomial, MonomialPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemistandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    pub shape: Partition,
    pub rows: Vec<Vec<usize>>,
}

impl SemistandardTableau {
    /// Exponent vector of `x^T` in `n` variables.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut exps = vec![0; n];
        for &v in self.rows.iter().flatten() {
            exps[v - 1] += 1;
        }
        exps
    }
}

impl StandardTableau {
    /// Entries `p` such that `p + 1` sits in a later row than `p`.
    pub fn descents(&self) -> Vec<usize> {
        let n = self.shape.sum();
        let mut row_of = vec![0; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        (1..n).filter(|&p| row_of[p + 1] > row_of[p]).collect()
    }

    /// Gaps between consecutive descents, closed off at `n`.
    pub fn descent_composition(&self) -> StrongComposition {
        let n = self.shape.sum();
        let mut parts = Vec::new();
        let mut prev = 0;
        for d in self.descents().into_iter().chain((n > 0).then_some(n)) {
            parts.push(d - prev);
            prev = d;
        }
        StrongComposition::new(parts).expect("descent gaps are positive")
    }
}

pub fn semistandard_tableaux(lambda: &Partition, n: usize, limits: &Limits) -> Result<Vec<SemistandardTableau>> {
    limits.check_sum(lambda.sum())?;
    limits.check_len(n)?;
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    fn fill(
        cells: &[(usize, usize)],
        pos: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        shape: &Partition,
        out: &mut Vec<SemistandardTableau>,
    ) {
        let Some(&(r, c)) = cells.get(pos) else {
            out.push(SemistandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        };
        let from_left = if c > 0 { rows[r][c - 1] } else { 1 };
        let from_below = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for v in from_left.max(from_below)..=n {
            rows[r][c] = v;
            fill(cells, pos + 1, n, rows, shape, out);
        }
        rows[r][c] = 0;
    }

    fill(&cells, 0, n, &mut rows, lambda, &mut out);
    Ok(out)
}

pub fn standard_tableaux(lambda: &Partition, limits: &Limits) -> Result<Vec<StandardTableau>> {
    limits.check_sum(lambda.sum())?;
    let total = lambda.sum();
    let mut rows: Vec<Vec<usize>> = lambda.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();

    fn grow(next: usize, total: usize, rows: &mut Vec<Vec<usize>>, shape: &Partition, out: &mut Vec<StandardTableau>) {
        if next > total {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            let fits_row = len < shape[r];
            let fits_col = r == 0 || rows[r - 1].len() > len;
            if fits_row && fits_col {
                rows[r].push(next);
                grow(next + 1, total, rows, shape, out);
                rows[r].pop();
            }
        }
    }

    grow(1, total, &mut rows, lambda, &mut out);
    Ok(out)
}

/// `s_λ(x_1, …, x_n)` by direct tableau enumeration.
pub fn schur_polynomial(lambda: &Partition, n: usize, limits: &Limits) -> Result<MonomialPolynomial> {
    let mut poly = MonomialPolynomial::zero(n);
    for t in semistandard_tableaux(lambda, n, limits)? {
        poly.add_term(&t.content(n), 1)?;
    }
    Ok(poly)
}

/// Multiset of descent compositions over standard tableaux of shape `λ`.
pub fn fundamental_expansion_of_schur(
    lambda: &Partition,
    limits: &Limits,
) -> Result<BTreeMap<StrongComposition, usize>> {
    let mut counts = BTreeMap::new();
    for t in standard_tableaux(lambda, limits)? {
        *counts.entry(t.descent_composition()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Outcome of comparing truncated key polynomials against a Schur polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LimitCheck {
    /// Coefficients are constant for every padding `m ≥ from` up to the
    /// bound and agree with the Schur polynomial.
    Pass { from: usize },
    /// Stable, but the stable coefficient of `x^exponents` is wrong.
    Fail {
        exponents: Vec<usize>,
        key: u64,
        schur: u64,
    },
    /// Not yet constant at the padding bound.
    Inconclusive,
}

impl LimitCheck {
    pub fn passed(&self) -> bool {
        matches!(self, LimitCheck::Pass { .. })
    }
}

/// Coefficients of `p` on monomials in the first `n` variables only.
fn truncate(p: &MonomialPolynomial, n: usize) -> BTreeMap<Vec<usize>, u64> {
    p.terms()
        .filter(|(e, _)| e.iter().skip(n).all(|&x| x == 0))
        .map(|(e, c)| {
            let mut head: Vec<usize> = e.iter().take(n).copied().collect();
            head.resize(n, 0);
            (head, c)
        })
        .collect()
}

/// Compares `κ_{0^m × a}(x_1, …, x_n, 0, …)` for `m = 0..=m_max` with
/// `s_{sort(a)}(x_1, …, x_n)`.
pub fn stable_limit_check(a: &WeakComposition, n: usize, m_max: usize, limits: &Limits) -> Result<LimitCheck> {
    if n == 0 {
        return Err(Error::Precondition("the truncation needs at least one variable".into()));
    }
    let mut truncations = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let key = key_polynomial(&a.with_leading_zeros(m), limits)?;
        truncations.push(truncate(&key, n));
    }
    let last = truncations.last().unwrap();
    let from = truncations.iter().rposition(|t| t != last).map_or(0, |p| p + 1);
    if from == m_max {
        return Ok(LimitCheck::Inconclusive);
    }
    let schur = truncate(&schur_polynomial(&a.sort_to_partition(), n, limits)?, n);
    let mut exponents: Vec<&Vec<usize>> = last.keys().chain(schur.keys()).collect();
    exponents.sort();
    exponents.dedup();
    for e in exponents {
        let (k, s) = (last.get(e).copied().unwrap_or(0), schur.get(e).copied().unwrap_or(0));
        if k != s {
            return Ok(LimitCheck::Fail {
                exponents: e.clone(),
                key: k,
                schur: s,
            });
        }
    }
    Ok(LimitCheck::Pass { from })
}

/// Weak compositions of length exactly `length` with parts at most
/// `entry_max`, lexicographically. Shorter indices appear padded with
/// trailing zeros, which does not change their expansion.
pub fn universe(length: usize, entry_max: usize, limits: &Limits) -> Result<impl Iterator<Item = WeakComposition>> {
    limits.check_len(length)?;
    limits.check_sum(length.saturating_mul(entry_max))?;
    Ok(WeakComposition::all(length, entry_max))
}

/// Every index of [`universe`] paired with its brute-force maximal multiplicity.
pub fn brute_force_mf_universe(
    length: usize,
    entry_max: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = Result<(WeakComposition, usize)>>> {
    let limits = *limits;
    Ok(universe(length, entry_max, &limits)?.map(move |a| {
        let m = max_multiplicity(&a, &limits)?;
        Ok((a, m.max))
    }))
}

/// One line of sweep output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub index: WeakComposition,
    pub max_multiplicity: usize,
    pub classifier_verdict: Verdict,
}

pub fn sweep_record(a: &WeakComposition, limits: &Limits) -> Result<SweepRecord> {
    Ok(SweepRecord {
        index: a.clone(),
        max_multiplicity: max_multiplicity(a, limits)?.max,
        classifier_verdict: classify(a).verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hook_length_count(lambda: &Partition) -> u64 {
        let conj = lambda.conjugate();
        let n = lambda.sum() as u64;
        let mut num: u64 = (1..=n).product();
        for (r, &len) in lambda.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c - 1) + (conj[c] - r - 1) + 1;
                num /= hook as u64;
            }
        }
        num
    }

    #[test]
    fn schur_examples() {
        let lim = Limits::default();
        let s = schur_polynomial(&partition(&[1]), 2, &lim).unwrap();
        assert_eq!(s.to_string(), "x1 + x2");
        let s = schur_polynomial(&partition(&[2, 1]), 2, &lim).unwrap();
        assert_eq!(s.to_string(), "x1^2*x2 + x1*x2^2");
        for n in 2..=4 {
            let s = schur_polynomial(&partition(&[3, 2]), n, &lim).unwrap();
            let mut top = vec![0; n];
            top[0] = 3;
            top[1] = 2;
            assert_eq!(s.coefficient(&top), 1);
        }
        assert!(schur_polynomial(&partition(&[1, 1, 1]), 2, &lim).unwrap().is_empty());
    }

    #[test]
    fn documented_example_filling() {
        let all = semistandard_tableaux(&partition(&[3, 2]), 3, &Limits::default()).unwrap();
        let t = all.iter().find(|t| t.rows == vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(t.content(3), vec![2, 2, 1]);
    }

    #[test]
    fn schur_is_symmetric() {
        let lim = Limits::default();
        for size in 0..=5 {
            for lambda in Partition::all_of(size) {
                let s = schur_polynomial(&lambda, 3, &lim).unwrap();
                for (e, c) in s.terms() {
                    for i in 0..2 {
                        let mut swapped = e.to_vec();
                        swapped.swap(i, i + 1);
                        assert_eq!(s.coefficient(&swapped), c);
                    }
                }
            }
        }
    }

    #[test]
    fn fundamental_expansion_examples() {
        let lim = Limits::default();
        let e = fundamental_expansion_of_schur(&partition(&[4]), &lim).unwrap();
        assert_eq!(
            e.into_iter().collect::<Vec<_>>(),
            vec![(StrongComposition::new(vec![4]).unwrap(), 1)]
        );
        let e = fundamental_expansion_of_schur(&partition(&[3, 3]), &lim).unwrap();
        assert_eq!(e.len(), 5);
        assert!(e.values().all(|&m| m == 1));
        let e = fundamental_expansion_of_schur(&partition(&[3, 3, 1]), &lim).unwrap();
        assert!(e.values().any(|&m| m >= 2));
    }

    #[test]
    fn standard_tableau_counts_match_hook_lengths() {
        let lim = Limits::default();
        for n in 0..=8 {
            for lambda in Partition::all_of(n) {
                let count = standard_tableaux(&lambda, &lim).unwrap().len() as u64;
                assert_eq!(count, hook_length_count(&lambda), "{lambda}");
                let total: usize = fundamental_expansion_of_schur(&lambda, &lim).unwrap().values().sum();
                assert_eq!(total as u64, count);
            }
        }
    }

    #[test]
    fn stable_limit_examples() {
        let lim = Limits::default();
        let a = WeakComposition::from([3, 2]);
        assert!(stable_limit_check(&a, 2, 6, &lim).unwrap().passed());
        let b = WeakComposition::from([2, 3]);
        assert!(stable_limit_check(&b, 2, 6, &lim).unwrap().passed());
        for n in 1..=4 {
            assert!(stable_limit_check(&WeakComposition::from([1]), n, 6, &lim)
                .unwrap()
                .passed());
        }
        assert_eq!(
            stable_limit_check(&WeakComposition::from([2, 2]), 3, 0, &lim).unwrap(),
            LimitCheck::Inconclusive
        );
    }

    #[test]
    fn universe_examples() {
        let lim = Limits::default();
        assert_eq!(universe(2, 2, &lim).unwrap().count(), 9);
        let sweep: Vec<_> = brute_force_mf_universe(3, 3, &lim)
            .unwrap()
            .collect::<Result<_>>()
            .unwrap();
        let lookup = |p: &[usize]| sweep.iter().find(|(a, _)| a.parts() == p).unwrap().1;
        assert_eq!(lookup(&[3, 2, 0]), 1);
        assert!(lookup(&[1, 2, 3]) >= 2);
        for (a, m) in &sweep {
            if a.windows(2).all(|w| w[0] >= w[1]) {
                assert_eq!(*m, 1, "{a}");
            }
        }
        assert!(universe(13, 1, &lim).is_err());
        assert!(universe(5, 5, &lim).is_err());
    }

    #[test]
    fn sweep_record_json() {
        let r = sweep_record(&WeakComposition::from([0, 0, 3, 2]), &Limits::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"index":[0,0,3,2],"max_multiplicity":1,"classifier_verdict":"MULTIPLICITY_FREE"}"#
        );
    }
}
