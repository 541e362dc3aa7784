//! Closed-form tests for the shape of a slide expansion.
//!
//! Each predicate here is polynomial in the length of the index and never
//! enumerates tableaux; [`classify_with`] can fall back to the brute-force
//! multiplicity count when no theorem applies.
//!
//! Trailing zeros of a weak composition index variables that no cell can
//! reach, so they are ignored by every shape test below.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Partition, StrongComposition, WeakComposition};
use crate::error::{Error, Result};
use crate::expansion::max_multiplicity;
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    SingleTerm,
    TwoTerms,
    MultiplicityFree,
    NotMultiplicityFree,
    UnknownFastPath,
}

impl Verdict {
    /// Whether the verdict settles multiplicity freeness, and which way.
    pub fn is_free(self) -> Option<bool> {
        match self {
            Verdict::SingleTerm | Verdict::TwoTerms | Verdict::MultiplicityFree => Some(true),
            Verdict::NotMultiplicityFree => Some(false),
            Verdict::UnknownFastPath => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SingleTerm => "SINGLE_TERM",
            Verdict::TwoTerms => "TWO_TERMS",
            Verdict::MultiplicityFree => "MULTIPLICITY_FREE",
            Verdict::NotMultiplicityFree => "NOT_MULTIPLICITY_FREE",
            Verdict::UnknownFastPath => "UNKNOWN_FAST_PATH",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The rule that produced a verdict. The string names are stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    KeyEqualsSlide(SingleTermCase),
    TwoTerms,
    PatternA,
    PatternB,
    PatternC,
    PatternFree,
    /// Two nonzero parts, at least two leading zeros.
    TwoParts,
    /// Two nonzero parts, exactly one leading zero.
    TwoPartsOneLeadingZero,
    /// Two nonzero parts, no leading zero.
    TwoPartsNoLeadingZero,
    /// `s_{sort(a)}` is fundamental multiplicity free.
    SchurSortFree,
    /// `flat(a)` already has a repeated term.
    FlatNotFree,
    BruteForce,
    None,
}

const THEOREM_NAMES: &[(Theorem, &str)] = &[
    (Theorem::KeyEqualsSlide(SingleTermCase::AllOnes), "thm_k_eq_f_case_1"),
    (Theorem::KeyEqualsSlide(SingleTermCase::OneNonzero), "thm_k_eq_f_case_2"),
    (
        Theorem::KeyEqualsSlide(SingleTermCase::DecreasingThenLast),
        "thm_k_eq_f_case_3",
    ),
    (
        Theorem::KeyEqualsSlide(SingleTermCase::DecreasingThenBinary),
        "thm_k_eq_f_case_4",
    ),
    (Theorem::TwoTerms, "thm_2terms"),
    (Theorem::PatternA, "thm_main2_pattern_a"),
    (Theorem::PatternB, "thm_main2_pattern_b"),
    (Theorem::PatternC, "thm_main2_pattern_c"),
    (Theorem::PatternFree, "thm_main2_pattern_free"),
    (Theorem::TwoParts, "thm_two_parts"),
    (Theorem::TwoPartsOneLeadingZero, "thm_two_parts_2"),
    (Theorem::TwoPartsNoLeadingZero, "thm_two_parts_3"),
    (Theorem::SchurSortFree, "lem_mf"),
    (Theorem::FlatNotFree, "lem_not_mf"),
    (Theorem::BruteForce, "brute_force"),
    (Theorem::None, "none"),
];

impl Theorem {
    pub fn as_str(self) -> &'static str {
        THEOREM_NAMES
            .iter()
            .find(|(t, _)| *t == self)
            .map(|(_, name)| *name)
            .expect("every theorem has a name")
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        THEOREM_NAMES
            .iter()
            .find(|(_, name)| *name == s)
            .map(|(t, _)| *t)
            .ok_or_else(|| Error::Precondition(format!("unknown theorem name {s:?}")))
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Theorem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

/// Evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// 1-based positions of a forbidden pattern. For [`Theorem::FlatNotFree`]
    /// the positions refer to `flat(a)`.
    Pattern { positions: Vec<usize> },
    /// The complete list of slide indices.
    ClosedForm { terms: Vec<WeakComposition> },
    /// A slide index found with multiplicity above 1 by enumeration.
    RepeatedWeight {
        weight: WeakComposition,
        multiplicity: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub index: WeakComposition,
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub witness: Option<Witness>,
}

fn lex_first<const N: usize>(len: usize, mut pred: impl FnMut([usize; N]) -> bool) -> Option<[usize; N]> {
    fn rec<const N: usize>(
        len: usize,
        depth: usize,
        start: usize,
        idx: &mut [usize; N],
        pred: &mut impl FnMut([usize; N]) -> bool,
    ) -> bool {
        if depth == N {
            return pred(*idx);
        }
        for pos in start..len {
            idx[depth] = pos;
            if rec(len, depth + 1, pos + 1, idx, pred) {
                return true;
            }
        }
        false
    }
    let mut idx = [0; N];
    rec(len, 0, 0, &mut idx, &mut pred).then(|| idx.map(|p| p + 1))
}

/// `i < j < k` with `α_i < α_j < α_k`.
pub fn pattern_a(alpha: &StrongComposition) -> Option<[usize; 3]> {
    lex_first(alpha.len(), |[i, j, k]| alpha[i] < alpha[j] && alpha[j] < alpha[k])
}

/// `i < j < k < l` with `α_i, α_j < α_l < α_k`.
pub fn pattern_b(alpha: &StrongComposition) -> Option<[usize; 4]> {
    lex_first(alpha.len(), |[i, j, k, l]| {
        alpha[i] < alpha[l] && alpha[j] < alpha[l] && alpha[l] < alpha[k]
    })
}

/// `i < j < k < l` with `α_i < α_k`, `α_j + 1 < α_k` and `α_k = α_l`.
pub fn pattern_c(alpha: &StrongComposition) -> Option<[usize; 4]> {
    lex_first(alpha.len(), |[i, j, k, l]| {
        alpha[i] < alpha[k] && alpha[j] + 1 < alpha[k] && alpha[k] == alpha[l]
    })
}

/// For a strong composition the slide expansion is multiplicity free
/// exactly when none of the three patterns occurs.
pub fn strong_multiplicity_free(alpha: &StrongComposition) -> ClassificationReport {
    let found = pattern_a(alpha)
        .map(|p| (Theorem::PatternA, p.to_vec()))
        .or_else(|| pattern_b(alpha).map(|p| (Theorem::PatternB, p.to_vec())))
        .or_else(|| pattern_c(alpha).map(|p| (Theorem::PatternC, p.to_vec())));
    match found {
        Some((theorem, positions)) => ClassificationReport {
            index: alpha.as_weak(),
            verdict: Verdict::NotMultiplicityFree,
            theorem,
            witness: Some(Witness::Pattern { positions }),
        },
        None => ClassificationReport {
            index: alpha.as_weak(),
            verdict: Verdict::MultiplicityFree,
            theorem: Theorem::PatternFree,
            witness: inv1_closed_form(alpha).ok().map(|terms| Witness::ClosedForm { terms }),
        },
    }
}

pub fn is_strong_multiplicity_free(alpha: &StrongComposition) -> bool {
    pattern_a(alpha).is_none() && pattern_b(alpha).is_none() && pattern_c(alpha).is_none()
}

/// The four shapes for which `κ_a = 𝔉_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingleTermCase {
    /// Every nonzero part is 1.
    AllOnes = 1,
    /// Exactly one nonzero part.
    OneNonzero = 2,
    /// `(a_1 ≥ … ≥ a_k > 0, 0^m, a_{k+m+1})` with `a_{k+m+1} ≤ a_k`.
    DecreasingThenLast = 3,
    /// `(a_1 ≥ … ≥ a_k > 1, w, 1)` with `w` a word in 0 and 1.
    DecreasingThenBinary = 4,
}

impl SingleTermCase {
    pub fn number(self) -> u8 {
        self as u8
    }
}

fn weakly_decreasing(parts: &[usize]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// Splits `t` as `(P, 0^m, last)` with `P` nonempty and positive.
fn split_prefix_zeros_last(t: &[usize]) -> Option<(&[usize], usize)> {
    let (&last, rest) = t.split_last()?;
    let k = rest.iter().position(|&p| p == 0).unwrap_or(rest.len());
    if k == 0 || rest[k..].iter().any(|&p| p != 0) {
        return None;
    }
    Some((&rest[..k], last))
}

/// Splits `t` as `(P, w, 1)` with `P` nonempty, parts of `P` above 1 and `w`
/// a word in 0 and 1.
fn split_prefix_binary_one(t: &[usize]) -> Option<&[usize]> {
    if t.last() != Some(&1) {
        return None;
    }
    let k = t.iter().position(|&p| p <= 1).unwrap_or(t.len());
    if k == 0 || t[k..].iter().any(|&p| p > 1) {
        return None;
    }
    Some(&t[..k])
}

/// Which shape, if any, makes `κ_a` a single slide polynomial. The lowest
/// numbered matching case is reported.
pub fn is_single_term(a: &WeakComposition) -> Option<SingleTermCase> {
    let t = a.trimmed();
    if t.iter().all(|&p| p <= 1) {
        return Some(SingleTermCase::AllOnes);
    }
    if a.nonzero_count() == 1 {
        return Some(SingleTermCase::OneNonzero);
    }
    if let Some((prefix, last)) = split_prefix_zeros_last(t) {
        if weakly_decreasing(prefix) && last <= *prefix.last().unwrap() {
            return Some(SingleTermCase::DecreasingThenLast);
        }
    }
    if let Some(prefix) = split_prefix_binary_one(t) {
        if weakly_decreasing(prefix) {
            return Some(SingleTermCase::DecreasingThenBinary);
        }
    }
    None
}

/// `Some(sort₀(a))` exactly when `κ_a = 𝔉_a + 𝔉_{sort₀(a)}`.
///
/// Besides the three classical shapes, an ascent `1, 2` admits two more:
/// `(P, 0^m, 1, 0^n, 2)` and `(P, 1, 2, w, 1)` with `P` positive and `w` a
/// word in 0 and 1. For example `κ_(2,0,1,0,2) = 𝔉_(2,0,1,0,2) + 𝔉_(2,0,2,0,1)`.
pub fn two_term_expansion(a: &WeakComposition) -> Option<WeakComposition> {
    let flat = a.flatten();
    let inversions = flat.inversions();
    let [(i, j)] = inversions.as_slice() else {
        return None;
    };
    if *j != i + 1 || flat[*j - 1] != flat[*i - 1] + 1 {
        return None;
    }
    let t = a.trimmed();
    let shape_ok = flat.parts() == [1, 2]
        || split_prefix_zeros_last(t).is_some()
        || split_prefix_binary_one(t).is_some()
        || spaced_one_two(t)
        || one_two_then_binary(t);
    shape_ok.then(|| a.sort0())
}

fn strip_zeros_right(t: &[usize]) -> &[usize] {
    &t[..t.iter().rposition(|&p| p != 0).map_or(0, |p| p + 1)]
}

/// `t = (P, 0^m, 1, 0^n, 2)` with `P` positive, possibly empty.
fn spaced_one_two(t: &[usize]) -> bool {
    let Some((&2, rest)) = t.split_last() else {
        return false;
    };
    let Some((&1, prefix)) = strip_zeros_right(rest).split_last() else {
        return false;
    };
    strip_zeros_right(prefix).iter().all(|&p| p > 0)
}

/// `t = (P, 1, 2, w, 1)` with `P` positive and `w` a word in 0 and 1.
fn one_two_then_binary(t: &[usize]) -> bool {
    if t.last() != Some(&1) {
        return false;
    }
    let Some(q) = t.windows(2).position(|w| w == [1, 2]) else {
        return false;
    };
    t[..q].iter().all(|&p| p > 0) && t[q + 2..].iter().all(|&p| p <= 1)
}

/// The `m + 1` slide indices of `κ_α` when `α` has a single inversion
/// `(i, i+1)` with `α_{i+1} = α_i + m`.
pub fn inv1_closed_form(alpha: &StrongComposition) -> Result<Vec<WeakComposition>> {
    let inversions = alpha.inversions();
    let [(i, j)] = inversions.as_slice() else {
        return Err(Error::Precondition(format!(
            "{alpha} has {} inversions, expected exactly 1",
            inversions.len()
        )));
    };
    debug_assert_eq!(*j, i + 1);
    let (p, q) = (i - 1, j - 1);
    let base = alpha[p];
    let m = alpha[q] - base;
    Ok((0..=m)
        .map(|t| {
            let mut parts = alpha.parts().to_vec();
            parts[p] = base + t;
            parts[q] = base + m - t;
            WeakComposition::new(parts)
        })
        .collect())
}

/// The Schur function `s_λ` expands multiplicity free into fundamental
/// quasisymmetric functions iff `λ` or its conjugate is `(3,3)`, `(4,4)`,
/// `(n-2,2)` or a hook.
pub fn schur_fund_mf(lambda: &Partition) -> bool {
    fn listed(parts: &[usize]) -> bool {
        match parts {
            [] => true,
            [3, 3] | [4, 4] => true,
            [p, 2] if *p >= 2 => true,
            [_, rest @ ..] => rest.iter().all(|&x| x == 1),
        }
    }
    listed(lambda.parts()) || listed(lambda.conjugate().parts())
}

/// Decides multiplicity freeness for an index with exactly two nonzero
/// parts, dispatching on the number of leading zeros.
pub fn two_nonzero_mf(a: &WeakComposition) -> Result<(bool, Theorem)> {
    if a.nonzero_count() != 2 {
        return Err(Error::Precondition(format!(
            "{a} has {} nonzero parts, expected 2",
            a.nonzero_count()
        )));
    }
    let flat = a.flatten();
    let (first, second) = (flat[0], flat[1]);
    let sorted = a.sort_to_partition();
    let listed = matches!(sorted.parts(), [3, 3] | [4, 4] | [_, 2] | [_, 1]);
    Ok(match a.leading_zeros() {
        0 => (true, Theorem::TwoPartsNoLeadingZero),
        1 => (listed || first >= second, Theorem::TwoPartsOneLeadingZero),
        _ => (listed || (first, second) == (4, 3), Theorem::TwoParts),
    })
}

/// Fast-path classification, never enumerating.
pub fn classify(a: &WeakComposition) -> ClassificationReport {
    fast_path(a)
}

/// [`classify`], optionally settling an unknown verdict by counting
/// multiplicities directly.
pub fn classify_with(a: &WeakComposition, brute: bool, limits: &Limits) -> Result<ClassificationReport> {
    let report = fast_path(a);
    if report.verdict != Verdict::UnknownFastPath || !brute {
        return Ok(report);
    }
    let mult = max_multiplicity(a, limits)?;
    Ok(ClassificationReport {
        index: a.clone(),
        verdict: if mult.is_free() {
            Verdict::MultiplicityFree
        } else {
            Verdict::NotMultiplicityFree
        },
        theorem: Theorem::BruteForce,
        witness: mult.witness.map(|weight| Witness::RepeatedWeight {
            weight,
            multiplicity: mult.max,
        }),
    })
}

fn fast_path(a: &WeakComposition) -> ClassificationReport {
    let report = |verdict, theorem, witness| ClassificationReport {
        index: a.clone(),
        verdict,
        theorem,
        witness,
    };
    if let Some(case) = is_single_term(a) {
        return report(
            Verdict::SingleTerm,
            Theorem::KeyEqualsSlide(case),
            Some(Witness::ClosedForm { terms: vec![a.clone()] }),
        );
    }
    if let Some(other) = two_term_expansion(a) {
        return report(
            Verdict::TwoTerms,
            Theorem::TwoTerms,
            Some(Witness::ClosedForm {
                terms: vec![a.clone(), other],
            }),
        );
    }
    if a.is_strong() {
        let alpha = a.flatten();
        return strong_multiplicity_free(&alpha);
    }
    if let Ok((free, theorem)) = two_nonzero_mf(a) {
        let verdict = if free {
            Verdict::MultiplicityFree
        } else {
            Verdict::NotMultiplicityFree
        };
        return report(verdict, theorem, None);
    }
    if schur_fund_mf(&a.sort_to_partition()) {
        return report(Verdict::MultiplicityFree, Theorem::SchurSortFree, None);
    }
    let flat_report = strong_multiplicity_free(&a.flatten());
    if flat_report.verdict == Verdict::NotMultiplicityFree {
        return report(Verdict::NotMultiplicityFree, Theorem::FlatNotFree, flat_report.witness);
    }
    report(Verdict::UnknownFastPath, Theorem::None, None)
}
