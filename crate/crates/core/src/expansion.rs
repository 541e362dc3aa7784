//! The fundamental slide expansion `κ_a = Σ_{T ∈ QKT(a)} 𝔉_{wt(T)}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::composition::{StrongComposition, WeakComposition};
use crate::error::Result;
use crate::limits::Limits;
use crate::polynomial::{key_polynomial, slide_polynomial, MonomialPolynomial};
use crate::tableau::{self, Cell, Family, KohnertTableau};

/// The multiset of weights of `QKT(index)`, as sorted `(weight, multiplicity)`
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlideExpansion {
    index: WeakComposition,
    terms: Vec<(WeakComposition, usize)>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    weight: WeakComposition,
    multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    index: WeakComposition,
    terms: Vec<TermJson>,
}

impl SlideExpansion {
    pub fn from_weights(index: WeakComposition, weights: impl IntoIterator<Item = WeakComposition>) -> Self {
        let mut counts = BTreeMap::new();
        for w in weights {
            *counts.entry(w).or_insert(0usize) += 1;
        }
        SlideExpansion {
            index,
            terms: counts.into_iter().collect(),
        }
    }

    pub fn index(&self) -> &WeakComposition {
        &self.index
    }

    pub fn terms(&self) -> &[(WeakComposition, usize)] {
        &self.terms
    }

    pub fn multiplicity(&self, weight: &WeakComposition) -> usize {
        self.terms
            .binary_search_by(|(w, _)| w.cmp(weight))
            .map_or(0, |pos| self.terms[pos].1)
    }

    /// Number of distinct slide indices.
    pub fn distinct(&self) -> usize {
        self.terms.len()
    }

    /// `|QKT(index)|`.
    pub fn total(&self) -> usize {
        self.terms.iter().map(|(_, m)| m).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.terms.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// `Σ m_b 𝔉_b` expanded into monomials.
    pub fn to_polynomial(&self, limits: &Limits) -> Result<MonomialPolynomial> {
        let mut total = MonomialPolynomial::zero(self.index.len());
        for (weight, mult) in &self.terms {
            let slide = slide_polynomial(weight, limits)?;
            for _ in 0..*mult {
                total.add_assign(&slide)?;
            }
        }
        Ok(total)
    }

    fn render(&self, kappa: &str, fund: &str, open: &str, close: &str) -> String {
        let rhs: Vec<String> = self
            .terms
            .iter()
            .map(|(w, m)| {
                let coeff = if *m == 1 { String::new() } else { m.to_string() };
                format!("{coeff}{fund}_{open}{}{close}", w.parenthesized())
            })
            .collect();
        format!(
            "{kappa}_{open}{}{close} = {}",
            self.index.parenthesized(),
            rhs.join(" + ")
        )
    }

    /// `\kappa_{(0,0,3,2)} = \mathfrak{F}_{(0,0,3,2)} + …`
    pub fn to_latex(&self) -> String {
        self.render("\\kappa", "\\mathfrak{F}", "{", "}")
    }

    /// `κ_(0,0,3,2) = 𝔉_(0,0,3,2) + …`
    pub fn to_text(&self) -> String {
        self.render("κ", "𝔉", "", "")
    }
}

impl Serialize for SlideExpansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            index: self.index.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, m)| TermJson {
                    weight: w.clone(),
                    multiplicity: *m,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SlideExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = ExpansionJson::deserialize(deserializer)?;
        let weights = raw
            .terms
            .into_iter()
            .flat_map(|t| std::iter::repeat_n(t.weight, t.multiplicity));
        Ok(SlideExpansion::from_weights(raw.index, weights))
    }
}

/// Weights of every quasi-Yamanouchi Kohnert tableau of content `a`.
pub fn slide_expansion(a: &WeakComposition, limits: &Limits) -> Result<SlideExpansion> {
    let mut weights = Vec::new();
    tableau::for_each(a, limits, Family::QuasiYamanouchi, |tab| weights.push(tab.weight()))?;
    Ok(SlideExpansion::from_weights(a.clone(), weights))
}

/// Largest multiplicity in the slide expansion, with the lexicographically
/// smallest weight attaining it when that multiplicity exceeds 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiplicity {
    pub max: usize,
    pub witness: Option<WeakComposition>,
}

impl Multiplicity {
    pub fn is_free(&self) -> bool {
        self.max <= 1
    }
}

pub fn max_multiplicity(a: &WeakComposition, limits: &Limits) -> Result<Multiplicity> {
    let expansion = slide_expansion(a, limits)?;
    let max = expansion.max_multiplicity();
    let witness = (max > 1)
        .then(|| expansion.terms.iter().find(|(_, m)| *m == max).map(|(w, _)| w.clone()))
        .flatten();
    Ok(Multiplicity { max, witness })
}

/// Checks `Σ 𝔉_{wt(T)} = κ_a` monomial by monomial.
pub fn verify_expansion(a: &WeakComposition, limits: &Limits) -> Result<bool> {
    let expansion = slide_expansion(a, limits)?;
    Ok(expansion.to_polynomial(limits)? == key_polynomial(a, limits)?)
}

/// `QKT(α)` for a strong composition, built by sorting away the first ascent.
///
/// With `i` the first position where `α_i < α_{i+1}`, every tableau of
/// `QKT(α̂)` (parts `i`, `i+1` swapped) yields `T_0` by exchanging the labels
/// `i` and `i+1` in the columns right of `α_i`, plus one `T_k` for each
/// column `k` in `α_i+1..=α_{i+1}` where row `i+1` of `T_0` is empty and row
/// `i` holds an `i+1`: `T_k` swaps rows `i` and `i+1` over the columns
/// `α_i+1..=k`. The union is taken as a set.
pub fn recursive_qkt(alpha: &StrongComposition, limits: &Limits) -> Result<Vec<KohnertTableau>> {
    limits.check(&alpha.as_weak())?;
    let mut out = recursive_qkt_inner(alpha.parts());
    let mut keyed: Vec<_> = out.drain(..).map(|t| ((t.weight(), t.cells()), t)).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    keyed.dedup_by(|x, y| x.0 == y.0);
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// One step of [`recursive_qkt`] on a single tableau of the swapped content.
pub fn lift_tableau(alpha: &StrongComposition, hat: &KohnertTableau) -> Vec<KohnertTableau> {
    let parts = alpha.parts();
    let Some(p) = parts.windows(2).position(|w| w[0] < w[1]) else {
        return vec![hat.clone()];
    };
    lift(parts, p, hat)
}

fn lift(parts: &[usize], p: usize, hat: &KohnertTableau) -> Vec<KohnertTableau> {
    let i = p + 1;
    let (short, long) = (parts[p], parts[p + 1]);
    let content = WeakComposition::from(parts);
    let cells: Vec<Cell> = hat
        .cells()
        .into_iter()
        .map(|mut cell| {
            if cell.col > short {
                if cell.label == i {
                    cell.label = i + 1;
                } else if cell.label == i + 1 {
                    cell.label = i;
                }
            }
            cell
        })
        .collect();
    let t0 = KohnertTableau::from_cells(content, &cells).expect("relabelling keeps cells in distinct positions");
    let mut lifted = vec![t0.clone()];
    for k in short + 1..=long {
        if t0.get(i + 1, k) == 0 && t0.get(i, k) == i + 1 {
            let mut tk = t0.clone();
            for col in short + 1..=k {
                let (lower, upper) = (tk.get(i, col), tk.get(i + 1, col));
                tk.set(i, col, upper);
                tk.set(i + 1, col, lower);
            }
            lifted.push(tk);
        }
    }
    lifted
}

fn recursive_qkt_inner(parts: &[usize]) -> Vec<KohnertTableau> {
    let Some(p) = parts.windows(2).position(|w| w[0] < w[1]) else {
        return vec![KohnertTableau::basic(&WeakComposition::from(parts))];
    };
    let mut hat = parts.to_vec();
    hat.swap(p, p + 1);
    recursive_qkt_inner(&hat)
        .iter()
        .flat_map(|t| lift(parts, p, t))
        .collect()
}
