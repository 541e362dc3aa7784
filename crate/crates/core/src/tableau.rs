//! Kohnert tableaux and quasi-Yamanouchi Kohnert tableaux.
//!
//! Rows are counted from the bottom and columns from the left, both starting
//! at 1. A Kohnert tableau of content `a = (a_1, …, a_ℓ)` places `a_i` cells
//! labelled `i`, one in each of the columns `1..=a_i`, subject to:
//!
//! - (i) exactly one `i` in each column `1..=a_i`;
//! - (ii) every label in row `r` is at least `r`;
//! - (iii) the cells labelled `i` weakly descend from left to right;
//! - (iv) if `i < j` share a column with `i` above `j`, then an `i` occurs in
//!   the next column to the right in a row strictly above that `j`.
//!
//! The quasi-Yamanouchi condition (v) asks that every nonempty row `r`
//! either contains the label `r` or is weakly left of some cell in row `r+1`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::composition::WeakComposition;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub label: usize,
}

/// One of the four defining conditions of a Kohnert tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    I,
    II,
    III,
    IV,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
        })
    }
}

/// Which family an enumeration produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Kohnert,
    QuasiYamanouchi,
}

/// A labelled diagram together with its declared content.
///
/// Cells live in a dense `height × width` grid of labels, `0` meaning empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KohnertTableau {
    content: WeakComposition,
    height: usize,
    width: usize,
    grid: Vec<usize>,
}

impl KohnertTableau {
    fn empty(content: WeakComposition, height: usize, width: usize) -> Self {
        KohnertTableau {
            content,
            height,
            width,
            grid: vec![0; height * width],
        }
    }

    fn blank_for(content: &WeakComposition) -> Self {
        let width = content.iter().copied().max().unwrap_or(0);
        Self::empty(content.clone(), content.len(), width)
    }

    /// The tableau with `a_i` cells labelled `i` in row `i`.
    pub fn basic(content: &WeakComposition) -> Self {
        let mut tab = Self::blank_for(content);
        for (idx, &part) in content.iter().enumerate() {
            for col in 1..=part {
                tab.set(idx + 1, col, idx + 1);
            }
        }
        tab
    }

    /// Builds a tableau from explicit cells. Only structural problems are
    /// rejected here (zero coordinates or labels, two cells in one position);
    /// whether the filling is Kohnert is a separate verdict, see
    /// [`KohnertTableau::validate`].
    pub fn from_cells(content: WeakComposition, cells: &[Cell]) -> Result<Self> {
        let mut height = content.len();
        let mut width = content.iter().copied().max().unwrap_or(0);
        for cell in cells {
            if cell.row == 0 || cell.col == 0 || cell.label == 0 {
                return Err(Error::MalformedTableau(format!(
                    "cell ({}, {}) with label {}: coordinates and labels start at 1",
                    cell.row, cell.col, cell.label
                )));
            }
            height = height.max(cell.row);
            width = width.max(cell.col);
        }
        let mut tab = Self::empty(content, height, width);
        for cell in cells {
            if tab.get(cell.row, cell.col) != 0 {
                return Err(Error::MalformedTableau(format!(
                    "two cells at row {}, column {}",
                    cell.row, cell.col
                )));
            }
            tab.set(cell.row, cell.col, cell.label);
        }
        Ok(tab)
    }

    pub fn content(&self) -> &WeakComposition {
        &self.content
    }

    #[inline]
    fn idx(&self, row: usize, col: usize) -> usize {
        (row - 1) * self.width + (col - 1)
    }

    #[inline]
    pub(crate) fn get(&self, row: usize, col: usize) -> usize {
        if row == 0 || col == 0 || row > self.height || col > self.width {
            0
        } else {
            self.grid[self.idx(row, col)]
        }
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, label: usize) {
        let idx = self.idx(row, col);
        self.grid[idx] = label;
    }

    /// Label in the given cell, if occupied.
    pub fn label_at(&self, row: usize, col: usize) -> Option<usize> {
        match self.get(row, col) {
            0 => None,
            label => Some(label),
        }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Cells in canonical `(row, column)` order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for row in 1..=self.height {
            for col in 1..=self.width {
                let label = self.get(row, col);
                if label != 0 {
                    cells.push(Cell { row, col, label });
                }
            }
        }
        cells
    }

    /// `wt(T)`: number of cells in each row, one entry per part of the content.
    pub fn weight(&self) -> WeakComposition {
        let parts = (1..=self.content.len())
            .map(|row| (1..=self.width).filter(|&col| self.get(row, col) != 0).count())
            .collect();
        WeakComposition::new(parts)
    }

    fn row_of(&self, label: usize, col: usize) -> Option<usize> {
        (1..=self.height).find(|&row| self.get(row, col) == label)
    }

    /// Checks conditions (i)–(iv) against the content and reports the first
    /// one that fails.
    pub fn validate(&self) -> std::result::Result<(), Condition> {
        let len = self.content.len();
        // (i)
        let mut seen = vec![0usize; len + 1];
        for cell in self.cells() {
            if cell.label > len || cell.col > self.content[cell.label - 1] {
                return Err(Condition::I);
            }
            seen[cell.label] += 1;
        }
        for (label, (&have, &want)) in (1..).zip(seen[1..].iter().zip(self.content.iter())) {
            if have != want {
                return Err(Condition::I);
            }
            for col in 1..=want {
                let count = (1..=self.height).filter(|&r| self.get(r, col) == label).count();
                if count != 1 {
                    return Err(Condition::I);
                }
            }
        }
        // (ii)
        if self.cells().iter().any(|cell| cell.label < cell.row) {
            return Err(Condition::II);
        }
        // (iii)
        for label in 1..=len {
            let rows: Vec<usize> = (1..=self.content[label - 1])
                .map(|col| self.row_of(label, col).unwrap())
                .collect();
            if rows.windows(2).any(|w| w[1] > w[0]) {
                return Err(Condition::III);
            }
        }
        // (iv)
        for col in 1..=self.width {
            for upper_row in 1..=self.height {
                let i = self.get(upper_row, col);
                if i == 0 {
                    continue;
                }
                for lower_row in 1..upper_row {
                    let j = self.get(lower_row, col);
                    if j <= i {
                        continue;
                    }
                    let ok = self.row_of(i, col + 1).is_some_and(|next_row| next_row > lower_row);
                    if !ok {
                        return Err(Condition::IV);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_kohnert(&self) -> bool {
        self.validate().is_ok()
    }

    fn row_satisfies_qy(&self, row: usize) -> bool {
        let mut min_col = None;
        let mut has_own_label = false;
        for col in 1..=self.width {
            let label = self.get(row, col);
            if label != 0 {
                min_col.get_or_insert(col);
                has_own_label |= label == row;
            }
        }
        let Some(min_col) = min_col else {
            return true;
        };
        has_own_label || (min_col..=self.width).any(|col| self.get(row + 1, col) != 0)
    }

    fn qy_condition_holds(&self) -> bool {
        (1..=self.height).all(|row| self.row_satisfies_qy(row))
    }

    /// Condition (v). Only meaningful for Kohnert tableaux; anything else is
    /// a precondition error.
    pub fn is_quasi_yamanouchi(&self) -> Result<bool> {
        if let Err(cond) = self.validate() {
            return Err(Error::Precondition(format!(
                "not a Kohnert tableau (condition ({cond}) fails)"
            )));
        }
        Ok(self.qy_condition_holds())
    }

    /// Rows top to bottom, a bar on the left and a rule underneath.
    pub fn render_ascii(&self) -> String {
        let max_label = self.grid.iter().copied().max().unwrap_or(0);
        let w = max_label.max(1).to_string().len();
        let mut out = String::new();
        for row in (1..=self.height).rev() {
            out.push('|');
            let last = (1..=self.width).rev().find(|&c| self.get(row, c) != 0);
            if let Some(last) = last {
                for col in 1..=last {
                    if col > 1 {
                        out.push(' ');
                    }
                    match self.get(row, col) {
                        0 => out.push_str(&format!("{:>w$}", ".")),
                        label => out.push_str(&format!("{label:>w$}")),
                    }
                }
            }
            out.push('\n');
        }
        out.push('+');
        let rule = if self.width == 0 { 1 } else { self.width * (w + 1) - 1 };
        out.push_str(&"-".repeat(rule));
        out.push('\n');
        out
    }

    /// `\tableau{…}` body with rows listed top to bottom.
    pub fn to_latex(&self) -> String {
        let rows: Vec<String> = (1..=self.height)
            .rev()
            .map(|row| {
                let last = (1..=self.width).rev().find(|&c| self.get(row, c) != 0);
                match last {
                    None => " ".to_string(),
                    Some(last) => (1..=last)
                        .map(|col| match self.get(row, col) {
                            0 => String::new(),
                            label => label.to_string(),
                        })
                        .collect::<Vec<_>>()
                        .join("&"),
                }
            })
            .collect();
        format!("\\tableau{{{}}}", rows.join("\\\\"))
    }
}

impl Ord for KohnertTableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.cells().cmp(&other.cells()))
            .then_with(|| self.content.cmp(&other.content))
    }
}

impl PartialOrd for KohnertTableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for KohnertTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    content: WeakComposition,
    cells: Vec<Cell>,
}

impl Serialize for KohnertTableau {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            content: self.content.clone(),
            cells: self.cells(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KohnertTableau {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(deserializer)?;
        KohnertTableau::from_cells(raw.content, &raw.cells).map_err(serde::de::Error::custom)
    }
}

/// Depth-first search over fillings.
///
/// Labels are placed from `ℓ` down to `1`, each as a weakly decreasing row
/// sequence left to right. Once label `i` is placed every row `≥ i` is final,
/// so condition (v) for row `i` can be checked right away. When label `i` is
/// placed every occupied cell below it in the same column carries a larger
/// label, which makes condition (iv) a lower bound on the row of the next `i`.
struct Search<'a, F> {
    content: &'a [usize],
    tab: KohnertTableau,
    family: Family,
    visit: F,
}

impl<F: FnMut(&KohnertTableau)> Search<'_, F> {
    fn place_label(&mut self, label: usize) {
        if label == 0 {
            (self.visit)(&self.tab);
            return;
        }
        if self.content[label - 1] == 0 {
            self.finish_label(label);
        } else {
            self.place_cell(label, 1, label, 0);
        }
    }

    fn finish_label(&mut self, label: usize) {
        if self.family == Family::QuasiYamanouchi && !self.tab.row_satisfies_qy(label) {
            return;
        }
        self.place_label(label - 1);
    }

    /// Puts the `col`-th cell of `label` in a row within `(floor, ceiling]`.
    fn place_cell(&mut self, label: usize, col: usize, ceiling: usize, floor: usize) {
        let last_col = self.content[label - 1];
        for row in floor + 1..=ceiling {
            if self.tab.get(row, col) != 0 {
                continue;
            }
            let below = (1..row).rev().find(|&r| self.tab.get(r, col) != 0).unwrap_or(0);
            if col == last_col && below != 0 {
                continue;
            }
            self.tab.set(row, col, label);
            if col == last_col {
                self.finish_label(label);
            } else {
                self.place_cell(label, col + 1, row, below);
            }
            self.tab.set(row, col, 0);
        }
    }
}

/// Calls `visit` on every tableau of the family with content `a`, in search
/// order. The tableau handed to `visit` is only borrowed for the call.
pub fn for_each<F>(a: &WeakComposition, limits: &Limits, family: Family, visit: F) -> Result<()>
where
    F: FnMut(&KohnertTableau),
{
    limits.check(a)?;
    let mut search = Search {
        content: a.parts(),
        tab: KohnertTableau::blank_for(a),
        family,
        visit,
    };
    search.place_label(a.len());
    Ok(())
}

fn collect_sorted(a: &WeakComposition, limits: &Limits, family: Family) -> Result<Vec<KohnertTableau>> {
    let mut out = Vec::new();
    for_each(a, limits, family, |tab| out.push(tab.clone()))?;
    let mut keyed: Vec<_> = out.into_iter().map(|t| ((t.weight(), t.cells()), t)).collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// `KT(a)` in canonical order: by weight, then by cell list.
pub fn enumerate_kohnert(a: &WeakComposition, limits: &Limits) -> Result<Vec<KohnertTableau>> {
    collect_sorted(a, limits, Family::Kohnert)
}

/// `QKT(a)` in canonical order.
pub fn enumerate_qkt(a: &WeakComposition, limits: &Limits) -> Result<Vec<KohnertTableau>> {
    collect_sorted(a, limits, Family::QuasiYamanouchi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weak(parts: &[usize]) -> WeakComposition {
        WeakComposition::from(parts)
    }

    /// Builds a tableau from rows listed top to bottom, `0` for an empty cell.
    pub(crate) fn from_rows(content: &[usize], rows_top_down: &[&[usize]]) -> KohnertTableau {
        let height = rows_top_down.len();
        let mut cells = Vec::new();
        for (k, row) in rows_top_down.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                if label != 0 {
                    cells.push(Cell {
                        row: height - k,
                        col: c + 1,
                        label,
                    });
                }
            }
        }
        KohnertTableau::from_cells(weak(content), &cells).unwrap()
    }

    pub(crate) fn qy_0032() -> Vec<KohnertTableau> {
        let a = [0, 0, 3, 2];
        vec![
            from_rows(&a, &[&[4, 4], &[3, 3, 3], &[], &[]]),
            from_rows(&a, &[&[4], &[3, 4], &[0, 3, 3], &[]]),
            from_rows(&a, &[&[4], &[3, 3, 3], &[0, 4], &[]]),
            from_rows(&a, &[&[], &[3, 3, 3], &[4, 4], &[]]),
            from_rows(&a, &[&[], &[3, 3], &[4, 0, 3], &[0, 4]]),
        ]
    }

    pub(crate) fn non_qy_0032() -> Vec<KohnertTableau> {
        let a = [0, 0, 3, 2];
        vec![
            from_rows(&a, &[&[4, 4], &[3, 3], &[0, 0, 3], &[]]),
            from_rows(&a, &[&[4], &[0, 4], &[3, 3, 3], &[]]),
            from_rows(&a, &[&[], &[4, 4], &[3, 3, 3], &[]]),
            from_rows(&a, &[&[4], &[3], &[0, 3, 3], &[0, 4]]),
            from_rows(&a, &[&[4], &[3, 4], &[0, 3], &[0, 0, 3]]),
        ]
    }

    #[test]
    fn basic_tableau_shape() {
        let tab = KohnertTableau::basic(&weak(&[2, 3]));
        assert_eq!(tab.label_at(1, 1), Some(1));
        assert_eq!(tab.label_at(1, 3), None);
        assert_eq!(tab.label_at(2, 3), Some(2));
        assert_eq!(tab.weight(), weak(&[2, 3]));
        assert_eq!(KohnertTableau::basic(&weak(&[0, 0, 3, 2])), qy_0032()[0]);
        assert!(KohnertTableau::basic(&weak(&[])).cells().is_empty());
    }

    #[test]
    fn sample_tableaux_are_kohnert() {
        for tab in qy_0032().iter().chain(non_qy_0032().iter()) {
            assert_eq!(tab.validate(), Ok(()), "\n{tab}");
        }
        for tab in qy_0032() {
            assert!(tab.is_quasi_yamanouchi().unwrap(), "\n{tab}");
        }
        for tab in non_qy_0032() {
            assert!(!tab.is_quasi_yamanouchi().unwrap(), "\n{tab}");
        }
    }

    #[test]
    fn qy_0032_weights() {
        let weights: Vec<_> = qy_0032().iter().map(|t| t.weight()).collect();
        assert_eq!(
            weights,
            vec![
                weak(&[0, 0, 3, 2]),
                weak(&[0, 2, 2, 1]),
                weak(&[0, 1, 3, 1]),
                weak(&[0, 2, 3, 0]),
                weak(&[1, 2, 2, 0]),
            ]
        );
    }

    #[test]
    fn validation_reports_first_failing_condition() {
        // a missing cell
        assert_eq!(from_rows(&[0, 2], &[&[2], &[]]).validate(), Err(Condition::I));
        // label 1 in row 2
        assert_eq!(from_rows(&[1, 1], &[&[1], &[2]]).validate(), Err(Condition::II));
        // the 2s ascend
        assert_eq!(from_rows(&[0, 2], &[&[0, 2], &[2]]).validate(), Err(Condition::III));
        // 1 above 2 in column 1 with nothing to the right
        assert_eq!(
            from_rows(&[0, 0, 1, 1], &[&[], &[3], &[4], &[]]).validate(),
            Err(Condition::IV)
        );
        assert!(from_rows(&[0, 0, 1, 1], &[&[], &[3], &[4], &[]])
            .is_quasi_yamanouchi()
            .is_err());
    }

    #[test]
    fn basic_tableaux_are_valid_and_qy_on_small_universe() {
        for len in 0..=4 {
            for a in WeakComposition::all(len, 4) {
                let tab = KohnertTableau::basic(&a);
                assert!(tab.is_kohnert());
                assert!(tab.is_quasi_yamanouchi().unwrap());
                assert_eq!(tab.weight(), a);
            }
        }
    }

    #[test]
    fn enumerate_two_three() {
        let a = weak(&[2, 3]);
        let kt = enumerate_kohnert(&a, &Limits::default()).unwrap();
        let weights: Vec<_> = kt.iter().map(|t| t.weight()).collect();
        assert_eq!(weights, vec![weak(&[2, 3]), weak(&[3, 2])]);
        assert_eq!(enumerate_qkt(&a, &Limits::default()).unwrap().len(), 2);
    }

    #[test]
    fn enumerate_all_zero() {
        for len in 0..4 {
            let kt = enumerate_kohnert(&WeakComposition::zeros(len), &Limits::default()).unwrap();
            assert_eq!(kt.len(), 1);
            assert!(kt[0].cells().is_empty());
        }
    }

    #[test]
    fn enumerate_0032() {
        let a = weak(&[0, 0, 3, 2]);
        let kt = enumerate_kohnert(&a, &Limits::default()).unwrap();
        for tab in qy_0032().iter().chain(non_qy_0032().iter()) {
            assert!(kt.contains(tab), "missing\n{tab}");
        }
        let mut qkt = enumerate_qkt(&a, &Limits::default()).unwrap();
        let mut expected = qy_0032();
        qkt.sort();
        expected.sort();
        assert_eq!(qkt, expected);
    }

    #[test]
    fn partitions_have_only_the_basic_qkt() {
        for a in [weak(&[3, 2]), weak(&[4, 4, 1]), weak(&[2, 2, 2, 1])] {
            assert_eq!(
                enumerate_qkt(&a, &Limits::default()).unwrap(),
                vec![KohnertTableau::basic(&a)]
            );
        }
    }

    #[test]
    fn bound_is_enforced() {
        let a = weak(&[9, 9, 9]);
        assert_eq!(
            enumerate_kohnert(&a, &Limits::default()),
            Err(Error::BoundExceeded {
                bound: "sum",
                limit: 24,
                actual: 27
            })
        );
        let long = WeakComposition::zeros(13);
        assert!(matches!(
            enumerate_qkt(&long, &Limits::default()),
            Err(Error::BoundExceeded { bound: "length", .. })
        ));
    }

    #[test]
    fn search_agrees_with_validation_filter() {
        // independent check: every filling of rows meeting (i)-(iii) is
        // generated, then filtered by the standalone validator
        fn brute(a: &WeakComposition) -> Vec<KohnertTableau> {
            let mut out = Vec::new();
            let cols: Vec<(usize, usize)> = a
                .iter()
                .enumerate()
                .flat_map(|(i, &p)| (1..=p).map(move |c| (i + 1, c)))
                .collect();
            let mut rows = vec![1usize; cols.len()];
            loop {
                let cells: Vec<Cell> = cols
                    .iter()
                    .zip(&rows)
                    .map(|(&(label, col), &row)| Cell { row, col, label })
                    .collect();
                if let Ok(tab) = KohnertTableau::from_cells(a.clone(), &cells) {
                    if tab.is_kohnert() {
                        out.push(tab);
                    }
                }
                let mut k = 0;
                loop {
                    if k == rows.len() {
                        out.sort();
                        return out;
                    }
                    if rows[k] < cols[k].0 {
                        rows[k] += 1;
                        break;
                    }
                    rows[k] = 1;
                    k += 1;
                }
            }
        }
        for len in 0..=3 {
            for a in WeakComposition::all(len, 3) {
                let mut fast = enumerate_kohnert(&a, &Limits::default()).unwrap();
                fast.sort();
                assert_eq!(fast, brute(&a), "content {a}");
                let qkt = enumerate_qkt(&a, &Limits::default()).unwrap();
                let filtered: Vec<_> = fast
                    .iter()
                    .filter(|t| t.is_quasi_yamanouchi().unwrap())
                    .cloned()
                    .collect();
                let mut qkt_sorted = qkt.clone();
                qkt_sorted.sort();
                assert_eq!(qkt_sorted, filtered, "content {a}");
            }
        }
    }

    #[test]
    fn canonical_order_is_by_weight_then_cells() {
        let kt = enumerate_kohnert(&weak(&[0, 1, 2]), &Limits::default()).unwrap();
        for pair in kt.windows(2) {
            let key = |t: &KohnertTableau| (t.weight(), t.cells());
            assert!(key(&pair[0]) < key(&pair[1]));
        }
    }

    #[test]
    fn ascii_and_json() {
        let tab = &qy_0032()[4];
        assert_eq!(tab.render_ascii(), "|\n|3 3\n|4 . 3\n|. 4\n+-----\n");
        assert_eq!(tab.to_latex(), "\\tableau{ \\\\3&3\\\\4&&3\\\\&4}");
        let json = serde_json::to_string(tab).unwrap();
        assert_eq!(
            json,
            r#"{"content":[0,0,3,2],"cells":[{"row":1,"col":2,"label":4},{"row":2,"col":1,"label":4},{"row":2,"col":3,"label":3},{"row":3,"col":1,"label":3},{"row":3,"col":2,"label":3}]}"#
        );
        let back: KohnertTableau = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, tab);
        assert!(serde_json::from_str::<KohnertTableau>(
            r#"{"content":[1],"cells":[{"row":1,"col":1,"label":1},{"row":1,"col":1,"label":1}]}"#
        )
        .is_err());
    }
}
