//! Reverse Young diagrams and the tableau species built on them: reverse
//! tableaux, reverse barred tableaux, their sub-variants with empty cells,
//! and skew barred tableaux λ*B.
//!
//! Coordinates follow the reverse convention: row r is counted 1.. from the
//! bottom, column c is counted 1.. from the right. Row r of shape μ/κ
//! occupies columns κ_r+1 ..= μ_r. The unbarred column word reads columns
//! right to left, top to bottom, skipping barred entries and empty boxes.

use crate::error::{Error, Result};
use crate::partition::{content, is_yamanouchi, Composition, Partition};
use serde::Serialize;
use std::fmt;

/// A reverse Young diagram of shape μ/κ (κ = 0 for the straight shape).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReverseDiagram {
    mu: Partition,
    kappa: Partition,
}

impl ReverseDiagram {
    pub fn new(mu: Partition) -> Self {
        let d = mu.len();
        ReverseDiagram {
            mu,
            kappa: Partition::zero(d),
        }
    }

    pub fn skew(mu: Partition, kappa: Partition) -> Result<Self> {
        if !mu.contains(&kappa) {
            return Err(Error::SkewNotContained {
                kappa: kappa.parts().to_vec(),
                mu: mu.parts().to_vec(),
            });
        }
        let d = mu.len();
        let kappa = Partition::with_length(kappa.parts().to_vec(), d)?;
        Ok(ReverseDiagram { mu, kappa })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn kappa(&self) -> &Partition {
        &self.kappa
    }

    pub fn rows(&self) -> usize {
        self.mu.len()
    }

    pub fn width(&self) -> usize {
        self.mu.part(1) as usize
    }

    /// Number of boxes.
    pub fn cell_count(&self) -> usize {
        (self.mu.size() - self.kappa.size()) as usize
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        r >= 1
            && r <= self.rows()
            && c > self.kappa.part(r) as usize
            && c <= self.mu.part(r) as usize
    }

    /// Cells in reading order: columns right to left, top to bottom.
    pub fn cells_reading_order(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cell_count());
        for c in 1..=self.width() {
            let hi = (1..=self.rows())
                .filter(|&r| self.mu.part(r) as usize >= c)
                .max()
                .unwrap_or(0);
            let lo = (1..=self.rows())
                .filter(|&r| self.kappa.part(r) as usize >= c)
                .max()
                .unwrap_or(0)
                + 1;
            for r in (lo..=hi).rev() {
                out.push((r, c));
            }
        }
        out
    }
}

/// A tableau entry: value in 1..=d, optionally barred.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Entry {
    pub value: usize,
    pub barred: bool,
}

impl Entry {
    pub fn plain(value: usize) -> Entry {
        Entry { value, barred: false }
    }
    pub fn barred(value: usize) -> Entry {
        Entry { value, barred: true }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "~" } else { "" })
    }
}

/// A reverse barred (sub)tableau. Full tableaux have every box filled;
/// sub-variants may leave boxes empty and skip the row/column rules.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReverseBarredTableau {
    pub diagram: ReverseDiagram,
    pub d: usize,
    /// Parallel to `diagram.cells_reading_order()`.
    cells: Vec<Option<Entry>>,
    order: Vec<(usize, usize)>,
}

impl ReverseBarredTableau {
    pub fn empty(diagram: ReverseDiagram, d: usize) -> Self {
        let order = diagram.cells_reading_order();
        ReverseBarredTableau {
            diagram,
            d,
            cells: vec![None; order.len()],
            order,
        }
    }

    pub fn from_cells(
        diagram: ReverseDiagram,
        d: usize,
        mut entries: Vec<((usize, usize), Entry)>,
    ) -> Result<Self> {
        let mut t = ReverseBarredTableau::empty(diagram, d);
        entries.sort();
        for ((r, c), e) in entries {
            let idx = t.index_of(r, c).ok_or(Error::NoSuchCell { r, c })?;
            t.cells[idx] = Some(e);
        }
        Ok(t)
    }

    fn index_of(&self, r: usize, c: usize) -> Option<usize> {
        self.order.iter().position(|&rc| rc == (r, c))
    }

    pub fn reading_order(&self) -> &[(usize, usize)] {
        &self.order
    }

    pub fn get(&self, r: usize, c: usize) -> Option<Entry> {
        self.index_of(r, c).and_then(|i| self.cells[i])
    }

    pub fn set(&mut self, r: usize, c: usize, e: Option<Entry>) {
        let i = self.index_of(r, c).expect("cell in diagram");
        self.cells[i] = e;
    }

    /// Entries paired with coordinates, in reading order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), Entry)> + '_ {
        self.order
            .iter()
            .zip(&self.cells)
            .filter_map(|(&rc, e)| e.map(|e| (rc, e)))
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(|c| c.is_some())
    }

    pub fn bar_count(&self) -> usize {
        self.entries().filter(|(_, e)| e.barred).count()
    }

    pub fn has_bars(&self) -> bool {
        self.entries().any(|(_, e)| e.barred)
    }

    /// Strips all bars (the map B -> B~ of the sub-variant machinery).
    pub fn unbarred_copy(&self) -> ReverseBarredTableau {
        let mut t = self.clone();
        for e in t.cells.iter_mut().flatten() {
            e.barred = false;
        }
        t
    }

    /// The unbarred column word B^u (empty boxes and barred entries skipped).
    pub fn unbarred_word(&self) -> Vec<usize> {
        self.entries()
            .filter(|(_, e)| !e.barred)
            .map(|(_, e)| e.value)
            .collect()
    }

    /// Independent validity check: total filling, values in range, rows
    /// weakly increasing left to right, columns strictly increasing top to
    /// bottom (bars ignored).
    pub fn is_valid_barred_tableau(&self) -> bool {
        if !self.is_total() {
            return false;
        }
        for ((r, c), e) in self.entries() {
            if e.value < 1 || e.value > self.d {
                return false;
            }
            // right neighbor: smaller column index
            if c > 1 && self.diagram.contains_cell(r, c - 1) {
                if let Some(right) = self.get(r, c - 1) {
                    if e.value > right.value {
                        return false;
                    }
                }
            }
            // neighbor above: larger row index
            if self.diagram.contains_cell(r + 1, c) {
                if let Some(above) = self.get(r + 1, c) {
                    if above.value >= e.value {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction to columns with index > j (the part to the left).
    pub fn columns_left_of(&self, j: usize) -> Vec<((usize, usize), Entry)> {
        self.entries().filter(|((_, c), _)| *c > j).collect()
    }

    /// JSON value per the shared tableau schema.
    pub fn to_json(&self, lambda: Option<&Partition>) -> serde_json::Value {
        let cells: Vec<_> = self
            .entries()
            .map(|((r, c), e)| {
                serde_json::json!({"r": r, "c": c, "value": e.value, "barred": e.barred})
            })
            .collect();
        serde_json::json!({
            "lambda": lambda.map(|l| l.parts().to_vec()).unwrap_or_default(),
            "mu": self.diagram.mu().parts().to_vec(),
            "kappa": self.diagram.kappa().parts().to_vec(),
            "cells": cells,
        })
    }

    /// ASCII rendering in the paper's layout: top row first, boxes right
    /// justified, bars shown as a trailing '~'.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        let width = self.diagram.width();
        for r in (1..=self.diagram.rows()).rev() {
            if self.diagram.mu.part(r) == 0 {
                continue;
            }
            let mut line = String::new();
            for c in (1..=width).rev() {
                let s = if self.diagram.contains_cell(r, c) {
                    match self.get(r, c) {
                        Some(e) => format!("{}", e),
                        None => ".".to_string(),
                    }
                } else {
                    "".to_string()
                };
                line.push_str(&format!("{:>4}", s));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// A skew barred tableau L = λ*B. The λ part is forced (row i holds λ_i
/// unbarred i's) and is not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewBarredTableau {
    pub lambda: Partition,
    pub inner: ReverseBarredTableau,
}

impl SkewBarredTableau {
    pub fn new(lambda: Partition, inner: ReverseBarredTableau) -> Self {
        SkewBarredTableau { lambda, inner }
    }

    pub fn d(&self) -> usize {
        self.inner.d
    }

    /// Column word of the forced λ part: columns right to left, each read
    /// top to bottom as 1, 2, ..., height.
    pub fn lambda_word(&self) -> Vec<usize> {
        let conj = self.lambda.conjugate();
        let mut w = Vec::new();
        for c in (1..=conj.len()).rev() {
            for v in 1..=conj.part(c) as usize {
                w.push(v);
            }
        }
        w
    }

    /// The unbarred column word L^u.
    pub fn unbarred_word(&self) -> Vec<usize> {
        let mut w = self.lambda_word();
        w.extend(self.inner.unbarred_word());
        w
    }

    /// ω(L^u), the unbarred content.
    pub fn unbarred_content(&self) -> Composition {
        content(&self.unbarred_word(), self.d()).expect("entries in range")
    }

    /// L^u_{<a}: the portion of the word read strictly before cell (r, c)
    /// of the inner tableau, whether or not that cell is barred.
    pub fn word_prefix_before(&self, r: usize, c: usize) -> Result<Vec<usize>> {
        let mut w = self.lambda_word();
        let mut found = false;
        for ((rr, cc), e) in self.inner.entries() {
            if (rr, cc) == (r, c) {
                found = true;
                break;
            }
            if !e.barred {
                w.push(e.value);
            }
        }
        if !found && self.inner.index_of(r, c).is_none() {
            return Err(Error::NoSuchCell { r, c });
        }
        Ok(w)
    }

    pub fn is_yamanouchi(&self) -> bool {
        is_yamanouchi(&self.unbarred_word())
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.inner.to_json(Some(&self.lambda))
    }

    /// ASCII: λ block (above, right of μ) then the μ block.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        let lam = &self.lambda;
        if !lam.is_empty() {
            for i in 1..=lam.len() {
                if lam.part(i) == 0 {
                    continue;
                }
                let row: Vec<String> = (0..lam.part(i)).map(|_| i.to_string()).collect();
                out.push_str(&format!("  | {}\n", row.join(" ")));
            }
            out.push_str("  *\n");
        }
        out.push_str(&self.inner.render_ascii());
        out
    }
}

/// Options steering the shared backtracking enumerator.
struct EnumSpec<'a> {
    d: usize,
    allow_bars: bool,
    /// When set, keep only fillings whose (λ*B)^u is Yamanouchi.
    lambda: Option<&'a Partition>,
    /// When set, require the full unbarred content of λ*B to equal ν.
    nu: Option<&'a Partition>,
}

fn enumerate_fillings(diagram: &ReverseDiagram, spec: &EnumSpec) -> Vec<ReverseBarredTableau> {
    let order = diagram.cells_reading_order();
    let d = spec.d;
    let mut counts: Vec<i64> = vec![0; d + 1]; // running content of the word, 1-based
    if let Some(lam) = spec.lambda {
        for i in 1..=lam.len() {
            counts[i] = lam.part(i) as i64;
        }
    }
    let lambda_total: i64 = counts.iter().sum();
    let mut cells: Vec<Option<Entry>> = vec![None; order.len()];
    let mut out = Vec::new();

    // The Yamanouchi prefix condition is monotone: appending value v keeps
    // the prefix valid iff counts[v]+1 <= counts[v-1]. The λ word itself is
    // Yamanouchi, and within it every prefix dominates, so seeding `counts`
    // with the whole of λ is equivalent to reading the λ word first.
    fn rec(
        diagram: &ReverseDiagram,
        order: &[(usize, usize)],
        spec: &EnumSpec,
        pos: usize,
        cells: &mut Vec<Option<Entry>>,
        counts: &mut Vec<i64>,
        lambda_total: i64,
        out: &mut Vec<ReverseBarredTableau>,
    ) {
        if pos == order.len() {
            if let Some(nu) = spec.nu {
                for v in 1..=spec.d {
                    if counts[v] != nu.part(v) as i64 {
                        return;
                    }
                }
                let total: i64 = counts.iter().sum();
                if total != nu.size() as i64 {
                    return;
                }
            }
            out.push(ReverseBarredTableau {
                diagram: diagram.clone(),
                d: spec.d,
                cells: cells.clone(),
                order: order.to_vec(),
            });
            return;
        }
        let (r, c) = order[pos];
        // constraints from already-placed neighbors
        let right = if c > 1 && diagram.contains_cell(r, c - 1) {
            cells[order.iter().position(|&rc| rc == (r, c - 1)).unwrap()]
        } else {
            None
        };
        let above = if diagram.contains_cell(r + 1, c) {
            cells[order.iter().position(|&rc| rc == (r + 1, c)).unwrap()]
        } else {
            None
        };
        let lo = above.map(|e| e.value + 1).unwrap_or(1);
        let hi = right.map(|e| e.value).unwrap_or(spec.d);
        for v in lo..=hi {
            for barred in [false, true] {
                if barred && !spec.allow_bars {
                    continue;
                }
                if !barred {
                    // Yamanouchi prefix / content bound pruning
                    if spec.lambda.is_some() && v >= 2 && counts[v] + 1 > counts[v - 1] {
                        continue;
                    }
                    if let Some(nu) = spec.nu {
                        if counts[v] + 1 > nu.part(v) as i64 {
                            continue;
                        }
                    }
                    counts[v] += 1;
                }
                cells[pos] = Some(Entry { value: v, barred });
                rec(diagram, order, spec, pos + 1, cells, counts, lambda_total, out);
                cells[pos] = None;
                if !barred {
                    counts[v] -= 1;
                }
            }
        }
    }

    rec(
        diagram,
        &order,
        spec,
        0,
        &mut cells,
        &mut counts,
        lambda_total,
        &mut out,
    );
    out
}

/// R(μ/κ): reverse tableaux (no bars), in canonical order.
pub fn enumerate_reverse_tableaux(diagram: &ReverseDiagram, d: usize) -> Vec<ReverseBarredTableau> {
    enumerate_fillings(
        diagram,
        &EnumSpec {
            d,
            allow_bars: false,
            lambda: None,
            nu: None,
        },
    )
}

/// B(μ/κ): reverse barred tableaux, in canonical order.
pub fn enumerate_barred_tableaux(diagram: &ReverseDiagram, d: usize) -> Vec<ReverseBarredTableau> {
    enumerate_fillings(
        diagram,
        &EnumSpec {
            d,
            allow_bars: true,
            lambda: None,
            nu: None,
        },
    )
}

/// LR_{λ,μ/κ}^ν: skew barred tableaux λ*B with Yamanouchi unbarred column
/// word and unbarred content ν. Pass `nu = None` to get every Yamanouchi
/// λ*B regardless of content.
pub fn enumerate_lr_tableaux(
    lambda: &Partition,
    diagram: &ReverseDiagram,
    nu: Option<&Partition>,
    d: usize,
) -> Vec<SkewBarredTableau> {
    enumerate_fillings(
        diagram,
        &EnumSpec {
            d,
            allow_bars: true,
            lambda: Some(lambda),
            nu,
        },
    )
    .into_iter()
    .map(|b| SkewBarredTableau::new(lambda.clone(), b))
    .collect()
}

/// All reverse barred subtableaux B with B~ = R: every bar pattern over the
/// filled cells of R.
pub fn bar_patterns_over(r_sub: &ReverseBarredTableau) -> Vec<ReverseBarredTableau> {
    let filled: Vec<usize> = r_sub
        .cells
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|_| i))
        .collect();
    let k = filled.len();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let mut t = r_sub.clone();
        for (bit, &idx) in filled.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                t.cells[idx].as_mut().unwrap().barred = true;
            }
        }
        out.push(t);
    }
    out
}
