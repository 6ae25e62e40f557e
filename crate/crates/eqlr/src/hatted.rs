//! Reverse hatted tableaux and the involutions s_1, ..., s_{d-1}, together
//! with the Bad-Guy involution that drives the cancellation lemma.
//!
//! A hatted tableau refines a barred tableau: every bar is resolved into a
//! left hat or a right hat. The involution s_i acts on the free entries of
//! values i and i+1 row by row: step 1 swaps the value blocks of the
//! unhatted and left-hatted entries (a stable block swap), step 2 repairs
//! the row order around right-hatted entries, and step 3 trades hats inside
//! semi-free column pairs. Restricting to hat-free tableaux recovers the
//! Bender-Knuth involutions.

use crate::partition::{content, primed, Composition, Partition};
use crate::poly::{MPoly, Var};
use crate::tableaux::{enumerate_barred_tableaux, Entry, ReverseBarredTableau, ReverseDiagram};
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Hat {
    None,
    Left,
    Right,
}

impl Hat {
    pub fn is_hatted(self) -> bool {
        self != Hat::None
    }
}

/// An entry of a hatted tableau.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct HattedEntry {
    pub value: usize,
    pub hat: Hat,
}

/// A reverse hatted tableau: total filling, rows weakly increasing, columns
/// strictly increasing (hats ignored).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HattedTableau {
    pub diagram: ReverseDiagram,
    pub d: usize,
    cells: Vec<HattedEntry>,
    order: Vec<(usize, usize)>,
}

impl HattedTableau {
    pub fn from_cells(
        diagram: ReverseDiagram,
        d: usize,
        entries: Vec<((usize, usize), HattedEntry)>,
    ) -> Self {
        let order = diagram.cells_reading_order();
        let mut cells = vec![
            HattedEntry {
                value: 0,
                hat: Hat::None
            };
            order.len()
        ];
        for ((r, c), e) in entries {
            let idx = order.iter().position(|&rc| rc == (r, c)).expect("cell");
            cells[idx] = e;
        }
        HattedTableau {
            diagram,
            d,
            cells,
            order,
        }
    }

    fn index_of(&self, r: usize, c: usize) -> Option<usize> {
        self.order.iter().position(|&rc| rc == (r, c))
    }

    pub fn get(&self, r: usize, c: usize) -> Option<HattedEntry> {
        self.index_of(r, c).map(|i| self.cells[i])
    }

    fn set(&mut self, r: usize, c: usize, e: HattedEntry) {
        let i = self.index_of(r, c).expect("cell in diagram");
        self.cells[i] = e;
    }

    /// Entries with coordinates, in reading order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), HattedEntry)> + '_ {
        self.order.iter().zip(&self.cells).map(|(&rc, &e)| (rc, e))
    }

    /// The bar projection: hats become bars.
    pub fn bar_projection(&self) -> ReverseBarredTableau {
        ReverseBarredTableau::from_cells(
            self.diagram.clone(),
            self.d,
            self.entries()
                .map(|(rc, e)| {
                    (
                        rc,
                        Entry {
                            value: e.value,
                            barred: e.hat.is_hatted(),
                        },
                    )
                })
                .collect(),
        )
        .expect("same diagram")
    }

    /// H^u: the unbarred column word (hatted entries skipped).
    pub fn unbarred_word(&self) -> Vec<usize> {
        self.entries()
            .filter(|(_, e)| e.hat == Hat::None)
            .map(|(_, e)| e.value)
            .collect()
    }

    /// Word of the columns with index <= j only.
    pub fn unbarred_word_cols_le(&self, j: usize) -> Vec<usize> {
        self.entries()
            .filter(|((_, c), e)| *c <= j && e.hat == Hat::None)
            .map(|(_, e)| e.value)
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        self.bar_projection().is_valid_barred_tableau()
    }

    /// Cells carrying a left (resp. right) hat, in reading order.
    pub fn hatted_cells(&self, hat: Hat) -> Vec<(usize, usize)> {
        self.entries()
            .filter(|(_, e)| e.hat == hat)
            .map(|(rc, _)| rc)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cells: Vec<_> = self
            .entries()
            .map(|((r, c), e)| {
                let hat = match e.hat {
                    Hat::None => "none",
                    Hat::Left => "left",
                    Hat::Right => "right",
                };
                serde_json::json!({"r": r, "c": c, "value": e.value, "hat": hat})
            })
            .collect();
        serde_json::json!({
            "mu": self.diagram.mu().parts().to_vec(),
            "kappa": self.diagram.kappa().parts().to_vec(),
            "cells": cells,
        })
    }

    /// ASCII with "v" for a left hat and "^" for a right hat, e.g. v3, ^2.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for r in (1..=self.diagram.rows()).rev() {
            if self.diagram.mu().part(r) == 0 {
                continue;
            }
            let mut line = String::new();
            for c in (1..=self.diagram.width()).rev() {
                let s = match self.get(r, c) {
                    Some(e) if self.diagram.contains_cell(r, c) => {
                        let p = match e.hat {
                            Hat::None => "",
                            Hat::Left => "v",
                            Hat::Right => "^",
                        };
                        format!("{}{}", p, e.value)
                    }
                    _ => "".to_string(),
                };
                line.push_str(&format!("{:>4}", s));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// H(μ/κ): every resolution of bars into hats over B(μ/κ).
pub fn enumerate_hatted(diagram: &ReverseDiagram, d: usize) -> Vec<HattedTableau> {
    let mut out = Vec::new();
    for b in enumerate_barred_tableaux(diagram, d) {
        let barred: Vec<(usize, usize)> = b
            .entries()
            .filter(|(_, e)| e.barred)
            .map(|(rc, _)| rc)
            .collect();
        let m = barred.len();
        for mask in 0u64..(1 << m) {
            let entries = b
                .entries()
                .map(|(rc, e)| {
                    let hat = if !e.barred {
                        Hat::None
                    } else {
                        let bit = barred.iter().position(|&x| x == rc).unwrap();
                        if mask & (1 << bit) != 0 {
                            Hat::Right
                        } else {
                            Hat::Left
                        }
                    };
                    (rc, HattedEntry { value: e.value, hat })
                })
                .collect();
            out.push(HattedTableau::from_cells(diagram.clone(), d, entries));
        }
    }
    out
}

/// d_{ξ,H} = ∏_{a∈H^l} y_{e(a)} · ∏_{a∈H^r} (-y_{f(a)}): a signed monomial.
pub fn weight_d_xi_h(xi: &Composition, h: &HattedTableau) -> MPoly {
    let d = h.d;
    let mut counts = vec![0i64; d + 1];
    let mut poly = MPoly::one();
    for ((r, c), e) in h.entries() {
        match e.hat {
            Hat::None => counts[e.value] += 1,
            Hat::Left => {
                let idx = xi.entry(e.value) + counts[e.value];
                poly = poly * MPoly::var(Var::y(idx as i32));
            }
            Hat::Right => {
                let idx = primed(e.value, d) as i64 + c as i64 - r as i64;
                poly = poly * -MPoly::var(Var::y(idx as i32));
            }
        }
    }
    poly
}

/// Tracks where each hatted cell of H lands in s_iH.
#[derive(Clone, Debug, Default)]
pub struct EntryMap {
    pub left: BTreeMap<(usize, usize), (usize, usize)>,
    pub right: BTreeMap<(usize, usize), (usize, usize)>,
}

/// Classification of a value-i or value-(i+1) entry relative to s_i.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryClass {
    Free,
    SemiFree,
    Locked,
}

/// Classifies cell (r, c) of H with respect to i, restricted to columns
/// with index > min_col. Returns None when the value is neither i nor i+1.
pub fn classify(
    h: &HattedTableau,
    i: usize,
    min_col: usize,
    r: usize,
    c: usize,
) -> Option<EntryClass> {
    let e = h.get(r, c)?;
    if c <= min_col || (e.value != i && e.value != i + 1) {
        return None;
    }
    let partner_value = if e.value == i { i + 1 } else { i };
    let partner = (1..=h.diagram.rows())
        .filter(|&rr| rr != r && h.diagram.contains_cell(rr, c))
        .find_map(|rr| {
            let pe = h.get(rr, c)?;
            (pe.value == partner_value).then_some(pe)
        });
    Some(match partner {
        None => EntryClass::Free,
        Some(pe) => {
            if e.hat.is_hatted() || pe.hat.is_hatted() {
                EntryClass::SemiFree
            } else {
                EntryClass::Locked
            }
        }
    })
}

/// Applies s_i to the sub-tableau of columns > min_col (min_col = 0 acts on
/// all of H). Returns the image and the cell maps b_l, b_r.
pub fn apply_s_i_restricted(h: &HattedTableau, i: usize, min_col: usize) -> (HattedTableau, EntryMap) {
    assert!(i >= 1 && i + 1 <= h.d, "i out of range");
    let mut result = h.clone();
    let mut map = EntryMap::default();
    for (rc, e) in h.entries() {
        match e.hat {
            Hat::Left => {
                map.left.insert(rc, rc);
            }
            Hat::Right => {
                map.right.insert(rc, rc);
            }
            Hat::None => {}
        }
    }

    // Step 3 first on our books (it commutes with steps 1-2, which only
    // touch free entries): semi-free column pairs trade hats.
    let mut semi_done: Vec<(usize, usize)> = Vec::new();
    for ((r, c), e) in h.entries() {
        if classify(h, i, min_col, r, c) != Some(EntryClass::SemiFree) {
            continue;
        }
        if semi_done.contains(&(r, c)) {
            continue;
        }
        let partner_value = if e.value == i { i + 1 } else { i };
        let pr = (1..=h.diagram.rows())
            .filter(|&rr| rr != r && h.diagram.contains_cell(rr, c))
            .find(|&rr| h.get(rr, c).map(|pe| pe.value) == Some(partner_value))
            .expect("semi-free partner");
        let pe = h.get(pr, c).unwrap();
        // each entry hands its hat to the other
        result.set(r, c, HattedEntry { value: e.value, hat: pe.hat });
        result.set(pr, c, HattedEntry { value: pe.value, hat: e.hat });
        if e.hat.is_hatted() {
            match e.hat {
                Hat::Left => map.left.insert((r, c), (pr, c)),
                Hat::Right => map.right.insert((r, c), (pr, c)),
                Hat::None => None,
            };
        }
        if pe.hat.is_hatted() {
            match pe.hat {
                Hat::Left => map.left.insert((pr, c), (r, c)),
                Hat::Right => map.right.insert((pr, c), (r, c)),
                Hat::None => None,
            };
        }
        semi_done.push((r, c));
        semi_done.push((pr, c));
    }

    // Steps 1 and 2 on each maximal string of free entries in each row.
    for r in 1..=h.diagram.rows() {
        let row_cols: Vec<usize> = (1..=h.diagram.width())
            .rev() // left to right = descending column index
            .filter(|&c| h.diagram.contains_cell(r, c))
            .collect();
        let mut run: Vec<usize> = Vec::new();
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for &c in &row_cols {
            if classify(h, i, min_col, r, c) == Some(EntryClass::Free) {
                run.push(c);
            } else if !run.is_empty() {
                runs.push(std::mem::take(&mut run));
            }
        }
        if !run.is_empty() {
            runs.push(run);
        }
        for cols in runs {
            apply_to_string(h, &mut result, &mut map, i, r, &cols);
        }
    }
    (result, map)
}

/// One entry of a free string under simulation, remembering where it came
/// from so the b_l/b_r maps can be read off at the end.
#[derive(Clone, Copy)]
struct Slot {
    value: usize,
    hat: Hat,
    origin: (usize, usize),
}

fn apply_to_string(
    h: &HattedTableau,
    result: &mut HattedTableau,
    map: &mut EntryMap,
    i: usize,
    row: usize,
    cols: &[usize], // string cells, left to right
) {
    let m = cols.len();
    let mut slots: Vec<Slot> = cols
        .iter()
        .map(|&c| {
            let e = h.get(row, c).unwrap();
            Slot {
                value: e.value,
                hat: e.hat,
                origin: (row, c),
            }
        })
        .collect();

    // Step 1 on the unhatted and left-hatted entries: flip values, then
    // stable block swap of the i-block and (i+1)-block.
    let idx: Vec<usize> = (0..m)
        .filter(|&p| slots[p].hat != Hat::Right)
        .collect();
    let mut members: Vec<Slot> = idx.iter().map(|&p| slots[p]).collect();
    for s in &mut members {
        s.value = if s.value == i { i + 1 } else { i };
    }
    let (low, high): (Vec<Slot>, Vec<Slot>) =
        members.iter().partition(|s| s.value == i);
    let reordered: Vec<Slot> = low.into_iter().chain(high).collect();
    for (&p, s) in idx.iter().zip(reordered) {
        slots[p] = s;
    }

    // Step 2: repair around the right-hatted entries. First the value-i
    // right hats, left to right; then the value-(i+1) right hats, right to
    // left. Entries are tracked by identity.
    let right_i: Vec<(usize, usize)> = (0..m)
        .filter(|&p| slots[p].hat == Hat::Right && slots[p].value == i)
        .map(|p| (p, p))
        .collect();
    let right_i1: Vec<usize> = (0..m)
        .filter(|&p| slots[p].hat == Hat::Right && slots[p].value == i + 1)
        .collect();

    let mut positions: Vec<usize> = (0..m).collect(); // identity index -> position
    let find = |positions: &[usize], ident: usize| positions[ident];

    for &(ident, _) in &right_i {
        let p = find(&positions, ident);
        if p == 0 {
            continue;
        }
        let left_ident = positions.iter().position(|&q| q == p - 1).unwrap();
        if slots[left_ident].value == i + 1 {
            positions.swap_elements(ident, left_ident);
            // the moved right hat takes value i+1
            // (identities keep their slot data; adjust value)
            // after swap: ident sits at p-1, left_ident at p
            slotvalue_bump(&mut slots, ident, i + 1);
        }
    }
    for &ident in right_i1.iter().rev() {
        let p = find(&positions, ident);
        if p + 1 >= m {
            continue;
        }
        let right_ident = positions.iter().position(|&q| q == p + 1).unwrap();
        if slots[right_ident].value == i {
            positions.swap_elements(ident, right_ident);
            slotvalue_bump(&mut slots, ident, i);
        }
    }

    // Write back: identity k sits at position positions[k].
    for (ident, slot) in slots.iter().enumerate() {
        let pos = positions[ident];
        let c = cols[pos];
        result.set(
            row,
            c,
            HattedEntry {
                value: slot.value,
                hat: slot.hat,
            },
        );
        match slot.hat {
            Hat::Left => {
                map.left.insert(slot.origin, (row, c));
            }
            Hat::Right => {
                map.right.insert(slot.origin, (row, c));
            }
            Hat::None => {}
        }
    }
}

fn slotvalue_bump(slots: &mut [Slot], ident: usize, value: usize) {
    slots[ident].value = value;
}

trait SwapElements {
    fn swap_elements(&mut self, a: usize, b: usize);
}

impl SwapElements for Vec<usize> {
    fn swap_elements(&mut self, a: usize, b: usize) {
        self.swap(a, b);
    }
}

/// s_i on the whole tableau.
pub fn apply_s_i(h: &HattedTableau, i: usize) -> (HattedTableau, EntryMap) {
    apply_s_i_restricted(h, i, 0)
}

/// σH for a word of simple transpositions applied left to right:
/// σ = σ_{i_1} ... σ_{i_t} acts as s_{i_1}(s_{i_2}(...(s_{i_t} H))).
pub fn apply_sigma(word: &[usize], h: &HattedTableau) -> HattedTableau {
    let mut cur = h.clone();
    for &i in word.iter().rev() {
        cur = apply_s_i(&cur, i).0;
    }
    cur
}

/// Applies the same word to a composition: σξ.
pub fn sigma_on_composition(word: &[usize], xi: &Composition) -> Composition {
    let mut cur = xi.clone();
    for &i in word.iter().rev() {
        cur = cur.swap_adjacent(i);
    }
    cur
}

/// The Bad-Guy test: the minimal (j, i) with λ + ω(H^u_{<=j}) not a
/// partition at column cutoff j, i the first descent violation. None when
/// H is not a Bad Guy.
pub fn bad_guy_cut(h: &HattedTableau, lambda: &Partition) -> Option<(usize, usize)> {
    let d = h.d;
    for j in 1..=h.diagram.width() {
        let w = h.unbarred_word_cols_le(j);
        let omega = content(&w, d).expect("range");
        let v = lambda.plus(&omega);
        for i in 1..d {
            if v.entry(i) < v.entry(i + 1) {
                return Some((j, i));
            }
        }
    }
    None
}

/// The pairing H -> H* on Bad Guys: replace the part strictly left of the
/// cut column by its image under s_i. Returns None when H is not a Bad Guy.
pub fn bad_guy_star(h: &HattedTableau, lambda: &Partition) -> Option<HattedTableau> {
    let (j, i) = bad_guy_cut(h, lambda)?;
    let (starred, _) = apply_s_i_restricted(h, i, j);
    Some(starred)
}

/// Independent Bender-Knuth involution on reverse tableaux (hat-free), used
/// only as a cross-check oracle for s_i.
pub fn bender_knuth(b: &ReverseBarredTableau, i: usize) -> ReverseBarredTableau {
    let mut out = b.clone();
    for r in 1..=b.diagram.rows() {
        let row_cols: Vec<usize> = (1..=b.diagram.width())
            .rev()
            .filter(|&c| b.diagram.contains_cell(r, c))
            .collect();
        // free = no i/i+1 partner in the same column
        let is_free = |c: usize| {
            let e = match b.get(r, c) {
                Some(e) => e,
                None => return false,
            };
            if e.value != i && e.value != i + 1 {
                return false;
            }
            let partner = if e.value == i { i + 1 } else { i };
            !(1..=b.diagram.rows())
                .filter(|&rr| rr != r && b.diagram.contains_cell(rr, c))
                .any(|rr| b.get(rr, c).map(|pe| pe.value) == Some(partner))
        };
        let mut run: Vec<usize> = Vec::new();
        let mut runs: Vec<Vec<usize>> = Vec::new();
        for &c in &row_cols {
            if is_free(c) {
                run.push(c);
            } else if !run.is_empty() {
                runs.push(std::mem::take(&mut run));
            }
        }
        if !run.is_empty() {
            runs.push(run);
        }
        for cols in runs {
            let p = cols
                .iter()
                .filter(|&&c| b.get(r, c).unwrap().value == i)
                .count();
            let q = cols.len() - p;
            // p i's then q (i+1)'s becomes q i's then p (i+1)'s
            for (k, &c) in cols.iter().enumerate() {
                let v = if k < q { i } else { i + 1 };
                out.set(r, c, Some(Entry::plain(v)));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_reverse_tableaux;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn diag(parts: &[u32]) -> ReverseDiagram {
        ReverseDiagram::new(part(parts))
    }

    #[test]
    fn hatted_counts() {
        assert_eq!(enumerate_hatted(&diag(&[1]), 1).len(), 3);
        assert_eq!(enumerate_hatted(&diag(&[1]), 2).len(), 6);
        // |H(μ)| = Σ_B 2^{#bars(B)}
        for parts in [vec![2u32, 1], vec![2, 2]] {
            let dg = diag(&parts);
            for d in 1..=3usize {
                let total: usize = enumerate_barred_tableaux(&dg, d)
                    .iter()
                    .map(|b| 1usize << b.bar_count())
                    .sum();
                assert_eq!(enumerate_hatted(&dg, d).len(), total);
            }
        }
    }

    #[test]
    fn hatted_expansion_of_barred_weight() {
        // c_{ξ,B} = Σ_{H̄=B} d_{ξ,H}, exhaustively for d=2, μ=(2,1)
        let d = 2;
        let dg = diag(&[2, 1]);
        let hatted = enumerate_hatted(&dg, d);
        for xi_parts in [[1i64, 1], [3, 1], [2, 3], [3, 3]] {
            let xi = Composition::new(xi_parts.to_vec());
            for b in enumerate_barred_tableaux(&dg, d) {
                let want = crate::weights::weight_c_xi_b(&xi, &b);
                let mut got = MPoly::zero();
                for h in hatted.iter().filter(|h| h.bar_projection() == b) {
                    got += &weight_d_xi_h(&xi, h);
                }
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn hat_free_weight_is_one() {
        let d = 2;
        let dg = diag(&[2, 1]);
        for h in enumerate_hatted(&dg, d) {
            if h.hatted_cells(Hat::Left).is_empty() && h.hatted_cells(Hat::Right).is_empty() {
                assert_eq!(
                    weight_d_xi_h(&Composition::new(vec![2, 1]), &h),
                    MPoly::one()
                );
            }
        }
    }

    #[test]
    fn paper_string_example() {
        // the worked string with i = 2:
        //   S  = 2 2^ 2v 2 2 2v 2^ 2 3 3v 3^ 3v
        //   S2 = 2 2^ 2v 2v 3 3^ 3v 3 3 3v 3^ 3
        // realized on a single row of shape (12) with d = 3
        let d = 3;
        let dg = diag(&[12]);
        let vals = [2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3];
        let hats = [
            Hat::None,
            Hat::Right,
            Hat::Left,
            Hat::None,
            Hat::None,
            Hat::Left,
            Hat::Right,
            Hat::None,
            Hat::None,
            Hat::Left,
            Hat::Right,
            Hat::Left,
        ];
        // left to right = columns 12 down to 1
        let entries: Vec<((usize, usize), HattedEntry)> = (0..12)
            .map(|k| {
                (
                    (1usize, 12 - k),
                    HattedEntry {
                        value: vals[k],
                        hat: hats[k],
                    },
                )
            })
            .collect();
        let h = HattedTableau::from_cells(dg, d, entries);
        let (s2, _) = apply_s_i(&h, 2);
        let got: Vec<(usize, Hat)> = (0..12)
            .map(|k| {
                let e = s2.get(1, 12 - k).unwrap();
                (e.value, e.hat)
            })
            .collect();
        let want = vec![
            (2, Hat::None),
            (2, Hat::Right),
            (2, Hat::Left),
            (2, Hat::Left),
            (3, Hat::None),
            (3, Hat::Right),
            (3, Hat::Left),
            (3, Hat::None),
            (3, Hat::None),
            (3, Hat::Left),
            (3, Hat::Right),
            (3, Hat::None),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn s_i_is_involution_and_preserves_validity() {
        for (mu, d) in [(vec![3u32, 2], 3usize), (vec![2, 2], 3), (vec![2, 1], 2)] {
            let dg = diag(&mu);
            for h in enumerate_hatted(&dg, d) {
                for i in 1..d {
                    let (si, _) = apply_s_i(&h, i);
                    assert!(si.is_valid(), "invalid image\n{}", si.render_ascii());
                    let (back, _) = apply_s_i(&si, i);
                    assert_eq!(back, h, "s_{} not an involution on\n{}", i, h.render_ascii());
                }
            }
        }
    }

    #[test]
    fn s_i_fixes_tableaux_without_i_values() {
        let d = 3;
        let dg = diag(&[2, 1]);
        for h in enumerate_hatted(&dg, d) {
            let has = h
                .entries()
                .any(|(_, e)| e.value == 1 || e.value == 2);
            if !has {
                assert_eq!(apply_s_i(&h, 1).0, h);
            }
        }
    }

    #[test]
    fn lemma_properties_of_s_i() {
        // (i) |b_l(a)| = σ_i|a|; (ii) ω((s_iH)^u) = σ_iω(H^u);
        // (iii) ω-prefix transport at b_l(a), tested in the coordinate form
        // ω((s_iH)^u_{<b_l(a)})_{|b_l(a)|} = ω(H^u_{<a})_{|a|} that the
        // downstream index computations rely on (the full-composition form
        // fails already on the two-cell row [1-with-left-hat, 2] with i=1,
        // where the image is forced by (i), (ii) and (vi));
        // (iv) e-index transport; (v) f-index preservation at b_r;
        // (vi) d_{σξ,s_iH} = d_{ξ,H}.
        let d = 3;
        let dg = diag(&[3, 2]);
        let xi = Composition::new(vec![4, 2, 1]);
        for h in enumerate_hatted(&dg, d) {
            for i in 1..d {
                let (si, map) = apply_s_i(&h, i);
                let sxi = xi.swap_adjacent(i);

                // (ii)
                let omega = content(&h.unbarred_word(), d).unwrap();
                let omega_si = content(&si.unbarred_word(), d).unwrap();
                assert_eq!(omega_si, omega.swap_adjacent(i));

                // (vi)
                assert_eq!(weight_d_xi_h(&sxi, &si), weight_d_xi_h(&xi, &h));

                for (&(r, c), &(nr, nc)) in &map.left {
                    let a = h.get(r, c).unwrap();
                    let b = si.get(nr, nc).unwrap();
                    assert_eq!(b.hat, Hat::Left);
                    // (i)
                    let sigma_v = if a.value == i {
                        i + 1
                    } else if a.value == i + 1 {
                        i
                    } else {
                        a.value
                    };
                    assert_eq!(b.value, sigma_v);
                    // (iii), coordinate form
                    let pre_h = content(&word_prefix_hatted(&h, (r, c)), d).unwrap();
                    let pre_si = content(&word_prefix_hatted(&si, (nr, nc)), d).unwrap();
                    assert_eq!(pre_si.entry(b.value), pre_h.entry(a.value));
                    // (iv)
                    let e_h = xi.entry(a.value) + pre_h.entry(a.value);
                    let e_si = sxi.entry(b.value) + pre_si.entry(b.value);
                    assert_eq!(e_si, e_h);
                }
                for (&(r, c), &(nr, nc)) in &map.right {
                    let a = h.get(r, c).unwrap();
                    let b = si.get(nr, nc).unwrap();
                    assert_eq!(b.hat, Hat::Right);
                    // (v)
                    let f_h = primed(a.value, d) as i64 + c as i64 - r as i64;
                    let f_si = primed(b.value, d) as i64 + nc as i64 - nr as i64;
                    assert_eq!(f_si, f_h);
                }
            }
        }
    }

    fn word_prefix_hatted(h: &HattedTableau, stop: (usize, usize)) -> Vec<usize> {
        let mut w = Vec::new();
        for (rc, e) in h.entries() {
            if rc == stop {
                break;
            }
            if e.hat == Hat::None {
                w.push(e.value);
            }
        }
        w
    }

    #[test]
    fn sigma_word_properties() {
        // empty word and i,i are identities; decomposition independence of
        // ω((σH)^u) and d_{σξ,σH}
        let d = 3;
        let dg = diag(&[2, 1]);
        let xi = Composition::new(vec![3, 2, 1]);
        for h in enumerate_hatted(&dg, d) {
            assert_eq!(apply_sigma(&[], &h), h);
            assert_eq!(apply_sigma(&[1, 1], &h), h);
            assert_eq!(apply_sigma(&[2, 2], &h), h);
            // two reduced words for the longest element of S_3
            let w1 = [1, 2, 1];
            let w2 = [2, 1, 2];
            let h1 = apply_sigma(&w1, &h);
            let h2 = apply_sigma(&w2, &h);
            let omega = content(&h.unbarred_word(), d).unwrap();
            for (word, img) in [(&w1, &h1), (&w2, &h2)] {
                let got = content(&img.unbarred_word(), d).unwrap();
                assert_eq!(got, sigma_on_composition(&word[..], &omega));
                assert_eq!(
                    weight_d_xi_h(&sigma_on_composition(&word[..], &xi), img),
                    weight_d_xi_h(&xi, &h)
                );
            }
        }
    }

    #[test]
    fn bender_knuth_recovered_on_hat_free() {
        for (mu, d) in [(vec![3u32, 2], 3usize), (vec![2, 2, 1], 3)] {
            let dg = diag(&mu);
            for r in enumerate_reverse_tableaux(&dg, d) {
                let h = HattedTableau::from_cells(
                    dg.clone(),
                    d,
                    r.entries()
                        .map(|(rc, e)| {
                            (
                                rc,
                                HattedEntry {
                                    value: e.value,
                                    hat: Hat::None,
                                },
                            )
                        })
                        .collect(),
                );
                for i in 1..d {
                    let (si, _) = apply_s_i(&h, i);
                    let bk = bender_knuth(&r, i);
                    assert_eq!(si.bar_projection(), bk, "BK mismatch at i={}\n{}", i, r.render_ascii());
                }
            }
        }
    }

    #[test]
    fn smallest_bad_guy_instance() {
        // d=2, λ=(0,0), μ=(1,1): the unique filling has column word 1 over
        // 2, read top to bottom as 1,2; words of single columns stay fine,
        // so Bad Guys need hats. Check pairing properties over the sweep.
        let d = 2;
        let dg = diag(&[1, 1]);
        let lambda = Partition::zero(d);
        let mut bad = 0;
        for h in enumerate_hatted(&dg, d) {
            match bad_guy_star(&h, &lambda) {
                None => continue,
                Some(star) => {
                    bad += 1;
                    assert!(bad_guy_cut(&star, &lambda).is_some(), "H* must stay bad");
                    let back = bad_guy_star(&star, &lambda).unwrap();
                    assert_eq!(back, h, "pairing is an involution");
                    let xi = crate::weights::lambda_rho_one(&lambda, d);
                    assert_eq!(weight_d_xi_h(&xi, &h), weight_d_xi_h(&xi, &star));
                }
            }
        }
        assert!(bad > 0, "expected at least one Bad Guy");
    }

    #[test]
    fn bad_guy_pairing_full_sweep() {
        let d = 3;
        let dg = diag(&[2, 1]);
        let lambda = part(&[1, 0, 0]);
        let xi = crate::weights::lambda_rho_one(&lambda, d);
        let rho = Partition::staircase(d);
        for h in enumerate_hatted(&dg, d) {
            let Some(star) = bad_guy_star(&h, &lambda) else {
                continue;
            };
            assert_eq!(bad_guy_star(&star, &lambda).unwrap(), h);
            assert_eq!(weight_d_xi_h(&xi, &h), weight_d_xi_h(&xi, &star));
            // the alternant indices differ by the cut transposition
            let (_, i) = bad_guy_cut(&h, &lambda).unwrap();
            let lam_rho = Composition::new(
                (1..=d)
                    .map(|k| lambda.part(k) as i64 + rho.part(k) as i64)
                    .collect(),
            );
            let idx_h = lam_rho.add(&content(&h.unbarred_word(), d).unwrap());
            let idx_star = lam_rho.add(&content(&star.unbarred_word(), d).unwrap());
            assert_eq!(idx_h.swap_adjacent(i), idx_star);
        }
    }
}
