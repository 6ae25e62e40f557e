//! The weight-preserving bijection Φ between (trapezoid) puzzles and
//! equivariant Littlewood-Richardson skew tableaux.
//!
//! Forward direction: for each i there is a path of pieces starting at the
//! i-th 1-edge of the northeast boundary and ending on the south boundary,
//! moving only west or southwest. Along a path, maximal runs of B/E rhombi
//! (the segments) alternate with a turning up 1-triangle, a vertical run of
//! A-rhombi, and a down 1-triangle. The j-th segment from the northeast end
//! carries the value-i entries of row d+1-i-(j-1): an equivariant piece
//! yields a barred entry, a B-rhombus an unbarred one, and a piece anchored
//! at (a, b) lands in column c = r + (n-d) + i - 1 - (a+b). The inverse
//! lays the paths down from the tableau and closes the complement with
//! C-rhombus chains (one per up 1-triangle, running northwest to a down
//! 1-triangle or the northwest boundary) and 0-triangles.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::puzzle::{DownKind, Puzzle, UpKind};
use crate::tableaux::{Entry, ReverseBarredTableau, ReverseDiagram, SkewBarredTableau};
use std::collections::BTreeMap;

/// Pairs each equivariant piece anchor with its barred cell in Φ(P).
pub type PieceCellMap = Vec<((i32, i32), (usize, usize))>;

/// Φ: reads the skew barred tableau off a (trapezoid) puzzle.
pub fn phi(p: &Puzzle) -> Result<(SkewBarredTableau, PieceCellMap)> {
    let n = p.n as i32;
    let (ne, nw, _s) = p.boundary_words();
    let d = ne.ones();
    let lambda = ne.to_partition();
    let mu = nw.to_partition();
    let bottom = p.bottom();

    let mut cells: Vec<((usize, usize), Entry)> = Vec::new();
    let mut piece_cells: PieceCellMap = Vec::new();

    // positions (1-indexed, from the top) of the ones in the NE word
    let one_positions: Vec<i32> = (1..=n)
        .filter(|&k| ne.bit(k as usize))
        .collect();

    for (idx, &pos) in one_positions.iter().enumerate() {
        let i = idx + 1; // path index = tableau value
        let segments_expected = d + 1 - i;
        let (mut a, mut b) = (pos - 1, n - pos);
        let mut segments: Vec<Vec<((i32, i32), bool)>> = Vec::new();
        'path: loop {
            // one segment: B/E pieces until an up 1-triangle
            let mut seg: Vec<((i32, i32), bool)> = Vec::new();
            loop {
                match p.up.get(&(a, b)) {
                    Some(UpKind::BUp) => {
                        seg.push(((a, b), false));
                        a -= 1;
                    }
                    Some(UpKind::EUp) => {
                        seg.push(((a, b), true));
                        b -= 1;
                    }
                    Some(UpKind::One) => break,
                    other => {
                        return Err(Error::Internal(format!(
                            "path {} hit unexpected up piece {:?} at ({},{})",
                            i, other, a, b
                        )))
                    }
                }
            }
            segments.push(seg);
            // descend from the up 1-triangle through A-rhombi
            loop {
                if b == bottom {
                    break 'path; // south boundary reached
                }
                match p.down.get(&(a, b - 1)) {
                    Some(DownKind::ADown) => b -= 1,
                    Some(DownKind::One) => {
                        b -= 1;
                        continue 'path; // next segment starts at U(a, b)
                    }
                    other => {
                        return Err(Error::Internal(format!(
                            "path {} hit unexpected down piece {:?} at ({},{})",
                            i,
                            other,
                            a,
                            b - 1
                        )))
                    }
                }
            }
        }
        if segments.len() != segments_expected {
            return Err(Error::Internal(format!(
                "path {} has {} segments, expected {}",
                i,
                segments.len(),
                segments_expected
            )));
        }
        // the last segment sits in row 1, the one before in row 2, ...
        for (j, seg) in segments.iter().enumerate() {
            let r = segments.len() - j;
            for &((pa, pb), barred) in seg {
                let c = r as i64 + (n as i64 - d as i64) + i as i64 - 1 - (pa as i64 + pb as i64);
                if c < 1 {
                    return Err(Error::Internal(format!(
                        "path {} produced column {} < 1",
                        i, c
                    )));
                }
                let cell = (r, c as usize);
                cells.push((
                    cell,
                    Entry {
                        value: i,
                        barred,
                    },
                ));
                if barred {
                    piece_cells.push(((pa, pb), cell));
                }
            }
        }
    }

    let diagram = ReverseDiagram::new(Partition::with_length(mu.parts().to_vec(), d)?);
    if cells.len() != diagram.cell_count() {
        return Err(Error::Internal(format!(
            "paths produced {} cells for a {}-cell shape",
            cells.len(),
            diagram.cell_count()
        )));
    }
    let inner = ReverseBarredTableau::from_cells(diagram, d, cells)?;
    let lambda = Partition::with_length(lambda.parts().to_vec(), d)?;
    Ok((SkewBarredTableau::new(lambda, inner), piece_cells))
}

/// Φ^{-1}: builds the puzzle (trapezoid = true for the extended domain) of
/// a skew barred tableau with Yamanouchi unbarred column word.
pub fn phi_inverse(l: &SkewBarredTableau, n: usize, trapezoid: bool) -> Result<Puzzle> {
    let d = l.d();
    let n_i = n as i32;
    let bottom: i32 = if trapezoid { -n_i } else { 0 };
    let lambda = Partition::with_length(l.lambda.parts().to_vec(), d)?;
    lambda.check_in_box(d, n)?;
    l.inner.diagram.mu().check_in_box(d, n)?;

    let ne = crate::partition::partition_to_word(&lambda, n)?;
    let one_positions: Vec<i32> = (1..=n_i)
        .filter(|&k| ne.bit(k as usize))
        .collect();

    let mut up: BTreeMap<(i32, i32), UpKind> = BTreeMap::new();
    let mut down: BTreeMap<(i32, i32), DownKind> = BTreeMap::new();
    let mut up_ones: Vec<(i32, i32)> = Vec::new();

    let set_up = |up: &mut BTreeMap<(i32, i32), UpKind>, key: (i32, i32), k: UpKind| -> Result<()> {
        if up.insert(key, k).is_some() {
            return Err(Error::Internal(format!("up collision at {:?}", key)));
        }
        Ok(())
    };
    let set_down =
        |down: &mut BTreeMap<(i32, i32), DownKind>, key: (i32, i32), k: DownKind| -> Result<()> {
            if down.insert(key, k).is_some() {
                return Err(Error::Internal(format!("down collision at {:?}", key)));
            }
            Ok(())
        };

    // row r cells of value i, rightmost first (ascending column)
    let row_cells = |r: usize, i: usize| -> Vec<(usize, bool)> {
        l.inner
            .entries()
            .filter(|&((rr, _), e)| rr == r && e.value == i)
            .map(|((_, c), e)| (c, e.barred))
            .collect::<Vec<_>>()
    };
    // start column of the value-i block of row r (also correct when empty)
    let block_start = |r: usize, i: usize| -> usize {
        1 + l
            .inner
            .entries()
            .filter(|&((rr, _), e)| rr == r && e.value > i)
            .count()
    };

    for (idx, &pos) in one_positions.iter().enumerate() {
        let i = idx + 1;
        let segments = d + 1 - i;
        let (mut a, mut b) = (pos - 1, n_i - pos);
        for j in 1..=segments {
            let r = segments - (j - 1);
            let mut cells = row_cells(r, i);
            cells.sort();
            for (c, barred) in cells {
                let want = r as i64 + (n as i64 - d as i64) + i as i64 - 1 - c as i64;
                if a as i64 + b as i64 != want {
                    return Err(Error::Internal(format!(
                        "path {} misaligned at row {} col {}: a+b = {}, want {}",
                        i,
                        r,
                        c,
                        a + b,
                        want
                    )));
                }
                if barred {
                    set_up(&mut up, (a, b), UpKind::EUp)?;
                    set_down(&mut down, (a, b - 1), DownKind::EDown)?;
                    b -= 1;
                } else {
                    set_up(&mut up, (a, b), UpKind::BUp)?;
                    set_down(&mut down, (a - 1, b), DownKind::BDown)?;
                    a -= 1;
                }
            }
            // segment ends in an up 1-triangle
            set_up(&mut up, (a, b), UpKind::One)?;
            up_ones.push((a, b));
            if j < segments {
                // descend to the next segment's level
                let c0 = block_start(r - 1, i) as i64;
                let want = (r as i64 - 1) + (n as i64 - d as i64) + i as i64 - 1 - c0;
                let b_next = want - a as i64;
                if b_next >= b as i64 || b_next < bottom as i64 {
                    return Err(Error::Internal(format!(
                        "path {} descent from b={} to b={} out of range (bottom {})",
                        i, b, b_next, bottom
                    )));
                }
                for beta in (b_next as i32 + 1..b).rev() {
                    set_up(&mut up, (a, beta), UpKind::AUp)?;
                    set_down(&mut down, (a, beta), DownKind::ADown)?;
                }
                set_down(&mut down, (a, b_next as i32), DownKind::One)?;
                b = b_next as i32;
            } else {
                // final descent straight to the south boundary
                if b < bottom {
                    return Err(Error::Internal("descent below region".into()));
                }
                for beta in (bottom..b).rev() {
                    set_up(&mut up, (a, beta), UpKind::AUp)?;
                    set_down(&mut down, (a, beta), DownKind::ADown)?;
                }
            }
        }
    }

    // Close the complement: a C-chain runs northwest from every up
    // 1-triangle until it meets a down 1-triangle or the northwest boundary.
    for &(a0, b0) in &up_ones {
        let (mut a, mut b) = (a0, b0);
        loop {
            if a == 0 && b >= 0 {
                break; // northwest boundary carries the 1
            }
            match down.get(&(a - 1, b)) {
                Some(DownKind::One) => break,
                Some(other) => {
                    return Err(Error::Internal(format!(
                        "C-chain from ({},{}) ran into {:?} at ({},{})",
                        a0,
                        b0,
                        other,
                        a - 1,
                        b
                    )))
                }
                None => {
                    set_down(&mut down, (a - 1, b), DownKind::CDown)?;
                    set_up(&mut up, (a - 1, b + 1), UpKind::CUp)?;
                    a -= 1;
                    b += 1;
                }
            }
        }
    }

    // Everything else is a 0-triangle.
    for a in 0..n_i {
        for b in bottom..n_i {
            let has_up = if b >= 0 {
                a + b <= n_i - 1
            } else {
                trapezoid
            };
            let has_down = if b >= 0 { a + b <= n_i - 2 } else { trapezoid };
            if has_up && !up.contains_key(&(a, b)) {
                up.insert((a, b), UpKind::Zero);
            }
            if has_down && !down.contains_key(&(a, b)) {
                down.insert((a, b), DownKind::Zero);
            }
        }
    }

    let puzzle = Puzzle {
        n,
        trapezoid,
        up,
        down,
    };
    puzzle.validate()?;
    Ok(puzzle)
}
