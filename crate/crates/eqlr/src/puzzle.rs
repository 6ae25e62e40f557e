//! Knutson-Tao puzzles and trapezoid puzzles: the eight-piece catalog,
//! boundary words, tiling enumeration, and weights.
//!
//! Unit triangles are addressed by lattice coordinates (a, b): a counts unit
//! steps east and b unit steps northeast from the southwest corner of the
//! size-n triangle. The up-triangle U(a,b) has south edge E(a,b), northwest
//! edge N(a,b) and northeast edge S(a,b+1); the down-triangle D(a,b) has
//! north edge E(a,b+1), southwest edge S(a,b+1) and southeast edge N(a+1,b).
//! Trapezoid puzzles extend b to negative values: the side-n rhombus below
//! the line D occupies b in -n..=-1 with 0-labels on its east and west
//! sides.
//!
//! A rhombus is stored as a matched pair of half-pieces; the shared edge
//! carries a type-specific internal label, so "both pieces have the same
//! label on a shared edge" is the single local rule the enumerator checks.

use crate::error::{Error, Result};
use crate::partition::{partition_to_word, BoundaryWord, Partition};
use crate::poly::MPoly;
use crate::weights::{product_of_cap_factors, product_of_factors, WeightFactor};
use std::collections::BTreeMap;
use std::fmt;

/// Edge labels: the two boundary digits plus one internal marker per
/// rhombus type (the marker doubles as the pairing constraint).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeLabel {
    Zero,
    One,
    Ra,
    Rb,
    Rc,
    Re,
}

/// Up-triangle half-pieces. A/B/C/E are the rhombi, named by long-axis
/// direction: A leans northwest-southeast, B leans northeast-southwest,
/// C is the vertical non-equivariant rhombus, E the equivariant one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum UpKind {
    Zero,
    One,
    AUp,
    BUp,
    CUp,
    EUp,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DownKind {
    Zero,
    One,
    ADown,
    BDown,
    CDown,
    EDown,
}

impl UpKind {
    /// (NW, NE, S) labels.
    pub fn edges(self) -> (EdgeLabel, EdgeLabel, EdgeLabel) {
        use EdgeLabel::*;
        match self {
            UpKind::Zero => (Zero, Zero, Zero),
            UpKind::One => (One, One, One),
            UpKind::AUp => (Zero, Ra, One),
            UpKind::BUp => (Rb, One, Zero),
            UpKind::CUp => (One, Zero, Rc),
            UpKind::EUp => (Zero, One, Re),
        }
    }

    pub const ALL: [UpKind; 6] = [
        UpKind::Zero,
        UpKind::One,
        UpKind::AUp,
        UpKind::BUp,
        UpKind::CUp,
        UpKind::EUp,
    ];
}

impl DownKind {
    /// (N, SW, SE) labels.
    pub fn edges(self) -> (EdgeLabel, EdgeLabel, EdgeLabel) {
        use EdgeLabel::*;
        match self {
            DownKind::Zero => (Zero, Zero, Zero),
            DownKind::One => (One, One, One),
            DownKind::ADown => (One, Ra, Zero),
            DownKind::BDown => (Zero, One, Rb),
            DownKind::CDown => (Rc, Zero, One),
            DownKind::EDown => (Re, One, Zero),
        }
    }

    pub const ALL: [DownKind; 6] = [
        DownKind::Zero,
        DownKind::One,
        DownKind::ADown,
        DownKind::BDown,
        DownKind::CDown,
        DownKind::EDown,
    ];
}

/// A puzzle or trapezoid puzzle: a complete assignment of half-pieces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Puzzle {
    pub n: usize,
    pub trapezoid: bool,
    pub up: BTreeMap<(i32, i32), UpKind>,
    pub down: BTreeMap<(i32, i32), DownKind>,
}

impl Puzzle {
    pub fn bottom(&self) -> i32 {
        if self.trapezoid {
            -(self.n as i32)
        } else {
            0
        }
    }

    /// Anchors (a, b) of the equivariant pieces (their up-triangle halves),
    /// in scan order (a ascending, then b ascending).
    pub fn equivariant_pieces(&self) -> Vec<(i32, i32)> {
        let mut v: Vec<(i32, i32)> = self
            .up
            .iter()
            .filter(|(_, &k)| k == UpKind::EUp)
            .map(|(&ab, _)| ab)
            .collect();
        v.sort();
        v
    }

    /// The factor of one equivariant piece: e = n - a, f = n - a - b. For
    /// trapezoid pieces below D this has e < f, and e = f exactly when the
    /// piece is bisected by D.
    pub fn piece_factor(&self, (a, b): (i32, i32)) -> WeightFactor {
        WeightFactor {
            e: self.n as i64 - a as i64,
            f: self.n as i64 - a as i64 - b as i64,
        }
    }

    /// Factor list in piece scan order (empty product = 1).
    pub fn weight_factors(&self) -> Vec<WeightFactor> {
        self.equivariant_pieces()
            .into_iter()
            .map(|ab| self.piece_factor(ab))
            .collect()
    }

    /// c_P (y-flavor).
    pub fn weight(&self) -> (Vec<WeightFactor>, MPoly) {
        let factors = self.weight_factors();
        let poly = product_of_factors(&factors);
        (factors, poly)
    }

    /// C_P (Y-flavor).
    pub fn weight_cap(&self) -> (Vec<WeightFactor>, MPoly) {
        let factors = self.weight_factors();
        let poly = product_of_cap_factors(&factors, self.n);
        (factors, poly)
    }

    /// Reads the three boundary words back off the piece assignment.
    pub fn boundary_words(&self) -> (BoundaryWord, BoundaryWord, BoundaryWord) {
        let n = self.n as i32;
        let ne: Vec<bool> = (0..n)
            .map(|a| {
                let (_, ne, _) = self.up[&(a, n - 1 - a)].edges();
                ne == EdgeLabel::One
            })
            .collect();
        let nw: Vec<bool> = (0..n)
            .map(|b| {
                let (nw, _, _) = self.up[&(0, b)].edges();
                nw == EdgeLabel::One
            })
            .collect();
        let s: Vec<bool> = (0..n)
            .map(|a| {
                let (_, _, s) = self.up[&(a, self.bottom())].edges();
                s == EdgeLabel::One
            })
            .collect();
        (
            BoundaryWord::new(ne),
            BoundaryWord::new(nw),
            BoundaryWord::new(s),
        )
    }

    /// Independent re-check of the tiling: every shared edge agrees, every
    /// boundary edge is 0/1, internal labels pair correctly.
    pub fn validate(&self) -> Result<()> {
        let region = Region {
            n: self.n,
            trapezoid: self.trapezoid,
        };
        for (&(a, b), &k) in &self.up {
            if !region.has_up(a, b) {
                return Err(Error::Internal(format!("up ({},{}) outside region", a, b)));
            }
            let (nw, ne, s) = k.edges();
            // NW edge vs west neighbor / boundary
            match self.down.get(&(a - 1, b)) {
                Some(dk) => {
                    if dk.edges().2 != nw {
                        return Err(Error::Internal(format!("NW clash at ({},{})", a, b)));
                    }
                }
                None => {
                    if matches!(nw, EdgeLabel::Ra | EdgeLabel::Rb | EdgeLabel::Rc | EdgeLabel::Re)
                    {
                        return Err(Error::Internal(format!(
                            "internal label on boundary at ({},{})",
                            a, b
                        )));
                    }
                }
            }
            // NE edge vs east neighbor
            if let Some(dk) = self.down.get(&(a, b)) {
                if dk.edges().1 != ne {
                    return Err(Error::Internal(format!("NE clash at ({},{})", a, b)));
                }
            } else if matches!(ne, EdgeLabel::Ra | EdgeLabel::Rb | EdgeLabel::Rc | EdgeLabel::Re) {
                return Err(Error::Internal(format!(
                    "internal label on boundary at ({},{})",
                    a, b
                )));
            }
            // S edge vs the down-triangle below
            if let Some(dk) = self.down.get(&(a, b - 1)) {
                if dk.edges().0 != s {
                    return Err(Error::Internal(format!("S clash at ({},{})", a, b)));
                }
            } else if matches!(s, EdgeLabel::Ra | EdgeLabel::Rb | EdgeLabel::Rc | EdgeLabel::Re) {
                return Err(Error::Internal(format!(
                    "internal label on boundary at ({},{})",
                    a, b
                )));
            }
        }
        // coverage counts
        let mut ups = 0usize;
        let mut downs = 0usize;
        for a in 0..self.n as i32 {
            for b in self.bottom()..self.n as i32 {
                if region.has_up(a, b) {
                    ups += 1;
                    if !self.up.contains_key(&(a, b)) {
                        return Err(Error::Internal(format!("up ({},{}) uncovered", a, b)));
                    }
                }
                if region.has_down(a, b) {
                    downs += 1;
                    if !self.down.contains_key(&(a, b)) {
                        return Err(Error::Internal(format!("down ({},{}) uncovered", a, b)));
                    }
                }
            }
        }
        if ups != self.up.len() || downs != self.down.len() {
            return Err(Error::Internal("stray pieces outside region".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let (ne, nw, s) = self.boundary_words();
        let mut pieces = Vec::new();
        for (&(a, b), &k) in &self.up {
            let kind = match k {
                UpKind::Zero => "t0",
                UpKind::One => "t1",
                UpKind::AUp => "rh_nwse",
                UpKind::BUp => "rh_nesw",
                UpKind::CUp => "rh_vert",
                UpKind::EUp => "rh_eq",
            };
            // rhombi are listed once, anchored at their up half
            pieces.push(serde_json::json!({
                "kind": kind,
                "anchor": {"row": self.n as i64 - b as i64, "pos": a + 1, "orient": "up"},
            }));
        }
        for (&(a, b), &k) in &self.down {
            let kind = match k {
                DownKind::Zero => "t0",
                DownKind::One => "t1",
                _ => continue,
            };
            pieces.push(serde_json::json!({
                "kind": kind,
                "anchor": {"row": self.n as i64 - b as i64, "pos": a + 1, "orient": "down"},
            }));
        }
        serde_json::json!({
            "n": self.n,
            "trapezoid": self.trapezoid,
            "boundaries": {"ne": ne.to_string(), "nw": nw.to_string(), "s": s.to_string()},
            "pieces": pieces,
        })
    }
}

impl fmt::Display for Puzzle {
    /// Triangle rows of glyphs: 0/1 triangles, R for a non-equivariant
    /// rhombus half, E for an equivariant half.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n as i32;
        for b in (self.bottom()..n).rev() {
            let height = n - b;
            write!(f, "{:width$}", "", width = (n - height) as usize)?;
            let a_max = if b >= 0 { n - 1 - b } else { n - 1 };
            for a in 0..=a_max {
                let g = match self.up.get(&(a, b)) {
                    Some(UpKind::Zero) => '0',
                    Some(UpKind::One) => '1',
                    Some(UpKind::EUp) => 'E',
                    Some(_) => 'R',
                    None => '?',
                };
                write!(f, "{}", g)?;
                let has_down = self.down.contains_key(&(a, b));
                if has_down {
                    let g = match self.down.get(&(a, b)) {
                        Some(DownKind::Zero) => '0',
                        Some(DownKind::One) => '1',
                        Some(DownKind::EDown) => 'E',
                        Some(_) => 'R',
                        None => '?',
                    };
                    write!(f, "{}", g)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy)]
struct Region {
    n: usize,
    trapezoid: bool,
}

impl Region {
    fn has_up(&self, a: i32, b: i32) -> bool {
        let n = self.n as i32;
        if b >= 0 {
            a >= 0 && a + b <= n - 1
        } else {
            self.trapezoid && a >= 0 && a <= n - 1 && b >= -n
        }
    }

    fn has_down(&self, a: i32, b: i32) -> bool {
        let n = self.n as i32;
        if b >= 0 {
            a >= 0 && a + b <= n - 2
        } else {
            self.trapezoid && a >= 0 && a <= n - 1 && b >= -n
        }
    }
}

/// Shared-edge label store with set/undo semantics for the backtracker.
struct EdgeGrid {
    bottom: i32,
    // indexed [orientation][a + 1][b - bottom]; orientation 0 = horizontal
    // E(a,b), 1 = northeast-going N(a,b), 2 = southeast-going S(a,b)
    labels: Vec<Option<EdgeLabel>>,
    width: usize,
    height: usize,
}

impl EdgeGrid {
    fn new(n: i32, bottom: i32) -> Self {
        let width = (n + 2) as usize;
        let height = (n - bottom + 2) as usize;
        EdgeGrid {
            bottom,
            labels: vec![None; 3 * width * height],
            width,
            height,
        }
    }

    fn idx(&self, orient: usize, a: i32, b: i32) -> usize {
        let ai = (a + 1) as usize;
        let bi = (b - self.bottom + 1) as usize;
        debug_assert!(ai < self.width && bi < self.height, "edge ({},{})", a, b);
        (orient * self.width + ai) * self.height + bi
    }

    fn get(&self, orient: usize, a: i32, b: i32) -> Option<EdgeLabel> {
        self.labels[self.idx(orient, a, b)]
    }

    /// Sets or checks an edge; returns whether the label fits, and whether
    /// this call actually claimed the edge (for undo).
    fn claim(&mut self, orient: usize, a: i32, b: i32, l: EdgeLabel) -> (bool, bool) {
        let i = self.idx(orient, a, b);
        match self.labels[i] {
            None => {
                self.labels[i] = Some(l);
                (true, true)
            }
            Some(existing) => (existing == l, false),
        }
    }

    fn release(&mut self, orient: usize, a: i32, b: i32) {
        let i = self.idx(orient, a, b);
        self.labels[i] = None;
    }

}

const EH: usize = 0; // horizontal E(a,b)
const EN: usize = 1; // northeast-going N(a,b)
const ES: usize = 2; // southeast-going S(a,b)

/// Builds the three boundary words for shapes in P_{d,n}.
pub fn boundary_words_for(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<(BoundaryWord, BoundaryWord, BoundaryWord)> {
    Ok((
        partition_to_word(lambda, n)?,
        partition_to_word(mu, n)?,
        partition_to_word(nu, n)?,
    ))
}

/// Enumerates all (trapezoid) puzzles with NE word λ, NW word μ, S word ν.
/// Output is in canonical scan order.
pub fn enumerate_with_words(
    ne: &BoundaryWord,
    nw: &BoundaryWord,
    s: &BoundaryWord,
    trapezoid: bool,
) -> Vec<Puzzle> {
    let n = ne.len() as i32;
    assert_eq!(nw.len() as i32, n);
    assert_eq!(s.len() as i32, n);
    let bottom = if trapezoid { -n } else { 0 };
    let region = Region {
        n: n as usize,
        trapezoid,
    };
    let mut grid = EdgeGrid::new(n, bottom);

    // Preset boundary labels.
    let bit = |b: bool| if b { EdgeLabel::One } else { EdgeLabel::Zero };
    for k in 1..=n {
        // NE side, read top to bottom: NE edge of U(k-1, n-k) is S(k-1, n-k+1)
        grid.claim(ES, k - 1, n - k + 1, bit(ne.bit(k as usize)));
        // NW side, read bottom to top: N(0, k-1)
        grid.claim(EN, 0, k - 1, bit(nw.bit(k as usize)));
        // S side, read left to right: E(k-1, bottom)
        grid.claim(EH, k - 1, bottom, bit(s.bit(k as usize)));
    }
    if trapezoid {
        for b in -n..0 {
            grid.claim(EN, 0, b, EdgeLabel::Zero); // west side
            grid.claim(EN, n, b, EdgeLabel::Zero); // east side
        }
    }

    // Scan order: rows top to bottom, then left to right with the down
    // triangle after its up neighbor. `row_done` marks the cell that
    // completes each row at height b <= 0, which makes the cut at height b
    // fully determined and eligible for the path-crossing prune.
    let mut cells: Vec<(i32, i32, bool)> = Vec::new(); // (a, b, is_up)
    let mut row_done: Vec<Option<i32>> = Vec::new();
    for b in (bottom..n).rev() {
        let a_max = if b >= 0 { n - 1 - b } else { n - 1 };
        for a in 0..=a_max {
            if region.has_up(a, b) {
                cells.push((a, b, true));
                row_done.push(None);
            }
            if region.has_down(a, b) {
                cells.push((a, b, false));
                row_done.push(None);
            }
        }
        if b <= 0 && trapezoid {
            if let Some(last) = row_done.last_mut() {
                *last = Some(b);
            }
        }
    }
    // a-positions of the ones of ν, east to west (descending)
    let mut nu_positions: Vec<i32> = (1..=n)
        .filter(|&k| s.bit(k as usize))
        .map(|k| k - 1)
        .collect();
    nu_positions.sort_unstable_by(|x, y| y.cmp(x));

    let mut out = Vec::new();
    let mut up = BTreeMap::new();
    let mut down = BTreeMap::new();

    fn place(
        grid: &mut EdgeGrid,
        edges: [(usize, i32, i32, EdgeLabel); 3],
    ) -> Option<[bool; 3]> {
        let mut claimed = [false; 3];
        for (t, &(o, a, b, l)) in edges.iter().enumerate() {
            let (ok, newly) = grid.claim(o, a, b, l);
            if !ok {
                for (u, &(o2, a2, b2, _)) in edges.iter().enumerate().take(t) {
                    if claimed[u] {
                        grid.release(o2, a2, b2);
                    }
                }
                return None;
            }
            claimed[t] = newly;
        }
        Some(claimed)
    }

    fn unplace(grid: &mut EdgeGrid, edges: [(usize, i32, i32, EdgeLabel); 3], claimed: [bool; 3]) {
        for (t, &(o, a, b, _)) in edges.iter().enumerate() {
            if claimed[t] {
                grid.release(o, a, b);
            }
        }
    }

    // Below D every horizontal 1-edge and every equivariant straddler
    // belongs to one of the d monotone paths, which cross each horizontal
    // cut exactly once and only ever drift west on the way down to the ν
    // ones (C-rhombus straddlers belong to the complement chains and are
    // excluded). A completed cut whose path crossings fail to majorize the
    // ν positions east-to-west cannot be completed.
    fn cut_is_viable(
        up: &BTreeMap<(i32, i32), UpKind>,
        n: i32,
        b: i32,
        nu_positions: &[i32],
    ) -> bool {
        let mut crossings: Vec<i32> = Vec::with_capacity(nu_positions.len() + 2);
        for a in (0..n).rev() {
            match up.get(&(a, b)) {
                Some(UpKind::One) | Some(UpKind::AUp) | Some(UpKind::EUp) => crossings.push(a),
                _ => {}
            }
        }
        if crossings.len() != nu_positions.len() {
            return false;
        }
        crossings
            .iter()
            .zip(nu_positions)
            .all(|(&x, &v)| x >= v)
    }

    // The region below a completed cut depends only on the cut's horizontal
    // edge labels (plus the fixed side and south boundaries), so a cut state
    // whose entire subtree produced no tilings can be cached and skipped on
    // re-entry.
    fn cut_key(grid: &EdgeGrid, n: i32, b: i32) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        b.hash(&mut h);
        for a in 0..n {
            let code = match grid.get(EH, a, b) {
                Some(EdgeLabel::Zero) => 0u8,
                Some(EdgeLabel::One) => 1,
                Some(EdgeLabel::Ra) => 2,
                Some(EdgeLabel::Rb) => 3,
                Some(EdgeLabel::Rc) => 4,
                Some(EdgeLabel::Re) => 5,
                None => 6,
            };
            code.hash(&mut h);
        }
        h.finish()
    }

    struct Search<'a> {
        cells: &'a [(i32, i32, bool)],
        row_done: &'a [Option<i32>],
        nu_positions: &'a [i32],
        n: usize,
        trapezoid: bool,
        dead: std::collections::HashSet<u64>,
    }

    impl Search<'_> {
        fn rec(
            &mut self,
            pos: usize,
            grid: &mut EdgeGrid,
            up: &mut BTreeMap<(i32, i32), UpKind>,
            down: &mut BTreeMap<(i32, i32), DownKind>,
            out: &mut Vec<Puzzle>,
        ) {
            if pos == self.cells.len() {
                out.push(Puzzle {
                    n: self.n,
                    trapezoid: self.trapezoid,
                    up: up.clone(),
                    down: down.clone(),
                });
                return;
            }
            let (a, b, is_up) = self.cells[pos];
            if is_up {
                for kind in UpKind::ALL {
                    let (nw, ne, s) = kind.edges();
                    let edges = [(EN, a, b, nw), (ES, a, b + 1, ne), (EH, a, b, s)];
                    if let Some(claimed) = place(grid, edges) {
                        up.insert((a, b), kind);
                        self.descend(pos, grid, up, down, out);
                        up.remove(&(a, b));
                        unplace(grid, edges, claimed);
                    }
                }
            } else {
                for kind in DownKind::ALL {
                    let (nn, sw, se) = kind.edges();
                    let edges =
                        [(EH, a, b + 1, nn), (ES, a, b + 1, sw), (EN, a + 1, b, se)];
                    if let Some(claimed) = place(grid, edges) {
                        down.insert((a, b), kind);
                        self.descend(pos, grid, up, down, out);
                        down.remove(&(a, b));
                        unplace(grid, edges, claimed);
                    }
                }
            }
        }

        fn descend(
            &mut self,
            pos: usize,
            grid: &mut EdgeGrid,
            up: &mut BTreeMap<(i32, i32), UpKind>,
            down: &mut BTreeMap<(i32, i32), DownKind>,
            out: &mut Vec<Puzzle>,
        ) {
            match self.row_done[pos] {
                None => self.rec(pos + 1, grid, up, down, out),
                Some(rb) => {
                    if !cut_is_viable(up, self.n as i32, rb, self.nu_positions) {
                        return;
                    }
                    let key = cut_key(grid, self.n as i32, rb);
                    if self.dead.contains(&key) {
                        return;
                    }
                    let before = out.len();
                    self.rec(pos + 1, grid, up, down, out);
                    if out.len() == before {
                        self.dead.insert(key);
                    }
                }
            }
        }
    }

    let mut search = Search {
        cells: &cells,
        row_done: &row_done,
        nu_positions: &nu_positions,
        n: n as usize,
        trapezoid,
        dead: std::collections::HashSet::new(),
    };
    search.rec(0, &mut grid, &mut up, &mut down, &mut out);
    out.sort();
    out
}

/// LP+_{λ,μ}^ν: all puzzles with the given boundary partitions.
pub fn enumerate_puzzles(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    d: usize,
) -> Result<Vec<Puzzle>> {
    lambda.check_in_box(d, n)?;
    mu.check_in_box(d, n)?;
    nu.check_in_box(d, n)?;
    let (ne, nw, s) = boundary_words_for(lambda, mu, nu, n)?;
    Ok(enumerate_with_words(&ne, &nw, &s, false))
}

/// LP_{λ,μ}^ν: all trapezoid puzzles with the given boundary partitions.
pub fn enumerate_trapezoid_puzzles(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    d: usize,
) -> Result<Vec<Puzzle>> {
    lambda.check_in_box(d, n)?;
    mu.check_in_box(d, n)?;
    nu.check_in_box(d, n)?;
    let (ne, nw, s) = boundary_words_for(lambda, mu, nu, n)?;
    Ok(enumerate_with_words(&ne, &nw, &s, true))
}

/// Embeds a puzzle into the trapezoid domain: rows below D are forced to
/// all-zero triangles when the puzzle's S word is pushed straight down by
/// vertical 0-columns... not quite: a 1 on the S side continues downward as
/// a column of A-rhombi. This helper exists for the containment tests.
pub fn embed_in_trapezoid(p: &Puzzle) -> Puzzle {
    assert!(!p.trapezoid);
    let n = p.n as i32;
    let mut up = p.up.clone();
    let mut down = p.down.clone();
    // Each S-side 1 continues as a vertical strip of A-rhombi to the bottom;
    // every 1 drifts neither east nor west because the east/west sides are 0.
    for a in 0..n {
        let one = {
            let (_, _, s) = p.up[&(a, 0)].edges();
            s == EdgeLabel::One
        };
        for b in -n..0 {
            if one {
                up.insert((a, b), UpKind::AUp);
                down.insert((a, b), DownKind::ADown);
            } else {
                up.insert((a, b), UpKind::Zero);
                down.insert((a, b), DownKind::Zero);
            }
        }
    }
    Puzzle {
        n: p.n,
        trapezoid: true,
        up,
        down,
    }
}

/// Sum of puzzle weights: the puzzle-rule structure constant.
pub fn coefficient_by_puzzles(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: usize,
    d: usize,
    trapezoid: bool,
    cap_flavor: bool,
) -> Result<MPoly> {
    let puzzles = if trapezoid {
        enumerate_trapezoid_puzzles(lambda, mu, nu, n, d)?
    } else {
        enumerate_puzzles(lambda, mu, nu, n, d)?
    };
    let mut sum = MPoly::zero();
    for p in &puzzles {
        let (_, w) = if cap_flavor {
            p.weight_cap()
        } else {
            p.weight()
        };
        sum += &w;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_triangle_all_ones() {
        let w = BoundaryWord::parse("1").unwrap();
        let out = enumerate_with_words(&w, &w, &w, false);
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].up[&(0, 0)], UpKind::One);
        assert!(out[0].weight().1 == MPoly::one());
    }

    #[test]
    fn n4_figure_instance() {
        // d=2, n=4, λ=(1,1), μ=(2,1), ν=(2,1): exactly two puzzles with
        // weights (y4-y3)(y2-y1) and (y3-y1)(y2-y1)
        let lambda = part(&[1, 1]);
        let mu = part(&[2, 1]);
        let nu = part(&[2, 1]);
        let puzzles = enumerate_puzzles(&lambda, &mu, &nu, 4, 2).unwrap();
        assert_eq!(puzzles.len(), 2);
        for p in &puzzles {
            p.validate().unwrap();
            let (ne, nw, s) = p.boundary_words();
            assert_eq!(ne.to_partition(), lambda);
            assert_eq!(nw.to_partition(), mu);
            assert_eq!(s.to_partition(), nu);
        }
        let mut weights: Vec<MPoly> = puzzles.iter().map(|p| p.weight().1).collect();
        weights.sort_by_key(|w| w.render());
        let mut want = vec![
            MPoly::y_diff(4, 3) * MPoly::y_diff(2, 1),
            MPoly::y_diff(3, 1) * MPoly::y_diff(2, 1),
        ];
        want.sort_by_key(|w| w.render());
        assert_eq!(weights, want);

        let total = coefficient_by_puzzles(&lambda, &mu, &nu, 4, 2, false, false).unwrap();
        assert_eq!(
            total,
            MPoly::y_diff(4, 3) * MPoly::y_diff(2, 1) + MPoly::y_diff(3, 1) * MPoly::y_diff(2, 1)
        );
        let cap = coefficient_by_puzzles(&lambda, &mu, &nu, 4, 2, false, true).unwrap();
        assert_eq!(
            cap,
            MPoly::cap_y_diff(2, 1) * MPoly::cap_y_diff(4, 3)
                + MPoly::cap_y_diff(4, 2) * MPoly::cap_y_diff(4, 3)
        );
    }

    #[test]
    fn n9_figure_puzzle_present() {
        // λ=(4,2,2), μ=(4,3,1), ν=(6,5,2), n=9: the displayed puzzle has
        // weight (y8-y3)(y3-y2)(y3-y1)
        let lambda = part(&[4, 2, 2]);
        let mu = part(&[4, 3, 1]);
        let nu = part(&[6, 5, 2]);
        let puzzles = enumerate_puzzles(&lambda, &mu, &nu, 9, 3).unwrap();
        assert!(!puzzles.is_empty());
        let want = MPoly::y_diff(8, 3) * MPoly::y_diff(3, 2) * MPoly::y_diff(3, 1);
        let found = puzzles.iter().any(|p| {
            let (fs, w) = p.weight();
            w == want
                && fs
                    == vec![
                        WeightFactor { e: 8, f: 3 },
                        WeightFactor { e: 3, f: 2 },
                        WeightFactor { e: 3, f: 1 },
                    ]
        });
        assert!(found, "figure puzzle missing");
        for p in &puzzles {
            p.validate().unwrap();
        }
    }

    #[test]
    fn single_equivariant_piece_weight_convention() {
        // the n=7 figure: the piece anchored at (a,b) = (1,3) weighs
        // y6-y3 and Y5-Y2
        let p = Puzzle {
            n: 7,
            trapezoid: false,
            up: BTreeMap::from([((1, 3), UpKind::EUp)]),
            down: BTreeMap::new(),
        };
        let w = p.piece_factor((1, 3));
        assert_eq!((w.e, w.f), (6, 3));
        assert_eq!(w.poly(), MPoly::y_diff(6, 3));
        assert_eq!(w.cap_poly(7), MPoly::cap_y_diff(5, 2));
    }

    #[test]
    fn trapezoid_contains_embedded_puzzles() {
        let lambda = part(&[1, 1]);
        let mu = part(&[2, 1]);
        let nu = part(&[2, 1]);
        let puzzles = enumerate_puzzles(&lambda, &mu, &nu, 4, 2).unwrap();
        let traps = enumerate_trapezoid_puzzles(&lambda, &mu, &nu, 4, 2).unwrap();
        for p in &puzzles {
            let emb = embed_in_trapezoid(p);
            emb.validate().unwrap();
            assert!(traps.contains(&emb), "embedding missing from LP");
            // the embedding is weight-preserving
            assert_eq!(emb.weight().1, p.weight().1);
        }
        assert!(traps.len() >= puzzles.len());
    }

    #[test]
    fn trapezoid_extra_terms_are_zero() {
        // every trapezoid puzzle with a 1-triangle below D weighs 0
        let lambda = part(&[1, 1]);
        let mu = part(&[2, 1]);
        let nu = part(&[2, 1]);
        let traps = enumerate_trapezoid_puzzles(&lambda, &mu, &nu, 4, 2).unwrap();
        for t in &traps {
            t.validate().unwrap();
            let below = t
                .up
                .iter()
                .any(|(&(_, b), &k)| b < 0 && k == UpKind::One)
                || t.down.iter().any(|(&(_, b), &k)| b < 0 && k == DownKind::One);
            let (factors, w) = t.weight();
            if below {
                assert!(w.is_zero());
                assert!(factors.iter().any(|f| f.e == f.f), "no bisected piece");
            }
        }
        // trapezoid total equals puzzle total
        let a = coefficient_by_puzzles(&lambda, &mu, &nu, 4, 2, false, false).unwrap();
        let b = coefficient_by_puzzles(&lambda, &mu, &nu, 4, 2, true, false).unwrap();
        assert_eq!(a, b);
    }
}
