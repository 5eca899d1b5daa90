//! Bumpless pipe dreams: the six-tile grid model, Rothe pipe dreams, droop
//! and K-theoretic droop moves, enumeration of BPD(w) by move closure and
//! by a brute-force oracle, and the weight polynomials.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::permcore::Permutation;
use crate::polyring::{IntPolynomial, VarSpace};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BpdError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("grid size {0} exceeds the brute-force bound 6")]
    TooLarge(usize),
}

/// Connection bits on a tile: which pairs of edges are joined by a pipe.
const SE: u8 = 1; // south-east bend
const WN: u8 = 2; // west-north bend
const WE: u8 = 4; // west-east passage
const SN: u8 = 8; // south-north passage

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    SEElbow,
    NWElbow,
    Horizontal,
    Vertical,
    Crossing,
    Empty,
}

impl Tile {
    fn mask(self) -> u8 {
        match self {
            Tile::SEElbow => SE,
            Tile::NWElbow => WN,
            Tile::Horizontal => WE,
            Tile::Vertical => SN,
            Tile::Crossing => WE | SN,
            Tile::Empty => 0,
        }
    }

    fn from_mask(m: u8) -> Option<Tile> {
        match m {
            0 => Some(Tile::Empty),
            x if x == SE => Some(Tile::SEElbow),
            x if x == WN => Some(Tile::NWElbow),
            x if x == WE => Some(Tile::Horizontal),
            x if x == SN => Some(Tile::Vertical),
            x if x == (WE | SN) => Some(Tile::Crossing),
            _ => None,
        }
    }

    pub fn ascii(self) -> char {
        match self {
            Tile::SEElbow => 'r',
            Tile::NWElbow => 'j',
            Tile::Horizontal => '-',
            Tile::Vertical => '|',
            Tile::Crossing => '+',
            Tile::Empty => '.',
        }
    }

    pub fn from_ascii(c: char) -> Option<Tile> {
        match c {
            'r' => Some(Tile::SEElbow),
            'j' => Some(Tile::NWElbow),
            '-' => Some(Tile::Horizontal),
            '|' => Some(Tile::Vertical),
            '+' => Some(Tile::Crossing),
            '.' => Some(Tile::Empty),
            _ => None,
        }
    }

    fn has_n(self) -> bool {
        self.mask() & (WN | SN) != 0
    }
    fn has_s(self) -> bool {
        self.mask() & (SE | SN) != 0
    }
    fn has_e(self) -> bool {
        self.mask() & (SE | WE) != 0
    }
    fn has_w(self) -> bool {
        self.mask() & (WN | WE) != 0
    }
}

/// A validated bumpless pipe dream. The grid alone is the identity of the
/// object; the trace permutation and bump reinterpretation are derived.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bpd {
    n: usize,
    tiles: Vec<Tile>,
    perm: Permutation,
}

impl PartialOrd for Bpd {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bpd {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.tiles).cmp(&(other.n, &other.tiles))
    }
}

fn idx(n: usize, r: usize, c: usize) -> usize {
    debug_assert!(r >= 1 && r <= n && c >= 1 && c <= n);
    (r - 1) * n + (c - 1)
}

impl Bpd {
    /// Validate edge consistency and boundary conditions, then trace.
    pub fn from_tiles(n: usize, tiles: Vec<Tile>) -> Result<Bpd, BpdError> {
        if n == 0 || tiles.len() != n * n {
            return Err(BpdError::InvalidGrid(format!(
                "expected {} tiles, got {}",
                n * n,
                tiles.len()
            )));
        }
        let at = |r: usize, c: usize| tiles[idx(n, r, c)];
        for r in 1..=n {
            for c in 1..=n {
                let t = at(r, c);
                if r == 1 && t.has_n() {
                    return Err(BpdError::InvalidGrid(format!(
                        "pipe exits the north boundary at column {c}"
                    )));
                }
                if r == n && !t.has_s() {
                    return Err(BpdError::InvalidGrid(format!(
                        "no pipe enters the south boundary at column {c}"
                    )));
                }
                if c == 1 && t.has_w() {
                    return Err(BpdError::InvalidGrid(format!(
                        "pipe enters the west boundary at row {r}"
                    )));
                }
                if c == n && !t.has_e() {
                    return Err(BpdError::InvalidGrid(format!(
                        "no pipe exits the east boundary at row {r}"
                    )));
                }
                if r < n && at(r, c).has_s() != at(r + 1, c).has_n() {
                    return Err(BpdError::InvalidGrid(format!(
                        "edge mismatch between ({r},{c}) and ({},{c})",
                        r + 1
                    )));
                }
                if c < n && at(r, c).has_e() != at(r, c + 1).has_w() {
                    return Err(BpdError::InvalidGrid(format!(
                        "edge mismatch between ({r},{c}) and ({r},{})",
                        c + 1
                    )));
                }
            }
        }
        let (perm, _) = trace(n, &tiles)?;
        Ok(Bpd { n, tiles, perm })
    }

    pub fn parse_ascii(rows: &[&str]) -> Result<Bpd, BpdError> {
        let n = rows.len();
        let mut tiles = Vec::with_capacity(n * n);
        for row in rows {
            if row.chars().count() != n {
                return Err(BpdError::InvalidGrid("non-square ASCII grid".into()));
            }
            for ch in row.chars() {
                tiles.push(Tile::from_ascii(ch).ok_or_else(|| {
                    BpdError::InvalidGrid(format!("unknown tile character '{ch}'"))
                })?);
            }
        }
        Bpd::from_tiles(n, tiles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tile(&self, r: usize, c: usize) -> Tile {
        self.tiles[idx(self.n, r, c)]
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// Cells holding Empty tiles (the set B(P)).
    pub fn empty_cells(&self) -> Vec<(usize, usize)> {
        self.cells_of(Tile::Empty)
    }

    /// Cells holding NW elbows (the set U(P)).
    pub fn nw_elbow_cells(&self) -> Vec<(usize, usize)> {
        self.cells_of(Tile::NWElbow)
    }

    fn cells_of(&self, kind: Tile) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 1..=self.n {
            for c in 1..=self.n {
                if self.tile(r, c) == kind {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// ASCII rendering: one character per tile, n lines of n characters.
    pub fn ascii(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for r in 1..=self.n {
            for c in 1..=self.n {
                s.push(self.tile(r, c).ascii());
            }
            if r < self.n {
                s.push('\n');
            }
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<String> = (1..=self.n)
            .map(|r| (1..=self.n).map(|c| self.tile(r, c).ascii()).collect())
            .collect();
        serde_json::json!({"n": self.n, "rows": rows})
    }

    /// Cell path of each pipe, in travel order from its south entry.
    pub fn pipe_routes(&self) -> Vec<Vec<(usize, usize)>> {
        let (_, bumps) = trace(self.n, &self.tiles).expect("validated at construction");
        let mut routes = Vec::with_capacity(self.n);
        for start in 1..=self.n {
            let mut route = Vec::new();
            // Heading: true = moving north, false = moving east.
            let mut r = self.n;
            let mut c = start;
            let mut north = true;
            loop {
                route.push((r, c));
                let t = self.tiles[idx(self.n, r, c)];
                let exit_north = match t {
                    Tile::SEElbow => false,
                    Tile::NWElbow => true,
                    Tile::Horizontal => false,
                    Tile::Vertical => true,
                    Tile::Crossing => {
                        // At a bump both entrants turn; at a true crossing
                        // they pass straight through.
                        if bumps.contains(&(r, c)) {
                            !north
                        } else {
                            north
                        }
                    }
                    Tile::Empty => unreachable!("pipe routed into an empty tile"),
                };
                if exit_north {
                    if r == 1 {
                        unreachable!("validated grids have no north exits");
                    }
                    r -= 1;
                    north = true;
                } else {
                    if c == self.n {
                        break;
                    }
                    c += 1;
                    north = false;
                }
            }
            routes.push(route);
        }
        routes
    }

    /// weight(P) = prod over empty cells (i,j) of x_i, times prod over NW
    /// elbows (p,q) of (1 - x_p), in the n-variable x space.
    pub fn weight_single(&self) -> IntPolynomial {
        let space = VarSpace::x_only(self.n);
        let one = IntPolynomial::one(space);
        let mut w = one.clone();
        for (i, _) in self.empty_cells() {
            w = w.mul(&IntPolynomial::x_var(space, i));
        }
        for (p, _) in self.nw_elbow_cells() {
            w = w.mul(&one.sub(&IntPolynomial::x_var(space, p)));
        }
        w
    }

    /// Double weight: prod over empty cells of (x_i + y_j - x_i y_j), times
    /// prod over NW elbows of (1 - x_p - y_q + x_p y_q).
    pub fn weight_double(&self) -> IntPolynomial {
        let space = VarSpace::xy(self.n);
        let one = IntPolynomial::one(space);
        let mut w = one.clone();
        for (i, j) in self.empty_cells() {
            let x = IntPolynomial::x_var(space, i);
            let y = IntPolynomial::y_var(space, j);
            w = w.mul(&x.add(&y).sub(&x.mul(&y)));
        }
        for (p, q) in self.nw_elbow_cells() {
            let x = IntPolynomial::x_var(space, p);
            let y = IntPolynomial::y_var(space, q);
            w = w.mul(&one.sub(&x).sub(&y).add(&x.mul(&y)));
        }
        w
    }

    /// All single permissible droops of P.
    pub fn droops(&self) -> Vec<Bpd> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if self.tile(a, b) != Tile::SEElbow {
                    continue;
                }
                for p in a + 1..=n {
                    let tb = self.tile(p, b);
                    if tb.mask() & SN == 0 {
                        break; // the pipe's vertical run in column b ends here
                    }
                    if tb != Tile::Vertical {
                        continue; // a crossing can't host the new elbow
                    }
                    for q in b + 1..=n {
                        if self.tile(p, q) != Tile::Empty {
                            continue;
                        }
                        if let Some(next) = self.try_droop(a, b, p, q) {
                            out.push(next);
                        }
                    }
                }
            }
        }
        out
    }

    fn interior_elbow_free(&self, a: usize, b: usize, p: usize, q: usize) -> bool {
        for r in a + 1..p {
            for c in b + 1..q {
                let t = self.tile(r, c);
                if t == Tile::SEElbow || t == Tile::NWElbow {
                    return false;
                }
            }
        }
        true
    }

    fn try_droop(&self, a: usize, b: usize, p: usize, q: usize) -> Option<Bpd> {
        // Geometry: straight pipe runs along column b and row a spanning
        // the rectangle, and no elbows strictly inside.
        for r in a + 1..=p {
            if self.tile(r, b).mask() & SN == 0 {
                return None;
            }
        }
        for c in b + 1..=q {
            if self.tile(a, c).mask() & WE == 0 {
                return None;
            }
        }
        if !self.interior_elbow_free(a, b, p, q) {
            return None;
        }
        let mut g = MaskGrid::from_bpd(self);
        g.remove(a, b, SE)?;
        for r in a + 1..p {
            g.remove(r, b, SN)?;
        }
        g.remove(p, b, SN)?;
        g.add(p, b, SE)?;
        for c in b + 1..q {
            g.remove(a, c, WE)?;
        }
        g.remove(a, q, WE)?;
        g.add(a, q, SE)?;
        for c in b + 1..q {
            g.add(p, c, WE)?;
        }
        for r in a + 1..p {
            g.add(r, q, SN)?;
        }
        g.add(p, q, WN)?;
        self.finish_move(g)
    }

    /// All single permissible K-theoretic droops of P, both orientations.
    pub fn k_droops(&self) -> Vec<Bpd> {
        let n = self.n;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in 1..=n {
                if self.tile(a, b) != Tile::SEElbow {
                    continue;
                }
                for p in a + 1..=n {
                    for q in b + 1..=n {
                        if self.tile(p, q) != Tile::NWElbow {
                            continue;
                        }
                        if self.tile(a, q) == Tile::Crossing {
                            if let Some(next) = self.try_k_droop_ne(a, b, p, q) {
                                out.push(next);
                            }
                        }
                        if self.tile(p, b) == Tile::Crossing {
                            if let Some(next) = self.try_k_droop_sw(a, b, p, q) {
                                out.push(next);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Orientation with the existing crossing at the NE corner (a,q). The
    /// second pipe's SE elbow sits on the south row of the rectangle.
    fn try_k_droop_ne(&self, a: usize, b: usize, p: usize, q: usize) -> Option<Bpd> {
        for r in a + 1..=p {
            if self.tile(r, b).mask() & SN == 0 {
                return None;
            }
        }
        for c in b + 1..q {
            if self.tile(a, c).mask() & WE == 0 {
                return None;
            }
        }
        for r in a + 1..p {
            if self.tile(r, q).mask() & SN == 0 {
                return None;
            }
        }
        // Walk west from (p,q) along the second pipe to its SE elbow.
        let mut cj = None;
        for c in (b + 1..q).rev() {
            let t = self.tile(p, c);
            if t == Tile::SEElbow {
                cj = Some(c);
                break;
            }
            if t.mask() & WE == 0 {
                return None;
            }
        }
        let cj = cj?;
        if !self.interior_elbow_free(a, b, p, q) {
            return None;
        }
        let mut g = MaskGrid::from_bpd(self);
        g.remove(a, b, SE)?;
        for r in a + 1..p {
            g.remove(r, b, SN)?;
        }
        g.remove(p, b, SN)?;
        g.add(p, b, SE)?;
        for c in b + 1..cj {
            g.remove(a, c, WE)?;
            g.add(p, c, WE)?;
        }
        g.remove(a, cj, WE)?;
        g.add(a, cj, SE)?;
        for r in a + 1..p {
            g.add(r, cj, SN)?;
        }
        g.remove(p, cj, SE)?;
        g.add(p, cj, SN)?;
        g.add(p, cj, WE)?;
        self.finish_move(g)
    }

    /// Orientation with the existing crossing at the SW corner (p,b). The
    /// second pipe's SE elbow sits on the east column of the rectangle.
    fn try_k_droop_sw(&self, a: usize, b: usize, p: usize, q: usize) -> Option<Bpd> {
        for r in a + 1..p {
            if self.tile(r, b).mask() & SN == 0 {
                return None;
            }
        }
        for c in b + 1..=q {
            if self.tile(a, c).mask() & WE == 0 {
                return None;
            }
        }
        for c in b + 1..q {
            if self.tile(p, c).mask() & WE == 0 {
                return None;
            }
        }
        // Walk north from (p,q) along the second pipe to its SE elbow.
        let mut rj = None;
        for r in (a + 1..p).rev() {
            let t = self.tile(r, q);
            if t == Tile::SEElbow {
                rj = Some(r);
                break;
            }
            if t.mask() & SN == 0 {
                return None;
            }
        }
        let rj = rj?;
        if !self.interior_elbow_free(a, b, p, q) {
            return None;
        }
        let mut g = MaskGrid::from_bpd(self);
        g.remove(a, b, SE)?;
        for r in a + 1..rj {
            g.remove(r, b, SN)?;
        }
        g.remove(rj, b, SN)?;
        g.add(rj, b, SE)?;
        for c in b + 1..q {
            g.remove(a, c, WE)?;
            g.add(rj, c, WE)?;
        }
        g.remove(a, q, WE)?;
        g.add(a, q, SE)?;
        for r in a + 1..rj {
            g.add(r, q, SN)?;
        }
        g.remove(rj, q, SE)?;
        g.add(rj, q, SN)?;
        g.add(rj, q, WE)?;
        self.finish_move(g)
    }

    /// Convert an edited mask grid back to tiles, revalidate fully, and
    /// require the trace to be unchanged.
    fn finish_move(&self, g: MaskGrid) -> Option<Bpd> {
        let tiles = g.to_tiles()?;
        let next = Bpd::from_tiles(self.n, tiles).ok()?;
        if next.perm == self.perm {
            Some(next)
        } else {
            None
        }
    }
}

impl fmt::Display for Bpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ascii())
    }
}

/// Editable connection-bit grid used while applying a move. All edits are
/// checked: removing an absent bit or adding a present bit voids the move.
struct MaskGrid {
    n: usize,
    masks: Vec<u8>,
}

impl MaskGrid {
    fn from_bpd(b: &Bpd) -> Self {
        Self {
            n: b.n,
            masks: b.tiles.iter().map(|t| t.mask()).collect(),
        }
    }

    fn remove(&mut self, r: usize, c: usize, bit: u8) -> Option<()> {
        let m = &mut self.masks[idx(self.n, r, c)];
        if *m & bit == bit {
            *m &= !bit;
            Some(())
        } else {
            None
        }
    }

    fn add(&mut self, r: usize, c: usize, bit: u8) -> Option<()> {
        let m = &mut self.masks[idx(self.n, r, c)];
        if *m & bit == 0 {
            *m |= bit;
            Some(())
        } else {
            None
        }
    }

    fn to_tiles(&self) -> Option<Vec<Tile>> {
        self.masks.iter().map(|&m| Tile::from_mask(m)).collect()
    }
}

/// Route all pipes through an edge-consistent grid. Returns the traced
/// permutation and the set of crossing cells that are reinterpreted as
/// bumps (second or later crossings of a pair, counted left to right and
/// bottom to top within a column).
fn trace(n: usize, tiles: &[Tile]) -> Result<(Permutation, HashSet<(usize, usize)>), BpdError> {
    let at = |r: usize, c: usize| tiles[idx(n, r, c)];
    let mut west: Vec<Option<usize>> = vec![None; n + 1];
    let mut crossed: HashSet<(usize, usize)> = HashSet::new();
    let mut bumps: HashSet<(usize, usize)> = HashSet::new();
    let mut east_final: Vec<Option<usize>> = vec![None; n + 1];
    for c in 1..=n {
        let mut east: Vec<Option<usize>> = vec![None; n + 1];
        let mut south: Option<usize> = Some(c);
        for r in (1..=n).rev() {
            let t = at(r, c);
            let w_in = west[r].take();
            let s_in = south.take();
            let (e_out, n_out) = match t {
                Tile::Empty => (None, None),
                Tile::SEElbow => (s_in, None),
                Tile::NWElbow => (None, w_in),
                Tile::Horizontal => (w_in, None),
                Tile::Vertical => (None, s_in),
                Tile::Crossing => {
                    let (s, w) = match (s_in, w_in) {
                        (Some(s), Some(w)) => (s, w),
                        _ => {
                            return Err(BpdError::InvalidGrid(format!(
                                "crossing at ({r},{c}) missing a pipe"
                            )))
                        }
                    };
                    let pair = (s.min(w), s.max(w));
                    if crossed.insert(pair) {
                        (Some(w), Some(s))
                    } else {
                        bumps.insert((r, c));
                        (Some(s), Some(w))
                    }
                }
            };
            if r == 1 && n_out.is_some() {
                return Err(BpdError::InvalidGrid(format!(
                    "pipe exits the north boundary at column {c}"
                )));
            }
            east[r] = e_out;
            south = n_out;
        }
        west = east;
    }
    for r in 1..=n {
        east_final[r] = west[r];
    }
    let mut entries = Vec::with_capacity(n);
    for r in 1..=n {
        entries.push(east_final[r].ok_or_else(|| {
            BpdError::InvalidGrid(format!("no pipe exits the east boundary at row {r}"))
        })?);
    }
    Permutation::new(entries)
        .map(|p| (p, bumps))
        .map_err(|e| BpdError::InvalidGrid(e.to_string()))
}

/// Rothe pipe dream of w: for each i a dot (SE elbow) at (i, w(i)) with a
/// horizontal run to the east edge and a vertical run to the south edge.
pub fn rothe_bpd(w: &Permutation) -> Bpd {
    let n = w.n();
    let mut masks = vec![0u8; n * n];
    for i in 1..=n {
        let j = w.at(i);
        masks[idx(n, i, j)] |= SE;
        for c in j + 1..=n {
            masks[idx(n, i, c)] |= WE;
        }
        for r in i + 1..=n {
            masks[idx(n, r, j)] |= SN;
        }
    }
    let tiles: Vec<Tile> = masks
        .iter()
        .map(|&m| Tile::from_mask(m).expect("Rothe construction yields legal tiles"))
        .collect();
    Bpd::from_tiles(n, tiles).expect("Rothe pipe dream is always valid")
}

/// BPD(w): breadth-first closure of the Rothe pipe dream under droops and
/// K-theoretic droops, in canonical (grid encoding) order.
pub fn enumerate_bpds(w: &Permutation) -> Vec<Bpd> {
    let start = rothe_bpd(w);
    let mut seen: BTreeMap<Vec<Tile>, Bpd> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.tiles.clone(), start.clone());
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        for next in p.droops().into_iter().chain(p.k_droops()) {
            if !seen.contains_key(&next.tiles) {
                seen.insert(next.tiles.clone(), next.clone());
                queue.push_back(next);
            }
        }
    }
    seen.into_values().collect()
}

/// The reduced elements of BPD(w): closure of the Rothe pipe dream under
/// plain droops only. These are exactly the P with ell(w) empty tiles; each
/// K-theoretic droop raises the empty-tile count by one.
pub fn enumerate_reduced_bpds(w: &Permutation) -> Vec<Bpd> {
    let start = rothe_bpd(w);
    let mut seen: BTreeMap<Vec<Tile>, Bpd> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.tiles.clone(), start.clone());
    queue.push_back(start);
    while let Some(p) = queue.pop_front() {
        for next in p.droops() {
            if !seen.contains_key(&next.tiles) {
                seen.insert(next.tiles.clone(), next.clone());
                queue.push_back(next);
            }
        }
    }
    seen.into_values().collect()
}

/// Enumerate every edge-consistent n x n grid and bucket it by its traced
/// permutation. Independent oracle for enumerate_bpds; n <= 6.
pub fn bruteforce_all(n: usize) -> Result<BTreeMap<Permutation, Vec<Bpd>>, BpdError> {
    if n == 0 || n > 6 {
        return Err(BpdError::TooLarge(n));
    }
    let mut out: BTreeMap<Permutation, Vec<Bpd>> = BTreeMap::new();
    let mut tiles = vec![Tile::Empty; n * n];
    let west = vec![false; n + 1];
    fill_column(n, 1, &west, &mut tiles, &mut out);
    for v in out.values_mut() {
        v.sort();
    }
    Ok(out)
}

/// All valid BPDs of one permutation via the brute-force oracle.
pub fn enumerate_bpds_bruteforce(w: &Permutation) -> Result<Vec<Bpd>, BpdError> {
    let mut all = bruteforce_all(w.n())?;
    Ok(all.remove(w).unwrap_or_default())
}

fn fill_column(
    n: usize,
    c: usize,
    west: &[bool],
    tiles: &mut Vec<Tile>,
    out: &mut BTreeMap<Permutation, Vec<Bpd>>,
) {
    fill_cell(n, c, n, true, west, &mut vec![false; n + 1], tiles, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_cell(
    n: usize,
    c: usize,
    r: usize,
    south: bool,
    west: &[bool],
    east: &mut Vec<bool>,
    tiles: &mut Vec<Tile>,
    out: &mut BTreeMap<Permutation, Vec<Bpd>>,
) {
    let w = west[r];
    let choices: &[Tile] = match (south, w) {
        (false, false) => &[Tile::Empty],
        (true, false) => &[Tile::SEElbow, Tile::Vertical],
        (false, true) => &[Tile::NWElbow, Tile::Horizontal],
        (true, true) => &[Tile::Crossing],
    };
    for &t in choices {
        if r == 1 && t.has_n() {
            continue;
        }
        if c == n && !t.has_e() {
            continue;
        }
        tiles[idx(n, r, c)] = t;
        east[r] = t.has_e();
        if r > 1 {
            fill_cell(n, c, r - 1, t.has_n(), west, east, tiles, out);
        } else if c < n {
            let east_now = east.clone();
            fill_column_inner(n, c + 1, &east_now, tiles, out);
        } else if let Ok(b) = Bpd::from_tiles(n, tiles.clone()) {
            out.entry(b.perm.clone()).or_default().push(b);
        }
    }
}

fn fill_column_inner(
    n: usize,
    c: usize,
    west: &[bool],
    tiles: &mut Vec<Tile>,
    out: &mut BTreeMap<Permutation, Vec<Bpd>>,
) {
    fill_cell(n, c, n, true, west, &mut vec![false; n + 1], tiles, out);
}
