//! Permutations in one-line notation, pattern containment, Rothe diagrams,
//! and enumeration of symmetric groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("`{0}` is not a bijection on 1..n")]
    NotBijection(String),
    #[error("cannot parse permutation from `{0}`")]
    Parse(String),
    #[error("pattern is longer than the host permutation")]
    PatternTooLong,
}

/// The six patterns whose avoidance characterizes zero-one Grothendieck
/// polynomials.
pub const ZERO_ONE_PATTERNS: [&[usize]; 6] = [
    &[1, 4, 3, 2],
    &[1, 3, 4, 2],
    &[1, 3, 2, 5, 4],
    &[3, 1, 5, 2, 4],
    &[1, 2, 5, 3, 4],
    &[2, 1, 5, 3, 4],
];

/// The twelve patterns whose avoidance characterizes zero-one Schubert
/// polynomials.
pub const SCHUBERT_ZERO_ONE_PATTERNS: [&[usize]; 12] = [
    &[1, 2, 5, 4, 3],
    &[1, 3, 2, 5, 4],
    &[1, 3, 5, 2, 4],
    &[1, 3, 5, 4, 2],
    &[2, 1, 5, 4, 3],
    &[1, 2, 5, 3, 6, 4],
    &[1, 2, 5, 6, 3, 4],
    &[2, 1, 5, 3, 6, 4],
    &[2, 1, 5, 6, 3, 4],
    &[3, 1, 5, 2, 6, 4],
    &[3, 1, 5, 6, 2, 4],
    &[3, 1, 5, 6, 4, 2],
];

/// A permutation of {1..n} in one-line notation. Immutable; one-line
/// notation is the sole canonical representation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, PermError> {
        let n = entries.len();
        if n == 0 {
            return Err(PermError::NotBijection("[]".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotBijection(format!("{entries:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { entries })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n).collect(),
        }
    }

    /// The longest element w0 = n (n-1) ... 1.
    pub fn longest(n: usize) -> Self {
        Self {
            entries: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// w(i) with 1-based position i.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.entries.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { entries: inv }
    }

    /// Number of inversions: pairs i < j with w(i) > w(j).
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.entries[i] > self.entries[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// w s_i: swap the values in positions i and i+1 (1-based i < n).
    pub fn swap_positions(&self, i: usize) -> Self {
        let mut e = self.entries.clone();
        e.swap(i - 1, i);
        Self { entries: e }
    }

    /// Smallest i with w(i) < w(i+1), if any.
    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.n()).find(|&i| self.at(i) < self.at(i + 1))
    }

    /// Largest i with w(i) < w(i+1), if any.
    pub fn last_ascent(&self) -> Option<usize> {
        (1..self.n()).rev().find(|&i| self.at(i) < self.at(i + 1))
    }

    /// True iff some subsequence of w is order-isomorphic to sigma.
    pub fn contains_pattern(&self, sigma: &Permutation) -> Result<bool, PermError> {
        if sigma.n() > self.n() {
            return Err(PermError::PatternTooLong);
        }
        let mut chosen = Vec::with_capacity(sigma.n());
        Ok(contains_rec(&self.entries, &sigma.entries, 0, &mut chosen))
    }

    fn avoids_all(&self, patterns: &[&[usize]]) -> bool {
        patterns.iter().all(|p| {
            if p.len() > self.n() {
                return true;
            }
            let sigma = Permutation::new(p.to_vec()).expect("pattern tables are permutations");
            !self.contains_pattern(&sigma).expect("length checked")
        })
    }

    /// Avoidance of the six zero-one Grothendieck patterns.
    pub fn avoids_zero_one_patterns(&self) -> bool {
        self.avoids_all(&ZERO_ONE_PATTERNS)
    }

    /// Avoidance of the twelve zero-one Schubert patterns.
    pub fn avoids_schubert_zero_one_patterns(&self) -> bool {
        self.avoids_all(&SCHUBERT_ZERO_ONE_PATTERNS)
    }

    /// Rothe diagram D(w) = {(i,j) : w(i) > j and w^{-1}(j) > i}.
    pub fn rothe_diagram(&self) -> Diagram {
        let n = self.n();
        let inv = self.inverse();
        let mut cells = BTreeSet::new();
        for i in 1..=n {
            for j in 1..=n {
                if self.at(i) > j && inv.at(j) > i {
                    cells.insert((i, j));
                }
            }
        }
        Diagram { n, cells }
    }
}

/// Backtracking subsequence search with pruning by remaining length.
/// `chosen` holds the values picked so far.
fn contains_rec(w: &[usize], sigma: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == sigma.len() {
        return true;
    }
    let need = sigma.len() - t;
    if w.len() < need || start > w.len() - need {
        return false;
    }
    for i in start..=w.len() - need {
        let v = w[i];
        if (0..t).all(|a| (chosen[a] < v) == (sigma[a] < sigma[t])) {
            chosen.push(v);
            if contains_rec(w, sigma, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.entries.iter().join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermError::Parse(s.to_string()))?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| PermError::Parse(s.to_string()))?
        };
        Permutation::new(entries)
    }
}

/// All n! permutations in lexicographic order of one-line notation.
pub fn enumerate_sn(n: usize) -> impl Iterator<Item = Permutation> {
    assert!(n >= 1, "enumerate_sn requires n >= 1");
    (1..=n)
        .permutations(n)
        .map(|entries| Permutation { entries })
}

/// A finite set of 1-based grid cells inside [1,n] x [1,n].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    n: usize,
    cells: BTreeSet<(usize, usize)>,
}

impl Diagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }
}
