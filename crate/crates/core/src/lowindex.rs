//! Low-index subgroup search directly on a finite presentation:
//! backtracking construction of complete coset tables of a given index,
//! with conjugacy detected by base-point change.
//!
//! This is the second, fully independent oracle. It never consults the
//! canonical-form arithmetic or the 3-plet structure theory.

use std::collections::BTreeSet;

/// A finite presentation on `ngens` generators. Relators are words over
/// signed letters: `+k` is generator `k-1`, `-k` its inverse.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub ngens: usize,
    pub relators: Vec<Vec<i32>>,
}

/// `<x, y, z | [x,y], z x z^-1 x, z y z^-1 y>`.
pub fn g2_presentation() -> Presentation {
    Presentation {
        ngens: 3,
        relators: vec![
            vec![1, 2, -1, -2],
            vec![3, 1, -3, 1],
            vec![3, 2, -3, 2],
        ],
    }
}

/// `<x, y, z | [x,y], z x z^-1 y^-1, z y z^-1 x>`.
pub fn g4_presentation() -> Presentation {
    Presentation {
        ngens: 3,
        relators: vec![
            vec![1, 2, -1, -2],
            vec![3, 1, -3, -2],
            vec![3, 2, -3, 1],
        ],
    }
}

/// A complete coset table: for each coset, the image under each column
/// `x, x^-1, y, y^-1, z, z^-1` (generator columns interleaved with their
/// inverses). Cosets are numbered from 0; the base point is coset 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub ncols: usize,
    pub rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// One row per coset, whitespace-separated columns, 1-based cosets.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| (c + 1).to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LowIndexError {
    #[error("index {requested} exceeds the configured bound {bound}")]
    BoundExceeded { requested: u64, bound: u64 },
}

pub const DEFAULT_BOUND: u64 = 8;

fn column(letter: i32) -> usize {
    let g = (letter.unsigned_abs() as usize - 1) * 2;
    if letter > 0 {
        g
    } else {
        g + 1
    }
}

fn inverse_column(col: usize) -> usize {
    col ^ 1
}

struct Search<'a> {
    relators: &'a [Vec<i32>],
    ncols: usize,
    target: usize,
    table: Vec<Vec<Option<usize>>>,
    results: Vec<CosetTable>,
}

impl<'a> Search<'a> {
    /// Fill the first undefined slot in scan order, trying every existing
    /// coset with a free inverse slot and then one fresh coset. New
    /// cosets are therefore created in first-occurrence order, so each
    /// complete table appears exactly once, already standardized.
    fn run(&mut self) {
        let slot = self
            .table
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().filter(|(_, v)| v.is_none()).map(move |(j, _)| (i, j)))
            .next();
        let (coset, col) = match slot {
            Some(s) => s,
            None => {
                if self.table.len() == self.target {
                    self.results.push(CosetTable {
                        ncols: self.ncols,
                        rows: self
                            .table
                            .iter()
                            .map(|row| row.iter().map(|v| v.unwrap()).collect())
                            .collect(),
                    });
                }
                return;
            }
        };
        for image in 0..=self.table.len() {
            let fresh = image == self.table.len();
            if fresh {
                if self.table.len() >= self.target {
                    continue;
                }
                self.table.push(vec![None; self.ncols]);
            } else if self.table[image][inverse_column(col)].is_some() {
                continue;
            }
            let mut trail = Vec::new();
            if self.assign(coset, col, image, &mut trail) && self.propagate(&mut trail) {
                self.run();
            }
            for (c, g) in trail.into_iter().rev() {
                self.table[c][g] = None;
            }
            if fresh {
                self.table.pop();
            }
        }
    }

    fn assign(&mut self, coset: usize, col: usize, image: usize, trail: &mut Vec<(usize, usize)>) -> bool {
        match self.table[coset][col] {
            Some(v) => v == image,
            None => {
                if let Some(v) = self.table[image][inverse_column(col)] {
                    if v != coset {
                        return false;
                    }
                }
                self.table[coset][col] = Some(image);
                trail.push((coset, col));
                if self.table[image][inverse_column(col)].is_none() {
                    self.table[image][inverse_column(col)] = Some(coset);
                    trail.push((image, inverse_column(col)));
                }
                true
            }
        }
    }

    /// Trace every relator at every coset until no more entries are
    /// forced; a failed trace rejects the branch.
    fn propagate(&mut self, trail: &mut Vec<(usize, usize)>) -> bool {
        loop {
            let mut deduced = false;
            for rel in self.relators {
                for start in 0..self.table.len() {
                    match self.scan_relator(rel, start) {
                        Scan::Contradiction => return false,
                        Scan::Deduce { coset, col, image } => {
                            if !self.assign(coset, col, image, trail) {
                                return false;
                            }
                            deduced = true;
                        }
                        Scan::Incomplete | Scan::Closed => {}
                    }
                }
            }
            if !deduced {
                return true;
            }
        }
    }

    fn scan_relator(&self, rel: &[i32], start: usize) -> Scan {
        // Forward from the start, then backward from the end; a gap of
        // one letter forces a table entry.
        let mut front = start;
        let mut i = 0;
        while i < rel.len() {
            match self.table[front][column(rel[i])] {
                Some(next) => {
                    front = next;
                    i += 1;
                }
                None => break,
            }
        }
        if i == rel.len() {
            return if front == start { Scan::Closed } else { Scan::Contradiction };
        }
        let mut back = start;
        let mut j = rel.len();
        while j > i + 1 {
            let inv = -rel[j - 1];
            match self.table[back][column(inv)] {
                Some(prev) => {
                    back = prev;
                    j -= 1;
                }
                None => break,
            }
        }
        if j == i + 1 {
            // The one missing transition is forced; a clash with an
            // already-defined inverse entry surfaces in assign.
            Scan::Deduce { coset: front, col: column(rel[i]), image: back }
        } else {
            Scan::Incomplete
        }
    }
}

enum Scan {
    Closed,
    Contradiction,
    Incomplete,
    Deduce { coset: usize, col: usize, image: usize },
}

/// All complete coset tables of index exactly `n`, one per subgroup, in
/// deterministic search order.
pub fn low_index_subgroups(p: &Presentation, n: u64) -> Result<Vec<CosetTable>, LowIndexError> {
    low_index_subgroups_bounded(p, n, DEFAULT_BOUND)
}

pub fn low_index_subgroups_bounded(
    p: &Presentation,
    n: u64,
    bound: u64,
) -> Result<Vec<CosetTable>, LowIndexError> {
    assert!(n >= 1);
    if n > bound {
        return Err(LowIndexError::BoundExceeded { requested: n, bound });
    }
    let ncols = p.ngens * 2;
    let mut search = Search {
        relators: &p.relators,
        ncols,
        target: n as usize,
        table: vec![vec![None; ncols]],
        results: Vec::new(),
    };
    search.run();
    let results = search.results;
    debug_assert!(results.iter().all(|t| verify_table(p, t)));
    Ok(results)
}

/// Post-hoc check, independent of the search pruning: the table is a
/// transitive permutation action satisfying every relator at every coset.
pub fn verify_table(p: &Presentation, t: &CosetTable) -> bool {
    let n = t.len();
    // Columns are mutually inverse permutations.
    for col in 0..t.ncols {
        let mut seen = vec![false; n];
        for coset in 0..n {
            let image = t.rows[coset][col];
            if image >= n || seen[image] || t.rows[image][inverse_column(col)] != coset {
                return false;
            }
            seen[image] = true;
        }
    }
    // Transitivity from the base point.
    let mut reached = vec![false; n];
    let mut stack = vec![0usize];
    reached[0] = true;
    while let Some(c) = stack.pop() {
        for col in 0..t.ncols {
            let next = t.rows[c][col];
            if !reached[next] {
                reached[next] = true;
                stack.push(next);
            }
        }
    }
    if !reached.iter().all(|&r| r) {
        return false;
    }
    // Relator traces close everywhere.
    for rel in &p.relators {
        for start in 0..n {
            let mut c = start;
            for &letter in rel {
                c = t.rows[c][column(letter)];
            }
            if c != start {
                return false;
            }
        }
    }
    true
}

/// Renumber a table by first-occurrence order starting from `base`.
fn rebase(t: &CosetTable, base: usize) -> Vec<usize> {
    let n = t.len();
    let mut order = vec![usize::MAX; n];
    let mut sequence = vec![base];
    order[base] = 0;
    let mut next_id = 1;
    let mut i = 0;
    while i < sequence.len() {
        let c = sequence[i];
        for col in 0..t.ncols {
            let image = t.rows[c][col];
            if order[image] == usize::MAX {
                order[image] = next_id;
                next_id += 1;
                sequence.push(image);
            }
        }
        i += 1;
    }
    // Flattened renumbered table, usable as a canonical key.
    let mut flat = Vec::with_capacity(n * t.ncols);
    for &c in &sequence {
        for col in 0..t.ncols {
            flat.push(order[t.rows[c][col]]);
        }
    }
    flat
}

/// Number of conjugacy classes among the tables of one run: two pointed
/// tables give conjugate subgroups iff they agree after a base-point
/// change, so the lexicographically least rebasing is a class key.
pub fn class_count(tables: &[CosetTable]) -> usize {
    let mut keys = BTreeSet::new();
    for t in tables {
        let key = (0..t.len()).map(|b| rebase(t, b)).min().unwrap();
        keys.insert(key);
    }
    keys.len()
}
