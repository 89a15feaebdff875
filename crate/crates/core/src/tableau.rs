//! Partially standard tableaux, Schensted insertion and dual equivalence.
//!
//! Cells are addressed by 1-based `(row, col)` pairs, rows counted from the top.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A partition shape: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Shape(Vec<usize>);

impl TryFrom<Vec<usize>> for Shape {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Shape::new(parts)
    }
}

impl From<Shape> for Vec<usize> {
    fn from(s: Shape) -> Self {
        s.0
    }
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("not a partition: {parts:?}")));
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Shape {
        let width = self.0.first().copied().unwrap_or(0);
        Shape((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rows or columns, for counting odd lines and similar queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Rows,
    Columns,
}

/// The cells visited by one Schensted insertion.
///
/// `cells[j]` is the position changed in row `j + 1`; the last cell is the
/// newly created box. `inserted_values[j]` is the value inserted into row
/// `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BumpingPath {
    pub cells: Vec<(usize, usize)>,
    pub inserted_values: Vec<u32>,
}

impl BumpingPath {
    /// Index of the final row, i.e. the path length.
    pub fn frow(&self) -> usize {
        self.cells.len()
    }

    /// Column of the path in row `j` (1-based).
    pub fn column(&self, j: usize) -> Option<usize> {
        self.cells.get(j.checked_sub(1)?).map(|c| c.1)
    }

    /// Value inserted into row `j` (1-based).
    pub fn ivalue(&self, j: usize) -> Option<u32> {
        self.inserted_values.get(j.checked_sub(1)?).copied()
    }

    /// The box added by the insertion.
    pub fn new_cell(&self) -> (usize, usize) {
        *self.cells.last().expect("bumping paths are never empty")
    }

    /// True when in every shared row this path's column is strictly smaller.
    pub fn strictly_left_of(&self, other: &BumpingPath) -> bool {
        self.cells.iter().zip(&other.cells).all(|(a, b)| a.1 < b.1)
    }

    pub fn weakly_left_of(&self, other: &BumpingPath) -> bool {
        self.cells.iter().zip(&other.cells).all(|(a, b)| a.1 <= b.1)
    }
}

/// A partially standard tableau: distinct positive entries, strictly
/// increasing along rows and down columns, partition shape.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidTableau(format!("{msg}: {:?}", self.rows)));
        let mut seen = BTreeSet::new();
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad("empty row");
            }
            if r > 0 && row.len() > self.rows[r - 1].len() {
                return bad("row lengths increase");
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 {
                    return bad("zero entry");
                }
                if !seen.insert(v) {
                    return bad("repeated entry");
                }
                if c > 0 && row[c - 1] >= v {
                    return bad("row not increasing");
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return bad("column not increasing");
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(Vec::len).collect())
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn position(&self, value: u32) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == value).map(|c| (r + 1, c + 1))
        })
    }

    pub fn contains(&self, value: u32) -> bool {
        self.position(value).is_some()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    /// Entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let n = self.size() as u32;
        self.rows.iter().flatten().all(|&v| v <= n)
    }

    /// Length of column `c` (1-based).
    pub fn column_len(&self, c: usize) -> usize {
        self.rows.iter().take_while(|row| row.len() >= c).count()
    }

    /// Whether `(row, col)` is a removable cell.
    pub fn is_corner(&self, row: usize, col: usize) -> bool {
        row >= 1
            && row <= self.rows.len()
            && self.rows[row - 1].len() == col
            && self.rows.get(row).is_none_or(|next| next.len() < col)
    }

    /// Schensted row insertion `T ← a`, with its bumping path.
    pub fn rs_insert(&self, a: u32) -> Result<(Tableau, BumpingPath)> {
        if a == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if self.contains(a) {
            return Err(Error::DuplicateEntry(a));
        }
        let mut rows = self.rows.clone();
        let mut cells = Vec::new();
        let mut inserted_values = Vec::new();
        let mut x = a;
        let mut r = 0;
        loop {
            inserted_values.push(x);
            if r == rows.len() {
                rows.push(vec![x]);
                cells.push((r + 1, 1));
                break;
            }
            let row = &mut rows[r];
            match row.iter().position(|&y| y > x) {
                Some(c) => {
                    cells.push((r + 1, c + 1));
                    x = std::mem::replace(&mut row[c], x);
                    r += 1;
                }
                None => {
                    row.push(x);
                    cells.push((r + 1, row.len()));
                    break;
                }
            }
        }
        Ok((Tableau { rows }, BumpingPath { cells, inserted_values }))
    }

    /// Schensted column insertion: bump through columns instead of rows.
    /// Returns the new tableau and the added cell.
    pub fn column_insert(&self, a: u32) -> Result<(Tableau, (usize, usize))> {
        if a == 0 {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if self.contains(a) {
            return Err(Error::DuplicateEntry(a));
        }
        let mut rows = self.rows.clone();
        let mut x = a;
        let mut c = 0;
        loop {
            let height = rows.iter().take_while(|row| row.len() > c).count();
            match (0..height).find(|&r| rows[r][c] > x) {
                Some(r) => {
                    x = std::mem::replace(&mut rows[r][c], x);
                    c += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(vec![x]);
                    } else {
                        rows[height].push(x);
                    }
                    return Ok((Tableau { rows }, (height + 1, c + 1)));
                }
            }
        }
    }

    /// Inverse Schensted insertion from a removable corner: returns `(U, x)`
    /// with `U ← x = T` adding exactly that corner.
    pub fn rs_uninsert(&self, corner: (usize, usize)) -> Result<(Tableau, u32)> {
        let (row, col) = corner;
        if !self.is_corner(row, col) {
            return Err(Error::NotCorner { row, col });
        }
        let mut rows = self.rows.clone();
        let mut x = rows[row - 1].pop().expect("corner row is non-empty");
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        for r in (0..row - 1).rev() {
            // last entry smaller than x is replaced by x
            let c = rows[r]
                .iter()
                .rposition(|&y| y < x)
                .expect("first column strictly increases");
            x = std::mem::replace(&mut rows[r][c], x);
        }
        Ok((Tableau { rows }, x))
    }

    /// Row reading word: rows left to right, last row first.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Replaces `a` by `b` and `b` by `a`.
    fn swap_values(&self, a: u32, b: u32) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| if v == a { b } else if v == b { a } else { v })
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// The elementary dual equivalence operator `D_i`.
    pub fn dual_equiv(&self, i: u32) -> Result<Tableau> {
        if i < 2 {
            return Err(Error::MissingEntry(i.saturating_sub(1)));
        }
        let word = self.reading_word();
        let pos = |v: u32| word.iter().position(|&x| x == v).ok_or(Error::MissingEntry(v));
        let (p_lo, p_mid, p_hi) = (pos(i - 1)?, pos(i)?, pos(i + 1)?);
        let between = |m: usize, a: usize, b: usize| (a < m && m < b) || (b < m && m < a);
        let out = if between(p_hi, p_mid, p_lo) {
            self.swap_values(i - 1, i)
        } else if between(p_lo, p_mid, p_hi) {
            self.swap_values(i, i + 1)
        } else {
            self.clone()
        };
        Ok(out)
    }

    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect();
        Tableau { rows }
    }

    /// `T|_X`: drop entries outside `keep`; the surviving cells must already
    /// form a partition shape.
    pub fn restrict(&self, keep: impl Fn(u32) -> bool) -> Result<Tableau> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        let mut ended = false;
        for row in &self.rows {
            let kept = row.iter().take_while(|&&v| keep(v)).count();
            if row[kept..].iter().any(|&v| keep(v)) || (ended && kept > 0) {
                return Err(Error::BadRestriction);
            }
            if kept == 0 {
                ended = true;
            } else {
                rows.push(row[..kept].to_vec());
            }
        }
        Tableau::new(rows).map_err(|_| Error::BadRestriction)
    }

    /// Restriction to the entries of `set`.
    pub fn restrict_to(&self, set: &BTreeSet<u32>) -> Result<Tableau> {
        self.restrict(|v| set.contains(&v))
    }

    /// Number of rows or columns of odd length.
    pub fn odd_lines(&self, direction: Direction) -> usize {
        let shape = match direction {
            Direction::Rows => self.shape(),
            Direction::Columns => self.shape().conjugate(),
        };
        shape.parts().iter().filter(|&&p| p % 2 == 1).count()
    }

    pub(crate) fn push_to_row(&mut self, row: usize, value: u32) {
        if row > self.rows.len() {
            self.rows.push(vec![value]);
        } else {
            self.rows[row - 1].push(value);
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.rows).map_err(|_| fmt::Error)?)
    }
}

/// `(P_RS(w), Q_RS(w))`.
pub fn pq_rs(w: &Permutation) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for (k, &v) in w.word().iter().enumerate() {
        let (next, path) = p.rs_insert(v).expect("one-line words have distinct letters");
        let (row, _) = path.new_cell();
        q.push_to_row(row, k as u32 + 1);
        p = next;
    }
    (p, q)
}

/// All standard Young tableaux with `n` cells, sorted.
pub fn standard_tableaux(n: usize) -> Vec<Tableau> {
    let mut current = vec![Tableau::empty()];
    for v in 1..=n as u32 {
        let mut next = Vec::new();
        for t in &current {
            for r in 0..=t.rows.len() {
                let len = t.rows.get(r).map_or(0, Vec::len);
                let fits = r == 0 || t.rows[r - 1].len() > len;
                if fits {
                    let mut u = t.clone();
                    u.push_to_row(r + 1, v);
                    next.push(u);
                }
            }
        }
        current = next;
    }
    current.sort();
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_permutations;

    fn t(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 3], vec![2]]).is_ok());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 1]]).is_err());
        assert!(Tableau::new(vec![vec![]]).is_err());
    }

    #[test]
    fn rs_insert_examples() {
        let (out, path) = t(&[&[1, 5], &[3, 6], &[4]]).rs_insert(2).unwrap();
        assert_eq!(out, t(&[&[1, 2], &[3, 5], &[4, 6]]));
        assert_eq!(path.new_cell(), (3, 2));
        let (out, _) = t(&[&[1, 3], &[4]]).rs_insert(2).unwrap();
        assert_eq!(out, t(&[&[1, 2], &[3], &[4]]));
        let (out, _) = Tableau::empty().rs_insert(5).unwrap();
        assert_eq!(out, t(&[&[5]]));
        assert_eq!(t(&[&[1, 3]]).rs_insert(3), Err(Error::DuplicateEntry(3)));
    }

    #[test]
    fn bumping_path_accessors() {
        let (out, path) = t(&[&[1, 3, 5], &[4, 6, 9], &[7, 8]]).rs_insert(2).unwrap();
        assert_eq!(out, t(&[&[1, 2, 5], &[3, 6, 9], &[4, 8], &[7]]));
        assert_eq!(path.frow(), 4);
        assert_eq!(path.column(1), Some(2));
        assert_eq!((2..=4).map(|j| path.column(j).unwrap()).collect::<Vec<_>>(), vec![1, 1, 1]);
        assert_eq!(path.inserted_values, vec![2, 3, 4, 7]);
    }

    #[test]
    fn rs_uninsert_examples() {
        let (u, x) = t(&[&[1, 2], &[3, 5], &[4, 6]]).rs_uninsert((3, 2)).unwrap();
        assert_eq!((u, x), (t(&[&[1, 5], &[3, 6], &[4]]), 2));
        let (u, x) = t(&[&[5]]).rs_uninsert((1, 1)).unwrap();
        assert_eq!((u, x), (Tableau::empty(), 5));
        let (u, x) = t(&[&[1, 2], &[3], &[4]]).rs_uninsert((3, 1)).unwrap();
        assert_eq!((u, x), (t(&[&[1, 3], &[4]]), 2));
        assert!(t(&[&[1, 2], &[3]]).rs_uninsert((1, 1)).is_err());
    }

    #[test]
    fn pq_examples() {
        let w: Permutation = "31425".parse().unwrap();
        assert_eq!(pq_rs(&w), (t(&[&[1, 2, 5], &[3, 4]]), t(&[&[1, 3, 5], &[2, 4]])));
        let w: Permutation = "24135".parse().unwrap();
        assert_eq!(pq_rs(&w), (t(&[&[1, 3, 5], &[2, 4]]), t(&[&[1, 2, 5], &[3, 4]])));
        let w: Permutation = "123".parse().unwrap();
        assert_eq!(pq_rs(&w), (t(&[&[1, 2, 3]]), t(&[&[1, 2, 3]])));
    }

    #[test]
    fn reading_words() {
        assert_eq!(t(&[&[1, 2, 5], &[3, 4]]).reading_word(), vec![3, 4, 1, 2, 5]);
        assert_eq!(t(&[&[1, 2, 3]]).reading_word(), vec![1, 2, 3]);
        assert_eq!(t(&[&[1], &[2], &[3]]).reading_word(), vec![3, 2, 1]);
    }

    #[test]
    fn dual_equiv_examples() {
        assert_eq!(t(&[&[1, 3, 5], &[2, 4]]).dual_equiv(4).unwrap(), t(&[&[1, 3, 4], &[2, 5]]));
        assert_eq!(t(&[&[1, 3, 4], &[2, 5]]).dual_equiv(3).unwrap(), t(&[&[1, 3, 4], &[2, 5]]));
        assert_eq!(t(&[&[1, 2, 5], &[3, 4]]).dual_equiv(2).unwrap(), t(&[&[1, 3, 5], &[2, 4]]));
        assert_eq!(t(&[&[1, 3, 5], &[2, 4]]).dual_equiv(3).unwrap(), t(&[&[1, 2, 5], &[3, 4]]));
        assert!(t(&[&[1, 2]]).dual_equiv(2).is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(t(&[&[1, 2], &[3]]).transpose(), t(&[&[1, 3], &[2]]));
        assert_eq!(Tableau::empty().transpose(), Tableau::empty());
        assert_eq!(t(&[&[1, 2, 3], &[4]]).transpose(), t(&[&[1, 4], &[2], &[3]]));
    }

    #[test]
    fn restrict_examples() {
        let set = |xs: &[u32]| xs.iter().copied().collect::<BTreeSet<u32>>();
        assert_eq!(t(&[&[1, 2, 9], &[3, 5]]).restrict_to(&set(&[1, 2, 3])).unwrap(), t(&[&[1, 2], &[3]]));
        let big = t(&[&[1, 2, 9], &[3, 5]]);
        assert_eq!(big.restrict_to(&set(&[1, 2, 3, 5, 9])).unwrap(), big);
        assert_eq!(t(&[&[1, 2], &[3, 4]]).restrict_to(&set(&[1, 2])).unwrap(), t(&[&[1, 2]]));
        assert_eq!(t(&[&[1, 2], &[3, 4]]).restrict_to(&set(&[2, 4])), Err(Error::BadRestriction));
        assert_eq!(t(&[&[1, 3], &[2]]).restrict_to(&set(&[1, 2])), Ok(t(&[&[1], &[2]])));
        assert_eq!(t(&[&[1, 3], &[2]]).restrict_to(&set(&[2])), Err(Error::BadRestriction));
    }

    #[test]
    fn odd_line_examples() {
        assert_eq!(t(&[&[1, 2, 3, 4], &[5, 7], &[6]]).odd_lines(Direction::Columns), 3);
        assert_eq!(t(&[&[1, 2, 3], &[4, 5], &[6], &[7]]).odd_lines(Direction::Rows), 3);
        assert_eq!(Tableau::empty().odd_lines(Direction::Rows), 0);
    }

    #[test]
    fn standard_tableaux_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| standard_tableaux(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76, 232]);
        assert!(standard_tableaux(5).iter().all(Tableau::is_standard));
    }

    #[test]
    fn reading_word_recovers_tableau() {
        for n in 0..=7 {
            for tab in standard_tableaux(n) {
                let w = Permutation::new(tab.reading_word()).unwrap();
                assert_eq!(pq_rs(&w).0, tab);
            }
        }
    }

    #[test]
    fn inverse_swaps_p_and_q() {
        for n in 1..=6 {
            for w in enumerate_permutations(n) {
                let (p, q) = pq_rs(&w);
                assert_eq!(pq_rs(&w.inverse()), (q, p));
            }
        }
    }

    #[test]
    fn dual_equiv_is_involution_on_standard() {
        for n in 3..=7 {
            for tab in standard_tableaux(n) {
                for i in 2..n as u32 {
                    let d = tab.dual_equiv(i).unwrap();
                    assert!(d.is_standard());
                    assert_eq!(d.shape(), tab.shape());
                    assert_eq!(d.dual_equiv(i).unwrap(), tab);
                }
            }
        }
    }

    #[test]
    fn knuth_moves_match_dual_equivalence() {
        for n in 3..=6 {
            for v in enumerate_permutations(n) {
                let (pv, qv) = pq_rs(&v);
                for i in 2..n {
                    let w = v.knuth_move(i, false).unwrap();
                    let (pw, qw) = pq_rs(&w);
                    assert_eq!(pv, pw);
                    assert_eq!(qv, qw.dual_equiv(i as u32).unwrap());
                    let w = v.knuth_move(i, true).unwrap();
                    let (pw, qw) = pq_rs(&w);
                    assert_eq!(pv, pw.dual_equiv(i as u32).unwrap());
                    assert_eq!(qv, qw);
                }
            }
        }
    }

    #[test]
    fn column_insert_examples() {
        let (out, cell) = t(&[&[2, 3], &[4]]).column_insert(1).unwrap();
        assert_eq!(out, t(&[&[1, 2, 3], &[4]]));
        assert_eq!(cell, (1, 3));
        let (out, cell) = t(&[&[1, 3], &[2]]).column_insert(4).unwrap();
        assert_eq!(out, t(&[&[1, 3], &[2], &[4]]));
        assert_eq!(cell, (3, 1));
        let (out, cell) = Tableau::empty().column_insert(2).unwrap();
        assert_eq!((out, cell), (t(&[&[2]]), (1, 1)));
    }
}
