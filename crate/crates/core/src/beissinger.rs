//! Row and column Beissinger insertion and the bijections they induce
//! between involutions and standard tableaux.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::perm::{enumerate_involutions, Involution};
use crate::tableau::Tableau;

/// Which column Beissinger operation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CbsVariant {
    /// Row-bump `a`, then put `b` at the end of the next column.
    Standard,
    /// Column-bump `a`, then put `b` at the end of the next row.
    Transposed,
}

fn check_pair(t: &Tableau, a: u32, b: u32) -> Result<()> {
    if a > b || a == 0 {
        return Err(Error::Parse(format!("expected 0 < a <= b, got ({a}, {b})")));
    }
    for v in [a, b] {
        if t.contains(v) {
            return Err(Error::DuplicateEntry(v));
        }
    }
    Ok(())
}

fn finish(rows: Vec<Vec<u32>>, a: u32, b: u32) -> Result<Tableau> {
    Tableau::new(rows).map_err(|_| Error::NotPartiallyStandard { a, b })
}

fn append_to_row(mut rows: Vec<Vec<u32>>, row: usize, b: u32) -> Vec<Vec<u32>> {
    if row > rows.len() {
        rows.push(vec![b]);
    } else {
        rows[row - 1].push(b);
    }
    rows
}

/// Puts `b` directly below the last cell of column `col`. The callers only
/// use columns whose next cell extends the shape to a partition.
fn append_to_column(mut rows: Vec<Vec<u32>>, col: usize, b: u32) -> Vec<Vec<u32>> {
    let height = rows.iter().take_while(|r| r.len() >= col).count();
    if height == rows.len() {
        debug_assert_eq!(col, 1);
        rows.push(vec![b]);
    } else {
        debug_assert_eq!(rows[height].len() + 1, col);
        rows[height].push(b);
    }
    rows
}

/// The filling produced by `T ←rBS (a, b)`, which always has partition
/// shape but need not increase down columns or along rows.
pub fn rbs_insert_raw(t: &Tableau, a: u32, b: u32) -> Result<Vec<Vec<u32>>> {
    check_pair(t, a, b)?;
    if a == b {
        return Ok(append_to_row(t.rows().to_vec(), 1, b));
    }
    let (u, path) = t.rs_insert(a)?;
    let (row, _) = path.new_cell();
    Ok(append_to_row(u.into_rows(), row + 1, b))
}

/// Row Beissinger insertion `T ←rBS (a, b)`; errors unless the result is
/// partially standard.
pub fn rbs_insert(t: &Tableau, a: u32, b: u32) -> Result<Tableau> {
    finish(rbs_insert_raw(t, a, b)?, a, b)
}

/// The filling produced by column Beissinger insertion, before validation.
pub fn cbs_insert_raw(t: &Tableau, a: u32, b: u32, variant: CbsVariant) -> Result<Vec<Vec<u32>>> {
    check_pair(t, a, b)?;
    Ok(match variant {
        CbsVariant::Standard => {
            if a == b {
                append_to_column(t.rows().to_vec(), 1, b)
            } else {
                let (u, path) = t.rs_insert(a)?;
                let (_, col) = path.new_cell();
                append_to_column(u.into_rows(), col + 1, b)
            }
        }
        CbsVariant::Transposed => {
            if a == b {
                append_to_row(t.rows().to_vec(), 1, b)
            } else {
                let (u, (row, _)) = t.column_insert(a)?;
                append_to_row(u.into_rows(), row + 1, b)
            }
        }
    })
}

/// Column Beissinger insertion, in either the standard or transposed form;
/// errors unless the result is partially standard.
pub fn cbs_insert(t: &Tableau, a: u32, b: u32, variant: CbsVariant) -> Result<Tableau> {
    finish(cbs_insert_raw(t, a, b, variant)?, a, b)
}

/// `P_rBS(y)`: insert the cycles of `y` in order of their larger entries.
pub fn p_rbs(y: &Involution) -> Tableau {
    y.cycles_sorted()
        .into_iter()
        .fold(Tableau::empty(), |t, (a, b)| {
            rbs_insert(&t, a, b).expect("insertion order keeps the tableau standard")
        })
}

/// `P_cBS(y)`.
pub fn p_cbs(y: &Involution) -> Tableau {
    y.cycles_sorted()
        .into_iter()
        .fold(Tableau::empty(), |t, (a, b)| {
            cbs_insert(&t, a, b, CbsVariant::Standard)
                .expect("insertion order keeps the tableau standard")
        })
}

/// `∅ ⇐cBS (a_1,b_1) ⇐cBS ...`, which equals the transpose of `P_cBS(y)`.
pub fn p_cbs_transposed(y: &Involution) -> Tableau {
    y.cycles_sorted()
        .into_iter()
        .fold(Tableau::empty(), |t, (a, b)| {
            cbs_insert(&t, a, b, CbsVariant::Transposed)
                .expect("insertion order keeps the tableau standard")
        })
}

fn involution_from_pairs(n: usize, pairs: &[(u32, u32)]) -> Involution {
    let mut word = vec![0u32; n];
    for &(a, b) in pairs {
        word[a as usize - 1] = b;
        word[b as usize - 1] = a;
    }
    Involution::from_word(word).expect("pairs partition [n]")
}

/// Inverse of [`p_cbs`].
pub fn p_cbs_inverse(t: &Tableau) -> Result<Involution> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = t.size();
    let mut cur = t.clone();
    let mut pairs = Vec::new();
    while let Some(b) = cur.max_entry() {
        let (row, col) = cur.position(b).expect("max entry is present");
        let mut rows = cur.into_rows();
        rows[row - 1].pop();
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        let stripped = Tableau::new(rows).expect("removing the largest entry keeps a tableau");
        if col == 1 {
            pairs.push((b, b));
            cur = stripped;
        } else {
            let corner = (stripped.column_len(col - 1), col - 1);
            let (u, a) = stripped.rs_uninsert(corner)?;
            pairs.push((a, b));
            cur = u;
        }
    }
    Ok(involution_from_pairs(n, &pairs))
}

/// Inverse of [`p_rbs`], mirroring [`p_cbs_inverse`] with rows and columns
/// exchanged.
pub fn p_rbs_inverse(t: &Tableau) -> Result<Involution> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = t.size();
    let mut cur = t.clone();
    let mut pairs = Vec::new();
    while let Some(b) = cur.max_entry() {
        let (row, _) = cur.position(b).expect("max entry is present");
        let mut rows = cur.into_rows();
        rows[row - 1].pop();
        if rows[row - 1].is_empty() {
            rows.pop();
        }
        let stripped = Tableau::new(rows).expect("removing the largest entry keeps a tableau");
        if row == 1 {
            pairs.push((b, b));
            cur = stripped;
        } else {
            let corner = (row - 1, stripped.rows()[row - 2].len());
            let (u, a) = stripped.rs_uninsert(corner)?;
            pairs.push((a, b));
            cur = u;
        }
    }
    Ok(involution_from_pairs(n, &pairs))
}

/// `Ψ(y)`: the involution `z` with `P_rBS(y) = P_cBS(z)^T`.
pub fn psi(y: &Involution) -> Involution {
    p_cbs_inverse(&p_rbs(y).transpose()).expect("P_rBS is standard")
}

/// Cycle structure of `Ψ` acting on `I_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiCycleStats {
    pub n: usize,
    pub longest_cycle: usize,
    pub fixed_points: Vec<Involution>,
    /// Each orbit starting at its lexicographically least element.
    pub orbits: Vec<Vec<Involution>>,
}

pub fn psi_cycle_stats(n: usize) -> PsiCycleStats {
    let all: Vec<Involution> = enumerate_involutions(n).collect();
    let index: std::collections::HashMap<&Involution, usize> =
        all.iter().enumerate().map(|(k, y)| (y, k)).collect();
    let image: Vec<usize> = all.iter().map(|y| index[&psi(y)]).collect();
    let mut seen = vec![false; all.len()];
    let mut orbits = Vec::new();
    // lexicographic enumeration means the first unseen element is the orbit minimum
    for start in 0..all.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            orbit.push(all[k].clone());
            k = image[k];
        }
        orbits.push(orbit);
    }
    let longest_cycle = orbits.iter().map(Vec::len).max().unwrap_or(0);
    let fixed_points = orbits
        .iter()
        .filter(|o| o.len() == 1)
        .map(|o| o[0].clone())
        .collect();
    PsiCycleStats {
        n,
        longest_cycle,
        fixed_points,
        orbits,
    }
}

/// The `Ψ`-orbit of `y`, starting at `y`.
pub fn psi_orbit(y: &Involution) -> Vec<Involution> {
    let mut orbit = vec![y.clone()];
    loop {
        let next = psi(orbit.last().unwrap());
        if &next == y {
            return orbit;
        }
        orbit.push(next);
    }
}

fn check_inner(n: usize, i: usize) -> Result<()> {
    if i <= 1 || i >= n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

fn strictly_between<T: PartialOrd>(m: T, a: T, b: T) -> bool {
    (a < m && m < b) || (b < m && m < a)
}

/// The unique `z` with `P_rBS(y) = D_i(P_rBS(z))`, by the four-case rule on
/// the values of `y` at `i-1, i, i+1`.
pub fn simrbs_partner(y: &Involution, i: usize) -> Result<Involution> {
    check_inner(y.n(), i)?;
    let i32_ = i as u32;
    let window: BTreeSet<u32> = [i32_ - 1, i32_, i32_ + 1].into_iter().collect();
    let (lo, mid, hi) = (y.at(i - 1), y.at(i), y.at(i + 1));
    let image: BTreeSet<u32> = [lo, mid, hi].into_iter().collect();
    Ok(if image == window {
        y.conj_by_transposition(i32_ - 1, i32_ + 1)
    } else if strictly_between(mid, lo, hi) {
        y.clone()
    } else if strictly_between(hi, lo, mid) {
        y.conj_by_transposition(i32_ - 1, i32_)
    } else {
        y.conj_by_transposition(i32_, i32_ + 1)
    })
}

/// The unique `z` with `P_cBS(y) = D_i(P_cBS(z))`, by the three-case rule on
/// the signed values `e(j)`: `y(j)` off the window, `-j` at fixed points and
/// `j` for other window-internal cycles.
pub fn simcbs_partner(y: &Involution, i: usize) -> Result<Involution> {
    check_inner(y.n(), i)?;
    let i32_ = i as u32;
    let in_window = |v: u32| v + 1 >= i32_ && v <= i32_ + 1;
    let e = |j: u32| -> i64 {
        let v = y.at(j as usize);
        if !in_window(v) {
            v as i64
        } else if v == j {
            -(j as i64)
        } else {
            j as i64
        }
    };
    let (lo, mid, hi) = (e(i32_ - 1), e(i32_), e(i32_ + 1));
    Ok(if strictly_between(mid, lo, hi) {
        y.clone()
    } else if strictly_between(hi, lo, mid) {
        y.conj_by_transposition(i32_ - 1, i32_)
    } else {
        y.conj_by_transposition(i32_, i32_ + 1)
    })
}
