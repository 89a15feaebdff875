//! Permutations and involutions of `[n] = {1, ..., n}` in one-line notation.
//!
//! All indices and values at the API boundary are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `[n]` stored by its one-line word `w(1) w(2) ... w(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_simple(n, i)?;
        let mut p = Self::identity(n);
        p.word.swap(i - 1, i);
        Ok(p)
    }

    /// Builds the permutation of `[n]` whose non-trivial cycles are `cycles`.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut word: Vec<u32> = (1..=n as u32).collect();
        let mut touched = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a as usize > n || touched[a as usize] {
                    return Err(Error::NotPermutation(format!("{cycles:?}")));
                }
                touched[a as usize] = true;
                word[a as usize - 1] = b;
            }
        }
        Permutation::new(word)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// `w(i)` for `i` in `[n]`.
    pub fn at(&self, i: usize) -> u32 {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// The composition `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        debug_assert_eq!(self.n(), other.n());
        Permutation {
            word: other.word.iter().map(|&v| self.word[v as usize - 1]).collect(),
        }
    }

    /// Number of inversions, i.e. Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_involution(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| self.word[v as usize - 1] as usize == i + 1)
    }

    /// `t · w · t` for the transposition `t = (a, b)`.
    pub fn conj_by_transposition(&self, a: u32, b: u32) -> Self {
        let swap = |v: u32| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        };
        let mut word: Vec<u32> = self.word.iter().map(|&v| swap(v)).collect();
        word.swap(a as usize - 1, b as usize - 1);
        Permutation { word }
    }

    /// `s_i · w · s_i`.
    pub fn conj_by_s(&self, i: usize) -> Result<Self> {
        check_simple(self.n(), i)?;
        Ok(self.conj_by_transposition(i as u32, i as u32 + 1))
    }

    /// Left multiplication by `s_i`: swaps the values `i` and `i+1`.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let (a, b) = (i as u32, i as u32 + 1);
        Permutation {
            word: self
                .word
                .iter()
                .map(|&v| if v == a { b } else if v == b { a } else { v })
                .collect(),
        }
    }

    /// Right multiplication by `s_i`: swaps the letters in positions `i` and `i+1`.
    pub fn right_mul_s(&self, i: usize) -> Self {
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// The Knuth move on the window at positions `i-1, i, i+1`, or its dual.
    ///
    /// Monotone windows are returned unchanged.
    pub fn knuth_move(&self, i: usize, dual: bool) -> Result<Self> {
        let n = self.n();
        if i <= 1 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if dual {
            return Ok(self.inverse().knuth_move(i, false)?.inverse());
        }
        let (p, q, r) = (self.word[i - 2], self.word[i - 1], self.word[i]);
        let mut word = self.word.clone();
        // swap the smallest and largest letters unless the window is monotone
        if !((p < q && q < r) || (p > q && q > r)) {
            let lo = p.min(q).min(r);
            let hi = p.max(q).max(r);
            for v in &mut word[i - 2..=i] {
                if *v == lo {
                    *v = hi;
                } else if *v == hi {
                    *v = lo;
                }
            }
        }
        Ok(Permutation { word })
    }

    /// Positions `i` in `[n-1]` with `ℓ(s_i w) < ℓ(w)`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n()).filter(|&i| inv.at(i) > inv.at(i + 1)).collect()
    }

    /// Positions `i` in `[n-1]` with `ℓ(w s_i) < ℓ(w)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// Lexicographically first reduced word, built by repeatedly stripping
    /// the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.left_descents().first() {
            out.push(i);
            w = w.left_mul_s(i);
        }
        out
    }

    /// Cycle decomposition, each cycle starting at its least element,
    /// cycles ordered by least element. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut v = self.at(start as usize);
            while v != start {
                seen[v as usize] = true;
                cycle.push(v);
                v = self.at(v as usize);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with fixed points omitted; the identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        if parts.is_empty() {
            "()".to_string()
        } else {
            parts.concat()
        }
    }

    /// Parses a one-line word (`4231`, `4,2,3,1`, `[4,2,3,1]`) or, when `n` is
    /// given, cycle notation such as `(1,4)(2,3)`.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let max = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
            let n = n.unwrap_or(max);
            if max > n {
                return Err(Error::Parse(format!("cycle entry exceeds n = {n}: {s}")));
            }
            return Permutation::from_cycles(n, &cycles);
        }
        let body = s.trim_start_matches('[').trim_end_matches(']');
        let word: Vec<u32> = if body.contains(',') || body.contains(' ') {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("bad one-line word: {s}")))
                })
                .collect::<Result<_>>()?
        };
        let p = Permutation::new(word)?;
        match n {
            Some(n) if n > p.n() => Ok(p.extend(n)),
            Some(n) if n < p.n() => Err(Error::Parse(format!("word longer than n = {n}: {s}"))),
            _ => Ok(p),
        }
    }

    /// Embeds into `S_m` (`m ≥ n`) by fixing `n+1, ..., m`.
    pub fn extend(&self, m: usize) -> Self {
        let mut word = self.word.clone();
        word.extend(self.n() as u32 + 1..=m as u32);
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() < 10 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {s}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s}")))?;
        let inner = &open[..close];
        let cycle: Vec<u32> = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("{t}: {e}"))))
            .collect::<Result<_>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn check_simple(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

/// Outcome of comparing `z` with `s_i z s_i` in Bruhat order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjCompare {
    Lower,
    Equal,
    Higher,
}

/// A permutation equal to its own inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Involution(Permutation);

impl TryFrom<Vec<u32>> for Involution {
    type Error = Error;

    fn try_from(word: Vec<u32>) -> Result<Self> {
        Involution::new(Permutation::new(word)?)
    }
}

impl From<Involution> for Vec<u32> {
    fn from(y: Involution) -> Self {
        y.0.word
    }
}

impl Involution {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_involution() {
            Ok(Involution(perm))
        } else {
            Err(Error::NotInvolution(perm.to_string()))
        }
    }

    pub fn from_word(word: Vec<u32>) -> Result<Self> {
        Involution::new(Permutation::new(word)?)
    }

    pub fn identity(n: usize) -> Self {
        Involution(Permutation::identity(n))
    }

    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        Involution::new(Permutation::parse(s, n)?)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn at(&self, i: usize) -> u32 {
        self.0.at(i)
    }

    pub fn word(&self) -> &[u32] {
        self.0.word()
    }

    pub fn length(&self) -> usize {
        self.0.length()
    }

    /// All pairs `(a, b)` with `a ≤ b = y(a)`, sorted by increasing `b`.
    pub fn cycles_sorted(&self) -> Vec<(u32, u32)> {
        (1..=self.n() as u32)
            .filter_map(|b| {
                let a = self.at(b as usize);
                (a <= b).then_some((a, b))
            })
            .collect()
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (1..=self.n() as u32)
            .filter(|&i| self.at(i as usize) == i)
            .collect()
    }

    pub fn conj_by_s(&self, i: usize) -> Result<Self> {
        Ok(Involution(self.0.conj_by_s(i)?))
    }

    pub fn conj_by_transposition(&self, a: u32, b: u32) -> Self {
        Involution(self.0.conj_by_transposition(a, b))
    }

    /// Compares `z` with `s_i z s_i` in Bruhat order.
    pub fn conj_compare(&self, i: usize) -> Result<ConjCompare> {
        check_simple(self.n(), i)?;
        let (a, b) = (self.at(i), self.at(i + 1));
        Ok(if a == i as u32 + 1 || (a == i as u32 && b == i as u32 + 1) {
            ConjCompare::Equal
        } else if a < b {
            ConjCompare::Higher
        } else {
            ConjCompare::Lower
        })
    }

    pub fn extend(&self, m: usize) -> Self {
        Involution(self.0.extend(m))
    }

    pub fn cycle_string(&self) -> String {
        self.0.cycle_string()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Every involution of `[n]`, in lexicographic order of one-line words.
pub fn enumerate_involutions(n: usize) -> impl Iterator<Item = Involution> {
    fn fill(word: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        // first unassigned position
        let Some(pos) = word.iter().position(|&v| v == 0) else {
            out.push(word.clone());
            return;
        };
        let n = word.len();
        let i = pos as u32 + 1;
        // partners are tried in increasing order, which keeps the output lexicographic
        for j in i..=n as u32 {
            if word[j as usize - 1] != 0 && j != i {
                continue;
            }
            word[pos] = j;
            word[j as usize - 1] = i;
            fill(word, out);
            word[pos] = 0;
            word[j as usize - 1] = 0;
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![0; n], &mut out);
    out.into_iter().map(|w| Involution(Permutation { word: w }))
}

/// Every permutation of `[n]` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation { word: word.clone() }];
    // standard next-permutation sweep
    loop {
        let Some(k) = (0..word.len().saturating_sub(1)).rev().find(|&k| word[k] < word[k + 1]) else {
            break;
        };
        let l = (k + 1..word.len()).rev().find(|&l| word[k] < word[l]).unwrap();
        word.swap(k, l);
        word[k + 1..].reverse();
        out.push(Permutation { word: word.clone() });
    }
    out
}

/// Integer partitions of `n` in reverse lexicographic order, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One permutation per conjugacy class of `S_n`: consecutive cycles with the
/// lengths of each partition of `n`.
pub fn class_representatives(n: usize) -> Vec<Permutation> {
    partitions(n)
        .into_iter()
        .map(|parts| {
            let mut start = 1u32;
            let cycles: Vec<Vec<u32>> = parts
                .iter()
                .map(|&len| {
                    let c: Vec<u32> = (start..start + len as u32).collect();
                    start += len as u32;
                    c
                })
                .collect();
            Permutation::from_cycles(n, &cycles).expect("consecutive cycles form a permutation")
        })
        .collect()
}
