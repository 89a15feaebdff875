//! The Iwahori-Hecke algebra of `S_n` over `Z[x, x^{-1}]`, its bar involution
//! and the Kazhdan-Lusztig basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::perm::{enumerate_permutations, Permutation};
use crate::wgraph::{Side, WGraph};

/// A finite combination `Σ c_w H_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::new() }
    }

    /// The standard basis element `H_w`.
    pub fn basis(w: Permutation) -> Self {
        Self::term(w, LaurentPoly::one())
    }

    pub fn term(w: Permutation, c: LaurentPoly) -> Self {
        let mut h = Self::zero(w.n());
        h.add_term(w, &c);
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, LaurentPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: &LaurentPoly) {
        add_into(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> HeckeElement {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> HeckeElement {
        let mut out = Self::zero(self.n);
        for (w, d) in &self.terms {
            out.add_term(w.clone(), &(d * c));
        }
        out
    }

    /// Product `self · other`, expanding `self` through reduced words.
    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let mut acc = other.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = h_s_mul(i, &acc)?;
            }
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})H_{w}")?;
        }
        Ok(())
    }
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, LaurentPoly>, k: K, c: &LaurentPoly) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn check_generator(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    Ok(())
}

/// Left multiplication by `H_{s_i}`.
pub fn h_s_mul(i: usize, h: &HeckeElement) -> Result<HeckeElement> {
    check_generator(h.n, i)?;
    let q = LaurentPoly::x_minus_x_inv();
    let mut out = HeckeElement::zero(h.n);
    for (w, c) in &h.terms {
        let sw = w.left_mul_s(i);
        let descent = sw.length() < w.length();
        out.add_term(sw, c);
        if descent {
            out.add_term(w.clone(), &(c * &q));
        }
    }
    Ok(out)
}

/// Memo table for `bar(H_w)`.
#[derive(Debug, Default)]
pub struct BarCache {
    cache: HashMap<Permutation, HeckeElement>,
}

impl BarCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `bar(H_w) = (H_s - (x - x^{-1})) · bar(H_{sw})` for a left descent `s`.
    pub fn bar_standard(&mut self, w: &Permutation) -> HeckeElement {
        if let Some(h) = self.cache.get(w) {
            return h.clone();
        }
        let out = match w.left_descents().first() {
            None => HeckeElement::basis(w.clone()),
            Some(&i) => {
                let rest = self.bar_standard(&w.left_mul_s(i));
                let q = LaurentPoly::x_minus_x_inv();
                h_s_mul(i, &rest).expect("descent index is in range").sub(&rest.scale(&q))
            }
        };
        self.cache.insert(w.clone(), out.clone());
        out
    }

    pub fn bar(&mut self, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(h.n);
        for (w, c) in &h.terms {
            out = out.add(&self.bar_standard(w).scale(&c.bar()));
        }
        out
    }
}

/// The bar involution on `H`.
pub fn h_bar(h: &HeckeElement) -> HeckeElement {
    BarCache::new().bar(h)
}

/// The Kazhdan-Lusztig basis of `H(S_n)`, stored by dense index.
///
/// Elements are ordered by length, then lexicographically.
#[derive(Debug, Clone)]
pub struct KlBasis {
    n: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    columns: Vec<BTreeMap<usize, LaurentPoly>>,
    mu: BTreeMap<(usize, usize), i64>,
}

#[derive(Serialize)]
struct KlExport<'a> {
    n: usize,
    elements: &'a [Permutation],
    columns: Vec<Vec<(usize, &'a LaurentPoly)>>,
    mu: Vec<(usize, usize, i64)>,
}

/// Builds the KL basis by the usual length-increasing recursion
/// `C_w = (H_s + x^{-1}) C_{sw} - Σ μ(y, sw) C_y` over `y` with `sy < y`.
pub fn kl_basis(n: usize) -> KlBasis {
    let mut elements = enumerate_permutations(n);
    elements.sort_by_key(|w| w.length());
    let index: HashMap<Permutation, usize> =
        elements.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
    let lengths: Vec<usize> = elements.iter().map(|w| w.length()).collect();
    let lmul: Vec<Vec<usize>> = (1..n.max(1))
        .map(|i| elements.iter().map(|w| index[&w.left_mul_s(i)]).collect())
        .collect();
    let xi = LaurentPoly::x_inv();
    let q = LaurentPoly::x_minus_x_inv();

    let mut columns: Vec<BTreeMap<usize, LaurentPoly>> = Vec::with_capacity(elements.len());
    let mut mu: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    // μ(y, v) grouped by v, for the correction sum
    let mut mu_by_col: Vec<Vec<(usize, i64)>> = vec![Vec::new(); elements.len()];
    for (w_idx, w) in elements.iter().enumerate() {
        let col = match w.left_descents().first() {
            None => BTreeMap::from([(w_idx, LaurentPoly::one())]),
            Some(&i) => {
                let table = &lmul[i - 1];
                let v = table[w_idx];
                let mut col: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
                for (&y, c) in &columns[v] {
                    let sy = table[y];
                    add_into(&mut col, sy, c);
                    if lengths[sy] < lengths[y] {
                        add_into(&mut col, y, &(c * &q));
                    }
                    add_into(&mut col, y, &(c * &xi));
                }
                for &(y, m) in &mu_by_col[v] {
                    if lengths[table[y]] < lengths[y] {
                        for (&u, c) in &columns[y] {
                            add_into(&mut col, u, &c.scale(-m));
                        }
                    }
                }
                col
            }
        };
        for (&y, c) in &col {
            if y != w_idx {
                let m = c.coeff(-1);
                if m != 0 {
                    mu.insert((y, w_idx), m);
                    mu_by_col[w_idx].push((y, m));
                }
            }
        }
        columns.push(col);
    }
    KlBasis { n, elements, index, lengths, columns, mu }
}

impl KlBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// `h_{yw}`, the coefficient of `H_y` in the KL basis element of `w`.
    pub fn h(&self, y: &Permutation, w: &Permutation) -> LaurentPoly {
        match (self.index_of(y), self.index_of(w)) {
            (Some(a), Some(b)) => self.columns[b].get(&a).cloned().unwrap_or_default(),
            _ => LaurentPoly::zero(),
        }
    }

    pub fn mu(&self, y: &Permutation, w: &Permutation) -> i64 {
        match (self.index_of(y), self.index_of(w)) {
            (Some(a), Some(b)) => self.mu.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Nonzero `μ(y, w)` keyed by dense indices.
    pub fn mu_table(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.mu
    }

    pub fn element(&self, w: &Permutation) -> Option<HeckeElement> {
        let k = self.index_of(w)?;
        let mut h = HeckeElement::zero(self.n);
        for (&y, c) in &self.columns[k] {
            h.add_term(self.elements[y].clone(), c);
        }
        Some(h)
    }

    /// Checks bar invariance, unitriangularity, and `h_{yw} ∈ N[x^{-1}]`.
    pub fn verify(&self) -> Result<()> {
        let mut cache = BarCache::new();
        for (k, w) in self.elements.iter().enumerate() {
            let col = &self.columns[k];
            if col.get(&k) != Some(&LaurentPoly::one()) {
                return Err(Error::Verification(format!("diagonal entry at {w} is not 1")));
            }
            for (&y, c) in col {
                if y == k {
                    continue;
                }
                if self.lengths[y] >= self.lengths[k] || !c.in_neg_span() {
                    return Err(Error::Verification(format!(
                        "h({}, {w}) = {c} breaks triangularity",
                        self.elements[y]
                    )));
                }
                if c.terms().iter().any(|&(_, a)| a < 0) {
                    return Err(Error::Verification(format!(
                        "h({}, {w}) = {c} has a negative coefficient",
                        self.elements[y]
                    )));
                }
            }
            let h = self.element(w).expect("element is in the basis");
            if cache.bar(&h) != h {
                return Err(Error::Verification(format!("basis element of {w} is not bar invariant")));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let export = KlExport {
            n: self.n,
            elements: &self.elements,
            columns: self.columns.iter().map(|c| c.iter().map(|(&y, p)| (y, p)).collect()).collect(),
            mu: self.mu.iter().map(|(&(y, w), &m)| (y, w, m)).collect(),
        };
        serde_json::to_string(&export).expect("KL tables serialize")
    }
}

/// Left or right KL cells of `S_n`, each sorted, ordered by least element.
pub fn kl_cells(n: usize, side: Side) -> Vec<Vec<Permutation>> {
    let basis = kl_basis(n);
    let g = WGraph::kazhdan_lusztig(&basis, side, true);
    g.cells()
        .components
        .iter()
        .map(|c| {
            let mut ws: Vec<Permutation> = c.iter().map(|&v| g.vertices()[v].clone()).collect();
            ws.sort();
            ws
        })
        .collect()
}
