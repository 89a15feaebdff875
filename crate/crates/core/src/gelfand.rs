//! The Gelfand modules `M` and `N` of `H(S_n)`: vertices are fixed-point-free
//! involutions of `[2n]` obtained by embedding `I_n`, with weak and strict
//! descent data, a bar operator and a canonical basis.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::beissinger::{p_cbs, p_rbs};
use crate::error::{Error, Result};
use crate::hecke::add_into;
use crate::laurent::LaurentPoly;
use crate::perm::{enumerate_involutions, ConjCompare, Involution};
use crate::tableau::{Direction, Shape, Tableau};

/// Which embedding a vertex comes from. `Asc` vertices span `M`, `Des`
/// vertices span `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Asc,
    Des,
}

impl Variant {
    pub fn module_name(self) -> &'static str {
        match self {
            Variant::Asc => "M",
            Variant::Des => "N",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Asc => "asc",
            Variant::Des => "des",
        })
    }
}

/// A fixed-point-free involution of `[2n]` in `G^asc_n` or `G^des_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GelfandVertex {
    z: Involution,
    n: usize,
    variant: Variant,
}

/// `1_FPF`: pairs `2k-1 ↔ 2k`.
fn fpf_partner(i: u32) -> u32 {
    if i % 2 == 1 {
        i + 1
    } else {
        i - 1
    }
}

/// Sends the fixed points of `w` into `{n+1, ..., n+q}` (in increasing order
/// for `asc`, decreasing for `des`) and pairs the rest of `[2n]` as `1_FPF`.
pub fn embed(w: &Involution, variant: Variant) -> GelfandVertex {
    let n = w.n();
    let fixed = w.fixed_points();
    let q = fixed.len() as u32;
    let mut word = vec![0u32; 2 * n];
    for i in 1..=n as u32 {
        let v = w.at(i as usize);
        if v != i {
            word[i as usize - 1] = v;
        }
    }
    for (j, &c) in fixed.iter().enumerate() {
        let j = j as u32 + 1;
        let target = match variant {
            Variant::Asc => n as u32 + j,
            Variant::Des => n as u32 + q + 1 - j,
        };
        word[c as usize - 1] = target;
        word[target as usize - 1] = c;
    }
    for i in n as u32 + q + 1..=2 * n as u32 {
        word[i as usize - 1] = fpf_partner(i);
    }
    let z = Involution::from_word(word).expect("embedding yields an involution");
    GelfandVertex { z, n, variant }
}

/// The four weak/strict descent/ascent sets of a vertex, as subsets of `[n-1]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DescentData {
    pub des_eq: BTreeSet<usize>,
    pub asc_eq: BTreeSet<usize>,
    pub des_lt: BTreeSet<usize>,
    pub asc_lt: BTreeSet<usize>,
}

/// `i` is a visible descent of `z` when `z(i+1) < min(i, z(i))`.
pub fn visible_descents(z: &Involution) -> Vec<usize> {
    (1..z.n())
        .filter(|&i| z.at(i + 1) < (i as u32).min(z.at(i)))
        .collect()
}

impl GelfandVertex {
    /// Accepts `z` if it is the embedding of some involution of `[n]`.
    pub fn new(z: Involution, n: usize, variant: Variant) -> Result<Self> {
        if z.n() != 2 * n {
            return Err(Error::UnknownVertex(format!("{z} is not on [{}]", 2 * n)));
        }
        let word: Vec<u32> = (1..=n)
            .map(|i| {
                let v = z.at(i);
                if v as usize <= n {
                    v
                } else {
                    i as u32
                }
            })
            .collect();
        let w = Involution::from_word(word).map_err(|_| Error::UnknownVertex(z.to_string()))?;
        let v = embed(&w, variant);
        if v.z != z {
            return Err(Error::UnknownVertex(format!("{z} is not in G^{variant}_{n}")));
        }
        Ok(v)
    }

    pub fn parse(s: &str, n: usize, variant: Variant) -> Result<Self> {
        Self::new(Involution::parse(s, Some(2 * n))?, n, variant)
    }

    pub fn z(&self) -> &Involution {
        &self.z
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn at(&self, i: usize) -> u32 {
        self.z.at(i)
    }

    pub fn length(&self) -> usize {
        self.z.length()
    }

    /// The involution of `[n]` this vertex embeds.
    pub fn source(&self) -> Involution {
        let n = self.n;
        let word = (1..=n)
            .map(|i| if self.at(i) as usize <= n { self.at(i) } else { i as u32 })
            .collect();
        Involution::from_word(word).expect("vertex restricts to an involution")
    }

    pub fn descent_data(&self) -> DescentData {
        let n = self.n as u32;
        let mut d = DescentData::default();
        for i in 1..self.n {
            let (a, b) = (self.at(i), self.at(i + 1));
            if a == i as u32 + 1 {
                d.des_eq.insert(i);
            } else if a > n && b > n {
                d.asc_eq.insert(i);
            } else if a > b {
                d.des_lt.insert(i);
            } else {
                d.asc_lt.insert(i);
            }
        }
        d
    }

    /// `Asc^row` for `asc` vertices, `Asc^col` for `des` vertices.
    pub fn tau(&self) -> BTreeSet<usize> {
        (1..self.n)
            .filter(|&i| {
                let (a, b) = (self.at(i), self.at(i + 1));
                match self.variant {
                    Variant::Asc => a < b,
                    Variant::Des => a < b || a == i as u32 + 1,
                }
            })
            .collect()
    }

    /// Positions `i ≤ n` sent above `n`.
    pub fn transfer_points(&self) -> BTreeSet<usize> {
        (1..=self.n).filter(|&i| self.at(i) as usize > self.n).collect()
    }

    /// `P_rBS(z)|_[n]` for `asc`, `P_cBS(z)|_[n]` for `des`.
    pub fn hat_p(&self) -> Tableau {
        let full = match self.variant {
            Variant::Asc => p_rbs(&self.z),
            Variant::Des => p_cbs(&self.z),
        };
        let n = self.n as u32;
        full.restrict(|v| v <= n).expect("restriction to [n] is a tableau")
    }

    pub fn lambda_shape(&self) -> Shape {
        self.hat_p().shape()
    }

    /// `s_i z s_i`, which need not be a vertex.
    pub fn conj_by_s(&self, i: usize) -> Involution {
        self.z.conj_by_transposition(i as u32, i as u32 + 1)
    }

    pub fn conj_compare(&self, i: usize) -> ConjCompare {
        self.z.conj_compare(i).expect("index checked by caller")
    }
}

impl fmt::Display for GelfandVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.z)
    }
}

/// `ι_row` (append along odd columns) or `ι_col` (append along odd rows).
pub fn iota_line(t: &Tableau, direction: Direction) -> Result<Tableau> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let n = t.size() as u32;
    let mut rows = t.rows().to_vec();
    let mut next = n + 1;
    match direction {
        Direction::Rows => {
            let width = rows.first().map_or(0, |r| r.len());
            for c in 1..=width {
                if t.column_len(c) % 2 == 1 {
                    let h = t.column_len(c);
                    if h == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[h].push(next);
                    next += 1;
                }
            }
            if rows.len() < 2 && next <= 2 * n {
                rows.resize(2, Vec::new());
            }
            let mut row = 0;
            while next <= 2 * n {
                rows[row].push(next);
                next += 1;
                row = 1 - row;
            }
        }
        Direction::Columns => {
            for row in rows.iter_mut() {
                if row.len() % 2 == 1 {
                    row.push(next);
                    next += 1;
                }
            }
            while next <= 2 * n {
                rows[0].push(next);
                next += 1;
            }
        }
    }
    Tableau::new(rows)
}

/// How `H_{s_i}` acts on a basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    StrictAsc(usize),
    StrictDes(usize),
    WeakAsc,
    WeakDes,
}

/// A sparse combination of basis vectors of `M` or `N`, keyed by the
/// module's dense vertex index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    variant: Variant,
    coeffs: BTreeMap<usize, LaurentPoly>,
}

impl ModuleElement {
    pub fn zero(variant: Variant) -> Self {
        ModuleElement { variant, coeffs: BTreeMap::new() }
    }

    pub fn basis(variant: Variant, k: usize) -> Self {
        Self::term(variant, k, LaurentPoly::one())
    }

    pub fn term(variant: Variant, k: usize, c: LaurentPoly) -> Self {
        let mut e = Self::zero(variant);
        e.add_term(k, &c);
        e
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, LaurentPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, k: usize, c: &LaurentPoly) {
        add_into(&mut self.coeffs, k, c);
    }

    pub fn add_scaled(&mut self, other: &ModuleElement, c: &LaurentPoly) {
        for (&k, d) in &other.coeffs {
            self.add_term(k, &(d * c));
        }
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::one());
        out
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        out.add_scaled(other, &LaurentPoly::constant(-1));
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> ModuleElement {
        let mut out = Self::zero(self.variant);
        out.add_scaled(self, c);
        out
    }
}

/// The module `M` (`asc`) or `N` (`des`) for a fixed `n`.
///
/// Vertices are indexed in (length, lexicographic) order.
#[derive(Debug)]
pub struct GelfandModule {
    n: usize,
    variant: Variant,
    vertices: Vec<GelfandVertex>,
    index: HashMap<Involution, usize>,
    lengths: Vec<usize>,
    actions: Vec<Vec<Action>>,
    taus: Vec<BTreeSet<usize>>,
    bars: OnceLock<Vec<ModuleElement>>,
}

impl GelfandModule {
    pub fn new(n: usize, variant: Variant) -> Self {
        let mut vertices: Vec<GelfandVertex> =
            enumerate_involutions(n).map(|w| embed(&w, variant)).collect();
        vertices.sort_by(|a, b| (a.length(), a.z.word()).cmp(&(b.length(), b.z.word())));
        let index: HashMap<Involution, usize> =
            vertices.iter().enumerate().map(|(k, v)| (v.z.clone(), k)).collect();
        let lengths = vertices.iter().map(|v| v.length()).collect();
        let actions = vertices
            .iter()
            .map(|v| {
                let d = v.descent_data();
                (1..n)
                    .map(|i| {
                        if d.des_eq.contains(&i) {
                            Action::WeakDes
                        } else if d.asc_eq.contains(&i) {
                            Action::WeakAsc
                        } else {
                            let t = index[&v.conj_by_s(i)];
                            if d.des_lt.contains(&i) {
                                Action::StrictDes(t)
                            } else {
                                Action::StrictAsc(t)
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let taus = vertices.iter().map(|v| v.tau()).collect();
        GelfandModule { n, variant, vertices, index, lengths, actions, taus, bars: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[GelfandVertex] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> &GelfandVertex {
        &self.vertices[k]
    }

    pub fn index_of(&self, z: &Involution) -> Option<usize> {
        self.index.get(z).copied()
    }

    pub fn length(&self, k: usize) -> usize {
        self.lengths[k]
    }

    pub fn action(&self, k: usize, i: usize) -> Action {
        self.actions[k][i - 1]
    }

    pub fn tau(&self, k: usize) -> &BTreeSet<usize> {
        &self.taus[k]
    }

    fn check(&self, i: usize, e: &ModuleElement) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        if e.variant != self.variant {
            return Err(Error::VariantMismatch {
                expected: self.variant.module_name().into(),
                found: e.variant.module_name().into(),
            });
        }
        Ok(())
    }

    /// `H_{s_i} · e`.
    pub fn h_action(&self, i: usize, e: &ModuleElement) -> Result<ModuleElement> {
        self.check(i, e)?;
        Ok(self.act(i, e))
    }

    fn act(&self, i: usize, e: &ModuleElement) -> ModuleElement {
        let q = LaurentPoly::x_minus_x_inv();
        let (weak_asc, weak_des) = match self.variant {
            Variant::Asc => (-LaurentPoly::x_inv(), LaurentPoly::x()),
            Variant::Des => (LaurentPoly::x(), -LaurentPoly::x_inv()),
        };
        let mut out = ModuleElement::zero(self.variant);
        for (&k, c) in &e.coeffs {
            match self.actions[k][i - 1] {
                Action::StrictAsc(t) => out.add_term(t, c),
                Action::StrictDes(t) => {
                    out.add_term(t, c);
                    out.add_term(k, &(c * &q));
                }
                Action::WeakAsc => out.add_term(k, &(c * &weak_asc)),
                Action::WeakDes => out.add_term(k, &(c * &weak_des)),
            }
        }
        out
    }

    /// `(H_{s_i} + a) · e`.
    fn act_plus(&self, i: usize, e: &ModuleElement, a: &LaurentPoly) -> ModuleElement {
        let mut out = self.act(i, e);
        out.add_scaled(e, a);
        out
    }

    fn first_strict_descent(&self, k: usize, choice: DescentChoice) -> Option<usize> {
        let mut it = (1..self.n).filter(|&i| matches!(self.actions[k][i - 1], Action::StrictDes(_)));
        match choice {
            DescentChoice::Smallest => it.next(),
            DescentChoice::Largest => it.last(),
        }
    }

    fn bar_table(&self) -> &[ModuleElement] {
        self.bars.get_or_init(|| {
            let minus_q = -LaurentPoly::x_minus_x_inv();
            let mut table: Vec<ModuleElement> = Vec::with_capacity(self.len());
            for k in 0..self.len() {
                let b = match self.first_strict_descent(k, DescentChoice::Smallest) {
                    None => ModuleElement::basis(self.variant, k),
                    Some(i) => {
                        let w = match self.actions[k][i - 1] {
                            Action::StrictDes(w) => w,
                            _ => unreachable!(),
                        };
                        // vertices are length-sorted, so w < k is already done
                        self.act_plus(i, &table[w], &minus_q)
                    }
                };
                table.push(b);
            }
            table
        })
    }

    /// The bar operator of the module, computed basis vector by basis vector
    /// and memoized.
    pub fn bar_module(&self, e: &ModuleElement) -> Result<ModuleElement> {
        if e.variant != self.variant {
            return Err(Error::VariantMismatch {
                expected: self.variant.module_name().into(),
                found: e.variant.module_name().into(),
            });
        }
        let table = self.bar_table();
        let mut out = ModuleElement::zero(self.variant);
        for (&k, c) in &e.coeffs {
            out.add_scaled(&table[k], &c.bar());
        }
        Ok(out)
    }

    /// Builds the canonical basis in length order and checks triangularity.
    pub fn canonical_basis(&self, choice: DescentChoice) -> Result<CanonicalBasis> {
        let xi = LaurentPoly::x_inv();
        let mut columns: Vec<ModuleElement> = Vec::with_capacity(self.len());
        let mut mu_by_col: Vec<Vec<(usize, i64)>> = vec![Vec::new(); self.len()];
        let mut mu = MuTable::default();
        for k in 0..self.len() {
            let col = match self.first_strict_descent(k, choice) {
                None => ModuleElement::basis(self.variant, k),
                Some(i) => {
                    let w = match self.actions[k][i - 1] {
                        Action::StrictDes(w) => w,
                        _ => unreachable!(),
                    };
                    let mut col = self.act_plus(i, &columns[w], &xi);
                    for &(y, m) in &mu_by_col[w] {
                        if self.lengths[y] < self.lengths[w] && !self.taus[y].contains(&i) {
                            col.add_scaled(&columns[y], &LaurentPoly::constant(-m));
                        }
                    }
                    col
                }
            };
            for (&y, c) in &col.coeffs {
                if y == k {
                    if *c != LaurentPoly::one() {
                        return Err(Error::Verification(format!(
                            "diagonal coefficient of {} is {c}",
                            self.vertices[k]
                        )));
                    }
                    continue;
                }
                if self.lengths[y] >= self.lengths[k] || !c.in_neg_span() {
                    return Err(Error::Verification(format!(
                        "coefficient of {} in column {} is {c}",
                        self.vertices[y], self.vertices[k]
                    )));
                }
                let m = c.coeff(-1);
                if m != 0 {
                    mu.entries.insert((y, k), m);
                    mu_by_col[k].push((y, m));
                }
            }
            if !col.coeffs.contains_key(&k) {
                return Err(Error::Verification(format!("column {} lost its diagonal", self.vertices[k])));
            }
            columns.push(col);
        }
        Ok(CanonicalBasis { n: self.n, variant: self.variant, columns, mu })
    }
}

/// Which strict descent drives the canonical-basis recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentChoice {
    #[default]
    Smallest,
    Largest,
}

/// Nonzero `μ(y, z)` (coefficient of `x^{-1}` in the `(y, z)` entry), keyed
/// by dense vertex index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MuTable {
    pub entries: BTreeMap<(usize, usize), i64>,
}

/// `ω(y, z) = μ(y, z) + μ(z, y)`, stored for both orders.
pub fn omega(mu: &MuTable) -> BTreeMap<(usize, usize), i64> {
    let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (&(y, z), &m) in &mu.entries {
        *out.entry((y, z)).or_default() += m;
        *out.entry((z, y)).or_default() += m;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    pub n: usize,
    pub variant: Variant,
    pub columns: Vec<ModuleElement>,
    pub mu: MuTable,
}

#[derive(Serialize)]
struct CanonicalExport<'a> {
    variant: &'static str,
    n: usize,
    vertices: Vec<&'a [u32]>,
    columns: Vec<Vec<(usize, &'a LaurentPoly)>>,
    mu: Vec<(usize, usize, i64)>,
}

impl CanonicalBasis {
    /// Checks that every column is fixed by the module's bar operator.
    pub fn verify(&self, module: &GelfandModule) -> Result<()> {
        for (k, col) in self.columns.iter().enumerate() {
            if module.bar_module(col)? != *col {
                return Err(Error::Verification(format!(
                    "canonical element of {} is not bar invariant",
                    module.vertex(k)
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self, module: &GelfandModule) -> String {
        let export = CanonicalExport {
            variant: self.variant.module_name(),
            n: self.n,
            vertices: module.vertices().iter().map(|v| v.z().word()).collect(),
            columns: self
                .columns
                .iter()
                .map(|c| c.coeffs.iter().map(|(&y, p)| (y, p)).collect())
                .collect(),
            mu: self.mu.entries.iter().map(|(&(y, z), &m)| (y, z, m)).collect(),
        };
        serde_json::to_string(&export).expect("canonical basis serializes")
    }
}
