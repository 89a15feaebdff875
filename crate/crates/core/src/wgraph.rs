//! W-graphs for `S_n`: the Gelfand graphs `Γ^row`, `Γ^col` and the
//! Kazhdan-Lusztig graphs, with molecules, cells and consistency checks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gelfand::{omega, DescentChoice, GelfandModule, GelfandVertex, Variant};
use crate::hecke::KlBasis;
use crate::laurent::LaurentPoly;
use crate::perm::{enumerate_permutations, ConjCompare, Involution, Permutation};
use crate::tableau::{pq_rs, Shape};

/// Which family a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Row,
    Col,
    KlLeft,
    KlRight,
}

impl GraphKind {
    fn gelfand_variant(self) -> Option<Variant> {
        match self {
            GraphKind::Row => Some(Variant::Asc),
            GraphKind::Col => Some(Variant::Des),
            _ => None,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Row => "row",
            GraphKind::Col => "col",
            GraphKind::KlLeft => "kl-left",
            GraphKind::KlRight => "kl-right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A W-graph `(V, ω, τ)` with integer edge weights. Vertex `k` is
/// `vertices[k]`; `omega[(v, w)]` is the weight on the arrow `v → w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphDoc", into = "GraphDoc")]
pub struct WGraph {
    n: usize,
    kind: GraphKind,
    reduced: bool,
    vertices: Vec<Permutation>,
    tau: Vec<BTreeSet<usize>>,
    omega: BTreeMap<(usize, usize), i64>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    variant: GraphKind,
    reduced: bool,
    vertices: Vec<Permutation>,
    tau: Vec<Vec<usize>>,
    edges: Vec<(usize, usize, i64)>,
}

impl From<WGraph> for GraphDoc {
    fn from(g: WGraph) -> Self {
        GraphDoc {
            n: g.n,
            variant: g.kind,
            reduced: g.reduced,
            tau: g.tau.iter().map(|t| t.iter().copied().collect()).collect(),
            edges: g.omega.iter().map(|(&(v, w), &c)| (v, w, c)).collect(),
            vertices: g.vertices,
        }
    }
}

impl TryFrom<GraphDoc> for WGraph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Self> {
        let size = doc.vertices.len();
        if doc.tau.len() != size {
            return Err(Error::Parse("tau and vertices differ in length".into()));
        }
        let mut omega = BTreeMap::new();
        for (v, w, c) in doc.edges {
            if v >= size || w >= size {
                return Err(Error::Parse(format!("edge ({v}, {w}) out of range")));
            }
            if c == 0 {
                return Err(Error::Parse(format!("edge ({v}, {w}) has zero weight")));
            }
            if omega.insert((v, w), c).is_some() {
                return Err(Error::Parse(format!("edge ({v}, {w}) listed twice")));
            }
        }
        let tau: Vec<BTreeSet<usize>> = doc.tau.into_iter().map(|t| t.into_iter().collect()).collect();
        if tau.iter().flatten().any(|&i| i == 0 || i >= doc.n.max(1)) {
            return Err(Error::Parse("tau entry outside [n-1]".into()));
        }
        let g = WGraph { n: doc.n, kind: doc.variant, reduced: doc.reduced, vertices: doc.vertices, tau, omega };
        if g.reduced && g.omega.keys().any(|&(v, w)| g.tau[v].is_subset(&g.tau[w])) {
            return Err(Error::Parse("reduced graph has an edge with τ(v) ⊆ τ(w)".into()));
        }
        Ok(g)
    }
}

/// Strongly connected components, numbered by least vertex, with the
/// arrows of the condensation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cells {
    pub components: Vec<Vec<usize>>,
    pub dag: BTreeSet<(usize, usize)>,
}

/// Relations that failed in [`WGraph::verify_axioms`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterCheck {
    pub trace: i64,
    pub expected: i64,
}

impl CharacterCheck {
    pub fn passed(&self) -> bool {
        self.trace == self.expected
    }
}

/// Builds `Γ^row(n)` (vertices `G^asc_n`) or `Γ^col(n)` (vertices `G^des_n`).
pub fn build_gamma(n: usize, kind: GraphKind, reduced: bool) -> Result<WGraph> {
    let variant = kind
        .gelfand_variant()
        .ok_or_else(|| Error::UnsupportedFormat(format!("{kind} is not a Gelfand graph")))?;
    let module = GelfandModule::new(n, variant);
    let basis = module.canonical_basis(DescentChoice::Smallest)?;
    Ok(WGraph::from_module(&module, &omega(&basis.mu), reduced))
}

type Partition = Vec<Vec<usize>>;

fn normalize(mut parts: Partition) -> Partition {
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort();
    parts
}

impl WGraph {
    pub fn new(
        n: usize,
        kind: GraphKind,
        reduced: bool,
        vertices: Vec<Permutation>,
        tau: Vec<BTreeSet<usize>>,
        mut omega: BTreeMap<(usize, usize), i64>,
    ) -> Self {
        omega.retain(|&(v, w), c| *c != 0 && !(reduced && tau[v].is_subset(&tau[w])));
        WGraph { n, kind, reduced, vertices, tau, omega }
    }

    pub fn from_module(module: &GelfandModule, omega: &BTreeMap<(usize, usize), i64>, reduced: bool) -> Self {
        let kind = match module.variant() {
            Variant::Asc => GraphKind::Row,
            Variant::Des => GraphKind::Col,
        };
        let vertices = module.vertices().iter().map(|v| v.z().perm().clone()).collect();
        let tau = (0..module.len()).map(|k| module.tau(k).clone()).collect();
        Self::new(module.n(), kind, reduced, vertices, tau, omega.clone())
    }

    /// The left (`τ = Asc_L`) or right (`τ = Asc_R`) KL graph.
    pub fn kazhdan_lusztig(basis: &KlBasis, side: Side, reduced: bool) -> Self {
        let n = basis.n();
        let vertices = basis.elements().to_vec();
        let tau = vertices
            .iter()
            .map(|w| {
                let des = match side {
                    Side::Left => w.left_descents(),
                    Side::Right => w.right_descents(),
                };
                (1..n).filter(|i| !des.contains(i)).collect()
            })
            .collect();
        let mut omega: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(y, w), &m) in basis.mu_table() {
            *omega.entry((y, w)).or_default() += m;
            *omega.entry((w, y)).or_default() += m;
        }
        let kind = match side {
            Side::Left => GraphKind::KlLeft,
            Side::Right => GraphKind::KlRight,
        };
        Self::new(n, kind, reduced, vertices, tau, omega)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn tau(&self, v: usize) -> &BTreeSet<usize> {
        &self.tau[v]
    }

    pub fn omega(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.omega
    }

    pub fn weight(&self, v: usize, w: usize) -> i64 {
        self.omega.get(&(v, w)).copied().unwrap_or(0)
    }

    /// Overwrites one edge weight; zero removes the edge. Meant for testing
    /// how the checks react to damaged graphs.
    pub fn set_weight(&mut self, v: usize, w: usize, weight: i64) {
        if weight == 0 {
            self.omega.remove(&(v, w));
        } else {
            self.omega.insert((v, w), weight);
        }
    }

    fn out_edges(&self) -> Vec<Vec<(usize, i64)>> {
        let mut out = vec![Vec::new(); self.len()];
        for (&(v, w), &c) in &self.omega {
            out[v].push((w, c));
        }
        out
    }

    /// `H_{s_i}` on a sparse vector.
    fn act(&self, adj: &[Vec<(usize, i64)>], i: usize, e: &BTreeMap<usize, LaurentPoly>) -> BTreeMap<usize, LaurentPoly> {
        let x = LaurentPoly::x();
        let minus_xi = -LaurentPoly::x_inv();
        let mut out = BTreeMap::new();
        for (&v, c) in e {
            if !self.tau[v].contains(&i) {
                crate::hecke::add_into(&mut out, v, &(c * &x));
            } else {
                crate::hecke::add_into(&mut out, v, &(c * &minus_xi));
                for &(w, m) in &adj[v] {
                    if !self.tau[w].contains(&i) {
                        crate::hecke::add_into(&mut out, w, &c.scale(m));
                    }
                }
            }
        }
        out
    }

    /// Checks the quadratic, braid and commutation relations on every basis
    /// vector.
    pub fn verify_axioms(&self) -> AxiomReport {
        let adj = self.out_edges();
        let q = LaurentPoly::x_minus_x_inv();
        let mut report = AxiomReport::default();
        for v in 0..self.len() {
            let e = BTreeMap::from([(v, LaurentPoly::one())]);
            let once: Vec<_> = (1..self.n).map(|i| self.act(&adj, i, &e)).collect();
            for i in 1..self.n {
                report.checked += 1;
                let twice = self.act(&adj, i, &once[i - 1]);
                let mut expect = e.clone();
                for (&k, c) in &once[i - 1] {
                    crate::hecke::add_into(&mut expect, k, &(c * &q));
                }
                if twice != expect {
                    report.violations.push(format!("quadratic relation for s_{i} at {}", self.vertices[v]));
                }
                for j in i + 1..self.n {
                    report.checked += 1;
                    let ij = self.act(&adj, i, &once[j - 1]);
                    let ji = self.act(&adj, j, &once[i - 1]);
                    if j == i + 1 {
                        if self.act(&adj, j, &ij) != self.act(&adj, i, &ji) {
                            report
                                .violations
                                .push(format!("braid relation for s_{i}, s_{j} at {}", self.vertices[v]));
                        }
                    } else if ij != ji {
                        report
                            .violations
                            .push(format!("commutation of s_{i}, s_{j} at {}", self.vertices[v]));
                    }
                }
            }
        }
        report
    }

    /// Unordered pairs `v < w` with nonzero weight in both directions.
    pub fn bidirected_edges(&self) -> BTreeSet<(usize, usize)> {
        self.omega
            .keys()
            .filter(|&&(v, w)| v < w && self.omega.contains_key(&(w, v)))
            .copied()
            .collect()
    }

    /// Connected components of the bidirected edges.
    pub fn molecules(&self) -> Partition {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for (v, w) in self.bidirected_edges() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        normalize(groups.into_values().collect())
    }

    /// Strongly connected components (Tarjan), numbered by least vertex.
    pub fn cells(&self) -> Cells {
        let size = self.len();
        let adj: Vec<Vec<usize>> = self.out_edges().into_iter().map(|es| es.into_iter().map(|(w, _)| w).collect()).collect();
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; size];
        let mut low = vec![0; size];
        let mut on_stack = vec![false; size];
        let mut stack = Vec::new();
        let mut comp = vec![UNSEEN; size];
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut counter = 0;
        for root in 0..size {
            if index[root] != UNSEEN {
                continue;
            }
            // explicit call stack of (vertex, next edge position)
            let mut calls = vec![(root, 0usize)];
            index[root] = counter;
            low[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(frame) = calls.last_mut() {
                let v = frame.0;
                if frame.1 < adj[v].len() {
                    let w = adj[v][frame.1];
                    frame.1 += 1;
                    if index[w] == UNSEEN {
                        index[w] = counter;
                        low[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        calls.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                calls.pop();
                if let Some(&(parent, _)) = calls.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack holds the component");
                        on_stack[w] = false;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    found.push(members);
                }
            }
        }
        found.sort();
        for (c, members) in found.iter().enumerate() {
            for &v in members {
                comp[v] = c;
            }
        }
        let dag = self
            .omega
            .keys()
            .map(|&(v, w)| (comp[v], comp[w]))
            .filter(|(a, b)| a != b)
            .collect();
        Cells { components: found, dag }
    }

    fn gelfand_vertex(&self, v: usize) -> Option<GelfandVertex> {
        let variant = self.kind.gelfand_variant()?;
        let z = Involution::new(self.vertices[v].clone()).ok()?;
        GelfandVertex::new(z, self.n, variant).ok()
    }

    /// `λ_row`/`λ_col` for Gelfand graphs, the RS shape for KL graphs.
    pub fn lambda(&self, v: usize) -> Option<Shape> {
        match self.kind {
            GraphKind::Row | GraphKind::Col => self.gelfand_vertex(v).map(|g| g.lambda_shape()),
            GraphKind::KlLeft | GraphKind::KlRight => Some(pq_rs(&self.vertices[v]).0.shape()),
        }
    }

    /// Trace at `x = 1` of `w` acting through the lexicographically first
    /// reduced word, against the number of square roots of `w` in `S_n`.
    pub fn character_check(&self, w: &Permutation) -> Result<CharacterCheck> {
        if w.n() != self.n {
            return Err(Error::IndexOutOfRange { index: w.n(), n: self.n });
        }
        let adj = self.out_edges();
        let word = w.reduced_word();
        let mut trace = 0i64;
        for v in 0..self.len() {
            let mut e: BTreeMap<usize, i64> = BTreeMap::from([(v, 1)]);
            for &i in word.iter().rev() {
                let mut next: BTreeMap<usize, i64> = BTreeMap::new();
                for (&u, &c) in &e {
                    if !self.tau[u].contains(&i) {
                        *next.entry(u).or_default() += c;
                    } else {
                        *next.entry(u).or_default() -= c;
                        for &(t, m) in &adj[u] {
                            if !self.tau[t].contains(&i) {
                                *next.entry(t).or_default() += c * m;
                            }
                        }
                    }
                }
                next.retain(|_, c| *c != 0);
                e = next;
            }
            trace += e.get(&v).copied().unwrap_or(0);
        }
        let expected = enumerate_permutations(self.n).iter().filter(|g| g.compose(g) == *w).count() as i64;
        Ok(CharacterCheck { trace, expected })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Graphviz rendering: bidirected edges solid, one-way edges dashed.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}_{}\" {{", self.kind, self.n);
        for (v, w) in self.vertices.iter().enumerate() {
            let shape = self.lambda(v).map(|s| s.to_string()).unwrap_or_default();
            let _ = writeln!(out, "  v{v} [label=\"{w}\\n{shape}\"];");
        }
        for (&(v, w), &c) in &self.omega {
            match self.omega.get(&(w, v)) {
                Some(&back) if v < w => {
                    let label = if back == c { c.to_string() } else { format!("{c}/{back}") };
                    let _ = writeln!(out, "  v{v} -> v{w} [dir=both, label=\"{label}\"];");
                }
                Some(_) => {}
                None => {
                    let _ = writeln!(out, "  v{v} -> v{w} [style=dashed, label=\"{c}\"];");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn export(&self, format: &str) -> Result<String> {
        match format {
            "json" => Ok(self.to_json()),
            "dot" => Ok(self.to_dot()),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// The relation `y ↔_i z` on Gelfand vertices, evaluated with the
/// conjugation comparisons only.
pub fn combinatorial_bidirected(y: &GelfandVertex, z: &GelfandVertex, i: usize) -> Result<bool> {
    if y.variant() != z.variant() {
        return Err(Error::VariantMismatch { expected: y.variant().to_string(), found: z.variant().to_string() });
    }
    let n = y.n();
    if i <= 1 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let holds = |a: &GelfandVertex, b: &GelfandVertex, s: usize, t: usize| {
        let up = a.conj_compare(t) == ConjCompare::Higher && a.conj_by_s(t) == *b.z();
        let top = b.conj_compare(s);
        match a.variant() {
            Variant::Asc => up && a.conj_compare(s) != ConjCompare::Higher && top == ConjCompare::Higher,
            Variant::Des => up && a.conj_compare(s) == ConjCompare::Lower && top != ConjCompare::Lower,
        }
    };
    Ok([(i - 1, i), (i, i - 1)]
        .into_iter()
        .any(|(s, t)| holds(y, z, s, t) || holds(z, y, s, t)))
}

/// Result of checking the molecule classification and the cells = molecules
/// property on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub variant: GraphKind,
    pub vertices: usize,
    pub molecules: usize,
    pub fibers: usize,
    pub cells: usize,
    pub molecules_are_fibers: bool,
    pub edges_match: bool,
    pub cells_are_molecules: bool,
    /// Informational: whether the non-reduced graph has the same cells.
    pub nonreduced_cells_agree: bool,
    pub counterexamples: Vec<String>,
}

impl ClassifyReport {
    pub fn passed(&self) -> bool {
        self.molecules_are_fibers && self.edges_match && self.cells_are_molecules
    }
}

/// Fibers of `λ` over the vertex set.
pub fn lambda_fibers(g: &WGraph) -> Partition {
    let mut map: BTreeMap<Shape, Vec<usize>> = BTreeMap::new();
    for v in 0..g.len() {
        if let Some(s) = g.lambda(v) {
            map.entry(s).or_default().push(v);
        }
    }
    normalize(map.into_values().collect())
}

/// Pairs `v < w` related by `↔_i` for some `1 < i < n`.
pub fn combinatorial_edges(module: &GelfandModule) -> BTreeSet<(usize, usize)> {
    let n = module.n();
    let mut out = BTreeSet::new();
    for v in 0..module.len() {
        for w in v + 1..module.len() {
            if module.length(v).abs_diff(module.length(w)) != 2 {
                continue;
            }
            let (a, b) = (module.vertex(v), module.vertex(w));
            if (2..n).any(|i| combinatorial_bidirected(a, b, i).unwrap_or(false)) {
                out.insert((v, w));
            }
        }
    }
    out
}

/// Runs every check on `Γ^row(n)` or `Γ^col(n)`.
pub fn classify(n: usize, kind: GraphKind) -> Result<ClassifyReport> {
    let variant = kind
        .gelfand_variant()
        .ok_or_else(|| Error::UnsupportedFormat(format!("{kind} is not a Gelfand graph")))?;
    let module = GelfandModule::new(n, variant);
    let basis = module.canonical_basis(DescentChoice::Smallest)?;
    let weights = omega(&basis.mu);
    let g = WGraph::from_module(&module, &weights, true);
    let loose = WGraph::from_module(&module, &weights, false);

    let mut counterexamples = Vec::new();
    let molecules = g.molecules();
    let fibers = lambda_fibers(&g);
    let molecules_are_fibers = molecules == fibers;
    if !molecules_are_fibers {
        for m in molecules.iter().filter(|m| !fibers.contains(m)) {
            counterexamples.push(format!("molecule {} is not a λ fiber", describe(&g, m)));
        }
    }

    let algebraic = g.bidirected_edges();
    let combinatorial = combinatorial_edges(&module);
    let edges_match = algebraic == combinatorial;
    for &(v, w) in algebraic.symmetric_difference(&combinatorial) {
        let side = if algebraic.contains(&(v, w)) { "algebraic only" } else { "combinatorial only" };
        counterexamples.push(format!("edge {} -- {} ({side})", g.vertices[v], g.vertices[w]));
    }

    let cells = g.cells().components;
    let cells_are_molecules = cells == molecules;
    if !cells_are_molecules {
        for c in cells.iter().filter(|c| !molecules.contains(c)) {
            counterexamples.push(format!("cell {} is not a molecule", describe(&g, c)));
        }
    }
    let nonreduced_cells_agree = loose.cells().components == cells;

    Ok(ClassifyReport {
        n,
        variant: kind,
        vertices: g.len(),
        molecules: molecules.len(),
        fibers: fibers.len(),
        cells: cells.len(),
        molecules_are_fibers,
        edges_match,
        cells_are_molecules,
        nonreduced_cells_agree,
        counterexamples,
    })
}

fn describe(g: &WGraph, part: &[usize]) -> String {
    let words: Vec<String> = part.iter().map(|&v| g.vertices[v].to_string()).collect();
    format!("{{{}}}", words.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gelfand::embed;
    use crate::hecke::kl_basis;
    use crate::perm::{class_representatives, enumerate_involutions};

    fn inv(s: &str) -> Involution {
        Involution::parse(s, None).unwrap()
    }

    #[test]
    fn tiny_graphs() {
        let g1 = build_gamma(1, GraphKind::Row, true).unwrap();
        assert_eq!(g1.len(), 1);
        assert!(g1.omega().is_empty());
        let g2 = build_gamma(2, GraphKind::Row, true).unwrap();
        let words: BTreeSet<String> = g2.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(words, ["2143", "3412"].iter().map(|s| s.to_string()).collect());
        assert!(g2.omega().is_empty());
        assert_eq!(g2.molecules(), vec![vec![0], vec![1]]);
        assert_eq!(g2.cells().components, vec![vec![0], vec![1]]);
        assert!(g2.verify_axioms().passed());
        assert!(build_gamma(2, GraphKind::KlLeft, true).is_err());
    }

    #[test]
    fn n3_edges_follow_lambda() {
        let g = build_gamma(3, GraphKind::Row, true).unwrap();
        assert_eq!(g.len(), 4);
        for (v, w) in g.bidirected_edges() {
            assert_eq!(g.lambda(v), g.lambda(w));
        }
        assert_eq!(g.molecules(), lambda_fibers(&g));
        let c = build_gamma(3, GraphKind::Col, true).unwrap();
        assert_eq!(c.molecules(), lambda_fibers(&c));
    }

    #[test]
    fn axioms_hold_and_detect_damage() {
        for n in 1..=5 {
            for kind in [GraphKind::Row, GraphKind::Col] {
                for reduced in [true, false] {
                    let g = build_gamma(n, kind, reduced).unwrap();
                    let r = g.verify_axioms();
                    assert!(r.passed(), "{kind} n={n} reduced={reduced}: {:?}", r.violations);
                }
            }
        }
        let mut g = build_gamma(4, GraphKind::Row, true).unwrap();
        let (&(v, w), &c) = g.omega().iter().next().unwrap();
        g.set_weight(v, w, c + 1);
        let r = g.verify_axioms();
        assert!(!r.passed());
        assert!(r.violations.iter().any(|s| s.contains("relation")));
    }

    #[test]
    fn kl_graphs_satisfy_axioms() {
        for n in 1..=4 {
            let b = kl_basis(n);
            for side in [Side::Left, Side::Right] {
                assert!(WGraph::kazhdan_lusztig(&b, side, true).verify_axioms().passed());
                assert!(WGraph::kazhdan_lusztig(&b, side, false).verify_axioms().passed());
            }
        }
        let g = WGraph::kazhdan_lusztig(&kl_basis(3), Side::Left, true);
        let mut sizes: Vec<usize> = g.cells().components.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2]);
    }

    #[test]
    fn combinatorial_examples() {
        let a = embed(&inv("2134"), Variant::Asc);
        let b = embed(&inv("3214"), Variant::Asc);
        assert!(combinatorial_bidirected(&a, &b, 2).unwrap());
        assert!(!combinatorial_bidirected(&a, &a, 2).unwrap());
        assert!(combinatorial_bidirected(&a, &embed(&inv("3214"), Variant::Des), 2).is_err());
        assert!(combinatorial_bidirected(&a, &b, 1).is_err());
        let m = GelfandModule::new(2, Variant::Asc);
        assert!(combinatorial_edges(&m).is_empty());
    }

    #[test]
    fn classification_small() {
        for n in 1..=5 {
            for kind in [GraphKind::Row, GraphKind::Col] {
                let r = classify(n, kind).unwrap();
                assert!(r.passed(), "{kind} n={n}: {:?}", r.counterexamples);
                let total: usize = lambda_fibers(&build_gamma(n, kind, true).unwrap()).iter().map(|f| f.len()).sum();
                assert_eq!(total, enumerate_involutions(n).count());
            }
        }
        assert_eq!(classify(4, GraphKind::Row).unwrap().fibers, 5);
    }

    #[test]
    fn characters() {
        for n in 1..=4 {
            for kind in [GraphKind::Row, GraphKind::Col] {
                let g = build_gamma(n, kind, true).unwrap();
                for w in class_representatives(n) {
                    let c = g.character_check(&w).unwrap();
                    assert!(c.passed(), "{kind} n={n} w={w}: {c:?}");
                }
                let id = g.character_check(&Permutation::identity(n)).unwrap();
                assert_eq!(id.trace as usize, enumerate_involutions(n).count());
            }
        }
    }

    #[test]
    fn tarjan_on_a_cycle_and_tail() {
        let tau = vec![BTreeSet::from([1]), BTreeSet::new(), BTreeSet::from([1]), BTreeSet::new()];
        let verts = enumerate_permutations(3).into_iter().take(4).collect();
        let omega = BTreeMap::from([((0, 1), 1), ((1, 0), 1), ((1, 2), 1), ((2, 3), 2)]);
        let g = WGraph::new(3, GraphKind::Row, false, verts, tau, omega);
        let cells = g.cells();
        assert_eq!(cells.components, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(cells.dag, BTreeSet::from([(0, 1), (1, 2)]));
    }

    #[test]
    fn export_roundtrip_and_dot() {
        let g = build_gamma(3, GraphKind::Col, true).unwrap();
        assert_eq!(WGraph::from_json(&g.to_json()).unwrap(), g);
        let dot = build_gamma(1, GraphKind::Row, true).unwrap().to_dot();
        assert_eq!(dot.matches("label=").count(), 1);
        assert!(!dot.contains("->"));
        assert!(matches!(g.export("png"), Err(Error::UnsupportedFormat(_))));
        assert!(WGraph::from_json("{\"n\":1}").is_err());
    }
}
