//! Invariant suites behind `molecules verify`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::{json, Value};

use molecules::beissinger::{p_cbs, p_cbs_inverse, p_rbs, p_rbs_inverse, psi_cycle_stats, simcbs_partner, simrbs_partner};
use molecules::gelfand::{embed, iota_line, DescentChoice, GelfandModule, Variant};
use molecules::hecke::{kl_basis, kl_cells};
use molecules::perm::{class_representatives, enumerate_involutions, enumerate_permutations, Permutation};
use molecules::tableau::{pq_rs, standard_tableaux, Direction};
use molecules::wgraph::{build_gamma, classify, GraphKind, Side};
use molecules::{Involution, Tableau};

const MAX_DETAILS: usize = 5;

pub struct Check {
    name: String,
    cases: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), cases: 0, failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "cases": self.cases,
            "passed": self.passed(),
            "failures": self.failures.len(),
            "examples": self.failures.iter().take(MAX_DETAILS).collect::<Vec<_>>(),
        })
    }
}

const KINDS: [GraphKind; 2] = [GraphKind::Row, GraphKind::Col];

pub fn insertion(n: usize) -> Vec<Check> {
    let mut bij = Check::new("P_rBS and P_cBS are bijections onto SYT(n) with the fixed-point refinement");
    let mut rs = Check::new("RS insertion and uninsertion are inverse");
    let mut fixed = Check::new("Psi fixes only the identity and s_1");
    for m in 0..=n {
        let syt: BTreeSet<Tableau> = standard_tableaux(m).into_iter().collect();
        let (mut row_img, mut col_img) = (BTreeSet::new(), BTreeSet::new());
        for y in enumerate_involutions(m) {
            let k = y.fixed_points().len();
            let (r, c) = (p_rbs(&y), p_cbs(&y));
            bij.expect(r.odd_lines(Direction::Columns) == k, || format!("odd columns of P_rBS({y})"));
            bij.expect(c.odd_lines(Direction::Rows) == k, || format!("odd rows of P_cBS({y})"));
            bij.expect(p_rbs_inverse(&r).ok().as_ref() == Some(&y), || format!("P_rBS inverse at {y}"));
            bij.expect(p_cbs_inverse(&c).ok().as_ref() == Some(&y), || format!("P_cBS inverse at {y}"));
            row_img.insert(r);
            col_img.insert(c);
        }
        bij.expect(row_img == syt, || format!("n={m}: P_rBS image"));
        bij.expect(col_img == syt, || format!("n={m}: P_cBS image"));

        for t in syt.iter().filter(|_| m <= 7) {
            let fresh = m as u32 + 1;
            match t.rs_insert(fresh) {
                Ok((u, path)) => {
                    let back = u.rs_uninsert(path.new_cell()).ok();
                    rs.expect(back == Some((t.clone(), fresh)), || format!("round trip of {t} with {fresh}"));
                }
                Err(e) => rs.expect(false, || format!("{t}: {e}")),
            }
        }

        if m >= 2 {
            let got: BTreeSet<Involution> = psi_cycle_stats(m).fixed_points.into_iter().collect();
            let want: BTreeSet<Involution> =
                [Involution::identity(m), Involution::new(Permutation::simple(m, 1).unwrap()).unwrap()].into();
            fixed.expect(got == want, || format!("n={m}: fixed points {got:?}"));
        }
    }
    vec![bij, rs, fixed]
}

pub fn partners(n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    type PMap = fn(&Involution) -> Tableau;
    type Partner = fn(&Involution, usize) -> molecules::Result<Involution>;
    for (name, pmap, partner) in [
        ("rBS", p_rbs as PMap, simrbs_partner as Partner),
        ("cBS", p_cbs as PMap, simcbs_partner as Partner),
    ] {
        let mut check = Check::new(format!("{name} partner formula matches exhaustive search"));
        for m in 3..=n {
            let all: Vec<Involution> = enumerate_involutions(m).collect();
            let images: Vec<Tableau> = all.iter().map(pmap).collect();
            for i in 2..m {
                let mut by_image: HashMap<Tableau, Vec<&Involution>> = HashMap::new();
                for (z, p) in all.iter().zip(&images) {
                    by_image.entry(p.dual_equiv(i as u32).unwrap()).or_default().push(z);
                }
                for (y, p) in all.iter().zip(&images) {
                    let found = by_image.get(p).cloned().unwrap_or_default();
                    match partner(y, i) {
                        Ok(z) => check.expect(found == vec![&z], || format!("{y} at i={i}: formula {z}, search {found:?}")),
                        Err(e) => check.expect(false, || format!("{y} at i={i}: {e}")),
                    }
                }
            }
        }
        out.push(check);
    }
    out
}

pub fn gelfand(n: usize) -> Vec<Check> {
    let mut embedding = Check::new("embedding length and descent identities");
    let mut recon = Check::new("P-maps reconstruct from hat-P");
    let mut basis = Check::new("canonical bases are bar invariant and unitriangular");
    for m in 1..=n {
        for w in enumerate_involutions(m) {
            let k = w.fixed_points().len();
            let (a, d) = (embed(&w, Variant::Asc), embed(&w, Variant::Des));
            embedding.expect(a.length() + k * k.saturating_sub(1) == d.length(), || format!("length at {w}"));
            embedding.expect(a.descent_data() == d.descent_data(), || format!("descents at {w}"));
            recon.expect(iota_line(&a.hat_p(), Direction::Rows).ok() == Some(p_rbs(a.z())), || format!("rows at {w}"));
            recon.expect(iota_line(&d.hat_p(), Direction::Columns).ok() == Some(p_cbs(d.z())), || format!("columns at {w}"));
        }
        for v in [Variant::Asc, Variant::Des] {
            let module = GelfandModule::new(m, v);
            let result = module.canonical_basis(DescentChoice::Smallest).and_then(|b| b.verify(&module));
            basis.expect(result.is_ok(), || format!("{} n={m}: {}", v.module_name(), result.unwrap_err()));
        }
    }
    vec![embedding, recon, basis]
}

pub fn wgraph(n: usize) -> Vec<Check> {
    let mut axioms = Check::new("quadratic and braid relations");
    let mut chars = Check::new("trace at x=1 counts square roots");
    let mut molecules = Check::new("molecules are lambda fibers");
    let mut edges = Check::new("bidirected edges are the combinatorial edges");
    for m in 1..=n {
        for kind in KINDS {
            for reduced in [true, false] {
                match build_gamma(m, kind, reduced) {
                    Ok(g) => {
                        let r = g.verify_axioms();
                        axioms.expect(r.passed(), || format!("{kind} n={m} reduced={reduced}: {:?}", r.violations.first()));
                        if reduced {
                            for w in class_representatives(m) {
                                match g.character_check(&w) {
                                    Ok(c) => chars.expect(c.passed(), || format!("{kind} n={m} w={w}: {} vs {}", c.trace, c.expected)),
                                    Err(e) => chars.expect(false, || format!("{kind} n={m} w={w}: {e}")),
                                }
                            }
                        }
                    }
                    Err(e) => axioms.expect(false, || format!("{kind} n={m}: {e}")),
                }
            }
            match classify(m, kind) {
                Ok(r) => {
                    molecules.expect(r.molecules_are_fibers, || format!("{kind} n={m}: {:?}", r.counterexamples));
                    edges.expect(r.edges_match, || format!("{kind} n={m}: {:?}", r.counterexamples));
                }
                Err(e) => molecules.expect(false, || format!("{kind} n={m}: {e}")),
            }
        }
    }
    vec![axioms, chars, molecules, edges]
}

pub fn kl(n: usize) -> Vec<Check> {
    let mut basis = Check::new("KL basis unitriangular, bar invariant, nonnegative");
    let mut cells = Check::new("left and right cells are RS fibers");
    for m in 1..=n {
        let b = kl_basis(m);
        let result = b.verify();
        basis.expect(result.is_ok(), || format!("n={m}: {}", result.unwrap_err()));
        for side in [Side::Left, Side::Right] {
            let mut fibers: BTreeMap<Tableau, Vec<Permutation>> = BTreeMap::new();
            for w in enumerate_permutations(m) {
                let (p, q) = pq_rs(&w);
                fibers.entry(if side == Side::Right { p } else { q }).or_default().push(w);
            }
            let want: BTreeSet<Vec<Permutation>> = fibers.into_values().collect();
            let got: BTreeSet<Vec<Permutation>> = kl_cells(m, side).into_iter().collect();
            cells.expect(got == want, || format!("n={m} {side:?}"));
        }
    }
    vec![basis, cells]
}

pub fn conjecture(n: usize) -> Vec<Check> {
    let mut check = Check::new("cells are molecules");
    for m in 1..=n {
        for kind in KINDS {
            match classify(m, kind) {
                Ok(r) => check.expect(r.cells_are_molecules, || format!("{kind} n={m}: {:?}", r.counterexamples)),
                Err(e) => check.expect(false, || format!("{kind} n={m}: {e}")),
            }
        }
    }
    vec![check]
}
