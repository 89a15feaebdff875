use molecules::wgraph::{build_gamma, GraphKind, WGraph};

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn gamma_row_2() {
    let g = build_gamma(2, GraphKind::Row, true).unwrap();
    assert_eq!(format!("{}\n", g.to_json()), golden("gamma_row_2.json"));
    assert_eq!(g.len(), 2);
    assert!(g.omega().is_empty());
}

#[test]
fn gamma_col_3() {
    let g = build_gamma(3, GraphKind::Col, true).unwrap();
    assert_eq!(format!("{}\n", g.to_json()), golden("gamma_col_3.json"));
    // one bidirected pair; the third edge is one-way under the reduced filter
    assert_eq!(g.bidirected_edges().len(), 1);
    assert_eq!(g.molecules().len(), 3);
}

#[test]
fn golden_files_load() {
    for name in ["gamma_row_2.json", "gamma_col_3.json"] {
        let g = WGraph::from_json(&golden(name)).unwrap();
        assert_eq!(format!("{}\n", g.to_json()), golden(name));
        assert!(g.verify_axioms().passed());
    }
}
