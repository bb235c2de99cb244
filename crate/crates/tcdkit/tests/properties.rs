//! Cross-module property checks on random and family instances.

mod common;

use tcdkit::approx::{approx_ecrw, gamma_for_leaf, ApproxOutcome};
use tcdkit::decomp::{metrics, validate_tcd, TreeCutDecomposition};
use tcdkit::families::{gen_family, subdivide_uniform, FamilySpec};
use tcdkit::graph::parse_graph;
use tcdkit::oracle::{exact_aux, AuxParam, Witness};
use tcdkit::treedec::{
    build_tree_decomposition, exact_treewidth, make_nice, validate_nice, validate_td,
    NiceTreeDecomposition, TreedecError,
};

#[test]
fn approx_succeeds_on_thick_stars() {
    // ecrw_1(S_{3,n}) <= 2, so alpha = 1, k = 2 must produce a decomposition
    for n in 1..=6 {
        let g = gen_family(&FamilySpec::S { k: 3, n }).unwrap().0;
        match approx_ecrw(&g, 1, 2).unwrap() {
            ApproxOutcome::Decomposition(d) => {
                assert!(validate_tcd(&g, &d).ok);
                let (thickness, crossing, _) = metrics(&g, &d);
                assert!(thickness <= 1 && crossing <= 12);
            }
            ApproxOutcome::ExceedsK => panic!("S_3_{n} must fit alpha=1 k=2"),
        }
    }
}

#[test]
fn decomposition_json_round_trip() {
    let g = gen_family(&FamilySpec::S { k: 3, n: 3 }).unwrap().0;
    let ApproxOutcome::Decomposition(d) = approx_ecrw(&g, 1, 2).unwrap() else {
        panic!("expected a decomposition")
    };
    let j = d.to_json();
    let text = serde_json::to_string(&j).unwrap();
    let back: tcdkit::decomp::DecompositionJson = serde_json::from_str(&text).unwrap();
    let d2 = TreeCutDecomposition::from_json(&back).unwrap();
    assert_eq!(
        serde_json::to_string(&d2.to_json()).unwrap(),
        text,
        "canonical serialization must be stable"
    );
    assert!(validate_tcd(&g, &d2).ok);
}

#[test]
fn nice_json_round_trip() {
    let g = common::random_connected(9, &mut common::seeded(11));
    let (tw, _) = exact_treewidth(&g).unwrap();
    let td = build_tree_decomposition(&g, tw).unwrap();
    let nice = make_nice(&g, &td).unwrap();
    let text = serde_json::to_string(&nice.to_json()).unwrap();
    let back: tcdkit::treedec::NiceDecompositionJson = serde_json::from_str(&text).unwrap();
    let nice2 = NiceTreeDecomposition::from_json(&back).unwrap();
    assert!(validate_nice(&g, &nice2).ok);
    assert_eq!(serde_json::to_string(&nice2.to_json()).unwrap(), text);
}

#[test]
fn treedec_contract_on_random_graphs() {
    let mut rng = common::seeded(23);
    for n in [4, 8, 12, 16] {
        for _ in 0..6 {
            let g = common::random_connected(n, &mut rng);
            let w = if n <= 12 {
                exact_treewidth(&g).unwrap().0
            } else {
                n / 2
            };
            match build_tree_decomposition(&g, w) {
                Ok(td) => {
                    let report = validate_td(&g, &td);
                    assert!(report.ok);
                    assert!(td.width() <= 2 * w + 1);
                }
                Err(TreedecError::TooWide { .. }) => {
                    assert!(n > 12, "exact range must never reject at w = tw");
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn witness_values_reproduce() {
    let mut rng = common::seeded(31);
    for _ in 0..25 {
        let g = common::random_graph(6, 0.4, &mut rng);
        for which in [AuxParam::Ecrw, AuxParam::Tpw, AuxParam::Tw] {
            let r = exact_aux(&g, which).unwrap();
            match (&r.witness, which) {
                (Witness::TreeCut(d), AuxParam::Ecrw) => {
                    let (thickness, crossing, _) = metrics(&g, d);
                    assert_eq!(thickness.max(crossing), r.value);
                }
                (Witness::TreeCut(d), AuxParam::Tpw) => {
                    assert_eq!(metrics(&g, d).0, r.value);
                }
                (Witness::TreeDec(td), AuxParam::Tw) => {
                    let report = validate_td(&g, td);
                    assert!(report.ok && report.width == r.value);
                }
                _ => panic!("unexpected witness shape"),
            }
        }
    }
}

#[test]
fn subdivision_preserves_counts() {
    let g = gen_family(&FamilySpec::Grid { n: 3 }).unwrap().0;
    let h = subdivide_uniform(&g, 2);
    assert_eq!(h.vertex_count(), g.vertex_count() + 2 * g.edges().len());
    assert_eq!(h.edges().len(), 3 * g.edges().len());
}

#[test]
fn gamma_matches_boundary_degrees() {
    let g = parse_graph("0 1\n1 2\n2 3\n3 0\n1 3").unwrap();
    let s: tcdkit::graph::VertexSet = [1, 3].into_iter().collect();
    // vertex 1 and vertex 3 each have two neighbors outside {1,3}
    assert_eq!(gamma_for_leaf(&g, &s), vec![2, 2]);
}
