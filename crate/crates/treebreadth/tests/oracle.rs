use treebreadth::catalog;
use treebreadth::oracle::{self, Parameter, ParameterQuery};

#[test]
fn subset_program_matches_supergraph_enumeration() {
    for g in catalog::connected_graphs_between(2, 6) {
        for p in Parameter::ALL {
            let q = ParameterQuery::new(p);
            assert_eq!(
                oracle::exact_parameter(&g, q).unwrap(),
                oracle::exact_parameter_by_supergraphs(&g, q).unwrap(),
                "{:?} on {}",
                p,
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn optimal_decompositions_attain_the_value() {
    for g in catalog::connected_graphs_between(1, 6) {
        for p in Parameter::ALL {
            let (k, d) = oracle::exact_parameter_with_decomposition(&g, ParameterQuery::new(p)).unwrap();
            d.validate(&g).unwrap();
            let m = d.evaluate(&g).unwrap();
            let got = match p {
                Parameter::TreeBreadth | Parameter::PathBreadth => m.breadth,
                _ => m.length,
            };
            assert_eq!(got, k);
        }
    }
}

#[test]
fn treewidth_methods_agree() {
    for g in catalog::connected_graphs_between(1, 7) {
        assert_eq!(oracle::treewidth_exact(&g).unwrap(), oracle::treewidth_by_subsets(&g).unwrap());
    }
}

#[test]
fn deo_exists_exactly_when_exhaustive_search_finds_one() {
    for g in catalog::connected_graphs_between(1, 6) {
        if let Some(o) = oracle::domination_elimination_ordering(&g) {
            assert!(oracle::is_domination_elimination_ordering(&g, &o));
        }
    }
}

#[test]
fn bipartite_recognizer_matches_oracle() {
    use treebreadth::bipartite::{recognize_bipartite_tb1, BipartiteAnswer};
    let mut checked = 0;
    for g in catalog::connected_graphs_between(1, 7) {
        if g.bipartition().is_none() {
            continue;
        }
        checked += 1;
        let tb = oracle::tree_breadth(&g, 7).unwrap();
        match recognize_bipartite_tb1(&g).unwrap() {
            BipartiteAnswer::Yes(d) => {
                assert!(tb <= 1, "{}", g.to_edge_list());
                d.validate(&g).unwrap();
                assert!(d.is_star(&g));
            }
            BipartiteAnswer::No => assert!(tb > 1, "{}", g.to_edge_list()),
        }
    }
    // Connected bipartite graphs up to isomorphism: 1, 1, 1, 3, 5, 17, 44.
    assert_eq!(checked, 72);
}
