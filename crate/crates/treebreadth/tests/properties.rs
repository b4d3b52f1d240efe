use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treebreadth::generators::{ball_augmentation, transfer_decomposition, Direction};
use treebreadth::oracle::{self, Parameter};
use treebreadth::planar::{self, separator};
use treebreadth::{catalog, chordal, Decomposition, Graph};

fn connected(seed: u64, n: usize, p: f64) -> Graph {
    catalog::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

fn planar_graph(seed: u64, n: usize, keep: f64) -> Graph {
    catalog::random_planar(&mut ChaCha8Rng::seed_from_u64(seed), n, keep)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn elimination_orders_give_valid_decompositions(seed: u64, n in 1usize..12, p in 0.05f64..0.8) {
        let g = connected(seed, n, p);
        let order: Vec<usize> = (0..n).rev().collect();
        let mut d = oracle::decomposition_from_elimination(&g, &order);
        prop_assert!(d.validate(&g).is_ok());
        d.reduce();
        prop_assert!(d.validate(&g).is_ok());
        let m = d.evaluate(&g).unwrap();
        prop_assert!(m.breadth <= m.length && m.length <= 2 * m.breadth);
        prop_assert_eq!(Decomposition::from_json(&d.to_json()).unwrap(), d);
    }

    #[test]
    fn layouts_give_valid_path_decompositions(seed: u64, n in 1usize..12, p in 0.05f64..0.8) {
        let g = connected(seed, n, p);
        let d = oracle::decomposition_from_layout(&g, &(0..n).collect::<Vec<_>>());
        prop_assert!(d.validate(&g).is_ok());
    }

    #[test]
    fn graph_formats_round_trip(seed: u64, n in 1usize..15, p in 0.0f64..0.6) {
        let g = connected(seed, n, p);
        prop_assert_eq!(&Graph::parse_edge_list(&g.to_edge_list()).unwrap(), &g);
        prop_assert_eq!(&Graph::parse_json(&g.to_json()).unwrap(), &g);
    }

    #[test]
    fn star_reduction_keeps_breadth_one(seed: u64, n in 2usize..9, p in 0.2f64..0.9) {
        let g = connected(seed, n, p);
        if let Some(d) = oracle::decomposition_within(&g, Parameter::TreeBreadth, 1).unwrap() {
            let s = d.reduce_to_star(&g).unwrap();
            prop_assert!(s.validate(&g).is_ok());
            prop_assert!(s.is_star(&g));
        }
    }

    #[test]
    fn atoms_cover_the_graph(seed: u64, n in 1usize..14, p in 0.05f64..0.5) {
        let g = connected(seed, n, p);
        let a = chordal::atoms(&g).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(a.atoms.iter().any(|x| x.contains(&u) && x.contains(&v)));
        }
        for s in &a.separators {
            prop_assert!(g.is_clique(s));
        }
        for atom in &a.atoms {
            prop_assert!(chordal::is_prime(&g.induced_subgraph(atom)).unwrap());
        }
    }

    #[test]
    fn ball_lift_and_project(seed: u64, n in 2usize..7, p in 0.1f64..0.6, r in 1u32..3) {
        let g = connected(seed, n, p);
        let (aug, _) = ball_augmentation(&g, r).unwrap();
        let within = oracle::decomposition_within(&g, Parameter::TreeBreadth, r).unwrap();
        prop_assert_eq!(within.is_some(), oracle::decomposition_within(&aug, Parameter::TreeBreadth, 1).unwrap().is_some());
        if let Some(d) = within {
            let lifted = transfer_decomposition(&g, r, &d, Direction::Lift).unwrap();
            prop_assert!(lifted.is_star(&aug));
            let back = transfer_decomposition(&g, r, &lifted, Direction::Project).unwrap();
            prop_assert!(back.evaluate(&g).unwrap().breadth <= r);
        }
    }

    #[test]
    fn separator_cycles_stay_planar(seed: u64, n in 5usize..16, keep in 0.7f64..1.0) {
        let g = planar_graph(seed, n, keep);
        for v in 0..n {
            for c in g.components_without(&g.closed_neighborhood(v)) {
                let s = g.neighborhood_of_set(&c);
                let Ok(h) = planar::make_separator_cycle(&g, &s) else { continue };
                prop_assert!(planar::is_planar(&h));
                prop_assert!(g.edges().iter().all(|&(a, b)| h.has_edge(a, b)));
                if s.len() == 2 {
                    prop_assert!(h.has_edge(s[0], s[1]));
                } else {
                    prop_assert!(separator::separator_cycle_order(&h, &s).is_some());
                }
            }
        }
    }

    #[test]
    fn planar_certificates_validate(seed: u64, n in 7usize..30, keep in 0.75f64..1.0) {
        let g = planar_graph(seed, n, keep);
        let a = planar::recognize_planar_tb1(&g).unwrap();
        if let Some(d) = a.decomposition() {
            prop_assert!(d.validate(&g).is_ok());
            prop_assert!(d.is_star(&g));
        }
        for t in a.traces() {
            prop_assert!(t.len() <= t.step_bound());
        }
    }
}
