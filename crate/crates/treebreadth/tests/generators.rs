use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treebreadth::catalog;
use treebreadth::generators::{
    ball_augmentation, betweenness_graph, betweenness_witness, sandwich_graph, sandwich_witness, solve_betweenness,
    solve_sandwich, transfer_decomposition, BetweennessInstance, Direction, SandwichInstance,
};
use treebreadth::oracle::{self, Parameter};
use treebreadth::Graph;

fn tb_at_most_one(g: &Graph) -> bool {
    oracle::decomposition_within(g, Parameter::TreeBreadth, 1).unwrap().is_some()
}

#[test]
fn sandwich_gadget_matches_the_oracle() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let no = SandwichInstance::with_forbidden(c4, &[(0, 2), (1, 3)]).unwrap();
    assert!(solve_sandwich(&no).unwrap().is_none());
    assert!(!tb_at_most_one(&sandwich_graph(&no).0));

    let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let yes = SandwichInstance::with_forbidden(two, &[(0, 2), (1, 3)]).unwrap();
    let h = solve_sandwich(&yes).unwrap().unwrap();
    let (g, _) = sandwich_graph(&yes);
    assert!(sandwich_witness(&yes, &h).unwrap().is_star(&g));
    assert!(tb_at_most_one(&g));
}

#[test]
fn sandwich_reduction_on_all_four_vertex_instances() {
    let allowed = [(0, 1), (0, 3), (1, 2), (2, 3)];
    for mask in 0..16u32 {
        let edges: Vec<_> = (0..4).filter(|&i| mask >> i & 1 == 1).map(|i| allowed[i]).collect();
        let g1 = Graph::from_edges(4, &edges).unwrap();
        let inst = SandwichInstance::with_forbidden(g1, &[(0, 2), (1, 3)]).unwrap();
        let (g, _) = sandwich_graph(&inst);
        let h = solve_sandwich(&inst).unwrap();
        assert_eq!(h.is_some(), tb_at_most_one(&g), "{:?}", edges);
        if let Some(h) = h {
            let d = sandwich_witness(&inst, &h).unwrap();
            assert!(d.is_star(&g));
        }
    }
}

#[test]
fn betweenness_reduction_matches_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..60 {
        let n = rng.gen_range(3..=5);
        let m = rng.gen_range(1..=(20 - 2 * n) / 4);
        let triples = (0..m)
            .map(|_| {
                let mut t = rand::seq::index::sample(&mut rng, n, 3).into_vec();
                t.truncate(3);
                (t[0], t[1], t[2])
            })
            .collect();
        let inst = BetweennessInstance::new(n, triples).unwrap();
        let (g, _) = betweenness_graph(&inst);
        let solved = solve_betweenness(&inst).unwrap();
        let pb1 = oracle::decomposition_within(&g, Parameter::PathBreadth, 1).unwrap().is_some();
        let pl2 = oracle::decomposition_within(&g, Parameter::PathLength, 2).unwrap().is_some();
        assert_eq!(solved.is_some(), pb1, "{:?}", inst);
        assert_eq!(pb1, pl2, "{:?}", inst);
        match solved {
            Some(order) => {
                yes += 1;
                let m = betweenness_witness(&inst, &order).unwrap().evaluate(&g).unwrap();
                assert!(m.breadth <= 1 && m.length <= 2);
            }
            None => no += 1,
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn ball_augmentation_reduction_matches_the_oracle() {
    for g in catalog::connected_graphs_between(2, 5) {
        let tb = oracle::tree_breadth(&g, 7).unwrap();
        for r in 1..=2 {
            let (aug, _) = ball_augmentation(&g, r).unwrap();
            assert_eq!(tb <= r, tb_at_most_one(&aug), "{:?} r = {}", g.edges(), r);
            if let Some(d) = oracle::decomposition_within(&g, Parameter::TreeBreadth, r).unwrap() {
                let lifted = transfer_decomposition(&g, r, &d, Direction::Lift).unwrap();
                assert!(lifted.is_star(&aug));
                let back = transfer_decomposition(&g, r, &lifted, Direction::Project).unwrap();
                assert!(back.evaluate(&g).unwrap().breadth <= r);
            }
        }
    }
}
