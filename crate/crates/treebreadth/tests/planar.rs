use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treebreadth::catalog;
use treebreadth::chordal;
use treebreadth::oracle::{self, Parameter};
use treebreadth::planar::{self, PlanarAnswer, StepLabel};
use treebreadth::{Error, Graph};

fn grid(r: usize, c: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in 0..c {
            let v = i * c + j;
            if j + 1 < c {
                edges.push((v, v + 1));
            }
            if i + 1 < r {
                edges.push((v, v + c));
            }
        }
    }
    Graph::from_edges(r * c, &edges).unwrap()
}

fn oracle_says(g: &Graph) -> bool {
    oracle::decomposition_within(g, Parameter::TreeBreadth, 1).unwrap().is_some()
}

/// Runs the recogniser, checks its certificate and trace, and compares with
/// the oracle.
fn agree(g: &Graph) -> Result<bool, String> {
    let want = oracle_says(g);
    let got = planar::recognize_planar_tb1(g).map_err(|e| format!("{} on {:?}", e, g.edges()))?;
    if let PlanarAnswer::Yes { decomposition, .. } = &got {
        decomposition.validate(g).map_err(|e| format!("{} on {:?}", e, g.edges()))?;
        if !decomposition.is_star(g) {
            return Err(format!("not a star-decomposition on {:?}", g.edges()));
        }
    }
    for t in got.traces() {
        if t.len() > t.step_bound() {
            return Err(format!("{} steps exceed the bound on {:?}", t.len(), g.edges()));
        }
    }
    if got.is_yes() != want {
        return Err(format!("expected {} on {:?}", want, g.edges()));
    }
    Ok(want)
}

fn assert_no_failures(failures: &[String]) {
    assert!(failures.is_empty(), "{} failures, first: {:?}", failures.len(), &failures[..failures.len().min(3)]);
}

#[test]
fn fixed_examples() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let a = planar::recognize_planar_tb1(&c4).unwrap();
    assert_eq!(a.decomposition().unwrap().len(), 2);

    // Square u, v, x, y with two apexes a = 4 and b = 5.
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    for apex in [4, 5] {
        edges.extend((0..4).map(|s| (s, apex)));
    }
    let sq = Graph::from_edges(6, &edges).unwrap();
    let d = planar::recognize_planar_tb1(&sq).unwrap().decomposition().cloned().unwrap();
    d.validate(&sq).unwrap();
    assert!(d.is_star(&sq));
    assert_eq!(oracle::treewidth_exact(&sq).unwrap(), 4);

    assert!(!planar::recognize_planar_tb1(&grid(4, 4)).unwrap().is_yes());
    let g23 = grid(2, 3);
    let d = planar::recognize_planar_tb1(&g23).unwrap().decomposition().cloned().unwrap();
    d.validate(&g23).unwrap();
    assert!(d.is_star(&g23));
}

#[test]
fn input_errors() {
    let k5: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    let k5 = Graph::from_edges(5, &k5).unwrap();
    assert_eq!(planar::recognize_planar_tb1(&k5).unwrap_err(), Error::NotPlanar);
    let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(planar::recognize_planar_tb1(&two).unwrap_err(), Error::Disconnected);
}

#[test]
fn agrees_with_oracle_on_all_small_planar_graphs() {
    let mut failures = Vec::new();
    for g in catalog::connected_graphs_between(1, 7) {
        if planar::is_planar(&g) {
            if let Err(e) = agree(&g) {
                failures.push(e);
            }
        }
    }
    assert_no_failures(&failures);
}

#[test]
fn no_leaf_primes_are_decided_by_two_bags() {
    let mut seen = 0;
    for g in catalog::connected_graphs_between(4, 7) {
        if !planar::is_planar(&g) || !chordal::is_prime(&g).unwrap() || planar::find_leaf_vertex(&g).is_some() {
            continue;
        }
        seen += 1;
        assert_eq!(planar::two_bag_star(&g).is_some(), oracle_says(&g), "{:?}", g.edges());
    }
    assert!(seen > 0);
}

#[test]
fn accepted_graphs_have_treewidth_at_most_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut graphs = catalog::connected_graphs_between(5, 7);
    for _ in 0..400 {
        let keep = rng.gen_range(0.6..1.0);
        graphs.push(catalog::random_planar(&mut rng, 8, keep));
    }
    for g in graphs.iter().filter(|g| planar::is_planar(g)) {
        if planar::recognize_planar_tb1(g).unwrap().is_yes() {
            assert!(oracle::treewidth_exact(g).unwrap() <= 4, "{:?}", g.edges());
        }
    }
}

#[test]
fn agrees_with_oracle_on_random_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut failures = Vec::new();
    let mut labels = std::collections::BTreeSet::new();
    let mut yes = 0;
    for _ in 0..5000 {
        let n = rng.gen_range(7..=15);
        let keep = rng.gen_range(0.6..1.0);
        let g = catalog::random_planar(&mut rng, n, keep);
        if let Ok(a) = planar::recognize_planar_tb1(&g) {
            labels.extend(a.traces().iter().flat_map(|t| t.labels()));
        }
        match agree(&g) {
            Ok(true) => yes += 1,
            Ok(false) => {}
            Err(e) => failures.push(e),
        }
    }
    assert_no_failures(&failures);
    assert!(yes > 1000);
    // Every reduction case is exercised.
    for l in [
        StepLabel::Type1,
        StepLabel::PrimeEasy,
        StepLabel::PrimeDifficult,
        StepLabel::AddEdgeBv,
        StepLabel::ContractVa,
        StepLabel::ConnectB,
        StepLabel::Diamond,
        StepLabel::FinalCase,
    ] {
        assert!(labels.contains(&l), "{} never applied", l.code());
    }
}

#[test]
fn agrees_with_oracle_on_larger_random_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = Vec::new();
    for _ in 0..150 {
        let n = rng.gen_range(16..=20);
        let keep = rng.gen_range(0.75..1.0);
        let g = catalog::random_planar(&mut rng, n, keep);
        if let Err(e) = agree(&g) {
            failures.push(e);
        }
    }
    assert_no_failures(&failures);
}

#[test]
fn certificates_on_large_planar_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut yes = 0;
    for _ in 0..400 {
        let n = rng.gen_range(20..=80);
        let keep = rng.gen_range(0.85..1.0);
        let g = catalog::random_planar(&mut rng, n, keep);
        let a = planar::recognize_planar_tb1(&g).unwrap();
        if let Some(d) = a.decomposition() {
            d.validate(&g).unwrap();
            assert!(d.is_star(&g));
            yes += 1;
        }
        for t in a.traces() {
            assert!(t.len() <= t.step_bound());
        }
    }
    assert!(yes > 0);
}
