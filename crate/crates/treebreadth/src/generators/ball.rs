use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};

use super::GadgetMap;

/// The graph `G'_r`: `g` plus a clique `u_0..u_{n-1}` (ids `n..2n`) where
/// `u_i` sees every vertex within distance `r` of `v_i`.
pub fn ball_augmentation(g: &Graph, r: u32) -> Result<(Graph, GadgetMap)> {
    if r < 1 {
        return Err(Error::Precondition("radius must be at least 1".into()));
    }
    g.require_connected()?;
    let n = g.n();
    let dist = g.all_pairs_distances();
    let mut roles = GadgetMap::new();
    let mut edges = g.edges();
    for i in 0..n {
        roles.insert(format!("v{}", i), i);
        roles.insert(format!("u{}", i), n + i);
        for j in i + 1..n {
            edges.push((n + i, n + j));
        }
        for x in 0..n {
            let d = dist.get(i, x);
            if d != UNREACHABLE && d <= r {
                edges.push((n + i, x));
            }
        }
    }
    Ok((Graph::from_edges(2 * n, &edges)?, roles))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Breadth-`r` decomposition of `g` to a star-decomposition of `G'_r`.
    Lift,
    /// Breadth-one decomposition of `G'_r` to a breadth-`r` one of `g`.
    Project,
}

pub fn transfer_decomposition(g: &Graph, r: u32, d: &Decomposition, direction: Direction) -> Result<Decomposition> {
    let (aug, _) = ball_augmentation(g, r)?;
    let n = g.n();
    match direction {
        Direction::Lift => {
            let breadth = d.evaluate(g)?.breadth;
            if breadth > r {
                return Err(Error::Breadth(breadth as usize, r as usize));
            }
            let mut out = d.clone();
            for bag in &mut out.bags {
                bag.extend(n..2 * n);
            }
            Ok(out)
        }
        Direction::Project => {
            let breadth = d.evaluate(&aug)?.breadth;
            if breadth > 1 {
                return Err(Error::Breadth(breadth as usize, 1));
            }
            let mut out = d.clone();
            for bag in &mut out.bags {
                bag.retain(|&x| x < n);
            }
            out.drop_empty_bags();
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, Parameter};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_augmentations() {
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let (k4, _) = ball_augmentation(&edge, 1).unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (g, roles) = ball_augmentation(&p3, 1).unwrap();
        assert_eq!(g.neighbors(roles.id("u1")).iter().filter(|&&x| x < 3).count(), 3);
        assert_eq!(g.neighbors(roles.id("u0")).iter().filter(|&&x| x < 3).count(), 2);

        let (g, _) = ball_augmentation(&cycle(6), 2).unwrap();
        for u in 6..12 {
            assert_eq!(g.neighbors(u).iter().filter(|&&x| x < 6).count(), 5);
        }
        assert!(ball_augmentation(&p3, 0).is_err());
    }

    #[test]
    fn c6_round_trip() {
        let c6 = cycle(6);
        let d = oracle::decomposition_within(&c6, Parameter::TreeBreadth, 2).unwrap().unwrap();
        let (aug, _) = ball_augmentation(&c6, 2).unwrap();
        let lifted = transfer_decomposition(&c6, 2, &d, Direction::Lift).unwrap();
        lifted.validate(&aug).unwrap();
        assert!(lifted.is_star(&aug));
        let back = transfer_decomposition(&c6, 2, &lifted, Direction::Project).unwrap();
        assert!(back.evaluate(&c6).unwrap().breadth <= 2);
        assert_eq!(
            transfer_decomposition(&c6, 1, &d, Direction::Lift).unwrap_err(),
            Error::Breadth(2, 1)
        );
    }

    #[test]
    fn project_rejects_wide_input() {
        let c6 = cycle(6);
        let (aug, _) = ball_augmentation(&c6, 1).unwrap();
        assert_eq!(oracle::tree_breadth(&aug, 12).unwrap(), 2);
        // One bag with everything: no vertex of G'_1 sees all of it.
        let all: Vec<usize> = (0..aug.n()).collect();
        let d = Decomposition::single_bag(all);
        assert!(matches!(transfer_decomposition(&c6, 1, &d, Direction::Project), Err(Error::Breadth(2, 1))));
    }
}
