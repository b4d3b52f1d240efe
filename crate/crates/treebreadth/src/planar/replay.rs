//! Rebuilding a breadth-one decomposition of the input atom from the one
//! found for the last graph of a run, undoing the steps in reverse order.

use std::collections::VecDeque;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::sets;

use super::machine::{Run, Step, StepLabel};
use super::work::Work;

fn replay_err(msg: impl Into<String>) -> Error {
    Error::Replay(msg.into())
}

fn dominated(g: &Work, bag: &[usize]) -> bool {
    g.dominator(bag).is_some()
}

/// Makes `x` and `y` share a bag when possible: both are added to every
/// node strictly between their closest occurrences, and for adjacent
/// occurrences one of them is pushed across if the bag stays dominated.
fn normalize_pair(d: &mut Decomposition, g: &Work, x: usize, y: usize) -> Result<()> {
    if d.node_containing_all(&[x, y]).is_some() {
        return Ok(());
    }
    let adj = d.node_adjacency();
    let mut parent = vec![usize::MAX; d.len()];
    let mut queue = VecDeque::new();
    for i in d.nodes_containing(x) {
        parent[i] = i;
        queue.push_back(i);
    }
    let mut end = None;
    while let Some(i) = queue.pop_front() {
        if sets::contains(&d.bags[i], y) {
            end = Some(i);
            break;
        }
        for &j in &adj[i] {
            if parent[j] == usize::MAX {
                parent[j] = i;
                queue.push_back(j);
            }
        }
    }
    let Some(end) = end else {
        return Err(replay_err(format!("vertices {} and {} are not both in the decomposition", x, y)));
    };
    let mut path = vec![end];
    while parent[*path.last().unwrap()] != *path.last().unwrap() {
        path.push(parent[*path.last().unwrap()]);
    }
    let (by, bx) = (path[0], *path.last().unwrap());
    let inner = &path[1..path.len() - 1];
    if inner.is_empty() {
        let mut with_y = d.bags[bx].clone();
        sets::insert(&mut with_y, y);
        if dominated(g, &with_y) {
            d.bags[bx] = with_y;
            return Ok(());
        }
        let mut with_x = d.bags[by].clone();
        sets::insert(&mut with_x, x);
        if dominated(g, &with_x) {
            d.bags[by] = with_x;
        }
        return Ok(());
    }
    for &i in inner {
        sets::insert(&mut d.bags[i], x);
        sets::insert(&mut d.bags[i], y);
        if !dominated(g, &d.bags[i]) {
            return Err(replay_err(format!("bag {:?} is undominated after joining {} and {}", d.bags[i], x, y)));
        }
    }
    Ok(())
}

/// Puts back `v`, absent from `d`, with its neighbourhood in `g`.
fn reinsert_vertex(d: &mut Decomposition, g: &Work, v: usize) -> Result<()> {
    let nb = g.nbrs(v);
    if let Some(i) = d.node_containing_all(&nb) {
        let j = d.add_bag(g.closed(v));
        d.add_edge(i, j);
        return Ok(());
    }
    let mut edges = d.edges.clone();
    edges.sort_unstable();
    for (i, j) in edges {
        if !sets::is_subset(&nb, &sets::union(&d.bags[i], &d.bags[j])) {
            continue;
        }
        let mut bi = d.bags[i].clone();
        let mut bj = d.bags[j].clone();
        sets::insert(&mut bi, v);
        sets::insert(&mut bj, v);
        if dominated(g, &bi) && dominated(g, &bj) {
            d.bags[i] = bi;
            d.bags[j] = bj;
            return Ok(());
        }
    }
    Err(replay_err(format!("no place to put back vertex {}", v)))
}

fn remove_vertices(d: &mut Decomposition, vs: &[usize]) {
    for &v in vs {
        d.remove_vertex(v);
    }
    d.drop_empty_bags();
}

fn attach(d: &mut Decomposition, anchor: &[usize], bag: Vec<usize>) -> Result<usize> {
    let i = d
        .node_containing_all(anchor)
        .ok_or_else(|| replay_err(format!("no bag contains {:?}", anchor)))?;
    let j = d.add_bag(bag);
    d.add_edge(i, j);
    Ok(j)
}

fn bad_count(d: &Decomposition, target: &Work) -> usize {
    d.bags.iter().filter(|b| !dominated(target, b)).count()
}

/// Turns `d`, a breadth-one decomposition of `relaxed`, into one of `target`,
/// where `relaxed` is `target` plus the edge `pq`.
fn repair(d: &mut Decomposition, relaxed: &Work, target: &Work, p: usize, q: usize) -> Result<()> {
    loop {
        let bad = bad_count(d, target);
        if bad == 0 {
            return Ok(());
        }
        if merge_pair(d, target) || shift_endpoint(d, relaxed, target, p, q, bad) {
            continue;
        }
        return Err(replay_err(format!("cannot repair {} undominated bags", bad)));
    }
}

/// Merges two nodes at skeleton distance at most two, one of them
/// undominated in `target`, whose union is dominated in `target`.
fn merge_pair(d: &mut Decomposition, target: &Work) -> bool {
    let adj = d.node_adjacency();
    for i in 0..d.len() {
        if dominated(target, &d.bags[i]) {
            continue;
        }
        let mut near: Vec<usize> = adj[i].clone();
        for &k in &adj[i] {
            near.extend(adj[k].iter().copied().filter(|&j| j != i));
        }
        near.sort_unstable();
        near.dedup();
        for j in near {
            if dominated(target, &sets::union(&d.bags[i], &d.bags[j])) {
                if adj[i].contains(&j) {
                    d.contract_nodes(i, j);
                } else {
                    merge_siblings(d, i, j);
                }
                return true;
            }
        }
    }
    false
}

/// Merges `j` into `i`, both neighbours of a common node.
fn merge_siblings(d: &mut Decomposition, i: usize, j: usize) {
    d.bags[i] = sets::union(&d.bags[i], &d.bags[j]);
    let mut edges: Vec<(usize, usize)> = d
        .edges
        .iter()
        .map(|&(a, b)| {
            let a = if a == j { i } else { a };
            let b = if b == j { i } else { b };
            (a.min(b), a.max(b))
        })
        .filter(|&(a, b)| a != b)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    d.edges = edges;
    d.bags[j].clear();
    d.drop_empty_bags();
}

/// Moves the endpoint `t` of the relaxed edge out of an undominated bag whose
/// only dominator was the other endpoint `s`, adding `s` to a neighbouring
/// bag that holds `t` instead.
fn shift_endpoint(d: &mut Decomposition, relaxed: &Work, target: &Work, p: usize, q: usize, bad: usize) -> bool {
    let adj = d.node_adjacency();
    for i in 0..d.len() {
        if dominated(target, &d.bags[i]) {
            continue;
        }
        for (s, t) in [(p, q), (q, p)] {
            if !sets::contains(&d.bags[i], t) || !relaxed.dominates(s, &d.bags[i]) {
                continue;
            }
            for &j in &adj[i] {
                if !sets::contains(&d.bags[j], t) {
                    continue;
                }
                let mut trial = d.clone();
                sets::remove(&mut trial.bags[i], t);
                sets::insert(&mut trial.bags[j], s);
                if dominated(relaxed, &trial.bags[i])
                    && dominated(relaxed, &trial.bags[j])
                    && relaxed.accepts(&trial)
                    && bad_count(&trial, target) < bad
                {
                    *d = trial;
                    return true;
                }
            }
        }
    }
    false
}

fn undo(step: &Step, after: &Work, d: &mut Decomposition) -> Result<()> {
    let before = &step.before;
    let (a, b, c, v) = (step.a, step.b, step.c, step.leaf.vertex);
    let missing = |what: &str| replay_err(format!("step {} lacks {}", step.label.code(), what));
    match step.label {
        StepLabel::Type1 => {
            let dom = step.leaf.dominator.ok_or_else(|| missing("a dominator"))?;
            let (x, y) = (step.x.ok_or_else(|| missing("x"))?, step.y.ok_or_else(|| missing("y"))?);
            normalize_pair(d, after, a, c)?;
            remove_vertices(d, &[x, y]);
            let mut b2 = before.nbrs(v);
            sets::insert(&mut b2, dom);
            let j = attach(d, &[a, c, dom], b2)?;
            let k = d.add_bag(before.closed(v));
            d.add_edge(j, k);
        }
        StepLabel::PrimeEasy => {
            normalize_pair(d, after, a, c)?;
            reinsert_vertex(d, before, v)?;
        }
        StepLabel::AddEdgeBv => {
            normalize_pair(d, after, a, c)?;
            remove_vertices(d, &[v]);
            reinsert_vertex(d, before, v)?;
        }
        StepLabel::PrimeDifficult => {
            let u = step.u.ok_or_else(|| missing("u"))?;
            normalize_pair(d, after, a, c)?;
            let only_v: Vec<usize> =
                (0..d.len()).filter(|&i| after.dominators(&d.bags[i]) == vec![v]).collect();
            match only_v.as_slice() {
                [] => {
                    remove_vertices(d, &[v]);
                    reinsert_vertex(d, before, v)?;
                }
                &[i] => split_around(d, i, [a, b, c, u, v])?,
                _ => return Err(replay_err("several bags are dominated by the leaf alone")),
            }
        }
        StepLabel::ConnectB | StepLabel::Diamond => {
            let u = step.u.ok_or_else(|| missing("u"))?;
            let x = step.x.ok_or_else(|| missing("x"))?;
            normalize_pair(d, after, a, u)?;
            remove_vertices(d, &[c, v]);
            attach(d, &[a, x, u], before.closed(b))?;
        }
        StepLabel::ContractVa => {
            let mut target = before.clone();
            target.remove_vertex(v);
            repair(d, after, &target, a, c)?;
            attach(d, &[a, b, c], before.closed(v))?;
        }
        StepLabel::FinalCase => {
            let (y, z) = (step.y.ok_or_else(|| missing("y"))?, step.z.ok_or_else(|| missing("z"))?);
            repair(d, after, before, y, z)?;
        }
    }
    Ok(())
}

/// Replaces the bag `N[v] = {a, b, c, u, v}` of node `i` by the two bags
/// `{a, b, u, v}` and `{b, c, u, v}`, and drops `v` from every other bag.
fn split_around(d: &mut Decomposition, i: usize, [a, b, c, u, v]: [usize; 5]) -> Result<()> {
    if d.bags[i] != sets::sorted(vec![a, b, c, u, v]) {
        return Err(replay_err(format!("bag {:?} dominated by the leaf alone is not its neighbourhood", d.bags[i])));
    }
    for j in 0..d.len() {
        if j != i {
            sets::remove(&mut d.bags[j], v);
        }
    }
    let left = sets::sorted(vec![a, b, u, v]);
    let right = sets::sorted(vec![b, c, u, v]);
    let adj = d.node_adjacency();
    let mut to_right = Vec::new();
    for &j in &adj[i] {
        let meet = sets::intersection(&d.bags[i], &d.bags[j]);
        if sets::is_subset(&meet, &left) {
            continue;
        }
        if sets::is_subset(&meet, &right) {
            to_right.push(j);
        } else {
            return Err(replay_err(format!("bag {:?} cannot follow either half", d.bags[j])));
        }
    }
    d.bags[i] = left;
    let r = d.add_bag(right);
    d.edges.retain(|&(x, y)| !((to_right.contains(&x) && y == i) || (to_right.contains(&y) && x == i)));
    for j in to_right {
        d.add_edge(j, r);
    }
    d.add_edge(i, r);
    d.drop_empty_bags();
    Ok(())
}

fn check(d: &Decomposition, g: &Work, label: StepLabel, when: &str) -> Result<()> {
    if let Some(why) = g.violation(d) {
        return Err(replay_err(format!("{} step {}: {}", when, label.code(), why)));
    }
    if let Some(bag) = d.bags.iter().find(|b| !dominated(g, b)) {
        return Err(replay_err(format!("{} step {}: bag {:?} is undominated", when, label.code(), bag)));
    }
    Ok(())
}

/// Undoes every step of a positive run. The result uses the ids of the atom.
pub(crate) fn replay(run: &Run) -> Result<Decomposition> {
    let mut d = run
        .decomposition
        .clone()
        .ok_or_else(|| replay_err("the run ended without a decomposition"))?;
    let steps = &run.trace.steps;
    for (k, step) in steps.iter().enumerate().rev() {
        let after = steps.get(k + 1).map_or(&run.last, |s| &s.before);
        d.reduce();
        check(&d, after, step.label, "before undoing")?;
        undo(step, after, &mut d)?;
        check(&d, &step.before, step.label, "after undoing")?;
    }
    d.reduce();
    Ok(d)
}
