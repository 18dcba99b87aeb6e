//! Numeric and sequence invariants of graphs, plus a randomized harness
//! that checks invariance under vertex relabelings.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::{Graph, MergeMode};
use crate::id::Id;
use crate::morphism::{automorphism_group, relabel, VertexMap};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Vertex degrees in non-increasing order; a loop contributes 2.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut ds: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    ds
}

const DETERMINANT_MAX_ORDER: usize = 20;

/// Exact determinant of the 0/1 adjacency matrix of a simple undirected
/// graph, by fraction-free elimination. Orders above 20 are refused to
/// keep the arithmetic inside `i128`.
pub fn adjacency_determinant(g: &Graph) -> Result<i128> {
    if g.directed() {
        return Err(Error::invalid(
            "adjacency determinant is defined for undirected graphs",
        ));
    }
    if !g.is_loopless() || g.has_parallel_edges() {
        return Err(Error::invalid(
            "adjacency determinant is defined for simple graphs",
        ));
    }
    if g.order() > DETERMINANT_MAX_ORDER {
        return Err(Error::ResourceLimit(format!(
            "determinant supports up to {DETERMINANT_MAX_ORDER} vertices, got {}",
            g.order()
        )));
    }
    let vs = g.vertex_vec();
    let n = vs.len();
    let mut m = vec![vec![0i128; n]; n];
    for (i, u) in vs.iter().enumerate() {
        for (j, v) in vs.iter().enumerate() {
            if i != j && g.has_adjacency(u, v) {
                m[i][j] = 1;
            }
        }
    }
    Ok(bareiss_determinant(m))
}

fn bareiss_determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Headline parameters, computed on the underlying undirected graph.
/// `diameter` is `None` when the graph is disconnected or empty, `girth`
/// is `None` for forests (a loop gives girth 1, a parallel pair girth 2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphParameters {
    pub order: usize,
    pub size: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub vertex_connectivity: usize,
}

pub fn graph_parameters(g: &Graph, budget: u64) -> Result<GraphParameters> {
    let und = g.underlying_undirected(MergeMode::Multigraph)?;
    let adjacency = simple_adjacency(&und);
    Ok(GraphParameters {
        order: g.order(),
        size: g.size(),
        diameter: diameter(&adjacency),
        girth: girth(&und, &adjacency),
        vertex_connectivity: vertex_connectivity_impl(&adjacency, budget)?,
    })
}

/// Loop-free neighbor sets of the underlying undirected simple graph.
fn simple_adjacency(und: &Graph) -> BTreeMap<Id, BTreeSet<Id>> {
    let mut adj: BTreeMap<Id, BTreeSet<Id>> =
        und.vertices().map(|v| (v.clone(), BTreeSet::new())).collect();
    for (t, h) in und.edges().map(|(_, p)| p) {
        if t != h {
            adj.get_mut(t).unwrap().insert(h.clone());
            adj.get_mut(h).unwrap().insert(t.clone());
        }
    }
    adj
}

fn bfs_distances(adj: &BTreeMap<Id, BTreeSet<Id>>, start: &Id) -> BTreeMap<Id, usize> {
    let mut dist = BTreeMap::from([(start.clone(), 0usize)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        for w in &adj[&u] {
            if !dist.contains_key(w) {
                dist.insert(w.clone(), du + 1);
                queue.push_back(w.clone());
            }
        }
    }
    dist
}

fn diameter(adj: &BTreeMap<Id, BTreeSet<Id>>) -> Option<usize> {
    if adj.is_empty() {
        return None;
    }
    let mut max = 0;
    for v in adj.keys() {
        let dist = bfs_distances(adj, v);
        if dist.len() != adj.len() {
            return None; // disconnected
        }
        max = max.max(*dist.values().max().expect("nonempty"));
    }
    Some(max)
}

fn girth(und: &Graph, adj: &BTreeMap<Id, BTreeSet<Id>>) -> Option<usize> {
    if !und.is_loopless() {
        return Some(1);
    }
    let pairs: Vec<(Id, Id)> = und.adjacency_pairs().into_iter().collect();
    if pairs.iter().any(|(a, b)| und.multiplicity(a, b) >= 2) {
        return Some(2);
    }
    // shortest cycle through each root via breadth-first search; the
    // minimum over all roots is exact because a shortest cycle admits no
    // shortcut from any of its own vertices
    let mut best: Option<usize> = None;
    for root in adj.keys() {
        let mut dist: BTreeMap<&Id, usize> = BTreeMap::from([(root, 0)]);
        let mut parent: BTreeMap<&Id, &Id> = BTreeMap::new();
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in &adj[u] {
                if parent.get(u) == Some(&w) {
                    continue;
                }
                match dist.get(w) {
                    Some(dw) => {
                        let len = dist[u] + dw + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                    None => {
                        dist.insert(w, dist[u] + 1);
                        parent.insert(w, u);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    best
}

/// Minimum number of vertices whose removal disconnects the graph (or
/// reduces it to one vertex), found by exhausting removal sets in
/// ascending size. Complete graphs on n vertices give n - 1.
pub fn vertex_connectivity(g: &Graph, budget: u64) -> Result<usize> {
    let und = g.underlying_undirected(MergeMode::Multigraph)?;
    vertex_connectivity_impl(&simple_adjacency(&und), budget)
}

fn vertex_connectivity_impl(adj: &BTreeMap<Id, BTreeSet<Id>>, budget: u64) -> Result<usize> {
    let n = adj.len();
    if n <= 1 {
        return Ok(0);
    }
    if !connected_after_removal(adj, &BTreeSet::new()) {
        return Ok(0);
    }
    if adj.values().all(|ns| ns.len() == n - 1) {
        return Ok(n - 1);
    }
    ensure_within(budget::pow(2, n as u32), budget, "vertex cut search")?;
    let vs: Vec<&Id> = adj.keys().collect();
    for k in 1..=n - 2 {
        for cut in vs.iter().combinations(k) {
            let removed: BTreeSet<Id> = cut.iter().map(|v| (**v).clone()).collect();
            if !connected_after_removal(adj, &removed) {
                return Ok(k);
            }
        }
    }
    Ok(n - 1)
}

fn connected_after_removal(adj: &BTreeMap<Id, BTreeSet<Id>>, removed: &BTreeSet<Id>) -> bool {
    let Some(start) = adj.keys().find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(u) = queue.pop_front() {
        for w in &adj[&u] {
            if !removed.contains(w) && seen.insert(w.clone()) {
                queue.push_back(w.clone());
            }
        }
    }
    seen.len() == adj.len() - removed.len()
}

/// Value of a labeled invariant: a number or an integer sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InvariantValue {
    Int(i128),
    Seq(Vec<usize>),
}

pub const INVARIANT_LABELS: [&str; 4] =
    ["degree_sequence", "aut_order", "determinant", "min_id_degree"];

/// Evaluate a labeled invariant. `min_id_degree` (degree of the smallest
/// vertex id) is deliberately *not* relabeling-invariant; it exists so the
/// harness has a probe that must fail.
pub fn evaluate_invariant(label: &str, g: &Graph, budget: u64) -> Result<InvariantValue> {
    match label {
        "degree_sequence" => Ok(InvariantValue::Seq(degree_sequence(g))),
        "aut_order" => Ok(InvariantValue::Int(
            automorphism_group(g, budget)?.order() as i128
        )),
        "determinant" => Ok(InvariantValue::Int(adjacency_determinant(g)?)),
        "min_id_degree" => {
            let v = g
                .vertices()
                .next()
                .ok_or_else(|| Error::invalid("empty graph has no least vertex"))?;
            Ok(InvariantValue::Int(g.degree(v) as i128))
        }
        other => Err(Error::invalid(format!(
            "unknown invariant {other}; known: {}",
            INVARIANT_LABELS.join(", ")
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceFailure {
    pub relabeling: VertexMap,
    pub value: InvariantValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub invariant: String,
    pub value: InvariantValue,
    /// Relabelings actually evaluated.
    pub checked: usize,
    pub passed: bool,
    pub failure: Option<InvarianceFailure>,
}

/// Evaluate `label` on `g` and on `trials` seeded random relabelings of its
/// vertex set; report the first disagreement, if any.
pub fn check_invariance(
    label: &str,
    g: &Graph,
    trials: usize,
    seed: u64,
    budget: u64,
) -> Result<InvariantReport> {
    let base = evaluate_invariant(label, g, budget)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let ids = g.vertex_vec();
    let mut checked = 0;
    for _ in 0..trials {
        let mut shuffled = ids.clone();
        shuffled.shuffle(&mut rng);
        let map: VertexMap = ids.iter().cloned().zip(shuffled).collect();
        let relabeled = relabel(g, &map)?;
        checked += 1;
        let value = evaluate_invariant(label, &relabeled, budget)?;
        if value != base {
            return Ok(InvariantReport {
                invariant: label.to_string(),
                value: base,
                checked,
                passed: false,
                failure: Some(InvarianceFailure {
                    relabeling: map,
                    value,
                }),
            });
        }
    }
    Ok(InvariantReport {
        invariant: label.to_string(),
        value: base,
        checked,
        passed: true,
        failure: None,
    })
}

/// Is `h` (a same-id subgraph of `g`) fixed setwise by every automorphism
/// of `g`, on vertices and on edge endpoint pairs?
pub fn is_invariant_subgraph(g: &Graph, h: &Graph, budget: u64) -> Result<bool> {
    if !h.is_subgraph_of(g) {
        return Err(Error::invalid("h is not a subgraph of g"));
    }
    let group = automorphism_group(g, budget)?;
    let hv: BTreeSet<&Id> = h.vertices().collect();
    let hpairs = h.adjacency_pairs();
    for phi in &group.perms {
        if !hv.iter().all(|v| hv.contains(&phi[*v])) {
            return Ok(false);
        }
        for (a, b) in &hpairs {
            let image = h.pair(&phi[a], &phi[b]);
            if !hpairs.contains(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_BUDGET;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::simple_undirected(
            (0..n).map(Id::from),
            (0..n).map(|i| (Id::from(i), Id::from((i + 1) % n))),
        )
        .unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::simple_undirected(
            (0..n).map(Id::from),
            (0..n - 1).map(|i| (Id::from(i), Id::from(i + 1))),
        )
        .unwrap()
    }

    /// cofactor expansion, the independent oracle for the elimination code
    fn naive_det(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        let mut det = 0;
        for j in 0..n {
            if m[0][j] == 0 {
                continue;
            }
            let minor: Vec<Vec<i128>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c])
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            det += sign * m[0][j] * naive_det(&minor);
        }
        det
    }

    fn adjacency_matrix(g: &Graph) -> Vec<Vec<i128>> {
        let vs = g.vertex_vec();
        vs.iter()
            .map(|u| {
                vs.iter()
                    .map(|v| (u != v && g.has_adjacency(u, v)) as i128)
                    .collect()
            })
            .collect()
    }

    #[test]
    fn determinant_frozen_values() {
        assert_eq!(adjacency_determinant(&k(1)).unwrap(), 0);
        assert_eq!(adjacency_determinant(&k(2)).unwrap(), -1);
        assert_eq!(adjacency_determinant(&cycle(4)).unwrap(), 0);
        // elimination agrees with cofactor expansion
        for g in [k(1), k(2), k(3), k(4), k(5), cycle(4), cycle(5), cycle(6), path(5)] {
            assert_eq!(
                adjacency_determinant(&g).unwrap(),
                naive_det(&adjacency_matrix(&g)),
                "disagreement on a {}-vertex graph",
                g.order()
            );
        }
        assert!(adjacency_determinant(&Graph::new(true, true)).is_err());
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(degree_sequence(&k(4)), vec![3, 3, 3, 3]);
        assert_eq!(degree_sequence(&path(4)), vec![2, 2, 1, 1]);
        let mut loopy = Graph::new(false, false);
        loopy.add_vertex(0);
        loopy.add_edge("l", 0, 0).unwrap();
        assert_eq!(degree_sequence(&loopy), vec![2]);
    }

    #[test]
    fn parameters_frozen_values() {
        let p = graph_parameters(&k(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(
            p,
            GraphParameters {
                order: 4,
                size: 6,
                diameter: Some(1),
                girth: Some(3),
                vertex_connectivity: 3
            }
        );
        let p = graph_parameters(&cycle(5), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.diameter, Some(2));
        assert_eq!(p.girth, Some(5));
        assert_eq!(p.vertex_connectivity, 2);
        let p = graph_parameters(&path(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(p.diameter, Some(3));
        assert_eq!(p.girth, None);
        assert_eq!(p.vertex_connectivity, 1);
    }

    #[test]
    fn parameters_degenerate_and_multigraph() {
        let lonely = graph_parameters(&k(1), DEFAULT_BUDGET).unwrap();
        assert_eq!(lonely.diameter, Some(0));
        assert_eq!(lonely.vertex_connectivity, 0);

        let two_parts = Graph::simple_undirected((0..2).map(Id::from), []).unwrap();
        let p = graph_parameters(&two_parts, DEFAULT_BUDGET).unwrap();
        assert_eq!(p.diameter, None);
        assert_eq!(p.vertex_connectivity, 0);

        let mut multi = Graph::new(false, false);
        multi.add_vertex(0);
        multi.add_vertex(1);
        multi.add_edge("a", 0, 1).unwrap();
        multi.add_edge("b", 0, 1).unwrap();
        assert_eq!(graph_parameters(&multi, DEFAULT_BUDGET).unwrap().girth, Some(2));
        multi.add_edge("l", 1, 1).unwrap();
        assert_eq!(graph_parameters(&multi, DEFAULT_BUDGET).unwrap().girth, Some(1));
    }

    #[test]
    fn invariance_holds_for_real_invariants() {
        for label in ["degree_sequence", "aut_order", "determinant"] {
            let report = check_invariance(label, &cycle(5), 20, 7, DEFAULT_BUDGET).unwrap();
            assert!(report.passed, "{label} failed: {report:?}");
            assert_eq!(report.checked, 20);
        }
    }

    #[test]
    fn min_id_degree_probe_fails_on_a_star() {
        // star K_{1,3}, center 0: any relabeling moving a leaf onto id 0
        // changes the probe from 3 to 1
        let star = Graph::simple_undirected(
            (0..4).map(Id::from),
            (1..4).map(|i| (Id::from(0), Id::from(i))),
        )
        .unwrap();
        let report = check_invariance("min_id_degree", &star, 50, 1, DEFAULT_BUDGET).unwrap();
        assert!(!report.passed);
        let failure = report.failure.expect("witness recorded");
        assert_ne!(failure.value, report.value);
        assert!(check_invariance("no_such", &star, 1, 0, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn invariant_subgraph_examples() {
        // middle edge of the 6-vertex path is fixed by the flip
        let p6 = path(6);
        let middle: BTreeSet<Id> = [Id::from("e2")].into();
        let h = p6.induced_by_edges(&middle, false).unwrap();
        assert!(is_invariant_subgraph(&p6, &h, DEFAULT_BUDGET).unwrap());

        // a single edge of a triangle is moved by rotation
        let k3 = k(3);
        let one: BTreeSet<Id> = [Id::from("e0")].into();
        let h = k3.induced_by_edges(&one, false).unwrap();
        assert!(!is_invariant_subgraph(&k3, &h, DEFAULT_BUDGET).unwrap());

        // not a subgraph at all -> error
        assert!(is_invariant_subgraph(&k3, &path(4), DEFAULT_BUDGET).is_err());
    }
}
