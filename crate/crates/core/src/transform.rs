//! Graphs whose vertices are derived objects: divisors, spanning trees,
//! perfect matchings, degree-sequence realizations, edge subsets, and edges.

use crate::budget::{self, ensure_within};
use crate::catalog::{canonical_form, canonical_key};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::{ids_csv, Id};
use crate::morphism::VertexMap;
use itertools::Itertools;
use std::collections::{BTreeMap, BTreeSet};

/// A derived graph whose vertices stand for edge subsets of a base graph.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SetFamilyGraph {
    pub graph: Graph,
    pub members: BTreeMap<Id, BTreeSet<Id>>,
}

/// A derived graph whose vertices stand for isomorphism classes realizing
/// a degree sequence, each with a canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RealizationFamily {
    pub graph: Graph,
    pub members: BTreeMap<Id, Graph>,
}

fn set_id(edges: &BTreeSet<Id>) -> Id {
    Id::from(format!("{{{}}}", ids_csv(edges)))
}

fn require_undirected(g: &Graph, what: &str) -> Result<()> {
    if g.directed() {
        return Err(Error::unsupported(format!(
            "{what} is defined for undirected graphs"
        )));
    }
    Ok(())
}

/// The divisor graph on `lo..=hi`: an arrow from each integer to every
/// proper multiple in range.
pub fn divisibility_graph(lo: i64, hi: i64) -> Result<Graph> {
    if lo < 1 || hi < lo {
        return Err(Error::invalid("divisor graph needs 1 <= lo <= hi"));
    }
    let mut g = Graph::new(true, true);
    for v in lo..=hi {
        g.add_vertex(Id::from(v));
    }
    let mut k = 0;
    for a in lo..=hi {
        for b in lo..=hi {
            if a != b && b % a == 0 {
                g.add_edge(Id::from(format!("e{k}")), Id::from(a), Id::from(b))?;
                k += 1;
            }
        }
    }
    Ok(g)
}

/// Every spanning tree of a connected graph, listed as edge-id sets.
pub fn spanning_trees(g: &Graph, budget: u64) -> Result<Vec<BTreeSet<Id>>> {
    require_undirected(g, "the spanning-tree family")?;
    if !g.is_connected() {
        return Err(Error::invalid("a disconnected graph has no spanning trees"));
    }
    if g.order() == 0 {
        return Err(Error::invalid("the empty graph has no spanning trees"));
    }
    let need = g.order() - 1;
    ensure_within(
        budget::binomial(g.size() as u64, need as u64),
        budget,
        "edge subset enumeration",
    )?;
    let ids = g.edge_ids();
    let mut out = Vec::new();
    for combo in ids.iter().combinations(need) {
        let set: BTreeSet<Id> = combo.into_iter().cloned().collect();
        let candidate = g.induced_by_edges(&set, true)?;
        if candidate.is_connected() {
            out.push(set);
        }
    }
    Ok(out)
}

/// The spanning-tree exchange graph: trees are adjacent when they differ
/// in exactly one edge.
pub fn tree_transformation_graph(g: &Graph, budget: u64) -> Result<SetFamilyGraph> {
    let trees = spanning_trees(g, budget)?;
    family_graph(trees, |a, b| a.symmetric_difference(b).count() == 2)
}

/// Every perfect matching of an undirected graph, listed as edge-id sets.
pub fn perfect_matchings(g: &Graph, budget: u64) -> Result<Vec<BTreeSet<Id>>> {
    require_undirected(g, "the matching family")?;
    if g.order() % 2 != 0 {
        return Ok(Vec::new());
    }
    let need = g.order() / 2;
    ensure_within(
        budget::binomial(g.size() as u64, need as u64),
        budget,
        "edge subset enumeration",
    )?;
    let ids = g.edge_ids();
    let mut out = Vec::new();
    'combo: for combo in ids.iter().combinations(need) {
        let mut covered = BTreeSet::new();
        for e in &combo {
            let (a, b) = g.endpoints(e).expect("listed edge");
            if a == b || !covered.insert(a.clone()) || !covered.insert(b.clone()) {
                continue 'combo;
            }
        }
        out.push(combo.into_iter().cloned().collect());
    }
    Ok(out)
}

/// The matching exchange graph: matchings are adjacent when their
/// symmetric difference is a single alternating cycle.
pub fn matching_transformation_graph(g: &Graph, budget: u64) -> Result<SetFamilyGraph> {
    let matchings = perfect_matchings(g, budget)?;
    if matchings.is_empty() {
        return Err(Error::invalid("the graph has no perfect matching"));
    }
    let single_cycle = |a: &BTreeSet<Id>, b: &BTreeSet<Id>| {
        let diff: BTreeSet<Id> = a.symmetric_difference(b).cloned().collect();
        if diff.is_empty() {
            return false;
        }
        let sub = g
            .induced_by_edges(&diff, false)
            .expect("member edges exist");
        sub.is_connected() && sub.vertices().all(|v| sub.degree(v) == 2)
    };
    family_graph(matchings, single_cycle)
}

fn family_graph(
    sets: Vec<BTreeSet<Id>>,
    adjacent: impl Fn(&BTreeSet<Id>, &BTreeSet<Id>) -> bool,
) -> Result<SetFamilyGraph> {
    let members: BTreeMap<Id, BTreeSet<Id>> =
        sets.into_iter().map(|s| (set_id(&s), s)).collect();
    let keys: Vec<&Id> = members.keys().collect();
    let mut pairs = Vec::new();
    for (i, a) in keys.iter().enumerate() {
        for b in keys.iter().skip(i + 1) {
            if adjacent(&members[*a], &members[*b]) {
                pairs.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    let graph = Graph::simple_undirected(members.keys().cloned(), pairs)?;
    Ok(SetFamilyGraph { graph, members })
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect()
}

/// The realization graph of a degree sequence: one vertex per isomorphism
/// class of simple graphs realizing it, classes adjacent when a two-switch
/// (trade two disjoint edges for one of their two recombinations) carries a
/// member of one onto a member of the other.
pub fn realization_graph(degrees: &[usize], budget: u64) -> Result<RealizationFamily> {
    let n = degrees.len();
    if n == 0 {
        return Err(Error::invalid("the degree sequence is empty"));
    }
    if degrees.iter().sum::<usize>() % 2 != 0 || degrees.iter().any(|&d| d >= n) {
        return Err(Error::invalid("the degree sequence is not realizable"));
    }
    let pairs = pair_list(n);
    ensure_within(
        budget::pow(2, pairs.len() as u32),
        budget,
        "labeled realization enumeration",
    )?;
    let mut want: Vec<usize> = degrees.to_vec();
    want.sort_unstable();

    let degree_profile = |mask: u32| -> Vec<usize> {
        let mut d = vec![0usize; n];
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                d[i] += 1;
                d[j] += 1;
            }
        }
        d.sort_unstable();
        d
    };
    let graph_of = |mask: u32| -> Graph {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &(i, j))| (Id::from(i), Id::from(j)));
        Graph::simple_undirected((0..n).map(Id::from), chosen).expect("valid pair list")
    };

    let mut class_of_mask: BTreeMap<u32, u64> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        if degree_profile(mask) == want {
            let (_, key) = canonical_key(&graph_of(mask), budget)?;
            class_of_mask.insert(mask, key);
        }
    }
    if class_of_mask.is_empty() {
        return Err(Error::invalid("the degree sequence is not realizable"));
    }
    let keys: BTreeSet<u64> = class_of_mask.values().copied().collect();
    let class_index: BTreeMap<u64, usize> =
        keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let class_vertex = |c: usize| Id::from(format!("r{c}"));

    let mut members = BTreeMap::new();
    for (&mask, key) in &class_of_mask {
        let c = class_index[key];
        let v = class_vertex(c);
        if !members.contains_key(&v) {
            members.insert(v, canonical_form(&graph_of(mask), budget)?);
        }
    }

    let pair_index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(b, &p)| (p, b)).collect();
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (&mask, key) in &class_of_mask {
        let from = class_index[key];
        let present: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        for (x, &(a, b)) in present.iter().enumerate() {
            for &(c, d) in present.iter().skip(x + 1) {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                for (p, q) in [((a, c), (b, d)), ((a, d), (b, c))] {
                    let np = (p.0.min(p.1), p.0.max(p.1));
                    let nq = (q.0.min(q.1), q.0.max(q.1));
                    let (bp, bq) = (pair_index[&np], pair_index[&nq]);
                    if mask >> bp & 1 == 1 || mask >> bq & 1 == 1 {
                        continue;
                    }
                    let switched = mask
                        & !(1 << pair_index[&(a, b)])
                        & !(1 << pair_index[&(c, d)])
                        | (1 << bp)
                        | (1 << bq);
                    let to = class_index[&class_of_mask[&switched]];
                    if from != to {
                        edges.insert((from.min(to), from.max(to)));
                    }
                }
            }
        }
    }
    let graph = Graph::simple_undirected(
        (0..keys.len()).map(class_vertex),
        edges
            .into_iter()
            .map(|(a, b)| (class_vertex(a), class_vertex(b))),
    )?;
    Ok(RealizationFamily { graph, members })
}

/// All injective adjacency-preserving vertex maps from `pattern` into
/// `host`; extra host edges are allowed.
fn embeddings(pattern: &Graph, host: &Graph) -> Vec<VertexMap> {
    let pvs = pattern.vertex_vec();
    let hvs = host.vertex_vec();
    let mut out = Vec::new();
    let mut assigned: Vec<usize> = Vec::new();

    fn rec(
        pvs: &[Id],
        hvs: &[Id],
        pattern: &Graph,
        host: &Graph,
        assigned: &mut Vec<usize>,
        out: &mut Vec<VertexMap>,
    ) {
        let vi = assigned.len();
        if vi == pvs.len() {
            out.push(
                pvs.iter()
                    .zip(assigned.iter())
                    .map(|(p, &h)| (p.clone(), hvs[h].clone()))
                    .collect(),
            );
            return;
        }
        for cand in 0..hvs.len() {
            if assigned.contains(&cand) {
                continue;
            }
            let ok = (0..vi).all(|prev| {
                !pattern.has_adjacency(&pvs[prev], &pvs[vi])
                    || host.has_adjacency(&hvs[assigned[prev]], &hvs[cand])
            });
            if ok {
                assigned.push(cand);
                rec(pvs, hvs, pattern, host, assigned, out);
                assigned.pop();
            }
        }
    }

    rec(&pvs, &hvs, pattern, host, &mut assigned, &mut out);
    out
}

#[derive(Debug, Clone, Copy)]
pub struct SuperLineOptions {
    /// Demand a copy of the pattern that uses an edge private to each side.
    pub require_cross: bool,
    /// Join only disjoint subsets.
    pub disjoint_only: bool,
}

impl Default for SuperLineOptions {
    fn default() -> Self {
        SuperLineOptions {
            require_cross: true,
            disjoint_only: false,
        }
    }
}

/// The super line graph of index `r` over pattern `h`: vertices are the
/// r-subsets of the base graph's edges, and two subsets are adjacent when
/// their union carries a copy of the pattern, subject to the options.
pub fn super_line_graph(
    g: &Graph,
    r: usize,
    h: &Graph,
    opts: SuperLineOptions,
    budget: u64,
) -> Result<SetFamilyGraph> {
    require_undirected(g, "the super line graph")?;
    require_undirected(h, "the super line pattern")?;
    if !h.simple() {
        return Err(Error::unsupported(
            "the super line pattern must be a simple graph",
        ));
    }
    if r == 0 {
        return Err(Error::invalid("the subset size must be at least 1"));
    }
    if r > g.size() {
        return Err(Error::invalid(format!(
            "subset size {r} exceeds the {} edges available",
            g.size()
        )));
    }
    let subset_count = budget::binomial(g.size() as u64, r as u64);
    ensure_within(
        subset_count.saturating_mul(subset_count),
        budget,
        "subset pair enumeration",
    )?;
    let ids = g.edge_ids();
    let subsets: Vec<BTreeSet<Id>> = ids
        .iter()
        .combinations(r)
        .map(|c| c.into_iter().cloned().collect())
        .collect();
    let adjacent = |s: &BTreeSet<Id>, t: &BTreeSet<Id>| -> Result<bool> {
        if opts.disjoint_only && !s.is_disjoint(t) {
            return Ok(false);
        }
        let union: BTreeSet<Id> = s.union(t).cloned().collect();
        let sub = g.induced_by_edges(&union, false)?;
        let s_only: BTreeSet<&Id> = s.difference(t).collect();
        let t_only: BTreeSet<&Id> = t.difference(s).collect();
        for f in embeddings(h, &sub) {
            if !opts.require_cross {
                return Ok(true);
            }
            // pattern edges able to land on an edge private to either side
            let mut hits_s = BTreeSet::new();
            let mut hits_t = BTreeSet::new();
            for (pi, (_, (x, y))) in h.edges().enumerate() {
                let (fx, fy) = (&f[x], &f[y]);
                for (eid, (u, v)) in sub.edges() {
                    let lands = (u == fx && v == fy) || (u == fy && v == fx);
                    if lands {
                        if s_only.contains(eid) {
                            hits_s.insert(pi);
                        }
                        if t_only.contains(eid) {
                            hits_t.insert(pi);
                        }
                    }
                }
            }
            let crossable = !hits_s.is_empty()
                && !hits_t.is_empty()
                && hits_s.union(&hits_t).count() >= 2;
            if crossable {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let members: BTreeMap<Id, BTreeSet<Id>> =
        subsets.into_iter().map(|s| (set_id(&s), s)).collect();
    let keys: Vec<&Id> = members.keys().collect();
    let mut pairs = Vec::new();
    for (i, a) in keys.iter().enumerate() {
        for b in keys.iter().skip(i + 1) {
            if adjacent(&members[*a], &members[*b])? {
                pairs.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    let graph = Graph::simple_undirected(members.keys().cloned(), pairs)?;
    Ok(SetFamilyGraph { graph, members })
}

/// The line graph: one vertex per edge, adjacent when the edges share an
/// endpoint. Loops and parallel edges are ordinary citizens: parallels
/// share both endpoints and a loop shares its vertex with every edge there.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    require_undirected(g, "the line graph")?;
    let ids = g.edge_ids();
    let mut pairs = Vec::new();
    for (i, a) in ids.iter().enumerate() {
        let (a1, a2) = g.endpoints(a).expect("listed edge");
        for b in ids.iter().skip(i + 1) {
            let (b1, b2) = g.endpoints(b).expect("listed edge");
            if a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2 {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    Graph::simple_undirected(ids, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_BUDGET;
    use crate::catalog::{complete_bipartite, cube_q3, cycle, path};
    use crate::morphism::are_isomorphic;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn divisor_graph_frozen() {
        let g = divisibility_graph(2, 8).unwrap();
        assert!(g.directed());
        assert_eq!(g.order(), 7);
        // 2->4 2->6 2->8 3->6 4->8
        assert_eq!(g.size(), 5);
        assert!(g.has_adjacency(&Id::from(2), &Id::from(4)));
        assert!(!g.has_adjacency(&Id::from(4), &Id::from(2)));
        assert!(divisibility_graph(0, 4).is_err());
    }

    #[test]
    fn triangle_trees_exchange_as_a_triangle() {
        let fam = tree_transformation_graph(&k(3), DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 3);
        assert!(are_isomorphic(&fam.graph, &k(3), DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        let fam = tree_transformation_graph(&cycle(4).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 4);
        assert!(are_isomorphic(&fam.graph, &k(4), DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        // parallel edges give distinct one-edge trees
        let mut theta = Graph::new(false, false);
        theta.add_vertex(Id::from(0));
        theta.add_vertex(Id::from(1));
        for e in ["a", "b", "c"] {
            theta.add_edge(Id::from(e), Id::from(0), Id::from(1)).unwrap();
        }
        let fam = tree_transformation_graph(&theta, DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 3);
        assert!(are_isomorphic(&fam.graph, &k(3), DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        let two =
            Graph::simple_undirected([Id::from(0), Id::from(1)], Vec::<(Id, Id)>::new()).unwrap();
        assert!(tree_transformation_graph(&two, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn matching_exchange_on_small_graphs() {
        let fam = matching_transformation_graph(&cycle(6).unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 2);
        assert!(are_isomorphic(&fam.graph, &k(2), DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        let fam = matching_transformation_graph(&k(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 3);
        assert!(are_isomorphic(&fam.graph, &k(3), DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        let fam = matching_transformation_graph(&cube_q3(), DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 9);

        assert!(matching_transformation_graph(&path(3).unwrap(), DEFAULT_BUDGET).is_err());
        assert!(matching_transformation_graph(&k(3), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn all_two_regular_six_vertex_graphs() {
        let fam = realization_graph(&[2; 6], DEFAULT_BUDGET).unwrap();
        assert_eq!(fam.members.len(), 2, "one cycle or two triangles");
        assert!(are_isomorphic(&fam.graph, &k(2), DEFAULT_BUDGET)
            .unwrap()
            .is_some());
        let reps: Vec<&Graph> = fam.members.values().collect();
        let orders: BTreeSet<usize> = reps.iter().map(|g| g.order()).collect();
        assert_eq!(orders, [6].into());
        let c6 = cycle(6).unwrap();
        assert!(reps
            .iter()
            .any(|g| are_isomorphic(g, &c6, DEFAULT_BUDGET).unwrap().is_some()));

        let single = realization_graph(&[1, 1], DEFAULT_BUDGET).unwrap();
        assert_eq!(single.members.len(), 1);
        assert_eq!(single.graph.size(), 0);

        assert!(realization_graph(&[3, 1], DEFAULT_BUDGET).is_err());
        assert!(realization_graph(&[], DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn super_line_graph_with_index_one_is_the_line_graph() {
        for g in [k(3), path(4).unwrap(), cycle(5).unwrap(), complete_bipartite(1, 3).unwrap()] {
            let line = line_graph(&g).unwrap();
            let sup = super_line_graph(
                &g,
                1,
                &complete_bipartite(1, 2).unwrap(),
                SuperLineOptions::default(),
                DEFAULT_BUDGET,
            )
            .unwrap();
            assert!(
                are_isomorphic(&line, &sup.graph, DEFAULT_BUDGET)
                    .unwrap()
                    .is_some(),
                "disagreement on {g:?}"
            );
        }
    }

    #[test]
    fn super_line_modes_differ() {
        // two disjoint edges plus one crossing them
        let g = path(4).unwrap();
        let defaults = SuperLineOptions::default();
        let sup = super_line_graph(&g, 2, &k(2), defaults, DEFAULT_BUDGET).unwrap();
        // a single-edge pattern cannot use private edges from both sides
        assert_eq!(sup.graph.size(), 0);

        let literal = SuperLineOptions {
            require_cross: false,
            ..defaults
        };
        let sup = super_line_graph(&g, 2, &k(2), literal, DEFAULT_BUDGET).unwrap();
        assert!(sup.graph.size() > 0, "every union contains an edge");

        let disjoint = SuperLineOptions {
            disjoint_only: true,
            require_cross: false,
        };
        let all = super_line_graph(&g, 1, &k(2), literal, DEFAULT_BUDGET).unwrap();
        let dis = super_line_graph(&g, 1, &k(2), disjoint, DEFAULT_BUDGET).unwrap();
        assert!(dis.graph.size() <= all.graph.size());

        assert!(super_line_graph(&g, 9, &k(2), defaults, DEFAULT_BUDGET).is_err());
        assert!(super_line_graph(&g, 0, &k(2), defaults, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn line_graphs_of_named_graphs() {
        assert!(are_isomorphic(
            &line_graph(&path(3).unwrap()).unwrap(),
            &k(2),
            DEFAULT_BUDGET
        )
        .unwrap()
        .is_some());
        assert!(are_isomorphic(&line_graph(&k(3)).unwrap(), &k(3), DEFAULT_BUDGET)
            .unwrap()
            .is_some());
        assert!(are_isomorphic(
            &line_graph(&complete_bipartite(1, 3).unwrap()).unwrap(),
            &k(3),
            DEFAULT_BUDGET
        )
        .unwrap()
        .is_some());
        let c4 = cycle(4).unwrap();
        assert!(are_isomorphic(&line_graph(&c4).unwrap(), &c4, DEFAULT_BUDGET)
            .unwrap()
            .is_some());

        // parallels and loops are adjacent to everything they touch
        let mut m = Graph::new(false, false);
        m.add_vertex(Id::from(0));
        m.add_vertex(Id::from(1));
        m.add_edge(Id::from("a"), Id::from(0), Id::from(1)).unwrap();
        m.add_edge(Id::from("b"), Id::from(0), Id::from(1)).unwrap();
        m.add_edge(Id::from("l"), Id::from(0), Id::from(0)).unwrap();
        let line = line_graph(&m).unwrap();
        assert_eq!((line.order(), line.size()), (3, 3));
    }

    #[test]
    fn budget_refusals_are_up_front() {
        assert!(matches!(
            tree_transformation_graph(&k(6), 10),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            realization_graph(&[2; 6], 100),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            super_line_graph(&k(4), 3, &k(2), SuperLineOptions::default(), 10),
            Err(Error::ResourceLimit(_))
        ));
    }
}
