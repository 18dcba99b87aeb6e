//! Minor and topological-minor testing on small simple undirected graphs,
//! witness verification, planarity by excluded minors, and audits of the
//! minor relation over graph pools.

use crate::budget::ensure_within;
use crate::catalog::{complete, complete_bipartite};
use crate::contraction::exists_contraction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use crate::morphism::{are_isomorphic, subgraph_embedding, VertexMap};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

/// Hosts above this order are refused: branch-set search is exponential.
pub const MINOR_HOST_MAX: usize = 12;
/// Patterns above this order are refused.
pub const MINOR_PATTERN_MAX: usize = 7;

fn check_caps(pattern: &Graph, host: &Graph) -> Result<()> {
    for (g, role) in [(pattern, "pattern"), (host, "host")] {
        if g.directed() || !g.simple() {
            return Err(Error::unsupported(format!(
                "{role} must be a simple undirected graph"
            )));
        }
    }
    if host.order() > MINOR_HOST_MAX {
        return Err(Error::ResourceLimit(format!(
            "host has {} vertices, branch-set search caps at {MINOR_HOST_MAX}",
            host.order()
        )));
    }
    if pattern.order() > MINOR_PATTERN_MAX {
        return Err(Error::ResourceLimit(format!(
            "pattern has {} vertices, branch-set search caps at {MINOR_PATTERN_MAX}",
            pattern.order()
        )));
    }
    Ok(())
}

struct HostView {
    ids: Vec<Id>,
    adj: Vec<u32>,
    /// Smallest edge id per unordered index pair.
    edge_by_pair: BTreeMap<(usize, usize), Id>,
}

impl HostView {
    fn build(host: &Graph) -> HostView {
        let ids = host.vertex_vec();
        let index: BTreeMap<&Id, usize> =
            ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![0u32; ids.len()];
        let mut edge_by_pair = BTreeMap::new();
        for (e, (a, b)) in host.edges() {
            let (i, j) = (index[a], index[b]);
            if i == j {
                continue;
            }
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            let key = (i.min(j), i.max(j));
            edge_by_pair.entry(key).or_insert_with(|| e.clone());
        }
        HostView { ids, adj, edge_by_pair }
    }

    fn connected(&self, mask: u32) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros();
        let mut seen = 1u32 << start;
        loop {
            let mut grown = seen;
            let mut rest = seen;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grown |= self.adj[i] & mask;
            }
            if grown == seen {
                return seen == mask;
            }
            seen = grown;
        }
    }

    fn touches(&self, a: u32, b: u32) -> bool {
        let mut rest = a;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[i] & b != 0 {
                return true;
            }
        }
        false
    }

    /// The smallest-id edge joining the two vertex sets.
    fn crossing_edge(&self, a: u32, b: u32) -> Option<Id> {
        let mut best: Option<&Id> = None;
        for (&(i, j), e) in &self.edge_by_pair {
            let crosses = (a >> i & 1 == 1 && b >> j & 1 == 1)
                || (a >> j & 1 == 1 && b >> i & 1 == 1);
            if crosses && best.is_none_or(|cur| e < cur) {
                best = Some(e);
            }
        }
        best.cloned()
    }

    /// Edge ids of a spanning tree of the induced subgraph on `mask`.
    fn spanning_tree(&self, mask: u32) -> Vec<Id> {
        let mut tree = Vec::new();
        let mut seen = 1u32 << mask.trailing_zeros();
        while seen != mask {
            let mut attached = None;
            for (&(i, j), e) in &self.edge_by_pair {
                let inside = mask >> i & 1 == 1 && mask >> j & 1 == 1;
                let grows = (seen >> i & 1) != (seen >> j & 1);
                if inside && grows {
                    attached = Some((i, j, e.clone()));
                    break;
                }
            }
            let (i, j, e) = attached.expect("mask is connected");
            seen |= (1 << i) | (1 << j);
            tree.push(e);
        }
        tree
    }
}

/// How a pattern sits inside a host as a minor: disjoint connected branch
/// sets, one per pattern vertex, with a host edge behind every pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorWitness {
    pub branch_map: BTreeMap<Id, BTreeSet<Id>>,
    /// Spanning trees of the branch sets plus one crossing edge per
    /// pattern edge.
    pub used_edges: BTreeSet<Id>,
}

/// Search for branch sets realizing `pattern` as a minor of `host`,
/// returning the first witness in canonical order.
pub fn is_minor(pattern: &Graph, host: &Graph) -> Result<Option<MinorWitness>> {
    check_caps(pattern, host)?;
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(None);
    }
    let hv = HostView::build(host);
    let n = hv.ids.len();
    let pvs = pattern.vertex_vec();
    let k = pvs.len();
    if k == 0 {
        return Ok(Some(MinorWitness {
            branch_map: BTreeMap::new(),
            used_edges: BTreeSet::new(),
        }));
    }
    // all nonempty connected vertex sets, ascending as bit strings
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let conn: Vec<u32> = (1..=full).filter(|&m| hv.connected(m)).collect();
    let needs: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..i)
                .filter(|&j| pattern.has_adjacency(&pvs[i], &pvs[j]))
                .collect()
        })
        .collect();

    fn search(
        pi: usize,
        free: u32,
        chosen: &mut Vec<u32>,
        conn: &[u32],
        needs: &[Vec<usize>],
        hv: &HostView,
    ) -> bool {
        if pi == needs.len() {
            return true;
        }
        if (free.count_ones() as usize) < needs.len() - pi {
            return false;
        }
        for &mask in conn {
            if mask & !free != 0 {
                continue;
            }
            if !needs[pi].iter().all(|&j| hv.touches(chosen[j], mask)) {
                continue;
            }
            chosen.push(mask);
            if search(pi + 1, free & !mask, chosen, conn, needs, hv) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    let mut chosen = Vec::with_capacity(k);
    if !search(0, full, &mut chosen, &conn, &needs, &hv) {
        return Ok(None);
    }
    let mut branch_map = BTreeMap::new();
    let mut used_edges = BTreeSet::new();
    for (v, &mask) in pvs.iter().zip(&chosen) {
        let set: BTreeSet<Id> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| hv.ids[i].clone())
            .collect();
        used_edges.extend(hv.spanning_tree(mask));
        branch_map.insert(v.clone(), set);
    }
    for (i, vi) in pvs.iter().enumerate() {
        for (j, vj) in pvs.iter().enumerate().skip(i + 1) {
            if pattern.has_adjacency(vi, vj) {
                let e = hv
                    .crossing_edge(chosen[i], chosen[j])
                    .expect("search guaranteed a crossing edge");
                used_edges.insert(e);
            }
        }
    }
    Ok(Some(MinorWitness { branch_map, used_edges }))
}

/// Check a claimed minor witness from scratch, using only its listed edges.
pub fn verify_minor_witness(pattern: &Graph, host: &Graph, w: &MinorWitness) -> Result<()> {
    let claimed: BTreeSet<&Id> = w.branch_map.keys().collect();
    let actual: BTreeSet<&Id> = pattern.vertex_set().iter().collect();
    if claimed != actual {
        return Err(Error::invalid("branch map keys differ from pattern vertices"));
    }
    for e in &w.used_edges {
        if !host.edge_ids().contains(e) {
            return Err(Error::invalid(format!("used edge {e} is not a host edge")));
        }
    }
    let skeleton = host.induced_by_edges(&w.used_edges, true)?;
    let mut seen: BTreeSet<&Id> = BTreeSet::new();
    for (pv, set) in &w.branch_map {
        if set.is_empty() {
            return Err(Error::invalid(format!("branch set of {pv} is empty")));
        }
        for v in set {
            if !host.vertex_set().contains(v) {
                return Err(Error::invalid(format!("branch member {v} is not a host vertex")));
            }
            if !seen.insert(v) {
                return Err(Error::invalid(format!("host vertex {v} is in two branch sets")));
            }
        }
        if !skeleton.induced_by_vertices(set)?.is_connected() {
            return Err(Error::invalid(format!(
                "the used edges leave the branch set of {pv} disconnected"
            )));
        }
    }
    for (a, b) in pattern.adjacency_pairs() {
        if a == b {
            continue;
        }
        let (sa, sb) = (&w.branch_map[&a], &w.branch_map[&b]);
        let crossed = skeleton.edges().any(|(_, (t, h))| {
            (sa.contains(t) && sb.contains(h)) || (sa.contains(h) && sb.contains(t))
        });
        if !crossed {
            return Err(Error::invalid(format!(
                "no used edge joins the branch sets of {a} and {b}"
            )));
        }
    }
    Ok(())
}

/// How a pattern sits inside a host as a subdivision: injective branch
/// vertices plus internally disjoint paths, one per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TopologicalWitness {
    pub branch_map: VertexMap,
    /// Host vertex sequences keyed by pattern edge id.
    pub paths: BTreeMap<Id, Vec<Id>>,
}

/// Search for `pattern` as a topological minor of `host`: branch vertices
/// joined by internally disjoint host paths.
pub fn is_topological_minor(pattern: &Graph, host: &Graph) -> Result<Option<TopologicalWitness>> {
    check_caps(pattern, host)?;
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return Ok(None);
    }
    let hv = HostView::build(host);
    let n = hv.ids.len();
    let pvs = pattern.vertex_vec();
    let k = pvs.len();
    let pattern_edges: Vec<(usize, usize, Id)> = {
        let index: BTreeMap<&Id, usize> = pvs.iter().enumerate().map(|(i, v)| (v, i)).collect();
        pattern
            .edges()
            .map(|(e, (a, b))| (index[a], index[b], e.clone()))
            .collect()
    };
    let host_deg: Vec<usize> = (0..n).map(|i| hv.adj[i].count_ones() as usize).collect();
    let pattern_deg: Vec<usize> = pvs.iter().map(|v| pattern.degree(v)).collect();

    struct Search<'a> {
        hv: &'a HostView,
        edges: &'a [(usize, usize, Id)],
        images: Vec<usize>,
        /// Interior vertices claimed by earlier paths, and all branch images.
        blocked: u32,
        paths: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn paths_from(&mut self, ei: usize) -> bool {
            if ei == self.edges.len() {
                return true;
            }
            let (a, b, _) = self.edges[ei];
            let mut path = vec![self.images[a]];
            self.extend(ei, self.images[b], &mut path)
        }

        fn extend(&mut self, ei: usize, to: usize, path: &mut Vec<usize>) -> bool {
            let at = *path.last().expect("path starts at the branch image");
            let mut options = self.hv.adj[at];
            while options != 0 {
                let next = options.trailing_zeros() as usize;
                options &= options - 1;
                if next == to {
                    let interior: u32 = path[1..].iter().fold(0, |m, &i| m | (1 << i));
                    self.blocked |= interior;
                    let mut full = path.clone();
                    full.push(to);
                    self.paths.push(full);
                    if self.paths_from(ei + 1) {
                        return true;
                    }
                    self.paths.pop();
                    self.blocked &= !interior;
                    continue;
                }
                if self.blocked >> next & 1 == 1 || path.contains(&next) {
                    continue;
                }
                path.push(next);
                if self.extend(ei, to, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
    }

    fn assign(
        vi: usize,
        used: u32,
        images: &mut Vec<usize>,
        pvs_len: usize,
        n: usize,
        host_deg: &[usize],
        pattern_deg: &[usize],
        finish: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if vi == pvs_len {
            return finish(images);
        }
        for cand in 0..n {
            if used >> cand & 1 == 1 || host_deg[cand] < pattern_deg[vi] {
                continue;
            }
            images.push(cand);
            if assign(vi + 1, used | (1 << cand), images, pvs_len, n, host_deg, pattern_deg, finish) {
                return true;
            }
            images.pop();
        }
        false
    }

    let mut result: Option<TopologicalWitness> = None;
    let mut images = Vec::with_capacity(k);
    let hv_ref = &hv;
    let pvs_ref = &pvs;
    let edges_ref = &pattern_edges;
    let mut finish = |images: &[usize]| -> bool {
        let branch_mask: u32 = images.iter().fold(0, |m, &i| m | (1 << i));
        let mut s = Search {
            hv: hv_ref,
            edges: edges_ref,
            images: images.to_vec(),
            blocked: branch_mask,
            paths: Vec::new(),
        };
        if !s.paths_from(0) {
            return false;
        }
        let branch_map: VertexMap = pvs_ref
            .iter()
            .zip(images)
            .map(|(v, &i)| (v.clone(), hv_ref.ids[i].clone()))
            .collect();
        let paths = edges_ref
            .iter()
            .zip(&s.paths)
            .map(|((_, _, e), p)| (e.clone(), p.iter().map(|&i| hv_ref.ids[i].clone()).collect()))
            .collect();
        result = Some(TopologicalWitness { branch_map, paths });
        true
    };
    assign(0, 0, &mut images, k, n, &host_deg, &pattern_deg, &mut finish);
    Ok(result)
}

/// Planarity by excluded minors: no complete graph on five vertices and no
/// three-by-three complete bipartite graph as a minor.
pub fn is_planar(g: &Graph) -> Result<bool> {
    if g.directed() {
        return Err(Error::unsupported("planarity is defined for undirected graphs"));
    }
    let simple = Graph::simple_undirected(
        g.vertex_vec(),
        g.adjacency_pairs().into_iter().filter(|(a, b)| a != b),
    )?;
    let k5 = complete(5)?;
    let k33 = complete_bipartite(3, 3)?;
    Ok(is_minor(&k5, &simple)?.is_none() && is_minor(&k33, &simple)?.is_none())
}

/// Order-theoretic health of the minor relation over a pool of graphs.
#[derive(Debug, Clone, Serialize)]
pub struct MinorOrderAudit {
    pub pool: usize,
    pub reflexive: bool,
    pub subgraph_implies_minor: bool,
    pub contraction_implies_minor: bool,
    pub transitive: bool,
    pub antisymmetric_up_to_iso: bool,
    pub comparable_pairs: usize,
}

impl MinorOrderAudit {
    pub fn all_hold(&self) -> bool {
        self.reflexive
            && self.subgraph_implies_minor
            && self.contraction_implies_minor
            && self.transitive
            && self.antisymmetric_up_to_iso
    }
}

/// Check reflexivity, transitivity, antisymmetry up to isomorphism, and
/// compatibility with subgraphs and contractions, exhaustively over a pool.
pub fn minor_order_audit(pool: &[Graph], budget: u64) -> Result<MinorOrderAudit> {
    let m = pool.len();
    ensure_within((m as u128) * (m as u128), budget, "pairwise minor tests")?;
    let mut rel = vec![vec![false; m]; m];
    for (i, p) in pool.iter().enumerate() {
        for (j, h) in pool.iter().enumerate() {
            rel[i][j] = is_minor(p, h)?.is_some();
        }
    }
    let mut audit = MinorOrderAudit {
        pool: m,
        reflexive: (0..m).all(|i| rel[i][i]),
        subgraph_implies_minor: true,
        contraction_implies_minor: true,
        transitive: true,
        antisymmetric_up_to_iso: true,
        comparable_pairs: (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && rel[i][j])
            .count(),
    };
    for i in 0..m {
        for j in 0..m {
            if subgraph_embedding(&pool[i], &pool[j], budget)?.is_some() && !rel[i][j] {
                audit.subgraph_implies_minor = false;
            }
            if exists_contraction(&pool[j], &pool[i], budget)?.is_some() && !rel[i][j] {
                audit.contraction_implies_minor = false;
            }
            if rel[i][j] && rel[j][i] && are_isomorphic(&pool[i], &pool[j], budget)?.is_none() {
                audit.antisymmetric_up_to_iso = false;
            }
            for k in 0..m {
                if rel[i][j] && rel[j][k] && !rel[i][k] {
                    audit.transitive = false;
                }
            }
        }
    }
    Ok(audit)
}

/// Comparison of the minor and topological-minor relations over pattern and
/// host pools, split by where the degree bound lands.
#[derive(Debug, Clone, Serialize)]
pub struct LowDegreeReport {
    pub pairs: usize,
    /// Pairs where a subdivision embeds but branch sets do not: must be 0.
    pub topo_without_minor: usize,
    /// Pairs with a max-degree-3 pattern that are minors but not
    /// topological minors: the degree bound on patterns makes this 0.
    pub low_degree_pattern_disagreements: usize,
    /// Pairs with a max-degree-3 host that are minors but not topological
    /// minors: the same bound read on hosts instead; counted, not asserted.
    pub low_degree_host_disagreements: usize,
    pub first_host_disagreement: Option<(usize, usize)>,
}

fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// Compare minor and topological-minor containment for every pattern/host
/// pair, tracking where the two notions split relative to degree bounds.
pub fn minor_vs_topological(patterns: &[Graph], hosts: &[Graph]) -> Result<LowDegreeReport> {
    let mut report = LowDegreeReport {
        pairs: 0,
        topo_without_minor: 0,
        low_degree_pattern_disagreements: 0,
        low_degree_host_disagreements: 0,
        first_host_disagreement: None,
    };
    for (pi, p) in patterns.iter().enumerate() {
        for (hi, h) in hosts.iter().enumerate() {
            report.pairs += 1;
            let minor = is_minor(p, h)?.is_some();
            let topo = is_topological_minor(p, h)?.is_some();
            if topo && !minor {
                report.topo_without_minor += 1;
            }
            if minor && !topo {
                if max_degree(p) <= 3 {
                    report.low_degree_pattern_disagreements += 1;
                }
                if max_degree(h) <= 3 {
                    report.low_degree_host_disagreements += 1;
                    if report.first_host_disagreement.is_none() {
                        report.first_host_disagreement = Some((pi, hi));
                    }
                }
            }
        }
    }
    Ok(report)
}
