//! Finite graphs kept as an explicit map from edge ids to endpoint pairs.
//!
//! A [`Graph`] is a finite vertex set together with a map `E -> V x V`.
//! Directed multigraphs are the general case; two flags restrict it:
//!
//! * `directed = false`: every endpoint pair is stored canonically
//!   (smaller id first), so one representation serves both ordered pairs
//!   and two-element subsets.
//! * `simple = true`: no loops and no two edges with the same endpoint
//!   pair (up to orientation for undirected graphs).
//!
//! Vertex and edge ids are opaque ([`Id`]): they come from input and are
//! never renumbered. Constructors that synthesize graphs assign edge ids
//! `e0, e1, ...` in ascending canonical endpoint order.

use crate::error::{Error, Result};
use crate::id::Id;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// How [`Graph::underlying_undirected`] treats edge identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeMode {
    /// Keep every edge: parallel images and loops survive with their ids.
    Multigraph,
    /// Produce a simple graph: parallel images merge (smallest edge id
    /// survives); a loop is refused, since a simple graph cannot carry it.
    Simple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    simple: bool,
    vertices: BTreeSet<Id>,
    edges: BTreeMap<Id, (Id, Id)>,
}

impl Graph {
    pub fn new(directed: bool, simple: bool) -> Graph {
        Graph {
            directed,
            simple,
            vertices: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    /// Build a graph from endpoint pairs, synthesizing edge ids `e0, e1, ...`
    /// in ascending canonical endpoint order.
    pub fn from_pairs(
        directed: bool,
        simple: bool,
        vertices: impl IntoIterator<Item = Id>,
        pairs: impl IntoIterator<Item = (Id, Id)>,
    ) -> Result<Graph> {
        let mut g = Graph::new(directed, simple);
        for v in vertices {
            g.add_vertex(v);
        }
        let mut ps: Vec<(Id, Id)> = pairs
            .into_iter()
            .map(|(a, b)| canonical_pair(directed, a, b))
            .collect();
        ps.sort();
        for (k, (a, b)) in ps.into_iter().enumerate() {
            g.add_edge(Id::from(format!("e{k}")), a, b)?;
        }
        Ok(g)
    }

    /// Simple undirected graph from endpoint pairs; see [`Graph::from_pairs`].
    pub fn simple_undirected(
        vertices: impl IntoIterator<Item = Id>,
        pairs: impl IntoIterator<Item = (Id, Id)>,
    ) -> Result<Graph> {
        Graph::from_pairs(false, true, vertices, pairs)
    }

    /// Complete graph on vertices `0..n`, edge ids `e0..` in pair order.
    pub fn complete(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("complete graph needs at least 1 vertex"));
        }
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((Id::from(i), Id::from(j)));
            }
        }
        Graph::simple_undirected((0..n).map(Id::from), pairs)
    }

    pub fn add_vertex(&mut self, v: impl Into<Id>) {
        self.vertices.insert(v.into());
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<Id>,
        tail: impl Into<Id>,
        head: impl Into<Id>,
    ) -> Result<()> {
        let id = id.into();
        let (tail, head) = canonical_pair(self.directed, tail.into(), head.into());
        if self.edges.contains_key(&id) {
            return Err(Error::invalid(format!("duplicate edge id {id}")));
        }
        for v in [&tail, &head] {
            if !self.vertices.contains(v) {
                return Err(Error::invalid(format!("edge {id} uses unknown vertex {v}")));
            }
        }
        if self.simple {
            if tail == head {
                return Err(Error::invalid(format!(
                    "loop {id} at {tail} in a simple graph"
                )));
            }
            if self.has_adjacency(&tail, &head) {
                return Err(Error::invalid(format!(
                    "edge {id} duplicates endpoint pair ({tail},{head}) in a simple graph"
                )));
            }
        }
        self.edges.insert(id, (tail, head));
        Ok(())
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn simple(&self) -> bool {
        self.simple
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Id> {
        self.vertices.iter()
    }

    pub fn vertex_set(&self) -> &BTreeSet<Id> {
        &self.vertices
    }

    pub fn vertex_vec(&self) -> Vec<Id> {
        self.vertices.iter().cloned().collect()
    }

    pub fn has_vertex(&self, v: &Id) -> bool {
        self.vertices.contains(v)
    }

    /// Edges as `(id, (tail, head))` in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (&Id, &(Id, Id))> {
        self.edges.iter()
    }

    pub fn edge_ids(&self) -> Vec<Id> {
        self.edges.keys().cloned().collect()
    }

    pub fn endpoints(&self, edge: &Id) -> Option<&(Id, Id)> {
        self.edges.get(edge)
    }

    /// Canonical endpoint pair for this graph's directedness.
    pub fn pair(&self, a: &Id, b: &Id) -> (Id, Id) {
        canonical_pair(self.directed, a.clone(), b.clone())
    }

    /// Is there an edge with this endpoint pair (unordered when undirected)?
    pub fn has_adjacency(&self, a: &Id, b: &Id) -> bool {
        let p = self.pair(a, b);
        self.edges.values().any(|q| *q == p)
    }

    /// Number of edges carrying this endpoint pair.
    pub fn multiplicity(&self, a: &Id, b: &Id) -> usize {
        let p = self.pair(a, b);
        self.edges.values().filter(|q| **q == p).count()
    }

    /// Distinct canonical endpoint pairs present.
    pub fn adjacency_pairs(&self) -> BTreeSet<(Id, Id)> {
        self.edges.values().cloned().collect()
    }

    /// Neighbors in the underlying undirected sense; `v` itself on a loop.
    pub fn und_neighbors(&self, v: &Id) -> BTreeSet<Id> {
        let mut out = BTreeSet::new();
        for (t, h) in self.edges.values() {
            if t == v {
                out.insert(h.clone());
            }
            if h == v {
                out.insert(t.clone());
            }
        }
        out
    }

    pub fn out_neighbors(&self, v: &Id) -> BTreeSet<Id> {
        self.edges
            .values()
            .filter(|(t, _)| t == v)
            .map(|(_, h)| h.clone())
            .collect()
    }

    pub fn in_neighbors(&self, v: &Id) -> BTreeSet<Id> {
        self.edges
            .values()
            .filter(|(_, h)| h == v)
            .map(|(t, _)| t.clone())
            .collect()
    }

    /// Incidence count: a loop contributes 2.
    pub fn degree(&self, v: &Id) -> usize {
        self.edges
            .values()
            .map(|(t, h)| (t == v) as usize + (h == v) as usize)
            .sum()
    }

    pub fn is_loopless(&self) -> bool {
        self.edges.values().all(|(t, h)| t != h)
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.values().any(|p| !seen.insert(p.clone()))
    }

    /// Directed, and no pair of mutually inverse edges between distinct
    /// vertices (the edge relation is antisymmetric).
    pub fn is_oriented(&self) -> bool {
        if !self.directed {
            return false;
        }
        self.edges
            .values()
            .all(|(t, h)| t == h || !self.has_adjacency_ordered(h, t))
    }

    fn has_adjacency_ordered(&self, a: &Id, b: &Id) -> bool {
        self.edges.values().any(|(t, h)| t == a && h == b)
    }

    /// Connectivity of the underlying undirected graph. The empty graph
    /// counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected components (underlying undirected), each a sorted vertex
    /// set, listed in ascending order of their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<Id>> {
        let mut seen: BTreeSet<Id> = BTreeSet::new();
        let mut comps = Vec::new();
        for start in &self.vertices {
            if seen.contains(start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start.clone()]);
            seen.insert(start.clone());
            while let Some(v) = queue.pop_front() {
                comp.insert(v.clone());
                for w in self.und_neighbors(&v) {
                    if seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Same-id containment: every vertex and every edge (by id, with equal
    /// endpoints) of `self` appears in `host`. Directedness must match.
    pub fn is_subgraph_of(&self, host: &Graph) -> bool {
        if self.directed != host.directed {
            return false;
        }
        self.vertices.is_subset(&host.vertices)
            && self
                .edges
                .iter()
                .all(|(id, p)| host.edges.get(id) == Some(p))
    }

    /// Subgraph induced by a vertex set: keeps exactly the edges with both
    /// endpoints inside.
    pub fn induced_by_vertices(&self, keep: &BTreeSet<Id>) -> Result<Graph> {
        for v in keep {
            if !self.vertices.contains(v) {
                return Err(Error::invalid(format!("unknown vertex {v}")));
            }
        }
        let mut g = Graph::new(self.directed, self.simple);
        g.vertices = keep.clone();
        for (id, (t, h)) in &self.edges {
            if keep.contains(t) && keep.contains(h) {
                g.edges.insert(id.clone(), (t.clone(), h.clone()));
            }
        }
        Ok(g)
    }

    /// Subgraph spanned by an edge set. By default the vertex set is just
    /// the endpoints of the kept edges; `full_vertex_set` keeps every vertex
    /// of the host instead.
    pub fn induced_by_edges(&self, keep: &BTreeSet<Id>, full_vertex_set: bool) -> Result<Graph> {
        for e in keep {
            if !self.edges.contains_key(e) {
                return Err(Error::invalid(format!("unknown edge {e}")));
            }
        }
        let mut g = Graph::new(self.directed, self.simple);
        for e in keep {
            let (t, h) = &self.edges[e];
            g.vertices.insert(t.clone());
            g.vertices.insert(h.clone());
            g.edges.insert(e.clone(), (t.clone(), h.clone()));
        }
        if full_vertex_set {
            g.vertices = self.vertices.clone();
        }
        Ok(g)
    }

    /// Forget direction. In [`MergeMode::Multigraph`] every edge keeps its
    /// id (parallel images and loops included); in [`MergeMode::Simple`]
    /// parallel images merge to the smallest id and loops are refused.
    /// An undirected input passes through (merged the same way in simple
    /// mode).
    pub fn underlying_undirected(&self, mode: MergeMode) -> Result<Graph> {
        match mode {
            MergeMode::Multigraph => {
                if !self.directed {
                    return Ok(self.clone());
                }
                let mut g = Graph::new(false, false);
                g.vertices = self.vertices.clone();
                for (id, (t, h)) in &self.edges {
                    let (a, b) = canonical_pair(false, t.clone(), h.clone());
                    g.edges.insert(id.clone(), (a, b));
                }
                Ok(g)
            }
            MergeMode::Simple => {
                if let Some((id, (t, _))) = self.edges.iter().find(|(_, (t, h))| t == h) {
                    return Err(Error::unsupported(format!(
                        "loop {id} at {t} cannot enter a simple graph"
                    )));
                }
                if !self.directed && self.simple {
                    return Ok(self.clone());
                }
                let mut by_pair: BTreeMap<(Id, Id), Id> = BTreeMap::new();
                for (id, (t, h)) in &self.edges {
                    let p = canonical_pair(false, t.clone(), h.clone());
                    let slot = by_pair.entry(p).or_insert_with(|| id.clone());
                    if *slot > *id {
                        *slot = id.clone();
                    }
                }
                let mut g = Graph::new(false, true);
                g.vertices = self.vertices.clone();
                for ((a, b), id) in by_pair {
                    g.edges.insert(id, (a, b));
                }
                Ok(g)
            }
        }
    }
}

/// Order an endpoint pair canonically: unchanged when directed, smaller id
/// first otherwise.
pub fn canonical_pair(directed: bool, a: Id, b: Id) -> (Id, Id) {
    if !directed && b < a {
        (b, a)
    } else {
        (a, b)
    }
}

/// Smallest symmetric relation containing `pairs`. Every pair must lie in
/// `carrier x carrier`.
pub fn symmetric_closure(
    carrier: &BTreeSet<Id>,
    pairs: &BTreeSet<(Id, Id)>,
) -> Result<BTreeSet<(Id, Id)>> {
    let mut out = BTreeSet::new();
    for (a, b) in pairs {
        for v in [a, b] {
            if !carrier.contains(v) {
                return Err(Error::invalid(format!("pair uses unknown element {v}")));
            }
        }
        out.insert((a.clone(), b.clone()));
        out.insert((b.clone(), a.clone()));
    }
    Ok(out)
}

/// The identity relation `{(v, v)}` on a carrier.
pub fn diagonal(carrier: &BTreeSet<Id>) -> BTreeSet<(Id, Id)> {
    carrier.iter().map(|v| (v.clone(), v.clone())).collect()
}
