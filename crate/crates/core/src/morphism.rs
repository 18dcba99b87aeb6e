//! Vertex maps between graphs and the four structure conditions checked on
//! them.
//!
//! For a map f from the vertices of G to the vertices of H:
//!
//! * **Hom**: every edge xy of G lands on an edge f(x)f(y) of H.
//! * **Ega**: every edge xy of G lands on an edge of H or collapses,
//!   f(x) = f(y). Weaker than Hom; every Hom is an Ega.
//! * **Co**: the reverse implication; whenever f(x)f(y) is an edge of H,
//!   xy is already an edge of G.
//! * **Iso**: f is a bijection matching edge multiplicities exactly both
//!   ways.
//!
//! Directed graphs compare ordered pairs, undirected graphs unordered
//! ones; a map between a directed and an undirected graph is refused.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use std::collections::{BTreeMap, BTreeSet};

pub type VertexMap = BTreeMap<Id, Id>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MorphismKind {
    Hom,
    Ega,
    Co,
    Iso,
}

impl MorphismKind {
    pub fn label(self) -> &'static str {
        match self {
            MorphismKind::Hom => "hom",
            MorphismKind::Ega => "ega",
            MorphismKind::Co => "co",
            MorphismKind::Iso => "iso",
        }
    }

    pub fn parse(s: &str) -> Result<MorphismKind> {
        match s {
            "hom" => Ok(MorphismKind::Hom),
            "ega" => Ok(MorphismKind::Ega),
            "co" => Ok(MorphismKind::Co),
            "iso" => Ok(MorphismKind::Iso),
            other => Err(Error::invalid(format!("unknown morphism kind {other}"))),
        }
    }
}

/// Outcome of a single morphism check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MorphismCheck {
    pub holds: bool,
    /// A vertex pair of the source witnessing the failure, when one exists.
    pub violation: Option<(Id, Id)>,
}

impl MorphismCheck {
    fn ok() -> Self {
        MorphismCheck {
            holds: true,
            violation: None,
        }
    }

    fn bad(pair: Option<(Id, Id)>) -> Self {
        MorphismCheck {
            holds: false,
            violation: pair,
        }
    }
}

/// A checked morphism: construction via [`Morphism::verified`] guarantees
/// the map satisfies its kind's condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub source: Graph,
    pub target: Graph,
    pub map: VertexMap,
    pub kind: MorphismKind,
}

impl Morphism {
    pub fn verified(source: Graph, target: Graph, map: VertexMap, kind: MorphismKind) -> Result<Morphism> {
        let check = check_morphism(&map, &source, &target, kind)?;
        if !check.holds {
            let detail = match &check.violation {
                Some((a, b)) => format!(" (witness pair {a},{b})"),
                None => String::new(),
            };
            return Err(Error::invalid(format!(
                "map is not a {} morphism{detail}",
                kind.label()
            )));
        }
        Ok(Morphism {
            source,
            target,
            map,
            kind,
        })
    }

    pub fn apply(&self, v: &Id) -> Option<&Id> {
        self.map.get(v)
    }
}

fn validate_map(map: &VertexMap, g: &Graph, h: &Graph) -> Result<()> {
    if g.directed() != h.directed() {
        return Err(Error::invalid(
            "cannot map between directed and undirected graphs",
        ));
    }
    for v in g.vertices() {
        match map.get(v) {
            None => return Err(Error::invalid(format!("map is not total: {v} has no image"))),
            Some(w) if !h.has_vertex(w) => {
                return Err(Error::invalid(format!("image {w} of {v} is not a target vertex")))
            }
            _ => {}
        }
    }
    for v in map.keys() {
        if !g.has_vertex(v) {
            return Err(Error::invalid(format!("map key {v} is not a source vertex")));
        }
    }
    Ok(())
}

/// Check one total map against one kind; `Ok` carries the verdict, `Err`
/// means the map itself was malformed (non-total, stray key, bad image).
pub fn check_morphism(map: &VertexMap, g: &Graph, h: &Graph, kind: MorphismKind) -> Result<MorphismCheck> {
    validate_map(map, g, h)?;
    match kind {
        MorphismKind::Hom => {
            for (x, y) in g.adjacency_pairs() {
                if !h.has_adjacency(&map[&x], &map[&y]) {
                    return Ok(MorphismCheck::bad(Some((x, y))));
                }
            }
            Ok(MorphismCheck::ok())
        }
        MorphismKind::Ega => {
            for (x, y) in g.adjacency_pairs() {
                if map[&x] != map[&y] && !h.has_adjacency(&map[&x], &map[&y]) {
                    return Ok(MorphismCheck::bad(Some((x, y))));
                }
            }
            Ok(MorphismCheck::ok())
        }
        MorphismKind::Co => {
            let vs = g.vertex_vec();
            for (i, x) in vs.iter().enumerate() {
                let js = if g.directed() { 0 } else { i };
                for y in &vs[js..] {
                    if h.has_adjacency(&map[x], &map[y]) && !g.has_adjacency(x, y) {
                        return Ok(MorphismCheck::bad(Some((x.clone(), y.clone()))));
                    }
                }
            }
            Ok(MorphismCheck::ok())
        }
        MorphismKind::Iso => {
            if g.order() != h.order() {
                return Ok(MorphismCheck::bad(None));
            }
            let mut images = BTreeSet::new();
            for (x, y) in map {
                if !images.insert(y.clone()) {
                    let other = map
                        .iter()
                        .find(|(k, v)| *v == y && *k != x)
                        .map(|(k, _)| (*k).clone())
                        .expect("duplicate image has two preimages");
                    return Ok(MorphismCheck::bad(Some((other, x.clone()))));
                }
            }
            let vs = g.vertex_vec();
            for (i, x) in vs.iter().enumerate() {
                let js = if g.directed() { 0 } else { i };
                for y in &vs[js..] {
                    if g.multiplicity(x, y) != h.multiplicity(&map[x], &map[y]) {
                        return Ok(MorphismCheck::bad(Some((x.clone(), y.clone()))));
                    }
                }
            }
            Ok(MorphismCheck::ok())
        }
    }
}

// ---------------------------------------------------------------------------
// Dense index-based views, used by the exhaustive searches below and by the
// universal-property checker.

#[derive(Debug, Clone)]
pub(crate) struct Dense {
    pub n: usize,
    pub ids: Vec<Id>,
    pub directed: bool,
    mult: Vec<u32>,
    /// Distinct index pairs carrying at least one edge.
    pub edge_pairs: Vec<(usize, usize)>,
}

impl Dense {
    pub fn build(g: &Graph) -> Dense {
        let ids = g.vertex_vec();
        let n = ids.len();
        let index: BTreeMap<&Id, usize> = ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut mult = vec![0u32; n * n];
        for (t, h) in g.edges().map(|(_, p)| p) {
            let (i, j) = (index[t], index[h]);
            mult[i * n + j] += 1;
            if !g.directed() && i != j {
                mult[j * n + i] += 1;
            }
        }
        let mut edge_pairs = Vec::new();
        for i in 0..n {
            let js = if g.directed() { 0 } else { i };
            for j in js..n {
                if mult[i * n + j] > 0 {
                    edge_pairs.push((i, j));
                }
            }
        }
        Dense {
            n,
            ids,
            directed: g.directed(),
            mult,
            edge_pairs,
        }
    }

    #[inline]
    pub fn adj(&self, i: usize, j: usize) -> bool {
        self.mult[i * self.n + j] > 0
    }

    #[inline]
    pub fn mult(&self, i: usize, j: usize) -> u32 {
        self.mult[i * self.n + j]
    }

    pub fn degree(&self, i: usize) -> u32 {
        let mut d = 0;
        for j in 0..self.n {
            d += self.mult(i, j);
            if self.directed {
                d += self.mult(j, i);
            }
        }
        d + self.mult(i, i) * if self.directed { 0 } else { 1 }
    }
}

/// Does the index map `f` (source index -> target index) satisfy `kind`?
pub(crate) fn map_satisfies(kind: MorphismKind, gd: &Dense, hd: &Dense, f: &[usize]) -> bool {
    match kind {
        MorphismKind::Hom => gd.edge_pairs.iter().all(|&(x, y)| hd.adj(f[x], f[y])),
        MorphismKind::Ega => gd
            .edge_pairs
            .iter()
            .all(|&(x, y)| f[x] == f[y] || hd.adj(f[x], f[y])),
        MorphismKind::Co => {
            for x in 0..gd.n {
                let ys = if gd.directed { 0 } else { x };
                for y in ys..gd.n {
                    if hd.adj(f[x], f[y]) && !gd.adj(x, y) {
                        return false;
                    }
                }
            }
            true
        }
        MorphismKind::Iso => {
            if gd.n != hd.n {
                return false;
            }
            let mut seen = vec![false; hd.n];
            for &i in f {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
            for x in 0..gd.n {
                for y in 0..gd.n {
                    if gd.mult(x, y) != hd.mult(f[x], f[y]) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

fn index_map_to_vertex_map(gd: &Dense, hd: &Dense, f: &[usize]) -> VertexMap {
    gd.ids
        .iter()
        .zip(f)
        .map(|(v, &i)| (v.clone(), hd.ids[i].clone()))
        .collect()
}

/// All maps V(G) -> V(H) satisfying `kind`, in lexicographic order over the
/// ascending source vertex list. Refuses up front when |V(H)|^|V(G)|
/// exceeds the budget.
pub fn enumerate_morphisms(g: &Graph, h: &Graph, kind: MorphismKind, budget: u64) -> Result<Vec<VertexMap>> {
    if g.directed() != h.directed() {
        return Err(Error::invalid(
            "cannot map between directed and undirected graphs",
        ));
    }
    let space = budget::pow(h.order() as u64, g.order() as u32);
    ensure_within(space, budget, "morphism enumeration")?;
    let gd = Dense::build(g);
    let hd = Dense::build(h);
    let mut out = Vec::new();
    if hd.n == 0 {
        if gd.n == 0 {
            out.push(VertexMap::new());
        }
        return Ok(out);
    }
    let mut f = vec![0usize; gd.n];
    loop {
        if map_satisfies(kind, &gd, &hd, &f) {
            out.push(index_map_to_vertex_map(&gd, &hd, &f));
        }
        // odometer with the last coordinate fastest keeps lexicographic order
        let mut k = gd.n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            f[k] += 1;
            if f[k] < hd.n {
                break;
            }
            f[k] = 0;
        }
    }
}

// ---------------------------------------------------------------------------
// Backtracking searches: isomorphism, automorphisms, subgraph embeddings.

struct BijectionSearch<'a> {
    gd: &'a Dense,
    hd: &'a Dense,
    order: Vec<usize>,
    assigned: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> BijectionSearch<'a> {
    fn consistent(&self, pos: usize, img: usize) -> bool {
        let v = self.order[pos];
        if self.gd.mult(v, v) != self.hd.mult(img, img) {
            return false;
        }
        for p in 0..pos {
            let u = self.order[p];
            let iu = self.assigned[u].expect("earlier position assigned");
            if self.gd.mult(v, u) != self.hd.mult(img, iu)
                || self.gd.mult(u, v) != self.hd.mult(iu, img)
            {
                return false;
            }
        }
        true
    }

    /// Visit bijections in lexicographic image order; stop early when
    /// `emit` returns false.
    fn run(&mut self, pos: usize, emit: &mut dyn FnMut(&[Option<usize>]) -> bool) -> bool {
        if pos == self.order.len() {
            return emit(&self.assigned);
        }
        for img in 0..self.hd.n {
            if self.used[img] || !self.consistent(pos, img) {
                continue;
            }
            self.assigned[self.order[pos]] = Some(img);
            self.used[img] = true;
            let keep_going = self.run(pos + 1, emit);
            self.assigned[self.order[pos]] = None;
            self.used[img] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn degree_multiset(d: &Dense) -> Vec<u32> {
    let mut ds: Vec<u32> = (0..d.n).map(|i| d.degree(i)).collect();
    ds.sort_unstable();
    ds
}

fn bijection_order(gd: &Dense) -> Vec<usize> {
    // most-constrained first: high degree, then index
    let mut order: Vec<usize> = (0..gd.n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(gd.degree(i)), i));
    order
}

/// Find an edge-multiplicity-preserving bijection, or `None`. The up-front
/// budget check refuses graphs whose permutation space n! exceeds `budget`;
/// the actual search prunes far below that.
pub fn are_isomorphic(g: &Graph, h: &Graph, budget: u64) -> Result<Option<VertexMap>> {
    if g.directed() != h.directed() {
        return Err(Error::invalid(
            "cannot compare a directed with an undirected graph",
        ));
    }
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(None);
    }
    ensure_within(budget::factorial(g.order() as u64), budget, "isomorphism search")?;
    let gd = Dense::build(g);
    let hd = Dense::build(h);
    if degree_multiset(&gd) != degree_multiset(&hd) {
        return Ok(None);
    }
    let mut search = BijectionSearch {
        gd: &gd,
        hd: &hd,
        order: bijection_order(&gd),
        assigned: vec![None; gd.n],
        used: vec![false; hd.n],
    };
    let mut witness = None;
    search.run(0, &mut |assigned| {
        let f: Vec<usize> = assigned.iter().map(|a| a.expect("complete")).collect();
        witness = Some(index_map_to_vertex_map(&gd, &hd, &f));
        false // stop at the first witness
    });
    Ok(witness)
}

/// The full automorphism group, as vertex permutations sorted
/// lexicographically; always contains the identity.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AutomorphismGroup {
    pub perms: Vec<VertexMap>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn contains(&self, m: &VertexMap) -> bool {
        self.perms.binary_search(m).is_ok()
    }
}

pub fn automorphism_group(g: &Graph, budget: u64) -> Result<AutomorphismGroup> {
    ensure_within(budget::factorial(g.order() as u64), budget, "automorphism search")?;
    let gd = Dense::build(g);
    let mut search = BijectionSearch {
        gd: &gd,
        hd: &gd,
        order: bijection_order(&gd),
        assigned: vec![None; gd.n],
        used: vec![false; gd.n],
    };
    let mut perms = Vec::new();
    search.run(0, &mut |assigned| {
        let f: Vec<usize> = assigned.iter().map(|a| a.expect("complete")).collect();
        perms.push(index_map_to_vertex_map(&gd, &gd, &f));
        true
    });
    perms.sort();
    Ok(AutomorphismGroup { perms })
}

/// Injective map from `pattern` into `host` carrying every pattern
/// adjacency onto a host adjacency with at least the same multiplicity
/// (ordinary subgraph containment, not induced).
pub fn subgraph_embedding(pattern: &Graph, host: &Graph, budget: u64) -> Result<Option<VertexMap>> {
    if pattern.directed() != host.directed() {
        return Err(Error::invalid(
            "cannot embed a directed pattern in an undirected host",
        ));
    }
    if pattern.order() > host.order() {
        return Ok(None);
    }
    let mut space: u128 = 1;
    for k in 0..pattern.order() {
        space = space.saturating_mul((host.order() - k) as u128);
    }
    ensure_within(space, budget, "subgraph embedding search")?;
    let pd = Dense::build(pattern);
    let hd = Dense::build(host);
    let order = bijection_order(&pd);
    let mut assigned: Vec<Option<usize>> = vec![None; pd.n];
    let mut used = vec![false; hd.n];

    fn consistent(pd: &Dense, hd: &Dense, order: &[usize], assigned: &[Option<usize>], pos: usize, img: usize) -> bool {
        let v = order[pos];
        if hd.mult(img, img) < pd.mult(v, v) {
            return false;
        }
        for p in 0..pos {
            let u = order[p];
            let iu = assigned[u].expect("assigned");
            if hd.mult(img, iu) < pd.mult(v, u) || hd.mult(iu, img) < pd.mult(u, v) {
                return false;
            }
        }
        true
    }

    fn rec(
        pd: &Dense,
        hd: &Dense,
        order: &[usize],
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        pos: usize,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        for img in 0..hd.n {
            if used[img] || !consistent(pd, hd, order, assigned, pos, img) {
                continue;
            }
            assigned[order[pos]] = Some(img);
            used[img] = true;
            if rec(pd, hd, order, assigned, used, pos + 1) {
                return true;
            }
            assigned[order[pos]] = None;
            used[img] = false;
        }
        false
    }

    if rec(&pd, &hd, &order, &mut assigned, &mut used, 0) {
        let f: Vec<usize> = assigned.iter().map(|a| a.expect("complete")).collect();
        Ok(Some(index_map_to_vertex_map(&pd, &hd, &f)))
    } else {
        Ok(None)
    }
}

/// Apply an injective vertex rename; edge ids survive, endpoint pairs are
/// re-canonicalized.
pub fn relabel(g: &Graph, map: &VertexMap) -> Result<Graph> {
    let mut images = BTreeSet::new();
    for v in g.vertices() {
        let Some(w) = map.get(v) else {
            return Err(Error::invalid(format!("rename is not total: {v} unmapped")));
        };
        if !images.insert(w.clone()) {
            return Err(Error::invalid(format!("rename is not injective at {w}")));
        }
    }
    let mut out = Graph::new(g.directed(), g.simple());
    for v in g.vertices() {
        out.add_vertex(map[v].clone());
    }
    for (id, (t, h)) in g.edges() {
        out.add_edge(id.clone(), map[t].clone(), map[h].clone())?;
    }
    Ok(out)
}

/// g composed after f: x maps to g(f(x)).
pub fn compose_maps(f: &VertexMap, g: &VertexMap) -> Option<VertexMap> {
    f.iter()
        .map(|(x, y)| g.get(y).map(|z| (x.clone(), z.clone())))
        .collect()
}

pub fn invert_map(f: &VertexMap) -> Option<VertexMap> {
    let inv: VertexMap = f.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
    (inv.len() == f.len()).then_some(inv)
}
