//! Built-in named graphs, exhaustive canonical forms for simple undirected
//! graphs, and a catalog of one representative per isomorphism class up to
//! seven vertices.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use itertools::Itertools;
use std::collections::BTreeMap;

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

/// Cycle on vertices `0..n`, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid("cycle needs at least 3 vertices"));
    }
    Graph::simple_undirected(
        (0..n).map(Id::from),
        (0..n).map(|i| (Id::from(i), Id::from((i + 1) % n))),
    )
}

/// Path on vertices `0..n`, n >= 1.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs at least 1 vertex"));
    }
    Graph::simple_undirected(
        (0..n).map(Id::from),
        (0..n.saturating_sub(1)).map(|i| (Id::from(i), Id::from(i + 1))),
    )
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("both parts must be nonempty"));
    }
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in 0..b {
            pairs.push((Id::from(i), Id::from(a + j)));
        }
    }
    Graph::simple_undirected((0..a + b).map(Id::from), pairs)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((Id::from(i), Id::from((i + 1) % 5)));
        pairs.push((Id::from(5 + i), Id::from(5 + (i + 2) % 5)));
        pairs.push((Id::from(i), Id::from(5 + i)));
    }
    Graph::simple_undirected((0..10).map(Id::from), pairs).expect("valid construction")
}

/// The 3-cube: vertices 0..8 as bit strings, edges at Hamming distance 1.
pub fn cube_q3() -> Graph {
    let mut pairs = Vec::new();
    for v in 0..8u32 {
        for bit in [1, 2, 4] {
            let w = v ^ bit;
            if v < w {
                pairs.push((Id::from(v as usize), Id::from(w as usize)));
            }
        }
    }
    Graph::simple_undirected((0..8).map(Id::from), pairs).expect("valid construction")
}

/// Look up a named graph: `petersen`, `q3`, `k33`, or the families
/// `k<n>`, `c<n>`, `p<n>`.
pub fn named(name: &str) -> Result<Graph> {
    match name {
        "petersen" => return Ok(petersen()),
        "q3" => return Ok(cube_q3()),
        "k33" => return complete_bipartite(3, 3),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('k') {
        if let Ok(n) = rest.parse::<usize>() {
            return complete(n);
        }
    }
    if let Some(rest) = name.strip_prefix('c') {
        if let Ok(n) = rest.parse::<usize>() {
            return cycle(n);
        }
    }
    if let Some(rest) = name.strip_prefix('p') {
        if let Ok(n) = rest.parse::<usize>() {
            return path(n);
        }
    }
    Err(Error::invalid(format!(
        "unknown graph name {name}; known: petersen, q3, k33, k<n>, c<n>, p<n>"
    )))
}

// ---------------------------------------------------------------------------
// Canonical forms by exhaustive minimization over vertex permutations.

const CANON_MAX_ORDER: usize = 11; // 55 upper-triangle bits fit a u64

fn adjacency_masks(g: &Graph) -> Result<Vec<u32>> {
    if g.directed() || !g.is_loopless() {
        return Err(Error::invalid(
            "canonical form is defined for simple undirected graphs",
        ));
    }
    let vs = g.vertex_vec();
    let index: BTreeMap<&Id, usize> = vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut masks = vec![0u32; vs.len()];
    for (t, h) in g.edges().map(|(_, p)| p) {
        let (i, j) = (index[t], index[h]);
        masks[i] |= 1 << j;
        masks[j] |= 1 << i;
    }
    Ok(masks)
}

fn key_under_perm(masks: &[u32], perm: &[usize]) -> u64 {
    // bit for new pair (i, j), i < j, taken MSB-first so keys compare
    // lexicographically by pair order
    let n = masks.len();
    let mut key = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            bit += 1;
            if masks[perm[i]] >> perm[j] & 1 == 1 {
                key |= 1 << (63 - bit);
            }
        }
    }
    key
}

fn min_key_and_perm(masks: &[u32]) -> (u64, Vec<usize>) {
    let n = masks.len();
    let mut best_key = u64::MAX;
    let mut best_perm: Vec<usize> = (0..n).collect();
    for perm in (0..n).permutations(n) {
        let key = key_under_perm(masks, &perm);
        if key < best_key {
            best_key = key;
            best_perm = perm;
        }
    }
    if n == 0 {
        best_key = 0;
    }
    (best_key, best_perm)
}

/// Order plus the minimum adjacency bit string over all vertex
/// permutations: equal keys mean isomorphic graphs.
pub fn canonical_key(g: &Graph, budget: u64) -> Result<(usize, u64)> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::ResourceLimit(format!(
            "canonical form supports up to {CANON_MAX_ORDER} vertices, got {}",
            g.order()
        )));
    }
    ensure_within(
        budget::factorial(g.order() as u64),
        budget,
        "canonical form search",
    )?;
    let masks = adjacency_masks(g)?;
    Ok((g.order(), min_key_and_perm(&masks).0))
}

/// The isomorphic copy of `g` on vertices `0..n` realizing the canonical
/// key; edge ids follow the `e{k}` convention.
pub fn canonical_form(g: &Graph, budget: u64) -> Result<Graph> {
    canonical_key(g, budget)?; // shared validation and budget refusal
    let masks = adjacency_masks(g)?;
    let (_, perm) = min_key_and_perm(&masks);
    let n = masks.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if masks[perm[i]] >> perm[j] & 1 == 1 {
                pairs.push((Id::from(i), Id::from(j)));
            }
        }
    }
    Graph::simple_undirected((0..n).map(Id::from), pairs)
}

pub const CATALOG_MAX_ORDER: usize = 7;

/// Class counts per order 1..=7 for simple undirected graphs.
pub const CATALOG_CLASS_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];

/// One canonical representative per isomorphism class of simple undirected
/// graphs of every order `1..=max_order`, in ascending order and, within an
/// order, ascending canonical key. Orders above 7 are refused.
pub fn catalog(max_order: usize) -> Result<Vec<Graph>> {
    if max_order > CATALOG_MAX_ORDER {
        return Err(Error::ResourceLimit(format!(
            "catalog supports up to order {CATALOG_MAX_ORDER}, got {max_order}"
        )));
    }
    let mut out = Vec::new();
    // canonical adjacency masks of the previous level
    let mut level: Vec<Vec<u32>> = vec![vec![0u32]]; // the one-vertex graph
    for n in 1..=max_order {
        if n > 1 {
            let mut next: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
            for parent in &level {
                for attach in 0u32..(1 << (n - 1)) {
                    let mut masks = parent.clone();
                    masks.push(attach);
                    for (i, m) in masks.iter_mut().enumerate().take(n - 1) {
                        if attach >> i & 1 == 1 {
                            *m |= 1 << (n - 1);
                        }
                    }
                    let (key, perm) = min_key_and_perm(&masks);
                    next.entry(key).or_insert_with(|| {
                        let mut canon = vec![0u32; n];
                        for i in 0..n {
                            for j in 0..n {
                                if masks[perm[i]] >> perm[j] & 1 == 1 {
                                    canon[i] |= 1 << j;
                                }
                            }
                        }
                        canon
                    });
                }
            }
            level = next.into_values().collect();
        }
        for masks in &level {
            let mut pairs = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    if masks[i] >> j & 1 == 1 {
                        pairs.push((Id::from(i), Id::from(j)));
                    }
                }
            }
            out.push(Graph::simple_undirected((0..n).map(Id::from), pairs)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_BUDGET;
    use crate::invariant::{degree_sequence, graph_parameters};
    use crate::morphism::{are_isomorphic, relabel, VertexMap};

    #[test]
    fn named_constructions() {
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert_eq!(degree_sequence(&p), vec![3; 10]);
        assert_eq!(graph_parameters(&p, DEFAULT_BUDGET).unwrap().girth, Some(5));

        let q = cube_q3();
        assert_eq!((q.order(), q.size()), (8, 12));
        assert_eq!(degree_sequence(&q), vec![3; 8]);
        assert_eq!(graph_parameters(&q, DEFAULT_BUDGET).unwrap().girth, Some(4));

        let k33 = named("k33").unwrap();
        assert_eq!((k33.order(), k33.size()), (6, 9));
        assert_eq!(named("c5").unwrap(), cycle(5).unwrap());
        assert_eq!(named("k4").unwrap(), complete(4).unwrap());
        assert_eq!(named("p1").unwrap().order(), 1);
        assert!(named("c2").is_err());
        assert!(named("zz9").is_err());
        assert!(named("k0").is_err());
    }

    #[test]
    fn canonical_key_classifies_small_graphs() {
        let p4 = path(4).unwrap();
        let c4 = cycle(4).unwrap();
        assert_ne!(
            canonical_key(&p4, DEFAULT_BUDGET).unwrap(),
            canonical_key(&c4, DEFAULT_BUDGET).unwrap()
        );
        // key is invariant under relabeling
        let map: VertexMap = [
            (Id::from(0), Id::from("a")),
            (Id::from(1), Id::from("b")),
            (Id::from(2), Id::from("c")),
            (Id::from(3), Id::from("d")),
        ]
        .into();
        let moved = relabel(&p4, &map).unwrap();
        assert_eq!(
            canonical_key(&p4, DEFAULT_BUDGET).unwrap(),
            canonical_key(&moved, DEFAULT_BUDGET).unwrap()
        );
        let canon = canonical_form(&moved, DEFAULT_BUDGET).unwrap();
        assert!(are_isomorphic(&canon, &p4, DEFAULT_BUDGET).unwrap().is_some());
        assert!(canonical_key(&Graph::new(true, true), DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn catalog_counts_match_the_ladder() {
        let all6 = catalog(6).unwrap();
        let mut by_order = BTreeMap::new();
        for g in &all6 {
            *by_order.entry(g.order()).or_insert(0usize) += 1;
        }
        for (n, expected) in CATALOG_CLASS_COUNTS.iter().enumerate().take(6) {
            assert_eq!(by_order[&(n + 1)], *expected, "order {}", n + 1);
        }
        assert_eq!(catalog(3).unwrap().len(), 7);
        assert!(catalog(8).is_err());
    }

    #[test]
    fn catalog_classes_are_distinct_and_complete() {
        // distinct: no two 4-vertex representatives are isomorphic
        let reps: Vec<Graph> = catalog(4)
            .unwrap()
            .into_iter()
            .filter(|g| g.order() == 4)
            .collect();
        assert_eq!(reps.len(), 11);
        for i in 0..reps.len() {
            for j in (i + 1)..reps.len() {
                assert!(are_isomorphic(&reps[i], &reps[j], DEFAULT_BUDGET)
                    .unwrap()
                    .is_none());
            }
        }
        // complete: every labeled 4-vertex graph matches exactly one class
        let all_pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|i| ((i + 1)..4).map(move |j| (i, j))).collect();
        for mask in 0u32..(1 << 6) {
            let pairs = all_pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(i, j))| (Id::from(i), Id::from(j)));
            let g = Graph::simple_undirected((0..4).map(Id::from), pairs).unwrap();
            let matches = reps
                .iter()
                .filter(|r| are_isomorphic(&g, r, DEFAULT_BUDGET).unwrap().is_some())
                .count();
            assert_eq!(matches, 1, "mask {mask}");
        }
    }
}
