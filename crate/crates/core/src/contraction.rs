//! Vertex partitions with connected blocks, quotient graphs, and the search
//! for a partition that collapses one graph onto another.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::{ids_csv, Id};
use crate::morphism::{are_isomorphic, VertexMap};
use std::collections::{BTreeMap, BTreeSet};

/// A partition of a graph's vertex set whose blocks each induce a connected
/// subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<BTreeSet<Id>>,
    index: BTreeMap<Id, usize>,
}

impl Partition {
    /// Validate that `blocks` are nonempty, disjoint, cover the vertex set
    /// exactly, and each induce a connected subgraph of `g`.
    pub fn new(g: &Graph, blocks: Vec<BTreeSet<Id>>) -> Result<Partition> {
        let bad = |reason: String| Error::InvalidPartition { reason };
        let mut seen: BTreeSet<&Id> = BTreeSet::new();
        for block in &blocks {
            if block.is_empty() {
                return Err(bad("a block is empty".into()));
            }
            for v in block {
                if !g.vertex_set().contains(v) {
                    return Err(bad(format!("block member {v} is not a vertex")));
                }
                if !seen.insert(v) {
                    return Err(bad(format!("vertex {v} appears in two blocks")));
                }
            }
        }
        if seen.len() != g.order() {
            let missing = g
                .vertices()
                .find(|v| !seen.contains(v))
                .expect("some vertex is uncovered");
            return Err(bad(format!("vertex {missing} is not covered")));
        }
        for block in &blocks {
            if !g.induced_by_vertices(block)?.is_connected() {
                return Err(bad(format!(
                    "block {{{}}} does not induce a connected subgraph",
                    ids_csv(block)
                )));
            }
        }
        let mut blocks = blocks;
        blocks.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        let index = blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |v| (v.clone(), i)))
            .collect();
        Ok(Partition { blocks, index })
    }

    /// The partition of `g` into single-vertex blocks.
    pub fn singletons(g: &Graph) -> Partition {
        let blocks: Vec<BTreeSet<Id>> = g
            .vertices()
            .map(|v| BTreeSet::from([v.clone()]))
            .collect();
        Partition::new(g, blocks).expect("singleton blocks are always valid")
    }

    pub fn blocks(&self) -> &[BTreeSet<Id>] {
        &self.blocks
    }

    pub fn block_of(&self, v: &Id) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// The quotient vertex standing for a block: its members in braces.
    pub fn block_id(&self, i: usize) -> Id {
        Id::from(format!("{{{}}}", ids_csv(&self.blocks[i])))
    }
}

fn require_undirected(g: &Graph) -> Result<()> {
    if g.directed() {
        return Err(Error::unsupported(
            "contraction is defined for undirected graphs",
        ));
    }
    Ok(())
}

/// The map sending each vertex to its block's quotient vertex.
pub fn quotient_map(p: &Partition, g: &Graph) -> VertexMap {
    g.vertices()
        .map(|v| {
            let b = p.block_of(v).expect("partition covers the vertex set");
            (v.clone(), p.block_id(b))
        })
        .collect()
}

/// Collapse each block to a single vertex, keeping one edge between two
/// blocks joined by at least one crossing edge. The result is simple.
pub fn contract(g: &Graph, p: &Partition) -> Result<Graph> {
    require_undirected(g)?;
    let vertices: Vec<Id> = (0..p.blocks().len()).map(|i| p.block_id(i)).collect();
    let mut pairs = BTreeSet::new();
    for (_, (a, b)) in g.edges() {
        let (ba, bb) = (p.block_of(a).unwrap(), p.block_of(b).unwrap());
        if ba != bb {
            let (lo, hi) = if ba < bb { (ba, bb) } else { (bb, ba) };
            pairs.insert((p.block_id(lo), p.block_id(hi)));
        }
    }
    Graph::simple_undirected(vertices, pairs)
}

/// Collapse each block but keep every crossing edge under its original id,
/// so parallel quotient edges record which host edges produced them. Edges
/// inside a block are dropped.
pub fn contract_faithful(g: &Graph, p: &Partition) -> Result<Graph> {
    require_undirected(g)?;
    let mut out = Graph::new(false, false);
    for i in 0..p.blocks().len() {
        out.add_vertex(p.block_id(i));
    }
    for (e, (a, b)) in g.edges() {
        let (ba, bb) = (p.block_of(a).unwrap(), p.block_of(b).unwrap());
        if ba != bb {
            out.add_edge(e.clone(), p.block_id(ba), p.block_id(bb))?;
        }
    }
    Ok(out)
}

/// Contract every edge in `r` at once: blocks are the components of the
/// spanning subgraph carrying exactly those edges.
pub fn contract_subgraph(g: &Graph, r: &BTreeSet<Id>) -> Result<(Graph, Partition)> {
    require_undirected(g)?;
    let skeleton = g.induced_by_edges(r, true)?;
    let p = Partition::new(g, skeleton.components())?;
    Ok((contract(g, &p)?, p))
}

/// Visit every restricted-growth string describing a partition of `n`
/// items into exactly `k` blocks.
fn for_each_rgs(n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(a: &mut Vec<usize>, used: usize, n: usize, k: usize, visit: &mut impl FnMut(&[usize])) {
        let i = a.len();
        if i == n {
            if used == k {
                visit(a);
            }
            return;
        }
        // every unreached block still needs a position
        let deficit = k.saturating_sub(used);
        if deficit > n - i {
            return;
        }
        let top = (used + 1).min(k);
        for b in 0..top {
            a.push(b);
            rec(a, used.max(b + 1), n, k, visit);
            a.pop();
        }
    }
    if n == 0 {
        if k == 0 {
            visit(&[]);
        }
        return;
    }
    if k == 0 || k > n {
        return;
    }
    rec(&mut Vec::with_capacity(n), 0, n, k, visit);
}

/// Search for a connected partition of `g` whose contraction is isomorphic
/// to `h`, returning the first witness in restricted-growth-string order.
pub fn exists_contraction(g: &Graph, h: &Graph, budget: u64) -> Result<Option<Partition>> {
    require_undirected(g)?;
    if h.directed() || !h.simple() {
        return Err(Error::unsupported(
            "the contraction target must be a simple undirected graph",
        ));
    }
    let (n, k) = (g.order(), h.order());
    if k > n {
        return Ok(None);
    }
    ensure_within(
        budget::stirling2(n as u64, k as u64),
        budget,
        "partition enumeration",
    )?;
    let vs = g.vertex_vec();
    let h_degrees = {
        let mut d: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
        d.sort_unstable();
        d
    };
    let mut found: Option<Partition> = None;
    for_each_rgs(n, k, &mut |rgs| {
        if found.is_some() {
            return;
        }
        let mut blocks = vec![BTreeSet::new(); k];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].insert(vs[i].clone());
        }
        let Ok(p) = Partition::new(g, blocks) else {
            return; // some block is disconnected
        };
        let Ok(q) = contract(g, &p) else {
            return;
        };
        if q.size() != h.size() {
            return;
        }
        let mut q_degrees: Vec<usize> = q.vertices().map(|v| q.degree(v)).collect();
        q_degrees.sort_unstable();
        if q_degrees != h_degrees {
            return;
        }
        if matches!(are_isomorphic(&q, h, budget), Ok(Some(_))) {
            found = Some(p);
        }
    });
    Ok(found)
}
