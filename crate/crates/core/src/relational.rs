//! Relational systems: a finite carrier with finitely many named relations
//! of fixed arity, plus the view of a graph as the special case of a single
//! binary relation.

use crate::error::{Error, Result};
use crate::graph::{canonical_pair, Graph};
use crate::id::Id;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Relation {
    pub name: String,
    pub arity: usize,
    pub tuples: BTreeSet<Vec<Id>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalSystem {
    carrier: BTreeSet<Id>,
    relations: Vec<Relation>,
}

impl RelationalSystem {
    /// Validates that relation names are distinct, every tuple has its
    /// relation's arity, and every coordinate lies in the carrier.
    pub fn new(carrier: BTreeSet<Id>, relations: Vec<Relation>) -> Result<RelationalSystem> {
        let mut names = BTreeSet::new();
        for rel in &relations {
            if !names.insert(rel.name.clone()) {
                return Err(Error::invalid(format!("duplicate relation name {}", rel.name)));
            }
            for t in &rel.tuples {
                if t.len() != rel.arity {
                    return Err(Error::invalid(format!(
                        "relation {} has arity {} but holds a {}-tuple",
                        rel.name,
                        rel.arity,
                        t.len()
                    )));
                }
                for x in t {
                    if !carrier.contains(x) {
                        return Err(Error::invalid(format!(
                            "relation {} uses unknown element {x}",
                            rel.name
                        )));
                    }
                }
            }
        }
        Ok(RelationalSystem { carrier, relations })
    }

    pub fn carrier(&self) -> &BTreeSet<Id> {
        &self.carrier
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }
}

/// A finite family of graphs over a shared vertex carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSystem {
    carrier: BTreeSet<Id>,
    members: Vec<Graph>,
}

impl GraphSystem {
    pub fn new(carrier: BTreeSet<Id>, members: Vec<Graph>) -> Result<GraphSystem> {
        for (i, g) in members.iter().enumerate() {
            if !g.vertex_set().is_subset(&carrier) {
                return Err(Error::invalid(format!(
                    "member {i} has vertices outside the carrier"
                )));
            }
        }
        Ok(GraphSystem { carrier, members })
    }

    pub fn carrier(&self) -> &BTreeSet<Id> {
        &self.carrier
    }

    pub fn members(&self) -> &[Graph] {
        &self.members
    }
}

/// Close a set of tuples under coordinate permutation and keep one canonical
/// representative per orbit: the coordinate-sorted tuple.
pub fn sm_closure(tuples: &BTreeSet<Vec<Id>>) -> BTreeSet<Vec<Id>> {
    tuples
        .iter()
        .map(|t| {
            let mut s = t.clone();
            s.sort();
            s
        })
        .collect()
}

/// Arities with multiplicities, `(arity, count)` in ascending arity order.
/// Relations are counted by extension: two relations of the same arity with
/// equal tuple sets count once, whatever their names.
pub fn type_symbol(rs: &RelationalSystem) -> Vec<(usize, usize)> {
    let mut by_arity: BTreeMap<usize, BTreeSet<&BTreeSet<Vec<Id>>>> = BTreeMap::new();
    for rel in rs.relations() {
        by_arity.entry(rel.arity).or_default().insert(&rel.tuples);
    }
    by_arity.into_iter().map(|(k, exts)| (k, exts.len())).collect()
}

/// The largest arity occurring in the system.
pub fn arity(rs: &RelationalSystem) -> Result<usize> {
    rs.relations()
        .iter()
        .map(|r| r.arity)
        .max()
        .ok_or_else(|| Error::invalid("arity is undefined for a system with no relations"))
}

/// Build a relational system from raw tuples, one relation `E{k}` per
/// occurring tuple length `k`.
pub fn hypergraph_from_tuples(
    carrier: BTreeSet<Id>,
    tuples: impl IntoIterator<Item = Vec<Id>>,
) -> Result<RelationalSystem> {
    let mut by_len: BTreeMap<usize, BTreeSet<Vec<Id>>> = BTreeMap::new();
    for t in tuples {
        if t.is_empty() {
            return Err(Error::invalid("empty tuple has no arity"));
        }
        by_len.entry(t.len()).or_default().insert(t);
    }
    let relations = by_len
        .into_iter()
        .map(|(k, tuples)| Relation {
            name: format!("E{k}"),
            arity: k,
            tuples,
        })
        .collect();
    RelationalSystem::new(carrier, relations)
}

/// View a graph as a relational system with one binary relation `adj`
/// holding its endpoint pairs. Edge identities are not part of this view;
/// [`graph_from_rs`] resynthesizes ids `e0, e1, ...` in pair order, so the
/// round trip is the identity exactly for graphs built with that convention
/// (and is always the identity on vertices, flags and adjacency).
pub fn rs_from_graph(g: &Graph) -> RelationalSystem {
    let tuples: BTreeSet<Vec<Id>> = g
        .adjacency_pairs()
        .into_iter()
        .map(|(a, b)| vec![a, b])
        .collect();
    RelationalSystem::new(
        g.vertex_set().clone(),
        vec![Relation {
            name: "adj".into(),
            arity: 2,
            tuples,
        }],
    )
    .expect("graph endpoints lie in its vertex set")
}

/// Rebuild a graph from a system of type (2^1): exactly one binary relation.
/// Tuples are read as (tail, head); for an undirected graph mutually inverse
/// tuples collapse to one edge. The result is marked simple when it has no
/// loops and no parallel pairs.
pub fn graph_from_rs(rs: &RelationalSystem, directed: bool) -> Result<Graph> {
    let [rel] = rs.relations() else {
        return Err(Error::invalid(format!(
            "expected exactly one relation, found {}",
            rs.relations().len()
        )));
    };
    if rel.arity != 2 {
        return Err(Error::invalid(format!(
            "expected a binary relation, found arity {}",
            rel.arity
        )));
    }
    let pairs: BTreeSet<(Id, Id)> = rel
        .tuples
        .iter()
        .map(|t| canonical_pair(directed, t[0].clone(), t[1].clone()))
        .collect();
    let simple = pairs.iter().all(|(a, b)| a != b);
    Graph::from_pairs(directed, simple, rs.carrier().iter().cloned(), pairs)
}
