//! Serialization: JSON documents for graphs, relational systems, order
//! relations, morphisms, and partitions, plus edge-list text and DOT export.
//!
//! JSON serialization is deterministic (collections emerge sorted), so
//! serialize-parse-serialize returns the original bytes.

use crate::contraction::Partition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use crate::morphism::{MorphismKind, VertexMap};
use crate::order::OrderRelation;
use crate::relational::{Relation, RelationalSystem};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

fn invalid_json(e: impl std::fmt::Display) -> Error {
    Error::invalid(format!("invalid JSON: {e}"))
}

// ---------------------------------------------------------------------------
// Graphs.

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: Id,
    tail: Id,
    head: Id,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    directed: bool,
    simple: bool,
    vertices: Vec<Id>,
    edges: Vec<EdgeDoc>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = GraphDoc {
            directed: self.directed(),
            simple: self.simple(),
            vertices: self.vertex_vec(),
            edges: self
                .edges()
                .map(|(e, (t, h))| EdgeDoc {
                    id: e.clone(),
                    tail: t.clone(),
                    head: h.clone(),
                })
                .collect(),
        };
        doc.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Graph, D::Error> {
        let doc = GraphDoc::deserialize(deserializer)?;
        let mut g = Graph::new(doc.directed, doc.simple);
        let mut seen = std::collections::BTreeSet::new();
        for v in doc.vertices {
            if !seen.insert(v.clone()) {
                return Err(D::Error::custom(format!("duplicate vertex {v}")));
            }
            g.add_vertex(v);
        }
        for e in doc.edges {
            g.add_edge(e.id, e.tail, e.head)
                .map_err(D::Error::custom)?;
        }
        Ok(g)
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs always serialize")
}

pub fn graph_from_json(s: &str) -> Result<Graph> {
    serde_json::from_str(s).map_err(invalid_json)
}

// ---------------------------------------------------------------------------
// Relational systems and order relations.

#[derive(Serialize, Deserialize)]
struct SystemDoc {
    carrier: Vec<Id>,
    relations: Vec<Relation>,
}

impl Serialize for RelationalSystem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SystemDoc {
            carrier: self.carrier().iter().cloned().collect(),
            relations: self.relations().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RelationalSystem {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<RelationalSystem, D::Error> {
        let doc = SystemDoc::deserialize(deserializer)?;
        RelationalSystem::new(doc.carrier.into_iter().collect(), doc.relations)
            .map_err(D::Error::custom)
    }
}

pub fn system_to_json(rs: &RelationalSystem) -> String {
    serde_json::to_string(rs).expect("systems always serialize")
}

pub fn system_from_json(s: &str) -> Result<RelationalSystem> {
    serde_json::from_str(s).map_err(invalid_json)
}

#[derive(Serialize, Deserialize)]
struct OrderDoc {
    carrier: Vec<Id>,
    pairs: Vec<(Id, Id)>,
}

impl Serialize for OrderRelation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        OrderDoc {
            carrier: self.carrier().iter().cloned().collect(),
            pairs: self.pairs().iter().cloned().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OrderRelation {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<OrderRelation, D::Error> {
        let doc = OrderDoc::deserialize(deserializer)?;
        OrderRelation::new(doc.carrier, doc.pairs).map_err(D::Error::custom)
    }
}

pub fn order_to_json(r: &OrderRelation) -> String {
    serde_json::to_string(r).expect("relations always serialize")
}

pub fn order_from_json(s: &str) -> Result<OrderRelation> {
    serde_json::from_str(s).map_err(invalid_json)
}

// ---------------------------------------------------------------------------
// Morphisms and partitions.

#[derive(Serialize, Deserialize)]
struct MorphismDoc {
    map: BTreeMap<String, Id>,
    kind: String,
}

pub fn morphism_to_json(map: &VertexMap, kind: MorphismKind) -> String {
    let doc = MorphismDoc {
        map: map
            .iter()
            .map(|(k, v)| (k.as_key(), v.clone()))
            .collect(),
        kind: kind.label().to_string(),
    };
    serde_json::to_string(&doc).expect("morphisms always serialize")
}

pub fn morphism_from_json(s: &str) -> Result<(VertexMap, MorphismKind)> {
    let doc: MorphismDoc = serde_json::from_str(s).map_err(invalid_json)?;
    let kind = MorphismKind::parse(&doc.kind)?;
    let map = doc
        .map
        .into_iter()
        .map(|(k, v)| (Id::from_key(&k), v))
        .collect();
    Ok((map, kind))
}

#[derive(Serialize, Deserialize)]
struct PartitionDoc {
    blocks: Vec<Vec<Id>>,
}

pub fn partition_to_json(p: &Partition) -> String {
    let doc = PartitionDoc {
        blocks: p
            .blocks()
            .iter()
            .map(|b| b.iter().cloned().collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("partitions always serialize")
}

/// Parse a block list and validate it against the graph it partitions.
pub fn partition_from_json(g: &Graph, s: &str) -> Result<Partition> {
    let doc: PartitionDoc = serde_json::from_str(s).map_err(invalid_json)?;
    Partition::new(g, doc.blocks.into_iter().map(|b| b.into_iter().collect()).collect())
}

// ---------------------------------------------------------------------------
// Edge-list text.

/// Parse lines of `tail head` pairs; a line with one token is an isolated
/// vertex, `#` starts a comment. Repeated pairs become parallel edges, and
/// the result is marked simple exactly when no loops or parallels appear.
pub fn parse_edge_list(text: &str, directed: bool) -> Result<Graph> {
    let mut vertices: Vec<Id> = Vec::new();
    let mut pairs: Vec<(Id, Id)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [single] => vertices.push(Id::from_key(single)),
            [tail, head] => {
                let (t, h) = (Id::from_key(tail), Id::from_key(head));
                vertices.push(t.clone());
                vertices.push(h.clone());
                pairs.push((t, h));
            }
            _ => {
                return Err(Error::invalid(format!(
                    "line {}: expected one or two tokens, got {}",
                    lineno + 1,
                    tokens.len()
                )));
            }
        }
    }
    let canon: Vec<(Id, Id)> = pairs
        .iter()
        .map(|(t, h)| crate::graph::canonical_pair(directed, t.clone(), h.clone()))
        .collect();
    let mut sorted = canon.clone();
    sorted.sort();
    let parallel = sorted.windows(2).any(|w| w[0] == w[1]);
    let looped = canon.iter().any(|(t, h)| t == h);
    let mut g = Graph::new(directed, !parallel && !looped);
    for v in vertices {
        g.add_vertex(v);
    }
    for (k, (t, h)) in canon.into_iter().enumerate() {
        g.add_edge(Id::from(format!("e{k}")), t, h)?;
    }
    Ok(g)
}

/// Render a graph back to edge-list text, one edge per line in edge-id
/// order, isolated vertices as single tokens.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let mut touched = std::collections::BTreeSet::new();
    for (_, (t, h)) in g.edges() {
        out.push_str(&format!("{t} {h}\n"));
        touched.insert(t.clone());
        touched.insert(h.clone());
    }
    for v in g.vertices() {
        if !touched.contains(v) {
            out.push_str(&format!("{v}\n"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// DOT export.

fn dot_id(id: &Id) -> String {
    let s = id.to_string();
    let plain_word = s
        .chars()
        .enumerate()
        .all(|(i, c)| c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit()));
    let numeral = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if (!s.is_empty() && plain_word) || numeral {
        s
    } else {
        format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
    }
}

/// Render as DOT, vertices first, then edges in edge-id order.
pub fn to_dot(g: &Graph) -> String {
    to_dot_labeled(g, &BTreeMap::new())
}

/// Render as DOT with label attributes on the vertices that have one.
pub fn to_dot_labeled(g: &Graph, labels: &BTreeMap<Id, String>) -> String {
    let (header, arrow) = if g.directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = format!("{header} {{\n");
    for v in g.vertices() {
        match labels.get(v) {
            Some(l) => out.push_str(&format!(
                "  {} [label=\"{}\"];\n",
                dot_id(v),
                l.replace('\\', "\\\\").replace('"', "\\\"")
            )),
            None => out.push_str(&format!("  {};\n", dot_id(v))),
        }
    }
    for (_, (t, h)) in g.edges() {
        out.push_str(&format!("  {} {arrow} {};\n", dot_id(t), dot_id(h)));
    }
    out.push_str("}\n");
    out
}
