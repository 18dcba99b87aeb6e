//! Binary order relations on finite carriers: axiom checking and
//! classification, minimal elements, inductive folds in topological order,
//! antichain and chain extraction, and orientation as a directed graph.
//!
//! The strict part of a relation is taken to be its pairs off the diagonal.
//! A relation is recorded as well-founded when that strict part is acyclic,
//! which on a finite carrier is exactly the absence of infinite descending
//! sequences: any such sequence revisits an element and closes a cycle, and
//! conversely a cycle unrolls into one.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use crate::relational::RelationalSystem;
use std::collections::{BTreeMap, BTreeSet};

/// A binary relation over an explicit finite carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    carrier: BTreeSet<Id>,
    pairs: BTreeSet<(Id, Id)>,
}

impl OrderRelation {
    pub fn new(
        carrier: impl IntoIterator<Item = Id>,
        pairs: impl IntoIterator<Item = (Id, Id)>,
    ) -> Result<OrderRelation> {
        let carrier: BTreeSet<Id> = carrier.into_iter().collect();
        let pairs: BTreeSet<(Id, Id)> = pairs.into_iter().collect();
        for (a, b) in &pairs {
            for end in [a, b] {
                if !carrier.contains(end) {
                    return Err(Error::invalid(format!("pair member {end} is not in the carrier")));
                }
            }
        }
        Ok(OrderRelation { carrier, pairs })
    }

    /// Divisibility on the integers `lo..=hi`, both at least 1.
    pub fn divisibility(lo: i64, hi: i64) -> Result<OrderRelation> {
        if lo < 1 || hi < lo {
            return Err(Error::invalid("divisibility needs 1 <= lo <= hi"));
        }
        let mut pairs = Vec::new();
        for a in lo..=hi {
            for b in lo..=hi {
                if b % a == 0 {
                    pairs.push((Id::from(a), Id::from(b)));
                }
            }
        }
        OrderRelation::new((lo..=hi).map(Id::from), pairs)
    }

    /// Read a relation out of a system carrying exactly one binary relation.
    pub fn from_system(rs: &RelationalSystem) -> Result<OrderRelation> {
        let binary: Vec<_> = rs.relations().iter().filter(|r| r.arity == 2).collect();
        let [rel] = binary.as_slice() else {
            return Err(Error::invalid(format!(
                "expected exactly one binary relation, found {}",
                binary.len()
            )));
        };
        let pairs = rel
            .tuples
            .iter()
            .map(|t| (t[0].clone(), t[1].clone()));
        OrderRelation::new(rs.carrier().iter().cloned(), pairs)
    }

    pub fn carrier(&self) -> &BTreeSet<Id> {
        &self.carrier
    }

    pub fn pairs(&self) -> &BTreeSet<(Id, Id)> {
        &self.pairs
    }

    pub fn holds(&self, a: &Id, b: &Id) -> bool {
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// The off-diagonal pairs.
    pub fn strict_pairs(&self) -> impl Iterator<Item = &(Id, Id)> {
        self.pairs.iter().filter(|(a, b)| a != b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderClass {
    /// Reflexive, transitive, antisymmetric, and with an acyclic strict
    /// part. Every finite partial order lands here.
    WellFoundedOrder,
    /// Reflexive, transitive, antisymmetric. Kept for the ladder's sake:
    /// on finite carriers the strict part of such a relation is always
    /// acyclic, so classification never stops at this rung.
    PartialOrder,
    /// Reflexive and transitive.
    QuasiOrder,
    NotAnOrder,
}

impl OrderClass {
    pub fn label(self) -> &'static str {
        match self {
            OrderClass::WellFoundedOrder => "well-founded-order",
            OrderClass::PartialOrder => "partial-order",
            OrderClass::QuasiOrder => "quasi-order",
            OrderClass::NotAnOrder => "not-an-order",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct OrderClassification {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub well_founded: bool,
    pub class: OrderClass,
    /// A strict cycle, when one exists.
    pub cycle: Option<Vec<Id>>,
}

/// A cycle in the strict part, as a vertex sequence whose consecutive
/// elements (wrapping around) are strict pairs. Deterministic: depth-first
/// in carrier order.
fn strict_cycle(r: &OrderRelation) -> Option<Vec<Id>> {
    let succs: BTreeMap<&Id, Vec<&Id>> = r.carrier.iter().map(|v| (v, Vec::new())).collect();
    let mut succs = succs;
    for (a, b) in r.strict_pairs() {
        succs.get_mut(a).expect("validated member").push(b);
    }
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color: BTreeMap<&Id, Color> = r.carrier.iter().map(|v| (v, Color::White)).collect();
    let mut stack: Vec<&Id> = Vec::new();

    fn dfs<'a>(
        v: &'a Id,
        succs: &BTreeMap<&'a Id, Vec<&'a Id>>,
        color: &mut BTreeMap<&'a Id, Color>,
        stack: &mut Vec<&'a Id>,
    ) -> Option<Vec<Id>> {
        color.insert(v, Color::Gray);
        stack.push(v);
        for &w in &succs[v] {
            match color[w] {
                Color::Gray => {
                    let start = stack.iter().position(|u| *u == w).expect("gray is on stack");
                    return Some(stack[start..].iter().map(|u| (*u).clone()).collect());
                }
                Color::White => {
                    if let Some(c) = dfs(w, succs, color, stack) {
                        return Some(c);
                    }
                }
                Color::Black => {}
            }
        }
        stack.pop();
        color.insert(v, Color::Black);
        None
    }

    for v in &r.carrier {
        if color[v] == Color::White {
            if let Some(c) = dfs(v, &succs, &mut color, &mut stack) {
                return Some(c);
            }
        }
    }
    None
}

/// Check the order axioms and name the strongest class they support.
pub fn classify(r: &OrderRelation) -> OrderClassification {
    let reflexive = r.carrier.iter().all(|v| r.holds(v, v));
    let mut transitive = true;
    'outer: for (a, b) in &r.pairs {
        for (c, d) in &r.pairs {
            if b == c && !r.holds(a, d) {
                transitive = false;
                break 'outer;
            }
        }
    }
    let antisymmetric = r
        .strict_pairs()
        .all(|(a, b)| !r.holds(b, a));
    let cycle = strict_cycle(r);
    let well_founded = cycle.is_none();
    let class = if reflexive && transitive && antisymmetric && well_founded {
        OrderClass::WellFoundedOrder
    } else if reflexive && transitive && antisymmetric {
        OrderClass::PartialOrder
    } else if reflexive && transitive {
        OrderClass::QuasiOrder
    } else {
        OrderClass::NotAnOrder
    };
    OrderClassification {
        reflexive,
        transitive,
        antisymmetric,
        well_founded,
        class,
        cycle,
    }
}

/// Elements with no strict predecessor: exactly the ones an inductive fold
/// can start from.
pub fn minimal_elements(r: &OrderRelation) -> Vec<Id> {
    r.carrier
        .iter()
        .filter(|v| !r.strict_pairs().any(|(_, b)| b == *v))
        .cloned()
        .collect()
}

/// What an inductive fold produced: the visit order and a value per element.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FoldOutcome<T> {
    pub order: Vec<Id>,
    pub results: BTreeMap<Id, T>,
}

/// Fold over the carrier in topological order of the strict part, smallest
/// ready element first. The step function sees each element together with
/// the values already computed for its strict predecessors, in carrier
/// order. Refuses relations whose strict part has a cycle, naming one.
pub fn induction_fold<T>(
    r: &OrderRelation,
    mut step: impl FnMut(&Id, &[(&Id, &T)]) -> T,
) -> Result<FoldOutcome<T>> {
    let mut preds: BTreeMap<&Id, BTreeSet<&Id>> =
        r.carrier.iter().map(|v| (v, BTreeSet::new())).collect();
    let mut succs: BTreeMap<&Id, Vec<&Id>> =
        r.carrier.iter().map(|v| (v, Vec::new())).collect();
    for (a, b) in r.strict_pairs() {
        preds.get_mut(b).expect("validated member").insert(a);
        succs.get_mut(a).expect("validated member").push(b);
    }
    let mut missing: BTreeMap<&Id, usize> =
        preds.iter().map(|(v, p)| (*v, p.len())).collect();
    let mut ready: BTreeSet<&Id> = missing
        .iter()
        .filter(|(_, m)| **m == 0)
        .map(|(v, _)| *v)
        .collect();
    let mut order = Vec::new();
    let mut results: BTreeMap<Id, T> = BTreeMap::new();
    while let Some(&v) = ready.iter().next() {
        ready.remove(v);
        let ctx: Vec<(&Id, &T)> = preds[v]
            .iter()
            .map(|p| (*p, &results[*p]))
            .collect();
        let value = step(v, &ctx);
        results.insert(v.clone(), value);
        order.push(v.clone());
        for &w in &succs[v] {
            let m = missing.get_mut(w).expect("validated member");
            *m -= 1;
            if *m == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() != r.carrier.len() {
        let cycle = strict_cycle(r).expect("a stalled fold means a strict cycle");
        return Err(Error::NotWellFounded { cycle });
    }
    Ok(FoldOutcome { order, results })
}

/// Maximum antichain and longest chain, by checking every subset of the
/// carrier. Elements are comparable when the relation holds either way.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AntichainChainReport {
    /// Subsets that are pairwise incomparable, the empty set included.
    pub antichains: usize,
    /// Subsets that are pairwise comparable, the empty set included.
    pub chains: usize,
    pub max_antichain: Vec<Id>,
    pub longest_chain: Vec<Id>,
}

pub fn antichains_and_chains(r: &OrderRelation, budget: u64) -> Result<AntichainChainReport> {
    let vs: Vec<&Id> = r.carrier.iter().collect();
    let n = vs.len();
    ensure_within(budget::pow(2, n as u32), budget, "subset enumeration")?;
    let comparable = |a: &Id, b: &Id| r.holds(a, b) || r.holds(b, a);
    let mut report = AntichainChainReport {
        antichains: 0,
        chains: 0,
        max_antichain: Vec::new(),
        longest_chain: Vec::new(),
    };
    for mask in 0u64..(1 << n) {
        let members: Vec<&Id> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        let mut antichain = true;
        let mut chain = true;
        for (i, a) in members.iter().enumerate() {
            for b in members.iter().skip(i + 1) {
                if comparable(a, b) {
                    antichain = false;
                } else {
                    chain = false;
                }
            }
        }
        if antichain {
            report.antichains += 1;
            if members.len() > report.max_antichain.len() {
                report.max_antichain = members.iter().map(|v| (*v).clone()).collect();
            }
        }
        if chain {
            report.chains += 1;
            if members.len() > report.longest_chain.len() {
                report.longest_chain = members.iter().map(|v| (*v).clone()).collect();
            }
        }
    }
    Ok(report)
}

/// Orient an antisymmetric relation as a directed graph on its carrier,
/// one edge per strict pair.
pub fn order_to_oriented_graph(r: &OrderRelation) -> Result<Graph> {
    let classification = classify(r);
    if !classification.antisymmetric {
        return Err(Error::invalid(
            "only antisymmetric relations orient without clashes",
        ));
    }
    let mut g = Graph::new(true, false);
    for v in &r.carrier {
        g.add_vertex(v.clone());
    }
    for (k, (a, b)) in r.strict_pairs().enumerate() {
        g.add_edge(Id::from(format!("e{k}")), a.clone(), b.clone())?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_BUDGET;

    fn rel(carrier: &[i64], pairs: &[(i64, i64)]) -> OrderRelation {
        OrderRelation::new(
            carrier.iter().map(|&v| Id::from(v)),
            pairs.iter().map(|&(a, b)| (Id::from(a), Id::from(b))),
        )
        .unwrap()
    }

    #[test]
    fn classification_ladder() {
        let div = OrderRelation::divisibility(1, 6).unwrap();
        let c = classify(&div);
        assert!(c.reflexive && c.transitive && c.antisymmetric && c.well_founded);
        assert_eq!(c.class, OrderClass::WellFoundedOrder);
        assert_eq!(c.cycle, None);

        // a tie keeps it a quasi-order and breaks well-foundedness
        let tie = rel(&[1, 2], &[(1, 1), (2, 2), (1, 2), (2, 1)]);
        let c = classify(&tie);
        assert!(c.reflexive && c.transitive && !c.antisymmetric);
        assert_eq!(c.class, OrderClass::QuasiOrder);
        assert!(!c.well_founded);
        assert_eq!(c.cycle.as_ref().map(Vec::len), Some(2));

        // dropping reflexivity drops out of the ladder entirely
        let bare = rel(&[1, 2], &[(1, 2)]);
        let c = classify(&bare);
        assert_eq!(c.class, OrderClass::NotAnOrder);
        assert!(c.well_founded, "a single strict pair has no cycle");

        let loop3 = rel(&[1, 2, 3], &[(1, 2), (2, 3), (3, 1)]);
        let c = classify(&loop3);
        assert!(!c.well_founded);
        let cycle = c.cycle.unwrap();
        assert_eq!(cycle.len(), 3);
        for (i, a) in cycle.iter().enumerate() {
            let b = &cycle[(i + 1) % cycle.len()];
            assert!(loop3.holds(a, b), "consecutive cycle elements relate");
        }
    }

    #[test]
    fn equality_is_a_discrete_well_founded_order() {
        let eq = rel(&[1, 2, 3], &[(1, 1), (2, 2), (3, 3)]);
        assert_eq!(classify(&eq).class, OrderClass::WellFoundedOrder);
        assert_eq!(minimal_elements(&eq).len(), 3);
    }

    #[test]
    fn minimal_elements_have_no_strict_predecessor() {
        let div = OrderRelation::divisibility(2, 12).unwrap();
        let mins = minimal_elements(&div);
        let expect: Vec<Id> = [2, 3, 5, 7, 11].map(Id::from).into();
        assert_eq!(mins, expect, "primes below the carrier floor");
    }

    #[test]
    fn fold_visits_divisors_first() {
        let div = OrderRelation::divisibility(1, 12).unwrap();
        // longest divisor chain ending at each element
        let out = induction_fold(&div, |_, preds| {
            1 + preds.iter().map(|(_, d)| **d).max().unwrap_or(0)
        })
        .unwrap();
        assert_eq!(out.order, (1..=12).map(Id::from).collect::<Vec<_>>());
        assert_eq!(out.results[&Id::from(8)], 4);
        assert_eq!(out.results[&Id::from(12)], 4);
        assert_eq!(out.results[&Id::from(7)], 2);
        assert_eq!(out.results[&Id::from(1)], 1);

        let loop3 = rel(&[1, 2, 3], &[(1, 2), (2, 3), (3, 1)]);
        let err = induction_fold(&loop3, |_, _| 0).unwrap_err();
        match err {
            Error::NotWellFounded { cycle } => assert_eq!(cycle.len(), 3),
            other => panic!("expected a cycle refusal, got {other}"),
        }
    }

    #[test]
    fn fold_context_is_exactly_the_strict_predecessors() {
        let div = OrderRelation::divisibility(1, 8).unwrap();
        induction_fold(&div, |v, preds| {
            let seen: Vec<i64> = preds
                .iter()
                .map(|(p, _)| match p {
                    Id::Int(i) => *i,
                    _ => unreachable!(),
                })
                .collect();
            let Id::Int(n) = v else { unreachable!() };
            let divisors: Vec<i64> = (1..*n).filter(|d| n % d == 0).collect();
            assert_eq!(seen, divisors, "context of {n}");
        })
        .unwrap();
    }

    #[test]
    fn division_antichains_and_chains_frozen() {
        let div = OrderRelation::divisibility(2, 12).unwrap();
        let report = antichains_and_chains(&div, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.max_antichain.len(), 6);
        assert_eq!(report.longest_chain.len(), 3);
        // witnesses are genuine
        for (i, a) in report.max_antichain.iter().enumerate() {
            for b in report.max_antichain.iter().skip(i + 1) {
                assert!(!div.holds(a, b) && !div.holds(b, a));
            }
        }
        for (i, a) in report.longest_chain.iter().enumerate() {
            for b in report.longest_chain.iter().skip(i + 1) {
                assert!(div.holds(a, b) || div.holds(b, a));
            }
        }
        assert!(report.antichains > 0 && report.chains > 0);

        let wide = OrderRelation::divisibility(1, 30).unwrap();
        assert!(matches!(
            antichains_and_chains(&wide, DEFAULT_BUDGET),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn orientation_requires_antisymmetry() {
        let div = OrderRelation::divisibility(2, 8).unwrap();
        let g = order_to_oriented_graph(&div).unwrap();
        assert!(g.directed());
        assert!(g.is_oriented());
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), div.strict_pairs().count());

        let tie = rel(&[1, 2], &[(1, 2), (2, 1)]);
        assert!(order_to_oriented_graph(&tie).is_err());
    }

    #[test]
    fn carrier_membership_is_validated() {
        assert!(OrderRelation::new(
            [Id::from(1)],
            [(Id::from(1), Id::from(2))],
        )
        .is_err());
        assert!(OrderRelation::divisibility(0, 5).is_err());
    }
}
