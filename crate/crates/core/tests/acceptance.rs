//! The release gate: eight desk-scale checks, one test each, every test
//! printing a single pass/fail line. Each runs exhaustively over small
//! catalogs so a failure is a real counterexample, not flake.

use itertools::Itertools;
use relgraph::catalog::{catalog, complete_bipartite, cube_q3, named, path, petersen};
use relgraph::contraction::exists_contraction;
use relgraph::invariant::{check_invariance, evaluate_invariant, vertex_connectivity};
use relgraph::io::{graph_from_json, graph_to_json};
use relgraph::minor::{is_minor, is_topological_minor, minor_order_audit, verify_minor_witness};
use relgraph::morphism::{are_isomorphic, automorphism_group, relabel, VertexMap};
use relgraph::order::{induction_fold, OrderRelation};
use relgraph::product::{
    coproduct, product, verify_coproduct, verify_product, Category, CoproductConstruction,
    ProductConstruction,
};
use relgraph::transform::{
    line_graph, matching_transformation_graph, super_line_graph, tree_transformation_graph,
    SuperLineOptions,
};
use relgraph::{Error, Graph, Id, DEFAULT_BUDGET};

fn verdict(number: usize, name: &str, failures: &[String]) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {number} ({name}): {status}");
    assert!(
        failures.is_empty(),
        "criterion {number} ({name}) failed:\n{}",
        failures.join("\n")
    );
}

#[test]
fn criterion_1_products_and_coproducts_are_universal() {
    let pool = catalog(3).unwrap();
    let mut failures = Vec::new();
    if pool.len() != 7 {
        failures.push(format!("expected 7 pool graphs, got {}", pool.len()));
    }

    let product_cases = [
        (ProductConstruction::Cross, Category::Gra),
        (ProductConstruction::Strong, Category::EGra),
        (ProductConstruction::Disjunction, Category::CGra),
    ];
    for (kind, cat) in product_cases {
        for g1 in &pool {
            for g2 in &pool {
                let w = product(kind, g1, g2).unwrap();
                let res = verify_product(&w, cat, &pool, DEFAULT_BUDGET).unwrap();
                if !res.passed {
                    failures.push(format!(
                        "{} failed in {} for factors of orders {} and {}: {:?}",
                        kind.label(),
                        cat.label(),
                        g1.order(),
                        g2.order(),
                        res.failure
                    ));
                }
            }
        }
    }

    for cat in [Category::Gra, Category::Set] {
        for g1 in &pool {
            for g2 in &pool {
                let w = coproduct(CoproductConstruction::DisjointUnion, g1, g2).unwrap();
                let res = verify_coproduct(&w, cat, &pool, DEFAULT_BUDGET).unwrap();
                if !res.passed {
                    failures.push(format!(
                        "disjoint union failed in {} for summands of orders {} and {}: {:?}",
                        cat.label(),
                        g1.order(),
                        g2.order(),
                        res.failure
                    ));
                }
            }
        }
    }

    verdict(1, "products and coproducts are universal", &failures);
}

#[test]
fn criterion_2_minor_relation_is_a_preorder() {
    let pool = catalog(4).unwrap();
    let mut failures = Vec::new();
    if pool.len() != 18 {
        failures.push(format!("expected 18 pool graphs, got {}", pool.len()));
    }
    let audit = minor_order_audit(&pool, DEFAULT_BUDGET).unwrap();
    if !audit.all_hold() {
        failures.push(format!("audit reported a violation: {audit:?}"));
    }
    verdict(2, "minor relation is a preorder", &failures);
}

#[test]
fn criterion_3_petersen_contains_k33_as_minor_but_not_contraction() {
    let pet = petersen();
    let k33 = complete_bipartite(3, 3).unwrap();
    let mut failures = Vec::new();

    match is_minor(&k33, &pet).unwrap() {
        Some(w) => {
            if let Err(e) = verify_minor_witness(&k33, &pet, &w) {
                failures.push(format!("witness did not verify: {e}"));
            }
        }
        None => failures.push("no branch-set embedding found".to_string()),
    }

    if let Some(p) = exists_contraction(&pet, &k33, DEFAULT_BUDGET).unwrap() {
        failures.push(format!(
            "an exhaustive partition search should find nothing, got {:?}",
            p.blocks()
        ));
    }

    verdict(3, "K33 is a minor of Petersen yet not a contraction", &failures);
}

#[test]
fn criterion_4_minor_equals_topological_minor_for_small_degree_patterns() {
    let patterns: Vec<Graph> = catalog(4)
        .unwrap()
        .into_iter()
        .filter(|g| g.vertices().map(|v| g.degree(v)).max().unwrap_or(0) <= 3)
        .collect();
    let hosts = catalog(6).unwrap();
    let mut failures = Vec::new();
    let mut pairs = 0usize;
    for p in &patterns {
        for h in &hosts {
            pairs += 1;
            let minor = is_minor(p, h).unwrap().is_some();
            let topo = is_topological_minor(p, h).unwrap().is_some();
            if minor != topo {
                failures.push(format!(
                    "disagreement: pattern order {} size {}, host order {} size {}: minor={minor} topological={topo}",
                    p.order(),
                    p.size(),
                    h.order(),
                    h.size()
                ));
            }
        }
    }
    if pairs != patterns.len() * hosts.len() || patterns.is_empty() {
        failures.push(format!("bad coverage: {pairs} pairs"));
    }
    verdict(4, "minor equals topological minor at max degree 3", &failures);
}

/// Independent acyclicity oracle on a 4-vertex strict digraph given as a
/// 16-bit adjacency mask (bit 4a+b set means a relates to b).
fn acyclic_oracle(mask: u16) -> bool {
    // colors: 0 unvisited, 1 on stack, 2 done
    fn dfs(v: usize, mask: u16, color: &mut [u8; 4]) -> bool {
        color[v] = 1;
        for w in 0..4 {
            if w != v && mask & (1 << (4 * v + w)) != 0 {
                match color[w] {
                    1 => return false,
                    0 => {
                        if !dfs(w, mask, color) {
                            return false;
                        }
                    }
                    _ => {}
                }
            }
        }
        color[v] = 2;
        true
    }
    let mut color = [0u8; 4];
    (0..4).all(|v| color[v] != 0 || dfs(v, mask, &mut color))
}

#[test]
fn criterion_5_fold_succeeds_exactly_on_acyclic_strict_parts() {
    let carrier: Vec<Id> = (0..4).map(Id::from).collect();
    let mut failures = Vec::new();
    let mut refusals = 0usize;
    for mask in 0..=u16::MAX {
        let pairs: Vec<(Id, Id)> = (0..16)
            .filter(|bit| mask & (1 << bit) != 0)
            .map(|bit| (carrier[bit / 4].clone(), carrier[bit % 4].clone()))
            .collect();
        let r = OrderRelation::new(carrier.clone(), pairs).unwrap();
        let acyclic = acyclic_oracle(mask);
        match induction_fold(&r, |_, below| below.len()) {
            Ok(outcome) => {
                if !acyclic {
                    failures.push(format!("mask {mask:#06x}: fold succeeded on a cycle"));
                } else {
                    let pos: std::collections::BTreeMap<&Id, usize> =
                        outcome.order.iter().enumerate().map(|(i, v)| (v, i)).collect();
                    if outcome.order.len() != 4 {
                        failures.push(format!("mask {mask:#06x}: fold skipped elements"));
                    } else if r
                        .strict_pairs()
                        .any(|(a, b)| pos[&a.clone()] >= pos[&b.clone()])
                    {
                        failures.push(format!("mask {mask:#06x}: not a linear extension"));
                    }
                }
            }
            Err(Error::NotWellFounded { cycle }) => {
                refusals += 1;
                if acyclic {
                    failures.push(format!("mask {mask:#06x}: spurious refusal"));
                } else {
                    let n = cycle.len();
                    let closes = n >= 2
                        && (0..n).all(|i| {
                            let (a, b) = (&cycle[i], &cycle[(i + 1) % n]);
                            a != b && r.holds(a, b)
                        });
                    if !closes {
                        failures.push(format!(
                            "mask {mask:#06x}: reported cycle does not close"
                        ));
                    }
                }
            }
            Err(e) => failures.push(format!("mask {mask:#06x}: unexpected error {e}")),
        }
        if failures.len() > 5 {
            break;
        }
    }
    if refusals == 0 {
        failures.push("no relation was ever refused".to_string());
    }
    verdict(5, "fold succeeds exactly on acyclic strict parts", &failures);
}

#[test]
fn criterion_6_transformation_graph_theorems() {
    let mut failures = Vec::new();

    let connected: Vec<Graph> = catalog(6)
        .unwrap()
        .into_iter()
        .filter(|g| g.is_connected())
        .collect();
    if connected.len() != 143 {
        failures.push(format!(
            "expected 143 connected classes up to order 6, got {}",
            connected.len()
        ));
    }
    for g in &connected {
        let fam = tree_transformation_graph(g, DEFAULT_BUDGET).unwrap();
        if !fam.graph.is_connected() {
            failures.push(format!(
                "tree graph disconnected for a base of order {} size {}",
                g.order(),
                g.size()
            ));
        }
    }

    let fam = matching_transformation_graph(&cube_q3(), DEFAULT_BUDGET).unwrap();
    if fam.graph.order() != 9 {
        failures.push(format!("expected 9 cube matchings, got {}", fam.graph.order()));
    }
    let conn = vertex_connectivity(&fam.graph, DEFAULT_BUDGET).unwrap();
    if conn < 2 {
        failures.push(format!("cube matching graph has connectivity {conn}"));
    }

    let two_edge_path = path(3).unwrap();
    let mut compared = 0usize;
    let mut refused = 0usize;
    for g in catalog(5).unwrap() {
        let sl = super_line_graph(&g, 1, &two_edge_path, SuperLineOptions::default(), DEFAULT_BUDGET);
        if g.size() == 0 {
            // The operation only accepts an index within the edge count, so the
            // comparison ranges over graphs with at least one edge.
            match sl {
                Err(_) => refused += 1,
                Ok(_) => failures.push(format!(
                    "index-1 super line accepted an edgeless graph of order {}",
                    g.order()
                )),
            }
            continue;
        }
        let sl = sl.unwrap();
        let lg = line_graph(&g).unwrap();
        if are_isomorphic(&sl.graph, &lg, DEFAULT_BUDGET).unwrap().is_none() {
            failures.push(format!(
                "index-1 super line disagrees with the line graph for order {} size {}",
                g.order(),
                g.size()
            ));
        }
        compared += 1;
    }
    if (refused, compared) != (5, 47) {
        failures.push(format!(
            "expected 5 edgeless and 47 edged classes up to order 5, got {refused} and {compared}"
        ));
    }

    verdict(6, "transformation graph theorems", &failures);
}

#[test]
fn criterion_7_invariants_survive_relabeling() {
    let labels = ["degree_sequence", "aut_order", "determinant"];
    let mut failures = Vec::new();

    for g in catalog(4).unwrap() {
        let ids = g.vertex_vec();
        for label in labels {
            let base = evaluate_invariant(label, &g, DEFAULT_BUDGET).unwrap();
            for perm in ids.iter().cloned().permutations(ids.len()) {
                let map: VertexMap = ids.iter().cloned().zip(perm).collect();
                let h = relabel(&g, &map).unwrap();
                let value = evaluate_invariant(label, &h, DEFAULT_BUDGET).unwrap();
                if value != base {
                    failures.push(format!(
                        "{label} changed under a permutation of a graph of order {} size {}",
                        g.order(),
                        g.size()
                    ));
                }
            }
        }
    }

    for g in catalog(6).unwrap().into_iter().filter(|g| g.order() >= 5) {
        for label in labels {
            let report = check_invariance(label, &g, 200, 0xC0FFEE, DEFAULT_BUDGET).unwrap();
            if !report.passed {
                failures.push(format!(
                    "{label} failed sampling on order {} size {}: {:?}",
                    g.order(),
                    g.size(),
                    report.failure
                ));
            }
        }
    }

    let aut = automorphism_group(&petersen(), DEFAULT_BUDGET).unwrap();
    if aut.order() != 120 {
        failures.push(format!("expected 120 automorphisms, got {}", aut.order()));
    }

    verdict(7, "invariants survive relabeling", &failures);
}

#[test]
fn criterion_8_json_round_trips_and_catalog_counts() {
    let mut failures = Vec::new();

    let names = [
        "petersen", "q3", "k33", "k1", "k2", "k3", "k4", "k5", "c3", "c4", "c5", "c6", "p1",
        "p2", "p3", "p4", "p5",
    ];
    for name in names {
        let g = named(name).unwrap();
        let first = graph_to_json(&g);
        let back = graph_from_json(&first).unwrap();
        if back != g || graph_to_json(&back) != first {
            failures.push(format!("{name} did not round-trip bit-exactly"));
        }
    }

    let pool = catalog(4).unwrap();
    for (order, expected) in [(1usize, 1usize), (2, 2), (3, 4), (4, 11)] {
        let count = pool.iter().filter(|g| g.order() == order).count();
        if count != expected {
            failures.push(format!(
                "expected {expected} classes of order {order}, got {count}"
            ));
        }
    }

    verdict(8, "JSON round-trips and catalog counts", &failures);
}
