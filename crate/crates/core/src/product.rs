//! Product and coproduct constructions on simple undirected graphs, with an
//! exhaustive universal-property verifier.
//!
//! Four binary constructions are built over the vertex pairs of the factors
//! (cross, cartesian, strong, disjunction) and two over their disjoint
//! vertices (disjoint union, join). The verifier decides, for a chosen
//! morphism discipline, whether a candidate object really is the (co)product:
//! it enumerates every map from every test object and demands exactly one
//! mediator through the candidate for each pair of component morphisms.

use crate::budget::{self, ensure_within};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::id::Id;
use crate::morphism::{map_satisfies, Dense, Morphism, MorphismKind, VertexMap};
use serde::Serialize;
use std::collections::BTreeMap;

/// A morphism discipline: which maps count as structure-preserving.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// Edge-preserving maps.
    Gra,
    /// Maps sending each edge to an edge or collapsing its endpoints.
    EGra,
    /// Maps reflecting adjacency back into the source.
    CGra,
    /// All maps between the vertex sets.
    Set,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::Gra => "gra",
            Category::EGra => "egra",
            Category::CGra => "cgra",
            Category::Set => "set",
        }
    }

    pub fn parse(s: &str) -> Result<Category> {
        match s {
            "gra" => Ok(Category::Gra),
            "egra" => Ok(Category::EGra),
            "cgra" => Ok(Category::CGra),
            "set" => Ok(Category::Set),
            _ => Err(Error::invalid(format!(
                "unknown category {s}; known: gra, egra, cgra, set"
            ))),
        }
    }

    /// The morphism kind tested in this category; `None` admits every map.
    pub fn kind(self) -> Option<MorphismKind> {
        match self {
            Category::Gra => Some(MorphismKind::Hom),
            Category::EGra => Some(MorphismKind::Ega),
            Category::CGra => Some(MorphismKind::Co),
            Category::Set => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductConstruction {
    /// Pairs adjacent when both coordinates are.
    Cross,
    /// Pairs adjacent when one coordinate moves along an edge.
    Cartesian,
    /// Union of cross and cartesian adjacency.
    Strong,
    /// Pairs adjacent when at least one coordinate is.
    Disjunction,
}

impl ProductConstruction {
    pub const ALL: [ProductConstruction; 4] = [
        ProductConstruction::Cross,
        ProductConstruction::Cartesian,
        ProductConstruction::Strong,
        ProductConstruction::Disjunction,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ProductConstruction::Cross => "cross",
            ProductConstruction::Cartesian => "cartesian",
            ProductConstruction::Strong => "strong",
            ProductConstruction::Disjunction => "disjunction",
        }
    }

    pub fn parse(s: &str) -> Result<ProductConstruction> {
        match s {
            "cross" => Ok(ProductConstruction::Cross),
            "cartesian" => Ok(ProductConstruction::Cartesian),
            "strong" => Ok(ProductConstruction::Strong),
            "disjunction" => Ok(ProductConstruction::Disjunction),
            _ => Err(Error::invalid(format!(
                "unknown product construction {s}; known: cross, cartesian, strong, disjunction"
            ))),
        }
    }

    /// The category whose product this construction is meant to realize.
    /// Cartesian is the classical counterexample: its projections are not
    /// even edge-preserving, and the verifier reports that.
    pub fn natural_category(self) -> Category {
        match self {
            ProductConstruction::Cross | ProductConstruction::Cartesian => Category::Gra,
            ProductConstruction::Strong => Category::EGra,
            ProductConstruction::Disjunction => Category::CGra,
        }
    }

    /// Adjacency rule on coordinate pairs: `e1`/`e2` say the coordinate
    /// moves along an edge, `s1`/`s2` that it stays put.
    fn joins(self, e1: bool, s1: bool, e2: bool, s2: bool) -> bool {
        match self {
            ProductConstruction::Cross => e1 && e2,
            ProductConstruction::Cartesian => (s1 && e2) || (e1 && s2),
            ProductConstruction::Strong => (e1 || s1) && (e2 || s2),
            ProductConstruction::Disjunction => e1 || e2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoproductConstruction {
    DisjointUnion,
    Join,
}

impl CoproductConstruction {
    pub const ALL: [CoproductConstruction; 2] = [
        CoproductConstruction::DisjointUnion,
        CoproductConstruction::Join,
    ];

    pub fn label(self) -> &'static str {
        match self {
            CoproductConstruction::DisjointUnion => "disjoint-union",
            CoproductConstruction::Join => "join",
        }
    }

    pub fn parse(s: &str) -> Result<CoproductConstruction> {
        match s {
            "disjoint-union" => Ok(CoproductConstruction::DisjointUnion),
            "join" => Ok(CoproductConstruction::Join),
            _ => Err(Error::invalid(format!(
                "unknown coproduct construction {s}; known: disjoint-union, join"
            ))),
        }
    }

    pub fn natural_category(self) -> Category {
        match self {
            CoproductConstruction::DisjointUnion => Category::Gra,
            CoproductConstruction::Join => Category::CGra,
        }
    }
}

/// A candidate product object together with its two projections.
#[derive(Debug, Clone, Serialize)]
pub struct ProductWitness {
    pub construction: ProductConstruction,
    pub object: Graph,
    pub left: VertexMap,
    pub right: VertexMap,
    pub factors: (Graph, Graph),
}

/// A candidate coproduct object together with its two injections.
#[derive(Debug, Clone, Serialize)]
pub struct CoproductWitness {
    pub construction: CoproductConstruction,
    pub object: Graph,
    pub left: VertexMap,
    pub right: VertexMap,
    pub summands: (Graph, Graph),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Why a universal-property check rejected the candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum UniversalFailure {
    /// A projection or injection is not a morphism of the category.
    StructureMapNotMorphism { side: Side },
    /// Some component pair admits no mediating morphism; the pair itself is
    /// the counterexample.
    NoMediator {
        object: usize,
        left: VertexMap,
        right: VertexMap,
    },
    /// Some component pair admits more than one mediating morphism.
    NonUniqueMediator {
        object: usize,
        left: VertexMap,
        right: VertexMap,
        count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalCheckResult {
    pub passed: bool,
    pub tested_objects: usize,
    pub tested_pairs: usize,
    pub failure: Option<UniversalFailure>,
}

fn require_simple_undirected(g: &Graph, role: &str) -> Result<()> {
    if g.directed() || !g.simple() {
        return Err(Error::unsupported(format!(
            "{role} must be a simple undirected graph"
        )));
    }
    Ok(())
}

fn pair_id(u: &Id, v: &Id) -> Id {
    Id::from(format!("({u},{v})"))
}

fn tagged(prefix: &str, v: &Id) -> Id {
    Id::from(format!("{prefix}:{v}"))
}

/// Build the chosen pair construction over two simple undirected graphs.
/// Vertices are named `(u,v)`; `left` and `right` are the coordinate
/// projections.
pub fn product(
    construction: ProductConstruction,
    g1: &Graph,
    g2: &Graph,
) -> Result<ProductWitness> {
    require_simple_undirected(g1, "left factor")?;
    require_simple_undirected(g2, "right factor")?;
    let mut vertices = Vec::new();
    let mut left = VertexMap::new();
    let mut right = VertexMap::new();
    for u in g1.vertices() {
        for v in g2.vertices() {
            let p = pair_id(u, v);
            left.insert(p.clone(), u.clone());
            right.insert(p.clone(), v.clone());
            vertices.push(p);
        }
    }
    let mut pairs = Vec::new();
    for u1 in g1.vertices() {
        for u2 in g2.vertices() {
            for v1 in g1.vertices() {
                for v2 in g2.vertices() {
                    if (u1, u2) >= (v1, v2) {
                        continue;
                    }
                    let e1 = g1.has_adjacency(u1, v1);
                    let e2 = g2.has_adjacency(u2, v2);
                    if construction.joins(e1, u1 == v1, e2, u2 == v2) {
                        pairs.push((pair_id(u1, u2), pair_id(v1, v2)));
                    }
                }
            }
        }
    }
    let object = Graph::simple_undirected(vertices, pairs)?;
    Ok(ProductWitness {
        construction,
        object,
        left,
        right,
        factors: (g1.clone(), g2.clone()),
    })
}

/// Build the disjoint union or the join of two simple undirected graphs.
/// Vertices are tagged `L:` and `R:`; `left` and `right` are the injections.
pub fn coproduct(
    construction: CoproductConstruction,
    g1: &Graph,
    g2: &Graph,
) -> Result<CoproductWitness> {
    require_simple_undirected(g1, "left summand")?;
    require_simple_undirected(g2, "right summand")?;
    let mut vertices = Vec::new();
    let mut left = VertexMap::new();
    let mut right = VertexMap::new();
    for u in g1.vertices() {
        let t = tagged("L", u);
        left.insert(u.clone(), t.clone());
        vertices.push(t);
    }
    for v in g2.vertices() {
        let t = tagged("R", v);
        right.insert(v.clone(), t.clone());
        vertices.push(t);
    }
    let mut pairs = Vec::new();
    for (_, (a, b)) in g1.edges() {
        pairs.push((tagged("L", a), tagged("L", b)));
    }
    for (_, (a, b)) in g2.edges() {
        pairs.push((tagged("R", a), tagged("R", b)));
    }
    if construction == CoproductConstruction::Join {
        for u in g1.vertices() {
            for v in g2.vertices() {
                pairs.push((tagged("L", u), tagged("R", v)));
            }
        }
    }
    let object = Graph::simple_undirected(vertices, pairs)?;
    Ok(CoproductWitness {
        construction,
        object,
        left,
        right,
        summands: (g1.clone(), g2.clone()),
    })
}

/// The projections of a product witness as checked morphisms of its natural
/// category. Fails exactly when a projection violates that category's
/// discipline (the cartesian case).
pub fn projection_morphisms(w: &ProductWitness) -> Result<(Morphism, Morphism)> {
    let kind = w
        .construction
        .natural_category()
        .kind()
        .expect("pair constructions target a graph category");
    let p1 = Morphism::verified(w.object.clone(), w.factors.0.clone(), w.left.clone(), kind)?;
    let p2 = Morphism::verified(w.object.clone(), w.factors.1.clone(), w.right.clone(), kind)?;
    Ok((p1, p2))
}

/// The injections of a coproduct witness as checked morphisms of its natural
/// category.
pub fn injection_morphisms(w: &CoproductWitness) -> Result<(Morphism, Morphism)> {
    let kind = w
        .construction
        .natural_category()
        .kind()
        .expect("pair constructions target a graph category");
    let i1 = Morphism::verified(w.summands.0.clone(), w.object.clone(), w.left.clone(), kind)?;
    let i2 = Morphism::verified(w.summands.1.clone(), w.object.clone(), w.right.clone(), kind)?;
    Ok((i1, i2))
}

fn is_cat_map(category: Category, src: &Dense, tgt: &Dense, f: &[usize]) -> bool {
    match category.kind() {
        Some(kind) => map_satisfies(kind, src, tgt, f),
        None => true,
    }
}

/// Visit every map between index sets of the given sizes, in lexicographic
/// order.
fn for_each_map(src_n: usize, tgt_n: usize, mut visit: impl FnMut(&[usize])) {
    if src_n == 0 {
        visit(&[]);
        return;
    }
    if tgt_n == 0 {
        return;
    }
    let mut f = vec![0usize; src_n];
    loop {
        visit(&f);
        let mut pos = src_n;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            f[pos] += 1;
            if f[pos] < tgt_n {
                break;
            }
            f[pos] = 0;
        }
    }
}

fn collect_cat_maps(
    category: Category,
    src: &Dense,
    tgt: &Dense,
    budget: u64,
    what: &str,
) -> Result<Vec<Vec<usize>>> {
    ensure_within(budget::pow(tgt.n as u64, src.n as u32), budget, what)?;
    let mut out = Vec::new();
    for_each_map(src.n, tgt.n, |f| {
        if is_cat_map(category, src, tgt, f) {
            out.push(f.to_vec());
        }
    });
    Ok(out)
}

/// Translate an index map back to the id level, for reporting.
fn id_form(f: &[usize], src: &Dense, tgt: &Dense) -> VertexMap {
    f.iter()
        .enumerate()
        .map(|(i, &j)| (src.ids[i].clone(), tgt.ids[j].clone()))
        .collect()
}

/// Translate an id-level map to an index map from `src` into `tgt`.
fn index_form(map: &VertexMap, src: &Dense, tgt: &Dense) -> Result<Vec<usize>> {
    src.ids
        .iter()
        .map(|v| {
            let w = map
                .get(v)
                .ok_or_else(|| Error::invalid(format!("structure map misses {v}")))?;
            tgt.ids
                .binary_search(w)
                .map_err(|_| Error::invalid(format!("structure map leaves the target at {w}")))
        })
        .collect()
}

/// Decide whether the witness object really is the categorical product of
/// its factors in `category`, quantifying over the given test objects and
/// every pair of component morphisms from them.
pub fn verify_product(
    w: &ProductWitness,
    category: Category,
    test_objects: &[Graph],
    budget: u64,
) -> Result<UniversalCheckResult> {
    let pd = Dense::build(&w.object);
    let d1 = Dense::build(&w.factors.0);
    let d2 = Dense::build(&w.factors.1);
    let p1 = index_form(&w.left, &pd, &d1)?;
    let p2 = index_form(&w.right, &pd, &d2)?;
    for (side, proj) in [(Side::Left, &p1), (Side::Right, &p2)] {
        let tgt = if side == Side::Left { &d1 } else { &d2 };
        if !is_cat_map(category, &pd, tgt, proj) {
            return Ok(UniversalCheckResult {
                passed: false,
                tested_objects: 0,
                tested_pairs: 0,
                failure: Some(UniversalFailure::StructureMapNotMorphism { side }),
            });
        }
    }
    let mut tested_pairs = 0usize;
    for (oi, t) in test_objects.iter().enumerate() {
        require_simple_undirected(t, "test object")?;
        let td = Dense::build(t);
        let fs1 = collect_cat_maps(category, &td, &d1, budget, "left component enumeration")?;
        let fs2 = collect_cat_maps(category, &td, &d2, budget, "right component enumeration")?;
        ensure_within(
            budget::pow(pd.n as u64, td.n as u32),
            budget,
            "mediator enumeration",
        )?;
        let mut mediators: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for_each_map(td.n, pd.n, |f| {
            if is_cat_map(category, &td, &pd, f) {
                let c1: Vec<usize> = f.iter().map(|&i| p1[i]).collect();
                let c2: Vec<usize> = f.iter().map(|&i| p2[i]).collect();
                *mediators.entry((c1, c2)).or_insert(0) += 1;
            }
        });
        for f1 in &fs1 {
            for f2 in &fs2 {
                let count = mediators
                    .get(&(f1.clone(), f2.clone()))
                    .copied()
                    .unwrap_or(0);
                if count != 1 {
                    let left = id_form(f1, &td, &d1);
                    let right = id_form(f2, &td, &d2);
                    let failure = if count == 0 {
                        UniversalFailure::NoMediator {
                            object: oi,
                            left,
                            right,
                        }
                    } else {
                        UniversalFailure::NonUniqueMediator {
                            object: oi,
                            left,
                            right,
                            count,
                        }
                    };
                    return Ok(UniversalCheckResult {
                        passed: false,
                        tested_objects: oi + 1,
                        tested_pairs: tested_pairs + 1,
                        failure: Some(failure),
                    });
                }
                tested_pairs += 1;
            }
        }
    }
    Ok(UniversalCheckResult {
        passed: true,
        tested_objects: test_objects.len(),
        tested_pairs,
        failure: None,
    })
}

/// Decide whether the witness object really is the categorical coproduct of
/// its summands in `category`: the dual check, with mediators running from
/// the candidate into each test object.
pub fn verify_coproduct(
    w: &CoproductWitness,
    category: Category,
    test_objects: &[Graph],
    budget: u64,
) -> Result<UniversalCheckResult> {
    let pd = Dense::build(&w.object);
    let d1 = Dense::build(&w.summands.0);
    let d2 = Dense::build(&w.summands.1);
    let i1 = index_form(&w.left, &d1, &pd)?;
    let i2 = index_form(&w.right, &d2, &pd)?;
    for (side, inj, src) in [(Side::Left, &i1, &d1), (Side::Right, &i2, &d2)] {
        if !is_cat_map(category, src, &pd, inj) {
            return Ok(UniversalCheckResult {
                passed: false,
                tested_objects: 0,
                tested_pairs: 0,
                failure: Some(UniversalFailure::StructureMapNotMorphism { side }),
            });
        }
    }
    let mut tested_pairs = 0usize;
    for (oi, t) in test_objects.iter().enumerate() {
        require_simple_undirected(t, "test object")?;
        let td = Dense::build(t);
        let fs1 = collect_cat_maps(category, &d1, &td, budget, "left component enumeration")?;
        let fs2 = collect_cat_maps(category, &d2, &td, budget, "right component enumeration")?;
        ensure_within(
            budget::pow(td.n as u64, pd.n as u32),
            budget,
            "mediator enumeration",
        )?;
        let mut mediators: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for_each_map(pd.n, td.n, |f| {
            if is_cat_map(category, &pd, &td, f) {
                let c1: Vec<usize> = i1.iter().map(|&i| f[i]).collect();
                let c2: Vec<usize> = i2.iter().map(|&i| f[i]).collect();
                *mediators.entry((c1, c2)).or_insert(0) += 1;
            }
        });
        for f1 in &fs1 {
            for f2 in &fs2 {
                let count = mediators
                    .get(&(f1.clone(), f2.clone()))
                    .copied()
                    .unwrap_or(0);
                if count != 1 {
                    let left = id_form(f1, &d1, &td);
                    let right = id_form(f2, &d2, &td);
                    let failure = if count == 0 {
                        UniversalFailure::NoMediator {
                            object: oi,
                            left,
                            right,
                        }
                    } else {
                        UniversalFailure::NonUniqueMediator {
                            object: oi,
                            left,
                            right,
                            count,
                        }
                    };
                    return Ok(UniversalCheckResult {
                        passed: false,
                        tested_objects: oi + 1,
                        tested_pairs: tested_pairs + 1,
                        failure: Some(failure),
                    });
                }
                tested_pairs += 1;
            }
        }
    }
    Ok(UniversalCheckResult {
        passed: true,
        tested_objects: test_objects.len(),
        tested_pairs,
        failure: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::DEFAULT_BUDGET;
    use crate::catalog::{catalog, cycle, path};
    use crate::morphism::are_isomorphic;

    fn k(n: usize) -> Graph {
        Graph::complete(n).unwrap()
    }

    #[test]
    fn pair_constructions_on_two_k2s() {
        let k2 = k(2);
        let cross = product(ProductConstruction::Cross, &k2, &k2).unwrap();
        assert_eq!((cross.object.order(), cross.object.size()), (4, 2));
        let cart = product(ProductConstruction::Cartesian, &k2, &k2).unwrap();
        assert!(are_isomorphic(&cart.object, &cycle(4).unwrap(), DEFAULT_BUDGET)
            .unwrap()
            .is_some());
        let strong = product(ProductConstruction::Strong, &k2, &k2).unwrap();
        assert!(are_isomorphic(&strong.object, &k(4), DEFAULT_BUDGET)
            .unwrap()
            .is_some());
        let disj = product(ProductConstruction::Disjunction, &k2, &k2).unwrap();
        assert!(are_isomorphic(&disj.object, &k(4), DEFAULT_BUDGET)
            .unwrap()
            .is_some());
    }

    #[test]
    fn products_commute_up_to_isomorphism() {
        let pool = [k(2), path(3).unwrap(), k(3)];
        for c in ProductConstruction::ALL {
            for g1 in &pool {
                for g2 in &pool {
                    let a = product(c, g1, g2).unwrap().object;
                    let b = product(c, g2, g1).unwrap().object;
                    assert!(
                        are_isomorphic(&a, &b, DEFAULT_BUDGET).unwrap().is_some(),
                        "{} of {g1:?} and {g2:?}",
                        c.label()
                    );
                }
            }
        }
    }

    #[test]
    fn natural_projections_are_morphisms_except_cartesian() {
        let g1 = path(3).unwrap();
        let g2 = k(3);
        for c in ProductConstruction::ALL {
            let w = product(c, &g1, &g2).unwrap();
            let checked = projection_morphisms(&w);
            if c == ProductConstruction::Cartesian {
                assert!(checked.is_err());
            } else {
                checked.unwrap();
            }
        }
        let du = coproduct(CoproductConstruction::DisjointUnion, &g1, &g2).unwrap();
        injection_morphisms(&du).unwrap();
        let join = coproduct(CoproductConstruction::Join, &g1, &g2).unwrap();
        injection_morphisms(&join).unwrap();
    }

    #[test]
    fn universal_check_smoke_on_small_pool() {
        let pool = catalog(2).unwrap();
        let k2 = k(2);
        let p3 = path(3).unwrap();

        let cross = product(ProductConstruction::Cross, &k2, &p3).unwrap();
        let res = verify_product(&cross, Category::Gra, &pool, DEFAULT_BUDGET).unwrap();
        assert!(res.passed, "{:?}", res.failure);
        assert!(res.tested_pairs > 0);

        let cart = product(ProductConstruction::Cartesian, &k2, &k2).unwrap();
        let res = verify_product(&cart, Category::Gra, &pool, DEFAULT_BUDGET).unwrap();
        assert_eq!(
            res.failure,
            Some(UniversalFailure::StructureMapNotMorphism { side: Side::Left })
        );

        let strong = product(ProductConstruction::Strong, &k2, &p3).unwrap();
        assert!(verify_product(&strong, Category::EGra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);
        // the strong object is not the product for plain edge-preserving maps
        assert!(!verify_product(&strong, Category::Gra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);

        let disj = product(ProductConstruction::Disjunction, &k2, &p3).unwrap();
        assert!(verify_product(&disj, Category::CGra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);

        // in the bare-map discipline every pair construction is the product
        for c in ProductConstruction::ALL {
            let w = product(c, &k2, &p3).unwrap();
            assert!(verify_product(&w, Category::Set, &pool, DEFAULT_BUDGET)
                .unwrap()
                .passed);
        }
    }

    #[test]
    fn coproduct_checks_split_by_category() {
        let pool = catalog(2).unwrap();
        let k2 = k(2);
        let p3 = path(3).unwrap();

        let du = coproduct(CoproductConstruction::DisjointUnion, &k2, &p3).unwrap();
        assert!(verify_coproduct(&du, Category::Gra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);
        assert!(verify_coproduct(&du, Category::EGra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);
        assert!(verify_coproduct(&du, Category::Set, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);
        let res = verify_coproduct(&du, Category::CGra, &pool, DEFAULT_BUDGET).unwrap();
        assert!(matches!(
            res.failure,
            Some(UniversalFailure::NoMediator { .. })
        ));

        let join = coproduct(CoproductConstruction::Join, &k2, &p3).unwrap();
        assert!(verify_coproduct(&join, Category::CGra, &pool, DEFAULT_BUDGET)
            .unwrap()
            .passed);
        let res = verify_coproduct(&join, Category::Gra, &pool, DEFAULT_BUDGET).unwrap();
        assert!(matches!(
            res.failure,
            Some(UniversalFailure::NoMediator { .. })
        ));
    }

    #[test]
    fn verifier_respects_the_budget() {
        let k3 = k(3);
        let w = product(ProductConstruction::Cross, &k3, &k3).unwrap();
        let err = verify_product(&w, Category::Gra, &[k3.clone()], 10).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn directed_and_multigraph_inputs_are_refused() {
        let mut d = Graph::new(true, true);
        d.add_vertex(Id::from(0));
        assert!(product(ProductConstruction::Cross, &d, &d).is_err());
        assert!(coproduct(CoproductConstruction::Join, &d, &d).is_err());
    }
}
