//! Lattice verification of poset components, two ways at once.
//!
//! Meets and joins inside a component are computed both by exhaustive scan
//! over the order relation and geometrically, by lifting both orientations
//! into one region and applying componentwise min/max there. The two routes
//! must agree everywhere. The component count is checked against the signed
//! linear coefficient of the chromatic polynomial and against a brute-force
//! count of acyclic orientations whose unique sink is 0.

use crate::geometry::{canonical_lift, lift_comparable, phi, point_join, point_meet, GeometryError};
use crate::graph::Graph;
use crate::orientation::{enumerate_acyclic, Orientation};
use crate::parallel;
use crate::poset::{Component, Poset, PosetError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("orientation is not in the component")]
    NotInComponent,
    #[error("no unique {dir:?} bound for elements {a} and {b}")]
    NoUniqueBound { dir: BoundDir, a: usize, b: usize },
    #[error("component has {0} minimal elements")]
    MultipleMinima(usize),
    #[error("component minimum has sinks {0:?}, expected only 0")]
    MinimumExtraSinks(Vec<usize>),
    #[error("signed linear coefficient is negative: {0}")]
    NegativeCount(i64),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundDir {
    Meet,
    Join,
}

/// Chromatic polynomial with exact integer coefficients; index = power of t.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticPolynomial {
    coefficients: Vec<i64>,
}

impl ChromaticPolynomial {
    /// Constant term first; length is vertex count + 1.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn linear_coefficient(&self) -> i64 {
        self.coefficients.get(1).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0i64, |acc, &c| acc * t + c)
    }
}

/// Deletion-contraction with memoization on a degree-refined certificate.
/// Contraction collapses parallel edges, which leave the polynomial
/// unchanged; a loop anywhere yields the zero polynomial.
pub fn chromatic_polynomial(g: &Graph) -> ChromaticPolynomial {
    let mut memo = HashMap::new();
    let coefficients = chrom_rec(g.vertex_count(), g.edges(), &mut memo);
    ChromaticPolynomial { coefficients }
}

fn chrom_rec(
    nv: usize,
    edges: &[(usize, usize)],
    memo: &mut HashMap<(usize, Vec<(usize, usize)>), Vec<i64>>,
) -> Vec<i64> {
    if edges.iter().any(|&(a, b)| a == b) {
        return vec![0; nv + 1];
    }
    if edges.is_empty() {
        let mut c = vec![0; nv + 1];
        c[nv] = 1;
        return c;
    }
    let key = certificate(nv, edges);
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }

    let (u, v) = edges[0];
    let rest = &edges[1..];
    let mut out = chrom_rec(nv, rest, memo);

    // contract (u, v): merge v into u, compact labels, collapse parallels
    let map = |w: usize| {
        if w == v {
            u
        } else if w > v {
            w - 1
        } else {
            w
        }
    };
    let mut contracted: Vec<(usize, usize)> = rest
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (map(a), map(b));
            (a.min(b), a.max(b))
        })
        .collect();
    contracted.sort_unstable();
    contracted.dedup();
    let sub = chrom_rec(nv - 1, &contracted, memo);
    for (i, c) in sub.iter().enumerate() {
        out[i] -= c;
    }

    memo.insert(key, out.clone());
    out
}

/// Sorted edge list after relabeling vertices by iterated degree refinement.
/// Equal certificates imply isomorphic graphs, so memo hits are sound; the
/// converse need not hold, which only costs hits.
fn certificate(nv: usize, edges: &[(usize, usize)]) -> (usize, Vec<(usize, usize)>) {
    let mut adj = vec![Vec::new(); nv];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut color: Vec<usize> = adj.iter().map(Vec::len).collect();
    for _ in 0..nv {
        let sigs: Vec<(usize, Vec<usize>)> = (0..nv)
            .map(|v| {
                let mut nc: Vec<usize> = adj[v].iter().map(|&u| color[u]).collect();
                nc.sort_unstable();
                (color[v], nc)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        color = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap())
            .collect();
    }
    let mut perm: Vec<usize> = (0..nv).collect();
    perm.sort_by_key(|&v| (color[v], v));
    let mut pos = vec![0; nv];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    let mut relabeled: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (pos[a], pos[b]);
            (a.min(b), a.max(b))
        })
        .collect();
    relabeled.sort_unstable();
    (nv, relabeled)
}

/// `(-1)^n` times the linear coefficient of the chromatic polynomial, where
/// the graph has `n + 1` vertices. Counts acyclic orientations whose unique
/// sink is 0, hence the components of `P0`.
pub fn greene_zaslavsky_count(g: &Graph) -> Result<usize, LatticeError> {
    let signed = signed_linear_coefficient(g);
    if signed < 0 {
        return Err(LatticeError::NegativeCount(signed));
    }
    Ok(signed as usize)
}

fn signed_linear_coefficient(g: &Graph) -> i64 {
    let linear = chromatic_polynomial(g).linear_coefficient();
    if g.max_vertex() % 2 == 0 {
        linear
    } else {
        -linear
    }
}

/// Brute-force count of acyclic orientations whose only sink is 0,
/// independent of both the poset construction and the polynomial.
pub fn unique_sink_zero_count(g: &Graph) -> usize {
    enumerate_acyclic(g)
        .into_iter()
        .filter(|o| o.vertex_roles(g).sinks == [0])
        .count()
}

/// Meet/join by exhaustive scan over the component: the brute-force oracle.
/// A missing or non-unique bound is a theorem counterexample.
pub fn poset_bound(
    c: &Component<'_>,
    a: &Orientation,
    b: &Orientation,
    dir: BoundDir,
) -> Result<Orientation, LatticeError> {
    let p = c.poset();
    let ai = p.index_of(a)?;
    let bi = p.index_of(b)?;
    if !c.contains_index(ai) || !c.contains_index(bi) {
        return Err(LatticeError::NotInComponent);
    }
    let local = bound_index(c, ai, bi, dir)?;
    Ok(p.elements()[local])
}

fn bound_index(
    c: &Component<'_>,
    ai: usize,
    bi: usize,
    dir: BoundDir,
) -> Result<usize, LatticeError> {
    let p = c.poset();
    let below = |x: usize, y: usize| match dir {
        BoundDir::Meet => p.leq_by_index(x, y),
        BoundDir::Join => p.leq_by_index(y, x),
    };
    let candidates: Vec<usize> = c
        .members()
        .iter()
        .copied()
        .filter(|&m| below(m, ai) && below(m, bi))
        .collect();
    let extreme: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&m| candidates.iter().all(|&other| below(other, m)))
        .collect();
    match extreme[..] {
        [unique] => Ok(unique),
        _ => Err(LatticeError::NoUniqueBound { dir, a: ai, b: bi }),
    }
}

/// Meet/join through the geometry: lift `a` canonically, lift `b` into the
/// same region along a zigzag of covers, take the componentwise bound there,
/// and map back. Must agree with [`poset_bound`] on every input.
pub fn geometric_bound(
    c: &Component<'_>,
    a: &Orientation,
    b: &Orientation,
    dir: BoundDir,
) -> Result<Orientation, LatticeError> {
    let p = c.poset();
    let g = p.graph();
    let ai = p.index_of(a)?;
    let bi = p.index_of(b)?;
    if !c.contains_index(ai) || !c.contains_index(bi) {
        return Err(LatticeError::NotInComponent);
    }
    let x = canonical_lift(g, a)?;
    let steps = c.zigzag_path(a, b)?;
    let y = lift_comparable(g, &x, b, &steps)?;
    let bound = match dir {
        BoundDir::Meet => point_meet(&x, &y),
        BoundDir::Join => point_join(&x, &y),
    };
    Ok(phi(g, &bound)?)
}

/// Meet and join tables of a finite poset, built by exhaustive scan.
pub struct LatticeTables {
    len: usize,
    meets: Vec<usize>,
    joins: Vec<usize>,
}

impl LatticeTables {
    /// Verifies that every pair has a unique greatest lower and least upper
    /// bound under `leq`, recording both tables.
    pub fn build(
        len: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<LatticeTables, LatticeError> {
        let mut meets = vec![0; len * len];
        let mut joins = vec![0; len * len];
        for a in 0..len {
            for b in 0..len {
                meets[a * len + b] = Self::scan(len, &leq, a, b, BoundDir::Meet)?;
                joins[a * len + b] = Self::scan(len, &leq, a, b, BoundDir::Join)?;
            }
        }
        Ok(LatticeTables { len, meets, joins })
    }

    fn scan(
        len: usize,
        leq: &impl Fn(usize, usize) -> bool,
        a: usize,
        b: usize,
        dir: BoundDir,
    ) -> Result<usize, LatticeError> {
        let below = |x: usize, y: usize| match dir {
            BoundDir::Meet => leq(x, y),
            BoundDir::Join => leq(y, x),
        };
        let candidates: Vec<usize> =
            (0..len).filter(|&m| below(m, a) && below(m, b)).collect();
        let extreme: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&m| candidates.iter().all(|&other| below(other, m)))
            .collect();
        match extreme[..] {
            [unique] => Ok(unique),
            _ => Err(LatticeError::NoUniqueBound { dir, a, b }),
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meets[a * self.len + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.joins[a * self.len + b]
    }

    /// Checks both distributive laws over all ordered triples. Either law
    /// implies the other in a lattice; both are checked regardless.
    pub fn is_distributive(&self) -> bool {
        let n = self.len;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c))
                        != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        return false;
                    }
                    if self.join(a, self.meet(b, c))
                        != self.meet(self.join(a, b), self.join(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Lattice check plus distributivity for any finite poset given by `leq`.
pub fn is_distributive(
    len: usize,
    leq: impl Fn(usize, usize) -> bool,
) -> Result<bool, LatticeError> {
    Ok(LatticeTables::build(len, leq)?.is_distributive())
}

/// The unique minimal element of a component; it must have 0 as its only
/// sink. Anything else is a theorem counterexample.
pub fn component_minimum(c: &Component<'_>) -> Result<Orientation, LatticeError> {
    let p = c.poset();
    let minimals: Vec<usize> = c
        .members()
        .iter()
        .copied()
        .filter(|&m| {
            c.members()
                .iter()
                .all(|&other| other == m || !p.leq_by_index(other, m))
        })
        .collect();
    let [unique] = minimals[..] else {
        return Err(LatticeError::MultipleMinima(minimals.len()));
    };
    let o = p.elements()[unique];
    let sinks = o.vertex_roles(p.graph()).sinks;
    if sinks != [0] {
        return Err(LatticeError::MinimumExtraSinks(sinks));
    }
    Ok(o)
}

/// Verdicts for one component of `P0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub size: usize,
    pub is_lattice: bool,
    pub is_distributive: bool,
    /// Arcs of the unique minimal element, when it exists.
    pub minimum: Option<Vec<(usize, usize)>>,
    pub minimum_unique_sink_zero: bool,
    /// Geometric meets and joins equal the exhaustive-scan oracle on all
    /// ordered pairs.
    pub bounds_agree: bool,
}

impl ComponentReport {
    pub fn ok(&self) -> bool {
        self.is_lattice
            && self.is_distributive
            && self.minimum.is_some()
            && self.minimum_unique_sink_zero
            && self.bounds_agree
    }
}

/// Full verification verdict for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub components: Vec<ComponentReport>,
    pub component_count: usize,
    /// Signed linear coefficient of the chromatic polynomial.
    pub greene_zaslavsky: i64,
    /// Brute-force count of acyclic orientations with unique sink 0.
    pub unique_sink_zero: usize,
    pub counts_match: bool,
    pub pass: bool,
}

/// Builds `P0` and checks, per component: lattice structure by exhaustive
/// scan, distributivity over all triples, a unique minimum whose only sink
/// is 0, and agreement of the geometric bounds with the oracle on every
/// ordered pair. Globally the component count must equal both the signed
/// linear chromatic coefficient and the brute-force unique-sink count.
/// Failures land in the report, never in an error.
pub fn verify_theorem(g: &Graph) -> LatticeReport {
    let poset = Poset::build(g);
    let comps = poset.components();

    let components: Vec<ComponentReport> = comps
        .iter()
        .map(|c| {
            let size = c.len();
            let tables = LatticeTables::build(size, |a, b| {
                poset.leq_by_index(c.members()[a], c.members()[b])
            });
            let (is_lattice, is_distributive) = match &tables {
                Ok(t) => (true, t.is_distributive()),
                Err(_) => (false, false),
            };

            let (minimum, minimum_unique_sink_zero) = match component_minimum(c) {
                Ok(o) => (Some(o.arcs(g)), true),
                Err(LatticeError::MinimumExtraSinks(_)) => {
                    // unique minimum exists but has extra sinks; expose it
                    let min = c
                        .members()
                        .iter()
                        .copied()
                        .find(|&m| {
                            c.members()
                                .iter()
                                .all(|&o| o == m || !poset.leq_by_index(o, m))
                        })
                        .map(|m| poset.elements()[m].arcs(g));
                    (min, false)
                }
                Err(_) => (None, false),
            };

            let pairs: Vec<(usize, usize)> = c
                .members()
                .iter()
                .flat_map(|&a| c.members().iter().map(move |&b| (a, b)))
                .collect();
            let bounds_agree = parallel::all(&pairs, |&(ai, bi)| {
                let a = poset.elements()[ai];
                let b = poset.elements()[bi];
                [BoundDir::Meet, BoundDir::Join].iter().all(|&dir| {
                    match (poset_bound(c, &a, &b, dir), geometric_bound(c, &a, &b, dir)) {
                        (Ok(x), Ok(y)) => x == y,
                        _ => false,
                    }
                })
            });

            ComponentReport {
                size,
                is_lattice,
                is_distributive,
                minimum,
                minimum_unique_sink_zero,
                bounds_agree,
            }
        })
        .collect();

    let component_count = comps.len();
    let greene_zaslavsky = signed_linear_coefficient(g);
    let unique_sink_zero = unique_sink_zero_count(g);
    let counts_match = component_count as i64 == greene_zaslavsky
        && unique_sink_zero as i64 == greene_zaslavsky;
    let pass = counts_match && components.iter().all(ComponentReport::ok);

    LatticeReport {
        components,
        component_count,
        greene_zaslavsky,
        unique_sink_zero,
        counts_match,
        pass,
    }
}

/// Verifies a batch of graphs, in parallel when the `parallel` feature is
/// enabled. Report order matches input order.
pub fn verify_corpus(graphs: &[Graph]) -> Vec<LatticeReport> {
    parallel::map_collect(graphs, verify_theorem)
}

/// Always-sequential twin of [`verify_corpus`], kept for benchmarking the
/// parallel speedup. Results are identical.
pub fn verify_corpus_serial(graphs: &[Graph]) -> Vec<LatticeReport> {
    graphs.iter().map(verify_theorem).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_graphs_up_to;

    fn p3() -> Graph {
        Graph::parse_edge_list("0 1\n1 2").unwrap()
    }

    fn t() -> Graph {
        Graph::parse_edge_list("0 1\n1 2\n1 3").unwrap()
    }

    fn k3() -> Graph {
        Graph::parse_edge_list("0 1\n0 2\n1 2").unwrap()
    }

    fn c4() -> Graph {
        Graph::parse_edge_list("0 1\n1 2\n2 3\n0 3").unwrap()
    }

    fn c5() -> Graph {
        Graph::parse_edge_list("0 1\n1 2\n2 3\n3 4\n0 4").unwrap()
    }

    #[test]
    fn chromatic_examples() {
        let k2 = Graph::parse_edge_list("0 1").unwrap();
        assert_eq!(chromatic_polynomial(&k2).coefficients(), &[0, -1, 1]);
        assert_eq!(chromatic_polynomial(&p3()).coefficients(), &[0, 1, -2, 1]);
        assert_eq!(chromatic_polynomial(&k3()).coefficients(), &[0, 2, -3, 1]);
    }

    #[test]
    fn chromatic_matches_coloring_counts() {
        // brute-force proper-coloring counter, independent of the recursion
        fn colorings(g: &Graph, colors: usize) -> i64 {
            if colors == 0 {
                return 0;
            }
            let nv = g.vertex_count();
            let mut count = 0i64;
            let mut assignment = vec![0usize; nv];
            'outer: loop {
                if g
                    .edges()
                    .iter()
                    .all(|&(a, b)| assignment[a] != assignment[b])
                {
                    count += 1;
                }
                for slot in assignment.iter_mut() {
                    *slot += 1;
                    if *slot < colors {
                        continue 'outer;
                    }
                    *slot = 0;
                }
                return count;
            }
        }

        for g in connected_graphs_up_to(4) {
            let poly = chromatic_polynomial(&g);
            for t in 0..=4 {
                assert_eq!(poly.eval(t as i64), colorings(&g, t), "t = {t}");
            }
        }
    }

    #[test]
    fn chromatic_invariants() {
        for g in connected_graphs_up_to(4) {
            let c = chromatic_polynomial(&g);
            let nv = g.vertex_count();
            assert_eq!(c.coefficients().len(), nv + 1);
            assert_eq!(c.coefficients()[nv], 1);
            assert_eq!(c.coefficients()[0], 0);
            for (k, &coef) in c.coefficients().iter().enumerate() {
                if coef != 0 {
                    let expect_positive = (nv - k) % 2 == 0;
                    assert_eq!(coef > 0, expect_positive);
                }
            }
        }
    }

    #[test]
    fn greene_zaslavsky_examples() {
        assert_eq!(greene_zaslavsky_count(&k3()).unwrap(), 2);
        assert_eq!(greene_zaslavsky_count(&c4()).unwrap(), 3);
        assert_eq!(greene_zaslavsky_count(&c5()).unwrap(), 4);
        assert_eq!(greene_zaslavsky_count(&p3()).unwrap(), 1);
        assert_eq!(greene_zaslavsky_count(&t()).unwrap(), 1);
    }

    #[test]
    fn greene_zaslavsky_matches_brute_force() {
        for g in connected_graphs_up_to(4) {
            assert_eq!(
                greene_zaslavsky_count(&g).unwrap(),
                unique_sink_zero_count(&g)
            );
        }
    }

    #[test]
    fn bounds_on_tree_component() {
        let g = t();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let a = Orientation::from_arcs(&g, &[(1, 0), (1, 2), (3, 1)]).unwrap();
        let b = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (1, 3)]).unwrap();
        let bottom = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (3, 1)]).unwrap();
        let top = Orientation::from_arcs(&g, &[(1, 0), (1, 2), (1, 3)]).unwrap();

        assert_eq!(poset_bound(&comps[0], &a, &b, BoundDir::Meet).unwrap(), bottom);
        assert_eq!(poset_bound(&comps[0], &a, &b, BoundDir::Join).unwrap(), top);
        assert_eq!(
            geometric_bound(&comps[0], &a, &b, BoundDir::Meet).unwrap(),
            bottom
        );
        assert_eq!(
            geometric_bound(&comps[0], &a, &b, BoundDir::Join).unwrap(),
            top
        );
    }

    #[test]
    fn bounds_on_comparable_and_singleton() {
        let g = p3();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let a = Orientation::from_arcs(&g, &[(1, 0), (2, 1)]).unwrap();
        let b = Orientation::from_arcs(&g, &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(poset_bound(&comps[0], &a, &b, BoundDir::Meet).unwrap(), a);

        let g = k3();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let o = poset.elements()[comps[0].members()[0]];
        assert_eq!(geometric_bound(&comps[0], &o, &o, BoundDir::Meet).unwrap(), o);
    }

    #[test]
    fn distributivity_controls() {
        // chain of 4: the P4 poset is totally ordered
        assert!(is_distributive(4, |a, b| a <= b).unwrap());

        // Boolean square from the tree component
        let g = t();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let members = comps[0].members().to_vec();
        assert!(is_distributive(members.len(), |a, b| {
            poset.leq_by_index(members[a], members[b])
        })
        .unwrap());

        // pentagon: 0 < 1 < 3 < 4, 0 < 2 < 4; the canonical non-distributive
        // lattice must be rejected
        let n5 = |x: usize, y: usize| -> bool {
            x == y || x == 0 || y == 4 || (x == 1 && y == 3)
        };
        assert!(!is_distributive(5, n5).unwrap());
    }

    #[test]
    fn non_lattice_is_an_error() {
        // two incomparable points with no common bounds
        let err = is_distributive(2, |a, b| a == b).unwrap_err();
        assert!(matches!(err, LatticeError::NoUniqueBound { .. }));
    }

    #[test]
    fn component_minima() {
        let g = t();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let bottom = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (3, 1)]).unwrap();
        assert_eq!(component_minimum(&comps[0]).unwrap(), bottom);

        let g = p3();
        let poset = Poset::build(&g);
        let comps = poset.components();
        let omega_a = Orientation::from_arcs(&g, &[(1, 0), (2, 1)]).unwrap();
        assert_eq!(component_minimum(&comps[0]).unwrap(), omega_a);

        let g = k3();
        let poset = Poset::build(&g);
        for c in poset.components() {
            let o = component_minimum(&c).unwrap();
            assert_eq!(o, poset.elements()[c.members()[0]]);
        }
    }

    #[test]
    fn verify_examples() {
        let report = verify_theorem(&k3());
        assert!(report.pass);
        assert_eq!(report.component_count, 2);
        assert_eq!(report.greene_zaslavsky, 2);

        let report = verify_theorem(&t());
        assert!(report.pass);
        assert_eq!(report.component_count, 1);
        assert_eq!(report.components[0].size, 4);

        let report = verify_theorem(&c4());
        assert!(report.pass);
        assert_eq!(report.component_count, 3);
    }

    #[test]
    fn corpus_routes_agree() {
        let graphs = connected_graphs_up_to(3);
        assert_eq!(verify_corpus(&graphs), verify_corpus_serial(&graphs));
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify_theorem(&t());
        let s = serde_json::to_string(&report).unwrap();
        let back: LatticeReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}
