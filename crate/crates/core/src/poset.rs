//! The poset `P0` of acyclic orientations with 0 fixed as a sink.
//!
//! Covers are single legal firings (the fired vertex is neither 0 nor a
//! neighbor of 0), the order is the reflexive-transitive closure of covers,
//! and components are the weakly connected pieces of the cover graph.
//! Antisymmetry holds because firing sequences in `P0` have bounded length;
//! it is re-verified at build time anyway.

use crate::graph::Graph;
use crate::orientation::{enumerate_sink_zero, FiringSequence, Orientation};
use serde::Deserialize;
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("orientation is not an element of the poset")]
    NotAnElement,
    #[error("orientations are not comparable in that direction")]
    NotComparable,
    #[error("orientations lie in different components")]
    DifferentComponents,
    #[error("orientation does not have 0 as a sink")]
    RootNotSink,
    #[error("invalid poset JSON: {0}")]
    Json(String),
}

/// A single legal firing: `from` becomes `to` by firing `fired`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cover {
    pub from: usize,
    pub to: usize,
    pub fired: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepDir {
    Up,
    Down,
}

/// One step of a zigzag walk: `orientation` is reached from the previous
/// entry by firing (`Up`) or unfiring (`Down`) `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZigzagStep {
    pub orientation: Orientation,
    pub dir: StepDir,
    pub vertex: usize,
}

#[derive(Debug, Clone)]
pub struct Poset {
    graph: Graph,
    elements: Vec<Orientation>,
    index: HashMap<u64, usize>,
    covers: Vec<Cover>,
    up: Vec<Vec<Cover>>,
    down: Vec<Vec<Cover>>,
    order: Vec<Vec<bool>>,
}

/// Sources of `o` that may legally fire inside `P0`: every source except 0
/// and the neighbors of 0.
pub fn allowed_firings_p0(g: &Graph, o: &Orientation) -> Result<Vec<usize>, PosetError> {
    if !o.has_sink_zero(g) {
        return Err(PosetError::RootNotSink);
    }
    Ok(o.vertex_roles(g)
        .sources
        .into_iter()
        .filter(|&v| v != 0 && !g.is_root_neighbor(v))
        .collect())
}

impl Poset {
    /// Enumerates the elements of `P0`, all single legal firings, and the
    /// reachability order. Panics if antisymmetry fails, which would mean
    /// firing sequences of unbounded length exist.
    pub fn build(g: &Graph) -> Poset {
        let elements = enumerate_sink_zero(g);
        let index: HashMap<u64, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, o)| (o.bits(), i))
            .collect();

        let mut covers = Vec::new();
        let mut up = vec![Vec::new(); elements.len()];
        let mut down = vec![Vec::new(); elements.len()];
        for (from, o) in elements.iter().enumerate() {
            for v in allowed_firings_p0(g, o).expect("element of P0") {
                let fired = o.fire(g, v).expect("legal firing");
                let to = *index
                    .get(&fired.bits())
                    .expect("firing stays inside P0");
                let cover = Cover { from, to, fired: v };
                covers.push(cover);
                up[from].push(cover);
                down[to].push(cover);
            }
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable_by_key(|c| (c.fired, c.to, c.from));
        }
        covers.sort_unstable_by_key(|c| (c.from, c.to));

        // reflexive-transitive closure by BFS from each element
        let mut order = vec![vec![false; elements.len()]; elements.len()];
        for start in 0..elements.len() {
            let mut queue = VecDeque::from([start]);
            order[start][start] = true;
            while let Some(v) = queue.pop_front() {
                for c in &up[v] {
                    if !order[start][c.to] {
                        order[start][c.to] = true;
                        queue.push_back(c.to);
                    }
                }
            }
        }
        for a in 0..elements.len() {
            for b in (a + 1)..elements.len() {
                assert!(
                    !(order[a][b] && order[b][a]),
                    "antisymmetry violated between elements {a} and {b}"
                );
            }
        }

        Poset {
            graph: g.clone(),
            elements,
            index,
            covers,
            up,
            down,
            order,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Orientation] {
        &self.elements
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn index_of(&self, o: &Orientation) -> Result<usize, PosetError> {
        self.index
            .get(&o.bits())
            .copied()
            .ok_or(PosetError::NotAnElement)
    }

    pub fn leq_by_index(&self, a: usize, b: usize) -> bool {
        self.order[a][b]
    }

    /// `a <= b` iff `b` is reachable from `a` by legal firings.
    pub fn leq(&self, a: &Orientation, b: &Orientation) -> Result<bool, PosetError> {
        Ok(self.order[self.index_of(a)?][self.index_of(b)?])
    }

    /// Weakly connected components of the cover graph, ordered by smallest
    /// member index; members ascending within each component.
    pub fn components(&self) -> Vec<Component<'_>> {
        let mut comp = vec![usize::MAX; self.elements.len()];
        let mut next = 0;
        for start in 0..self.elements.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let steps = self.up[v]
                    .iter()
                    .map(|c| c.to)
                    .chain(self.down[v].iter().map(|c| c.from));
                for u in steps {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        (0..next)
            .map(|id| {
                let members: Vec<usize> =
                    (0..self.elements.len()).filter(|&v| comp[v] == id).collect();
                let covers = self
                    .covers
                    .iter()
                    .copied()
                    .filter(|c| comp[c.from] == id)
                    .collect();
                Component {
                    poset: self,
                    members,
                    covers,
                }
            })
            .collect()
    }

    /// Shortest chain of covers realizing `a <= b`, as a firing sequence.
    /// Ties break toward the smaller fired vertex.
    pub fn cover_path(
        &self,
        a: &Orientation,
        b: &Orientation,
    ) -> Result<FiringSequence, PosetError> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        if !self.order[ai][bi] {
            return Err(PosetError::NotComparable);
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.elements.len()];
        let mut seen = vec![false; self.elements.len()];
        seen[ai] = true;
        let mut queue = VecDeque::from([ai]);
        while let Some(v) = queue.pop_front() {
            if v == bi {
                break;
            }
            for c in &self.up[v] {
                if !seen[c.to] {
                    seen[c.to] = true;
                    parent[c.to] = Some((v, c.fired));
                    queue.push_back(c.to);
                }
            }
        }
        let mut fires = Vec::new();
        let mut at = bi;
        while at != ai {
            let (prev, fired) = parent[at].expect("reachable by order relation");
            fires.push(fired);
            at = prev;
        }
        fires.reverse();
        Ok(FiringSequence { start: *a, fires })
    }

    /// Covers that survive transitive reduction. A single firing could in
    /// principle be implied by a longer chain; any such firing is excluded
    /// here and reported by [`Poset::redundant_firings`].
    pub fn hasse_covers(&self) -> Vec<Cover> {
        self.covers
            .iter()
            .copied()
            .filter(|c| !self.is_redundant(c))
            .collect()
    }

    /// Single firings that are not covers of the abstract order, if any.
    pub fn redundant_firings(&self) -> Vec<Cover> {
        self.covers
            .iter()
            .copied()
            .filter(|c| self.is_redundant(c))
            .collect()
    }

    fn is_redundant(&self, c: &Cover) -> bool {
        (0..self.elements.len()).any(|mid| {
            mid != c.from && mid != c.to && self.order[c.from][mid] && self.order[mid][c.to]
        })
    }

    /// DOT text of the Hasse diagram (transitively reduced cover graph).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph p0 {\n  rankdir = BT;\n");
        for (i, o) in self.elements.iter().enumerate() {
            let label: Vec<String> = o
                .arcs(&self.graph)
                .iter()
                .map(|(t, h)| format!("{t}->{h}"))
                .collect();
            let _ = writeln!(out, "  e{i} [label=\"{}\"];", label.join(" "));
        }
        for c in self.hasse_covers() {
            let _ = writeln!(out, "  e{} -> e{} [label=\"{}\"];", c.from, c.to, c.fired);
        }
        out.push_str("}\n");
        out
    }

    /// The documented `{"elements": [...], "covers": [[a, b], ...]}` value.
    pub fn to_json(&self) -> serde_json::Value {
        let elements: Vec<_> = self
            .elements
            .iter()
            .map(|o| o.to_json(&self.graph))
            .collect();
        let covers: Vec<[usize; 2]> = self.covers.iter().map(|c| [c.from, c.to]).collect();
        serde_json::json!({ "elements": elements, "covers": covers })
    }

    /// Parses the poset JSON against `g` and rebuilds, checking that the
    /// listed elements and covers match the canonical construction.
    pub fn from_json(g: &Graph, v: &serde_json::Value) -> Result<Poset, PosetError> {
        #[derive(Deserialize)]
        struct Raw {
            elements: Vec<serde_json::Value>,
            covers: Vec<(usize, usize)>,
        }
        let raw: Raw =
            serde_json::from_value(v.clone()).map_err(|e| PosetError::Json(e.to_string()))?;
        let poset = Poset::build(g);
        let elements: Result<Vec<Orientation>, _> = raw
            .elements
            .iter()
            .map(|e| Orientation::from_json(g, e))
            .collect();
        let elements = elements.map_err(|e| PosetError::Json(e.to_string()))?;
        let covers: Vec<(usize, usize)> =
            poset.covers.iter().map(|c| (c.from, c.to)).collect();
        if elements != poset.elements || raw.covers != covers {
            return Err(PosetError::Json(
                "poset does not match canonical construction for this graph".into(),
            ));
        }
        Ok(poset)
    }
}

/// A weakly connected component of the cover graph.
#[derive(Debug, Clone)]
pub struct Component<'p> {
    poset: &'p Poset,
    members: Vec<usize>,
    covers: Vec<Cover>,
}

impl<'p> Component<'p> {
    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.members.binary_search(&idx).is_ok()
    }

    pub fn contains(&self, o: &Orientation) -> bool {
        self.poset
            .index_of(o)
            .map(|i| self.contains_index(i))
            .unwrap_or(false)
    }

    /// Shortest walk from `a` to `b` in the undirected cover graph, expanded
    /// into single cover steps tagged up (firing) or down (unfiring).
    /// Ties break toward the smaller stepped vertex.
    pub fn zigzag_path(
        &self,
        a: &Orientation,
        b: &Orientation,
    ) -> Result<Vec<ZigzagStep>, PosetError> {
        let ai = self.poset.index_of(a)?;
        let bi = self.poset.index_of(b)?;
        if !self.contains_index(ai) || !self.contains_index(bi) {
            return Err(PosetError::DifferentComponents);
        }
        let n = self.poset.elements.len();
        let mut parent: Vec<Option<(usize, StepDir, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[ai] = true;
        let mut queue = VecDeque::from([ai]);
        while let Some(v) = queue.pop_front() {
            if v == bi {
                break;
            }
            // neighbors sorted by (vertex, target index); up before down on
            // a vertex tie is impossible since a vertex cannot be both a
            // source and a sink of the same orientation
            let mut steps: Vec<(usize, StepDir, usize)> = self.poset.up[v]
                .iter()
                .map(|c| (c.fired, StepDir::Up, c.to))
                .chain(
                    self.poset.down[v]
                        .iter()
                        .map(|c| (c.fired, StepDir::Down, c.from)),
                )
                .collect();
            steps.sort_unstable_by_key(|&(vertex, _, target)| (vertex, target));
            for (vertex, dir, target) in steps {
                if !seen[target] {
                    seen[target] = true;
                    parent[target] = Some((v, dir, vertex));
                    queue.push_back(target);
                }
            }
        }
        if !seen[bi] {
            return Err(PosetError::DifferentComponents);
        }
        let mut rev = Vec::new();
        let mut at = bi;
        while at != ai {
            let (prev, dir, vertex) = parent[at].expect("reached in BFS");
            rev.push(ZigzagStep {
                orientation: self.poset.elements[at],
                dir,
                vertex,
            });
            at = prev;
        }
        rev.reverse();
        Ok(rev)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_graphs_up_to;
    use crate::orientation::{validate_firing_sequence, FiringMode};

    fn p3() -> Graph {
        Graph::parse_edge_list("0 1\n1 2").unwrap()
    }

    fn p4() -> Graph {
        Graph::parse_edge_list("0 1\n1 2\n2 3").unwrap()
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

    fn omega_a(g: &Graph) -> Orientation {
        Orientation::from_arcs(g, &[(1, 0), (2, 1)]).unwrap()
    }

    fn omega_b(g: &Graph) -> Orientation {
        Orientation::from_arcs(g, &[(1, 0), (1, 2)]).unwrap()
    }

    #[test]
    fn allowed_firings() {
        let g = p3();
        assert_eq!(allowed_firings_p0(&g, &omega_a(&g)).unwrap(), vec![2]);

        let g = k3();
        let o = Orientation::from_arcs(&g, &[(1, 0), (2, 0), (1, 2)]).unwrap();
        assert_eq!(allowed_firings_p0(&g, &o).unwrap(), Vec::<usize>::new());

        let g = t();
        let bottom = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (3, 1)]).unwrap();
        assert_eq!(allowed_firings_p0(&g, &bottom).unwrap(), vec![2, 3]);

        let up = Orientation::from_arcs(&p3(), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            allowed_firings_p0(&p3(), &up),
            Err(PosetError::RootNotSink)
        );
    }

    #[test]
    fn build_p3() {
        let g = p3();
        let p = Poset::build(&g);
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers().len(), 1);
        let a = p.index_of(&omega_a(&g)).unwrap();
        let b = p.index_of(&omega_b(&g)).unwrap();
        assert_eq!(p.covers()[0].from, a);
        assert_eq!(p.covers()[0].to, b);
    }

    #[test]
    fn build_p4_is_a_chain() {
        let p = Poset::build(&p4());
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().len(), 3);
        // a single chain: exactly one element with no lower cover, one with
        // no upper cover, and total order on all pairs
        for a in 0..4 {
            for b in 0..4 {
                assert!(p.leq_by_index(a, b) || p.leq_by_index(b, a));
            }
        }
    }

    #[test]
    fn build_k3_has_no_covers() {
        let p = Poset::build(&k3());
        assert_eq!(p.len(), 2);
        assert!(p.covers().is_empty());
    }

    #[test]
    fn leq_examples() {
        let g = p3();
        let p = Poset::build(&g);
        assert!(p.leq(&omega_a(&g), &omega_b(&g)).unwrap());
        assert!(!p.leq(&omega_b(&g), &omega_a(&g)).unwrap());
        assert!(p.leq(&omega_a(&g), &omega_a(&g)).unwrap());
        let up = Orientation::from_arcs(&g, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p.leq(&up, &omega_a(&g)), Err(PosetError::NotAnElement));
    }

    #[test]
    fn component_partition() {
        let p = Poset::build(&k3());
        let comps = p.components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 1));

        let p = Poset::build(&c4());
        let mut sizes: Vec<usize> = p.components().iter().map(Component::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2]);

        let p = Poset::build(&t());
        let comps = p.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 4);
    }

    #[test]
    fn comparable_elements_share_component() {
        for g in connected_graphs_up_to(4) {
            let p = Poset::build(&g);
            let comps = p.components();
            let comp_of = |i: usize| comps.iter().position(|c| c.contains_index(i)).unwrap();
            for a in 0..p.len() {
                for b in 0..p.len() {
                    if p.leq_by_index(a, b) {
                        assert_eq!(comp_of(a), comp_of(b));
                    }
                }
            }
        }
    }

    #[test]
    fn cover_paths() {
        let g = p3();
        let p = Poset::build(&g);
        let seq = p.cover_path(&omega_a(&g), &omega_b(&g)).unwrap();
        assert_eq!(seq.fires, vec![2]);
        let refl = p.cover_path(&omega_a(&g), &omega_a(&g)).unwrap();
        assert!(refl.fires.is_empty());
        assert_eq!(
            p.cover_path(&omega_b(&g), &omega_a(&g)),
            Err(PosetError::NotComparable)
        );

        let g = t();
        let p = Poset::build(&g);
        let bottom = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (3, 1)]).unwrap();
        let top = Orientation::from_arcs(&g, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        let seq = p.cover_path(&bottom, &top).unwrap();
        assert_eq!(seq.fires, vec![2, 3]);
    }

    #[test]
    fn cover_paths_revalidate() {
        for g in connected_graphs_up_to(4) {
            let p = Poset::build(&g);
            for a in 0..p.len() {
                for b in 0..p.len() {
                    if !p.leq_by_index(a, b) {
                        continue;
                    }
                    let seq = p
                        .cover_path(&p.elements()[a], &p.elements()[b])
                        .unwrap();
                    let report = validate_firing_sequence(&g, &seq, FiringMode::P0).unwrap();
                    assert_eq!(report.final_orientation(), p.elements()[b]);
                    assert!(report.lemma1_ok);
                    assert_eq!(report.bound_ok, Some(true));
                }
            }
        }
    }

    #[test]
    fn zigzag_paths() {
        let g = t();
        let p = Poset::build(&g);
        let comps = p.components();
        let a = Orientation::from_arcs(&g, &[(1, 0), (1, 2), (3, 1)]).unwrap();
        let b = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (1, 3)]).unwrap();
        let bottom = Orientation::from_arcs(&g, &[(1, 0), (2, 1), (3, 1)]).unwrap();
        let steps = comps[0].zigzag_path(&a, &b).unwrap();
        assert_eq!(
            steps,
            vec![
                ZigzagStep {
                    orientation: bottom,
                    dir: StepDir::Down,
                    vertex: 2
                },
                ZigzagStep {
                    orientation: b,
                    dir: StepDir::Up,
                    vertex: 3
                },
            ]
        );

        let g = p3();
        let p = Poset::build(&g);
        let comps = p.components();
        let steps = comps[0].zigzag_path(&omega_b(&g), &omega_a(&g)).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].dir, StepDir::Down);
        assert_eq!(steps[0].vertex, 2);

        assert!(comps[0]
            .zigzag_path(&omega_a(&g), &omega_a(&g))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn zigzag_rejects_cross_component() {
        let p = Poset::build(&k3());
        let comps = p.components();
        let a = p.elements()[comps[0].members()[0]];
        let b = p.elements()[comps[1].members()[0]];
        assert_eq!(
            comps[0].zigzag_path(&a, &b),
            Err(PosetError::DifferentComponents)
        );
    }

    #[test]
    fn firings_are_covers_on_small_corpus() {
        // transitive reduction keeps every single firing on these graphs;
        // any redundant firing would be reported rather than silently kept
        for g in connected_graphs_up_to(4) {
            let p = Poset::build(&g);
            assert!(p.redundant_firings().is_empty());
            assert_eq!(p.hasse_covers(), p.covers());
        }
    }

    #[test]
    fn dot_output_shape() {
        let p = Poset::build(&p3());
        let dot = p.to_dot();
        assert!(dot.starts_with("digraph p0 {"));
        assert!(dot.contains("e0 -> e1 [label=\"2\"];"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn poset_json_round_trip() {
        let g = t();
        let p = Poset::build(&g);
        let v = p.to_json();
        let back = Poset::from_json(&g, &v).unwrap();
        assert_eq!(back.to_json(), v);
        assert_eq!(
            serde_json::to_string(&back.to_json()).unwrap(),
            serde_json::to_string(&v).unwrap()
        );
    }
}
