//! Randomized and exhaustive verification suites over a single graph,
//! shared by the CLI and the acceptance tests. Every check is exact; a
//! single violation is a counterexample to one of the structure results.

use crate::geometry::{cube_anchor, frac, phi, point_join, point_meet, region_signature};
use crate::geometry::{lift_fire, lift_unfire, Point};
use crate::graph::Graph;
use crate::lattice::{geometric_bound, poset_bound, BoundDir};
use crate::orientation::{
    enumerate_acyclic, enumerate_sink_zero, validate_firing_sequence, FiringMode,
};
use crate::poset::Poset;
use crate::sample::{
    rng_from_seed, sample_firing_sequence, sample_ordered_region_pair, sample_point,
    sample_region_pair,
};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

/// Outcome of one suite: how many individual assertions ran and how many
/// failed, with the first failure spelled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub samples: usize,
    pub checked: usize,
    pub violations: usize,
    pub first_failure: Option<String>,
}

impl CheckSummary {
    fn new(samples: usize) -> Self {
        CheckSummary {
            samples,
            checked: 0,
            violations: 0,
            first_failure: None,
        }
    }

    pub fn ok(&self) -> bool {
        self.violations == 0
    }

    fn assert(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(msg());
            }
        }
    }
}

/// For seeded random points: firing a liftable source moves the point up
/// within its region and tracks the orientation firing exactly; unfiring a
/// liftable sink mirrors it downward.
pub fn check_lift_roundtrips(g: &Graph, seed: u64, samples: usize) -> CheckSummary {
    let mut rng = rng_from_seed(seed);
    let mut summary = CheckSummary::new(samples);
    for _ in 0..samples {
        let x = sample_point(g, &mut rng);
        let o = phi(g, &x).expect("sampled off the arrangement");
        let sig = region_signature(g, &x).expect("sampled off the arrangement");
        let roles = o.vertex_roles(g);
        let liftable = |v: &&usize| **v != 0 && !g.is_root_neighbor(**v);

        for &v in roles.sources.iter().filter(liftable) {
            match lift_fire(g, &x, v) {
                Ok(z) => {
                    let fired = o.fire(g, v).expect("source");
                    summary.assert(
                        phi(g, &z).as_ref() == Ok(&fired),
                        || format!("lift_fire at {v}: orientation mismatch"),
                    );
                    summary.assert(
                        region_signature(g, &z).as_ref() == Ok(&sig),
                        || format!("lift_fire at {v}: signature changed"),
                    );
                    summary.assert(x.leq_componentwise(&z), || {
                        format!("lift_fire at {v}: output does not dominate input")
                    });
                }
                Err(e) => summary.assert(false, || format!("lift_fire at {v} failed: {e}")),
            }
        }

        for &v in roles.sinks.iter().filter(liftable) {
            match lift_unfire(g, &x, v) {
                Ok(z) => {
                    let back = phi(g, &z).and_then(|p| {
                        p.fire(g, v)
                            .map_err(|_| crate::geometry::GeometryError::NotASource(v))
                    });
                    summary.assert(
                        back.as_ref() == Ok(&o),
                        || format!("lift_unfire at {v}: refiring does not recover"),
                    );
                    summary.assert(
                        region_signature(g, &z).as_ref() == Ok(&sig),
                        || format!("lift_unfire at {v}: signature changed"),
                    );
                    summary.assert(z.leq_componentwise(&x), || {
                        format!("lift_unfire at {v}: output not below input")
                    });
                }
                Err(e) => summary.assert(false, || format!("lift_unfire at {v} failed: {e}")),
            }
        }
    }
    summary
}

/// For seeded random valid firing sequences: no vertex fires more than once
/// more than any neighbor, and sink-fixed sequences respect the per-vertex
/// distance bound and the total-length bound.
pub fn check_firing_lemmas(g: &Graph, seed: u64, samples: usize) -> CheckSummary {
    let mut rng = rng_from_seed(seed);
    let mut summary = CheckSummary::new(samples);
    let p0 = enumerate_sink_zero(g);
    let all = enumerate_acyclic(g);
    for _ in 0..samples {
        let seq = sample_firing_sequence(g, &p0, &mut rng, FiringMode::P0);
        match validate_firing_sequence(g, &seq, FiringMode::P0) {
            Ok(r) => {
                summary.assert(r.lemma1_ok, || {
                    format!("neighbor count inequality failed for fires {:?}", seq.fires)
                });
                summary.assert(r.bound_ok == Some(true), || {
                    format!("distance bound failed for fires {:?}", seq.fires)
                });
            }
            Err(e) => summary.assert(false, || format!("P0 replay failed: {e}")),
        }

        let seq = sample_firing_sequence(g, &all, &mut rng, FiringMode::P);
        match validate_firing_sequence(g, &seq, FiringMode::P) {
            Ok(r) => summary.assert(r.lemma1_ok, || {
                format!(
                    "neighbor count inequality failed in preorder for fires {:?}",
                    seq.fires
                )
            }),
            Err(e) => summary.assert(false, || format!("preorder replay failed: {e}")),
        }
    }
    summary
}

/// For seeded random same-region pairs: regions are closed under meet and
/// join, points of one region with equal orientations share a cube anchor,
/// orientations of one region share a component, and the componentwise
/// order maps to the poset order.
pub fn check_geometry_lemmas(
    g: &Graph,
    poset: &Poset,
    seed: u64,
    samples: usize,
) -> CheckSummary {
    let mut rng = rng_from_seed(seed);
    let mut summary = CheckSummary::new(samples);
    let comps = poset.components();
    let comp_of = |o: &crate::orientation::Orientation| -> usize {
        let i = poset.index_of(o).expect("phi lands in P0");
        comps.iter().position(|c| c.contains_index(i)).unwrap()
    };

    for _ in 0..samples {
        let (x, y) = sample_region_pair(g, &mut rng);
        let sig = region_signature(g, &x).expect("off the arrangement");
        summary.assert(
            region_signature(g, &y).as_ref() == Ok(&sig),
            || "sampler produced a cross-region pair".to_string(),
        );

        let meet = point_meet(&x, &y);
        let join = point_join(&x, &y);
        summary.assert(
            region_signature(g, &meet).as_ref() == Ok(&sig),
            || "region not closed under meet".to_string(),
        );
        summary.assert(
            region_signature(g, &join).as_ref() == Ok(&sig),
            || "region not closed under join".to_string(),
        );

        let ox = phi(g, &x).expect("off the arrangement");
        let oy = phi(g, &y).expect("off the arrangement");
        if ox == oy {
            summary.assert(cube_anchor(&x) == cube_anchor(&y), || {
                "equal orientations in one region with different anchors".to_string()
            });
        }
        summary.assert(comp_of(&ox) == comp_of(&oy), || {
            "one region mapped onto two components".to_string()
        });

        // a diagonal shift keeps orientation, region, and anchor; this makes
        // the anchor check non-vacuous even when the jiggle flips phi
        if g.max_vertex() >= 1 {
            let shifted = diagonal_shift(g, &x);
            summary.assert(
                phi(g, &shifted).as_ref() == Ok(&ox)
                    && cube_anchor(&shifted) == cube_anchor(&x),
                || "diagonal shift broke the cube property".to_string(),
            );
        }

        let (lo, hi) = sample_ordered_region_pair(g, &mut rng);
        let olo = phi(g, &lo).expect("off the arrangement");
        let ohi = phi(g, &hi).expect("off the arrangement");
        summary.assert(poset.leq(&olo, &ohi) == Ok(true), || {
            "componentwise order not carried to the poset order".to_string()
        });
    }
    summary
}

fn diagonal_shift(g: &Graph, x: &Point) -> Point {
    let max_frac = x.coords()[1..=g.max_vertex()]
        .iter()
        .map(frac)
        .max()
        .expect("nonzero vertex exists");
    let lambda = (BigRational::one() - max_frac) / crate::geometry::rat(2, 1);
    let mut coords = x.coords().to_vec();
    for c in coords.iter_mut().skip(1) {
        *c += &lambda;
    }
    Point::new(coords).expect("x_0 untouched")
}

/// Exhaustive agreement of the geometric meet/join with the exhaustive-scan
/// oracle over every ordered pair of every component.
pub fn check_bound_equivalence(g: &Graph) -> CheckSummary {
    let poset = Poset::build(g);
    let mut summary = CheckSummary::new(poset.len());
    for c in poset.components() {
        for &ai in c.members() {
            for &bi in c.members() {
                let a = poset.elements()[ai];
                let b = poset.elements()[bi];
                for dir in [BoundDir::Meet, BoundDir::Join] {
                    let oracle = poset_bound(&c, &a, &b, dir);
                    let geo = geometric_bound(&c, &a, &b, dir);
                    summary.assert(oracle.is_ok() && oracle == geo, || {
                        format!("bound mismatch on elements ({ai}, {bi}) {dir:?}")
                    });
                }
            }
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::parse_edge_list("0 1\n1 2\n2 3\n0 3").unwrap()
    }

    #[test]
    fn suites_pass_on_c4() {
        let g = c4();
        assert!(check_lift_roundtrips(&g, 1, 50).ok());
        assert!(check_firing_lemmas(&g, 2, 50).ok());
        let poset = Poset::build(&g);
        assert!(check_geometry_lemmas(&g, &poset, 3, 50).ok());
        assert!(check_bound_equivalence(&g).ok());
    }

    #[test]
    fn suites_pass_on_one_vertex_graph() {
        let g = Graph::new(0, &[]).unwrap();
        assert!(check_lift_roundtrips(&g, 1, 5).ok());
        assert!(check_firing_lemmas(&g, 2, 5).ok());
        let poset = Poset::build(&g);
        assert!(check_geometry_lemmas(&g, &poset, 3, 5).ok());
        assert!(check_bound_equivalence(&g).ok());
    }
}
