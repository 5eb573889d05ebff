//! Cross-module invariants: counting identities, lifting in translated
//! regions, the point-level lattice homomorphism, and proptest laws for the
//! componentwise lattice operations.

use orilat_core::checks::{check_firing_lemmas, check_geometry_lemmas, check_lift_roundtrips};
use orilat_core::geometry::{
    canonical_lift, phi, point_join, point_meet, rat, region_signature, Point,
};
use orilat_core::graph::{connected_graphs_up_to, Graph};
use orilat_core::lattice::{chromatic_polynomial, poset_bound, BoundDir};
use orilat_core::orientation::enumerate_acyclic;
use orilat_core::poset::{allowed_firings_p0, Poset};
use orilat_core::sample::{rng_from_seed, sample_region_pair};
use proptest::prelude::*;
use rand::Rng;
use std::sync::OnceLock;

fn corpus() -> &'static [Graph] {
    static CORPUS: OnceLock<Vec<Graph>> = OnceLock::new();
    CORPUS.get_or_init(|| connected_graphs_up_to(4))
}

#[test]
fn acyclic_count_equals_chromatic_at_minus_one() {
    for g in corpus() {
        let count = enumerate_acyclic(g).len() as i64;
        let eval = chromatic_polynomial(g).eval(-1);
        assert_eq!(count, eval.abs(), "graph {:?}", g.edges());
    }
}

#[test]
fn edge_list_text_round_trip() {
    for g in corpus().iter().filter(|g| g.edge_count() > 0) {
        let text: String = g
            .edges()
            .iter()
            .map(|(a, b)| format!("{a} {b}\n"))
            .collect();
        assert_eq!(&Graph::parse_edge_list(&text).unwrap(), g);
    }
}

#[test]
fn lifting_works_in_translated_regions() {
    let mut rng = rng_from_seed(99);
    for g in corpus() {
        let poset = Poset::build(g);
        for o in poset.elements() {
            let x = canonical_lift(g, o).unwrap();
            let offsets: Vec<i64> = (0..g.vertex_count())
                .map(|i| if i == 0 { 0 } else { rng.gen_range(-3..=3) })
                .collect();
            let moved = x.translated(&offsets);
            assert_eq!(phi(g, &moved).unwrap(), *o);
            for v in allowed_firings_p0(g, o).unwrap() {
                let z = orilat_core::geometry::lift_fire(g, &moved, v).unwrap();
                assert_eq!(phi(g, &z).unwrap(), o.fire(g, v).unwrap());
                assert_eq!(
                    region_signature(g, &z).unwrap(),
                    region_signature(g, &moved).unwrap()
                );
            }
        }
    }
}

#[test]
fn phi_preserves_meets_and_joins_on_regions() {
    for g in corpus() {
        let poset = Poset::build(g);
        let comps = poset.components();
        let mut rng = rng_from_seed(4242);
        for _ in 0..20 {
            let (x, y) = sample_region_pair(g, &mut rng);
            let ox = phi(g, &x).unwrap();
            let oy = phi(g, &y).unwrap();
            let c = comps.iter().find(|c| c.contains(&ox)).unwrap();
            assert!(c.contains(&oy), "one region, one component");
            assert_eq!(
                phi(g, &point_meet(&x, &y)).unwrap(),
                poset_bound(c, &ox, &oy, BoundDir::Meet).unwrap()
            );
            assert_eq!(
                phi(g, &point_join(&x, &y)).unwrap(),
                poset_bound(c, &ox, &oy, BoundDir::Join).unwrap()
            );
        }
    }
}

#[test]
fn seeded_suites_hold_on_small_corpus() {
    for (i, g) in corpus().iter().enumerate() {
        let seed = 1000 + i as u64;
        assert!(check_lift_roundtrips(g, seed, 40).ok());
        assert!(check_firing_lemmas(g, seed, 40).ok());
        let poset = Poset::build(g);
        assert!(check_geometry_lemmas(g, &poset, seed, 40).ok());
    }
}

fn point_strategy(dim: usize) -> impl Strategy<Value = Point> {
    proptest::collection::vec((-60i64..=60, 1i64..=24), dim - 1).prop_map(|tail| {
        let mut coords = vec![rat(0, 1)];
        coords.extend(tail.into_iter().map(|(p, q)| rat(p, q)));
        Point::new(coords).unwrap()
    })
}

fn point_triple() -> impl Strategy<Value = (Point, Point, Point)> {
    (2usize..=5).prop_flat_map(|dim| {
        (
            point_strategy(dim),
            point_strategy(dim),
            point_strategy(dim),
        )
    })
}

proptest! {
    #[test]
    fn componentwise_ops_satisfy_lattice_laws((x, y, z) in point_triple()) {
        // commutativity, idempotence, absorption, associativity
        prop_assert_eq!(point_meet(&x, &y), point_meet(&y, &x));
        prop_assert_eq!(point_join(&x, &y), point_join(&y, &x));
        prop_assert_eq!(point_meet(&x, &x), x.clone());
        prop_assert_eq!(point_join(&x, &point_meet(&x, &y)), x.clone());
        prop_assert_eq!(point_meet(&x, &point_join(&x, &y)), x.clone());
        prop_assert_eq!(
            point_meet(&x, &point_meet(&y, &z)),
            point_meet(&point_meet(&x, &y), &z)
        );
        prop_assert_eq!(
            point_join(&x, &point_join(&y, &z)),
            point_join(&point_join(&x, &y), &z)
        );
        // distributivity of the ambient lattice
        prop_assert_eq!(
            point_meet(&x, &point_join(&y, &z)),
            point_join(&point_meet(&x, &y), &point_meet(&x, &z))
        );
        // the meet is below both inputs, the join above
        prop_assert!(point_meet(&x, &y).leq_componentwise(&x));
        prop_assert!(x.leq_componentwise(&point_join(&x, &y)));
    }

    #[test]
    fn point_serde_round_trip(x in point_strategy(4)) {
        let s = serde_json::to_string(&x).unwrap();
        let back: Point = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn random_seeds_never_violate_lemmas(idx in 0usize..44, seed in any::<u64>()) {
        let g = &corpus()[idx % corpus().len()];
        prop_assert!(check_firing_lemmas(g, seed, 4).ok());
    }
}
