//! Seeded random generation for the property suites: points off the
//! arrangement, same-region point pairs, and valid firing sequences.

use crate::geometry::{frac, rat, region_signature, Point};
use crate::graph::Graph;
use crate::orientation::{FiringMode, FiringSequence, Orientation};
use crate::poset::allowed_firings_p0;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng_from_seed(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random point of the slice `x_0 = 0` off the arrangement. Nonzero
/// coordinates are rationals in `[-2, 2]` with denominator at most 1000;
/// points hitting a hyperplane are rejection-sampled away.
pub fn sample_point(g: &Graph, rng: &mut StdRng) -> Point {
    for _ in 0..1000 {
        let mut coords = vec![BigRational::zero()];
        for _ in 1..g.vertex_count() {
            let q = rng.gen_range(1..=1000i64);
            let p = rng.gen_range(-2 * q..=2 * q);
            coords.push(rat(p, q));
        }
        let x = Point::new(coords).expect("x_0 is 0");
        if region_signature(g, &x).is_ok() {
            return x;
        }
    }
    unreachable!("rejection sampling failed 1000 times in a row");
}

/// Smallest distance from any edge difference of `x` to its slab walls.
fn slab_margin(g: &Graph, x: &Point) -> BigRational {
    let mut margin = BigRational::one();
    for &(i, j) in g.edges() {
        let f = frac(&(&x.coords()[j] - &x.coords()[i]));
        let to_wall = f.clone().min(BigRational::one() - &f);
        margin = margin.min(to_wall);
    }
    margin
}

/// A pair of points in the same region: the second is the first jiggled by
/// strictly less than half the slab margin per coordinate.
pub fn sample_region_pair(g: &Graph, rng: &mut StdRng) -> (Point, Point) {
    let x = sample_point(g, rng);
    let eps = slab_margin(g, &x) / rat(4, 1);
    let y = jiggle(g, &x, &eps, rng, true);
    (x, y)
}

/// A componentwise-ordered pair `x <= y` in the same region.
pub fn sample_ordered_region_pair(g: &Graph, rng: &mut StdRng) -> (Point, Point) {
    let x = sample_point(g, rng);
    let eps = slab_margin(g, &x) / rat(4, 1);
    let y = jiggle(g, &x, &eps, rng, false);
    (x, y)
}

fn jiggle(g: &Graph, x: &Point, eps: &BigRational, rng: &mut StdRng, signed: bool) -> Point {
    let mut coords = x.coords().to_vec();
    for c in coords.iter_mut().skip(1) {
        let q = rng.gen_range(1..=1000i64);
        let p = if signed {
            rng.gen_range(-q..=q)
        } else {
            rng.gen_range(0..=q)
        };
        *c += eps * rat(p, q);
    }
    let y = Point::new(coords).expect("x_0 untouched");
    debug_assert_eq!(
        region_signature(g, &y).ok(),
        region_signature(g, x).ok()
    );
    y
}

/// Random valid firing sequence from a random start. `P0` sequences fire
/// only legal vertices and terminate on their own; `P` sequences may fire
/// any source and are capped, since they can cycle forever.
pub fn sample_firing_sequence(
    g: &Graph,
    starts: &[Orientation],
    rng: &mut StdRng,
    mode: FiringMode,
) -> FiringSequence {
    let start = starts[rng.gen_range(0..starts.len())];
    let cap = match mode {
        FiringMode::P0 => usize::MAX,
        FiringMode::P => 3 * g.vertex_count() * g.vertex_count(),
    };
    let mut current = start;
    let mut fires = Vec::new();
    while fires.len() < cap {
        let candidates = match mode {
            FiringMode::P0 => allowed_firings_p0(g, &current).expect("stays in P0"),
            FiringMode::P => current.vertex_roles(g).sources,
        };
        if candidates.is_empty() {
            break;
        }
        if !fires.is_empty() && rng.gen_ratio(1, 6) {
            break;
        }
        let v = candidates[rng.gen_range(0..candidates.len())];
        current = current.fire(g, v).expect("candidate is a source");
        fires.push(v);
    }
    FiringSequence { start, fires }
}
