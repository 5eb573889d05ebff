//! Exact-rational realization of the periodic graphic arrangement.
//!
//! The arrangement consists of all hyperplanes `x_i = x_j + k` over edges
//! `ij` and integers `k`. A point of the complement, restricted to the slice
//! `x_0 = 0`, maps to an acyclic orientation with 0 a sink: each edge is
//! oriented toward the endpoint with the smaller fractional part. Regions of
//! the complement are identified by per-edge slab indices `floor(x_j - x_i)`
//! and are closed under componentwise min and max, which is what ultimately
//! makes each poset component a distributive lattice.
//!
//! Everything here is exact. Coordinates are arbitrary-precision rationals,
//! hyperplane membership is an integrality test, and no tolerance appears
//! anywhere in this module.

use crate::graph::Graph;
use crate::orientation::Orientation;
use crate::poset::{StepDir, ZigzagStep};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("point has no coordinates")]
    Empty,
    #[error("coordinate x_0 must be 0")]
    NonzeroOrigin,
    #[error("point has {got} coordinates, graph needs {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("point lies on a hyperplane x_{1} = x_{0} + k over edge ({0}, {1})")]
    OnHyperplane(usize, usize),
    #[error("orientation does not have 0 as a sink")]
    RootNotSink,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} is the root or a neighbor of the root")]
    ForbiddenVertex(usize),
    #[error("vertex {0} is not a source of the point's orientation")]
    NotASource(usize),
    #[error("vertex {0} is not a sink of the point's orientation")]
    NotASink(usize),
    #[error("invalid step sequence: {0}")]
    InvalidSteps(String),
    #[error("cannot parse rational coordinate {0:?}")]
    BadRational(String),
}

/// Shorthand for an exact rational `p / q`.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Fractional part `a - floor(a)`, always in `[0, 1)`.
pub fn frac(a: &BigRational) -> BigRational {
    a - a.floor()
}

/// A point of the slice `x_0 = 0` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<BigRational>,
}

impl Point {
    pub fn new(coords: Vec<BigRational>) -> Result<Self, GeometryError> {
        if coords.is_empty() {
            return Err(GeometryError::Empty);
        }
        if !coords[0].is_zero() {
            return Err(GeometryError::NonzeroOrigin);
        }
        Ok(Point { coords })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Translation by an integer offset vector with zero first entry. This
    /// moves the point to another region without changing its orientation,
    /// since every fractional part is preserved.
    pub fn translated(&self, offsets: &[i64]) -> Point {
        assert_eq!(offsets.len(), self.coords.len());
        assert_eq!(offsets[0], 0, "slice x_0 = 0 must be preserved");
        let coords = self
            .coords
            .iter()
            .zip(offsets)
            .map(|(c, &k)| c + BigRational::from_integer(BigInt::from(k)))
            .collect();
        Point { coords }
    }

    pub fn leq_componentwise(&self, other: &Point) -> bool {
        assert_eq!(self.coords.len(), other.coords.len());
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let coords: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        let mut s = serializer.serialize_struct("Point", 1)?;
        s.serialize_field("coords", &coords)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coords: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coords: Result<Vec<BigRational>, _> = raw
            .coords
            .iter()
            .map(|s| BigRational::from_str(s).map_err(|_| GeometryError::BadRational(s.clone())))
            .collect();
        Point::new(coords.map_err(D::Error::custom)?).map_err(D::Error::custom)
    }
}

/// Per-edge slab indices `floor(x_j - x_i)` for canonical edges `(i, j)`,
/// `i < j`. Two points share a signature iff they lie in the same region.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegionSignature {
    slabs: Vec<BigInt>,
}

impl RegionSignature {
    pub fn slabs(&self) -> &[BigInt] {
        &self.slabs
    }

    /// JSON object keyed `"i-j"` per canonical edge.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, &(i, j)) in g.edges().iter().enumerate() {
            let k = self.slabs[e].to_i64().expect("slab index fits i64");
            map.insert(format!("{i}-{j}"), serde_json::Value::from(k));
        }
        serde_json::Value::Object(map)
    }
}

/// Per-vertex floors locating the half-open unit cube containing a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeAnchor {
    floors: Vec<BigInt>,
}

impl CubeAnchor {
    pub fn floors(&self) -> &[BigInt] {
        &self.floors
    }
}

fn check_dims(g: &Graph, x: &Point) -> Result<(), GeometryError> {
    if x.dim() != g.vertex_count() {
        return Err(GeometryError::DimensionMismatch {
            got: x.dim(),
            expected: g.vertex_count(),
        });
    }
    Ok(())
}

/// The orientation of a point off the arrangement: each edge points at its
/// endpoint of smaller fractional part. The result is acyclic with 0 a sink.
pub fn phi(g: &Graph, x: &Point) -> Result<Orientation, GeometryError> {
    check_dims(g, x)?;
    let fracs: Vec<BigRational> = x.coords().iter().map(frac).collect();
    let mut bits = 0u64;
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        if fracs[i] == fracs[j] {
            return Err(GeometryError::OnHyperplane(i, j));
        }
        // bit set = directed min -> max, i.e. toward the larger endpoint
        if fracs[j] < fracs[i] {
            bits |= 1 << e;
        }
    }
    let o = Orientation::from_bits_unchecked(bits);
    debug_assert!(o.is_acyclic(g));
    debug_assert!(o.has_sink_zero(g));
    Ok(o)
}

/// Slab index `floor(x_j - x_i)` per canonical edge.
pub fn region_signature(g: &Graph, x: &Point) -> Result<RegionSignature, GeometryError> {
    check_dims(g, x)?;
    let mut slabs = Vec::with_capacity(g.edge_count());
    for &(i, j) in g.edges() {
        let diff = &x.coords()[j] - &x.coords()[i];
        if diff.is_integer() {
            return Err(GeometryError::OnHyperplane(i, j));
        }
        slabs.push(diff.floor().to_integer());
    }
    Ok(RegionSignature { slabs })
}

/// Per-vertex floors; the anchor of the half-open cube containing `x`.
pub fn cube_anchor(x: &Point) -> CubeAnchor {
    CubeAnchor {
        floors: x.coords().iter().map(|c| c.floor().to_integer()).collect(),
    }
}

/// A point of the open unit cube mapping to `o` under [`phi`]: vertices are
/// peeled sinks-first starting at 0 (ties toward the smaller index) and the
/// t-th peeled vertex gets coordinate `t / (n + 1)`.
pub fn canonical_lift(g: &Graph, o: &Orientation) -> Result<Point, GeometryError> {
    if !o.has_sink_zero(g) {
        return Err(GeometryError::RootNotSink);
    }
    let nv = g.vertex_count();
    let mut remaining = vec![true; nv];
    let mut coords = vec![BigRational::zero(); nv];
    for t in 0..nv {
        let v = (0..nv)
            .find(|&v| {
                remaining[v]
                    && g.incident_edges(v).iter().all(|&e| {
                        let other = g.edges()[e].0 + g.edges()[e].1 - v;
                        !remaining[other] || o.head(g, e) == v
                    })
            })
            .expect("acyclic orientation always has a sink");
        remaining[v] = false;
        coords[v] = BigRational::new(BigInt::from(t), BigInt::from(nv));
    }
    let x = Point::new(coords).expect("vertex 0 peeled first");
    debug_assert_eq!(phi(g, &x).as_ref(), Ok(o));
    Ok(x)
}

/// Step size for the lifting constructions: half the gap between the largest
/// fractional part of a nonzero coordinate and 1. Strictly positive for any
/// point off the arrangement.
fn lift_lambda(g: &Graph, x: &Point) -> BigRational {
    let max_frac = x.coords()[1..=g.max_vertex()]
        .iter()
        .map(frac)
        .max()
        .expect("at least one nonzero vertex");
    (BigRational::one() - max_frac) / BigRational::from_integer(BigInt::from(2))
}

fn check_lift_vertex(g: &Graph, v: usize) -> Result<(), GeometryError> {
    if v > g.max_vertex() {
        return Err(GeometryError::VertexOutOfRange(v));
    }
    if v == 0 || g.is_root_neighbor(v) {
        return Err(GeometryError::ForbiddenVertex(v));
    }
    Ok(())
}

/// Moves `x` within its region to a point whose orientation is `phi(x)` with
/// source `v` fired: shift all nonzero coordinates up by lambda, then push
/// coordinate `v` just past its next integer. The region signature is
/// unchanged and the result dominates `x` componentwise.
pub fn lift_fire(g: &Graph, x: &Point, v: usize) -> Result<Point, GeometryError> {
    let o = phi(g, x)?;
    check_lift_vertex(g, v)?;
    if !o.is_source(g, v) {
        return Err(GeometryError::NotASource(v));
    }
    let lambda = lift_lambda(g, x);
    let half = &lambda / BigRational::from_integer(BigInt::from(2));
    let mut coords = x.coords().to_vec();
    for c in coords.iter_mut().skip(1) {
        *c += &lambda;
    }
    coords[v] = coords[v].ceil() + half;
    let z = Point::new(coords).expect("x_0 untouched");
    debug_assert_eq!(region_signature(g, &z), region_signature(g, x));
    debug_assert_eq!(phi(g, &z).unwrap(), o.fire(g, v).unwrap());
    debug_assert!(x.leq_componentwise(&z));
    Ok(z)
}

/// Inverse move of [`lift_fire`]: for a sink `v` of `phi(x)`, drops
/// coordinate `v` just below its floor so that `v` becomes a source and
/// firing it recovers `phi(x)`. Signature unchanged, result below `x`.
pub fn lift_unfire(g: &Graph, x: &Point, v: usize) -> Result<Point, GeometryError> {
    let o = phi(g, x)?;
    check_lift_vertex(g, v)?;
    if !o.is_sink(g, v) {
        return Err(GeometryError::NotASink(v));
    }
    let lambda = lift_lambda(g, x);
    let half = &lambda / BigRational::from_integer(BigInt::from(2));
    let mut coords = x.coords().to_vec();
    coords[v] = coords[v].floor() - half;
    let z = Point::new(coords).expect("x_0 untouched");
    debug_assert_eq!(region_signature(g, &z), region_signature(g, x));
    debug_assert_eq!(
        phi(g, &z).unwrap().fire(g, v).map(|f| f.bits()),
        Ok(o.bits())
    );
    debug_assert!(z.leq_componentwise(x));
    Ok(z)
}

/// Walks a zigzag of cover steps from `phi(x)` to `target`, lifting each
/// step inside the region of `x`. Returns a point of that region mapping to
/// `target`.
pub fn lift_comparable(
    g: &Graph,
    x: &Point,
    target: &Orientation,
    steps: &[ZigzagStep],
) -> Result<Point, GeometryError> {
    let mut current = phi(g, x)?;
    let mut z = x.clone();
    for (idx, step) in steps.iter().enumerate() {
        let bad = |why: String| GeometryError::InvalidSteps(format!("step {}: {why}", idx + 1));
        match step.dir {
            StepDir::Up => {
                let fired = current
                    .fire(g, step.vertex)
                    .map_err(|e| bad(e.to_string()))?;
                if fired != step.orientation {
                    return Err(bad(format!(
                        "firing {} does not reach the listed orientation",
                        step.vertex
                    )));
                }
                z = lift_fire(g, &z, step.vertex)?;
            }
            StepDir::Down => {
                let refired = step
                    .orientation
                    .fire(g, step.vertex)
                    .map_err(|e| bad(e.to_string()))?;
                if refired != current {
                    return Err(bad(format!(
                        "unfiring {} does not reach the listed orientation",
                        step.vertex
                    )));
                }
                z = lift_unfire(g, &z, step.vertex)?;
            }
        }
        current = step.orientation;
    }
    if current != *target {
        return Err(GeometryError::InvalidSteps(
            "steps do not end at the target orientation".into(),
        ));
    }
    Ok(z)
}

/// Componentwise minimum.
pub fn point_meet(x: &Point, y: &Point) -> Point {
    assert_eq!(x.dim(), y.dim());
    let coords = x
        .coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| a.min(b).clone())
        .collect();
    Point { coords }
}

/// Componentwise maximum.
pub fn point_join(x: &Point, y: &Point) -> Point {
    assert_eq!(x.dim(), y.dim());
    let coords = x
        .coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| a.max(b).clone())
        .collect();
    Point { coords }
}
