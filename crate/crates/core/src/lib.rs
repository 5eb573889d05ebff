//! Acyclic orientations of a connected rooted graph under source firing.
//!
//! A source vertex of an acyclic orientation may *fire*: every edge at it is
//! reoriented toward it, turning the source into a sink. Orientations with the
//! root 0 fixed as a sink form a poset `P0` under firing reachability. This
//! crate builds that poset exactly, realizes each orientation as a rational
//! point off the periodic graphic arrangement (all hyperplanes `x_i = x_j + k`
//! over edges `ij` and integers `k`), and verifies by exhaustive computation
//! that every connected component of `P0` is a distributive lattice whose
//! count matches the signed linear coefficient of the chromatic polynomial.
//!
//! All geometry is exact rational arithmetic; no tolerances appear anywhere.

pub mod checks;
pub mod geometry;
pub mod graph;
pub mod lattice;
pub mod orientation;
mod parallel;
pub mod poset;
pub mod sample;

pub use geometry::{CubeAnchor, GeometryError, Point, RegionSignature};
pub use graph::{Graph, GraphError};
pub use lattice::{
    BoundDir, ChromaticPolynomial, ComponentReport, LatticeError, LatticeReport,
};
pub use orientation::{
    FiringMode, FiringReport, FiringSequence, Orientation, OrientationError, VertexRoles,
};
pub use poset::{Component, Poset, PosetError, StepDir, ZigzagStep};
