//! Exact-arithmetic construction of pointed pseudo-triangulation polytopes.
//!
//! Everything is computed over exact rationals: planar predicates, rigidity
//! matrices, flip-graph enumeration, the polyhedron of constrained expansive
//! motions and its extreme rays, the 1D associahedron of non-crossing
//! alternating trees, and the secondary-polytope map for convex position.
//! No floating point enters any computation path; floats appear only when
//! rendering SVG coordinates.

pub mod assoc1d;
pub mod enumeration;
pub mod error;
mod exec;
pub mod geometry;
pub mod graph;
pub mod matrix;
pub mod polytope;
pub mod rational;
pub mod rigidity;
pub mod secondary;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{convex_hull, det3, orientation, Point, PointSet};
pub use graph::{Edge, EmbeddedGraph, Face, FaceDecomposition};
pub use matrix::{LinearSolution, Matrix};
pub use rational::Rational;
pub use rigidity::{Motion, Normalization, StrainVector, Stress};
