//! Planar list-coloring criticality toolkit.
//!
//! Rotation-system plane graphs, an exact list-coloring extension solver,
//! constructors and recognizers for fans and fan processions, enumeration of
//! graphs critical with respect to a precolored outer cycle or path, and
//! exact-rational checkers for the weight and size bounds those catalogs
//! must satisfy.

pub mod coloring;
pub mod enumerator;
pub mod fans;
pub mod plane_graph;
pub mod randgraph;
pub mod scattering;
pub mod verify;
pub mod weights;

pub use plane_graph::{FaceWalk, GraphError, OuterAnchor, PlaneGraph, VertexPath};
