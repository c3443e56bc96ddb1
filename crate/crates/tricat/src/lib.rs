//! Combinatorial machinery for regular simplicial complexes of dimension at
//! most three: curvature checks (flagness, empty polygons, systolicity, metric
//! edge links), combinatorial paths and geodesics, triangulated disk diagrams
//! with minimal spanning-disk search, the basic-move calculus on paths,
//! Gersten-Short geodesics with bad-pair resolution, and finite-state automata
//! over directed-edge alphabets for path systems.
//!
//! Everything operates on finite, explicitly given complexes. Complexes are
//! immutable after construction and safe to share across threads.
//!
//! The crate is organised by subject:
//!
//! - [`complex`] — the core data model: simplices, complexes, links, stars,
//!   full subcomplexes, metric edge links, automorphisms
//! - [`curvature`] — flag test, empty n-gon search, systolic check, edge-link
//!   girth, and the combined report
//! - [`paths`] — combinatorial paths, parameterization, distances, geodesic
//!   enumeration
//! - [`disks`] — disk diagrams, Gauss-Bonnet, sign classification, minimal
//!   spanning-disk search, disk merging
//! - [`moves`] — trivial / triangle / triangle-triangle moves, path
//!   straightening, shortening fellows
//! - [`gs`] — Gersten-Short geodesics: witness disks, bad pairs, resolution,
//!   fellow-travel and invariance checks
//! - [`automata`] — deterministic finite-state automata over directed edges,
//!   boolean combinators, geodesic and GS acceptors
//! - [`io`] — the `.cplx` text format
//! - [`fixtures`] — generators for the bundled example complexes
//! - [`svg`] — planar disk rendering via Tutte embeddings

pub mod automata;
pub mod complex;
pub mod curvature;
pub mod disks;
pub mod fixtures;
pub mod gs;
pub mod io;
pub mod moves;
pub mod paths;
pub mod svg;

pub use complex::{Automorphism, MetricGraph, Simplex, SimplicialComplex, VertexId};
pub use paths::CombinatorialPath;
