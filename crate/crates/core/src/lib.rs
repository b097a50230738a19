//! Exact toolkit for decomposing graph edge sets into edges and triangles:
//! isomorph-free enumeration of small graphs, fractional and integer
//! triangle-packing solvers over arbitrary-precision rationals, a
//! semidefinite density certificate for the subset-averaging bound, and
//! decomposition builders driven by it.
//!
//! All certificate arithmetic is exact; no floating point is involved
//! anywhere in a verification path.

pub mod certificate;
pub mod cliquelp;
pub mod decomposer;
pub mod exactlin;
pub mod flags;
pub mod graphs;
pub mod rational;
